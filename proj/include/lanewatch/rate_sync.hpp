#pragma once

#include <cstdint>
#include <optional>

#include "lanewatch/types.hpp"

namespace lanewatch {

/// Stream-rate / compute-speed synchronization: from a smoothed per-frame
/// processing time, derive how many incoming frames to skip per processed
/// frame so the input queue never backlogs.
class RateController {
public:
    explicit RateController(double fps, double ema_alpha = 0.2);

    /// Folds a processing-time sample into the EMA and recomputes K:
    /// K = ceil(fps - 1/dt_ema) when the machine is slower than the stream,
    /// 0 otherwise. Non-positive samples are rejected (state unchanged,
    /// returns false).
    bool record_and_update(double measured_delta_t);

    /// True exactly when more than K frames have passed since the last
    /// processed frame (first call always processes). Advances the
    /// last-processed marker when returning true.
    bool should_process(std::int64_t frame_index);

    int skip_count() const { return k_; }
    double delta_t_ema() const { return delta_t_ema_.value_or(0.0); }
    bool seeded() const { return delta_t_ema_.has_value(); }
    double fps() const { return fps_; }

private:
    double fps_;
    double ema_alpha_;
    std::optional<double> delta_t_ema_;
    int k_ = 0;
    std::optional<std::int64_t> last_processed_;
};

}  // namespace lanewatch
