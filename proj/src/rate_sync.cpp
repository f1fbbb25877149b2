#include "lanewatch/rate_sync.hpp"

#include <cmath>

namespace lanewatch {

RateController::RateController(double fps, double ema_alpha)
    : fps_(fps), ema_alpha_(ema_alpha) {
    if (!(fps > 0.0)) throw ConfigError("fps must be > 0");
    if (!(ema_alpha > 0.0 && ema_alpha <= 1.0))
        throw ConfigError("ema_alpha must be in (0, 1]");
}

bool RateController::record_and_update(double measured_delta_t) {
    if (!(measured_delta_t > 0.0) || !std::isfinite(measured_delta_t))
        return false;
    if (delta_t_ema_) {
        delta_t_ema_ = ema_alpha_ * measured_delta_t + (1.0 - ema_alpha_) * *delta_t_ema_;
    } else {
        delta_t_ema_ = measured_delta_t;
    }
    const double rate = 1.0 / *delta_t_ema_;
    k_ = rate < fps_ ? static_cast<int>(std::ceil(fps_ - rate)) : 0;
    return true;
}

bool RateController::should_process(std::int64_t frame_index) {
    if (last_processed_ && frame_index - *last_processed_ <= k_) return false;
    last_processed_ = frame_index;
    return true;
}

}  // namespace lanewatch
