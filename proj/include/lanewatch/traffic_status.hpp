#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "lanewatch/lane_counting.hpp"
#include "lanewatch/types.hpp"

namespace lanewatch {

enum class TrafficStatus { normal, slow, jam };

std::string to_string(TrafficStatus s);

struct LaneReport {
    LaneId lane_id;
    std::int64_t interval_index = 0;
    double interval_minutes = 0.5;
    std::int64_t count = 0;
    double flow_rate_vph = 0.0;
    double occupancy_raw = 0.0;  // unclamped interval mean
    double occupancy = 0.0;      // clamped to [0, 1]
    TrafficStatus status = TrafficStatus::normal;
    bool valid = true;
    std::int64_t emitted_at_frame = 0;
};

/// Vehicles/hour from a count over `minutes` minutes.
double flow_rate_vph(std::int64_t count, double minutes);

struct OccupancySample {
    double raw = 0.0;
    double clamped = 0.0;
};

/// Single-frame occupancy of one lane: summed bbox heights over the lane's
/// vertical extent H, reported clamped to 1.
OccupancySample occupancy(double height_sum, double lane_extent_px);

/// Status rule on flow rate and clamped occupancy. Strict inequalities;
/// every boundary case falls through to normal.
TrafficStatus classify(double flow_vph, double occupancy_clamped);

/// Per-lane per-interval aggregation on the stream clock (frame_id / fps).
/// Counts come from the ledger via add_count; occupancy is averaged over
/// processed frames. Intervals are indexed on the absolute frame grid.
class IntervalAccumulator {
public:
    IntervalAccumulator(std::vector<LaneId> lanes,
                        std::map<LaneId, double> lane_extents,
                        double interval_minutes, double fps);

    std::int64_t frames_per_interval() const { return frames_per_interval_; }
    std::int64_t interval_index(std::int64_t frame_id) const {
        return frame_id / frames_per_interval_;
    }
    double interval_minutes() const { return interval_minutes_; }

    void add_count(LaneId lane, std::int64_t interval_index);
    void add_frame_occupancy(const std::map<LaneId, double>& height_sums,
                             std::int64_t frame_id);

    /// Emits reports for every pending interval strictly before
    /// `interval_exclusive` (zero reports for quiet intervals included).
    std::vector<LaneReport> flush_through(std::int64_t interval_exclusive,
                                          std::int64_t emitted_at_frame);

    /// Emits the in-progress interval flagged invalid (camera view changed
    /// mid-interval) and forgets its state.
    std::vector<LaneReport> abort_current(std::int64_t emitted_at_frame);

    /// End-of-stream: emits everything up to and including the interval
    /// containing `last_frame`.
    std::vector<LaneReport> flush_final(std::int64_t last_frame);

    /// After a pipeline resume, skip intervals that were never monitored.
    void resume_at(std::int64_t frame_id);

private:
    LaneReport make_report(LaneId lane, std::int64_t interval,
                           std::int64_t emitted_at_frame, bool valid) const;
    void drop_interval(std::int64_t interval);

    std::vector<LaneId> lanes_;
    std::map<LaneId, double> lane_extents_;
    double interval_minutes_;
    std::int64_t frames_per_interval_;
    std::int64_t next_interval_ = 0;

    std::map<std::pair<LaneId, std::int64_t>, std::int64_t> counts_;
    std::map<std::pair<LaneId, std::int64_t>, double> occ_raw_sums_;
    std::map<std::pair<LaneId, std::int64_t>, double> occ_clamped_sums_;
    std::map<std::int64_t, std::int64_t> processed_frames_;
    std::int64_t current_interval_ = 0;
};

}  // namespace lanewatch
