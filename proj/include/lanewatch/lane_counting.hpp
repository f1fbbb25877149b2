#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "lanewatch/detection_filter.hpp"
#include "lanewatch/geometry.hpp"
#include "lanewatch/tracker.hpp"
#include "lanewatch/types.hpp"

namespace lanewatch {

struct LaneAssignment {
    TrackId track_id;
    std::optional<LaneId> lane;
    std::int64_t assigned_at_frame = 0;
    int misses = 0;  // consecutive processed frames with the center in no band
};

struct CountEvent {
    LaneId lane_id;
    TrackId track_id;
    std::int64_t frame_id = 0;
};

/// Counting state: which tracks were ever counted (a TrackId enters at most
/// once per run) and per-lane running/interval tallies.
class CountLedger {
public:
    bool already_counted(TrackId id) const { return counted_.contains(id); }
    void record(const CountEvent& event, std::int64_t interval_index);

    std::int64_t lane_total(LaneId lane) const;
    std::int64_t interval_count(LaneId lane, std::int64_t interval_index) const;
    std::int64_t distinct_counted() const { return static_cast<std::int64_t>(counted_.size()); }
    const std::map<LaneId, std::int64_t>& per_lane_totals() const { return per_lane_; }

    void clear();

private:
    std::set<TrackId> counted_;
    std::map<LaneId, std::int64_t> per_lane_;
    std::map<std::pair<LaneId, std::int64_t>, std::int64_t> per_interval_;
};

struct CountingParams {
    /// Fixed vehicle-length proxy in pixels; when unset, the rolling median
    /// of confirmed-track heights is used.
    std::optional<double> avg_vehicle_length_px;
    std::size_t length_window = 500;
    /// Processed frames a lane assignment survives with the center outside
    /// every band (detector jitter); mirrors the tracker's max_age.
    int retention_limit = 30;

    void validate() const {
        if (avg_vehicle_length_px && !(*avg_vehicle_length_px > 0.0))
            throw ConfigError("avg_vehicle_length_px must be > 0");
        if (retention_limit < 1) throw ConfigError("retention_limit must be >= 1");
    }
};

/// Assigns confirmed tracks to lanes (previous-frame comparison only, with
/// jitter retention) and counts each vehicle once when its center is in the
/// lane band within the average vehicle length of the baseline.
class LaneCounter {
public:
    LaneCounter(std::vector<LaneGeometry> lanes, CountingParams params = {});

    /// One processed frame: refresh assignments, update the vehicle-length
    /// median, emit count events for newly counted tracks.
    std::vector<CountEvent> process(std::span<const Track> confirmed,
                                    std::int64_t frame_id,
                                    std::int64_t interval_index);

    /// Sum of bbox heights per lane over confirmed tracks currently assigned
    /// to the lane with centers inside the ROI (the occupancy numerators).
    std::map<LaneId, double> lane_height_sums(std::span<const Track> confirmed) const;

    std::optional<LaneAssignment> assignment_of(TrackId id) const;
    double avg_vehicle_length() const;
    const CountLedger& ledger() const { return ledger_; }
    const std::vector<LaneGeometry>& lanes() const { return lanes_; }

    void clear();

private:
    std::optional<LaneId> lane_containing(const Point& p) const;

    std::vector<LaneGeometry> lanes_;
    CountingParams params_;
    RollingMedian track_heights_;
    std::map<TrackId, LaneAssignment> assignments_;
    std::map<TrackId, std::int64_t> last_seen_step_;
    std::int64_t step_counter_ = 0;
    CountLedger ledger_;
};

}  // namespace lanewatch
