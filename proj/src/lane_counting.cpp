#include "lanewatch/lane_counting.hpp"

#include <algorithm>

namespace lanewatch {

void CountLedger::record(const CountEvent& event, std::int64_t interval_index) {
    const auto [_, inserted] = counted_.insert(event.track_id);
    if (!inserted) return;
    per_lane_[event.lane_id] += 1;
    per_interval_[{event.lane_id, interval_index}] += 1;
}

std::int64_t CountLedger::lane_total(LaneId lane) const {
    const auto it = per_lane_.find(lane);
    return it == per_lane_.end() ? 0 : it->second;
}

std::int64_t CountLedger::interval_count(LaneId lane, std::int64_t interval_index) const {
    const auto it = per_interval_.find({lane, interval_index});
    return it == per_interval_.end() ? 0 : it->second;
}

void CountLedger::clear() {
    counted_.clear();
    per_lane_.clear();
    per_interval_.clear();
}

LaneCounter::LaneCounter(std::vector<LaneGeometry> lanes, CountingParams params)
    : lanes_(std::move(lanes)), params_(params), track_heights_(params.length_window) {
    params_.validate();
    for (const LaneGeometry& lane : lanes_) lane.validate();
}

std::optional<LaneId> LaneCounter::lane_containing(const Point& p) const {
    for (const LaneGeometry& lane : lanes_) {
        if (lane.contains(p)) return lane.lane_id;
    }
    return std::nullopt;
}

double LaneCounter::avg_vehicle_length() const {
    if (params_.avg_vehicle_length_px) return *params_.avg_vehicle_length_px;
    return track_heights_.median().value_or(0.0);
}

std::vector<CountEvent> LaneCounter::process(std::span<const Track> confirmed,
                                             std::int64_t frame_id,
                                             std::int64_t interval_index) {
    ++step_counter_;
    for (const Track& t : confirmed) track_heights_.push(t.bbox().h);

    std::vector<CountEvent> events;
    const double avg_len = avg_vehicle_length();

    for (const Track& t : confirmed) {
        const BBox box = t.bbox();
        const Point center{box.cx(), box.cy()};
        const std::optional<LaneId> current = lane_containing(center);

        auto it = assignments_.find(t.id);
        if (current) {
            if (it == assignments_.end()) {
                assignments_[t.id] = LaneAssignment{t.id, current, frame_id, 0};
            } else {
                if (it->second.lane != current) it->second.assigned_at_frame = frame_id;
                it->second.lane = current;
                it->second.misses = 0;
            }
        } else if (it != assignments_.end() && it->second.lane) {
            it->second.misses += 1;
            if (it->second.misses > params_.retention_limit) it->second.lane.reset();
        }
        last_seen_step_[t.id] = step_counter_;

        // Counting needs the center in the band this frame, not a retained
        // assignment, plus baseline proximity.
        if (!current || ledger_.already_counted(t.id)) continue;
        if (avg_len <= 0.0) continue;
        const LaneGeometry& lane = *std::find_if(
            lanes_.begin(), lanes_.end(),
            [&](const LaneGeometry& l) { return l.lane_id == *current; });
        if (lane.distance_to_baseline(center) <= avg_len) {
            const CountEvent event{*current, t.id, frame_id};
            ledger_.record(event, interval_index);
            events.push_back(event);
        }
    }

    // Drop assignment state for tracks that stopped appearing long ago; ids
    // are never reused so this is purely housekeeping.
    std::erase_if(assignments_, [&](const auto& kv) {
        const auto seen = last_seen_step_.find(kv.first);
        return seen == last_seen_step_.end() ||
               step_counter_ - seen->second > params_.retention_limit;
    });
    std::erase_if(last_seen_step_, [&](const auto& kv) {
        return step_counter_ - kv.second > params_.retention_limit;
    });

    return events;
}

std::map<LaneId, double> LaneCounter::lane_height_sums(
    std::span<const Track> confirmed) const {
    std::map<LaneId, double> sums;
    for (const LaneGeometry& lane : lanes_) sums[lane.lane_id] = 0.0;
    for (const Track& t : confirmed) {
        const auto it = assignments_.find(t.id);
        if (it == assignments_.end() || !it->second.lane) continue;
        const BBox box = t.bbox();
        const Point center{box.cx(), box.cy()};
        const LaneGeometry& lane = *std::find_if(
            lanes_.begin(), lanes_.end(),
            [&](const LaneGeometry& l) { return l.lane_id == *it->second.lane; });
        if (point_in_polygon(center, lane.roi)) sums[*it->second.lane] += box.h;
    }
    return sums;
}

std::optional<LaneAssignment> LaneCounter::assignment_of(TrackId id) const {
    const auto it = assignments_.find(id);
    if (it == assignments_.end()) return std::nullopt;
    return it->second;
}

void LaneCounter::clear() {
    assignments_.clear();
    last_seen_step_.clear();
    ledger_.clear();
}

}  // namespace lanewatch
