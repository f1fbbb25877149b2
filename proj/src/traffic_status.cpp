#include "lanewatch/traffic_status.hpp"

#include <algorithm>
#include <cmath>

namespace lanewatch {

std::string to_string(TrafficStatus s) {
    switch (s) {
        case TrafficStatus::normal: return "Normal";
        case TrafficStatus::slow: return "Slow";
        case TrafficStatus::jam: return "Jam";
    }
    return "Normal";
}

double flow_rate_vph(std::int64_t count, double minutes) {
    if (!(minutes > 0.0)) throw ConfigError("interval minutes must be > 0");
    return static_cast<double>(count) * 60.0 / minutes;
}

OccupancySample occupancy(double height_sum, double lane_extent_px) {
    if (!(lane_extent_px > 0.0)) throw ConfigError("lane extent must be > 0");
    const double raw = height_sum / lane_extent_px;
    return OccupancySample{raw, std::min(raw, 1.0)};
}

TrafficStatus classify(double flow_vph, double occupancy_clamped) {
    if (flow_vph < 600.0 && occupancy_clamped > 0.6) return TrafficStatus::jam;
    if (flow_vph > 600.0 && flow_vph < 900.0 && occupancy_clamped > 0.4 &&
        occupancy_clamped < 0.6)
        return TrafficStatus::slow;
    return TrafficStatus::normal;
}

IntervalAccumulator::IntervalAccumulator(std::vector<LaneId> lanes,
                                         std::map<LaneId, double> lane_extents,
                                         double interval_minutes, double fps)
    : lanes_(std::move(lanes)),
      lane_extents_(std::move(lane_extents)),
      interval_minutes_(interval_minutes) {
    if (!(interval_minutes > 0.0))
        throw ConfigError("interval minutes must be > 0");
    frames_per_interval_ = std::llround(interval_minutes * 60.0 * fps);
    if (frames_per_interval_ < 1)
        throw ConfigError("interval shorter than one frame");
}

void IntervalAccumulator::add_count(LaneId lane, std::int64_t interval_index) {
    counts_[{lane, interval_index}] += 1;
}

void IntervalAccumulator::add_frame_occupancy(
    const std::map<LaneId, double>& height_sums, std::int64_t frame_id) {
    const std::int64_t interval = interval_index(frame_id);
    current_interval_ = std::max(current_interval_, interval);
    processed_frames_[interval] += 1;
    for (const LaneId lane : lanes_) {
        const auto it = height_sums.find(lane);
        const double sum = it == height_sums.end() ? 0.0 : it->second;
        const OccupancySample occ = occupancy(sum, lane_extents_.at(lane));
        occ_raw_sums_[{lane, interval}] += occ.raw;
        occ_clamped_sums_[{lane, interval}] += occ.clamped;
    }
}

LaneReport IntervalAccumulator::make_report(LaneId lane, std::int64_t interval,
                                            std::int64_t emitted_at_frame,
                                            bool valid) const {
    LaneReport report;
    report.lane_id = lane;
    report.interval_index = interval;
    report.interval_minutes = interval_minutes_;
    const auto cit = counts_.find({lane, interval});
    report.count = cit == counts_.end() ? 0 : cit->second;
    report.flow_rate_vph = flow_rate_vph(report.count, interval_minutes_);
    const auto fit = processed_frames_.find(interval);
    const std::int64_t frames = fit == processed_frames_.end() ? 0 : fit->second;
    if (frames > 0) {
        const auto rit = occ_raw_sums_.find({lane, interval});
        const auto clit = occ_clamped_sums_.find({lane, interval});
        report.occupancy_raw =
            (rit == occ_raw_sums_.end() ? 0.0 : rit->second) / frames;
        report.occupancy =
            (clit == occ_clamped_sums_.end() ? 0.0 : clit->second) / frames;
    }
    report.status = classify(report.flow_rate_vph, report.occupancy);
    report.valid = valid;
    report.emitted_at_frame = emitted_at_frame;
    return report;
}

void IntervalAccumulator::drop_interval(std::int64_t interval) {
    for (const LaneId lane : lanes_) {
        counts_.erase({lane, interval});
        occ_raw_sums_.erase({lane, interval});
        occ_clamped_sums_.erase({lane, interval});
    }
    processed_frames_.erase(interval);
}

std::vector<LaneReport> IntervalAccumulator::flush_through(
    std::int64_t interval_exclusive, std::int64_t emitted_at_frame) {
    std::vector<LaneReport> reports;
    for (; next_interval_ < interval_exclusive; ++next_interval_) {
        for (const LaneId lane : lanes_)
            reports.push_back(make_report(lane, next_interval_, emitted_at_frame, true));
        drop_interval(next_interval_);
    }
    return reports;
}

std::vector<LaneReport> IntervalAccumulator::abort_current(
    std::int64_t emitted_at_frame) {
    std::vector<LaneReport> reports;
    const std::int64_t interval = std::max(next_interval_, current_interval_);
    for (const LaneId lane : lanes_)
        reports.push_back(make_report(lane, interval, emitted_at_frame, false));
    drop_interval(interval);
    next_interval_ = interval + 1;
    return reports;
}

std::vector<LaneReport> IntervalAccumulator::flush_final(std::int64_t last_frame) {
    const std::int64_t last_interval = interval_index(last_frame);
    std::vector<LaneReport> reports = flush_through(last_interval, last_frame);
    if (next_interval_ == last_interval) {
        for (const LaneId lane : lanes_)
            reports.push_back(make_report(lane, last_interval, last_frame, true));
        drop_interval(last_interval);
        ++next_interval_;
    }
    return reports;
}

void IntervalAccumulator::resume_at(std::int64_t frame_id) {
    next_interval_ = std::max(next_interval_, interval_index(frame_id));
    current_interval_ = next_interval_;
}

}  // namespace lanewatch
