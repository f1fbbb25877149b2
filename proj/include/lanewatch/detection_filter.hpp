#pragma once

#include <deque>
#include <optional>
#include <span>
#include <vector>

#include "lanewatch/geometry.hpp"
#include "lanewatch/types.hpp"

namespace lanewatch {

struct FilterParams {
    double conf_threshold = 0.25;
    double nms_iou_threshold = 0.45;
    double size_factor = 2.0;
    std::size_t truck_median_window = 500;
    std::size_t truck_median_warmup = 20;

    void validate() const {
        if (!(conf_threshold > 0.0 && conf_threshold <= 1.0))
            throw ConfigError("conf_threshold must be in (0, 1]");
        if (!(nms_iou_threshold > 0.0 && nms_iou_threshold <= 1.0))
            throw ConfigError("nms_iou_threshold must be in (0, 1]");
        if (!(size_factor > 1.0)) throw ConfigError("size_factor must be > 1");
    }
};

/// Rolling median over the most recent `window` samples.
class RollingMedian {
public:
    explicit RollingMedian(std::size_t window) : window_(window) {}

    void push(double value);
    std::size_t count() const { return samples_.size(); }
    std::optional<double> median() const;

private:
    std::size_t window_;
    std::deque<double> samples_;
};

/// Greedy confidence-descending suppression; drops any box whose IOU with an
/// already-kept box exceeds the threshold. Class-agnostic.
std::vector<Detection> nms(std::span<const Detection> detections,
                           double iou_threshold);

/// Pre-tracking validity filter: confidence, center-in-some-ROI, and (once
/// the truck-size median has warmed up) the oversize rejection, then NMS.
class DetectionFilter {
public:
    explicit DetectionFilter(FilterParams params = {});

    /// Feeds truck detections into the rolling size median.
    void update_truck_median(std::span<const Detection> detections);

    /// Oversize area bound is size_factor x median truck area; inactive
    /// until `truck_median_warmup` truck samples have been seen.
    std::optional<double> truck_median_area() const;

    std::vector<Detection> filter_valid(std::span<const Detection> detections,
                                        std::span<const Polygon> rois) const;

    /// update_truck_median + filter_valid + nms in pipeline order.
    std::vector<Detection> apply(std::span<const Detection> detections,
                                 std::span<const Polygon> rois);

    const FilterParams& params() const { return params_; }

private:
    FilterParams params_;
    RollingMedian truck_areas_;
};

}  // namespace lanewatch
