#include "lanewatch/detection_filter.hpp"

#include <algorithm>
#include <numeric>

#include "lanewatch/kernels.hpp"

namespace lanewatch {

void RollingMedian::push(double value) {
    samples_.push_back(value);
    if (samples_.size() > window_) samples_.pop_front();
}

std::optional<double> RollingMedian::median() const {
    if (samples_.empty()) return std::nullopt;
    std::vector<double> sorted(samples_.begin(), samples_.end());
    const std::size_t mid = sorted.size() / 2;
    std::nth_element(sorted.begin(), sorted.begin() + mid, sorted.end());
    if (sorted.size() % 2 == 1) return sorted[mid];
    const double hi = sorted[mid];
    const double lo = *std::max_element(sorted.begin(), sorted.begin() + mid);
    return 0.5 * (lo + hi);
}

std::vector<Detection> nms(std::span<const Detection> detections,
                           double iou_threshold) {
    if (detections.empty()) return {};
    std::vector<std::size_t> order(detections.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return detections[a].confidence > detections[b].confidence;
    });

    kernels::BoxBatch batch;
    for (const Detection& d : detections) batch.push_back(d.bbox);
    std::vector<double> ious(detections.size());
    std::vector<char> suppressed(detections.size(), 0);

    std::vector<Detection> kept;
    for (std::size_t oi : order) {
        if (suppressed[oi]) continue;
        kept.push_back(detections[oi]);
        kernels::active_kernels().iou_row(detections[oi].bbox, batch, ious.data());
        for (std::size_t j = 0; j < detections.size(); ++j) {
            if (j != oi && ious[j] > iou_threshold) suppressed[j] = 1;
        }
    }
    return kept;
}

DetectionFilter::DetectionFilter(FilterParams params)
    : params_(params), truck_areas_(params.truck_median_window) {
    params_.validate();
}

void DetectionFilter::update_truck_median(std::span<const Detection> detections) {
    for (const Detection& d : detections) {
        if (d.class_label == ClassLabel::truck) truck_areas_.push(d.bbox.area());
    }
}

std::optional<double> DetectionFilter::truck_median_area() const {
    if (truck_areas_.count() < params_.truck_median_warmup) return std::nullopt;
    return truck_areas_.median();
}

std::vector<Detection> DetectionFilter::filter_valid(
    std::span<const Detection> detections, std::span<const Polygon> rois) const {
    if (rois.empty()) throw ConfigError("filter_valid requires at least one ROI");
    const std::optional<double> median_area = truck_median_area();
    std::vector<Detection> kept;
    for (const Detection& d : detections) {
        if (d.confidence < params_.conf_threshold) continue;
        if (median_area && d.bbox.area() > params_.size_factor * *median_area)
            continue;
        const Point center{d.bbox.cx(), d.bbox.cy()};
        const bool in_roi = std::any_of(rois.begin(), rois.end(), [&](const Polygon& r) {
            return point_in_polygon(center, r);
        });
        if (!in_roi) continue;
        kept.push_back(d);
    }
    return kept;
}

std::vector<Detection> DetectionFilter::apply(std::span<const Detection> detections,
                                              std::span<const Polygon> rois) {
    update_truck_median(detections);
    return nms(filter_valid(detections, rois), params_.nms_iou_threshold);
}

}  // namespace lanewatch
