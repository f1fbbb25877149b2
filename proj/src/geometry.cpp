#include "lanewatch/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace lanewatch {

double Vec2::norm() const { return std::sqrt(x * x + y * y); }

double cross_z(const Point& a, const Point& b, const Point& p) {
    return (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x);
}

namespace {

bool on_segment(const Point& p, const Point& a, const Point& b) {
    if (cross_z(a, b, p) != 0.0) return false;
    return p.x >= std::min(a.x, b.x) && p.x <= std::max(a.x, b.x) &&
           p.y >= std::min(a.y, b.y) && p.y <= std::max(a.y, b.y);
}

Point closest_point_on_segment(const Point& p, const Point& a, const Point& b) {
    const double dx = b.x - a.x;
    const double dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    if (len2 == 0.0) return a;
    double t = ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return {a.x + t * dx, a.y + t * dy};
}

}  // namespace

bool point_in_polygon(const Point& p, std::span<const Point> poly) {
    if (poly.size() < 3) throw ConfigError("polygon needs at least 3 vertices");
    // Boundary counts as inside; test edges explicitly first so the crossing
    // count below never has to resolve exact-hit ambiguity.
    for (std::size_t i = 0, n = poly.size(); i < n; ++i) {
        if (on_segment(p, poly[i], poly[(i + 1) % n])) return true;
    }
    bool inside = false;
    for (std::size_t i = 0, n = poly.size(); i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % n];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double x_at = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (p.x < x_at) inside = !inside;
        }
    }
    return inside;
}

double point_segment_distance(const Point& p, const Segment& seg) {
    const Point q = closest_point_on_segment(p, seg[0], seg[1]);
    return std::hypot(p.x - q.x, p.y - q.y);
}

double side_of_polyline(const Point& p, const Polyline& line) {
    double best_d2 = std::numeric_limits<double>::infinity();
    std::size_t best_seg = 0;
    for (std::size_t i = 0; i + 1 < line.size(); ++i) {
        const Point q = closest_point_on_segment(p, line[i], line[i + 1]);
        const double d2 = (p.x - q.x) * (p.x - q.x) + (p.y - q.y) * (p.y - q.y);
        if (d2 < best_d2) {
            best_d2 = d2;
            best_seg = i;
        }
    }
    return cross_z(line[best_seg], line[best_seg + 1], p);
}

void LaneGeometry::validate() const {
    if (left_boundary.size() < 2 || right_boundary.size() < 2)
        throw ConfigError("lane boundaries need at least 2 points each");
    if (roi.size() < 3) throw ConfigError("lane ROI needs at least 3 vertices");
    const double n = direction.norm();
    if (std::abs(n - 1.0) > 1e-9)
        throw ConfigError("lane direction must be a unit vector");
    for (const Point& e : baseline) {
        if (!point_in_polygon(e, roi))
            throw ConfigError("baseline endpoints must lie within the ROI");
    }
}

bool LaneGeometry::contains(const Point& p) const {
    // Strictly right of the left boundary, left of or on the right boundary:
    // this makes a shared boundary belong to exactly one lane (the one on
    // the boundary's left in travel order).
    if (!(side_of_polyline(p, left_boundary) > 0.0)) return false;
    if (!(side_of_polyline(p, right_boundary) <= 0.0)) return false;
    return point_in_polygon(p, roi);
}

double LaneGeometry::distance_to_baseline(const Point& p) const {
    return point_segment_distance(p, baseline);
}

void orient_boundaries_along_direction(LaneGeometry& lane) {
    auto orient = [&](Polyline& line) {
        if (line.size() < 2) return;
        const Point& a = line.front();
        const Point& b = line.back();
        const double along = (b.x - a.x) * lane.direction.x + (b.y - a.y) * lane.direction.y;
        if (along < 0.0) std::reverse(line.begin(), line.end());
    };
    orient(lane.left_boundary);
    orient(lane.right_boundary);
}

double lane_vertical_extent_in_roi(const LaneGeometry& lane) {
    constexpr int kSamplesPerSegment = 64;
    double y_min = std::numeric_limits<double>::infinity();
    double y_max = -std::numeric_limits<double>::infinity();
    auto scan = [&](const Polyline& line) {
        for (std::size_t i = 0; i + 1 < line.size(); ++i) {
            for (int s = 0; s <= kSamplesPerSegment; ++s) {
                const double t = static_cast<double>(s) / kSamplesPerSegment;
                const Point p{line[i].x + t * (line[i + 1].x - line[i].x),
                              line[i].y + t * (line[i + 1].y - line[i].y)};
                if (point_in_polygon(p, lane.roi)) {
                    y_min = std::min(y_min, p.y);
                    y_max = std::max(y_max, p.y);
                }
            }
        }
    };
    scan(lane.left_boundary);
    scan(lane.right_boundary);
    if (!(y_max > y_min))
        throw ConfigError("lane band does not intersect its ROI");
    return y_max - y_min;
}

}  // namespace lanewatch
