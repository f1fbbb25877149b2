#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "lanewatch/types.hpp"

namespace lanewatch {

struct Point {
    double x = 0.0;
    double y = 0.0;
    friend auto operator<=>(const Point&, const Point&) = default;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
    double norm() const;
};

using Polyline = std::vector<Point>;
using Polygon = std::vector<Point>;
using Segment = std::array<Point, 2>;

/// z-component of the cross product (b-a) x (p-a). In image coordinates
/// (y down) a positive value means p lies to the RIGHT of the directed
/// segment a->b.
double cross_z(const Point& a, const Point& b, const Point& p);

/// Inclusive point-in-polygon test: points on an edge or vertex count as
/// inside. Throws ConfigError for polygons with fewer than 3 vertices.
bool point_in_polygon(const Point& p, std::span<const Point> poly);

double point_segment_distance(const Point& p, const Segment& seg);

/// Signed side of `p` against the polyline segment nearest to `p`.
/// Positive = right of the polyline (walking it in stored order), negative =
/// left, zero = on the supporting line of the nearest segment.
double side_of_polyline(const Point& p, const Polyline& line);

/// One lane of the monitored roadway. Boundary polylines are stored ordered
/// along `direction` (normalized on load); `baseline` is the counting
/// segment; `roi` is the detection region the lane belongs to.
struct LaneGeometry {
    LaneId lane_id;
    Polyline left_boundary;
    Polyline right_boundary;
    Segment baseline{};
    Vec2 direction;
    Polygon roi;

    void validate() const;

    /// Band membership with the left-owner rule: a point on the shared
    /// boundary between two lanes belongs to the lane for which that
    /// boundary is the right edge (the lane on the boundary's left in
    /// direction-of-travel order).
    bool contains(const Point& p) const;

    double distance_to_baseline(const Point& p) const;
};

/// Flips boundary polylines that are stored against the travel direction so
/// the signed-side convention of LaneGeometry::contains holds.
void orient_boundaries_along_direction(LaneGeometry& lane);

/// Vertical pixel extent of the lane band clipped to the ROI. Used as the
/// occupancy denominator. Computed by dense sampling of both boundaries.
double lane_vertical_extent_in_roi(const LaneGeometry& lane);

}  // namespace lanewatch
