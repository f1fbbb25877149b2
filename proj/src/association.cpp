#include "lanewatch/association.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>

namespace lanewatch {

namespace {

kernels::BoxBatch single_box_batch(const BBox& b) {
    kernels::BoxBatch batch;
    batch.push_back(b);
    return batch;
}

}  // namespace

double iou(const BBox& a, const BBox& b) {
    assert(a.valid() && b.valid());
    double out;
    kernels::active_kernels().iou_row(a, single_box_batch(b), &out);
    return out;
}

double iou_distance(const BBox& a, const BBox& b) { return 1.0 - iou(a, b); }

double center_distance(const BBox& det, const BBox& trk, CenterNormMode mode) {
    assert(det.valid() && trk.valid());
    const double ex = det.cx() - trk.cx();
    const double ey = det.cy() - trk.cy();
    const double rho2 = ex * ex + ey * ey;
    double c2;
    if (mode == CenterNormMode::track_diagonal) {
        c2 = trk.w * trk.w + trk.h * trk.h;
    } else {
        const double ew = std::max(trk.right(), det.right()) - std::min(trk.x, det.x);
        const double eh = std::max(trk.bottom(), det.bottom()) - std::min(trk.y, det.y);
        c2 = ew * ew + eh * eh;
    }
    if (!(c2 > 0.0)) throw ConfigError("degenerate track box in center_distance");
    return rho2 / c2;
}

double aspect_consistency(const BBox& det, const BBox& trk) {
    const double dv = std::atan(det.aspect()) - std::atan(trk.aspect());
    return (4.0 / (M_PI * M_PI)) * (dv * dv);
}

double ciou_distance(const BBox& det, const BBox& trk, const CiouParams& params) {
    double out;
    kernels::active_kernels().ciou_row(trk, std::atan(trk.aspect()),
                                       single_box_batch(det), params.c_mode, &out);
    return out;
}

CostMatrix build_ciou_cost_matrix(std::span<const BBox> tracks,
                                  std::span<const BBox> detections,
                                  const CiouParams& params) {
    CostMatrix costs(tracks.size(), detections.size());
    if (costs.rows == 0 || costs.cols == 0) return costs;
    kernels::BoxBatch dets;
    for (const BBox& d : detections) dets.push_back(d);
    const auto& kt = kernels::active_kernels();
    for (std::size_t r = 0; r < tracks.size(); ++r) {
        kt.ciou_row(tracks[r], std::atan(tracks[r].aspect()), dets,
                    params.c_mode, &costs.data[r * costs.cols]);
    }
    return costs;
}

MatchResult solve_assignment(const CostMatrix& costs, double gate) {
    MatchResult result;
    const std::size_t nr = costs.rows;
    const std::size_t nc = costs.cols;
    if (nr == 0 || nc == 0) {
        result.unmatched_tracks.resize(nr);
        std::iota(result.unmatched_tracks.begin(), result.unmatched_tracks.end(), 0);
        result.unmatched_detections.resize(nc);
        std::iota(result.unmatched_detections.begin(),
                  result.unmatched_detections.end(), 0);
        return result;
    }

    // Shortest-augmenting-path Hungarian on the (rows <= cols) orientation;
    // transpose if needed. 1-based potentials with a virtual 0 column.
    const bool transposed = nr > nc;
    const std::size_t n = transposed ? nc : nr;
    const std::size_t m = transposed ? nr : nc;
    auto cost_at = [&](std::size_t i, std::size_t j) {
        return transposed ? costs.at(j, i) : costs.at(i, j);
    };

    constexpr double kInf = std::numeric_limits<double>::infinity();
    std::vector<double> u(n + 1, 0.0), v(m + 1, 0.0);
    std::vector<std::size_t> way(m + 1, 0);
    std::vector<std::size_t> match_col(m + 1, 0);  // col -> row (1-based, 0 = free)

    for (std::size_t i = 1; i <= n; ++i) {
        match_col[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(m + 1, kInf);
        std::vector<char> used(m + 1, 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = match_col[j0];
            double delta = kInf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= m; ++j) {
                if (used[j]) continue;
                const double cur = cost_at(i0 - 1, j - 1) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= m; ++j) {
                if (used[j]) {
                    u[match_col[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match_col[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            match_col[j0] = match_col[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<char> track_matched(nr, 0), det_matched(nc, 0);
    for (std::size_t j = 1; j <= m; ++j) {
        if (match_col[j] == 0) continue;
        const std::size_t row = transposed ? j - 1 : match_col[j] - 1;
        const std::size_t col = transposed ? match_col[j] - 1 : j - 1;
        if (costs.at(row, col) > gate) continue;  // demote gated pairs
        result.matches.emplace_back(row, col);
        track_matched[row] = 1;
        det_matched[col] = 1;
    }
    std::sort(result.matches.begin(), result.matches.end());
    for (std::size_t r = 0; r < nr; ++r)
        if (!track_matched[r]) result.unmatched_tracks.push_back(r);
    for (std::size_t c = 0; c < nc; ++c)
        if (!det_matched[c]) result.unmatched_detections.push_back(c);
    return result;
}

MatchResult cascade_match(std::span<const CascadeTrack> tracks,
                          std::span<const BBox> detections,
                          const CiouParams& params, int skipped_frames) {
    MatchResult result;
    if (tracks.empty() || detections.empty()) {
        result.unmatched_tracks.resize(tracks.size());
        std::iota(result.unmatched_tracks.begin(), result.unmatched_tracks.end(), 0);
        result.unmatched_detections.resize(detections.size());
        std::iota(result.unmatched_detections.begin(),
                  result.unmatched_detections.end(), 0);
        return result;
    }

    const double gate = adaptive_threshold(params.match_threshold, skipped_frames);

    std::map<int, std::vector<std::size_t>> groups;  // ascending time_since_update
    for (std::size_t t = 0; t < tracks.size(); ++t)
        groups[tracks[t].time_since_update].push_back(t);

    std::vector<std::size_t> remaining(detections.size());
    std::iota(remaining.begin(), remaining.end(), 0);

    for (const auto& [age, group] : groups) {
        if (remaining.empty()) {
            for (std::size_t t : group) result.unmatched_tracks.push_back(t);
            continue;
        }
        std::vector<BBox> trk_boxes(group.size());
        for (std::size_t i = 0; i < group.size(); ++i)
            trk_boxes[i] = tracks[group[i]].bbox;
        std::vector<BBox> det_boxes(remaining.size());
        for (std::size_t i = 0; i < remaining.size(); ++i)
            det_boxes[i] = detections[remaining[i]];

        const CostMatrix costs = build_ciou_cost_matrix(trk_boxes, det_boxes, params);
        const MatchResult group_result = solve_assignment(costs, gate);

        for (const auto& [ti, di] : group_result.matches)
            result.matches.emplace_back(group[ti], remaining[di]);
        for (std::size_t ti : group_result.unmatched_tracks)
            result.unmatched_tracks.push_back(group[ti]);

        std::vector<std::size_t> next;
        next.reserve(group_result.unmatched_detections.size());
        for (std::size_t di : group_result.unmatched_detections)
            next.push_back(remaining[di]);
        remaining = std::move(next);
    }

    result.unmatched_detections = std::move(remaining);
    std::sort(result.matches.begin(), result.matches.end());
    std::sort(result.unmatched_tracks.begin(), result.unmatched_tracks.end());
    std::sort(result.unmatched_detections.begin(), result.unmatched_detections.end());
    return result;
}

}  // namespace lanewatch
