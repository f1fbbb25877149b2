#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lanewatch/kernels.hpp"
#include "lanewatch/types.hpp"

namespace lanewatch {

using kernels::CenterNormMode;

struct CiouParams {
    /// Base matching gate on the CIOU distance; scaled by (K+1) when K
    /// frames were skipped.
    double match_threshold = 0.35;
    CenterNormMode c_mode = CenterNormMode::track_diagonal;

    void validate() const {
        if (!(match_threshold > 0.0 && match_threshold <= 2.0))
            throw ConfigError("match_threshold must be in (0, 2]");
    }
};

double iou(const BBox& a, const BBox& b);
double iou_distance(const BBox& a, const BBox& b);

/// Squared center distance normalized by c^2 (track diagonal or enclosing
/// box diagonal, by mode). Unbounded above in track_diagonal mode.
double center_distance(const BBox& det, const BBox& trk, CenterNormMode mode);

/// Aspect-ratio consistency term in [0, 1); 0 iff equal aspect ratios.
double aspect_consistency(const BBox& det, const BBox& trk);

/// (1 - IOU) + center term + alpha * aspect term, alpha gated off below
/// IOU 0.5. Asymmetric in track_diagonal mode (the track box normalizes).
double ciou_distance(const BBox& det, const BBox& trk, const CiouParams& params);

inline double adaptive_threshold(double base_threshold, int skipped_frames) {
    return base_threshold * (skipped_frames + 1);
}

/// Dense track x detection cost matrix, row-major.
struct CostMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    CostMatrix() = default;
    CostMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}
    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// CIOU distances from every track box (row) to every detection box (col).
/// Rows go through the batched kernel; detections are packed once.
CostMatrix build_ciou_cost_matrix(std::span<const BBox> tracks,
                                  std::span<const BBox> detections,
                                  const CiouParams& params);

struct MatchResult {
    std::vector<std::pair<std::size_t, std::size_t>> matches;  // (track, detection)
    std::vector<std::size_t> unmatched_tracks;
    std::vector<std::size_t> unmatched_detections;
};

/// Minimum-total-cost one-to-one assignment (Hungarian / shortest augmenting
/// path). Pairs costing more than `gate` are demoted to unmatched on both
/// sides after solving. Empty matrices yield all-unmatched.
MatchResult solve_assignment(const CostMatrix& costs, double gate);

/// A candidate row for cascade matching: the predicted track box plus how
/// many processed steps since its last update (>= 1 after prediction).
struct CascadeTrack {
    BBox bbox;
    int time_since_update = 1;
};

/// DeepSort-style cascade: age groups from most recently updated to oldest,
/// each solved against the still-unmatched detections with the skip-scaled
/// gate. Indices in the result refer to the input spans.
MatchResult cascade_match(std::span<const CascadeTrack> tracks,
                          std::span<const BBox> detections,
                          const CiouParams& params, int skipped_frames);

}  // namespace lanewatch
