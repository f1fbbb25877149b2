#include "lanewatch/view_change.hpp"

#include <array>

#include "lanewatch/kernels.hpp"

namespace lanewatch {

FrameHash hash_frame(const GrayImage& frame, const ViewCheckParams& params,
                     std::int64_t frame_id) {
    params.validate();
    const int crop_h = frame.height / 5;
    const int grid_rows = 8;
    const int grid_cols = params.hash_kind == HashKind::average_hash ? 8 : 9;
    if (crop_h < grid_rows || frame.width < grid_cols)
        throw InputError("frame too small to hash: top-fifth crop below grid size");

    std::array<std::uint64_t, 72> sums{};
    kernels::active_kernels().block_sums(
        frame.pixels.data(), static_cast<std::size_t>(frame.width),
        static_cast<std::size_t>(frame.width), static_cast<std::size_t>(crop_h),
        static_cast<std::size_t>(grid_cols), static_cast<std::size_t>(grid_rows),
        sums.data());

    auto cell_count = [&](int gr, int gc) -> std::uint64_t {
        const std::uint64_t y0 = static_cast<std::uint64_t>(gr) * crop_h / grid_rows;
        const std::uint64_t y1 = static_cast<std::uint64_t>(gr + 1) * crop_h / grid_rows;
        const std::uint64_t x0 = static_cast<std::uint64_t>(gc) * frame.width / grid_cols;
        const std::uint64_t x1 =
            static_cast<std::uint64_t>(gc + 1) * frame.width / grid_cols;
        return (y1 - y0) * (x1 - x0);
    };

    std::uint64_t bits = 0;
    if (params.hash_kind == HashKind::average_hash) {
        std::uint64_t total_sum = 0;
        std::uint64_t total_count = 0;
        for (int gr = 0; gr < grid_rows; ++gr) {
            for (int gc = 0; gc < grid_cols; ++gc) {
                total_sum += sums[gr * grid_cols + gc];
                total_count += cell_count(gr, gc);
            }
        }
        for (int gr = 0; gr < grid_rows; ++gr) {
            for (int gc = 0; gc < grid_cols; ++gc) {
                // cell mean > grid mean, compared exactly.
                const bool set = sums[gr * grid_cols + gc] * total_count >
                                 total_sum * cell_count(gr, gc);
                if (set) bits |= std::uint64_t{1} << (gr * 8 + gc);
            }
        }
    } else {
        for (int gr = 0; gr < grid_rows; ++gr) {
            for (int gc = 0; gc < 8; ++gc) {
                // right neighbor brighter than its left neighbor.
                const std::uint64_t left = sums[gr * grid_cols + gc];
                const std::uint64_t right = sums[gr * grid_cols + gc + 1];
                const bool set = right * cell_count(gr, gc) >
                                 left * cell_count(gr, gc + 1);
                if (set) bits |= std::uint64_t{1} << (gr * 8 + gc);
            }
        }
    }

    return FrameHash{bits, frame_id, HashRegion{0, 0, frame.width, crop_h}};
}

int hash_distance(const FrameHash& a, const FrameHash& b) {
    return kernels::hamming64(a.bits, b.bits);
}

ViewChecker::ViewChecker(ViewCheckParams params) : params_(params) {
    params_.validate();
}

void ViewChecker::set_reference(const GrayImage& frame, std::int64_t frame_id) {
    reference_ = hash_frame(frame, params_, frame_id);
    next_check_ = frame_id + params_.check_interval_frames;
}

ViewCheckOutcome ViewChecker::maybe_check(const GrayImage& frame,
                                          std::int64_t frame_id) {
    if (!check_due(frame_id)) return {};
    const FrameHash current = hash_frame(frame, params_, frame_id);
    next_check_ = frame_id + params_.check_interval_frames;
    const int distance = hash_distance(*reference_, current);
    return ViewCheckOutcome{true, distance,
                            distance > params_.hash_distance_threshold};
}

void ViewChecker::reset() {
    reference_.reset();
    next_check_ = 0;
}

}  // namespace lanewatch
