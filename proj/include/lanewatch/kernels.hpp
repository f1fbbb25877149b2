#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "lanewatch/types.hpp"

namespace lanewatch::kernels {

/// Structure-of-arrays box batch for the data-parallel kernels. `atan_aspect`
/// carries std::atan(w/h) precomputed once per box so the CIOU row kernel
/// stays free of transcendentals (and therefore bit-identical across the
/// scalar and AVX2 variants).
struct BoxBatch {
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> w;
    std::vector<double> h;
    std::vector<double> atan_aspect;

    std::size_t size() const { return x.size(); }
    void clear();
    void push_back(const BBox& b);
    BBox at(std::size_t i) const { return BBox{x[i], y[i], w[i], h[i]}; }
};

enum class CenterNormMode {
    /// c^2 = squared diagonal of the track box.
    track_diagonal,
    /// c^2 = squared diagonal of the smallest box enclosing both.
    enclosing_diagonal,
};

/// out[i] = IOU(a, batch[i]); 0 for disjoint boxes.
using IouRowFn = void (*)(const BBox& a, const BoxBatch& boxes, double* out);

/// out[i] = CIOU distance from detection batch[i] to track box `trk`:
/// (1 - IOU) + D + alpha*V with alpha gated off below IOU 0.5.
using CiouRowFn = void (*)(const BBox& trk, double trk_atan_aspect,
                           const BoxBatch& dets, CenterNormMode mode,
                           double* out);

/// Sums 8-bit pixels over a grid_cols x grid_rows partition of the region
/// [0,region_w) x [0,region_h) of `img` (row stride `stride`). Cell edges at
/// floor(k*extent/grid). Exact integer arithmetic.
using BlockSumFn = void (*)(const std::uint8_t* img, std::size_t stride,
                            std::size_t region_w, std::size_t region_h,
                            std::size_t grid_cols, std::size_t grid_rows,
                            std::uint64_t* sums);

struct KernelTable {
    IouRowFn iou_row;
    CiouRowFn ciou_row;
    BlockSumFn block_sums;
    const char* name;
};

extern const KernelTable scalar_kernels;
#if defined(__x86_64__) || defined(_M_X64)
extern const KernelTable avx2_kernels;  // only usable when avx2_available()
#endif

bool avx2_available();

/// Active table: AVX2 when the CPU supports it and the build includes it,
/// otherwise scalar. LANEWATCH_KERNEL=scalar|avx2 overrides.
const KernelTable& active_kernels();

inline int hamming64(std::uint64_t a, std::uint64_t b) {
    return std::popcount(a ^ b);
}

}  // namespace lanewatch::kernels
