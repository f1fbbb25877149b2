// AVX2 variants of the batched kernels. Compiled with -mavx2 in its own TU;
// only reached through the dispatch table when the CPU reports AVX2.
//
// The float paths replicate the scalar reference expressions op-for-op
// (same min/max orientation, same add/sub order, no FMA) so results are
// value-identical to the scalar kernels, which the equivalence tests assert.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include "kernels_detail.hpp"
#include "lanewatch/kernels.hpp"

namespace lanewatch::kernels {
namespace {

struct IouLanes {
    __m256d iou;
    __m256d bx, by, bw, bh;  // loaded det fields, reused by the CIOU body
};

inline IouLanes iou_lanes(double ax, double ay, double aw, double ah,
                          const BoxBatch& boxes, std::size_t i) {
    const __m256d vax = _mm256_set1_pd(ax);
    const __m256d vay = _mm256_set1_pd(ay);
    const __m256d va_r = _mm256_set1_pd(ax + aw);
    const __m256d va_b = _mm256_set1_pd(ay + ah);
    const __m256d va_area = _mm256_set1_pd(aw * ah);

    const __m256d bx = _mm256_loadu_pd(&boxes.x[i]);
    const __m256d by = _mm256_loadu_pd(&boxes.y[i]);
    const __m256d bw = _mm256_loadu_pd(&boxes.w[i]);
    const __m256d bh = _mm256_loadu_pd(&boxes.h[i]);

    const __m256d zero = _mm256_setzero_pd();
    const __m256d ix1 = _mm256_max_pd(vax, bx);
    const __m256d iy1 = _mm256_max_pd(vay, by);
    const __m256d ix2 = _mm256_min_pd(va_r, _mm256_add_pd(bx, bw));
    const __m256d iy2 = _mm256_min_pd(va_b, _mm256_add_pd(by, bh));
    const __m256d iw = _mm256_max_pd(_mm256_sub_pd(ix2, ix1), zero);
    const __m256d ih = _mm256_max_pd(_mm256_sub_pd(iy2, iy1), zero);
    const __m256d inter = _mm256_mul_pd(iw, ih);
    const __m256d uni = _mm256_sub_pd(
        _mm256_add_pd(va_area, _mm256_mul_pd(bw, bh)), inter);
    return IouLanes{_mm256_div_pd(inter, uni), bx, by, bw, bh};
}

void iou_row_avx2(const BBox& a, const BoxBatch& boxes, double* out) {
    const std::size_t n = boxes.size();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        _mm256_storeu_pd(&out[i], iou_lanes(a.x, a.y, a.w, a.h, boxes, i).iou);
    }
    for (; i < n; ++i) {
        out[i] = detail::iou_one(a.x, a.y, a.w, a.h, boxes.x[i], boxes.y[i],
                                 boxes.w[i], boxes.h[i]);
    }
}

void ciou_row_avx2(const BBox& trk, double trk_atan_aspect,
                   const BoxBatch& dets, CenterNormMode mode, double* out) {
    const std::size_t n = dets.size();
    const __m256d half = _mm256_set1_pd(0.5);
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d zero = _mm256_setzero_pd();
    const __m256d iou_cut = _mm256_set1_pd(0.5);
    const __m256d k4pi2 = _mm256_set1_pd(detail::kFourOverPiSq);
    const __m256d tcx = _mm256_set1_pd(trk.x + 0.5 * trk.w);
    const __m256d tcy = _mm256_set1_pd(trk.y + 0.5 * trk.h);
    const __m256d t_atan = _mm256_set1_pd(trk_atan_aspect);
    const __m256d track_c2 = _mm256_set1_pd(trk.w * trk.w + trk.h * trk.h);
    const __m256d tx = _mm256_set1_pd(trk.x);
    const __m256d ty = _mm256_set1_pd(trk.y);
    const __m256d t_r = _mm256_set1_pd(trk.x + trk.w);
    const __m256d t_b = _mm256_set1_pd(trk.y + trk.h);

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const IouLanes lanes = iou_lanes(trk.x, trk.y, trk.w, trk.h, dets, i);
        const __m256d dcx = _mm256_add_pd(lanes.bx, _mm256_mul_pd(half, lanes.bw));
        const __m256d dcy = _mm256_add_pd(lanes.by, _mm256_mul_pd(half, lanes.bh));
        const __m256d ex = _mm256_sub_pd(dcx, tcx);
        const __m256d ey = _mm256_sub_pd(dcy, tcy);
        const __m256d rho2 =
            _mm256_add_pd(_mm256_mul_pd(ex, ex), _mm256_mul_pd(ey, ey));

        __m256d c2;
        if (mode == CenterNormMode::track_diagonal) {
            c2 = track_c2;
        } else {
            const __m256d ew = _mm256_sub_pd(
                _mm256_max_pd(t_r, _mm256_add_pd(lanes.bx, lanes.bw)),
                _mm256_min_pd(tx, lanes.bx));
            const __m256d eh = _mm256_sub_pd(
                _mm256_max_pd(t_b, _mm256_add_pd(lanes.by, lanes.bh)),
                _mm256_min_pd(ty, lanes.by));
            c2 = _mm256_add_pd(_mm256_mul_pd(ew, ew), _mm256_mul_pd(eh, eh));
        }
        const __m256d dist = _mm256_div_pd(rho2, c2);

        const __m256d dv =
            _mm256_sub_pd(_mm256_loadu_pd(&dets.atan_aspect[i]), t_atan);
        const __m256d v = _mm256_mul_pd(k4pi2, _mm256_mul_pd(dv, dv));

        const __m256d one_minus_iou = _mm256_sub_pd(one, lanes.iou);
        const __m256d denom = _mm256_add_pd(one_minus_iou, v);
        const __m256d mask =
            _mm256_and_pd(_mm256_cmp_pd(lanes.iou, iou_cut, _CMP_GE_OQ),
                          _mm256_cmp_pd(denom, zero, _CMP_GT_OQ));
        const __m256d alpha = _mm256_and_pd(_mm256_div_pd(v, denom), mask);

        const __m256d result = _mm256_add_pd(
            _mm256_add_pd(one_minus_iou, dist), _mm256_mul_pd(alpha, v));
        _mm256_storeu_pd(&out[i], result);
    }
    for (; i < n; ++i) {
        out[i] = detail::ciou_one(trk.x, trk.y, trk.w, trk.h, trk_atan_aspect,
                                  dets.x[i], dets.y[i], dets.w[i], dets.h[i],
                                  dets.atan_aspect[i], mode);
    }
}

inline std::uint64_t row_sum_avx2(const std::uint8_t* row, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        const __m256i bytes =
            _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
        // SAD against zero yields four u64 lanes of 8-byte partial sums.
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(bytes, _mm256_setzero_si256()));
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < n; ++i) total += row[i];
    return total;
}

void block_sums_avx2(const std::uint8_t* img, std::size_t stride,
                     std::size_t region_w, std::size_t region_h,
                     std::size_t grid_cols, std::size_t grid_rows,
                     std::uint64_t* sums) {
    for (std::size_t gr = 0; gr < grid_rows; ++gr) {
        const std::size_t y0 = gr * region_h / grid_rows;
        const std::size_t y1 = (gr + 1) * region_h / grid_rows;
        for (std::size_t gc = 0; gc < grid_cols; ++gc) {
            const std::size_t x0 = gc * region_w / grid_cols;
            const std::size_t x1 = (gc + 1) * region_w / grid_cols;
            std::uint64_t acc = 0;
            for (std::size_t y = y0; y < y1; ++y) {
                acc += row_sum_avx2(img + y * stride + x0, x1 - x0);
            }
            sums[gr * grid_cols + gc] = acc;
        }
    }
}

}  // namespace

const KernelTable avx2_kernels{iou_row_avx2, ciou_row_avx2, block_sums_avx2,
                               "avx2"};

}  // namespace lanewatch::kernels

#endif  // x86_64
