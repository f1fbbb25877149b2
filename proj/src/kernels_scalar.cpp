#include <cmath>

#include "kernels_detail.hpp"
#include "lanewatch/kernels.hpp"

namespace lanewatch::kernels {

void BoxBatch::clear() {
    x.clear();
    y.clear();
    w.clear();
    h.clear();
    atan_aspect.clear();
}

void BoxBatch::push_back(const BBox& b) {
    x.push_back(b.x);
    y.push_back(b.y);
    w.push_back(b.w);
    h.push_back(b.h);
    atan_aspect.push_back(std::atan(b.w / b.h));
}

namespace {

void iou_row_scalar(const BBox& a, const BoxBatch& boxes, double* out) {
    for (std::size_t i = 0; i < boxes.size(); ++i) {
        out[i] = detail::iou_one(a.x, a.y, a.w, a.h, boxes.x[i], boxes.y[i],
                                 boxes.w[i], boxes.h[i]);
    }
}

void ciou_row_scalar(const BBox& trk, double trk_atan_aspect,
                     const BoxBatch& dets, CenterNormMode mode, double* out) {
    for (std::size_t i = 0; i < dets.size(); ++i) {
        out[i] = detail::ciou_one(trk.x, trk.y, trk.w, trk.h, trk_atan_aspect,
                                  dets.x[i], dets.y[i], dets.w[i], dets.h[i],
                                  dets.atan_aspect[i], mode);
    }
}

void block_sums_scalar(const std::uint8_t* img, std::size_t stride,
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
                const std::uint8_t* row = img + y * stride;
                for (std::size_t x = x0; x < x1; ++x) acc += row[x];
            }
            sums[gr * grid_cols + gc] = acc;
        }
    }
}

}  // namespace

const KernelTable scalar_kernels{iou_row_scalar, ciou_row_scalar,
                                 block_sums_scalar, "scalar"};

}  // namespace lanewatch::kernels
