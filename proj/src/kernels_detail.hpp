#pragma once

// Per-element reference expressions shared by the scalar kernels and the
// AVX2 tail loops. The vector bodies mirror these operation-for-operation;
// keep evaluation order in sync or the equivalence tests will catch it.

#include <algorithm>
#include <cmath>

#include "lanewatch/kernels.hpp"

namespace lanewatch::kernels::detail {

inline constexpr double kFourOverPiSq = 4.0 / (M_PI * M_PI);

inline double iou_one(double ax, double ay, double aw, double ah,
                      double bx, double by, double bw, double bh) {
    const double ix1 = std::max(ax, bx);
    const double iy1 = std::max(ay, by);
    const double ix2 = std::min(ax + aw, bx + bw);
    const double iy2 = std::min(ay + ah, by + bh);
    const double iw = std::max(0.0, ix2 - ix1);
    const double ih = std::max(0.0, iy2 - iy1);
    const double inter = iw * ih;
    const double uni = (aw * ah + bw * bh) - inter;
    return inter / uni;
}

inline double ciou_one(double tx, double ty, double tw, double th,
                       double t_atan, double dx, double dy, double dw,
                       double dh, double d_atan, CenterNormMode mode) {
    const double iou = iou_one(tx, ty, tw, th, dx, dy, dw, dh);
    const double tcx = tx + 0.5 * tw;
    const double tcy = ty + 0.5 * th;
    const double dcx = dx + 0.5 * dw;
    const double dcy = dy + 0.5 * dh;
    const double ex = dcx - tcx;
    const double ey = dcy - tcy;
    const double rho2 = ex * ex + ey * ey;
    double c2;
    if (mode == CenterNormMode::track_diagonal) {
        c2 = tw * tw + th * th;
    } else {
        const double ew = std::max(tx + tw, dx + dw) - std::min(tx, dx);
        const double eh = std::max(ty + th, dy + dh) - std::min(ty, dy);
        c2 = ew * ew + eh * eh;
    }
    const double dist = rho2 / c2;
    const double dv = d_atan - t_atan;
    const double v = kFourOverPiSq * (dv * dv);
    const double denom = (1.0 - iou) + v;
    const double alpha = (iou >= 0.5 && denom > 0.0) ? v / denom : 0.0;
    return ((1.0 - iou) + dist) + alpha * v;
}

}  // namespace lanewatch::kernels::detail
