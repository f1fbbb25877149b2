#include "lanewatch/kalman.hpp"

#include <algorithm>
#include <cmath>

namespace lanewatch {

namespace {

using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat8 = Eigen::Matrix<double, 8, 8>;
using Vec4 = Eigen::Matrix<double, 4, 1>;
using Mat4 = Eigen::Matrix<double, 4, 4>;
using Mat48 = Eigen::Matrix<double, 4, 8>;

Mat8 motion_matrix() {
    Mat8 f = Mat8::Identity();
    for (int i = 0; i < 4; ++i) f(i, i + 4) = 1.0;
    return f;
}

Vec8 process_noise_std(double h) {
    const double wp = KalmanFilter::kStdWeightPosition;
    const double wv = KalmanFilter::kStdWeightVelocity;
    Vec8 std;
    std << wp * h, wp * h, 1e-2, wp * h, wv * h, wv * h, 1e-5, wv * h;
    return std;
}

Vec4 measurement_noise_std(double h) {
    const double wp = KalmanFilter::kStdWeightPosition;
    Vec4 std;
    std << wp * h, wp * h, 1e-1, wp * h;
    return std;
}

Vec4 bbox_to_measurement(const BBox& b) {
    Vec4 z;
    z << b.cx(), b.cy(), b.aspect(), b.h;
    return z;
}

}  // namespace

BBox KalmanState::to_bbox() const {
    // Long-coasting tracks can drift to non-positive extent; clamp so the
    // derived box always satisfies the BBox invariants.
    const double h = std::max(mean(3), 1.0);
    const double w = std::max(mean(2) * h, 1.0);
    return BBox{mean(0) - 0.5 * w, mean(1) - 0.5 * h, w, h};
}

KalmanState KalmanFilter::initiate(const BBox& measurement) {
    KalmanState state;
    state.mean.head<4>() = bbox_to_measurement(measurement);
    const double h = measurement.h;
    Vec8 std;
    std << 2 * kStdWeightPosition * h, 2 * kStdWeightPosition * h, 1e-2,
        2 * kStdWeightPosition * h, 10 * kStdWeightVelocity * h,
        10 * kStdWeightVelocity * h, 1e-5, 10 * kStdWeightVelocity * h;
    state.covariance = std.cwiseProduct(std).asDiagonal();
    return state;
}

void KalmanFilter::predict(KalmanState& state, int steps) {
    static const Mat8 f = motion_matrix();
    for (int s = 0; s < steps; ++s) {
        const Vec8 q_std = process_noise_std(state.mean(3));
        const Mat8 q = q_std.cwiseProduct(q_std).asDiagonal();
        state.mean = f * state.mean;
        state.covariance = f * state.covariance * f.transpose() + q;
    }
}

void KalmanFilter::update(KalmanState& state, const BBox& measurement) {
    static const Mat48 h_mat = [] {
        Mat48 h = Mat48::Zero();
        h.leftCols<4>() = Mat4::Identity();
        return h;
    }();
    const Vec4 r_std = measurement_noise_std(state.mean(3));
    const Mat4 r = r_std.cwiseProduct(r_std).asDiagonal();

    const Vec4 innovation = bbox_to_measurement(measurement) - h_mat * state.mean;
    const Mat4 s = h_mat * state.covariance * h_mat.transpose() + r;
    const Eigen::Matrix<double, 8, 4> gain =
        state.covariance * h_mat.transpose() * s.inverse();

    state.mean += gain * innovation;
    state.covariance -= gain * s * gain.transpose();
    state.covariance = 0.5 * (state.covariance + state.covariance.transpose()).eval();
}

}  // namespace lanewatch
