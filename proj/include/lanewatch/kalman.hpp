#pragma once

#include <Eigen/Dense>

#include "lanewatch/types.hpp"

namespace lanewatch {

/// Constant-velocity filter state over (cx, cy, a, h) and their per-frame
/// velocities, a = w/h. SORT/DeepSort state convention; observation and
/// process noise scale with the object's pixel height.
struct KalmanState {
    Eigen::Matrix<double, 8, 1> mean = Eigen::Matrix<double, 8, 1>::Zero();
    Eigen::Matrix<double, 8, 8> covariance = Eigen::Matrix<double, 8, 8>::Zero();

    BBox to_bbox() const;
};

class KalmanFilter {
public:
    static constexpr double kStdWeightPosition = 1.0 / 20.0;
    static constexpr double kStdWeightVelocity = 1.0 / 160.0;

    static KalmanState initiate(const BBox& measurement);

    /// Advances the per-frame motion model `steps` times; the process noise
    /// is re-derived from the current height each step, so covariance grows
    /// per elapsed frame rather than per call.
    static void predict(KalmanState& state, int steps);

    static void update(KalmanState& state, const BBox& measurement);
};

}  // namespace lanewatch
