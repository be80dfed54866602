#pragma once

#include <Eigen/Core>

#include "bq/biquaternion.hpp"

namespace bq {

/// Algebra isomorphism onto 2x2 complex matrices with e_k -> -i*sigma_k
/// (sigma_k the Pauli matrices). Under this map the semi-norm becomes the
/// determinant and rotors the unit-determinant group, which makes the matrix
/// side a convenient independent oracle for products and norms.
inline Eigen::Matrix2cd to_matrix(const Biquaternion& q) {
    const cplx i(0.0, 1.0);
    Eigen::Matrix2cd m;
    m(0, 0) = q.w - i * q.z;
    m(0, 1) = -i * q.x - q.y;
    m(1, 0) = -i * q.x + q.y;
    m(1, 1) = q.w + i * q.z;
    return m;
}

/// Inverse of to_matrix; total on 2x2 complex matrices.
inline Biquaternion from_matrix(const Eigen::Matrix2cd& m) {
    const cplx i(0.0, 1.0);
    return {(m(0, 0) + m(1, 1)) / 2.0,
            i * (m(0, 1) + m(1, 0)) / 2.0,
            (m(1, 0) - m(0, 1)) / 2.0,
            i * (m(0, 0) - m(1, 1)) / 2.0};
}

} // namespace bq
