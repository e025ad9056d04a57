#pragma once

#include <doctest.h>

#include <numbers>
#include <random>

#include "qps/random_ops.hpp"

namespace qps::test {

inline constexpr double kPi = std::numbers::pi;

inline double max_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

inline double max_diff(const RealMatrix& a, const RealMatrix& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

inline double max_diff(const ComplexVector& a, const ComplexVector& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

inline double max_diff(const RealVector& a, const RealVector& b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qps::test
