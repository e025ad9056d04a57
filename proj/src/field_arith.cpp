#include "qps/field_arith.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qps {

namespace {

bool is_odd_prime(int d) {
    if (d < 3 || d % 2 == 0) return false;
    for (int f = 3; f * f <= d; f += 2) {
        if (d % f == 0) return false;
    }
    return true;
}

}  // namespace

PrimeDim::PrimeDim(int d, int max_dim) : d_(d) {
    if (!is_odd_prime(d)) {
        throw std::invalid_argument("unsupported dimension d=" + std::to_string(d) +
                                    ": d must be an odd prime (3, 5, 7, ...)");
    }
    if (d > max_dim) {
        throw std::invalid_argument("unsupported dimension d=" + std::to_string(d) +
                                    ": exceeds the configured maximum " + std::to_string(max_dim));
    }
    half_inv_ = (d + 1) / 2;  // 2 * (d+1)/2 = d + 1 = 1 mod d
}

PrimeDim make_prime_dim(int d, int max_dim) { return PrimeDim(d, max_dim); }

PhaseVector::PhaseVector(const PrimeDim& dim, std::vector<int> coords) : coords_(std::move(coords)) {
    if (coords_.empty() || coords_.size() % 2 != 0) {
        throw std::invalid_argument("PhaseVector needs a nonempty even-length coordinate list");
    }
    for (int& c : coords_) c = dim.reduce(c);
}

PhaseVector PhaseVector::single(const PrimeDim& dim, PhasePoint p) {
    return PhaseVector(dim, {p.m, p.n});
}

int symplectic(const PrimeDim& dim, std::span<const int> mu, std::span<const int> nu) {
    if (mu.size() != nu.size() || mu.size() % 2 != 0) {
        throw std::invalid_argument("symplectic: coordinate lists must have equal even length");
    }
    std::int64_t acc = 0;
    for (std::size_t a = 0; a < mu.size(); a += 2) {
        acc += static_cast<std::int64_t>(mu[a]) * nu[a + 1] - static_cast<std::int64_t>(mu[a + 1]) * nu[a];
    }
    return dim.reduce(acc);
}

int symplectic(const PrimeDim& dim, const PhaseVector& mu, const PhaseVector& nu) {
    return symplectic(dim, mu.coords(), nu.coords());
}

std::complex<double> omega_power(const PrimeDim& dim, std::int64_t exponent) {
    const int e = dim.reduce(exponent);
    return std::polar(1.0, 2.0 * std::numbers::pi * e / dim.value());
}

std::vector<std::complex<double>> omega_table(const PrimeDim& dim) {
    std::vector<std::complex<double>> table(static_cast<std::size_t>(dim.value()));
    for (int e = 0; e < dim.value(); ++e) table[static_cast<std::size_t>(e)] = omega_power(dim, e);
    return table;
}

}  // namespace qps
