#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qps {

// Validated odd-prime Hilbert-space dimension with the cached inverse of 2.
// Construction rejects anything that is not an odd prime <= max_dim.
class PrimeDim {
public:
    static constexpr int kDefaultMaxDim = 11;

    explicit PrimeDim(int d, int max_dim = kDefaultMaxDim);

    int value() const { return d_; }
    int half_inv() const { return half_inv_; }

    // Canonical representative of x in [0, d).
    int reduce(std::int64_t x) const {
        int r = static_cast<int>(x % d_);
        return r < 0 ? r + d_ : r;
    }

    // Representative in (-d/2, d/2], the signed reading of a lattice shift.
    int reduce_signed(std::int64_t x) const {
        int r = reduce(x);
        return 2 * r > d_ ? r - d_ : r;
    }

    friend bool operator==(const PrimeDim&, const PrimeDim&) = default;

private:
    int d_;
    int half_inv_;
};

PrimeDim make_prime_dim(int d, int max_dim = PrimeDim::kDefaultMaxDim);

struct PhasePoint {
    int m = 0;
    int n = 0;
    friend bool operator==(const PhasePoint&, const PhasePoint&) = default;
};

// Point of the composite lattice (Z_d)^{2n}, coords ordered (m1,n1,m2,n2,...).
// Coordinates are stored as canonical representatives in [0, d).
class PhaseVector {
public:
    PhaseVector(const PrimeDim& dim, std::vector<int> coords);
    static PhaseVector single(const PrimeDim& dim, PhasePoint p);

    int n_qudits() const { return static_cast<int>(coords_.size()) / 2; }
    std::span<const int> coords() const { return coords_; }
    int m(int qudit) const { return coords_[2 * static_cast<std::size_t>(qudit)]; }
    int n(int qudit) const { return coords_[2 * static_cast<std::size_t>(qudit) + 1]; }

    friend bool operator==(const PhaseVector&, const PhaseVector&) = default;

private:
    std::vector<int> coords_;
};

// Discrete symplectic form sum_a (m_a n'_a - n_a m'_a) mod d.
int symplectic(const PrimeDim& dim, std::span<const int> mu, std::span<const int> nu);
int symplectic(const PrimeDim& dim, const PhaseVector& mu, const PhaseVector& nu);

// exp(2 pi i e / d) with the exponent reduced mod d first. All omega phase
// bookkeeping is done on integer exponents and converted to a complex number
// only at this final step.
std::complex<double> omega_power(const PrimeDim& dim, std::int64_t exponent);

// Table of omega_power(dim, e) for e in [0, d).
std::vector<std::complex<double>> omega_table(const PrimeDim& dim);

}  // namespace qps
