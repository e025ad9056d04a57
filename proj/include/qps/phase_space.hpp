#pragma once

#include <span>
#include <vector>

#include "qps/field_arith.hpp"

namespace qps {

// Flat indexing of the d^{2n} phase-space lattice. The packing is
//   index = sum_a (m_a * d + n_a) * d^{2(n-a)}
// i.e. subsystem-1-major with m-major digits inside each qudit. The same
// packing is used for Weyl-symbol tuples (k_a, j_a).
class PhaseSpace {
public:
    PhaseSpace(PrimeDim dim, int n_qudits);

    const PrimeDim& dim() const { return dim_; }
    int d() const { return dim_.value(); }
    int n_qudits() const { return n_qudits_; }
    int n_coords() const { return 2 * n_qudits_; }
    int n_sites() const { return n_sites_; }
    int hilbert_dim() const { return hilbert_dim_; }

    int index_of(std::span<const int> coords) const;
    int index_of(const PhaseVector& p) const { return index_of(p.coords()); }
    std::span<const int> coords_of(int index) const;
    PhaseVector point_at(int index) const;

    // Digit-wise mod-d arithmetic on packed indices.
    int add(int a, int b) const;
    int sub(int a, int b) const;
    int neg(int a) const;
    int scale(int a, int factor) const;

    // Symplectic form of two packed points, reduced mod d.
    int symplectic_indexed(int a, int b) const;

    friend bool operator==(const PhaseSpace& lhs, const PhaseSpace& rhs) {
        return lhs.dim_ == rhs.dim_ && lhs.n_qudits_ == rhs.n_qudits_;
    }

private:
    PrimeDim dim_;
    int n_qudits_;
    int n_sites_;
    int hilbert_dim_;
    std::vector<int> coords_;  // n_sites * 2n cached digits
};

}  // namespace qps
