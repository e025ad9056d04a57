#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qps/path_integral.hpp"

namespace qps {

// Hamiltonian with phase-space function affine in the coordinates,
// H_W(mu) = sum_a (a_a m_a + b_a n_a) + c on representatives in [0, d).
struct LinearHamiltonian {
    std::vector<std::pair<double, double>> coeffs;  // (a_a, b_a) per qudit
    double offset = 0.0;

    int n_qudits() const { return static_cast<int>(coeffs.size()); }
    ComplexMatrix to_operator(const PrimeDim& dim) const;  // sum_a a x_a + b p_a + c
    RealVector lattice_function(const PhaseSpace& space) const;
};

enum class CommensurabilityClass { kStrict, kWeakOdd, kIncommensurate };
const char* to_string(CommensurabilityClass c);

// k_a = a d tau / (pi hbar) and the b counterpart. Strict iff every k is an
// even integer; all-integer with any odd k is the half-Pauli regime. Under
// strict commensurability the step is the lattice shift
// (dm, dn) = (k_b/2, -k_a/2) mod d per qudit. The offset never reaches the
// kernel (it cancels in H_W differences) and is carried as inert metadata.
struct CommensurabilityReport {
    std::vector<double> k_a;
    std::vector<double> k_b;
    CommensurabilityClass classification = CommensurabilityClass::kIncommensurate;
    std::vector<PhasePoint> shift;  // signed representatives in (-d/2, d/2], set when strict
    double offset = 0.0;
};

CommensurabilityReport classify_commensurability(const LinearHamiltonian& h, double tau,
                                                 const PrimeDim& dim, double integer_tol = 1e-9);

// Builds the exact single-step kernel for exp(-i tau H) and checks it against
// the classification: strict steps must be the predicted permutation, the
// other classes must spread over the lattice.
struct ShiftKernelCheck {
    CommensurabilityReport report;
    bool kernel_is_permutation = false;
    bool matches_predicted_shift = false;  // meaningful only for strict steps
    bool consistent = false;               // classification and kernel agree
    WignerKernel kernel;
};

ShiftKernelCheck verify_shift_kernel(const LinearHamiltonian& h, double tau, const PrimeDim& dim);

}  // namespace qps
