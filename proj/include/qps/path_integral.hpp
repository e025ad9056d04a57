#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qps/propagator.hpp"

namespace qps {

// Time slicing of [0, t] into N equal steps with fixed endpoints.
struct PathConfig {
    int num_slices = 1;       // N >= 1
    double total_time = 0.0;  // dimensionless chi * t
    PhaseVector initial;
    PhaseVector final_point;

    double tau() const { return total_time / num_slices; }
};

// Action of one (gamma, xi) path: the symplectic part is an exact integer
// mod d entering as -(4 pi / d) * exponent, the Hamiltonian part is real and
// already carries the tau factor.
struct DiscreteAction {
    int symplectic_exponent = 0;
    double hamiltonian_part = 0.0;

    double phase(const PrimeDim& dim) const;
    Complex weight(const PrimeDim& dim) const;
};

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// Single-step kernel from the fluctuation sum over the lattice with
// H-differences H_W(final + t) - H_W(initial - t). Exact (for any tau) when
// the Hamiltonian is diagonal in a stabilizer basis. The midpoint variant
// evaluates H_W at (final + initial)/2 +- t and produces the identical
// kernel, term-reordered.
WignerKernel short_time_kernel(const RealVector& h_w, double tau, const PhaseSpace& space,
                               bool midpoint = false, KernelDiagnostics* diag = nullptr);

// Production path sum: N-fold composition of the single-step kernel.
WignerKernel path_sum_kernel(const RealVector& h_w, int num_slices, double total_time,
                             const PhaseSpace& space);

// Brute-force sum over all (d^{2n})^{2N-1} intermediate-point and fluctuation
// assignments for one endpoint pair. Throws BudgetExceeded when the term
// count exceeds max_terms; compose short-time kernels instead in that case.
Complex path_sum_entry(const RealVector& h_w, const PathConfig& cfg, const PhaseSpace& space,
                       std::uint64_t max_terms = 200'000'000);

std::uint64_t path_sum_term_count(const PathConfig& cfg, const PhaseSpace& space);

// Discrete action of an explicit path: gamma has N+1 points (fixed
// endpoints), xi has N.
DiscreteAction discrete_action(std::span<const PhaseVector> gamma, std::span<const PhaseVector> xi,
                               const RealVector& h_w, double tau, const PhaseSpace& space);

// Boundary-term sector: d^{-2n} exp[i t (H_W(final) - H_W(initial)) / N].
// Non-real at finite N, uniform d^{-2n} as N grows.
ComplexMatrix xi_zero_kernel(const RealVector& h_w, int num_slices, double total_time,
                             const PhaseSpace& space);

// Sup-norm error of the symbol-level short-time approximation against the
// exact evolution symbol, per tau^2, together with the analytic limit
// (1/2) ||H_W * H_W - H_W^2||_inf from the twisted convolution.
struct ShortTimeErrorReport {
    std::vector<double> taus;
    std::vector<double> ratios;
    double limit_constant = 0.0;
};

ShortTimeErrorReport short_time_error(const ComplexMatrix& h, std::span<const double> taus,
                                      const PhaseSpace& space);

}  // namespace qps
