#pragma once

#include <utility>
#include <vector>

#include "qps/field_arith.hpp"
#include "qps/linalg.hpp"
#include "qps/phase_space.hpp"

namespace qps {

// Discrete Fourier transform, entries omega^{mn} / sqrt(d). Satisfies F^4 = I.
ComplexMatrix dft_operator(const PrimeDim& dim);

struct ClockShift {
    ComplexMatrix z;  // diag(omega^0, ..., omega^{d-1})
    ComplexMatrix x;  // cyclic shift |n> -> |n+1 mod d>
};
ClockShift clock_shift(const PrimeDim& dim);

ComplexMatrix position_operator(const PrimeDim& dim);  // diag(0, ..., d-1)
ComplexMatrix momentum_operator(const PrimeDim& dim);  // F x F'

ComplexVector position_state(const PrimeDim& dim, int k);  // |x,k>
ComplexVector momentum_state(const PrimeDim& dim, int k);  // |p,k> = F |x,k>
ComplexMatrix density_from_state(const ComplexVector& psi);

// D(k,j) = omega^{-kj/2} Z^k X^j, with the exponent reduced mod d.
ComplexMatrix displacement(const PrimeDim& dim, int k, int j);

// Cached table of all d^2 displacement operators.
class DisplacementSet {
public:
    explicit DisplacementSet(const PrimeDim& dim);
    const PrimeDim& dim() const { return dim_; }
    const ComplexMatrix& at(int k, int j) const;

private:
    PrimeDim dim_;
    std::vector<ComplexMatrix> ops_;
};

// Hermitian phase-point operators A(m,n) = d^{-1} sum_{k,j} omega^{km-jn} D(k,j)'.
// Tr A = 1, Tr[A(mu')A(mu)] = d delta, sum_mu A(mu) = d I.
class PhasePointOperatorSet {
public:
    explicit PhasePointOperatorSet(const PrimeDim& dim);
    const PrimeDim& dim() const { return dim_; }
    const ComplexMatrix& at(int m, int n) const;
    const ComplexMatrix& at_site(int site) const { return ops_[static_cast<std::size_t>(site)]; }

private:
    PrimeDim dim_;
    std::vector<ComplexMatrix> ops_;
};

// Tensor product A(mu_1) x A(mu_2) x ... for a packed lattice site.
ComplexMatrix composite_phase_point_operator(const PhasePointOperatorSet& single,
                                             const PhaseSpace& space, int site);

// Weyl symbol values over (k,j)-tuples, packed like lattice points.
struct WeylSymbol {
    PhaseSpace space;
    ComplexVector values;

    WeylSymbol(PhaseSpace s, ComplexVector v);
};

// Real quasi-probability over the d^{2n} lattice; sums to 1 when built from a
// density matrix.
struct WignerFunction {
    PhaseSpace space;
    RealVector values;

    WignerFunction(PhaseSpace s, RealVector v);
    double sum() const { return values.sum(); }
};

// symbol(k,j) = Tr[A D(k,j)], with tensor-product displacement operators for
// composite systems.
WeylSymbol weyl_symbol(const ComplexMatrix& a, const PhaseSpace& space);

// A = d^{-n} sum symbol(k,j) D(k,j)'.
ComplexMatrix inverse_weyl(const WeylSymbol& sym);

// Direct phase-space function A_W(mu) = d^{-n} sum symbol(k,j) omega^{jn - km}.
ComplexVector phase_space_function(const WeylSymbol& sym);

// Phase-space function of a Hermitian operator, checked real and cast.
RealVector real_phase_space_function(const ComplexMatrix& hermitian, const PhaseSpace& space,
                                     double imag_tol = 1e-12);

// Wigner function of a density matrix (trace 1, Hermitian); the values are
// verified real to imag_tol before the cast.
WignerFunction wigner_function(const ComplexMatrix& rho, const PhaseSpace& space,
                               double imag_tol = 1e-12);

// Sum of |negative values| (sum negativity). Zero exactly on stabilizer states.
double negativity(const WignerFunction& w);

// Marginal over all qudits except `keep`; equals the Wigner function of the
// reduced density matrix.
WignerFunction marginal_qudit(const WignerFunction& w, int keep);

// rho = sum_mu W(mu) A(mu) with tensor-product phase-point operators.
ComplexMatrix reconstruct_density(const WignerFunction& w);

// Tr[rho^2] computed in phase space as d^n sum_mu W(mu)^2.
double state_purity_from_wigner(const WignerFunction& w);

}  // namespace qps
