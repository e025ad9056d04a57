#pragma once

#include "qps/weyl.hpp"

namespace qps {

// Real evolution kernel over the lattice, entries[final][initial]. Kernels
// built from unitaries have unit column sums and map Wigner functions to
// Wigner functions.
struct WignerKernel {
    PhaseSpace space;
    RealMatrix entries;

    WignerKernel(PhaseSpace s, RealMatrix e);
};

struct KernelDiagnostics {
    double max_imag = 0.0;              // before the real cast
    double max_column_sum_error = 0.0;  // max |sum_final G - 1|
};

inline constexpr double kKernelImagTol = 1e-10;

// Symbol of the operator product A_g A_h (discrete Moyal star composition).
WeylSymbol twisted_convolution(const WeylSymbol& g, const WeylSymbol& h);

// Reference form: G(mu', mu) = d^{-n} Tr[A(mu') U A(mu) U'].
WignerKernel kernel_trace_form(const ComplexMatrix& u, const PhaseSpace& space,
                               KernelDiagnostics* diag = nullptr);

// Production form: fluctuation sum over the lattice with the phase-space
// symbol of U. Agrees with the trace form to working precision.
WignerKernel kernel_fourier_form(const ComplexMatrix& u, const PhaseSpace& space,
                                 KernelDiagnostics* diag = nullptr);

// Kernel acting on Weyl symbols, single qudit: sym_t = G~ sym_0.
ComplexMatrix weyl_space_kernel(const ComplexMatrix& u, const PrimeDim& dim);

// Fourier-inverts both index pairs of a Weyl-space kernel back to the direct
// lattice; consistency route for the forms above.
WignerKernel wigner_kernel_from_weyl_space(const ComplexMatrix& weyl_kernel, const PrimeDim& dim,
                                           KernelDiagnostics* diag = nullptr);

WignerFunction apply_kernel(const WignerKernel& g, const WignerFunction& w);

// G(t2 + t1) = later * earlier as lattice matrices.
WignerKernel compose_kernels(const WignerKernel& later, const WignerKernel& earlier);

bool is_permutation_kernel(const WignerKernel& g, double tol = kKernelImagTol);

namespace detail {

// Fluctuation-sum kernel before the reality cast. symplectic_scale is the
// integer multiplying the symplectic phase exponent; the production value is
// -2 and anything else breaks the phase cancellations (fault-injection hook
// for the verification suite's negative control).
ComplexMatrix fourier_kernel_raw(const ComplexVector& u_w, const PhaseSpace& space,
                                 int symplectic_scale = -2);

// Checks max |Im| <= tol, fills diagnostics, returns the real part.
RealMatrix checked_real_cast(const ComplexMatrix& raw, double tol, KernelDiagnostics* diag);

}  // namespace detail

}  // namespace qps
