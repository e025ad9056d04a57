#include "qps/propagator.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace qps {

WignerKernel::WignerKernel(PhaseSpace s, RealMatrix e) : space(std::move(s)), entries(std::move(e)) {
    if (entries.rows() != space.n_sites() || entries.cols() != space.n_sites()) {
        throw std::invalid_argument("WignerKernel: entry block does not match the lattice");
    }
}

WeylSymbol twisted_convolution(const WeylSymbol& g, const WeylSymbol& h) {
    if (!(g.space == h.space)) {
        throw std::invalid_argument("twisted_convolution: symbols live on different lattices");
    }
    const PhaseSpace& space = g.space;
    const auto w = omega_table(space.dim());
    const int half = space.dim().half_inv();

    ComplexVector out(space.n_sites());
    for (int s = 0; s < space.n_sites(); ++s) {
        Complex acc = 0.0;
        for (int sp = 0; sp < space.n_sites(); ++sp) {
            const int e = space.dim().reduce(static_cast<std::int64_t>(half) *
                                             space.symplectic_indexed(sp, s));
            acc += w[static_cast<std::size_t>(e)] * g.values(space.add(s, sp)) * h.values(space.neg(sp));
        }
        out(s) = acc / static_cast<double>(space.hilbert_dim());
    }
    return WeylSymbol(space, std::move(out));
}

namespace detail {

ComplexMatrix fourier_kernel_raw(const ComplexVector& u_w, const PhaseSpace& space,
                                 int symplectic_scale) {
    if (u_w.size() != space.n_sites()) {
        throw std::invalid_argument("fourier_kernel_raw: symbol does not match the lattice");
    }
    const auto w = omega_table(space.dim());
    const int sites = space.n_sites();
    const int nq = space.n_qudits();
    const double norm = 1.0 / static_cast<double>(sites);

    // Exponent scale * sum_a t_m dn + 2 * sum_a t_n dm; at the production
    // value -2 this is -2 (t ^ delta), and only that value keeps the phase
    // pairing that makes every entry real.
    ComplexMatrix raw(sites, sites);
    for (int fin = 0; fin < sites; ++fin) {
        for (int ini = 0; ini < sites; ++ini) {
            const int delta = space.sub(fin, ini);
            const auto dc = space.coords_of(delta);
            Complex acc = 0.0;
            for (int t = 0; t < sites; ++t) {
                const auto tc = space.coords_of(t);
                std::int64_t m_part = 0, n_part = 0;
                for (int q = 0; q < nq; ++q) {
                    m_part += static_cast<std::int64_t>(tc[2 * static_cast<std::size_t>(q)]) *
                              dc[2 * static_cast<std::size_t>(q) + 1];
                    n_part += static_cast<std::int64_t>(tc[2 * static_cast<std::size_t>(q) + 1]) *
                              dc[2 * static_cast<std::size_t>(q)];
                }
                const int e = space.dim().reduce(symplectic_scale * m_part + 2 * n_part);
                acc += w[static_cast<std::size_t>(e)] * u_w(space.add(ini, t)) *
                       std::conj(u_w(space.sub(fin, t)));
            }
            raw(fin, ini) = norm * acc;
        }
    }
    return raw;
}

RealMatrix checked_real_cast(const ComplexMatrix& raw, double tol, KernelDiagnostics* diag) {
    const double max_imag = raw.size() == 0 ? 0.0 : raw.imag().cwiseAbs().maxCoeff();
    if (diag != nullptr) diag->max_imag = max_imag;
    if (max_imag > tol) {
        throw std::runtime_error("kernel reality check failed: max |Im| = " + std::to_string(max_imag));
    }
    return raw.real();
}

}  // namespace detail

namespace {

void fill_column_diagnostics(const RealMatrix& entries, KernelDiagnostics* diag) {
    if (diag == nullptr) return;
    double worst = 0.0;
    for (Eigen::Index c = 0; c < entries.cols(); ++c) {
        worst = std::max(worst, std::abs(entries.col(c).sum() - 1.0));
    }
    diag->max_column_sum_error = worst;
}

}  // namespace

WignerKernel kernel_trace_form(const ComplexMatrix& u, const PhaseSpace& space,
                               KernelDiagnostics* diag) {
    if (u.rows() != space.hilbert_dim() || u.cols() != space.hilbert_dim()) {
        throw std::invalid_argument("kernel_trace_form: unitary does not match d^n");
    }
    require_unitary(u);

    const PhasePointOperatorSet single(space.dim());
    const int sites = space.n_sites();
    std::vector<ComplexMatrix> point_ops(static_cast<std::size_t>(sites));
    std::vector<ComplexMatrix> evolved(static_cast<std::size_t>(sites));
    for (int s = 0; s < sites; ++s) {
        point_ops[static_cast<std::size_t>(s)] = composite_phase_point_operator(single, space, s);
        evolved[static_cast<std::size_t>(s)] =
            u * point_ops[static_cast<std::size_t>(s)] * u.adjoint();
    }

    const double norm = 1.0 / static_cast<double>(space.hilbert_dim());
    ComplexMatrix raw(sites, sites);
    for (int fin = 0; fin < sites; ++fin) {
        const ComplexMatrix at = point_ops[static_cast<std::size_t>(fin)].transpose();
        for (int ini = 0; ini < sites; ++ini) {
            raw(fin, ini) = norm * (at.cwiseProduct(evolved[static_cast<std::size_t>(ini)])).sum();
        }
    }
    RealMatrix entries = detail::checked_real_cast(raw, kKernelImagTol, diag);
    fill_column_diagnostics(entries, diag);
    return WignerKernel(space, std::move(entries));
}

WignerKernel kernel_fourier_form(const ComplexMatrix& u, const PhaseSpace& space,
                                 KernelDiagnostics* diag) {
    if (u.rows() != space.hilbert_dim() || u.cols() != space.hilbert_dim()) {
        throw std::invalid_argument("kernel_fourier_form: unitary does not match d^n");
    }
    require_unitary(u);
    const ComplexVector u_w = phase_space_function(weyl_symbol(u, space));
    RealMatrix entries =
        detail::checked_real_cast(detail::fourier_kernel_raw(u_w, space, -2), kKernelImagTol, diag);
    fill_column_diagnostics(entries, diag);
    return WignerKernel(space, std::move(entries));
}

ComplexMatrix weyl_space_kernel(const ComplexMatrix& u, const PrimeDim& dim) {
    const PhaseSpace space(dim, 1);
    if (u.rows() != space.hilbert_dim() || u.cols() != space.hilbert_dim()) {
        throw std::invalid_argument("weyl_space_kernel: unitary does not match d");
    }
    require_unitary(u);
    const WeylSymbol sym = weyl_symbol(u, space);
    const auto w = omega_table(dim);
    const int d = dim.value();
    const int sites = space.n_sites();
    const double norm = 1.0 / static_cast<double>(sites);

    ComplexMatrix out(sites, sites);
    for (int kp = 0; kp < d; ++kp) {
        for (int jp = 0; jp < d; ++jp) {
            const int row = kp * d + jp;
            for (int k = 0; k < d; ++k) {
                for (int j = 0; j < d; ++j) {
                    const int col = k * d + j;
                    Complex acc = 0.0;
                    for (int kpp = 0; kpp < d; ++kpp) {
                        for (int jpp = 0; jpp < d; ++jpp) {
                            const std::int64_t e =
                                static_cast<std::int64_t>(dim.half_inv()) *
                                (static_cast<std::int64_t>(kpp) * (jp + j) -
                                 static_cast<std::int64_t>(jpp) * (kp + k));
                            acc += w[static_cast<std::size_t>(dim.reduce(e))] *
                                   sym.values(((kp + kpp) % d) * d + (jp + jpp) % d) *
                                   std::conj(sym.values(((kpp + k) % d) * d + (jpp + j) % d));
                        }
                    }
                    out(row, col) = norm * acc;
                }
            }
        }
    }
    return out;
}

WignerKernel wigner_kernel_from_weyl_space(const ComplexMatrix& weyl_kernel, const PrimeDim& dim,
                                           KernelDiagnostics* diag) {
    const int d = dim.value();
    const int sites = d * d;
    if (weyl_kernel.rows() != sites || weyl_kernel.cols() != sites) {
        throw std::invalid_argument("wigner_kernel_from_weyl_space: kernel does not match d^2");
    }
    const auto w = omega_table(dim);

    // inv[mu, (k,j)] = omega^{jn - km}; fwd[(k,j), mu] = omega^{km - jn}
    ComplexMatrix inv(sites, sites), fwd(sites, sites);
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            const int mu = m * d + n;
            for (int k = 0; k < d; ++k) {
                for (int j = 0; j < d; ++j) {
                    const int kj = k * d + j;
                    const std::int64_t e =
                        static_cast<std::int64_t>(j) * n - static_cast<std::int64_t>(k) * m;
                    inv(mu, kj) = w[static_cast<std::size_t>(dim.reduce(e))];
                    fwd(kj, mu) = w[static_cast<std::size_t>(dim.reduce(-e))];
                }
            }
        }
    }
    ComplexMatrix raw = (inv * weyl_kernel * fwd) / static_cast<double>(sites);
    RealMatrix entries = detail::checked_real_cast(raw, kKernelImagTol, diag);
    fill_column_diagnostics(entries, diag);
    return WignerKernel(PhaseSpace(dim, 1), std::move(entries));
}

WignerFunction apply_kernel(const WignerKernel& g, const WignerFunction& w) {
    if (!(g.space == w.space)) {
        throw std::invalid_argument("apply_kernel: kernel and function live on different lattices");
    }
    return WignerFunction(w.space, g.entries * w.values);
}

WignerKernel compose_kernels(const WignerKernel& later, const WignerKernel& earlier) {
    if (!(later.space == earlier.space)) {
        throw std::invalid_argument("compose_kernels: kernels live on different lattices");
    }
    return WignerKernel(later.space, later.entries * earlier.entries);
}

bool is_permutation_kernel(const WignerKernel& g, double tol) {
    const int sites = g.space.n_sites();
    for (int c = 0; c < sites; ++c) {
        int hits = 0;
        for (int r = 0; r < sites; ++r) {
            const double v = g.entries(r, c);
            if (std::abs(v - 1.0) <= tol) {
                ++hits;
            } else if (std::abs(v) > tol) {
                return false;
            }
        }
        if (hits != 1) return false;
    }
    return true;
}

}  // namespace qps
