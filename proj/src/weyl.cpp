#include "qps/weyl.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qps {

namespace {

void require_hilbert_dim(const ComplexMatrix& a, const PhaseSpace& space, const char* what) {
    if (a.rows() != space.hilbert_dim() || a.cols() != space.hilbert_dim()) {
        throw std::invalid_argument(std::string(what) + ": operator dimension " +
                                    std::to_string(a.rows()) + " does not match d^n = " +
                                    std::to_string(space.hilbert_dim()));
    }
}

// Decomposes a composite Hilbert index into per-qudit digits, subsystem-1-major.
void hilbert_digits(int index, int d, int n_qudits, int* out) {
    for (int q = n_qudits - 1; q >= 0; --q) {
        out[q] = index % d;
        index /= d;
    }
}

int hilbert_index(const int* digits, int d, int n_qudits) {
    int idx = 0;
    for (int q = 0; q < n_qudits; ++q) idx = idx * d + digits[q];
    return idx;
}

}  // namespace

ComplexMatrix dft_operator(const PrimeDim& dim) {
    const int d = dim.value();
    const auto w = omega_table(dim);
    const double norm = 1.0 / std::sqrt(static_cast<double>(d));
    ComplexMatrix f(d, d);
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            f(m, n) = norm * w[static_cast<std::size_t>(dim.reduce(static_cast<std::int64_t>(m) * n))];
        }
    }
    return f;
}

ClockShift clock_shift(const PrimeDim& dim) {
    const int d = dim.value();
    const auto w = omega_table(dim);
    ComplexMatrix z = ComplexMatrix::Zero(d, d);
    ComplexMatrix x = ComplexMatrix::Zero(d, d);
    for (int n = 0; n < d; ++n) {
        z(n, n) = w[static_cast<std::size_t>(n)];
        x((n + 1) % d, n) = 1.0;
    }
    return {std::move(z), std::move(x)};
}

ComplexMatrix position_operator(const PrimeDim& dim) {
    const int d = dim.value();
    ComplexMatrix x = ComplexMatrix::Zero(d, d);
    for (int n = 0; n < d; ++n) x(n, n) = static_cast<double>(n);
    return x;
}

ComplexMatrix momentum_operator(const PrimeDim& dim) {
    const ComplexMatrix f = dft_operator(dim);
    return f * position_operator(dim) * f.adjoint();
}

ComplexVector position_state(const PrimeDim& dim, int k) {
    if (k < 0 || k >= dim.value()) throw std::invalid_argument("position_state: index out of range");
    ComplexVector v = ComplexVector::Zero(dim.value());
    v(k) = 1.0;
    return v;
}

ComplexVector momentum_state(const PrimeDim& dim, int k) {
    return dft_operator(dim) * position_state(dim, k);
}

ComplexMatrix density_from_state(const ComplexVector& psi) {
    const double norm = psi.norm();
    if (norm <= 0.0) throw std::invalid_argument("density_from_state: zero vector");
    ComplexVector u = psi / norm;
    return u * u.adjoint();
}

ComplexMatrix displacement(const PrimeDim& dim, int k, int j) {
    const int d = dim.value();
    k = dim.reduce(k);
    j = dim.reduce(j);
    const auto w = omega_table(dim);
    const Complex prefactor =
        w[static_cast<std::size_t>(dim.reduce(-static_cast<std::int64_t>(k) * j * dim.half_inv()))];
    ComplexMatrix op = ComplexMatrix::Zero(d, d);
    for (int c = 0; c < d; ++c) {
        const int r = (c + j) % d;
        op(r, c) = prefactor * w[static_cast<std::size_t>(dim.reduce(static_cast<std::int64_t>(k) * r))];
    }
    return op;
}

DisplacementSet::DisplacementSet(const PrimeDim& dim) : dim_(dim) {
    const int d = dim.value();
    ops_.reserve(static_cast<std::size_t>(d) * d);
    for (int k = 0; k < d; ++k) {
        for (int j = 0; j < d; ++j) ops_.push_back(displacement(dim, k, j));
    }
}

const ComplexMatrix& DisplacementSet::at(int k, int j) const {
    const int d = dim_.value();
    return ops_[static_cast<std::size_t>(dim_.reduce(k)) * d + static_cast<std::size_t>(dim_.reduce(j))];
}

PhasePointOperatorSet::PhasePointOperatorSet(const PrimeDim& dim) : dim_(dim) {
    const int d = dim.value();
    const DisplacementSet displacements(dim);
    const auto w = omega_table(dim);
    ops_.reserve(static_cast<std::size_t>(d) * d);
    for (int m = 0; m < d; ++m) {
        for (int n = 0; n < d; ++n) {
            ComplexMatrix a = ComplexMatrix::Zero(d, d);
            for (int k = 0; k < d; ++k) {
                for (int j = 0; j < d; ++j) {
                    const int e = dim.reduce(static_cast<std::int64_t>(k) * m - static_cast<std::int64_t>(j) * n);
                    a += w[static_cast<std::size_t>(e)] * displacements.at(k, j).adjoint();
                }
            }
            ops_.push_back(a / static_cast<double>(d));
        }
    }
}

const ComplexMatrix& PhasePointOperatorSet::at(int m, int n) const {
    const int d = dim_.value();
    return ops_[static_cast<std::size_t>(dim_.reduce(m)) * d + static_cast<std::size_t>(dim_.reduce(n))];
}

ComplexMatrix composite_phase_point_operator(const PhasePointOperatorSet& single,
                                             const PhaseSpace& space, int site) {
    auto c = space.coords_of(site);
    ComplexMatrix out = single.at(c[0], c[1]);
    for (int q = 1; q < space.n_qudits(); ++q) {
        out = kron(out, single.at(c[2 * static_cast<std::size_t>(q)], c[2 * static_cast<std::size_t>(q) + 1]));
    }
    return out;
}

WeylSymbol::WeylSymbol(PhaseSpace s, ComplexVector v) : space(std::move(s)), values(std::move(v)) {
    if (values.size() != space.n_sites()) {
        throw std::invalid_argument("WeylSymbol: value count does not match the lattice");
    }
}

WignerFunction::WignerFunction(PhaseSpace s, RealVector v) : space(std::move(s)), values(std::move(v)) {
    if (values.size() != space.n_sites()) {
        throw std::invalid_argument("WignerFunction: value count does not match the lattice");
    }
}

WeylSymbol weyl_symbol(const ComplexMatrix& a, const PhaseSpace& space) {
    require_hilbert_dim(a, space, "weyl_symbol");
    const int d = space.d();
    const int nq = space.n_qudits();
    const int hd = space.hilbert_dim();
    const auto w = omega_table(space.dim());

    // Tr[A D(k,j)] walks the shifted diagonal of A; D is never materialized.
    ComplexVector values(space.n_sites());
    std::vector<int> col(static_cast<std::size_t>(nq));
    std::vector<int> row(static_cast<std::size_t>(nq));
    for (int s = 0; s < space.n_sites(); ++s) {
        auto kj = space.coords_of(s);
        std::int64_t pre = 0;
        for (int q = 0; q < nq; ++q) {
            pre -= static_cast<std::int64_t>(kj[2 * static_cast<std::size_t>(q)]) *
                   kj[2 * static_cast<std::size_t>(q) + 1];
        }
        const Complex prefactor = w[static_cast<std::size_t>(space.dim().reduce(pre * space.dim().half_inv()))];

        Complex acc = 0.0;
        for (int c = 0; c < hd; ++c) {
            hilbert_digits(c, d, nq, col.data());
            std::int64_t e = 0;
            for (int q = 0; q < nq; ++q) {
                row[static_cast<std::size_t>(q)] = (col[static_cast<std::size_t>(q)] +
                                                    kj[2 * static_cast<std::size_t>(q) + 1]) % d;
                e += static_cast<std::int64_t>(kj[2 * static_cast<std::size_t>(q)]) *
                     row[static_cast<std::size_t>(q)];
            }
            acc += a(c, hilbert_index(row.data(), d, nq)) * w[static_cast<std::size_t>(space.dim().reduce(e))];
        }
        values(s) = prefactor * acc;
    }
    return WeylSymbol(space, std::move(values));
}

ComplexMatrix inverse_weyl(const WeylSymbol& sym) {
    const PhaseSpace& space = sym.space;
    const int d = space.d();
    const int nq = space.n_qudits();
    const int hd = space.hilbert_dim();
    const auto w = omega_table(space.dim());

    ComplexMatrix a = ComplexMatrix::Zero(hd, hd);
    std::vector<int> col(static_cast<std::size_t>(nq));
    std::vector<int> row(static_cast<std::size_t>(nq));
    for (int s = 0; s < space.n_sites(); ++s) {
        auto kj = space.coords_of(s);
        std::int64_t pre = 0;
        for (int q = 0; q < nq; ++q) {
            pre -= static_cast<std::int64_t>(kj[2 * static_cast<std::size_t>(q)]) *
                   kj[2 * static_cast<std::size_t>(q) + 1];
        }
        const Complex coeff =
            sym.values(s) * w[static_cast<std::size_t>(space.dim().reduce(pre * space.dim().half_inv()))];

        // D(k,j)' places omega^{-k r} on rows r = c - j.
        for (int c = 0; c < hd; ++c) {
            hilbert_digits(c, d, nq, col.data());
            std::int64_t e = 0;
            for (int q = 0; q < nq; ++q) {
                int r = col[static_cast<std::size_t>(q)] - kj[2 * static_cast<std::size_t>(q) + 1];
                if (r < 0) r += d;
                row[static_cast<std::size_t>(q)] = r;
                e -= static_cast<std::int64_t>(kj[2 * static_cast<std::size_t>(q)]) * r;
            }
            a(hilbert_index(row.data(), d, nq), c) +=
                coeff * w[static_cast<std::size_t>(space.dim().reduce(e))];
        }
    }
    return a / static_cast<double>(hd);
}

ComplexVector phase_space_function(const WeylSymbol& sym) {
    const PhaseSpace& space = sym.space;
    const auto w = omega_table(space.dim());
    const int nq = space.n_qudits();

    ComplexVector out(space.n_sites());
    for (int site = 0; site < space.n_sites(); ++site) {
        auto mn = space.coords_of(site);
        Complex acc = 0.0;
        for (int s = 0; s < space.n_sites(); ++s) {
            auto kj = space.coords_of(s);
            std::int64_t e = 0;
            for (int q = 0; q < nq; ++q) {
                e += static_cast<std::int64_t>(kj[2 * static_cast<std::size_t>(q) + 1]) *
                         mn[2 * static_cast<std::size_t>(q) + 1] -
                     static_cast<std::int64_t>(kj[2 * static_cast<std::size_t>(q)]) *
                         mn[2 * static_cast<std::size_t>(q)];
            }
            acc += sym.values(s) * w[static_cast<std::size_t>(space.dim().reduce(e))];
        }
        out(site) = acc / static_cast<double>(space.hilbert_dim());
    }
    return out;
}

RealVector real_phase_space_function(const ComplexMatrix& hermitian, const PhaseSpace& space,
                                     double imag_tol) {
    require_hermitian(hermitian);
    const ComplexVector values = phase_space_function(weyl_symbol(hermitian, space));
    const double max_imag = values.imag().cwiseAbs().maxCoeff();
    if (max_imag > imag_tol) {
        throw std::runtime_error("real_phase_space_function: imaginary residue " +
                                 std::to_string(max_imag) + " exceeds tolerance");
    }
    return values.real();
}

WignerFunction wigner_function(const ComplexMatrix& rho, const PhaseSpace& space, double imag_tol) {
    require_hilbert_dim(rho, space, "wigner_function");
    const Complex tr = rho.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > 1e-10) {
        throw std::invalid_argument("wigner_function: density matrix must have unit trace");
    }
    require_hermitian(rho, 1e-10);

    ComplexVector values = phase_space_function(weyl_symbol(rho, space));
    values /= static_cast<double>(space.hilbert_dim());  // total prefactor d^{-2n}
    const double max_imag = values.imag().cwiseAbs().maxCoeff();
    if (max_imag > imag_tol) {
        throw std::runtime_error("wigner_function: imaginary residue " + std::to_string(max_imag) +
                                 " exceeds tolerance");
    }
    return WignerFunction(space, values.real());
}

double negativity(const WignerFunction& w) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < w.values.size(); ++i) {
        if (w.values(i) < 0.0) acc -= w.values(i);
    }
    return acc;
}

WignerFunction marginal_qudit(const WignerFunction& w, int keep) {
    const PhaseSpace& space = w.space;
    if (keep < 0 || keep >= space.n_qudits()) {
        throw std::invalid_argument("marginal_qudit: qudit index out of range");
    }
    const int d = space.d();
    PhaseSpace reduced(space.dim(), 1);
    RealVector out = RealVector::Zero(reduced.n_sites());
    for (int site = 0; site < space.n_sites(); ++site) {
        auto c = space.coords_of(site);
        const int m = c[2 * static_cast<std::size_t>(keep)];
        const int n = c[2 * static_cast<std::size_t>(keep) + 1];
        out(m * d + n) += w.values(site);
    }
    return WignerFunction(std::move(reduced), std::move(out));
}

ComplexMatrix reconstruct_density(const WignerFunction& w) {
    const PhaseSpace& space = w.space;
    const PhasePointOperatorSet single(space.dim());
    ComplexMatrix rho = ComplexMatrix::Zero(space.hilbert_dim(), space.hilbert_dim());
    for (int site = 0; site < space.n_sites(); ++site) {
        rho += w.values(site) * composite_phase_point_operator(single, space, site);
    }
    return rho;
}

double state_purity_from_wigner(const WignerFunction& w) {
    return static_cast<double>(w.space.hilbert_dim()) * w.values.squaredNorm();
}

}  // namespace qps
