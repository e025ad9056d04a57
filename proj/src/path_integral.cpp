#include "qps/path_integral.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qps {

namespace {

void require_lattice_function(const RealVector& h_w, const PhaseSpace& space, const char* what) {
    if (h_w.size() != space.n_sites()) {
        throw std::invalid_argument(std::string(what) + ": H_W does not match the lattice");
    }
}

}  // namespace

double DiscreteAction::phase(const PrimeDim& dim) const {
    return -4.0 * std::numbers::pi * symplectic_exponent / dim.value() + hamiltonian_part;
}

Complex DiscreteAction::weight(const PrimeDim& dim) const { return std::polar(1.0, phase(dim)); }

WignerKernel short_time_kernel(const RealVector& h_w, double tau, const PhaseSpace& space,
                               bool midpoint, KernelDiagnostics* diag) {
    require_lattice_function(h_w, space, "short_time_kernel");
    if (!(tau > 0.0)) throw std::invalid_argument("short_time_kernel: tau must be positive");

    const auto w = omega_table(space.dim());
    const int sites = space.n_sites();
    const int half = space.dim().half_inv();
    const double norm = 1.0 / static_cast<double>(sites);

    ComplexMatrix raw(sites, sites);
    for (int fin = 0; fin < sites; ++fin) {
        for (int ini = 0; ini < sites; ++ini) {
            const int delta = space.sub(fin, ini);
            const int plus_base = midpoint ? space.scale(space.add(fin, ini), half) : fin;
            const int minus_base = midpoint ? plus_base : ini;
            Complex acc = 0.0;
            for (int t = 0; t < sites; ++t) {
                const int e = space.dim().reduce(-2 * static_cast<std::int64_t>(
                                                          space.symplectic_indexed(delta, t)));
                const double hdiff = h_w(space.add(plus_base, t)) - h_w(space.sub(minus_base, t));
                acc += w[static_cast<std::size_t>(e)] * std::polar(1.0, hdiff * tau);
            }
            raw(fin, ini) = norm * acc;
        }
    }
    RealMatrix entries = detail::checked_real_cast(raw, kKernelImagTol, diag);
    return WignerKernel(space, std::move(entries));
}

WignerKernel path_sum_kernel(const RealVector& h_w, int num_slices, double total_time,
                             const PhaseSpace& space) {
    if (num_slices < 1) throw std::invalid_argument("path_sum_kernel: num_slices must be >= 1");
    const WignerKernel step = short_time_kernel(h_w, total_time / num_slices, space);
    WignerKernel out = step;
    for (int i = 1; i < num_slices; ++i) out = compose_kernels(step, out);
    return out;
}

std::uint64_t path_sum_term_count(const PathConfig& cfg, const PhaseSpace& space) {
    const int free_vars = 2 * cfg.num_slices - 1;
    long double total = 1.0L;
    for (int i = 0; i < free_vars; ++i) total *= space.n_sites();
    if (total > 1.0e18L) return UINT64_MAX;
    return static_cast<std::uint64_t>(total);
}

Complex path_sum_entry(const RealVector& h_w, const PathConfig& cfg, const PhaseSpace& space,
                       std::uint64_t max_terms) {
    require_lattice_function(h_w, space, "path_sum_entry");
    if (cfg.num_slices < 1) throw std::invalid_argument("path_sum_entry: num_slices must be >= 1");
    if (cfg.initial.n_qudits() != space.n_qudits() || cfg.final_point.n_qudits() != space.n_qudits()) {
        throw std::invalid_argument("path_sum_entry: endpoints do not match the lattice");
    }
    const std::uint64_t terms = path_sum_term_count(cfg, space);
    if (terms > max_terms) {
        throw BudgetExceeded("path_sum_entry: " + std::to_string(terms) +
                             " terms exceed the enumeration budget of " + std::to_string(max_terms) +
                             "; use composed short-time kernels instead");
    }

    const int N = cfg.num_slices;
    const int sites = space.n_sites();
    const double tau = cfg.tau();
    const double phase_unit = 2.0 * std::numbers::pi / space.d();
    const int n_free = 2 * N - 1;

    std::vector<int> gamma(static_cast<std::size_t>(N) + 1);
    gamma.front() = space.index_of(cfg.initial);
    gamma.back() = space.index_of(cfg.final_point);
    std::vector<int> xi(static_cast<std::size_t>(N));
    std::vector<int> digits(static_cast<std::size_t>(n_free));

    Complex acc = 0.0;
    for (std::uint64_t it = 0; it < terms; ++it) {
        std::uint64_t rem = it;
        for (int v = n_free - 1; v >= 0; --v) {
            digits[static_cast<std::size_t>(v)] = static_cast<int>(rem % static_cast<std::uint64_t>(sites));
            rem /= static_cast<std::uint64_t>(sites);
        }
        for (int i = 1; i < N; ++i) gamma[static_cast<std::size_t>(i)] = digits[static_cast<std::size_t>(i - 1)];
        for (int i = 0; i < N; ++i) xi[static_cast<std::size_t>(i)] = digits[static_cast<std::size_t>(N - 1 + i)];

        std::int64_t symp = 0;
        double ham = 0.0;
        for (int i = 1; i <= N; ++i) {
            const int g_cur = gamma[static_cast<std::size_t>(i)];
            const int g_prev = gamma[static_cast<std::size_t>(i - 1)];
            const int x = xi[static_cast<std::size_t>(i - 1)];
            symp += space.symplectic_indexed(space.sub(g_cur, g_prev), x);
            ham += h_w(space.add(g_cur, x)) - h_w(space.sub(g_prev, x));
        }
        const int e = space.dim().reduce(-2 * symp);
        acc += std::polar(1.0, phase_unit * e + ham * tau);
    }
    return acc * std::pow(1.0 / sites, N);
}

DiscreteAction discrete_action(std::span<const PhaseVector> gamma, std::span<const PhaseVector> xi,
                               const RealVector& h_w, double tau, const PhaseSpace& space) {
    require_lattice_function(h_w, space, "discrete_action");
    if (gamma.size() != xi.size() + 1 || xi.empty()) {
        throw std::invalid_argument("discrete_action: need N+1 gamma points and N xi points");
    }

    std::int64_t symp = 0;
    double ham = 0.0;
    for (std::size_t i = 1; i < gamma.size(); ++i) {
        const int g_cur = space.index_of(gamma[i]);
        const int g_prev = space.index_of(gamma[i - 1]);
        const int x = space.index_of(xi[i - 1]);
        symp += space.symplectic_indexed(space.sub(g_cur, g_prev), x);
        ham += (h_w(space.add(g_cur, x)) - h_w(space.sub(g_prev, x))) * tau;
    }
    return DiscreteAction{space.dim().reduce(symp), ham};
}

ComplexMatrix xi_zero_kernel(const RealVector& h_w, int num_slices, double total_time,
                             const PhaseSpace& space) {
    require_lattice_function(h_w, space, "xi_zero_kernel");
    if (num_slices < 1) throw std::invalid_argument("xi_zero_kernel: num_slices must be >= 1");
    const int sites = space.n_sites();
    const double norm = 1.0 / static_cast<double>(sites);
    const double step = total_time / num_slices;

    ComplexMatrix out(sites, sites);
    for (int fin = 0; fin < sites; ++fin) {
        for (int ini = 0; ini < sites; ++ini) {
            out(fin, ini) = norm * std::polar(1.0, step * (h_w(fin) - h_w(ini)));
        }
    }
    return out;
}

ShortTimeErrorReport short_time_error(const ComplexMatrix& h, std::span<const double> taus,
                                      const PhaseSpace& space) {
    require_hermitian(h);
    const RealVector h_w = real_phase_space_function(h, space);

    ShortTimeErrorReport report;
    for (double tau : taus) {
        if (!(tau > 0.0)) throw std::invalid_argument("short_time_error: tau must be positive");
        const ComplexMatrix u = hermitian_expm(h, Complex(0.0, -tau));
        const ComplexVector exact = phase_space_function(weyl_symbol(u, space));
        double err = 0.0;
        for (int s = 0; s < space.n_sites(); ++s) {
            err = std::max(err, std::abs(exact(s) - std::polar(1.0, -tau * h_w(s))));
        }
        report.taus.push_back(tau);
        report.ratios.push_back(err / (tau * tau));
    }

    const WeylSymbol sym = weyl_symbol(h, space);
    const ComplexVector star = phase_space_function(twisted_convolution(sym, sym));
    double gap = 0.0;
    for (int s = 0; s < space.n_sites(); ++s) {
        gap = std::max(gap, std::abs(star(s) - Complex(h_w(s) * h_w(s), 0.0)));
    }
    report.limit_constant = 0.5 * gap;
    return report;
}

}  // namespace qps
