#include "qps/propagator.hpp"

#include "test_support.hpp"

using namespace qps;
using qps::test::max_diff;

TEST_SUITE("propagator") {

TEST_CASE("twisted convolution reproduces operator products") {
    std::mt19937_64 rng(31);
    for (int d : {3, 5}) {
        const PhaseSpace space(PrimeDim(d), 1);
        for (int trial = 0; trial < 5; ++trial) {
            const ComplexMatrix a = random_matrix(d, rng);
            const ComplexMatrix b = random_matrix(d, rng);
            const WeylSymbol conv =
                twisted_convolution(weyl_symbol(a, space), weyl_symbol(b, space));
            CHECK(max_diff(conv.values, weyl_symbol(ComplexMatrix(a * b), space).values) < 1e-12);
        }
    }
    // composite lattice
    const PhaseSpace two(PrimeDim(3), 2);
    const ComplexMatrix a = random_matrix(9, rng);
    const ComplexMatrix b = random_matrix(9, rng);
    const WeylSymbol conv = twisted_convolution(weyl_symbol(a, two), weyl_symbol(b, two));
    CHECK(max_diff(conv.values, weyl_symbol(ComplexMatrix(a * b), two).values) < 1e-12);
}

TEST_CASE("the identity symbol is the unit of the twisted convolution") {
    std::mt19937_64 rng(32);
    const PhaseSpace space(PrimeDim(3), 1);
    const WeylSymbol g = weyl_symbol(random_matrix(3, rng), space);
    const WeylSymbol id = weyl_symbol(ComplexMatrix::Identity(3, 3), space);
    CHECK(max_diff(twisted_convolution(g, id).values, g.values) < 1e-13);
    CHECK(max_diff(twisted_convolution(id, g).values, g.values) < 1e-13);
}

TEST_CASE("star square equals pointwise square for position-diagonal symbols") {
    const PrimeDim dim(3);
    const PhaseSpace space(dim, 1);
    const ComplexMatrix h = position_operator(dim);
    const WeylSymbol sym = weyl_symbol(h, space);
    const ComplexVector star = phase_space_function(twisted_convolution(sym, sym));
    const RealVector h_w = real_phase_space_function(h, space);
    for (int s = 0; s < space.n_sites(); ++s) {
        CHECK(std::abs(star(s) - Complex(h_w(s) * h_w(s), 0.0)) < 1e-12);
    }
}

TEST_CASE("identity evolution gives the identity kernel in every form") {
    for (int d : {3, 5}) {
        const PrimeDim dim(d);
        const PhaseSpace space(dim, 1);
        const ComplexMatrix eye = ComplexMatrix::Identity(d, d);
        const RealMatrix expected = RealMatrix::Identity(space.n_sites(), space.n_sites());
        CHECK(max_diff(kernel_trace_form(eye, space).entries, expected) < 1e-13);
        CHECK(max_diff(kernel_fourier_form(eye, space).entries, expected) < 1e-13);
        const ComplexMatrix weyl_kernel = weyl_space_kernel(eye, dim);
        CHECK(max_diff(weyl_kernel, ComplexMatrix(ComplexMatrix::Identity(d * d, d * d))) < 1e-13);
    }
}

TEST_CASE("trace and Fourier forms agree for random unitaries") {
    std::mt19937_64 rng(33);
    for (int d : {3, 5, 7, 11}) {
        const PrimeDim dim(d);
        const PhaseSpace space(dim, 1);
        const ComplexMatrix u = random_unitary(d, rng);
        KernelDiagnostics diag;
        const WignerKernel fourier = kernel_fourier_form(u, space, &diag);
        CHECK(diag.max_imag < 1e-10);
        CHECK(diag.max_column_sum_error < 1e-10);
        CHECK(max_diff(kernel_trace_form(u, space).entries, fourier.entries) < 1e-10);
    }
}

TEST_CASE("trace and Fourier forms agree on the two-qutrit composite") {
    std::mt19937_64 rng(40);
    const PhaseSpace space(PrimeDim(3), 2);
    const ComplexMatrix u = random_unitary(9, rng);
    KernelDiagnostics diag;
    const WignerKernel fourier = kernel_fourier_form(u, space, &diag);
    CHECK(diag.max_imag < 1e-10);
    CHECK(diag.max_column_sum_error < 1e-10);
    CHECK(max_diff(kernel_trace_form(u, space).entries, fourier.entries) < 1e-10);
}

TEST_CASE("kernel builders reject non-unitary input") {
    std::mt19937_64 rng(34);
    const PhaseSpace space(PrimeDim(3), 1);
    const ComplexMatrix bad = random_matrix(3, rng);
    CHECK_THROWS_AS(kernel_trace_form(bad, space), std::invalid_argument);
    CHECK_THROWS_AS(kernel_fourier_form(bad, space), std::invalid_argument);
}

TEST_CASE("golden scenario end to end through the kernel") {
    const PrimeDim dim(3);
    const PhaseSpace space(dim, 1);
    const ComplexMatrix u = hermitian_expm(position_operator(dim), Complex(0.0, -qps::test::kPi));
    const WignerFunction w0 = wigner_function(density_from_state(momentum_state(dim, 0)), space);
    for (const WignerKernel& g : {kernel_trace_form(u, space), kernel_fourier_form(u, space)}) {
        const WignerFunction wt = apply_kernel(g, w0);
        CHECK(wt.values(0 * 3 + 0) == doctest::Approx(-1.0 / 9.0).epsilon(1e-12));
        CHECK(wt.values(1 * 3 + 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
        CHECK(wt.values(0 * 3 + 1) == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
        CHECK(wt.sum() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("Clifford unitaries act as permutation kernels") {
    const PrimeDim dim(3);
    const PhaseSpace space(dim, 1);
    const WignerKernel g = kernel_fourier_form(dft_operator(dim), space);
    CHECK(is_permutation_kernel(g));
}

TEST_CASE("two-qutrit kernel matches direct evolution") {
    const PrimeDim dim(3);
    const PhaseSpace space(dim, 2);
    const double chi_t = 0.3;
    const ComplexMatrix x = position_operator(dim);
    const ComplexMatrix u = hermitian_expm(kron(x, x), Complex(0.0, -chi_t));

    ComplexVector p0 = momentum_state(dim, 0);
    ComplexVector psi(9);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) psi(i * 3 + j) = p0(i) * p0(j);
    }
    const ComplexMatrix rho0 = density_from_state(psi);

    const WignerFunction evolved_by_kernel =
        apply_kernel(kernel_fourier_form(u, space), wigner_function(rho0, space));
    const WignerFunction evolved_directly =
        wigner_function(ComplexMatrix(u * rho0 * u.adjoint()), space);
    CHECK(max_diff(evolved_by_kernel.values, evolved_directly.values) < 1e-10);
}

TEST_CASE("Weyl-space kernel: consistency with the direct-lattice forms") {
    std::mt19937_64 rng(35);
    const PrimeDim dim(3);
    const PhaseSpace space(dim, 1);
    const ComplexMatrix u = random_unitary(3, rng);
    const ComplexMatrix gw = weyl_space_kernel(u, dim);
    CHECK(max_diff(wigner_kernel_from_weyl_space(gw, dim).entries,
                   kernel_fourier_form(u, space).entries) < 1e-10);
}

TEST_CASE("Weyl-space kernel propagates symbols") {
    const PrimeDim dim(3);
    const PhaseSpace space(dim, 1);
    const ComplexMatrix u = hermitian_expm(position_operator(dim), Complex(0.0, -qps::test::kPi));
    const ComplexMatrix gw = weyl_space_kernel(u, dim);

    const ComplexMatrix rho0 = density_from_state(momentum_state(dim, 0));
    const ComplexVector sym0 = weyl_symbol(rho0, space).values;
    const ComplexVector evolved_symbol = gw * sym0;
    const ComplexVector expected =
        weyl_symbol(ComplexMatrix(u * rho0 * u.adjoint()), space).values;
    CHECK(max_diff(evolved_symbol, expected) < 1e-12);
}

TEST_CASE("apply_kernel preserves normalization; identity kernel is neutral") {
    std::mt19937_64 rng(36);
    const PrimeDim dim(5);
    const PhaseSpace space(dim, 1);
    const WignerFunction w = wigner_function(random_density_matrix(5, rng), space);

    WignerKernel identity(space, RealMatrix::Identity(space.n_sites(), space.n_sites()));
    CHECK(max_diff(apply_kernel(identity, w).values, w.values) == 0.0);

    const WignerKernel g = kernel_fourier_form(random_unitary(5, rng), space);
    CHECK(apply_kernel(g, w).sum() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("kernels leave the maximally mixed state fixed") {
    std::mt19937_64 rng(37);
    for (int d : {3, 7}) {
        const PrimeDim dim(d);
        const PhaseSpace space(dim, 1);
        const WignerFunction uniform =
            wigner_function(ComplexMatrix(ComplexMatrix::Identity(d, d) / d), space);
        const WignerKernel g = kernel_fourier_form(random_unitary(d, rng), space);
        CHECK(max_diff(apply_kernel(g, uniform).values, uniform.values) < 1e-12);
    }
}

TEST_CASE("composition matches the group property of the evolution") {
    const PrimeDim dim(3);
    const PhaseSpace space(dim, 1);
    const ComplexMatrix h = position_operator(dim);
    const double t = 0.4;
    const WignerKernel g1 = kernel_fourier_form(hermitian_expm(h, Complex(0.0, -t)), space);
    const WignerKernel g2 = kernel_fourier_form(hermitian_expm(h, Complex(0.0, -2 * t)), space);
    CHECK(max_diff(compose_kernels(g1, g1).entries, g2.entries) < 1e-10);

    WignerKernel identity(space, RealMatrix::Identity(space.n_sites(), space.n_sites()));
    CHECK(max_diff(compose_kernels(g1, identity).entries, g1.entries) == 0.0);

    // two-qutrit composition: 0.25 + 0.25 = 0.5
    const PhaseSpace two(dim, 2);
    const ComplexMatrix hh = kron(h, h);
    const WignerKernel q1 = kernel_fourier_form(hermitian_expm(hh, Complex(0.0, -0.25)), two);
    const WignerKernel q2 = kernel_fourier_form(hermitian_expm(hh, Complex(0.0, -0.5)), two);
    CHECK(max_diff(compose_kernels(q1, q1).entries, q2.entries) < 1e-10);
}

TEST_CASE("unitary kernels conserve phase-space purity") {
    std::mt19937_64 rng(38);
    for (int d : {3, 11}) {
        const PrimeDim dim(d);
        const PhaseSpace space(dim, 1);
        const WignerFunction w = wigner_function(density_from_state(random_state(d, rng)), space);
        const WignerFunction w_out = apply_kernel(kernel_fourier_form(random_unitary(d, rng), space), w);
        CHECK(state_purity_from_wigner(w_out) ==
              doctest::Approx(state_purity_from_wigner(w)).epsilon(1e-10));
    }
}

TEST_CASE("the raw Fourier kernel is real only at the production phase scale") {
    std::mt19937_64 rng(39);
    const PhaseSpace space(PrimeDim(3), 1);
    const ComplexVector u_w = phase_space_function(weyl_symbol(random_unitary(3, rng), space));

    const ComplexMatrix good = detail::fourier_kernel_raw(u_w, space, -2);
    CHECK(good.imag().cwiseAbs().maxCoeff() < 1e-12);

    const ComplexMatrix bad = detail::fourier_kernel_raw(u_w, space, -1);
    CHECK(bad.imag().cwiseAbs().maxCoeff() > 1e-3);
    KernelDiagnostics diag;
    CHECK_THROWS_AS(detail::checked_real_cast(bad, kKernelImagTol, &diag), std::runtime_error);
}

}  // TEST_SUITE
