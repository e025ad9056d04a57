#include "qps/weyl.hpp"

#include "test_support.hpp"

using namespace qps;
using qps::test::max_diff;

namespace {

// Symbol via materialized tensor-product displacement matrices; independent
// of the diagonal-walk route used by weyl_symbol.
ComplexVector symbol_by_matrices(const ComplexMatrix& a, const PhaseSpace& space) {
    const DisplacementSet displacements(space.dim());
    ComplexVector out(space.n_sites());
    for (int s = 0; s < space.n_sites(); ++s) {
        auto kj = space.coords_of(s);
        ComplexMatrix d = displacements.at(kj[0], kj[1]);
        for (int q = 1; q < space.n_qudits(); ++q) {
            d = kron(d, displacements.at(kj[2 * static_cast<std::size_t>(q)],
                                         kj[2 * static_cast<std::size_t>(q) + 1]));
        }
        out(s) = (a * d).trace();
    }
    return out;
}

}  // namespace

TEST_SUITE("weyl") {

TEST_CASE("dft_operator is unitary with period four") {
    for (int d : {3, 5, 7}) {
        const PrimeDim dim(d);
        const ComplexMatrix f = dft_operator(dim);
        CHECK(max_diff(ComplexMatrix(f.adjoint() * f), ComplexMatrix(ComplexMatrix::Identity(d, d))) <
              1e-14);
        CHECK(max_diff(ComplexMatrix(f * f * f * f), ComplexMatrix(ComplexMatrix::Identity(d, d))) <
              1e-13);
    }
    const PrimeDim d3(3);
    const ComplexVector p0 = dft_operator(d3) * position_state(d3, 0);
    for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(p0(i) - Complex(1.0 / std::sqrt(3.0), 0.0)) < 1e-15);
    }
    CHECK(max_diff(p0, momentum_state(d3, 0)) == 0.0);
}

TEST_CASE("clock and shift act as expected") {
    const PrimeDim dim(3);
    const auto [z, x] = clock_shift(dim);
    const Complex omega = omega_power(dim, 1);

    CHECK(max_diff(ComplexVector(z * position_state(dim, 1)),
                   ComplexVector(omega * position_state(dim, 1))) < 1e-15);
    CHECK(max_diff(ComplexVector(x * position_state(dim, 2)), position_state(dim, 0)) == 0.0);
    CHECK(max_diff(ComplexMatrix(z * x - omega * x * z), ComplexMatrix(ComplexMatrix::Zero(3, 3))) <
          1e-14);

    // Z^d = X^d = I, and X is the inverse Fourier conjugate of Z
    ComplexMatrix zd = ComplexMatrix::Identity(3, 3), xd = zd;
    for (int i = 0; i < 3; ++i) {
        zd = ComplexMatrix(zd * z);
        xd = ComplexMatrix(xd * x);
    }
    CHECK(max_diff(zd, ComplexMatrix(ComplexMatrix::Identity(3, 3))) < 1e-14);
    CHECK(max_diff(xd, ComplexMatrix(ComplexMatrix::Identity(3, 3))) < 1e-14);
}

TEST_CASE("momentum operator is the Fourier conjugate of position") {
    for (int d : {3, 5}) {
        const PrimeDim dim(d);
        const ComplexMatrix f = dft_operator(dim);
        CHECK(max_diff(momentum_operator(dim),
                       ComplexMatrix(f * position_operator(dim) * f.adjoint())) < 1e-14);
    }
}

TEST_CASE("displacement operators: identity, adjoint, orthogonality") {
    for (int d : {3, 5, 7, 11}) {
        const PrimeDim dim(d);
        const DisplacementSet set(dim);
        CHECK(max_diff(set.at(0, 0), ComplexMatrix(ComplexMatrix::Identity(d, d))) == 0.0);
        double worst = 0.0;
        for (int k = 0; k < d; ++k) {
            for (int j = 0; j < d; ++j) {
                CHECK(max_diff(ComplexMatrix(set.at(k, j).adjoint()), set.at(-k, -j)) < 1e-14);
                for (int kp = 0; kp < d; ++kp) {
                    for (int jp = 0; jp < d; ++jp) {
                        // Tr[D' E] as an elementwise sum, cheap enough for the full sweep
                        const Complex overlap =
                            set.at(k, j).conjugate().cwiseProduct(set.at(kp, jp)).sum();
                        const double expected = (k == kp && j == jp) ? d : 0.0;
                        worst = std::max(worst, std::abs(overlap - Complex(expected, 0.0)));
                    }
                }
            }
        }
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("displacement multiplication rule, exhaustive at d=3") {
    const PrimeDim dim(3);
    const DisplacementSet set(dim);
    for (int k1 = 0; k1 < 3; ++k1) {
        for (int j1 = 0; j1 < 3; ++j1) {
            for (int k2 = 0; k2 < 3; ++k2) {
                for (int j2 = 0; j2 < 3; ++j2) {
                    const ComplexMatrix lhs = set.at(k1, j1) * set.at(k2, j2);
                    const Complex phase =
                        omega_power(dim, static_cast<std::int64_t>(dim.half_inv()) *
                                             (k1 * j2 - k2 * j1));
                    CHECK(max_diff(lhs, ComplexMatrix(phase * set.at(k1 + k2, j1 + j2))) < 1e-12);
                }
            }
        }
    }
    // worked instance
    CHECK(max_diff(ComplexMatrix(set.at(1, 0) * set.at(0, 1)),
                   ComplexMatrix(omega_power(dim, dim.half_inv()) * set.at(1, 1))) < 1e-14);
}

TEST_CASE("weyl_symbol of the uniform-superposition state is delta_{k,0}") {
    const PrimeDim dim(3);
    const PhaseSpace space(dim, 1);
    const ComplexMatrix rho = ComplexMatrix::Constant(3, 3, Complex(1.0 / 3.0, 0.0));
    const WeylSymbol sym = weyl_symbol(rho, space);
    for (int k = 0; k < 3; ++k) {
        for (int j = 0; j < 3; ++j) {
            const double expected = (k == 0) ? 1.0 : 0.0;
            CHECK(std::abs(sym.values(k * 3 + j) - Complex(expected, 0.0)) < 1e-14);
        }
    }
}

TEST_CASE("weyl_symbol of the identity is d at the origin") {
    for (int d : {3, 7}) {
        const PrimeDim dim(d);
        const PhaseSpace space(dim, 1);
        const WeylSymbol sym = weyl_symbol(ComplexMatrix::Identity(d, d), space);
        for (int s = 0; s < space.n_sites(); ++s) {
            const double expected = (s == 0) ? d : 0.0;
            CHECK(std::abs(sym.values(s) - Complex(expected, 0.0)) < 1e-13);
        }
    }
}

TEST_CASE("weyl_symbol agrees with the materialized-matrix oracle") {
    std::mt19937_64 rng(21);
    {
        const PhaseSpace space(PrimeDim(3), 1);
        const ComplexMatrix a = random_matrix(3, rng);
        CHECK(max_diff(weyl_symbol(a, space).values, symbol_by_matrices(a, space)) < 1e-13);
    }
    {
        const PhaseSpace space(PrimeDim(3), 2);
        const ComplexMatrix a = random_matrix(9, rng);
        CHECK(max_diff(weyl_symbol(a, space).values, symbol_by_matrices(a, space)) < 1e-13);
    }
    {
        const PhaseSpace space(PrimeDim(5), 1);
        const ComplexMatrix a = random_matrix(5, rng);
        CHECK(max_diff(weyl_symbol(a, space).values, symbol_by_matrices(a, space)) < 1e-13);
    }
}

TEST_CASE("weyl round-trip and Hermitian conjugation symmetry") {
    std::mt19937_64 rng(22);
    for (int d : {3, 5}) {
        const PhaseSpace space(PrimeDim(d), 1);
        for (int trial = 0; trial < 5; ++trial) {
            const ComplexMatrix a = random_matrix(d, rng);
            CHECK(max_diff(inverse_weyl(weyl_symbol(a, space)), a) < 1e-12);
        }
    }
    const PhaseSpace two(PrimeDim(3), 2);
    const ComplexMatrix a2 = random_matrix(9, rng);
    CHECK(max_diff(inverse_weyl(weyl_symbol(a2, two)), a2) < 1e-12);

    // symbol(-k,-j) = conj(symbol(k,j)) for Hermitian input
    const PhaseSpace space(PrimeDim(5), 1);
    const WeylSymbol sym = weyl_symbol(random_hermitian(5, rng), space);
    for (int s = 0; s < space.n_sites(); ++s) {
        CHECK(std::abs(sym.values(space.neg(s)) - std::conj(sym.values(s))) < 1e-13);
    }

    // delta at the origin inverts to the identity
    ComplexVector delta = ComplexVector::Zero(space.n_sites());
    delta(0) = 5.0;
    CHECK(max_diff(inverse_weyl(WeylSymbol(space, delta)),
                   ComplexMatrix(ComplexMatrix::Identity(5, 5))) < 1e-13);

    // Z recovered through the round trip
    const PrimeDim d3(3);
    const PhaseSpace sp3(d3, 1);
    const ComplexMatrix z = clock_shift(d3).z;
    CHECK(max_diff(inverse_weyl(weyl_symbol(z, sp3)), z) < 1e-14);

    CHECK_THROWS_AS(weyl_symbol(ComplexMatrix::Identity(4, 4), sp3), std::invalid_argument);
}

TEST_CASE("phase_space_function of the ladder Hamiltonian is the position coordinate") {
    const PrimeDim dim(3);
    const PhaseSpace space(dim, 1);
    for (double chi : {1.0, 0.7}) {
        const RealVector h_w =
            real_phase_space_function(ComplexMatrix(chi * position_operator(dim)), space);
        for (int m = 0; m < 3; ++m) {
            for (int n = 0; n < 3; ++n) {
                CHECK(h_w(m * 3 + n) == doctest::Approx(chi * m).epsilon(1e-13));
            }
        }
    }
    // momentum operator gives the conjugate coordinate
    const RealVector p_w = real_phase_space_function(momentum_operator(dim), space);
    for (int m = 0; m < 3; ++m) {
        for (int n = 0; n < 3; ++n) {
            CHECK(p_w(m * 3 + n) == doctest::Approx(static_cast<double>(n)).epsilon(1e-13));
        }
    }
    // constants map to flat functions
    const RealVector c_w = real_phase_space_function(
        ComplexMatrix(2.5 * ComplexMatrix::Identity(3, 3)), space);
    CHECK(max_diff(c_w, RealVector(RealVector::Constant(9, 2.5))) < 1e-13);

    // Hermitian input always yields a real function
    std::mt19937_64 rng(23);
    CHECK_NOTHROW(real_phase_space_function(random_hermitian(3, rng), space));
}

TEST_CASE("wigner_function of |p,0> and the maximally mixed state") {
    for (int d : {3, 5}) {
        const PrimeDim dim(d);
        const PhaseSpace space(dim, 1);
        const WignerFunction w =
            wigner_function(density_from_state(momentum_state(dim, 0)), space);
        for (int m = 0; m < d; ++m) {
            for (int n = 0; n < d; ++n) {
                const double expected = (n == 0) ? 1.0 / d : 0.0;
                CHECK(w.values(m * d + n) == doctest::Approx(expected).epsilon(1e-12));
            }
        }
        CHECK(w.sum() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(negativity(w) < 1e-14);

        const ComplexMatrix mixed = ComplexMatrix::Identity(d, d) / static_cast<double>(d);
        const WignerFunction wm = wigner_function(mixed, space);
        CHECK(max_diff(wm.values,
                       RealVector(RealVector::Constant(d * d, 1.0 / (d * d)))) < 1e-14);
        CHECK(negativity(wm) == 0.0);
    }
}

TEST_CASE("wigner_function rejects non-normalized and non-Hermitian input") {
    const PrimeDim dim(3);
    const PhaseSpace space(dim, 1);
    CHECK_THROWS_AS(wigner_function(ComplexMatrix(2.0 * ComplexMatrix::Identity(3, 3)), space),
                    std::invalid_argument);
    std::mt19937_64 rng(24);
    ComplexMatrix skew = random_matrix(3, rng);
    skew /= skew.trace();
    CHECK_THROWS_AS(wigner_function(skew, space), std::invalid_argument);
}

TEST_CASE("golden evolved qutrit Wigner table and its negativity") {
    const PrimeDim dim(3);
    const PhaseSpace space(dim, 1);
    const ComplexMatrix u = hermitian_expm(position_operator(dim), Complex(0.0, -qps::test::kPi));
    const ComplexMatrix rho0 = density_from_state(momentum_state(dim, 0));
    const WignerFunction w = wigner_function(ComplexMatrix(u * rho0 * u.adjoint()), space);

    auto expected = [](int m, int n) -> double {
        if (n == 0) return m == 1 ? 1.0 / 3.0 : -1.0 / 9.0;
        return (m == 0 || m == 2) ? 2.0 / 9.0 : 0.0;
    };
    for (int m = 0; m < 3; ++m) {
        for (int n = 0; n < 3; ++n) {
            CHECK(w.values(m * 3 + n) == doctest::Approx(expected(m, n)).epsilon(1e-12));
        }
    }
    CHECK(negativity(w) == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
}

TEST_CASE("Wigner marginals reproduce the basis probabilities") {
    std::mt19937_64 rng(25);
    for (int d : {3, 5}) {
        const PrimeDim dim(d);
        const PhaseSpace space(dim, 1);
        const ComplexMatrix f = dft_operator(dim);
        for (int trial = 0; trial < 4; ++trial) {
            const ComplexMatrix rho = random_density_matrix(d, rng);
            const WignerFunction w = wigner_function(rho, space);
            const ComplexMatrix rho_p = f.adjoint() * rho * f;
            for (int a = 0; a < d; ++a) {
                double over_n = 0.0, over_m = 0.0;
                for (int b = 0; b < d; ++b) {
                    over_n += w.values(a * d + b);
                    over_m += w.values(b * d + a);
                }
                CHECK(over_n == doctest::Approx(rho(a, a).real()).epsilon(1e-12));
                CHECK(over_m == doctest::Approx(rho_p(a, a).real()).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("phase-point operators satisfy the defining identities") {
    for (int d : {3, 5}) {
        const PrimeDim dim(d);
        const PhasePointOperatorSet set(dim);
        ComplexMatrix total = ComplexMatrix::Zero(d, d);
        for (int m = 0; m < d; ++m) {
            for (int n = 0; n < d; ++n) {
                const ComplexMatrix& a = set.at(m, n);
                CHECK(hermiticity_defect(a) < 1e-13);
                CHECK(std::abs(a.trace() - Complex(1.0, 0.0)) < 1e-13);
                total += a;
                for (int mp = 0; mp < d; ++mp) {
                    for (int np = 0; np < d; ++np) {
                        const Complex pairing = (set.at(mp, np) * a).trace();
                        const double expected = (m == mp && n == np) ? d : 0.0;
                        CHECK(std::abs(pairing - Complex(expected, 0.0)) < 1e-12);
                    }
                }
            }
        }
        CHECK(max_diff(total, ComplexMatrix(static_cast<double>(d) *
                                            ComplexMatrix::Identity(d, d))) < 1e-12);
    }
}

TEST_CASE("both Wigner constructions agree and reconstruct the state") {
    std::mt19937_64 rng(26);
    for (int d : {3, 5}) {
        const PrimeDim dim(d);
        const PhaseSpace space(dim, 1);
        const PhasePointOperatorSet set(dim);
        for (int trial = 0; trial < 4; ++trial) {
            const ComplexMatrix rho = random_density_matrix(d, rng);
            const WignerFunction w = wigner_function(rho, space);
            for (int site = 0; site < space.n_sites(); ++site) {
                const Complex via_point_op = (rho * set.at_site(site)).trace() / static_cast<double>(d);
                CHECK(std::abs(via_point_op - Complex(w.values(site), 0.0)) < 1e-12);
            }
            CHECK(max_diff(reconstruct_density(w), rho) < 1e-12);
        }
    }
    // composite reconstruction
    const PhaseSpace two(PrimeDim(3), 2);
    const ComplexMatrix rho = random_density_matrix(9, rng);
    CHECK(max_diff(reconstruct_density(wigner_function(rho, two)), rho) < 1e-12);
}

TEST_CASE("marginal over a qudit gives the reduced state's Wigner function") {
    std::mt19937_64 rng(27);
    const PrimeDim dim(3);
    const PhaseSpace two(dim, 2);
    const PhaseSpace one(dim, 1);
    const ComplexMatrix rho = random_density_matrix(9, rng);
    const WignerFunction w = wigner_function(rho, two);
    for (int keep : {0, 1}) {
        const WignerFunction marg = marginal_qudit(w, keep);
        const WignerFunction reduced = wigner_function(partial_trace(rho, keep, {3, 3}), one);
        CHECK(max_diff(marg.values, reduced.values) < 1e-12);
    }
    CHECK_THROWS_AS(marginal_qudit(w, 2), std::invalid_argument);
}

TEST_CASE("purity in phase space matches the operator purity") {
    std::mt19937_64 rng(28);
    const PrimeDim dim(5);
    const PhaseSpace space(dim, 1);
    const ComplexMatrix rho = random_density_matrix(5, rng);
    const WignerFunction w = wigner_function(rho, space);
    CHECK(state_purity_from_wigner(w) ==
          doctest::Approx((rho * rho).trace().real()).epsilon(1e-12));
}

}  // TEST_SUITE
