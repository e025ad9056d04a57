#include "qps/linalg.hpp"

#include "qps/weyl.hpp"
#include "test_support.hpp"

using namespace qps;
using qps::test::max_diff;

TEST_SUITE("linalg") {

TEST_CASE("basic matrix semantics") {
    CHECK(ComplexMatrix::Identity(3, 3).trace() == Complex(3.0, 0.0));

    std::mt19937_64 rng(11);
    const ComplexMatrix a = random_matrix(4, rng);
    CHECK(max_diff(ComplexMatrix(a.adjoint().adjoint()), a) == 0.0);

    const PrimeDim dim(3);
    const auto [z, x] = clock_shift(dim);
    const Complex omega = omega_power(dim, 1);
    CHECK(max_diff(ComplexMatrix(z * x), ComplexMatrix(omega * x * z)) < 1e-14);
}

TEST_CASE("kron uses the subsystem-1-major convention") {
    const ComplexMatrix i3 = ComplexMatrix::Identity(3, 3);
    CHECK(max_diff(kron(i3, i3), ComplexMatrix(ComplexMatrix::Identity(9, 9))) == 0.0);

    ComplexMatrix x = ComplexMatrix::Zero(3, 3);
    x.diagonal() << 0.0, 1.0, 2.0;
    const ComplexMatrix xx = kron(x, x);
    RealVector expected(9);
    expected << 0, 0, 0, 0, 1, 2, 0, 2, 4;
    for (int i = 0; i < 9; ++i) {
        CHECK(xx(i, i) == Complex(expected(i), 0.0));
    }

    std::mt19937_64 rng(12);
    const ComplexMatrix a = random_matrix(3, rng);
    const ComplexMatrix b = random_matrix(4, rng);
    CHECK(std::abs(kron(a, b).trace() - a.trace() * b.trace()) < 1e-13);
}

TEST_CASE("kron associativity is exact index arithmetic") {
    // integer entries multiply exactly, so the two association orders agree bitwise
    std::mt19937_64 rng(13);
    std::uniform_int_distribution<int> coin(-3, 3);
    auto int_matrix = [&](int n) {
        ComplexMatrix m(n, n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) m(i, j) = Complex(coin(rng), coin(rng));
        }
        return m;
    };
    const ComplexMatrix a = int_matrix(2), b = int_matrix(3), c = int_matrix(2);
    CHECK(max_diff(kron(kron(a, b), c), kron(a, kron(b, c))) == 0.0);
}

TEST_CASE("partial_trace reduces product states and preserves trace") {
    std::mt19937_64 rng(14);
    const ComplexMatrix rho_a = random_density_matrix(3, rng);
    const ComplexMatrix rho_b = random_density_matrix(3, rng);
    const ComplexMatrix joint = kron(rho_a, rho_b);

    CHECK(max_diff(partial_trace(joint, 0, {3, 3}), rho_a) < 1e-14);
    CHECK(max_diff(partial_trace(joint, 1, {3, 3}), rho_b) < 1e-14);

    const ComplexMatrix rho = random_density_matrix(9, rng);
    const ComplexMatrix reduced = partial_trace(rho, 0, {3, 3});
    CHECK(std::abs(reduced.trace() - Complex(1.0, 0.0)) < 1e-13);

    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(reduced);
    CHECK(eig.eigenvalues().minCoeff() > -1e-12);

    // three subsystems, middle kept
    const ComplexMatrix rho_c = random_density_matrix(2, rng);
    const ComplexMatrix triple = kron(kron(rho_a, rho_c), rho_b);
    CHECK(max_diff(partial_trace(triple, 1, {3, 2, 3}), rho_c) < 1e-14);

    CHECK_THROWS_AS(partial_trace(rho, 0, {3, 4}), std::invalid_argument);
    CHECK_THROWS_AS(partial_trace(rho, 2, {3, 3}), std::invalid_argument);
}

TEST_CASE("two-qutrit reduced density matrix matches the interaction picture") {
    // |psi(t)> = (1/3) sum e^{-i chi t m n} |m>|n> gives
    // (rho_1)_{mm'} = (1/9) sum_n e^{-i chi t n (m - m')}
    const double chi_t = 0.7;
    ComplexVector psi(9);
    for (int m = 0; m < 3; ++m) {
        for (int n = 0; n < 3; ++n) {
            psi(m * 3 + n) = std::polar(1.0 / 3.0, -chi_t * m * n);
        }
    }
    const ComplexMatrix rho1 = partial_trace(density_from_state(psi), 0, {3, 3});
    for (int m = 0; m < 3; ++m) {
        for (int mp = 0; mp < 3; ++mp) {
            Complex expected = 0.0;
            for (int n = 0; n < 3; ++n) expected += std::polar(1.0 / 9.0, -chi_t * n * (m - mp));
            CHECK(std::abs(rho1(m, mp) - expected) < 1e-14);
        }
    }
}

TEST_CASE("hermitian_expm on the qutrit ladder") {
    const PrimeDim dim(3);
    const ComplexMatrix u = hermitian_expm(position_operator(dim), Complex(0.0, -qps::test::kPi));
    ComplexMatrix expected = ComplexMatrix::Zero(3, 3);
    expected.diagonal() << Complex(1, 0), Complex(-1, 0), Complex(1, 0);
    CHECK(max_diff(u, expected) < 1e-14);

    CHECK(max_diff(hermitian_expm(ComplexMatrix::Zero(3, 3), Complex(0.0, -1.0)),
                   ComplexMatrix(ComplexMatrix::Identity(3, 3))) < 1e-15);
}

TEST_CASE("hermitian_expm unitarity and the Taylor-series oracle") {
    std::mt19937_64 rng(15);
    const ComplexMatrix h = random_hermitian(5, rng);
    const ComplexMatrix u = hermitian_expm(h, Complex(0.0, -0.37));
    CHECK(max_diff(ComplexMatrix(hermitian_expm(h, Complex(0.0, 0.37)) * u),
                   ComplexMatrix(ComplexMatrix::Identity(5, 5))) < 1e-12);
    CHECK(unitarity_defect(u) < 1e-12);

    // independent series evaluation at small argument
    const Complex scale(0.0, -0.05);
    ComplexMatrix series = ComplexMatrix::Identity(5, 5);
    ComplexMatrix term = ComplexMatrix::Identity(5, 5);
    for (int k = 1; k <= 40; ++k) {
        term = (term * h * scale) / static_cast<double>(k);
        series += term;
    }
    CHECK(max_diff(hermitian_expm(h, scale), series) < 1e-12);

    ComplexMatrix bad = random_matrix(4, rng);
    CHECK_THROWS_AS(hermitian_expm(bad, Complex(0.0, -1.0)), std::invalid_argument);
}

TEST_CASE("HamiltonianSpec validates hermiticity") {
    std::mt19937_64 rng(16);
    CHECK_THROWS_AS(HamiltonianSpec(random_matrix(3, rng)), std::invalid_argument);

    const HamiltonianSpec spec(position_operator(PrimeDim(3)));
    CHECK(unitarity_defect(spec.evolution(0.9)) < 1e-12);
}

}  // TEST_SUITE
