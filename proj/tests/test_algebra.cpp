#include <doctest.h>

#include <cmath>
#include <random>

#include "mecs/algebra.hpp"

using namespace mecs;

namespace {

const double kPi = std::acos(-1.0);

CoherentLabel random_label(std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    return CoherentLabel{u(rng), u(rng)};
}

MultimodeSuperposition mecs_like(int n, double theta, Complex alpha, Complex weight = {1.0, 0.0}) {
    Term plus{weight, std::vector<CoherentLabel>(n, CoherentLabel{alpha})};
    Term minus{weight * std::exp(Complex{0.0, theta}),
               std::vector<CoherentLabel>(n, CoherentLabel{-alpha})};
    return MultimodeSuperposition(n, {plus, minus});
}

}  // namespace

TEST_CASE("overlap identity and paper value") {
    CHECK(std::abs(overlap(CoherentLabel{0.7, -0.3}, CoherentLabel{0.7, -0.3}) - 1.0) < 1e-15);

    // <-a|a> = exp(-2|a|^2) = e^-1 at |a|^2 = 1/2
    const double a = std::sqrt(0.5);
    const Complex ov = overlap(CoherentLabel{-a, 0.0}, CoherentLabel{a, 0.0});
    CHECK(std::abs(ov - std::exp(-1.0)) < 1e-15);
}

TEST_CASE("overlap of counter-rotated labels, alpha=1, tau=pi/4") {
    // direct exponent expansion: conj(a e^{i tau}) a e^{-i tau} = e^{-2 i tau},
    // exponent = -1 + e^{-i pi/2} = -1 - i
    const Complex a = std::exp(Complex{0.0, kPi / 4.0});
    const Complex b = std::exp(Complex{0.0, -kPi / 4.0});
    const Complex expected = std::exp(Complex{-1.0, -1.0});
    const Complex got = overlap(CoherentLabel{a}, CoherentLabel{b});
    CHECK(std::abs(got - expected) < 1e-15);
    CHECK(std::abs(std::abs(got) - std::exp(-1.0)) < 1e-15);  // e^{-2 sin^2(pi/4)}
}

TEST_CASE("overlap conjugate symmetry and bound") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const CoherentLabel a = random_label(rng);
        const CoherentLabel b = random_label(rng);
        const Complex ab = overlap(a, b);
        const Complex ba = overlap(b, a);
        CHECK(std::abs(ab - std::conj(ba)) < 1e-15);
        CHECK(std::abs(ab) <= 1.0 + 1e-15);
        if (std::abs(a.value - b.value) > 1e-2) CHECK(std::abs(ab) < 1.0);
    }
}

TEST_CASE("overlap rejects non-finite labels") {
    CHECK_THROWS_AS(overlap(CoherentLabel{std::nan(""), 0.0}, CoherentLabel{0.0, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("inner product examples") {
    const MultimodeSuperposition single(
        1, {Term{{1.0, 0.0}, {CoherentLabel{0.4, 0.9}}}});
    CHECK(std::abs(inner_product(single, single) - Complex{1.0, 0.0}) < 1e-15);

    // |a,a> + |-a,-a> at |a|^2 = 1/2: four-term expansion gives 2 + 2e^-2
    const double a = std::sqrt(0.5);
    const MultimodeSuperposition two(
        2, {Term{{1.0, 0.0}, {CoherentLabel{a, 0.0}, CoherentLabel{a, 0.0}}},
            Term{{1.0, 0.0}, {CoherentLabel{-a, 0.0}, CoherentLabel{-a, 0.0}}}});
    CHECK(std::abs(inner_product(two, two).real() - (2.0 + 2.0 * std::exp(-2.0))) < 1e-14);
    CHECK(std::abs(inner_product(two, two).imag()) < 1e-15);

    // Eq.-(5a)-numerator state at alpha = 1, tau = pi/2: 2 +- 2 e^-4
    const Complex up{0.0, 1.0};
    for (double sign : {1.0, -1.0}) {
        const MultimodeSuperposition ecs(
            2, {Term{{1.0, 0.0}, {CoherentLabel{up}, CoherentLabel{up}}},
                Term{{sign, 0.0}, {CoherentLabel{-up}, CoherentLabel{-up}}}});
        CHECK(std::abs(ecs.squared_norm() - (2.0 + sign * 2.0 * std::exp(-4.0))) < 1e-14);
    }
}

TEST_CASE("inner product is sesquilinear") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const MultimodeSuperposition x(
            2, {Term{{u(rng), u(rng)}, {random_label(rng), random_label(rng)}}});
        const MultimodeSuperposition y(
            2, {Term{{u(rng), u(rng)}, {random_label(rng), random_label(rng)}}});
        const Complex a{u(rng), u(rng)};

        const Complex lhs = inner_product(x, scaled(y, a));
        CHECK(std::abs(lhs - a * inner_product(x, y)) < 1e-12);
        const Complex lhs2 = inner_product(scaled(x, a), y);
        CHECK(std::abs(lhs2 - std::conj(a) * inner_product(x, y)) < 1e-12);
        CHECK(inner_product(x, x).real() >= 0.0);
        CHECK(std::abs(inner_product(x, y) - std::conj(inner_product(y, x))) < 1e-14);
    }
}

TEST_CASE("inner product rejects mode mismatch") {
    const MultimodeSuperposition one(1, {Term{{1.0, 0.0}, {CoherentLabel{0.1, 0.0}}}});
    const MultimodeSuperposition two(
        2, {Term{{1.0, 0.0}, {CoherentLabel{0.1, 0.0}, CoherentLabel{0.1, 0.0}}}});
    CHECK_THROWS_AS(inner_product(one, two), std::invalid_argument);
}

TEST_CASE("annihilation acts as label product on coefficients") {
    const Complex beta{0.3, 0.2}, gamma{-0.8, 0.1};
    const MultimodeSuperposition x(
        2, {Term{{1.0, 0.0}, {CoherentLabel{beta}, CoherentLabel{gamma}}}});
    const MultimodeSuperposition y = apply_annihilation_all(x);
    CHECK(std::abs(y.terms()[0].coeff - beta * gamma) < 1e-15);
    CHECK(y.terms()[0].labels[0] == CoherentLabel{beta});

    const MultimodeSuperposition vacuum(
        3, {Term{{1.0, 0.0}, std::vector<CoherentLabel>(3, CoherentLabel{0.0, 0.0})}});
    CHECK(apply_annihilation_all(vacuum).terms()[0].coeff == Complex{0.0, 0.0});
}

TEST_CASE("annihilation eigenvalue structure of the two-branch state") {
    const Complex alpha{0.6, 0.35};
    // even N: a_1..a_N picks up alpha^N on both branches (eigenstate)
    for (int n : {2, 4, 6}) {
        const MultimodeSuperposition state = mecs_like(n, 0.83, alpha);
        const MultimodeSuperposition lowered = apply_annihilation_all(state);
        const Complex factor = std::pow(alpha, n);
        for (size_t t = 0; t < state.terms().size(); ++t) {
            const Complex ratio = lowered.terms()[t].coeff / state.terms()[t].coeff;
            CHECK(std::abs(ratio - factor) < 1e-12);
        }
    }
    // odd N: the |-a> branch carries (-alpha)^N = -alpha^N
    for (int n : {3, 5}) {
        const MultimodeSuperposition state = mecs_like(n, 0.83, alpha);
        const MultimodeSuperposition lowered = apply_annihilation_all(state);
        const Complex factor = std::pow(alpha, n);
        CHECK(std::abs(lowered.terms()[0].coeff / state.terms()[0].coeff - factor) < 1e-12);
        CHECK(std::abs(lowered.terms()[1].coeff / state.terms()[1].coeff + factor) < 1e-12);
    }
}

TEST_CASE("canonicalize merges identical label tuples") {
    const CoherentLabel l{0.5, -0.25};
    const MultimodeSuperposition x(
        1, {Term{{0.25, 0.0}, {l}}, Term{{0.5, 0.0}, {CoherentLabel{0.5 + 1e-13, -0.25}}},
            Term{{1.0, 0.0}, {CoherentLabel{2.0, 0.0}}}});
    const MultimodeSuperposition merged = canonicalize(x);
    CHECK(merged.terms().size() == 2);
    CHECK(std::abs(merged.terms()[0].coeff - Complex{0.75, 0.0}) < 1e-15);
}

TEST_CASE("ortho basis") {
    CHECK(ortho_basis(0.0).m == 1.0);

    const OrthoBasisPair pair = ortho_basis(std::exp(-1.0));
    CHECK(pair.m == doctest::Approx(std::sqrt(1.0 - std::exp(-2.0))).epsilon(1e-14));
    CHECK(std::abs(pair.m * pair.m + pair.p * pair.p - 1.0) < 1e-12);

    CHECK_THROWS_AS(ortho_basis(1.0), DegenerateBasisError);
    CHECK_THROWS_AS(ortho_basis(-0.1), std::domain_error);
}

TEST_CASE("ortho basis is orthonormal under the overlap form") {
    // |1> = (|-a> - p|0>)/M realized as an explicit superposition
    auto check_orthonormal = [](double p, double tol) {
        const double a = std::sqrt(-std::log(p) / 2.0);
        const OrthoBasisPair basis = ortho_basis(p);
        const MultimodeSuperposition zero(1, {Term{{1.0, 0.0}, {CoherentLabel{a, 0.0}}}});
        const MultimodeSuperposition one(
            1, {Term{{1.0 / basis.m, 0.0}, {CoherentLabel{-a, 0.0}}},
                Term{{-p / basis.m, 0.0}, {CoherentLabel{a, 0.0}}}});
        CHECK(std::abs(inner_product(one, one) - Complex{1.0, 0.0}) < tol);
        CHECK(std::abs(inner_product(zero, one)) < tol);
        CHECK(std::abs(inner_product(zero, zero) - Complex{1.0, 0.0}) < tol);
    };
    check_orthonormal(std::exp(-1.0), 1e-12);
    check_orthonormal(0.999999, 1e-9);  // near-degenerate stress case
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.01, 0.99);
    for (int trial = 0; trial < 20; ++trial) check_orthonormal(u(rng), 1e-12);
}

TEST_CASE("superposition validation") {
    CHECK_THROWS_AS(MultimodeSuperposition(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(MultimodeSuperposition(2, {Term{{1.0, 0.0}, {CoherentLabel{0.0, 0.0}}}}),
                    std::invalid_argument);
    const MultimodeSuperposition zero(
        1, {Term{{0.0, 0.0}, {CoherentLabel{0.3, 0.0}}}});
    CHECK_THROWS_AS(zero.require_normalizable(), NullStateError);
    CHECK_THROWS_AS(normalized(zero), NullStateError);
}
