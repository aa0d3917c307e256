#include <doctest.h>

#include <cmath>
#include <random>

#include "mecs/measures.hpp"
#include "mecs/oracles.hpp"

using namespace mecs;

namespace {
const double kPi = std::acos(-1.0);

DensityOperator bell_projector(int which) {
    // 0: |Psi-><Psi-|, used against the Table-I row
    Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
    if (which == 0) {
        v[1] = 1.0 / std::sqrt(2.0);
        v[2] = -1.0 / std::sqrt(2.0);
    }
    return DensityOperator(v * v.adjoint());
}
}  // namespace

TEST_CASE("reduced pair density at the orthogonal limit") {
    const DensityOperator rho = reduced_pair_density(MecsSpec::from_p(3, 0.9, 0.0));
    Eigen::Matrix4cd expected = Eigen::Matrix4cd::Zero();
    expected(1, 1) = 0.5;  // parity flip on party 2 moves the GHZ weights to 01/10
    expected(2, 2) = 0.5;
    CHECK((rho.matrix() - expected).cwiseAbs().maxCoeff() < 1e-15);
}

TEST_CASE("reduced pair density entries for p=0.5, theta=pi, N=3") {
    const double p = 0.5, q = 0.5;
    const double m = std::sqrt(1.0 - p * p);
    const double n2 = 1.0 / (2.0 - 2.0 * 0.125);  // N^2 = 1/(2 + 2 p^3 cos pi)
    const DensityOperator rho = reduced_pair_density(MecsSpec::from_p(3, kPi, p));
    CHECK(std::abs(rho.matrix()(0, 0).real() - n2 * 2.0 * p * p * (1.0 - q)) < 1e-14);
    CHECK(std::abs(rho.matrix()(1, 1).real() - n2 * m * m) < 1e-14);
    CHECK(std::abs(rho.matrix()(0, 1) - Complex{n2 * p * m * (1.0 - q), 0.0}) < 1e-14);
    CHECK(std::abs(rho.matrix()(1, 2) - Complex{-n2 * m * m * q, 0.0}) < 1e-14);
    CHECK(std::abs(rho.matrix()(3, 3)) == 0.0);
    CHECK(std::abs(rho.matrix().trace() - Complex{1.0, 0.0}) < 1e-14);
}

TEST_CASE("reduced pair density equals the brute-force partial trace") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> pval(0.0, 0.97);
    for (int n = 2; n <= 8; ++n) {
        for (int trial = 0; trial < 6; ++trial) {
            const MecsSpec spec = MecsSpec::from_p(n, angle(rng), pval(rng));
            const DensityOperator closed = reduced_pair_density(spec);
            const DensityOperator brute = oracles::pair_marginal_bruteforce(spec);
            CHECK((closed.matrix() - brute.matrix()).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("local parity flip leaves the pair concurrence unchanged") {
    // trace without the flip: drop the parity conjugation and compare Wootters
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> pval(0.05, 0.95);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);
        const MecsSpec spec = MecsSpec::from_p(n, angle(rng), pval(rng));
        const QubitState psi = embed_as_qubits(spec);
        const DensityOperator unflipped(
            oracles::partial_trace(psi.amplitudes(), n, {1, 2}));
        const double without = wootters_concurrence(unflipped).concurrence;
        const double with_flip =
            wootters_concurrence(oracles::pair_marginal_bruteforce(spec)).concurrence;
        CHECK(std::abs(without - with_flip) < 1e-10);
    }
}

TEST_CASE("wootters concurrence reference points") {
    CHECK(wootters_concurrence(bell_projector(0)).concurrence == doctest::Approx(1.0).epsilon(1e-12));

    const DensityOperator mixed(Eigen::Matrix4cd::Identity() * 0.25);
    CHECK(wootters_concurrence(mixed).concurrence == 0.0);

    const ConcurrenceDiagnostics diag =
        wootters_concurrence(reduced_pair_density(MecsSpec::from_p(4, 0.0, 0.6)));
    CHECK(diag.concurrence == doctest::Approx((0.36 - 0.1296) / 1.1296).epsilon(1e-12));
    CHECK(diag.lambdas[0] >= diag.lambdas[1]);
    CHECK(diag.lambdas[2] < 1e-10);
    CHECK(diag.lambdas[3] < 1e-10);
    CHECK(diag.concurrence ==
          std::max(diag.lambdas[0] - diag.lambdas[1] - diag.lambdas[2] - diag.lambdas[3], 0.0));
}

TEST_CASE("wootters lambdas match Eq.-(eq:eigen) and the complex eigensolver") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> pval(0.0, 0.95);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        const MecsSpec spec = MecsSpec::from_p(n, angle(rng), pval(rng));
        const DensityOperator rho = reduced_pair_density(spec);
        const ConcurrenceDiagnostics diag = wootters_concurrence(rho);

        const double p = spec.p();
        const double q = std::pow(p, n - 2);
        const double norm2 = spec.normalization() * spec.normalization();
        const double m2 = 1.0 - p * p;
        CHECK(diag.lambdas[0] == doctest::Approx(norm2 * m2 * (1.0 + q)).epsilon(1e-10));
        CHECK(diag.lambdas[1] == doctest::Approx(norm2 * m2 * (1.0 - q)).epsilon(1e-10));

        const std::array<double, 4> literal = oracles::wootters_lambdas_eigensolver(rho);
        for (int i = 0; i < 4; ++i) CHECK(std::abs(diag.lambdas[i] - literal[i]) < 1e-7);
    }
}

TEST_CASE("wootters input validation") {
    Eigen::Matrix4cd bad = Eigen::Matrix4cd::Identity() * 0.25;
    bad(0, 1) = Complex{0.1, 0.1};  // not Hermitian
    CHECK_THROWS_AS((DensityOperator(bad)), std::invalid_argument);

    CHECK_THROWS_AS((DensityOperator(Eigen::Matrix4cd::Identity())), std::invalid_argument);

    Eigen::Matrix4cd indefinite = Eigen::Matrix4cd::Zero();
    indefinite(0, 0) = 1.5;
    indefinite(1, 1) = -0.5;
    CHECK_THROWS_AS((DensityOperator(indefinite)), std::invalid_argument);

    CHECK_THROWS_AS(wootters_concurrence(DensityOperator(
                        Eigen::MatrixXcd::Identity(8, 8) / 8.0)),
                    std::invalid_argument);
}

TEST_CASE("closed-form pair concurrence") {
    CHECK(pair_concurrence_closed(MecsSpec::from_p(5, kPi, 1.0)) == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(pair_concurrence_closed(MecsSpec::from_p(4, 0.33, 0.0)) == 0.0);
    CHECK(pair_concurrence_closed(MecsSpec::from_p(3, 0.0, 0.5)) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(pair_concurrence_closed(MecsSpec::from_p(2, kPi, 1.0)) == 1.0);
    // N = 2 reduces to the pure formula (1-p^2)/(1+p^2 cos theta)
    CHECK(pair_concurrence_closed(MecsSpec::from_p(2, 0.77, 0.31)) ==
          doctest::Approx((1.0 - 0.31 * 0.31) /
                          (1.0 + 0.31 * 0.31 * std::cos(0.77))).epsilon(1e-15));
    // vanishing entanglement as N grows
    CHECK(pair_concurrence_closed(MecsSpec::from_p(200, 0.4, 0.5)) < 1e-12);
}

TEST_CASE("closed-form split concurrence") {
    CHECK(split_concurrence_closed(MecsSpec::from_p(4, kPi, 0.7), SplitSpec{2}) == 1.0);
    CHECK(split_concurrence_closed(MecsSpec::from_p(5, 1.1, 0.0), SplitSpec{2}) == 1.0);
    const double p = 0.31;
    CHECK(split_concurrence_closed(MecsSpec::from_p(2, 0.77, p), SplitSpec{1}) ==
          doctest::Approx((1.0 - p * p) / (1.0 + p * p * std::cos(0.77))).epsilon(1e-15));
    CHECK_THROWS_AS(split_concurrence_closed(MecsSpec::from_p(4, 0.0, 0.5), SplitSpec{4}),
                    std::invalid_argument);
    // degenerate corner: the W-state block concurrence 2 sqrt(k(N-k))/N
    CHECK(split_concurrence_closed(MecsSpec::from_p(3, kPi, 1.0), SplitSpec{1}) ==
          doctest::Approx(2.0 * std::sqrt(2.0) / 3.0).epsilon(1e-15));
}

TEST_CASE("split concurrence equals the marginal-purity oracle") {
    std::mt19937_64 rng(43);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> pval(0.0, 0.95);
    for (int n = 2; n <= 6; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            for (int trial = 0; trial < 5; ++trial) {
                const MecsSpec spec = MecsSpec::from_p(n, angle(rng), pval(rng));
                const double closed = split_concurrence_closed(spec, SplitSpec{k});
                const double brute = oracles::split_concurrence_bruteforce(spec, SplitSpec{k});
                CHECK(std::abs(closed - brute) < 1e-9);
            }
        }
    }
}

TEST_CASE("split maximality holds exactly iff theta = pi and 2k = N") {
    for (int n : {2, 4, 6, 8}) {
        for (int k = 1; k <= n - 1; ++k) {
            for (int i = 1; i <= 9; ++i) {
                const double p = i / 10.0;
                for (int j = 0; j <= 12; ++j) {
                    const double theta = j * kPi / 6.0;
                    const double c =
                        split_concurrence_closed(MecsSpec::from_p(n, theta, p), SplitSpec{k});
                    const bool maximal = (j == 6) && (2 * k == n);
                    if (maximal)
                        CHECK(c == 1.0);
                    else
                        CHECK(c < 1.0);
                }
            }
        }
    }
}

TEST_CASE("three tangle") {
    CHECK(three_tangle(MecsSpec::from_p(3, 0.4, 0.0)) == 1.0);
    CHECK(three_tangle(MecsSpec::from_p(3, kPi, 1.0)) < 1e-15);
    CHECK(three_tangle(MecsSpec::from_p(3, 0.0, 0.5)) ==
          doctest::Approx(0.421875 / 1.265625).epsilon(1e-13));
    CHECK(three_tangle(MecsSpec::from_p(3, kPi, 0.5)) ==
          doctest::Approx(0.421875 / 0.765625).epsilon(1e-13));
    CHECK_THROWS_AS(three_tangle(MecsSpec::from_p(4, 0.0, 0.5)), std::invalid_argument);

    // composition route vs closed form and vs the fully numeric route
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> pval(0.0, 0.95);
    for (int trial = 0; trial < 25; ++trial) {
        const MecsSpec spec = MecsSpec::from_p(3, angle(rng), pval(rng));
        const double closed = n_tangle_closed(spec);
        CHECK(std::abs(three_tangle(spec) - closed) < 1e-12);
        CHECK(std::abs(oracles::three_tangle_bruteforce(spec) - closed) < 1e-9);
    }
}

TEST_CASE("n tangle numeric") {
    for (int n : {2, 4, 6}) {
        CHECK(n_tangle_numeric(ghz_state(n, 0.9)) == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(n_tangle_numeric(w_state(4)) < 1e-15);

    const MecsSpec spec = MecsSpec::from_p(4, 0.0, 0.3);
    const double expected = std::pow(0.91, 4) / std::pow(1.0081, 2);  // Eq.-(37) value
    CHECK(n_tangle_numeric(embed_as_qubits(spec)) == doctest::Approx(expected).epsilon(1e-10));
    CHECK(n_tangle_closed(spec) == doctest::Approx(expected).epsilon(1e-12));

    std::mt19937_64 rng(53);
    std::normal_distribution<double> gauss;
    for (int n : {3, 5}) {
        for (int trial = 0; trial < 20; ++trial) {
            Eigen::VectorXcd amp(1 << n);
            for (Eigen::Index i = 0; i < amp.size(); ++i) amp[i] = Complex{gauss(rng), gauss(rng)};
            amp.normalize();
            CHECK(n_tangle_numeric(QubitState(n, amp)) < 1e-12);
        }
    }
}

TEST_CASE("n tangle closed form") {
    for (double p : {0.0, 0.3, 0.8, 0.999}) {
        CHECK(n_tangle_closed(MecsSpec::from_p(2, kPi, p)) == 1.0);
    }
    CHECK(n_tangle_closed(MecsSpec::from_p(6, 0.4, 0.0)) == 1.0);
    CHECK(n_tangle_closed(MecsSpec::from_p(6, 0.0, 0.5)) ==
          doctest::Approx(0.177978515625 / 1.031494140625).epsilon(1e-13));
    CHECK_THROWS_AS(n_tangle_closed(MecsSpec::from_p(5, 0.0, 0.5)), std::invalid_argument);
    CHECK(n_tangle_closed(MecsSpec::from_p(3, kPi, 1.0)) == 0.0);
    CHECK(n_tangle_closed(MecsSpec::from_p(2, kPi, 1.0)) == 1.0);
}

TEST_CASE("n tangle numeric equals closed on the embedding") {
    std::mt19937_64 rng(59);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    std::uniform_real_distribution<double> pval(0.0, 0.95);
    for (int n : {2, 4, 6, 8}) {
        for (int trial = 0; trial < 10; ++trial) {
            const MecsSpec spec = MecsSpec::from_p(n, angle(rng), pval(rng));
            CHECK(std::abs(n_tangle_numeric(embed_as_qubits(spec)) - n_tangle_closed(spec)) <
                  1e-9);
        }
    }
}

TEST_CASE("pair concurrence maximization") {
    const MaxConcurrence at_zero = solve_max_p(3, 0.0);
    CHECK(std::abs(at_zero.p_star - 0.5) < 1e-12);
    CHECK(std::abs(at_zero.c_star - 1.0 / 3.0) < 1e-12);
    CHECK(!at_zero.boundary);

    const MaxConcurrence at_half_pi = solve_max_p(3, kPi / 2.0);
    CHECK(std::abs(at_half_pi.p_star - 1.0 / std::sqrt(3.0)) < 1e-12);
    CHECK(std::abs(at_half_pi.c_star - 2.0 * std::sqrt(3.0) / 9.0) < 1e-12);

    // N = 4, theta = 0: 2p^4 + 4p^2 - 2 = 0, p^2 = sqrt(2) - 1
    const MaxConcurrence n4 = solve_max_p(4, 0.0);
    CHECK(std::abs(n4.p_star - std::sqrt(std::sqrt(2.0) - 1.0)) < 1e-9);
    const MaxConcurrence scanned = oracles::grid_scan_max(4, 0.0, 1e-5);
    CHECK(std::abs(n4.p_star - scanned.p_star) < 2e-5);
    CHECK(n4.c_star >= scanned.c_star - 1e-12);

    // theta = pi has no interior root; the supremum sits at the p -> 1 boundary
    const MaxConcurrence boundary = solve_max_p(4, kPi);
    CHECK(boundary.boundary);
    CHECK(boundary.p_star == 1.0);
    CHECK(boundary.c_star == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(solve_max_p(2, 0.0), std::invalid_argument);
}

TEST_CASE("generalized nonorthogonal substitution") {
    const PairMeasures general =
        general_pair_measures(GeneralPairSpec{0.5, kPi}, 3, SplitSpec{1});
    const MecsSpec spec = MecsSpec::from_p(3, kPi, 0.5);
    CHECK(general.pair_concurrence == pair_concurrence_closed(spec));
    CHECK(general.split_concurrence == split_concurrence_closed(spec, SplitSpec{1}));
    CHECK(general.n_tangle.has_value());
    CHECK(*general.n_tangle == n_tangle_closed(spec));

    // p' = exp(-2|a|^2) reproduces the MECS numbers
    const MecsSpec by_alpha = MecsSpec::from_alpha(4, 0.6, Complex{0.8, 0.0});
    const PairMeasures sub =
        general_pair_measures(GeneralPairSpec{by_alpha.p(), 0.6}, 4, SplitSpec{2});
    CHECK(sub.pair_concurrence == doctest::Approx(pair_concurrence_closed(by_alpha)).epsilon(1e-15));

    CHECK(general_pair_measures(GeneralPairSpec{0.0, 2.2}, 5, SplitSpec{2}).split_concurrence ==
          1.0);
    CHECK(!general_pair_measures(GeneralPairSpec{0.4, 0.0}, 5, SplitSpec{1}).n_tangle.has_value());
    CHECK_THROWS_AS(general_pair_measures(GeneralPairSpec{1.2, 0.0}, 3, SplitSpec{1}),
                    std::invalid_argument);
}

TEST_CASE("special state table") {
    const std::vector<SpecialStateRow> rows = special_state_table();
    CHECK(rows.size() == 6);
    for (const SpecialStateRow &row : rows)
        CHECK(std::abs(row.computed - row.expected) < 1e-12);
    CHECK(rows[0].expected == doctest::Approx(0.4));   // W row at N = 5
    CHECK(rows[1].expected == 1.0);                    // |Psi->
    CHECK(rows[5].parties == 400);                     // N -> infinity row
}
