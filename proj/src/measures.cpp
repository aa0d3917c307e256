#include "mecs/measures.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace mecs {

namespace {

constexpr double kHermitianTol = 1e-10;
constexpr double kTraceTol = 1e-10;
constexpr double kPsdTol = 1e-10;
constexpr double kRankCutoff = 1e-12;

// sigma_y (x) sigma_y in the computational basis; real symmetric.
Eigen::Matrix4d spin_flip_kernel() {
    Eigen::Matrix4d y = Eigen::Matrix4d::Zero();
    y(0, 3) = -1.0;
    y(1, 2) = 1.0;
    y(2, 1) = 1.0;
    y(3, 0) = -1.0;
    return y;
}

// Normalization denominator 1 + p^N cos(theta); zero exactly at the
// degenerate corner p = 1, theta = pi.
double branch_denominator(const MecsSpec &spec) {
    return 1.0 + std::pow(spec.p(), spec.parties()) * std::cos(spec.theta());
}

void validate_split(const MecsSpec &spec, SplitSpec split) {
    if (split.k < 1 || split.k > spec.parties() - 1)
        throw std::invalid_argument("split: k must satisfy 1 <= k <= N-1");
}

}  // namespace

DensityOperator::DensityOperator(Eigen::MatrixXcd matrix) : m_(std::move(matrix)) {
    if (m_.rows() != m_.cols() || m_.rows() < 2)
        throw std::invalid_argument("DensityOperator: matrix must be square");
    if ((m_.rows() & (m_.rows() - 1)) != 0)
        throw std::invalid_argument("DensityOperator: dimension must be a power of 2");
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol)
        throw std::invalid_argument("DensityOperator: matrix is not Hermitian");
    if (std::abs(m_.trace() - Complex{1.0, 0.0}) > kTraceTol)
        throw std::invalid_argument("DensityOperator: trace differs from 1");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m_, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kPsdTol)
        throw std::invalid_argument("DensityOperator: matrix is not positive semidefinite");
}

DensityOperator reduced_pair_density(const MecsSpec &spec) {
    const int n = spec.parties();
    const double p = spec.p();
    const double m = std::sqrt(std::max(0.0, 1.0 - p * p));
    const double q = std::pow(p, n - 2);
    const double norm = spec.normalization();  // throws on the exactly-null state
    const Complex phase = std::exp(Complex{0.0, spec.theta()});

    Eigen::Vector4cd a{Complex{p, 0.0}, Complex{m, 0.0}, Complex{0.0, 0.0}, Complex{0.0, 0.0}};
    Eigen::Vector4cd b{Complex{p, 0.0}, Complex{0.0, 0.0}, Complex{m, 0.0}, Complex{0.0, 0.0}};

    Eigen::Matrix4cd rho = a * a.adjoint() + b * b.adjoint() +
                           q * phase * (b * a.adjoint()) +
                           q * std::conj(phase) * (a * b.adjoint());
    rho *= norm * norm;
    return DensityOperator(rho);
}

ConcurrenceDiagnostics wootters_concurrence(const DensityOperator &rho) {
    if (rho.dim() != 4)
        throw std::invalid_argument("wootters_concurrence: expected a two-qubit (4x4) operator");

    // rho = Phi Phi^dag with numerically zero eigenvalues dropped.
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(rho.matrix());
    std::vector<Eigen::Index> kept;
    for (Eigen::Index i = 0; i < 4; ++i)
        if (es.eigenvalues()[i] > kRankCutoff) kept.push_back(i);
    Eigen::MatrixXcd phi(4, kept.size());
    for (size_t c = 0; c < kept.size(); ++c)
        phi.col(c) = es.eigenvectors().col(kept[c]) * std::sqrt(es.eigenvalues()[kept[c]]);

    // Nonzero eigenvalues of rho*rho~ equal the squared singular values of
    // the symmetric matrix S = Phi^T (sy x sy) Phi.
    const Eigen::MatrixXcd s = phi.transpose() * spin_flip_kernel() * phi;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(s);

    ConcurrenceDiagnostics out{};
    out.lambdas = {0.0, 0.0, 0.0, 0.0};
    for (Eigen::Index i = 0; i < svd.singularValues().size() && i < 4; ++i)
        out.lambdas[static_cast<size_t>(i)] = svd.singularValues()[i];
    std::sort(out.lambdas.begin(), out.lambdas.end(), std::greater<>());
    out.concurrence =
        std::max(out.lambdas[0] - out.lambdas[1] - out.lambdas[2] - out.lambdas[3], 0.0);
    return out;
}

double pair_concurrence_closed(const MecsSpec &spec) {
    const int n = spec.parties();
    const double p = spec.p();
    const double denom = branch_denominator(spec);
    if (denom == 0.0) return n == 2 ? 1.0 : 2.0 / n;  // l'Hopital limit, W state
    return (std::pow(p, n - 2) - std::pow(p, n)) / denom;
}

double split_concurrence_closed(const MecsSpec &spec, SplitSpec split) {
    validate_split(spec, split);
    const int n = spec.parties();
    const int k = split.k;
    const double p = spec.p();
    const double denom = branch_denominator(spec);
    if (denom == 0.0) return 2.0 * std::sqrt(static_cast<double>(k) * (n - k)) / n;
    const double num =
        std::sqrt((1.0 - std::pow(p, 2 * k)) * (1.0 - std::pow(p, 2 * (n - k))));
    return num / denom;
}

double three_tangle(const MecsSpec &spec) {
    if (spec.parties() != 3)
        throw std::invalid_argument("three_tangle: defined for N = 3 only");
    const double c_split = split_concurrence_closed(spec, SplitSpec{1});
    const double c_pair = pair_concurrence_closed(spec);
    // round-off guard at the W corner where the composition vanishes
    return std::max(c_split * c_split - 2.0 * c_pair * c_pair, 0.0);
}

double n_tangle_numeric(const QubitState &psi) {
    const Eigen::Index dim = psi.dim();
    const Eigen::VectorXcd &a = psi.amplitudes();
    Complex acc{0.0, 0.0};
    for (Eigen::Index b = 0; b < dim; ++b) {
        const Eigen::Index comp = (dim - 1) ^ b;
        const int ones = std::popcount(static_cast<unsigned long long>(b));
        const double sign = (ones % 2 == 0) ? 1.0 : -1.0;
        acc += sign * std::conj(a[b]) * std::conj(a[comp]);
    }
    const double c = std::abs(acc);
    return c * c;
}

double n_tangle_closed(const MecsSpec &spec) {
    const int n = spec.parties();
    if (n % 2 != 0 && n != 3)
        throw std::invalid_argument("n_tangle_closed: no closed form for odd N > 3");
    const double p = spec.p();
    const double denom = branch_denominator(spec);
    if (denom == 0.0) return n == 2 ? 1.0 : 0.0;
    return std::pow(1.0 - p * p, n) / (denom * denom);
}

MaxConcurrence solve_max_p(int parties, double theta) {
    if (parties < 3)
        throw std::invalid_argument("solve_max_p: N >= 3 required (N = 2 is maximal at theta = pi)");
    const double c = std::cos(theta);
    const auto f = [&](double p) {
        return 2.0 * std::pow(p, parties) * c + parties * p * p - (parties - 2);
    };

    double lo = 1e-9, hi = 1.0 - 1e-9;
    if (f(lo) * f(hi) < 0.0) {
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
            const double mid = 0.5 * (lo + hi);
            const double fm = f(mid);
            if (fm == 0.0) {
                lo = hi = mid;
                break;
            }
            (f(lo) * fm < 0.0 ? hi : lo) = mid;
        }
        const double p_star = 0.5 * (lo + hi);
        const double c_star = pair_concurrence_closed(MecsSpec::from_p(parties, theta, p_star));
        return MaxConcurrence{p_star, c_star, false};
    }

    // No interior stationary point: report the argmax of a dense scan.
    const int steps = 10000;
    double best_p = 0.0, best_c = -1.0;
    for (int i = 0; i <= steps; ++i) {
        const double p = static_cast<double>(i) / steps;
        const double value = pair_concurrence_closed(MecsSpec::from_p(parties, theta, p));
        if (value > best_c) {
            best_c = value;
            best_p = p;
        }
    }
    return MaxConcurrence{best_p, best_c, true};
}

PairMeasures general_pair_measures(const GeneralPairSpec &spec, int parties, SplitSpec split) {
    if (!(spec.p_prime >= 0.0 && spec.p_prime <= 1.0))
        throw std::invalid_argument("general_pair_measures: p' must lie in [0,1]");
    const MecsSpec sub = MecsSpec::from_p(parties, spec.theta_prime, spec.p_prime);
    PairMeasures out{};
    out.split_concurrence = split_concurrence_closed(sub, split);
    out.pair_concurrence = pair_concurrence_closed(sub);
    if (parties % 2 == 0 || parties == 3) out.n_tangle = n_tangle_closed(sub);
    return out;
}

std::vector<SpecialStateRow> special_state_table() {
    const double pi = std::acos(-1.0);
    struct Input {
        const char *state;
        double p;
        double theta;
        int parties;
        double expected;
    };
    const Input rows[] = {
        {"|W>_N        (p=1, theta=pi, N=5)", 1.0, pi, 5, 2.0 / 5.0},
        {"|Psi->       (p=1, theta=pi, N=2)", 1.0, pi, 2, 1.0},
        {"|Phi>        (p=0, N=2)", 0.0, 0.7, 2, 1.0},
        {"|GHZ>_N      (p=0, N=5)", 0.0, 1.3, 5, 0.0},
        {"|0>^N        (p=1, theta!=pi, N=4)", 1.0, 0.0, 4, 0.0},
        {"|a,t,inf>    (p=0.5, N=400)", 0.5, 0.9, 400, 0.0},
    };
    std::vector<SpecialStateRow> out;
    for (const Input &r : rows) {
        const double computed =
            pair_concurrence_closed(MecsSpec::from_p(r.parties, r.theta, r.p));
        out.push_back({r.state, r.p, r.theta, r.parties, r.expected, computed});
    }
    return out;
}

}  // namespace mecs
