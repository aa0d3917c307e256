#include "mecs/states.hpp"

#include <bit>
#include <cmath>

namespace mecs {

namespace {
// exp(-2*380) == 0.0 in double (the exponent is past the subnormal range),
// so this amplitude realizes p = 0 exactly.
const double kOrthogonalLimitAlpha = std::sqrt(380.0);
constexpr double kNullStateTol = 1e-300;
constexpr double kNormTol = 1e-12;
}  // namespace

MecsSpec::MecsSpec(int parties, double theta, std::optional<Complex> alpha, double p)
    : parties_(parties), theta_(theta), alpha_(alpha), p_(p) {
    if (parties_ < 2)
        throw std::invalid_argument("MecsSpec: at least two parties required");
    if (!std::isfinite(theta_))
        throw std::invalid_argument("MecsSpec: non-finite phase");
}

MecsSpec MecsSpec::from_alpha(int parties, double theta, Complex alpha) {
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
        throw std::invalid_argument("MecsSpec: non-finite amplitude");
    const double p = std::exp(-2.0 * std::norm(alpha));
    return MecsSpec(parties, theta, alpha, p);
}

MecsSpec MecsSpec::from_p(int parties, double theta, double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("MecsSpec: overlap p must lie in [0,1]");
    return MecsSpec(parties, theta, std::nullopt, p);
}

Complex MecsSpec::alpha() const {
    if (alpha_) return *alpha_;
    if (p_ == 0.0) return Complex{kOrthogonalLimitAlpha, 0.0};
    return Complex{std::sqrt(-std::log(p_) / 2.0), 0.0};
}

double MecsSpec::normalization() const {
    const double norm2 = 2.0 + 2.0 * std::pow(p_, parties_) * std::cos(theta_);
    if (norm2 <= kNullStateTol)
        throw NullStateError("MecsSpec: null state (p = 1, theta = pi)");
    return 1.0 / std::sqrt(norm2);
}

QubitState::QubitState(int parties, Eigen::VectorXcd amplitudes)
    : parties_(parties), amp_(std::move(amplitudes)) {
    if (parties_ < 1) throw std::invalid_argument("QubitState: need at least one party");
    if (amp_.size() != (Eigen::Index{1} << parties_))
        throw std::invalid_argument("QubitState: amplitude vector has wrong dimension");
    const double n2 = amp_.squaredNorm();
    if (std::abs(n2 - 1.0) > kNormTol)
        throw std::invalid_argument("QubitState: state is not normalized");
}

int QubitState::bit(Eigen::Index b, int party) const {
    return static_cast<int>((b >> (parties_ - party)) & 1);
}

MultimodeSuperposition build_mecs(const MecsSpec &spec) {
    const int n = spec.parties();
    const double norm = spec.normalization();
    const Complex a = spec.alpha();
    Term plus{Complex{norm, 0.0}, std::vector<CoherentLabel>(n, CoherentLabel{a})};
    Term minus{norm * std::exp(Complex{0.0, spec.theta()}),
               std::vector<CoherentLabel>(n, CoherentLabel{-a})};
    return MultimodeSuperposition(n, {std::move(plus), std::move(minus)});
}

QubitState embed_as_qubits(const MecsSpec &spec) {
    const int n = spec.parties();
    const OrthoBasisPair basis = ortho_basis(spec.p());  // rejects p >= 1
    const double norm = spec.normalization();
    const Complex phase = std::exp(Complex{0.0, spec.theta()});
    const Eigen::Index dim = Eigen::Index{1} << n;
    Eigen::VectorXcd amp(dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
        const int ones = std::popcount(static_cast<unsigned long long>(b));
        const double branch = std::pow(basis.p, n - ones) * std::pow(basis.m, ones);
        amp[b] = norm * (phase * branch + (b == 0 ? 1.0 : 0.0));
    }
    return QubitState(n, std::move(amp));
}

QubitState ghz_state(int parties, double theta) {
    if (parties < 2) throw std::invalid_argument("ghz_state: need at least two parties");
    const Eigen::Index dim = Eigen::Index{1} << parties;
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(dim);
    amp[0] = Complex{1.0 / std::sqrt(2.0), 0.0};
    amp[dim - 1] = std::exp(Complex{0.0, theta}) / std::sqrt(2.0);
    return QubitState(parties, std::move(amp));
}

QubitState w_state(int parties) {
    if (parties < 2) throw std::invalid_argument("w_state: need at least two parties");
    const Eigen::Index dim = Eigen::Index{1} << parties;
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(dim);
    const double c = 1.0 / std::sqrt(static_cast<double>(parties));
    for (int k = 0; k < parties; ++k) amp[Eigen::Index{1} << k] = Complex{c, 0.0};
    return QubitState(parties, std::move(amp));
}

}  // namespace mecs
