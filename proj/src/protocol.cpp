#include "mecs/protocol.hpp"

#include <cmath>

namespace mecs {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kZeroProbability = 1e-30;

void validate_params(const ProtocolParams &params) {
    if (!params.alpha.finite() || !std::isfinite(params.tau))
        throw std::invalid_argument("protocol: non-finite parameters");
}

void validate_outcome(int parties, const GeneralizedBellOutcome &outcome) {
    if (static_cast<int>(outcome.pattern.size()) != parties)
        throw std::invalid_argument("outcome: pattern length must equal the party count");
    for (int b : outcome.pattern)
        if (b != 0 && b != 1) throw std::invalid_argument("outcome: pattern bits must be 0/1");
    if (outcome.pattern.front() != 0)
        throw std::invalid_argument("outcome: canonical patterns have i_1 = 0");
    if (outcome.sign != 1 && outcome.sign != -1)
        throw std::invalid_argument("outcome: sign must be +1 or -1");
}

std::uint32_t pattern_index(const std::vector<int> &pattern) {
    std::uint32_t idx = 0;
    for (int b : pattern) idx = (idx << 1) | static_cast<std::uint32_t>(b);
    return idx;
}

Eigen::MatrixXcd kron(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

Eigen::Matrix2cd hadamard2() {
    Eigen::Matrix2cd h;
    const double s = 1.0 / std::sqrt(2.0);
    h << s, s, s, -s;
    return h;
}

// 4x4 operator acting as `op` on the named qubit (1 or 2) of a two-qubit space.
Eigen::Matrix4cd on_qubit(int which, const Eigen::Matrix2cd &op) {
    const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();
    return which == 1 ? Eigen::Matrix4cd(kron(op, id)) : Eigen::Matrix4cd(kron(id, op));
}

// exp(i scale * H) for Hermitian H.
Eigen::MatrixXcd unitary_exp(const Eigen::MatrixXcd &h, double scale) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h);
    Eigen::VectorXcd phases(h.rows());
    for (Eigen::Index i = 0; i < h.rows(); ++i)
        phases[i] = std::exp(Complex{0.0, scale * es.eigenvalues()[i]});
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace

HybridState::HybridState(int parties,
                         std::vector<std::pair<std::uint32_t, MultimodeSuperposition>> branches)
    : parties_(parties), branches_(std::move(branches)) {
    if (parties_ < 1) throw std::invalid_argument("HybridState: need at least one party");
    if (branches_.empty()) throw std::invalid_argument("HybridState: no branches");
    const std::uint32_t dim = std::uint32_t{1} << parties_;
    for (const auto &[basis, vib] : branches_) {
        if (basis >= dim) throw std::invalid_argument("HybridState: basis index out of range");
        if (vib.modes() != parties_)
            throw std::invalid_argument("HybridState: one vibrational mode per ion expected");
    }
    if (std::abs(squared_norm() - 1.0) > kNormTol)
        throw std::invalid_argument("HybridState: state is not normalized");
}

double HybridState::squared_norm() const {
    double acc = 0.0;
    for (const auto &[basis, vib] : branches_) acc += vib.squared_norm();
    return acc;
}

HybridState evolve_single(const ProtocolParams &params, int party) {
    validate_params(params);
    if (party < 1 || party > params.parties)
        throw std::invalid_argument("evolve_single: party index out of range");
    const Complex a = params.alpha.value;
    const Complex up = a * std::exp(Complex{0.0, params.tau});
    const Complex down = a * std::exp(Complex{0.0, -params.tau});
    const Complex c{1.0 / std::sqrt(2.0), 0.0};
    std::vector<std::pair<std::uint32_t, MultimodeSuperposition>> branches;
    branches.emplace_back(0u, MultimodeSuperposition(1, {Term{c, {CoherentLabel{up}}}}));
    branches.emplace_back(1u, MultimodeSuperposition(1, {Term{c, {CoherentLabel{down}}}}));
    return HybridState(1, std::move(branches));
}

HybridState product_state(const ProtocolParams &params) {
    validate_params(params);
    const int n = params.parties;
    if (n < 2) throw std::invalid_argument("product_state: need at least two ions");
    const Complex a = params.alpha.value;
    const Complex up = a * std::exp(Complex{0.0, params.tau});
    const Complex down = a * std::exp(Complex{0.0, -params.tau});
    const Complex coeff{std::pow(2.0, -0.5 * n), 0.0};
    std::vector<std::pair<std::uint32_t, MultimodeSuperposition>> branches;
    const std::uint32_t dim = std::uint32_t{1} << n;
    for (std::uint32_t b = 0; b < dim; ++b) {
        std::vector<CoherentLabel> labels(n);
        for (int k = 1; k <= n; ++k) {
            const bool excited = (b >> (n - k)) & 1u;
            labels[k - 1] = CoherentLabel{excited ? down : up};
        }
        branches.emplace_back(b, MultimodeSuperposition(n, {Term{coeff, std::move(labels)}}));
    }
    return HybridState(n, std::move(branches));
}

MeasurementResult bell_measure(const HybridState &state, const GeneralizedBellOutcome &outcome) {
    validate_outcome(state.parties(), outcome);
    const std::uint32_t dim = std::uint32_t{1} << state.parties();
    const std::uint32_t idx = pattern_index(outcome.pattern);
    const std::uint32_t comp = ~idx & (dim - 1);

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    std::vector<Term> projected;
    for (const auto &[basis, vib] : state.branches()) {
        double weight = 0.0;
        if (basis == idx)
            weight = inv_sqrt2;
        else if (basis == comp)
            weight = outcome.sign * inv_sqrt2;
        else
            continue;
        for (Term t : vib.terms()) {
            t.coeff *= weight;
            projected.push_back(std::move(t));
        }
    }
    if (projected.empty()) return MeasurementResult{0.0, std::nullopt};

    const MultimodeSuperposition raw(state.parties(), std::move(projected));
    const double prob = std::max(0.0, raw.squared_norm());
    if (prob <= kZeroProbability) return MeasurementResult{prob, std::nullopt};
    return MeasurementResult{prob, scaled(raw, Complex{1.0 / std::sqrt(prob), 0.0})};
}

std::vector<GeneralizedBellOutcome> enumerate_outcomes(int parties) {
    if (parties < 1) throw std::invalid_argument("enumerate_outcomes: bad party count");
    std::vector<GeneralizedBellOutcome> out;
    const std::uint32_t half = std::uint32_t{1} << (parties - 1);
    for (std::uint32_t x = 0; x < half; ++x) {
        std::vector<int> pattern(parties);
        for (int k = 0; k < parties; ++k) pattern[k] = (x >> (parties - 1 - k)) & 1u;
        for (int sign : {+1, -1}) out.push_back(GeneralizedBellOutcome{pattern, sign});
    }
    return out;
}

QubitState bell_basis_state(int parties, const GeneralizedBellOutcome &outcome) {
    validate_outcome(parties, outcome);
    const Eigen::Index dim = Eigen::Index{1} << parties;
    const Eigen::Index idx = pattern_index(outcome.pattern);
    const Eigen::Index comp = ~idx & (dim - 1);
    Eigen::VectorXcd amp = Eigen::VectorXcd::Zero(dim);
    amp[idx] = Complex{1.0 / std::sqrt(2.0), 0.0};
    amp[comp] = Complex{outcome.sign / std::sqrt(2.0), 0.0};
    return QubitState(parties, std::move(amp));
}

Eigen::MatrixXcd gate_g(int parties) {
    if (parties < 2) throw std::invalid_argument("gate_g: need at least two parties");
    const Eigen::Index dim = Eigen::Index{1} << parties;
    const Eigen::Index control_mask = dim >> 1;  // party 1 = MSB

    Eigen::MatrixXcd g = Eigen::MatrixXcd::Identity(dim, dim);
    for (int t = 2; t <= parties; ++t) {
        const Eigen::Index target_mask = Eigen::Index{1} << (parties - t);
        Eigen::MatrixXcd cnot = Eigen::MatrixXcd::Zero(dim, dim);
        for (Eigen::Index b = 0; b < dim; ++b)
            cnot((b & control_mask) ? (b ^ target_mask) : b, b) = 1.0;
        g = cnot * g;
    }

    Eigen::MatrixXcd h1 = Eigen::MatrixXcd::Zero(dim, dim);
    const Eigen::Matrix2cd h = hadamard2();
    for (Eigen::Index b = 0; b < dim; ++b) {
        const Eigen::Index bit = (b & control_mask) ? 1 : 0;
        h1(b & ~control_mask, b) = h(0, bit);
        h1(b | control_mask, b) = h(1, bit);
    }
    return h1 * g;
}

CnotVerification verify_cnot_identity(const CnotParams &params, int control, int target) {
    if (!std::isfinite(params.kx) || !std::isfinite(params.kp))
        throw std::invalid_argument("cnot: non-finite pulse areas");
    if (params.cutoff < 16) throw std::invalid_argument("cnot: cutoff must be >= 16");
    if (control < 1 || control > 2 || target < 1 || target > 2 || control == target)
        throw std::invalid_argument("cnot: control/target must be distinct qubits 1 and 2");

    const int d = params.cutoff;
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(d, d);
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(d, d);
    for (int n = 0; n + 1 < d; ++n) {
        const double r = std::sqrt((n + 1) / 2.0);
        x(n, n + 1) = r;
        x(n + 1, n) = r;
        p(n, n + 1) = Complex{0.0, -r};
        p(n + 1, n) = Complex{0.0, r};
    }

    const Eigen::MatrixXcd id_vib = Eigen::MatrixXcd::Identity(d, d);
    const Eigen::Matrix2cd ketone = (Eigen::Matrix2cd() << 0, 0, 0, 1).finished();
    const Eigen::Matrix4cd proj_control = on_qubit(control, ketone);
    const Eigen::Matrix4cd proj_target = on_qubit(target, ketone);
    const Eigen::Matrix4cd rest_control = Eigen::Matrix4cd::Identity() - proj_control;
    const Eigen::Matrix4cd rest_target = Eigen::Matrix4cd::Identity() - proj_target;
    const Eigen::MatrixXcd h_target = kron(on_qubit(target, hadamard2()),
                                           Eigen::MatrixXcd::Identity(d, d));

    // exp(+-i kx X (1-s_iz)/2): displace the mode iff the control is |1>.
    const auto x_factor = [&](double sgn) -> Eigen::MatrixXcd {
        return kron(proj_control, unitary_exp(x, sgn * params.kx)) + kron(rest_control, id_vib);
    };
    // exp(+-i kp P (1-s_jx)/2): same with the target in the x basis.
    const auto p_factor = [&](double sgn) {
        const Eigen::MatrixXcd core =
            kron(proj_target, unitary_exp(p, sgn * params.kp)) + kron(rest_target, id_vib);
        return Eigen::MatrixXcd(h_target * core * h_target);
    };

    const Eigen::MatrixXcd product =
        x_factor(+1.0) * p_factor(+1.0) * x_factor(-1.0) * p_factor(-1.0);

    const Complex gate_phase = std::exp(Complex{0.0, -params.kx * params.kp});
    Eigen::Matrix4cd phase4 = Eigen::Matrix4cd::Identity();
    phase4 += (gate_phase - 1.0) * (proj_control * proj_target);
    const Eigen::Matrix4cd target4 =
        on_qubit(target, hadamard2()) * phase4 * on_qubit(target, hadamard2());
    const Eigen::MatrixXcd expected = kron(target4, id_vib);

    // Operator norm of the mismatch, restricted to inputs with Fock <= cutoff/4.
    const int low = params.cutoff / 4;
    const Eigen::MatrixXcd diff = product - expected;
    Eigen::MatrixXcd sub(4 * d, 4 * (low + 1));
    for (int q = 0; q < 4; ++q)
        sub.middleCols(q * (low + 1), low + 1) = diff.middleCols(q * d, low + 1);
    const double residual = Eigen::JacobiSVD<Eigen::MatrixXcd>(sub).singularValues()[0];

    // Databus property: a coherent state rides through the gate unchanged.
    const double alpha = 0.5;
    Eigen::VectorXcd coherent(d);
    double log_fact = 0.0;
    for (int n = 0; n < d; ++n) {
        if (n > 0) log_fact += std::log(static_cast<double>(n));
        coherent[n] = std::exp(-0.5 * alpha * alpha + n * std::log(alpha) - 0.5 * log_fact);
    }
    double tail = 0.0;
    for (int n = params.cutoff / 2; n < d; ++n) tail += std::norm(coherent[n]);
    if (tail >= 1e-8)
        throw TruncationError("cnot: coherent input has support above cutoff/2");
    coherent.normalize();

    double min_fidelity = 1.0;
    for (int q = 0; q < 4; ++q) {
        Eigen::VectorXcd in = Eigen::VectorXcd::Zero(4 * d);
        in.segment(q * d, d) = coherent;
        const Eigen::VectorXcd out = product * in;
        double fidelity = 0.0;
        for (int r = 0; r < 4; ++r)
            fidelity += std::norm(coherent.dot(out.segment(r * d, d)));
        min_fidelity = std::min(min_fidelity, fidelity);
    }

    return CnotVerification{residual, 1.0 - min_fidelity, params.cutoff, low + 1};
}

double swap_end_to_end(const ProtocolParams &params, const GeneralizedBellOutcome &outcome) {
    const double pi = std::acos(-1.0);
    if (std::abs(params.tau - pi / 2.0) > 1e-12)
        throw std::invalid_argument("swap_end_to_end: defined at tau = pi/2");
    for (int b : outcome.pattern)
        if (b != 0) throw std::invalid_argument("swap_end_to_end: all-zeros pattern expected");

    const MeasurementResult result = bell_measure(product_state(params), outcome);
    if (!result.collapsed)
        throw NullStateError("swap_end_to_end: zero-probability outcome");

    const Complex rotated = Complex{0.0, 1.0} * params.alpha.value;
    const double theta = outcome.sign > 0 ? 0.0 : pi;
    const MultimodeSuperposition analytic =
        build_mecs(MecsSpec::from_alpha(params.parties, theta, rotated));
    return std::norm(inner_product(analytic, *result.collapsed));
}

}  // namespace mecs
