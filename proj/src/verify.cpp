#include "mecs/verify.hpp"

#include <cmath>
#include <random>

#include "mecs/oracles.hpp"
#include "mecs/protocol.hpp"

namespace mecs::verify {

namespace {

const double kPi = std::acos(-1.0);

std::vector<double> p_grid() {
    std::vector<double> ps;
    for (int i = 0; i < 20; ++i) ps.push_back(i / 20.0);
    return ps;
}

std::vector<double> theta_grid() {
    std::vector<double> ts;
    for (int j = 0; j <= 12; ++j) ts.push_back(j * kPi / 6.0);
    return ts;
}

QubitState random_state(int parties, std::mt19937_64 &rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::VectorXcd amp(Eigen::Index{1} << parties);
    for (Eigen::Index i = 0; i < amp.size(); ++i) amp[i] = Complex{gauss(rng), gauss(rng)};
    amp.normalize();
    return QubitState(parties, std::move(amp));
}

}  // namespace

bool SuiteReport::pass() const {
    for (const Check &c : checks)
        if (!c.pass) return false;
    return true;
}

SuiteReport run_wootters() {
    SuiteReport report{"wootters", {}};
    double max_pair_delta = 0.0;
    double max_lambda_tail = 0.0;
    double max_density_delta = 0.0;
    double max_split_delta = 0.0;
    double range_violation = 0.0;

    for (int n = 3; n <= 8; ++n) {
        for (double p : p_grid()) {
            for (double theta : theta_grid()) {
                const MecsSpec spec = MecsSpec::from_p(n, theta, p);
                const DensityOperator rho = reduced_pair_density(spec);
                const ConcurrenceDiagnostics diag = wootters_concurrence(rho);
                const double closed = pair_concurrence_closed(spec);
                max_pair_delta = std::max(max_pair_delta, std::abs(diag.concurrence - closed));
                max_lambda_tail = std::max({max_lambda_tail, diag.lambdas[2], diag.lambdas[3]});
                range_violation = std::max({range_violation, -closed, closed - 1.0});

                const DensityOperator brute = oracles::pair_marginal_bruteforce(spec);
                max_density_delta = std::max(
                    max_density_delta,
                    (rho.matrix() - brute.matrix()).cwiseAbs().maxCoeff());
            }
        }
    }
    for (int n = 2; n <= 6; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            for (double p : p_grid()) {
                for (double theta : theta_grid()) {
                    const MecsSpec spec = MecsSpec::from_p(n, theta, p);
                    const double closed = split_concurrence_closed(spec, SplitSpec{k});
                    const double brute = oracles::split_concurrence_bruteforce(spec, SplitSpec{k});
                    max_split_delta = std::max(max_split_delta, std::abs(closed - brute));
                    range_violation = std::max({range_violation, -closed, closed - 1.0});
                }
            }
        }
    }

    report.checks.push_back({"pair_closed_vs_wootters", max_pair_delta, 1e-9,
                             max_pair_delta <= 1e-9});
    report.checks.push_back({"lambda_tail_zero", max_lambda_tail, 1e-10,
                             max_lambda_tail <= 1e-10});
    report.checks.push_back({"pair_density_vs_bruteforce", max_density_delta, 1e-12,
                             max_density_delta <= 1e-12});
    report.checks.push_back({"split_closed_vs_purity", max_split_delta, 1e-9,
                             max_split_delta <= 1e-9});
    report.checks.push_back({"concurrence_range", range_violation, 0.0,
                             range_violation <= 0.0});
    return report;
}

SuiteReport run_tangle() {
    SuiteReport report{"tangle", {}};
    double max_even_delta = 0.0;
    double max_tau3_delta = 0.0;
    double max_composition_delta = 0.0;
    double range_violation = 0.0;

    for (int n : {2, 4, 6, 8}) {
        for (double p : p_grid()) {
            for (double theta : theta_grid()) {
                const MecsSpec spec = MecsSpec::from_p(n, theta, p);
                const double closed = n_tangle_closed(spec);
                const double numeric = n_tangle_numeric(embed_as_qubits(spec));
                max_even_delta = std::max(max_even_delta, std::abs(closed - numeric));
                range_violation = std::max({range_violation, -closed, closed - 1.0});
            }
        }
    }
    for (double p : p_grid()) {
        for (double theta : theta_grid()) {
            const MecsSpec spec = MecsSpec::from_p(3, theta, p);
            const double closed = n_tangle_closed(spec);
            max_tau3_delta = std::max(
                max_tau3_delta, std::abs(oracles::three_tangle_bruteforce(spec) - closed));
            max_composition_delta =
                std::max(max_composition_delta, std::abs(three_tangle(spec) - closed));
            range_violation = std::max({range_violation, -closed, closed - 1.0});
        }
    }

    std::mt19937_64 rng(0x5eed5eedULL);
    double max_odd = 0.0;
    for (int n : {3, 5})
        for (int trial = 0; trial < 100; ++trial)
            max_odd = std::max(max_odd, n_tangle_numeric(random_state(n, rng)));

    report.checks.push_back({"n_tangle_numeric_vs_closed_even", max_even_delta, 1e-9,
                             max_even_delta <= 1e-9});
    report.checks.push_back({"three_tangle_numeric_vs_closed", max_tau3_delta, 1e-9,
                             max_tau3_delta <= 1e-9});
    report.checks.push_back({"three_tangle_composition_vs_closed", max_composition_delta,
                             1e-12, max_composition_delta <= 1e-12});
    report.checks.push_back({"odd_n_nullity_random", max_odd, 1e-12, max_odd <= 1e-12});
    report.checks.push_back({"tangle_range", range_violation, 0.0, range_violation <= 0.0});
    return report;
}

SuiteReport run_protocol() {
    SuiteReport report{"protocol", {}};
    std::mt19937_64 rng(0xec5ULL);
    std::uniform_real_distribution<double> amp(0.2, 1.3);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);

    double max_completeness = 0.0;
    double max_norm_drift = 0.0;
    for (int n : {2, 3, 4}) {
        for (int trial = 0; trial < 5; ++trial) {
            const ProtocolParams params{CoherentLabel{amp(rng), amp(rng) - 0.75}, angle(rng), n};
            const HybridState evolved = evolve_single(params, 1);
            max_norm_drift = std::max(max_norm_drift, std::abs(evolved.squared_norm() - 1.0));
            const HybridState state = product_state(params);
            max_norm_drift = std::max(max_norm_drift, std::abs(state.squared_norm() - 1.0));
            double total = 0.0;
            for (const GeneralizedBellOutcome &outcome : enumerate_outcomes(n)) {
                const MeasurementResult r = bell_measure(state, outcome);
                total += r.probability;
                if (r.collapsed)
                    max_norm_drift =
                        std::max(max_norm_drift, std::abs(r.collapsed->squared_norm() - 1.0));
            }
            max_completeness = std::max(max_completeness, std::abs(total - 1.0));
        }
    }

    // N = 2 collapsed norms against the printed denominators.
    double max_denominator_err = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        const double a = amp(rng);
        const double tau = angle(rng);
        const ProtocolParams params{CoherentLabel{a}, tau, 2};
        const HybridState state = product_state(params);
        const double a2 = a * a;
        const double decay = std::exp(-4.0 * a2 * std::sin(tau) * std::sin(tau));
        for (int sign : {+1, -1}) {
            const MeasurementResult same =
                bell_measure(state, GeneralizedBellOutcome{{0, 0}, sign});
            const double denom_same =
                std::sqrt(2.0 + 2.0 * sign * decay * std::cos(2.0 * a2 * std::sin(2.0 * tau)));
            const double measured_same = std::sqrt(same.probability * 8.0);
            max_denominator_err = std::max(
                max_denominator_err, std::abs(measured_same - denom_same) / denom_same);

            const MeasurementResult cross =
                bell_measure(state, GeneralizedBellOutcome{{0, 1}, sign});
            const double denom_cross = std::sqrt(2.0 + 2.0 * sign * decay);
            const double measured_cross = std::sqrt(cross.probability * 8.0);
            max_denominator_err = std::max(
                max_denominator_err, std::abs(measured_cross - denom_cross) / denom_cross);
        }
    }

    double max_swap_infidelity = 0.0;
    for (int n : {2, 3, 4}) {
        for (int sign : {+1, -1}) {
            const ProtocolParams params{CoherentLabel{1.0, 0.0}, kPi / 2.0, n};
            const GeneralizedBellOutcome outcome{std::vector<int>(n, 0), sign};
            max_swap_infidelity =
                std::max(max_swap_infidelity, std::abs(swap_end_to_end(params, outcome) - 1.0));
        }
    }

    double max_gate_unitarity = 0.0;
    double max_gate_mapping = 0.0;
    bool bijective = true;
    for (int n = 2; n <= 5; ++n) {
        const Eigen::MatrixXcd g = gate_g(n);
        const Eigen::Index dim = g.rows();
        max_gate_unitarity = std::max(
            max_gate_unitarity,
            (g.adjoint() * g - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff());
        std::vector<bool> hit(dim, false);
        for (const GeneralizedBellOutcome &outcome : enumerate_outcomes(n)) {
            const Eigen::VectorXcd mapped = g * bell_basis_state(n, outcome).amplitudes();
            Eigen::Index argmax = 0;
            mapped.cwiseAbs().maxCoeff(&argmax);
            Eigen::VectorXcd expected = Eigen::VectorXcd::Zero(dim);
            expected[argmax] = 1.0;
            max_gate_mapping = std::max(max_gate_mapping, (mapped - expected).norm());
            if (hit[argmax]) bijective = false;
            hit[argmax] = true;
        }
    }

    report.checks.push_back({"outcome_completeness", max_completeness, 1e-10,
                             max_completeness <= 1e-10});
    report.checks.push_back({"ecs_denominators_n2", max_denominator_err, 1e-12,
                             max_denominator_err <= 1e-12});
    report.checks.push_back({"swap_fidelity", max_swap_infidelity, 1e-10,
                             max_swap_infidelity <= 1e-10});
    report.checks.push_back({"gate_unitarity", max_gate_unitarity, 1e-12,
                             max_gate_unitarity <= 1e-12});
    report.checks.push_back({"gate_basis_to_product", max_gate_mapping, 1e-12,
                             bijective && max_gate_mapping <= 1e-12});
    report.checks.push_back({"stage_norms", max_norm_drift, 1e-12, max_norm_drift <= 1e-12});
    return report;
}

SuiteReport run_cnot() {
    SuiteReport report{"cnot", {}};
    const double k = std::sqrt(kPi);
    const CnotVerification r32 = verify_cnot_identity(CnotParams{k, k, 32}, 1, 2);
    const CnotVerification r48 = verify_cnot_identity(CnotParams{k, k, 48}, 1, 2);
    const CnotVerification r64 = verify_cnot_identity(CnotParams{k, k, 64}, 1, 2);
    const double monotone = std::max(r48.residual - r32.residual, r64.residual - r48.residual);
    const CnotVerification trivial = verify_cnot_identity(CnotParams{k, 0.0, 32}, 1, 2);

    report.checks.push_back({"residual_cutoff64", r64.residual, 1e-6, r64.residual <= 1e-6});
    report.checks.push_back({"residual_monotone_32_48_64", monotone, 0.0, monotone <= 0.0});
    report.checks.push_back({"databus_infidelity", r64.databus_infidelity, 1e-6,
                             r64.databus_infidelity <= 1e-6});
    report.checks.push_back({"kp_zero_identity", trivial.residual, 1e-12,
                             trivial.residual <= 1e-12});
    return report;
}

SuiteReport run_table1() {
    SuiteReport report{"table1", {}};
    for (const SpecialStateRow &row : special_state_table()) {
        const double delta = std::abs(row.computed - row.expected);
        report.checks.push_back({row.state, delta, 1e-12, delta <= 1e-12});
    }
    return report;
}

std::vector<std::string> suite_names() {
    return {"wootters", "tangle", "protocol", "cnot", "table1"};
}

std::vector<SuiteReport> run_suites(const std::string &name) {
    if (name == "wootters") return {run_wootters()};
    if (name == "tangle") return {run_tangle()};
    if (name == "protocol") return {run_protocol()};
    if (name == "cnot") return {run_cnot()};
    if (name == "table1") return {run_table1()};
    if (name == "all")
        return {run_wootters(), run_tangle(), run_protocol(), run_cnot(), run_table1()};
    throw std::invalid_argument("unknown verification suite: " + name);
}

}  // namespace mecs::verify
