#include "mecs/cli_app.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <random>

#include "mecs/oracles.hpp"
#include "mecs/protocol.hpp"
#include "mecs/sweep.hpp"
#include "mecs/verify.hpp"

namespace mecs::cli {

namespace {

using nlohmann::json;

const double kPi = std::acos(-1.0);
constexpr int kOracleMaxParties = 12;  // embedding-based oracles build 2^N vectors

double resolve_theta(const CLI::Option *theta_opt, const CLI::Option *theta_pi_opt,
                     double theta, double theta_pi) {
    const bool has_theta = theta_opt->count() > 0;
    const bool has_pi = theta_pi_opt->count() > 0;
    if (has_theta == has_pi)
        throw std::invalid_argument("exactly one of --theta / --theta-pi is required");
    return has_theta ? theta : theta_pi * kPi;
}

json measure_report(const MecsSpec &spec, int k, bool with_oracle,
                    std::optional<double> alpha_input) {
    const int n = spec.parties();
    const bool tangle_defined = (n % 2 == 0) || n == 3;

    json report;
    report["inputs"] = {{"alpha", alpha_input ? json(*alpha_input) : json(nullptr)},
                        {"p", spec.p()},
                        {"theta", spec.theta()},
                        {"n", n},
                        {"k", k}};
    report["split_concurrence"] = split_concurrence_closed(spec, SplitSpec{k});
    const double pair_closed = pair_concurrence_closed(spec);
    report["pair_concurrence"] = pair_closed;
    report["n_tangle"] = tangle_defined ? json(n_tangle_closed(spec)) : json(nullptr);

    bool degenerate = false;
    json lambdas = json(nullptr);
    std::optional<ConcurrenceDiagnostics> diag;
    try {
        diag = wootters_concurrence(reduced_pair_density(spec));
        lambdas = json::array();
        for (double l : diag->lambdas) lambdas.push_back(l);
    } catch (const NullStateError &) {
        degenerate = true;  // p = 1, theta = pi: closed forms report the limits
    }
    report["lambdas"] = lambdas;
    report["degenerate_limit"] = degenerate;

    if (!with_oracle || degenerate) {
        report["oracle_deltas"] = json(nullptr);
        return report;
    }

    json deltas;
    const bool embeddable = spec.p() < 1.0 && n <= kOracleMaxParties;
    const double pair_numeric =
        embeddable ? wootters_concurrence(oracles::pair_marginal_bruteforce(spec)).concurrence
                   : diag->concurrence;
    deltas["pair"] = std::abs(pair_closed - pair_numeric);
    deltas["split"] =
        embeddable
            ? json(std::abs(report["split_concurrence"].get<double>() -
                            oracles::split_concurrence_bruteforce(spec, SplitSpec{k})))
            : json(nullptr);
    if (tangle_defined && embeddable) {
        const double closed = report["n_tangle"].get<double>();
        const double numeric = (n == 3) ? oracles::three_tangle_bruteforce(spec)
                                        : n_tangle_numeric(embed_as_qubits(spec));
        deltas["n_tangle"] = std::abs(closed - numeric);
    } else {
        deltas["n_tangle"] = json(nullptr);
    }
    report["oracle_deltas"] = deltas;
    return report;
}

json collapsed_to_json(const MultimodeSuperposition &state) {
    const MultimodeSuperposition merged = canonicalize(state);
    json terms = json::array();
    for (const Term &t : merged.terms()) {
        json labels = json::array();
        for (const CoherentLabel &l : t.labels)
            labels.push_back({l.value.real(), l.value.imag()});
        terms.push_back({{"coeff", {t.coeff.real(), t.coeff.imag()}}, {"labels", labels}});
    }
    return json{{"modes", merged.modes()}, {"terms", terms}};
}

std::string pattern_to_string(const std::vector<int> &pattern) {
    std::string s;
    for (int b : pattern) s += static_cast<char>('0' + b);
    return s;
}

std::vector<int> parse_pattern(const std::string &s, int parties) {
    if (static_cast<int>(s.size()) != parties)
        throw std::invalid_argument("--pattern length must equal --n");
    std::vector<int> bits;
    for (char c : s) {
        if (c != '0' && c != '1') throw std::invalid_argument("--pattern must be a 0/1 string");
        bits.push_back(c - '0');
    }
    return bits;
}

json suite_to_json(const verify::SuiteReport &report) {
    json checks = json::array();
    for (const verify::Check &c : report.checks)
        checks.push_back({{"name", c.name},
                          {"value", c.value},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
    return json{{"suite", report.suite}, {"pass", report.pass()}, {"checks", checks}};
}

}  // namespace

int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Multipartite entangled coherent states: measures, sweeps, swap protocol"};
    app.require_subcommand(1);
    int exit_code = 0;

    // ---- measure ----------------------------------------------------------
    auto *measure = app.add_subcommand(
        "measure", "Entanglement measures for one (p or alpha, theta, N) point");
    double m_p = 0.0, m_alpha = 0.0, m_theta = 0.0, m_theta_pi = 0.0;
    int m_n = 0, m_k = 1;
    bool m_no_oracle = false;
    auto *m_op_p = measure->add_option("--p", m_p, "Overlap p = <-a|a> in [0,1]");
    auto *m_op_alpha =
        measure->add_option("--alpha", m_alpha, "Coherent amplitude (p = exp(-2 alpha^2))");
    m_op_p->excludes(m_op_alpha);
    auto *m_op_theta = measure->add_option("--theta", m_theta, "Relative phase in radians");
    auto *m_op_theta_pi =
        measure->add_option("--theta-pi", m_theta_pi, "Relative phase as a multiple of pi");
    m_op_theta->excludes(m_op_theta_pi);
    measure->add_option("--n", m_n, "Number of parties (>= 2)")->required();
    measure->add_option("--split", m_k, "First-block size k of the bipartite split");
    measure->add_flag("--no-oracle", m_no_oracle, "Skip the numeric cross-checks");
    measure->callback([&]() {
        if ((m_op_p->count() > 0) == (m_op_alpha->count() > 0))
            throw std::invalid_argument("exactly one of --p / --alpha is required");
        const double theta = resolve_theta(m_op_theta, m_op_theta_pi, m_theta, m_theta_pi);
        if (m_n < 2) throw std::invalid_argument("--n must be at least 2");
        if (m_k < 1 || m_k > m_n - 1)
            throw std::invalid_argument("--split must satisfy 1 <= k <= N-1");
        const MecsSpec spec = m_op_alpha->count()
                                  ? MecsSpec::from_alpha(m_n, theta, Complex{m_alpha, 0.0})
                                  : MecsSpec::from_p(m_n, theta, m_p);
        const std::optional<double> alpha_echo =
            m_op_alpha->count() ? std::optional<double>(m_alpha) : std::nullopt;
        out << measure_report(spec, m_k, !m_no_oracle, alpha_echo).dump(2) << "\n";
    });

    // ---- sweep ------------------------------------------------------------
    auto *sweep_cmd = app.add_subcommand(
        "sweep", "Emit concurrence/tangle grids as CSV (p,theta,n,concurrence,n_tangle)");
    int s_n = 0, s_p_steps = 0, s_theta_steps = 0;
    double s_p_max = -1.0;
    std::vector<int> s_n_list;
    std::vector<double> s_theta_list, s_theta_pi_list;
    std::string s_out;
    auto *s_op_n = sweep_cmd->add_option("--n", s_n, "Surface mode: number of parties");
    sweep_cmd->add_option("--p-steps", s_p_steps, "Points of the inclusive p grid")->required();
    auto *s_op_theta_steps = sweep_cmd->add_option(
        "--theta-steps", s_theta_steps, "Surface mode: points of the half-open [0,2pi) grid");
    auto *s_op_n_list = sweep_cmd->add_option("--n-list", s_n_list, "Curve mode: party counts")
                            ->delimiter(',');
    auto *s_op_theta_list =
        sweep_cmd->add_option("--theta-list", s_theta_list, "Curve mode: phases in radians")
            ->delimiter(',');
    auto *s_op_theta_pi_list =
        sweep_cmd
            ->add_option("--theta-pi-list", s_theta_pi_list, "Curve mode: phases as multiples of pi")
            ->delimiter(',');
    sweep_cmd->add_option("--p-max", s_p_max,
                          "Upper end of the p grid (default: 1 surface mode, 0.999 curve mode)");
    sweep_cmd->add_option("--out", s_out, "Output CSV path")->required();
    sweep_cmd->callback([&]() {
        const bool surface = s_op_n->count() > 0;
        const bool curves = s_op_n_list->count() > 0;
        if (surface == curves)
            throw std::invalid_argument("use either --n (surface) or --n-list (curves)");
        std::vector<sweep::Row> rows;
        if (surface) {
            if (s_op_theta_steps->count() == 0)
                throw std::invalid_argument("surface mode requires --theta-steps");
            rows = sweep::fig1_grid(s_n, s_p_steps, s_theta_steps,
                                    s_p_max < 0.0 ? 1.0 : s_p_max);
        } else {
            std::vector<double> thetas;
            if ((s_op_theta_list->count() > 0) == (s_op_theta_pi_list->count() > 0))
                throw std::invalid_argument(
                    "curve mode requires exactly one of --theta-list / --theta-pi-list");
            if (s_op_theta_list->count() > 0)
                thetas = s_theta_list;
            else
                for (double x : s_theta_pi_list) thetas.push_back(x * kPi);
            rows = sweep::fig2_grid(s_n_list, thetas, s_p_steps,
                                    s_p_max < 0.0 ? 0.999 : s_p_max);
        }
        std::ofstream file(s_out, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open output file: " + s_out);
        sweep::write_csv(rows, file);
        if (!file.good()) throw std::invalid_argument("failed writing output file: " + s_out);
    });

    // ---- simulate ---------------------------------------------------------
    auto *simulate = app.add_subcommand(
        "simulate", "Run the swap protocol for one generalized Bell outcome");
    double sim_alpha = 0.0, sim_tau = 0.0;
    int sim_n = 0;
    std::string sim_pattern, sim_sign;
    std::uint64_t sim_seed = 0;
    simulate->add_option("--alpha", sim_alpha, "Initial coherent amplitude")->required();
    simulate->add_option("--tau", sim_tau, "Normalized interaction time g*t")->required();
    simulate->add_option("--n", sim_n, "Number of ions (>= 2)")->required();
    auto *sim_op_pattern =
        simulate->add_option("--pattern", sim_pattern, "Outcome bit string, first bit 0");
    auto *sim_op_sign = simulate->add_option("--sign", sim_sign, "Outcome sign")
                            ->check(CLI::IsMember({"+", "-"}));
    auto *sim_op_seed = simulate->add_option(
        "--seed", sim_seed, "Sample the outcome from the Born distribution (explicit seed)");
    simulate->callback([&]() {
        if (sim_n < 2) throw std::invalid_argument("--n must be at least 2");
        const ProtocolParams params{CoherentLabel{sim_alpha, 0.0}, sim_tau, sim_n};
        const HybridState state = product_state(params);

        GeneralizedBellOutcome outcome;
        const bool explicit_outcome = sim_op_pattern->count() > 0 || sim_op_sign->count() > 0;
        if (explicit_outcome) {
            if (sim_op_pattern->count() == 0 || sim_op_sign->count() == 0)
                throw std::invalid_argument("--pattern and --sign must be given together");
            if (sim_op_seed->count() > 0)
                throw std::invalid_argument("--seed is for sampled outcomes; drop --pattern/--sign");
            outcome.pattern = parse_pattern(sim_pattern, sim_n);
            outcome.sign = sim_sign == "+" ? +1 : -1;
        } else {
            if (sim_op_seed->count() == 0)
                throw std::invalid_argument("either --pattern/--sign or --seed is required");
            const std::vector<GeneralizedBellOutcome> outcomes = enumerate_outcomes(sim_n);
            std::mt19937_64 rng(sim_seed);
            const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            double cumulative = 0.0;
            outcome = outcomes.back();
            for (const GeneralizedBellOutcome &candidate : outcomes) {
                cumulative += bell_measure(state, candidate).probability;
                if (u < cumulative) {
                    outcome = candidate;
                    break;
                }
            }
        }

        const MeasurementResult result = bell_measure(state, outcome);
        json report;
        report["inputs"] = {{"alpha", sim_alpha},
                            {"tau", sim_tau},
                            {"n", sim_n},
                            {"pattern", pattern_to_string(outcome.pattern)},
                            {"sign", outcome.sign > 0 ? "+" : "-"},
                            {"sampled", !explicit_outcome}};
        report["probability"] = result.probability;
        report["status"] = result.collapsed ? "ok" : "zero_probability";
        report["collapsed"] =
            result.collapsed ? collapsed_to_json(*result.collapsed) : json(nullptr);

        json fidelity = json(nullptr);
        const bool all_zeros =
            std::all_of(outcome.pattern.begin(), outcome.pattern.end(),
                        [](int b) { return b == 0; });
        if (result.collapsed && all_zeros && std::abs(sim_tau - kPi / 2.0) <= 1e-9) {
            const double theta = outcome.sign > 0 ? 0.0 : kPi;
            const MultimodeSuperposition analytic = build_mecs(
                MecsSpec::from_alpha(sim_n, theta, Complex{0.0, 1.0} * params.alpha.value));
            fidelity = std::norm(inner_product(analytic, *result.collapsed));
        }
        report["mecs_fidelity"] = fidelity;
        out << report.dump(2) << "\n";
    });

    // ---- solve-max --------------------------------------------------------
    auto *solve = app.add_subcommand(
        "solve-max", "Maximize the pair concurrence over p at fixed (N, theta)");
    int x_n = 0;
    double x_theta = 0.0, x_theta_pi = 0.0;
    auto *x_op_theta = solve->add_option("--theta", x_theta, "Relative phase in radians");
    auto *x_op_theta_pi =
        solve->add_option("--theta-pi", x_theta_pi, "Relative phase as a multiple of pi");
    x_op_theta->excludes(x_op_theta_pi);
    solve->add_option("--n", x_n, "Number of parties (>= 3)")->required();
    solve->callback([&]() {
        const double theta = resolve_theta(x_op_theta, x_op_theta_pi, x_theta, x_theta_pi);
        const MaxConcurrence result = solve_max_p(x_n, theta);
        out << json{{"n", x_n},
                    {"theta", theta},
                    {"p_star", result.p_star},
                    {"c_star", result.c_star},
                    {"boundary", result.boundary}}
                   .dump(2)
            << "\n";
    });

    // ---- verify -----------------------------------------------------------
    auto *verify_cmd = app.add_subcommand("verify", "Run an invariant suite");
    std::string suite;
    verify_cmd->add_option("--suite", suite, "wootters|tangle|protocol|cnot|table1|all")
        ->required()
        ->check(CLI::IsMember({"wootters", "tangle", "protocol", "cnot", "table1", "all"}));
    verify_cmd->callback([&]() {
        const std::vector<verify::SuiteReport> reports = verify::run_suites(suite);
        bool pass = true;
        json suites = json::array();
        for (const verify::SuiteReport &r : reports) {
            suites.push_back(suite_to_json(r));
            pass = pass && r.pass();
        }
        out << json{{"suites", suites}, {"pass", pass}}.dump(2) << "\n";
        if (!pass) exit_code = 1;
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace mecs::cli
