#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mecs/oracles.hpp"
#include "mecs/protocol.hpp"

namespace py = pybind11;
using namespace mecs;

namespace {

MecsSpec make_spec(int parties, double theta, double p) {
    return MecsSpec::from_p(parties, theta, p);
}

GeneralizedBellOutcome make_outcome(const std::string &pattern, int sign) {
    GeneralizedBellOutcome outcome;
    for (char ch : pattern) outcome.pattern.push_back(ch - '0');
    outcome.sign = sign;
    return outcome;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Multipartite entangled coherent states: measures and swap protocol";

    m.def("overlap",
          [](Complex a, Complex b) { return overlap(CoherentLabel{a}, CoherentLabel{b}); },
          py::arg("a"), py::arg("b"),
          "Coherent-state overlap exp(-|a|^2/2 - |b|^2/2 + conj(a) b)");

    m.def("p_from_alpha", [](Complex alpha) { return std::exp(-2.0 * std::norm(alpha)); },
          py::arg("alpha"), "Overlap p = <-a|a> = exp(-2|a|^2)");

    m.def("normalization",
          [](double p, double theta, int n) { return make_spec(n, theta, p).normalization(); },
          py::arg("p"), py::arg("theta"), py::arg("n"));

    m.def("pair_concurrence",
          [](double p, double theta, int n) {
              return pair_concurrence_closed(make_spec(n, theta, p));
          },
          py::arg("p"), py::arg("theta"), py::arg("n"),
          "Pairwise concurrence (p^(N-2) - p^N)/(1 + p^N cos theta)");

    m.def("split_concurrence",
          [](double p, double theta, int n, int k) {
              return split_concurrence_closed(make_spec(n, theta, p), SplitSpec{k});
          },
          py::arg("p"), py::arg("theta"), py::arg("n"), py::arg("k") = 1);

    m.def("three_tangle",
          [](double p, double theta) { return three_tangle(make_spec(3, theta, p)); },
          py::arg("p"), py::arg("theta"));

    m.def("n_tangle",
          [](double p, double theta, int n) { return n_tangle_closed(make_spec(n, theta, p)); },
          py::arg("p"), py::arg("theta"), py::arg("n"),
          "Closed-form N-tangle (even N, or N = 3)");

    m.def("n_tangle_numeric",
          [](const Eigen::VectorXcd &amplitudes) {
              const int parties = static_cast<int>(std::llround(std::log2(
                  static_cast<double>(amplitudes.size()))));
              return n_tangle_numeric(QubitState(parties, amplitudes));
          },
          py::arg("amplitudes"), "|<psi| sigma_y^N |psi*>|^2 of a normalized state vector");

    m.def("embed_as_qubits",
          [](double p, double theta, int n) {
              return embed_as_qubits(make_spec(n, theta, p)).amplitudes();
          },
          py::arg("p"), py::arg("theta"), py::arg("n"),
          "MECS amplitudes in the orthogonal two-state basis (party 1 = MSB)");

    m.def("ghz_state", [](int n, double theta) { return ghz_state(n, theta).amplitudes(); },
          py::arg("n"), py::arg("theta") = 0.0);
    m.def("w_state", [](int n) { return w_state(n).amplitudes(); }, py::arg("n"));

    m.def("wootters_concurrence",
          [](const Eigen::MatrixXcd &rho) {
              const ConcurrenceDiagnostics diag = wootters_concurrence(DensityOperator(rho));
              return py::make_tuple(diag.concurrence, diag.lambdas);
          },
          py::arg("rho"), "(concurrence, lambdas) of a 4x4 two-qubit density matrix");

    m.def("reduced_pair_density",
          [](double p, double theta, int n) {
              return reduced_pair_density(make_spec(n, theta, p)).matrix();
          },
          py::arg("p"), py::arg("theta"), py::arg("n"));

    m.def("solve_max_p",
          [](int n, double theta) {
              const MaxConcurrence r = solve_max_p(n, theta);
              return py::make_tuple(r.p_star, r.c_star, r.boundary);
          },
          py::arg("n"), py::arg("theta"), "(p*, C*, boundary) maximizing the pair concurrence");

    m.def("special_state_table", []() {
        py::list rows;
        for (const SpecialStateRow &row : special_state_table())
            rows.append(py::dict(py::arg("state") = row.state, py::arg("p") = row.p,
                                 py::arg("theta") = row.theta, py::arg("n") = row.parties,
                                 py::arg("expected") = row.expected,
                                 py::arg("computed") = row.computed));
        return rows;
    });

    m.def("bell_probabilities",
          [](Complex alpha, double tau, int n) {
              const HybridState state = product_state(ProtocolParams{CoherentLabel{alpha}, tau, n});
              py::list out;
              for (const GeneralizedBellOutcome &outcome : enumerate_outcomes(n)) {
                  std::string pattern;
                  for (int b : outcome.pattern) pattern += static_cast<char>('0' + b);
                  out.append(py::make_tuple(pattern, outcome.sign,
                                            bell_measure(state, outcome).probability));
              }
              return out;
          },
          py::arg("alpha"), py::arg("tau"), py::arg("n"),
          "(pattern, sign, probability) for every generalized Bell outcome");

    m.def("swap_fidelity",
          [](Complex alpha, int n, int sign) {
              const double half_pi = std::acos(-1.0) / 2.0;
              return swap_end_to_end(ProtocolParams{CoherentLabel{alpha}, half_pi, n},
                                     make_outcome(std::string(n, '0'), sign));
          },
          py::arg("alpha"), py::arg("n"), py::arg("sign") = 1,
          "Fidelity of the collapsed state with the analytic MECS at tau = pi/2");

    m.def("gate_g", [](int n) { return gate_g(n); }, py::arg("n"));

    m.def("cnot_residual",
          [](double kx, double kp, int cutoff) {
              const CnotVerification r = verify_cnot_identity(CnotParams{kx, kp, cutoff}, 1, 2);
              return py::make_tuple(r.residual, r.databus_infidelity);
          },
          py::arg("kx"), py::arg("kp"), py::arg("cutoff") = 64,
          "(residual, databus infidelity) of the conditional-displacement CNOT");
}
