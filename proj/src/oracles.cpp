#include "mecs/oracles.hpp"

#include <algorithm>
#include <cmath>

namespace mecs::oracles {

namespace {

// Spread the bits of `value` (party order, MSB first within the sublist) onto
// the full-register positions named by `parties_1based`.
Eigen::Index scatter_bits(Eigen::Index value, int total_parties,
                          const std::vector<int> &parties_1based) {
    Eigen::Index out = 0;
    const int k = static_cast<int>(parties_1based.size());
    for (int i = 0; i < k; ++i) {
        const Eigen::Index bit = (value >> (k - 1 - i)) & 1;
        out |= bit << (total_parties - parties_1based[i]);
    }
    return out;
}

}  // namespace

Eigen::MatrixXcd partial_trace(const Eigen::VectorXcd &psi, int parties,
                               const std::vector<int> &keep) {
    if (psi.size() != (Eigen::Index{1} << parties))
        throw std::invalid_argument("partial_trace: dimension mismatch");
    std::vector<int> env;
    for (int i = 1; i <= parties; ++i)
        if (std::find(keep.begin(), keep.end(), i) == keep.end()) env.push_back(i);

    const Eigen::Index dk = Eigen::Index{1} << keep.size();
    const Eigen::Index de = Eigen::Index{1} << env.size();
    std::vector<Eigen::Index> koff(dk), eoff(de);
    for (Eigen::Index x = 0; x < dk; ++x) koff[x] = scatter_bits(x, parties, keep);
    for (Eigen::Index e = 0; e < de; ++e) eoff[e] = scatter_bits(e, parties, env);

    Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dk, dk);
    for (Eigen::Index x = 0; x < dk; ++x)
        for (Eigen::Index y = 0; y < dk; ++y)
            for (Eigen::Index e = 0; e < de; ++e)
                rho(x, y) += psi[koff[x] | eoff[e]] * std::conj(psi[koff[y] | eoff[e]]);
    return rho;
}

Eigen::VectorXcd apply_one_qubit(const Eigen::VectorXcd &psi, int parties, int party,
                                 const Eigen::Matrix2cd &op) {
    if (party < 1 || party > parties)
        throw std::invalid_argument("apply_one_qubit: party index out of range");
    const Eigen::Index mask = Eigen::Index{1} << (parties - party);
    Eigen::VectorXcd out(psi.size());
    for (Eigen::Index b = 0; b < psi.size(); ++b) {
        const Eigen::Index bit = (b & mask) ? 1 : 0;
        out[b] = op(bit, 0) * psi[b & ~mask] + op(bit, 1) * psi[b | mask];
    }
    return out;
}

DensityOperator pair_marginal_bruteforce(const MecsSpec &spec) {
    const QubitState psi = embed_as_qubits(spec);
    const double p = spec.p();
    const double m = std::sqrt(1.0 - p * p);
    Eigen::Matrix2cd parity;  // embedding of (-1)^(a^dag a) on span{|a>,|-a>}
    parity << p, m, m, -p;
    const Eigen::VectorXcd flipped =
        apply_one_qubit(psi.amplitudes(), spec.parties(), 2, parity);
    return DensityOperator(partial_trace(flipped, spec.parties(), {1, 2}));
}

double split_concurrence_bruteforce(const MecsSpec &spec, SplitSpec split) {
    const QubitState psi = embed_as_qubits(spec);
    std::vector<int> keep;
    for (int i = 1; i <= split.k; ++i) keep.push_back(i);
    const Eigen::MatrixXcd rho = partial_trace(psi.amplitudes(), spec.parties(), keep);
    const double purity = (rho * rho).trace().real();
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

double three_tangle_bruteforce(const MecsSpec &spec) {
    if (spec.parties() != 3)
        throw std::invalid_argument("three_tangle_bruteforce: N = 3 only");
    const double c_split = split_concurrence_bruteforce(spec, SplitSpec{1});
    const double c_pair = wootters_concurrence(pair_marginal_bruteforce(spec)).concurrence;
    return c_split * c_split - 2.0 * c_pair * c_pair;
}

std::array<double, 4> wootters_lambdas_eigensolver(const DensityOperator &rho) {
    if (rho.dim() != 4)
        throw std::invalid_argument("wootters_lambdas_eigensolver: expected 4x4");
    Eigen::Matrix4cd y = Eigen::Matrix4cd::Zero();
    y(0, 3) = -1.0;
    y(1, 2) = 1.0;
    y(2, 1) = 1.0;
    y(3, 0) = -1.0;
    const Eigen::Matrix4cd flipped = y * rho.matrix().conjugate() * y;
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(rho.matrix() * flipped, false);
    std::array<double, 4> lambdas{};
    for (Eigen::Index i = 0; i < 4; ++i)
        lambdas[static_cast<size_t>(i)] = std::sqrt(std::max(0.0, es.eigenvalues()[i].real()));
    std::sort(lambdas.begin(), lambdas.end(), std::greater<>());
    return lambdas;
}

MaxConcurrence grid_scan_max(int parties, double theta, double step) {
    double best_p = 0.0, best_c = -1.0;
    const int steps = static_cast<int>(std::llround(1.0 / step));
    for (int i = 0; i <= steps; ++i) {
        const double p = static_cast<double>(i) / steps;
        const double c = pair_concurrence_closed(MecsSpec::from_p(parties, theta, p));
        if (c > best_c) {
            best_c = c;
            best_p = p;
        }
    }
    return MaxConcurrence{best_p, best_c, true};
}

}  // namespace mecs::oracles
