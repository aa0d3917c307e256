#pragma once

#include "mecs/measures.hpp"

// Brute-force cross-check routes. Everything here is deliberately independent
// of the closed-form implementations in measures.hpp: marginals come from
// explicit partial traces of the 2^N embedding, eigenvalues from dense
// solvers. Used by the test suites and the `verify` CLI command.

namespace mecs::oracles {

/// Partial trace of |psi><psi| keeping the listed parties (1-based, ascending;
/// party 1 is the most significant bit).
Eigen::MatrixXcd partial_trace(const Eigen::VectorXcd &psi, int parties,
                               const std::vector<int> &keep);

/// Apply a one-qubit operator to the given party of a state vector.
Eigen::VectorXcd apply_one_qubit(const Eigen::VectorXcd &psi, int parties, int party,
                                 const Eigen::Matrix2cd &op);

/// Two-party marginal from the full embedding: parity flip on party 2
/// ([[p, M], [M, -p]] in the orthogonal basis), then trace out parties 3..N.
DensityOperator pair_marginal_bruteforce(const MecsSpec &spec);

/// Pure-split concurrence from the k-party marginal purity,
/// C = sqrt(2 (1 - Tr rho_k^2)), valid for rank-2 marginals.
double split_concurrence_bruteforce(const MecsSpec &spec, SplitSpec split);

/// Fully numeric 3-tangle: C^2_{1(23)} - 2 C^2_{12} with the split concurrence
/// from marginal purity and the pair concurrence from Wootters on the traced
/// marginal.
double three_tangle_bruteforce(const MecsSpec &spec);

/// Wootters lambda's by the literal route: eigenvalues of rho (sy x sy) rho*
/// (sy x sy) from a general complex eigensolver, imaginary parts discarded,
/// negatives clamped, square-rooted, sorted descending.
std::array<double, 4> wootters_lambdas_eigensolver(const DensityOperator &rho);

/// Dense scan argmax of the closed-form pair concurrence over p in [0,1].
MaxConcurrence grid_scan_max(int parties, double theta, double step);

}  // namespace mecs::oracles
