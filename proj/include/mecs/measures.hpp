#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mecs/states.hpp"

namespace mecs {

/// Hermitian, unit-trace, positive semidefinite matrix on a 2^n space.
class DensityOperator {
  public:
    explicit DensityOperator(Eigen::MatrixXcd matrix);

    const Eigen::MatrixXcd &matrix() const { return m_; }
    Eigen::Index dim() const { return m_.rows(); }

  private:
    Eigen::MatrixXcd m_;
};

struct ConcurrenceDiagnostics {
    std::array<double, 4> lambdas;  // descending
    double concurrence;
};

/// Size of the first block in a bipartite split (1 <= k <= N-1).
struct SplitSpec {
    int k = 1;
};

/// Generalized entangled nonorthogonal state: two product branches of
/// arbitrary linearly independent single-party states with real overlap p'.
struct GeneralPairSpec {
    double p_prime;
    double theta_prime;
};

struct PairMeasures {
    double split_concurrence;
    double pair_concurrence;
    std::optional<double> n_tangle;  // absent for odd N > 3
};

struct MaxConcurrence {
    double p_star;
    double c_star;
    bool boundary;  // true when the stationarity equation has no interior root
};

struct SpecialStateRow {
    std::string state;
    double p;
    double theta;
    int parties;
    double expected;
    double computed;
};

/// Two-party marginal of the MECS after the parity flip on party 2, in the
/// orthogonal basis: N^2 (|A><A| + |B><B| + q e^{i t}|B><A| + q e^{-i t}|A><B|)
/// with |A> = p|00> + M|01>, |B> = p|00> + M|10>, q = p^(N-2).
/// N = 2 is the q = 1 (pure projector) case of the same expression.
DensityOperator reduced_pair_density(const MecsSpec &spec);

/// Wootters concurrence of a two-qubit density operator, with the four
/// lambda's (square roots of the eigenvalues of rho rho~). Computed from a
/// rank-revealing factorization rho = Phi Phi^dag: the nonzero lambda's are
/// the singular values of the symmetric matrix Phi^T (sy x sy) Phi, which
/// keeps the structurally zero lambda's exactly zero.
ConcurrenceDiagnostics wootters_concurrence(const DensityOperator &rho);

/// (p^(N-2) - p^N) / (1 + p^N cos theta); 2/N (N>2) resp. 1 (N=2) at the
/// degenerate point p = 1, theta = pi.
double pair_concurrence_closed(const MecsSpec &spec);

/// sqrt((1-p^2k)(1-p^2(N-k))) / (1 + p^N cos theta); 2 sqrt(k(N-k))/N at the
/// degenerate point.
double split_concurrence_closed(const MecsSpec &spec, SplitSpec split);

/// 3-tangle via the residual composition C^2_{1(23)} - 2 C^2_{12} (N = 3 only).
double three_tangle(const MecsSpec &spec);

/// |<psi| sy^(x)N |psi*>|^2. Identically zero for odd N.
double n_tangle_numeric(const QubitState &psi);

/// (1-p^2)^N / (1 + p^N cos theta)^2 for even N, also valid for N = 3.
/// Rejects odd N > 3 (no closed form exists).
double n_tangle_closed(const MecsSpec &spec);

/// Interior maximum of the pair concurrence over p at fixed (N, theta):
/// bisection on 2 p^N cos theta + N p^2 = N - 2. Falls back to a 1e4-point
/// boundary scan when there is no interior root.
MaxConcurrence solve_max_p(int parties, double theta);

/// Closed-form measures with (p, theta) replaced by (p', theta').
PairMeasures general_pair_measures(const GeneralPairSpec &spec, int parties, SplitSpec split);

/// The six special-state rows (W, Psi-, Phi, GHZ, vacuum, N->infinity),
/// regenerated from the implemented formulas at fixed representative inputs.
std::vector<SpecialStateRow> special_state_table();

}  // namespace mecs
