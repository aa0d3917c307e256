#pragma once

#include <Eigen/Dense>
#include <optional>

#include "mecs/algebra.hpp"

namespace mecs {

/// Parameterization of the balanced N-party MECS
///   N(|a>^N + e^{i theta} |-a>^N),   N = [2 + 2 p^N cos(theta)]^(-1/2),
/// given either the amplitude a or the overlap p = exp(-2|a|^2) directly.
class MecsSpec {
  public:
    static MecsSpec from_alpha(int parties, double theta, Complex alpha);
    static MecsSpec from_p(int parties, double theta, double p);

    int parties() const { return parties_; }
    double theta() const { return theta_; }
    double p() const { return p_; }
    bool has_alpha() const { return alpha_.has_value(); }

    // The label used for the coherent-state representation. When the spec was
    // given by p, this is the real nonnegative amplitude with exp(-2 a^2) = p;
    // p = 0 uses a^2 = 360, for which the overlap underflows to exactly 0.
    Complex alpha() const;

    /// Normalization constant of the two-branch state.
    /// Throws NullStateError when 2 + 2 p^N cos(theta) vanishes.
    double normalization() const;

  private:
    MecsSpec(int parties, double theta, std::optional<Complex> alpha, double p);

    int parties_;
    double theta_;
    std::optional<Complex> alpha_;
    double p_;
};

/// N-qubit state vector; party 1 is the most significant bit of the index.
class QubitState {
  public:
    QubitState(int parties, Eigen::VectorXcd amplitudes);

    int parties() const { return parties_; }
    const Eigen::VectorXcd &amplitudes() const { return amp_; }
    Eigen::Index dim() const { return amp_.size(); }

    /// Bit of party i (1-based) within basis index b.
    int bit(Eigen::Index b, int party) const;

  private:
    int parties_;
    Eigen::VectorXcd amp_;
};

/// The MECS in its exact coherent-state representation (two terms).
MultimodeSuperposition build_mecs(const MecsSpec &spec);

/// The MECS written in the orthogonal basis |0> = |a>, |1> = (|-a> - p|0>)/M:
/// amplitude of bit pattern b is N (delta_{b,0} + e^{i theta} p^z(b) M^o(b))
/// with z/o the number of zero/one bits. Requires p < 1.
QubitState embed_as_qubits(const MecsSpec &spec);

/// (|0...0> + e^{i theta} |1...1>)/sqrt(2).
QubitState ghz_state(int parties, double theta);

/// Uniform single-excitation state, N^(-1/2) sum_k |0..1_k..0>.
QubitState w_state(int parties);

}  // namespace mecs
