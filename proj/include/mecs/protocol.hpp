#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>

#include "mecs/states.hpp"

namespace mecs {

/// Truncation too aggressive for a meaningful verdict.
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProtocolParams {
    CoherentLabel alpha;  // initial amplitude, identical for all modes
    double tau;           // normalized time g*t
    int parties;
};

/// Joint ion/phonon state: a vibrational superposition attached to each
/// electronic computational basis index (party 1 = most significant bit).
class HybridState {
  public:
    HybridState(int parties, std::vector<std::pair<std::uint32_t, MultimodeSuperposition>> branches);

    int parties() const { return parties_; }
    const std::vector<std::pair<std::uint32_t, MultimodeSuperposition>> &branches() const {
        return branches_;
    }
    double squared_norm() const;

  private:
    int parties_;
    std::vector<std::pair<std::uint32_t, MultimodeSuperposition>> branches_;
};

/// Generalized Bell state 2^(-1/2)(|i_1..i_N> +- |~i_1..~i_N>). The first bit
/// is fixed to 0 so each pattern/complement pair is counted once.
struct GeneralizedBellOutcome {
    std::vector<int> pattern;
    int sign = +1;  // +1 or -1
};

/// Single ion after phase evolution: 2^(-1/2)(|a e^{i tau}>|0> + |a e^{-i tau}>|1>).
/// The evolved state is the same for every ion; `party` is only range-checked.
HybridState evolve_single(const ProtocolParams &params, int party);

/// N-fold product of evolved single-ion states: 2^(-N/2) branches over all
/// electronic patterns, mode k carrying a e^{+i tau} (bit 0) or a e^{-i tau}.
HybridState product_state(const ProtocolParams &params);

struct MeasurementResult {
    double probability;
    std::optional<MultimodeSuperposition> collapsed;  // absent for zero-probability outcomes
};

/// Project the electronic register onto the generalized Bell state and
/// renormalize the surviving vibrational component.
MeasurementResult bell_measure(const HybridState &state, const GeneralizedBellOutcome &outcome);

/// All 2^N outcomes (2^(N-1) canonical patterns x 2 signs), deterministic order.
std::vector<GeneralizedBellOutcome> enumerate_outcomes(int parties);

/// The generalized Bell state as a qubit vector.
QubitState bell_basis_state(int parties, const GeneralizedBellOutcome &outcome);

/// Disentangling gate G = H_1 CN_{1N} ... CN_{13} CN_{12}.
Eigen::MatrixXcd gate_g(int parties);

struct CnotParams {
    double kx;
    double kp;
    int cutoff;  // Fock truncation dimension, >= 16
};

struct CnotVerification {
    double residual;            // operator norm on the low-energy subspace
    double databus_infidelity;  // worst-case coherent round-trip (alpha = 0.5)
    int cutoff;
    int subspace_dim;  // Fock states 0..cutoff/4 kept in the residual
};

/// Check that the four conditional-displacement exponentials compose to the
/// two-qubit phase gate exp(-i kx kp (1-s_iz)(1-s_jx)/4), which is the CNOT
/// at kx kp = pi, on a truncated Fock space. control/target pick the qubit
/// roles (1 or 2). Throws TruncationError when the cutoff cannot support the
/// databus input.
CnotVerification verify_cnot_identity(const CnotParams &params, int control, int target);

/// Full swap run at tau = pi/2, all-zeros pattern: fidelity of the collapsed
/// vibrational state with the analytic MECS (alpha' = i alpha, theta in {0, pi}).
double swap_end_to_end(const ProtocolParams &params, const GeneralizedBellOutcome &outcome);

}  // namespace mecs
