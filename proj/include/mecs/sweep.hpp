#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mecs/measures.hpp"

namespace mecs::sweep {

struct Row {
    double p;
    double theta;
    int parties;
    double concurrence;               // pair concurrence, Eq.-(29) family
    std::optional<double> n_tangle;   // empty for odd N > 3
};

/// Concurrence surface grid for one N: p runs over an inclusive linspace
/// [0, p_max] (outer), theta over the half-open [0, 2pi) so that pi is on the
/// grid for even step counts (inner).
std::vector<Row> fig1_grid(int parties, int p_steps, int theta_steps, double p_max = 1.0);

/// Tangle curve families: p outer (inclusive [0, p_max]), theta middle,
/// N inner.
std::vector<Row> fig2_grid(const std::vector<int> &parties_list,
                           const std::vector<double> &thetas, int p_steps, double p_max);

/// Fixed header `p,theta,n,concurrence,n_tangle`, 17-significant-digit floats,
/// '\n' line endings; byte-deterministic for fixed inputs.
void write_csv(const std::vector<Row> &rows, std::ostream &os);

std::string format_g17(double value);

}  // namespace mecs::sweep
