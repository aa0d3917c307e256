#include "mecs/sweep.hpp"

#include <cmath>
#include <cstdio>

namespace mecs::sweep {

namespace {

const double kTwoPi = 2.0 * std::acos(-1.0);

Row evaluate(int parties, double p, double theta) {
    const MecsSpec spec = MecsSpec::from_p(parties, theta, p);
    Row row{p, theta, parties, pair_concurrence_closed(spec), std::nullopt};
    if (parties % 2 == 0 || parties == 3) row.n_tangle = n_tangle_closed(spec);
    return row;
}

}  // namespace

std::vector<Row> fig1_grid(int parties, int p_steps, int theta_steps, double p_max) {
    if (p_steps < 2 || theta_steps < 1)
        throw std::invalid_argument("fig1_grid: need at least 2 p points and 1 theta point");
    std::vector<Row> rows;
    rows.reserve(static_cast<size_t>(p_steps) * theta_steps);
    for (int i = 0; i < p_steps; ++i) {
        const double p = p_max * i / (p_steps - 1);
        for (int j = 0; j < theta_steps; ++j)
            rows.push_back(evaluate(parties, p, kTwoPi * j / theta_steps));
    }
    return rows;
}

std::vector<Row> fig2_grid(const std::vector<int> &parties_list,
                           const std::vector<double> &thetas, int p_steps, double p_max) {
    if (parties_list.empty() || thetas.empty() || p_steps < 2)
        throw std::invalid_argument("fig2_grid: empty grid");
    std::vector<Row> rows;
    rows.reserve(static_cast<size_t>(p_steps) * thetas.size() * parties_list.size());
    for (int i = 0; i < p_steps; ++i) {
        const double p = p_max * i / (p_steps - 1);
        for (double theta : thetas)
            for (int n : parties_list) rows.push_back(evaluate(n, p, theta));
    }
    return rows;
}

std::string format_g17(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

void write_csv(const std::vector<Row> &rows, std::ostream &os) {
    os << "p,theta,n,concurrence,n_tangle\n";
    for (const Row &r : rows) {
        os << format_g17(r.p) << ',' << format_g17(r.theta) << ',' << r.parties << ','
           << format_g17(r.concurrence) << ',';
        if (r.n_tangle) os << format_g17(*r.n_tangle);
        os << '\n';
    }
}

}  // namespace mecs::sweep
