#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace mecs {

using Complex = std::complex<double>;

// Degenerate two-element basis (p -> 1, the two coherent states coincide).
struct DegenerateBasisError : std::domain_error {
    using std::domain_error::domain_error;
};

// Exactly-null superposition (p = 1, theta = pi: the two branches cancel).
struct NullStateError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Complex amplitude labeling a single-mode coherent state.
struct CoherentLabel {
    Complex value{0.0, 0.0};

    CoherentLabel() = default;
    CoherentLabel(Complex v) : value(v) {}
    CoherentLabel(double re, double im) : value(re, im) {}
    explicit CoherentLabel(double re) : value(re, 0.0) {}

    bool finite() const;
    bool operator==(const CoherentLabel &) const = default;
};

/// Coherent-state overlap <a|b> = exp(-|a|^2/2 - |b|^2/2 + conj(a)*b).
/// This convention gives <-a|a> = exp(-2|a|^2), the overlap p used throughout.
Complex overlap(const CoherentLabel &a, const CoherentLabel &b);

struct Term {
    Complex coeff;
    std::vector<CoherentLabel> labels;  // one label per mode
};

/// Finite linear combination of N-mode coherent product states.
/// The term list is kept exact; identical label tuples are merged only on
/// request (canonicalize), never on construction.
class MultimodeSuperposition {
  public:
    MultimodeSuperposition(int modes, std::vector<Term> terms);

    int modes() const { return modes_; }
    const std::vector<Term> &terms() const { return terms_; }

    double squared_norm() const;

    // Fails unless the state has a nonzero finite norm.
    void require_normalizable() const;

  private:
    int modes_;
    std::vector<Term> terms_;
};

/// Sesquilinear inner product (conjugate-linear in x, linear in y).
Complex inner_product(const MultimodeSuperposition &x, const MultimodeSuperposition &y);

/// Exact action of a_1 a_2 ... a_N: each coefficient picks up the product of
/// the term's labels. May return a zero superposition (all-vacuum input).
MultimodeSuperposition apply_annihilation_all(const MultimodeSuperposition &x);

/// Merge terms whose label tuples agree componentwise to 1e-12, dropping
/// exact-zero coefficients that result. Display/bookkeeping only.
MultimodeSuperposition canonicalize(const MultimodeSuperposition &x);

/// Scale all coefficients by s.
MultimodeSuperposition scaled(const MultimodeSuperposition &x, Complex s);

/// Normalize to unit norm. Throws NullStateError on a zero state.
MultimodeSuperposition normalized(const MultimodeSuperposition &x);

/// Two-element orthogonal basis {|0>,|1>} over span{|a>,|-a>} with
/// |1> = (|-a> - p|0>)/M, M = sqrt(1-p^2), so |-a> = M|1> + p|0>.
struct OrthoBasisPair {
    double p;
    double m;
};

/// Throws DegenerateBasisError for p >= 1 and std::domain_error for p < 0.
OrthoBasisPair ortho_basis(double p);

}  // namespace mecs
