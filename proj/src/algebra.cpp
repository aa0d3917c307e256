#include "mecs/algebra.hpp"

#include <cmath>

namespace mecs {

namespace {
constexpr double kLabelMergeTol = 1e-12;
}

bool CoherentLabel::finite() const {
    return std::isfinite(value.real()) && std::isfinite(value.imag());
}

Complex overlap(const CoherentLabel &a, const CoherentLabel &b) {
    if (!a.finite() || !b.finite())
        throw std::invalid_argument("overlap: non-finite coherent label");
    const Complex exponent = -0.5 * std::norm(a.value) - 0.5 * std::norm(b.value) +
                             std::conj(a.value) * b.value;
    return std::exp(exponent);
}

MultimodeSuperposition::MultimodeSuperposition(int modes, std::vector<Term> terms)
    : modes_(modes), terms_(std::move(terms)) {
    if (modes_ < 1)
        throw std::invalid_argument("superposition: mode count must be positive");
    if (terms_.empty())
        throw std::invalid_argument("superposition: empty term list");
    for (const Term &t : terms_) {
        if (static_cast<int>(t.labels.size()) != modes_)
            throw std::invalid_argument("superposition: term with wrong label count");
        if (!std::isfinite(t.coeff.real()) || !std::isfinite(t.coeff.imag()))
            throw std::invalid_argument("superposition: non-finite coefficient");
        for (const CoherentLabel &l : t.labels)
            if (!l.finite())
                throw std::invalid_argument("superposition: non-finite label");
    }
}

double MultimodeSuperposition::squared_norm() const {
    return inner_product(*this, *this).real();
}

void MultimodeSuperposition::require_normalizable() const {
    const double n2 = squared_norm();
    if (!(n2 > 0.0) || !std::isfinite(n2))
        throw NullStateError("superposition: squared norm is not strictly positive");
}

Complex inner_product(const MultimodeSuperposition &x, const MultimodeSuperposition &y) {
    if (x.modes() != y.modes())
        throw std::invalid_argument("inner_product: mode-count mismatch");
    Complex acc{0.0, 0.0};
    for (const Term &tx : x.terms()) {
        for (const Term &ty : y.terms()) {
            Complex ov{1.0, 0.0};
            for (int k = 0; k < x.modes(); ++k) ov *= overlap(tx.labels[k], ty.labels[k]);
            acc += std::conj(tx.coeff) * ty.coeff * ov;
        }
    }
    return acc;
}

MultimodeSuperposition apply_annihilation_all(const MultimodeSuperposition &x) {
    std::vector<Term> out = x.terms();
    for (Term &t : out) {
        Complex factor{1.0, 0.0};
        for (const CoherentLabel &l : t.labels) factor *= l.value;
        t.coeff *= factor;
    }
    return MultimodeSuperposition(x.modes(), std::move(out));
}

namespace {
bool labels_match(const std::vector<CoherentLabel> &a, const std::vector<CoherentLabel> &b) {
    for (size_t k = 0; k < a.size(); ++k) {
        if (std::abs(a[k].value.real() - b[k].value.real()) > kLabelMergeTol) return false;
        if (std::abs(a[k].value.imag() - b[k].value.imag()) > kLabelMergeTol) return false;
    }
    return true;
}
}  // namespace

MultimodeSuperposition canonicalize(const MultimodeSuperposition &x) {
    std::vector<Term> merged;
    for (const Term &t : x.terms()) {
        bool found = false;
        for (Term &m : merged) {
            if (labels_match(m.labels, t.labels)) {
                m.coeff += t.coeff;
                found = true;
                break;
            }
        }
        if (!found) merged.push_back(t);
    }
    std::vector<Term> kept;
    for (const Term &m : merged)
        if (m.coeff != Complex{0.0, 0.0}) kept.push_back(m);
    if (kept.empty()) kept.push_back(merged.front());  // keep a zero term rather than none
    return MultimodeSuperposition(x.modes(), std::move(kept));
}

MultimodeSuperposition scaled(const MultimodeSuperposition &x, Complex s) {
    std::vector<Term> out = x.terms();
    for (Term &t : out) t.coeff *= s;
    return MultimodeSuperposition(x.modes(), std::move(out));
}

MultimodeSuperposition normalized(const MultimodeSuperposition &x) {
    x.require_normalizable();
    return scaled(x, Complex{1.0 / std::sqrt(x.squared_norm()), 0.0});
}

OrthoBasisPair ortho_basis(double p) {
    if (!(p >= 0.0))
        throw std::domain_error("ortho_basis: overlap p must be nonnegative");
    if (p >= 1.0)
        throw DegenerateBasisError("ortho_basis: p >= 1 makes the basis states collinear");
    return OrthoBasisPair{p, std::sqrt(1.0 - p * p)};
}

}  // namespace mecs
