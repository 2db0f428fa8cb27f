#include "hooktab/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace hooktab {

Monomial::Monomial(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
    for (const auto& [v, e] : terms) {
        if (v.index < 1) throw std::invalid_argument("monomial variable index must be positive");
        if (e < 0) throw std::invalid_argument("monomial exponent must be nonnegative");
        if (!terms_.empty() && terms_.back().first == v) {
            terms_.back().second += e;
        } else {
            terms_.push_back({v, e});
        }
    }
    std::erase_if(terms_, [](const Term& t) { return t.second == 0; });
}

int Monomial::exponent(Var v) const noexcept {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), v,
                               [](const Term& t, const Var& key) { return t.first < key; });
    return (it != terms_.end() && it->first == v) ? it->second : 0;
}

int Monomial::degree(VarKind kind) const noexcept {
    int d = 0;
    for (const auto& [v, e] : terms_)
        if (v.kind == kind) d += e;
    return d;
}

Monomial Monomial::restricted_to(VarKind kind) const {
    Monomial m;
    for (const auto& t : terms_)
        if (t.first.kind == kind) m.terms_.push_back(t);
    return m;
}

Monomial Monomial::without(VarKind kind) const {
    Monomial m;
    for (const auto& t : terms_)
        if (t.first.kind != kind) m.terms_.push_back(t);
    return m;
}

Monomial Monomial::divided_by(Var v) const {
    Monomial m = *this;
    for (auto it = m.terms_.begin(); it != m.terms_.end(); ++it) {
        if (it->first == v) {
            if (--it->second == 0) m.terms_.erase(it);
            return m;
        }
    }
    throw std::invalid_argument("monomial is not divisible by the variable");
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
            out.terms_.push_back(*i++);
        } else if (i == a.terms_.end() || j->first < i->first) {
            out.terms_.push_back(*j++);
        } else {
            out.terms_.push_back({i->first, i->second + j->second});
            ++i;
            ++j;
        }
    }
    return out;
}

std::string Monomial::to_string() const {
    if (terms_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : terms_) {
        if (!out.empty()) out += ' ';
        out += v.kind == VarKind::x ? 'x' : v.kind == VarKind::alpha ? 'a' : 'b';
        out += std::to_string(v.index);
        out += '^';
        out += std::to_string(e);
    }
    return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.x_degree() <=> b.x_degree(); c != 0) return c;
    return a.terms_ <=> b.terms_;
}

}  // namespace hooktab
