#include "hooktab/polynomial.hpp"

#include <stdexcept>

#include "hooktab/errors.hpp"

namespace hooktab {

TruncatedPolynomial TruncatedPolynomial::constant(int cap, const Integer& c) {
    TruncatedPolynomial p(cap);
    p.add_term(Monomial(), c);
    return p;
}

TruncatedPolynomial TruncatedPolynomial::monomial(int cap, const Monomial& m, const Integer& c) {
    TruncatedPolynomial p(cap);
    p.add_term(m, c);
    return p;
}

Integer TruncatedPolynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Integer(0) : it->second;
}

void TruncatedPolynomial::add_term(const Monomial& m, const Integer& c) {
    if (c == 0 || m.x_degree() > cap_) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void TruncatedPolynomial::require_same_cap(const TruncatedPolynomial& b) const {
    if (cap_ != b.cap_)
        throw CapMismatch("truncation caps differ: " + std::to_string(cap_) + " vs " + std::to_string(b.cap_));
}

TruncatedPolynomial TruncatedPolynomial::operator-() const {
    TruncatedPolynomial out = *this;
    for (auto& [_, c] : out.terms_) c = -c;
    return out;
}

TruncatedPolynomial& TruncatedPolynomial::operator+=(const TruncatedPolynomial& b) {
    require_same_cap(b);
    for (const auto& [m, c] : b.terms_) add_term(m, c);
    return *this;
}

TruncatedPolynomial operator+(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
    TruncatedPolynomial out = a;
    out += b;
    return out;
}

TruncatedPolynomial operator-(const TruncatedPolynomial& a, const TruncatedPolynomial& b) { return a + (-b); }

TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
    a.require_same_cap(b);
    TruncatedPolynomial out(a.cap_);
    for (const auto& [ma, ca] : a.terms_) {
        const int da = ma.x_degree();
        for (const auto& [mb, cb] : b.terms_) {
            if (da + mb.x_degree() > a.cap_) continue;
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

TruncatedPolynomial poly_add(const TruncatedPolynomial& a, const TruncatedPolynomial& b) { return a + b; }
TruncatedPolynomial poly_mul(const TruncatedPolynomial& a, const TruncatedPolynomial& b) { return a * b; }

TruncatedPolynomial TruncatedPolynomial::divided_by_difference(int i, int j) const {
    // Repeatedly cancel the term with the highest power of x_i:
    // c*m = c*(m/x_i)*(x_i - x_j) + c*(m/x_i)*x_j.
    const Var xi = x_var(i);
    const Var xj = x_var(j);
    TruncatedPolynomial rest = *this;
    TruncatedPolynomial quotient(cap_);
    while (!rest.is_zero()) {
        auto lead = rest.terms_.begin();
        int best = -1;
        for (auto it = rest.terms_.begin(); it != rest.terms_.end(); ++it) {
            int e = it->first.exponent(xi);
            if (e > best) {
                best = e;
                lead = it;
            }
        }
        if (best == 0) throw std::domain_error("polynomial is not divisible by the variable difference");
        const Monomial q = lead->first.divided_by(xi);
        const Integer c = lead->second;
        quotient.add_term(q, c);
        rest.add_term(q * Monomial::of(xi), -c);
        rest.add_term(q * Monomial::of(xj), c);
    }
    return quotient;
}

TruncatedPolynomial TruncatedPolynomial::with_cap(int cap) const {
    TruncatedPolynomial out(cap);
    for (const auto& [m, c] : terms_) out.add_term(m, c);
    return out;
}

TruncatedPolynomial TruncatedPolynomial::x_part_only() const {
    TruncatedPolynomial out(cap_);
    for (const auto& [m, c] : terms_)
        if (m.degree(VarKind::alpha) == 0 && m.degree(VarKind::beta) == 0) out.add_term(m, c);
    return out;
}

std::string TruncatedPolynomial::to_string() const {
    std::string out;
    for (const auto& [m, c] : terms_) {
        out += c.str();
        if (!m.is_one()) out += " * " + m.to_string();
        out += '\n';
    }
    return out;
}

TruncatedPolynomial vandermonde(int n, int cap) {
    TruncatedPolynomial v = TruncatedPolynomial::constant(cap, 1);
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            TruncatedPolynomial d(cap);
            d.add_term(Monomial::of(x_var(i)), 1);
            d.add_term(Monomial::of(x_var(j)), -1);
            v = v * d;
        }
    }
    return v;
}

std::vector<std::string> poly_diff(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
    std::vector<std::string> out;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    auto line = [](const Integer& ca, const Integer& cb, const Monomial& m) {
        return ca.str() + " | " + cb.str() + " | " + m.to_string();
    };
    while (ia != a.terms().end() || ib != b.terms().end()) {
        if (ib == b.terms().end() || (ia != a.terms().end() && ia->first < ib->first)) {
            out.push_back(line(ia->second, 0, ia->first));
            ++ia;
        } else if (ia == a.terms().end() || ib->first < ia->first) {
            out.push_back(line(0, ib->second, ib->first));
            ++ib;
        } else {
            if (ia->second != ib->second) out.push_back(line(ia->second, ib->second, ia->first));
            ++ia;
            ++ib;
        }
    }
    return out;
}

}  // namespace hooktab
