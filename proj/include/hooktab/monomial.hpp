#ifndef HOOKTAB_MONOMIAL_HPP
#define HOOKTAB_MONOMIAL_HPP

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace hooktab {

enum class VarKind : int { x = 0, alpha = 1, beta = 2 };

struct Var {
    VarKind kind = VarKind::x;
    int index = 1;

    friend auto operator<=>(const Var&, const Var&) = default;
};

inline Var x_var(int i) { return {VarKind::x, i}; }
inline Var alpha_var(int i) { return {VarKind::alpha, i}; }
inline Var beta_var(int i) { return {VarKind::beta, i}; }

/// A monomial in x_i, alpha_i, beta_i (i >= 1). Stored as a sorted list of
/// (variable, exponent) pairs with no zero exponents.
class Monomial {
public:
    using Term = std::pair<Var, int>;

    Monomial() = default;
    /// Accepts unsorted input with repeats; exponents are summed and zeros
    /// dropped. Throws std::invalid_argument on a nonpositive index or a
    /// negative exponent.
    explicit Monomial(std::vector<Term> terms);

    static Monomial of(Var v, int exponent = 1) { return Monomial({{v, exponent}}); }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    bool is_one() const noexcept { return terms_.empty(); }

    int exponent(Var v) const noexcept;
    int degree(VarKind kind) const noexcept;
    int x_degree() const noexcept { return degree(VarKind::x); }

    /// The factor consisting only of variables of `kind`.
    Monomial restricted_to(VarKind kind) const;
    /// The factor with all variables of `kind` removed.
    Monomial without(VarKind kind) const;

    /// Divides out one power of `v`; precondition exponent(v) >= 1.
    Monomial divided_by(Var v) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    Monomial& operator*=(const Monomial& b) { return *this = *this * b; }

    /// "x1^2 x3^1 a1^1 b2^1"; "1" for the unit monomial.
    std::string to_string() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Graded: total x-degree first, then lexicographic on the term list.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<Term> terms_;
};

}  // namespace hooktab

#endif  // HOOKTAB_MONOMIAL_HPP
