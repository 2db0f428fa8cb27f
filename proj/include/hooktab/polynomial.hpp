#ifndef HOOKTAB_POLYNOMIAL_HPP
#define HOOKTAB_POLYNOMIAL_HPP

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "hooktab/monomial.hpp"

namespace hooktab {

using Integer = boost::multiprecision::cpp_int;

/// Sparse polynomial in x, alpha, beta with exact integer coefficients,
/// truncated above total x-degree `cap`. Zero coefficients are never stored.
class TruncatedPolynomial {
public:
    using Terms = std::map<Monomial, Integer>;

    explicit TruncatedPolynomial(int cap = 0) : cap_(cap) {}
    static TruncatedPolynomial constant(int cap, const Integer& c);
    static TruncatedPolynomial monomial(int cap, const Monomial& m, const Integer& c = 1);

    int cap() const noexcept { return cap_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    Integer coefficient(const Monomial& m) const;

    /// Adds c*m unless m is above the cap.
    void add_term(const Monomial& m, const Integer& c);

    TruncatedPolynomial operator-() const;

    /// Throws CapMismatch when the caps differ.
    friend TruncatedPolynomial operator+(const TruncatedPolynomial& a, const TruncatedPolynomial& b);
    friend TruncatedPolynomial operator-(const TruncatedPolynomial& a, const TruncatedPolynomial& b);
    friend TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b);
    TruncatedPolynomial& operator+=(const TruncatedPolynomial& b);

    /// Exact division by (x_i - x_j). Throws std::domain_error when the
    /// division leaves a remainder.
    TruncatedPolynomial divided_by_difference(int i, int j) const;

    /// The same terms re-truncated at `cap`.
    TruncatedPolynomial with_cap(int cap) const;

    /// Terms whose non-x part has alpha- and beta-degree zero.
    TruncatedPolynomial x_part_only() const;

    /// One "coef * monomial" line per term, in monomial order.
    std::string to_string() const;

    friend bool operator==(const TruncatedPolynomial&, const TruncatedPolynomial&) = default;

private:
    void require_same_cap(const TruncatedPolynomial& b) const;

    int cap_;
    Terms terms_;
};

TruncatedPolynomial poly_add(const TruncatedPolynomial& a, const TruncatedPolynomial& b);
TruncatedPolynomial poly_mul(const TruncatedPolynomial& a, const TruncatedPolynomial& b);

/// prod_{i<j} (x_i - x_j) over x_1..x_n.
TruncatedPolynomial vandermonde(int n, int cap);

/// Monomials present in exactly one of a, b or with different coefficients,
/// as "lhs-coef | rhs-coef | monomial" lines.
std::vector<std::string> poly_diff(const TruncatedPolynomial& a, const TruncatedPolynomial& b);

}  // namespace hooktab

#endif  // HOOKTAB_POLYNOMIAL_HPP
