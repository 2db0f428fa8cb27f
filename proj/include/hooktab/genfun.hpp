#ifndef HOOKTAB_GENFUN_HPP
#define HOOKTAB_GENFUN_HPP

#include "hooktab/enumeration.hpp"
#include "hooktab/polynomial.hpp"

namespace hooktab {

/// Schur polynomial s_mu(x_1..x_n) as the sum of SSYT weights.
TruncatedPolynomial schur_poly(const Partition& mu, int n, int cap);

/// Sum of weight_hvt over enum_hvt(lambda, bounds). Throws CapTooSmall when
/// cap < |lambda| + max_excess.
TruncatedPolynomial hvt_genfun(const Partition& lambda, const EnumBounds& bounds, int cap);

enum class CoefficientModel { EXQ, BFT };

/// Sum of weight_mixed over EXQ(shape) or BFT(shape).
TruncatedPolynomial coefficient_genfun(const SkewShape& shape, CoefficientModel model, int cap);

/// Sum over mu ⊇ lambda with |mu/lambda| <= max_excess and at most
/// max_entry rows of s_mu(x_1..x_n) times coefficient_genfun(mu/lambda).
TruncatedPolynomial schur_expansion_genfun(const Partition& lambda, const EnumBounds& bounds, int cap,
                                           CoefficientModel model);

struct DetCheck {
    TruncatedPolynomial lhs;  // the determinant
    TruncatedPolynomial rhs;  // Vandermonde times hvt_genfun
};

/// Both sides of the bialternant identity for G_lambda(x_1..x_n):
///   det( x_j^(lambda_i+n-i) prod_{k<i}(1+beta_k x_j) / prod_{k<=lambda_i}(1-alpha_k x_j) )
///     = prod_{i<j}(x_i - x_j) * sum_{T in HVT(lambda), entries <= n} wt(T).
/// `cap` bounds the x-degree of G_lambda; both sides are truncated at
/// cap + n(n-1)/2 and are exact up to that degree. Throws CapTooSmall when
/// cap < |lambda| and std::invalid_argument when n < length(lambda).
DetCheck det_formula_check(const Partition& lambda, int n, int cap);

/// G_lambda(x_1..x_n) up to x-degree cap, extracted from the determinant by
/// exact division by the Vandermonde.
TruncatedPolynomial det_formula_series(const Partition& lambda, int n, int cap);

}  // namespace hooktab

#endif  // HOOKTAB_GENFUN_HPP
