#include "hooktab/genfun.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "hooktab/errors.hpp"

namespace hooktab {

TruncatedPolynomial schur_poly(const Partition& mu, int n, int cap) {
    TruncatedPolynomial out(cap);
    for (const auto& t : enum_ssyt(mu, n)) out.add_term(weight_hvt(t), 1);
    return out;
}

TruncatedPolynomial hvt_genfun(const Partition& lambda, const EnumBounds& bounds, int cap) {
    if (cap < lambda.size() + bounds.max_excess)
        throw CapTooSmall("cap " + std::to_string(cap) + " is below |lambda| + excess");
    TruncatedPolynomial out(cap);
    for (const auto& t : enum_hvt(lambda, bounds)) out.add_term(weight_hvt(t), 1);
    return out;
}

TruncatedPolynomial coefficient_genfun(const SkewShape& shape, CoefficientModel model, int cap) {
    TruncatedPolynomial out(cap);
    const auto family = model == CoefficientModel::EXQ ? enum_exquisite(shape) : enum_biflagged(shape);
    for (const auto& t : family) out.add_term(weight_mixed(t), 1);
    return out;
}

TruncatedPolynomial schur_expansion_genfun(const Partition& lambda, const EnumBounds& bounds, int cap,
                                           CoefficientModel model) {
    TruncatedPolynomial out(cap);
    for (const Partition& mu : partitions_containing(lambda, bounds.max_excess)) {
        if (mu.length() > bounds.max_entry) continue;
        TruncatedPolynomial coeff = coefficient_genfun(SkewShape(mu, lambda), model, cap);
        if (coeff.is_zero()) continue;
        out += schur_poly(mu, bounds.max_entry, cap) * coeff;
    }
    return out;
}

namespace {

TruncatedPolynomial det_entry(const Partition& lambda, int n, int i, int j, int cap) {
    const int li = lambda.row_length(i);
    TruncatedPolynomial e = TruncatedPolynomial::monomial(cap, Monomial::of(x_var(j), li + n - i));
    for (int k = 1; k < i; ++k) {
        TruncatedPolynomial f = TruncatedPolynomial::constant(cap, 1);
        f.add_term(Monomial({{beta_var(k), 1}, {x_var(j), 1}}), 1);
        e = e * f;
    }
    for (int k = 1; k <= li; ++k) {
        TruncatedPolynomial geometric(cap);
        for (int m = 0; m <= cap; ++m) geometric.add_term(Monomial({{alpha_var(k), m}, {x_var(j), m}}), 1);
        e = e * geometric;
    }
    return e;
}

int permutation_sign(const std::vector<int>& p) {
    int inversions = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b) inversions += p[a] > p[b];
    return inversions % 2 ? -1 : 1;
}

}  // namespace

DetCheck det_formula_check(const Partition& lambda, int n, int cap) {
    if (cap < lambda.size()) throw CapTooSmall("cap " + std::to_string(cap) + " is below |lambda|");
    if (n < lambda.length()) throw std::invalid_argument("n must be at least the number of rows of lambda");
    const int full_cap = cap + n * (n - 1) / 2;

    std::vector<std::vector<TruncatedPolynomial>> m(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m[static_cast<std::size_t>(i - 1)].push_back(det_entry(lambda, n, i, j, full_cap));

    TruncatedPolynomial det(full_cap);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        TruncatedPolynomial term = TruncatedPolynomial::constant(full_cap, permutation_sign(perm));
        for (int i = 0; i < n && !term.is_zero(); ++i)
            term = term * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));

    const EnumBounds bounds{n, cap - lambda.size()};
    TruncatedPolynomial g = hvt_genfun(lambda, bounds, cap).with_cap(full_cap);
    return {std::move(det), vandermonde(n, full_cap) * g};
}

TruncatedPolynomial det_formula_series(const Partition& lambda, int n, int cap) {
    TruncatedPolynomial q = det_formula_check(lambda, n, cap).lhs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) q = q.divided_by_difference(i, j);
    return q.with_cap(cap);
}

}  // namespace hooktab
