#ifndef HOOKTAB_ENUMERATION_HPP
#define HOOKTAB_ENUMERATION_HPP

#include <utility>
#include <vector>

#include "hooktab/hook_tableau.hpp"
#include "hooktab/mixed_tableau.hpp"

namespace hooktab {

/// Desk-scale truncation of the hook-valued tableaux of a shape: entries at
/// most max_entry, arm_excess + leg_excess at most max_excess.
struct EnumBounds {
    int max_entry = 3;
    int max_excess = 2;
};

// Every generator returns its family in canonical order: lexicographic on
// the text serialization, without duplicates.

std::vector<HookValuedTableau> enum_ssyt(const Partition& mu, int max_entry);
std::vector<HookValuedTableau> enum_hvt(const Partition& lambda, const EnumBounds& bounds);
std::vector<MixedTableau> enum_exquisite(const SkewShape& shape);
std::vector<MixedTableau> enum_biflagged(const SkewShape& shape);
/// alpha-column-strict, beta-row-strict, (alpha,beta)-sorted tableaux with
/// every index in 1..max_index: the domain of tableau switching.
std::vector<MixedTableau> enum_switchable(const SkewShape& shape, int max_index);

/// Every skew shape outer/inner with |outer| <= max_outer_size (inner may be
/// empty or equal to outer).
std::vector<SkewShape> skew_shapes_up_to(int max_outer_size);

/// (P, gg_jdt(Q)) where (P, Q) is the canonical LA uncrowding of `t`.
std::pair<HookValuedTableau, MixedTableau> phi(const HookValuedTableau& t);

}  // namespace hooktab

#endif  // HOOKTAB_ENUMERATION_HPP
