#ifndef HOOKTAB_HOOK_TABLEAU_HPP
#define HOOKTAB_HOOK_TABLEAU_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hooktab/monomial.hpp"
#include "hooktab/shape.hpp"

namespace hooktab {

/// A semistandard tableau of hook shape: the hook entry h, the arm
/// h <= A_1 <= ... <= A_k to its right and the leg h < L_1 < ... < L_l above.
struct HookCell {
    int hook = 1;
    std::vector<int> arms;
    std::vector<int> legs;

    int min_entry() const noexcept { return hook; }
    int max_entry() const noexcept;
    int excess() const noexcept { return static_cast<int>(arms.size() + legs.size()); }
    /// Hook shape conditions: positivity, arm weakly increasing from h, leg
    /// strictly increasing from h.
    bool well_formed() const noexcept;

    friend auto operator<=>(const HookCell&, const HookCell&) = default;
};

/// A partition-shaped filling by hook cells. Rows are stored bottom-up.
/// Values are immutable; operations return new tableaux. Construction via
/// `validate_hvt` checks the row and column conditions; `from_rows_unchecked`
/// is for algorithms that preserve them by construction.
class HookValuedTableau {
public:
    HookValuedTableau() = default;

    static HookValuedTableau from_rows_unchecked(std::vector<std::vector<HookCell>> rows);

    const Partition& shape() const noexcept { return shape_; }
    const std::vector<std::vector<HookCell>>& rows() const noexcept { return rows_; }
    const HookCell& at(const Cell& c) const { return rows_.at(c.row - 1).at(c.col - 1); }
    bool contains(const Cell& c) const noexcept { return shape_.contains(c); }

    int arm_excess() const noexcept;
    int leg_excess() const noexcept;
    int excess() const noexcept { return arm_excess() + leg_excess(); }
    bool is_ssyt() const noexcept { return excess() == 0; }

    friend bool operator==(const HookValuedTableau& a, const HookValuedTableau& b) {
        return a.rows_ == b.rows_;
    }
    friend auto operator<=>(const HookValuedTableau& a, const HookValuedTableau& b) {
        return a.rows_ <=> b.rows_;
    }

private:
    Partition shape_;
    std::vector<std::vector<HookCell>> rows_;
};

enum class HvtViolationKind { row, column, hook_shape, domain_mismatch };

struct HvtViolation {
    HvtViolationKind kind;
    Cell cell;
    std::optional<Cell> other;  // the neighbouring cell for row/column violations

    std::string to_string() const;
    friend bool operator==(const HvtViolation&, const HvtViolation&) = default;
};

struct HvtValidation {
    std::optional<HookValuedTableau> tableau;
    std::vector<HvtViolation> violations;

    bool ok() const noexcept { return tableau.has_value(); }
};

/// Checks every hook-valued tableau condition and reports all violations,
/// in cell order (hook shape, then row, then column per cell).
HvtValidation validate_hvt(const Partition& shape, const std::map<Cell, HookCell>& raw_cells);
/// Same, with cells given as bottom-up rows; the shape is read off the row
/// lengths (a non-partition row profile is a domain mismatch).
HvtValidation validate_hvt_rows(const std::vector<std::vector<HookCell>>& rows);

/// alpha_i^(arm entries in column i) beta_i^(leg entries in row i)
/// x_i^(occurrences of i).
Monomial weight_hvt(const HookValuedTableau& t);

}  // namespace hooktab

#endif  // HOOKTAB_HOOK_TABLEAU_HPP
