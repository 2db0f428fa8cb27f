#ifndef HOOKTAB_MIXED_TABLEAU_HPP
#define HOOKTAB_MIXED_TABLEAU_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hooktab/monomial.hpp"
#include "hooktab/shape.hpp"

namespace hooktab {

enum class Symbol : int { alpha = 0, beta = 1 };

/// alpha_k (k > 0) or beta_k (any integer k).
struct MixedEntry {
    Symbol symbol = Symbol::alpha;
    int index = 1;

    bool is_alpha() const noexcept { return symbol == Symbol::alpha; }
    bool is_beta() const noexcept { return symbol == Symbol::beta; }
    /// "a2", "b-1".
    std::string to_string() const;

    friend auto operator<=>(const MixedEntry&, const MixedEntry&) = default;
};

inline MixedEntry alpha(int k) { return {Symbol::alpha, k}; }
inline MixedEntry beta(int k) { return {Symbol::beta, k}; }

/// A filling of every cell of a skew shape by mixed entries.
class MixedTableau {
public:
    MixedTableau() = default;
    /// Throws std::invalid_argument unless the domain of `entries` is exactly
    /// the cells of `shape` and every alpha index is positive.
    MixedTableau(SkewShape shape, const std::map<Cell, MixedEntry>& entries);

    /// Every cell of `shape` filled with `fill`; used as a scratch value by
    /// builders.
    static MixedTableau filled(SkewShape shape, MixedEntry fill);

    const SkewShape& shape() const noexcept { return shape_; }
    const MixedEntry& at(const Cell& c) const;
    /// The entry at `c`, or nullopt for inner cells and cells outside.
    std::optional<MixedEntry> get(const Cell& c) const;
    bool contains(const Cell& c) const noexcept { return shape_.contains(c); }

    /// Entry-wise replacement; `c` must be a skew cell.
    MixedTableau with(const Cell& c, const MixedEntry& e) const;
    MixedTableau swapped(const Cell& a, const Cell& b) const;
    void set(const Cell& c, const MixedEntry& e);

    std::vector<std::pair<Cell, MixedEntry>> entries() const;
    int count(Symbol s) const noexcept;

    friend bool operator==(const MixedTableau& a, const MixedTableau& b) {
        return a.shape_ == b.shape_ && a.rows_ == b.rows_;
    }
    friend bool operator<(const MixedTableau& a, const MixedTableau& b);

private:
    MixedEntry& slot(const Cell& c);

    SkewShape shape_;
    // rows_[r-1] holds the skew cells of row r, left to right.
    std::vector<std::vector<MixedEntry>> rows_;
};

struct StrictnessFlags {
    bool alpha_column_strict = false;
    bool alpha_row_strict = false;
    bool beta_column_strict = false;
    bool beta_row_strict = false;
    bool totally_column_strict = false;
    bool sorted_alpha_beta = false;
    bool sorted_beta_alpha = false;
    bool flagged_mixed = false;

    friend bool operator==(const StrictnessFlags&, const StrictnessFlags&) = default;
};

bool is_column_strict(const MixedTableau& t, Symbol s);
bool is_row_strict(const MixedTableau& t, Symbol s);
bool is_totally_column_strict(const MixedTableau& t);
/// `first`-cells form nu/inner and the others form outer/nu for a partition nu.
bool is_sorted(const MixedTableau& t, Symbol first);
/// alpha_k at (i,j) has 0 < k < j; beta_k at (i,j) has 0 < k < i.
bool is_flagged_mixed(const MixedTableau& t);

StrictnessFlags classify_mixed(const MixedTableau& t);

enum class ShiftSign { plus, minus };
/// Replaces every beta_r at a cell of content c by beta_{r+c} (plus) or
/// beta_{r-c} (minus).
MixedTableau c_beta_shift(const MixedTableau& t, ShiftSign sign);

bool is_exquisite(const MixedTableau& t);

/// Product of the entries. Throws NonpositiveBetaIndex on beta_k, k <= 0.
Monomial weight_mixed(const MixedTableau& t);

}  // namespace hooktab

#endif  // HOOKTAB_MIXED_TABLEAU_HPP
