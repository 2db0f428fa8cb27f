#include "hooktab/hook_tableau.hpp"

#include <algorithm>

namespace hooktab {

int HookCell::max_entry() const noexcept {
    int m = hook;
    if (!arms.empty()) m = std::max(m, arms.back());
    if (!legs.empty()) m = std::max(m, legs.back());
    return m;
}

bool HookCell::well_formed() const noexcept {
    if (hook < 1) return false;
    int prev = hook;
    for (int a : arms) {
        if (a < prev) return false;
        prev = a;
    }
    prev = hook;
    for (int l : legs) {
        if (l <= prev) return false;
        prev = l;
    }
    return true;
}

HookValuedTableau HookValuedTableau::from_rows_unchecked(std::vector<std::vector<HookCell>> rows) {
    while (!rows.empty() && rows.back().empty()) rows.pop_back();
    HookValuedTableau t;
    std::vector<int> parts;
    parts.reserve(rows.size());
    for (const auto& r : rows) parts.push_back(static_cast<int>(r.size()));
    t.shape_ = Partition(std::move(parts));
    t.rows_ = std::move(rows);
    return t;
}

int HookValuedTableau::arm_excess() const noexcept {
    int n = 0;
    for (const auto& row : rows_)
        for (const auto& c : row) n += static_cast<int>(c.arms.size());
    return n;
}

int HookValuedTableau::leg_excess() const noexcept {
    int n = 0;
    for (const auto& row : rows_)
        for (const auto& c : row) n += static_cast<int>(c.legs.size());
    return n;
}

std::string HvtViolation::to_string() const {
    std::string what;
    switch (kind) {
        case HvtViolationKind::row: what = "RowViolation"; break;
        case HvtViolationKind::column: what = "ColumnViolation"; break;
        case HvtViolationKind::hook_shape: what = "HookShapeViolation"; break;
        case HvtViolationKind::domain_mismatch: what = "DomainMismatch"; break;
    }
    what += " " + hooktab::to_string(cell);
    if (other) what += " " + hooktab::to_string(*other);
    return what;
}

namespace {

void check_conditions(const std::vector<std::vector<HookCell>>& rows, std::vector<HvtViolation>& out) {
    auto get = [&](int r, int c) -> const HookCell* {
        if (r < 1 || r > static_cast<int>(rows.size())) return nullptr;
        const auto& row = rows[static_cast<std::size_t>(r - 1)];
        if (c < 1 || c > static_cast<int>(row.size())) return nullptr;
        return &row[static_cast<std::size_t>(c - 1)];
    };
    for (int r = 1; r <= static_cast<int>(rows.size()); ++r) {
        for (int c = 1; c <= static_cast<int>(rows[static_cast<std::size_t>(r - 1)].size()); ++c) {
            const HookCell& cell = *get(r, c);
            if (!cell.well_formed()) out.push_back({HvtViolationKind::hook_shape, {r, c}, std::nullopt});
            if (const HookCell* right = get(r, c + 1); right && cell.max_entry() > right->min_entry())
                out.push_back({HvtViolationKind::row, {r, c}, Cell{r, c + 1}});
            if (const HookCell* up = get(r + 1, c); up && cell.max_entry() >= up->min_entry())
                out.push_back({HvtViolationKind::column, {r, c}, Cell{r + 1, c}});
        }
    }
}

}  // namespace

HvtValidation validate_hvt(const Partition& shape, const std::map<Cell, HookCell>& raw_cells) {
    HvtValidation result;
    bool domain_ok = static_cast<int>(raw_cells.size()) == shape.size();
    for (const auto& [cell, _] : raw_cells) {
        if (!shape.contains(cell)) {
            domain_ok = false;
            result.violations.push_back({HvtViolationKind::domain_mismatch, cell, std::nullopt});
        }
    }
    if (!domain_ok) {
        if (result.violations.empty())
            result.violations.push_back({HvtViolationKind::domain_mismatch, Cell{}, std::nullopt});
        return result;
    }
    std::vector<std::vector<HookCell>> rows(static_cast<std::size_t>(shape.length()));
    for (const auto& [cell, hc] : raw_cells) {
        auto& row = rows[static_cast<std::size_t>(cell.row - 1)];
        row.resize(static_cast<std::size_t>(shape.row_length(cell.row)));
        row[static_cast<std::size_t>(cell.col - 1)] = hc;
    }
    check_conditions(rows, result.violations);
    if (result.violations.empty()) result.tableau = HookValuedTableau::from_rows_unchecked(std::move(rows));
    return result;
}

HvtValidation validate_hvt_rows(const std::vector<std::vector<HookCell>>& rows) {
    HvtValidation result;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].empty() || (i > 0 && rows[i].size() > rows[i - 1].size())) {
            result.violations.push_back(
                {HvtViolationKind::domain_mismatch, Cell{static_cast<int>(i) + 1, 1}, std::nullopt});
            return result;
        }
    }
    check_conditions(rows, result.violations);
    if (result.violations.empty()) result.tableau = HookValuedTableau::from_rows_unchecked(rows);
    return result;
}

Monomial weight_hvt(const HookValuedTableau& t) {
    std::vector<Monomial::Term> terms;
    for (int r = 1; r <= t.shape().length(); ++r) {
        for (int c = 1; c <= t.shape().row_length(r); ++c) {
            const HookCell& hc = t.at({r, c});
            terms.push_back({x_var(hc.hook), 1});
            for (int a : hc.arms) {
                terms.push_back({x_var(a), 1});
                terms.push_back({alpha_var(c), 1});
            }
            for (int l : hc.legs) {
                terms.push_back({x_var(l), 1});
                terms.push_back({beta_var(r), 1});
            }
        }
    }
    return Monomial(std::move(terms));
}

}  // namespace hooktab
