#include "hooktab/uncrowding.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

#include "hooktab/errors.hpp"

namespace hooktab {

namespace {

using Rows = std::vector<std::vector<HookCell>>;

enum class Role { hook, arm, leg };

HookCell& cell_at(Rows& rows, int r, int c) {
    return rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)];
}

int row_len(const Rows& rows, int r) {
    if (r < 1 || r > static_cast<int>(rows.size())) return 0;
    return static_cast<int>(rows[static_cast<std::size_t>(r - 1)].size());
}

int col_height(const Rows& rows, int c) {
    int h = 0;
    while (row_len(rows, h + 1) >= c) ++h;
    return h;
}

void insert_sorted(std::vector<int>& v, int x) { v.insert(std::upper_bound(v.begin(), v.end(), x), x); }

void replace_value(HookCell& cell, Role role, int from, int to) {
    if (role == Role::hook) {
        cell.hook = to;
        return;
    }
    auto& list = role == Role::arm ? cell.arms : cell.legs;
    auto it = std::find(list.begin(), list.end(), from);
    if (it == list.end()) throw InternalError("bumped entry vanished from its cell");
    *it = to;
    std::sort(list.begin(), list.end());
}

// Candidate search inside one cell; roles are tried in the given order and
// only a strictly smaller value displaces an earlier candidate.
struct Candidate {
    int value = std::numeric_limits<int>::max();
    int row = 0;
    int col = 0;
    Role role = Role::hook;
    bool found() const { return row != 0; }
};

template <typename Pred>
void scan_cell(const HookCell& cell, int r, int c, std::initializer_list<Role> roles, Pred eligible,
               Candidate& best) {
    for (Role role : roles) {
        auto consider = [&](int v) {
            if (eligible(v) && v < best.value) best = {v, r, c, role};
        };
        if (role == Role::hook) consider(cell.hook);
        if (role == Role::arm)
            for (int v : cell.arms) consider(v);
        if (role == Role::leg)
            for (int v : cell.legs) consider(v);
    }
}

}  // namespace

BumpResult arm_bump(const HookValuedTableau& t) {
    Rows rows = t.rows();
    int c = 0;
    for (int r = 1; r <= static_cast<int>(rows.size()); ++r)
        for (int j = 1; j <= row_len(rows, r); ++j)
            if (!cell_at(rows, r, j).arms.empty()) c = std::max(c, j);
    if (c == 0) return {t, std::nullopt};

    int a = 0;
    int r = 0;
    for (int i = 1; i <= col_height(rows, c); ++i) {
        const auto& arms = cell_at(rows, i, c).arms;
        if (arms.empty()) continue;
        if (arms.back() == a) throw InternalError("largest arm entry of the column is not in a single cell");
        if (arms.back() > a) {
            a = arms.back();
            r = i;
        }
    }
    cell_at(rows, r, c).arms.pop_back();

    Candidate best;
    for (int i = 1; i <= col_height(rows, c + 1); ++i)
        scan_cell(cell_at(rows, i, c + 1), i, c + 1, {Role::hook, Role::arm, Role::leg},
                  [a](int v) { return v >= a; }, best);

    BumpRecord record{BumpKind::arm, {r, c}, std::nullopt, a};
    int target_row = 0;
    if (best.found()) {
        HookCell& target = cell_at(rows, best.row, c + 1);
        replace_value(target, best.role, best.value, a);
        insert_sorted(target.arms, best.value);
        target_row = best.row;
    } else {
        target_row = col_height(rows, c + 1) + 1;
        if (row_len(rows, target_row) != c) throw InternalError("arm bump would not create a valid cell");
        rows[static_cast<std::size_t>(target_row - 1)].push_back(HookCell{a, {}, {}});
        record.created = Cell{target_row, c + 1};
    }
    if (target_row == r) {
        auto& legs = cell_at(rows, r, c).legs;
        auto split = std::upper_bound(legs.begin(), legs.end(), a);
        auto& dest = cell_at(rows, r, c + 1).legs;
        dest.insert(dest.end(), split, legs.end());
        std::sort(dest.begin(), dest.end());
        legs.erase(split, legs.end());
    }
    return {HookValuedTableau::from_rows_unchecked(std::move(rows)), record};
}

BumpResult leg_bump(const HookValuedTableau& t) {
    Rows rows = t.rows();
    int r = 0;
    for (int i = 1; i <= static_cast<int>(rows.size()); ++i)
        for (int j = 1; j <= row_len(rows, i); ++j)
            if (!cell_at(rows, i, j).legs.empty()) r = std::max(r, i);
    if (r == 0) return {t, std::nullopt};

    int l = 0;
    int c = 0;
    for (int j = 1; j <= row_len(rows, r); ++j) {
        const auto& legs = cell_at(rows, r, j).legs;
        if (legs.empty()) continue;
        if (legs.back() == l) throw InternalError("largest leg entry of the row is not in a single cell");
        if (legs.back() > l) {
            l = legs.back();
            c = j;
        }
    }
    cell_at(rows, r, c).legs.pop_back();

    Candidate best;
    for (int j = 1; j <= row_len(rows, r + 1); ++j)
        scan_cell(cell_at(rows, r + 1, j), r + 1, j, {Role::hook, Role::leg, Role::arm},
                  [l](int v) { return v > l; }, best);

    BumpRecord record{BumpKind::leg, {r, c}, std::nullopt, l};
    int target_col = 0;
    if (best.found()) {
        HookCell& target = cell_at(rows, r + 1, best.col);
        replace_value(target, best.role, best.value, l);
        insert_sorted(target.legs, best.value);
        target_col = best.col;
    } else {
        if (r + 1 > static_cast<int>(rows.size())) rows.emplace_back();
        target_col = row_len(rows, r + 1) + 1;
        if (col_height(rows, target_col) != r) throw InternalError("leg bump would not create a valid cell");
        rows[static_cast<std::size_t>(r)].push_back(HookCell{l, {}, {}});
        record.created = Cell{r + 1, target_col};
    }
    if (target_col == c) {
        // Arms that are at least the moved leg entry would break column
        // strictness below it, so they travel up with it.
        auto& arms = cell_at(rows, r, c).arms;
        auto split = std::lower_bound(arms.begin(), arms.end(), l);
        auto& dest = cell_at(rows, r + 1, c).arms;
        dest.insert(dest.end(), split, arms.end());
        std::sort(dest.begin(), dest.end());
        arms.erase(split, arms.end());
    }
    return {HookValuedTableau::from_rows_unchecked(std::move(rows)), record};
}

namespace {

BumpResult single_uncrowd(const HookValuedTableau& t, BumpResult (*bump)(const HookValuedTableau&)) {
    BumpResult first = bump(t);
    if (!first.record) return first;
    BumpRecord record = *first.record;
    HookValuedTableau current = std::move(first.tableau);
    // Each bump either grows the shape or moves the entry one column right /
    // one row up, so the number of steps is bounded by the tableau size.
    const int budget = 2 * (t.shape().size() + t.excess() + 2) * (t.shape().length() + t.shape().row_length(1) + 2);
    int steps = 1;
    while (current.shape().size() == t.shape().size()) {
        if (++steps > budget) throw InternalError("single uncrowding exceeded its step budget");
        BumpResult next = bump(current);
        if (!next.record) throw InternalError("bump chain stopped before the shape grew");
        record.created = next.record->created;
        current = std::move(next.tableau);
    }
    return {std::move(current), record};
}

}  // namespace

BumpResult arm_uncrowd(const HookValuedTableau& t) { return single_uncrowd(t, &arm_bump); }
BumpResult leg_uncrowd(const HookValuedTableau& t) { return single_uncrowd(t, &leg_bump); }

UncrowdWord UncrowdWord::parse(const std::string& text) {
    UncrowdWord w;
    for (char ch : text) {
        if (ch == 'A') {
            w.letters.push_back(UncrowdLetter::A);
        } else if (ch == 'L') {
            w.letters.push_back(UncrowdLetter::L);
        } else {
            throw std::invalid_argument(std::string("uncrowding word letter must be A or L, got '") + ch + "'");
        }
    }
    return w;
}

std::string UncrowdWord::to_string() const {
    std::string out;
    for (auto l : letters) out += l == UncrowdLetter::A ? 'A' : 'L';
    return out;
}

UncrowdResult uncrowd(const HookValuedTableau& t, const UncrowdWord& w) {
    UncrowdResult result;
    HookValuedTableau current = t;
    std::map<Cell, MixedEntry> recorded;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        BumpResult step = *it == UncrowdLetter::A ? arm_uncrowd(current) : leg_uncrowd(current);
        if (step.record) {
            const BumpRecord& rec = *step.record;
            MixedEntry symbol = *it == UncrowdLetter::A ? alpha(rec.origin.col) : beta(rec.origin.row);
            recorded[*rec.created] = symbol;
            result.records.push_back(rec);
        }
        result.steps.push_back({*it, step.tableau, step.record});
        current = std::move(step.tableau);
    }
    result.recording = MixedTableau(SkewShape(current.shape(), t.shape()), recorded);
    result.insertion = std::move(current);
    return result;
}

UncrowdResult uncrowd_canonical(const HookValuedTableau& t, CanonicalOrder order) {
    UncrowdWord w;
    const auto arms = static_cast<std::size_t>(t.arm_excess());
    const auto legs = static_cast<std::size_t>(t.leg_excess());
    if (order == CanonicalOrder::LA) {
        w.letters.assign(legs, UncrowdLetter::L);
        w.letters.insert(w.letters.end(), arms, UncrowdLetter::A);
    } else {
        w.letters.assign(arms, UncrowdLetter::A);
        w.letters.insert(w.letters.end(), legs, UncrowdLetter::L);
    }
    return uncrowd(t, w);
}

bool has_type(const HookValuedTableau& t, const TypedWord& w) {
    HookValuedTableau current = t;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        BumpResult next = it->op == BumpOp::arm ? arm_bump(current) : leg_bump(current);
        if (next.tableau.shape().size() - current.shape().size() != it->epsilon) return false;
        current = std::move(next.tableau);
    }
    return true;
}

HookValuedTableau apply_bumps(const HookValuedTableau& t, const std::vector<BumpOp>& ops_reading_order) {
    HookValuedTableau current = t;
    for (auto it = ops_reading_order.rbegin(); it != ops_reading_order.rend(); ++it)
        current = (*it == BumpOp::arm ? arm_bump(current) : leg_bump(current)).tableau;
    return current;
}

}  // namespace hooktab
