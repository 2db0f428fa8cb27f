#include "hooktab/switching.hpp"

#include <random>

#include "hooktab/errors.hpp"

namespace hooktab {

namespace {

bool strict_pair(const MixedTableau& t) {
    return is_column_strict(t, Symbol::alpha) && is_row_strict(t, Symbol::beta);
}

void require_strict(const MixedTableau& t, const char* op) {
    if (!strict_pair(t))
        throw PreconditionViolation(std::string(op) + ": tableau must be alpha-column-strict and beta-row-strict");
}

void require_switchable(const MixedTableau& t, const char* op) {
    if (!is_switchable(t))
        throw PreconditionViolation(std::string(op) +
                                    ": tableau must be alpha-column-strict, beta-row-strict and (alpha,beta)-sorted");
}

int step_budget(const MixedTableau& t) {
    return 2 * (t.count(Symbol::alpha) + 1) * (t.shape().size() + 1);
}

bool holds(const MixedTableau& t, const Cell& c, Symbol s) {
    auto e = t.get(c);
    return e && e->symbol == s;
}

std::optional<MixedTableau> switch_unchecked(const MixedTableau& t, const SwitchMove& move) {
    if (!holds(t, move.cell, Symbol::alpha) || !holds(t, move.target(), Symbol::beta)) return std::nullopt;
    MixedTableau next = t.swapped(move.cell, move.target());
    if (!strict_pair(next)) return std::nullopt;
    return next;
}

// The skew cells listed top row first, left to right, with an index grid
// for neighbour lookups. Switching runs in place on this.
class FlatFilling {
public:
    explicit FlatFilling(const MixedTableau& t) : outer_(t.shape().outer()) {
        width_ = outer_.row_length(1) + 2;
        height_ = outer_.length() + 2;
        slot_.assign(static_cast<std::size_t>(width_ * height_), -1);
        for (int r = outer_.length(); r >= 1; --r)
            for (int c = t.shape().inner().row_length(r) + 1; c <= outer_.row_length(r); ++c) {
                slot_[key({r, c})] = static_cast<int>(cells_.size());
                cells_.push_back({r, c});
                vals_.push_back(t.at({r, c}));
            }
    }

    int find(const Cell& c) const {
        if (c.row > outer_.length() || c.col > outer_.row_length(1)) return -1;
        return slot_[key(c)];
    }

    // Strictness after swapping the alpha at position a with the beta at
    // position b, for a filling that was strict before: only pairs
    // involving a moved entry can change.
    bool swap_keeps_strict(int a, int b) const {
        const Cell& ca = cells_[static_cast<std::size_t>(a)];
        const Cell& cb = cells_[static_cast<std::size_t>(b)];
        const int r = vals_[static_cast<std::size_t>(a)].index;
        const int s = vals_[static_cast<std::size_t>(b)].index;
        for (std::size_t i = 0; i < cells_.size(); ++i) {
            if (static_cast<int>(i) == a || static_cast<int>(i) == b) continue;
            const Cell& c = cells_[i];
            const MixedEntry& e = vals_[i];
            if (e.is_alpha()) {
                if (c.weakly_southwest_of(cb) && e.index < r) return false;
                if (cb.weakly_southwest_of(c) && r < e.index) return false;
                if (c.col == cb.col && e.index == r) return false;
            } else {
                if (c.weakly_southwest_of(ca) && e.index < s) return false;
                if (ca.weakly_southwest_of(c) && s < e.index) return false;
                if (c.row == ca.row && e.index == s) return false;
            }
        }
        return true;
    }

    // Same order as available_switches.
    void moves(std::vector<std::pair<int, int>>& out) const {
        out.clear();
        for (std::size_t i = 0; i < cells_.size(); ++i) {
            if (!vals_[i].is_alpha()) continue;
            for (const Cell& target : {cells_[i].above(), cells_[i].right()}) {
                int j = find(target);
                if (j >= 0 && vals_[static_cast<std::size_t>(j)].is_beta() &&
                    swap_keeps_strict(static_cast<int>(i), j))
                    out.push_back({static_cast<int>(i), j});
            }
        }
    }

    void swap(int a, int b) { std::swap(vals_[static_cast<std::size_t>(a)], vals_[static_cast<std::size_t>(b)]); }

    MixedTableau write_into(MixedTableau t) const {
        for (std::size_t i = 0; i < cells_.size(); ++i)
            if (t.at(cells_[i]) != vals_[i]) t.set(cells_[i], vals_[i]);
        return t;
    }

private:
    std::size_t key(const Cell& c) const { return static_cast<std::size_t>(c.row * width_ + c.col); }

    Partition outer_;
    int width_ = 0;
    int height_ = 0;
    std::vector<int> slot_;
    std::vector<Cell> cells_;
    std::vector<MixedEntry> vals_;
};

}  // namespace

bool is_switchable(const MixedTableau& t) { return strict_pair(t) && is_sorted(t, Symbol::alpha); }

std::optional<MixedTableau> try_switch(const MixedTableau& t, const SwitchMove& move) {
    require_strict(t, "try_switch");
    return switch_unchecked(t, move);
}

std::vector<SwitchMove> available_switches(const MixedTableau& t) {
    std::vector<SwitchMove> out;
    const auto& outer = t.shape().outer();
    for (int r = outer.length(); r >= 1; --r) {
        for (int c = t.shape().inner().row_length(r) + 1; c <= outer.row_length(r); ++c) {
            for (Direction d : {Direction::up, Direction::right}) {
                SwitchMove m{{r, c}, d};
                if (switch_unchecked(t, m)) out.push_back(m);
            }
        }
    }
    return out;
}

namespace {

MixedTableau switch_loop(const MixedTableau& t, SwitchStrategy strategy, std::vector<MixedTableau>* trace) {
    // a light engine: strategies are seeded per input, often by the
    // hundred, and only ever choose among a handful of moves
    std::minstd_rand rng(static_cast<std::uint_fast32_t>(strategy.seed % 2147483646u + 1u));
    FlatFilling current(t);
    std::vector<std::pair<int, int>> moves;
    const int budget = step_budget(t);
    for (int steps = 0;; ++steps) {
        current.moves(moves);
        if (moves.empty()) break;
        if (steps >= budget) throw InternalError("fully_switch exceeded its step budget");
        std::size_t pick = 0;
        if (strategy.kind == SwitchStrategy::Kind::seeded_random)
            pick = std::uniform_int_distribution<std::size_t>(0, moves.size() - 1)(rng);
        current.swap(moves[pick].first, moves[pick].second);
        if (trace) trace->push_back(current.write_into(t));
    }
    return current.write_into(t);
}

}  // namespace

MixedTableau fully_switch(const MixedTableau& t, SwitchStrategy strategy, std::vector<MixedTableau>* trace) {
    require_switchable(t, "fully_switch");
    return switch_loop(t, strategy, trace);
}

MixedTableau switch_to_end(const MixedTableau& t, SwitchStrategy strategy, std::vector<MixedTableau>* trace) {
    require_strict(t, "switch_to_end");
    return switch_loop(t, strategy, trace);
}

MixedTableau shuffle(const MixedTableau& t, std::vector<MixedTableau>* trace) {
    require_switchable(t, "shuffle");
    MixedTableau current = t;
    const int budget = step_budget(t);
    int steps = 0;
    for (;;) {
        // Step (1)-(2): smallest index first, then the rightmost column.
        std::optional<Cell> chosen;
        int chosen_index = 0;
        for (const auto& [c, e] : current.entries()) {
            if (!e.is_alpha()) continue;
            if (!holds(current, c.above(), Symbol::beta) && !holds(current, c.right(), Symbol::beta)) continue;
            if (!chosen || e.index < chosen_index || (e.index == chosen_index && c.col > chosen->col)) {
                chosen = c;
                chosen_index = e.index;
            }
        }
        if (!chosen) break;
        // Step (3): slide the chosen alpha through the betas.
        Cell pos = *chosen;
        for (;;) {
            auto up = current.get(pos.above());
            auto right = current.get(pos.right());
            bool up_beta = up && up->is_beta();
            bool right_beta = right && right->is_beta();
            if (!up_beta && !right_beta) break;
            if (++steps > budget) throw InternalError("shuffle exceeded its step budget");
            Cell next = pos.right();
            if (up_beta && (!right_beta || up->index > right->index)) next = pos.above();
            current = current.swapped(pos, next);
            pos = next;
        }
        if (trace) trace->push_back(current);
    }
    return current;
}

std::vector<OutOfOrderWitness> gg_out_of_order(const MixedTableau& t) {
    require_strict(t, "gg_out_of_order");
    std::vector<OutOfOrderWitness> out;
    for (const auto& [c, e] : t.entries()) {
        if (!e.is_alpha()) continue;
        const int r = e.index;
        const int i = c.row;
        const int j = c.col;
        OutOfOrderWitness w{c};
        if (auto right = t.get(c.right()); right && right->is_beta())
            w.horizontal_applies = r < right->index + (j + 1) - i;
        if (auto up = t.get(c.above()); up && up->is_beta())
            w.vertical_applies = r <= up->index + j - (i + 1);
        if (w.horizontal_applies || w.vertical_applies) out.push_back(w);
    }
    return out;
}

MixedTableau gg_jdt(const MixedTableau& t, std::vector<MixedTableau>* trace) {
    require_switchable(t, "gg_jdt");
    MixedTableau current = t;
    const int budget = step_budget(t);
    for (int steps = 0;; ++steps) {
        auto witnesses = gg_out_of_order(current);
        if (witnesses.empty()) break;
        if (steps >= budget) throw InternalError("gg_jdt exceeded its step budget");
        const OutOfOrderWitness* chosen = nullptr;
        int chosen_index = 0;
        for (const auto& w : witnesses) {
            int idx = current.at(w.cell).index;
            if (!chosen || idx < chosen_index || (idx == chosen_index && w.cell.col > chosen->cell.col)) {
                chosen = &w;
                chosen_index = idx;
            }
        }
        bool horizontal = chosen->horizontal_applies;
        if (chosen->horizontal_applies && chosen->vertical_applies) {
            int s = current.at(chosen->cell.right()).index;
            int tt = current.at(chosen->cell.above()).index;
            horizontal = tt <= s;
        }
        Cell target = horizontal ? chosen->cell.right() : chosen->cell.above();
        current = current.swapped(chosen->cell, target);
        if (trace) trace->push_back(current);
    }
    return current;
}

bool is_biflagged(const MixedTableau& t) {
    if (!is_switchable(t) || !is_flagged_mixed(t)) return false;
    return is_flagged_mixed(shuffle(t));
}

}  // namespace hooktab
