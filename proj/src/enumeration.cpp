#include "hooktab/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "hooktab/switching.hpp"
#include "hooktab/text_format.hpp"
#include "hooktab/uncrowding.hpp"

namespace hooktab {

namespace {

template <typename T>
void canonical_sort(std::vector<T>& items) {
    std::vector<std::pair<std::string, T>> keyed;
    keyed.reserve(items.size());
    for (auto& t : items) {
        std::string key = serialize(t);
        keyed.emplace_back(std::move(key), std::move(t));
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    keyed.erase(std::unique(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
                keyed.end());
    items.clear();
    for (auto& [_, t] : keyed) items.push_back(std::move(t));
}

// All hook cells with entries in 1..n and at most max_excess arm/leg entries.
std::vector<HookCell> hook_cells(int n, int max_excess) {
    std::vector<HookCell> out;
    for (int h = 1; h <= n; ++h) {
        std::vector<std::vector<int>> arm_lists;
        std::vector<int> arms;
        std::function<void(int)> gen_arms = [&](int from) {
            arm_lists.push_back(arms);
            if (static_cast<int>(arms.size()) == max_excess) return;
            for (int v = from; v <= n; ++v) {
                arms.push_back(v);
                gen_arms(v);
                arms.pop_back();
            }
        };
        gen_arms(h);
        for (const auto& a : arm_lists) {
            std::vector<int> legs;
            std::function<void(int)> gen_legs = [&](int from) {
                out.push_back(HookCell{h, a, legs});
                if (static_cast<int>(a.size() + legs.size()) == max_excess) return;
                for (int v = from; v <= n; ++v) {
                    legs.push_back(v);
                    gen_legs(v + 1);
                    legs.pop_back();
                }
            };
            gen_legs(h + 1);
        }
    }
    return out;
}

std::vector<HookValuedTableau> fill_hook_cells(const Partition& shape, const std::vector<HookCell>& choices,
                                               int max_excess) {
    std::vector<HookValuedTableau> out;
    std::vector<Cell> cells = shape.cells();
    std::vector<std::vector<HookCell>> rows(static_cast<std::size_t>(shape.length()));
    std::function<void(std::size_t, int)> rec = [&](std::size_t k, int excess_left) {
        if (k == cells.size()) {
            out.push_back(HookValuedTableau::from_rows_unchecked(rows));
            return;
        }
        const Cell c = cells[k];
        auto& row = rows[static_cast<std::size_t>(c.row - 1)];
        int min_hook = 1;
        if (c.col > 1) min_hook = std::max(min_hook, row[static_cast<std::size_t>(c.col - 2)].max_entry());
        if (c.row > 1)
            min_hook = std::max(min_hook,
                                rows[static_cast<std::size_t>(c.row - 2)][static_cast<std::size_t>(c.col - 1)].max_entry() + 1);
        for (const HookCell& hc : choices) {
            if (hc.hook < min_hook || hc.excess() > excess_left) continue;
            row.push_back(hc);
            rec(k + 1, excess_left - hc.excess());
            row.pop_back();
        }
    };
    rec(0, max_excess);
    return out;
}

// Backtracking over the skew cells in reading order; `candidates` lists the
// entries allowed in a cell, `partial_ok` prunes using the already placed
// cells and `accept` is the final membership test.
std::vector<MixedTableau> fill_mixed(const SkewShape& shape,
                                     const std::function<std::vector<MixedEntry>(const Cell&)>& candidates,
                                     const std::function<bool(const MixedTableau&, std::size_t)>& partial_ok,
                                     const std::function<bool(const MixedTableau&)>& accept) {
    std::vector<MixedTableau> out;
    std::vector<Cell> cells = shape.cells();
    MixedTableau current = MixedTableau::filled(shape, alpha(1));
    std::vector<std::vector<MixedEntry>> options;
    options.reserve(cells.size());
    for (const Cell& c : cells) options.push_back(candidates(c));
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (k == cells.size()) {
            if (accept(current)) out.push_back(current);
            return;
        }
        for (const MixedEntry& e : options[k]) {
            current.set(cells[k], e);
            if (partial_ok(current, k)) rec(k + 1);
        }
    };
    rec(0);
    canonical_sort(out);
    return out;
}

std::vector<MixedEntry> flagged_candidates(const Cell& c) {
    std::vector<MixedEntry> out;
    for (int k = 1; k < c.col; ++k) out.push_back(alpha(k));
    for (int k = 1; k < c.row; ++k) out.push_back(beta(k));
    return out;
}

// In each row the alpha cells must precede the beta cells.
bool row_prefix_sorted(const MixedTableau& t, const Cell& c) {
    auto left = t.get({c.row, c.col - 1});
    return !(left && left->is_beta() && t.at(c).is_alpha());
}

}  // namespace

std::vector<HookValuedTableau> enum_ssyt(const Partition& mu, int max_entry) {
    auto out = fill_hook_cells(mu, hook_cells(max_entry, 0), 0);
    canonical_sort(out);
    return out;
}

std::vector<HookValuedTableau> enum_hvt(const Partition& lambda, const EnumBounds& bounds) {
    auto out = fill_hook_cells(lambda, hook_cells(bounds.max_entry, bounds.max_excess), bounds.max_excess);
    canonical_sort(out);
    return out;
}

std::vector<MixedTableau> enum_exquisite(const SkewShape& shape) {
    std::vector<Cell> cells = shape.cells();
    auto shifted = [](const Cell& c, const MixedEntry& e) { return e.is_beta() ? e.index + c.content() : e.index; };
    auto partial = [&](const MixedTableau& t, std::size_t k) {
        const Cell c = cells[k];
        int here = shifted(c, t.at(c));
        if (auto left = t.get({c.row, c.col - 1}); left && !(shifted({c.row, c.col - 1}, *left) >= here)) return false;
        if (auto below = t.get({c.row - 1, c.col}); below && !(shifted({c.row - 1, c.col}, *below) > here))
            return false;
        return true;
    };
    return fill_mixed(shape, flagged_candidates, partial, [](const MixedTableau& t) { return is_exquisite(t); });
}

std::vector<MixedTableau> enum_biflagged(const SkewShape& shape) {
    std::vector<Cell> cells = shape.cells();
    auto partial = [&](const MixedTableau& t, std::size_t k) { return row_prefix_sorted(t, cells[k]); };
    return fill_mixed(shape, flagged_candidates, partial, [](const MixedTableau& t) { return is_biflagged(t); });
}

std::vector<MixedTableau> enum_switchable(const SkewShape& shape, int max_index) {
    std::vector<Cell> cells = shape.cells();
    auto candidates = [max_index](const Cell&) {
        std::vector<MixedEntry> out;
        for (int k = 1; k <= max_index; ++k) out.push_back(alpha(k));
        for (int k = 1; k <= max_index; ++k) out.push_back(beta(k));
        return out;
    };
    auto partial = [&](const MixedTableau& t, std::size_t k) {
        const Cell p = cells[k];
        const MixedEntry ep = t.at(p);
        if (!row_prefix_sorted(t, p)) return false;
        for (std::size_t q = 0; q < k; ++q) {
            const MixedEntry eq = t.at(cells[q]);
            if (eq.symbol != ep.symbol) continue;
            const Cell cq = cells[q];
            if (cq.weakly_southwest_of(p) && eq.index < ep.index) return false;
            if (p.weakly_southwest_of(cq) && ep.index < eq.index) return false;
            bool same_line = ep.is_alpha() ? cq.col == p.col : cq.row == p.row;
            if (same_line && eq.index == ep.index) return false;
        }
        return true;
    };
    return fill_mixed(shape, candidates, partial, [](const MixedTableau& t) { return is_switchable(t); });
}

std::vector<SkewShape> skew_shapes_up_to(int max_outer_size) {
    std::vector<SkewShape> out;
    for (int n = 0; n <= max_outer_size; ++n) {
        for (const Partition& outer : partitions_of(n)) {
            for (int m = 0; m <= n; ++m)
                for (const Partition& inner : partitions_of(m))
                    if (outer.contains(inner)) out.emplace_back(outer, inner);
        }
    }
    return out;
}

std::pair<HookValuedTableau, MixedTableau> phi(const HookValuedTableau& t) {
    UncrowdResult u = uncrowd_canonical(t, CanonicalOrder::LA);
    return {std::move(u.insertion), gg_jdt(u.recording)};
}

}  // namespace hooktab
