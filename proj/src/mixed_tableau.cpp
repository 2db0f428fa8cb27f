#include "hooktab/mixed_tableau.hpp"

#include <stdexcept>
#include <tuple>

#include "hooktab/errors.hpp"

namespace hooktab {

std::string MixedEntry::to_string() const {
    return (is_alpha() ? "a" : "b") + std::to_string(index);
}

MixedTableau::MixedTableau(SkewShape shape, const std::map<Cell, MixedEntry>& entries)
    : shape_(std::move(shape)) {
    rows_.resize(static_cast<std::size_t>(shape_.outer().length()));
    for (int r = 1; r <= shape_.outer().length(); ++r)
        rows_[static_cast<std::size_t>(r - 1)].resize(
            static_cast<std::size_t>(shape_.outer().row_length(r) - shape_.inner().row_length(r)));
    if (static_cast<int>(entries.size()) != shape_.size())
        throw std::invalid_argument("mixed tableau entries do not cover the skew shape");
    for (const auto& [cell, e] : entries) {
        if (!shape_.contains(cell)) throw std::invalid_argument("mixed tableau entry outside the skew shape");
        if (e.is_alpha() && e.index < 1) throw std::invalid_argument("alpha index must be positive");
        slot(cell) = e;
    }
}

MixedTableau MixedTableau::filled(SkewShape shape, MixedEntry fill) {
    MixedTableau t;
    t.shape_ = std::move(shape);
    t.rows_.resize(static_cast<std::size_t>(t.shape_.outer().length()));
    for (int r = 1; r <= t.shape_.outer().length(); ++r)
        t.rows_[static_cast<std::size_t>(r - 1)].assign(
            static_cast<std::size_t>(t.shape_.outer().row_length(r) - t.shape_.inner().row_length(r)), fill);
    return t;
}

MixedEntry& MixedTableau::slot(const Cell& c) {
    return rows_.at(static_cast<std::size_t>(c.row - 1))
        .at(static_cast<std::size_t>(c.col - 1 - shape_.inner().row_length(c.row)));
}

const MixedEntry& MixedTableau::at(const Cell& c) const {
    if (!shape_.contains(c)) throw std::out_of_range("cell " + to_string(c) + " is not in the skew shape");
    return rows_[static_cast<std::size_t>(c.row - 1)]
                [static_cast<std::size_t>(c.col - 1 - shape_.inner().row_length(c.row))];
}

std::optional<MixedEntry> MixedTableau::get(const Cell& c) const {
    if (!shape_.contains(c)) return std::nullopt;
    return at(c);
}

void MixedTableau::set(const Cell& c, const MixedEntry& e) {
    if (!shape_.contains(c)) throw std::out_of_range("cell " + to_string(c) + " is not in the skew shape");
    slot(c) = e;
}

MixedTableau MixedTableau::with(const Cell& c, const MixedEntry& e) const {
    MixedTableau t = *this;
    t.set(c, e);
    return t;
}

MixedTableau MixedTableau::swapped(const Cell& a, const Cell& b) const {
    MixedTableau t = *this;
    MixedEntry ea = at(a);
    t.set(a, at(b));
    t.set(b, ea);
    return t;
}

std::vector<std::pair<Cell, MixedEntry>> MixedTableau::entries() const {
    std::vector<std::pair<Cell, MixedEntry>> out;
    out.reserve(static_cast<std::size_t>(shape_.size()));
    for (const Cell& c : shape_.cells()) out.push_back({c, at(c)});
    return out;
}

int MixedTableau::count(Symbol s) const noexcept {
    int n = 0;
    for (const auto& row : rows_)
        for (const auto& e : row) n += e.symbol == s;
    return n;
}

bool operator<(const MixedTableau& a, const MixedTableau& b) {
    auto key = [](const MixedTableau& t) {
        return std::tie(t.shape_.outer(), t.shape_.inner(), t.rows_);
    };
    return key(a) < key(b);
}

namespace {

// Condition (1) of gamma-strictness, shared by the column and row variants:
// gamma_i weakly southwest of gamma_j forces i >= j. Condition (2) forbids
// equal indices in one column (col_mode) or one row.
bool gamma_strict(const MixedTableau& t, Symbol s, bool col_mode) {
    std::vector<std::pair<Cell, int>> cells;
    for (const auto& [c, e] : t.entries())
        if (e.symbol == s) cells.push_back({c, e.index});
    for (std::size_t p = 0; p < cells.size(); ++p) {
        for (std::size_t q = 0; q < cells.size(); ++q) {
            if (p == q) continue;
            const auto& [cp, ip] = cells[p];
            const auto& [cq, iq] = cells[q];
            if (cp.weakly_southwest_of(cq) && ip < iq) return false;
            bool same_line = col_mode ? cp.col == cq.col : cp.row == cq.row;
            if (same_line && ip == iq) return false;
        }
    }
    return true;
}

}  // namespace

bool is_column_strict(const MixedTableau& t, Symbol s) { return gamma_strict(t, s, true); }
bool is_row_strict(const MixedTableau& t, Symbol s) { return gamma_strict(t, s, false); }

bool is_totally_column_strict(const MixedTableau& t) {
    for (const auto& [c, e] : t.entries()) {
        if (auto up = t.get(c.above()); up && !(e.index > up->index)) return false;
        if (auto right = t.get(c.right()); right && !(e.index >= right->index)) return false;
    }
    return true;
}

bool is_sorted(const MixedTableau& t, Symbol first) {
    const Partition& inner = t.shape().inner();
    const Partition& outer = t.shape().outer();
    std::vector<int> nu;
    for (int r = 1; r <= outer.length(); ++r) {
        int len = inner.row_length(r);
        bool in_first = true;
        for (int c = inner.row_length(r) + 1; c <= outer.row_length(r); ++c) {
            bool is_first = t.at({r, c}).symbol == first;
            if (is_first && !in_first) return false;
            if (!is_first) in_first = false;
            if (is_first) ++len;
        }
        nu.push_back(len);
    }
    for (std::size_t i = 1; i < nu.size(); ++i)
        if (nu[i] > nu[i - 1]) return false;
    return true;
}

bool is_flagged_mixed(const MixedTableau& t) {
    for (const auto& [c, e] : t.entries()) {
        int bound = e.is_alpha() ? c.col : c.row;
        if (!(0 < e.index && e.index < bound)) return false;
    }
    return true;
}

StrictnessFlags classify_mixed(const MixedTableau& t) {
    StrictnessFlags f;
    f.alpha_column_strict = is_column_strict(t, Symbol::alpha);
    f.alpha_row_strict = is_row_strict(t, Symbol::alpha);
    f.beta_column_strict = is_column_strict(t, Symbol::beta);
    f.beta_row_strict = is_row_strict(t, Symbol::beta);
    f.totally_column_strict = is_totally_column_strict(t);
    f.sorted_alpha_beta = is_sorted(t, Symbol::alpha);
    f.sorted_beta_alpha = is_sorted(t, Symbol::beta);
    f.flagged_mixed = is_flagged_mixed(t);
    return f;
}

MixedTableau c_beta_shift(const MixedTableau& t, ShiftSign sign) {
    MixedTableau out = t;
    for (const auto& [c, e] : t.entries()) {
        if (!e.is_beta()) continue;
        int shift = sign == ShiftSign::plus ? c.content() : -c.content();
        out.set(c, beta(e.index + shift));
    }
    return out;
}

bool is_exquisite(const MixedTableau& t) {
    return is_flagged_mixed(t) && is_totally_column_strict(c_beta_shift(t, ShiftSign::plus));
}

Monomial weight_mixed(const MixedTableau& t) {
    std::vector<Monomial::Term> terms;
    for (const auto& [c, e] : t.entries()) {
        if (e.is_beta() && e.index <= 0)
            throw NonpositiveBetaIndex("beta index " + std::to_string(e.index) + " at " + to_string(c));
        terms.push_back({e.is_alpha() ? alpha_var(e.index) : beta_var(e.index), 1});
    }
    return Monomial(std::move(terms));
}

}  // namespace hooktab
