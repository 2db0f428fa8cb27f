#include "hooktab/shape.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace hooktab {

std::string to_string(const Cell& c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

int Partition::row_length(int row) const noexcept {
    if (row < 1 || row > length()) return 0;
    return parts_[static_cast<std::size_t>(row - 1)];
}

int Partition::column_height(int col) const noexcept {
    if (col < 1) return 0;
    int h = 0;
    for (int p : parts_) {
        if (p < col) break;
        ++h;
    }
    return h;
}

bool Partition::contains(const Cell& c) const noexcept {
    return c.row >= 1 && c.col >= 1 && c.col <= row_length(c.row);
}

bool Partition::contains(const Partition& inner) const noexcept {
    if (inner.length() > length()) return false;
    for (int r = 1; r <= inner.length(); ++r)
        if (inner.row_length(r) > row_length(r)) return false;
    return true;
}

std::vector<Cell> Partition::cells() const {
    std::vector<Cell> out;
    out.reserve(static_cast<std::size_t>(size_));
    for (int r = 1; r <= length(); ++r)
        for (int c = 1; c <= row_length(r); ++c) out.push_back({r, c});
    return out;
}

std::vector<Cell> Partition::addable_cells() const {
    std::vector<Cell> out;
    for (int r = 1; r <= length() + 1; ++r) {
        int len = row_length(r);
        if (r == 1 || row_length(r - 1) > len) out.push_back({r, len + 1});
    }
    return out;
}

Partition Partition::with_cell(const Cell& c) const {
    std::vector<int> parts = parts_;
    if (c.row == length() + 1) {
        parts.push_back(1);
    } else {
        parts.at(static_cast<std::size_t>(c.row - 1)) += 1;
    }
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Partition parse_partition(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad partition part: " + item);
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> partitions_containing(const Partition& inner, int max_added) {
    std::vector<Partition> level{inner};
    std::vector<Partition> out{inner};
    for (int k = 1; k <= max_added; ++k) {
        std::vector<Partition> next;
        for (const auto& p : level)
            for (const auto& c : p.addable_cells()) next.push_back(p.with_cell(c));
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!outer_.contains(inner_))
        throw std::invalid_argument("inner partition is not contained in outer partition");
}

std::vector<Cell> SkewShape::cells() const {
    std::vector<Cell> out;
    for (int r = 1; r <= outer_.length(); ++r)
        for (int c = inner_.row_length(r) + 1; c <= outer_.row_length(r); ++c) out.push_back({r, c});
    return out;
}

}  // namespace hooktab
