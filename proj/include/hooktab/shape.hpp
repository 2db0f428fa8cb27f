#ifndef HOOKTAB_SHAPE_HPP
#define HOOKTAB_SHAPE_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hooktab {

/// A cell in French coordinates: row 1 is the bottom row, column 1 the
/// leftmost column.
struct Cell {
    int row = 1;
    int col = 1;

    int content() const noexcept { return col - row; }
    Cell above() const noexcept { return {row + 1, col}; }
    Cell right() const noexcept { return {row, col + 1}; }

    /// (row, col) is weakly southwest of `other` iff row <= other.row and
    /// col <= other.col.
    bool weakly_southwest_of(const Cell& other) const noexcept {
        return row <= other.row && col <= other.col;
    }

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& c);

/// Weakly decreasing sequence of positive integers.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless `parts` is weakly decreasing and
    /// positive. Trailing zeros are dropped.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    std::span<const int> parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    int size() const noexcept { return size_; }
    bool empty() const noexcept { return parts_.empty(); }

    /// Length of row `row` (1-based); 0 past the last row.
    int row_length(int row) const noexcept;
    /// Number of cells in column `col` (1-based).
    int column_height(int col) const noexcept;

    bool contains(const Cell& c) const noexcept;
    /// Containment of Young diagrams.
    bool contains(const Partition& inner) const noexcept;

    /// Cells row by row from the bottom, left to right within a row.
    std::vector<Cell> cells() const;

    /// Cells that can be added while staying a partition, bottom row first.
    std::vector<Cell> addable_cells() const;
    Partition with_cell(const Cell& c) const;

    /// "a,b,c"; empty string for the empty partition.
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Parses "3,3,1" (or "" for the empty partition).
Partition parse_partition(const std::string& text);

/// All partitions of `n`, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);
/// All partitions mu with inner ⊆ mu and |mu| - |inner| <= max_added,
/// ordered by size then lexicographically.
std::vector<Partition> partitions_containing(const Partition& inner, int max_added);

/// The skew diagram outer/inner.
class SkewShape {
public:
    SkewShape() = default;
    /// Throws std::invalid_argument unless inner ⊆ outer.
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const noexcept { return outer_; }
    const Partition& inner() const noexcept { return inner_; }
    int size() const noexcept { return outer_.size() - inner_.size(); }

    bool contains(const Cell& c) const noexcept {
        return outer_.contains(c) && !inner_.contains(c);
    }
    /// Skew cells, bottom row first, left to right.
    std::vector<Cell> cells() const;

    std::string to_string() const { return outer_.to_string() + "/" + inner_.to_string(); }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;

private:
    Partition outer_;
    Partition inner_;
};

}  // namespace hooktab

#endif  // HOOKTAB_SHAPE_HPP
