#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace kshape {

// A cell of Z_{>0}^2, 1-based. Row 1 is the longest row of a partition;
// the paper's French drawing puts row 1 at the bottom, so "above" a cell
// means a larger row index and "below" a smaller one. diag = col - row
// increases when walking a string downward.
struct Cell {
    int row = 0;
    int col = 0;

    int diag() const { return col - row; }
    auto operator<=>(const Cell&) const = default;
};

// Integer partition as a weakly decreasing vector of positive parts.
// Immutable value; all operations are free functions.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;               // number of cells
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int row) const;        // 1-based, 0 beyond the last row
    bool empty() const { return parts_.empty(); }
    bool contains(const Cell& c) const;
    bool contains(const Partition& inner) const;  // diagram containment

    auto operator<=>(const Partition&) const = default;

  private:
    std::vector<int> parts_;
};

Partition transpose(const Partition& p);

// arm + leg + 1; throws std::invalid_argument if the cell is outside.
int hook_length(const Partition& p, const Cell& c);

bool is_addable(const Partition& p, const Cell& c);
bool is_removable(const Partition& p, const Cell& c);
std::vector<Cell> addable_corners(const Partition& p);
std::vector<Cell> removable_corners(const Partition& p);

Partition add_cell(const Partition& p, const Cell& c);
Partition remove_cell(const Partition& p, const Cell& c);
Partition add_cells(const Partition& p, const std::vector<Cell>& cells);
Partition remove_cells(const Partition& p, const std::vector<Cell>& cells);

// Cells of outer/inner, sorted by (row, col). Throws if inner is not contained.
std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner);

// At most one cell per column (resp. row) of outer/inner.
bool is_horizontal_strip(const Partition& outer, const Partition& inner);
bool is_vertical_strip(const Partition& outer, const Partition& inner);

// a dominates b (both weakly decreasing, same total size assumed by caller).
bool dominates(const Partition& a, const Partition& b);

// "8,4,3,2,1,1,1"; the empty partition prints as "-".
std::string to_string(const Partition& p);
Partition parse_partition(const std::string& s);

// All partitions of n (used by test oracles and small enumerations).
std::vector<Partition> partitions_of(int n);
// All partitions of n with parts <= bound.
std::vector<Partition> partitions_of_bounded(int n, int bound);

}  // namespace kshape
