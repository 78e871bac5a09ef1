#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kshape/partition.hpp"

namespace kshape {

struct BoundaryData {
    Partition interior;       // cells with hook > k, always a partition
    std::vector<int> rs;      // boundary cells per row, need not be a partition
    std::vector<int> cs;      // boundary cells per column
    int boundary_size = 0;
};

// Row/column counts of the k-boundary of an arbitrary partition.
BoundaryData boundary_shapes(const Partition& shape, int k);

bool is_kshape(const Partition& shape, int k);
bool is_kcore(const Partition& shape, int k);  // no cell of hook exactly k

// A partition whose k-boundary has weakly decreasing row and column counts.
// rs/cs/interior are cached; a k-shape is determined by (rs, cs).
class KShape {
  public:
    KShape() = default;
    KShape(int k, Partition shape);  // throws if not a k-shape

    static std::optional<KShape> try_make(int k, Partition shape);

    int k() const { return k_; }
    const Partition& shape() const { return shape_; }
    const Partition& interior() const { return interior_; }
    const Partition& rs() const { return rs_; }
    const Partition& cs() const { return cs_; }
    int boundary_size() const { return rs_.size(); }

    // Boundary membership and per-row/column spans of the k-boundary.
    bool in_boundary(const Cell& c) const;
    int rs_at(int row) const { return rs_.part(row); }
    int cs_at(int col) const { return cs_.part(col); }

    auto operator<=>(const KShape& o) const = default;

  private:
    int k_ = 0;
    Partition shape_;
    Partition interior_;
    Partition rs_;
    Partition cs_;
};

KShape transpose(const KShape& s);

// All k-shapes with |boundary| = n, sorted by shape. Recursive row generator
// (shortest row first) pruned by the running boundary size; every k-shape with
// |boundary| = n fits in an n x n box.
std::vector<KShape> enumerate_kshapes(int k, int n);

// The core <-> bounded bijection: Core^{k+1} -> Bdd^k is shape |-> rs^k(shape).
// core_from_bounded inverts it. Throws on parts > k / non-core input.
Partition core_from_bounded(const Partition& bounded, int k);
Partition bounded_from_core(const Partition& core, int k);

}  // namespace kshape
