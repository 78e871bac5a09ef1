#include "kshape/kshape.hpp"

#include <algorithm>
#include <stdexcept>

namespace kshape {

namespace {

bool weakly_decreasing(const std::vector<int>& v) {
    for (size_t i = 0; i + 1 < v.size(); ++i)
        if (v[i] < v[i + 1]) return false;
    return true;
}

}  // namespace

BoundaryData boundary_shapes(const Partition& shape, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    BoundaryData d;
    Partition tr = transpose(shape);
    std::vector<int> interior;
    for (int r = 1; r <= shape.rows(); ++r) {
        // hooks decrease along a row, so the interior is a prefix
        int len = shape.part(r);
        int cut = 0;  // interior length of row r
        for (int c = len; c >= 1; --c) {
            int hook = (len - c) + (tr.part(c) - r) + 1;
            if (hook > k) {
                cut = c;
                break;
            }
        }
        interior.push_back(cut);
        d.rs.push_back(len - cut);
        d.boundary_size += len - cut;
    }
    d.interior = Partition(std::move(interior));
    Partition trint = transpose(d.interior);
    for (int c = 1; c <= (shape.empty() ? 0 : shape.part(1)); ++c)
        d.cs.push_back(tr.part(c) - trint.part(c));
    return d;
}

bool is_kshape(const Partition& shape, int k) {
    BoundaryData d = boundary_shapes(shape, k);
    return weakly_decreasing(d.rs) && weakly_decreasing(d.cs);
}

bool is_kcore(const Partition& shape, int k) {
    Partition tr = transpose(shape);
    for (int r = 1; r <= shape.rows(); ++r)
        for (int c = 1; c <= shape.part(r); ++c)
            if ((shape.part(r) - c) + (tr.part(c) - r) + 1 == k) return false;
    return true;
}

KShape::KShape(int k, Partition shape) : k_(k), shape_(std::move(shape)) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    BoundaryData d = boundary_shapes(shape_, k);
    if (!weakly_decreasing(d.rs) || !weakly_decreasing(d.cs))
        throw std::invalid_argument("not a k-shape: " + kshape::to_string(shape_));
    interior_ = d.interior;
    rs_ = Partition(d.rs);
    cs_ = Partition(d.cs);
}

std::optional<KShape> KShape::try_make(int k, Partition shape) {
    if (!is_kshape(shape, k)) return std::nullopt;
    return KShape(k, std::move(shape));
}

bool KShape::in_boundary(const Cell& c) const {
    return shape_.contains(c) && !interior_.contains(c);
}

KShape transpose(const KShape& s) {
    return KShape(s.k(), transpose(s.shape()));
}

std::vector<KShape> enumerate_kshapes(int k, int n) {
    if (k < 2) throw std::invalid_argument("k must be at least 2");
    if (n < 0) throw std::invalid_argument("n must be nonnegative");
    std::vector<KShape> out;
    if (n == 0) {
        out.emplace_back(k, Partition());
        return out;
    }
    // Rows are generated shortest-first; prepending a longer row never changes
    // the hooks of already placed rows, so each row's boundary count is final
    // at placement. rs weakly decreasing = counts weakly increasing in this
    // order, and the total boundary size only grows.
    std::vector<int> rows;  // shortest first
    auto row_count = [&](int len) {
        int cnt = 0;
        for (int c = 1; c <= len; ++c) {
            int leg = 0;
            for (int r : rows)
                if (r >= c) leg++;
            if ((len - c) + leg + 1 <= k) cnt++;
        }
        return cnt;
    };
    auto rec = [&](auto&& self, int total, int last_len, int last_cnt) -> void {
        if (total == n) {
            std::vector<int> parts(rows.rbegin(), rows.rend());
            Partition p(std::move(parts));
            BoundaryData d = boundary_shapes(p, k);
            if (weakly_decreasing(d.cs)) out.emplace_back(k, std::move(p));
            return;
        }
        if (static_cast<int>(rows.size()) >= n) return;
        for (int len = std::max(last_len, 1); len <= n; ++len) {
            int cnt = row_count(len);
            if (cnt < last_cnt) continue;
            if (total + cnt > n) continue;
            rows.push_back(len);
            self(self, total + cnt, len, cnt);
            rows.pop_back();
        }
    };
    rec(rec, 0, 0, 1);
    std::sort(out.begin(), out.end(),
              [](const KShape& a, const KShape& b) { return a.shape() < b.shape(); });
    return out;
}

Partition core_from_bounded(const Partition& bounded, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (!bounded.empty() && bounded.part(1) > k)
        throw std::invalid_argument("bounded partition has a part exceeding k");
    // Build rows from the shortest up. Row i gets interior length s, the
    // minimal s >= s_{i+1} with mu_i + leg(s+1) <= k; hooks of placed rows
    // never change afterwards.
    std::vector<int> built;  // lengths, shortest first
    int prev_interior = 0;
    std::vector<int> lengths;
    for (int i = bounded.rows(); i >= 1; --i) {
        int mu = bounded.part(i);
        auto leg = [&](int c) {
            int cnt = 0;
            for (int len : built)
                if (len >= c) cnt++;
            return cnt;
        };
        int s = prev_interior;
        while (mu + leg(s + 1) > k) s++;
        built.push_back(s + mu);
        lengths.push_back(s + mu);
        prev_interior = s;
    }
    Partition core(std::vector<int>(lengths.rbegin(), lengths.rend()));
    if (!is_kcore(core, k + 1)) throw std::logic_error("core_from_bounded produced a non-core");
    return core;
}

Partition bounded_from_core(const Partition& core, int k) {
    if (!is_kcore(core, k + 1)) throw std::invalid_argument("input is not a (k+1)-core");
    return Partition(boundary_shapes(core, k).rs);
}

}  // namespace kshape
