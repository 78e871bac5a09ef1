#include "kshape/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kshape {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0 || (i + 1 < parts_.size() && parts_[i] < parts_[i + 1]))
            throw std::invalid_argument("not weakly decreasing positive parts");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int row) const {
    if (row < 1) throw std::invalid_argument("row index is 1-based");
    return row <= rows() ? parts_[row - 1] : 0;
}

bool Partition::contains(const Cell& c) const {
    return c.row >= 1 && c.col >= 1 && c.col <= part(c.row);
}

bool Partition::contains(const Partition& inner) const {
    if (inner.rows() > rows()) return false;
    for (int i = 1; i <= inner.rows(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

Partition transpose(const Partition& p) {
    std::vector<int> t;
    if (!p.empty()) {
        t.assign(p.part(1), 0);
        for (int i = 1; i <= p.rows(); ++i)
            for (int j = 0; j < p.part(i); ++j) t[j]++;
    }
    return Partition(std::move(t));
}

int hook_length(const Partition& p, const Cell& c) {
    if (!p.contains(c)) throw std::invalid_argument("cell outside partition");
    int arm = p.part(c.row) - c.col;
    int leg = transpose(p).part(c.col) - c.row;
    return arm + leg + 1;
}

bool is_addable(const Partition& p, const Cell& c) {
    if (c.row < 1 || c.col < 1) return false;
    return c.col == p.part(c.row) + 1 && (c.row == 1 || p.part(c.row - 1) >= c.col);
}

bool is_removable(const Partition& p, const Cell& c) {
    if (!p.contains(c)) return false;
    return c.col == p.part(c.row) && p.part(c.row + 1) < c.col;
}

std::vector<Cell> addable_corners(const Partition& p) {
    std::vector<Cell> out;
    for (int r = 1; r <= p.rows() + 1; ++r) {
        Cell c{r, p.part(r) + 1};
        if (is_addable(p, c)) out.push_back(c);
    }
    return out;
}

std::vector<Cell> removable_corners(const Partition& p) {
    std::vector<Cell> out;
    for (int r = 1; r <= p.rows(); ++r) {
        Cell c{r, p.part(r)};
        if (is_removable(p, c)) out.push_back(c);
    }
    return out;
}

Partition add_cell(const Partition& p, const Cell& c) {
    if (!is_addable(p, c)) throw std::invalid_argument("cell not addable");
    std::vector<int> v = p.parts();
    if (c.row > static_cast<int>(v.size())) v.push_back(0);
    v[c.row - 1]++;
    return Partition(std::move(v));
}

Partition remove_cell(const Partition& p, const Cell& c) {
    if (!is_removable(p, c)) throw std::invalid_argument("cell not removable");
    std::vector<int> v = p.parts();
    v[c.row - 1]--;
    return Partition(std::move(v));
}

Partition add_cells(const Partition& p, const std::vector<Cell>& cells) {
    std::vector<int> v = p.parts();
    for (const Cell& c : cells) {
        if (c.row > static_cast<int>(v.size())) v.resize(c.row, 0);
        if (c.col != v[c.row - 1] + 1) throw std::invalid_argument("cells do not extend rows");
        v[c.row - 1]++;
    }
    return Partition(std::move(v));
}

Partition remove_cells(const Partition& p, const std::vector<Cell>& cells) {
    std::vector<int> v = p.parts();
    for (const Cell& c : cells) {
        if (c.row > static_cast<int>(v.size()) || c.col != v[c.row - 1])
            throw std::invalid_argument("cells are not row ends");
        v[c.row - 1]--;
    }
    return Partition(std::move(v));
}

std::vector<Cell> skew_cells(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) throw std::invalid_argument("inner not contained in outer");
    std::vector<Cell> out;
    for (int r = 1; r <= outer.rows(); ++r)
        for (int c = inner.part(r) + 1; c <= outer.part(r); ++c) out.push_back({r, c});
    return out;
}

bool is_horizontal_strip(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return false;
    for (int r = 1; r <= outer.rows(); ++r)
        if (outer.part(r + 1) > inner.part(r)) return false;
    return true;
}

bool is_vertical_strip(const Partition& outer, const Partition& inner) {
    if (!outer.contains(inner)) return false;
    for (int r = 1; r <= outer.rows(); ++r)
        if (outer.part(r) - inner.part(r) > 1) return false;
    return true;
}

bool dominates(const Partition& a, const Partition& b) {
    int pa = 0, pb = 0;
    int n = std::max(a.rows(), b.rows());
    for (int i = 1; i <= n; ++i) {
        pa += a.part(i);
        pb += b.part(i);
        if (pa < pb) return false;
    }
    return true;
}

std::string to_string(const Partition& p) {
    if (p.empty()) return "-";
    std::ostringstream os;
    for (int i = 1; i <= p.rows(); ++i) {
        if (i > 1) os << ",";
        os << p.part(i);
    }
    return os.str();
}

Partition parse_partition(const std::string& s) {
    if (s.empty() || s == "-") return Partition();
    std::vector<int> v;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("bad partition string: " + s);
        v.push_back(std::stoi(tok));
    }
    return Partition(std::move(v));
}

std::vector<Partition> partitions_of(int n) {
    return partitions_of_bounded(n, n);
}

std::vector<Partition> partitions_of_bounded(int n, int bound) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, std::min(n, bound));
    return out;
}

}  // namespace kshape
