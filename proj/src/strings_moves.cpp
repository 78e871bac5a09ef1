#include "kshape/strings_moves.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kshape {

namespace {

// Left_r of the k-boundary: the boundary of row r spans (interior_r, shape_r].
std::optional<Cell> boundary_left(const Partition& shape, const Partition& interior, int r) {
    if (r > shape.rows() || shape.part(r) <= interior.part(r)) return std::nullopt;
    return Cell{r, interior.part(r) + 1};
}

// Bot_c of the k-boundary: smallest row of column c in the boundary.
std::optional<Cell> boundary_bot(const Partition& shape, const Partition& interior, int c) {
    Partition ts = transpose(shape), ti = transpose(interior);
    if (c > (shape.empty() ? 0 : shape.part(1)) || ts.part(c) <= ti.part(c)) return std::nullopt;
    return Cell{ti.part(c) + 1, c};
}

bool hook_is_k(const Partition& shape, const std::optional<Cell>& c, int k) {
    return c && hook_length(shape, *c) == k;
}

std::map<int, int> diff_counts(const std::vector<int>& after, const std::vector<int>& before) {
    std::map<int, int> d;
    size_t n = std::max(after.size(), before.size());
    for (size_t i = 0; i < n; ++i) {
        int a = i < after.size() ? after[i] : 0;
        int b = i < before.size() ? before[i] : 0;
        if (a != b) d[static_cast<int>(i) + 1] = a - b;
    }
    return d;
}

struct ColData {
    std::optional<int> up;    // c_{s,u}: the negatively modified column
    std::optional<int> down;  // c_{s,d}
};

ColData string_cols(const Partition& base, int k, const CellString& s) {
    StringChange ch = modified_rows_cols(base, k, s);
    ColData d;
    for (auto [c, v] : ch.dcs) {
        if (v < 0) d.up = c;
        if (v > 0) d.down = c;
    }
    return d;
}

}  // namespace

bool is_addable_string(const Partition& base, int k, const CellString& s) {
    if (s.empty()) return false;
    for (size_t i = 0; i < s.size(); ++i) {
        if (!is_addable(base, s[i])) return false;
        if (i + 1 < s.size()) {
            int gap = s[i + 1].diag() - s[i].diag();
            if (gap != k && gap != k + 1) return false;
        }
    }
    return true;
}

StringType classify_string(const Partition& base, int k, const CellString& s) {
    if (!is_addable_string(base, k, s)) throw std::invalid_argument("not an addable string");
    BoundaryData bd = boundary_shapes(base, k);
    bool top = hook_is_k(base, boundary_left(base, bd.interior, s.front().row), k);
    bool bot = hook_is_k(base, boundary_bot(base, bd.interior, s.back().col), k);
    if (!top && !bot) return StringType::cover;
    if (top && !bot) return StringType::row;
    if (!top && bot) return StringType::column;
    return StringType::cocover;
}

StringChange modified_rows_cols(const Partition& base, int k, const CellString& s) {
    Partition grown = add_cells(base, s);
    BoundaryData b0 = boundary_shapes(base, k);
    BoundaryData b1 = boundary_shapes(grown, k);
    return StringChange{diff_counts(b1.rs, b0.rs), diff_counts(b1.cs, b0.cs)};
}

std::optional<Cell> extend_string_below(const Partition& base, int k, const CellString& s) {
    if (s.empty()) throw std::invalid_argument("empty string");
    for (const Cell& c : addable_corners(base)) {
        int gap = c.diag() - s.back().diag();
        if (gap == k || gap == k + 1) return c;
    }
    return std::nullopt;
}

std::optional<Cell> extend_string_above(const Partition& base, int k, const CellString& s) {
    if (s.empty()) throw std::invalid_argument("empty string");
    for (const Cell& c : addable_corners(base)) {
        int gap = s.front().diag() - c.diag();
        if (gap == k || gap == k + 1) return c;
    }
    return std::nullopt;
}

std::vector<CellString> addable_strings(const Partition& base, int k) {
    std::vector<Cell> corners = addable_corners(base);
    std::sort(corners.begin(), corners.end(),
              [](const Cell& a, const Cell& b) { return a.diag() < b.diag(); });
    std::vector<CellString> out;
    for (size_t i = 0; i < corners.size(); ++i) {
        CellString s{corners[i]};
        out.push_back(s);
        for (size_t j = i + 1; j < corners.size(); ++j) {
            int gap = corners[j].diag() - corners[j - 1].diag();
            if (gap != k && gap != k + 1) break;
            s.push_back(corners[j]);
            out.push_back(s);
        }
    }
    return out;
}

std::vector<Cell> Move::cells() const {
    std::vector<Cell> out;
    for (const auto& s : strings) out.insert(out.end(), s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

long long Move::charge() const {
    return kind == MoveKind::column ? static_cast<long long>(rank) * length : 0;
}

bool same_move(const Move& a, const Move& b) {
    return a.kind == b.kind && a.source == b.source && a.cells() == b.cells();
}

namespace {

// One completion attempt at a fixed rank. Verifies Def-of-move conditions as
// it goes: each string is a row-type translate of s1 whose cells are addable
// corners of the intermediate shape and whose modified columns shift with it.
std::optional<Move> complete_row_move(const KShape& base, const CellString& s1) {
    int k = base.k();
    if (!is_addable_string(base.shape(), k, s1)) return std::nullopt;
    if (classify_string(base.shape(), k, s1) != StringType::row) return std::nullopt;

    ColData c1 = string_cols(base.shape(), k, s1);
    if (!c1.up || !c1.down) return std::nullopt;

    std::vector<CellString> strings{s1};
    std::vector<ColData> cols{c1};
    Partition cur = add_cells(base.shape(), s1);
    std::vector<Move> valid;

    auto record_if_kshape = [&]() {
        if (!is_kshape(cur, k)) return;
        Move m;
        m.kind = MoveKind::row;
        m.strings = strings;
        m.source = base.shape();
        m.target = cur;
        m.rank = static_cast<int>(strings.size());
        m.length = static_cast<int>(s1.size());
        m.degenerate = cols.back().up && cols.front().down &&
                       *cols.back().up + 1 == *cols.front().down;
        if (m.degenerate && m.length != 1)
            throw std::logic_error("degenerate move of length > 1");
        valid.push_back(std::move(m));
    };

    record_if_kshape();
    while (true) {
        // the next top cell sits in the column right of the current top
        int next_col = strings.back().front().col + 1;
        std::optional<Cell> top;
        for (const Cell& c : addable_corners(cur))
            if (c.col == next_col) top = c;
        if (!top) break;
        Cell off{top->row - s1.front().row, top->col - s1.front().col};
        CellString next;
        for (const Cell& c : s1) next.push_back({c.row + off.row, c.col + off.col});
        bool ok = true;
        for (const Cell& c : next)
            if (!is_addable(cur, c)) ok = false;
        if (!ok) break;
        if (classify_string(cur, k, next) != StringType::row) break;
        ColData cd = string_cols(cur, k, next);
        if (!cd.up || !cd.down) break;
        // modified columns must shift with the string
        if (*cd.up - *c1.up != off.col || *cd.down - *c1.down != off.col) break;
        strings.push_back(next);
        cols.push_back(cd);
        cur = add_cells(cur, next);
        record_if_kshape();
    }

    if (valid.size() > 1)
        throw std::logic_error("move completion is not unique");
    if (valid.empty()) return std::nullopt;
    return valid.front();
}

}  // namespace

Move transpose(const Move& m) {
    Move t;
    t.kind = m.kind == MoveKind::row ? MoveKind::column : MoveKind::row;
    for (const auto& s : m.strings) {
        CellString ts;
        for (const Cell& c : s) ts.push_back({c.col, c.row});
        t.strings.push_back(std::move(ts));
    }
    t.source = transpose(m.source);
    t.target = transpose(m.target);
    t.rank = m.rank;
    t.length = m.length;
    t.degenerate = m.degenerate;
    return t;
}

std::optional<Move> complete_move_from_initial_string(const KShape& base, const CellString& s1,
                                                      MoveKind kind) {
    if (kind == MoveKind::row) return complete_row_move(base, s1);
    CellString ts;
    for (const Cell& c : s1) ts.push_back({c.col, c.row});
    std::sort(ts.begin(), ts.end(), [](const Cell& a, const Cell& b) { return a.diag() < b.diag(); });
    auto m = complete_row_move(transpose(base), ts);
    if (!m) return std::nullopt;
    return transpose(*m);
}

std::vector<Move> enumerate_moves(const KShape& base) {
    std::vector<Move> out;
    for (const CellString& s : addable_strings(base.shape(), base.k())) {
        if (classify_string(base.shape(), base.k(), s) != StringType::row) continue;
        if (auto m = complete_move_from_initial_string(base, s, MoveKind::row)) out.push_back(*m);
    }
    KShape tr = transpose(base);
    for (const CellString& s : addable_strings(tr.shape(), tr.k())) {
        if (classify_string(tr.shape(), tr.k(), s) != StringType::row) continue;
        if (auto m = complete_move_from_initial_string(tr, s, MoveKind::row))
            out.push_back(transpose(*m));
    }
    return out;
}

std::optional<Move> move_from_shapes(const KShape& source, const Partition& target, MoveKind kind) {
    if (kind == MoveKind::column) {
        auto m = move_from_shapes(transpose(source), transpose(target), MoveKind::row);
        if (!m) return std::nullopt;
        return transpose(*m);
    }
    if (!target.contains(source.shape()) || target == source.shape()) return std::nullopt;
    if (!is_horizontal_strip(target, source.shape())) return std::nullopt;
    std::vector<Cell> skew = skew_cells(target, source.shape());
    // the leftmost cell tops the first string; walk it maximally inside the skew
    Cell top = *std::min_element(skew.begin(), skew.end(),
                                 [](const Cell& a, const Cell& b) { return a.col < b.col; });
    if (!is_addable(source.shape(), top)) return std::nullopt;
    CellString s1{top};
    Partition cur = source.shape();
    while (true) {
        auto next = extend_string_below(cur, source.k(), s1);
        if (!next || !std::count(skew.begin(), skew.end(), *next)) break;
        s1.push_back(*next);
    }
    auto m = complete_move_from_initial_string(source, s1, MoveKind::row);
    if (!m || m->target != target) return std::nullopt;
    return m;
}

namespace {

std::vector<Move> row_moves_into(const KShape& target) {
    std::vector<Move> out;
    const Partition& t = target.shape();
    if (t.empty()) return out;
    // candidate sources interlace the target rows (horizontal-strip removals)
    std::vector<int> parts(t.rows());
    auto rec = [&](auto&& self, int row) -> void {
        if (row > t.rows()) {
            Partition src(std::vector<int>(parts.begin(), parts.end()));
            if (src == t) return;
            auto ks = KShape::try_make(target.k(), src);
            if (!ks || ks->boundary_size() != target.boundary_size()) return;
            if (auto m = move_from_shapes(*ks, t, MoveKind::row)) out.push_back(*m);
            return;
        }
        for (int v = t.part(row); v >= std::max(t.part(row + 1), 0); --v) {
            parts[row - 1] = v;
            self(self, row + 1);
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace

std::vector<Move> enumerate_moves_into(const KShape& target) {
    std::vector<Move> out = row_moves_into(target);
    for (const Move& m : row_moves_into(transpose(target))) out.push_back(transpose(m));
    return out;
}

std::string move_to_json(const Move& m) {
    std::ostringstream os;
    os << "{\"kind\":\"" << (m.kind == MoveKind::row ? "row" : "column") << "\","
       << "\"rank\":" << m.rank << ",\"length\":" << m.length << ",\"cells\":[";
    bool first = true;
    for (const Cell& c : m.cells()) {
        if (!first) os << ",";
        first = false;
        os << "[" << c.row << "," << c.col << "]";
    }
    os << "],\"source\":\"" << to_string(m.source) << "\",\"target\":\"" << to_string(m.target)
       << "\"}";
    return os.str();
}

}  // namespace kshape
