#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kshape/kshape.hpp"

namespace kshape {

enum class StringType { cover, row, column, cocover };
enum class MoveKind { row, column };

// A string is a set of base-addable cells on contiguous diagonals
// (consecutive gaps k or k+1), stored sorted by increasing diagonal;
// the first cell is the paper's top cell a_1.
using CellString = std::vector<Cell>;

bool is_addable_string(const Partition& base, int k, const CellString& s);

// Type per the h(b_0), h(b_ell) case analysis; works on any base partition.
StringType classify_string(const Partition& base, int k, const CellString& s);

// Modified rows/columns of a string: row/col index -> +-1.
struct StringChange {
    std::map<int, int> drs;
    std::map<int, int> dcs;
};
StringChange modified_rows_cols(const Partition& base, int k, const CellString& s);

// One-cell extension on contiguous diagonals; unique when it exists.
std::optional<Cell> extend_string_below(const Partition& base, int k, const CellString& s);
std::optional<Cell> extend_string_above(const Partition& base, int k, const CellString& s);

// All base-addable strings (contiguous runs in the addable-corner chain).
std::vector<CellString> addable_strings(const Partition& base, int k);

struct Move {
    MoveKind kind = MoveKind::row;
    std::vector<CellString> strings;  // s_1..s_r; s_1 leftmost (lowest row for column moves)
    Partition source;
    Partition target;
    int rank = 0;
    int length = 0;
    bool degenerate = false;

    std::vector<Cell> cells() const;  // all cells, sorted
    long long charge() const;         // 0 for row moves, rank*length for column moves
};

bool same_move(const Move& a, const Move& b);  // (source, cell set, kind)

// The unique move with initial string s1, if one exists (Remark on move
// uniqueness); throws std::logic_error if several ranks validate.
std::optional<Move> complete_move_from_initial_string(const KShape& base, const CellString& s1,
                                                      MoveKind kind);

// All row and column moves out of a k-shape; column moves by transposition.
std::vector<Move> enumerate_moves(const KShape& base);

// The move source -> target of the given kind, if the skew decomposes as one.
std::optional<Move> move_from_shapes(const KShape& source, const Partition& target, MoveKind kind);

// All moves whose target is the given shape.
std::vector<Move> enumerate_moves_into(const KShape& target);

Move transpose(const Move& m);

// {kind, rank, length, cells: [[r,c],...], source, target} as a JSON string.
std::string move_to_json(const Move& m);

}  // namespace kshape
