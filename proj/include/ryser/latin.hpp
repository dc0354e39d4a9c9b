#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ryser/rational.hpp"

namespace ryser {

// Internal symbols are always 0..n-1. External token spellings (the paper
// writes 1..n, Parker's square uses digits 0..9) survive parse/serialize
// round trips through this map.
struct SymbolMap {
    std::vector<std::string> tokens;  // index -> original token; empty = print indices

    std::string name(int sym) const {
        return sym < (int)tokens.size() ? tokens[sym] : std::to_string(sym);
    }
};

// r x s array over symbols 0..n-1 with no repeat in any row or column.
class LatinRectangle {
  public:
    LatinRectangle() = default;
    // order 0 means infer: max(r, s, #distinct symbols used)
    LatinRectangle(std::vector<std::vector<int>> entries, int order = 0,
                   SymbolMap symbols = {});

    int rows() const { return r_; }
    int cols() const { return s_; }
    int order() const { return n_; }
    int at(int i, int j) const { return e_[size_t(i) * s_ + j]; }
    const SymbolMap& symbols() const { return sym_; }

    bool is_square() const { return r_ == n_ && s_ == n_; }
    // occurrences of symbol k, the N(k) of the completion theorem
    int symbol_count(int k) const;

    std::string serialize() const;

  private:
    int r_ = 0, s_ = 0, n_ = 0;
    std::vector<int> e_;
    SymbolMap sym_;
    void validate() const;
};

class LatinSquare {
  public:
    LatinSquare() = default;
    explicit LatinSquare(const LatinRectangle& rect);
    LatinSquare(std::vector<std::vector<int>> entries, SymbolMap symbols = {});

    int order() const { return n_; }
    int at(int i, int j) const { return e_[size_t(i) * n_ + j]; }
    const SymbolMap& symbols() const { return sym_; }
    const LatinRectangle& rect() const { return rect_; }

    bool operator==(const LatinSquare& o) const { return n_ == o.n_ && e_ == o.e_; }

    std::string serialize() const { return rect_.serialize(); }

  private:
    int n_ = 0;
    std::vector<int> e_;
    SymbolMap sym_;
    LatinRectangle rect_;
};

// Whitespace-separated tokens, one row per line, '#' comments.  Distinct
// tokens map to 0..n-1 in first-appearance order.
LatinRectangle parse_rectangle(const std::string& text, int order = 0);
LatinSquare    parse_square(const std::string& text);

// n cells, one per row and per column; stored as the column of each row.
struct Path {
    std::vector<int> col_of_row;

    int order() const { return (int)col_of_row.size(); }
    void validate() const;  // columns must form a permutation
};

// A path together with the host square's symbols at its cells.
struct Transversal {
    Path path;
    std::vector<int> symbols;  // symbols[r] = sq(r, path.col_of_row[r])

    int order() const { return path.order(); }
    static Transversal of(const LatinSquare& sq, Path p);  // validates
};

// n x n x n zero-one array with exactly one 1 on every axis-parallel line.
class LatinCube {
  public:
    LatinCube() = default;
    LatinCube(int n, std::vector<uint8_t> bits);  // validates the line invariant

    int order() const { return n_; }
    bool get(int i, int j, int k) const { return bits_[(size_t(i) * n_ + j) * n_ + k]; }

  private:
    int n_ = 0;
    std::vector<uint8_t> bits_;
};

struct NormalizedSquare {
    LatinSquare square;
    // square(i, j) == input(row_perm[i], col_perm[j])
    std::vector<int> row_perm, col_perm;
};

// Permutes columns until row 0 reads 0..n-1, then rows until column 0
// reads 0..n-1.  Symbols are untouched; the two permutations are returned.
NormalizedSquare normalize(const LatinSquare& sq);

bool is_symmetric(const LatinSquare& sq);

LatinCube   to_cube(const LatinSquare& sq);
LatinSquare from_cube(const LatinCube& cube);

// Uniform-ish random square by restarted row-by-row sampling; deterministic
// for a fixed generator state.
LatinSquare random_latin_square(int n, std::mt19937_64& rng);

// Applies a random isotopy (row perm, column perm, symbol renaming).
LatinSquare random_isotope(const LatinSquare& sq, std::mt19937_64& rng);

}  // namespace ryser
