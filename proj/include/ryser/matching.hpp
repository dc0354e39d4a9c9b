#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "ryser/latin.hpp"
#include "ryser/matrix.hpp"

namespace ryser {

// Cells holding ones, no two sharing a row or column; sorted by row.
struct Matching {
    std::vector<std::pair<int, int>> cells;

    int size() const { return (int)cells.size(); }
};

// Rows and columns that together contain every 1 of the covered matrix.
struct LineCover {
    std::vector<int> row_lines, col_lines;

    int size() const { return (int)(row_lines.size() + col_lines.size()); }
    bool covers(const ZeroOneMatrix& a) const;
};

struct SetSystem {
    int ground_size = 0;
    std::vector<std::vector<int>> sets;  // each sorted ascending, elements < ground_size

    ZeroOneMatrix incidence() const;
    static SetSystem from_incidence(const ZeroOneMatrix& a);
};

struct SDR {
    std::vector<int> representatives;  // representatives[i] in sets[i], all distinct
};

// Index set whose union is smaller than its size.
struct HallViolator {
    std::vector<int> indices;
    std::vector<int> union_elements;
};

using SdrResult = std::variant<SDR, HallViolator>;

struct BirkhoffDecomposition {
    // coefficient, and the permutation p with P[i][p[i]] = 1
    std::vector<std::pair<Rat, std::vector<int>>> terms;

    ExactMatrix reconstruct(int n) const;
};

// Maximum-cardinality matching by augmenting paths, deterministic for a
// fixed row scan order.
Matching max_matching(const ZeroOneMatrix& a);

// Minimum line cover via alternating reachability from unmatched rows;
// |cover| == |max matching| (Konig-Egervary).
LineCover min_line_cover(const ZeroOneMatrix& a);

// An SDR when Hall's condition holds, otherwise a witness violator.
SdrResult find_sdr(const SetSystem& sys);

// Exact convex decomposition of a doubly stochastic matrix into permutation
// matrices; at most n^2 - 2n + 2 terms.
BirkhoffDecomposition birkhoff_decompose(const ExactMatrix& a);

// A zero-one matrix with all line sums d as a sum of d permutation matrices.
std::vector<std::vector<int>> regular_01_decompose(const ZeroOneMatrix& a);

// Completes an r x n rectangle to a Latin square whose first r rows are the
// input: decompose the missing-symbol incidence into permutations, append
// each as a row.
LatinSquare complete_rectangle(const LatinRectangle& rect);

struct CompletabilityResult {
    bool completable = false;
    std::optional<LatinSquare> completion;   // present iff completable
    std::vector<int> deficient_symbols;      // symbols with N(i) < r+s-n
};

// r x s case: completable iff N(i) >= r+s-n for every symbol; builds the
// completion by extending columns via SDRs, then complete_rectangle.
CompletabilityResult completable_rs(const LatinRectangle& rect);

}  // namespace ryser
