#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ryser/latin.hpp"

namespace ryser {

// All transversals of one square, ordered lexicographically by their
// column-per-row vectors (so primarily by the row-0 column).
struct TransversalSet {
    std::vector<Transversal> transversals;
};

// n pairwise disjoint transversals covering every cell exactly once.
struct Decomposition {
    std::vector<Transversal> transversals;

    void validate(const LatinSquare& sq) const;
};

// Exact transversal count by row-by-row backtracking over packed column and
// symbol masks.  threads > 1 partitions the row-0 column choices; the result
// is identical to the single-threaded run.
uint64_t count_transversals(const LatinSquare& sq, int threads = 1);

TransversalSet enumerate_transversals(const LatinSquare& sq);

std::optional<Transversal> find_transversal(const LatinSquare& sq);

struct ParityVerdict {
    bool consistent = false;   // count ≡ n (mod 2)
    uint64_t count = 0;
};

// Transversal-count parity against the order's parity (Conjecture 1; the
// even half is a theorem, the odd half has counterexamples from order 7 up).
ParityVerdict check_parity_conjecture(const LatinSquare& sq, int threads = 1);

// For a symmetric square of odd order the main diagonal is a transversal;
// verifies it together with the proof's counting fact (each symbol appears
// an odd number of times on the diagonal).
Transversal symmetric_diagonal_check(const LatinSquare& sq);

// Exact-cover search over the enumerated transversals (cells as universe).
std::optional<Decomposition> find_decomposition(const LatinSquare& sq);

uint64_t count_decompositions(const LatinSquare& sq);

// Places symbol k on every cell of the k-th transversal; the result is a
// Latin square orthogonal to the input (verified).
LatinSquare mate_from_decomposition(const LatinSquare& sq, const Decomposition& dec);

}  // namespace ryser
