#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ryser/matrix.hpp"

namespace ryser {

struct DesignParams {
    int v = 0, k = 0, lambda = 0;

    bool inequalities_hold() const { return 0 < lambda && lambda < k && k < v - 1; }
};

struct Problem1Result {
    enum class Status { all_ones_row, hypothesis_violation, inconsistent };
    Status status = Status::inconsistent;
    int row = -1;                          // the all-ones row when found
    // witnesses for a violated hypothesis
    std::optional<std::pair<int, int>> gram_zero;        // zero entry of A^T A
    std::optional<std::array<int, 6>> forbidden_minor;   // rows i1<i2<i3, cols j1<j2<j3
};

// Checks the two hypotheses (A^T A positive; no 3x3 minor that is J_3 minus
// a permutation matrix) and, when they hold, locates the guaranteed
// all-ones row.  A minor matches the forbidden pattern up to row/column
// permutation exactly when all six of its line sums equal 2.
Problem1Result problem1_analyze(const ZeroOneMatrix& a);

struct Problem2Result {
    bool premises_hold = false;
    std::vector<std::string> premise_failures;
    int trace = -1;
    bool trace_equals_k = false;
    bool row_sums_equal_k = false;  // the proof's intermediate fact
};

// Verifies A symmetric, AA^T = (k-l)I + lJ, 0 < l < k < v-1 and k-l not a
// perfect square; then checks the conclusion trace(A) = k.
Problem2Result problem2_analyze(const ZeroOneMatrix& a, const DesignParams& params);

}  // namespace ryser
