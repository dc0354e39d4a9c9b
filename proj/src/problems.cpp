#include "ryser/problems.hpp"

#include <cmath>

namespace ryser {

namespace {

bool is_perfect_square(long x) {
    if (x < 0) return false;
    long r = (long)std::sqrt((double)x);
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r * r == x;
}

}  // namespace

Problem1Result problem1_analyze(const ZeroOneMatrix& a) {
    int m = a.rows(), n = a.cols();
    Problem1Result res;

    ZeroOneMatrix at = a.transpose();
    for (int j = 0; j < n; ++j)
        for (int k = j; k < n; ++k)
            if (at.row_dot(j, k) == 0) {
                res.status = Problem1Result::Status::hypothesis_violation;
                res.gram_zero = {j, k};
                return res;
            }

    // lowest row/column triple whose minor has all line sums 2
    for (int i1 = 0; i1 < m; ++i1)
        for (int i2 = i1 + 1; i2 < m; ++i2)
            for (int i3 = i2 + 1; i3 < m; ++i3)
                for (int j1 = 0; j1 < n; ++j1)
                    for (int j2 = j1 + 1; j2 < n; ++j2)
                        for (int j3 = j2 + 1; j3 < n; ++j3) {
                            int rows[3] = {i1, i2, i3}, cols[3] = {j1, j2, j3};
                            bool match = true;
                            for (int t = 0; t < 3 && match; ++t) {
                                int rs = 0, cs = 0;
                                for (int u = 0; u < 3; ++u) {
                                    rs += a.get(rows[t], cols[u]);
                                    cs += a.get(rows[u], cols[t]);
                                }
                                match = rs == 2 && cs == 2;
                            }
                            if (match) {
                                res.status = Problem1Result::Status::hypothesis_violation;
                                res.forbidden_minor = {i1, i2, i3, j1, j2, j3};
                                return res;
                            }
                        }

    for (int i = 0; i < m; ++i)
        if (a.row_sum(i) == n) {
            res.status = Problem1Result::Status::all_ones_row;
            res.row = i;
            return res;
        }
    // unreachable when the hypotheses hold; reported rather than asserted
    res.status = Problem1Result::Status::inconsistent;
    return res;
}

Problem2Result problem2_analyze(const ZeroOneMatrix& a, const DesignParams& params) {
    Problem2Result res;
    int v = params.v, k = params.k, l = params.lambda;

    if (a.rows() != a.cols() || a.rows() != v)
        res.premise_failures.push_back("matrix is not of order v");
    if (!params.inequalities_hold())
        res.premise_failures.push_back("parameters violate 0 < lambda < k < v-1");
    if (is_perfect_square(k - l))
        res.premise_failures.push_back("k - lambda is a perfect square");
    if (a.rows() == a.cols() && a == a.transpose()) {
        // AA^T = (k-l)I + lJ, checked entrywise
        bool eq = true;
        for (int i = 0; i < a.rows() && eq; ++i)
            for (int j = i; j < a.rows() && eq; ++j)
                eq = a.row_dot(i, j) == (i == j ? k : l);
        if (!eq) res.premise_failures.push_back("AA^T != (k-lambda)I + lambda J");
    } else if (a.rows() != a.cols() || !(a == a.transpose())) {
        res.premise_failures.push_back("matrix is not symmetric");
    }

    res.premises_hold = res.premise_failures.empty();
    if (!res.premises_hold) return res;

    res.row_sums_equal_k = true;
    for (int i = 0; i < v; ++i)
        if (a.row_sum(i) != k) res.row_sums_equal_k = false;

    res.trace = 0;
    for (int i = 0; i < v; ++i) res.trace += a.get(i, i);
    res.trace_equals_k = res.trace == k;
    return res;
}

}  // namespace ryser
