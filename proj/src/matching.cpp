#include "ryser/matching.hpp"

#include <algorithm>
#include <numeric>

namespace ryser {

namespace {

// Kuhn's augmenting path over an adjacency predicate.  match_col[j] is the
// row matched to column j, or -1.
template <class Adj>
bool augment_row(int row, int cols, const Adj& adj, std::vector<char>& seen,
                 std::vector<int>& match_col) {
    for (int j = 0; j < cols; ++j) {
        if (!adj(row, j) || seen[j]) continue;
        seen[j] = 1;
        if (match_col[j] < 0 || augment_row(match_col[j], cols, adj, seen, match_col)) {
            match_col[j] = row;
            return true;
        }
    }
    return false;
}

std::vector<int> kuhn_match(int rows, int cols, auto adj) {
    std::vector<int> match_col(cols, -1);
    std::vector<char> seen(cols);
    for (int i = 0; i < rows; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        augment_row(i, cols, adj, seen, match_col);
    }
    return match_col;
}

}  // namespace

bool LineCover::covers(const ZeroOneMatrix& a) const {
    std::vector<char> rc(a.rows()), cc(a.cols());
    for (int i : row_lines) rc[i] = 1;
    for (int j : col_lines) cc[j] = 1;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.get(i, j) && !rc[i] && !cc[j]) return false;
    return true;
}

ZeroOneMatrix SetSystem::incidence() const {
    ZeroOneMatrix a((int)sets.size(), ground_size);
    for (int i = 0; i < (int)sets.size(); ++i)
        for (int x : sets[i]) {
            if (x < 0 || x >= ground_size) throw input_error("set element out of ground set");
            a.set(i, x, true);
        }
    return a;
}

SetSystem SetSystem::from_incidence(const ZeroOneMatrix& a) {
    SetSystem sys;
    sys.ground_size = a.cols();
    sys.sets.resize(a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.get(i, j)) sys.sets[i].push_back(j);
    return sys;
}

Matching max_matching(const ZeroOneMatrix& a) {
    auto match_col = kuhn_match(a.rows(), a.cols(),
                                [&](int i, int j) { return a.get(i, j); });
    Matching m;
    for (int j = 0; j < a.cols(); ++j)
        if (match_col[j] >= 0) m.cells.emplace_back(match_col[j], j);
    std::sort(m.cells.begin(), m.cells.end());
    return m;
}

LineCover min_line_cover(const ZeroOneMatrix& a) {
    auto match_col = kuhn_match(a.rows(), a.cols(),
                                [&](int i, int j) { return a.get(i, j); });
    std::vector<int> match_row(a.rows(), -1);
    for (int j = 0; j < a.cols(); ++j)
        if (match_col[j] >= 0) match_row[match_col[j]] = j;

    // alternating reachability from unmatched rows: row -> col over any 1,
    // col -> row over a matching edge
    std::vector<char> row_reached(a.rows()), col_reached(a.cols());
    std::vector<int> stack;
    for (int i = 0; i < a.rows(); ++i)
        if (match_row[i] < 0) { row_reached[i] = 1; stack.push_back(i); }
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < a.cols(); ++j) {
            if (!a.get(i, j) || col_reached[j]) continue;
            col_reached[j] = 1;
            int i2 = match_col[j];
            if (i2 >= 0 && !row_reached[i2]) { row_reached[i2] = 1; stack.push_back(i2); }
        }
    }

    LineCover cover;
    for (int i = 0; i < a.rows(); ++i)
        if (match_row[i] >= 0 && !row_reached[i]) cover.row_lines.push_back(i);
    for (int j = 0; j < a.cols(); ++j)
        if (col_reached[j]) cover.col_lines.push_back(j);

    if (!cover.covers(a)) throw inconsistency_error("line cover misses a 1");
    return cover;
}

SdrResult find_sdr(const SetSystem& sys) {
    ZeroOneMatrix a = sys.incidence();
    auto match_col = kuhn_match(a.rows(), a.cols(),
                                [&](int i, int j) { return a.get(i, j); });
    std::vector<int> match_row(a.rows(), -1);
    for (int j = 0; j < a.cols(); ++j)
        if (match_col[j] >= 0) match_row[match_col[j]] = j;

    int unmatched = -1;
    for (int i = 0; i < a.rows(); ++i)
        if (match_row[i] < 0) { unmatched = i; break; }

    if (unmatched < 0) {
        SDR sdr;
        sdr.representatives.assign(match_row.begin(), match_row.end());
        return sdr;
    }

    // Hall violator: rows reachable by alternating paths from the first
    // unmatched row; their set union is exactly the reachable columns.
    std::vector<char> row_reached(a.rows()), col_reached(a.cols());
    std::vector<int> stack{unmatched};
    row_reached[unmatched] = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < a.cols(); ++j) {
            if (!a.get(i, j) || col_reached[j]) continue;
            col_reached[j] = 1;
            int i2 = match_col[j];
            if (i2 >= 0 && !row_reached[i2]) { row_reached[i2] = 1; stack.push_back(i2); }
        }
    }
    HallViolator v;
    for (int i = 0; i < a.rows(); ++i)
        if (row_reached[i]) v.indices.push_back(i);
    for (int j = 0; j < a.cols(); ++j)
        if (col_reached[j]) v.union_elements.push_back(j);
    if (v.union_elements.size() >= v.indices.size())
        throw inconsistency_error("violator union not smaller than index set");
    return v;
}

ExactMatrix BirkhoffDecomposition::reconstruct(int n) const {
    ExactMatrix a(n, n);
    for (const auto& [c, p] : terms)
        for (int i = 0; i < n; ++i) a.at(i, p[i]) += c;
    return a;
}

BirkhoffDecomposition birkhoff_decompose(const ExactMatrix& a) {
    int n = a.rows();
    if (n != a.cols()) throw input_error("birkhoff: matrix not square");
    if (!a.is_doubly_stochastic()) throw input_error("birkhoff: not doubly stochastic");

    const int max_terms = n * n - 2 * n + 2;
    ExactMatrix rem = a;
    BirkhoffDecomposition dec;
    Rat total = 0;
    while (true) {
        bool any = false;
        for (int i = 0; i < n && !any; ++i)
            for (int j = 0; j < n && !any; ++j) any = rem.at(i, j) > 0;
        if (!any) break;

        auto match_col = kuhn_match(n, n, [&](int i, int j) { return rem.at(i, j) > 0; });
        std::vector<int> perm(n, -1);
        for (int j = 0; j < n; ++j)
            if (match_col[j] >= 0) perm[match_col[j]] = j;
        for (int i = 0; i < n; ++i)
            if (perm[i] < 0)
                throw inconsistency_error("doubly stochastic matrix without positive diagonal");

        // smallest of the selected positive elements, as in the extraction proof
        Rat c = rem.at(0, perm[0]);
        for (int i = 1; i < n; ++i) c = std::min(c, rem.at(i, perm[i]));
        for (int i = 0; i < n; ++i) rem.at(i, perm[i]) -= c;
        dec.terms.emplace_back(c, std::move(perm));
        total += c;
        if ((int)dec.terms.size() > max_terms)
            throw inconsistency_error("birkhoff extraction exceeded n^2-2n+2 terms");
    }
    if (total != 1) throw inconsistency_error("birkhoff coefficients do not sum to 1");
    return dec;
}

std::vector<std::vector<int>> regular_01_decompose(const ZeroOneMatrix& a) {
    int n = a.rows();
    if (n != a.cols()) throw input_error("decompose: matrix not square");
    int d = a.row_sum(0);
    for (int i = 0; i < n; ++i)
        if (a.row_sum(i) != d) throw input_error("decompose: row sums not all equal");
    for (int j = 0; j < n; ++j)
        if (a.col_sum(j) != d) throw input_error("decompose: column sums not all equal");

    ZeroOneMatrix rem = a;
    std::vector<std::vector<int>> perms;
    for (int step = 0; step < d; ++step) {
        auto match_col = kuhn_match(n, n, [&](int i, int j) { return rem.get(i, j); });
        std::vector<int> perm(n, -1);
        for (int j = 0; j < n; ++j)
            if (match_col[j] >= 0) perm[match_col[j]] = j;
        for (int i = 0; i < n; ++i) {
            if (perm[i] < 0)
                throw inconsistency_error("regular matrix without perfect matching");
            rem.set(i, perm[i], false);
        }
        perms.push_back(std::move(perm));
    }
    return perms;
}

LatinSquare complete_rectangle(const LatinRectangle& rect) {
    int r = rect.rows(), n = rect.order();
    if (rect.cols() != n) throw input_error("complete: rectangle must have s = n");

    std::vector<std::vector<int>> out(n, std::vector<int>(n));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = rect.at(i, j);
    if (r < n) {
        // incidence of the missing-symbol sets S_j, an (n-r)-regular matrix
        ZeroOneMatrix miss(n, n);
        for (int j = 0; j < n; ++j) {
            std::vector<char> present(n);
            for (int i = 0; i < r; ++i) present[rect.at(i, j)] = 1;
            for (int k = 0; k < n; ++k)
                if (!present[k]) miss.set(j, k, true);
        }
        auto perms = regular_01_decompose(miss);
        for (int t = 0; t < (int)perms.size(); ++t)
            for (int j = 0; j < n; ++j) out[r + t][j] = perms[t][j];
    }
    return LatinSquare(std::move(out), rect.symbols());
}

CompletabilityResult completable_rs(const LatinRectangle& rect) {
    int r = rect.rows(), s = rect.cols(), n = rect.order();

    CompletabilityResult res;
    for (int k = 0; k < n; ++k)
        if (rect.symbol_count(k) < r + s - n) res.deficient_symbols.push_back(k);
    if (!res.deficient_symbols.empty()) return res;
    res.completable = true;

    // Extend to r x n one column at a time.  Each extension matches rows to
    // symbols missing from them; symbols whose count is still at the bound
    // N(k) = r+c-n must be used now or the invariant breaks.  Matching them
    // first and then augmenting from unmatched rows keeps them matched,
    // since augmenting paths never unmatch a vertex.
    std::vector<std::vector<int>> grid(r, std::vector<int>(n, -1));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < s; ++j) grid[i][j] = rect.at(i, j);
    std::vector<int> count(n);
    for (int k = 0; k < n; ++k) count[k] = rect.symbol_count(k);

    for (int c = s; c < n; ++c) {
        ZeroOneMatrix avail(r, n);  // rows x symbols missing from that row
        for (int i = 0; i < r; ++i) {
            std::vector<char> in_row(n);
            for (int j = 0; j < c; ++j) in_row[grid[i][j]] = 1;
            for (int k = 0; k < n; ++k)
                if (!in_row[k]) avail.set(i, k, true);
        }

        // phase 1: match every critical symbol to some row (transpose view,
        // so the match vector is indexed by rectangle row)
        std::vector<int> row_match(r, -1);  // row -> symbol occupying it
        auto adj_t = [&](int k, int i) { return avail.get(i, k); };
        std::vector<char> seen_rows(r);
        for (int k = 0; k < n; ++k) {
            if (count[k] != r + c - n) continue;  // not critical
            std::fill(seen_rows.begin(), seen_rows.end(), 0);
            if (!augment_row(k, r, adj_t, seen_rows, row_match))
                throw inconsistency_error("completable rectangle: critical symbol unmatched");
        }

        // phase 2: saturate the remaining rows in the direct view
        std::vector<int> sym_match(n, -1);  // symbol -> row using it
        for (int i = 0; i < r; ++i)
            if (row_match[i] >= 0) sym_match[row_match[i]] = i;
        auto adj = [&](int i, int k) { return avail.get(i, k); };
        std::vector<char> seen_syms(n);
        for (int i = 0; i < r; ++i) {
            if (row_match[i] >= 0) continue;  // phase-2 sources stay disjoint
            std::fill(seen_syms.begin(), seen_syms.end(), 0);
            if (!augment_row(i, n, adj, seen_syms, sym_match))
                throw inconsistency_error("completable rectangle: row extension failed");
        }
        for (int k = 0; k < n; ++k)
            if (sym_match[k] >= 0) {
                grid[sym_match[k]][c] = k;
                ++count[k];
            }
        for (int i = 0; i < r; ++i)
            if (grid[i][c] < 0) throw inconsistency_error("column extension left a hole");
    }

    res.completion = complete_rectangle(LatinRectangle(grid, n, rect.symbols()));
    return res;
}

}  // namespace ryser
