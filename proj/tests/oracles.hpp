#pragma once

// Brute-force reference implementations used by the tests.  These stay
// independent of the library's search kernels: permutation scans, subset
// enumeration and plain cell-by-cell DFS only.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "ryser/latin.hpp"
#include "ryser/matrix.hpp"

namespace oracle {

using ryser::ExactMatrix;
using ryser::LatinSquare;
using ryser::Rat;
using ryser::ZeroOneMatrix;

// transversal count by scanning all n! column permutations
inline long transversal_count(const LatinSquare& sq) {
    int n = sq.order();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        std::vector<char> seen(n, 0);
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) {
            int s = sq.at(i, perm[i]);
            if (seen[s]) ok = false;
            seen[s] = 1;
        }
        count += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// minimum line cover size by enumerating row subsets; the columns are then
// forced to be exactly those still containing a 1
inline int min_cover_size(const ZeroOneMatrix& a) {
    int m = a.rows(), n = a.cols();
    int best = m + n;
    for (unsigned rs = 0; rs < (1u << m); ++rs) {
        int size = std::popcount(rs);
        if (size >= best) continue;
        for (int j = 0; j < n; ++j) {
            bool needed = false;
            for (int i = 0; i < m && !needed; ++i)
                needed = a.get(i, j) && !(rs >> i & 1);
            size += needed;
        }
        best = std::min(best, size);
    }
    return best;
}

// Hall check and SDR existence by trying all assignments
inline bool has_sdr(const std::vector<std::vector<int>>& sets, int ground) {
    int m = (int)sets.size();
    std::vector<int> pick(m, -1);
    std::vector<char> used(ground, 0);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == m) return true;
        for (int x : sets[i]) {
            if (used[x]) continue;
            used[x] = 1;
            if (self(self, i + 1)) return true;
            used[x] = 0;
        }
        return false;
    };
    return rec(rec, 0);
}

inline long sdr_count(const std::vector<std::vector<int>>& sets, int ground) {
    int m = (int)sets.size();
    std::vector<char> used(ground, 0);
    long count = 0;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == m) {
            ++count;
            return;
        }
        for (int x : sets[i]) {
            if (used[x]) continue;
            used[x] = 1;
            self(self, i + 1);
            used[x] = 0;
        }
    };
    rec(rec, 0);
    return count;
}

// can the partial square (-1 = empty) be completed? plain DFS
inline bool completable(std::vector<std::vector<int>> grid, int n) {
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (grid[i][j] >= 0) continue;
            for (int s = 0; s < n; ++s) {
                bool ok = true;
                for (int t = 0; t < n && ok; ++t)
                    ok = grid[i][t] != s && grid[t][j] != s;
                if (!ok) continue;
                grid[i][j] = s;
                if (completable(grid, n)) return true;
                grid[i][j] = -1;
            }
            return false;
        }
    return true;
}

// every Latin square of order n, by cell DFS (use only for n <= 4)
inline void all_squares(int n, const std::function<void(const LatinSquare&)>& fn) {
    std::vector<std::vector<int>> grid(n, std::vector<int>(n, -1));
    auto rec = [&](auto&& self, int cell) -> void {
        if (cell == n * n) {
            fn(LatinSquare(grid));
            return;
        }
        int i = cell / n, j = cell % n;
        for (int s = 0; s < n; ++s) {
            bool ok = true;
            for (int t = 0; t < n && ok; ++t)
                ok = grid[i][t] != s && grid[t][j] != s;
            if (!ok) continue;
            grid[i][j] = s;
            self(self, cell + 1);
            grid[i][j] = -1;
        }
    };
    rec(rec, 0);
}

// random convex combination of random permutation matrices, exact weights
inline ExactMatrix random_doubly_stochastic(int n, std::mt19937_64& rng, int terms = 4) {
    ExactMatrix a(n, n);
    std::vector<long> w(terms);
    long total = 0;
    for (auto& x : w) {
        x = 1 + (long)(rng() % 9);
        total += x;
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int t = 0; t < terms; ++t) {
        std::shuffle(perm.begin(), perm.end(), rng);
        for (int i = 0; i < n; ++i) a.at(i, perm[i]) += ryser::frac(w[t], total);
    }
    return a;
}

inline ExactMatrix random_small_integer_matrix(int n, std::mt19937_64& rng, int lo = 0,
                                               int hi = 4) {
    ExactMatrix a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = (long)(lo + rng() % (hi - lo + 1));
    return a;
}

inline ZeroOneMatrix random_zero_one(int m, int n, std::mt19937_64& rng, int density_pct = 50) {
    ZeroOneMatrix a(m, n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if ((int)(rng() % 100) < density_pct) a.set(i, j, true);
    return a;
}

}  // namespace oracle
