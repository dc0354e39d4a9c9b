#include "ryser/permanents.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "ryser/data.hpp"

namespace ryser {

namespace {

// Gray-code inclusion-exclusion over kept column subsets:
//   per(A) = (-1)^n sum_{S != empty} (-1)^{|S|} prod_i sum_{j in S} a_ij
Rat ryser_permanent(const ExactMatrix& a) {
    int n = a.rows();
    std::vector<Rat> rowsum(n);
    Rat total = 0;
    int popcount = 0;
    uint64_t prev = 0;
    for (uint64_t k = 1; k < (uint64_t(1) << n); ++k) {
        uint64_t gray = k ^ (k >> 1);
        uint64_t diff = gray ^ prev;
        int j = std::countr_zero(diff);
        if (gray & diff) {
            for (int i = 0; i < n; ++i) rowsum[i] += a.at(i, j);
            ++popcount;
        } else {
            for (int i = 0; i < n; ++i) rowsum[i] -= a.at(i, j);
            --popcount;
        }
        prev = gray;
        Rat prod = rowsum[0];
        for (int i = 1; i < n && prod != 0; ++i) prod *= rowsum[i];
        if ((n - popcount) & 1) total -= prod;
        else total += prod;
    }
    return total;
}

Rat naive_permanent(const ExactMatrix& a) {
    int m = a.rows(), n = a.cols();
    Rat total = 0;
    uint64_t used = 0;
    auto rec = [&](auto&& self, int row, const Rat& prod) -> void {
        if (row == m) {
            total += prod;
            return;
        }
        for (int j = 0; j < n; ++j) {
            if (used >> j & 1) continue;
            if (a.at(row, j) == 0) continue;  // zero factor kills the summand
            used |= uint64_t(1) << j;
            self(self, row + 1, prod * a.at(row, j));
            used &= ~(uint64_t(1) << j);
        }
    };
    rec(rec, 0, Rat(1));
    return total;
}

uint64_t falling_factorial(int n, int m) {
    uint64_t f = 1;
    for (int i = 0; i < m; ++i) f *= uint64_t(n - i);
    return f;
}

Int lcm_of(const std::vector<int>& xs) {
    Int l = 1;
    for (int x : xs)
        if (x > 0) {
            Int g = gcd(l, Int(x));
            l = l / g * x;
        }
    return l;
}

}  // namespace

PermanentResult permanent_with(const ExactMatrix& a, PermanentMethod method) {
    int m = a.rows(), n = a.cols();
    if (m > n) throw input_error("permanent needs m <= n");
    if (method == PermanentMethod::ryser) {
        if (m != n) throw input_error("the column-subset formula needs a square matrix");
        if (n > 63) throw input_error("square too large for subset enumeration");
        return {ryser_permanent(a), PermanentMethod::ryser, (uint64_t(1) << n) - 1};
    }
    if (n > 63) throw input_error("matrix too large for the definitional sum");
    return {naive_permanent(a), PermanentMethod::naive, falling_factorial(n, m)};
}

PermanentResult permanent(const ExactMatrix& a) {
    if (a.rows() == a.cols()) return permanent_with(a, PermanentMethod::ryser);
    return permanent_with(a, PermanentMethod::naive);
}

Int derangement(int n) {
    if (n < 0) throw input_error("derangement of negative n");
    // D_n = sum_k (-1)^k n!/k!, accumulated with t_k = n!/k!
    Int total = 0, term = factorial(n);
    for (int k = 0; k <= n; ++k) {
        if (k) term /= k;
        if (k & 1) total -= term;
        else total += term;
    }
    return total;
}

DerangementIdentity derangement_identity_check(int n) {
    if (n < 1) throw input_error("identity check needs n >= 1");
    DerangementIdentity out;
    out.n = n;
    out.derangements = derangement(n);
    Int sum = 0;
    for (int r = 0; r < n; ++r) {
        Int term = binomial(n, r) * ipow(Int(n - r), r) * ipow(Int(n - r - 1), n - r);
        if (r & 1) sum -= term;
        else sum += term;
    }
    out.corrected_sum = sum;
    ExactMatrix jmi(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) jmi.at(i, j) = 1;
    out.per_j_minus_i = permanent_with(jmi, PermanentMethod::ryser).value;
    out.consistent = (Rat(out.corrected_sum) == Rat(out.derangements)) &&
                     (out.per_j_minus_i == Rat(out.derangements));
    return out;
}

CirculantIdentity circulant_identity_check(int n, const Rat& x, const Rat& y) {
    if (n < 2) throw input_error("circulant check needs n >= 2");
    CirculantIdentity out;
    out.n = n;
    out.x = x;
    out.y = y;

    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        m.at(i, i) = x;
        m.at(i, (i + 1) % n) = y;
    }
    out.per_value = permanent_with(m, PermanentMethod::ryser).value;
    out.closed_form = rpow(x, n) + rpow(y, n);

    Rat sum = 0;
    for (int r = 0; r <= n / 2; ++r) {
        Rat ar = Rat(n) / (n - r) * Rat(binomial(n - r, r));
        if (ar.get_den() != 1)
            throw inconsistency_error("Kaplansky coefficient not an integer");
        out.a.push_back(ar.get_num());
        Rat term = ar * rpow(x * y, r) * rpow(x + y, n - 2 * r);
        if (r & 1) sum -= term;
        else sum += term;
    }
    out.kaplansky_sum = sum;
    out.consistent = out.per_value == out.closed_form && out.per_value == out.kaplansky_sum;
    return out;
}

bool BoundReport::any_violation() const {
    for (const auto& e : entries)
        if (e.verdict == BoundVerdict::violated && !e.conjectural) return true;
    return false;
}

BoundReport bound_report(const ExactMatrix& a) {
    int n = a.rows();
    if (n != a.cols()) throw input_error("bound report is defined for square matrices");
    BoundReport rep;
    rep.per_value = permanent(a).value;
    const Rat& per = rep.per_value;

    auto verdict_le = [](const Rat& lhs, const Rat& rhs) {
        return lhs < rhs    ? BoundVerdict::holds
               : lhs == rhs ? BoundVerdict::equality
                            : BoundVerdict::violated;
    };

    // van der Waerden lower bound (proved since the survey)
    if (a.is_doubly_stochastic()) {
        Rat bound = frac(factorial(n), ipow(Int(n), n));
        BoundEntry e;
        e.name = "van der Waerden per >= n!/n^n";
        e.bound_value = rat_str(bound);
        e.verdict = verdict_le(bound, per);
        if (e.verdict == BoundVerdict::equality) e.note = "equality case A = J/n";
        rep.entries.push_back(std::move(e));
    } else {
        BoundEntry e;
        e.name = "van der Waerden per >= n!/n^n";
        e.note = "not doubly stochastic";
        rep.entries.push_back(std::move(e));
    }

    // per <= prod min(r_j, s_j) over sorted profiles, for nonnegative entries
    if (a.all_nonnegative()) {
        std::vector<Rat> rs, cs;
        for (int i = 0; i < n; ++i) rs.push_back(a.row_sum(i));
        for (int j = 0; j < n; ++j) cs.push_back(a.col_sum(j));
        std::sort(rs.begin(), rs.end());
        std::sort(cs.begin(), cs.end());
        Rat bound = 1;
        for (int j = 0; j < n; ++j) bound *= std::min(rs[j], cs[j]);
        BoundEntry e;
        e.name = "profile bound per <= prod min(r_j, s_j)";
        e.bound_value = rat_str(bound);
        e.verdict = verdict_le(per, bound);
        rep.entries.push_back(std::move(e));
    } else {
        BoundEntry e;
        e.name = "profile bound per <= prod min(r_j, s_j)";
        e.note = "matrix has negative entries";
        rep.entries.push_back(std::move(e));
    }

    if (!a.is_zero_one()) {
        for (const char* name :
             {"Minc per <= prod (r_j+1)/2", "Minc conjecture per <= prod (r_j!)^(1/r_j)",
              "Minc double bound", "Hall per >= k! for k-regular"})
        {
            BoundEntry e;
            e.name = name;
            e.note = "not a zero-one matrix";
            rep.entries.push_back(std::move(e));
        }
        return rep;
    }

    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) {
        Rat s = a.row_sum(i);
        r[i] = (int)s.get_num().get_si();
    }

    {
        Rat bound = 1;
        for (int i = 0; i < n; ++i) bound *= frac(r[i] + 1, 2);
        BoundEntry e;
        e.name = "Minc per <= prod (r_j+1)/2";
        e.bound_value = rat_str(bound);
        e.verdict = verdict_le(per, bound);
        rep.entries.push_back(std::move(e));
    }

    {
        // factorial form, exact via lcm powering; a zero row forces per = 0
        BoundEntry e;
        e.name = "Minc conjecture per <= prod (r_j!)^(1/r_j)";
        bool zero_row = std::any_of(r.begin(), r.end(), [](int x) { return x == 0; });
        if (zero_row) {
            e.verdict = per == 0 ? BoundVerdict::holds : BoundVerdict::violated;
            e.note = "zero row, per = 0";
        } else {
            Int l = lcm_of(r);
            unsigned long lu = l.get_ui();
            Int lhs = ipow(per.get_num(), lu);  // per is a nonneg integer here
            Int rhs = 1;
            long double approx = 1.0L;
            for (int i = 0; i < n; ++i) {
                Int f = factorial(r[i]);
                rhs *= ipow(f, Int(l / r[i]).get_ui());
                approx *= powl(f.get_d(), 1.0L / r[i]);
            }
            e.bound_value = std::to_string((double)approx);
            e.verdict = lhs < rhs    ? BoundVerdict::holds
                        : lhs == rhs ? BoundVerdict::equality
                                     : BoundVerdict::violated;
        }
        rep.entries.push_back(std::move(e));
    }

    {
        // prod (r_j!)^{1/n} ((r_j+1)/2)^{(n-r_j)/n}, exact after raising to n
        BoundEntry e;
        e.name = "Minc double bound";
        e.conjectural = true;
        Int lhs = ipow(per.get_num(), n);
        Rat rhs = 1;
        long double approx = 1.0L;
        for (int i = 0; i < n; ++i) {
            Rat factor = Rat(factorial(r[i])) * rpow(frac(r[i] + 1, 2), n - r[i]);
            rhs *= factor;
            approx *= powl(factorial(r[i]).get_d(), 1.0L / n) *
                      powl((r[i] + 1) / 2.0L, (n - r[i]) / (long double)n);
        }
        e.bound_value = std::to_string((double)approx);
        e.verdict = verdict_le(Rat(lhs), rhs);
        if (e.verdict == BoundVerdict::violated) e.note = "conjectural bound, reported as finding";
        rep.entries.push_back(std::move(e));
    }

    {
        BoundEntry e;
        e.name = "Hall per >= k! for k-regular";
        bool regular = true;
        for (int i = 1; i < n && regular; ++i) regular = r[i] == r[0];
        for (int j = 0; j < n && regular; ++j) regular = a.col_sum(j) == r[0];
        if (!regular) {
            e.verdict = BoundVerdict::skipped;
            e.note = "not regular";
        } else {
            Rat bound{factorial(r[0])};
            e.bound_value = rat_str(bound);
            e.verdict = verdict_le(bound, per);
            // the survey states a strict >, but J_k attains k! exactly
            if (e.verdict == BoundVerdict::equality) e.note = "boundary case, per = k!";
        }
        rep.entries.push_back(std::move(e));
    }

    return rep;
}

DiagonalResult marcus_minc_diagonal(const ExactMatrix& a) {
    int n = a.rows();
    if (n != a.cols() || !a.is_doubly_stochastic())
        throw input_error("diagonal bound needs a doubly stochastic matrix");
    if (n > 9) throw input_error("exhaustive diagonal search capped at n = 9");

    DiagonalResult best;
    best.product = -1;
    std::vector<int> perm(n, -1);
    uint32_t used = 0;
    auto rec = [&](auto&& self, int row, const Rat& prod) -> void {
        if (prod <= best.product && best.product >= 0) return;  // entries <= 1
        if (row == n) {
            best.product = prod;
            best.permutation = perm;
            return;
        }
        for (int j = 0; j < n; ++j) {
            if (used >> j & 1) continue;
            if (a.at(row, j) == 0 && best.product >= 0) continue;
            used |= 1u << j;
            perm[row] = j;
            self(self, row + 1, prod * a.at(row, j));
            used &= ~(1u << j);
        }
    };
    rec(rec, 0, Rat(1));

    Rat floor_bound = frac(1, ipow(Int(n), n));
    if (best.product < floor_bound)
        throw inconsistency_error("diagonal product below 1/n^n on a doubly stochastic matrix");
    return best;
}

CounterexampleReport counterexample_suite() {
    CounterexampleReport rep;
    ExactMatrix a = jurkat_a(), b = jurkat_b();
    rep.jurkat_per_a = permanent(a).value;
    rep.jurkat_per_ab = permanent(a * b).value;
    rep.product_conjecture_refuted =
        rep.jurkat_per_ab > std::min(rep.jurkat_per_a, permanent(b).value);

    ExactMatrix na = newman_a();
    rep.newman_per_a = permanent(na).value;
    rep.newman_per_aat = permanent(na * na.transpose()).value;
    rep.aat_conjecture_refuted = rep.newman_per_aat > rep.newman_per_a;
    return rep;
}

namespace {

// backtracking over the (n-1)x(n-1) free cells of a reduced square
template <class OnSquare>
Int reduced_squares(int n, OnSquare&& on_square, bool build) {
    std::vector<uint32_t> row_used(n), col_used(n);
    std::vector<std::vector<int>> grid(n, std::vector<int>(n));
    for (int j = 0; j < n; ++j) { grid[0][j] = j; row_used[0] |= 1u << j; }
    for (int i = 0; i < n; ++i) { grid[i][0] = i; col_used[0] |= 1u << i; }
    for (int i = 1; i < n; ++i) row_used[i] = 1u << i;
    for (int j = 1; j < n; ++j) col_used[j] = 1u << j;
    const uint32_t full = (n >= 32) ? ~0u : (1u << n) - 1;

    Int count = 0;
    auto rec = [&](auto&& self, int cell) -> void {
        if (cell == (n - 1) * (n - 1)) {
            ++count;
            if (build) on_square(grid);
            return;
        }
        int i = 1 + cell / (n - 1), j = 1 + cell % (n - 1);
        uint32_t avail = ~(row_used[i] | col_used[j]) & full;
        while (avail) {
            uint32_t bit = avail & (0u - avail);
            int s = std::countr_zero(bit);
            row_used[i] |= bit;
            col_used[j] |= bit;
            grid[i][j] = s;
            self(self, cell + 1);
            row_used[i] &= ~bit;
            col_used[j] &= ~bit;
            avail &= avail - 1;
        }
    };
    rec(rec, 0);
    return count;
}

}  // namespace

Int count_reduced_squares(int n) {
    if (n < 1 || n > 16) throw input_error("reduced-square count supports 1 <= n <= 16");
    if (n == 1) return 1;
    return reduced_squares(n, [](const std::vector<std::vector<int>>&) {}, false);
}

void for_each_reduced_square(int n, const std::function<void(const LatinSquare&)>& fn) {
    if (n < 1 || n > 16) throw input_error("reduced-square sweep supports 1 <= n <= 16");
    if (n == 1) {
        fn(LatinSquare(std::vector<std::vector<int>>{{0}}));
        return;
    }
    reduced_squares(n, [&](const std::vector<std::vector<int>>& grid) {
        fn(LatinSquare(grid));
    }, true);
}

namespace {

// integer permanent of an availability mask matrix (Gray-code subsets);
// fits machine integers comfortably for the n <= 7 rectangle counts
int64_t mask_permanent(const std::vector<uint32_t>& allowed, int n) {
    std::vector<int64_t> rowsum(n, 0);
    int64_t total = 0;
    int popcount = 0;
    uint64_t prev = 0;
    for (uint64_t k = 1; k < (uint64_t(1) << n); ++k) {
        uint64_t gray = k ^ (k >> 1);
        uint64_t diff = gray ^ prev;
        int j = std::countr_zero(diff);
        int delta = (gray & diff) ? 1 : -1;
        popcount += delta;
        for (int i = 0; i < n; ++i)
            if (allowed[i] >> j & 1) rowsum[i] += delta;
        prev = gray;
        int64_t prod = 1;
        for (int i = 0; i < n && prod != 0; ++i) prod *= rowsum[i];
        if ((n - popcount) & 1) total -= prod;
        else total += prod;
    }
    return total;
}

}  // namespace

Int count_rectangles(int r, int n, bool normalized) {
    if (r < 1 || r > n) throw input_error("rectangle count needs 1 <= r <= n");
    if (n > 7) throw input_error("rectangle count supports n <= 7");

    // first row fixed to natural order; multiply by n! for the raw count
    Int count = 0;
    std::vector<uint32_t> col_used(n);
    for (int j = 0; j < n; ++j) col_used[j] = 1u << j;
    const uint32_t full = (1u << n) - 1;

    if (r == 1) {
        count = 1;
    } else {
        std::vector<int> row(n);
        // enumerate rows 1..r-2 explicitly; the final row contributes the
        // permanent of the remaining availability matrix
        auto rec = [&](auto&& self, int depth) -> void {
            if (depth == r - 1) {
                std::vector<uint32_t> allowed(n);
                for (int j = 0; j < n; ++j) allowed[j] = ~col_used[j] & full;
                count += mask_permanent(allowed, n);
                return;
            }
            auto fill = [&](auto&& fill_self, int j, uint32_t used) -> void {
                if (j == n) {
                    for (int c = 0; c < n; ++c) col_used[c] |= 1u << row[c];
                    self(self, depth + 1);
                    for (int c = 0; c < n; ++c) col_used[c] &= ~(1u << row[c]);
                    return;
                }
                uint32_t avail = ~(col_used[j] | used) & full;
                while (avail) {
                    uint32_t bit = avail & (0u - avail);
                    row[j] = std::countr_zero(bit);
                    fill_self(fill_self, j + 1, used | bit);
                    avail &= avail - 1;
                }
            };
            fill(fill, 0, 0);
        };
        rec(rec, 1);
    }
    if (normalized) return count;
    return count * factorial(n);
}

SandwichReport rectangle_sandwich_check(int r, int n) {
    SandwichReport rep;
    rep.r = r;
    rep.n = n;
    rep.count = count_rectangles(r, n, false);

    Rat lower = rpow(frac(factorial(n), ipow(Int(n), n)), r);
    for (int j = 1; j <= r; ++j) lower *= Rat(ipow(Int(n + 1 - j), n));
    rep.lower = lower;
    rep.lower_holds = lower <= Rat(rep.count);

    std::vector<int> sizes;
    for (int j = 1; j <= r; ++j) sizes.push_back(n + 1 - j);
    Int l = lcm_of(sizes);
    Int lhs = ipow(rep.count, l.get_ui());
    Int rhs = 1;
    long double approx = 1.0L;
    for (int j = 1; j <= r; ++j) {
        int q = n + 1 - j;
        Int f = factorial(q);
        rhs *= ipow(f, Int(l * n / q).get_ui());
        approx *= powl(f.get_d(), n / (long double)q);
    }
    rep.upper_decimal = std::to_string((double)approx);
    rep.upper_holds = lhs <= rhs;
    return rep;
}

}  // namespace ryser
