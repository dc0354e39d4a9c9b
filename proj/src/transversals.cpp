#include "ryser/transversals.hpp"

#include <algorithm>
#include <future>

#include "ryser/dlx.hpp"
#include "ryser/mols.hpp"

namespace ryser {

namespace {

constexpr int kMaxPackedOrder = 16;

void check_packed_order(const LatinSquare& sq) {
    if (sq.order() > kMaxPackedOrder)
        throw input_error("order too large for the packed transversal kernel");
}

uint64_t count_rows(const LatinSquare& sq, int row, uint32_t used_cols,
                    uint32_t used_syms) {
    int n = sq.order();
    if (row == n) return 1;
    uint64_t total = 0;
    uint32_t free_cols = ~used_cols & ((1u << n) - 1);
    while (free_cols) {
        uint32_t bit = free_cols & (0u - free_cols);
        int c = std::countr_zero(bit);
        uint32_t sbit = 1u << sq.at(row, c);
        if (!(used_syms & sbit))
            total += count_rows(sq, row + 1, used_cols | bit, used_syms | sbit);
        free_cols &= free_cols - 1;
    }
    return total;
}

}  // namespace

uint64_t count_transversals(const LatinSquare& sq, int threads) {
    check_packed_order(sq);
    int n = sq.order();
    if (threads <= 1 || n < 2) return count_rows(sq, 0, 0, 0);

    // partition on the row-0 column; deterministic sum order
    std::vector<std::future<uint64_t>> parts;
    for (int c = 0; c < n; ++c)
        parts.push_back(std::async(std::launch::async, [&sq, c] {
            return count_rows(sq, 1, 1u << c, 1u << sq.at(0, c));
        }));
    uint64_t total = 0;
    for (auto& f : parts) total += f.get();
    return total;
}

TransversalSet enumerate_transversals(const LatinSquare& sq) {
    check_packed_order(sq);
    int n = sq.order();
    TransversalSet out;
    std::vector<int> cols(n);
    auto rec = [&](auto&& self, int row, uint32_t used_cols, uint32_t used_syms) -> void {
        if (row == n) {
            Transversal t;
            t.path.col_of_row = cols;
            t.symbols.resize(n);
            for (int i = 0; i < n; ++i) t.symbols[i] = sq.at(i, cols[i]);
            out.transversals.push_back(std::move(t));
            return;
        }
        for (int c = 0; c < n; ++c) {
            if (used_cols >> c & 1) continue;
            uint32_t sbit = 1u << sq.at(row, c);
            if (used_syms & sbit) continue;
            cols[row] = c;
            self(self, row + 1, used_cols | (1u << c), used_syms | sbit);
        }
    };
    rec(rec, 0, 0, 0);
    return out;  // ascending column choice per row = lexicographic order
}

std::optional<Transversal> find_transversal(const LatinSquare& sq) {
    check_packed_order(sq);
    int n = sq.order();
    std::vector<int> cols(n);
    auto rec = [&](auto&& self, int row, uint32_t used_cols, uint32_t used_syms) -> bool {
        if (row == n) return true;
        for (int c = 0; c < n; ++c) {
            if (used_cols >> c & 1) continue;
            uint32_t sbit = 1u << sq.at(row, c);
            if (used_syms & sbit) continue;
            cols[row] = c;
            if (self(self, row + 1, used_cols | (1u << c), used_syms | sbit)) return true;
        }
        return false;
    };
    if (!rec(rec, 0, 0, 0)) return std::nullopt;
    Transversal t;
    t.path.col_of_row = cols;
    t.symbols.resize(n);
    for (int i = 0; i < n; ++i) t.symbols[i] = sq.at(i, cols[i]);
    return t;
}

ParityVerdict check_parity_conjecture(const LatinSquare& sq, int threads) {
    uint64_t c = count_transversals(sq, threads);
    return {(c & 1) == (uint64_t)(sq.order() & 1), c};
}

Transversal symmetric_diagonal_check(const LatinSquare& sq) {
    int n = sq.order();
    if (!is_symmetric(sq)) throw input_error("square is not symmetric");
    if (n % 2 == 0) throw input_error("order is not odd");

    // counting fact from the proof: every symbol sits below the diagonal
    // (n - k)/2 times, so its diagonal count k is odd, hence positive
    for (int s = 0; s < n; ++s) {
        int diag = 0, below = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j <= i; ++j) {
                if (sq.at(i, j) != s) continue;
                (i == j ? diag : below) += 1;
            }
        if (diag % 2 == 0 || below * 2 + diag != n)
            throw inconsistency_error("diagonal symbol count not odd for a symmetric square");
    }
    Path p;
    p.col_of_row.resize(n);
    for (int i = 0; i < n; ++i) p.col_of_row[i] = i;
    return Transversal::of(sq, std::move(p));
}

void Decomposition::validate(const LatinSquare& sq) const {
    int n = sq.order();
    if ((int)transversals.size() != n)
        throw input_error("decomposition needs exactly n transversals");
    std::vector<char> covered(size_t(n) * n);
    for (const auto& t : transversals) {
        Transversal::of(sq, t.path);  // membership check
        for (int i = 0; i < n; ++i) {
            auto& c = covered[size_t(i) * n + t.path.col_of_row[i]];
            if (c) throw input_error("decomposition transversals overlap");
            c = 1;
        }
    }
}

namespace {

std::optional<Decomposition> decompose_impl(const LatinSquare& sq, uint64_t* count_out) {
    int n = sq.order();
    auto ts = enumerate_transversals(sq);
    if ((int)ts.transversals.size() < n) {
        if (count_out) *count_out = 0;
        return std::nullopt;
    }
    ExactCover ec(n * n);
    std::vector<int> cells(n);
    for (const auto& t : ts.transversals) {
        for (int i = 0; i < n; ++i) cells[i] = i * n + t.path.col_of_row[i];
        ec.add_row(cells);
    }
    if (count_out) {
        *count_out = ec.count_all();
        return std::nullopt;
    }
    auto rows = ec.find_one();
    if (!rows) return std::nullopt;
    Decomposition dec;
    for (int r : *rows) dec.transversals.push_back(ts.transversals[r]);
    dec.validate(sq);
    return dec;
}

}  // namespace

std::optional<Decomposition> find_decomposition(const LatinSquare& sq) {
    return decompose_impl(sq, nullptr);
}

uint64_t count_decompositions(const LatinSquare& sq) {
    uint64_t count = 0;
    decompose_impl(sq, &count);
    return count;
}

LatinSquare mate_from_decomposition(const LatinSquare& sq, const Decomposition& dec) {
    int n = sq.order();
    dec.validate(sq);
    std::vector<std::vector<int>> mate(n, std::vector<int>(n));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) mate[i][dec.transversals[k].path.col_of_row[i]] = k;
    LatinSquare m(std::move(mate), sq.symbols());
    if (!are_orthogonal(sq, m))
        throw inconsistency_error("decomposition mate is not orthogonal");
    return m;
}

}  // namespace ryser
