#include "ryser/latin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace ryser {

LatinRectangle::LatinRectangle(std::vector<std::vector<int>> entries, int order,
                               SymbolMap symbols)
    : sym_(std::move(symbols)) {
    if (entries.empty() || entries[0].empty()) throw input_error("empty rectangle");
    r_ = (int)entries.size();
    s_ = (int)entries[0].size();
    int max_sym = -1;
    for (const auto& row : entries) {
        if ((int)row.size() != s_) throw input_error("ragged rows");
        for (int v : row) {
            if (v < 0) throw input_error("negative symbol");
            max_sym = std::max(max_sym, v);
        }
    }
    n_ = std::max({r_, s_, max_sym + 1});
    if (order != 0) {
        if (order < n_) throw input_error("order too small for rectangle contents");
        n_ = order;
    }
    e_.reserve(size_t(r_) * s_);
    for (const auto& row : entries) e_.insert(e_.end(), row.begin(), row.end());
    validate();
}

void LatinRectangle::validate() const {
    if (r_ > n_ || s_ > n_) throw input_error("rectangle larger than its order");
    std::vector<char> seen(n_);
    for (int i = 0; i < r_; ++i) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int j = 0; j < s_; ++j) {
            int v = at(i, j);
            if (v >= n_) throw input_error("more than n distinct symbols");
            if (seen[v]) throw input_error("repeated symbol in row " + std::to_string(i));
            seen[v] = 1;
        }
    }
    for (int j = 0; j < s_; ++j) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int i = 0; i < r_; ++i) {
            int v = at(i, j);
            if (seen[v]) throw input_error("repeated symbol in column " + std::to_string(j));
            seen[v] = 1;
        }
    }
}

int LatinRectangle::symbol_count(int k) const {
    int c = 0;
    for (int v : e_) c += (v == k);
    return c;
}

std::string LatinRectangle::serialize() const {
    std::string out;
    for (int i = 0; i < r_; ++i) {
        for (int j = 0; j < s_; ++j) {
            if (j) out += ' ';
            out += sym_.name(at(i, j));
        }
        out += '\n';
    }
    return out;
}

LatinSquare::LatinSquare(const LatinRectangle& rect) : rect_(rect) {
    if (!rect.is_square())
        throw input_error(rect.rows() == rect.cols()
                              ? "more than n distinct symbols"
                              : "not a square");
    n_ = rect.order();
    sym_ = rect.symbols();
    e_.reserve(size_t(n_) * n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) e_.push_back(rect.at(i, j));
}

LatinSquare::LatinSquare(std::vector<std::vector<int>> entries, SymbolMap symbols)
    : LatinSquare(LatinRectangle(std::move(entries), 0, std::move(symbols))) {}

LatinRectangle parse_rectangle(const std::string& text, int order) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<int>> rows;
    std::map<std::string, int> ids;
    SymbolMap sym;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::vector<int> row;
        std::string tok;
        while (ls >> tok) {
            auto [it, fresh] = ids.emplace(tok, (int)sym.tokens.size());
            if (fresh) sym.tokens.push_back(tok);
            row.push_back(it->second);
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw input_error("no rows in input");
    return LatinRectangle(std::move(rows), order, std::move(sym));
}

LatinSquare parse_square(const std::string& text) {
    return LatinSquare(parse_rectangle(text));
}

void Path::validate() const {
    int n = order();
    std::vector<char> seen(n);
    for (int c : col_of_row) {
        if (c < 0 || c >= n || seen[c]) throw input_error("path columns not a permutation");
        seen[c] = 1;
    }
}

Transversal Transversal::of(const LatinSquare& sq, Path p) {
    if (p.order() != sq.order()) throw input_error("path order mismatch");
    p.validate();
    Transversal t{std::move(p), {}};
    int n = sq.order();
    t.symbols.reserve(n);
    std::vector<char> seen(n);
    for (int i = 0; i < n; ++i) {
        int s = sq.at(i, t.path.col_of_row[i]);
        if (seen[s]) throw input_error("path is not a transversal: repeated symbol");
        seen[s] = 1;
        t.symbols.push_back(s);
    }
    return t;
}

LatinCube::LatinCube(int n, std::vector<uint8_t> bits) : n_(n), bits_(std::move(bits)) {
    if (n <= 0 || bits_.size() != size_t(n) * n * n) throw input_error("bad cube dimensions");
    auto line_ok = [&](auto cell) {
        int ones = 0;
        for (int t = 0; t < n_; ++t) ones += cell(t);
        return ones == 1;
    };
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            if (!line_ok([&](int t) { return get(a, b, t); }) ||
                !line_ok([&](int t) { return get(a, t, b); }) ||
                !line_ok([&](int t) { return get(t, a, b); }))
                throw input_error("cube line invariant violated");
        }
}

NormalizedSquare normalize(const LatinSquare& sq) {
    int n = sq.order();
    std::vector<int> col_perm(n), row_perm(n);
    // column j of the result is the input column holding symbol j in row 0
    for (int j = 0; j < n; ++j) col_perm[sq.at(0, j)] = j;
    // then row i of the result is the row whose (permuted) first entry is i
    for (int i = 0; i < n; ++i) row_perm[sq.at(i, col_perm[0])] = i;
    std::vector<std::vector<int>> out(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = sq.at(row_perm[i], col_perm[j]);
    return {LatinSquare(std::move(out), sq.symbols()), std::move(row_perm),
            std::move(col_perm)};
}

bool is_symmetric(const LatinSquare& sq) {
    int n = sq.order();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (sq.at(i, j) != sq.at(j, i)) return false;
    return true;
}

LatinCube to_cube(const LatinSquare& sq) {
    int n = sq.order();
    std::vector<uint8_t> bits(size_t(n) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            bits[(size_t(i) * n + j) * n + sq.at(i, j)] = 1;
    return LatinCube(n, std::move(bits));
}

LatinSquare from_cube(const LatinCube& cube) {
    int n = cube.order();
    std::vector<std::vector<int>> e(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (cube.get(i, j, k)) e[i][j] = k;
    return LatinSquare(std::move(e));
}

namespace {

// One attempt: fill rows with random Kuhn-matched permutations.
bool try_random_square(int n, std::mt19937_64& rng, std::vector<std::vector<int>>& out) {
    std::vector<uint32_t> col_used(n, 0);
    out.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) {
        // random greedy row with backtracking over columns
        std::vector<int> syms(n);
        std::iota(syms.begin(), syms.end(), 0);
        std::shuffle(syms.begin(), syms.end(), rng);
        uint32_t row_used = 0;
        std::vector<int> choice(n, -1);
        int j = 0;
        std::vector<int> tried(n, 0);
        while (j >= 0 && j < n) {
            bool placed = false;
            for (int k = tried[j]; k < n; ++k) {
                int s = syms[k];
                if ((row_used >> s & 1) || (col_used[j] >> s & 1)) continue;
                tried[j] = k + 1;
                choice[j] = s;
                row_used |= 1u << s;
                placed = true;
                break;
            }
            if (placed) { ++j; if (j < n) tried[j] = 0; }
            else {
                tried[j] = 0;
                --j;
                if (j >= 0) row_used &= ~(1u << choice[j]);
            }
        }
        if (j < 0) return false;
        for (int c = 0; c < n; ++c) {
            out[i][c] = choice[c];
            col_used[c] |= 1u << choice[c];
        }
    }
    return true;
}

}  // namespace

LatinSquare random_latin_square(int n, std::mt19937_64& rng) {
    if (n < 1 || n > 31) throw input_error("random square: order out of range");
    std::vector<std::vector<int>> e;
    while (!try_random_square(n, rng, e)) {}
    return LatinSquare(std::move(e));
}

LatinSquare random_isotope(const LatinSquare& sq, std::mt19937_64& rng) {
    int n = sq.order();
    std::vector<int> rp(n), cp(n), sp(n);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::iota(sp.begin(), sp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    std::shuffle(sp.begin(), sp.end(), rng);
    std::vector<std::vector<int>> e(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) e[i][j] = sp[sq.at(rp[i], cp[j])];
    return LatinSquare(std::move(e));
}

}  // namespace ryser
