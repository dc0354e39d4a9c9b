#include "ryser/mols.hpp"

#include <algorithm>
#include <sstream>

namespace ryser {

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// polynomials over GF(p) encoded as digit vectors, low coefficient first
using Poly = std::vector<int>;

Poly poly_mod(Poly f, const Poly& m, int p) {
    int dm = (int)m.size() - 1;
    while ((int)f.size() > dm) {
        int lead = f.back();
        int shift = (int)f.size() - 1 - dm;
        if (lead != 0)
            for (int i = 0; i <= dm; ++i)
                f[shift + i] = ((f[shift + i] - lead * m[i]) % p + p * p) % p;
        f.pop_back();
    }
    return f;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
    Poly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    return r;
}

int encode(const Poly& f, int p, int a) {
    int v = 0;
    for (int i = a - 1; i >= 0; --i) v = v * p + (i < (int)f.size() ? f[i] : 0);
    return v;
}

Poly decode(int v, int p, int a) {
    Poly f(a);
    for (int i = 0; i < a; ++i) { f[i] = v % p; v /= p; }
    return f;
}

bool divides(const Poly& d, Poly f, int p) {
    // monic d; true iff remainder of f by d is zero
    f = poly_mod(std::move(f), d, p);
    return std::all_of(f.begin(), f.end(), [](int c) { return c == 0; });
}

// smallest monic irreducible of degree a over GF(p), by ascending encoding
// of the non-leading coefficients
Poly smallest_irreducible(int p, int a) {
    int tail = 1;
    for (int i = 0; i < a; ++i) tail *= p;
    for (int t = 0; t < tail; ++t) {
        Poly m = decode(t, p, a);
        m.push_back(1);  // monic of degree a
        bool reducible = false;
        // trial division by every monic polynomial of degree 1..a-1
        for (int deg = 1; deg < a && !reducible; ++deg) {
            int dt = 1;
            for (int i = 0; i < deg; ++i) dt *= p;
            for (int u = 0; u < dt && !reducible; ++u) {
                Poly d = decode(u, p, deg);
                d.push_back(1);
                reducible = divides(d, m, p);
            }
        }
        if (!reducible) return m;
    }
    throw inconsistency_error("no irreducible polynomial found");
}

}  // namespace

FiniteField FiniteField::build(int p, int a) {
    if (!is_prime(p)) throw input_error("field characteristic is not prime");
    if (a < 1) throw input_error("field exponent must be positive");
    long n = 1;
    for (int i = 0; i < a; ++i) n *= p;
    if (n > 16) throw input_error("field size too large (p^a must be at most 16)");

    FiniteField f;
    f.p_ = p;
    f.a_ = a;
    f.n_ = (int)n;
    f.mod_ = a == 1 ? Poly{0, 1} : smallest_irreducible(p, a);
    f.add_.resize(n * n);
    f.mul_.resize(n * n);
    for (int x = 0; x < n; ++x) {
        Poly fx = decode(x, p, a);
        for (int y = 0; y < n; ++y) {
            Poly fy = decode(y, p, a);
            Poly s(a);
            for (int i = 0; i < a; ++i) s[i] = (fx[i] + fy[i]) % p;
            f.add_[x * n + y] = encode(s, p, a);
            Poly m = poly_mod(poly_mul(fx, fy, p), f.mod_, p);
            f.mul_[x * n + y] = encode(m, p, a);
        }
    }
    return f;
}

int FiniteField::neg(int x) const {
    for (int y = 0; y < n_; ++y)
        if (add(x, y) == 0) return y;
    throw inconsistency_error("field element without negative");
}

int FiniteField::inv(int x) const {
    if (x == 0) throw input_error("zero has no inverse");
    for (int y = 1; y < n_; ++y)
        if (mul(x, y) == 1) return y;
    throw inconsistency_error("field element without inverse");
}

bool are_orthogonal(const LatinSquare& a, const LatinSquare& b) {
    int n = a.order();
    if (b.order() != n) throw input_error("orthogonality check: order mismatch");
    std::vector<char> seen(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto& s = seen[size_t(a.at(i, j)) * n + b.at(i, j)];
            if (s) return false;
            s = 1;
        }
    return true;
}

OrthogonalSystem::OrthogonalSystem(std::vector<LatinSquare> squares)
    : squares_(std::move(squares)) {
    if (squares_.empty()) throw input_error("empty orthogonal system");
    int n = squares_[0].order();
    for (const auto& sq : squares_)
        if (sq.order() != n) throw input_error("orthogonal system: mixed orders");
    for (size_t i = 0; i < squares_.size(); ++i)
        for (size_t j = i + 1; j < squares_.size(); ++j)
            if (!are_orthogonal(squares_[i], squares_[j]))
                throw input_error("squares are not pairwise orthogonal");
    // the t <= n-1 bound; any violation would contradict the counting proof
    if ((int)squares_.size() >= 2 && n >= 3 && (int)squares_.size() > n - 1)
        throw inconsistency_error("orthogonal system larger than n-1");
}

std::string OrthogonalSystem::serialize() const {
    std::string out;
    for (int t = 0; t < count(); ++t) {
        if (t) out += '\n';
        out += squares_[t].serialize();
    }
    return out;
}

OrthogonalSystem OrthogonalSystem::parse(const std::string& text) {
    std::vector<LatinSquare> squares;
    std::istringstream in(text);
    std::string line, block;
    auto flush = [&] {
        if (block.find_first_not_of(" \t\n") == std::string::npos) return;
        squares.push_back(parse_square(block));
        block.clear();
    };
    while (std::getline(in, line)) {
        std::string stripped = line.substr(0, line.find('#'));
        if (stripped.find_first_not_of(" \t") == std::string::npos) flush();
        else block += line + "\n";
    }
    flush();
    return OrthogonalSystem(std::move(squares));
}

OrthogonalSystem complete_system(const FiniteField& field) {
    int n = field.size();
    if (n < 3) throw input_error("complete system needs n >= 3");
    std::vector<LatinSquare> squares;
    for (int e = 1; e < n; ++e) {
        std::vector<std::vector<int>> sq(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) sq[i][j] = field.add(field.mul(e, i), j);
        squares.emplace_back(std::move(sq));  // Latin validated on construction
    }
    return OrthogonalSystem(std::move(squares));  // orthogonality verified
}

Schema::Schema(int order, std::vector<std::vector<int>> rows)
    : n_(order), rows_(std::move(rows)) {
    if (n_ < 1 || (int)rows_.size() != n_ * n_) throw input_error("schema: wrong row count");
    w_ = (int)rows_[0].size();
    if (w_ < 2) throw input_error("schema: needs at least two columns");
    for (const auto& r : rows_) {
        if ((int)r.size() != w_) throw input_error("schema: ragged rows");
        for (int v : r)
            if (v < 0 || v >= n_) throw input_error("schema: symbol out of range");
    }
    // every pair of columns must run through all n^2 ordered pairs
    std::vector<char> seen(size_t(n_) * n_);
    for (int c1 = 0; c1 < w_; ++c1)
        for (int c2 = c1 + 1; c2 < w_; ++c2) {
            std::fill(seen.begin(), seen.end(), 0);
            for (const auto& r : rows_) {
                auto& s = seen[size_t(r[c1]) * n_ + r[c2]];
                if (s) throw input_error("schema: repeated pair in columns " +
                                         std::to_string(c1) + "," + std::to_string(c2));
                s = 1;
            }
        }
}

Schema system_to_schema(const OrthogonalSystem& sys) {
    int n = sys.order(), t = sys.count();
    std::vector<std::vector<int>> rows;
    rows.reserve(size_t(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<int> row{i, j};
            for (int k = 0; k < t; ++k) row.push_back(sys.square(k).at(i, j));
            rows.push_back(std::move(row));
        }
    return Schema(n, std::move(rows));
}

OrthogonalSystem schema_to_system(const Schema& sch) {
    int n = sch.order(), t = sch.mols_count();
    if (t < 1) throw input_error("schema has no square columns");
    std::vector<std::vector<std::vector<int>>> sq(
        t, std::vector<std::vector<int>>(n, std::vector<int>(n)));
    for (int r = 0; r < n * n; ++r) {
        int i = sch.at(r, 0), j = sch.at(r, 1);
        for (int k = 0; k < t; ++k) sq[k][i][j] = sch.at(r, k + 2);
    }
    std::vector<LatinSquare> squares;
    for (int k = 0; k < t; ++k) squares.emplace_back(std::move(sq[k]));
    return OrthogonalSystem(std::move(squares));
}

Schema macneish_product(const Schema& b, const Schema& b2) {
    if (b.width() != b2.width()) throw input_error("product schemas: column-count mismatch");
    int n = b.order(), n2 = b2.order(), w = b.width();
    std::vector<std::vector<int>> rows;
    rows.reserve(size_t(n) * n * n2 * n2);
    for (int r = 0; r < n * n; ++r)
        for (int r2 = 0; r2 < n2 * n2; ++r2) {
            std::vector<int> row(w);
            for (int c = 0; c < w; ++c) row[c] = b.at(r, c) * n2 + b2.at(r2, c);
            rows.push_back(std::move(row));
        }
    return Schema(n * n2, std::move(rows));
}

OrthogonalSystem macneish_mols(int n) {
    if (n < 3) throw input_error("macneish: order must be at least 3");
    std::vector<std::pair<int, int>> factors;  // (p, alpha)
    int m = n;
    for (int p = 2; p * p <= m; ++p)
        if (m % p == 0) {
            int a = 0;
            while (m % p == 0) { m /= p; ++a; }
            factors.emplace_back(p, a);
        }
    if (m > 1) factors.emplace_back(m, 1);

    int t = n;
    for (auto [p, a] : factors) {
        int q = 1;
        for (int i = 0; i < a; ++i) q *= p;
        t = std::min(t, q - 1);
    }
    if (t < 2)
        throw input_error("macneish: inapplicable, n = 2u with u odd gives t = 1");

    std::vector<Schema> schemas;
    for (auto [p, a] : factors) {
        auto sys = complete_system(FiniteField::build(p, a));
        std::vector<LatinSquare> trunc(sys.squares().begin(), sys.squares().begin() + t);
        schemas.push_back(system_to_schema(OrthogonalSystem(std::move(trunc))));
    }
    Schema acc = std::move(schemas[0]);
    for (size_t i = 1; i < schemas.size(); ++i) acc = macneish_product(acc, schemas[i]);
    return schema_to_system(acc);
}

PlaneIncidence plane_from_system(const OrthogonalSystem& sys) {
    int n = sys.order();
    if (!sys.complete()) throw input_error("plane construction needs a complete system");
    Schema sch = system_to_schema(sys);  // n^2 x (n+1)
    int w = sch.width();
    int m = n * n + n + 1;

    // points: schema rows 0..n^2-1, then ideal points n^2+j for column j;
    // lines: G_{ij} indexed j*n + i, then the ideal line last
    ZeroOneMatrix a(m, m);
    for (int j = 0; j < w; ++j)
        for (int i = 0; i < n; ++i) {
            int line = j * n + i;
            for (int r = 0; r < n * n; ++r)
                if (sch.at(r, j) == i) a.set(r, line, true);
            a.set(n * n + j, line, true);
        }
    for (int j = 0; j < w; ++j) a.set(n * n + j, m - 1, true);

    if (!verify_plane(a, n)) throw inconsistency_error("constructed plane fails A A^T = nI + J");
    return {std::move(a), n};
}

bool verify_plane(const ZeroOneMatrix& a, int n) {
    int m = n * n + n + 1;
    if (a.rows() != m || a.cols() != m) throw input_error("plane matrix has wrong dimension");
    for (int i = 0; i < m; ++i)
        if (a.row_sum(i) != n + 1) return false;
    for (int j = 0; j < m; ++j)
        if (a.col_sum(j) != n + 1) return false;
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            int want = i == j ? n + 1 : 1;
            if (a.row_dot(i, j) != want) return false;
        }
    return true;
}

OrthogonalSystem system_from_plane(const PlaneIncidence& plane) {
    int n = plane.order;
    const ZeroOneMatrix& a = plane.incidence;
    if (!verify_plane(a, n)) throw input_error("incidence matrix is not a plane of order n");
    int m = n * n + n + 1;

    // fix G_1 := line 0; its points become the P_j, the rest the Q_i
    std::vector<int> on_line, off_line;
    for (int z = 0; z < m; ++z)
        (a.get(z, 0) ? on_line : off_line).push_back(z);

    // number the n lines != G_1 through P_j by ascending line index
    std::vector<std::vector<int>> label(n + 1, std::vector<int>(m, -1));
    for (int pj = 0; pj <= n; ++pj) {
        int next = 0;
        for (int g = 1; g < m; ++g)
            if (a.get(on_line[pj], g)) label[pj][g] = next++;
        if (next != n) throw inconsistency_error("point not on exactly n+1 lines");
    }

    std::vector<std::vector<int>> rows;
    rows.reserve(size_t(n) * n);
    for (int qi = 0; qi < n * n; ++qi) {
        std::vector<int> row(n + 1, -1);
        for (int pj = 0; pj <= n; ++pj) {
            // the unique line through Q_i and P_j
            for (int g = 1; g < m; ++g)
                if (a.get(off_line[qi], g) && label[pj][g] >= 0) {
                    if (row[pj] >= 0)
                        throw inconsistency_error("two lines through one point pair");
                    row[pj] = label[pj][g];
                }
            if (row[pj] < 0) throw inconsistency_error("no line through a point pair");
        }
        rows.push_back(std::move(row));
    }
    return schema_to_system(Schema(n, std::move(rows)));
}

OrthogonalSystem complete_system_of_order(int n) {
    if (n == 2)
        return OrthogonalSystem({LatinSquare({{0, 1}, {1, 0}})});
    // prime-power orders delegate to the field construction
    for (int p = 2; p <= n; ++p) {
        if (!is_prime(p)) continue;
        int q = p, a = 1;
        while (q < n) { q *= p; ++a; }
        if (q == n) return complete_system(FiniteField::build(p, a));
    }
    throw input_error("no complete-system construction for this order");
}

}  // namespace ryser
