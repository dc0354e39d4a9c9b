#include "ryser/matrix.hpp"

#include <bit>
#include <sstream>

namespace ryser {

namespace {

// Strips '#' comments, returns non-empty lines split into tokens.
std::vector<std::vector<std::string>> tokenize_lines(const std::string& text) {
    std::vector<std::vector<std::string>> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (!toks.empty()) out.push_back(std::move(toks));
    }
    return out;
}

}  // namespace

ZeroOneMatrix::ZeroOneMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64),
      words_(size_t(rows) * ((cols + 63) / 64)) {
    if (rows < 0 || cols < 0) throw input_error("negative matrix dimension");
}

int ZeroOneMatrix::row_sum(int i) const {
    int s = 0;
    for (int w = 0; w < wpr_; ++w) s += std::popcount(words_[i * wpr_ + w]);
    return s;
}

int ZeroOneMatrix::col_sum(int j) const {
    int s = 0;
    for (int i = 0; i < rows_; ++i) s += get(i, j);
    return s;
}

int ZeroOneMatrix::row_dot(int i, int j) const {
    int s = 0;
    for (int w = 0; w < wpr_; ++w)
        s += std::popcount(words_[i * wpr_ + w] & words_[j * wpr_ + w]);
    return s;
}

ZeroOneMatrix ZeroOneMatrix::transpose() const {
    ZeroOneMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (get(i, j)) t.set(j, i, true);
    return t;
}

ZeroOneMatrix ZeroOneMatrix::identity(int n) {
    ZeroOneMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

ZeroOneMatrix ZeroOneMatrix::ones(int rows, int cols) {
    ZeroOneMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.set(i, j, true);
    return m;
}

ZeroOneMatrix ZeroOneMatrix::parse(const std::string& text) {
    auto lines = tokenize_lines(text);
    if (lines.empty()) throw input_error("empty zero-one matrix");

    // optional "m n" header (two integer tokens that do not look like a row)
    size_t first = 0;
    if (lines[0].size() == 2 && lines.size() > 1 &&
        (lines[0][0].size() > 1 || lines[0][0][0] > '1' ||
         lines[0][1].size() > 1 || lines[0][1][0] > '1')) {
        first = 1;
    }

    std::vector<std::vector<bool>> bits;
    for (size_t li = first; li < lines.size(); ++li) {
        std::vector<bool> row;
        for (const auto& tok : lines[li])
            for (char c : tok) {
                if (c != '0' && c != '1') throw input_error("zero-one matrix: bad digit");
                row.push_back(c == '1');
            }
        bits.push_back(std::move(row));
    }
    for (const auto& r : bits)
        if (r.size() != bits[0].size()) throw input_error("zero-one matrix: ragged rows");

    ZeroOneMatrix m((int)bits.size(), (int)bits[0].size());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.set(i, j, bits[i][j]);
    return m;
}

std::string ZeroOneMatrix::serialize() const {
    std::string out;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out += get(i, j) ? '1' : '0';
        out += '\n';
    }
    return out;
}

Rat ExactMatrix::row_sum(int i) const {
    Rat s = 0;
    for (int j = 0; j < cols_; ++j) s += at(i, j);
    return s;
}

Rat ExactMatrix::col_sum(int j) const {
    Rat s = 0;
    for (int i = 0; i < rows_; ++i) s += at(i, j);
    return s;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw input_error("matrix product: dimension mismatch");
    ExactMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (size_t k = 0; k < e_.size(); ++k)
        if (e_[k] != o.e_[k]) return false;
    return true;
}

bool ExactMatrix::all_nonnegative() const {
    for (const Rat& q : e_)
        if (q < 0) return false;
    return true;
}

bool ExactMatrix::is_doubly_stochastic() const {
    if (rows_ != cols_ || !all_nonnegative()) return false;
    for (int i = 0; i < rows_; ++i)
        if (row_sum(i) != 1) return false;
    for (int j = 0; j < cols_; ++j)
        if (col_sum(j) != 1) return false;
    return true;
}

bool ExactMatrix::is_zero_one() const {
    for (const Rat& q : e_)
        if (q != 0 && q != 1) return false;
    return true;
}

ExactMatrix ExactMatrix::identity(int n) {
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::ones(int rows, int cols) {
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = 1;
    return m;
}

ExactMatrix ExactMatrix::from_zero_one(const ZeroOneMatrix& z) {
    ExactMatrix m(z.rows(), z.cols());
    for (int i = 0; i < z.rows(); ++i)
        for (int j = 0; j < z.cols(); ++j)
            if (z.get(i, j)) m.at(i, j) = 1;
    return m;
}

ZeroOneMatrix ExactMatrix::to_zero_one() const {
    if (!is_zero_one()) throw input_error("matrix has entries other than 0 and 1");
    ZeroOneMatrix z(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) == 1) z.set(i, j, true);
    return z;
}

ExactMatrix ExactMatrix::parse(const std::string& text) {
    auto lines = tokenize_lines(text);
    if (lines.empty()) throw input_error("empty matrix");
    if (lines[0].size() != 2) throw input_error("matrix: expected \"m n\" header line");
    long m, n;
    try {
        m = std::stol(lines[0][0]);
        n = std::stol(lines[0][1]);
    } catch (const std::exception&) {
        throw input_error("matrix: bad header line");
    }
    if (m <= 0 || n <= 0) throw input_error("matrix: nonpositive dimensions");
    if ((long)lines.size() != m + 1) throw input_error("matrix: wrong number of rows");
    ExactMatrix a((int)m, (int)n);
    for (long i = 0; i < m; ++i) {
        if ((long)lines[i + 1].size() != n) throw input_error("matrix: ragged row");
        for (long j = 0; j < n; ++j) a.at((int)i, (int)j) = parse_rat(lines[i + 1][j]);
    }
    return a;
}

std::string ExactMatrix::serialize() const {
    std::string out = std::to_string(rows_) + " " + std::to_string(cols_) + "\n";
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) out += ' ';
            out += rat_str(at(i, j));
        }
        out += '\n';
    }
    return out;
}

}  // namespace ryser
