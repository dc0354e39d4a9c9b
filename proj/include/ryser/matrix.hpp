#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ryser/rational.hpp"

namespace ryser {

// Dense zero-one matrix with bit-packed rows.
class ZeroOneMatrix {
  public:
    ZeroOneMatrix() = default;
    ZeroOneMatrix(int rows, int cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int i, int j) const {
        return (words_[i * wpr_ + (j >> 6)] >> (j & 63)) & 1u;
    }
    void set(int i, int j, bool v) {
        uint64_t& w = words_[i * wpr_ + (j >> 6)];
        if (v) w |= uint64_t(1) << (j & 63);
        else   w &= ~(uint64_t(1) << (j & 63));
    }

    int row_sum(int i) const;
    int col_sum(int j) const;
    // number of columns where rows i and j both hold a 1, i.e. (A A^T)_{ij}
    int row_dot(int i, int j) const;

    ZeroOneMatrix transpose() const;
    bool operator==(const ZeroOneMatrix& o) const = default;

    static ZeroOneMatrix identity(int n);
    static ZeroOneMatrix ones(int rows, int cols);

    // Rows of 0/1 digits (spaces optional); '#' starts a comment line.
    // An optional leading "m n" header line is accepted.
    static ZeroOneMatrix parse(const std::string& text);
    std::string serialize() const;  // one digit-run per row

  private:
    int rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> words_;
};

// Dense matrix of exact rationals.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rat& at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }
    Rat&       at(int i, int j)       { return e_[size_t(i) * cols_ + j]; }

    Rat row_sum(int i) const;
    Rat col_sum(int j) const;

    ExactMatrix transpose() const;
    ExactMatrix operator*(const ExactMatrix& o) const;
    bool operator==(const ExactMatrix& o) const;

    bool all_nonnegative() const;
    // nonnegative with every row and column sum exactly 1
    bool is_doubly_stochastic() const;
    bool is_zero_one() const;

    static ExactMatrix identity(int n);
    static ExactMatrix ones(int rows, int cols);
    static ExactMatrix from_zero_one(const ZeroOneMatrix& z);
    ZeroOneMatrix to_zero_one() const;  // requires is_zero_one()

    // File format: first line "m n", then m lines of n rational tokens
    // ("p/q" or integer); '#' starts a comment line.
    static ExactMatrix parse(const std::string& text);
    std::string serialize() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

}  // namespace ryser
