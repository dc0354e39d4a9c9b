#pragma once

#include <vector>

#include "ryser/latin.hpp"
#include "ryser/matrix.hpp"

namespace ryser {

// GF(p^a) with elements indexed 0..n-1; index 0 is the zero element and
// index 1 the one.  Extension elements are polynomials over GF(p) encoded
// by their coefficient digits in base p, reduced modulo the
// lexicographically smallest monic irreducible of degree a.
class FiniteField {
  public:
    static FiniteField build(int p, int a);

    int characteristic() const { return p_; }
    int exponent() const { return a_; }
    int size() const { return n_; }
    const std::vector<int>& modulus_coeffs() const { return mod_; }

    int add(int x, int y) const { return add_[x * n_ + y]; }
    int mul(int x, int y) const { return mul_[x * n_ + y]; }
    int neg(int x) const;
    int inv(int x) const;  // x != 0

  private:
    int p_ = 0, a_ = 0, n_ = 0;
    std::vector<int> add_, mul_;
    std::vector<int> mod_;  // monic irreducible, coefficients low-to-high
};

// t pairwise orthogonal Latin squares of one order.
class OrthogonalSystem {
  public:
    OrthogonalSystem() = default;
    explicit OrthogonalSystem(std::vector<LatinSquare> squares);  // verifies

    int order() const { return squares_.empty() ? 0 : squares_[0].order(); }
    int count() const { return (int)squares_.size(); }
    bool complete() const { return count() == order() - 1; }
    const LatinSquare& square(int t) const { return squares_[t]; }
    const std::vector<LatinSquare>& squares() const { return squares_; }

    std::string serialize() const;  // squares separated by blank lines
    static OrthogonalSystem parse(const std::string& text);

  private:
    std::vector<LatinSquare> squares_;
};

// n^2 x (t+2) orthogonal array: every column pair runs through all n^2
// ordered pairs exactly once.  Verified on construction.
class Schema {
  public:
    Schema(int order, std::vector<std::vector<int>> rows);

    int order() const { return n_; }
    int width() const { return w_; }         // t + 2
    int mols_count() const { return w_ - 2; }
    int at(int r, int c) const { return rows_[r][c]; }

  private:
    int n_ = 0, w_ = 0;
    std::vector<std::vector<int>> rows_;
};

// Square zero-one incidence matrix of order n^2+n+1 with A A^T = nI + J.
struct PlaneIncidence {
    ZeroOneMatrix incidence;
    int order = 0;  // the plane's n
};

// true iff the superimposition of A and B yields n^2 distinct ordered pairs
bool are_orthogonal(const LatinSquare& a, const LatinSquare& b);

// Complete system of n-1 MOLS over GF(p^a): entries a_e*a_i + a_j for each
// nonzero a_e.  Pairwise orthogonality is verified.
OrthogonalSystem complete_system(const FiniteField& field);

Schema system_to_schema(const OrthogonalSystem& sys);
OrthogonalSystem schema_to_system(const Schema& sch);

// Direct-product schema of Lemma 2.2; pairs flattened as (x, x') -> x*n' + x'.
Schema macneish_product(const Schema& b, const Schema& b2);

// t = min over prime-power factors of (p^alpha - 1) MOLS of order n.
// Inapplicable for n ≡ 2 (mod 4), where t would be 1.
OrthogonalSystem macneish_mols(int n);

// Incidence matrix of the projective plane of order n determined by a
// complete system; verifies A A^T = nI + J before returning.
PlaneIncidence plane_from_system(const OrthogonalSystem& sys);

bool verify_plane(const ZeroOneMatrix& a, int n);

// Reverse construction: fixes the first line as G_1, numbers the lines
// through each of its points by ascending line index, and reads off the
// schema of line numbers through the off-line points.
OrthogonalSystem system_from_plane(const PlaneIncidence& plane);

// Convenience used by the CLI and tests: a complete system of order n for
// n = 2 (the unique square) or any prime power up to 16.
OrthogonalSystem complete_system_of_order(int n);

}  // namespace ryser
