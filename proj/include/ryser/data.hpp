#pragma once

#include "ryser/latin.hpp"
#include "ryser/matrix.hpp"

namespace ryser {

// Parker's order-10 square with 5504 transversals.
LatinSquare parker_square();

// The same square after exchanging the twelve marked cells (0 <-> 5 and
// 2 <-> 7), which turns it into the cyclic square of order 10: no
// transversals, hence no orthogonal partner.
LatinSquare parker_swapped_square();

// The displayed order-3 orthogonal pair (0-based).
LatinSquare circulant3();
LatinSquare circulant3_mate();

// Addition table of Z_n, a_{ij} = i + j mod n.
LatinSquare cyclic_square(int n);

// The matching example matrix with three underlined ones.
ZeroOneMatrix matching_example();

// The forbidden 3x3 pattern of Problem 1.
ZeroOneMatrix forbidden_pattern();

// Jurkat's counterexample pair to per(AB) <= min(per A, per B).
ExactMatrix jurkat_a();
ExactMatrix jurkat_b();

// Newman's counterexample to per(A A^T) < per(A).
ExactMatrix newman_a();

}  // namespace ryser
