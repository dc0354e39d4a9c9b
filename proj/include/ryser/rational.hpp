#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace ryser {

// Exact arithmetic throughout: arbitrary-precision integers and
// canonical rationals (lowest terms, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when a verified mathematical identity fails at runtime, i.e.
// the library caught itself producing an inconsistent result.
struct inconsistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline Int factorial(unsigned long n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    Int b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

inline Int ipow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rpow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    return r;  // already canonical: powers of coprime values stay coprime
}

// mpq_class(num, den) leaves canonicalization to the caller; this doesn't.
inline Rat frac(const Int& num, const Int& den) {
    if (den == 0) throw input_error("zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or a plain integer; canonicalizes the result.
Rat parse_rat(const std::string& tok);

// "p/q" for non-integers, "p" otherwise.
std::string rat_str(const Rat& q);

// Fixed-precision decimal rendering, for display of irrational bound values.
std::string rat_decimal(const Rat& q, int digits = 6);

}  // namespace ryser
