#pragma once

#include <gmpxx.h>

namespace quintic {

// Exact arbitrary-precision signed integer; every arithmetic value in the
// library is one of these. GMP keeps zero canonical and non-negative.
using Integer = mpz_class;

// base^exp over the integers, exp >= 0.
Integer ipow(const Integer& base, unsigned long exp);

inline bool is_even(const Integer& a) { return mpz_even_p(a.get_mpz_t()) != 0; }
inline bool is_odd(const Integer& a) { return mpz_odd_p(a.get_mpz_t()) != 0; }

// BPSW plus 40 Miller-Rabin rounds; no false negatives, and no false
// positives below 2^64, which covers every input this library feeds it.
bool is_probable_prime(const Integer& n);

// Least non-negative residue of a mod m, m > 0.
Integer mod_floor(const Integer& a, const Integer& m);

// Checked narrowing for report and CLI fields.
long to_long(const Integer& a);
unsigned long to_ulong(const Integer& a);

}  // namespace quintic
