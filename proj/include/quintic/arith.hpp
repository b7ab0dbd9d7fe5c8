#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "quintic/integer.hpp"

namespace quintic {

// Decomposition y2 = 2^(2*alpha) * 5^(2*beta) * p^(2*gamma) with alpha >= 1
// and p an odd prime other than 5. p is absent exactly when gamma = 0;
// factors of 5 are always normalized into beta.
struct PowerShape {
  long alpha = 0;
  long beta = 0;
  long gamma = 0;
  std::optional<Integer> p;

  Integer reconstruct() const;
  bool operator==(const PowerShape&) const = default;
};

// Non-negative greatest common divisor. gcd(0, 0) is rejected.
Integer gcd(const Integer& a, const Integer& b);

// Largest e with q^e | a, for prime q and a != 0.
unsigned long valuation(const Integer& q, const Integer& a);

// (prime, exponent) pairs in increasing prime order, n >= 1.
// Trial division with a probable-prime shortcut on the cofactor; meant for
// desk-scale inputs, not cryptographic ones.
std::vector<std::pair<Integer, unsigned long>> factorize(const Integer& n);

// Product of the distinct primes dividing a, for a >= 1. radical(1) = 1.
Integer radical(const Integer& a);

struct RootResult {
  Integer root;
  bool exact = false;
  bool operator==(const RootResult&) const = default;
};

// root = floor(a^(1/n)), exact iff root^n = a. Even n requires a >= 0;
// odd n also accepts negative a with floor semantics.
RootResult nth_root_floor(const Integer& a, unsigned long n);

// Recognizes the 2^(2a) 5^(2b) p^(2c) shape of y2 >= 1, if it has one.
// The cofactor left after stripping 2s and 5s is resolved by trial division
// up to small_prime_bound, then a primality test, then an even-power root
// scan; anything that is not 1 or an even prime power is rejected.
std::optional<PowerShape> power_shape(const Integer& y2,
                                      unsigned long small_prime_bound = 10000);

}  // namespace quintic
