#include "quintic/arith.hpp"

#include <stdexcept>

namespace quintic {

Integer PowerShape::reconstruct() const {
  Integer r = ipow(2, static_cast<unsigned long>(2 * alpha)) *
              ipow(5, static_cast<unsigned long>(2 * beta));
  if (p) r *= ipow(*p, static_cast<unsigned long>(2 * gamma));
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  if (a == 0 && b == 0) throw std::invalid_argument("gcd(0, 0) is undefined");
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

unsigned long valuation(const Integer& q, const Integer& a) {
  if (a == 0) throw std::invalid_argument("valuation of 0 is infinite");
  if (q < 2 || !is_probable_prime(q))
    throw std::invalid_argument("valuation requires a prime base");
  Integer reduced;
  return mpz_remove(reduced.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
}

std::vector<std::pair<Integer, unsigned long>> factorize(const Integer& n) {
  if (n < 1) throw std::invalid_argument("factorize requires n >= 1");
  std::vector<std::pair<Integer, unsigned long>> out;
  Integer m = n;
  auto strip = [&](const Integer& q) {
    unsigned long e = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), q.get_mpz_t());
    out.emplace_back(q, e);
  };
  if (is_even(m)) strip(2);
  if (m > 1 && !is_probable_prime(m)) {
    for (Integer d = 3; d * d <= m; d += 2) {
      if (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
        strip(d);
        if (m == 1 || is_probable_prime(m)) break;
      }
    }
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

Integer radical(const Integer& a) {
  if (a < 1) throw std::invalid_argument("radical requires a >= 1");
  Integer r = 1;
  for (const auto& [prime, exp] : factorize(a)) r *= prime;
  return r;
}

RootResult nth_root_floor(const Integer& a, unsigned long n) {
  if (n == 0) throw std::invalid_argument("root index must be >= 1");
  if (a < 0) {
    if (n % 2 == 0) throw std::domain_error("even root of a negative value");
    RootResult pos = nth_root_floor(-a, n);
    if (pos.exact) return {-pos.root, true};
    return {-(pos.root + 1), false};
  }
  Integer root, rem;
  mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), n);
  return {root, rem == 0};
}

std::optional<PowerShape> power_shape(const Integer& y2,
                                      unsigned long small_prime_bound) {
  if (y2 < 1) throw std::invalid_argument("power_shape requires y2 >= 1");
  Integer m = y2;
  Integer two = 2, five = 5;
  unsigned long e2 = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), two.get_mpz_t());
  if (e2 < 2 || e2 % 2 != 0) return std::nullopt;
  unsigned long e5 = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), five.get_mpz_t());
  if (e5 % 2 != 0) return std::nullopt;

  PowerShape s;
  s.alpha = static_cast<long>(e2 / 2);
  s.beta = static_cast<long>(e5 / 2);
  if (m == 1) return s;

  // m is odd, coprime to 5, and must equal p^(2*gamma) for a single prime p.
  for (unsigned long q = 3; q <= small_prime_bound; q += 2) {
    Integer qz(q);
    if (qz * qz > m) return std::nullopt;  // m prime, exponent 1
    if (mpz_divisible_ui_p(m.get_mpz_t(), q)) {
      unsigned long e = mpz_remove(m.get_mpz_t(), m.get_mpz_t(), qz.get_mpz_t());
      if (m != 1 || e % 2 != 0) return std::nullopt;
      s.gamma = static_cast<long>(e / 2);
      s.p = qz;
      return s;
    }
  }
  if (is_probable_prime(m)) return std::nullopt;  // exponent 1
  if (mpz_perfect_power_p(m.get_mpz_t()) == 0) return std::nullopt;
  unsigned long max_e = mpz_sizeinbase(m.get_mpz_t(), 2);
  for (unsigned long e = 2; e <= max_e; e += 2) {
    Integer root, rem;
    mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t(), e);
    if (rem == 0 && is_probable_prime(root)) {
      s.gamma = static_cast<long>(e / 2);
      s.p = root;
      return s;
    }
  }
  return std::nullopt;
}

}  // namespace quintic
