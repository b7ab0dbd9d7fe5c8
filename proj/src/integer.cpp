#include "quintic/integer.hpp"

#include <stdexcept>

namespace quintic {

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

bool is_probable_prime(const Integer& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Integer mod_floor(const Integer& a, const Integer& m) {
  if (m <= 0) throw std::invalid_argument("mod_floor: modulus must be positive");
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

long to_long(const Integer& a) {
  if (!a.fits_slong_p()) throw std::overflow_error("value does not fit in long");
  return a.get_si();
}

unsigned long to_ulong(const Integer& a) {
  if (a < 0 || !a.fits_ulong_p())
    throw std::overflow_error("value does not fit in unsigned long");
  return a.get_ui();
}

}  // namespace quintic
