#include "quintic/descent.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "quintic/arith.hpp"

namespace quintic {

bool UVPair::valid() const {
  if (u == 0 && v == 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
  return g == 1 && is_odd(u) != is_odd(v);
}

bool QuinticSolution::verifies() const { return x * x + y * y == ipow(z, 5); }

bool QuinticSolution::primitive() const {
  if (x == 0 && y == 0) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g == 1;
}

Integer quartic_x(const Integer& u, const Integer& v) {
  Integer u2 = u * u;
  Integer v2 = v * v;
  return u2 * u2 - 10 * u2 * v2 + 5 * v2 * v2;
}

Integer quartic_y(const Integer& u, const Integer& v) { return quartic_x(v, u); }

QuinticSolution parametrize_raw(const Integer& u, const Integer& v) {
  return {u * quartic_x(u, v), v * quartic_y(u, v), u * u + v * v};
}

QuinticSolution parametrize(const UVPair& pair) {
  if (!pair.valid())
    throw std::invalid_argument("parametrize requires coprime opposite-parity (u, v)");
  return parametrize_raw(pair.u, pair.v);
}

QuinticSolution canonical(const QuinticSolution& s) {
  return {abs(s.x), abs(s.y), s.z};
}

bool solution_less(const QuinticSolution& a, const QuinticSolution& b) {
  if (a.z != b.z) return a.z < b.z;
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

namespace {

void sort_unique(std::vector<QuinticSolution>& v) {
  std::sort(v.begin(), v.end(), solution_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<QuinticSolution> enumerate_primitive(const Integer& z_max,
                                                 EnumerationStats* stats) {
  if (z_max < 1) throw std::invalid_argument("z_max must be >= 1");
  std::vector<QuinticSolution> out;
  EnumerationStats local;
  Integer umax = nth_root_floor(z_max, 2).root;
  // One representative per (u, v) ~ (-u, -v) class: u > 0, or u = 0 and v > 0.
  for (Integer u = 0; u <= umax; ++u) {
    Integer vmax = nth_root_floor(z_max - u * u, 2).root;
    for (Integer v = (u == 0) ? Integer(1) : -vmax; v <= vmax; ++v) {
      if (u == 0 && v == 0) continue;
      Integer g;
      mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
      if (g != 1) continue;
      if (is_odd(u) == is_odd(v)) continue;
      ++local.pairs_swept;
      QuinticSolution sol = parametrize_raw(u, v);
      if (!sol.primitive()) {
        ++local.nonprimitive_excluded;
        continue;
      }
      out.push_back(canonical(sol));
    }
  }
  sort_unique(out);
  if (stats) *stats = local;
  return out;
}

std::vector<QuinticSolution> oracle_enumerate(const Integer& z_max) {
  if (z_max < 1) throw std::invalid_argument("z_max must be >= 1");
  std::vector<QuinticSolution> out;
  for (Integer z = 1; z <= z_max; ++z) {
    Integer z5 = ipow(z, 5);
    for (Integer x = 0; x * x <= z5; ++x) {
      Integer y2 = z5 - x * x;
      Integer y, rem;
      mpz_sqrtrem(y.get_mpz_t(), rem.get_mpz_t(), y2.get_mpz_t());
      if (rem != 0) continue;
      QuinticSolution sol{x, y, z};
      if (!sol.primitive()) continue;
      out.push_back(sol);  // x, y >= 0: already canonical
    }
  }
  sort_unique(out);
  return out;
}

CompletenessReport completeness_report(const Integer& z_max) {
  CompletenessReport rep;
  rep.z_max = z_max;
  rep.parametrized = enumerate_primitive(z_max, &rep.stats);
  rep.scanned = oracle_enumerate(z_max);
  std::set_difference(rep.parametrized.begin(), rep.parametrized.end(),
                      rep.scanned.begin(), rep.scanned.end(),
                      std::back_inserter(rep.only_parametrized), solution_less);
  std::set_difference(rep.scanned.begin(), rep.scanned.end(),
                      rep.parametrized.begin(), rep.parametrized.end(),
                      std::back_inserter(rep.only_scanned), solution_less);
  rep.equal = rep.only_parametrized.empty() && rep.only_scanned.empty();
  std::set<std::tuple<Integer, Integer, Integer>> classes;
  for (const auto& s : rep.parametrized)
    classes.insert({s.z, std::min(s.x, s.y), std::max(s.x, s.y)});
  rep.orbit_classes = classes.size();
  return rep;
}

}  // namespace quintic
