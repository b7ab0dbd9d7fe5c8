#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quintic/integer.hpp"

namespace quintic {

// Parameters of the quintic parametrization: coprime and of opposite parity.
// The degenerate pairs (+-1, 0) and (0, +-1) satisfy both conditions and are
// admitted wherever the enumeration needs the unit solutions.
struct UVPair {
  Integer u;
  Integer v;

  bool valid() const;
};

// A triple with x^2 + y^2 = z^5.
struct QuinticSolution {
  Integer x;
  Integer y;
  Integer z;

  bool verifies() const;   // x^2 + y^2 == z^5, exactly
  bool primitive() const;  // gcd(x, y) == 1
  bool operator==(const QuinticSolution&) const = default;
};

// u^4 - 10 u^2 v^2 + 5 v^4, the cofactor of u in the parametrized x.
Integer quartic_x(const Integer& u, const Integer& v);

// v^4 - 10 u^2 v^2 + 5 u^4, the cofactor of v in the parametrized y.
Integer quartic_y(const Integer& u, const Integer& v);

// (u * quartic_x, v * quartic_y, u^2 + v^2); the identity
// x^2 + y^2 = z^5 holds for every integer pair, coprime or not.
QuinticSolution parametrize_raw(const Integer& u, const Integer& v);

// Validating form: throws std::invalid_argument unless pair.valid().
QuinticSolution parametrize(const UVPair& pair);

// Canonical orbit representative: |x|, |y|, z.
QuinticSolution canonical(const QuinticSolution& s);

// Ordering used for every solution list: by (z, x, y) ascending.
bool solution_less(const QuinticSolution& a, const QuinticSolution& b);

struct EnumerationStats {
  std::uint64_t pairs_swept = 0;
  std::uint64_t nonprimitive_excluded = 0;
};

// All canonical primitive solutions generated by coprime opposite-parity
// pairs with u^2 + v^2 <= z_max, deduplicated and sorted.
std::vector<QuinticSolution> enumerate_primitive(const Integer& z_max,
                                                 EnumerationStats* stats = nullptr);

// Independent completeness oracle: scans every x in [0, z^(5/2)] for each
// z <= z_max and detects exact squares z^5 - x^2. Same canonical form and
// ordering as enumerate_primitive; shares no code with the parametrization.
std::vector<QuinticSolution> oracle_enumerate(const Integer& z_max);

struct CompletenessReport {
  Integer z_max;
  std::vector<QuinticSolution> parametrized;
  std::vector<QuinticSolution> scanned;
  std::vector<QuinticSolution> only_parametrized;
  std::vector<QuinticSolution> only_scanned;
  std::size_t orbit_classes = 0;  // unordered {x, y} pairs per z
  EnumerationStats stats;
  bool equal = false;
};

// Runs both enumerations and compares the canonical sets.
CompletenessReport completeness_report(const Integer& z_max);

}  // namespace quintic
