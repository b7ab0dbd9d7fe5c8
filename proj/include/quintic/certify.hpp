#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quintic/integer.hpp"

namespace quintic {

// One certificate per modular-contradiction or constraint-derivation branch
// of the descent argument.
enum class Branch {
  N5_BETA0_MOD8,
  N5_BETAPOS_MOD3,
  LEMMA2_MOD5,
  LEMMA2_QUARTIC5,
  EQ4_SEARCH,
  U5_MOD8,
  NOT5U_N7_MOD3,
  NOT5U_N7_MOD8,
};

const std::vector<Branch>& all_branches();
std::string to_string(Branch b);
std::optional<Branch> branch_from_string(const std::string& name);

// A residue tuple, symbol -> value, in the declared range order.
using Witness = std::vector<std::pair<std::string, long>>;

// Result of a total enumeration over declared residue ranges. Witnesses are
// the tuples that would falsify the branch (a satisfying assignment for a
// contradiction branch, a violation for a constraint branch), so every
// certificate is expected to come out UNSAT.
struct ResidueCertificate {
  Branch branch_id{};
  long modulus = 2;
  std::uint64_t enumerated = 0;  // full cartesian product of declared ranges
  bool satisfiable = false;      // true iff witnesses is non-empty
  std::vector<Witness> witnesses;
  std::string derived_constraint;  // empty when the branch derives none

  bool operator==(const ResidueCertificate&) const = default;
};

// Iteration direction over the declared ranges; the certificate must not
// depend on it.
enum class SweepOrder { Forward, Reverse };

struct CertifyOptions {
  long quartic_bound = 200;  // LEMMA2_QUARTIC5 box
  long eq4_box = 3;          // values per exponent in EQ4_SEARCH
  SweepOrder order = SweepOrder::Forward;
};

// n = 5, beta = 0: the two sides of the expanded equation are 1 and 5 mod 8.
ResidueCertificate certify_n5_beta0_mod8(SweepOrder order = SweepOrder::Forward);

// n = 5, beta > 0: the right side is always 2 mod 3, never a square times
// a power of p.
ResidueCertificate certify_n5_betapos_mod3(SweepOrder order = SweepOrder::Forward);

// The k >= 1 branch of the unit-difference equation is empty mod 5,
// forcing k = 0.
ResidueCertificate certify_lemma2_mod5(SweepOrder order = SweepOrder::Forward);

// Exhaustive scan: no coprime (u odd, v even nonzero) in the box has
// v^4 - 10 u^2 v^2 + 5 u^4 = 5.
ResidueCertificate certify_lemma2_quartic5(long bound,
                                           SweepOrder order = SweepOrder::Forward);

// Exhaustive box check that 3^(4c) - 2^(4a) 5^(4b-5) = 1 has no solution
// with a >= 1, b >= 2, c >= 1; each max_* counts values upward from the
// smallest admissible exponent. Stands in for the published general result.
ResidueCertificate certify_eq4_search(long max_alpha, long max_beta, long max_gamma,
                                      SweepOrder order = SweepOrder::Forward);

// gcd(z - x^2, z^4 + z^3 x^2 + z^2 x^4 + z x^6 + x^8) for odd coprime x, z
// with z != x^2; the result is 1 or 5, and 5 exactly when 5 | z - x^2.
long n5_gcd_classify(const Integer& x, const Integer& z);

// Case split of the descent on whether 5 divides v.
struct DescentCase {
  bool five_divides_v = false;
  long k = 0;  // beta - 1 if 5 | v, else 0
  std::string expected_v_form;
  std::string expected_quartic_form;

  bool operator==(const DescentCase&) const = default;
};

// Computes gcd(v, quartic_y(u, v)) for coprime (u odd, v even) and checks it
// equals gcd(v, 5) before classifying; a violation would falsify the descent
// and throws std::logic_error.
DescentCase descent_split(const Integer& u, const Integer& v, long beta);

// 5 | u branch: quartic_x is 1 mod 8 for every (u odd, v even), so the
// quotient B1^n must be 5 mod 8.
ResidueCertificate certify_u5_mod8(SweepOrder order = SweepOrder::Forward);

// 5 !| u, n = 7 endgame: the mod-3 and mod-8 certificates and the joint
// conclusion that B2 is neither 1 nor -1.
struct N7Congruences {
  ResidueCertificate mod3;
  ResidueCertificate mod8;
  std::string joint_constraint;
};

N7Congruences certify_n7_congruences(SweepOrder order = SweepOrder::Forward);

// Fixed polynomial expressions shared by the certificates and their tests.
enum class PolyId {
  QUARTIC_X,      // u^4 - 10 u^2 v^2 + 5 v^4             {u, v}
  QUARTIC_Y,      // v^4 - 10 u^2 v^2 + 5 u^4             {u, v}
  SIGMA_QUINTIC,  // z^4 + z^3 x^2 + z^2 x^4 + z x^6 + x^8 {x, z}
  W2_FORM,        // u^2 - 5 v^2                          {u, v}
  EQ7_LHS,        // 5^(2 beta) p^(2 gamma)               {beta, p, gamma}
  EQ7_RHS,        // expanded quintic difference          {x, j, alpha}
  EQ3_LHS,        // 5^k p^l - 2^(4 alpha) 5^kp p^lp      {k, l, alpha, kp, lp, p}
  EQ4_LHS,        // 3^(4 gamma) - 2^(4 alpha) 5^(4 beta - 5) {alpha, beta, gamma}
  EQ14_LHS,       // B1^n + 2^(4 alpha + 2) - 5 w1^2      {B1, n, alpha, w1}
  EQ16_LHS,       // B2^n + 2^(4 alpha + 2) 5^(4 k + 1) - w2^2 {B2, n, alpha, k, w2}
};

using Assignment = std::map<std::string, Integer>;

// Exact residue of the named expression at the assignment, in [0, modulus).
// Throws std::invalid_argument on a missing symbol.
Integer residue_reduce(PolyId id, const Integer& modulus, const Assignment& a);

// Dispatch by branch, used by the CLI.
ResidueCertificate run_branch(Branch b, const CertifyOptions& opts = {});

// All eight certificates in enum order.
std::vector<ResidueCertificate> certify_all(const CertifyOptions& opts = {});

// External results the verifier relies on, with the hypotheses the
// certificates establish for them.
struct AxiomRecord {
  std::string name;
  std::string statement;
  std::vector<std::string> hypotheses;
};

std::vector<AxiomRecord> axiom_records();

// Line-delimited serialization with stable field order; bit-exact across
// platforms.
std::string serialize(const ResidueCertificate& cert);
std::string serialize(const AxiomRecord& axiom);

}  // namespace quintic
