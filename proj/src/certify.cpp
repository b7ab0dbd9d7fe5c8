#include "quintic/certify.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "quintic/arith.hpp"
#include "quintic/descent.hpp"

namespace quintic {

const std::vector<Branch>& all_branches() {
  static const std::vector<Branch> branches = {
      Branch::N5_BETA0_MOD8, Branch::N5_BETAPOS_MOD3, Branch::LEMMA2_MOD5,
      Branch::LEMMA2_QUARTIC5, Branch::EQ4_SEARCH, Branch::U5_MOD8,
      Branch::NOT5U_N7_MOD3, Branch::NOT5U_N7_MOD8};
  return branches;
}

std::string to_string(Branch b) {
  switch (b) {
    case Branch::N5_BETA0_MOD8: return "N5_BETA0_MOD8";
    case Branch::N5_BETAPOS_MOD3: return "N5_BETAPOS_MOD3";
    case Branch::LEMMA2_MOD5: return "LEMMA2_MOD5";
    case Branch::LEMMA2_QUARTIC5: return "LEMMA2_QUARTIC5";
    case Branch::EQ4_SEARCH: return "EQ4_SEARCH";
    case Branch::U5_MOD8: return "U5_MOD8";
    case Branch::NOT5U_N7_MOD3: return "NOT5U_N7_MOD3";
    case Branch::NOT5U_N7_MOD8: return "NOT5U_N7_MOD8";
  }
  throw std::logic_error("unknown branch");
}

std::optional<Branch> branch_from_string(const std::string& name) {
  for (Branch b : all_branches())
    if (to_string(b) == name) return b;
  return std::nullopt;
}

namespace {

const Integer& sym(const Assignment& a, const char* name) {
  auto it = a.find(name);
  if (it == a.end())
    throw std::invalid_argument(std::string("missing assignment: ") + name);
  return it->second;
}

unsigned long usym(const Assignment& a, const char* name) {
  return to_ulong(sym(a, name));
}

}  // namespace

Integer residue_reduce(PolyId id, const Integer& modulus, const Assignment& a) {
  Integer value;
  switch (id) {
    case PolyId::QUARTIC_X:
      value = quartic_x(sym(a, "u"), sym(a, "v"));
      break;
    case PolyId::QUARTIC_Y:
      value = quartic_y(sym(a, "u"), sym(a, "v"));
      break;
    case PolyId::SIGMA_QUINTIC: {
      const Integer& x = sym(a, "x");
      const Integer& z = sym(a, "z");
      Integer x2 = x * x;
      Integer x4 = x2 * x2;
      value = (((z + x2) * z + x4) * z + x4 * x2) * z + x4 * x4;
      break;
    }
    case PolyId::W2_FORM: {
      const Integer& u = sym(a, "u");
      const Integer& v = sym(a, "v");
      value = u * u - 5 * v * v;
      break;
    }
    case PolyId::EQ7_LHS:
      value = ipow(5, 2 * usym(a, "beta")) *
              ipow(sym(a, "p"), 2 * usym(a, "gamma"));
      break;
    case PolyId::EQ7_RHS: {
      const Integer& x = sym(a, "x");
      unsigned long j = usym(a, "j");
      unsigned long al = usym(a, "alpha");
      Integer x2 = x * x;
      value = ipow(5, j + 1) * ipow(x2, 4) +
              ipow(2, 2 * al + 1) * ipow(5, 2 * j + 1) * ipow(x2, 3) +
              ipow(2, 4 * al + 1) * ipow(5, 3 * j + 1) * ipow(x2, 2) +
              ipow(2, 6 * al) * ipow(5, 4 * j + 1) * x2 +
              ipow(2, 8 * al) * ipow(5, 5 * j);
      break;
    }
    case PolyId::EQ3_LHS:
      value = ipow(5, usym(a, "k")) * ipow(sym(a, "p"), usym(a, "l")) -
              ipow(2, 4 * usym(a, "alpha")) * ipow(5, usym(a, "kp")) *
                  ipow(sym(a, "p"), usym(a, "lp"));
      break;
    case PolyId::EQ4_LHS: {
      unsigned long beta = usym(a, "beta");
      if (beta < 2) throw std::invalid_argument("EQ4_LHS requires beta >= 2");
      value = ipow(3, 4 * usym(a, "gamma")) -
              ipow(2, 4 * usym(a, "alpha")) * ipow(5, 4 * beta - 5);
      break;
    }
    case PolyId::EQ14_LHS: {
      const Integer& w1 = sym(a, "w1");
      value = ipow(sym(a, "B1"), usym(a, "n")) +
              ipow(2, 4 * usym(a, "alpha") + 2) - 5 * w1 * w1;
      break;
    }
    case PolyId::EQ16_LHS: {
      const Integer& w2 = sym(a, "w2");
      value = ipow(sym(a, "B2"), usym(a, "n")) +
              ipow(2, 4 * usym(a, "alpha") + 2) * ipow(5, 4 * usym(a, "k") + 1) -
              w2 * w2;
      break;
    }
  }
  return mod_floor(value, modulus);
}

namespace {

struct Range {
  std::string symbol;
  std::vector<long> values;
};

// Residue of coeff * ratio^t (mod m), constant for all t >= t0. The base
// value r = coeff * ratio^t0 mod m must absorb one more factor of ratio
// (r * ratio = r mod m); induction then pins every later exponent. This is
// how a "for all alpha >= 1" claim becomes a finite check.
struct GeometricFact {
  const char* what;
  long coeff;
  long ratio;
  long t0;
  long modulus;
  long expected;
};

void verify_stable(const GeometricFact& f) {
  Integer m(f.modulus);
  Integer r = mod_floor(Integer(f.coeff) * ipow(f.ratio, static_cast<unsigned long>(f.t0)), m);
  if (mod_floor(r * f.ratio, m) != r)
    throw std::logic_error(std::string("residue tower not stabilized: ") + f.what);
  if (r != f.expected)
    throw std::logic_error(std::string("stabilized residue unexpected: ") + f.what);
}

using Tuple = std::map<std::string, long>;

ResidueCertificate sweep(Branch branch, long modulus,
                         const std::vector<Range>& ranges,
                         const std::vector<GeometricFact>& facts,
                         const std::function<bool(const Tuple&)>& is_witness,
                         std::string constraint, SweepOrder order) {
  for (const auto& f : facts) verify_stable(f);
  ResidueCertificate cert;
  cert.branch_id = branch;
  cert.modulus = modulus;
  cert.enumerated = 1;
  for (const auto& r : ranges) cert.enumerated *= r.values.size();
  std::vector<std::size_t> idx(ranges.size(), 0);
  for (std::uint64_t count = 0; count < cert.enumerated; ++count) {
    Tuple t;
    for (std::size_t i = 0; i < ranges.size(); ++i) {
      std::size_t j = idx[i];
      if (order == SweepOrder::Reverse) j = ranges[i].values.size() - 1 - j;
      t[ranges[i].symbol] = ranges[i].values[j];
    }
    if (is_witness(t)) {
      Witness w;
      for (const auto& r : ranges) w.emplace_back(r.symbol, t.at(r.symbol));
      cert.witnesses.push_back(std::move(w));
    }
    for (std::size_t i = ranges.size(); i-- > 0;) {
      if (++idx[i] < ranges[i].values.size()) break;
      idx[i] = 0;
    }
  }
  std::sort(cert.witnesses.begin(), cert.witnesses.end());
  cert.satisfiable = !cert.witnesses.empty();
  if (!cert.satisfiable) cert.derived_constraint = std::move(constraint);
  return cert;
}

}  // namespace

ResidueCertificate certify_n5_beta0_mod8(SweepOrder order) {
  std::vector<Range> ranges = {
      {"x", {1, 3, 5, 7}},
      {"p", {1, 3, 5, 7}},
      {"alpha", {1, 2, 3}},
  };
  std::vector<GeometricFact> facts = {
      {"2^(2a+1) = 2*4^a stabilizes at 0 mod 8 from a = 1", 2, 4, 1, 8, 0},
      {"2^(4a+1) = 2*16^a stabilizes at 0 mod 8 from a = 1", 2, 16, 1, 8, 0},
      {"2^(6a) = 64^a stabilizes at 0 mod 8 from a = 1", 1, 64, 1, 8, 0},
      {"2^(8a) = 256^a stabilizes at 0 mod 8 from a = 1", 1, 256, 1, 8, 0},
      {"(1^2)^c stabilizes at 1 mod 8 from c = 0", 1, 1, 0, 8, 1},
      {"(3^2)^c stabilizes at 1 mod 8 from c = 0", 1, 9, 0, 8, 1},
      {"(5^2)^c stabilizes at 1 mod 8 from c = 0", 1, 25, 0, 8, 1},
      {"(7^2)^c stabilizes at 1 mod 8 from c = 0", 1, 49, 0, 8, 1},
  };
  auto witness = [](const Tuple& t) {
    Integer rhs = residue_reduce(PolyId::EQ7_RHS, 8,
                                 {{"x", t.at("x")}, {"j", 0}, {"alpha", t.at("alpha")}});
    Integer lhs = residue_reduce(PolyId::EQ7_LHS, 8,
                                 {{"beta", 0}, {"p", t.at("p")}, {"gamma", 1}});
    return lhs == rhs;
  };
  return sweep(Branch::N5_BETA0_MOD8, 8, ranges, facts, witness,
               "LHS ≡ 1, RHS ≡ 5 (mod 8) for all odd x", order);
}

ResidueCertificate certify_n5_betapos_mod3(SweepOrder order) {
  std::vector<Range> ranges = {
      {"x", {0, 1, 2}}, {"p", {0, 1, 2}},     {"j", {1, 3, 5}},
      {"alpha", {1, 2, 3}}, {"gamma", {0, 1, 2}},
  };
  // j = 2i+1 throughout (beta > 0 forces odd j), so each 5-power tower is
  // geometric in i with ratio a power of 5^2.
  std::vector<GeometricFact> facts = {
      {"5^(j+1) = 25*(5^2)^i stabilizes at 1 mod 3", 25, 25, 0, 3, 1},
      {"5^(2j+1) = 125*(5^4)^i stabilizes at 2 mod 3", 125, 625, 0, 3, 2},
      {"5^(3j+1) = 625*(5^6)^i stabilizes at 1 mod 3", 625, 15625, 0, 3, 1},
      {"5^(4j+1) = 3125*(5^8)^i stabilizes at 2 mod 3", 3125, 390625, 0, 3, 2},
      {"5^(5j) = 3125*(5^10)^i stabilizes at 2 mod 3", 3125, 9765625, 0, 3, 2},
      {"2^(2a+1) = 2*4^a stabilizes at 2 mod 3 from a = 1", 2, 4, 1, 3, 2},
      {"2^(4a+1) = 2*16^a stabilizes at 2 mod 3 from a = 1", 2, 16, 1, 3, 2},
      {"2^(6a) = 64^a stabilizes at 1 mod 3 from a = 1", 1, 64, 1, 3, 1},
      {"2^(8a) = 256^a stabilizes at 1 mod 3 from a = 1", 1, 256, 1, 3, 1},
      {"5^(2b) = 25^b stabilizes at 1 mod 3 from b = 0", 1, 25, 0, 3, 1},
      {"(0^2)^c stabilizes at 0 mod 3 from c = 1", 1, 0, 1, 3, 0},
      {"(1^2)^c stabilizes at 1 mod 3 from c = 1", 1, 1, 1, 3, 1},
      {"(2^2)^c stabilizes at 1 mod 3 from c = 1", 1, 4, 1, 3, 1},
  };
  auto witness = [](const Tuple& t) {
    Integer rhs = residue_reduce(
        PolyId::EQ7_RHS, 3,
        {{"x", t.at("x")}, {"j", t.at("j")}, {"alpha", t.at("alpha")}});
    Integer lhs = residue_reduce(
        PolyId::EQ7_LHS, 3,
        {{"beta", 1}, {"p", t.at("p")}, {"gamma", t.at("gamma")}});
    return lhs == rhs;
  };
  return sweep(Branch::N5_BETAPOS_MOD3, 3, ranges, facts, witness,
               "p^{2γ} ≡ 2 (mod 3) is impossible", order);
}

ResidueCertificate certify_lemma2_mod5(SweepOrder order) {
  // k >= 1 branch only: k = 4*beta - 5 with beta >= 2, and then kp = 0.
  // lcase selects which of {l, lp} carries 4*gamma.
  std::vector<Range> ranges = {
      {"p", {1, 2, 3, 4}}, {"lcase", {0, 1}}, {"alpha", {1, 2, 3}},
      {"k", {3, 7, 11}},   {"gamma", {1, 2}},
  };
  std::vector<GeometricFact> facts = {
      {"5^k stabilizes at 0 mod 5 from k = 1", 1, 5, 1, 5, 0},
      {"2^(4a) = 16^a stabilizes at 1 mod 5 from a = 1", 1, 16, 1, 5, 1},
      {"(1^4)^c stabilizes at 1 mod 5 from c = 0", 1, 1, 0, 5, 1},
      {"(2^4)^c stabilizes at 1 mod 5 from c = 0", 1, 16, 0, 5, 1},
      {"(3^4)^c stabilizes at 1 mod 5 from c = 0", 1, 81, 0, 5, 1},
      {"(4^4)^c stabilizes at 1 mod 5 from c = 0", 1, 256, 0, 5, 1},
  };
  auto witness = [](const Tuple& t) {
    long l = t.at("lcase") == 1 ? 4 * t.at("gamma") : 0;
    long lp = t.at("lcase") == 1 ? 0 : 4 * t.at("gamma");
    Integer lhs = residue_reduce(PolyId::EQ3_LHS, 5,
                                 {{"k", t.at("k")},
                                  {"l", l},
                                  {"alpha", t.at("alpha")},
                                  {"kp", 0},
                                  {"lp", lp},
                                  {"p", t.at("p")}});
    return lhs == 1;
  };
  return sweep(Branch::LEMMA2_MOD5, 5, ranges, facts, witness, "k = 0", order);
}

ResidueCertificate certify_lemma2_quartic5(long bound, SweepOrder order) {
  if (bound < 1) throw std::invalid_argument("bound must be >= 1");
  std::vector<long> us, vs;
  for (long u = -bound; u <= bound; ++u)
    if (u % 2 != 0) us.push_back(u);
  for (long v = -bound; v <= bound; ++v)
    if (v != 0 && v % 2 == 0) vs.push_back(v);
  if (order == SweepOrder::Reverse) {
    std::reverse(us.begin(), us.end());
    std::reverse(vs.begin(), vs.end());
  }
  ResidueCertificate cert;
  cert.branch_id = Branch::LEMMA2_QUARTIC5;
  cert.modulus = 2;  // parity classes of the scan: u odd, v even
  cert.enumerated = static_cast<std::uint64_t>(us.size()) * vs.size();
  for (long u : us) {
    for (long v : vs) {
      Integer ui(u), vi(v);
      if (gcd(ui, vi) != 1) continue;
      if (quartic_y(ui, vi) == 5) cert.witnesses.push_back({{"u", u}, {"v", v}});
    }
  }
  std::sort(cert.witnesses.begin(), cert.witnesses.end());
  cert.satisfiable = !cert.witnesses.empty();
  return cert;
}

ResidueCertificate certify_eq4_search(long max_alpha, long max_beta, long max_gamma,
                                      SweepOrder order) {
  if (max_alpha < 1 || max_beta < 1 || max_gamma < 1)
    throw std::invalid_argument("box bounds must be >= 1");
  // Each bound counts values upward from the smallest admissible exponent:
  // alpha from 1, beta from 2, gamma from 1.
  std::vector<Range> ranges = {{"alpha", {}}, {"beta", {}}, {"gamma", {}}};
  for (long a = 1; a <= max_alpha; ++a) ranges[0].values.push_back(a);
  for (long b = 2; b <= max_beta + 1; ++b) ranges[1].values.push_back(b);
  for (long c = 1; c <= max_gamma; ++c) ranges[2].values.push_back(c);
  auto witness = [](const Tuple& t) {
    // mod-16 consistency check rides along: 3^(4c) is 1 mod 16.
    if (mod_floor(ipow(3, 4 * static_cast<unsigned long>(t.at("gamma"))), 16) != 1)
      throw std::logic_error("3^(4c) mod 16 consistency violated");
    Integer exact = ipow(3, 4 * static_cast<unsigned long>(t.at("gamma"))) -
                    ipow(2, 4 * static_cast<unsigned long>(t.at("alpha"))) *
                        ipow(5, 4 * static_cast<unsigned long>(t.at("beta")) - 5);
    return exact == 1;
  };
  return sweep(Branch::EQ4_SEARCH, 16, ranges, {}, witness, "", order);
}

long n5_gcd_classify(const Integer& x, const Integer& z) {
  if (is_even(x) || is_even(z))
    throw std::invalid_argument("n5_gcd_classify requires odd x and z");
  if (gcd(x, z) != 1)
    throw std::invalid_argument("n5_gcd_classify requires gcd(x, z) = 1");
  Integer d = z - x * x;
  if (d == 0)
    throw std::invalid_argument("z = x^2 is outside the proof context");
  Integer x2 = x * x;
  Integer x4 = x2 * x2;
  Integer sigma = (((z + x2) * z + x4) * z + x4 * x2) * z + x4 * x4;
  Integer g = gcd(d, sigma);
  bool div5 = mpz_divisible_ui_p(d.get_mpz_t(), 5) != 0;
  if (!((g == 1 && !div5) || (g == 5 && div5)))
    throw std::logic_error("gcd classification contract violated");
  return to_long(g);
}

DescentCase descent_split(const Integer& u, const Integer& v, long beta) {
  if (!is_odd(u) || !is_even(v))
    throw std::invalid_argument("descent_split requires u odd and v even");
  if (v == 0) throw std::invalid_argument("descent_split requires nonzero v");
  if (gcd(u, v) != 1)
    throw std::invalid_argument("descent_split requires gcd(u, v) = 1");
  Integer g = gcd(v, quartic_y(u, v));
  Integer g5 = gcd(v, 5);
  if (g != g5)
    throw std::logic_error("gcd(v, quartic_y) != gcd(v, 5): descent contract violated");
  DescentCase c;
  c.five_divides_v = (g == 5);
  if (c.five_divides_v && beta < 1)
    throw std::invalid_argument("5 | v requires beta >= 1");
  c.k = c.five_divides_v ? beta - 1 : 0;
  c.expected_v_form = c.k > 0 ? "±2^α·5^" + std::to_string(c.k) : "±2^α";
  long rem = beta - c.k;
  c.expected_quartic_form =
      rem > 0 ? "±5^" + std::to_string(rem) + "·p^γ" : "±p^γ";
  return c;
}

ResidueCertificate certify_u5_mod8(SweepOrder order) {
  std::vector<Range> ranges = {{"u", {1, 3, 5, 7}}, {"v", {0, 2, 4, 6}}};
  auto witness = [](const Tuple& t) {
    Integer q = residue_reduce(PolyId::QUARTIC_X, 8, {{"u", t.at("u")}, {"v", t.at("v")}});
    return q != 1;
  };
  ResidueCertificate cert = sweep(Branch::U5_MOD8, 8, ranges, {}, witness,
                                  "B₁ⁿ ≡ 5 (mod 8)", order);
  // quartic_x = 5 B1^n forces 5 t = 1 mod 8; the inverse residue must be 5
  // and nothing else, otherwise the derived constraint is wrong.
  for (long t = 0; t < 8; ++t) {
    bool solves = (5 * t) % 8 == 1;
    if (solves != (t == 5))
      throw std::logic_error("5t = 1 mod 8 must pin t = 5");
  }
  return cert;
}

N7Congruences certify_n7_congruences(SweepOrder order) {
  N7Congruences out;
  {
    std::vector<Range> ranges = {{"B2", {0, 1, 2}}, {"u", {0, 1, 2}}, {"v", {0, 1, 2}}};
    std::vector<GeometricFact> facts = {
        {"2^(4a+2) = 4*16^a stabilizes at 1 mod 3 from a = 1", 4, 16, 1, 3, 1},
        {"5^(4k+1) = 5*(5^4)^k stabilizes at 2 mod 3 from k = 0", 5, 625, 0, 3, 2},
    };
    auto witness = [](const Tuple& t) {
      if (t.at("u") == 0 && t.at("v") == 0) return false;  // not coprime
      long w2 = t.at("u") * t.at("u") - 5 * t.at("v") * t.at("v");
      Integer lhs = residue_reduce(PolyId::EQ16_LHS, 3,
                                   {{"B2", t.at("B2")},
                                    {"n", 7},
                                    {"alpha", 1},
                                    {"k", 1},
                                    {"w2", w2}});
      return lhs == 0 && t.at("B2") % 3 != 2;
    };
    out.mod3 = sweep(Branch::NOT5U_N7_MOD3, 3, ranges, facts, witness,
                     "B₂ ≡ 2 (mod 3)", order);
  }
  {
    std::vector<Range> ranges = {
        {"B2", {1, 3, 5, 7}}, {"u", {1, 3, 5, 7}}, {"v", {0, 2, 4, 6}}};
    std::vector<GeometricFact> facts = {
        {"2^(4a+2) = 4*16^a stabilizes at 0 mod 8 from a = 1", 4, 16, 1, 8, 0},
        {"5^(4k+1) = 5*(5^4)^k stabilizes at 5 mod 8 from k = 0", 5, 625, 0, 8, 5},
    };
    auto witness = [](const Tuple& t) {
      long w2 = t.at("u") * t.at("u") - 5 * t.at("v") * t.at("v");
      Integer lhs = residue_reduce(PolyId::EQ16_LHS, 8,
                                   {{"B2", t.at("B2")},
                                    {"n", 7},
                                    {"alpha", 1},
                                    {"k", 0},
                                    {"w2", w2}});
      return lhs == 0 && t.at("B2") % 8 != 1;
    };
    out.mod8 = sweep(Branch::NOT5U_N7_MOD8, 8, ranges, facts, witness,
                     "B₂ ≡ 1 (mod 8)", order);
  }
  out.joint_constraint = "B₂ ∉ {−1, +1}";
  return out;
}

ResidueCertificate run_branch(Branch b, const CertifyOptions& opts) {
  switch (b) {
    case Branch::N5_BETA0_MOD8: return certify_n5_beta0_mod8(opts.order);
    case Branch::N5_BETAPOS_MOD3: return certify_n5_betapos_mod3(opts.order);
    case Branch::LEMMA2_MOD5: return certify_lemma2_mod5(opts.order);
    case Branch::LEMMA2_QUARTIC5:
      return certify_lemma2_quartic5(opts.quartic_bound, opts.order);
    case Branch::EQ4_SEARCH:
      return certify_eq4_search(opts.eq4_box, opts.eq4_box, opts.eq4_box, opts.order);
    case Branch::U5_MOD8: return certify_u5_mod8(opts.order);
    case Branch::NOT5U_N7_MOD3: return certify_n7_congruences(opts.order).mod3;
    case Branch::NOT5U_N7_MOD8: return certify_n7_congruences(opts.order).mod8;
  }
  throw std::logic_error("unknown branch");
}

std::vector<ResidueCertificate> certify_all(const CertifyOptions& opts) {
  std::vector<ResidueCertificate> out;
  out.reserve(all_branches().size());
  for (Branch b : all_branches()) out.push_back(run_branch(b, opts));
  return out;
}

std::vector<AxiomRecord> axiom_records() {
  return {
      {"BRUIN_2003_THM_1_1",
       "x^4 + y^2 = z^5 has no solution in nonzero coprime integers",
       {"rules out exponent n = 2; cross-checked at desk scale by the search subcommand"}},
      {"BENNETT_CHEN_2012_THM_1",
       "x^6 + y^2 = z^5 has no solution in nonzero coprime integers",
       {"rules out exponent n = 3; cross-checked at desk scale by the search subcommand"}},
      {"LUCA_TOGBE_2008_THM_1_1",
       "x^2 + 2^a 5^b = y^n with gcd(x, y) = 1, 4 | n, a > 0, b >= 3 has no positive solution",
       {"applied to 3^{4γ} − 2^{4α} 5^{4β−5} = 1; box-checked by EQ4_SEARCH (UNSAT)"}},
      {"BENNETT_SKINNER_2004_THM_1_2",
       "x^n + 2^{4α+2} y^n = 5 z^2 has no solution with prime n >= 7, nonzero pairwise coprime x, y, z, xy ≠ ±1",
       {"B₁ odd (U5_MOD8)", "B₁ⁿ ≡ 5 (mod 8) hence B₁ ≠ ±1 (U5_MOD8)",
        "A₁, B₁ nonzero coprime by construction from coprime (u, v)"}},
      {"BENNETT_SKINNER_2004_THM_1_5",
       "x^n + 2^{4α+2} 5^{4k+1} y^n = z^2 has no solution with prime n >= 11, nonzero pairwise coprime x, y, z, xy ≠ ±1",
       {"B₂ coprime to 2 and 5 (from u odd, 5 ∤ u)", "gcd(B₂, w₂) = 1",
        "leaves only n = 7, closed by the newform level computation"}},
      {"NO_NEWFORMS_AT_LEVELS_1_2_5_10",
       "the spaces of weight-2 newforms of levels 1, 2, 5, 10 are zero-dimensional",
       {"B₂ ≡ 2 (mod 3) (NOT5U_N7_MOD3)", "B₂ ≡ 1 (mod 8) (NOT5U_N7_MOD8)",
        "joint: B₂ ∉ {−1, +1}", "w₂ ≡ 1 (mod 4) for u odd, v even",
        "v₂(2^{4α+2} 5^{4k+1}) = 4α + 2 ≥ 6",
        "levels from the bundled table; dimensions cross-checked in tests"}},
  };
}

std::string serialize(const ResidueCertificate& cert) {
  std::ostringstream os;
  os << "certificate branch_id=" << to_string(cert.branch_id)
     << " modulus=" << cert.modulus << " enumerated=" << cert.enumerated
     << " satisfiable=" << (cert.satisfiable ? "true" : "false")
     << " witnesses=[";
  for (std::size_t i = 0; i < cert.witnesses.size(); ++i) {
    if (i) os << ";";
    os << "(";
    for (std::size_t j = 0; j < cert.witnesses[i].size(); ++j) {
      if (j) os << ",";
      os << cert.witnesses[i][j].first << "=" << cert.witnesses[i][j].second;
    }
    os << ")";
  }
  os << "] derived_constraint=\"" << cert.derived_constraint << "\"";
  return os.str();
}

std::string serialize(const AxiomRecord& axiom) {
  std::ostringstream os;
  os << "axiom name=" << axiom.name << " statement=\"" << axiom.statement
     << "\" hypotheses=[";
  for (std::size_t i = 0; i < axiom.hypotheses.size(); ++i) {
    if (i) os << ";";
    os << "\"" << axiom.hypotheses[i] << "\"";
  }
  os << "]";
  return os.str();
}

}  // namespace quintic
