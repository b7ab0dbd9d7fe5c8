#include "quintic/newform.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "quintic/arith.hpp"

namespace quintic {

LevelComputation rewrite_seventh(long alpha, long k) {
  if (alpha < 1) throw std::invalid_argument("alpha must be >= 1");
  if (k < 0) throw std::invalid_argument("k must be >= 0");
  long e2 = 4 * alpha + 2;
  long e5 = 4 * k + 1;
  LevelComputation lc;
  lc.alpha = alpha;
  lc.k = k;
  lc.r1 = static_cast<int>(e2 % 7);
  lc.s1 = e2 / 7;
  lc.r2 = static_cast<int>(e5 % 7);
  lc.s2 = e5 / 7;
  lc.v2C = lc.r1;
  lc.C = ipow(2, lc.r1) * ipow(5, lc.r2);
  Integer rebuilt = lc.C * ipow(ipow(2, lc.s1) * ipow(5, lc.s2), 7);
  if (rebuilt != ipow(2, e2) * ipow(5, e5))
    throw std::logic_error("seventh-power rewrite is not exact");
  return lc;
}

long bs_level(const Integer& C) {
  if (C < 1) throw std::invalid_argument("bs_level requires C >= 1");
  for (const auto& [prime, exp] : factorize(C))
    if (exp >= 7)
      throw std::invalid_argument("bs_level requires every prime valuation of C < 7");
  unsigned long v2 = C == 1 ? 0 : valuation(2, C);
  Integer rad = radical(C);
  Integer level;
  if (v2 == 0)
    level = 2 * rad;
  else if (v2 == 6)
    level = rad / 2;
  else
    level = rad;
  return to_long(level);
}

LevelComputation level_computation(long alpha, long k) {
  LevelComputation lc = rewrite_seventh(alpha, k);
  lc.level = bs_level(lc.C);
  return lc;
}

std::set<long> n7_level_set(long alpha_max, long k_max) {
  if (alpha_max < 1 || k_max < 0)
    throw std::invalid_argument("n7_level_set requires alpha_max >= 1 and k_max >= 0");
  std::set<long> levels;
  for (long alpha = 1; alpha <= alpha_max; ++alpha)
    for (long k = 0; k <= k_max; ++k)
      levels.insert(level_computation(alpha, k).level);
  return levels;
}

namespace {

// Bundled copy of data/newform_levels.tsv; a test asserts the two stay
// identical. Format per row: level, flag, provenance.
constexpr const char* kBuiltinTable =
    "# quintic newform table v1\n"
    "# level has_newforms provenance\n"
    "1 false core endgame level; wt2 new dim = 0 (genus formula)\n"
    "2 false core endgame level; wt2 new dim = 0 (genus formula)\n"
    "3 false wt2 new dim = 0 (genus formula)\n"
    "4 false wt2 new dim = 0 (genus formula)\n"
    "5 false core endgame level; wt2 new dim = 0 (genus formula)\n"
    "6 false wt2 new dim = 0 (genus formula)\n"
    "7 false wt2 new dim = 0 (genus formula)\n"
    "8 false wt2 new dim = 0 (genus formula)\n"
    "9 false wt2 new dim = 0 (genus formula)\n"
    "10 false core endgame level; wt2 new dim = 0 (genus formula)\n"
    "11 true wt2 new dim = 1 (genus formula; LMFDB 11.2.a)\n"
    "12 false wt2 new dim = 0 (genus formula)\n"
    "13 false wt2 new dim = 0 (genus formula)\n"
    "14 true wt2 new dim = 1 (genus formula; LMFDB 14.2.a)\n"
    "15 true wt2 new dim = 1 (genus formula; LMFDB 15.2.a)\n"
    "16 false wt2 new dim = 0 (genus formula)\n"
    "17 true wt2 new dim = 1 (genus formula; LMFDB 17.2.a)\n"
    "18 false wt2 new dim = 0 (genus formula)\n"
    "19 true wt2 new dim = 1 (genus formula; LMFDB 19.2.a)\n"
    "20 true wt2 new dim = 1 (genus formula; LMFDB 20.2.a)\n"
    "21 true wt2 new dim = 1 (genus formula; LMFDB 21.2.a)\n"
    "22 false wt2 new dim = 0 (all oldforms from level 11)\n"
    "23 true wt2 new dim = 2 (genus formula; LMFDB 23.2.a)\n"
    "24 true wt2 new dim = 1 (genus formula; LMFDB 24.2.a)\n"
    "25 false wt2 new dim = 0 (genus formula)\n"
    "26 true wt2 new dim = 2 (genus formula; LMFDB 26.2.a-b)\n"
    "27 true wt2 new dim = 1 (genus formula; LMFDB 27.2.a)\n"
    "28 false wt2 new dim = 0 (all oldforms from level 14)\n"
    "29 true wt2 new dim = 2 (genus formula; LMFDB 29.2.a)\n"
    "30 true wt2 new dim = 1 (genus formula; LMFDB 30.2.a)\n"
    "60 false wt2 new dim = 0 (all oldforms from levels 15, 20, 30)\n";

}  // namespace

NewformTable NewformTable::parse(std::istream& in, const std::string& origin) {
  NewformTable table;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (first) {
        auto pos = line.rfind(' ');
        table.version_ = pos == std::string::npos ? line : line.substr(pos + 1);
      }
      first = false;
      continue;
    }
    first = false;
    std::istringstream ls(line);
    NewformTableRow row;
    std::string flag;
    if (!(ls >> row.level >> flag))
      throw std::runtime_error("malformed newform table row in " + origin + ": " + line);
    if (flag != "true" && flag != "false")
      throw std::runtime_error("newform table flag must be true/false in " + origin);
    row.has_newforms = flag == "true";
    std::getline(ls, row.provenance);
    if (!row.provenance.empty() && row.provenance.front() == ' ')
      row.provenance.erase(0, 1);
    table.rows_.push_back(std::move(row));
  }
  if (table.rows_.empty())
    throw std::runtime_error("newform table is empty: " + origin);
  return table;
}

const NewformTable& NewformTable::builtin() {
  static const NewformTable table = [] {
    std::istringstream in(kBuiltinTable);
    return parse(in, "builtin");
  }();
  return table;
}

NewformTable NewformTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open newform table: " + path);
  return parse(in, path);
}

bool NewformTable::has_newforms(long level) const {
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  for (const auto& row : rows_)
    if (row.level == level) return row.has_newforms;
  throw std::out_of_range("level " + std::to_string(level) +
                          " is outside the certified newform table");
}

bool has_newforms(long level) { return NewformTable::builtin().has_newforms(level); }

std::vector<HypothesisStatus> bs_hypothesis_checklist() {
  return {
      {"x, C y, z nonzero and pairwise coprime", true,
       "B₂, w₂ coprime since B₂ is odd and prime to 5"},
      {"xy ≠ ±1", true, "B₂ ∉ {−1, +1} (NOT5U_N7_MOD3 + NOT5U_N7_MOD8)"},
      {"z ≡ 1 (mod 4)", true, "w₂ = u² − 5v² ≡ 1 (mod 4) for u odd, v even"},
      {"v₂(C y⁷) ≥ 6", true, "coefficient exponent 4α + 2 ≥ 6 for α ≥ 1"},
      {"v_q(C) < 7 for all primes q", true, "0 ≤ r₁, r₂ < 7 by construction"},
  };
}

}  // namespace quintic
