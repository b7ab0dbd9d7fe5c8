#pragma once

#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "quintic/integer.hpp"

namespace quintic {

// The seventh-power rewrite of 2^(4 alpha + 2) 5^(4 k + 1) and the level it
// induces: the coefficient splits as C * (2^s1 5^s2)^7 with C = 2^r1 5^r2,
// 0 <= r1, r2 < 7.
struct LevelComputation {
  long alpha = 0;
  long k = 0;
  Integer C;
  int r1 = 0;
  int r2 = 0;
  long s1 = 0;
  long s2 = 0;
  int v2C = 0;     // = r1
  long level = 0;  // 0 until bs_level has run

  bool operator==(const LevelComputation&) const = default;
};

// Splits the exponents: r = e mod 7, s = e div 7 for e = 4*alpha + 2 and
// e = 4*k + 1; fills everything except level.
LevelComputation rewrite_seventh(long alpha, long k);

// The three-case level formula: 2 rad(C) when v2(C) = 0, rad(C)/2 when
// v2(C) = 6, rad(C) otherwise. Requires every prime valuation of C < 7.
long bs_level(const Integer& C);

// rewrite_seventh plus bs_level.
LevelComputation level_computation(long alpha, long k);

// { bs_level(C(alpha, k)) : 1 <= alpha <= alpha_max, 0 <= k <= k_max }.
std::set<long> n7_level_set(long alpha_max, long k_max);

struct NewformTableRow {
  long level = 0;
  bool has_newforms = false;
  std::string provenance;
};

// Table of weight-2 newform existence per level, loaded from the bundled
// data file or the identical built-in copy. Levels outside the table are an
// explicit error, never a guess.
class NewformTable {
 public:
  static const NewformTable& builtin();
  static NewformTable load(const std::string& path);

  bool has_newforms(long level) const;
  const std::vector<NewformTableRow>& rows() const { return rows_; }
  const std::string& version() const { return version_; }

 private:
  static NewformTable parse(std::istream& in, const std::string& origin);

  std::string version_;
  std::vector<NewformTableRow> rows_;
};

// Lookup against the built-in table.
bool has_newforms(long level);

// Hypotheses of the level lemma beyond the coefficient bound, with what
// establishes each one. Attached to level computations in CLI output.
struct HypothesisStatus {
  std::string name;
  bool established = false;
  std::string basis;
};

std::vector<HypothesisStatus> bs_hypothesis_checklist();

}  // namespace quintic
