#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "quintic/arith.hpp"
#include "quintic/integer.hpp"

namespace quintic {

// One recognized decomposition Z^5 - X^(2N) = 2^(2a) 5^(2b) p^(2c).
struct SearchHit {
  long n = 0;
  Integer x;
  Integer z;
  PowerShape shape;

  bool operator==(const SearchHit&) const = default;
};

struct SearchReport {
  Integer z_max;
  std::vector<long> n_values;  // sorted, deduplicated
  std::vector<SearchHit> hits;  // sorted by (n, z, x)
  std::uint64_t pairs_scanned = 0;
  std::uint64_t elapsed_ms = 0;  // excluded from any comparison artifact
  bool complete = true;

  // Hits with n > 1; any entry is a fatal verification failure.
  std::vector<SearchHit> counterexamples() const;
};

struct SearchOptions {
  int workers = 1;
  long chunk_size = 64;          // Z values per work unit, worker-independent
  std::string checkpoint_path;   // empty: no checkpointing
  std::uint64_t max_chunks = 0;  // 0: run to completion
};

// Sweeps every Z <= z_max and every X with X^(2N) < Z^5 for each N,
// recording the (X, Z, N) triples whose difference has the power shape.
// Deterministic: the report is independent of worker count and chunking.
SearchReport theorem_search(const Integer& z_max, const std::vector<long>& n_values,
                            const SearchOptions& opts = {});

// "hit n=... x=... z=... alpha=... beta=... gamma=... p=..."; also the row
// format inside checkpoint files.
std::string serialize(const SearchHit& hit);

}  // namespace quintic
