#include "quintic/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace quintic {

namespace {

bool hit_less(const SearchHit& a, const SearchHit& b) {
  if (a.n != b.n) return a.n < b.n;
  if (a.z != b.z) return a.z < b.z;
  return a.x < b.x;
}

struct ChunkResult {
  Integer lo, hi;  // inclusive Z range
  std::uint64_t pairs = 0;
  std::vector<SearchHit> hits;
};

std::string shape_p(const PowerShape& s) {
  return s.p ? s.p->get_str() : std::string("none");
}

std::string hit_line(const SearchHit& h) {
  std::ostringstream os;
  os << "hit n=" << h.n << " x=" << h.x << " z=" << h.z
     << " alpha=" << h.shape.alpha << " beta=" << h.shape.beta
     << " gamma=" << h.shape.gamma << " p=" << shape_p(h.shape);
  return os.str();
}

std::string join_longs(const std::vector<long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  return os.str();
}

// key=value token helpers for the checkpoint format.
std::map<std::string, std::string> parse_kv(std::istringstream& ls) {
  std::map<std::string, std::string> kv;
  std::string tok;
  while (ls >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) continue;
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return kv;
}

struct Checkpoint {
  std::map<Integer, ChunkResult> done;  // keyed by lo

  static Checkpoint load(const std::string& path, const Integer& z_max,
                         const std::vector<long>& n_values) {
    Checkpoint cp;
    std::ifstream in(path);
    if (!in) return cp;
    std::string line;
    if (!std::getline(in, line) || line != "search-checkpoint v1")
      throw std::invalid_argument("unrecognized checkpoint header: " + path);
    if (!std::getline(in, line))
      throw std::invalid_argument("truncated checkpoint: " + path);
    {
      std::istringstream ls(line);
      std::string tag;
      ls >> tag;
      auto kv = parse_kv(ls);
      if (tag != "params" || Integer(kv.at("zmax")) != z_max ||
          kv.at("n") != join_longs(n_values))
        throw std::invalid_argument("checkpoint parameters do not match this search: " + path);
    }
    ChunkResult* current = nullptr;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream ls(line);
      std::string tag;
      ls >> tag;
      auto kv = parse_kv(ls);
      if (tag == "chunk") {
        ChunkResult c;
        c.lo = Integer(kv.at("lo"));
        c.hi = Integer(kv.at("hi"));
        c.pairs = std::stoull(kv.at("pairs"));
        current = &cp.done.emplace(c.lo, std::move(c)).first->second;
      } else if (tag == "hit") {
        if (!current) throw std::invalid_argument("hit before chunk in checkpoint");
        SearchHit h;
        h.n = std::stol(kv.at("n"));
        h.x = Integer(kv.at("x"));
        h.z = Integer(kv.at("z"));
        h.shape.alpha = std::stol(kv.at("alpha"));
        h.shape.beta = std::stol(kv.at("beta"));
        h.shape.gamma = std::stol(kv.at("gamma"));
        if (kv.at("p") != "none") h.shape.p = Integer(kv.at("p"));
        current->hits.push_back(std::move(h));
      }
    }
    return cp;
  }

  void write(const std::string& path, const Integer& z_max,
             const std::vector<long>& n_values) const {
    std::string tmp = path + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw std::runtime_error("cannot write checkpoint: " + tmp);
      out << "search-checkpoint v1\n";
      out << "params zmax=" << z_max << " n=" << join_longs(n_values) << "\n";
      for (const auto& [lo, c] : done) {
        out << "chunk lo=" << c.lo << " hi=" << c.hi << " pairs=" << c.pairs
            << " hits=" << c.hits.size() << "\n";
        for (const auto& h : c.hits) out << hit_line(h) << "\n";
      }
    }
    std::filesystem::rename(tmp, path);
  }
};

ChunkResult scan_chunk(const Integer& lo, const Integer& hi,
                       const std::vector<long>& n_values) {
  ChunkResult res;
  res.lo = lo;
  res.hi = hi;
  for (Integer z = lo; z <= hi; ++z) {
    Integer z5 = ipow(z, 5);
    for (long n : n_values) {
      Integer x_max = nth_root_floor(z5 - 1, 2 * static_cast<unsigned long>(n)).root;
      for (Integer x = 1; x <= x_max; ++x) {
        ++res.pairs;
        Integer d = z5 - ipow(x, 2 * static_cast<unsigned long>(n));
        // alpha >= 1 with even exponents forces 4 | d.
        if (mpz_fdiv_ui(d.get_mpz_t(), 4) != 0) continue;
        Integer g;
        mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), z.get_mpz_t());
        if (g != 1) continue;
        if (auto shape = power_shape(d))
          res.hits.push_back({n, x, z, *shape});
      }
    }
  }
  return res;
}

}  // namespace

std::vector<SearchHit> SearchReport::counterexamples() const {
  std::vector<SearchHit> out;
  for (const auto& h : hits)
    if (h.n > 1) out.push_back(h);
  return out;
}

SearchReport theorem_search(const Integer& z_max, const std::vector<long>& n_values,
                            const SearchOptions& opts) {
  if (z_max < 2) throw std::invalid_argument("z_max must be >= 2");
  if (n_values.empty()) throw std::invalid_argument("at least one exponent required");
  for (long n : n_values)
    if (n < 1) throw std::invalid_argument("exponents must be >= 1");
  if (opts.workers < 1) throw std::invalid_argument("workers must be >= 1");
  if (opts.chunk_size < 1) throw std::invalid_argument("chunk_size must be >= 1");

  auto t0 = std::chrono::steady_clock::now();

  SearchReport rep;
  rep.z_max = z_max;
  rep.n_values = n_values;
  std::sort(rep.n_values.begin(), rep.n_values.end());
  rep.n_values.erase(std::unique(rep.n_values.begin(), rep.n_values.end()),
                     rep.n_values.end());

  Checkpoint cp;
  if (!opts.checkpoint_path.empty())
    cp = Checkpoint::load(opts.checkpoint_path, z_max, rep.n_values);

  // Fixed chunk grid starting at Z = 2, independent of worker count.
  std::vector<std::pair<Integer, Integer>> pending;
  for (Integer lo = 2; lo <= z_max; lo += opts.chunk_size) {
    Integer hi = lo + opts.chunk_size - 1;
    if (hi > z_max) hi = z_max;
    if (!cp.done.count(lo)) pending.emplace_back(lo, hi);
  }
  if (opts.max_chunks > 0 && pending.size() > opts.max_chunks) {
    pending.resize(opts.max_chunks);
    rep.complete = false;
  }

  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= pending.size()) return;
      ChunkResult res = scan_chunk(pending[i].first, pending[i].second, rep.n_values);
      std::lock_guard<std::mutex> lock(mu);
      cp.done.emplace(res.lo, std::move(res));
      if (!opts.checkpoint_path.empty())
        cp.write(opts.checkpoint_path, z_max, rep.n_values);
    }
  };
  if (opts.workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < opts.workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  for (const auto& [lo, c] : cp.done) {
    rep.pairs_scanned += c.pairs;
    rep.hits.insert(rep.hits.end(), c.hits.begin(), c.hits.end());
  }
  std::sort(rep.hits.begin(), rep.hits.end(), hit_less);

  rep.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - t0)
          .count());
  return rep;
}

}  // namespace quintic
