#include "dpw/census.hpp"

#include <array>
#include <atomic>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace dpw {

namespace {

constexpr int kMaxDistinctLengths = 24;  // 1+2+...+21 > 240, so 21 suffices

struct TypeKey {
  std::uint32_t npairs = 0;
  std::array<std::uint32_t, kMaxDistinctLengths> lm{};  // (len << 16) | mult, ascending

  bool operator==(const TypeKey& o) const {
    if (npairs != o.npairs) return false;
    return std::memcmp(lm.data(), o.lm.data(), npairs * sizeof(std::uint32_t)) == 0;
  }
};

std::uint64_t key_hash(const TypeKey& k) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::uint32_t i = 0; i < k.npairs; ++i) {
    h ^= k.lm[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

// open-addressed counter table; a census has at most a few hundred types
class LocalTable {
public:
  LocalTable() : slots_(1024) {}

  void add(const TypeKey& key, std::uint64_t n = 1) {
    std::uint64_t h = key_hash(key);
    size_t mask = slots_.size() - 1;
    size_t i = h & mask;
    for (;;) {
      Slot& s = slots_[i];
      if (!s.used) {
        s.used = true;
        s.key = key;
        s.count = n;
        if (++size_ * 4 > slots_.size() * 3) grow();
        return;
      }
      if (s.key == key) {
        s.count += n;
        return;
      }
      i = (i + 1) & mask;
    }
  }

  template <class Fn>
  void for_each(Fn fn) const {
    for (const Slot& s : slots_)
      if (s.used) fn(s.key, s.count);
  }

private:
  struct Slot {
    TypeKey key;
    std::uint64_t count = 0;
    bool used = false;
  };

  void grow() {
    std::vector<Slot> old = std::move(slots_);
    slots_.assign(old.size() * 2, Slot{});
    size_ = 0;
    for (const Slot& s : old)
      if (s.used) add(s.key, s.count);
  }

  std::vector<Slot> slots_;
  size_t size_ = 0;
};

struct Tally {
  explicit Tally(int n) : n_(n), count_(n + 1, 0) {}

  // cycle type of x -> suffix[u[x]]
  void leaf(const std::uint8_t* u, const std::uint8_t* suffix) {
    // materialize the product (independent loads pipeline well), then
    // consume it destructively: 0xff marks visited points
    std::uint8_t g[256];
    for (int x = 0; x < n_; ++x) g[x] = suffix[u[x]];
    TypeKey key;
    int ndistinct = 0;
    int touched[kMaxDistinctLengths];
    for (int i = 0; i < n_; ++i) {
      if (g[i] == 0xff) continue;
      int len = 1, j = g[i];
      g[i] = 0xff;
      while (j != i) {
        int t = g[j];
        g[j] = 0xff;
        j = t;
        ++len;
      }
      if (count_[len]++ == 0) touched[ndistinct++] = len;
    }
    // insertion sort; an element has few distinct cycle lengths
    for (int a = 1; a < ndistinct; ++a) {
      int v = touched[a], b = a;
      while (b > 0 && touched[b - 1] > v) {
        touched[b] = touched[b - 1];
        --b;
      }
      touched[b] = v;
    }
    key.npairs = (std::uint32_t)ndistinct;
    for (int a = 0; a < ndistinct; ++a) {
      key.lm[a] = ((std::uint32_t)touched[a] << 16) | (std::uint32_t)count_[touched[a]];
      count_[touched[a]] = 0;
    }
    table.add(key);
  }

  LocalTable table;

private:
  int n_;
  std::vector<std::uint16_t> count_;
};

struct FlatChain {
  int degree = 0;
  // transversal images per level, contiguous
  std::vector<std::vector<const std::uint8_t*>> trans;
};

struct CensusWorker {
  const FlatChain* chain = nullptr;
  int stride = 1;  // worker w owns top positions w, w+stride, w+2*stride, ...
  int offset = 0;
  std::uint64_t leaves = 0;
  std::function<void(std::uint64_t)> on_leaves;  // throttled progress hook

  // Every element factors as u_{k-1} * ... * u_1 * u_0 (u_{k-1} applied
  // first, the top representative u_0 last). The traversal walks levels
  // k-1 .. 1 with incremental prefix products and fuses the top level into
  // the leaf tally, so the innermost loop runs over the largest orbit and
  // the composition cost per element is ~1/|top orbit|.
  void run(Tally& tally) {
    const int k = (int)chain->trans.size();
    std::vector<std::vector<std::uint8_t>> prefix(k, std::vector<std::uint8_t>(chain->degree));
    if (k == 1) {
      std::vector<std::uint8_t> ident(chain->degree);
      for (int i = 0; i < chain->degree; ++i) ident[i] = (std::uint8_t)i;
      emit(ident.data(), tally);
      return;
    }
    descend(k - 1, prefix, tally);
  }

private:
  void descend(int level, std::vector<std::vector<std::uint8_t>>& prefix, Tally& tally) {
    const auto& tr = chain->trans[level];
    const int n = chain->degree;
    const bool at_root = level + 1 == (int)chain->trans.size();
    std::uint8_t* cur = prefix[level].data();
    for (const std::uint8_t* u : tr) {
      if (at_root) {
        std::memcpy(cur, u, n);
      } else {
        const std::uint8_t* up = prefix[level + 1].data();
        for (int x = 0; x < n; ++x) cur[x] = u[up[x]];
      }
      if (level == 1)
        emit(cur, tally);
      else
        descend(level - 1, prefix, tally);
    }
  }

  void emit(const std::uint8_t* pre, Tally& tally) {
    const auto& top = chain->trans[0];
    for (size_t p = offset; p < top.size(); p += stride) tally.leaf(pre, top[p]);
    leaves += (top.size() - offset + stride - 1) / stride;
    if (on_leaves && leaves >= (1u << 22)) {
      on_leaves(leaves);
      leaves = 0;
    }
  }
};

CycleType key_to_type(const TypeKey& k) {
  CycleType t;
  for (std::uint32_t i = 0; i < k.npairs; ++i)
    t.emplace_back((int)(k.lm[i] >> 16), (int)(k.lm[i] & 0xffff));
  return t;
}

}  // namespace

CycleTypeCensus enumerate_cycle_types(const Bsgs& bsgs, int workers,
                                      const std::function<void(std::uint64_t, std::uint64_t)>& progress) {
  const int n = bsgs.degree();
  if (n > 254) throw std::invalid_argument("enumerate_cycle_types: ground size above 254");
  CycleTypeCensus census;
  census.ground_size = n;

  if (bsgs.levels().empty()) {  // trivial group
    census.table[{{1, n}}] = 1;
    census.group_order = 1;
    return census;
  }

  FlatChain chain;
  chain.degree = n;
  std::uint64_t total_elements = 1;
  for (const BsgsLevel& lv : bsgs.levels()) {
    std::vector<const std::uint8_t*> tr;
    tr.reserve(lv.transversal.size());
    for (const Perm& p : lv.transversal) tr.push_back(p.data());
    total_elements *= tr.size();
    chain.trans.push_back(std::move(tr));
  }

  const int top = (int)chain.trans[0].size();
  if (workers < 1) workers = 1;
  workers = std::min(workers, top);

  std::atomic<std::uint64_t> done{0};
  std::mutex progress_mutex;
  std::vector<LocalTable> results(workers);

  auto work = [&](int w) {
    Tally tally(n);
    CensusWorker cw;
    cw.chain = &chain;
    cw.stride = workers;
    cw.offset = w;
    if (progress)
      cw.on_leaves = [&](std::uint64_t leaves) {
        std::uint64_t d = done.fetch_add(leaves) + leaves;
        std::lock_guard<std::mutex> lk(progress_mutex);
        progress(d, total_elements);
      };
    cw.run(tally);
    results[w] = std::move(tally.table);
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  if (progress) progress(total_elements, total_elements);

  for (const LocalTable& lt : results)
    lt.for_each([&](const TypeKey& key, std::uint64_t count) {
      census.table[key_to_type(key)] += count;
    });
  for (const auto& [type, count] : census.table) census.group_order += count;
  return census;
}

Perm random_element(const Bsgs& bsgs, std::mt19937_64& rng) {
  // every element factors uniquely as u_{k-1} * ... * u_0 down the chain,
  // so independent uniform picks compose to a uniform element
  Perm g(bsgs.degree());
  for (auto lv = bsgs.levels().rbegin(); lv != bsgs.levels().rend(); ++lv) {
    const Perm& u = lv->transversal[rng() % lv->transversal.size()];
    g = compose(g, u);
  }
  return g;
}

// --- cache files -----------------------------------------------------------

std::string census_to_string(const CycleTypeCensus& census, const std::string& tau,
                             const std::string& mode) {
  std::ostringstream os;
  os << "census v1 " << tau << " " << mode << " " << census.ground_size << " "
     << census.group_order << "\n";
  for (const auto& [type, count] : census.table) {
    bool first = true;
    for (auto [len, mult] : type) {
      if (!first) os << " ";
      os << len << "^" << mult;
      first = false;
    }
    os << " : " << count << "\n";
  }
  return os.str();
}

void write_census_file(const std::string& path, const CycleTypeCensus& census,
                       const std::string& tau, const std::string& mode) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("write_census_file: cannot open " + path);
  f << census_to_string(census, tau, mode);
  if (!f) throw std::runtime_error("write_census_file: write failed for " + path);
}

std::optional<CensusFile> read_census_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return std::nullopt;
  CensusFile out;
  std::string line;
  if (!std::getline(f, line)) throw std::runtime_error("census file: empty: " + path);
  {
    std::istringstream is(line);
    std::string word, version, order;
    if (!(is >> word >> version >> out.tau >> out.mode >> out.census.ground_size >> order) ||
        word != "census" || version != "v1")
      throw std::runtime_error("census file: bad header: " + path);
    out.census.group_order = BigInt(order);
  }
  BigInt total = 0;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    auto colon = line.find(" : ");
    if (colon == std::string::npos)
      throw std::runtime_error("census file: bad line: " + line);
    CycleType type;
    {
      std::istringstream is(line.substr(0, colon));
      std::string tok;
      int prev_len = 0;
      while (is >> tok) {
        auto caret = tok.find('^');
        if (caret == std::string::npos)
          throw std::runtime_error("census file: bad cycle type token: " + tok);
        int len = std::stoi(tok.substr(0, caret));
        int mult = std::stoi(tok.substr(caret + 1));
        if (len <= prev_len || mult <= 0)
          throw std::runtime_error("census file: cycle lengths not ascending: " + line);
        prev_len = len;
        type.emplace_back(len, mult);
      }
      if (type.empty()) throw std::runtime_error("census file: empty cycle type: " + line);
    }
    BigInt count(line.substr(colon + 3));
    if (out.census.table.count(type))
      throw std::runtime_error("census file: duplicate cycle type: " + line);
    out.census.table[type] = count;
    total += count;
  }
  if (total != out.census.group_order)
    throw std::runtime_error("census file: counts do not sum to the group order: " + path);
  return out;
}

std::uint64_t ordering_hash(const RootSystem& rs, ActionMode mode) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 0x100000001b3ull;
  };
  mix((std::uint64_t)rs.lattice.n());
  mix(mode == ActionMode::projective ? 2 : 1);
  for (const Vec& r : rs.roots)
    for (int c : r) mix((std::uint64_t)(std::int64_t)c);
  if (mode == ActionMode::projective) {
    PermAction act = build_action(rs, mode);
    for (int rep : act.pair_rep) mix((std::uint64_t)rep);
  }
  return h;
}

std::string census_cache_filename(const std::string& tau, const std::string& mode,
                                  std::uint64_t hash) {
  std::ostringstream os;
  os << "census_v1_" << tau << "_" << mode << "_" << std::hex << hash << ".txt";
  return os.str();
}

}  // namespace dpw
