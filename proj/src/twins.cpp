#include "grouptrix/twins.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "grouptrix/errors.hpp"
#include "grouptrix/graph_algorithms.hpp"

namespace grouptrix {

std::string to_string(TwinType t) { return t == TwinType::Open ? "open" : "closed"; }

std::vector<std::vector<std::size_t>> twin_classes(const Graph& g, TwinType type) {
  std::unordered_map<Bitset, std::vector<std::size_t>, BitsetHash> groups;
  for (std::size_t v = 0; v < g.n(); ++v) {
    Bitset key = g.row(v);
    if (type == TwinType::Closed) key.set(v);
    groups[key].push_back(v);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& kv : groups) out.push_back(std::move(kv.second));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_twin_free(const Graph& g) {
  return twin_classes(g, TwinType::Open).size() == g.n() && twin_classes(g, TwinType::Closed).size() == g.n();
}

namespace {

// Incremental twin finder: XOR hashes of neighbourhoods, bucketed, with
// every candidate pair confirmed by exact row comparison.
class TwinIndex {
 public:
  explicit TwinIndex(const Graph& g) : n_(g.n()), rows_(g.n()), alive_(g.n()), open_(g.n()), closed_(g.n()) {
    std::mt19937_64 rng(0x7a1f5eedULL);
    key_.resize(n_);
    for (auto& k : key_) k = rng();
    alive_.set_all();
    for (std::size_t v = 0; v < n_; ++v) {
      rows_[v] = g.row(v);
      std::uint64_t h = 0;
      rows_[v].for_each([&](std::size_t u) { h ^= key_[u]; });
      open_[v] = h;
      closed_[v] = h ^ key_[v];
    }
    for (std::size_t v = 0; v < n_; ++v) insert(v);
  }

  bool empty() const { return cands_.empty(); }

  // (a, b, type) with a < b, least first.
  std::tuple<std::size_t, std::size_t, TwinType> least() const {
    auto& c = *cands_.begin();
    return {std::get<0>(c), std::get<1>(c), static_cast<TwinType>(std::get<2>(c))};
  }

  bool has_type(TwinType t) const {
    for (auto& c : cands_)
      if (static_cast<TwinType>(std::get<2>(c)) == t) return true;
    return false;
  }

  std::tuple<std::size_t, std::size_t, TwinType> least_of(TwinType t) const {
    for (auto& c : cands_)
      if (static_cast<TwinType>(std::get<2>(c)) == t) return {std::get<0>(c), std::get<1>(c), t};
    throw Error("no twin of the requested type");
  }

  std::tuple<std::size_t, std::size_t, TwinType> random(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::size_t> pick(0, cands_.size() - 1);
    auto it = cands_.begin();
    std::advance(it, static_cast<long>(pick(rng)));
    const TwinType t = static_cast<TwinType>(std::get<2>(*it));
    const auto& bucket = bucket_of(t, std::get<3>(*it));
    // Random member with at least one exact twin in the bucket, then a random partner.
    std::vector<std::size_t> members(bucket.begin(), bucket.end());
    std::shuffle(members.begin(), members.end(), rng);
    for (std::size_t a : members) {
      std::vector<std::size_t> partners;
      for (std::size_t b : bucket)
        if (b != a && twins(a, b, t)) partners.push_back(b);
      if (partners.empty()) continue;
      std::size_t b = partners[std::uniform_int_distribution<std::size_t>(0, partners.size() - 1)(rng)];
      return {std::min(a, b), std::max(a, b), t};
    }
    throw Error("twin bucket lost its candidate");
  }

  void merge(std::size_t kept, std::size_t merged) {
    (void)kept;
    erase(merged);
    alive_.reset(merged);
    Bitset nb = rows_[merged];
    nb.for_each([&](std::size_t u) {
      erase(u);
      rows_[u].reset(merged);
      open_[u] ^= key_[merged];
      closed_[u] ^= key_[merged];
      insert(u);
    });
    rows_[merged].clear();
  }

  bool twins(std::size_t a, std::size_t b, TwinType t) const {
    if (t == TwinType::Open) return rows_[a] == rows_[b];
    if (!rows_[a].test(b)) return false;
    Bitset ra = rows_[a], rb = rows_[b];
    ra.set(a);
    rb.set(b);
    return ra == rb;
  }

 private:
  using Bucket = std::set<std::size_t>;
  using Cand = std::tuple<std::size_t, std::size_t, int, std::uint64_t>;

  std::map<std::uint64_t, Bucket>& buckets(TwinType t) { return t == TwinType::Open ? obuckets_ : cbuckets_; }
  const Bucket& bucket_of(TwinType t, std::uint64_t h) const {
    return (t == TwinType::Open ? obuckets_ : cbuckets_).at(h);
  }
  std::map<std::uint64_t, Cand>& cand_of(TwinType t) { return t == TwinType::Open ? ocand_ : ccand_; }
  std::uint64_t hash(std::size_t v, TwinType t) const { return t == TwinType::Open ? open_[v] : closed_[v]; }

  void refresh(TwinType t, std::uint64_t h) {
    auto& cm = cand_of(t);
    auto old = cm.find(h);
    if (old != cm.end()) {
      cands_.erase(old->second);
      cm.erase(old);
    }
    auto& bs = buckets(t);
    auto it = bs.find(h);
    if (it == bs.end() || it->second.size() < 2) return;
    const Bucket& b = it->second;
    for (auto x = b.begin(); x != b.end(); ++x)
      for (auto y = std::next(x); y != b.end(); ++y)
        if (twins(*x, *y, t)) {
          Cand c{*x, *y, static_cast<int>(t), h};
          cands_.insert(c);
          cm.emplace(h, c);
          return;
        }
  }

  void insert(std::size_t v) {
    for (TwinType t : {TwinType::Open, TwinType::Closed}) {
      std::uint64_t h = hash(v, t);
      buckets(t)[h].insert(v);
      refresh(t, h);
    }
  }

  void erase(std::size_t v) {
    for (TwinType t : {TwinType::Open, TwinType::Closed}) {
      std::uint64_t h = hash(v, t);
      auto& bs = buckets(t);
      auto it = bs.find(h);
      it->second.erase(v);
      if (it->second.empty()) bs.erase(it);
      refresh(t, h);
    }
  }

  std::size_t n_;
  std::vector<Bitset> rows_;
  Bitset alive_;
  std::vector<std::uint64_t> key_, open_, closed_;
  std::map<std::uint64_t, Bucket> obuckets_, cbuckets_;
  std::map<std::uint64_t, Cand> ocand_, ccand_;
  std::set<Cand> cands_;
};

void finish(ReductionTrace& t) {
  const std::size_t n = t.start.n();
  std::vector<std::size_t> parent(n);
  for (std::size_t v = 0; v < n; ++v) parent[v] = v;
  for (auto& s : t.steps) parent[s.merged] = s.kept;
  std::vector<char> gone(n, 0);
  for (auto& s : t.steps) gone[s.merged] = 1;
  t.survivors.clear();
  for (std::size_t v = 0; v < n; ++v)
    if (!gone[v]) t.survivors.push_back(v);
  std::vector<std::size_t> index(n, n);
  for (std::size_t i = 0; i < t.survivors.size(); ++i) index[t.survivors[i]] = i;
  t.class_map.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t r = v;
    while (parent[r] != r) r = parent[r];
    t.class_map[v] = index[r];
  }
  t.result = induced(t.start, t.survivors);
}

}  // namespace

ReductionTrace cokernel(const Graph& g, ReductionOrder order, std::uint64_t seed) {
  ReductionTrace t;
  t.start = g;
  TwinIndex idx(g);
  std::mt19937_64 rng(seed);
  auto apply = [&](std::tuple<std::size_t, std::size_t, TwinType> c) {
    auto [a, b, type] = c;
    if (!idx.twins(a, b, type)) throw Error("twin index produced a non-twin pair");
    t.steps.push_back({a, b, type});
    idx.merge(a, b);
  };
  switch (order) {
    case ReductionOrder::Deterministic:
      while (!idx.empty()) apply(idx.least());
      break;
    case ReductionOrder::SeededRandom:
      while (!idx.empty()) apply(idx.random(rng));
      break;
    case ReductionOrder::AlternatingRounds:
      while (!idx.empty()) {
        while (idx.has_type(TwinType::Closed)) apply(idx.least_of(TwinType::Closed));
        while (idx.has_type(TwinType::Open)) apply(idx.least_of(TwinType::Open));
      }
      break;
  }
  finish(t);
  return t;
}

Graph replay(const ReductionTrace& t) {
  Graph cur = t.start;
  std::vector<char> gone(cur.n(), 0);
  for (auto& s : t.steps) {
    if (s.kept >= cur.n() || s.merged >= cur.n() || gone[s.kept] || gone[s.merged] || s.kept == s.merged)
      throw Error("replay: step refers to a removed or invalid vertex");
    Bitset a = cur.row(s.kept), b = cur.row(s.merged);
    if (s.type == TwinType::Closed) {
      if (!a.test(s.merged)) throw Error("replay: closed twins must be adjacent");
      a.set(s.kept);
      b.set(s.merged);
    }
    if (!(a == b)) throw Error("replay: recorded pair is not a twin pair");
    for (std::size_t u : cur.row(s.merged).to_vector()) cur.remove_edge(s.merged, u);
    gone[s.merged] = 1;
  }
  std::vector<std::size_t> keep;
  for (std::size_t v = 0; v < cur.n(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced(cur, keep);
}

bool confluence_test(const Graph& g, int trials, std::uint64_t seed) {
  if (g.n() > 64) throw SizeGuardError("confluence test limited to 64 vertices");
  Graph first = cokernel(g, ReductionOrder::Deterministic).result;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < trials; ++i) {
    Graph r = cokernel(g, ReductionOrder::SeededRandom, rng()).result;
    if (!is_twin_free(r) || !isomorphic(first, r)) return false;
  }
  return true;
}

std::string format_trace(const ReductionTrace& t) {
  std::ostringstream os;
  for (auto& s : t.steps) os << "MERGE " << s.kept << ' ' << s.merged << ' ' << to_string(s.type) << '\n';
  return os.str();
}

}  // namespace grouptrix
