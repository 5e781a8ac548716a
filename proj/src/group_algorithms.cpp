#include "grouptrix/group_algorithms.hpp"

#include <algorithm>
#include <unordered_set>

#include "grouptrix/errors.hpp"

namespace grouptrix {

namespace {

// Per-thread visited stamps so closures avoid clearing an n-sized buffer.
struct Stamps {
  std::vector<std::uint32_t> mark;
  std::uint32_t epoch = 0;

  void begin(std::size_t n) {
    if (mark.size() < n) mark.assign(n, 0);
    if (++epoch == 0) {
      std::fill(mark.begin(), mark.end(), 0);
      epoch = 1;
    }
  }
  bool seen(Elem x) const { return mark[x] == epoch; }
  void see(Elem x) { mark[x] = epoch; }
};

thread_local Stamps tl_stamps;

// BFS closure; returns false when the size exceeds cap (out then holds a partial set).
bool closure(const Group& g, const std::vector<Elem>& seeds, std::size_t cap, std::vector<Elem>& out) {
  Stamps& st = tl_stamps;
  st.begin(g.order());
  out.clear();
  out.push_back(g.identity());
  st.see(g.identity());
  std::vector<Elem> gens;
  for (Elem s : seeds)
    if (s != g.identity() && std::find(gens.begin(), gens.end(), s) == gens.end()) gens.push_back(s);
  for (std::size_t k = 0; k < out.size(); ++k)
    for (Elem s : gens) {
      Elem y = g.mul(out[k], s);
      if (!st.seen(y)) {
        st.see(y);
        out.push_back(y);
        if (out.size() > cap) return false;
      }
    }
  return true;
}

}  // namespace

std::optional<SubgroupHandle> generated_closure(const Group& g, const std::vector<Elem>& seeds,
                                                std::optional<std::size_t> cap) {
  std::size_t c = cap.value_or(g.order() / 2);
  std::vector<Elem> out;
  if (!closure(g, seeds, c, out)) return std::nullopt;
  return SubgroupHandle(g, std::move(out), false);
}

SubgroupHandle subgroup_generated(const Group& g, const std::vector<Elem>& seeds) {
  std::vector<Elem> out;
  closure(g, seeds, g.order(), out);
  return SubgroupHandle(g, std::move(out), false);
}

std::size_t generated_order(const Group& g, const std::vector<Elem>& seeds) {
  std::vector<Elem> out;
  closure(g, seeds, g.order(), out);
  return out.size();
}

bool generates_whole(const Group& g, Elem x, Elem y) {
  if (g.order() == 1) return true;
  thread_local std::vector<Elem> out;
  // A proper subgroup has at most |G|/2 elements.
  return !closure(g, {x, y}, g.order() / 2, out);
}

SubgroupHandle center(const Group& g) {
  std::vector<Elem> z;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem s : g.generators())
      if (!g.commute(x, s)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return SubgroupHandle(g, std::move(z), false);
}

SubgroupHandle centralizer(const Group& g, Elem x) {
  std::vector<Elem> c;
  for (Elem h = 0; h < g.order(); ++h)
    if (g.commute(h, x)) c.push_back(h);
  return SubgroupHandle(g, std::move(c), false);
}

std::vector<Elem> subgroup_generators(const SubgroupHandle& h) {
  const Group& g = h.owner();
  if (h.size() == g.order()) return g.generators();
  std::vector<Elem> byorder = h.members();
  std::stable_sort(byorder.begin(), byorder.end(),
                   [&](Elem a, Elem b) { return g.element_order(a) > g.element_order(b); });
  std::vector<Elem> gens;
  Bitset in(g.order());
  in.set(g.identity());
  std::size_t size = 1;
  std::vector<Elem> out;
  for (Elem c : byorder) {
    if (size == h.size()) break;
    if (in.test(c)) continue;
    gens.push_back(c);
    closure(g, gens, g.order(), out);
    size = out.size();
    in.clear();
    for (Elem x : out) in.set(x);
  }
  return gens;
}

SubgroupHandle normal_closure(const Group& g, const std::vector<Elem>& hgens, const std::vector<Elem>& seeds) {
  std::vector<Elem> kgens = seeds;
  while (true) {
    SubgroupHandle k = subgroup_generated(g, kgens);
    std::vector<Elem> extra;
    for (Elem a : kgens)
      for (Elem s : hgens) {
        Elem c = g.conj(s, a);
        if (!k.contains(c) && std::find(extra.begin(), extra.end(), c) == extra.end()) extra.push_back(c);
      }
    if (extra.empty()) return k;
    kgens.insert(kgens.end(), extra.begin(), extra.end());
  }
}

namespace {

std::vector<SubgroupHandle> series_from(const Group& g, std::vector<Elem> hgens, SeriesKind kind) {
  std::vector<SubgroupHandle> out;
  SubgroupHandle h = subgroup_generated(g, hgens);
  if (kind == SeriesKind::UpperCentral) {
    SubgroupHandle z = SubgroupHandle::trivial(g);
    out.push_back(z);
    while (true) {
      std::vector<Elem> next;
      for (Elem x : h.members()) {
        bool ok = true;
        for (Elem s : hgens)
          if (!z.contains(g.commutator(x, s))) {
            ok = false;
            break;
          }
        if (ok) next.push_back(x);
      }
      if (next.size() == z.size()) return out;
      z = SubgroupHandle(g, std::move(next), false);
      out.push_back(z);
    }
  }
  out.push_back(h);
  std::vector<Elem> cur = hgens;
  while (true) {
    std::vector<Elem> comms;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (kind == SeriesKind::Derived) {
        for (std::size_t j = i + 1; j < cur.size(); ++j) comms.push_back(g.commutator(cur[i], cur[j]));
      } else {
        for (Elem s : hgens) comms.push_back(g.commutator(cur[i], s));
      }
    }
    // Derived: normal closure in the previous term; lower central: in H.
    SubgroupHandle next = normal_closure(g, kind == SeriesKind::Derived ? cur : hgens, comms);
    if (next.size() == out.back().size()) return out;
    out.push_back(next);
    cur = subgroup_generators(next);
  }
}

}  // namespace

std::vector<SubgroupHandle> series(const SubgroupHandle& h, SeriesKind kind) {
  return series_from(h.owner(), subgroup_generators(h), kind);
}

bool generated_is(const Group& g, const std::vector<Elem>& gens, SubgroupProperty p) {
  switch (p) {
    case SubgroupProperty::Abelian:
      for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j)
          if (!g.commute(gens[i], gens[j])) return false;
      return true;
    case SubgroupProperty::Cyclic: {
      SubgroupHandle h = subgroup_generated(g, gens);
      for (Elem x : h.members())
        if (g.element_order(x) == h.size()) return true;
      return false;
    }
    case SubgroupProperty::Nilpotent:
      return series_from(g, gens, SeriesKind::LowerCentral).back().size() == 1;
    case SubgroupProperty::Solvable:
      return series_from(g, gens, SeriesKind::Derived).back().size() == 1;
  }
  return false;
}

bool subgroup_is(const SubgroupHandle& h, SubgroupProperty p) {
  if (p == SubgroupProperty::Cyclic) {
    for (Elem x : h.members())
      if (h.owner().element_order(x) == h.size()) return true;
    return false;
  }
  return generated_is(h.owner(), subgroup_generators(h), p);
}

EngelResult engel_related(const Group& g, Elem x, Elem y) {
  Elem c = g.commutator(x, y);
  std::uint32_t k = 1;
  std::unordered_set<Elem> visited;
  while (c != g.identity()) {
    if (!visited.insert(c).second) return {false, std::nullopt};
    c = g.commutator(c, y);
    ++k;
  }
  return {true, k};
}

bool is_normal(const SubgroupHandle& n) {
  const Group& g = n.owner();
  for (Elem s : g.generators())
    for (Elem m : n.members())
      if (!n.contains(g.conj(s, m))) return false;
  return true;
}

namespace {

class QuotientRep : public Representation {
 public:
  QuotientRep(Group g, std::vector<Elem> coset_of, std::vector<Elem> rep)
      : g_(std::move(g)), coset_of_(std::move(coset_of)), rep_(std::move(rep)) {}
  std::uint32_t order() const override { return static_cast<std::uint32_t>(rep_.size()); }
  Elem identity() const override { return 0; }
  Elem mul(Elem a, Elem b) const override { return coset_of_[g_.mul(rep_[a], rep_[b])]; }
  std::string describe(Elem a) const override { return g_.describe(rep_[a]) + "Z"; }
  std::vector<Elem> generators() const override {
    std::vector<Elem> gens;
    for (Elem s : g_.generators())
      if (coset_of_[s] != 0 && std::find(gens.begin(), gens.end(), coset_of_[s]) == gens.end())
        gens.push_back(coset_of_[s]);
    return gens;
  }

 private:
  Group g_;
  std::vector<Elem> coset_of_, rep_;
};

}  // namespace

QuotientMap quotient_map(const Group& g, const SubgroupHandle& n) {
  if (!is_normal(n)) throw NotNormalError("subgroup is not normal in " + g.label());
  const std::uint32_t none = g.order();
  std::vector<Elem> coset_of(g.order(), none), rep;
  auto assign = [&](Elem x) {
    const Elem id = static_cast<Elem>(rep.size());
    Elem smallest = x;
    for (Elem m : n.members()) smallest = std::min(smallest, g.mul(x, m));
    rep.push_back(smallest);
    for (Elem m : n.members()) coset_of[g.mul(x, m)] = id;
  };
  assign(g.identity());
  for (Elem x = 0; x < g.order(); ++x)
    if (coset_of[x] == none) assign(x);
  auto qrep = std::make_shared<QuotientRep>(g, coset_of, rep);
  QuotientMap qm{Group(qrep, g.label() + "/N" + std::to_string(n.size())), std::move(coset_of), std::move(rep)};
  return qm;
}

Group quotient(const Group& g, const SubgroupHandle& n) { return quotient_map(g, n).group; }

std::vector<std::vector<Elem>> cyclic_classes(const Group& g) {
  std::vector<std::vector<Elem>> out;
  for (const auto& c : g.cyclic_classes()) out.push_back(c.block);
  return out;
}

}  // namespace grouptrix
