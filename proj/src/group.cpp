#include "grouptrix/group.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "grouptrix/errors.hpp"

namespace grouptrix {

namespace {

// Closure of seeds under right multiplication; returns a membership mask.
std::vector<char> closure_mask(const Group& g, const std::vector<Elem>& seeds, std::size_t& size) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> queue{g.identity()};
  in[g.identity()] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (Elem s : seeds) {
      Elem y = g.mul(queue[k], s);
      if (!in[y]) {
        in[y] = 1;
        queue.push_back(y);
      }
    }
  size = queue.size();
  return in;
}

}  // namespace

Group::Group(std::shared_ptr<const Representation> rep, std::string label) {
  auto impl = std::make_shared<Impl>();
  impl->rep = std::move(rep);
  impl->label = std::move(label);
  const std::uint32_t n = impl->rep->order();
  if (n == 0) throw SpecError("group must have at least one element");
  impl->n = n;
  impl->identity = impl->rep->identity();
  if (impl->identity >= n) throw Error("identity index out of range");

  if (n <= kTableLimit) {
    impl->table.resize(std::size_t{n} * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b) {
        Elem c = impl->rep->mul(a, b);
        if (c >= n) throw Error("multiplication leaves the element range");
        impl->table[std::size_t{a} * n + b] = static_cast<std::uint16_t>(c);
      }
  }
  impl_ = impl;

  // One pass over the powers of every not-yet-classified element.
  impl->inverse.assign(n, n);
  impl->orders.assign(n, 0);
  impl->class_of.assign(n, n);
  std::vector<Elem> powers;
  for (Elem g = 0; g < n; ++g) {
    if (impl->class_of[g] != n) continue;
    powers.assign(1, impl->identity);
    Elem x = g;
    while (x != impl->identity) {
      powers.push_back(x);
      if (powers.size() > n) throw Error("element " + std::to_string(g) + " has no finite order");
      x = mul(x, g);
    }
    const std::size_t k = powers.size();
    CyclicClass cc;
    cc.subgroup = powers;
    std::sort(cc.subgroup.begin(), cc.subgroup.end());
    if (std::adjacent_find(cc.subgroup.begin(), cc.subgroup.end()) != cc.subgroup.end())
      throw Error("powers of element " + std::to_string(g) + " repeat before reaching the identity");
    const std::uint32_t id = static_cast<std::uint32_t>(impl->classes.size());
    for (std::size_t j = 0; j < k; ++j) {
      Elem p = powers[j];
      impl->inverse[p] = powers[(k - j) % k];
      impl->orders[p] = static_cast<std::uint32_t>(k / std::gcd(j, k));
      if (std::gcd(j, k) == 1 || k == 1) {
        if (impl->class_of[p] != n) throw Error("inconsistent cyclic classes");
        impl->class_of[p] = id;
        cc.block.push_back(p);
      }
    }
    std::sort(cc.block.begin(), cc.block.end());
    cc.rep = cc.block.front();
    impl->classes.push_back(std::move(cc));
  }

  impl->generators = impl->rep->generators();
  if (impl->generators.empty() && n > 1) {
    // Greedy: add an element of largest order outside the current closure.
    std::vector<Elem> byorder(n);
    std::iota(byorder.begin(), byorder.end(), 0u);
    std::stable_sort(byorder.begin(), byorder.end(),
                     [&](Elem a, Elem b) { return impl->orders[a] > impl->orders[b]; });
    std::size_t size = 1;
    std::vector<char> in = closure_mask(*this, {}, size);
    for (Elem c : byorder) {
      if (size == n) break;
      if (in[c]) continue;
      impl->generators.push_back(c);
      in = closure_mask(*this, impl->generators, size);
    }
  }
}

Elem Group::pow(Elem a, long long e) const {
  const std::uint32_t o = element_order(a);
  long long k = e % static_cast<long long>(o);
  if (k < 0) k += o;
  Elem r = identity();
  Elem base = a;
  auto u = static_cast<unsigned long long>(k);
  while (u) {
    if (u & 1) r = mul(r, base);
    base = mul(base, base);
    u >>= 1;
  }
  return r;
}

bool Group::is_abelian() const {
  const auto& gens = generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!commute(gens[i], gens[j])) return false;
  return true;
}

void Group::validate() const {
  const std::uint32_t n = order();
  const Elem e = identity();
  for (Elem g = 0; g < n; ++g) {
    if (mul(e, g) != g || mul(g, e) != g) throw Error("identity is not two-sided at " + std::to_string(g));
    if (inv(g) >= n || mul(g, inv(g)) != e || mul(inv(g), g) != e)
      throw Error("inverse fails at " + std::to_string(g));
  }
  auto assoc = [&](Elem a, Elem b, Elem c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
      throw Error("associativity fails at (" + std::to_string(a) + "," + std::to_string(b) + "," +
                  std::to_string(c) + ")");
  };
  if (n <= 256) {
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<Elem> d(0, n - 1);
    for (int t = 0; t < 100000; ++t) assoc(d(rng), d(rng), d(rng));
  }
  for (Elem g = 0; g < n; ++g) {
    std::uint32_t m = 1;
    for (Elem x = g; x != e; x = mul(x, g)) ++m;
    if (m != element_order(g)) throw Error("cached order wrong at " + std::to_string(g));
    const auto& c = cyclic(g);
    if (c.size() != m) throw Error("cyclic closure size differs from order at " + std::to_string(g));
    if (n % m != 0) throw Error("element order does not divide the group order");
  }
  std::size_t size = 0;
  closure_mask(*this, generators(), size);
  if (size != n) throw Error("generators do not generate the group");
}

SubgroupHandle::SubgroupHandle(Group owner, std::vector<Elem> members, bool verify)
    : owner_(std::move(owner)), members_(std::move(members)), mask_(owner_.order()) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Elem x : members_) {
    if (x >= owner_.order()) throw Error("subgroup member out of range");
    mask_.set(x);
  }
  if (!verify) return;
  if (!mask_.test(owner_.identity())) throw Error("subgroup misses the identity");
  if (owner_.order() % members_.size() != 0) throw Error("subgroup order does not divide the group order");
  for (Elem a : members_) {
    if (!mask_.test(owner_.inv(a))) throw Error("subgroup not closed under inverses");
    for (Elem b : members_)
      if (!mask_.test(owner_.mul(a, b))) throw Error("subgroup not closed under multiplication");
  }
}

SubgroupHandle SubgroupHandle::whole(const Group& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), 0u);
  return SubgroupHandle(g, std::move(all), false);
}

SubgroupHandle SubgroupHandle::trivial(const Group& g) { return SubgroupHandle(g, {g.identity()}, false); }

}  // namespace grouptrix
