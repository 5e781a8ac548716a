#include "grouptrix/constructions.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include "grouptrix/arith.hpp"
#include "grouptrix/errors.hpp"
#include "grouptrix/field.hpp"
#include "grouptrix/group_algorithms.hpp"

namespace grouptrix {

// ---------------------------------------------------------------- PermRep

PermRep::PermRep(std::vector<Perm> gens, std::size_t cap) {
  deg_ = 1;
  for (auto& g : gens) deg_ = std::max(deg_, g.size());
  if (deg_ > 255) throw SizeGuardError("permutation degree above 255 is not supported");
  for (auto& g : gens) {
    std::size_t old = g.size();
    g.resize(deg_);
    for (std::size_t i = old; i < deg_; ++i) g[i] = static_cast<std::uint32_t>(i);
  }

  std::unordered_map<std::string, Elem> seen;
  auto row_string = [&](Elem e) {
    return std::string(reinterpret_cast<const char*>(&points_[std::size_t{e} * deg_]), deg_);
  };
  points_.resize(deg_);
  for (std::size_t i = 0; i < deg_; ++i) points_[i] = static_cast<std::uint8_t>(i);
  seen.emplace(row_string(0), 0);
  n_ = 1;
  std::vector<std::uint8_t> fresh(deg_);
  for (Elem k = 0; k < n_; ++k) {
    for (auto& g : gens) {
      const std::uint8_t* row = &points_[std::size_t{k} * deg_];
      for (std::size_t x = 0; x < deg_; ++x) fresh[x] = static_cast<std::uint8_t>(g[row[x]]);
      std::string s(reinterpret_cast<const char*>(fresh.data()), deg_);
      if (seen.count(s)) continue;
      if (n_ >= cap) throw SizeGuardError("generator closure exceeds " + std::to_string(cap) + " elements");
      seen.emplace(std::move(s), n_);
      points_.insert(points_.end(), fresh.begin(), fresh.end());
      ++n_;
    }
  }
  for (auto& g : gens) {
    std::string s(deg_, '\0');
    for (std::size_t x = 0; x < deg_; ++x) s[x] = static_cast<char>(g[x]);
    Elem e = seen.at(s);
    if (e != 0 && std::find(gen_index_.begin(), gen_index_.end(), e) == gen_index_.end()) gen_index_.push_back(e);
  }

  // Greedy base by partition refinement of the elements.
  std::vector<std::uint64_t> cls(n_, 0);
  std::size_t classes = 1;
  std::vector<char> used(deg_, 0);
  std::vector<std::uint64_t> keys(n_);
  while (classes < n_) {
    std::size_t best = deg_, best_count = classes;
    for (std::size_t x = 0; x < deg_; ++x) {
      if (used[x]) continue;
      for (Elem e = 0; e < n_; ++e) keys[e] = cls[e] * deg_ + points_[std::size_t{e} * deg_ + x];
      std::sort(keys.begin(), keys.end());
      std::size_t c = static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
      if (c > best_count) {
        best_count = c;
        best = x;
      }
    }
    if (best == deg_) throw Error("no base found for permutation group");
    used[best] = 1;
    base_.push_back(static_cast<std::uint32_t>(best));
    for (Elem e = 0; e < n_; ++e) keys[e] = cls[e] * deg_ + points_[std::size_t{e} * deg_ + best];
    std::vector<std::uint64_t> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Elem e = 0; e < n_; ++e)
      cls[e] = static_cast<std::uint64_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[e]) - sorted.begin());
    classes = sorted.size();
  }

  long double space = 1;
  for (std::size_t i = 0; i < base_.size(); ++i) space *= static_cast<long double>(deg_);
  const bool direct = space <= static_cast<long double>(1u << 24);
  if (direct) direct_.assign(static_cast<std::size_t>(space), n_);
  std::vector<std::uint8_t> img(base_.size());
  for (Elem e = 0; e < n_; ++e) {
    for (std::size_t i = 0; i < base_.size(); ++i) img[i] = points_[std::size_t{e} * deg_ + base_[i]];
    std::uint64_t k = key_of(img.data());
    if (direct)
      direct_[k] = e;
    else
      map_.emplace(k, e);
  }
}

std::uint64_t PermRep::key_of(const std::uint8_t* images) const {
  std::uint64_t k = 0;
  for (std::size_t i = base_.size(); i-- > 0;) k = k * deg_ + images[i];
  return k;
}

Elem PermRep::lookup(std::uint64_t key) const {
  if (!direct_.empty()) return direct_[key];
  auto it = map_.find(key);
  return it == map_.end() ? n_ : it->second;
}

Elem PermRep::mul(Elem a, Elem b) const {
  std::uint8_t img[64];
  std::vector<std::uint8_t> big;
  std::uint8_t* out = img;
  if (base_.size() > 64) {
    big.resize(base_.size());
    out = big.data();
  }
  const std::uint8_t* ra = &points_[std::size_t{a} * deg_];
  const std::uint8_t* rb = &points_[std::size_t{b} * deg_];
  for (std::size_t i = 0; i < base_.size(); ++i) out[i] = rb[ra[base_[i]]];
  return lookup(key_of(out));
}

Perm PermRep::perm(Elem a) const {
  Perm p(deg_);
  for (std::size_t x = 0; x < deg_; ++x) p[x] = points_[std::size_t{a} * deg_ + x];
  return p;
}

std::optional<Elem> PermRep::index_of(const Perm& p) const {
  if (p.size() > deg_) {
    for (std::size_t x = deg_; x < p.size(); ++x)
      if (p[x] != x) return std::nullopt;
  }
  std::vector<std::uint8_t> img(base_.size());
  for (std::size_t i = 0; i < base_.size(); ++i) img[i] = static_cast<std::uint8_t>(base_[i] < p.size() ? p[base_[i]] : base_[i]);
  Elem e = lookup(key_of(img.data()));
  if (e >= n_) return std::nullopt;
  for (std::size_t x = 0; x < deg_; ++x) {
    std::uint32_t want = x < p.size() ? p[x] : static_cast<std::uint32_t>(x);
    if (points_[std::size_t{e} * deg_ + x] != want) return std::nullopt;
  }
  return e;
}

// ---------------------------------------------------------------- closed forms

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw SpecError(msg);
}

Group checked_order(Group g, std::uint64_t expected) {
  if (g.order() != expected)
    throw Error(g.label() + ": constructed order " + std::to_string(g.order()) + ", expected " +
                std::to_string(expected));
  return g;
}

}  // namespace

Group make_cyclic(std::uint32_t n) {
  require(n >= 1 && n <= 1000000, "cyclic: n must be in 1..10^6");
  auto rep = std::make_shared<FunctionRep>(
      n, 0, [n](Elem a, Elem b) { return static_cast<Elem>((std::uint64_t{a} + b) % n); },
      [](Elem a) { return a == 0 ? std::string("1") : "a^" + std::to_string(a); },
      n > 1 ? std::vector<Elem>{1} : std::vector<Elem>{});
  return Group(rep, "C" + std::to_string(n));
}

Group make_dihedral(std::uint32_t order) {
  require(order >= 2 && order % 2 == 0 && order <= 1000000, "dihedral: order must be even, 2..10^6");
  const std::uint32_t n = order / 2;
  // r^i s^j at index i + n j.
  auto rep = std::make_shared<FunctionRep>(
      order, 0,
      [n](Elem a, Elem b) {
        std::uint32_t i = a % n, j = a / n, k = b % n, l = b / n;
        std::uint32_t r = j ? (i + n - k) % n : (i + k) % n;
        return static_cast<Elem>(r + n * ((j + l) % 2));
      },
      [n](Elem a) {
        std::uint32_t i = a % n, j = a / n;
        if (a == 0) return std::string("1");
        std::string s = i ? "r^" + std::to_string(i) : "";
        return j ? s + "s" : s;
      },
      n > 1 ? std::vector<Elem>{1, n} : std::vector<Elem>{n});
  return Group(rep, "D" + std::to_string(order));
}

Group make_generalized_quaternion(std::uint32_t order) {
  require(order >= 8 && order % 4 == 0 && order <= 1000000, "genq: order must be a multiple of 4, at least 8");
  const std::uint32_t m = order / 4, n2 = 2 * m;
  // a^i b^j at index i + 2m j, with b a = a^-1 b and b^2 = a^m.
  auto rep = std::make_shared<FunctionRep>(
      order, 0,
      [m, n2](Elem x, Elem y) {
        std::uint32_t i = x % n2, j = x / n2, k = y % n2, l = y / n2;
        std::uint32_t e = j ? (i + n2 - k) % n2 : (i + k) % n2;
        std::uint32_t t = j + l;
        if (t == 2) {
          e = (e + m) % n2;
          t = 0;
        }
        return static_cast<Elem>(e + n2 * t);
      },
      [n2](Elem x) {
        std::uint32_t i = x % n2, j = x / n2;
        if (x == 0) return std::string("1");
        std::string s = i ? "a^" + std::to_string(i) : "";
        return j ? s + "b" : s;
      },
      std::vector<Elem>{1, n2});
  bool two_power = (order & (order - 1)) == 0;
  return Group(rep, (two_power ? "Q" : "Dic") + std::to_string(order));
}

Group make_symmetric(std::uint32_t n) {
  require(n >= 1 && n <= 9, "sym: n must be in 1..9");
  std::vector<Perm> gens;
  if (n >= 2) {
    gens.push_back(perm::cycle(n, {0, 1}));
    std::vector<std::uint32_t> all(n);
    for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
    gens.push_back(perm::cycle(n, all));
  }
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return checked_order(make_from_permutations(gens, "S" + std::to_string(n)), f);
}

Group make_alternating(std::uint32_t n) {
  require(n >= 1 && n <= 9, "alt: n must be in 1..9");
  std::vector<Perm> gens;
  if (n >= 3) {
    gens.push_back(perm::cycle(n, {0, 1, 2}));
    std::vector<std::uint32_t> pts;
    for (std::uint32_t i = (n % 2 ? 0 : 1); i < n; ++i) pts.push_back(i);
    if (n > 3) gens.push_back(perm::cycle(n, pts));
  }
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return checked_order(make_from_permutations(gens, "A" + std::to_string(n)), n >= 2 ? f / 2 : 1);
}

Group make_klein_four() {
  auto rep = std::make_shared<FunctionRep>(
      4, 0, [](Elem a, Elem b) { return a ^ b; },
      [](Elem a) { return std::string(a == 0 ? "1" : a == 1 ? "x" : a == 2 ? "y" : "xy"); },
      std::vector<Elem>{1, 2});
  return Group(rep, "V4");
}

Group make_elementary_abelian(std::uint32_t p, std::uint32_t k) {
  require(arith::is_prime(p) && k >= 1, "elab: need a prime p and k >= 1");
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    n *= p;
    require(n <= 1000000, "elab: order above 10^6");
  }
  std::vector<Elem> gens;
  for (std::uint64_t e = 1; e < n; e *= p) gens.push_back(static_cast<Elem>(e));
  auto rep = std::make_shared<FunctionRep>(
      static_cast<std::uint32_t>(n), 0,
      [p](Elem a, Elem b) {
        Elem r = 0, scale = 1;
        while (a || b) {
          r += ((a % p + b % p) % p) * scale;
          a /= p;
          b /= p;
          scale *= p;
        }
        return r;
      },
      [p, k](Elem a) {
        std::string s = "(";
        for (std::uint32_t i = 0; i < k; ++i) {
          if (i) s += ",";
          s += std::to_string(a % p);
          a /= p;
        }
        return s + ")";
      },
      gens);
  return Group(rep, "E" + std::to_string(p) + "^" + std::to_string(k));
}

Group make_modular_p3(std::uint32_t p) {
  require(arith::is_prime(p) && p % 2 == 1 && p <= 97, "modp3: p must be an odd prime <= 97");
  const std::uint32_t p2 = p * p;
  // pw[j] = (1+p)^j mod p^2
  std::vector<std::uint32_t> pw(p);
  pw[0] = 1;
  for (std::uint32_t j = 1; j < p; ++j) pw[j] = pw[j - 1] * (1 + p) % p2;
  auto rep = std::make_shared<FunctionRep>(
      p2 * p, 0,
      [p, p2, pw](Elem x, Elem y) {
        std::uint32_t i = x % p2, j = x / p2, k = y % p2, l = y / p2;
        return static_cast<Elem>((i + k * pw[j]) % p2 + p2 * ((j + l) % p));
      },
      [p2](Elem x) {
        std::uint32_t i = x % p2, j = x / p2;
        if (x == 0) return std::string("1");
        std::string s = i ? "a^" + std::to_string(i) : "";
        if (j) s += "b^" + std::to_string(j);
        return s;
      },
      std::vector<Elem>{1, p2});
  return Group(rep, "M" + std::to_string(p2 * p));
}

Group make_direct_product(const Group& a, const Group& b) {
  const std::uint64_t n = std::uint64_t{a.order()} * b.order();
  require(n <= 1000000, "prod: order above 10^6");
  const std::uint32_t nb = b.order();
  std::vector<Elem> gens;
  for (Elem g : a.generators()) gens.push_back(g * nb + b.identity());
  for (Elem h : b.generators()) gens.push_back(a.identity() * nb + h);
  auto rep = std::make_shared<FunctionRep>(
      static_cast<std::uint32_t>(n), a.identity() * nb + b.identity(),
      [a, b, nb](Elem x, Elem y) { return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb); },
      [a, b, nb](Elem x) { return "(" + a.describe(x / nb) + "," + b.describe(x % nb) + ")"; }, gens);
  return Group(rep, a.label() + "x" + b.label());
}

Group make_sl2(std::uint32_t q) {
  auto fp = std::make_shared<FiniteField>(FiniteField::of_order(q));
  const FiniteField& f = *fp;
  require(std::uint64_t{q} * q * q * q <= (1u << 24), "sl2: q too large");
  std::vector<std::array<std::uint32_t, 4>> el;
  el.push_back({1, 0, 0, 1});
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c)
        for (std::uint32_t d = 0; d < q; ++d) {
          if (a == 1 && b == 0 && c == 0 && d == 1) continue;
          if (f.sub(f.mul(a, d), f.mul(b, c)) == 1) el.push_back({a, b, c, d});
        }
  auto index = std::make_shared<std::vector<Elem>>(std::size_t{q} * q * q * q, 0);
  for (Elem i = 0; i < el.size(); ++i) {
    auto& m = el[i];
    (*index)[((std::size_t{m[0]} * q + m[1]) * q + m[2]) * q + m[3]] = i;
  }
  auto els = std::make_shared<std::vector<std::array<std::uint32_t, 4>>>(std::move(el));
  auto rep = std::make_shared<FunctionRep>(
      static_cast<std::uint32_t>(els->size()), 0,
      [fp, els, index, q](Elem x, Elem y) {
        const FiniteField& F = *fp;
        auto& m = (*els)[x];
        auto& n = (*els)[y];
        std::uint32_t a = F.add(F.mul(m[0], n[0]), F.mul(m[1], n[2]));
        std::uint32_t b = F.add(F.mul(m[0], n[1]), F.mul(m[1], n[3]));
        std::uint32_t c = F.add(F.mul(m[2], n[0]), F.mul(m[3], n[2]));
        std::uint32_t d = F.add(F.mul(m[2], n[1]), F.mul(m[3], n[3]));
        return (*index)[((std::size_t{a} * q + b) * q + c) * q + d];
      },
      [fp, els](Elem x) {
        auto& m = (*els)[x];
        return "[" + fp->describe(m[0]) + " " + fp->describe(m[1]) + "; " + fp->describe(m[2]) + " " +
               fp->describe(m[3]) + "]";
      },
      std::vector<Elem>{});
  return checked_order(Group(rep, "SL(2," + std::to_string(q) + ")"),
                       std::uint64_t{q} * (std::uint64_t{q} * q - 1));
}

Group make_psl2(std::uint32_t q) {
  FiniteField f = FiniteField::of_order(q);
  require(q + 1 <= 255, "psl2: q too large");
  const std::uint32_t inf = q;
  Perm t(q + 1), m(q + 1), w(q + 1);
  // lambda^2 keeps the generated group inside PSL when q is odd.
  const std::uint32_t mu = f.mul(f.primitive(), f.primitive());
  for (std::uint32_t x = 0; x < q; ++x) {
    t[x] = f.add(x, 1);
    m[x] = f.mul(mu, x);
    w[x] = x == 0 ? inf : f.neg(f.inv(x));
  }
  t[inf] = inf;
  m[inf] = inf;
  w[inf] = 0;
  std::uint64_t expected = std::uint64_t{q} * (std::uint64_t{q} * q - 1) / arith::gcd(2, q - 1);
  return checked_order(make_from_permutations({t, m, w}, "PSL(2," + std::to_string(q) + ")"), expected);
}

Group make_psl3(std::uint32_t q) {
  require(arith::is_prime(q) && q * q + q + 1 <= 255, "psl3: q must be a prime with q^2+q+1 <= 255");
  std::vector<std::array<std::uint32_t, 3>> pts;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c) {
        std::array<std::uint32_t, 3> v{a, b, c};
        std::uint32_t lead = a ? a : b ? b : c;
        if (lead == 1) pts.push_back(v);
      }
  auto normalize = [&](std::array<std::uint32_t, 3> v) {
    std::uint32_t lead = v[0] ? v[0] : v[1] ? v[1] : v[2];
    std::uint32_t inv = 1;
    while (lead * inv % q != 1) ++inv;
    for (auto& x : v) x = x * inv % q;
    return v;
  };
  std::vector<Perm> gens;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      // Row vector times I + E_ij adds coordinate i to coordinate j.
      Perm p(pts.size());
      for (std::size_t k = 0; k < pts.size(); ++k) {
        auto v = pts[k];
        v[j] = (v[j] + v[i]) % q;
        v = normalize(v);
        p[k] = static_cast<std::uint32_t>(std::find(pts.begin(), pts.end(), v) - pts.begin());
      }
      gens.push_back(p);
    }
  std::uint64_t q3 = std::uint64_t{q} * q * q;
  std::uint64_t expected = q3 * (q3 - 1) * (std::uint64_t{q} * q - 1) / arith::gcd(3, q - 1);
  return checked_order(make_from_permutations(gens, "PSL(3," + std::to_string(q) + ")", 2000000), expected);
}

Group make_mathieu11() {
  Perm a = perm::parse("(1,2,3,4,5,6,7,8,9,10,11)");
  Perm b = perm::parse("(3,7,11,8)(4,10,5,6)", 11);
  return checked_order(make_from_permutations({a, b}, "M11"), 7920);
}

Group make_from_cayley_table(const std::vector<std::vector<Elem>>& table, std::string label) {
  const std::size_t n = table.size();
  require(n >= 1 && n <= 4096, "cayley: table size must be in 1..4096");
  auto flat = std::make_shared<std::vector<Elem>>(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    require(table[i].size() == n, "cayley: row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      require(table[i][j] < n, "cayley: entry out of range");
      (*flat)[i * n + j] = table[i][j];
    }
  }
  std::optional<Elem> id;
  for (Elem e = 0; e < n && !id; ++e) {
    bool ok = true;
    for (Elem g = 0; g < n && ok; ++g) ok = (*flat)[e * n + g] == g && (*flat)[g * n + e] == g;
    if (ok) id = e;
  }
  require(id.has_value(), "cayley: table has no identity");
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<char> row(n, 0), col(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
      row[(*flat)[i * n + j]] = 1;
      col[(*flat)[j * n + i]] = 1;
    }
    for (std::size_t j = 0; j < n; ++j) require(row[j] && col[j], "cayley: table is not a Latin square");
  }
  auto rep = std::make_shared<FunctionRep>(
      static_cast<std::uint32_t>(n), *id,
      [flat, n](Elem a, Elem b) { return (*flat)[std::size_t{a} * n + b]; }, nullptr, std::vector<Elem>{});
  try {
    Group g(rep, std::move(label));
    g.validate();
    return g;
  } catch (const SpecError&) {
    throw;
  } catch (const Error& e) {
    throw SpecError(std::string("cayley: table fails the group axioms: ") + e.what());
  }
}

Group make_from_permutations(const std::vector<Perm>& gens, std::string label, std::size_t cap) {
  return Group(std::make_shared<PermRep>(gens, cap), std::move(label));
}

std::vector<std::vector<Elem>> read_cayley_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open " + path);
  long long n;
  if (!(in >> n) || n < 1 || n > 4096) throw SpecError(path + ": bad order line");
  std::vector<std::vector<Elem>> t(static_cast<std::size_t>(n), std::vector<Elem>(static_cast<std::size_t>(n)));
  for (auto& row : t)
    for (auto& x : row) {
      long long v;
      if (!(in >> v) || v < 0 || v >= n) throw SpecError(path + ": bad or missing table entry");
      x = static_cast<Elem>(v);
    }
  return t;
}

std::vector<Perm> read_permutations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open " + path);
  std::vector<Perm> gens;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    gens.push_back(perm::parse(line));
  }
  if (gens.empty()) throw SpecError(path + ": no permutations");
  return gens;
}

// ---------------------------------------------------------------- descriptor language

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::uint32_t to_uint(const std::string& s, const std::string& what) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw SpecError(what + ": expected a positive integer, got \"" + s + "\"");
  return static_cast<std::uint32_t>(std::stoul(s));
}

}  // namespace

Group make_group(const std::string& raw) {
  const std::string spec = trim(raw);
  if (spec.rfind("prod(", 0) == 0) {
    if (spec.back() != ')') throw SpecError("prod: missing ')'");
    std::string inner = spec.substr(5, spec.size() - 6);
    int depth = 0;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        std::string left = inner.substr(0, i);
        // A top-level comma may belong to elab:p,k; split at the first comma whose left side parses.
        try {
          Group a = make_group(left);
          Group b = make_group(inner.substr(i + 1));
          return make_direct_product(a, b);
        } catch (const SpecError&) {
          continue;
        }
      }
    }
    throw SpecError("prod: expected prod(a,b), got \"" + spec + "\"");
  }
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  std::transform(head.begin(), head.end(), head.begin(), [](unsigned char c) { return std::tolower(c); });
  if (colon == std::string::npos) {
    if (head == "q8") return make_generalized_quaternion(8);
    if (head == "v4") return make_klein_four();
    if (head == "m11") return make_mathieu11();
    throw SpecError("unknown group descriptor \"" + spec + "\"");
  }
  if (head == "cyclic") return make_cyclic(to_uint(arg, head));
  if (head == "dihedral") return make_dihedral(to_uint(arg, head));
  if (head == "genq") return make_generalized_quaternion(to_uint(arg, head));
  if (head == "sym") return make_symmetric(to_uint(arg, head));
  if (head == "alt") return make_alternating(to_uint(arg, head));
  if (head == "modp3") return make_modular_p3(to_uint(arg, head));
  if (head == "psl2" || head == "sl2" || head == "psl3") {
    std::uint32_t q = to_uint(arg, head);
    if (arith::prime_power(q).first == 0) throw SpecError(head + ": " + arg + " is not a prime power");
    if (head == "psl2") return make_psl2(q);
    if (head == "sl2") return make_sl2(q);
    return make_psl3(q);
  }
  if (head == "elab") {
    auto comma = arg.find(',');
    if (comma == std::string::npos) throw SpecError("elab: expected elab:p,k");
    return make_elementary_abelian(to_uint(arg.substr(0, comma), head), to_uint(arg.substr(comma + 1), head));
  }
  if (head == "file") return make_from_cayley_table(read_cayley_table(arg), arg);
  if (head == "perm") return make_from_permutations(read_permutations(arg), arg);
  throw SpecError("unknown group descriptor \"" + spec + "\"");
}

Cover parse_cover(const std::string& text) {
  auto comma = text.rfind(',');
  if (comma == std::string::npos) throw SpecError("cover: expected <group>,center or <group>,trivial");
  std::string kind = trim(text.substr(comma + 1));
  Group h = make_group(text.substr(0, comma));
  if (kind == "center" || kind == "centre") return Cover{h, center(h), text};
  if (kind == "trivial") return Cover{h, SubgroupHandle::trivial(h), text};
  throw SpecError("cover: unknown central subgroup \"" + kind + "\"");
}

std::optional<Cover> builtin_cover(const std::string& raw) {
  const std::string spec = trim(raw);
  auto colon = spec.find(':');
  std::string head = spec.substr(0, colon);
  if (spec == "alt:5") return parse_cover("sl2:5,center");
  if (spec == "m11" || spec == "psl3:3") {
    Group g = make_group(spec);
    return Cover{g, SubgroupHandle::trivial(g), spec + ",trivial"};
  }
  if (head == "psl2" && colon != std::string::npos) {
    std::uint32_t q = to_uint(spec.substr(colon + 1), "psl2");
    auto [p, k] = arith::prime_power(q);
    if (p == 0) return std::nullopt;
    if (p == 2 && k >= 3) {
      Group g = make_psl2(q);
      return Cover{g, SubgroupHandle::trivial(g), spec + ",trivial"};
    }
    if (p != 2 && q >= 5 && q != 9) return parse_cover("sl2:" + std::to_string(q) + ",center");
  }
  return std::nullopt;
}

}  // namespace grouptrix
