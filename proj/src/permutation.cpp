#include "grouptrix/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "grouptrix/errors.hpp"

namespace grouptrix::perm {

Perm identity(std::size_t deg) {
  Perm p(deg);
  std::iota(p.begin(), p.end(), 0u);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = b[a[i]];
  return r;
}

Perm inverse(const Perm& a) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint32_t>(i);
  return r;
}

Perm power(const Perm& a, long long e) {
  Perm base = e < 0 ? inverse(a) : a;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Perm r = identity(a.size());
  while (k) {
    if (k & 1) r = compose(r, base);
    base = compose(base, base);
    k >>= 1;
  }
  return r;
}

bool is_identity(const Perm& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != i) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> cycles(const Perm& a) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<char> seen(a.size(), 0);
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    if (seen[i] || a[i] == i) continue;
    std::vector<std::uint32_t> c;
    for (std::uint32_t x = i; !seen[x]; x = a[x]) {
      seen[x] = 1;
      c.push_back(x);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::size_t> cycle_type(const Perm& a) {
  std::vector<std::size_t> t;
  for (auto& c : cycles(a)) t.push_back(c.size());
  std::sort(t.rbegin(), t.rend());
  return t;
}

bool is_even(const Perm& a) {
  std::size_t transpositions = 0;
  for (auto& c : cycles(a)) transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

std::uint64_t order(const Perm& a) {
  std::uint64_t r = 1;
  for (auto len : cycle_type(a)) r = std::lcm(r, static_cast<std::uint64_t>(len));
  return r;
}

std::vector<std::uint32_t> support(const Perm& a) {
  std::vector<std::uint32_t> s;
  for (std::uint32_t i = 0; i < a.size(); ++i)
    if (a[i] != i) s.push_back(i);
  return s;
}

Perm parse(const std::string& text, std::size_t deg) {
  std::vector<std::vector<std::uint32_t>> cyc;
  std::size_t i = 0, maxpt = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw SpecError("permutation: expected '(' in \"" + text + "\"");
    ++i;
    std::vector<std::uint32_t> c;
    while (true) {
      skip_ws();
      if (i >= text.size()) throw SpecError("permutation: unterminated cycle in \"" + text + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw SpecError("permutation: unexpected character in \"" + text + "\"");
      std::size_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        if (v > 100000) throw SizeGuardError("permutation: point too large");
        ++i;
      }
      if (v == 0) throw SpecError("permutation: points are 1-based");
      maxpt = std::max(maxpt, v);
      c.push_back(static_cast<std::uint32_t>(v - 1));
    }
    cyc.push_back(std::move(c));
    skip_ws();
  }
  Perm p = identity(std::max(deg, maxpt));
  for (auto& c : cyc) {
    std::vector<std::uint32_t> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw SpecError("permutation: repeated point in a cycle of \"" + text + "\"");
    // Successive cycles compose left to right.
    p = compose(p, cycle(p.size(), c));
  }
  return p;
}

std::string format(const Perm& a) {
  auto cs = cycles(a);
  if (cs.empty()) return "()";
  std::string s;
  for (auto& c : cs) {
    s += '(';
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(c[j] + 1);
    }
    s += ')';
  }
  return s;
}

Perm cycle(std::size_t deg, const std::vector<std::uint32_t>& points) {
  Perm p = identity(deg);
  for (std::size_t j = 0; j < points.size(); ++j) p[points[j]] = points[(j + 1) % points.size()];
  return p;
}

std::vector<std::vector<std::uint32_t>> orbits(const std::vector<Perm>& gens, std::size_t deg) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<char> seen(deg, 0);
  for (std::uint32_t s = 0; s < deg; ++s) {
    if (seen[s]) continue;
    std::vector<std::uint32_t> orb{s};
    seen[s] = 1;
    for (std::size_t k = 0; k < orb.size(); ++k)
      for (auto& g : gens) {
        std::uint32_t y = g[orb[k]];
        if (!seen[y]) {
          seen[y] = 1;
          orb.push_back(y);
        }
      }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

}  // namespace grouptrix::perm
