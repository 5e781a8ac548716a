#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "grouptrix/group.hpp"
#include "grouptrix/permutation.hpp"

namespace grouptrix {

/// Group given by closed-form multiplication.
class FunctionRep : public Representation {
 public:
  using MulFn = std::function<Elem(Elem, Elem)>;
  using DescribeFn = std::function<std::string(Elem)>;

  FunctionRep(std::uint32_t n, Elem identity, MulFn mul, DescribeFn describe, std::vector<Elem> gens)
      : n_(n), id_(identity), mul_(std::move(mul)), describe_(std::move(describe)), gens_(std::move(gens)) {}

  std::uint32_t order() const override { return n_; }
  Elem identity() const override { return id_; }
  Elem mul(Elem a, Elem b) const override { return mul_(a, b); }
  std::string describe(Elem a) const override { return describe_ ? describe_(a) : Representation::describe(a); }
  std::vector<Elem> generators() const override { return gens_; }

 private:
  std::uint32_t n_;
  Elem id_;
  MulFn mul_;
  DescribeFn describe_;
  std::vector<Elem> gens_;
};

/// Permutation group enumerated from generators. Element 0 is the identity.
/// Products are located through the images of a base (points whose images
/// distinguish all elements).
class PermRep : public Representation {
 public:
  PermRep(std::vector<Perm> gens, std::size_t cap);

  std::uint32_t order() const override { return n_; }
  Elem identity() const override { return 0; }
  Elem mul(Elem a, Elem b) const override;
  std::string describe(Elem a) const override { return perm::format(perm(a)); }
  std::vector<Elem> generators() const override { return gen_index_; }

  std::size_t degree() const { return deg_; }
  Perm perm(Elem a) const;
  std::optional<Elem> index_of(const Perm& p) const;
  const std::vector<std::uint32_t>& base() const { return base_; }

 private:
  std::uint64_t key_of(const std::uint8_t* images) const;
  Elem lookup(std::uint64_t key) const;

  std::size_t deg_ = 0;
  std::uint32_t n_ = 0;
  std::vector<std::uint8_t> points_;  // n_ rows of deg_ images
  std::vector<std::uint32_t> base_;
  std::vector<std::uint32_t> direct_;  // key -> index when the key space is small
  std::unordered_map<std::uint64_t, Elem> map_;
  std::vector<Elem> gen_index_;
};

Group make_cyclic(std::uint32_t n);
/// Dihedral group of the given order (2n).
Group make_dihedral(std::uint32_t order);
/// Dicyclic group of order 4m; generalized quaternion when m is a power of 2.
Group make_generalized_quaternion(std::uint32_t order);
Group make_symmetric(std::uint32_t n);
Group make_alternating(std::uint32_t n);
Group make_klein_four();
Group make_elementary_abelian(std::uint32_t p, std::uint32_t k);
/// Non-abelian group of order p^3 and exponent p^2, p an odd prime; a = index 1, b = index p^2.
Group make_modular_p3(std::uint32_t p);
/// Index of (a, b) is a * |B| + b.
Group make_direct_product(const Group& a, const Group& b);
Group make_psl2(std::uint32_t q);
Group make_sl2(std::uint32_t q);
/// PSL(3,q) for prime q, acting on the points of the projective plane.
Group make_psl3(std::uint32_t q);
Group make_mathieu11();
Group make_from_cayley_table(const std::vector<std::vector<Elem>>& table, std::string label = "cayley");
Group make_from_permutations(const std::vector<Perm>& gens, std::string label = "perm",
                             std::size_t cap = 1000000);

/// Reads "n" then n rows of n indices.
std::vector<std::vector<Elem>> read_cayley_table(const std::string& path);
/// One cycle-notation permutation per line; blank lines and '#' comments skipped.
std::vector<Perm> read_permutations(const std::string& path);

/// Builds a group from the descriptor language: cyclic:n, dihedral:n, q8,
/// genq:4m, sym:n, alt:n, v4, elab:p,k, modp3:p, psl2:q, sl2:q, psl3:q, m11,
/// prod(a,b), file:path, perm:path. Throws SpecError on bad input.
Group make_group(const std::string& spec);

/// Central extension H with central subgroup Z such that H/Z realises G.
struct Cover {
  Group h;
  SubgroupHandle z;
  std::string label;
};

/// Parses "<group spec>,center" or "<group spec>,trivial".
Cover parse_cover(const std::string& text);

/// Cover shipped with the library for a group descriptor, if any.
std::optional<Cover> builtin_cover(const std::string& spec);

}  // namespace grouptrix
