#pragma once

// Finite groups over dense element indices 0..n-1.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "grouptrix/bitset.hpp"

namespace grouptrix {

using Elem = std::uint32_t;

/// Source of truth for a group's multiplication. Implementations must be
/// immutable and thread-safe after construction.
class Representation {
 public:
  virtual ~Representation() = default;
  virtual std::uint32_t order() const = 0;
  virtual Elem identity() const = 0;
  virtual Elem mul(Elem a, Elem b) const = 0;
  virtual std::string describe(Elem a) const { return "g" + std::to_string(a); }
  /// A generating set, or empty to let Group pick one.
  virtual std::vector<Elem> generators() const { return {}; }
};

/// Partition block of the relation <x> = <y>.
struct CyclicClass {
  Elem rep = 0;                 // smallest member of the block
  std::vector<Elem> block;      // elements generating the subgroup, sorted
  std::vector<Elem> subgroup;   // all members of the cyclic subgroup, sorted
};

/// Immutable finite group with eagerly built caches (orders, inverses,
/// cyclic closures). Copies share state.
class Group {
 public:
  static constexpr std::uint32_t kTableLimit = 4096;

  Group() = default;
  Group(std::shared_ptr<const Representation> rep, std::string label);

  std::uint32_t order() const { return impl_->n; }
  Elem identity() const { return impl_->identity; }
  const std::string& label() const { return impl_->label; }
  std::string describe(Elem a) const { return impl_->rep->describe(a); }
  const Representation& representation() const { return *impl_->rep; }
  bool has_table() const { return !impl_->table.empty(); }

  Elem mul(Elem a, Elem b) const {
    if (!impl_->table.empty()) return impl_->table[std::size_t{a} * impl_->n + b];
    return impl_->rep->mul(a, b);
  }
  Elem inv(Elem a) const { return impl_->inverse[a]; }
  Elem pow(Elem a, long long e) const;
  /// g^-1 x g
  Elem conj(Elem g, Elem x) const { return mul(mul(inv(g), x), g); }
  /// x^-1 y^-1 x y
  Elem commutator(Elem x, Elem y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
  bool commute(Elem x, Elem y) const { return mul(x, y) == mul(y, x); }

  std::uint32_t element_order(Elem g) const { return impl_->orders[g]; }
  const std::vector<std::uint32_t>& orders() const { return impl_->orders; }

  /// Sorted members of <g>.
  const std::vector<Elem>& cyclic(Elem g) const { return impl_->classes[impl_->class_of[g]].subgroup; }
  std::uint32_t class_of(Elem g) const { return impl_->class_of[g]; }
  const std::vector<CyclicClass>& cyclic_classes() const { return impl_->classes; }
  std::uint32_t cyclic_class_count() const { return static_cast<std::uint32_t>(impl_->classes.size()); }

  const std::vector<Elem>& generators() const { return impl_->generators; }

  bool is_abelian() const;

  /// Throws Error when a group axiom or cache invariant fails.
  void validate() const;

  bool same_as(const Group& o) const { return impl_ == o.impl_; }

 private:
  struct Impl {
    std::shared_ptr<const Representation> rep;
    std::string label;
    std::uint32_t n = 0;
    Elem identity = 0;
    std::vector<std::uint16_t> table;
    std::vector<Elem> inverse;
    std::vector<std::uint32_t> orders;
    std::vector<std::uint32_t> class_of;
    std::vector<CyclicClass> classes;
    std::vector<Elem> generators;
  };
  std::shared_ptr<const Impl> impl_;
};

/// A subgroup given by its member set.
class SubgroupHandle {
 public:
  SubgroupHandle() = default;
  /// Verifies identity, closure and Lagrange unless verify is false.
  SubgroupHandle(Group owner, std::vector<Elem> members, bool verify = true);

  static SubgroupHandle whole(const Group& g);
  static SubgroupHandle trivial(const Group& g);

  const Group& owner() const { return owner_; }
  const std::vector<Elem>& members() const { return members_; }
  const Bitset& mask() const { return mask_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Elem x) const { return mask_.test(x); }
  bool operator==(const SubgroupHandle& o) const { return members_ == o.members_; }

 private:
  Group owner_;
  std::vector<Elem> members_;
  Bitset mask_;
};

}  // namespace grouptrix
