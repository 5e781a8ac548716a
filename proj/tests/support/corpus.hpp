#pragma once

// Built-in group corpus and the structural property suite run over it.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grouptrix/group.hpp"

namespace corpus {

struct Entry {
  std::string spec;
  std::uint32_t order = 0;
  // Factor specs when the entry is a direct product.
  std::optional<std::pair<std::string, std::string>> factors;
};

/// Constructor groups of order <= 660 and direct products up to order 2000.
const std::vector<Entry>& entries();
std::vector<Entry> up_to(std::uint32_t max_order);

struct Outcome {
  std::string property;
  std::size_t checked = 0;            // instances evaluated
  std::vector<std::string> failures;  // one line per violated instance
  bool ok() const { return failures.empty(); }
};

// Each check evaluates one property on one group and appends to the outcome.
void inclusion_chain(const grouptrix::Group& g, const Entry& e, Outcome& out);
void pow_epow_iff_gk_null(const grouptrix::Group& g, const Entry& e, Outcome& out);
void epow_com_iff_no_cpcp(const grouptrix::Group& g, const Entry& e, Outcome& out);
void maximal_cliques_are_subgroups(const grouptrix::Group& g, const Entry& e, Outcome& out);
void gk_edge_iff_clique_divisible(const grouptrix::Group& g, const Entry& e, Outcome& out);
void centreless_com_iff_gk(const grouptrix::Group& g, const Entry& e, Outcome& out);
void centreless_four_way(const grouptrix::Group& g, const Entry& e, Outcome& out);
void product_identities(const grouptrix::Group& g, const Entry& e, Outcome& out);
void hypercentre_is_nilp_centre(const grouptrix::Group& g, const Entry& e, Outcome& out);
void engel_level1_is_com(const grouptrix::Group& g, const Entry& e, Outcome& out);
void small_graph_confluence(const grouptrix::Group& g, const Entry& e, Outcome& out);
void small_graph_cograph_iff_trivial_cokernel(const grouptrix::Group& g, const Entry& e, Outcome& out);

using Check = void (*)(const grouptrix::Group&, const Entry&, Outcome&);

struct Property {
  std::string name;
  Check check;
};

const std::vector<Property>& properties();

/// Runs every property over the entries; one outcome per property.
std::vector<Outcome> run_all(const std::vector<Entry>& entries);

}  // namespace corpus
