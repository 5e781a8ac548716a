#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grouptrix/graph.hpp"

namespace grouptrix {

enum class TwinType { Open, Closed };

std::string to_string(TwinType t);

/// Classes of identical open (N(v)) or closed (N[v]) neighbourhoods, ordered by smallest member.
std::vector<std::vector<std::size_t>> twin_classes(const Graph& g, TwinType type);

bool is_twin_free(const Graph& g);

/// One merge, in the vertex numbering of the start graph.
struct MergeStep {
  std::size_t kept = 0;
  std::size_t merged = 0;
  TwinType type = TwinType::Closed;
};

struct ReductionTrace {
  Graph start;
  std::vector<MergeStep> steps;
  Graph result;                        // induced on survivors, in increasing start index
  std::vector<std::size_t> survivors;  // start indices of result vertices
  std::vector<std::size_t> class_map;  // start vertex -> result vertex
};

enum class ReductionOrder {
  Deterministic,      // lexicographically least twin pair first
  SeededRandom,       // uniformly chosen twin class and pair, from the seed
  AlternatingRounds,  // exhaust closed twins, then open twins, repeat
};

/// Twin reduction to a twin-free graph. The smaller index of a merged pair survives.
ReductionTrace cokernel(const Graph& g, ReductionOrder order = ReductionOrder::Deterministic, std::uint64_t seed = 0);

/// Re-executes the steps, checking each merge; throws Error on an invalid step.
Graph replay(const ReductionTrace& t);

/// Runs `trials` seeded-random reductions and checks the results are pairwise isomorphic. n <= 64.
bool confluence_test(const Graph& g, int trials, std::uint64_t seed);

/// "MERGE kept merged open|closed" lines.
std::string format_trace(const ReductionTrace& t);

}  // namespace grouptrix
