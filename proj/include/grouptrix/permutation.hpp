#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grouptrix {

// A permutation of {0..deg-1} stored as its image list.
using Perm = std::vector<std::uint32_t>;

namespace perm {

Perm identity(std::size_t deg);

// Apply a first, then b: x^(ab) = (x^a)^b.
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
Perm power(const Perm& a, long long e);

bool is_identity(const Perm& a);
bool is_even(const Perm& a);
std::uint64_t order(const Perm& a);

// Cycle lengths of nontrivial cycles, descending.
std::vector<std::size_t> cycle_type(const Perm& a);
std::vector<std::vector<std::uint32_t>> cycles(const Perm& a);
std::vector<std::uint32_t> support(const Perm& a);

// Cycle notation with 1-based points, e.g. "(1,2)(3,4,5)"; accepts spaces or commas as
// separators. The degree is max(deg, largest point mentioned).
Perm parse(const std::string& text, std::size_t deg = 0);

// 1-based cycle notation; "()" for the identity.
std::string format(const Perm& a);

// Cycle through the listed 0-based points in order.
Perm cycle(std::size_t deg, const std::vector<std::uint32_t>& points);

// Orbits of the group generated by gens on {0..deg-1}.
std::vector<std::vector<std::uint32_t>> orbits(const std::vector<Perm>& gens, std::size_t deg);

}  // namespace perm
}  // namespace grouptrix
