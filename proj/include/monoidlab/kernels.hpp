// kernels.hpp -- hot loops over Cayley tables and vector sets, each with a
// serial reference implementation and an OpenMP-parallel one. The serial
// versions are the ground truth the parallel ones are tested against.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "monoidlab/element_set.hpp"

namespace monoidlab::kernels {

enum class Exec { serial, parallel };

/// Default execution policy for library callers.
inline constexpr Exec kDefaultExec = Exec::parallel;

struct Triple {
  std::uint32_t x, y, z;
};

/// First (in scan order, for serial) associativity violation of a size*size
/// row-major table, or nullopt if the table is associative. The parallel
/// variant returns some violation, not necessarily the first.
std::optional<Triple> associativity_violation(const std::vector<std::uint32_t>& table,
                                              std::uint32_t size, Exec exec);

/// For each u, the set uH = { table[u][t] : t }.
std::vector<ElementSet> right_multiple_sets(const std::vector<std::uint32_t>& table,
                                            std::uint32_t size, Exec exec);

/// For each u, the set Hu = { table[t][u] : t }.
std::vector<ElementSet> left_multiple_sets(const std::vector<std::uint32_t>& table,
                                           std::uint32_t size, Exec exec);

/// For each u, the set HuH = { table[s][table[u][t]] : s, t }.
std::vector<ElementSet> two_sided_multiple_sets(const std::vector<std::uint32_t>& table,
                                                std::uint32_t size, Exec exec);

/// A witness (u, x, v) with u or v a non-unit and u*x*v == x, or nullopt if
/// the monoid is acyclic.
std::optional<Triple> acyclicity_violation(const std::vector<std::uint32_t>& table,
                                           std::uint32_t size, const ElementSet& units,
                                           Exec exec);

/// The componentwise-minimal elements of a set of equal-dimension vectors
/// (Dickson antichain), deduplicated and sorted lexicographically.
/// Throws on empty input or ragged dimensions.
std::vector<std::vector<std::uint32_t>> dickson_minimal(
    const std::vector<std::vector<std::uint32_t>>& vectors, Exec exec);

}  // namespace monoidlab::kernels
