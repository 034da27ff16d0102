#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace gammal {

class FiniteGroup;

// Element scans that dominate the cost of the lattice and automorphism
// machinery. Each kernel has a serial reference implementation and an
// OpenMP variant; both write results into preallocated slots indexed by the
// input position, so outputs are identical and deterministic either way.
namespace kernels {

enum class Mode { serial, parallel };

Mode default_mode();
void set_default_mode(Mode m);

/// Indices g with g*s == s*g for every s in subset, ascending.
std::vector<std::uint32_t> centralizer_scan(const FiniteGroup& g,
                                            const std::vector<std::uint32_t>& subset, Mode mode);

/// Distinct commutators [a,b] over A x B, sorted ascending.
std::vector<std::uint32_t> pair_commutators(const FiniteGroup& g,
                                            const std::vector<std::uint32_t>& a,
                                            const std::vector<std::uint32_t>& b, Mode mode);

/// Does map respect products everywhere? map must be a full index map.
bool hom_law_holds(const FiniteGroup& domain, const FiniteGroup& codomain,
                   const std::vector<std::uint32_t>& map, Mode mode);

/// Chermak-Delgado measures |H| * |C_G(H)| for a list of subgroup index sets.
std::vector<std::uint64_t> measure_scan(const FiniteGroup& g,
                                        const std::vector<std::vector<std::uint32_t>>& subgroup_sets,
                                        Mode mode);

/// Generic deterministic filter: flags[i] = pred(i).
std::vector<char> filter_scan(std::size_t n, const std::function<bool(std::size_t)>& pred,
                              Mode mode);

} // namespace kernels

} // namespace gammal
