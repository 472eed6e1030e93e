#ifndef PENTHEX_ORACLE_HPP
#define PENTHEX_ORACLE_HPP

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "penthex/patch_graph.hpp"

namespace penthex {

// Development of the boundary walk on the 3-regular hexagonal tiling, in
// Eisenstein coordinates (w^2 = w - 1). The walk starts at a fixed vertex
// with a fixed direction; a degree-2 vertex turns one way, a degree-3 vertex
// the other. tau is the translation part of the walk's end-frame isometry
// relative to a rotation by -60*f5 degrees; area2 is twice the signed area
// in sqrt(3)/4 units (one hexagon = 6 units of `area6`).
struct LatticeWalk {
  std::int64_t tau_a = 0, tau_b = 0;  // tau = tau_a + tau_b * w
  std::int64_t area6 = 0;             // signed area in hexagon units, times 6
};
LatticeWalk lattice_walk(const BoundaryCode& c);

// Exact closure of the developed walk; a hexagonal patch with this boundary
// code can only exist if the walk returns to its start (f5 = 0 case).
bool lattice_walk_closes(const BoundaryCode& c);

// Sound quick rejections: f5 < 0, n < 5, an inner face would need more than
// six edges, the f5 = 0 walk fails closure or area accounting, or the
// f5 >= 1 end-frame isometry cannot be written as a product of f5 unit
// rotations about face centers of the tiling.
bool obviously_unrealizable(const BoundaryCode& c);

// Exhaustive patch search by face-by-face filling with backtracking.
struct SearchConfig {
  bool allow_pentagons = true;
  int face_budget = 0;  // 0 selects the default n*n
  bool collect_witnesses = true;
  int witness_cap = 1 << 30;
};

// memo for hexagonal-hole existence, shareable across queries in one thread
struct HexMemo {
  std::unordered_map<std::string, bool> known;
};

// All patches with the given boundary code, anchored so that
// boundary_code_of(result) equals `c` index-wise from the start vertex;
// deduplicated by fixed-boundary equivalence and truncated at witness_cap.
// Branches that would exceed face_budget are abandoned. Throws Inconsistent
// when allow_pentagons is false but f5 != 0.
std::vector<Patch> fill_search(const BoundaryCode& c, const SearchConfig& cfg);

// existence only, with early exit and optional hex-hole memo
bool fill_exists(const BoundaryCode& c, const SearchConfig& cfg, HexMemo* memo = nullptr);

// Does a hexagonal patch with this boundary code exist? Fast prechecks
// (f5 = 0, even length, lattice closure) then fill_search without pentagons.
bool exists_hex(const BoundaryCode& c, HexMemo* memo = nullptr);

// number of fixed-boundary equivalence classes of solutions, saturating
int count_distinct(const BoundaryCode& c, int cap);

}  // namespace penthex

#endif
