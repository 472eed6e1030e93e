#ifndef PENTHEX_PATCH_GRAPH_HPP
#define PENTHEX_PATCH_GRAPH_HPP

#include <string>
#include <vector>

#include "penthex/boundary_code.hpp"
#include "penthex/sequence_ops.hpp"

namespace penthex {

// Rotation-system plane graph. rot[v] lists the neighbors of v in clockwise
// order; boundary is the outer facial cycle as a vertex list in clockwise
// order, boundary[0] being the distinguished start. Faces are derived by
// tracing, never stored authoritatively.
struct PlaneGraphData {
  std::vector<std::vector<int>> rot;
  std::vector<int> boundary;
};

// All facial walks of a rotation system. The walk containing dart (u -> v)
// continues with the clockwise successor of u around v; each dart lies in
// exactly one walk. Inner faces come out anticlockwise, the outer clockwise.
std::vector<std::vector<int>> trace_faces(const std::vector<std::vector<int>>& rot);

// A validated fullerene patch: 2-connected, inner faces of length 5 or 6,
// interior degree 3, boundary degree 2 or 3, stored boundary equal to the
// outer facial cycle. Immutable after validation.
class Patch {
 public:
  static Patch validate(PlaneGraphData g);  // throws on any violation

  const std::vector<std::vector<int>>& rot() const { return g_.rot; }
  const std::vector<int>& boundary() const { return g_.boundary; }
  const std::vector<std::vector<int>>& inner_faces() const { return inner_faces_; }
  int num_vertices() const { return static_cast<int>(g_.rot.size()); }
  int num_edges() const;
  int degree(int v) const { return static_cast<int>(g_.rot[v].size()); }
  bool on_boundary(int v) const { return boundary_index_[v] >= 0; }
  int boundary_index(int v) const { return boundary_index_[v]; }

  BoundaryCode boundary_code() const;
  int f5() const;  // number of 5-faces, counted directly

 private:
  Patch() = default;
  PlaneGraphData g_;
  std::vector<std::vector<int>> inner_faces_;
  std::vector<int> boundary_index_;
};

using PatchSet = std::vector<Patch>;

Patch validate_patch(PlaneGraphData g);
BoundaryCode boundary_code_of(const Patch& p);
int f5_patch(const Patch& p);

// plain n-cycle; a valid patch for n in {5, 6}
Patch make_cycle(int n);
// same patch with boundary start moved k steps along the cycle
Patch rotate_start(const Patch& p, int k);

// max over vertices of the BFS distance to the boundary
int dist_to_boundary(const Patch& p);
int dist_to_boundary(const PatchSet& ps);

// Path u_0..u_l from the boundary into the interior whose turn sequence is
// forced by the bend: left at i iff (i <= b and i odd) or (i > b and i even).
// Only u_0 lies on the boundary. turns[i] = #right - #left after step i+1.
struct OneBendPath {
  std::vector<int> vertices;
  int bend = 0;
  std::vector<int> turns;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// Shortest 1-bend path from the boundary to inner face `face_idx`, found by
// scanning (u0, l, b) in increasing l; the parameters force the walk.
OneBendPath find_1bend_path(const Patch& p, int face_idx);
// every (u0, b) variant at the minimal length (a single path for length 0)
std::vector<OneBendPath> all_1bend_paths(const Patch& p, int face_idx);

// Cutting operation along a 1-bend shortest path to a 5-face. Returns the
// resulting components (0, 1 or 2) plus the induced sequence operation with
// op.seq = 0 and positions relative to p's boundary indexing. The rewritten
// components come out with the inserted block starting at boundary index 0,
// matching apply_op's alignment exactly.
struct CutResult {
  PatchSet parts;
  SeqOp op;
};
CutResult cut(const Patch& p, int face_idx, const OneBendPath& path);

// Offsets of the rewritten block(s) within the post-image members (always 0
// for patches produced by cut/apply; kept explicit so replays can anchor
// anywhere). offset2 is used by type III for the second member.
struct Anchor {
  int offset1 = 0;
  int offset2 = 0;
};

// Reverse of the cutting operation described by `op`: rebuilds the patch set
// realizing the pre-image code list, with the affected member realized
// index-wise (the op's recorded position is rotated back). Never searches
// for a matching site; throws AnchorMismatch if degrees at the anchor do not
// match the op's post-pattern.
PatchSet reverse_cut(const PatchSet& ps, const SeqOp& op, const Anchor& anchor = {});

// Deterministic serialization of the rooted map: breadth-first traversal
// seeded at the boundary start, edges ordered by rotation from the discovery
// edge. Invariant under interior relabeling and rotation re-presentation.
std::string canonical_form(const Patch& p);
// fixed-boundary equivalence: boundary codes index-wise equal and canonical
// forms equal
bool equivalent(const Patch& p, const Patch& q);

// versioned text record; round-trips through parse_patch_record
std::string to_record(const Patch& p);
std::string to_record(const PatchSet& ps);
Patch parse_patch_record(const std::string& text);
PatchSet parse_patchset_record(const std::string& text);

std::string to_dot(const Patch& p);
// barycentric (Tutte) layout, boundary on a regular polygon; cosmetic only
std::string to_svg(const Patch& p);
std::string to_svg(const PatchSet& ps);

}  // namespace penthex

#endif
