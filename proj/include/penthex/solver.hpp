#ifndef PENTHEX_SOLVER_HPP
#define PENTHEX_SOLVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>

#include "penthex/oracle.hpp"
#include "penthex/patch_graph.hpp"
#include "penthex/sequence_ops.hpp"

namespace penthex {

struct SolverConfig {
  std::optional<int> d_override;  // expert use; must be >= 1
  bool conjecture_mode = false;   // allow f5 > 5, use d = max(n-3, 10)
  bool want_witness = false;
  bool check_bounds = false;  // verify the op-count bound on every enumeration
};

struct SolveStats {
  std::int64_t nodes = 0;       // member expansions (memo misses)
  std::int64_t base_calls = 0;  // hexagonal base-case queries
  double time_ms = 0.0;
  int max_depth = 0;  // ops applied along the deepest explored chain
  int d_used = 0;
  bool conditional = false;  // answer relies on the distance conjecture
  std::int64_t enumerations = 0;
  std::int64_t bound_violations = 0;  // |ops| >= d3^2 + d^2*d3 occurrences
};

// One solver step: `op` applied to the previous snapshot, then every member
// equal to (2)^5 removed; iv_removed holds their indices in the post-apply
// list, ascending. `after` is the resulting snapshot.
struct TraceEntry {
  SeqOp op;
  SequenceList after;
  std::vector<int> iv_removed;
};

struct OpTrace {
  SequenceList initial;
  std::vector<TraceEntry> steps;
  const SequenceList& final_list() const {
    return steps.empty() ? initial : steps.back().after;
  }
};

struct Answer {
  bool exists = false;
  std::optional<PatchSet> witness;
  std::optional<OpTrace> trace;
  SolveStats stats;
};

// Replays the trace backwards from a patch set realizing its final snapshot
// (member i realized index-wise by base[i]); re-adds removed pentagons and
// reverses each op, producing a set that realizes the initial snapshot.
PatchSet build_witness(const OpTrace& trace, PatchSet base);

// Recursive decision procedure: reduce by sequence operations of length at
// most d until every member is the boundary code of a hexagonal patch.
// Memoizes per-member results on canonical rotations, so one instance is
// cheap to reuse across many queries; not safe for concurrent use.
class Solver {
 public:
  explicit Solver(SolverConfig cfg = {});

  // Decides whether a patch with this boundary code exists. Requires
  // conjecture_mode for f5 > 5 (throws Unsupported otherwise); answers for
  // f5 <= 5 are unconditional.
  Answer decide(const BoundaryCode& code);

  // The subroutine on sequence lists: succeeds iff every member is
  // independently realizable via operations of length at most d.
  Answer test_recurse(const SequenceList& list, int d);

  // Number of fixed-boundary equivalence classes of solutions, saturating at
  // cap. Explores all op paths; witness sets are cached per member so no
  // distinct witness is lost.
  int count_solutions(const BoundaryCode& code, int cap);

  const SolveStats& last_stats() const { return stats_; }

 private:
  struct MemberInfo {
    bool yes = false;
    int no_d = 0;     // "no" proven for every d' <= no_d
    int kind = 0;     // 0 = hex base, 2 = reduced by op
    SeqOp op{OpIV{0}};
  };

  bool solve_member(const BoundaryCode& m, int d, int depth);
  bool solve_canon(const BoundaryCode& canon, int d, int depth);
  std::vector<SeqOp> ordered_ops(const SequenceList& single, int d);
  OpTrace assemble_trace(const SequenceList& initial, int d);
  PatchSet hex_base(const SequenceList& members);
  std::vector<Patch> member_witnesses(const BoundaryCode& m, int d, int cap);
  std::vector<Patch> witnesses_canon(const BoundaryCode& canon, int d, int cap);

  SolverConfig cfg_;
  SolveStats stats_;
  std::unordered_map<std::string, MemberInfo> memo_;
  std::unordered_map<std::string, std::vector<Patch>> wit_memo_;
  HexMemo hex_memo_;
};

}  // namespace penthex

#endif
