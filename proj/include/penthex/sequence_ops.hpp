#ifndef PENTHEX_SEQUENCE_OPS_HPP
#define PENTHEX_SEQUENCE_OPS_HPP

#include <string>
#include <variant>
#include <vector>

#include "penthex/boundary_code.hpp"

namespace penthex {

// The four sequence operations. Positions are absolute indices into the
// current code of list member `seq`; two occurrences of the same pattern at
// different positions are distinct ops.
//
// Type I   replaces the single 3 at `pos` by  2, sigma, 2, 3,3,3,3, 2,
//          complement(reverse(sigma)), 2  where sigma = sigma_pattern(l, b).
// Type II  replaces the cyclic block  3,(2)^(x-1),3  starting at `pos`
//          by  2,(3)^(4-x),2.
// Type III replaces one code by two: block A = 3,(2)^a,3 at `pos1` and
//          block B = 3,3 at `pos2` are removed; the member splits into
//          2,(3)^b,2,<segment after A>  and  2,(3)^c,2,<segment after B>
//          with a+b+c = 1. `side` picks which output gets the inserted 3
//          when a = 0.
// Type IV  deletes the list member equal to (2)^5.
struct OpI {
  int seq, pos, l, b;
  bool operator==(const OpI&) const = default;
};
struct OpII {
  int seq, pos, x;
  bool operator==(const OpII&) const = default;
};
enum class Side { none, first, second };
struct OpIII {
  int seq, pos1, a, pos2;
  Side side;
  bool operator==(const OpIII&) const = default;
};
struct OpIV {
  int seq;
  bool operator==(const OpIV&) const = default;
};
using SeqOp = std::variant<OpI, OpII, OpIII, OpIV>;

int op_seq(const SeqOp& op);

// sigma = sigma_1..sigma_{l-1}; sigma_i = 3 iff (i <= b and i odd) or
// (i > b and i even). Throws BadBend unless b is even and 0 <= b <= l.
std::vector<int> sigma_pattern(int l, int b);

// Applies `op` to `list`. The rewritten member(s) come out rotated so the
// inserted block starts at index 0; everything else is untouched. Performs
// the rewrite mechanically -- whether the result is realizable by a patch is
// the solver's concern. Throws NotApplicable / OverlappingBlocks.
SequenceList apply_op(const SequenceList& list, const SeqOp& op);

// All applicable ops of type I with 1 <= l <= d, type II, and type III.
// Type IV is excluded (see iv_closure). Deterministic order: II, III, I.
std::vector<SeqOp> enumerate_ops(const SequenceList& list, int d);

// Removes every member equal to (2)^5. If `removed` is given it receives the
// indices (into the input list) of dropped members, ascending.
SequenceList iv_closure(const SequenceList& list, std::vector<int>* removed = nullptr);

// One-line trace form, e.g. "I seq=0 pos=3 l=2 b=0".
std::string format_op(const SeqOp& op);

}  // namespace penthex

#endif
