#ifndef PENTHEX_BOUNDARY_CODE_HPP
#define PENTHEX_BOUNDARY_CODE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "penthex/error.hpp"

namespace penthex {

// Cyclic sequence of boundary degrees, entries in {2,3}, indexed 0..n-1.
// Equality is literal (index-wise); use same_up_to_rotation for the
// rotation-insensitive comparison.
struct BoundaryCode {
  std::vector<int> deg;

  BoundaryCode() = default;
  explicit BoundaryCode(std::vector<int> d) : deg(std::move(d)) {}

  int size() const { return static_cast<int>(deg.size()); }
  // cyclic access, i may be any integer
  int at(int i) const {
    int n = size();
    int m = i % n;
    if (m < 0) m += n;
    return deg[m];
  }

  bool operator==(const BoundaryCode&) const = default;
};

// A list of codes; order matters only for reporting.
using SequenceList = std::vector<BoundaryCode>;

// n copies of value v, e.g. all_of(5, 2) is the pentagon code.
BoundaryCode repeated(int n, int v);
// x repetitions of the block `pat`.
BoundaryCode repeat_block(const std::vector<int>& pat, int x);

int d2(const BoundaryCode& c);
int d3(const BoundaryCode& c);
int d3(const SequenceList& l);

// f5 = 6 - d2 + d3; may be negative. For a list it is the sum over members.
int f5(const BoundaryCode& c);
int f5(const SequenceList& l);

// entry-wise 5 - x
BoundaryCode complement(const BoundaryCode& c);
BoundaryCode reversed(const BoundaryCode& c);
// code rotated so position k becomes position 0
BoundaryCode rotated(const BoundaryCode& c, int k);

// Lexicographically smallest rotation (2 < 3). Booth's least-rotation scan.
BoundaryCode canonical_rotation(const BoundaryCode& c);
// index k such that rotated(c, k) == canonical_rotation(c)
int canonical_rotation_index(const BoundaryCode& c);
bool same_up_to_rotation(const BoundaryCode& a, const BoundaryCode& b);

// Text format: codes separated by '|'; a code is either a compact digit
// string ("22323") or comma-separated tokens ("2,2,3,2,3").
SequenceList parse_codes(const std::string& text);
std::string format_code(const BoundaryCode& c);   // comma-separated
std::string format_list(const SequenceList& l);

// compact digits, used for memo keys and terse output
std::string compact(const BoundaryCode& c);

}  // namespace penthex

#endif
