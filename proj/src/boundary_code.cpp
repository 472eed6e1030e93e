#include "penthex/boundary_code.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace penthex {

const char* err_name(Err e) {
  switch (e) {
    case Err::BadDigit: return "BadDigit";
    case Err::EmptyCode: return "EmptyCode";
    case Err::BadBend: return "BadBend";
    case Err::NotApplicable: return "NotApplicable";
    case Err::OverlappingBlocks: return "OverlappingBlocks";
    case Err::InconsistentRotation: return "InconsistentRotation";
    case Err::NotTwoConnected: return "NotTwoConnected";
    case Err::BadFaceLength: return "BadFaceLength";
    case Err::BadDegree: return "BadDegree";
    case Err::NotFiveFace: return "NotFiveFace";
    case Err::NotOneBend: return "NotOneBend";
    case Err::PathNotIncident: return "PathNotIncident";
    case Err::AnchorMismatch: return "AnchorMismatch";
    case Err::Inconsistent: return "Inconsistent";
    case Err::Unsupported: return "Unsupported";
    case Err::Internal: return "Internal";
  }
  return "Error";
}

BoundaryCode repeated(int n, int v) {
  return BoundaryCode(std::vector<int>(n, v));
}

BoundaryCode repeat_block(const std::vector<int>& pat, int x) {
  std::vector<int> d;
  d.reserve(pat.size() * x);
  for (int i = 0; i < x; i++) d.insert(d.end(), pat.begin(), pat.end());
  return BoundaryCode(std::move(d));
}

int d2(const BoundaryCode& c) {
  return static_cast<int>(std::count(c.deg.begin(), c.deg.end(), 2));
}

int d3(const BoundaryCode& c) {
  return static_cast<int>(std::count(c.deg.begin(), c.deg.end(), 3));
}

int d3(const SequenceList& l) {
  int s = 0;
  for (const auto& c : l) s += d3(c);
  return s;
}

int f5(const BoundaryCode& c) { return 6 - d2(c) + d3(c); }

int f5(const SequenceList& l) {
  int s = 0;
  for (const auto& c : l) s += f5(c);
  return s;
}

BoundaryCode complement(const BoundaryCode& c) {
  std::vector<int> d(c.deg.size());
  for (size_t i = 0; i < c.deg.size(); i++) d[i] = 5 - c.deg[i];
  return BoundaryCode(std::move(d));
}

BoundaryCode reversed(const BoundaryCode& c) {
  return BoundaryCode(std::vector<int>(c.deg.rbegin(), c.deg.rend()));
}

BoundaryCode rotated(const BoundaryCode& c, int k) {
  int n = c.size();
  std::vector<int> d(n);
  for (int i = 0; i < n; i++) d[i] = c.at(k + i);
  return BoundaryCode(std::move(d));
}

// Booth's least-rotation algorithm on the degree vector.
static int least_rotation_index(const std::vector<int>& s) {
  int n = static_cast<int>(s.size());
  std::vector<int> f(2 * n, -1);
  int k = 0;
  for (int j = 1; j < 2 * n; j++) {
    int sj = s[j % n];
    int i = f[j - k - 1];
    while (i != -1 && sj != s[(k + i + 1) % n]) {
      if (sj < s[(k + i + 1) % n]) k = j - i - 1;
      i = f[i];
    }
    if (sj != s[(k + i + 1) % n]) {
      if (sj < s[(k + i + 1) % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k;
}

BoundaryCode canonical_rotation(const BoundaryCode& c) {
  if (c.size() <= 1) return c;
  return rotated(c, least_rotation_index(c.deg));
}

int canonical_rotation_index(const BoundaryCode& c) {
  if (c.size() <= 1) return 0;
  return least_rotation_index(c.deg);
}

bool same_up_to_rotation(const BoundaryCode& a, const BoundaryCode& b) {
  if (a.size() != b.size()) return false;
  return canonical_rotation(a) == canonical_rotation(b);
}

static BoundaryCode parse_one(const std::string& seg) {
  std::vector<int> d;
  for (char ch : seg) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == '2') {
      d.push_back(2);
    } else if (ch == '3') {
      d.push_back(3);
    } else {
      throw Error(Err::BadDigit, std::string("unexpected character '") + ch + "'");
    }
  }
  if (d.empty()) throw Error(Err::EmptyCode, "code segment has no digits");
  return BoundaryCode(std::move(d));
}

SequenceList parse_codes(const std::string& text) {
  size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw Error(Err::EmptyCode, "empty input");
  SequenceList out;
  size_t start = 0;
  while (true) {
    size_t bar = text.find('|', start);
    std::string seg =
        bar == std::string::npos ? text.substr(start) : text.substr(start, bar - start);
    out.push_back(parse_one(seg));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return out;
}

std::string format_code(const BoundaryCode& c) {
  std::string s;
  for (int i = 0; i < c.size(); i++) {
    if (i) s += ',';
    s += static_cast<char>('0' + c.deg[i]);
  }
  return s;
}

std::string format_list(const SequenceList& l) {
  std::string s;
  for (size_t i = 0; i < l.size(); i++) {
    if (i) s += '|';
    s += format_code(l[i]);
  }
  return s;
}

std::string compact(const BoundaryCode& c) {
  std::string s;
  s.reserve(c.deg.size());
  for (int v : c.deg) s += static_cast<char>('0' + v);
  return s;
}

}  // namespace penthex
