#include "penthex/sequence_ops.hpp"

#include <algorithm>
#include <sstream>

namespace penthex {

int op_seq(const SeqOp& op) {
  return std::visit([](const auto& o) { return o.seq; }, op);
}

std::vector<int> sigma_pattern(int l, int b) {
  if (l < 1) throw Error(Err::BadBend, "l must be >= 1");
  if (b < 0 || b > l || b % 2 != 0)
    throw Error(Err::BadBend, "b must be even and in [0, l]");
  std::vector<int> s(l - 1);
  for (int i = 1; i <= l - 1; i++) {
    bool three = (i <= b && i % 2 == 1) || (i > b && i % 2 == 0);
    s[i - 1] = three ? 3 : 2;
  }
  return s;
}

static void check_member(const SequenceList& list, int seq) {
  if (seq < 0 || seq >= static_cast<int>(list.size()))
    throw Error(Err::NotApplicable, "no such list member");
}

// new member = block ++ old entries from `from` for `count` steps (cyclic)
static BoundaryCode splice_block(const BoundaryCode& c, std::vector<int> block,
                                 int from, int count) {
  for (int t = 0; t < count; t++) block.push_back(c.at(from + t));
  return BoundaryCode(std::move(block));
}

static SequenceList apply_i(const SequenceList& list, const OpI& op) {
  check_member(list, op.seq);
  const BoundaryCode& c = list[op.seq];
  int n = c.size();
  if (op.pos < 0 || op.pos >= n || c.deg[op.pos] != 3)
    throw Error(Err::NotApplicable, "type I needs a 3 at pos");
  std::vector<int> sigma = sigma_pattern(op.l, op.b);  // throws BadBend
  std::vector<int> block;
  block.reserve(2 * op.l + 6);
  block.push_back(2);
  block.insert(block.end(), sigma.begin(), sigma.end());
  block.push_back(2);
  for (int i = 0; i < 4; i++) block.push_back(3);
  block.push_back(2);
  for (auto it = sigma.rbegin(); it != sigma.rend(); ++it) block.push_back(5 - *it);
  block.push_back(2);

  SequenceList out = list;
  out[op.seq] = splice_block(c, std::move(block), op.pos + 1, n - 1);
  return out;
}

static SequenceList apply_ii(const SequenceList& list, const OpII& op) {
  check_member(list, op.seq);
  const BoundaryCode& c = list[op.seq];
  int n = c.size();
  if (op.x < 1 || op.x > 4) throw Error(Err::NotApplicable, "type II needs 1 <= x <= 4");
  if (op.pos < 0 || op.pos >= n) throw Error(Err::NotApplicable, "pos out of range");
  // the two 3s must be distinct positions
  if (n < op.x + 1) throw Error(Err::NotApplicable, "code shorter than pattern");
  if (c.at(op.pos) != 3 || c.at(op.pos + op.x) != 3)
    throw Error(Err::NotApplicable, "type II pattern absent");
  for (int i = 1; i < op.x; i++)
    if (c.at(op.pos + i) != 2) throw Error(Err::NotApplicable, "type II pattern absent");

  std::vector<int> block;
  block.push_back(2);
  for (int i = 0; i < 4 - op.x; i++) block.push_back(3);
  block.push_back(2);

  SequenceList out = list;
  out[op.seq] = splice_block(c, std::move(block), op.pos + op.x + 1, n - (op.x + 1));
  return out;
}

static SequenceList apply_iii(const SequenceList& list, const OpIII& op) {
  check_member(list, op.seq);
  const BoundaryCode& c = list[op.seq];
  int n = c.size();
  if (op.a != 0 && op.a != 1) throw Error(Err::NotApplicable, "type III needs a in {0,1}");
  if (op.a == 0 && op.side == Side::none)
    throw Error(Err::NotApplicable, "side required when a = 0");
  int lenA = op.a + 2;
  if (n < lenA + 2) throw Error(Err::NotApplicable, "code shorter than both blocks");

  // block A at pos1..pos1+a+1, block B at pos2..pos2+1, cyclically disjoint
  std::vector<bool> used(n, false);
  auto mark = [&](int p, int len) {
    for (int i = 0; i < len; i++) {
      int j = ((p + i) % n + n) % n;
      if (used[j]) throw Error(Err::OverlappingBlocks, "type III blocks overlap");
      used[j] = true;
    }
  };
  mark(op.pos1, lenA);
  mark(op.pos2, 2);

  if (c.at(op.pos1) != 3 || c.at(op.pos1 + op.a + 1) != 3)
    throw Error(Err::NotApplicable, "type III block A absent");
  if (op.a == 1 && c.at(op.pos1 + 1) != 2)
    throw Error(Err::NotApplicable, "type III block A absent");
  if (c.at(op.pos2) != 3 || c.at(op.pos2 + 1) != 3)
    throw Error(Err::NotApplicable, "type III block B absent");

  int b = 0, cc = 0;
  if (op.a == 0) {
    (op.side == Side::first ? b : cc) = 1;
  }
  // y = entries strictly between A's end and B's start, z symmetric
  auto modn = [&](int v) { return ((v % n) + n) % n; };
  int y_from = modn(op.pos1 + lenA);
  int y_len = modn(op.pos2 - y_from);
  int z_from = modn(op.pos2 + 2);
  int z_len = modn(op.pos1 - z_from);
  if (y_len + z_len != n - lenA - 2)
    throw Error(Err::Internal, "type III block arithmetic");

  std::vector<int> blockA{2};
  for (int i = 0; i < b; i++) blockA.push_back(3);
  blockA.push_back(2);
  std::vector<int> blockB{2};
  for (int i = 0; i < cc; i++) blockB.push_back(3);
  blockB.push_back(2);

  BoundaryCode out1 = splice_block(c, std::move(blockA), y_from, y_len);
  BoundaryCode out2 = splice_block(c, std::move(blockB), z_from, z_len);

  SequenceList out;
  out.reserve(list.size() + 1);
  for (int i = 0; i < static_cast<int>(list.size()); i++) {
    if (i == op.seq) {
      out.push_back(std::move(out1));
      out.push_back(std::move(out2));
    } else {
      out.push_back(list[i]);
    }
  }
  return out;
}

static SequenceList apply_iv(const SequenceList& list, const OpIV& op) {
  check_member(list, op.seq);
  if (list[op.seq] != repeated(5, 2))
    throw Error(Err::NotApplicable, "type IV needs member (2)^5");
  SequenceList out;
  out.reserve(list.size() - 1);
  for (int i = 0; i < static_cast<int>(list.size()); i++)
    if (i != op.seq) out.push_back(list[i]);
  return out;
}

SequenceList apply_op(const SequenceList& list, const SeqOp& op) {
  return std::visit(
      [&](const auto& o) -> SequenceList {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, OpI>) return apply_i(list, o);
        else if constexpr (std::is_same_v<T, OpII>) return apply_ii(list, o);
        else if constexpr (std::is_same_v<T, OpIII>) return apply_iii(list, o);
        else return apply_iv(list, o);
      },
      op);
}

std::vector<SeqOp> enumerate_ops(const SequenceList& list, int d) {
  std::vector<SeqOp> ops;
  for (int s = 0; s < static_cast<int>(list.size()); s++) {
    const BoundaryCode& c = list[s];
    int n = c.size();
    std::vector<int> threes;
    for (int i = 0; i < n; i++)
      if (c.deg[i] == 3) threes.push_back(i);
    if (threes.empty()) continue;
    int t = static_cast<int>(threes.size());

    // type II: for each leading 3, x is forced by the gap to the next 3
    if (t >= 2) {
      for (int i = 0; i < t; i++) {
        int p = threes[i];
        int q = threes[(i + 1) % t];
        int gap = ((q - p) % n + n) % n;  // edges from p to the next 3
        int x = gap;
        if (x >= 1 && x <= 4) ops.push_back(OpII{s, p, x});
      }
    }

    // type III: block A = 3,(2)^a,3 at pos1, block B = 3,3 at pos2, disjoint.
    // For a = 0 both blocks look alike, so pairs are unordered (pos1 < pos2)
    // with both side choices; for a = 1 the blocks are distinguishable.
    auto is_33 = [&](int p) { return c.at(p) == 3 && c.at(p + 1) == 3; };
    auto is_323 = [&](int p) { return c.at(p) == 3 && c.at(p + 1) == 2 && c.at(p + 2) == 3; };
    auto disjoint = [&](int p1, int len1, int p2, int len2) {
      std::vector<bool> used(n, false);
      for (int i = 0; i < len1; i++) used[(p1 + i) % n] = true;
      for (int i = 0; i < len2; i++)
        if (used[(p2 + i) % n]) return false;
      return true;
    };
    if (n >= 4) {
      for (int i = 0; i < t; i++) {
        for (int j = 0; j < t; j++) {
          int p1 = threes[i], p2 = threes[j];
          if (p1 == p2) continue;
          // a = 0: unordered pair of 3,3 blocks, two side choices
          if (p1 < p2 && is_33(p1) && is_33(p2) && disjoint(p1, 2, p2, 2)) {
            ops.push_back(OpIII{s, p1, 0, p2, Side::first});
            ops.push_back(OpIII{s, p1, 0, p2, Side::second});
          }
          // a = 1: ordered (A is the 3,2,3 block)
          if (is_323(p1) && is_33(p2) && disjoint(p1, 3, p2, 2))
            ops.push_back(OpIII{s, p1, 1, p2, Side::none});
        }
      }
    }

    // type I: every 3, every length 1..d, every even bend
    for (int l = 1; l <= d; l++)
      for (int b = 0; b <= l; b += 2)
        for (int p : threes) ops.push_back(OpI{s, p, l, b});
  }

  // solver ordering: II first, then III, then I by increasing l
  std::stable_sort(ops.begin(), ops.end(), [](const SeqOp& a, const SeqOp& b) {
    auto rank = [](const SeqOp& o) {
      if (std::holds_alternative<OpII>(o)) return 0;
      if (std::holds_alternative<OpIII>(o)) return 1;
      return 2;
    };
    int ra = rank(a), rb = rank(b);
    if (ra != rb) return ra < rb;
    if (ra == 0) {
      const auto &x = std::get<OpII>(a), &y = std::get<OpII>(b);
      if (x.x != y.x) return x.x > y.x;  // big x peels whole faces first
      return x.pos < y.pos;
    }
    if (ra == 2) {
      const auto &x = std::get<OpI>(a), &y = std::get<OpI>(b);
      if (x.l != y.l) return x.l < y.l;
      if (x.pos != y.pos) return x.pos < y.pos;
      return x.b < y.b;
    }
    return false;  // type III kept in scan order
  });
  return ops;
}

SequenceList iv_closure(const SequenceList& list, std::vector<int>* removed) {
  const BoundaryCode pent = repeated(5, 2);
  SequenceList out;
  for (int i = 0; i < static_cast<int>(list.size()); i++) {
    if (list[i] == pent) {
      if (removed) removed->push_back(i);
    } else {
      out.push_back(list[i]);
    }
  }
  return out;
}

std::string format_op(const SeqOp& op) {
  std::ostringstream os;
  std::visit(
      [&](const auto& o) {
        using T = std::decay_t<decltype(o)>;
        if constexpr (std::is_same_v<T, OpI>) {
          os << "I seq=" << o.seq << " pos=" << o.pos << " l=" << o.l << " b=" << o.b;
        } else if constexpr (std::is_same_v<T, OpII>) {
          os << "II seq=" << o.seq << " pos=" << o.pos << " x=" << o.x;
        } else if constexpr (std::is_same_v<T, OpIII>) {
          os << "III seq=" << o.seq << " pos1=" << o.pos1 << " a=" << o.a
             << " pos2=" << o.pos2 << " side="
             << (o.side == Side::first ? "1" : o.side == Side::second ? "2" : "-");
        } else {
          os << "IV seq=" << o.seq;
        }
      },
      op);
  return os.str();
}

}  // namespace penthex
