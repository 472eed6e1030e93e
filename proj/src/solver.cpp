#include "penthex/solver.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace penthex {

static SeqOp shift_op(const SeqOp& op, int seq, int delta, int n) {
  auto sh = [&](int p) { return ((p + delta) % n + n) % n; };
  if (const auto* o = std::get_if<OpI>(&op)) return OpI{seq, sh(o->pos), o->l, o->b};
  if (const auto* o = std::get_if<OpII>(&op)) return OpII{seq, sh(o->pos), o->x};
  if (const auto* o = std::get_if<OpIII>(&op))
    return OpIII{seq, sh(o->pos1), o->a, sh(o->pos2), o->side};
  return OpIV{seq};
}

Solver::Solver(SolverConfig cfg) : cfg_(std::move(cfg)) {
  if (cfg_.d_override && *cfg_.d_override < 1)
    throw Error(Err::Unsupported, "d override must be >= 1");
}

std::vector<SeqOp> Solver::ordered_ops(const SequenceList& single, int d) {
  auto ops = enumerate_ops(single, d);
  stats_.enumerations++;
  if (cfg_.check_bounds) {
    std::int64_t t3 = d3(single);
    std::int64_t bound = t3 * t3 + static_cast<std::int64_t>(d) * d * t3;
    bool ok = t3 == 0 ? ops.empty() : static_cast<std::int64_t>(ops.size()) < bound;
    if (!ok) stats_.bound_violations++;
  }
  return ops;
}

bool Solver::solve_member(const BoundaryCode& m, int d, int depth) {
  stats_.max_depth = std::max(stats_.max_depth, depth);
  int k = f5(m);
  if (k < 0) return false;
  if (k == 0) {
    stats_.base_calls++;
    return exists_hex(m, &hex_memo_);
  }
  if (obviously_unrealizable(m)) return false;
  return solve_canon(canonical_rotation(m), d, depth);
}

bool Solver::solve_canon(const BoundaryCode& canon, int d, int depth) {
  std::string key = compact(canon);
  auto it = memo_.find(key);
  if (it != memo_.end()) {
    if (it->second.yes) return true;
    if (it->second.no_d >= d) return false;
  }
  stats_.nodes++;
  SequenceList single{canon};
  for (const auto& op : ordered_ops(single, d)) {
    SequenceList post = apply_op(single, op);
    std::vector<int> removed;
    SequenceList kept = iv_closure(post, &removed);
    // screen every sibling first: a type III split can hand one child all
    // the f5 budget while the other goes negative, and the doomed sibling
    // must kill the branch before the big one is explored
    bool ok = true;
    for (const auto& child : kept) {
      if (obviously_unrealizable(child)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (const auto& child : kept) {
      if (!solve_member(child, d, depth + 1)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      MemberInfo info;
      info.yes = true;
      info.kind = 2;
      info.op = op;
      memo_[key] = info;
      return true;
    }
  }
  auto& slot = memo_[key];
  slot.yes = false;
  slot.no_d = std::max(slot.no_d, d);
  return false;
}

OpTrace Solver::assemble_trace(const SequenceList& initial, int d) {
  OpTrace tr;
  tr.initial = initial;
  SequenceList cur = initial;
  while (true) {
    int idx = -1;
    for (int i = 0; i < static_cast<int>(cur.size()); i++) {
      if (f5(cur[i]) != 0) {
        idx = i;
        break;
      }
    }
    if (idx < 0) break;
    const BoundaryCode m = cur[idx];
    int r = canonical_rotation_index(m);
    auto it = memo_.find(compact(rotated(m, r)));
    if (it == memo_.end() || !it->second.yes || it->second.kind != 2)
      throw Error(Err::Internal, "trace assembly hit an unsolved member");
    SeqOp op = shift_op(it->second.op, idx, r, m.size());
    SequenceList post = apply_op(cur, op);
    TraceEntry step;
    step.op = op;
    step.after = iv_closure(post, &step.iv_removed);
    cur = step.after;
    tr.steps.push_back(std::move(step));
  }
  (void)d;
  return tr;
}

PatchSet Solver::hex_base(const SequenceList& members) {
  PatchSet base;
  for (const auto& m : members) {
    int r = canonical_rotation_index(m);
    SearchConfig scfg;
    scfg.allow_pentagons = false;
    scfg.witness_cap = 1;
    auto found = fill_search(rotated(m, r), scfg);
    if (found.empty()) throw Error(Err::Internal, "base member lost its hexagonal witness");
    base.push_back(rotate_start(found[0], -r));
  }
  return base;
}

Answer Solver::test_recurse(const SequenceList& list, int d) {
  if (d < 1) throw Error(Err::Unsupported, "d must be >= 1");
  Answer ans;
  bool yes = true;
  if (f5(list) == 0) {
    // a member with f5 > 0 would be paired with one below zero, and
    // exists_hex rejects both
    for (const auto& m : list) {
      stats_.base_calls++;
      if (!exists_hex(m, &hex_memo_)) {
        yes = false;
        break;
      }
    }
  } else {
    for (const auto& m : list) {
      if (!solve_member(m, d, 0)) {
        yes = false;
        break;
      }
    }
  }
  ans.exists = yes;
  if (yes) {
    ans.trace = assemble_trace(list, d);
    if (cfg_.want_witness)
      ans.witness = build_witness(*ans.trace, hex_base(ans.trace->final_list()));
  }
  return ans;
}

Answer Solver::decide(const BoundaryCode& code) {
  auto t0 = std::chrono::steady_clock::now();
  stats_ = SolveStats{};
  int n = code.size();
  int k = f5(code);
  int d = cfg_.d_override ? *cfg_.d_override
                          : (cfg_.conjecture_mode ? std::max(n - 3, 10) : n - 3);
  d = std::max(d, 1);
  stats_.d_used = d;
  stats_.conditional = cfg_.conjecture_mode && k > 5;
  if (k > 5 && !cfg_.conjecture_mode)
    throw Error(Err::Unsupported, "f5 > 5 is only decided under the distance conjecture");

  Answer ans;
  if (code == repeated(5, 2)) {
    ans.exists = true;
    ans.trace = OpTrace{{code}, {}};
    if (cfg_.want_witness) ans.witness = PatchSet{make_cycle(5)};
  } else if (n < 5) {
    ans.exists = false;  // no face fits inside a boundary shorter than 5
  } else {
    ans = test_recurse({code}, d);
  }
  stats_.time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  ans.stats = stats_;
  return ans;
}

PatchSet build_witness(const OpTrace& trace, PatchSet base) {
  const SequenceList& fin = trace.final_list();
  if (base.size() != fin.size())
    throw Error(Err::AnchorMismatch, "base does not match the final snapshot");
  for (size_t i = 0; i < fin.size(); i++)
    if (!(base[i].boundary_code() == fin[i]))
      throw Error(Err::AnchorMismatch, "base member does not realize its snapshot code");

  PatchSet cur = std::move(base);
  for (int s = static_cast<int>(trace.steps.size()) - 1; s >= 0; s--) {
    const TraceEntry& step = trace.steps[s];
    for (int idx : step.iv_removed) cur = reverse_cut(cur, OpIV{idx}, {});
    cur = reverse_cut(cur, step.op, {});
    const SequenceList& pre = s == 0 ? trace.initial : trace.steps[s - 1].after;
    if (cur.size() != pre.size()) throw Error(Err::Internal, "replay changed the list size");
    for (size_t i = 0; i < pre.size(); i++)
      if (!(cur[i].boundary_code() == pre[i]))
        throw Error(Err::Internal, "replay missed the recorded snapshot");
  }
  return cur;
}

std::vector<Patch> Solver::member_witnesses(const BoundaryCode& m, int d, int cap) {
  int r = canonical_rotation_index(m);
  auto canon_set = witnesses_canon(rotated(m, r), d, cap);
  std::vector<Patch> out;
  out.reserve(canon_set.size());
  for (const auto& p : canon_set) out.push_back(rotate_start(p, -r));
  return out;
}

std::vector<Patch> Solver::witnesses_canon(const BoundaryCode& canon, int d, int cap) {
  int k = f5(canon);
  if (k < 0 || obviously_unrealizable(canon)) return {};
  if (k == 0) {
    stats_.base_calls++;
    SearchConfig scfg;
    scfg.allow_pentagons = false;
    scfg.witness_cap = cap;
    return fill_search(canon, scfg);
  }
  std::string key = compact(canon) + "#" + std::to_string(d) + "#" + std::to_string(cap);
  auto it = wit_memo_.find(key);
  if (it != wit_memo_.end()) return it->second;
  stats_.nodes++;

  std::vector<Patch> result;
  std::set<std::string> seen;
  SequenceList single{canon};
  for (const auto& op : ordered_ops(single, d)) {
    if (static_cast<int>(result.size()) >= cap) break;
    SequenceList post = apply_op(single, op);
    std::vector<int> removed;
    SequenceList kept = iv_closure(post, &removed);
    bool dead = false;
    for (const auto& child : kept)
      if (obviously_unrealizable(child)) dead = true;
    if (dead) continue;
    std::vector<std::vector<Patch>> sets;
    for (const auto& child : kept) {
      auto s = member_witnesses(child, d, cap);
      if (s.empty()) {
        dead = true;
        break;
      }
      sets.push_back(std::move(s));
    }
    if (dead) continue;

    std::vector<size_t> pick(sets.size(), 0);
    while (true) {
      PatchSet ps;
      for (size_t i = 0; i < sets.size(); i++) ps.push_back(sets[i][pick[i]]);
      for (int idx : removed) ps = reverse_cut(ps, OpIV{idx}, {});
      PatchSet full = reverse_cut(ps, op, {});
      std::string cf = canonical_form(full[0]);
      if (seen.insert(cf).second) result.push_back(std::move(full[0]));
      if (static_cast<int>(result.size()) >= cap) break;
      size_t i = 0;
      while (i < pick.size() && ++pick[i] == sets[i].size()) {
        pick[i] = 0;
        i++;
      }
      if (pick.empty() || i == pick.size()) break;
    }
  }
  wit_memo_[key] = result;
  return result;
}

int Solver::count_solutions(const BoundaryCode& code, int cap) {
  auto t0 = std::chrono::steady_clock::now();
  if (cap < 1) throw Error(Err::Unsupported, "cap must be >= 1");
  if (f5(code) > 5) throw Error(Err::Unsupported, "counting is limited to f5 <= 5");
  stats_ = SolveStats{};
  int n = code.size();
  int d = cfg_.d_override ? *cfg_.d_override : std::max(n - 3, 1);
  stats_.d_used = d;
  int count;
  if (code == repeated(5, 2)) {
    count = 1;  // the bare pentagon, unreachable through type I-III ops
  } else if (n < 5) {
    count = 0;
  } else {
    count = static_cast<int>(member_witnesses(code, d, cap).size());
  }
  stats_.time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return count;
}

}  // namespace penthex
