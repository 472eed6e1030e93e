#include "penthex/oracle.hpp"

#include <algorithm>
#include <set>

namespace penthex {

// Eisenstein units w^d, w^2 = w - 1
static const int WA[6] = {1, 0, -1, -1, 0, 1};
static const int WB[6] = {0, 1, 1, 0, -1, -1};

LatticeWalk lattice_walk(const BoundaryCode& c) {
  std::int64_t pa = 1, pb = 0;  // start vertex 1 + 0w, first edge direction 0
  std::int64_t S = 0;
  int dir = 0;
  int n = c.size();
  for (int i = 0; i < n; i++) {
    std::int64_t qa = pa + WA[dir], qb = pb + WB[dir];
    S += pa * qb - pb * qa;
    pa = qa;
    pb = qb;
    dir = c.at(i + 1) == 2 ? (dir + 1) % 6 : (dir + 5) % 6;  // turn at arrival
  }
  int k = f5(c);
  int e = ((6 - k) % 6 + 6) % 6;  // rotation part of the end frame is w^-k
  LatticeWalk out;
  out.tau_a = pa - WA[e];
  out.tau_b = pb - WB[e];
  out.area6 = S;
  return out;
}

bool lattice_walk_closes(const BoundaryCode& c) {
  if (f5(c) != 0) return false;
  LatticeWalk w = lattice_walk(c);
  return w.tau_a == 0 && w.tau_b == 0;
}

bool obviously_unrealizable(const BoundaryCode& c) {
  int n = c.size();
  if (n < 5) return true;
  int k = f5(c);
  if (k < 0) return true;
  if (d3(c) > 0) {
    // a run of r 2s flanked by 3s needs a face with r+1 boundary edges plus
    // at least one closing edge, so r <= 4
    int run = 0;
    for (int i = 0; i < 2 * n; i++) {
      if (c.at(i) == 2) {
        run++;
        if (run >= 5 && run < n) return true;
      } else {
        run = 0;
      }
    }
  }
  LatticeWalk w = lattice_walk(c);
  if (k == 0) {
    if (n % 2) return true;
    if (w.tau_a != 0 || w.tau_b != 0) return true;
    // the development covers exactly area6/6 hexagons
    if (w.area6 <= 0 || w.area6 % 6 != 0) return true;
  } else {
    // tau must lie in the ideal (1 - w^-1)(1 + w)Z[w]; that reduces to a
    // single congruence mod 3
    if (((w.tau_a - w.tau_b) % 3 + 3) % 3 != 0) return true;
  }
  return false;
}

namespace {

struct HoleV {
  int v;
  int cap;  // remaining edge capacity, 0 or 1
};
using Hole = std::vector<HoleV>;

BoundaryCode hole_code(const Hole& h) {
  std::vector<int> d;
  d.reserve(h.size());
  for (const auto& hv : h) d.push_back(hv.cap ? 3 : 2);
  return BoundaryCode(std::move(d));
}

struct FillState {
  std::vector<std::vector<int>> rot;
  std::vector<Hole> holes;
  int faces = 0;
};

struct SearchCtx {
  bool allow_pentagons = true;
  int budget = 0;
  bool exist_only = false;
  int cap = 1 << 30;
  HexMemo* memo = nullptr;
  bool found = false;
  std::vector<Patch> out;
  std::set<std::string> seen;
  int base_n = 0;
  long nodes = 0;
};

// exact face count of any hexagonal filling of this code (valid only after
// the closure checks pass)
int hex_fill_size(const BoundaryCode& c) {
  return static_cast<int>(lattice_walk(c).area6 / 6);
}

bool hole_viable(const SearchCtx& ctx, const Hole& h, int faces_used) {
  BoundaryCode code = hole_code(h);
  if (obviously_unrealizable(code)) return false;
  int k = f5(code);
  if (!ctx.allow_pentagons && k != 0) return false;
  int left = ctx.budget - faces_used;
  if (k == 0) {
    if (hex_fill_size(code) > left) return false;
  } else if (left < 1) {
    return false;
  }
  int caps = 0;
  for (const auto& hv : h) caps += hv.cap;
  if (caps == 1) return false;
  return true;
}

void fill_rec(SearchCtx& ctx, const FillState& st);

void leaf(SearchCtx& ctx, const FillState& st) {
  if (ctx.exist_only) {
    ctx.found = true;
    return;
  }
  PlaneGraphData g;
  g.rot = st.rot;
  for (int i = 0; i < ctx.base_n; i++) g.boundary.push_back(i);
  Patch p = Patch::validate(std::move(g));  // search invariant: always valid
  std::string key = canonical_form(p);
  if (ctx.seen.insert(key).second) {
    ctx.out.push_back(std::move(p));
    if (static_cast<int>(ctx.out.size()) >= ctx.cap) ctx.found = true;  // saturated
  }
}

// one face glued over the pivot run: f covers the run path plus `arcs`
// further hole arcs, connected by new bridge paths drawn inside the hole
struct Shape {
  int L = 6;
  std::vector<int> arc_spans;     // indices into the eligible span list
  std::vector<int> bridge_lens;   // arcs+1 entries, each >= 1
};

void apply_shape(SearchCtx& ctx, const FillState& st, const Hole& h, int idxA, int idxB,
                 const std::vector<std::pair<int, int>>& spans, const Shape& shape) {
  int m = static_cast<int>(h.size());
  FillState nx;
  nx.rot = st.rot;
  nx.holes = st.holes;
  nx.faces = st.faces + 1;

  // attach chain: B, then each chosen arc (start, end), then A
  std::vector<std::pair<int, int>> hops;  // (from hole idx, to hole idx) per bridge
  int cur = idxB;
  for (int si : shape.arc_spans) {
    hops.push_back({cur, spans[si].first});
    cur = spans[si].second;
  }
  hops.push_back({cur, idxA});

  // reject bridges that would duplicate an existing edge
  for (size_t j = 0; j < hops.size(); j++) {
    if (shape.bridge_lens[j] != 1) continue;
    int u = h[hops[j].first].v, w = h[hops[j].second].v;
    if (std::find(nx.rot[u].begin(), nx.rot[u].end(), w) != nx.rot[u].end()) return;
  }

  auto hole_pred = [&](int i) { return h[(i + m - 1) % m].v; };
  auto hole_succ = [&](int i) { return h[(i + 1) % m].v; };

  // lay the bridges and collect the sub-holes they cut off
  std::vector<Hole> subs;
  for (size_t j = 0; j < hops.size(); j++) {
    int iu = hops[j].first, iw = hops[j].second;
    int u = h[iu].v, w = h[iw].v;
    int len = shape.bridge_lens[j];
    std::vector<int> chain{u};
    for (int t = 1; t < len; t++) {
      chain.push_back(static_cast<int>(nx.rot.size()));
      nx.rot.emplace_back();
    }
    chain.push_back(w);
    for (int t = 1; t < len; t++)
      nx.rot[chain[t]] = {chain[t - 1], chain[t + 1]};
    // hole-side insertion: the new edge sits between the hole predecessor
    // and successor in clockwise order
    nx.rot[u] = {hole_pred(iu), hole_succ(iu), chain[1]};
    nx.rot[w] = {hole_pred(iw), hole_succ(iw), chain[len - 1]};

    Hole sub;
    sub.push_back({u, 0});
    for (int i = (iu + 1) % m; i != iw; i = (i + 1) % m) sub.push_back(h[i]);
    sub.push_back({w, 0});
    for (int t = len - 1; t >= 1; t--) sub.push_back({chain[t], 1});
    subs.push_back(std::move(sub));
  }

  for (auto& sub : subs) {
    if (!hole_viable(ctx, sub, nx.faces)) return;
    // hexagonal sub-holes can be settled independently via the memo
    if (ctx.exist_only && ctx.memo) {
      BoundaryCode code = hole_code(sub);
      if (f5(code) == 0) {
        std::string key = compact(canonical_rotation(code));
        auto it = ctx.memo->known.find(key);
        if (it != ctx.memo->known.end()) {
          if (!it->second) return;
          nx.faces += hex_fill_size(code);
          continue;
        }
      }
    }
    nx.holes.push_back(std::move(sub));
  }
  if (nx.faces > ctx.budget) return;
  fill_rec(ctx, nx);
}

void glue_at_pivot(SearchCtx& ctx, const FillState& st, const Hole& h) {
  int m = static_cast<int>(h.size());
  std::vector<int> ones;
  for (int i = 0; i < m; i++)
    if (h[i].cap) ones.push_back(i);
  int t = static_cast<int>(ones.size());
  if (t < 2) return;  // t == 1 is unfillable, t == 0 handled by the caller

  // pivot: maximal run of 2s, i.e. the largest cyclic gap between capacities
  int best = -1, bestgap = -1;
  for (int i = 0; i < t; i++) {
    int a = ones[i], b = ones[(i + 1) % t];
    int gap = ((b - a) % m + m) % m - 1;
    if (gap > bestgap) {
      bestgap = gap;
      best = i;
    }
  }
  int idxA = ones[best], idxB = ones[(best + 1) % t];
  int base_edges = bestgap + 1;  // the forced path from A to B

  // capacity-1 vertices strictly between B and A, and the spans between
  // consecutive ones (candidate extra arcs of the face)
  std::vector<int> ts;
  for (int i = 2; i < t; i++) ts.push_back(ones[(best + i) % t]);
  std::vector<std::pair<int, int>> spans;   // (start idx, end idx)
  std::vector<int> spanlen;
  for (size_t i = 0; i + 1 < ts.size(); i++) {
    int gap = ((ts[i + 1] - ts[i]) % m + m) % m;
    spans.push_back({ts[i], ts[i + 1]});
    spanlen.push_back(gap);
  }

  BoundaryCode code = hole_code(h);
  int k = f5(code);
  for (int L : {5, 6}) {
    if (L == 5 && (!ctx.allow_pentagons || k < 1)) continue;
    int rest = L - base_edges;
    if (rest < 1) continue;
    // choose pairwise non-adjacent spans in order, then bridge lengths
    struct Rec {
      SearchCtx& ctx;
      const FillState& st;
      const Hole& h;
      int idxA, idxB, L, rest;
      const std::vector<std::pair<int, int>>& spans;
      const std::vector<int>& spanlen;
      Shape shape;
      void arcs(int from, int budget) {
        if (ctx.found) return;
        // close with bridges: budget into |arcs|+1 positive parts
        int parts = static_cast<int>(shape.arc_spans.size()) + 1;
        if (budget >= parts) comps(budget, parts, 0);
        for (int s = from; s < static_cast<int>(spans.size()); s++) {
          // consecutive spans share their capacity vertex
          if (!shape.arc_spans.empty() && s == shape.arc_spans.back() + 1) continue;
          if (budget - spanlen[s] < static_cast<int>(shape.arc_spans.size()) + 2) continue;
          shape.arc_spans.push_back(s);
          arcs(s + 1, budget - spanlen[s]);
          shape.arc_spans.pop_back();
        }
      }
      void comps(int left, int parts, int filled) {
        if (ctx.found) return;
        if (parts == 1) {
          shape.bridge_lens.push_back(left);
          emit();
          shape.bridge_lens.pop_back();
          return;
        }
        for (int take = 1; take + parts - 1 <= left; take++) {
          shape.bridge_lens.push_back(take);
          comps(left - take, parts - 1, filled + 1);
          shape.bridge_lens.pop_back();
        }
      }
      void emit() {
        apply_shape(ctx, st, h, idxA, idxB, spans, shape);
      }
    } rec{ctx, st, h, idxA, idxB, L, rest, spans, spanlen, {}};
    rec.shape.L = L;
    rec.arcs(0, rest);
    if (ctx.found) return;
  }
}

void fill_rec(SearchCtx& ctx, const FillState& st) {
  if (ctx.found) return;
  ctx.nodes++;
  if (st.holes.empty()) {
    leaf(ctx, st);
    return;
  }
  FillState cur = st;
  Hole h = std::move(cur.holes.back());
  cur.holes.pop_back();

  int caps = 0;
  for (const auto& hv : h) caps += hv.cap;
  if (caps == 0) {
    int m = static_cast<int>(h.size());
    if (m != 5 && m != 6) return;
    if (m == 5 && !ctx.allow_pentagons) return;
    if (cur.faces + 1 > ctx.budget) return;
    cur.faces++;
    fill_rec(ctx, cur);  // the last face materializes by itself
    return;
  }
  glue_at_pivot(ctx, cur, h);
}

bool run_search(SearchCtx& ctx, const BoundaryCode& c) {
  int n = c.size();
  ctx.base_n = n;
  if (n < 3) return false;
  for (int v : c.deg)
    if (v != 2 && v != 3) throw Error(Err::BadDigit, "degree outside {2,3}");

  FillState st;
  st.rot.resize(n);
  Hole h;
  for (int i = 0; i < n; i++) {
    st.rot[i] = {(i + n - 1) % n, (i + 1) % n};
    h.push_back({i, c.deg[i] - 2});
  }
  st.holes.push_back(std::move(h));
  if (!hole_viable(ctx, st.holes[0], 0)) return false;
  fill_rec(ctx, st);
  return ctx.found;
}

}  // namespace

std::vector<Patch> fill_search(const BoundaryCode& c, const SearchConfig& cfg) {
  if (!cfg.allow_pentagons && f5(c) != 0)
    throw Error(Err::Inconsistent, "hexagon-only search needs f5 = 0");
  SearchCtx ctx;
  ctx.allow_pentagons = cfg.allow_pentagons;
  ctx.budget = cfg.face_budget > 0 ? cfg.face_budget : c.size() * c.size();
  ctx.exist_only = false;
  ctx.cap = cfg.witness_cap;
  run_search(ctx, c);
  return std::move(ctx.out);
}

bool fill_exists(const BoundaryCode& c, const SearchConfig& cfg, HexMemo* memo) {
  if (!cfg.allow_pentagons && f5(c) != 0) return false;
  SearchCtx ctx;
  ctx.allow_pentagons = cfg.allow_pentagons;
  ctx.budget = cfg.face_budget > 0 ? cfg.face_budget : c.size() * c.size();
  ctx.exist_only = true;
  ctx.memo = memo;
  return run_search(ctx, c);
}

bool exists_hex(const BoundaryCode& c, HexMemo* memo) {
  if (f5(c) != 0) return false;
  if (c.size() % 2) return false;
  if (obviously_unrealizable(c)) return false;
  std::string key;
  if (memo) {
    key = compact(canonical_rotation(c));
    auto it = memo->known.find(key);
    if (it != memo->known.end()) return it->second;
  }
  SearchConfig cfg;
  cfg.allow_pentagons = false;
  cfg.collect_witnesses = false;
  // any hexagonal filling has exactly area6/6 faces
  cfg.face_budget = std::max(c.size() * c.size(), hex_fill_size(c));
  bool ok = fill_exists(c, cfg, memo);
  if (memo) memo->known[key] = ok;
  return ok;
}

int count_distinct(const BoundaryCode& c, int cap) {
  if (cap < 1) throw Error(Err::Inconsistent, "cap must be >= 1");
  SearchConfig cfg;
  cfg.witness_cap = cap;
  auto found = fill_search(c, cfg);
  return static_cast<int>(found.size());
}

}  // namespace penthex
