#include <algorithm>
#include <deque>

#include "penthex/patch_graph.hpp"

// Cutting operations and their reverses. Orientation conventions used
// throughout: rotations are clockwise, the boundary walk is clockwise, inner
// facial walks are anticlockwise. A walk turns left at v when the outgoing
// edge is the clockwise successor of the incoming one; for the forced turn
// pattern of a 1-bend path this puts the third neighbor of an interior path
// vertex on the right of the path exactly at left turns.

namespace penthex {

namespace {

int nb_index(const std::vector<int>& nbs, int u) {
  for (int i = 0; i < static_cast<int>(nbs.size()); i++)
    if (nbs[i] == u) return i;
  return -1;
}

int succ_nb(const std::vector<int>& nbs, int u) {
  int j = nb_index(nbs, u);
  return nbs[(j + 1) % nbs.size()];
}

int pred_nb(const std::vector<int>& nbs, int u) {
  int j = nb_index(nbs, u);
  return nbs[(j + nbs.size() - 1) % nbs.size()];
}

void replace_nb(std::vector<std::vector<int>>& rot, int v, int old_nb, int new_nb) {
  int j = nb_index(rot[v], old_nb);
  if (j < 0) throw Error(Err::Internal, "replace_nb: edge missing");
  rot[v][j] = new_nb;
}

void delete_edge(std::vector<std::vector<int>>& rot, int u, int v) {
  int j = nb_index(rot[u], v);
  int k = nb_index(rot[v], u);
  if (j < 0 || k < 0) throw Error(Err::Internal, "delete_edge: edge missing");
  rot[u].erase(rot[u].begin() + j);
  rot[v].erase(rot[v].begin() + k);
}

// facial walk containing dart (u0 -> v0), returned starting at u0
std::vector<int> collect_face(const std::vector<std::vector<int>>& rot, int u0, int v0) {
  std::vector<int> walk;
  int u = u0, v = v0;
  size_t guard = 0;
  do {
    walk.push_back(u);
    int j = nb_index(rot[v], u);
    if (j < 0) throw Error(Err::Internal, "collect_face: broken dart");
    int w = rot[v][(j + 1) % rot[v].size()];
    u = v;
    v = w;
    if (++guard > 4 * rot.size() + 16) throw Error(Err::Internal, "collect_face: no closure");
  } while (!(u == u0 && v == v0));
  return walk;
}

std::vector<int> rotate_to(std::vector<int> walk, int v) {
  auto it = std::find(walk.begin(), walk.end(), v);
  if (it == walk.end()) throw Error(Err::Internal, "rotate_to: vertex not on walk");
  std::rotate(walk.begin(), it, walk.end());
  return walk;
}

// Build a Patch from a working rotation table: drop dead/empty vertices,
// remap ids, take the facial walk through dart (wu -> wv) as the boundary and
// rotate it so the code starts `start_shift` positions before `start_vertex`.
Patch build_part(const std::vector<std::vector<int>>& rot, const std::vector<char>& dead,
                 int wu, int wv, int start_vertex, int start_shift) {
  std::vector<int> walk = collect_face(rot, wu, wv);
  walk = rotate_to(std::move(walk), start_vertex);
  int n = static_cast<int>(walk.size());
  int s = ((start_shift % n) + n) % n;
  std::rotate(walk.begin(), walk.begin() + s, walk.end());

  // keep exactly the component reachable from start_vertex
  std::vector<int> remap(rot.size(), -1);
  std::vector<int> order;
  remap[start_vertex] = 0;
  order.push_back(start_vertex);
  for (size_t qi = 0; qi < order.size(); qi++) {
    for (int w : rot[order[qi]]) {
      if (remap[w] < 0) {
        if (dead[w]) throw Error(Err::Internal, "build_part: edge to deleted vertex");
        remap[w] = static_cast<int>(order.size());
        order.push_back(w);
      }
    }
  }
  PlaneGraphData g;
  g.rot.resize(order.size());
  for (size_t i = 0; i < order.size(); i++) {
    for (int w : rot[order[i]]) g.rot[i].push_back(remap[w]);
  }
  g.boundary.reserve(walk.size());
  for (int v : walk) {
    if (remap[v] < 0) throw Error(Err::Internal, "build_part: boundary outside component");
    g.boundary.push_back(remap[v]);
  }
  return Patch::validate(std::move(g));
}

bool forced_left(int i, int b) { return (i <= b && i % 2 == 1) || (i > b && i % 2 == 0); }

// forced walk for parameters (u0, l, b); empty result when the walk leaves
// the legal pattern
std::vector<int> walk_1bend(const Patch& p, int u0, int l, int b) {
  const auto& rot = p.rot();
  int interior = -1;
  if (p.degree(u0) == 3) {
    for (int w : rot[u0])
      if (!p.on_boundary(w)) interior = w;
  }
  if (interior < 0) return {};
  std::vector<int> vs{u0, interior};
  for (int i = 1; i < l; i++) {
    int v = vs[i], u = vs[i - 1];
    if (p.on_boundary(v)) return {};
    int j = nb_index(rot[v], u);
    int next = forced_left(i, b) ? rot[v][(j + 1) % 3] : rot[v][(j + 2) % 3];
    vs.push_back(next);
  }
  if (p.on_boundary(vs[l])) return {};
  std::vector<char> seen(p.num_vertices(), 0);
  for (int v : vs) {
    if (seen[v]) return {};
    seen[v] = 1;
  }
  return vs;
}

std::vector<int> turn_record(int l, int b) {
  std::vector<int> t;
  if (l == 0) return t;
  t.push_back(0);
  for (int i = 1; i < l; i++) t.push_back(t.back() + (forced_left(i, b) ? -1 : 1));
  return t;
}

int face_min_dist(const Patch& p, const std::vector<int>& face) {
  // BFS distance from the boundary, minimized over the face's vertices
  std::vector<int> dist(p.num_vertices(), -1);
  std::deque<int> q;
  for (int v : p.boundary()) {
    dist[v] = 0;
    q.push_back(v);
  }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : p.rot()[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push_back(w);
      }
  }
  int best = p.num_vertices();
  for (int v : face) best = std::min(best, dist[v]);
  return best;
}

}  // namespace

OneBendPath find_1bend_path(const Patch& p, int face_idx) {
  auto all = all_1bend_paths(p, face_idx);
  if (all.empty()) throw Error(Err::Internal, "no 1-bend path found");
  return all.front();
}

std::vector<OneBendPath> all_1bend_paths(const Patch& p, int face_idx) {
  const auto& face = p.inner_faces().at(face_idx);
  std::vector<char> on_face(p.num_vertices(), 0);
  for (int v : face) on_face[v] = 1;

  // length 0: the face touches the boundary
  for (int v : p.boundary())
    if (on_face[v]) return {OneBendPath{{v}, 0, {}}};

  int target = face_min_dist(p, face);
  std::vector<OneBendPath> out;
  for (int u0 : p.boundary()) {
    for (int b = 0; b <= target; b += 2) {
      auto vs = walk_1bend(p, u0, target, b);
      if (vs.empty() || !on_face[vs[target]]) continue;
      bool early = false;
      for (int i = 0; i < target && !early; i++) early = on_face[vs[i]];
      if (early) continue;
      out.push_back(OneBendPath{std::move(vs), b, turn_record(target, b)});
    }
  }
  return out;
}

namespace {

CutResult cut_path(const Patch& p, const std::vector<int>& face, const OneBendPath& path) {
  const int l = path.length();
  const auto& u = path.vertices;
  const auto& rot0 = p.rot();

  // path sanity: forced turn pattern and shortestness
  if (path.bend % 2 != 0 || path.bend < 0 || path.bend > l)
    throw Error(Err::NotOneBend, "bend must be even and within the path");
  for (int i = 1; i <= l; i++) {
    if (nb_index(rot0[u[i]], u[i - 1]) < 0)
      throw Error(Err::NotOneBend, "path vertices not adjacent");
    if (i < l) {
      bool left = succ_nb(rot0[u[i]], u[i - 1]) == u[i + 1];
      if (left != forced_left(i, path.bend))
        throw Error(Err::NotOneBend, "turn sequence does not match the bend");
    }
  }
  for (int i = 1; i <= l; i++)
    if (p.on_boundary(u[i]))
      throw Error(Err::NotOneBend, "interior path vertices must avoid the boundary");
  std::vector<char> on_face(p.num_vertices(), 0);
  for (int v : face) on_face[v] = 1;
  if (!on_face[u[l]]) throw Error(Err::PathNotIncident, "path does not reach the face");
  for (int i = 0; i < l; i++)
    if (on_face[u[i]]) throw Error(Err::NotOneBend, "path touches the face early");
  if (face_min_dist(p, face) != l) throw Error(Err::NotOneBend, "path is not shortest");

  int pos = p.boundary_index(u[0]);
  int n_b = static_cast<int>(p.boundary().size());
  int p_nb = p.boundary()[(pos + n_b - 1) % n_b];
  int q_nb = p.boundary()[(pos + 1) % n_b];
  if (succ_nb(rot0[u[0]], p_nb) != q_nb || p.degree(u[0]) != 3)
    throw Error(Err::Internal, "boundary rotation out of order");
  if (succ_nb(rot0[u[0]], q_nb) != u[1])
    throw Error(Err::Internal, "path does not leave through the interior edge");

  // f_a / f_b: the face neighbors of u_l, left and right of the path
  int f_a = succ_nb(rot0[u[l]], u[l - 1]);
  int f_b = succ_nb(rot0[u[l]], f_a);

  std::vector<std::vector<int>> rot = rot0;
  int V = static_cast<int>(rot.size());
  std::vector<int> w(l + 1);
  for (int i = 0; i <= l; i++) {
    w[i] = V + i;
    rot.emplace_back();
  }

  // v side keeps the original ids
  rot[u[0]] = {p_nb, u[1]};
  for (int i = 1; i < l; i++) {
    bool left = forced_left(i, path.bend);
    int x = -1;
    for (int nb : rot0[u[i]])
      if (nb != u[i - 1] && nb != u[i + 1]) x = nb;
    if (left) {
      rot[u[i]] = {u[i - 1], u[i + 1], x};  // x stays on the right (v) side
    } else {
      rot[u[i]] = {u[i - 1], u[i + 1]};
      rot[w[i]] = {w[i - 1], x, w[i + 1]};
      replace_nb(rot, x, u[i], w[i]);
    }
    if (left) rot[w[i]] = {w[i - 1], w[i + 1]};
  }
  rot[u[l]] = {u[l - 1], f_b};
  rot[w[0]] = {q_nb, w[1]};
  rot[w[l]] = {w[l - 1], f_a};
  replace_nb(rot, q_nb, u[0], w[0]);
  replace_nb(rot, f_a, u[l], w[l]);

  std::vector<char> dead(rot.size(), 0);
  Patch part = build_part(rot, dead, p_nb, u[0], u[0], 0);
  return CutResult{{std::move(part)}, OpI{0, pos, l, path.bend}};
}

CutResult cut_flat(const Patch& p, const std::vector<int>& face) {
  const int fl = static_cast<int>(face.size());  // = 5
  const auto& bd = p.boundary();
  int n_b = static_cast<int>(bd.size());

  // boundary darts (u -> v) along the outer walk
  auto is_boundary_dart = [&](int a, int b) {
    int i = p.boundary_index(a);
    return i >= 0 && bd[(i + 1) % n_b] == b;
  };
  // face edge j is (face[j] -> face[j+1]) in the face walk; it lies on the
  // boundary iff the boundary traverses it the other way round
  std::vector<char> bedge(fl, 0);
  int nbound = 0;
  for (int j = 0; j < fl; j++) {
    bedge[j] = is_boundary_dart(face[(j + 1) % fl], face[j]);
    if (bedge[j]) nbound++;
  }
  if (nbound == 0) throw Error(Err::PathNotIncident, "face has no boundary edge");

  if (nbound == fl) {
    // the patch is this single 5-cycle
    return CutResult{{}, OpIV{0}};
  }

  // maximal runs of boundary edges in face-walk order
  std::vector<std::pair<int, int>> runs;  // (start edge index, length)
  for (int j = 0; j < fl; j++) {
    if (bedge[j] && !bedge[(j + fl - 1) % fl]) {
      int len = 0;
      while (bedge[(j + len) % fl]) len++;
      runs.push_back({j, len});
    }
  }

  std::vector<std::vector<int>> rot = p.rot();
  std::vector<char> dead(rot.size(), 0);
  auto delete_run = [&](int start, int len) {
    for (int t = 0; t < len; t++)
      delete_edge(rot, face[(start + t) % fl], face[(start + t + 1) % fl]);
    for (int t = 1; t < len; t++) {
      int mid = face[(start + t) % fl];
      if (!rot[mid].empty()) throw Error(Err::Internal, "run middle still attached");
      dead[mid] = 1;
    }
  };
  auto bpred = [&](int v) { return bd[(p.boundary_index(v) + n_b - 1) % n_b]; };

  if (runs.size() == 1) {
    auto [start, x] = runs[0];
    int e_A = face[(start + x) % fl];  // run start in boundary order
    int pos = p.boundary_index(e_A);
    delete_run(start, x);
    Patch part = build_part(rot, dead, bpred(e_A), e_A, e_A, 0);
    return CutResult{{std::move(part)}, OpII{0, pos, x}};
  }

  if (runs.size() != 2) throw Error(Err::Internal, "5-face with >2 boundary runs");

  // type III: the longer run is the 3,(2)^a,3 block; ties by boundary index
  int ia = 0;
  if (runs[0].second == runs[1].second) {
    int s0 = p.boundary_index(face[(runs[0].first + runs[0].second) % fl]);
    int s1 = p.boundary_index(face[(runs[1].first + runs[1].second) % fl]);
    ia = s0 < s1 ? 0 : 1;
  } else {
    ia = runs[0].second > runs[1].second ? 0 : 1;
  }
  auto [startA, lenA] = runs[ia];
  auto [startB, lenB] = runs[1 - ia];
  if (lenB != 1 || lenA > 2) throw Error(Err::Internal, "unexpected run lengths");
  int a = lenA - 1;

  int alpha0 = face[(startA + lenA) % fl];
  int alpha1 = face[startA];
  int beta0 = face[(startB + 1) % fl];
  int beta1 = face[startB];

  // gap interior counts: G2 runs from beta0 to alpha1 in face-walk order,
  // G1 from alpha0 to beta1
  int g1 = ((startB - startA - lenA) % fl + fl) % fl;
  int g2 = ((startA - startB - 1) % fl + fl) % fl;
  int b = g2 - 1, c = g1 - 1;
  if (a + b + c != 1) throw Error(Err::Internal, "type III accounting");

  int pos1 = p.boundary_index(alpha0);
  int pos2 = p.boundary_index(beta0);
  Side side = a == 0 ? (b == 1 ? Side::first : Side::second) : Side::none;

  int pred_b0 = bpred(beta0);
  int pred_a0 = bpred(alpha0);
  delete_run(startA, lenA);
  delete_run(startB, lenB);
  Patch out1 = build_part(rot, dead, pred_b0, beta0, beta0, 0);
  Patch out2 = build_part(rot, dead, pred_a0, alpha0, alpha0, 0);
  return CutResult{{std::move(out1), std::move(out2)}, OpIII{0, pos1, a, pos2, side}};
}

}  // namespace

CutResult cut(const Patch& p, int face_idx, const OneBendPath& path) {
  const auto& face = p.inner_faces().at(face_idx);
  if (face.size() != 5) throw Error(Err::NotFiveFace, "cut needs a 5-face");
  if (path.vertices.empty()) throw Error(Err::NotOneBend, "empty path");
  int u0 = path.vertices[0];
  if (!p.on_boundary(u0)) throw Error(Err::PathNotIncident, "path must start on the boundary");
  if (path.length() == 0) {
    bool incident = std::find(face.begin(), face.end(), u0) != face.end();
    if (!incident) throw Error(Err::PathNotIncident, "length-0 path must start on the face");
    return cut_flat(p, face);
  }
  return cut_path(p, face, path);
}

namespace {

void check_degree(const Patch& p, int v, int want) {
  if (p.degree(v) != want)
    throw Error(Err::AnchorMismatch, "degree at anchor does not match the post-pattern");
}

Patch reverse_i(const Patch& m, const OpI& op, int o) {
  const auto& bd = m.boundary();
  int n = static_cast<int>(bd.size());
  int l = op.l, blen = 2 * l + 6;
  if (n < blen + 2) throw Error(Err::AnchorMismatch, "member too short for the block");
  auto sig = sigma_pattern(l, op.b);
  auto at = [&](int i) { return bd[((o + i) % n + n) % n]; };

  // expected block degrees: 2, sigma, 2, 3,3,3,3, 2, comp-rev(sigma), 2
  std::vector<int> expect{2};
  expect.insert(expect.end(), sig.begin(), sig.end());
  expect.push_back(2);
  for (int i = 0; i < 4; i++) expect.push_back(3);
  expect.push_back(2);
  for (auto it = sig.rbegin(); it != sig.rend(); ++it) expect.push_back(5 - *it);
  expect.push_back(2);
  for (int i = 0; i < blen; i++) check_degree(m, at(i), expect[i]);

  std::vector<int> v(l + 1), w(l + 1);
  for (int j = 0; j <= l; j++) {
    v[j] = at(j);
    w[j] = at(2 * l + 5 - j);
  }
  int ff1 = at(l + 1), ff4 = at(l + 4);
  int p_nb = at(-1), q_nb = at(blen);
  if (p_nb == q_nb) throw Error(Err::AnchorMismatch, "pre-image context too small");

  std::vector<std::vector<int>> rot = m.rot();
  std::vector<char> dead(rot.size(), 0);
  std::vector<int> fold(rot.size(), -1);  // w id -> merged id
  for (int j = 0; j <= l; j++) {
    fold[w[j]] = v[j];
    dead[w[j]] = 1;
  }

  auto third_of = [&](int vert, int nb_a, int nb_b) {
    for (int nb : m.rot()[vert])
      if (nb != nb_a && nb != nb_b) return nb;
    throw Error(Err::Internal, "third neighbor missing");
  };

  // merged rotations along the path
  rot[v[0]] = {p_nb, q_nb, v[1]};
  for (int j = 1; j < l; j++) {
    if (sig[j - 1] == 3) {
      int x = third_of(v[j], v[j - 1], v[j + 1]);
      rot[v[j]] = {v[j - 1], v[j + 1], x};
    } else {
      int x = third_of(w[j], w[j - 1], w[j + 1]);
      if (fold[x] >= 0) x = fold[x];
      rot[v[j]] = {v[j - 1], x, v[j + 1]};
    }
  }
  rot[v[l]] = {v[l - 1], ff4, ff1};

  // re-point every surviving vertex at the merged ids
  for (int vert = 0; vert < static_cast<int>(rot.size()); vert++) {
    if (dead[vert]) continue;
    for (int& nb : rot[vert])
      if (fold[nb] >= 0) nb = fold[nb];
  }
  for (int j = 0; j <= l; j++) rot[w[j]].clear();

  // duplicate guard: merging must not leave parallel edges
  for (int vert = 0; vert < static_cast<int>(rot.size()); vert++) {
    for (size_t i = 0; i < rot[vert].size(); i++)
      for (size_t k = i + 1; k < rot[vert].size(); k++)
        if (rot[vert][i] == rot[vert][k])
          throw Error(Err::AnchorMismatch, "reverse would create a parallel edge");
  }

  return build_part(rot, dead, p_nb, v[0], v[0], -op.pos);
}

Patch reverse_ii(const Patch& m, const OpII& op, int o) {
  const auto& bd = m.boundary();
  int n = static_cast<int>(bd.size());
  int x = op.x;
  if (x < 1 || x > 4) throw Error(Err::AnchorMismatch, "x out of range");
  if (n < 6 - x) throw Error(Err::AnchorMismatch, "member too short for the block");
  auto at = [&](int i) { return bd[((o + i) % n + n) % n]; };

  int e_A = at(0), e_B = at(5 - x);
  check_degree(m, e_A, 2);
  check_degree(m, e_B, 2);
  for (int i = 1; i <= 4 - x; i++) check_degree(m, at(i), 3);

  std::vector<std::vector<int>> rot = m.rot();
  if (x == 1 && nb_index(rot[e_A], e_B) >= 0)
    throw Error(Err::AnchorMismatch, "reverse would create a parallel edge");

  int V = static_cast<int>(rot.size());
  std::vector<int> mids(x - 1);
  for (int i = 0; i < x - 1; i++) {
    mids[i] = V + i;
    rot.emplace_back();
  }
  auto chain_at = [&](int i) { return i == 0 ? e_A : i == x ? e_B : mids[i - 1]; };
  for (int i = 1; i < x; i++) rot[mids[i - 1]] = {chain_at(i - 1), chain_at(i + 1)};

  // outer-face insertion: new neighbor goes between the boundary predecessor
  // and successor
  rot[e_A] = {at(-1), chain_at(1), at(1)};
  rot[e_B] = {at(4 - x), chain_at(x - 1), at(6 - x)};

  std::vector<char> dead(rot.size(), 0);
  return build_part(rot, dead, at(-1), e_A, e_A, -op.pos);
}

Patch reverse_iii(const Patch& m1, const Patch& m2, const OpIII& op, const Anchor& anchor) {
  int a = op.a;
  int b = (a == 0 && op.side == Side::first) ? 1 : 0;
  int c = 1 - a - b;
  if (a == 0 && op.side == Side::none)
    throw Error(Err::AnchorMismatch, "side required when a = 0");

  const auto& bd1 = m1.boundary();
  const auto& bd2 = m2.boundary();
  int n1 = static_cast<int>(bd1.size()), n2 = static_cast<int>(bd2.size());
  auto at1 = [&](int i) { return bd1[((anchor.offset1 + i) % n1 + n1) % n1]; };
  auto at2 = [&](int i) { return bd2[((anchor.offset2 + i) % n2 + n2) % n2]; };

  int beta0 = at1(0), alpha1 = at1(b + 1);
  int alpha0 = at2(0), beta1 = at2(c + 1);
  check_degree(m1, beta0, 2);
  check_degree(m1, alpha1, 2);
  check_degree(m2, alpha0, 2);
  check_degree(m2, beta1, 2);
  for (int i = 1; i <= b; i++) check_degree(m1, at1(i), 3);
  for (int i = 1; i <= c; i++) check_degree(m2, at2(i), 3);

  // combine the two components into one vertex space
  int V1 = m1.num_vertices();
  std::vector<std::vector<int>> rot = m1.rot();
  for (const auto& nbs : m2.rot()) {
    rot.emplace_back();
    for (int w : nbs) rot.back().push_back(w + V1);
  }
  auto s2 = [&](int v) { return v + V1; };

  int mid = -1;
  if (a == 1) {
    mid = static_cast<int>(rot.size());
    rot.emplace_back();
    rot[mid] = {s2(alpha0), alpha1};
  }
  int a0_new = a == 1 ? mid : alpha1;
  int a1_new = a == 1 ? mid : s2(alpha0);

  rot[alpha1] = {at1(b), a1_new, at1(b + 2)};
  rot[beta0] = {at1(-1), s2(beta1), at1(1)};
  rot[s2(alpha0)] = {s2(at2(-1)), a0_new, s2(at2(1))};
  rot[s2(beta1)] = {s2(at2(c)), beta0, s2(at2(c + 2))};

  std::vector<char> dead(rot.size(), 0);
  return build_part(rot, dead, s2(at2(-1)), s2(alpha0), s2(alpha0), -op.pos1);
}

}  // namespace

PatchSet reverse_cut(const PatchSet& ps, const SeqOp& op, const Anchor& anchor) {
  int seq = op_seq(op);
  if (std::holds_alternative<OpIV>(op)) {
    if (seq < 0 || seq > static_cast<int>(ps.size()))
      throw Error(Err::AnchorMismatch, "insertion index out of range");
    PatchSet out;
    out.reserve(ps.size() + 1);
    for (int i = 0; i < static_cast<int>(ps.size()); i++) {
      if (i == seq) out.push_back(make_cycle(5));
      out.push_back(ps[i]);
    }
    if (seq == static_cast<int>(ps.size())) out.push_back(make_cycle(5));
    return out;
  }

  if (seq < 0 || seq >= static_cast<int>(ps.size()))
    throw Error(Err::AnchorMismatch, "member index out of range");

  PatchSet out;
  if (const auto* op3 = std::get_if<OpIII>(&op)) {
    if (seq + 1 >= static_cast<int>(ps.size()))
      throw Error(Err::AnchorMismatch, "type III needs two adjacent members");
    Patch joined = reverse_iii(ps[seq], ps[seq + 1], *op3, anchor);
    for (int i = 0; i < static_cast<int>(ps.size()); i++) {
      if (i == seq) out.push_back(std::move(joined));
      else if (i != seq + 1) out.push_back(ps[i]);
    }
    return out;
  }

  for (int i = 0; i < static_cast<int>(ps.size()); i++) {
    if (i != seq) {
      out.push_back(ps[i]);
    } else if (const auto* op1 = std::get_if<OpI>(&op)) {
      out.push_back(reverse_i(ps[i], *op1, anchor.offset1));
    } else {
      out.push_back(reverse_ii(ps[i], std::get<OpII>(op), anchor.offset1));
    }
  }
  return out;
}

}  // namespace penthex
