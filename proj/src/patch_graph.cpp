#include "penthex/patch_graph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <sstream>

namespace penthex {

static int nb_index(const std::vector<int>& nbs, int u) {
  for (int i = 0; i < static_cast<int>(nbs.size()); i++)
    if (nbs[i] == u) return i;
  return -1;
}

std::vector<std::vector<int>> trace_faces(const std::vector<std::vector<int>>& rot) {
  int n = static_cast<int>(rot.size());
  // dart id: (v, i) -> position of neighbor i in rot[v]
  std::vector<int> off(n + 1, 0);
  for (int v = 0; v < n; v++) off[v + 1] = off[v] + static_cast<int>(rot[v].size());
  std::vector<char> seen(off[n], 0);

  std::vector<std::vector<int>> faces;
  for (int v0 = 0; v0 < n; v0++) {
    for (int i0 = 0; i0 < static_cast<int>(rot[v0].size()); i0++) {
      if (seen[off[v0] + i0]) continue;
      std::vector<int> walk;
      int v = v0, i = i0;
      while (!seen[off[v] + i]) {
        seen[off[v] + i] = 1;
        walk.push_back(v);
        int w = rot[v][i];
        int j = nb_index(rot[w], v);
        if (j < 0) throw Error(Err::InconsistentRotation, "one-sided edge");
        // next dart: clockwise successor of v around w
        int k = (j + 1) % static_cast<int>(rot[w].size());
        v = w;
        i = k;
      }
      faces.push_back(std::move(walk));
    }
  }
  return faces;
}

int Patch::num_edges() const {
  int s = 0;
  for (const auto& nbs : g_.rot) s += static_cast<int>(nbs.size());
  return s / 2;
}

BoundaryCode Patch::boundary_code() const {
  std::vector<int> d;
  d.reserve(g_.boundary.size());
  for (int v : g_.boundary) d.push_back(degree(v));
  return BoundaryCode(std::move(d));
}

int Patch::f5() const {
  int c = 0;
  for (const auto& f : inner_faces_)
    if (f.size() == 5) c++;
  return c;
}

Patch Patch::validate(PlaneGraphData g) {
  int n = static_cast<int>(g.rot.size());
  if (n == 0) throw Error(Err::InconsistentRotation, "empty graph");

  for (int v = 0; v < n; v++) {
    if (g.rot[v].size() < 2) throw Error(Err::BadDegree, "vertex of degree < 2");
    for (size_t i = 0; i < g.rot[v].size(); i++) {
      int w = g.rot[v][i];
      if (w < 0 || w >= n) throw Error(Err::InconsistentRotation, "neighbor out of range");
      if (w == v) throw Error(Err::InconsistentRotation, "self loop");
      for (size_t j = i + 1; j < g.rot[v].size(); j++)
        if (g.rot[v][j] == w) throw Error(Err::InconsistentRotation, "parallel edge");
      if (nb_index(g.rot[w], v) < 0)
        throw Error(Err::InconsistentRotation, "one-sided edge");
    }
  }

  // connected
  std::vector<char> vis(n, 0);
  std::deque<int> q{0};
  vis[0] = 1;
  int reached = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : g.rot[v])
      if (!vis[w]) {
        vis[w] = 1;
        reached++;
        q.push_back(w);
      }
  }
  if (reached != n) throw Error(Err::NotTwoConnected, "graph is disconnected");

  if (g.boundary.size() < 3) throw Error(Err::InconsistentRotation, "boundary too short");

  auto faces = trace_faces(g.rot);

  // Euler: planarity of the rotation system
  int E = 0;
  for (const auto& nbs : g.rot) E += static_cast<int>(nbs.size());
  E /= 2;
  if (n - E + static_cast<int>(faces.size()) != 2)
    throw Error(Err::InconsistentRotation, "embedding is not planar");

  // the stored boundary must be the facial walk from (boundary[0] -> boundary[1])
  std::vector<int> bindex(n, -1);
  for (size_t i = 0; i < g.boundary.size(); i++) {
    int v = g.boundary[i];
    if (v < 0 || v >= n || bindex[v] >= 0)
      throw Error(Err::NotTwoConnected, "boundary is not a simple cycle");
    bindex[v] = static_cast<int>(i);
  }
  int outer = -1;
  for (size_t fi = 0; fi < faces.size(); fi++) {
    const auto& w = faces[fi];
    if (w.size() != g.boundary.size()) continue;
    // same cyclic walk with the same start?
    auto it = std::find(w.begin(), w.end(), g.boundary[0]);
    if (it == w.end()) continue;
    int s = static_cast<int>(it - w.begin());
    bool same = true;
    for (size_t i = 0; i < w.size() && same; i++)
      same = w[(s + i) % w.size()] == g.boundary[i];
    if (same) {
      outer = static_cast<int>(fi);
      break;
    }
  }
  if (outer < 0)
    throw Error(Err::InconsistentRotation, "stored boundary is not a facial walk");

  std::vector<std::vector<int>> inner;
  for (size_t fi = 0; fi < faces.size(); fi++) {
    if (static_cast<int>(fi) == outer) continue;
    const auto& w = faces[fi];
    std::vector<char> seen_v(n, 0);
    for (int v : w) {
      if (seen_v[v]) throw Error(Err::NotTwoConnected, "facial walk is not a cycle");
      seen_v[v] = 1;
    }
    if (w.size() != 5 && w.size() != 6)
      throw Error(Err::BadFaceLength, "inner face of length " + std::to_string(w.size()));
    inner.push_back(w);
  }

  for (int v = 0; v < n; v++) {
    int deg = static_cast<int>(g.rot[v].size());
    if (bindex[v] >= 0) {
      if (deg != 2 && deg != 3)
        throw Error(Err::BadDegree, "boundary vertex of degree " + std::to_string(deg));
    } else if (deg != 3) {
      throw Error(Err::BadDegree, "interior vertex of degree " + std::to_string(deg));
    }
  }

  Patch p;
  p.g_ = std::move(g);
  p.inner_faces_ = std::move(inner);
  p.boundary_index_ = std::move(bindex);
  return p;
}

Patch validate_patch(PlaneGraphData g) { return Patch::validate(std::move(g)); }
BoundaryCode boundary_code_of(const Patch& p) { return p.boundary_code(); }
int f5_patch(const Patch& p) { return p.f5(); }

Patch make_cycle(int n) {
  PlaneGraphData g;
  g.rot.resize(n);
  for (int i = 0; i < n; i++) {
    g.rot[i] = {(i + n - 1) % n, (i + 1) % n};
    g.boundary.push_back(i);
  }
  return Patch::validate(std::move(g));
}

Patch rotate_start(const Patch& p, int k) {
  int n = static_cast<int>(p.boundary().size());
  int s = ((k % n) + n) % n;
  PlaneGraphData g;
  g.rot = p.rot();
  g.boundary.reserve(n);
  for (int i = 0; i < n; i++) g.boundary.push_back(p.boundary()[(s + i) % n]);
  return Patch::validate(std::move(g));
}

int dist_to_boundary(const Patch& p) {
  int n = p.num_vertices();
  std::vector<int> dist(n, -1);
  std::deque<int> q;
  for (int v : p.boundary()) {
    dist[v] = 0;
    q.push_back(v);
  }
  int best = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int w : p.rot()[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        best = std::max(best, dist[w]);
        q.push_back(w);
      }
  }
  return best;
}

int dist_to_boundary(const PatchSet& ps) {
  int best = 0;
  for (const auto& p : ps) best = std::max(best, dist_to_boundary(p));
  return best;
}

std::string canonical_form(const Patch& p) {
  int n = p.num_vertices();
  std::vector<int> newid(n, -1), disc(n, -1), order;
  order.reserve(n);
  int root = p.boundary()[0];
  newid[root] = 0;
  disc[root] = p.boundary()[1];
  order.push_back(root);
  int next = 1;
  for (size_t qi = 0; qi < order.size(); qi++) {
    int v = order[qi];
    const auto& nbs = p.rot()[v];
    int start = nb_index(nbs, disc[v]);
    for (size_t j = 0; j < nbs.size(); j++) {
      int w = nbs[(start + j) % nbs.size()];
      if (newid[w] < 0) {
        newid[w] = next++;
        disc[w] = v;
        order.push_back(w);
      }
    }
  }
  std::ostringstream os;
  os << n << ';';
  for (int v : order) {
    const auto& nbs = p.rot()[v];
    int start = nb_index(nbs, disc[v]);
    for (size_t j = 0; j < nbs.size(); j++) {
      if (j) os << ',';
      os << newid[nbs[(start + j) % nbs.size()]];
    }
    os << ';';
  }
  return os.str();
}

bool equivalent(const Patch& p, const Patch& q) {
  if (p.boundary_code() != q.boundary_code()) return false;
  return canonical_form(p) == canonical_form(q);
}

std::string to_record(const Patch& p) {
  std::ostringstream os;
  os << "patch v1 n=" << p.num_vertices() << " start=" << p.boundary()[0]
     << " next=" << p.boundary()[1] << "\n";
  for (int v = 0; v < p.num_vertices(); v++) {
    os << "rot " << v << ":";
    for (int w : p.rot()[v]) os << ' ' << w;
    os << "\n";
  }
  return os.str();
}

std::string to_record(const PatchSet& ps) {
  std::ostringstream os;
  os << "patchset v1 count=" << ps.size() << "\n";
  for (const auto& p : ps) os << to_record(p);
  return os.str();
}

static Patch parse_patch_lines(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw Error(Err::BadDigit, "missing patch header");
  int n = -1, start = -1, next = -1;
  {
    std::istringstream hs(header);
    std::string tag, ver, kv;
    hs >> tag >> ver;
    if (tag != "patch" || ver != "v1")
      throw Error(Err::BadDigit, "bad patch header: " + header);
    while (hs >> kv) {
      auto eq = kv.find('=');
      if (eq == std::string::npos) continue;
      std::string key = kv.substr(0, eq);
      int val = std::stoi(kv.substr(eq + 1));
      if (key == "n") n = val;
      else if (key == "start") start = val;
      else if (key == "next") next = val;
    }
  }
  if (n <= 0 || start < 0 || next < 0) throw Error(Err::BadDigit, "incomplete patch header");
  PlaneGraphData g;
  g.rot.resize(n);
  for (int i = 0; i < n; i++) {
    std::string line;
    if (!std::getline(in, line)) throw Error(Err::BadDigit, "truncated patch record");
    std::istringstream ls(line);
    std::string tag;
    int v;
    char colon;
    ls >> tag >> v >> colon;
    if (tag != "rot" || v < 0 || v >= n) throw Error(Err::BadDigit, "bad rot line: " + line);
    int w;
    while (ls >> w) g.rot[v].push_back(w);
  }
  // reconstruct the boundary walk from the start dart
  g.boundary.push_back(start);
  int v = start, u = -1;
  {
    if (nb_index(g.rot[start], next) < 0)
      throw Error(Err::BadDigit, "start dart is not an edge");
    u = start;
    v = next;
  }
  while (v != start) {
    g.boundary.push_back(v);
    if (static_cast<int>(g.boundary.size()) > n)
      throw Error(Err::BadDigit, "boundary walk does not close");
    int j = nb_index(g.rot[v], u);
    int w = g.rot[v][(j + 1) % g.rot[v].size()];
    u = v;
    v = w;
  }
  return Patch::validate(std::move(g));
}

Patch parse_patch_record(const std::string& text) {
  std::istringstream in(text);
  return parse_patch_lines(in);
}

PatchSet parse_patchset_record(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw Error(Err::BadDigit, "missing patchset header");
  std::istringstream hs(header);
  std::string tag, ver, kv;
  hs >> tag >> ver >> kv;
  if (tag != "patchset" || ver != "v1" || kv.rfind("count=", 0) != 0)
    throw Error(Err::BadDigit, "bad patchset header: " + header);
  int count = std::stoi(kv.substr(6));
  PatchSet ps;
  for (int i = 0; i < count; i++) ps.push_back(parse_patch_lines(in));
  return ps;
}

std::string to_dot(const Patch& p) {
  std::ostringstream os;
  os << "graph patch {\n";
  for (int v = 0; v < p.num_vertices(); v++)
    for (int w : p.rot()[v])
      if (v < w) os << "  " << v << " -- " << w << ";\n";
  os << "}\n";
  return os.str();
}

// Tutte-style layout: boundary pinned to a regular polygon, interior vertices
// iterated to the average of their neighbors.
static std::vector<std::pair<double, double>> layout(const Patch& p) {
  int n = p.num_vertices();
  std::vector<std::pair<double, double>> xy(n, {0.0, 0.0});
  int bn = static_cast<int>(p.boundary().size());
  for (int i = 0; i < bn; i++) {
    double a = 2.0 * 3.14159265358979323846 * i / bn;
    // clockwise placement to match the stored orientation
    xy[p.boundary()[i]] = {std::sin(a), std::cos(a)};
  }
  for (int round = 0; round < 400; round++) {
    for (int v = 0; v < n; v++) {
      if (p.on_boundary(v)) continue;
      double sx = 0, sy = 0;
      for (int w : p.rot()[v]) {
        sx += xy[w].first;
        sy += xy[w].second;
      }
      int d = p.degree(v);
      xy[v] = {sx / d, sy / d};
    }
  }
  return xy;
}

static void svg_patch(std::ostringstream& os, const Patch& p, double cx, double cy, double r) {
  auto xy = layout(p);
  auto px = [&](double x) { return cx + r * x; };
  auto py = [&](double y) { return cy + r * y; };
  for (int v = 0; v < p.num_vertices(); v++)
    for (int w : p.rot()[v])
      if (v < w)
        os << "  <line x1=\"" << px(xy[v].first) << "\" y1=\"" << py(xy[v].second)
           << "\" x2=\"" << px(xy[w].first) << "\" y2=\"" << py(xy[w].second)
           << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  int s = p.boundary()[0];
  os << "  <circle cx=\"" << px(xy[s].first) << "\" cy=\"" << py(xy[s].second)
     << "\" r=\"4\" fill=\"red\"/>\n";
}

std::string to_svg(const Patch& p) { return to_svg(PatchSet{p}); }

std::string to_svg(const PatchSet& ps) {
  std::ostringstream os;
  int k = std::max<size_t>(1, ps.size());
  int w = 220 * k, h = 220;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
     << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
  for (size_t i = 0; i < ps.size(); i++)
    svg_patch(os, ps[i], 110.0 + 220.0 * i, 110.0, 90.0);
  os << "</svg>\n";
  return os.str();
}

}  // namespace penthex
