#include "flatfold/layers.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "flatfold/convex.hpp"

namespace flatfold {

namespace {

constexpr double kNudge = 1e-6;      // sample offset from arrangement vertices
constexpr double kAreaEps = 1e-10;   // minimum area to count as overlap
constexpr double kCoverMargin = 1e-9;
constexpr double kCollinear = 1e-7;  // crease images on a common line

bool covers(const std::vector<Point2>& poly, const Point2& q) {
  return point_in_convex(poly, q, kCoverMargin);
}

// Clip segment [a,b] to the box of half-width r; empty when outside.
std::optional<std::pair<Point2, Point2>> clip_to_box(Point2 a, Point2 b, double r) {
  double t0 = 0.0, t1 = 1.0;
  Vec2 d = b - a;
  auto clip = [&](double p, double q) {
    if (std::abs(p) < 1e-15) return q >= 0;
    double t = q / p;
    if (p < 0) {
      if (t > t1) return false;
      t0 = std::max(t0, t);
    } else {
      if (t < t0) return false;
      t1 = std::min(t1, t);
    }
    return true;
  };
  if (!clip(-d.x, a.x + r) || !clip(d.x, r - a.x) || !clip(-d.y, a.y + r) ||
      !clip(d.y, r - a.y))
    return std::nullopt;
  return std::pair{a + d * t0, a + d * t1};
}

}  // namespace

Overlay build_overlay(const FoldMap& m) {
  Overlay ov;
  const int n = m.face_count();
  const double r = m.pattern().clip_radius();
  ov.images.resize(n);
  for (FaceId f = 0; f < n; ++f) ov.images[f] = m.image_polygon(f);

  for (FaceId f = 0; f < n; ++f) {
    for (FaceId g = f + 1; g < n; ++g) {
      auto inter = convex_intersection(ov.images[f], ov.images[g]);
      if (std::abs(polygon_area2(inter)) * 0.5 > kAreaEps) ov.overlapping.insert({f, g});
    }
  }

  // Candidate points: image vertices and pairwise edge intersections. The
  // cells of the full edge arrangement refine the overlay, and every cell
  // is adjacent to such a candidate, so nudged samples reach every cell.
  struct Edge {
    Point2 a, b;
  };
  std::vector<Edge> edges;
  std::vector<Point2> cands;
  for (FaceId f = 0; f < n; ++f) {
    const auto& poly = ov.images[f];
    for (std::size_t i = 0; i < poly.size(); ++i) {
      edges.push_back({poly[i], poly[(i + 1) % poly.size()]});
      cands.push_back(poly[i]);
    }
  }
  const std::size_t ne = edges.size();
  for (std::size_t i = 0; i < ne; ++i) {
    cands.push_back((edges[i].a + edges[i].b) * 0.5);
    for (std::size_t j = i + 1; j < ne; ++j) {
      auto x = segment_intersection(edges[i].a, edges[i].b, edges[j].a, edges[j].b);
      if (x) cands.push_back(*x);
    }
  }

  // Coincident crease images are common in folded states; dedupe the
  // candidates on a fine grid before fanning out nudged samples.
  std::sort(cands.begin(), cands.end(), [](const Point2& a, const Point2& b) {
    return std::pair(a.x, a.y) < std::pair(b.x, b.y);
  });
  cands.erase(std::unique(cands.begin(), cands.end(),
                          [](const Point2& a, const Point2& b) {
                            return std::abs(a.x - b.x) < 1e-7 && std::abs(a.y - b.y) < 1e-7;
                          }),
              cands.end());

  std::map<std::vector<FaceId>, Point2> cell_map;
  auto add_sample = [&](const Point2& q) {
    std::vector<FaceId> cov;
    for (FaceId f = 0; f < n; ++f)
      if (covers(ov.images[f], q)) cov.push_back(f);
    if (cov.size() < 2) return;
    cell_map.try_emplace(std::move(cov), q);
  };
  for (const Point2& c : cands) {
    for (int k = 0; k < 8; ++k) {
      double a = (2 * k + 1) * std::numbers::pi / 8.0;
      add_sample(c + Vec2{std::cos(a), std::sin(a)} * kNudge);
    }
  }
  for (FaceId f = 0; f < n; ++f) {
    const auto& poly = ov.images[f];
    if (poly.empty()) continue;
    Point2 c{0, 0};
    for (const Point2& q : poly) c = c + q;
    add_sample(c * (1.0 / static_cast<double>(poly.size())));
  }
  for (auto& [cov, q] : cell_map) ov.cells.push_back({q, cov});

  // Taco-tortilla sites: one sample per crease-image sub-segment.
  const CreasePattern& pat = m.pattern();
  std::vector<std::optional<std::pair<Point2, Point2>>> crease_imgs(pat.crease_count());
  for (CreaseId c = 0; c < pat.crease_count(); ++c) {
    auto [a, b] = m.crease_image(c);
    crease_imgs[c] = clip_to_box(a, b, r);
  }
  for (CreaseId c = 0; c < pat.crease_count(); ++c) {
    if (!crease_imgs[c]) continue;
    auto [a, b] = *crease_imgs[c];
    auto [f, g] = m.complex().faces_of_crease(c);
    Vec2 d = b - a;
    double len = d.norm();
    if (len <= kLenEps) continue;
    std::vector<double> ts{0.0, 1.0};
    for (const Edge& e : edges) {
      auto x = segment_intersection(a, b, e.a, e.b);
      if (x) ts.push_back((*x - a).dot(d) / (len * len));
    }
    std::sort(ts.begin(), ts.end());
    for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
      if (ts[i + 1] - ts[i] < 1e-7 / len) continue;
      Point2 mid = a + d * ((ts[i] + ts[i + 1]) * 0.5);
      for (FaceId h = 0; h < n; ++h) {
        if (h == f || h == g) continue;
        if (covers(ov.images[h], mid)) ov.tortillas.push_back({c, f, g, h, mid});
      }
    }
  }

  // Taco-taco sites: collinear overlapping crease images opening to the
  // same side.
  auto face_side = [&](FaceId f, const Point2& mid, const Vec2& nrm) -> int {
    bool plus = covers(ov.images[f], mid + nrm * kNudge);
    bool minus = covers(ov.images[f], mid - nrm * kNudge);
    if (plus == minus) return 0;
    return plus ? 1 : -1;
  };
  for (CreaseId c1 = 0; c1 < pat.crease_count(); ++c1) {
    if (!crease_imgs[c1]) continue;
    auto [a1, b1] = *crease_imgs[c1];
    Vec2 d1 = b1 - a1;
    double len1 = d1.norm();
    if (len1 <= kLenEps) continue;
    Vec2 u1 = d1 * (1.0 / len1);
    Vec2 nrm{-u1.y, u1.x};
    for (CreaseId c2 = c1 + 1; c2 < pat.crease_count(); ++c2) {
      if (!crease_imgs[c2]) continue;
      auto [a2, b2] = *crease_imgs[c2];
      if (std::abs(nrm.dot(a2 - a1)) > kCollinear || std::abs(nrm.dot(b2 - a1)) > kCollinear)
        continue;
      double lo1 = 0.0, hi1 = len1;
      double t0 = u1.dot(a2 - a1), t1 = u1.dot(b2 - a1);
      if (t0 > t1) std::swap(t0, t1);
      double lo = std::max(lo1, t0), hi = std::min(hi1, t1);
      if (hi - lo < 1e-6) continue;
      Point2 mid = a1 + u1 * ((lo + hi) * 0.5);
      auto [f1, g1] = m.complex().faces_of_crease(c1);
      auto [f2, g2] = m.complex().faces_of_crease(c2);
      int sd1 = face_side(f1, mid, nrm);
      int sd2 = face_side(f2, mid, nrm);
      if (sd1 == 0 || sd1 != face_side(g1, mid, nrm)) continue;
      if (sd2 == 0 || sd2 != face_side(g2, mid, nrm)) continue;
      if (sd1 != sd2) continue;  // tacos open to opposite sides: no interaction
      Point2 q = mid + nrm * (kNudge * sd1);
      if (covers(ov.images[f1], q) && covers(ov.images[g1], q) && covers(ov.images[f2], q) &&
          covers(ov.images[g2], q))
        ov.tacos.push_back({c1, c2, f1, g1, f2, g2, q});
    }
  }
  return ov;
}

std::vector<OverlayCell> overlay_cells(const FoldMap& m) { return build_overlay(m).cells; }

// ── Validation ──────────────────────────────────────────────────────

namespace {

// Cycle detection on the above-relation restricted to one covering set;
// edge x→y when x lies above y.
bool cell_acyclic(const Layering& L, const std::vector<FaceId>& cov) {
  const int k = static_cast<int>(cov.size());
  std::vector<std::vector<int>> adj(k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || !L.has(cov[i], cov[j])) continue;
      if (L.is_above(cov[i], cov[j])) adj[i].push_back(j);
    }
  std::vector<int> state(k, 0);
  for (int s = 0; s < k; ++s) {
    if (state[s]) continue;
    std::vector<std::pair<int, std::size_t>> st{{s, 0}};
    state[s] = 1;
    while (!st.empty()) {
      auto& [v, idx] = st.back();
      if (idx < adj[v].size()) {
        int w = adj[v][idx++];
        if (state[w] == 1) return false;
        if (state[w] == 0) {
          state[w] = 1;
          st.push_back({w, 0});
        }
      } else {
        state[v] = 2;
        st.pop_back();
      }
    }
  }
  return true;
}

bool strictly_between(const Layering& L, FaceId x, FaceId a, FaceId b) {
  // x strictly between a and b: exactly one of a, b lies above x.
  return L.is_above(a, x) != L.is_above(b, x);
}

}  // namespace

CheckReport validate_layering(const FoldMap& m, const Layering& L) {
  return validate_layering(m, L, build_overlay(m));
}

CheckReport validate_layering(const FoldMap& m, const Layering& L, const Overlay& ov) {
  (void)m;
  CheckReport rep;
  for (const auto& pr : ov.overlapping) {
    if (!L.has(pr.first, pr.second)) {
      rep.failures.push_back({"layering-malformed",
                              "missing order for overlapping faces " +
                                  std::to_string(pr.first) + "," + std::to_string(pr.second)});
      return rep;
    }
  }
  for (const OverlayCell& cell : ov.cells) {
    if (!cell_acyclic(L, cell.covering))
      rep.failures.push_back({"cell-cycle", "covering order has a cycle at (" +
                                                std::to_string(cell.sample.x) + "," +
                                                std::to_string(cell.sample.y) + ")"});
  }
  for (const TortillaSite& t : ov.tortillas) {
    if (!L.has(t.h, t.f) || !L.has(t.h, t.g)) continue;
    if (L.is_above(t.h, t.f) != L.is_above(t.h, t.g))
      rep.failures.push_back(
          {"taco-tortilla", "face " + std::to_string(t.h) + " splits crease " +
                                std::to_string(t.crease) + " faces " + std::to_string(t.f) +
                                "," + std::to_string(t.g)});
  }
  for (const TacoSite& t : ov.tacos) {
    if (!L.has(t.f1, t.g1) || !L.has(t.f2, t.f1) || !L.has(t.f2, t.g1) ||
        !L.has(t.g2, t.f1) || !L.has(t.g2, t.g1))
      continue;
    if (strictly_between(L, t.f2, t.f1, t.g1) != strictly_between(L, t.g2, t.f1, t.g1))
      rep.failures.push_back({"taco-taco", "creases " + std::to_string(t.c1) + " and " +
                                               std::to_string(t.c2) + " interleave"});
  }
  return rep;
}

// ── Search ──────────────────────────────────────────────────────────

namespace {

// Union-find with parity for equality couplings between pair variables.
struct ParityDSU {
  std::vector<int> parent;
  std::vector<int> parity;
  explicit ParityDSU(int n) : parent(n), parity(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::pair<int, int> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [r, p] = find(parent[x]);
    parent[x] = r;
    parity[x] ^= p;
    return {r, parity[x]};
  }
  bool merge(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ rel;
    return true;
  }
};

}  // namespace

std::optional<Layering> search_layering(const FoldMap& m, int limit_faces) {
  if (m.face_count() > limit_faces)
    throw layering_error("search_layering: face count " + std::to_string(m.face_count()) +
                         " exceeds limit " + std::to_string(limit_faces));
  Overlay ov = build_overlay(m);
  std::vector<std::pair<FaceId, FaceId>> vars(ov.overlapping.begin(), ov.overlapping.end());
  const int nv = static_cast<int>(vars.size());
  std::map<std::pair<FaceId, FaceId>, int> var_id;
  for (int i = 0; i < nv; ++i) var_id[vars[i]] = i;
  auto lookup = [&](FaceId a, FaceId b) -> std::pair<int, int> {
    // Variable index and parity so that value ^ parity == "a above b".
    if (a < b) return {var_id.at({a, b}), 0};
    return {var_id.at({b, a}), 1};
  };
  auto have = [&](FaceId a, FaceId b) {
    return ov.overlapping.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  ParityDSU dsu(std::max(nv, 1));
  for (const TortillaSite& t : ov.tortillas) {
    if (!have(t.h, t.f) || !have(t.h, t.g)) continue;
    auto [v1, p1] = lookup(t.h, t.f);
    auto [v2, p2] = lookup(t.h, t.g);
    if (!dsu.merge(v1, v2, p1 ^ p2)) return std::nullopt;
  }

  std::vector<int> value(std::max(nv, 1), -1);
  auto var_value = [&](int v) -> int {
    auto [r, p] = dsu.find(v);
    if (value[r] < 0) return -1;
    return value[r] ^ p;
  };
  auto above = [&](FaceId a, FaceId b) -> int {
    auto [v, p] = lookup(a, b);
    int val = var_value(v);
    if (val < 0) return -1;
    return val ^ p;
  };

  auto cell_ok = [&](const OverlayCell& cell) {
    const auto& cov = cell.covering;
    const int k = static_cast<int>(cov.size());
    std::vector<std::vector<int>> adj(k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (i == j || !have(cov[i], cov[j])) continue;
        if (above(cov[i], cov[j]) == 1) adj[i].push_back(j);
      }
    std::vector<int> state(k, 0);
    for (int s = 0; s < k; ++s) {
      if (state[s]) continue;
      std::vector<std::pair<int, std::size_t>> st{{s, 0}};
      state[s] = 1;
      while (!st.empty()) {
        auto& [v, idx] = st.back();
        if (idx < adj[v].size()) {
          int w = adj[v][idx++];
          if (state[w] == 1) return false;
          if (state[w] == 0) {
            state[w] = 1;
            st.push_back({w, 0});
          }
        } else {
          state[v] = 2;
          st.pop_back();
        }
      }
    }
    return true;
  };
  auto taco_ok = [&](const TacoSite& t) {
    int a1 = above(t.f1, t.f2), a2 = above(t.g1, t.f2);
    int b1 = above(t.f1, t.g2), b2 = above(t.g1, t.g2);
    if (a1 < 0 || a2 < 0 || b1 < 0 || b2 < 0) return true;  // undecided
    return (a1 != a2) == (b1 != b2);
  };

  // Static order: most frequently constrained classes first.
  std::vector<int> freq(std::max(nv, 1), 0);
  for (const OverlayCell& c : ov.cells)
    for (std::size_t i = 0; i < c.covering.size(); ++i)
      for (std::size_t j = i + 1; j < c.covering.size(); ++j) {
        auto it = var_id.find({std::min(c.covering[i], c.covering[j]),
                               std::max(c.covering[i], c.covering[j])});
        if (it != var_id.end()) freq[dsu.find(it->second).first]++;
      }
  std::vector<int> roots;
  for (int i = 0; i < nv; ++i)
    if (dsu.find(i).first == i) roots.push_back(i);
  std::sort(roots.begin(), roots.end(), [&](int a, int b) {
    if (freq[a] != freq[b]) return freq[a] > freq[b];
    return a < b;
  });

  std::function<bool(std::size_t)> dfs = [&](std::size_t idx) -> bool {
    if (idx == roots.size()) return true;
    int root = roots[idx];
    // Complement symmetry: flipping every bit preserves validity, so the
    // first class may be pinned.
    int nvals = (idx == 0) ? 1 : 2;
    for (int val = 0; val < nvals; ++val) {
      value[root] = val;
      bool ok = true;
      for (const OverlayCell& cell : ov.cells)
        if (!cell_ok(cell)) {
          ok = false;
          break;
        }
      if (ok)
        for (const TacoSite& t : ov.tacos)
          if (!taco_ok(t)) {
            ok = false;
            break;
          }
      if (ok && dfs(idx + 1)) return true;
      value[root] = -1;
    }
    return false;
  };
  if (!dfs(0)) return std::nullopt;

  Layering L;
  for (int i = 0; i < nv; ++i) L.above[vars[i]] = var_value(i) == 1;
  return L;
}

// ── Plan execution ──────────────────────────────────────────────────

namespace {

struct BlockState {
  std::vector<std::vector<FaceId>> blocks;
  std::vector<int> block_of;

  explicit BlockState(int n) : blocks(n), block_of(n) {
    for (int f = 0; f < n; ++f) {
      blocks[f] = {f};
      block_of[f] = f;
    }
  }
  void reassign(int bid) {
    for (FaceId f : blocks[bid]) block_of[f] = bid;
  }
};

// Pattern-space geometry of a crease, rays clipped at the pattern radius.
std::pair<Point2, Point2> crease_span_points(const CreasePattern& p, CreaseId c) {
  if (p.is_ray(c)) {
    const Ray& r = p.ray(c);
    Point2 a = p.vertices[r.apex];
    return {a, a + unit(r.dir) * p.clip_radius()};
  }
  const Segment& s = p.segment(c);
  return {p.vertices[s.a], p.vertices[s.b]};
}

void apply_pleat(const PleatStep& s, BlockState& st) {
  const auto& w = s.faces;
  if (w.size() < 2) throw layering_error("pleat step needs at least two faces");
  std::vector<int> bids;
  for (FaceId f : w) bids.push_back(st.block_of[f]);
  std::set<int> uniq(bids.begin(), bids.end());

  if (uniq.size() == bids.size()) {
    // Fresh accordion: blocks stack in walk order; faces at odd offsets
    // from the anchor flip, carrying their riders along.
    std::vector<FaceId> merged;
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::vector<FaceId> part = st.blocks[bids[i]];
      if ((static_cast<int>(i) - s.anchor) % 2 != 0) std::reverse(part.begin(), part.end());
      merged.insert(merged.end(), part.begin(), part.end());
    }
    for (int b : bids) st.blocks[b].clear();
    int keep = bids.front();
    st.blocks[keep] = std::move(merged);
    st.reassign(keep);
    return;
  }

  // Splice mode: first and last face are already stacked; the new faces
  // between them fold into the protected wedge, so they are inserted next
  // to the first face on the side toward the last (nothing else covers
  // the wedge region, so their order against unrelated faces is free).
  int b0 = st.block_of[w.front()], b1 = st.block_of[w.back()];
  if (b0 != b1) throw layering_error("pleat step conflicts with current stack");
  auto& blk = st.blocks[b0];
  auto p0 = std::find(blk.begin(), blk.end(), w.front());
  auto p1 = std::find(blk.begin(), blk.end(), w.back());
  long i0 = p0 - blk.begin(), i1 = p1 - blk.begin();
  std::vector<FaceId> mids(w.begin() + 1, w.end() - 1);
  for (FaceId f : mids) {
    if (st.block_of[f] == b0 || st.blocks[st.block_of[f]].size() != 1)
      throw layering_error("pleat step: interior faces already folded");
    st.blocks[st.block_of[f]].clear();
  }
  if (i0 < i1) {
    blk.insert(blk.begin() + i0 + 1, mids.begin(), mids.end());
  } else {
    std::reverse(mids.begin(), mids.end());
    blk.insert(blk.begin() + i0, mids.begin(), mids.end());
  }
  st.reassign(b0);
}

void apply_reflect(const ReflectStep& s, const FoldMap& m, BlockState& st,
                   const std::vector<bool>& consumed) {
  auto [fa, fb] = m.complex().faces_of_crease(s.crease);
  FaceId cside, rside;
  if (st.block_of[fa] == st.block_of[s.moved]) {
    cside = fa;
    rside = fb;
  } else if (st.block_of[fb] == st.block_of[s.moved]) {
    cside = fb;
    rside = fa;
  } else {
    throw layering_error("reflect step: moved face not adjacent to the crease");
  }
  (void)cside;
  int bc = st.block_of[s.moved], br = st.block_of[rside];
  if (bc == br) throw layering_error("reflect step: crease already folded");

  // A reflected stack may not straddle a still-unfolded crease (the
  // safe-crease condition, checked in pattern space while the ambient
  // sheet is unfolded).
  const CreasePattern& pat = m.pattern();
  auto [la, lb] = crease_span_points(pat, s.crease);
  double r = pat.clip_radius();
  for (CreaseId c = 0; c < pat.crease_count(); ++c) {
    if (consumed[c] || c == s.crease) continue;
    auto [ca, cb] = crease_span_points(pat, c);
    for (FaceId f : st.blocks[bc]) {
      auto poly = m.complex().clipped_polygon(f, r);
      for (Point2& q : poly) q = reflect_across_line(q, la, lb);
      if (polygon_area2(poly) < 0) std::reverse(poly.begin(), poly.end());
      if (segment_length_inside(poly, ca, cb) > 1e-7)
        throw layering_error("reflect step: reflected stack straddles unfolded crease " +
                             std::to_string(c));
    }
  }

  std::vector<FaceId> moved = st.blocks[bc];
  std::reverse(moved.begin(), moved.end());
  st.blocks[bc].clear();
  auto& target = st.blocks[br];
  if (s.above)
    target.insert(target.end(), moved.begin(), moved.end());
  else
    target.insert(target.begin(), moved.begin(), moved.end());
  st.reassign(br);
}

BlockState execute_plan(const FoldPlan& plan, const FoldMap& m) {
  BlockState st(m.face_count());
  std::vector<bool> consumed(m.pattern().crease_count(), false);
  for (const FoldStep& step : plan.steps) {
    if (step.kind == FoldStep::Kind::Pleat) {
      apply_pleat(step.pleat, st);
      for (CreaseId c : step.pleat.creases) consumed[c] = true;
    } else {
      apply_reflect(step.reflect, m, st, consumed);
      consumed[step.reflect.crease] = true;
    }
  }
  return st;
}

}  // namespace

std::vector<FaceId> plan_stack(const FoldPlan& plan, const FoldMap& m) {
  BlockState st = execute_plan(plan, m);
  std::vector<FaceId> out;
  int nonempty = 0;
  for (const auto& b : st.blocks) {
    if (b.empty()) continue;
    ++nonempty;
    out.insert(out.end(), b.begin(), b.end());
  }
  if (nonempty > 1 && m.face_count() > 1)
    throw layering_error("plan leaves the pattern in " + std::to_string(nonempty) +
                         " separate stacks");
  return out;
}

Layering stack_to_layering(const std::vector<FaceId>& stack, const Overlay& ov) {
  std::map<FaceId, int> pos;
  for (std::size_t i = 0; i < stack.size(); ++i) pos[stack[i]] = static_cast<int>(i);
  Layering L;
  for (const auto& [f, g] : ov.overlapping) {
    auto itf = pos.find(f), itg = pos.find(g);
    if (itf == pos.end() || itg == pos.end())
      throw layering_error("stack does not cover an overlapping pair");
    L.above[{f, g}] = itf->second > itg->second;
  }
  return L;
}

Layering plan_to_layering(const FoldPlan& plan, const FoldMap& m) {
  return plan_to_layering(plan, m, build_overlay(m));
}

Layering plan_to_layering(const FoldPlan& plan, const FoldMap& m, const Overlay& ov) {
  BlockState st = execute_plan(plan, m);
  std::map<FaceId, std::pair<int, int>> pos;
  for (std::size_t b = 0; b < st.blocks.size(); ++b)
    for (std::size_t i = 0; i < st.blocks[b].size(); ++i)
      pos[st.blocks[b][i]] = {static_cast<int>(b), static_cast<int>(i)};
  Layering L;
  for (const auto& [f, g] : ov.overlapping) {
    auto pf = pos.at(f), pg = pos.at(g);
    if (pf.first != pg.first)
      throw layering_error("plan leaves overlapping faces " + std::to_string(f) + "," +
                           std::to_string(g) + " unordered");
    L.above[{f, g}] = pf.second > pg.second;
  }
  return L;
}

}  // namespace flatfold
