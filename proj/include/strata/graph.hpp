#ifndef STRATA_GRAPH_HPP
#define STRATA_GRAPH_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "strata/target.hpp"

namespace strata {

// Dual graph of a degenerate stable map: vertices carry (genus, curve class),
// nodes are edges (2-cycles of the involution), markings are legs (fixed
// points). Ambient data (g, n, beta) travels with the graph.
struct StableGraph {
  struct Vertex {
    int genus = 0;
    CurveClass beta;
  };

  int g = 0;
  int n = 0;
  CurveClass beta;
  std::vector<Vertex> verts;
  std::vector<int> hv;    // half-edge -> vertex
  std::vector<int> inv;   // half-edge involution; legs are fixed points
  std::vector<int> legs;  // leg i (0-based label) -> half-edge

  int num_vertices() const { return (int)verts.size(); }
  int num_half() const { return (int)hv.size(); }

  int add_vertex(int genus, CurveClass b) {
    verts.push_back({genus, std::move(b)});
    return num_vertices() - 1;
  }

  int add_leg(int v) {
    int h = num_half();
    hv.push_back(v);
    inv.push_back(h);
    legs.push_back(h);
    return h;
  }

  // Returns the two half-edge ids (u side, v side).
  std::pair<int, int> add_edge(int u, int v) {
    int h1 = num_half(), h2 = h1 + 1;
    hv.push_back(u);
    hv.push_back(v);
    inv.push_back(h2);
    inv.push_back(h1);
    return {h1, h2};
  }

  // Edges as (h, inv[h]) with h < inv[h], in half-edge order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int h = 0; h < num_half(); ++h)
      if (inv[h] > h) out.push_back({h, inv[h]});
    return out;
  }

  int num_edges() const { return (int)edges().size(); }

  int first_betti() const {
    return num_edges() - num_vertices() + 1;
  }

  // Valence n(v): incident half-edges, loops counted twice, legs once.
  int valence(int v) const {
    int c = 0;
    for (int h = 0; h < num_half(); ++h)
      if (hv[h] == v) ++c;
    return c;
  }

  std::vector<int> legs_at(int v) const {
    std::vector<int> out;
    for (int i = 0; i < n; ++i)
      if (hv[legs[(size_t)i]] == v) out.push_back(i);
    return out;
  }
};

enum class GraphKind {
  XValued,     // full Definition-style validity including stability
  Shape,       // genus-labeled shape: beta ignored, stability suspended
  CurveStable, // graph on the space of stable curves: every vertex stable
  Prestable    // curve graph with stability suspended
};

// Reports the first violated condition by name, or nullopt when valid.
inline std::optional<std::string> validate(const StableGraph& G,
                                           GraphKind kind = GraphKind::XValued) {
  int H = G.num_half(), V = G.num_vertices();
  if (V == 0) return "empty graph";
  if ((int)G.inv.size() != H) return "involution size mismatch";
  for (int h = 0; h < H; ++h) {
    if (G.hv[h] < 0 || G.hv[h] >= V) return "half-edge with bad vertex";
    if (G.inv[h] < 0 || G.inv[h] >= H || G.inv[G.inv[h]] != h)
      return "involution is not an involution";
  }
  // legs must be exactly the fixed points, one per label
  std::set<int> fixed;
  for (int h = 0; h < H; ++h)
    if (G.inv[h] == h) fixed.insert(h);
  if ((int)G.legs.size() != G.n) return "leg count differs from n";
  std::set<int> legset(G.legs.begin(), G.legs.end());
  if (legset != fixed || (int)legset.size() != G.n)
    return "legs are not the fixed points of the involution";
  // connectivity over edges
  std::vector<int> comp(V);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (int h = 0; h < H; ++h)
    if (G.inv[h] != h) comp[find(G.hv[h])] = find(G.hv[G.inv[h]]);
  for (int v = 0; v < V; ++v)
    if (find(v) != find(0)) return "graph is not connected";
  // genus condition
  long gsum = 0;
  for (const auto& vx : G.verts) {
    if (vx.genus < 0) return "negative genus";
    gsum += vx.genus;
  }
  if (gsum + G.first_betti() != G.g) return "genus condition fails";
  if (kind == GraphKind::XValued) {
    CurveClass total = CurveClass::zero(G.beta.rank());
    for (const auto& vx : G.verts) {
      if (vx.beta.rank() != G.beta.rank())
        return "vertex curve class rank mismatch";
      total += vx.beta;
    }
    if (total != G.beta) return "degree condition fails";
    for (int v = 0; v < V; ++v)
      if (G.verts[(size_t)v].beta.is_zero() &&
          2 * G.verts[(size_t)v].genus - 2 + G.valence(v) <= 0)
        return "stability fails at a vertex";
  } else if (kind == GraphKind::CurveStable) {
    for (int v = 0; v < V; ++v)
      if (2 * G.verts[(size_t)v].genus - 2 + G.valence(v) <= 0)
        return "curve stability fails at a vertex";
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Canonical form.
//
// The canonical labeling minimizes a full lexicographic encoding over all
// vertex orderings; half-edges are then renumbered legs-first, edges in
// sorted endpoint order. Graphs here are tiny, so the search is a plain
// sweep over vertex permutations.
// ---------------------------------------------------------------------------

using Encoding = std::vector<long long>;

namespace detail {

inline Encoding encode_under(const StableGraph& G,
                             const std::vector<int>& newv /* old -> new */) {
  Encoding e;
  int V = G.num_vertices();
  e.push_back(V);
  e.push_back(G.num_edges());
  std::vector<int> oldv((size_t)V);
  for (int o = 0; o < V; ++o) oldv[(size_t)newv[(size_t)o]] = o;
  for (int v = 0; v < V; ++v) {
    const auto& vx = G.verts[(size_t)oldv[(size_t)v]];
    e.push_back(vx.genus);
    for (long b : vx.beta.c) e.push_back(b);
  }
  for (int i = 0; i < G.n; ++i)
    e.push_back(newv[(size_t)G.hv[G.legs[(size_t)i]]]);
  std::vector<std::pair<int, int>> es;
  for (auto [h1, h2] : G.edges()) {
    int a = newv[(size_t)G.hv[h1]], b = newv[(size_t)G.hv[h2]];
    es.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(es.begin(), es.end());
  for (auto [a, b] : es) {
    e.push_back(a);
    e.push_back(b);
  }
  return e;
}

}  // namespace detail

struct CanonicalResult {
  StableGraph graph;
  std::vector<int> half_map;  // old half-edge -> new half-edge
  std::vector<int> vert_map;  // old vertex -> new vertex
  Encoding encoding;
};

inline CanonicalResult canonicalize(const StableGraph& G) {
  int V = G.num_vertices();
  std::vector<int> perm((size_t)V);  // new index list: perm[k] = old vertex
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best_newv;
  Encoding best;
  std::vector<int> order = perm;
  std::sort(order.begin(), order.end());
  do {
    std::vector<int> newv((size_t)V);
    for (int k = 0; k < V; ++k) newv[(size_t)order[(size_t)k]] = k;
    Encoding e = detail::encode_under(G, newv);
    if (best.empty() || e < best) {
      best = std::move(e);
      best_newv = std::move(newv);
    }
  } while (std::next_permutation(order.begin(), order.end()));

  // Rebuild the graph with the winning vertex order.
  CanonicalResult res;
  res.vert_map = best_newv;
  res.encoding = best;
  StableGraph& C = res.graph;
  C.g = G.g;
  C.n = G.n;
  C.beta = G.beta;
  C.verts.resize((size_t)V);
  for (int o = 0; o < V; ++o) C.verts[(size_t)best_newv[(size_t)o]] = G.verts[(size_t)o];
  res.half_map.assign((size_t)G.num_half(), -1);
  // legs first, in label order
  for (int i = 0; i < G.n; ++i) {
    int h = C.add_leg(best_newv[(size_t)G.hv[G.legs[(size_t)i]]]);
    res.half_map[(size_t)G.legs[(size_t)i]] = h;
  }
  // edges sorted by (new endpoints), ties kept in old edge order
  struct ERec {
    int a, b;      // new endpoints, a <= b
    int ha, hb;    // old half ids: ha at the a side (for loops: lower old id first)
    int old_index;
  };
  std::vector<ERec> es;
  {
    int idx = 0;
    for (auto [h1, h2] : G.edges()) {
      int a = best_newv[(size_t)G.hv[h1]], b = best_newv[(size_t)G.hv[h2]];
      ERec r;
      r.old_index = idx++;
      if (a <= b) {
        r.a = a; r.b = b; r.ha = h1; r.hb = h2;
      } else {
        r.a = b; r.b = a; r.ha = h2; r.hb = h1;
      }
      es.push_back(r);
    }
  }
  std::stable_sort(es.begin(), es.end(), [](const ERec& x, const ERec& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  });
  for (const auto& r : es) {
    auto [na, nb] = C.add_edge(r.a, r.b);
    res.half_map[(size_t)r.ha] = na;
    res.half_map[(size_t)r.hb] = nb;
  }
  return res;
}

// Structure-preserving symmetries of a graph: pairs of permutations fixing
// every leg, preserving genus, beta, incidence and the involution.
struct GraphAut {
  std::vector<int> vperm;  // vertex -> vertex
  std::vector<int> hperm;  // half-edge -> half-edge
};

namespace detail {

// Enumerate all isomorphisms A -> B as (vertex map, half map); graphs must
// share ambient data. Legs are matched by label. Used both for automorphisms
// (A == B) and for matching product degenerations.
inline std::vector<GraphAut> isomorphisms(const StableGraph& A,
                                          const StableGraph& B) {
  std::vector<GraphAut> out;
  int V = A.num_vertices();
  if (V != B.num_vertices() || A.num_half() != B.num_half() ||
      A.n != B.n || A.g != B.g || !(A.beta == B.beta))
    return out;
  auto edges_a = A.edges();
  auto edges_b = B.edges();
  if (edges_a.size() != edges_b.size()) return out;

  // candidate vertex images by invariants
  std::vector<std::vector<int>> cand((size_t)V);
  for (int u = 0; u < V; ++u)
    for (int w = 0; w < V; ++w) {
      if (A.verts[(size_t)u].genus != B.verts[(size_t)w].genus) continue;
      if (!(A.verts[(size_t)u].beta == B.verts[(size_t)w].beta)) continue;
      if (A.legs_at(u) != B.legs_at(w)) continue;
      if (A.valence(u) != B.valence(w)) continue;
      cand[(size_t)u].push_back(w);
    }

  // multiplicity tables
  auto mult_of = [V](const StableGraph& G) {
    std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> m;
    for (auto [h1, h2] : G.edges()) {
      int a = G.hv[h1], b = G.hv[h2];
      if (a > b) std::swap(a, b), std::swap(h1, h2);
      m[{a, b}].push_back({h1, h2});  // h1 incident to a
    }
    (void)V;
    return m;
  };
  auto multA = mult_of(A), multB = mult_of(B);

  std::vector<int> vmap((size_t)V, -1), used((size_t)V, 0);
  std::function<void(int)> rec = [&](int u) {
    if (u == V) {
      // vertex map fixed; check edge multiplicities, then enumerate half maps
      for (const auto& [key, lst] : multA) {
        int a = vmap[(size_t)key.first], b = vmap[(size_t)key.second];
        if (a > b) std::swap(a, b);
        auto it = multB.find({a, b});
        if (it == multB.end() || it->second.size() != lst.size()) return;
      }
      size_t total_b_edges = 0;
      for (const auto& [k, l] : multB) total_b_edges += l.size();
      {
        size_t total_a_edges = 0;
        for (const auto& [k, l] : multA) total_a_edges += l.size();
        if (total_a_edges != total_b_edges) return;
      }
      // half map: legs by label
      std::vector<int> base((size_t)A.num_half(), -1);
      for (int i = 0; i < A.n; ++i) base[(size_t)A.legs[(size_t)i]] = B.legs[(size_t)i];
      // per endpoint pair, assign parallel edges in all ways
      std::vector<std::pair<std::vector<std::pair<int, int>>,
                            std::vector<std::pair<int, int>>>> groups;
      for (const auto& [key, lst] : multA) {
        int a = vmap[(size_t)key.first], b = vmap[(size_t)key.second];
        bool flipped = a > b;
        if (flipped) std::swap(a, b);
        auto blst = multB.at({a, b});
        // orient A's half pairs so .first maps to the image of key.first
        auto alst = lst;
        if (flipped)
          for (auto& pr : alst) std::swap(pr.first, pr.second);
        // now alst[i].first should land at vertex vmap[...] == image matching blst[j].first?
        groups.push_back({alst, blst});
      }
      std::function<void(size_t, std::vector<int>&)> assign =
          [&](size_t gi, std::vector<int>& hmap) {
            if (gi == groups.size()) {
              GraphAut aut;
              aut.vperm = vmap;
              aut.hperm = hmap;
              out.push_back(aut);
              return;
            }
            auto& [alst, blst] = groups[gi];
            size_t k = alst.size();
            std::vector<int> idx((size_t)k);
            std::iota(idx.begin(), idx.end(), 0);
            std::sort(idx.begin(), idx.end());
            do {
              // try this bijection of parallel edges
              std::vector<int> saved = hmap;
              bool ok = true;
              for (size_t i = 0; i < k && ok; ++i) {
                auto [ah1, ah2] = alst[i];
                auto [bh1, bh2] = blst[(size_t)idx[i]];
                int au = A.hv[ah1], bu = B.hv[bh1];
                bool loop = (A.hv[ah1] == A.hv[ah2]);
                if (loop) {
                  // two orientations possible; branch below instead
                  continue;
                }
                if (vmap[(size_t)au] == bu) {
                  hmap[(size_t)ah1] = bh1;
                  hmap[(size_t)ah2] = bh2;
                } else {
                  hmap[(size_t)ah1] = bh2;
                  hmap[(size_t)ah2] = bh1;
                }
              }
              if (ok) {
                // handle loop orientations: collect loop edges in this group
                std::vector<size_t> loop_pos;
                for (size_t i = 0; i < k; ++i) {
                  auto [ah1, ah2] = alst[i];
                  if (A.hv[ah1] == A.hv[ah2]) loop_pos.push_back(i);
                }
                size_t m = loop_pos.size();
                for (size_t mask = 0; mask < (size_t(1) << m); ++mask) {
                  for (size_t j = 0; j < m; ++j) {
                    auto [ah1, ah2] = alst[loop_pos[j]];
                    auto [bh1, bh2] = blst[(size_t)idx[loop_pos[j]]];
                    if (mask >> j & 1) std::swap(bh1, bh2);
                    hmap[(size_t)ah1] = bh1;
                    hmap[(size_t)ah2] = bh2;
                  }
                  assign(gi + 1, hmap);
                }
              }
              hmap = saved;
            } while (std::next_permutation(idx.begin(), idx.end()));
          };
      assign(0, base);
      return;
    }
    for (int w : cand[(size_t)u]) {
      if (used[(size_t)w]) continue;
      vmap[(size_t)u] = w;
      used[(size_t)w] = 1;
      rec(u + 1);
      used[(size_t)w] = 0;
      vmap[(size_t)u] = -1;
    }
  };
  rec(0);
  return out;
}

}  // namespace detail

inline std::vector<GraphAut> automorphisms(const StableGraph& G) {
  return detail::isomorphisms(G, G);
}

inline long automorphism_order(const StableGraph& G) {
  return (long)automorphisms(G).size();
}

// ---------------------------------------------------------------------------
// Contraction.
// ---------------------------------------------------------------------------

struct Contraction {
  StableGraph graph;
  std::vector<int> vert_map;  // old vertex -> new vertex
  std::vector<int> half_map;  // old half-edge -> new half-edge (-1 if contracted)
};

// Contracts every edge whose index (in G.edges() order) is NOT in `keep`.
// Contracting a loop bumps the genus; contracting a bridge merges vertices.
inline Contraction contract_edges(const StableGraph& G,
                                  const std::set<int>& keep) {
  auto es = G.edges();
  int V = G.num_vertices();
  std::vector<int> root((size_t)V);
  std::iota(root.begin(), root.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (root[(size_t)x] != x) x = root[(size_t)x] = root[(size_t)root[(size_t)x]];
    return x;
  };
  std::vector<int> extra_genus((size_t)V, 0);
  for (int ei = 0; ei < (int)es.size(); ++ei) {
    if (keep.count(ei)) continue;
    int a = find(G.hv[es[(size_t)ei].first]);
    int b = find(G.hv[es[(size_t)ei].second]);
    if (a == b)
      extra_genus[(size_t)a] += 1;  // cycle closed inside the contracted set
    else {
      root[(size_t)b] = a;
      extra_genus[(size_t)a] += extra_genus[(size_t)b];
      extra_genus[(size_t)b] = 0;
    }
  }
  Contraction res;
  StableGraph& Q = res.graph;
  Q.g = G.g;
  Q.n = G.n;
  Q.beta = G.beta;
  res.vert_map.assign((size_t)V, -1);
  for (int v = 0; v < V; ++v) {
    int r = find(v);
    if (res.vert_map[(size_t)r] == -1)
      res.vert_map[(size_t)r] =
          Q.add_vertex(extra_genus[(size_t)r], CurveClass::zero(G.beta.rank()));
  }
  for (int v = 0; v < V; ++v) {
    int nv = res.vert_map[(size_t)find(v)];
    res.vert_map[(size_t)v] = nv;
    Q.verts[(size_t)nv].genus += G.verts[(size_t)v].genus;
    Q.verts[(size_t)nv].beta += G.verts[(size_t)v].beta;
  }
  res.half_map.assign((size_t)G.num_half(), -1);
  for (int i = 0; i < G.n; ++i) {
    int h = Q.add_leg(res.vert_map[(size_t)G.hv[G.legs[(size_t)i]]]);
    res.half_map[(size_t)G.legs[(size_t)i]] = h;
  }
  for (int ei = 0; ei < (int)es.size(); ++ei) {
    if (!keep.count(ei)) continue;
    auto [h1, h2] = es[(size_t)ei];
    auto [n1, n2] =
        Q.add_edge(res.vert_map[(size_t)G.hv[h1]], res.vert_map[(size_t)G.hv[h2]]);
    res.half_map[(size_t)h1] = n1;
    res.half_map[(size_t)h2] = n2;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Enumeration.
// ---------------------------------------------------------------------------

// Complete, duplicate-free list of isomorphism classes with at most
// `max_edges` edges, ordered by (edge count, canonical encoding).
// With shapes_only the beta labels are dropped (all zero) and stability is
// suspended, so the output counts genus-labeled prestable shapes.
inline std::vector<StableGraph> enumerate_graphs(int g, int n,
                                                 const CurveClass& beta,
                                                 int max_edges,
                                                 bool shapes_only = false) {
  std::map<Encoding, StableGraph> found;
  int rank = beta.rank();
  for (int E = 0; E <= max_edges; ++E) {
    for (int V = 1; V <= E + 1; ++V) {
      int h1_free = E - V + 1;
      if (h1_free < 0 || h1_free > g) continue;
      int genus_left = g - h1_free;
      // distribute E edges over vertex pairs (i <= j)
      std::vector<std::pair<int, int>> cells;
      for (int i = 0; i < V; ++i)
        for (int j = i; j < V; ++j) cells.push_back({i, j});
      std::vector<int> load(cells.size(), 0);
      std::function<void(size_t, int)> edge_rec = [&](size_t ci, int left) {
        if (ci == cells.size()) {
          if (left != 0) return;
          // connectivity via non-loop cells
          std::vector<int> root((size_t)V);
          std::iota(root.begin(), root.end(), 0);
          std::function<int(int)> find = [&](int x) {
            while (root[(size_t)x] != x)
              x = root[(size_t)x] = root[(size_t)root[(size_t)x]];
            return x;
          };
          for (size_t c = 0; c < cells.size(); ++c)
            if (load[c] > 0 && cells[c].first != cells[c].second)
              root[(size_t)find(cells[c].second)] = find(cells[c].first);
          for (int v = 1; v < V; ++v)
            if (find(v) != find(0)) return;
          // genus compositions
          std::vector<int> gv((size_t)V, 0);
          std::function<void(int, int)> genus_rec = [&](int v, int gleft) {
            if (v == V - 1) {
              gv[(size_t)v] = gleft;
              // leg assignments
              std::vector<int> lv((size_t)n, 0);
              std::function<void(int)> leg_rec = [&](int li) {
                if (li == n) {
                  // beta splittings
                  auto splits = shapes_only
                                    ? std::vector<std::vector<CurveClass>>{
                                          std::vector<CurveClass>(
                                              (size_t)V, CurveClass::zero(rank))}
                                    : enumerate_splittings(beta, V);
                  for (const auto& sp : splits) {
                    StableGraph G;
                    G.g = g;
                    G.n = n;
                    G.beta = shapes_only ? CurveClass::zero(rank) : beta;
                    for (int v2 = 0; v2 < V; ++v2)
                      G.add_vertex(gv[(size_t)v2], sp[(size_t)v2]);
                    for (int li2 = 0; li2 < n; ++li2) G.add_leg(lv[(size_t)li2]);
                    for (size_t c = 0; c < cells.size(); ++c)
                      for (int k = 0; k < load[c]; ++k)
                        G.add_edge(cells[c].first, cells[c].second);
                    auto kind =
                        shapes_only ? GraphKind::Shape : GraphKind::XValued;
                    if (validate(G, kind)) continue;
                    auto canon = canonicalize(G);
                    found.emplace(canon.encoding, canon.graph);
                  }
                  return;
                }
                for (int v2 = 0; v2 < V; ++v2) {
                  lv[(size_t)li] = v2;
                  leg_rec(li + 1);
                }
              };
              leg_rec(0);
              return;
            }
            for (int k = 0; k <= gleft; ++k) {
              gv[(size_t)v] = k;
              genus_rec(v + 1, gleft - k);
            }
          };
          genus_rec(0, genus_left);
          return;
        }
        for (int k = 0; k <= left; ++k) {
          load[ci] = k;
          edge_rec(ci + 1, left - k);
        }
        load[ci] = 0;
      };
      edge_rec(0, E);
    }
  }
  std::vector<StableGraph> out;
  std::vector<std::pair<std::pair<int, Encoding>, StableGraph>> sorted;
  for (auto& [enc, gr] : found)
    sorted.push_back({{gr.num_edges(), enc}, gr});
  std::sort(sorted.begin(), sorted.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [k, gr] : sorted) out.push_back(gr);
  return out;
}

// ---------------------------------------------------------------------------
// Standard graphs.
// ---------------------------------------------------------------------------

inline StableGraph trivial_graph(int g, int n, const CurveClass& beta) {
  StableGraph G;
  G.g = g;
  G.n = n;
  G.beta = beta;
  G.add_vertex(g, beta);
  for (int i = 0; i < n; ++i) G.add_leg(0);
  return canonicalize(G).graph;
}

// Two vertices joined by one edge; legs and genus split as specified,
// one graph per beta splitting surviving stability.
inline std::vector<StableGraph> separating_graphs(
    int g, int n, const CurveClass& beta, int g1,
    const std::vector<int>& legs_on_v1 /* 0-based labels */) {
  std::vector<StableGraph> out;
  std::set<int> l1(legs_on_v1.begin(), legs_on_v1.end());
  for (const auto& sp : enumerate_splittings(beta, 2)) {
    StableGraph G;
    G.g = g;
    G.n = n;
    G.beta = beta;
    G.add_vertex(g1, sp[0]);
    G.add_vertex(g - g1, sp[1]);
    for (int i = 0; i < n; ++i) G.add_leg(l1.count(i) ? 0 : 1);
    G.add_edge(0, 1);
    if (validate(G)) continue;
    out.push_back(canonicalize(G).graph);
  }
  return out;
}

// One-loop graph: single vertex of genus g-1 carrying every leg and a loop.
inline StableGraph loop_graph_delta(int g, int n, const CurveClass& beta) {
  if (g < 1) throw std::invalid_argument("loop graph needs g >= 1");
  StableGraph G;
  G.g = g;
  G.n = n;
  G.beta = beta;
  G.add_vertex(g - 1, beta);
  for (int i = 0; i < n; ++i) G.add_leg(0);
  G.add_edge(0, 0);
  if (auto err = validate(G))
    throw std::invalid_argument("loop graph invalid: " + *err);
  return canonicalize(G).graph;
}

// Graphs D_i: v1 keeps the genus and all legs except i; v2 is genus 0 with
// only the i-th leg. Stability forces beta(v2) != 0.
inline std::vector<StableGraph> D_i_graphs(int g, int n,
                                           const CurveClass& beta, int i_leg) {
  std::vector<int> keep;
  for (int i = 0; i < n; ++i)
    if (i != i_leg) keep.push_back(i);
  return separating_graphs(g, n, beta, g, keep);
}

}  // namespace strata

#endif
