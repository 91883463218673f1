#ifndef STRATA_STABILIZATION_HPP
#define STRATA_STABILIZATION_HPP

#include "strata/element.hpp"
#include "strata/product.hpp"

namespace strata {

// ---------------------------------------------------------------------------
// Pullbacks along the stabilization morphism.
//
// Sources are graphs on the stack of (pre)stable marked curves: no curve
// classes. They are represented as StableGraph with zero beta labels; vertex
// stability is not required of the source (prestable strata are legitimate
// pullback sources and appear in the psi comparison already).
// ---------------------------------------------------------------------------

// st^* of the boundary class [curve_graph]: sum over all curve-class
// labelings of the same underlying graph that pass X-valued stability, one
// contribution per ordered labeling. Dividing input and output by the
// respective automorphism counts recovers the normalized comparison
// st^*([G]/|Aut G|) = sum [G']/|Aut G'|.
inline StrataElement pullback_boundary(const StableGraph& curve_graph,
                                       const Ambient& amb) {
  if (curve_graph.g != amb.g || curve_graph.n != amb.n)
    throw std::invalid_argument("curve graph has wrong (g, n)");
  StrataElement out(amb);
  int V = curve_graph.num_vertices();
  for (const auto& sp : enumerate_splittings(amb.beta, V)) {
    StableGraph G = curve_graph;
    G.beta = amb.beta;
    for (int v = 0; v < V; ++v) {
      G.verts[(size_t)v].beta = sp[(size_t)v];
      if (G.verts[(size_t)v].beta.rank() != amb.beta.rank())
        G.verts[(size_t)v].beta = CurveClass::zero(amb.beta.rank());
    }
    if (validate(G)) continue;
    out.add_raw(G, RawDecor{}, Poly(Rat(1), 0));
  }
  return out;
}

// st^* psi_i = psi_i - [D_i]; D_i carries only the i-th leg on a genus-0
// vertex, summed over curve-class splittings surviving stability.
inline StrataElement pullback_psi(const Ambient& amb, int leg /*1-based*/) {
  StrataElement out = psi_class(amb, leg);
  for (const auto& D : D_i_graphs(amb.g, amb.n, amb.beta, leg - 1))
    out.add_element(graph_class(amb, D), Rat(-1));
  return out;
}

// st^* kappa_1 = kappa_1 + [D]; D has a legless genus-0 second vertex.
inline StrataElement pullback_kappa1(const Ambient& amb) {
  StrataElement out = kappa1_class(amb);
  for (const auto& D :
       separating_graphs(amb.g, amb.n, amb.beta, amb.g,
                         [&] {
                           std::vector<int> all;
                           for (int i = 0; i < amb.n; ++i) all.push_back(i);
                           return all;
                         }()))
    out.add_element(graph_class(amb, D), Rat(1));
  return out;
}

// ---------------------------------------------------------------------------
// Leg relabeling.
// ---------------------------------------------------------------------------

// perm[old_label] = new_label, 0-based.
inline StrataElement relabel_legs(const StrataElement& S,
                                  const std::vector<int>& perm) {
  const Ambient& amb = S.ambient();
  if ((int)perm.size() != amb.n)
    throw std::invalid_argument("permutation size mismatch");
  StrataElement out(amb, S.symbols());
  for (const auto& [t, c] : S.terms()) {
    StableGraph G = t.graph;
    std::vector<int> legs((size_t)amb.n);
    for (int i = 0; i < amb.n; ++i)
      legs[(size_t)perm[(size_t)i]] = t.graph.legs[(size_t)i];
    G.legs = legs;
    RawDecor rd;
    for (int i = 0; i < amb.n; ++i)
      if (t.dec.leg_cls[(size_t)i] != amb.target->unit())
        rd.leg_cls[perm[(size_t)i]] = Chow{{t.dec.leg_cls[(size_t)i], Rat(1)}};
    for (int h = 0; h < G.num_half(); ++h)
      if (t.dec.psi[(size_t)h]) rd.psi[h] = t.dec.psi[(size_t)h];
    auto es = G.edges();
    for (int e = 0; e < (int)es.size(); ++e)
      if (t.dec.edge_cls[(size_t)e] != amb.target->unit())
        rd.edge_cls[e] = Chow{{t.dec.edge_cls[(size_t)e], Rat(1)}};
    for (int v = 0; v < G.num_vertices(); ++v)
      for (auto [a, m] : t.dec.kappa[(size_t)v])
        rd.kappa[v].push_back({a, Chow{{m, Rat(1)}}});
    out.add_raw(G, rd, c);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Forgetful pushforward (integration along forgetting the last marked point)
// and the corresponding flat pullback.
// ---------------------------------------------------------------------------

namespace detail {

struct FlagInfo {
  bool is_leg = false;
  int leg_label = -1;  // 0-based when is_leg
  int half = -1;       // half-edge id
};

inline std::vector<FlagInfo> flags_at_vertex(const StableGraph& G, int v,
                                             int skip_half) {
  std::vector<FlagInfo> out;
  for (int h = 0; h < G.num_half(); ++h) {
    if (G.hv[(size_t)h] != v || h == skip_half) continue;
    FlagInfo f;
    f.half = h;
    for (int i = 0; i < G.n; ++i)
      if (G.legs[(size_t)i] == h) {
        f.is_leg = true;
        f.leg_label = i;
      }
    out.push_back(f);
  }
  return out;
}

// Removes the last leg from a graph, preserving every other half-edge id via
// the returned map (old half -> new half).
inline std::pair<StableGraph, std::vector<int>> drop_last_leg(
    const StableGraph& G) {
  int j = G.legs.back();
  StableGraph H;
  H.g = G.g;
  H.n = G.n - 1;
  H.beta = G.beta;
  H.verts = G.verts;
  std::vector<int> hmap((size_t)G.num_half(), -1);
  for (int h = 0; h < G.num_half(); ++h) {
    if (h == j) continue;
    hmap[(size_t)h] = (int)H.hv.size();
    H.hv.push_back(G.hv[(size_t)h]);
    H.inv.push_back(-1);
  }
  for (int h = 0; h < G.num_half(); ++h) {
    if (h == j) continue;
    H.inv[(size_t)hmap[(size_t)h]] = hmap[(size_t)G.inv[(size_t)h]];
  }
  for (int i = 0; i + 1 < G.n; ++i)
    H.legs.push_back(hmap[(size_t)G.legs[(size_t)i]]);
  return {H, hmap};
}

inline RawDecor decor_to_raw(const StableGraph& G, const Decor& d,
                             const Target& t) {
  RawDecor rd;
  for (int i = 0; i < G.n; ++i)
    if (d.leg_cls[(size_t)i] != t.unit())
      rd.leg_cls[i] = Chow{{d.leg_cls[(size_t)i], Rat(1)}};
  for (int h = 0; h < G.num_half(); ++h)
    if (d.psi[(size_t)h]) rd.psi[h] = d.psi[(size_t)h];
  auto es = G.edges();
  for (int e = 0; e < (int)es.size(); ++e)
    if (d.edge_cls[(size_t)e] != t.unit())
      rd.edge_cls[e] = Chow{{d.edge_cls[(size_t)e], Rat(1)}};
  for (int v = 0; v < G.num_vertices(); ++v)
    for (auto [a, m] : d.kappa[(size_t)v])
      rd.kappa[v].push_back({a, Chow{{m, Rat(1)}}});
  return rd;
}

inline int edge_index_of_half(const StableGraph& G, int h) {
  auto es = G.edges();
  for (int e = 0; e < (int)es.size(); ++e)
    if (es[(size_t)e].first == h || es[(size_t)e].second == h) return e;
  throw std::logic_error("half-edge has no edge");
}

}  // namespace detail

// Pushforward along forgetting the last marked point. Inputs live over
// (g, n+1, beta); the result lives over (g, n, beta).
inline StrataElement forgetful_pushforward(const StrataElement& S) {
  const Ambient& up = S.ambient();
  if (up.n < 1) throw std::invalid_argument("no leg to forget");
  Ambient down{up.g, up.n - 1, up.beta, up.target};
  const Target& target = *up.target;
  StrataElement out(down, S.symbols());

  for (const auto& [t, coeff] : S.terms()) {
    const StableGraph& G = t.graph;
    int jh = G.legs.back();           // half-edge of the forgotten leg
    int v = G.hv[(size_t)jh];
    int e_j = t.dec.psi[(size_t)jh];
    int alpha_j = t.dec.leg_cls[(size_t)(up.n - 1)];
    auto flags = detail::flags_at_vertex(G, v, jh);

    bool stable_after = !G.verts[(size_t)v].beta.is_zero() ||
                        2 * G.verts[(size_t)v].genus - 2 + (int)flags.size() > 0;

    if (stable_after) {
      auto [H, hmap] = detail::drop_last_leg(G);
      // kappa comparison at v: each index-(a>=0) entry may contribute its
      // psi^a ev^* theta factor to the forgotten point.
      const auto& kap = t.dec.kappa[(size_t)v];
      std::vector<size_t> movable;
      for (size_t ki = 0; ki < kap.size(); ++ki)
        if (kap[ki].first >= 0) movable.push_back(ki);
      for (size_t mask = 0; mask < (size_t(1) << movable.size()); ++mask) {
        int e_tot = e_j;
        Chow alpha{{alpha_j, Rat(1)}};
        std::vector<std::pair<int, Chow>> kept;
        for (size_t ki = 0; ki < kap.size(); ++ki) {
          bool moved = false;
          for (size_t b = 0; b < movable.size(); ++b)
            if (movable[b] == ki && (mask >> b & 1)) moved = true;
          if (moved) {
            e_tot += kap[ki].first;
            alpha = target.chow_product(alpha,
                                        Chow{{kap[ki].second, Rat(1)}});
          } else {
            kept.push_back({kap[ki].first, Chow{{kap[ki].second, Rat(1)}}});
          }
        }
        if (alpha.empty()) continue;
        // main term: kappa_{e_tot - 1}(alpha) lands on v
        {
          RawDecor rd;
          for (int i = 0; i + 1 < G.n; ++i)
            if (t.dec.leg_cls[(size_t)i] != target.unit())
              rd.leg_cls[i] = Chow{{t.dec.leg_cls[(size_t)i], Rat(1)}};
          for (int h = 0; h < G.num_half(); ++h)
            if (h != jh && t.dec.psi[(size_t)h])
              rd.psi[hmap[(size_t)h]] = t.dec.psi[(size_t)h];
          auto es = G.edges();
          for (int e = 0; e < (int)es.size(); ++e)
            if (t.dec.edge_cls[(size_t)e] != target.unit())
              rd.edge_cls[e] = Chow{{t.dec.edge_cls[(size_t)e], Rat(1)}};
          for (int w = 0; w < G.num_vertices(); ++w) {
            if (w == v) continue;
            for (auto [a, m] : t.dec.kappa[(size_t)w])
              rd.kappa[w].push_back({a, Chow{{m, Rat(1)}}});
          }
          for (auto& km : kept) rd.kappa[v].push_back(km);
          rd.kappa[v].push_back({e_tot - 1, alpha});
          out.add_raw(H, rd, coeff);
        }
        // string-type corrections: only when the forgotten point carries no
        // psi after the kappa transfer
        if (e_tot == 0) {
          for (const auto& f : flags) {
            if (t.dec.psi[(size_t)f.half] < 1) continue;
            RawDecor rd;
            for (int i = 0; i + 1 < G.n; ++i)
              if (t.dec.leg_cls[(size_t)i] != target.unit())
                rd.leg_cls[i] = Chow{{t.dec.leg_cls[(size_t)i], Rat(1)}};
            if (f.is_leg) {
              Chow prod = target.chow_product(
                  Chow{{t.dec.leg_cls[(size_t)f.leg_label], Rat(1)}}, alpha);
              rd.leg_cls[f.leg_label] = prod;
            }
            for (int h = 0; h < G.num_half(); ++h) {
              if (h == jh) continue;
              int e = t.dec.psi[(size_t)h] - (h == f.half ? 1 : 0);
              if (e) rd.psi[hmap[(size_t)h]] = e;
            }
            auto es = G.edges();
            for (int e = 0; e < (int)es.size(); ++e) {
              Chow cls{{t.dec.edge_cls[(size_t)e], Rat(1)}};
              if (!f.is_leg && e == detail::edge_index_of_half(G, f.half))
                cls = target.chow_product(cls, alpha);
              if (!(cls.size() == 1 && cls.count(target.unit()) &&
                    cls.at(target.unit()) == 1))
                rd.edge_cls[e] = cls;
            }
            for (int w = 0; w < G.num_vertices(); ++w) {
              if (w == v) continue;
              for (auto [a, m] : t.dec.kappa[(size_t)w])
                rd.kappa[w].push_back({a, Chow{{m, Rat(1)}}});
            }
            for (auto& km : kept) rd.kappa[v].push_back(km);
            out.add_raw(H, rd, coeff);
          }
        }
      }
      continue;
    }

    // Unstable vertex: genus 0, beta 0, exactly two remaining flags.
    if (!t.dec.kappa[(size_t)v].empty())
      throw std::runtime_error(
          "pushforward: kappa decoration on a collapsing vertex");
    if (flags.size() != 2)
      throw std::runtime_error("pushforward: unexpected unstable vertex");
    if (e_j > 0) continue;  // psi of the forgotten point dies on the bridge
    const auto& f1 = flags[0];
    const auto& f2 = flags[1];
    if (t.dec.psi[(size_t)f1.half] > 0 || t.dec.psi[(size_t)f2.half] > 0)
      continue;  // bridge psi classes vanish
    if (f1.is_leg && f2.is_leg)
      throw std::runtime_error("pushforward: target ambient would be unstable");

    if (!f1.is_leg && !f2.is_leg) {
      // two edges merge through the bridge
      int p1 = G.inv[(size_t)f1.half], p2 = G.inv[(size_t)f2.half];
      if (p1 == f2.half)
        throw std::runtime_error("pushforward: loop on a collapsing vertex");
      int e1 = detail::edge_index_of_half(G, f1.half);
      int e2 = detail::edge_index_of_half(G, f2.half);
      StableGraph H;
      H.g = G.g;
      H.n = G.n - 1;
      H.beta = G.beta;
      std::vector<int> vmap((size_t)G.num_vertices(), -1);
      for (int w = 0; w < G.num_vertices(); ++w) {
        if (w == v) continue;
        vmap[(size_t)w] = H.add_vertex(G.verts[(size_t)w].genus,
                                       G.verts[(size_t)w].beta);
      }
      std::vector<int> hmap((size_t)G.num_half(), -1);
      for (int i = 0; i + 1 < G.n; ++i) {
        int h = G.legs[(size_t)i];
        hmap[(size_t)h] = H.add_leg(vmap[(size_t)G.hv[(size_t)h]]);
      }
      // the merged edge
      auto [m1, m2] =
          H.add_edge(vmap[(size_t)G.hv[(size_t)p1]], vmap[(size_t)G.hv[(size_t)p2]]);
      hmap[(size_t)p1] = m1;
      hmap[(size_t)p2] = m2;
      auto es = G.edges();
      for (int e = 0; e < (int)es.size(); ++e) {
        if (e == e1 || e == e2) continue;
        auto [h1, h2] = es[(size_t)e];
        auto [n1, n2] = H.add_edge(vmap[(size_t)G.hv[(size_t)h1]],
                                   vmap[(size_t)G.hv[(size_t)h2]]);
        hmap[(size_t)h1] = n1;
        hmap[(size_t)h2] = n2;
      }
      RawDecor rd;
      for (int i = 0; i + 1 < G.n; ++i)
        if (t.dec.leg_cls[(size_t)i] != target.unit())
          rd.leg_cls[i] = Chow{{t.dec.leg_cls[(size_t)i], Rat(1)}};
      for (int h = 0; h < G.num_half(); ++h)
        if (hmap[(size_t)h] >= 0 && t.dec.psi[(size_t)h])
          rd.psi[hmap[(size_t)h]] = t.dec.psi[(size_t)h];
      // classes of the two old edges and of the forgotten leg meet at the
      // contracted component, which maps to a single point of the target
      Chow merged = target.chow_product(
          Chow{{t.dec.edge_cls[(size_t)e1], Rat(1)}},
          Chow{{t.dec.edge_cls[(size_t)e2], Rat(1)}});
      merged = target.chow_product(merged, Chow{{alpha_j, Rat(1)}});
      auto hes = H.edges();
      std::map<std::pair<int, int>, int> hidx;
      for (int e = 0; e < (int)hes.size(); ++e) hidx[hes[(size_t)e]] = e;
      int m_lo = std::min(m1, m2), m_hi = std::max(m1, m2);
      rd.edge_cls[hidx.at({m_lo, m_hi})] = merged;
      for (int e = 0; e < (int)es.size(); ++e) {
        if (e == e1 || e == e2) continue;
        if (t.dec.edge_cls[(size_t)e] == target.unit()) continue;
        auto [h1, h2] = es[(size_t)e];
        int a = hmap[(size_t)h1], b = hmap[(size_t)h2];
        if (a > b) std::swap(a, b);
        rd.edge_cls[hidx.at({a, b})] =
            Chow{{t.dec.edge_cls[(size_t)e], Rat(1)}};
      }
      for (int w = 0; w < G.num_vertices(); ++w) {
        if (w == v) continue;
        for (auto [a, m] : t.dec.kappa[(size_t)w])
          rd.kappa[vmap[(size_t)w]].push_back({a, Chow{{m, Rat(1)}}});
      }
      out.add_raw(H, rd, coeff);
      continue;
    }

    // one leg, one edge: the leg transplants to the neighbor vertex
    const auto& fleg = f1.is_leg ? f1 : f2;
    const auto& fedge = f1.is_leg ? f2 : f1;
    int p = G.inv[(size_t)fedge.half];
    int edead = detail::edge_index_of_half(G, fedge.half);
    StableGraph H;
    H.g = G.g;
    H.n = G.n - 1;
    H.beta = G.beta;
    std::vector<int> vmap((size_t)G.num_vertices(), -1);
    for (int w = 0; w < G.num_vertices(); ++w) {
      if (w == v) continue;
      vmap[(size_t)w] =
          H.add_vertex(G.verts[(size_t)w].genus, G.verts[(size_t)w].beta);
    }
    std::vector<int> hmap((size_t)G.num_half(), -1);
    for (int i = 0; i + 1 < G.n; ++i) {
      int h = G.legs[(size_t)i];
      int at = (h == fleg.half) ? vmap[(size_t)G.hv[(size_t)p]]
                                : vmap[(size_t)G.hv[(size_t)h]];
      hmap[(size_t)h] = H.add_leg(at);
    }
    auto es = G.edges();
    for (int e = 0; e < (int)es.size(); ++e) {
      if (e == edead) continue;
      auto [h1, h2] = es[(size_t)e];
      auto [n1, n2] = H.add_edge(vmap[(size_t)G.hv[(size_t)h1]],
                                 vmap[(size_t)G.hv[(size_t)h2]]);
      hmap[(size_t)h1] = n1;
      hmap[(size_t)h2] = n2;
    }
    RawDecor rd;
    for (int i = 0; i + 1 < G.n; ++i) {
      Chow cls{{t.dec.leg_cls[(size_t)i], Rat(1)}};
      if (i == fleg.leg_label) {
        cls = target.chow_product(cls, Chow{{alpha_j, Rat(1)}});
        cls = target.chow_product(
            cls, Chow{{t.dec.edge_cls[(size_t)edead], Rat(1)}});
      }
      if (!(cls.size() == 1 && cls.count(target.unit()) &&
            cls.at(target.unit()) == 1))
        rd.leg_cls[i] = cls;
    }
    // the transplanted leg inherits the psi exponent of the vanished node
    for (int h = 0; h < G.num_half(); ++h) {
      if (hmap[(size_t)h] < 0) continue;
      int e = t.dec.psi[(size_t)h];
      if (h == fleg.half) e = t.dec.psi[(size_t)p];
      if (e) rd.psi[hmap[(size_t)h]] = e;
    }
    auto hes = H.edges();
    std::map<std::pair<int, int>, int> hidx;
    for (int e = 0; e < (int)hes.size(); ++e) hidx[hes[(size_t)e]] = e;
    for (int e = 0; e < (int)es.size(); ++e) {
      if (e == edead || t.dec.edge_cls[(size_t)e] == target.unit()) continue;
      auto [h1, h2] = es[(size_t)e];
      int a = hmap[(size_t)h1], b = hmap[(size_t)h2];
      if (a > b) std::swap(a, b);
      rd.edge_cls[hidx.at({a, b})] = Chow{{t.dec.edge_cls[(size_t)e], Rat(1)}};
    }
    for (int w = 0; w < G.num_vertices(); ++w) {
      if (w == v) continue;
      for (auto [a, m] : t.dec.kappa[(size_t)w])
        rd.kappa[vmap[(size_t)w]].push_back({a, Chow{{m, Rat(1)}}});
    }
    out.add_raw(H, rd, coeff);
  }
  return out;
}

// Flat pullback along forgetting a new last marked point: (g, n) -> (g, n+1).
inline StrataElement forgetful_pullback(const StrataElement& S) {
  const Ambient& down = S.ambient();
  Ambient up{down.g, down.n + 1, down.beta, down.target};
  const Target& target = *down.target;
  StrataElement out(up, S.symbols());
  int new_label = down.n;  // 0-based label of the added leg

  for (const auto& [t, coeff] : S.terms()) {
    const StableGraph& G = t.graph;
    for (int v = 0; v < G.num_vertices(); ++v) {
      // kappa comparison: entries with a >= 0 may emit -psi^a ev^*theta at
      // the new point
      const auto& kap = t.dec.kappa[(size_t)v];
      std::vector<size_t> movable;
      for (size_t ki = 0; ki < kap.size(); ++ki)
        if (kap[ki].first >= 0) movable.push_back(ki);
      for (size_t mask = 0; mask < (size_t(1) << movable.size()); ++mask) {
        int e_new = 0, popcount = 0;
        Chow alpha = target.chow_unit();
        std::vector<std::pair<int, Chow>> kept;
        for (size_t ki = 0; ki < kap.size(); ++ki) {
          bool moved = false;
          for (size_t b = 0; b < movable.size(); ++b)
            if (movable[b] == ki && (mask >> b & 1)) moved = true;
          if (moved) {
            ++popcount;
            e_new += kap[ki].first;
            alpha =
                target.chow_product(alpha, Chow{{kap[ki].second, Rat(1)}});
          } else {
            kept.push_back({kap[ki].first, Chow{{kap[ki].second, Rat(1)}}});
          }
        }
        if (alpha.empty()) continue;
        Rat sign = (popcount % 2) ? Rat(-1) : Rat(1);

        // direct placement of the new leg at v
        {
          StableGraph H = G;
          H.n = up.n;
          int nh = H.add_leg(v);
          RawDecor rd = detail::decor_to_raw(G, t.dec, target);
          rd.kappa.erase(v);
          for (auto& km : kept) rd.kappa[v].push_back(km);
          if (e_new) rd.psi[nh] = e_new;
          bool unit_alpha = (alpha.size() == 1 && alpha.count(target.unit()) &&
                             alpha.at(target.unit()) == 1);
          if (!unit_alpha) rd.leg_cls[new_label] = alpha;
          out.add_raw(H, rd, coeff * sign);
        }
        // bridge corrections at psi-carrying flags of v (new-leg psi must
        // vanish on the bridge)
        if (e_new == 0) {
          auto flags = detail::flags_at_vertex(G, v, -1);
          for (const auto& f : flags) {
            if (t.dec.psi[(size_t)f.half] < 1) continue;
            StableGraph H;
            H.g = G.g;
            H.n = up.n;
            H.beta = G.beta;
            for (const auto& vx : G.verts) H.add_vertex(vx.genus, vx.beta);
            int w = H.add_vertex(0, CurveClass::zero(G.beta.rank()));
            std::vector<int> hmap((size_t)G.num_half(), -1);
            for (int i = 0; i < G.n; ++i) {
              int h = G.legs[(size_t)i];
              int at = (h == f.half) ? w : G.hv[(size_t)h];
              hmap[(size_t)h] = H.add_leg(at);
            }
            int new_half = H.add_leg(w);
            auto es = G.edges();
            std::vector<std::pair<int, int>> new_edge_halves;
            for (auto [h1, h2] : es) {
              int a1 = (h1 == f.half) ? w : G.hv[(size_t)h1];
              int a2 = (h2 == f.half) ? w : G.hv[(size_t)h2];
              auto [n1, n2] = H.add_edge(a1, a2);
              hmap[(size_t)h1] = n1;
              hmap[(size_t)h2] = n2;
              new_edge_halves.push_back({n1, n2});
            }
            auto [b1, b2] = H.add_edge(v, w);  // v-side carries psi^{e-1}

            RawDecor rd;
            for (int i = 0; i < G.n; ++i)
              if (t.dec.leg_cls[(size_t)i] != target.unit())
                rd.leg_cls[i] = Chow{{t.dec.leg_cls[(size_t)i], Rat(1)}};
            bool unit_alpha =
                (alpha.size() == 1 && alpha.count(target.unit()) &&
                 alpha.at(target.unit()) == 1);
            if (!unit_alpha) rd.leg_cls[new_label] = alpha;
            for (int h = 0; h < G.num_half(); ++h) {
              int e = t.dec.psi[(size_t)h];
              if (h == f.half) e -= 1;
              if (e) rd.psi[hmap[(size_t)h]] = e;
            }
            if (t.dec.psi[(size_t)f.half] - 1 > 0 && !f.is_leg) {
              // handled above through hmap
            }
            // psi^{e-1} sits on the v-side half of the new bridge edge when
            // the moved flag was an edge half; for a moved leg the remaining
            // exponent also sits there.
            {
              int rem = t.dec.psi[(size_t)f.half] - 1;
              // remove the exponent recorded at the moved flag and place it
              // on the bridge's v-side half instead
              if (rem > 0) {
                rd.psi.erase(hmap[(size_t)f.half]);
                rd.psi[b1] = rem;
              } else {
                rd.psi.erase(hmap[(size_t)f.half]);
              }
            }
            auto hes = H.edges();
            std::map<std::pair<int, int>, int> hidx;
            for (int e = 0; e < (int)hes.size(); ++e)
              hidx[hes[(size_t)e]] = e;
            for (int e = 0; e < (int)es.size(); ++e) {
              if (t.dec.edge_cls[(size_t)e] == target.unit()) continue;
              auto [n1, n2] = new_edge_halves[(size_t)e];
              if (n1 > n2) std::swap(n1, n2);
              rd.edge_cls[hidx.at({n1, n2})] =
                  Chow{{t.dec.edge_cls[(size_t)e], Rat(1)}};
            }
            for (int u = 0; u < G.num_vertices(); ++u) {
              if (u == v) continue;
              for (auto [a, m] : t.dec.kappa[(size_t)u])
                rd.kappa[u].push_back({a, Chow{{m, Rat(1)}}});
            }
            for (auto& km : kept) rd.kappa[v].push_back(km);
            out.add_raw(H, rd, coeff * sign * Rat(-1));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace strata

#endif
