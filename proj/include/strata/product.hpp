#ifndef STRATA_PRODUCT_HPP
#define STRATA_PRODUCT_HPP

#include <mutex>

#include "strata/element.hpp"

namespace strata {

// Memoized list of ambient stable graphs, keyed by ambient data and the edge
// cap. Shared by the product and the weighted graph sums.
inline const std::vector<StableGraph>& ambient_graphs(const Ambient& amb,
                                                      int max_edges) {
  using Key = std::tuple<int, int, std::vector<long>, std::string, int>;
  static std::map<Key, std::vector<StableGraph>> cache;
  static std::mutex mu;
  Key key{amb.g, amb.n, amb.beta.c, amb.target->name, max_edges};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto graphs = enumerate_graphs(amb.g, amb.n, amb.beta, max_edges);
  return cache.emplace(key, std::move(graphs)).first->second;
}

namespace detail {

// One decorated term pushed through one colored degeneration. The coloring
// assigns each edge of the ambient graph a side: kept by A only, kept by B
// only, or kept by both (the excess case).
enum EdgeColor { kOnlyA = 0, kOnlyB = 1, kBoth = 2 };

struct SideMatch {
  Contraction contraction;         // ambient graph with the other side contracted
  std::vector<GraphAut> isos;      // contracted graph -> factor graph
};

inline void transport_side(const StableGraph& amb_graph, const Term& factor,
                           const SideMatch& side, const GraphAut& iso,
                           Decor& dec, const Target& target,
                           std::vector<std::vector<int>>& kappa_targets) {
  // psi exponents on kept half-edges
  const auto& hm = side.contraction.half_map;
  for (int h = 0; h < amb_graph.num_half(); ++h) {
    if (hm[(size_t)h] < 0) continue;
    int fh = iso.hperm[(size_t)hm[(size_t)h]];
    dec.psi[(size_t)h] += factor.dec.psi[(size_t)fh];
  }
  // leg classes multiply (legs are fixed by label)
  // edge classes descend to the matching kept edge
  auto amb_edges = amb_graph.edges();
  auto fac_edges = factor.graph.edges();
  std::map<std::pair<int, int>, int> fac_index;
  for (int e = 0; e < (int)fac_edges.size(); ++e)
    fac_index[fac_edges[(size_t)e]] = e;
  for (int e = 0; e < (int)amb_edges.size(); ++e) {
    auto [h1, h2] = amb_edges[(size_t)e];
    if (hm[(size_t)h1] < 0) continue;
    int a = iso.hperm[(size_t)hm[(size_t)h1]];
    int b = iso.hperm[(size_t)hm[(size_t)h2]];
    if (a > b) std::swap(a, b);
    int fe = fac_index.at({a, b});
    int cls = factor.dec.edge_cls[(size_t)fe];
    if (cls != target.unit()) {
      // multiply Chow decorations on coinciding edges
      Chow prod = target.chow_product(Chow{{dec.edge_cls[(size_t)e], Rat(1)}},
                                      Chow{{cls, Rat(1)}});
      if (prod.size() != 1)
        throw std::runtime_error("edge decoration product is not a monomial");
      // non-monomial products cannot appear for basis-monomial inputs on
      // targets with monomial tables; general targets are handled upstream
      dec.edge_cls[(size_t)e] = prod.begin()->first;
    }
  }
  // kappa entries split over the preimage vertices; record the choices
  for (int fv = 0; fv < factor.graph.num_vertices(); ++fv) {
    std::vector<int> preimage;
    for (int v = 0; v < amb_graph.num_vertices(); ++v)
      if (iso.vperm[(size_t)side.contraction.vert_map[(size_t)v]] == fv)
        preimage.push_back(v);
    for (auto [a, m] : factor.dec.kappa[(size_t)fv]) {
      (void)a;
      (void)m;
      kappa_targets.push_back(preimage);
    }
  }
}

}  // namespace detail

// Product of two strata elements over the same ambient space: sum over common
// degenerations with edge colorings; doubly colored edges contribute the
// excess factor -(psi_h + psi_{h'}); vertex kappa decorations split over the
// collapsing vertices in all ways.
inline StrataElement multiply(const StrataElement& A, const StrataElement& B) {
  if (A.ambient() != B.ambient())
    throw std::invalid_argument("ambient mismatch in product");
  std::vector<std::string> syms =
      A.symbols().empty() ? B.symbols() : A.symbols();
  if (!A.symbols().empty() && !B.symbols().empty() &&
      A.symbols() != B.symbols())
    throw std::invalid_argument("symbol list mismatch in product");
  const Ambient& amb = A.ambient();
  const Target& target = *amb.target;
  long vd = amb.vdim();
  StrataElement out(amb, syms);
  auto lift = [&](const Poly& p) {
    if (p.nvars() == (int)syms.size()) return p;
    return Poly(p.constant_value(), (int)syms.size());
  };

  for (const auto& [tA, cA] : A.terms()) {
    long dA = term_degree(tA, target);
    for (const auto& [tB, cB] : B.terms()) {
      long dB = term_degree(tB, target);
      if (dA + dB > vd) continue;  // every product term has degree dA + dB
      int EA = tA.graph.num_edges(), EB = tB.graph.num_edges();
      int maxE = EA + EB;
      const auto& graphs = ambient_graphs(amb, maxE);
      Poly cAB = lift(cA) * lift(cB);
      for (const auto& G : graphs) {
        auto es = G.edges();
        int E = (int)es.size();
        if (E < std::max(EA, EB) || E > maxE) continue;
        long autG = automorphism_order(G);
        Rat inv_aut = Rat(1) / Rat(autG);
        // color assignments: every edge kept by A, by B, or by both
        std::vector<int> color((size_t)E, 0);
        std::function<void(int, int, int)> walk = [&](int ei, int keptA,
                                                      int keptB) {
          if (ei == E) {
            if (keptA != EA || keptB != EB) return;
            std::set<int> keepA, keepB;
            int n_both = 0;
            for (int e = 0; e < E; ++e) {
              if (color[(size_t)e] != detail::kOnlyB) keepA.insert(e);
              if (color[(size_t)e] != detail::kOnlyA) keepB.insert(e);
              if (color[(size_t)e] == detail::kBoth) ++n_both;
            }
            detail::SideMatch sideA{contract_edges(G, keepA), {}};
            sideA.isos = detail::isomorphisms(sideA.contraction.graph, tA.graph);
            if (sideA.isos.empty()) return;
            detail::SideMatch sideB{contract_edges(G, keepB), {}};
            sideB.isos = detail::isomorphisms(sideB.contraction.graph, tB.graph);
            if (sideB.isos.empty()) return;

            for (const auto& isoA : sideA.isos)
              for (const auto& isoB : sideB.isos) {
                Decor dec = Decor::empty_for(G, target);
                std::vector<std::vector<int>> kappa_targets;
                std::vector<std::pair<int, int>> kappa_entries;
                detail::transport_side(G, tA, sideA, isoA, dec, target,
                                       kappa_targets);
                for (int fv = 0; fv < tA.graph.num_vertices(); ++fv)
                  for (auto km : tA.dec.kappa[(size_t)fv])
                    kappa_entries.push_back(km);
                size_t a_count = kappa_entries.size();
                detail::transport_side(G, tB, sideB, isoB, dec, target,
                                       kappa_targets);
                for (int fv = 0; fv < tB.graph.num_vertices(); ++fv)
                  for (auto km : tB.dec.kappa[(size_t)fv])
                    kappa_entries.push_back(km);
                (void)a_count;

                // leg classes multiply in the Chow ring
                RawDecor rd;
                bool dead = false;
                for (int i = 0; i < G.n && !dead; ++i) {
                  Chow prod = target.chow_product(
                      Chow{{tA.dec.leg_cls[(size_t)i], Rat(1)}},
                      Chow{{tB.dec.leg_cls[(size_t)i], Rat(1)}});
                  if (prod.empty()) dead = true;
                  rd.leg_cls[i] = prod;
                }
                if (dead) continue;
                for (int h = 0; h < G.num_half(); ++h)
                  if (dec.psi[(size_t)h]) rd.psi[h] = dec.psi[(size_t)h];
                for (int e = 0; e < E; ++e)
                  if (dec.edge_cls[(size_t)e] != target.unit())
                    rd.edge_cls[e] = Chow{{dec.edge_cls[(size_t)e], Rat(1)}};

                // excess factors and kappa distribution both branch; walk them
                std::vector<int> both_edges;
                for (int e = 0; e < E; ++e)
                  if (color[(size_t)e] == detail::kBoth) both_edges.push_back(e);

                std::function<void(size_t, RawDecor&, Rat)> put_kappa =
                    [&](size_t ki, RawDecor& acc, Rat f) {
                      if (ki == kappa_entries.size()) {
                        out.add_raw(G, acc, cAB * f);
                        return;
                      }
                      for (int v : kappa_targets[ki]) {
                        acc.kappa[v].push_back(
                            {kappa_entries[ki].first,
                             Chow{{kappa_entries[ki].second, Rat(1)}}});
                        put_kappa(ki + 1, acc, f);
                        acc.kappa[v].pop_back();
                        if (acc.kappa[v].empty()) acc.kappa.erase(v);
                      }
                    };
                std::function<void(size_t, RawDecor&, Rat)> put_excess =
                    [&](size_t bi, RawDecor& acc, Rat f) {
                      if (bi == both_edges.size()) {
                        put_kappa(0, acc, f);
                        return;
                      }
                      auto [h1, h2] = es[(size_t)both_edges[bi]];
                      for (int h : {h1, h2}) {
                        acc.psi[h] += 1;
                        put_excess(bi + 1, acc, -f);
                        acc.psi[h] -= 1;
                        if (acc.psi[h] == 0) acc.psi.erase(h);
                      }
                    };
                RawDecor acc = rd;
                put_excess(0, acc, inv_aut);
              }
            return;
          }
          for (int c = 0; c < 3; ++c) {
            int ka = keptA + (c != detail::kOnlyB);
            int kb = keptB + (c != detail::kOnlyA);
            if (ka > EA || kb > EB) continue;
            color[(size_t)ei] = c;
            walk(ei + 1, ka, kb);
          }
        };
        walk(0, 0, 0);
      }
    }
  }
  return out;
}

inline StrataElement chow_multiply(const StrataElement& A,
                                   const StrataElement& B) {
  return multiply(A, B);
}

inline StrataElement element_power(const StrataElement& A, int e) {
  StrataElement r = fundamental_class(A.ambient(), A.symbols());
  for (int i = 0; i < e; ++i) r = multiply(r, A);
  return r;
}

// ---------------------------------------------------------------------------
// Gluing: graft per-vertex elements onto a stable graph. The k-th flag of a
// vertex (its legs in label order, then its edge half-edges in half-edge id
// order) corresponds to the k-th marking of that vertex's space.
// ---------------------------------------------------------------------------

inline std::vector<int> vertex_flags(const StableGraph& G, int v) {
  std::vector<int> legs, halves;
  for (int i = 0; i < G.n; ++i)
    if (G.hv[(size_t)G.legs[(size_t)i]] == v) legs.push_back(G.legs[(size_t)i]);
  for (int h = 0; h < G.num_half(); ++h)
    if (G.hv[(size_t)h] == v && G.inv[(size_t)h] != h) halves.push_back(h);
  legs.insert(legs.end(), halves.begin(), halves.end());
  return legs;
}

inline StrataElement glue_along_graph(
    const StableGraph& Gamma, const std::vector<StrataElement>& per_vertex,
    const Ambient& outer) {
  int V = Gamma.num_vertices();
  if ((int)per_vertex.size() != V)
    throw std::invalid_argument("need one element per vertex");
  for (int v = 0; v < V; ++v) {
    const Ambient& a = per_vertex[(size_t)v].ambient();
    if (a.g != Gamma.verts[(size_t)v].genus ||
        a.n != Gamma.valence(v) ||
        a.beta != Gamma.verts[(size_t)v].beta)
      throw std::invalid_argument("ambient mismatch at a glued vertex");
  }
  std::vector<std::string> syms;
  for (const auto& e : per_vertex)
    if (!e.symbols().empty()) {
      if (!syms.empty() && syms != e.symbols())
        throw std::invalid_argument("symbol mismatch in glue");
      syms = e.symbols();
    }
  StrataElement out(outer, syms);
  auto lift = [&](const Poly& p) {
    if (p.nvars() == (int)syms.size()) return p;
    return Poly(p.constant_value(), (int)syms.size());
  };

  // iterate the cartesian product of term maps
  std::vector<std::vector<std::pair<const Term*, const Poly*>>> factors(
      (size_t)V);
  for (int v = 0; v < V; ++v) {
    for (const auto& [t, c] : per_vertex[(size_t)v].terms())
      factors[(size_t)v].push_back({&t, &c});
    if (factors[(size_t)v].empty()) return out;  // zero factor
  }
  std::vector<size_t> pick((size_t)V, 0);
  const Target& target = *outer.target;
  while (true) {
    // assemble the composite graph
    StableGraph G;
    G.g = outer.g;
    G.n = outer.n;
    G.beta = outer.beta;
    RawDecor rd;
    std::vector<std::vector<int>> vmap((size_t)V);  // factor vertex -> new id
    for (int v = 0; v < V; ++v) {
      const Term& t = *factors[(size_t)v][pick[(size_t)v]].first;
      for (const auto& vx : t.graph.verts)
        vmap[(size_t)v].push_back(G.add_vertex(vx.genus, vx.beta));
    }
    // flags: Gamma leg label -> (vertex, flag position); the factor's leg at
    // that position provides the decorated half-edge.
    std::vector<int> new_leg_half((size_t)Gamma.n, -1);
    std::map<int, std::pair<int, int>> gamma_half_to_factor_leg;
    for (int v = 0; v < V; ++v) {
      auto flags = vertex_flags(Gamma, v);
      for (int k = 0; k < (int)flags.size(); ++k) {
        int h = flags[(size_t)k];
        gamma_half_to_factor_leg[h] = {v, k};
      }
    }
    // legs of the composite graph, in label order
    for (int i = 0; i < Gamma.n; ++i) {
      int gh = Gamma.legs[(size_t)i];
      auto [v, k] = gamma_half_to_factor_leg.at(gh);
      const Term& t = *factors[(size_t)v][pick[(size_t)v]].first;
      int fh = t.graph.legs.at((size_t)k);
      int nv = vmap[(size_t)v][(size_t)t.graph.hv[(size_t)fh]];
      int nh = G.add_leg(nv);
      new_leg_half[(size_t)i] = nh;
      if (t.dec.psi[(size_t)fh]) rd.psi[nh] = t.dec.psi[(size_t)fh];
      if (t.dec.leg_cls[(size_t)k] != target.unit())
        rd.leg_cls[i] = Chow{{t.dec.leg_cls[(size_t)k], Rat(1)}};
    }
    // Gamma's edges: glue factor legs pairwise
    int edge_counter = 0;
    for (auto [h1, h2] : Gamma.edges()) {
      auto [v1, k1] = gamma_half_to_factor_leg.at(h1);
      auto [v2, k2] = gamma_half_to_factor_leg.at(h2);
      const Term& t1 = *factors[(size_t)v1][pick[(size_t)v1]].first;
      const Term& t2 = *factors[(size_t)v2][pick[(size_t)v2]].first;
      int fh1 = t1.graph.legs.at((size_t)k1);
      int fh2 = t2.graph.legs.at((size_t)k2);
      auto [nh1, nh2] = G.add_edge(vmap[(size_t)v1][(size_t)t1.graph.hv[(size_t)fh1]],
                                   vmap[(size_t)v2][(size_t)t2.graph.hv[(size_t)fh2]]);
      if (t1.dec.psi[(size_t)fh1]) rd.psi[nh1] = t1.dec.psi[(size_t)fh1];
      if (t2.dec.psi[(size_t)fh2]) rd.psi[nh2] = t2.dec.psi[(size_t)fh2];
      Chow cls = target.chow_product(
          Chow{{t1.dec.leg_cls[(size_t)k1], Rat(1)}},
          Chow{{t2.dec.leg_cls[(size_t)k2], Rat(1)}});
      // edge index of this new edge equals its creation order among edges
      // with both halves added after the legs; see StableGraph::edges()
      (void)edge_counter;
      ++edge_counter;
      rd.edge_cls[-1] = Chow{};  // placeholder removed below
      rd.edge_cls.erase(-1);
      if (!(cls.size() == 1 && cls.count(target.unit()) &&
            cls.at(target.unit()) == 1)) {
        // record by edge index computed after the graph is complete
        // (Gamma edges are appended before factor-internal edges)
        rd.edge_cls[edge_counter - 1] = cls;
      }
    }
    // factor-internal edges and kappa decorations
    for (int v = 0; v < V; ++v) {
      const Term& t = *factors[(size_t)v][pick[(size_t)v]].first;
      auto fes = t.graph.edges();
      for (int e = 0; e < (int)fes.size(); ++e) {
        auto [fh1, fh2] = fes[(size_t)e];
        auto [nh1, nh2] =
            G.add_edge(vmap[(size_t)v][(size_t)t.graph.hv[(size_t)fh1]],
                       vmap[(size_t)v][(size_t)t.graph.hv[(size_t)fh2]]);
        if (t.dec.psi[(size_t)fh1]) rd.psi[nh1] = t.dec.psi[(size_t)fh1];
        if (t.dec.psi[(size_t)fh2]) rd.psi[nh2] = t.dec.psi[(size_t)fh2];
        if (t.dec.edge_cls[(size_t)e] != target.unit())
          rd.edge_cls[edge_counter] =
              Chow{{t.dec.edge_cls[(size_t)e], Rat(1)}};
        ++edge_counter;
      }
      for (int fv = 0; fv < t.graph.num_vertices(); ++fv)
        for (auto [a, m] : t.dec.kappa[(size_t)fv])
          rd.kappa[vmap[(size_t)v][(size_t)fv]].push_back(
              {a, Chow{{m, Rat(1)}}});
    }
    Poly coeff(Rat(1), (int)syms.size());
    for (int v = 0; v < V; ++v)
      coeff *= lift(*factors[(size_t)v][pick[(size_t)v]].second);
    out.add_raw(G, rd, coeff);

    // next combination
    int v = V - 1;
    while (v >= 0) {
      if (++pick[(size_t)v] < factors[(size_t)v].size()) break;
      pick[(size_t)v] = 0;
      --v;
    }
    if (v < 0) break;
  }
  return out;
}

}  // namespace strata

#endif
