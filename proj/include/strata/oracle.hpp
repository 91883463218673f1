#ifndef STRATA_ORACLE_HPP
#define STRATA_ORACLE_HPP

#include "strata/dr.hpp"
#include "strata/product.hpp"

namespace strata {

// Reference relations transcribed from the companion write-up, expanded
// against a concrete ambient at call time so that transcription errors show
// up as structured diffs. Ids follow the catalog ("4.2/a1^2", "4.4/m^4", ...).
namespace fixtures {

inline Rat b_of(const Ambient& amb, const CurveClass& part) {
  return amb.target->degree_pairing(part, amb.target->c1S);
}

// One-edge two-vertex graph builder; legs listed 0-based for each side.
inline StableGraph two_vertex(const Ambient& amb, int g1, const CurveClass& b1,
                              const std::vector<int>& legs1, int g2,
                              const CurveClass& b2) {
  StableGraph G;
  G.g = amb.g;
  G.n = amb.n;
  G.beta = amb.beta;
  G.add_vertex(g1, b1);
  G.add_vertex(g2, b2);
  std::set<int> l1(legs1.begin(), legs1.end());
  for (int i = 0; i < amb.n; ++i) G.add_leg(l1.count(i) ? 0 : 1);
  G.add_edge(0, 1);
  return G;
}

inline StableGraph three_chain(const Ambient& amb, const std::vector<int>& gv,
                               const std::vector<CurveClass>& bv,
                               const std::vector<int>& leg_at) {
  StableGraph G;
  G.g = amb.g;
  G.n = amb.n;
  G.beta = amb.beta;
  for (int v = 0; v < 3; ++v) G.add_vertex(gv[(size_t)v], bv[(size_t)v]);
  for (int i = 0; i < amb.n; ++i) G.add_leg(leg_at[(size_t)i]);
  G.add_edge(0, 1);
  G.add_edge(1, 2);
  return G;
}

// xi decoration on one leg of an arbitrary graph.
inline void put_xi(RawDecor& rd, const Ambient& amb, int leg0) {
  rd.leg_cls[leg0] = amb.target->c1S;
}

inline void put_eta(RawDecor& rd, const Ambient& amb, int vertex) {
  rd.kappa[vertex].push_back(
      {-1, amb.target->chow_product(amb.target->c1S, amb.target->c1S)});
}

// Degree-1 relations on the two-pointed genus-0 space (coefficients of
// a1^2, a1, a1^0 after eliminating a2).
inline StrataElement rel_42_a1sq(const Ambient& amb) {
  StrataElement out = psi_class(amb, 1) + psi_class(amb, 2);
  for (const auto& sp : enumerate_splittings(amb.beta, 2)) {
    StableGraph G = two_vertex(amb, 0, sp[0], {0}, 0, sp[1]);
    if (validate(G)) continue;
    out.add_raw(G, RawDecor{}, Poly(Rat(-1), 0));
  }
  return out;
}

inline StrataElement rel_42_a1(const Ambient& amb) {
  Rat b = b_of(amb, amb.beta);
  StrataElement out = xi_class(amb, 1) - xi_class(amb, 2);
  out.add_element(psi_class(amb, 2), -b);
  for (const auto& sp : enumerate_splittings(amb.beta, 2)) {
    StableGraph G = two_vertex(amb, 0, sp[0], {0}, 0, sp[1]);
    if (validate(G)) continue;
    out.add_raw(G, RawDecor{}, Poly(b_of(amb, sp[0]), 0));
  }
  return out;
}

inline StrataElement rel_42_a1const(const Ambient& amb) {
  Rat b = b_of(amb, amb.beta);
  StrataElement out = eta_class(amb) * Rat(-1);
  out.add_element(psi_class(amb, 2), b * b);
  out.add_element(xi_class(amb, 2), 2 * b);
  for (const auto& sp : enumerate_splittings(amb.beta, 2)) {
    {
      StableGraph G = two_vertex(amb, 0, sp[0], {0, 1}, 0, sp[1]);
      if (!validate(G)) {
        Rat b2 = b_of(amb, sp[1]);
        out.add_raw(G, RawDecor{}, Poly(-b2 * b2, 0));
      }
    }
    {
      StableGraph G = two_vertex(amb, 0, sp[0], {0}, 0, sp[1]);
      if (!validate(G)) {
        Rat b1 = b_of(amb, sp[0]);
        out.add_raw(G, RawDecor{}, Poly(-b1 * b1, 0));
      }
    }
  }
  return out;
}

// Schematic of the full degree-1 class for (0, 2) with a1 kept symbolic and
// a2 eliminated by the degree constraint.
inline StrataElement rel_42_P1_symbolic(const Ambient& amb) {
  Rat b = b_of(amb, amb.beta);
  StrataElement out(amb, {"a1"});
  Poly a1 = Poly::variable(0, 1);
  Poly a2 = Poly(b, 1) - a1;
  auto triv = trivial_graph(amb.g, amb.n, amb.beta);
  // -eta/2 + a1^2 psi1 / 2 + a2^2 psi2 / 2
  {
    RawDecor rd;
    put_eta(rd, amb, 0);
    out.add_raw(triv, rd, Poly(Rat(-1, 2), 1));
  }
  {
    RawDecor rd;
    rd.psi[triv.legs[0]] = 1;
    out.add_raw(triv, rd, a1 * a1 * Rat(1, 2));
  }
  {
    RawDecor rd;
    rd.psi[triv.legs[1]] = 1;
    out.add_raw(triv, rd, a2 * a2 * Rat(1, 2));
  }
  {
    RawDecor rd;
    put_xi(rd, amb, 0);
    out.add_raw(triv, rd, a1);
  }
  {
    RawDecor rd;
    put_xi(rd, amb, 1);
    out.add_raw(triv, rd, a2);
  }
  for (const auto& sp : enumerate_splittings(amb.beta, 2)) {
    {
      StableGraph G = two_vertex(amb, 0, sp[0], {0, 1}, 0, sp[1]);
      if (!validate(G)) {
        Rat b2 = b_of(amb, sp[1]);
        out.add_raw(G, RawDecor{}, Poly(-b2 * b2 / 2, 1));
      }
    }
    {
      StableGraph G = two_vertex(amb, 0, sp[0], {0}, 0, sp[1]);
      if (!validate(G)) {
        Poly diff = Poly(b_of(amb, sp[0]), 1) - a1;
        out.add_raw(G, RawDecor{}, diff * diff * Rat(-1, 2));
      }
    }
  }
  return out;
}

// kappa_1 pullback comparison: kappa_1 + legless boundary sum.
inline StrataElement rel_27(const Ambient& amb) {
  StrataElement out = kappa1_class(amb);
  std::vector<int> all;
  for (int i = 0; i < amb.n; ++i) all.push_back(i);
  for (const auto& sp : enumerate_splittings(amb.beta, 2)) {
    StableGraph G = two_vertex(amb, amb.g, sp[0], all, 0, sp[1]);
    if (validate(G)) continue;
    out.add_raw(G, RawDecor{}, Poly(Rat(1), 0));
  }
  return out;
}

// Genus-1 psi-as-boundary identity, returned as (lhs - rhs): psi_i minus
// (1/12) [loop] minus the boundary sums.
inline StrataElement rel_43(const Ambient& amb, int leg /*1-based*/) {
  if (amb.g != 1) throw std::invalid_argument("identity lives in genus 1");
  StrataElement out = psi_class(amb, leg);
  // delta denotes the reduced one-loop stratum; the gluing map is 2:1 onto
  // it, so (1/12) delta is (1/24) of the loop basis class
  out.add_element(graph_class(amb, loop_graph_delta(amb.g, amb.n, amb.beta)),
                  Rat(-1, 24));
  for (const auto& sp : enumerate_splittings(amb.beta, 2)) {
    {
      // genus-1 vertex bare; every leg on the genus-0 side
      std::vector<int> none;
      StableGraph G = two_vertex(amb, 1, sp[0], none, 0, sp[1]);
      if (!validate(G)) out.add_raw(G, RawDecor{}, Poly(Rat(-1), 0));
    }
    {
      // the chosen leg on the genus-0 side, the rest with the genus-1 vertex
      std::vector<int> others;
      for (int i = 0; i < amb.n; ++i)
        if (i != leg - 1) others.push_back(i);
      StableGraph G = two_vertex(amb, 1, sp[0], others, 0, sp[1]);
      if (!validate(G)) out.add_raw(G, RawDecor{}, Poly(Rat(-1), 0));
    }
  }
  return out;
}

// (g, n, d) = (1, 1, 2) graded relations.
inline StrataElement rel_44_m4(const Ambient& amb) {
  Rat b = b_of(amb, amb.beta);
  StrataElement out(amb);
  auto triv = trivial_graph(amb.g, amb.n, amb.beta);
  auto add_triv = [&](std::function<void(RawDecor&)> dec, Rat c) {
    RawDecor rd;
    dec(rd);
    out.add_raw(triv, rd, Poly(c, 0));
  };
  add_triv([&](RawDecor& rd) { put_eta(rd, amb, 0); put_eta(rd, amb, 0); },
           Rat(1));
  add_triv([&](RawDecor& rd) {
    put_eta(rd, amb, 0);
    rd.psi[triv.legs[0]] = 1;
  }, -4 * b * b);
  add_triv([&](RawDecor& rd) {
    put_eta(rd, amb, 0);
    put_xi(rd, amb, 0);
  }, -4 * b);
  add_triv([&](RawDecor& rd) { rd.psi[triv.legs[0]] = 2; }, b * b * b * b);
  add_triv([&](RawDecor& rd) {
    rd.leg_cls[0] = amb.target->chow_product(amb.target->c1S, amb.target->c1S);
  }, 4 * b * b);
  add_triv([&](RawDecor& rd) {
    rd.psi[triv.legs[0]] = 1;
    put_xi(rd, amb, 0);
  }, 4 * b * b * b);

  for (const auto& sp : enumerate_splittings(amb.beta, 2)) {
    Rat b1 = b_of(amb, sp[0]), b2 = b_of(amb, sp[1]);
    // leg on the genus-1 vertex
    {
      StableGraph G = two_vertex(amb, 1, sp[0], {0}, 0, sp[1]);
      if (!validate(G)) {
        auto add_dec = [&](std::function<void(RawDecor&)> dec, Rat c) {
          RawDecor rd;
          dec(rd);
          out.add_raw(G, rd, Poly(c, 0));
        };
        add_dec([&](RawDecor& rd) { put_eta(rd, amb, 0); }, 2 * b2 * b2);
        add_dec([&](RawDecor& rd) { put_eta(rd, amb, 1); }, 2 * b2 * b2);
        add_dec([&](RawDecor& rd) { rd.psi[G.legs[0]] = 1; },
                -2 * b * b * b2 * b2);
        add_dec([&](RawDecor& rd) { put_xi(rd, amb, 0); }, -4 * b * b2 * b2);
      }
    }
    // leg on the genus-0 vertex
    {
      StableGraph G = two_vertex(amb, 1, sp[0], {}, 0, sp[1]);
      if (!validate(G)) {
        auto add_dec = [&](std::function<void(RawDecor&)> dec, Rat c) {
          RawDecor rd;
          dec(rd);
          out.add_raw(G, rd, Poly(c, 0));
        };
        add_dec([&](RawDecor& rd) { put_eta(rd, amb, 0); }, 2 * b1 * b1);
        add_dec([&](RawDecor& rd) { put_eta(rd, amb, 1); }, 2 * b1 * b1);
        add_dec([&](RawDecor& rd) { rd.psi[G.legs[0]] = 1; },
                -2 * b * b * b1 * b1);
        add_dec([&](RawDecor& rd) { put_xi(rd, amb, 0); }, -4 * b * b1 * b1);
      }
    }
  }
  for (const auto& sp : enumerate_splittings(amb.beta, 3)) {
    Rat b1 = b_of(amb, sp[0]), b2 = b_of(amb, sp[1]), b3 = b_of(amb, sp[2]);
    auto chain = [&](std::vector<int> gv, int leg_at, Rat c) {
      StableGraph G = three_chain(amb, gv, {sp[0], sp[1], sp[2]}, {leg_at});
      if (!validate(G)) out.add_raw(G, RawDecor{}, Poly(c, 0));
    };
    chain({1, 0, 0}, 0, 2 * (b - b1) * (b - b1) * b3 * b3);
    chain({1, 0, 0}, 1, 2 * b1 * b1 * b3 * b3);
    chain({1, 0, 0}, 2, 2 * b1 * b1 * (b - b3) * (b - b3));
    chain({0, 1, 0}, 0, 2 * b3 * b3 * (b - b2) * (b - b2));
    chain({0, 1, 0}, 1, 2 * b2 * b2 * b3 * b3);
  }
  return out;
}

// loop with an extra separating edge, the loop on the first vertex
inline StableGraph loop_plus_edge(const Ambient& amb, const CurveClass& b1,
                                  const CurveClass& b2,
                                  const std::vector<int>& legs1) {
  StableGraph G;
  G.g = amb.g;
  G.n = amb.n;
  G.beta = amb.beta;
  G.add_vertex(0, b1);
  G.add_vertex(0, b2);
  std::set<int> l1(legs1.begin(), legs1.end());
  for (int i = 0; i < amb.n; ++i) G.add_leg(l1.count(i) ? 0 : 1);
  G.add_edge(0, 0);
  G.add_edge(0, 1);
  return G;
}

inline StableGraph double_edge(const Ambient& amb, const CurveClass& b1,
                               const CurveClass& b2,
                               const std::vector<int>& legs1) {
  StableGraph G;
  G.g = amb.g;
  G.n = amb.n;
  G.beta = amb.beta;
  G.add_vertex(0, b1);
  G.add_vertex(0, b2);
  std::set<int> l1(legs1.begin(), legs1.end());
  for (int i = 0; i < amb.n; ++i) G.add_leg(l1.count(i) ? 0 : 1);
  G.add_edge(0, 1);
  G.add_edge(0, 1);
  return G;
}

inline StrataElement rel_44_m2(const Ambient& amb) {
  Rat b = b_of(amb, amb.beta);
  StrataElement out(amb);
  auto delta = loop_graph_delta(amb.g, amb.n, amb.beta);
  {
    RawDecor rd;
    put_eta(rd, amb, 0);
    out.add_raw(delta, rd, Poly(Rat(-1), 0));
  }
  {
    RawDecor rd;
    put_xi(rd, amb, 0);
    out.add_raw(delta, rd, Poly(2 * b, 0));
  }
  for (const auto& sp : enumerate_splittings(amb.beta, 2)) {
    Rat b1 = b_of(amb, sp[0]), b2 = b_of(amb, sp[1]);
    {
      StableGraph G = loop_plus_edge(amb, sp[0], sp[1], {0});
      if (!validate(G)) out.add_raw(G, RawDecor{}, Poly(-b2 * b2, 0));
    }
    {
      StableGraph G = loop_plus_edge(amb, sp[0], sp[1], {});
      if (!validate(G)) out.add_raw(G, RawDecor{}, Poly(b * b - b1 * b1, 0));
    }
    {
      StableGraph G = double_edge(amb, sp[0], sp[1], {0});
      if (!validate(G)) out.add_raw(G, RawDecor{}, Poly(2 * b2 * b2, 0));
    }
  }
  return out;
}

inline StrataElement rel_44_m0(const Ambient& amb) {
  StrataElement out(amb);
  auto delta = loop_graph_delta(amb.g, amb.n, amb.beta);
  {
    // psi_h + psi_h' on the loop halves
    int h1 = -1, h2 = -1;
    for (int h = 0; h < delta.num_half(); ++h)
      if (delta.inv[(size_t)h] != h) (h1 < 0 ? h1 : h2) = h;
    RawDecor rd;
    rd.psi[h1] = 1;
    out.add_raw(delta, rd, Poly(Rat(1), 0));
    RawDecor rd2;
    rd2.psi[h2] = 1;
    out.add_raw(delta, rd2, Poly(Rat(1), 0));
  }
  for (const auto& sp : enumerate_splittings(amb.beta, 2)) {
    StableGraph G = double_edge(amb, sp[0], sp[1], {0});
    if (!validate(G)) out.add_raw(G, RawDecor{}, Poly(Rat(-2), 0));
  }
  return out;
}

// The (1, 2, d=2) relation at scale weight 4, cubic in the first
// ramification entry; transcribed with its explicit half-edge psi terms.
inline StrataElement rel_45_m4a13(const Ambient& amb) {
  Rat b = b_of(amb, amb.beta);
  StrataElement out(amb);
  auto triv = trivial_graph(amb.g, amb.n, amb.beta);
  auto add_triv = [&](std::function<void(RawDecor&)> dec, Rat c) {
    RawDecor rd;
    dec(rd);
    out.add_raw(triv, rd, Poly(c, 0));
  };
  // b (psi1^2 - psi2^2)
  add_triv([&](RawDecor& rd) { rd.psi[triv.legs[0]] = 2; }, b);
  add_triv([&](RawDecor& rd) { rd.psi[triv.legs[1]] = 2; }, -b);
  // 2 (psi1 + psi2)(xi1 - xi2)
  for (int pleg : {0, 1})
    for (int xleg : {0, 1})
      add_triv(
          [&](RawDecor& rd) {
            rd.psi[triv.legs[(size_t)pleg]] = 1;
            put_xi(rd, amb, xleg);
          },
          xleg == 0 ? Rat(2) : Rat(-2));

  for (const auto& sp : enumerate_splittings(amb.beta, 2)) {
    Rat b1 = b_of(amb, sp[0]), b2 = b_of(amb, sp[1]);
    // A1 = [1,b1 leg1 | b2 leg2], A2 = [1,b1 leg2 | b2 leg1]
    for (int variant = 0; variant < 2; ++variant) {
      StableGraph G =
          two_vertex(amb, 1, sp[0], {variant == 0 ? 0 : 1}, 0, sp[1]);
      if (validate(G)) continue;
      Rat cpsi1 = variant == 0 ? -2 * b2 : -2 * b1;
      Rat cpsi2 = variant == 0 ? 2 * b1 : 2 * b2;
      Rat cedge = variant == 0 ? (b1 - b2) : (b2 - b1);
      auto add_dec = [&](std::function<void(RawDecor&)> dec, Rat c) {
        if (c == 0) return;
        RawDecor rd;
        dec(rd);
        out.add_raw(G, rd, Poly(c, 0));
      };
      add_dec([&](RawDecor& rd) { rd.psi[G.legs[0]] = 1; }, cpsi1);
      add_dec([&](RawDecor& rd) { rd.psi[G.legs[1]] = 1; }, cpsi2);
      add_dec([&](RawDecor& rd) { put_xi(rd, amb, 0); }, Rat(-2));
      add_dec([&](RawDecor& rd) { put_xi(rd, amb, 1); }, Rat(2));
      for (int h = 0; h < G.num_half(); ++h)
        if (G.inv[(size_t)h] != h)
          add_dec([&](RawDecor& rd) { rd.psi[h] = 1; }, cedge);
    }
  }
  for (const auto& sp : enumerate_splittings(amb.beta, 3)) {
    Rat b1 = b_of(amb, sp[0]), b3 = b_of(amb, sp[2]);
    auto chain = [&](std::vector<int> gv, std::vector<int> leg_at, Rat c) {
      if (c == 0) return;
      StableGraph G = three_chain(amb, gv, {sp[0], sp[1], sp[2]}, leg_at);
      if (!validate(G)) out.add_raw(G, RawDecor{}, Poly(c, 0));
    };
    chain({1, 0, 0}, {0, 2}, -2 * b1 + 2 * b3);
    chain({1, 0, 0}, {2, 0}, 2 * b1 - 2 * b3);
    chain({0, 1, 0}, {0, 2}, -2 * b1 + 2 * b3);
  }
  return out;
}

// Equivalent reduced form of the previous relation: products are expanded
// with the strata product at construction time.
inline StrataElement rel_45_residual(const Ambient& amb) {
  StrataElement xi_diff = xi_class(amb, 1) - xi_class(amb, 2);
  StrataElement bracket(amb);
  bracket.add_element(
      graph_class(amb, loop_graph_delta(amb.g, amb.n, amb.beta)), Rat(1, 24));
  for (const auto& sp : enumerate_splittings(amb.beta, 2)) {
    StableGraph G = two_vertex(amb, 1, sp[0], {}, 0, sp[1]);
    if (!validate(G)) bracket.add_raw(G, RawDecor{}, Poly(Rat(1), 0));
  }
  StrataElement out = multiply(xi_diff, bracket) * Rat(4);
  for (const auto& sp : enumerate_splittings(amb.beta, 2)) {
    Rat b2 = b_of(amb, sp[1]);
    {
      StableGraph G = loop_plus_edge(amb, sp[0], sp[1], {1});
      if (!validate(G)) out.add_raw(G, RawDecor{}, Poly(b2 / 3, 0));
    }
    {
      StableGraph G = loop_plus_edge(amb, sp[0], sp[1], {0});
      if (!validate(G)) out.add_raw(G, RawDecor{}, Poly(-b2 / 3, 0));
    }
  }
  return out;
}

// Three-pointed genus-0 exchange identity: the split with legs {i, 3}
// together equals the split with legs {j, 3} together.
inline StrataElement rel_45_threept(const Ambient& amb, int i /*1-based*/,
                                    int j) {
  if (amb.n != 3) throw std::invalid_argument("identity needs three legs");
  StrataElement out(amb);
  for (const auto& sp : enumerate_splittings(amb.beta, 2)) {
    {
      StableGraph G = two_vertex(amb, 0, sp[0], {i - 1, 2}, 0, sp[1]);
      if (!validate(G)) out.add_raw(G, RawDecor{}, Poly(Rat(1), 0));
    }
    {
      StableGraph G = two_vertex(amb, 0, sp[0], {j - 1, 2}, 0, sp[1]);
      if (!validate(G)) out.add_raw(G, RawDecor{}, Poly(Rat(-1), 0));
    }
  }
  return out;
}

// Excess self-intersection comparison for the one-edge genus-1 graph sum:
// the right-hand side -(psi_h + psi_h')[bracket] + 2 [chains].
inline StrataElement rel_45_excess_rhs(const Ambient& amb) {
  StrataElement out(amb);
  for (const auto& sp : enumerate_splittings(amb.beta, 2)) {
    StableGraph G = two_vertex(amb, 1, sp[0], {0}, 0, sp[1]);
    if (validate(G)) continue;
    for (int h = 0; h < G.num_half(); ++h) {
      if (G.inv[(size_t)h] == h) continue;
      RawDecor rd;
      rd.psi[h] = 1;
      out.add_raw(G, rd, Poly(Rat(-1), 0));
    }
  }
  for (const auto& sp : enumerate_splittings(amb.beta, 3)) {
    StableGraph G = three_chain(amb, {1, 0, 0}, {sp[0], sp[1], sp[2]}, {0, 2});
    if (!validate(G)) out.add_raw(G, RawDecor{}, Poly(Rat(2), 0));
  }
  return out;
}

inline StrataElement rel_45_one_edge_bracket(const Ambient& amb) {
  StrataElement out(amb);
  for (const auto& sp : enumerate_splittings(amb.beta, 2)) {
    StableGraph G = two_vertex(amb, 1, sp[0], {0}, 0, sp[1]);
    if (!validate(G)) out.add_raw(G, RawDecor{}, Poly(Rat(1), 0));
  }
  return out;
}

}  // namespace fixtures

struct FixtureEntry {
  std::string id;
  std::string provenance;
};

inline std::vector<FixtureEntry> fixture_catalog() {
  return {
      {"4.2/a1^2", "ref example 4.2, coefficient a1^2"},
      {"4.2/a1", "ref example 4.2, coefficient a1"},
      {"4.2/a1^0", "ref example 4.2, coefficient a1^0"},
      {"4.2/P1", "ref example 4.2, displayed degree-1 class"},
      {"2.7", "ref example 2.7, kappa_1 comparison"},
      {"4.3", "ref equation 4.3, genus-1 psi as boundary"},
      {"4.4/m^4", "ref example 4.4, weight-4 part"},
      {"4.4/m^2", "ref example 4.4, weight-2 part"},
      {"4.4/m^0", "ref example 4.4, weight-0 part"},
      {"4.5/m^4a1^3", "ref example 4.5, weight-4 cubic relation"},
      {"4.5/residual", "ref example 4.5, reduced two-term form"},
      {"4.5/threept", "ref example 4.5, three-point exchange"},
      {"4.5/excess", "ref example 4.5, excess self-intersection"},
  };
}

inline StrataElement paper_fixture(const std::string& id, const Ambient& amb) {
  using namespace fixtures;
  if (id == "4.2/a1^2") return rel_42_a1sq(amb);
  if (id == "4.2/a1") return rel_42_a1(amb);
  if (id == "4.2/a1^0") return rel_42_a1const(amb);
  if (id == "4.2/P1") return rel_42_P1_symbolic(amb);
  if (id == "2.7") return rel_27(amb);
  if (id == "4.3") return rel_43(amb, 1);
  if (id == "4.4/m^4") return rel_44_m4(amb);
  if (id == "4.4/m^2") return rel_44_m2(amb);
  if (id == "4.4/m^0") return rel_44_m0(amb);
  if (id == "4.5/m^4a1^3") return rel_45_m4a13(amb);
  if (id == "4.5/residual") return rel_45_residual(amb);
  if (id == "4.5/threept") return rel_45_threept(amb, 1, 2);
  if (id == "4.5/excess") return rel_45_excess_rhs(amb);
  throw std::invalid_argument("unknown fixture id: " + id);
}

// ---------------------------------------------------------------------------
// Brute-force evaluation of degree-1 classes on the four-pointed genus-0
// space with point target. The table is derived from cross-ratio geometry:
// the space is a projective line, every boundary point has degree 1, each
// psi_i is represented by a single boundary point, and kappa_1 integrates to
// the excess of psi over boundary (4 - 3 = 1).
// ---------------------------------------------------------------------------

inline Rat evaluate_m04_point(const StrataElement& S) {
  const Ambient& amb = S.ambient();
  if (amb.g != 0 || amb.n != 4 || amb.target->dim != 0 ||
      !amb.beta.is_zero())
    throw std::invalid_argument(
        "evaluator is only defined for the four-pointed genus-0 point target");
  Rat out(0);
  for (const auto& [t, c] : S.terms()) {
    if (term_degree(t, *amb.target) != 1)
      throw std::invalid_argument("evaluator needs a degree-1 class");
    Rat value;
    if (t.graph.num_edges() == 1) {
      // undecorated boundary divisor
      bool decorated = false;
      for (int e : t.dec.psi) decorated |= e != 0;
      for (const auto& ks : t.dec.kappa) decorated |= !ks.empty();
      if (decorated) throw std::invalid_argument("unsupported decorated term");
      value = Rat(1);
    } else if (t.graph.num_edges() == 0) {
      int psis = 0;
      for (int e : t.dec.psi) psis += e;
      int kappas = 0;
      for (const auto& ks : t.dec.kappa)
        for (auto [a, m] : ks) {
          if (a != 1) throw std::invalid_argument("unsupported kappa index");
          ++kappas;
        }
      if (psis + kappas != 1)
        throw std::invalid_argument("unsupported degree-1 term");
      value = Rat(1);
    } else {
      throw std::invalid_argument("unsupported graph in the evaluator");
    }
    out += c.constant_value() * value;
  }
  return out;
}

}  // namespace strata

#endif
