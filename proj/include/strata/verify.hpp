#ifndef STRATA_VERIFY_HPP
#define STRATA_VERIFY_HPP

#include <sstream>

#include "strata/oracle.hpp"

namespace strata {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace verify {

inline std::string diff_summary(const StrataElement& got,
                                const StrataElement& want) {
  StrataElement d = got - want;
  std::ostringstream os;
  os << "difference has " << d.size() << " terms";
  return os.str();
}

// Displayed relations carry a per-relation overall normalization relative to
// the raw pipeline coefficients (denominators were cleared for display).
// The factors are pinned here once and asserted exactly.
inline Rat scale_42(const std::string& which) {
  if (which == "a1^2") return Rat(1, 2);
  if (which == "a1") return Rat(1);
  if (which == "a1^0") return Rat(1, 2);
  throw std::invalid_argument("unknown coefficient id");
}

// Reproduction of the two-pointed genus-0 degree-1 relations on P^1.
inline std::vector<CheckResult> check_42(long beta_deg, int workers = 1) {
  std::vector<CheckResult> out;
  auto P1 = make_projective_space(1, 1);
  CurveClass beta({beta_deg});
  Ambient amb{0, 2, beta, P1};
  DRRequest req;
  req.g = 0;
  req.n = 2;
  req.target = P1;
  req.beta = beta;
  req.k = 0;
  req.d = 1;
  StrataElement P = compute_P_d_symbolic(req, workers);
  struct Probe {
    std::string id;
    Poly::Expo expo;
  };
  std::vector<Probe> probes{{"a1^2", {2}}, {"a1", {1}}, {"a1^0", {0}}};
  for (const auto& pr : probes) {
    StrataElement got = P.extract_coefficient(pr.expo);
    StrataElement want =
        paper_fixture("4.2/" + pr.id, amb) * scale_42(pr.id);
    CheckResult res;
    res.name = "4.2/" + pr.id + " beta=" + std::to_string(beta_deg) + "L";
    res.pass = (got == want);
    if (!res.pass) res.detail = diff_summary(got, want);
    out.push_back(res);
  }
  {
    CheckResult res;
    res.name = "4.2/P1 schematic beta=" + std::to_string(beta_deg) + "L";
    StrataElement want = paper_fixture("4.2/P1", amb);
    res.pass = (P == want);
    if (!res.pass) res.detail = diff_summary(P, want);
    out.push_back(res);
  }
  return out;
}

inline std::vector<StrataElement> certified_relations(const Ambient& amb);
inline std::optional<std::vector<Rat>> express_in_span(
    const std::vector<StrataElement>& relations, const StrataElement& goal);

inline Rat scale_44(int part) {
  if (part == 4) return Rat(1, 8);
  if (part == 2) return Rat(-1, 48);
  if (part == 0) return Rat(1, 480);
  throw std::invalid_argument("unknown graded part");
}

// Reproduction of the one-pointed genus-1 degree-2 graded relations on P^1.
inline std::vector<CheckResult> check_44(long beta_deg, int workers = 1) {
  std::vector<CheckResult> out;
  auto P1 = make_projective_space(1, 1);
  CurveClass beta({beta_deg});
  Ambient amb{1, 1, beta, P1};
  DRRequest req;
  req.g = 1;
  req.n = 1;
  req.target = P1;
  req.beta = beta;
  req.k = 0;
  req.d = 2;
  auto parts = compute_P_d_m_parts(req, workers);
  std::optional<std::vector<StrataElement>> certified;
  for (int j : {4, 2, 0}) {
    StrataElement got = parts.at((size_t)j);
    StrataElement want =
        paper_fixture("4.4/m^" + std::to_string(j), amb) * scale_44(j);
    CheckResult res;
    res.name = "4.4/m^" + std::to_string(j) + " beta=" +
               std::to_string(beta_deg) + "L";
    res.pass = (got == want);
    if (!res.pass) {
      // the displayed form differs from the raw graded part by boundary
      // rewrites; certify the difference as a combination of relations
      if (!certified) certified = certified_relations(amb);
      auto sol = express_in_span(*certified, got - want);
      res.detail = diff_summary(got, want) +
                   (sol ? "; certified equivalent modulo relations"
                        : "; NOT in the certified relation span");
    }
    out.push_back(res);
  }
  // odd parts vanish under A -> -A symmetry
  CheckResult odd;
  odd.name = "4.4/odd-parts-vanish beta=" + std::to_string(beta_deg) + "L";
  odd.pass = parts.at(1).is_zero() && parts.at(3).is_zero();
  out.push_back(odd);
  return out;
}

inline StrataElement reduce_45(const Ambient& amb, const StrataElement& rel);

// Shape count, excess identity, and the scripted rewrite of the (1,2)
// relation down to the displayed residual.
inline std::vector<CheckResult> check_45(long beta_deg, int workers = 1) {
  (void)workers;
  std::vector<CheckResult> out;
  auto P1 = make_projective_space(1, 1);
  CurveClass beta({beta_deg});
  Ambient amb{1, 2, beta, P1};
  {
    CheckResult res;
    res.name = "4.5/shape-count";
    auto shapes = enumerate_graphs(1, 2, CurveClass::zero(1), 2, true);
    res.pass = shapes.size() == 26;
    if (!res.pass)
      res.detail = "got " + std::to_string(shapes.size()) + " shapes";
    out.push_back(res);
  }
  {
    CheckResult res;
    res.name =
        "4.5/excess-square beta=" + std::to_string(beta_deg) + "L";
    StrataElement bracket = fixtures::rel_45_one_edge_bracket(amb);
    StrataElement lhs = multiply(bracket, bracket);
    StrataElement rhs = paper_fixture("4.5/excess", amb);
    res.pass = (lhs == rhs);
    if (!res.pass) res.detail = diff_summary(lhs, rhs);
    out.push_back(res);
  }
  {
    // Rewrite chain: substitute the psi boundary expressions into the
    // quadratic head of the relation, expand the products, remove the pieces
    // that the three-point exchange identity kills, and compare with the
    // displayed residual.
    CheckResult res;
    res.name = "4.5/rewrite beta=" + std::to_string(beta_deg) + "L";
    StrataElement rel = paper_fixture("4.5/m^4a1^3", amb);
    StrataElement residual = paper_fixture("4.5/residual", amb);
    StrataElement reduced = reduce_45(amb, rel);
    res.pass = (reduced == residual);
    if (!res.pass) res.detail = diff_summary(reduced, residual);
    out.push_back(res);
  }
  return out;
}

// Exact solver for A x = b over the rationals; returns one solution when the
// system is consistent.
inline std::optional<std::vector<Rat>> solve_rational(
    std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
  size_t rows = A.size();
  size_t cols = rows ? A[0].size() : 0;
  std::vector<int> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && A[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(A[p], A[r]);
    std::swap(b[p], b[r]);
    Rat inv = Rat(1) / A[r][c];
    for (size_t j = c; j < cols; ++j) A[r][j] *= inv;
    b[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || A[i][c] == 0) continue;
      Rat f = A[i][c];
      for (size_t j = c; j < cols; ++j) A[i][j] -= f * A[r][j];
      b[i] -= f * b[r];
    }
    pivot_col.push_back((int)c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rat> x(cols, Rat(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) x[(size_t)pivot_col[i]] = b[i];
  return x;
}

// Expresses `goal` in the span of `relations` (all over one ambient);
// returns the multipliers when possible.
inline std::optional<std::vector<Rat>> express_in_span(
    const std::vector<StrataElement>& relations, const StrataElement& goal) {
  std::map<Encoding, size_t> row_of;
  auto row_index = [&](const Term& t) {
    auto it = row_of.find(t.key);
    if (it != row_of.end()) return it->second;
    size_t idx = row_of.size();
    row_of.emplace(t.key, idx);
    return idx;
  };
  for (const auto& rel : relations)
    for (const auto& [t, c] : rel.terms()) row_index(t);
  for (const auto& [t, c] : goal.terms()) row_index(t);
  std::vector<std::vector<Rat>> A(row_of.size(),
                                  std::vector<Rat>(relations.size(), Rat(0)));
  std::vector<Rat> b(row_of.size(), Rat(0));
  for (size_t j = 0; j < relations.size(); ++j)
    for (const auto& [t, c] : relations[j].terms())
      A[row_index(t)][j] = c.constant_value();
  for (const auto& [t, c] : goal.terms()) b[row_index(t)] = c.constant_value();
  return solve_rational(std::move(A), std::move(b));
}

// Degree-1 relations of one vertex space, each independently certified:
// genus-0 spaces take the coefficient relations of the degree-1 weighted
// graph sum (valid since the degree exceeds the genus); genus-1 spaces with
// one or two markings take the psi boundary comparisons, cross-checked
// against their stabilization-pullback construction.
inline const std::vector<StrataElement>& sub_relations(const Ambient& amb) {
  using Key = std::tuple<int, int, std::vector<long>, std::string>;
  static std::map<Key, std::vector<StrataElement>> cache;
  static std::mutex mu;
  Key key{amb.g, amb.n, amb.beta.c, amb.target->name};
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<StrataElement> rels;
  if (amb.g == 0 && amb.n >= 1 && amb.vdim() >= 1 &&
      (!amb.beta.is_zero() || amb.n >= 3)) {
    DRRequest req;
    req.g = 0;
    req.n = amb.n;
    req.target = amb.target;
    req.beta = amb.beta;
    req.k = 0;
    req.d = 1;
    StrataElement P = compute_P_d_symbolic(req);
    for (const auto& expo : P.monomials()) {
      StrataElement r = P.extract_coefficient(expo);
      if (!r.is_zero()) rels.push_back(r);
    }
    if (amb.n == 3) {
      // marking-exchange identities on the three-pointed space
      for (auto [i, j] :
           std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}}) {
        StrataElement ex = fixtures::rel_45_threept(amb, i, j);
        if (!ex.is_zero()) rels.push_back(ex);
      }
    }
  } else if (amb.g == 1 && (amb.n == 1 || amb.n == 2)) {
    // cross-check each psi comparison against the pullback construction
    StableGraph loopC;
    loopC.g = 1;
    loopC.n = amb.n;
    loopC.beta = CurveClass::zero(amb.beta.rank());
    loopC.add_vertex(0, CurveClass::zero(amb.beta.rank()));
    for (int i = 0; i < amb.n; ++i) loopC.add_leg(0);
    loopC.add_edge(0, 0);
    for (int leg = 1; leg <= amb.n; ++leg) {
      StrataElement fix = fixtures::rel_43(amb, leg);
      StableGraph Cgr;
      Cgr.g = 1;
      Cgr.n = amb.n;
      Cgr.beta = CurveClass::zero(amb.beta.rank());
      Cgr.add_vertex(1, CurveClass::zero(amb.beta.rank()));
      Cgr.add_vertex(0, CurveClass::zero(amb.beta.rank()));
      for (int i = 0; i < amb.n; ++i) Cgr.add_leg(1);
      Cgr.add_edge(0, 1);
      StrataElement built = pullback_psi(amb, leg);
      built.add_element(pullback_boundary(loopC, amb), Rat(-1, 24));
      built.add_element(pullback_boundary(Cgr, amb), Rat(-1));
      if (amb.n == 2) {
        // the split-off boundary with the other leg on the genus-1 side
        StableGraph Bgr;
        Bgr.g = 1;
        Bgr.n = 2;
        Bgr.beta = CurveClass::zero(amb.beta.rank());
        Bgr.add_vertex(1, CurveClass::zero(amb.beta.rank()));
        Bgr.add_vertex(0, CurveClass::zero(amb.beta.rank()));
        Bgr.add_leg(leg == 1 ? 1 : 0);
        Bgr.add_leg(leg == 1 ? 0 : 1);
        Bgr.add_edge(0, 1);
        // D_leg graphs of the pullback already carry this comparison; the
        // fixture matches the assembled expression exactly
        (void)Bgr;
      }
      if (!(built == fix))
        throw std::runtime_error(
            "genus-1 psi comparison disagrees with its pullback construction");
      rels.push_back(fix);
    }
  }
  return cache.emplace(key, std::move(rels)).first->second;
}

// Relations of the ambient space generated by gluing certified vertex
// relations into one-edge graphs and by multiplying ambient-level relations
// with degree-1 classes. Every element is a certified relation.
inline std::vector<StrataElement> certified_relations(const Ambient& amb) {
  std::vector<StrataElement> out;
  // ambient-level relations and their products with degree-1 classes
  std::vector<StrataElement> deg1;
  for (int i = 1; i <= amb.n; ++i) {
    deg1.push_back(psi_class(amb, i));
    deg1.push_back(xi_class(amb, i));
  }
  for (const auto& G : ambient_graphs(amb, 1))
    if (G.num_edges() == 1) deg1.push_back(graph_class(amb, G));
  for (const auto& r : sub_relations(amb)) {
    out.push_back(r);
    for (const auto& e : deg1) out.push_back(multiply(r, e));
  }
  for (const auto& r : sub_relations(amb))
    for (const auto& r2 : sub_relations(amb)) out.push_back(multiply(r, r2));
  // twisted families: the graph-sum class vanishes in degrees above the
  // genus for every twist, so other twists contribute certified relations
  if (amb.g == 1 && amb.vdim() >= 2) {
    for (long kk : {1L, 2L}) {
      DRRequest req;
      req.g = amb.g;
      req.n = amb.n;
      req.target = amb.target;
      req.beta = amb.beta;
      req.k = kk;
      req.d = 2;
      for (auto& part : compute_P_d_m_parts(req))
        if (!part.is_zero()) {
          if (part.symbols().empty()) {
            out.push_back(part);
          } else {
            for (const auto& expo : part.monomials()) {
              StrataElement r = part.extract_coefficient(expo);
              if (!r.is_zero()) out.push_back(r);
            }
          }
        }
    }
  }
  // vertex relations glued into one-edge graphs
  for (const auto& G : ambient_graphs(amb, 1)) {
    if (G.num_edges() != 1) continue;
    int V = G.num_vertices();
    for (int v = 0; v < V; ++v) {
      Ambient sub{G.verts[(size_t)v].genus, G.valence(v),
                  G.verts[(size_t)v].beta, amb.target};
      for (const auto& r : sub_relations(sub)) {
        std::vector<StrataElement> factors;
        bool ok = true;
        for (int w = 0; w < V; ++w) {
          if (w == v) {
            factors.push_back(r);
          } else {
            Ambient fw{G.verts[(size_t)w].genus, G.valence(w),
                       G.verts[(size_t)w].beta, amb.target};
            // the fundamental class needs a stable vertex space
            if (fw.beta.is_zero() && 2 * fw.g - 2 + fw.n <= 0) {
              ok = false;
              break;
            }
            factors.push_back(fundamental_class(fw));
          }
        }
        if (ok) out.push_back(glue_along_graph(G, factors, amb));
      }
    }
  }
  return out;
}

// The scripted rewrite for the (1,2) weight-4 cubic relation: substitute the
// genus-1 psi boundary expressions into the quadratic head, expand every
// product with the strata product, and absorb the remaining difference from
// the displayed residual into an exact combination of certified relations.
inline StrataElement reduce_45(const Ambient& amb, const StrataElement& rel) {
  const Rat b = fixtures::b_of(amb, amb.beta);
  StrataElement r1 = paper_fixture("4.3", amb);            // psi_1 - boundary
  StrataElement r2 = fixtures::rel_43(amb, 2);             // psi_2 - boundary
  StrataElement psi1 = psi_class(amb, 1), psi2 = psi_class(amb, 2);
  StrataElement bnd1 = psi1 - r1;  // boundary expression for psi_1
  StrataElement bnd2 = psi2 - r2;
  StrataElement xi_diff = xi_class(amb, 1) - xi_class(amb, 2);

  // head of the relation, as products of trivial-graph classes
  StrataElement head_old =
      multiply(psi1 - psi2, psi1 + psi2) * b +
      multiply(psi1 + psi2, xi_diff) * Rat(2);
  StrataElement head_new =
      multiply(bnd1 - bnd2, bnd1 + bnd2) * b +
      multiply(bnd1 + bnd2, xi_diff) * Rat(2);
  StrataElement reduced = rel - head_old + head_new;

  StrataElement residual = paper_fixture("4.5/residual", amb);
  StrataElement goal = residual - reduced;
  if (goal.is_zero()) return residual;
  auto candidates = certified_relations(amb);
  auto sol = express_in_span(candidates, goal);
  if (!sol) return reduced;  // reduction failed; caller reports the diff
  StrataElement combo(amb);
  for (size_t i = 0; i < candidates.size(); ++i)
    combo.add_element(candidates[i], (*sol)[i]);
  return reduced + combo;
}

// Pullback comparisons on a list of ambients.
inline std::vector<CheckResult> check_26_27(int workers = 1) {
  (void)workers;
  std::vector<CheckResult> out;
  auto P1 = make_projective_space(1, 1);
  auto P2 = make_projective_space(2, 1);
  auto pt = make_point_target();
  std::vector<Ambient> ambients{
      {0, 2, CurveClass({1}), P1},   {0, 3, CurveClass({2}), P1},
      {1, 1, CurveClass({1}), P1},   {1, 2, CurveClass({2}), P1},
      {0, 3, CurveClass({1}), P2},
  };
  for (const auto& amb : ambients) {
    std::string tag = amb.target->name + " g" + std::to_string(amb.g) + "n" +
                      std::to_string(amb.n) + "beta" + amb.beta.str();
    {
      CheckResult res;
      res.name = "2.7/kappa1 " + tag;
      res.pass = (pullback_kappa1(amb) == paper_fixture("2.7", amb));
      out.push_back(res);
    }
    {
      CheckResult res;
      res.name = "2.6/psi1 " + tag;
      StrataElement got = pullback_psi(amb, 1);
      StrataElement want = psi_class(amb, 1);
      for (const auto& D : D_i_graphs(amb.g, amb.n, amb.beta, 0))
        want.add_element(graph_class(amb, D), Rat(-1));
      res.pass = (got == want);
      out.push_back(res);
    }
  }
  // point-target degeneration: bare classes come back
  {
    Ambient amb{1, 1, CurveClass{}, pt};
    CheckResult res;
    res.name = "2.7/point-degeneration";
    res.pass = (pullback_kappa1(amb) == kappa1_class(amb)) &&
               (pullback_psi(amb, 1) == psi_class(amb, 1));
    out.push_back(res);
  }
  return out;
}

}  // namespace verify

}  // namespace strata

#endif
