#ifndef STRATA_DR_HPP
#define STRATA_DR_HPP

#include <atomic>
#include <thread>

#include "strata/product.hpp"
#include "strata/stabilization.hpp"

namespace strata {

// Request for the twisted weighted graph sum in degree d.
struct DRRequest {
  int g = 0;
  int n = 1;
  TargetPtr target;
  CurveClass beta;
  long k = 0;
  long d = 0;
  std::vector<long> A;  // empty means symbolic

  Ambient ambient() const { return Ambient{g, n, beta, target}; }

  long b() const {
    Rat v = target->degree_pairing(beta, target->c1S);
    if (v.get_den() != 1)
      throw std::invalid_argument("S-degree of beta is not an integer");
    return v.get_num().get_si();
  }

  // Required sum of the ramification vector.
  long a_sum() const { return b() + k * (2L * g - 2 + n); }
};

inline std::optional<std::string> check_dr_data(const DRRequest& req) {
  if (req.n < 1) return "need at least one marking";
  if (req.d < 0) return "negative degree";
  if (req.d > vdim(req.g, req.n, req.beta, req.target))
    return "degree exceeds the virtual dimension";
  if (!req.A.empty()) {
    if ((int)req.A.size() != req.n) return "ramification vector has wrong length";
    long s = 0;
    for (long a : req.A) s += a;
    if (s != req.a_sum())
      return "ramification sum violates the twisted degree constraint";
  }
  return std::nullopt;
}

// Residues of a half-edge weighting mod r.
struct Weighting {
  std::vector<int> w;  // per half-edge, in [0, r)
  long r = 0;
};

namespace detail {

inline long mod_pos(long x, long r) {
  long m = x % r;
  return m < 0 ? m + r : m;
}

// Right-hand side of the vertex congruence at v.
inline long vertex_rhs(const StableGraph& G, int v, long k, const Target& t) {
  Rat b = t.degree_pairing(G.verts[(size_t)v].beta, t.c1S);
  if (b.get_den() != 1)
    throw std::invalid_argument("vertex S-degree is not an integer");
  return b.get_num().get_si() +
         k * (2L * G.verts[(size_t)v].genus - 2 + G.valence(v));
}

}  // namespace detail

// Complete list of k-weightings mod r: legs carry the residues of A, edge
// halves sum to 0, vertex sums match the twisted degree. The count is either
// 0 or r^{h1}.
inline std::vector<Weighting> enumerate_weightings(const StableGraph& G,
                                                   long r,
                                                   const std::vector<long>& A,
                                                   long k, const Target& t) {
  if (r < 2) throw std::invalid_argument("modulus must be at least 2");
  std::vector<Weighting> out;
  int H = G.num_half(), V = G.num_vertices();
  auto es = G.edges();
  int E = (int)es.size();

  // spanning tree by BFS over edges
  std::vector<int> parent_edge((size_t)V, -1), order;
  std::vector<char> seen((size_t)V, 0);
  seen[0] = 1;
  order.push_back(0);
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int v = order[qi];
    for (int e = 0; e < E; ++e) {
      for (int side = 0; side < 2; ++side) {
        int h = side ? es[(size_t)e].second : es[(size_t)e].first;
        int h2 = side ? es[(size_t)e].first : es[(size_t)e].second;
        if (G.hv[(size_t)h] == v && !seen[(size_t)G.hv[(size_t)h2]]) {
          seen[(size_t)G.hv[(size_t)h2]] = 1;
          parent_edge[(size_t)G.hv[(size_t)h2]] = e;
          order.push_back(G.hv[(size_t)h2]);
        }
      }
    }
  }
  std::vector<char> in_tree((size_t)E, 0);
  for (int v = 1; v < V; ++v)
    if (parent_edge[(size_t)v] >= 0) in_tree[(size_t)parent_edge[(size_t)v]] = 1;
  std::vector<int> free_edges;
  for (int e = 0; e < E; ++e)
    if (!in_tree[(size_t)e]) free_edges.push_back(e);

  std::vector<long> rhs((size_t)V);
  for (int v = 0; v < V; ++v) rhs[(size_t)v] = detail::vertex_rhs(G, v, k, t);

  std::vector<int> w((size_t)H, 0);
  for (int i = 0; i < G.n; ++i)
    w[(size_t)G.legs[(size_t)i]] = (int)detail::mod_pos(A.at((size_t)i), r);

  std::function<void(size_t)> assign = [&](size_t fi) {
    if (fi == free_edges.size()) {
      // solve tree edges from the leaves inward
      std::vector<int> ww = w;
      for (size_t oi = order.size(); oi-- > 1;) {
        int v = order[oi];
        int e = parent_edge[(size_t)v];
        auto [h1, h2] = es[(size_t)e];
        int hv_side = (G.hv[(size_t)h1] == v) ? h1 : h2;
        int other = (hv_side == h1) ? h2 : h1;
        long sum = 0;
        for (int h = 0; h < H; ++h)
          if (G.hv[(size_t)h] == v && h != hv_side) sum += ww[(size_t)h];
        long val = detail::mod_pos(rhs[(size_t)v] - sum, r);
        ww[(size_t)hv_side] = (int)val;
        ww[(size_t)other] = (int)detail::mod_pos(-val, r);
      }
      // root congruence decides global consistency
      long sum = 0;
      for (int h = 0; h < H; ++h)
        if (G.hv[(size_t)h] == order[0]) sum += ww[(size_t)h];
      if (detail::mod_pos(sum - rhs[(size_t)order[0]], r) != 0) return;
      out.push_back(Weighting{ww, r});
      return;
    }
    auto [h1, h2] = es[(size_t)free_edges[fi]];
    for (long tval = 0; tval < r; ++tval) {
      w[(size_t)h1] = (int)tval;
      w[(size_t)h2] = (int)detail::mod_pos(-tval, r);
      assign(fi + 1);
    }
  };
  assign(0);
  std::sort(out.begin(), out.end(),
            [](const Weighting& a, const Weighting& b) { return a.w < b.w; });
  return out;
}

namespace detail {

// Contribution of one (graph, weighting) pair to the degree-d sum.
inline void graph_sum_contribution(StrataElement& acc, const StableGraph& G,
                                   const Weighting& wt,
                                   const std::vector<long>& A, long k, long d,
                                   const Rat& prefactor) {
  const Target& target = *acc.ambient().target;
  auto es = G.edges();
  int E = (int)es.size();
  long budget = d - E;
  if (budget < 0) return;

  // Chow powers of c1(S)
  std::vector<Chow> spow;
  spow.push_back(target.chow_unit());
  for (long q = 1; q <= d; ++q)
    spow.push_back(target.chow_product(spow.back(), target.c1S));
  Chow s2 = spow.size() > 2 ? spow[2] : Chow{};

  struct Piece {
    int deg;
    Rat coeff;
    std::vector<std::pair<int, int>> psi;        // (half, add)
    std::vector<std::pair<int, int>> leg_pow;    // (leg, S-power)
    std::vector<std::tuple<int, int, int>> kap;  // (vertex, a, S-power; a=1 -> unit)
  };
  std::vector<std::vector<Piece>> factors;

  // legs: exp(a^2 psi / 2 + a xi)
  for (int i = 0; i < G.n; ++i) {
    std::vector<Piece> f;
    long a = A.at((size_t)i);
    for (int p = 0; p <= (int)budget; ++p)
      for (int q = 0; p + q <= (int)budget; ++q) {
        if (q > 0 && spow[(size_t)q].empty()) continue;
        Rat c = rat_pow(Rat(a) * Rat(a) / 2, (unsigned)p) / factorial((unsigned)p);
        c *= rat_pow(Rat(a), (unsigned)q) / factorial((unsigned)q);
        if (c == 0 && (p + q) > 0) continue;
        Piece pc{p + q, c, {}, {}, {}};
        if (p) pc.psi.push_back({G.legs[(size_t)i], p});
        if (q) pc.leg_pow.push_back({i, q});
        f.push_back(pc);
      }
    factors.push_back(std::move(f));
  }
  // vertices: exp(-eta/2 - k eta_{1,1} - k^2 kappa_1 / 2)
  for (int v = 0; v < G.num_vertices(); ++v) {
    std::vector<Piece> f;
    for (int u = 0; u <= (int)budget; ++u)
      for (int v2 = 0; u + v2 <= (int)budget; ++v2)
        for (int w2 = 0; u + v2 + w2 <= (int)budget; ++w2) {
          if (u > 0 && s2.empty()) continue;
          if (v2 > 0 && (k == 0 || spow[1].empty())) continue;
          if (w2 > 0 && k == 0) continue;
          Rat c = rat_pow(Rat(-1, 2), (unsigned)u) / factorial((unsigned)u);
          c *= rat_pow(Rat(-k), (unsigned)v2) / factorial((unsigned)v2);
          c *= rat_pow(Rat(-k) * Rat(k) / 2, (unsigned)w2) /
               factorial((unsigned)w2);
          Piece pc{u + v2 + w2, c, {}, {}, {}};
          for (int t2 = 0; t2 < u; ++t2) pc.kap.push_back({v, -1, 2});
          for (int t2 = 0; t2 < v2; ++t2) pc.kap.push_back({v, 0, 1});
          for (int t2 = 0; t2 < w2; ++t2) pc.kap.push_back({v, 1, 0});
          f.push_back(pc);
        }
    factors.push_back(std::move(f));
  }
  // edges: (1 - exp(-(w w'/2)(psi_h + psi_h')))/(psi_h + psi_h')
  for (int e = 0; e < E; ++e) {
    auto [h1, h2] = es[(size_t)e];
    long prod = (long)wt.w[(size_t)h1] * (long)wt.w[(size_t)h2];
    std::vector<Piece> f;
    if (prod == 0) {
      factors.push_back(std::move(f));  // empty: the whole term dies
      continue;
    }
    for (int s = 1; s - 1 <= (int)budget; ++s) {
      Rat base = rat_pow(Rat(prod) / 2, (unsigned)s) / factorial((unsigned)s);
      if (s % 2 == 0) base = -base;
      for (int i = 0; i <= s - 1; ++i) {
        Piece pc{s - 1, base * binomial((unsigned)(s - 1), (unsigned)i), {}, {}, {}};
        if (i) pc.psi.push_back({h1, i});
        if (s - 1 - i) pc.psi.push_back({h2, s - 1 - i});
        f.push_back(pc);
      }
    }
    factors.push_back(std::move(f));
  }

  // convolve factors at total decoration degree exactly `budget`
  RawDecor rd;
  std::function<void(size_t, long, Rat)> rec = [&](size_t fi, long used,
                                                   Rat c) {
    if (fi == factors.size()) {
      if (used != budget) return;
      acc.add_raw(G, rd, Poly(c * prefactor, 0));
      return;
    }
    for (const auto& pc : factors[fi]) {
      if (used + pc.deg > budget) continue;
      for (auto [h, amt] : pc.psi) rd.psi[h] += amt;
      for (auto [leg, q] : pc.leg_pow) {
        auto it = rd.leg_cls.find(leg);
        Chow prev = (it == rd.leg_cls.end()) ? target.chow_unit() : it->second;
        rd.leg_cls[leg] = target.chow_product(prev, spow[(size_t)q]);
      }
      for (auto [v, a, sp] : pc.kap)
        rd.kappa[v].push_back({a, spow[(size_t)sp]});
      rec(fi + 1, used + pc.deg, c * pc.coeff);
      for (auto [v, a, sp] : pc.kap) {
        rd.kappa[v].pop_back();
        if (rd.kappa[v].empty()) rd.kappa.erase(v);
      }
      for (auto [leg, q] : pc.leg_pow) {
        (void)q;
        rd.leg_cls.erase(leg);  // rebuilt on the next branch
      }
      for (auto [h, amt] : pc.psi) {
        rd.psi[h] -= amt;
        if (rd.psi[h] == 0) rd.psi.erase(h);
      }
    }
  };
  rec(0, 0, Rat(1));
}

}  // namespace detail

// Degree-d class of the weighted graph sum at one modulus r. The optional
// shift vector adds r*shift_i to each a_i (the congruences are unchanged;
// the exact exponential prefactors see the shifted values).
inline StrataElement compute_P_d_r(const DRRequest& req, long r,
                                   int workers = 1,
                                   const std::vector<long>* shifts = nullptr) {
  if (req.A.empty())
    throw std::invalid_argument("numeric ramification vector required");
  if (!shifts)
    if (auto err = check_dr_data(req)) throw std::invalid_argument(*err);
  Ambient amb = req.ambient();
  std::vector<long> A = req.A;
  if (shifts) {
    if (shifts->size() != A.size())
      throw std::invalid_argument("shift vector has wrong length");
    for (size_t i = 0; i < A.size(); ++i) A[i] += r * (*shifts)[i];
  }
  const auto& graphs = ambient_graphs(amb, (int)req.d);
  std::vector<StrataElement> partial(graphs.size(), StrataElement(amb));
  std::atomic<size_t> next{0};
  auto work = [&]() {
    while (true) {
      size_t gi = next.fetch_add(1);
      if (gi >= graphs.size()) break;
      const StableGraph& G = graphs[gi];
      StrataElement local(amb);
      long aut = automorphism_order(G);
      Rat pref = Rat(1) / (Rat(aut) * rat_pow(Rat(r), (unsigned)G.first_betti()));
      for (const auto& wt :
           enumerate_weightings(G, r, A, req.k, *req.target))
        detail::graph_sum_contribution(local, G, wt, A, req.k, req.d, pref);
      partial[gi] = std::move(local);
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  StrataElement out(amb);
  for (const auto& p : partial) out += p;  // fixed merge order
  return out;
}

struct DRProvenance {
  long r0 = 0;
  int degree_bound = 0;
  std::vector<long> moduli;
  std::vector<long> validation_moduli;
  bool retried = false;
  std::vector<std::vector<long>> a_grid;
  std::vector<std::vector<long>> a_validation;
};

namespace detail {

inline StrataElement fit_constant_term(
    const Ambient& amb, const std::vector<long>& moduli,
    const std::vector<long>& validation,
    const std::function<StrataElement(long)>& sample_at, bool* ok,
    DRProvenance* prov) {
  std::vector<StrataElement> samples, checks;
  for (long r : moduli) samples.push_back(sample_at(r));
  for (long r : validation) checks.push_back(sample_at(r));
  std::set<Term> keys;
  for (const auto& s : samples)
    for (const auto& [t, c] : s.terms()) keys.insert(t);
  for (const auto& s : checks)
    for (const auto& [t, c] : s.terms()) keys.insert(t);
  std::vector<Rat> nodes;
  for (long r : moduli) nodes.push_back(Rat(r));
  StrataElement out(amb);
  *ok = true;
  for (const auto& t : keys) {
    std::vector<Rat> vals;
    for (const auto& s : samples) {
      auto it = s.terms().find(t);
      vals.push_back(it == s.terms().end() ? Rat(0)
                                           : it->second.constant_value());
    }
    NewtonPoly fit(nodes, vals);
    for (size_t vi = 0; vi < validation.size(); ++vi) {
      auto it = checks[vi].terms().find(t);
      Rat expect =
          it == checks[vi].terms().end() ? Rat(0) : it->second.constant_value();
      if (fit.eval(Rat(validation[vi])) != expect) {
        *ok = false;
        break;
      }
    }
    if (!*ok) break;
    Rat c0 = fit.eval(Rat(0));
    if (c0 != 0) out.insert(t, Poly(c0, 0));
  }
  if (prov) {
    prov->moduli = moduli;
    prov->validation_moduli = validation;
  }
  return out;
}

}  // namespace detail

// Constant term in r of the weighted graph sum: sample consecutive moduli,
// fit each coefficient exactly, cross-validate on held-out moduli, retry once
// with a doubled degree bound, and fail hard on a persistent mismatch.
inline StrataElement interpolate_in_r(const DRRequest& req, int workers = 1,
                                      DRProvenance* prov = nullptr,
                                      const std::vector<long>* shifts = nullptr) {
  if (req.A.empty())
    throw std::invalid_argument("numeric ramification vector required");
  if (!shifts)
    if (auto err = check_dr_data(req)) throw std::invalid_argument(*err);
  long abs_sum = 0;
  for (long a : req.A) abs_sum += std::abs(a);
  long r0 = 2 * (abs_sum + std::abs(req.b()) +
                 std::abs(req.k) * std::abs(2L * req.g - 2 + req.n) + req.d) +
            3;
  int bound = (int)(2 * req.d * req.d + std::min<long>(req.g, req.d));
  auto sample_at = [&](long r) { return compute_P_d_r(req, r, workers, shifts); };
  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<long> moduli, validation;
    for (int i = 0; i <= bound; ++i) moduli.push_back(r0 + i);
    for (int i = 1; i <= 3; ++i) validation.push_back(r0 + bound + i);
    bool ok = false;
    StrataElement out = detail::fit_constant_term(
        req.ambient(), moduli, validation, sample_at, &ok, prov);
    if (prov) {
      prov->r0 = r0;
      prov->degree_bound = bound;
      prov->retried = attempt > 0;
    }
    if (ok) return out;
    bound = 2 * bound + 1;
  }
  throw std::runtime_error(
      "r-interpolation failed cross-validation at the doubled degree bound");
}

namespace detail {

// Tensor-grid Newton interpolation with polynomial coefficients.
inline Poly tensor_newton(
    int nvars, int var, const std::vector<long>& axis,
    const std::function<Poly(std::vector<long>&)>& lookup,
    std::vector<long>& prefix) {
  if (var == nvars) return lookup(prefix);
  std::vector<Poly> vals;
  for (long x : axis) {
    prefix.push_back(x);
    vals.push_back(tensor_newton(nvars, var + 1, axis, lookup, prefix));
    prefix.pop_back();
  }
  // divided differences over this axis
  size_t m = vals.size();
  for (size_t level = 1; level < m; ++level)
    for (size_t i = m - 1; i >= level; --i) {
      Poly num = vals[i] - vals[i - 1];
      Rat den = Rat(axis[i]) - Rat(axis[i - level]);
      vals[i] = num * (Rat(1) / den);
      if (i == level) break;
    }
  Poly x = Poly::variable(var, nvars);
  Poly acc(Rat(0), nvars);
  for (size_t i = m; i-- > 0;) {
    Poly shift = x - Poly(Rat(axis[i]), nvars);
    acc = acc * shift + vals[i];
  }
  return acc;
}

}  // namespace detail

// Symbolic reconstruction: a_n is eliminated through the degree constraint
// and the remaining dependence on a_1..a_{n-1} is recovered by exact
// tensor-grid interpolation of numeric runs, cross-validated off-grid.
inline StrataElement compute_P_d_symbolic(const DRRequest& req,
                                          int workers = 1,
                                          DRProvenance* prov = nullptr) {
  if (req.n < 1) throw std::invalid_argument("need a marking");
  int nv = req.n - 1;
  std::vector<std::string> syms;
  for (int i = 1; i <= nv; ++i) syms.push_back("a" + std::to_string(i));
  long total = req.a_sum();
  auto run_numeric = [&](const std::vector<long>& free_vals) {
    DRRequest r2 = req;
    r2.A.assign((size_t)req.n, 0);
    long s = 0;
    for (int i = 0; i < nv; ++i) {
      r2.A[(size_t)i] = free_vals.at((size_t)i);
      s += free_vals.at((size_t)i);
    }
    r2.A[(size_t)(req.n - 1)] = total - s;
    return interpolate_in_r(r2, workers, nullptr);
  };
  if (nv == 0) {
    DRRequest r2 = req;
    r2.A = {total};
    StrataElement out = interpolate_in_r(r2, workers, prov);
    return out;
  }
  std::vector<long> axis;
  for (long v = 0; v <= 2 * req.d; ++v) axis.push_back(v);
  std::map<std::vector<long>, StrataElement> grid;
  std::function<void(std::vector<long>&)> fill = [&](std::vector<long>& pre) {
    if ((int)pre.size() == nv) {
      grid.emplace(pre, run_numeric(pre));
      return;
    }
    for (long v : axis) {
      pre.push_back(v);
      fill(pre);
      pre.pop_back();
    }
  };
  std::vector<long> pre;
  fill(pre);
  std::set<Term> keys;
  for (const auto& [tuple, el] : grid)
    for (const auto& [t, c] : el.terms()) keys.insert(t);

  StrataElement out(req.ambient(), syms);
  for (const auto& t : keys) {
    auto lookup = [&](std::vector<long>& tuple) {
      const auto& el = grid.at(tuple);
      auto it = el.terms().find(t);
      return Poly(it == el.terms().end() ? Rat(0) : it->second.constant_value(),
                  nv);
    };
    std::vector<long> p2;
    Poly fitted = detail::tensor_newton(nv, 0, axis, lookup, p2);
    if (!fitted.is_zero()) out.insert(t, fitted);
  }
  // off-grid cross-validation
  std::vector<std::vector<long>> checks;
  for (int c = 1; c <= 3; ++c) {
    std::vector<long> tuple;
    for (int i = 0; i < nv; ++i) tuple.push_back(2 * req.d + c + i);
    checks.push_back(tuple);
  }
  for (const auto& tuple : checks) {
    StrataElement fresh = run_numeric(tuple);
    std::vector<Rat> point;
    for (long v : tuple) point.push_back(Rat(v));
    if (out.eval_symbols(point) != fresh)
      throw std::runtime_error("off-grid cross-validation failed");
  }
  if (prov) {
    for (long v : axis) prov->a_grid.push_back({v});
    prov->a_validation = checks;
  }
  return out;
}

// Target with the distinguished line bundle raised to a power: c1(S) -> m c1(S).
inline TargetPtr scale_line_bundle(const TargetPtr& t, long m) {
  auto s = std::make_shared<Target>(*t);
  s->name = t->name + "|S^" + std::to_string(m);
  Chow scaled;
  for (const auto& [i, c] : t->c1S)
    if (c * m != 0) scaled[i] = c * Rat(m);
  s->c1S = scaled;
  return s;
}

// Decomposition of the class by scale weight: running the pipeline with
// a_i -> m a_i, S -> S^m, k -> m k multiplies the weight-j part by m^j.
// Exact interpolation in m recovers the parts; indices run 0..2d.
inline std::vector<StrataElement> compute_P_d_m_parts(const DRRequest& req,
                                                      int workers = 1) {
  int nv = req.n - 1;
  std::vector<std::string> syms;
  for (int i = 1; i <= nv; ++i) syms.push_back("a" + std::to_string(i));
  long deg = 2 * req.d;
  std::vector<long> ms, checks;
  for (long m = 0; m <= deg; ++m) ms.push_back(m);
  checks = {deg + 1, deg + 2};

  auto run_scale = [&](long m) {
    DRRequest r2 = req;
    r2.target = scale_line_bundle(req.target, m);
    r2.k = req.k * m;
    StrataElement q = compute_P_d_symbolic(r2, workers);
    // rebase onto the original ambient and substitute a_i -> m a_i
    StrataElement rb(req.ambient(), syms);
    for (const auto& [t, c] : q.terms()) rb.insert(t, c.scale_vars(Rat(m)));
    return rb;
  };

  std::vector<StrataElement> samples, validation;
  for (long m : ms) samples.push_back(run_scale(m));
  for (long m : checks) validation.push_back(run_scale(m));

  std::set<std::pair<Term, Poly::Expo>> keys;
  for (const auto& s : samples)
    for (const auto& [t, c] : s.terms())
      for (const auto& [e, v] : c.terms()) keys.insert({t, e});
  for (const auto& s : validation)
    for (const auto& [t, c] : s.terms())
      for (const auto& [e, v] : c.terms()) keys.insert({t, e});

  std::vector<Rat> nodes;
  for (long m : ms) nodes.push_back(Rat(m));
  std::vector<StrataElement> parts((size_t)deg + 1,
                                   StrataElement(req.ambient(), syms));
  for (const auto& [t, expo] : keys) {
    std::vector<Rat> vals;
    for (const auto& s : samples) {
      auto it = s.terms().find(t);
      vals.push_back(it == s.terms().end() ? Rat(0) : it->second.coeff(expo));
    }
    NewtonPoly fit(nodes, vals);
    for (size_t vi = 0; vi < checks.size(); ++vi) {
      auto it = validation[vi].terms().find(t);
      Rat expect =
          it == validation[vi].terms().end() ? Rat(0) : it->second.coeff(expo);
      if (fit.eval(Rat(checks[vi])) != expect)
        throw std::runtime_error("scale-grading cross-validation failed");
    }
    auto coeffs = fit.monomial_coeffs();
    for (size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0) continue;
      Poly mono(Rat(coeffs[j]), nv);
      for (int i = 0; i < nv; ++i)
        for (int p = 0; p < expo[(size_t)i]; ++p)
          mono *= Poly::variable(i, nv);
      parts.at(j).insert(t, mono);
    }
  }
  return parts;
}

}  // namespace strata

#endif
