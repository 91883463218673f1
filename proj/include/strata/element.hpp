#ifndef STRATA_ELEMENT_HPP
#define STRATA_ELEMENT_HPP

#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "strata/graph.hpp"
#include "strata/poly.hpp"
#include "strata/target.hpp"

namespace strata {

// Ambient space data shared by every term of an element.
struct Ambient {
  int g = 0;
  int n = 0;
  CurveClass beta;
  TargetPtr target;

  long vdim() const {
    Rat v = Rat(1 - g) * Rat(target->dim - 3) +
            target->degree_pairing(beta, target->c1TX) + Rat(n);
    if (v.get_den() != 1)
      throw std::runtime_error("virtual dimension is not an integer");
    return v.get_num().get_si();
  }

  bool operator==(const Ambient& o) const {
    return g == o.g && n == o.n && beta == o.beta &&
           target->name == o.target->name && target->dim == o.target->dim &&
           target->labels == o.target->labels;
  }
  bool operator!=(const Ambient& o) const { return !(*this == o); }
};

inline long vdim(int g, int n, const CurveClass& beta, const TargetPtr& t) {
  return Ambient{g, n, beta, t}.vdim();
}

// Decoration in basis-monomial form, indexed against a fixed graph labeling.
struct Decor {
  std::vector<int> leg_cls;                            // per leg: basis index
  std::vector<int> psi;                                // per half-edge
  std::vector<int> edge_cls;                           // per edge
  std::vector<std::vector<std::pair<int, int>>> kappa; // per vertex: (a, basis)

  static Decor empty_for(const StableGraph& G, const Target& t) {
    Decor d;
    d.leg_cls.assign((size_t)G.n, t.unit());
    d.psi.assign((size_t)G.num_half(), 0);
    d.edge_cls.assign((size_t)G.num_edges(), t.unit());
    d.kappa.assign((size_t)G.num_vertices(), {});
    return d;
  }
};

// Decoration with general Chow values; normalization expands it into
// basis-monomial terms.
struct RawDecor {
  std::map<int, Chow> leg_cls;                       // leg label -> class
  std::map<int, int> psi;                            // half-edge -> exponent
  std::map<int, Chow> edge_cls;                      // edge index -> class
  std::map<int, std::vector<std::pair<int, Chow>>> kappa;  // vertex -> entries
};

// Canonical decorated term: graph is in canonical form and the decoration is
// minimal over the graph's automorphisms. Identity is the cached encoding.
struct Term {
  StableGraph graph;
  Decor dec;
  Encoding key;

  bool operator<(const Term& o) const { return key < o.key; }
  bool operator==(const Term& o) const { return key == o.key; }
};

namespace detail {

inline Encoding encode_term(const StableGraph& G, const Decor& d,
                            const Encoding& graph_enc) {
  Encoding e = graph_enc;
  e.push_back(-1);
  for (int v : d.psi) e.push_back(v);
  e.push_back(-2);
  for (int v : d.leg_cls) e.push_back(v);
  e.push_back(-3);
  for (int v : d.edge_cls) e.push_back(v);
  e.push_back(-4);
  for (const auto& ks : d.kappa) {
    e.push_back((long long)ks.size());
    for (auto [a, m] : ks) {
      e.push_back(a);
      e.push_back(m);
    }
  }
  return e;
}

// Shared cache of canonical data per graph encoding: automorphisms and the
// edge-pair lookup used to transport edge decorations.
struct GraphInfo {
  StableGraph graph;
  Encoding enc;
  std::vector<GraphAut> auts;
  std::map<std::pair<int, int>, int> edge_index;  // (h1<h2) -> edge position
};

inline const GraphInfo& graph_info(const StableGraph& canonical_graph,
                                   const Encoding& enc) {
  static std::map<Encoding, GraphInfo> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(enc);
  if (it != cache.end()) return it->second;
  GraphInfo info;
  info.graph = canonical_graph;
  info.enc = enc;
  info.auts = automorphisms(canonical_graph);
  auto es = canonical_graph.edges();
  for (int i = 0; i < (int)es.size(); ++i) info.edge_index[es[(size_t)i]] = i;
  return cache.emplace(enc, std::move(info)).first->second;
}

// Applies a half/vertex permutation of the canonical graph to a decoration.
inline Decor transport(const Decor& d, const StableGraph& G,
                       const GraphAut& aut,
                       const std::map<std::pair<int, int>, int>& edge_index) {
  Decor out = d;
  for (int h = 0; h < G.num_half(); ++h) out.psi[(size_t)aut.hperm[(size_t)h]] = d.psi[(size_t)h];
  auto es = G.edges();
  for (int e = 0; e < (int)es.size(); ++e) {
    auto [h1, h2] = es[(size_t)e];
    int a = aut.hperm[(size_t)h1], b = aut.hperm[(size_t)h2];
    if (a > b) std::swap(a, b);
    out.edge_cls[(size_t)edge_index.at({a, b})] = d.edge_cls[(size_t)e];
  }
  for (int v = 0; v < G.num_vertices(); ++v)
    out.kappa[(size_t)aut.vperm[(size_t)v]] = d.kappa[(size_t)v];
  // legs are fixed pointwise
  return out;
}

}  // namespace detail

// Degree of a normalized term: edges + psi powers + decoration codimensions
// + kappa (a + codim) contributions.
inline long term_degree(const Term& t, const Target& target) {
  long d = t.graph.num_edges();
  for (int e : t.dec.psi) d += e;
  for (int m : t.dec.leg_cls) d += target.codims.at((size_t)m);
  for (int m : t.dec.edge_cls) d += target.codims.at((size_t)m);
  for (const auto& ks : t.dec.kappa)
    for (auto [a, m] : ks) d += a + target.codims.at((size_t)m);
  return d;
}

// Scale weight of a term paired with one coefficient monomial: the monomial's
// total degree plus the codimension of every Chow decoration on the term.
// For decorations that are powers of c1(S) this counts S-factors with
// multiplicity; kappa indices contribute nothing.
inline long m_degree(const Term& t, const Poly::Expo& monomial,
                     const Target& target) {
  long d = 0;
  for (int x : monomial) d += x;
  for (int m : t.dec.leg_cls) d += target.codims.at((size_t)m);
  for (int m : t.dec.edge_cls) d += target.codims.at((size_t)m);
  for (const auto& ks : t.dec.kappa)
    for (auto [a, m] : ks) d += target.codims.at((size_t)m);
  return d;
}

// Formal linear combination of canonical decorated terms with polynomial
// coefficients in a fixed symbol list (numeric when the list is empty).
class StrataElement {
 public:
  StrataElement() = default;
  explicit StrataElement(Ambient amb, std::vector<std::string> symbols = {})
      : amb_(std::move(amb)), syms_(std::move(symbols)) {}

  const Ambient& ambient() const { return amb_; }
  const std::vector<std::string>& symbols() const { return syms_; }
  const std::map<Term, Poly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }
  int nvars() const { return (int)syms_.size(); }

  Poly make_const(const Rat& c) const { return Poly(c, nvars()); }

  // Inserts a term given by any labeling of a valid graph plus a decoration
  // with general Chow values. Expands to basis monomials, applies the
  // kappa_{-1} eliminations, enforces the vdim degree cap, canonicalizes.
  void add_raw(const StableGraph& G, const RawDecor& rd, const Poly& coeff) {
    if (coeff.is_zero()) return;
    if (coeff.nvars() != nvars())
      throw std::invalid_argument("coefficient variable-count mismatch");
    const Target& t = *amb_.target;
    struct Slot {
      int kind;  // 0 leg, 1 edge, 2 kappa
      int index; // leg label / edge index / vertex
      int a = 0; // kappa layer index
      Chow value;
    };
    std::vector<Slot> slots;
    for (const auto& [i, ch] : rd.leg_cls)
      if (!(ch.size() == 1 && ch.count(t.unit()) && ch.at(t.unit()) == 1))
        slots.push_back({0, i, 0, ch});
    for (const auto& [e, ch] : rd.edge_cls)
      if (!(ch.size() == 1 && ch.count(t.unit()) && ch.at(t.unit()) == 1))
        slots.push_back({1, e, 0, ch});
    for (const auto& [v, entries] : rd.kappa)
      for (const auto& [a, ch] : entries) slots.push_back({2, v, a, ch});

    Decor base = Decor::empty_for(G, t);
    for (const auto& [h, e] : rd.psi) base.psi.at((size_t)h) = e;

    std::function<void(size_t, Decor&, Rat)> rec = [&](size_t si, Decor& dec,
                                                       Rat factor) {
      if (factor == 0) return;
      if (si == slots.size()) {
        finish(G, dec, coeff * factor);
        return;
      }
      const Slot& s = slots[si];
      for (const auto& [m, c] : s.value) {
        if (c == 0) continue;
        Rat f = factor * c;
        if (s.kind == 0) {
          int prev = dec.leg_cls.at((size_t)s.index);
          // decorations multiply in the Chow ring
          Chow prod = t.chow_product(Chow{{prev, Rat(1)}}, Chow{{m, Rat(1)}});
          for (const auto& [pm, pc] : prod) {
            dec.leg_cls.at((size_t)s.index) = pm;
            rec(si + 1, dec, f * pc);
          }
          dec.leg_cls.at((size_t)s.index) = prev;
        } else if (s.kind == 1) {
          int prev = dec.edge_cls.at((size_t)s.index);
          Chow prod = t.chow_product(Chow{{prev, Rat(1)}}, Chow{{m, Rat(1)}});
          for (const auto& [pm, pc] : prod) {
            dec.edge_cls.at((size_t)s.index) = pm;
            rec(si + 1, dec, f * pc);
          }
          dec.edge_cls.at((size_t)s.index) = prev;
        } else {
          // kappa entry rules
          if (s.a < -1) throw std::invalid_argument("kappa index below -1");
          int cd = t.codims.at((size_t)m);
          if (s.a == -1 && cd == 0) continue;  // pushforward of a fundamental class
          if (s.a == -1 && cd == 1) {
            Rat b = t.degree_pairing(G.verts.at((size_t)s.index).beta,
                                     Chow{{m, Rat(1)}});
            rec(si + 1, dec, f * b);
            continue;
          }
          dec.kappa.at((size_t)s.index).push_back({s.a, m});
          rec(si + 1, dec, f);
          dec.kappa.at((size_t)s.index).pop_back();
        }
      }
    };
    Decor dec = base;
    rec(0, dec, Rat(1));
  }

  // Canonical insertion of an already-monomial decoration.
  void add_monomial(const StableGraph& G, const Decor& d, const Poly& coeff) {
    finish(G, d, coeff);
  }

  void add_element(const StrataElement& o, const Poly& scale) {
    check_compatible(o);
    for (const auto& [t, c] : o.terms_) insert(t, c * scale);
  }
  void add_element(const StrataElement& o, const Rat& scale = Rat(1)) {
    add_element(o, make_const(scale));
  }

  StrataElement& operator+=(const StrataElement& o) {
    add_element(o, Rat(1));
    return *this;
  }
  StrataElement& operator-=(const StrataElement& o) {
    add_element(o, Rat(-1));
    return *this;
  }
  StrataElement operator+(const StrataElement& o) const {
    StrataElement r = *this;
    r += o;
    return r;
  }
  StrataElement operator-(const StrataElement& o) const {
    StrataElement r = *this;
    r -= o;
    return r;
  }
  StrataElement operator*(const Rat& c) const {
    StrataElement r = *this;
    if (c == 0) {
      r.terms_.clear();
      return r;
    }
    for (auto& [t, v] : r.terms_) v *= c;
    return r;
  }
  StrataElement operator-() const { return *this * Rat(-1); }

  bool operator==(const StrataElement& o) const {
    if (amb_ != o.amb_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    auto a = terms_.begin();
    auto b = o.terms_.begin();
    for (; a != terms_.end(); ++a, ++b) {
      if (!(a->first.key == b->first.key)) return false;
      if (!(a->second == b->second)) return false;
    }
    return true;
  }
  bool operator!=(const StrataElement& o) const { return !(*this == o); }

  StrataElement truncate(long d) const {
    StrataElement r(amb_, syms_);
    for (const auto& [t, c] : terms_)
      if (term_degree(t, *amb_.target) <= d) r.insert(t, c);
    return r;
  }

  StrataElement degree_part(long d) const {
    StrataElement r(amb_, syms_);
    for (const auto& [t, c] : terms_)
      if (term_degree(t, *amb_.target) == d) r.insert(t, c);
    return r;
  }

  bool is_homogeneous(long d) const {
    for (const auto& [t, c] : terms_)
      if (term_degree(t, *amb_.target) != d) return false;
    return true;
  }

  // Sub-sum of (term, coefficient monomial) pairs of the given scale weight.
  StrataElement m_graded_part(long deg) const {
    StrataElement r(amb_, syms_);
    for (const auto& [t, c] : terms_) {
      Poly part(nvars());
      for (const auto& [expo, v] : c.terms())
        if (m_degree(t, expo, *amb_.target) == deg) {
          Poly mono(Rat(1), nvars());
          for (int i = 0; i < nvars(); ++i)
            for (int k = 0; k < expo[(size_t)i]; ++k)
              mono *= Poly::variable(i, nvars());
          part += mono * v;
        }
      if (!part.is_zero()) r.insert(t, part);
    }
    return r;
  }

  // Extracts the coefficient element of one symbol monomial.
  StrataElement extract_coefficient(const Poly::Expo& expo) const {
    StrataElement r(amb_, {});
    for (const auto& [t, c] : terms_) {
      Rat v = c.coeff(expo);
      if (v != 0) r.insert(t, Poly(v, 0));
    }
    return r;
  }

  std::set<Poly::Expo> monomials() const {
    std::set<Poly::Expo> out;
    for (const auto& [t, c] : terms_)
      for (const auto& [e, v] : c.terms()) out.insert(e);
    return out;
  }

  // Numeric evaluation of all coefficients (for cross-validation).
  StrataElement eval_symbols(const std::vector<Rat>& point) const {
    StrataElement r(amb_, {});
    for (const auto& [t, c] : terms_) {
      Rat v = c.eval(point);
      if (v != 0) r.insert(t, Poly(v, 0));
    }
    return r;
  }

  StrataElement with_symbols(std::vector<std::string> syms) const {
    StrataElement r(amb_, std::move(syms));
    for (const auto& [t, c] : terms_) {
      if (!c.is_constant())
        throw std::invalid_argument("cannot resymbol a non-constant element");
      r.insert(t, Poly(c.constant_value(), r.nvars()));
    }
    return r;
  }

  long max_degree() const {
    long d = 0;
    for (const auto& [t, c] : terms_)
      d = std::max(d, term_degree(t, *amb_.target));
    return d;
  }

  void insert(const Term& t, const Poly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(t);
    if (it == terms_.end()) {
      terms_.emplace(t, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

 private:
  void check_compatible(const StrataElement& o) const {
    if (amb_ != o.amb_) throw std::invalid_argument("ambient mismatch");
    if (!o.syms_.empty() && o.syms_ != syms_)
      throw std::invalid_argument("symbol list mismatch");
  }

  void finish(const StableGraph& G, const Decor& d, const Poly& coeff) {
    if (coeff.is_zero()) return;
    // degree cap
    long deg = (long)G.num_edges();
    const Target& t = *amb_.target;
    for (int e : d.psi) deg += e;
    for (int m : d.leg_cls) deg += t.codims.at((size_t)m);
    for (int m : d.edge_cls) deg += t.codims.at((size_t)m);
    for (const auto& ks : d.kappa)
      for (auto [a, m] : ks) deg += a + t.codims.at((size_t)m);
    if (deg > amb_.vdim()) return;

    auto canon = canonicalize(G);
    const auto& info = detail::graph_info(canon.graph, canon.encoding);
    // transport decoration to canonical labels
    Decor cd = Decor::empty_for(canon.graph, t);
    for (int h = 0; h < G.num_half(); ++h)
      cd.psi.at((size_t)canon.half_map[(size_t)h]) = d.psi.at((size_t)h);
    for (int i = 0; i < G.n; ++i) cd.leg_cls.at((size_t)i) = d.leg_cls.at((size_t)i);
    auto es = G.edges();
    for (int e = 0; e < (int)es.size(); ++e) {
      int a = canon.half_map[(size_t)es[(size_t)e].first];
      int b = canon.half_map[(size_t)es[(size_t)e].second];
      if (a > b) std::swap(a, b);
      cd.edge_cls.at((size_t)info.edge_index.at({a, b})) = d.edge_cls.at((size_t)e);
    }
    for (int v = 0; v < G.num_vertices(); ++v) {
      auto ks = d.kappa.at((size_t)v);
      std::sort(ks.begin(), ks.end());
      cd.kappa.at((size_t)canon.vert_map[(size_t)v]) = std::move(ks);
    }
    // minimize over automorphisms
    Encoding best;
    Decor best_dec;
    for (const auto& aut : info.auts) {
      Decor cand = detail::transport(cd, canon.graph, aut, info.edge_index);
      for (auto& ks : cand.kappa) std::sort(ks.begin(), ks.end());
      Encoding e = detail::encode_term(canon.graph, cand, canon.encoding);
      if (best.empty() || e < best) {
        best = std::move(e);
        best_dec = std::move(cand);
      }
    }
    Term term{canon.graph, std::move(best_dec), std::move(best)};
    insert(term, coeff);
  }

  Ambient amb_;
  std::vector<std::string> syms_;
  std::map<Term, Poly> terms_;
};

// Convenience builders for common decorated classes on the trivial graph.
inline StrataElement fundamental_class(const Ambient& amb,
                                       std::vector<std::string> syms = {}) {
  StrataElement e(amb, std::move(syms));
  auto G = trivial_graph(amb.g, amb.n, amb.beta);
  e.add_raw(G, RawDecor{}, Poly(Rat(1), e.nvars()));
  return e;
}

inline StrataElement psi_class(const Ambient& amb, int leg /*1-based*/,
                               int power = 1) {
  StrataElement e(amb);
  auto G = trivial_graph(amb.g, amb.n, amb.beta);
  RawDecor rd;
  rd.psi[G.legs.at((size_t)(leg - 1))] = power;
  e.add_raw(G, rd, Poly(Rat(1), 0));
  return e;
}

// xi_i = leg decorated by c1(S).
inline StrataElement xi_class(const Ambient& amb, int leg /*1-based*/) {
  StrataElement e(amb);
  auto G = trivial_graph(amb.g, amb.n, amb.beta);
  RawDecor rd;
  rd.leg_cls[leg - 1] = amb.target->c1S;
  e.add_raw(G, rd, Poly(Rat(1), 0));
  return e;
}

// Single-index twisted kappa class kappa_a(alpha) on the trivial graph.
inline StrataElement kappa_class(const Ambient& amb, int a, const Chow& alpha) {
  StrataElement e(amb);
  auto G = trivial_graph(amb.g, amb.n, amb.beta);
  RawDecor rd;
  rd.kappa[0] = {{a, alpha}};
  e.add_raw(G, rd, Poly(Rat(1), 0));
  return e;
}

// eta = kappa_{-1}(c1(S)^2).
inline StrataElement eta_class(const Ambient& amb) {
  return kappa_class(amb, -1,
                     amb.target->chow_product(amb.target->c1S, amb.target->c1S));
}

inline StrataElement kappa1_class(const Ambient& amb) {
  return kappa_class(amb, 1, amb.target->chow_unit());
}

// Boundary class of one graph (coefficient 1 on its iso class).
inline StrataElement graph_class(const Ambient& amb, const StableGraph& G) {
  StrataElement e(amb);
  e.add_raw(G, RawDecor{}, Poly(Rat(1), 0));
  return e;
}

}  // namespace strata

#endif
