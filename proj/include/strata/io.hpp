#ifndef STRATA_IO_HPP
#define STRATA_IO_HPP

#include <fstream>
#include <sstream>

#include "strata/dr.hpp"
#include "strata/element.hpp"

#include <json.hpp>

namespace strata {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Target documents.
// ---------------------------------------------------------------------------

inline Json chow_to_json(const Chow& c, const Target& t) {
  Json out = Json::object();
  for (const auto& [i, v] : c) out[t.labels.at((size_t)i)] = rat_str(v);
  return out;
}

inline Chow chow_from_json(const Json& j, const Target& t) {
  Chow c;
  for (auto it = j.begin(); it != j.end(); ++it) {
    Rat v = parse_rat(it.value().get<std::string>());
    if (v != 0) c[t.basis_index(it.key())] = v;
  }
  return c;
}

inline Json target_to_json(const Target& t) {
  Json j;
  j["name"] = t.name;
  j["dim"] = t.dim;
  j["basis"] = Json::array();
  for (int i = 0; i < t.basis_size(); ++i)
    j["basis"].push_back({{"label", t.labels[(size_t)i]},
                          {"codim", t.codims[(size_t)i]}});
  j["products"] = Json::array();
  for (int a = 0; a < t.basis_size(); ++a)
    for (int b = a; b < t.basis_size(); ++b) {
      const auto& row = t.product_row(a, b);
      if (row.empty()) continue;
      Json entry;
      entry["left"] = t.labels[(size_t)a];
      entry["right"] = t.labels[(size_t)b];
      entry["result"] = Json::array();
      for (const auto& [k, c] : row)
        entry["result"].push_back(
            {{"label", t.labels[(size_t)k]}, {"coeff", rat_str(c)}});
      j["products"].push_back(entry);
    }
  j["integral"] = Json::object();
  for (int i = 0; i < t.basis_size(); ++i)
    if (t.integral_of_basis(i) != 0)
      j["integral"][t.labels[(size_t)i]] = rat_str(t.integral_of_basis(i));
  j["curve_rank"] = t.curve_rank;
  j["pairings"] = t.pairing;
  j["c1S"] = chow_to_json(t.c1S, t);
  j["c1TX"] = chow_to_json(t.c1TX, t);
  return j;
}

// Strict parse-and-validate; malformed documents are rejected.
inline TargetPtr target_from_json(const Json& j) {
  auto t = std::make_shared<Target>();
  t->name = j.at("name").get<std::string>();
  t->dim = j.at("dim").get<int>();
  for (const auto& b : j.at("basis")) {
    t->labels.push_back(b.at("label").get<std::string>());
    t->codims.push_back(b.at("codim").get<int>());
  }
  t->init_tables();
  t->find_unit();
  std::set<std::pair<int, int>> given;
  for (const auto& p : j.at("products")) {
    int a = t->basis_index(p.at("left").get<std::string>());
    int b = t->basis_index(p.at("right").get<std::string>());
    std::vector<std::pair<int, Rat>> row;
    for (const auto& r : p.at("result")) {
      Rat c = parse_rat(r.at("coeff").get<std::string>());
      if (c != 0) row.push_back({t->basis_index(r.at("label").get<std::string>()), c});
    }
    std::sort(row.begin(), row.end());
    t->set_product(a, b, row);
    t->set_product(b, a, row);
    given.insert({std::min(a, b), std::max(a, b)});
  }
  // rows absent from the document mean the product is zero, except the unit
  // row which is forced
  for (int a = 0; a < t->basis_size(); ++a)
    for (int b = 0; b < t->basis_size(); ++b) {
      if (given.count({std::min(a, b), std::max(a, b)})) continue;
      if (a == t->unit())
        t->set_product(a, b, {{b, Rat(1)}});
      else if (b == t->unit())
        t->set_product(a, b, {{a, Rat(1)}});
    }
  for (auto it = j.at("integral").begin(); it != j.at("integral").end(); ++it)
    t->set_integral(t->basis_index(it.key()),
                    parse_rat(it.value().get<std::string>()));
  t->curve_rank = j.at("curve_rank").get<int>();
  t->pairing = j.at("pairings").get<std::vector<std::vector<long>>>();
  t->c1S = chow_from_json(j.at("c1S"), *t);
  t->c1TX = chow_from_json(j.at("c1TX"), *t);
  t->validate();
  return t;
}

// "point", "P<m>:<s>", or a path to a target document.
inline TargetPtr resolve_target(const std::string& spec) {
  if (spec == "point") return make_point_target();
  if (spec.size() > 1 && spec[0] == 'P' && std::isdigit((unsigned char)spec[1])) {
    auto colon = spec.find(':');
    int m = std::stoi(spec.substr(1, colon - 1));
    long s = colon == std::string::npos ? 1 : std::stol(spec.substr(colon + 1));
    return make_projective_space(m, s);
  }
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open target file: " + spec);
  Json j = Json::parse(in);
  return target_from_json(j);
}

// ---------------------------------------------------------------------------
// Graph documents. Emitted graphs are always canonical; half-edge ids follow
// the document order (legs by label, then edges as listed).
// ---------------------------------------------------------------------------

inline Json graph_to_json(const StableGraph& G) {
  Json j;
  j["g"] = G.g;
  j["n"] = G.n;
  j["beta"] = G.beta.c;
  j["vertices"] = Json::array();
  for (const auto& v : G.verts)
    j["vertices"].push_back({{"genus", v.genus}, {"beta", v.beta.c}});
  // slot = position of the half-edge among its vertex's half-edges (id order)
  std::vector<int> slot((size_t)G.num_half(), 0);
  for (int v = 0; v < G.num_vertices(); ++v) {
    int k = 0;
    for (int h = 0; h < G.num_half(); ++h)
      if (G.hv[(size_t)h] == v) slot[(size_t)h] = k++;
  }
  j["legs"] = Json::object();
  for (int i = 0; i < G.n; ++i) {
    int h = G.legs[(size_t)i];
    j["legs"][std::to_string(i + 1)] =
        Json::array({G.hv[(size_t)h], slot[(size_t)h]});
  }
  j["edges"] = Json::array();
  for (auto [h1, h2] : G.edges())
    j["edges"].push_back(Json::array(
        {Json::array({G.hv[(size_t)h1], slot[(size_t)h1]}),
         Json::array({G.hv[(size_t)h2], slot[(size_t)h2]})}));
  return j;
}

inline StableGraph graph_from_json(const Json& j, int rank) {
  StableGraph G;
  G.g = j.at("g").get<int>();
  G.n = j.at("n").get<int>();
  auto bc = j.at("beta").get<std::vector<long>>();
  if ((int)bc.size() != rank)
    throw std::invalid_argument("beta rank mismatch in graph document");
  G.beta = CurveClass(bc);
  for (const auto& v : j.at("vertices"))
    G.add_vertex(v.at("genus").get<int>(),
                 CurveClass(v.at("beta").get<std::vector<long>>()));
  for (int i = 1; i <= G.n; ++i) {
    auto loc = j.at("legs").at(std::to_string(i));
    G.add_leg(loc.at(0).get<int>());
  }
  for (const auto& e : j.at("edges"))
    G.add_edge(e.at(0).at(0).get<int>(), e.at(1).at(0).get<int>());
  if (auto err = validate(G, GraphKind::Prestable))
    throw std::invalid_argument("invalid graph document: " + *err);
  return G;
}

// ---------------------------------------------------------------------------
// Element documents.
// ---------------------------------------------------------------------------

inline Json poly_to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back(Json::array({rat_str(c), e}));
  return out;
}

inline Poly poly_from_json(const Json& j, int nvars) {
  Poly p(nvars);
  for (const auto& entry : j) {
    Rat c = parse_rat(entry.at(0).get<std::string>());
    auto expo = entry.at(1).get<std::vector<int>>();
    if ((int)expo.size() != nvars)
      throw std::invalid_argument("exponent vector has wrong length");
    Poly mono(c, nvars);
    for (int i = 0; i < nvars; ++i)
      for (int k = 0; k < expo[(size_t)i]; ++k)
        mono *= Poly::variable(i, nvars);
    p += mono;
  }
  return p;
}

inline Json element_to_json(const StrataElement& e) {
  const Target& t = *e.ambient().target;
  Json j;
  j["ambient"] = {{"g", e.ambient().g},
                  {"n", e.ambient().n},
                  {"beta", e.ambient().beta.c},
                  {"target", t.name}};
  j["symbols"] = e.symbols();
  j["terms"] = Json::array();
  for (const auto& [term, coeff] : e.terms()) {
    Json tj;
    tj["graph"] = graph_to_json(term.graph);
    tj["psi"] = term.dec.psi;
    Json lc = Json::array();
    for (int m : term.dec.leg_cls) lc.push_back(t.labels.at((size_t)m));
    tj["leg_classes"] = lc;
    Json ec = Json::array();
    for (int m : term.dec.edge_cls) ec.push_back(t.labels.at((size_t)m));
    tj["edge_classes"] = ec;
    Json kp = Json::array();
    for (const auto& ks : term.dec.kappa) {
      Json vk = Json::array();
      for (auto [a, m] : ks)
        vk.push_back(Json::array({a, t.labels.at((size_t)m)}));
      kp.push_back(vk);
    }
    tj["kappa"] = kp;
    tj["coeff"] = poly_to_json(coeff);
    tj["coeff_str"] = coeff.str(e.symbols());
    j["terms"].push_back(tj);
  }
  return j;
}

inline StrataElement element_from_json(const Json& j, const TargetPtr& target) {
  const auto& aj = j.at("ambient");
  if (aj.at("target").get<std::string>() != target->name)
    throw std::invalid_argument("element document names a different target");
  Ambient amb{aj.at("g").get<int>(), aj.at("n").get<int>(),
              CurveClass(aj.at("beta").get<std::vector<long>>()), target};
  std::vector<std::string> syms =
      j.at("symbols").get<std::vector<std::string>>();
  StrataElement out(amb, syms);
  for (const auto& tj : j.at("terms")) {
    StableGraph G = graph_from_json(tj.at("graph"), target->curve_rank);
    RawDecor rd;
    auto psi = tj.at("psi").get<std::vector<int>>();
    for (size_t h = 0; h < psi.size(); ++h)
      if (psi[h]) rd.psi[(int)h] = psi[h];
    auto lc = tj.at("leg_classes");
    for (int i = 0; i < (int)lc.size(); ++i) {
      int m = target->basis_index(lc.at((size_t)i).get<std::string>());
      if (m != target->unit()) rd.leg_cls[i] = Chow{{m, Rat(1)}};
    }
    auto ec = tj.at("edge_classes");
    for (int e = 0; e < (int)ec.size(); ++e) {
      int m = target->basis_index(ec.at((size_t)e).get<std::string>());
      if (m != target->unit()) rd.edge_cls[e] = Chow{{m, Rat(1)}};
    }
    auto kp = tj.at("kappa");
    for (int v = 0; v < (int)kp.size(); ++v)
      for (const auto& vk : kp.at((size_t)v))
        rd.kappa[v].push_back(
            {vk.at(0).get<int>(),
             Chow{{target->basis_index(vk.at(1).get<std::string>()), Rat(1)}}});
    out.add_raw(G, rd, poly_from_json(tj.at("coeff"), (int)syms.size()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Human-readable bracket notation.
// ---------------------------------------------------------------------------

inline std::string graph_to_latex(const StableGraph& G) {
  std::ostringstream os;
  os << "\\big[";
  for (int v = 0; v < G.num_vertices(); ++v) {
    if (v) os << ",\\ ";
    os << "v_" << v << "(g{=}" << G.verts[(size_t)v].genus << ",\\beta{=}"
       << G.verts[(size_t)v].beta.str() << ")";
    auto ls = G.legs_at(v);
    if (!ls.empty()) {
      os << "\\{";
      for (size_t i = 0; i < ls.size(); ++i) os << (i ? "," : "") << ls[i] + 1;
      os << "\\}";
    }
  }
  auto es = G.edges();
  for (size_t e = 0; e < es.size(); ++e)
    os << ";\\ e_" << e << "(v_" << G.hv[(size_t)es[e].first] << "v_"
       << G.hv[(size_t)es[e].second] << ")";
  os << "\\big]";
  return os.str();
}

inline std::string element_to_latex(const StrataElement& e) {
  const Target& t = *e.ambient().target;
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [term, coeff] : e.terms()) {
    std::string c = coeff.str(e.symbols());
    if (!first) os << "\n + ";
    first = false;
    os << "(" << c << ")\\,";
    std::ostringstream dec;
    for (int h = 0; h < term.graph.num_half(); ++h)
      if (term.dec.psi[(size_t)h]) {
        dec << "\\psi_{h_" << h << "}";
        if (term.dec.psi[(size_t)h] > 1) dec << "^{" << term.dec.psi[(size_t)h] << "}";
      }
    for (int i = 0; i < term.graph.n; ++i)
      if (term.dec.leg_cls[(size_t)i] != t.unit())
        dec << "\\,\\mathrm{ev}_{" << i + 1 << "}^*("
            << t.labels[(size_t)term.dec.leg_cls[(size_t)i]] << ")";
    for (int eI = 0; eI < term.graph.num_edges(); ++eI)
      if (term.dec.edge_cls[(size_t)eI] != t.unit())
        dec << "\\,\\mathrm{ev}_{e_" << eI << "}^*("
            << t.labels[(size_t)term.dec.edge_cls[(size_t)eI]] << ")";
    for (int v = 0; v < term.graph.num_vertices(); ++v)
      for (auto [a, m] : term.dec.kappa[(size_t)v]) {
        dec << "\\,\\kappa_{" << a << "}";
        if (m != t.unit()) dec << "(" << t.labels[(size_t)m] << ")_{v_" << v << "}";
        else dec << "(1)_{v_" << v << "}";
      }
    std::string d = dec.str();
    if (!d.empty()) os << d << "\\,";
    os << graph_to_latex(term.graph);
  }
  return os.str();
}

inline Json provenance_to_json(const DRProvenance& p) {
  Json j;
  j["r0"] = p.r0;
  j["degree_bound"] = p.degree_bound;
  j["moduli"] = p.moduli;
  j["validation_moduli"] = p.validation_moduli;
  j["retried"] = p.retried;
  j["a_grid"] = p.a_grid;
  j["a_validation"] = p.a_validation;
  return j;
}

inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace strata

#endif
