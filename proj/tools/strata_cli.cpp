// Command-line driver: graph enumeration, strata products, weighted graph
// sums with interpolation, pullbacks, pushforwards, and verification of the
// built-in reference relations.
//
// Exit codes: 0 success / verified, 1 verification mismatch, 2 invalid input.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "strata/strata.hpp"
#include "strata/verify.hpp"

using namespace strata;

namespace {

std::vector<long> parse_longs(const std::string& s) {
  std::vector<long> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(std::stol(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::stol(cur));
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + out_path);
    f << text;
  }
}

Json element_payload(const StrataElement& e, const std::string& format) {
  if (format == "latex") {
    Json j;
    j["latex"] = element_to_latex(e);
    return j;
  }
  return element_to_json(e);
}

CurveClass beta_for(const TargetPtr& t, const std::string& beta_str) {
  auto v = parse_longs(beta_str);
  if ((int)v.size() != t->curve_rank)
    throw std::invalid_argument("beta has wrong rank for this target");
  return CurveClass(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact strata-algebra computations for stable-map spaces"};
  app.require_subcommand(1);

  std::string target_spec = "point", beta_str, out_path, format = "json";
  int g = 0, n = 1, max_edges = 0, workers = 1;
  long d = 0, k = 0;
  bool shapes_only = false, symbolic = false;
  std::string A_str, file_a, file_b, in_file, graph_file, example_id = "all";
  int psi_leg = 0;
  bool kappa1 = false;

  auto add_ambient_flags = [&](CLI::App* cmd) {
    cmd->add_option("--g", g, "genus");
    cmd->add_option("--n", n, "number of markings");
    cmd->add_option("--beta", beta_str, "curve class, comma separated");
    cmd->add_option("--target", target_spec,
                    "target model: point, P<m>:<s>, or a file path");
  };

  auto* cmd_graphs = app.add_subcommand("graphs", "enumerate stable graphs");
  add_ambient_flags(cmd_graphs);
  cmd_graphs->add_option("--max-edges", max_edges, "edge cap")->required();
  cmd_graphs->add_flag("--shapes-only", shapes_only,
                       "count genus-labeled shapes without curve classes");
  cmd_graphs->add_option("--format", format, "json|latex");
  cmd_graphs->add_option("--out", out_path, "output path");

  auto* cmd_multiply = app.add_subcommand("multiply", "strata product");
  cmd_multiply->add_option("--a", file_a, "first element document")->required();
  cmd_multiply->add_option("--b", file_b, "second element document")
      ->required();
  cmd_multiply->add_option("--target", target_spec, "target model");
  cmd_multiply->add_option("--format", format, "json|latex");
  cmd_multiply->add_option("--out", out_path, "output path");

  auto* cmd_dr = app.add_subcommand("dr", "weighted graph sum class");
  add_ambient_flags(cmd_dr);
  cmd_dr->add_option("--d", d, "degree")->required();
  cmd_dr->add_option("--k", k, "twist");
  cmd_dr->add_option("--A", A_str, "ramification vector, comma separated");
  cmd_dr->add_flag("--symbolic", symbolic, "reconstruct in a_1..a_{n-1}");
  cmd_dr->add_option("--workers", workers, "worker threads");
  cmd_dr->add_option("--format", format, "json|latex");
  cmd_dr->add_option("--out", out_path, "output path");

  auto* cmd_pullback = app.add_subcommand("pullback", "stabilization pullback");
  add_ambient_flags(cmd_pullback);
  cmd_pullback->add_option("--psi", psi_leg, "pull back psi_i");
  cmd_pullback->add_flag("--kappa1", kappa1, "pull back kappa_1");
  cmd_pullback->add_option("--boundary", graph_file,
                           "pull back a boundary graph document");
  cmd_pullback->add_option("--format", format, "json|latex");
  cmd_pullback->add_option("--out", out_path, "output path");

  auto* cmd_push = app.add_subcommand("pushforward",
                                      "forget the last marked point");
  cmd_push->add_option("--in", in_file, "element document")->required();
  cmd_push->add_option("--target", target_spec, "target model");
  cmd_push->add_option("--format", format, "json|latex");
  cmd_push->add_option("--out", out_path, "output path");

  auto* cmd_verify = app.add_subcommand("verify-paper",
                                        "check the built-in relations");
  cmd_verify->add_option("id", example_id, "example id or 'all'");
  cmd_verify->add_option("--workers", workers, "worker threads");
  cmd_verify->add_option("--catalog", in_file,
                         "optional fixture catalog document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_graphs->parsed()) {
      TargetPtr target = resolve_target(target_spec);
      CurveClass beta = beta_str.empty() ? CurveClass::zero(target->curve_rank)
                                         : beta_for(target, beta_str);
      auto graphs = enumerate_graphs(g, n, beta, max_edges, shapes_only);
      Json j;
      j["count"] = graphs.size();
      j["graphs"] = Json::array();
      for (const auto& G : graphs) {
        if (format == "latex")
          j["graphs"].push_back(graph_to_latex(G));
        else
          j["graphs"].push_back(graph_to_json(G));
      }
      emit(dump_json(j), out_path);
      return 0;
    }
    if (cmd_multiply->parsed()) {
      TargetPtr target = resolve_target(target_spec);
      std::ifstream fa(file_a), fb(file_b);
      if (!fa || !fb) throw std::invalid_argument("cannot open element file");
      StrataElement a = element_from_json(Json::parse(fa), target);
      StrataElement b = element_from_json(Json::parse(fb), target);
      StrataElement p = multiply(a, b);
      emit(dump_json(element_payload(p, format)), out_path);
      return 0;
    }
    if (cmd_dr->parsed()) {
      TargetPtr target = resolve_target(target_spec);
      DRRequest req;
      req.g = g;
      req.n = n;
      req.target = target;
      req.beta = beta_str.empty() ? CurveClass::zero(target->curve_rank)
                                  : beta_for(target, beta_str);
      req.k = k;
      req.d = d;
      DRProvenance prov;
      StrataElement result(req.ambient());
      if (symbolic) {
        result = compute_P_d_symbolic(req, workers, &prov);
      } else {
        if (A_str.empty())
          throw std::invalid_argument("--A or --symbolic is required");
        req.A = parse_longs(A_str);
        if (auto err = check_dr_data(req)) throw std::invalid_argument(*err);
        result = interpolate_in_r(req, workers, &prov);
      }
      Json j;
      j["element"] = element_payload(result, format);
      j["provenance"] = provenance_to_json(prov);
      emit(dump_json(j), out_path);
      return 0;
    }
    if (cmd_pullback->parsed()) {
      TargetPtr target = resolve_target(target_spec);
      CurveClass beta = beta_str.empty() ? CurveClass::zero(target->curve_rank)
                                         : beta_for(target, beta_str);
      Ambient amb{g, n, beta, target};
      StrataElement result(amb);
      if (psi_leg > 0) {
        result = pullback_psi(amb, psi_leg);
      } else if (kappa1) {
        result = pullback_kappa1(amb);
      } else if (!graph_file.empty()) {
        std::ifstream f(graph_file);
        if (!f) throw std::invalid_argument("cannot open graph file");
        StableGraph G = graph_from_json(Json::parse(f), target->curve_rank);
        result = pullback_boundary(G, amb);
      } else {
        throw std::invalid_argument("choose --psi, --kappa1 or --boundary");
      }
      emit(dump_json(element_payload(result, format)), out_path);
      return 0;
    }
    if (cmd_push->parsed()) {
      TargetPtr target = resolve_target(target_spec);
      std::ifstream f(in_file);
      if (!f) throw std::invalid_argument("cannot open element file");
      StrataElement e = element_from_json(Json::parse(f), target);
      emit(dump_json(element_payload(forgetful_pushforward(e), format)),
           out_path);
      return 0;
    }
    if (cmd_verify->parsed()) {
      if (!in_file.empty()) {
        std::ifstream f(in_file);
        if (!f) throw std::invalid_argument("cannot open catalog file");
        Json cat = Json::parse(f);  // malformed catalogs exit with code 2
        if (!cat.is_array())
          throw std::invalid_argument("catalog must be an array of entries");
        for (const auto& entry : cat)
          if (!entry.contains("id"))
            throw std::invalid_argument("catalog entry without id");
      }
      std::vector<CheckResult> results;
      auto want = [&](const std::string& id) {
        return example_id == "all" || example_id == id;
      };
      if (want("4.2"))
        for (long bd : {1, 2, 3})
          for (auto& r : verify::check_42(bd, workers)) results.push_back(r);
      if (want("4.4"))
        for (long bd : {1, 2})
          for (auto& r : verify::check_44(bd, workers)) results.push_back(r);
      if (want("4.5"))
        for (long bd : {1, 2})
          for (auto& r : verify::check_45(bd, workers)) results.push_back(r);
      if (want("2.7") || want("2.6"))
        for (auto& r : verify::check_26_27(workers)) results.push_back(r);
      if (results.empty())
        throw std::invalid_argument("unknown example id: " + example_id);
      bool all_pass = true;
      for (const auto& r : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
        if (!r.detail.empty()) std::cout << "  [" << r.detail << "]";
        std::cout << "\n";
        all_pass &= r.pass;
      }
      return all_pass ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
