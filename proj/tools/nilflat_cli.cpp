// Command-line driver: parse and inspect nilpotent Lie algebras, search
// Ricci-flat metrics through gradings, filtrations and sigma-diagonal
// ansaetze, and verify Ricci-flatness by two independent exact computations.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <nilflat/batch.hpp>

using namespace nilflat;

namespace {

std::map<std::string, Rat> parse_subst(const std::vector<std::string>& list) {
  std::map<std::string, Rat> subst;
  for (auto& kv : list) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw error("--subst expects name=value, got '" + kv + "'");
    subst[kv.substr(0, eq)] = Rat::parse(kv.substr(eq + 1));
  }
  return subst;
}

LieAlgebra algebra_from(const std::string& text, const std::vector<std::string>& subst) {
  return parse_algebra(text, parse_subst(subst));
}

std::vector<AlgebraRecord> records_from_file(const std::string& path,
                                             const std::vector<std::string>& subst) {
  std::ifstream in(path);
  if (!in) throw error("cannot open " + path);
  return parse_records(in, parse_subst(subst));
}

void print_torus(const DiagonalTorus& torus) {
  std::cout << "diagonal torus rank " << torus.rank << "\n";
  for (int i = 1; i <= torus.n; ++i)
    std::cout << "  w(e" << i << ") = " << str(torus.weight(i)) << "\n";
}

int check_and_report_jacobi(const LieAlgebra& L) {
  auto violations = jacobi_check(L);
  if (violations.empty()) return 0;
  for (auto& v : violations)
    std::cout << "d^2 e^" << v.k << " has component " << v.coefficient.str() << " e^{" << v.p
              << v.q << v.r << "}\n";
  return 1;
}

Mat load_metric_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return metric_from_json(j.contains("metric") ? j["metric"] : j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Ricci-flat metrics on nilpotent Lie algebras"};
  app.require_subcommand(1);

  std::string algebra_text, input_path, metric_path, metric_kind = "antidiagonal";
  std::string sigma_text, params_text, report_format = "text", strategy = "g,f,s";
  std::string torus_mode = "diagonal";
  std::vector<std::string> subst;
  int jobs = 1, samples = 5;
  unsigned long seed = 0;
  bool enumerate_all = false;

  auto add_algebra = [&](CLI::App* cmd) {
    cmd->add_option("algebra", algebra_text, "coframe differentials, e.g. \"0,0,e^{12}\"")
        ->required();
    cmd->add_option("--subst", subst, "parameter substitution name=value");
  };

  auto* parse_cmd = app.add_subcommand("parse", "parse, check d^2 = 0, report niceness");
  add_algebra(parse_cmd);

  auto* der_cmd = app.add_subcommand("derivations", "derivation space and diagonal torus");
  add_algebra(der_cmd);

  auto* grading_cmd =
      app.add_subcommand("grading", "weight sequences and the antidiagonal metric they induce");
  add_algebra(grading_cmd);
  grading_cmd->add_option("--torus", torus_mode, "diagonal | from-file:<path>");
  grading_cmd->add_flag("--all", enumerate_all, "list every admissible weight sequence");

  auto* filt_cmd = app.add_subcommand("filtration", "search a positive filtration witness");
  add_algebra(filt_cmd);

  auto* ricci_cmd = app.add_subcommand("ricci", "exact Ricci tensor by both methods");
  add_algebra(ricci_cmd);
  ricci_cmd->add_option("--metric", metric_kind,
                        "identity | antidiagonal | json:<path> (matrix of rational strings)");

  auto* sigma_cmd = app.add_subcommand("verify-sigma", "verify a sigma-diagonal ansatz");
  add_algebra(sigma_cmd);
  sigma_cmd->add_option("--sigma", sigma_text, "involution, e.g. \"18 35\"")->required();
  sigma_cmd->add_option("--params", params_text, "comma-separated g_i (exact mode)");
  sigma_cmd->add_option("--samples", samples, "random samples in generic mode");
  sigma_cmd->add_option("--seed", seed, "seed for generic sampling");

  auto* batch_cmd = app.add_subcommand("batch", "process a classification file");
  batch_cmd->add_option("input", input_path, "input file of records")->required();
  batch_cmd->add_option("--subst", subst, "parameter substitution name=value");
  batch_cmd->add_option("--strategy", strategy, "comma of g,f,s");
  batch_cmd->add_option("--report", report_format, "text | json | latex-table");
  batch_cmd->add_option("--jobs", jobs, "worker threads");
  batch_cmd->add_option("--seed", seed, "seed for generic sigma sampling");

  CLI11_PARSE(app, argc, argv);

  try {
    if (parse_cmd->parsed()) {
      auto L = algebra_from(algebra_text, subst);
      std::cout << "n = " << L.n << "\n" << serialize(L) << "\n";
      if (int rc = check_and_report_jacobi(L)) return rc;
      std::cout << "d^2 = 0\n";
      auto nice = is_nice_basis(L);
      std::cout << (nice.is_nice ? "nice basis\n" : "not a nice basis:\n");
      for (auto& v : nice.violations)
        std::cout << (v.kind == NiceViolation::BracketNotOnLine ? "  [e_" : "  e_")
                  << v.i << (v.kind == NiceViolation::BracketNotOnLine ? ",e_" : " -| de^")
                  << v.j << (v.kind == NiceViolation::BracketNotOnLine ? "] " : " ")
                  << "has more than one component\n";
      return 0;
    }
    if (der_cmd->parsed()) {
      auto L = algebra_from(algebra_text, subst);
      if (int rc = check_and_report_jacobi(L)) return rc;
      auto der = derivation_space(L);
      std::cout << "dim Der = " << der.dim() << "\n";
      print_torus(diagonal_derivations(L));
      return 0;
    }
    if (grading_cmd->parsed()) {
      auto L = algebra_from(algebra_text, subst);
      if (int rc = check_and_report_jacobi(L)) return rc;
      DiagonalTorus torus;
      if (torus_mode == "diagonal") {
        torus = diagonal_derivations(L);
      } else if (torus_mode.rfind("from-file:", 0) == 0) {
        std::ifstream in(torus_mode.substr(10));
        if (!in) throw error("cannot open torus file");
        std::string line;
        std::vector<RatVec> rows;
        while (std::getline(in, line)) {
          if (line.empty()) continue;
          RatVec row;
          for (auto& v : detail::split(line, ',')) row.push_back(Rat::parse(v));
          rows.push_back(row);
        }
        torus.n = L.n;
        torus.rank = rows.empty() ? 0 : (int)rows[0].size();
        torus.weight_rows = Mat(L.n, torus.rank);
        for (int i = 0; i < L.n; ++i)
          for (int j = 0; j < torus.rank; ++j) torus.weight_rows(i, j) = rows.at(i).at(j);
      } else {
        throw error("--torus expects diagonal or from-file:<path>");
      }
      print_torus(torus);
      auto grading = grading_from_torus(L, torus);
      std::cout << "layers:";
      for (auto& [w, idx] : grading.layers) {
        std::cout << "  " << str(w) << ":{";
        for (size_t t = 0; t < idx.size(); ++t) std::cout << (t ? "," : "") << "e" << idx[t];
        std::cout << "}";
      }
      std::cout << "\n";
      bool any = false;
      enumerate_g_sequences(grading, [&](const WeightSequence& s) {
        any = true;
        std::cout << "sequence " << s.weights_str() << "  basis " << s.basis_str() << "\n";
        if (!enumerate_all) {
          auto metric = build_grading_metric(L, grading, s);
          auto verdict = verify_ricci_flat(L, metric);
          std::cout << "metric " << metric_human(metric.g) << "\n"
                    << "ricci zero (both methods): " << (verdict.is_flat ? "yes" : "NO") << "\n";
        }
        return enumerate_all;
      });
      if (!any) {
        std::cout << "no weight sequence satisfies the grading conditions\n";
        for (auto& o : g1_obstructions(grading))
          std::cout << "  obstruction: " << o.str() << "\n";
        return 1;
      }
      return 0;
    }
    if (filt_cmd->parsed()) {
      auto L = algebra_from(algebra_text, subst);
      if (int rc = check_and_report_jacobi(L)) return rc;
      auto witness = search_filtration(L);
      if (!witness) {
        std::cout << "no adapted filtration in this basis\n";
        return 1;
      }
      std::cout << "basis " << witness->basis_str() << "\nweights " << witness->weights_str()
                << "\n";
      auto metric = build_filtration_metric(L, *witness);
      auto verdict = verify_ricci_flat(L, metric);
      std::cout << "metric " << metric_human(metric.g) << "\n"
                << "ricci zero (both methods): " << (verdict.is_flat ? "yes" : "NO") << "\n";
      return 0;
    }
    if (ricci_cmd->parsed()) {
      auto L = algebra_from(algebra_text, subst);
      if (int rc = check_and_report_jacobi(L)) return rc;
      Mat g;
      if (metric_kind == "identity")
        g = Mat::identity(L.n);
      else if (metric_kind == "antidiagonal")
        g = antidiagonal_gram(L.n);
      else if (metric_kind.rfind("json:", 0) == 0)
        g = load_metric_json(metric_kind.substr(5));
      else
        throw error("--metric expects identity, antidiagonal or json:<path>");
      auto metric = MetricSpec::explicit_metric(g);
      auto a = ricci_formula(L, metric);
      auto b = ricci_koszul(L, metric);
      std::cout << "ricci (formula):\n" << a.ric.str() << "\n";
      std::cout << "ricci (koszul):\n" << b.ric.str() << "\n";
      std::cout << (a.ric == b.ric ? "methods agree\n" : "METHODS DISAGREE\n");
      std::cout << (a.is_flat ? "flat\n" : "not flat\n");
      return a.ric == b.ric ? 0 : 2;
    }
    if (sigma_cmd->parsed()) {
      auto L = algebra_from(algebra_text, subst);
      if (int rc = check_and_report_jacobi(L)) return rc;
      auto sigma_full = detail::parse_involution(sigma_text, 0);
      std::vector<int> sigma(sigma_full.begin(), sigma_full.begin() + L.n);
      if (!params_text.empty()) {
        RatVec params;
        for (auto& v : detail::split(params_text, ',')) params.push_back(Rat::parse(v));
        auto verdict = verify_ricci_flat(L, sigma_diagonal_metric(L.n, sigma, params));
        std::cout << (verdict.is_flat ? "flat (exact)\n" : "not flat\n");
        return verdict.is_flat ? 0 : 1;
      }
      std::mt19937_64 rng(seed);
      auto verdict = verify_ricci_flat_generic(L, sigma, samples, rng);
      std::cout << (verdict.is_flat ? "generically flat (probabilistic)\n"
                                    : "not flat at sampled parameters\n");
      return verdict.is_flat ? 0 : 1;
    }
    if (batch_cmd->parsed()) {
      auto records = records_from_file(input_path, subst);
      BatchOptions opt;
      opt.jobs = jobs;
      opt.seed = seed;
      opt.strategy.clear();
      for (char c : strategy)
        if (c == 'g' || c == 'f' || c == 's') opt.strategy.push_back(c);
      auto report = run_batch(records, opt);
      if (report_format == "text")
        std::cout << report_text(report);
      else if (report_format == "json")
        std::cout << report_json(report).dump(2) << "\n";
      else if (report_format == "latex-table")
        std::cout << report_latex(report);
      else
        throw error("--report expects text, json or latex-table");
      return report.all_expectations_met() ? 0 : 3;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
