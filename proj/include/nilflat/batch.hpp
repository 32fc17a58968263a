#pragma once

#include <atomic>
#include <cctype>
#include <chrono>
#include <istream>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "ricci.hpp"

namespace nilflat {

/// One input record: a named algebra plus optional directives collected from
/// the lines above it (!params, !sigma, !torus, !expect).
struct AlgebraRecord {
  std::string name;
  std::string source;
  LieAlgebra algebra;
  std::optional<std::vector<int>> sigma;  // involution, 1-based
  std::optional<RatVec> sigma_params;
  std::optional<Mat> torus_rows;  // n x k weight rows
  std::optional<std::string> expected;  // grading | filtration | sigma | none
  int line = 0;
};

namespace detail {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

inline std::vector<int> parse_involution(const std::string& text, int line) {
  // tokens are two-digit pairs "18" (or "i-j" for indices above 9)
  std::vector<std::pair<int, int>> swaps;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    int a, b;
    auto dash = tok.find('-');
    if (dash != std::string::npos) {
      a = std::atoi(tok.substr(0, dash).c_str());
      b = std::atoi(tok.substr(dash + 1).c_str());
    } else if (tok.size() == 2 && std::isdigit((unsigned char)tok[0]) &&
               std::isdigit((unsigned char)tok[1])) {
      a = tok[0] - '0';
      b = tok[1] - '0';
    } else {
      throw error("line " + std::to_string(line) + ": bad sigma token '" + tok + "'");
    }
    swaps.emplace_back(a, b);
  }
  int n = 0;
  for (auto& [a, b] : swaps) n = std::max({n, a, b});
  std::vector<int> sigma(16);
  for (int i = 1; i <= 16; ++i) sigma[i - 1] = i;
  for (auto& [a, b] : swaps) {
    sigma[a - 1] = b;
    sigma[b - 1] = a;
  }
  return sigma;  // truncated to the record's dimension later
}

}  // namespace detail

/// Line format: optional "name:" prefix then the coframe notation; '#' starts
/// a comment; "!params name=val,...", "!sigma 18 35 [g=v1,...,vn]",
/// "!torus r1|...|rn" (each r a comma-separated weight vector) and
/// "!expect outcome" apply to the next algebra line.
inline std::vector<AlgebraRecord> parse_records(std::istream& in,
                                                const std::map<std::string, Rat>& global_subst) {
  std::vector<AlgebraRecord> records;
  std::map<std::string, Rat> pending_params;
  std::optional<std::vector<int>> pending_sigma;
  std::optional<RatVec> pending_sigma_params;
  std::optional<std::vector<RatVec>> pending_torus;
  std::optional<std::string> pending_expect;
  std::string raw;
  int lineno = 0;
  int unnamed = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (auto h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    line = detail::trim(line);
    if (line.empty()) continue;
    if (line[0] == '!') {
      auto sp = line.find(' ');
      std::string key = sp == std::string::npos ? line : line.substr(0, sp);
      std::string rest = sp == std::string::npos ? "" : detail::trim(line.substr(sp + 1));
      if (key == "!params") {
        for (auto& kv : detail::split(rest, ',')) {
          auto eq = kv.find('=');
          if (eq == std::string::npos)
            throw error("line " + std::to_string(lineno) + ": bad !params entry '" + kv + "'");
          pending_params[detail::trim(kv.substr(0, eq))] = Rat::parse(kv.substr(eq + 1));
        }
      } else if (key == "!sigma") {
        std::string perm = rest;
        if (auto g = rest.find("g="); g != std::string::npos) {
          perm = detail::trim(rest.substr(0, g));
          RatVec params;
          for (auto& v : detail::split(rest.substr(g + 2), ',')) params.push_back(Rat::parse(v));
          pending_sigma_params = params;
        }
        pending_sigma = detail::parse_involution(perm, lineno);
      } else if (key == "!torus") {
        std::vector<RatVec> rows;
        for (auto& r : detail::split(rest, '|')) {
          RatVec row;
          for (auto& v : detail::split(r, ',')) row.push_back(Rat::parse(v));
          rows.push_back(row);
        }
        pending_torus = rows;
      } else if (key == "!expect") {
        if (rest != "grading" && rest != "filtration" && rest != "sigma" && rest != "none")
          throw error("line " + std::to_string(lineno) + ": bad !expect value '" + rest + "'");
        pending_expect = rest;
      } else {
        throw error("line " + std::to_string(lineno) + ": unknown directive " + key);
      }
      continue;
    }
    AlgebraRecord rec;
    rec.line = lineno;
    std::string body = line;
    // "name:" prefix must not eat the e^{i,j} commas; names cannot contain commas
    if (auto colon = line.find(':'); colon != std::string::npos &&
                                     line.find(',') > colon) {
      rec.name = detail::trim(line.substr(0, colon));
      body = detail::trim(line.substr(colon + 1));
    } else {
      rec.name = "line" + std::to_string(lineno);
      ++unnamed;
    }
    auto subst = global_subst;
    for (auto& [k, v] : pending_params) subst[k] = v;
    try {
      rec.algebra = parse_algebra(body, subst);
    } catch (const std::exception& e) {
      throw error("line " + std::to_string(lineno) + ": " + e.what());
    }
    rec.source = body;
    if (pending_sigma) {
      rec.sigma = std::vector<int>(pending_sigma->begin(), pending_sigma->begin() + rec.algebra.n);
      for (int i = 1; i <= rec.algebra.n; ++i)
        if ((*rec.sigma)[i - 1] > rec.algebra.n)
          throw error("line " + std::to_string(lineno) + ": sigma exceeds dimension");
    }
    rec.sigma_params = pending_sigma_params;
    if (pending_torus) {
      if ((int)pending_torus->size() != rec.algebra.n)
        throw error("line " + std::to_string(lineno) + ": torus has wrong number of rows");
      int k = (int)(*pending_torus)[0].size();
      Mat rows(rec.algebra.n, k);
      for (int i = 0; i < rec.algebra.n; ++i) {
        if ((int)(*pending_torus)[i].size() != k)
          throw error("line " + std::to_string(lineno) + ": ragged torus rows");
        for (int j = 0; j < k; ++j) rows(i, j) = (*pending_torus)[i][j];
      }
      rec.torus_rows = rows;
    }
    rec.expected = pending_expect;
    pending_params.clear();
    pending_sigma.reset();
    pending_sigma_params.reset();
    pending_torus.reset();
    pending_expect.reset();
    records.push_back(std::move(rec));
  }
  std::set<std::string> names;
  for (auto& r : records)
    if (!names.insert(r.name).second) throw error("duplicate record name '" + r.name + "'");
  return records;
}

struct RecordOutcome {
  enum Kind { ByGrading, ByFiltration, BySigma, Unresolved, Failed };
  std::string name;
  std::string source;
  Kind kind = Unresolved;
  std::optional<WeightSequence> sequence;
  std::optional<FiltrationWitness> witness;
  std::optional<std::vector<int>> sigma;
  std::optional<MetricSpec> metric;
  bool formula_zero = false;
  bool koszul_zero = false;
  bool sigma_generic = false;
  std::string diagnostics;
  bool expectation_met = true;
  double seconds = 0;
};

struct BatchOptions {
  std::vector<char> strategy = {'g', 'f', 's'};
  int jobs = 1;
  unsigned long seed = 0;
  int samples = 5;
};

struct Report {
  std::vector<RecordOutcome> outcomes;
  int resolved() const {
    int c = 0;
    for (auto& o : outcomes)
      if (o.kind == RecordOutcome::ByGrading || o.kind == RecordOutcome::ByFiltration ||
          o.kind == RecordOutcome::BySigma)
        ++c;
    return c;
  }
  bool all_expectations_met() const {
    for (auto& o : outcomes)
      if (!o.expectation_met) return false;
    return true;
  }
};

namespace detail {

inline RecordOutcome run_record(const AlgebraRecord& rec, const BatchOptions& opt,
                                unsigned long record_seed) {
  auto t0 = std::chrono::steady_clock::now();
  RecordOutcome out;
  out.name = rec.name;
  out.source = rec.source;
  auto finish = [&](RecordOutcome::Kind kind) {
    out.kind = kind;
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (rec.expected) {
      auto want = *rec.expected;
      out.expectation_met = (want == "grading" && kind == RecordOutcome::ByGrading) ||
                            (want == "filtration" && kind == RecordOutcome::ByFiltration) ||
                            (want == "sigma" && kind == RecordOutcome::BySigma) ||
                            (want == "none" && kind == RecordOutcome::Unresolved);
    }
    return out;
  };
  auto violations = jacobi_check(rec.algebra);
  if (!violations.empty()) {
    out.diagnostics = "jacobi fails: d^2 e^" + std::to_string(violations[0].k) + " != 0";
    return finish(RecordOutcome::Failed);
  }
  std::string notes;
  for (char step : opt.strategy) {
    try {
      if (step == 'g') {
        DiagonalTorus torus;
        if (rec.torus_rows) {
          torus.n = rec.algebra.n;
          torus.rank = rec.torus_rows->cols();
          torus.weight_rows = *rec.torus_rows;
        } else {
          torus = diagonal_derivations(rec.algebra);
        }
        auto grading = grading_from_torus(rec.algebra, torus);
        if (auto seq = first_g_sequence(grading)) {
          auto metric = build_grading_metric(rec.algebra, grading, *seq);
          auto verdict = verify_ricci_flat(rec.algebra, metric);
          if (!verdict.is_flat) throw error("grading metric not flat (internal)");
          out.sequence = *seq;
          out.metric = metric;
          out.formula_zero = out.koszul_zero = true;
          return finish(RecordOutcome::ByGrading);
        }
        auto obstructions = g1_obstructions(grading);
        if (!obstructions.empty()) {
          notes += "no weight sequence; cyclic sum relations:";
          for (auto& o : obstructions) notes += " " + o.str();
          notes += ". ";
        } else {
          notes += "no weight sequence for the diagonal torus. ";
        }
      } else if (step == 'f') {
        if (auto witness = search_filtration(rec.algebra)) {
          auto metric = build_filtration_metric(rec.algebra, *witness);
          auto verdict = verify_ricci_flat(rec.algebra, metric);
          if (!verdict.is_flat) throw error("filtration metric not flat (internal)");
          out.witness = *witness;
          out.metric = metric;
          out.formula_zero = out.koszul_zero = true;
          return finish(RecordOutcome::ByFiltration);
        }
        notes += "no adapted filtration in this basis. ";
      } else if (step == 's') {
        if (!rec.sigma) continue;
        if (rec.sigma_params) {
          auto metric = sigma_diagonal_metric(rec.algebra.n, *rec.sigma, *rec.sigma_params);
          auto verdict = verify_ricci_flat(rec.algebra, metric);
          if (verdict.is_flat) {
            out.sigma = rec.sigma;
            out.metric = metric;
            out.formula_zero = out.koszul_zero = true;
            return finish(RecordOutcome::BySigma);
          }
          notes += "supplied sigma metric is not Ricci-flat. ";
        } else {
          std::mt19937_64 rng(record_seed);
          auto verdict = verify_ricci_flat_generic(rec.algebra, *rec.sigma, opt.samples, rng);
          if (verdict.is_flat) {
            out.sigma = rec.sigma;
            out.sigma_generic = true;
            // keep one concrete metric for the report
            std::mt19937_64 rng2(record_seed);
            RatVec params(rec.algebra.n);
            for (int i = 1; i <= rec.algebra.n; ++i) {
              if (!params[i - 1].is_zero()) continue;
              Rat v = random_rational(rng2);
              params[i - 1] = v;
              params[(*rec.sigma)[i - 1] - 1] = v;
            }
            out.metric = sigma_diagonal_metric(rec.algebra.n, *rec.sigma, params);
            out.formula_zero = out.koszul_zero = true;
            return finish(RecordOutcome::BySigma);
          }
          notes += "sigma ansatz fails at sampled parameters. ";
        }
      }
    } catch (const std::exception& e) {
      out.diagnostics = notes + "error: " + e.what();
      return finish(RecordOutcome::Failed);
    }
  }
  out.diagnostics = notes + "unresolved";
  return finish(RecordOutcome::Unresolved);
}

}  // namespace detail

/// Runs the strategy chain on every record. Deterministic: outcomes depend
/// only on the input order and seed, not on the parallelism degree.
inline Report run_batch(const std::vector<AlgebraRecord>& records, const BatchOptions& opt) {
  Report report;
  report.outcomes.resize(records.size());
  auto seed_of = [&](size_t i) { return opt.seed * 1000003ul + 7919ul * (i + 1); };
  int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    for (size_t i = 0; i < records.size(); ++i)
      report.outcomes[i] = detail::run_record(records[i], opt, seed_of(i));
    return report;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> workers;
  for (int t = 0; t < jobs; ++t)
    workers.emplace_back([&]() {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= records.size()) return;
        report.outcomes[i] = detail::run_record(records[i], opt, seed_of(i));
      }
    });
  for (auto& w : workers) w.join();
  return report;
}

inline const char* outcome_name(RecordOutcome::Kind k) {
  switch (k) {
    case RecordOutcome::ByGrading: return "grading";
    case RecordOutcome::ByFiltration: return "filtration";
    case RecordOutcome::BySigma: return "sigma";
    case RecordOutcome::Unresolved: return "unresolved";
    default: return "failed";
  }
}

inline std::string report_text(const Report& report) {
  std::ostringstream os;
  for (auto& o : report.outcomes) {
    os << o.name << ": " << outcome_name(o.kind);
    if (o.sequence)
      os << "  weights " << o.sequence->weights_str() << "  basis " << o.sequence->basis_str();
    if (o.witness)
      os << "  weights " << o.witness->weights_str() << "  basis " << o.witness->basis_str();
    if (o.sigma) {
      os << "  sigma";
      for (int i = 1; i <= (int)o.sigma->size(); ++i)
        if ((*o.sigma)[i - 1] > i) os << " " << i << (*o.sigma)[i - 1];
      if (o.sigma_generic) os << "  generically flat (probabilistic)";
    }
    if (o.metric) os << "  metric " << metric_human(o.metric->g);
    if (!o.diagnostics.empty()) os << "  [" << o.diagnostics << "]";
    if (o.metric) os << "  certificate formula_zero=" << (o.formula_zero ? "yes" : "no")
                     << " koszul_zero=" << (o.koszul_zero ? "yes" : "no");
    if (!o.expectation_met) os << "  EXPECTATION-MISMATCH";
    os << "\n";
  }
  os << report.resolved() << "/" << report.outcomes.size() << " resolved\n";
  return os.str();
}

inline nlohmann::json metric_json(const Mat& g) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < g.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < g.cols(); ++j) row.push_back(g(i, j).str());
    rows.push_back(row);
  }
  return rows;
}

inline Mat metric_from_json(const nlohmann::json& rows) {
  int n = (int)rows.size();
  Mat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = Rat::parse(rows[i][j].get<std::string>());
  return g;
}

inline nlohmann::json report_json(const Report& report) {
  nlohmann::json out = nlohmann::json::array();
  for (auto& o : report.outcomes) {
    nlohmann::json rec;
    rec["name"] = o.name;
    rec["outcome"] = outcome_name(o.kind);
    if (o.sequence) {
      rec["weights"] = o.sequence->weights_str();
      rec["adapted_basis"] = o.sequence->basis_str();
    }
    if (o.witness) {
      rec["weights"] = o.witness->weights_str();
      rec["adapted_basis"] = o.witness->basis_str();
    }
    if (o.sigma) {
      std::string s;
      for (int i = 1; i <= (int)o.sigma->size(); ++i)
        if ((*o.sigma)[i - 1] > i) s += (s.empty() ? "" : " ") + std::to_string(i) +
                                        std::to_string((*o.sigma)[i - 1]);
      rec["sigma"] = s;
    }
    if (o.metric) {
      rec["metric"] = metric_json(o.metric->g);
      rec["certificate"] = {{"formula_zero", o.formula_zero}, {"koszul_zero", o.koszul_zero}};
    }
    if (!o.diagnostics.empty()) rec["diagnostics"] = o.diagnostics;
    out.push_back(rec);
  }
  return out;
}

inline std::string report_latex(const Report& report) {
  std::ostringstream os;
  os << "\\begin{tabular}{lll}\n";
  for (auto& o : report.outcomes) {
    os << o.source << " & ";
    if (o.sequence)
      os << o.sequence->basis_str() << " & " << o.sequence->weights_str();
    else if (o.witness)
      os << o.witness->basis_str() << " & " << o.witness->weights_str();
    else if (o.sigma) {
      os << " & ";
      for (int i = 1; i <= (int)o.sigma->size(); ++i)
        if ((*o.sigma)[i - 1] > i) os << i << (*o.sigma)[i - 1] << "\\ ";
    } else {
      os << " & " << outcome_name(o.kind);
    }
    os << " \\\\\n";
  }
  os << "\\end{tabular}\n";
  return os.str();
}

}  // namespace nilflat
