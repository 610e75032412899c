// Command-line front end; talks to the library through the C interface
// only.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "mu2.h"

namespace {

struct FormulaHandle {
  mu2_formula* f = nullptr;
  ~FormulaHandle() { mu2_formula_free(f); }
};

struct StringHandle {
  char* s = nullptr;
  ~StringHandle() { mu2_string_free(s); }
};

// Semantic exit codes: 0 ok/isomorphic, 1 not isomorphic, 2 unreadable or
// malformed input, 3 invalid request, 4 not minimally unsatisfiable,
// 5 work guard tripped, 6 internal error.
int exit_code_of(int rc) {
  switch (rc) {
    case MU2_OK:
      return 0;
    case MU2_ERR_PARSE:
      return 2;
    case MU2_ERR_INVALID:
      return 3;
    case MU2_ERR_NOT_MU:
      return 4;
    case MU2_ERR_CAP:
      return 5;
    default:
      return 6;
  }
}

int report(int rc) {
  std::cerr << "error: " << mu2_last_error() << "\n";
  return exit_code_of(rc);
}

int load(const std::string& path, FormulaHandle& h) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    return 2;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  int rc = mu2_parse(ss.str().c_str(), &h.f);
  if (rc != MU2_OK) return report(rc);
  return 0;
}

int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << "\n";
    return 0;
  }
  std::ofstream out(path);
  out << text << "\n";
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return 6;
  }
  return 0;
}

int run_classify(const std::string& path, const std::string& json_path,
                 bool brute) {
  FormulaHandle f;
  if (int rc = load(path, f)) return rc;
  StringHandle s;
  int rc = mu2_classify(f.f, brute ? 1 : 0, &s.s);
  if (rc != MU2_OK) return report(rc);
  return emit(s.s, json_path);
}

int run_iso(const std::string& a, const std::string& b, bool brute) {
  FormulaHandle f, g;
  if (int rc = load(a, f)) return rc;
  if (int rc = load(b, g)) return rc;
  int iso = 0;
  int rc = mu2_isomorphic(f.f, g.f, brute ? 1 : 0, &iso);
  if (rc != MU2_OK) return report(rc);
  std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
  return iso ? 0 : 1;
}

int run_canon(const std::string& path) {
  FormulaHandle f;
  if (int rc = load(path, f)) return rc;
  StringHandle s;
  int rc = mu2_canonical(f.f, &s.s);
  if (rc != MU2_OK) return report(rc);
  std::cout << s.s;
  return 0;
}

int run_auto(const std::string& path, const std::string& json_path,
             bool brute) {
  FormulaHandle f;
  if (int rc = load(path, f)) return rc;
  StringHandle s;
  int rc = mu2_automorphisms(f.f, brute ? 1 : 0, &s.s);
  if (rc != MU2_OK) return report(rc);
  return emit(s.s, json_path);
}

int run_check(const std::string& path, const std::string& json_path) {
  FormulaHandle f;
  if (int rc = load(path, f)) return rc;
  StringHandle s;
  int rc = mu2_check(f.f, &s.s);
  if (rc != MU2_OK) return report(rc);
  return emit(s.s, json_path);
}

int run_dot(const std::string& path, const std::string& dot_path,
            bool smoothed) {
  FormulaHandle f;
  if (int rc = load(path, f)) return rc;
  StringHandle s;
  int rc = smoothed ? mu2_smooth_dot(f.f, &s.s) : mu2_implication_dot(f.f, &s.s);
  if (rc != MU2_OK) return report(rc);
  return emit(s.s, dot_path);
}

int run_gen(int k, int n, const std::string& out_dir, bool force) {
  StringHandle s;
  int rc = mu2_generate(k, n, force ? 1 : 0, &s.s);
  if (rc != MU2_OK) return report(rc);
  if (out_dir.empty()) {
    std::cout << s.s << "\n";
    return 0;
  }
  nlohmann::json j = nlohmann::json::parse(s.s);
  std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  int i = 0;
  for (const auto& formula : j["formulas"]) {
    std::filesystem::path file =
        dir / ("k" + std::to_string(k) + "_n" + std::to_string(n) + "_" +
               std::to_string(i++) + ".cnf");
    std::ofstream out(file);
    out << formula.get<std::string>();
    if (!out) {
      std::cerr << "error: cannot write " << file.string() << "\n";
      return 6;
    }
  }
  std::cout << "wrote " << i << " formulas to " << dir.string() << "\n";
  return 0;
}

int run_count(int k, int n) {
  long count = 0;
  int rc = mu2_count(k, n, 0, &count);
  if (rc != MU2_OK) return report(rc);
  std::cout << count << "\n";
  return 0;
}

int run_count_d1(int n) {
  long count = 0;
  int rc = mu2_count_d1(n, &count);
  if (rc != MU2_OK) return report(rc);
  std::cout << count << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* cap = std::getenv("MU2_CYCLE_CAP"))
    mu2_set_cycle_cap(std::atol(cap));

  CLI::App app{"Classifier for minimally unsatisfiable 2-CNFs"};
  app.require_subcommand(1);
  int result = 0;

  std::string file, file2, json_path, dot_path, out_dir;
  bool brute = false, force = false;
  int k = 0, n = 0, d1n = -1;

  auto* classify = app.add_subcommand("classify", "Classify a formula");
  classify->add_option("file", file, "DIMACS input")->required();
  classify->add_option("--json", json_path, "write the report here");
  classify->add_flag("--brute", brute, "cross-check with brute force");
  classify->callback([&] { result = run_classify(file, json_path, brute); });

  auto* iso = app.add_subcommand("iso", "Decide isomorphism of two formulas");
  iso->add_option("file", file, "DIMACS input")->required();
  iso->add_option("file2", file2, "DIMACS input")->required();
  iso->add_flag("--brute", brute, "cross-check with brute force");
  iso->callback([&] { result = run_iso(file, file2, brute); });

  auto* canon = app.add_subcommand("canon", "Print the canonical form");
  canon->add_option("file", file, "DIMACS input")->required();
  canon->callback([&] { result = run_canon(file); });

  auto* auts = app.add_subcommand("auto", "List the automorphism group");
  auts->add_option("file", file, "DIMACS input")->required();
  auts->add_option("--json", json_path, "write the report here");
  auts->add_flag("--brute", brute, "cross-check with brute force");
  auts->callback([&] { result = run_auto(file, json_path, brute); });

  auto* check = app.add_subcommand("check", "Degree and satisfiability report");
  check->add_option("file", file, "DIMACS input")->required();
  check->add_option("--json", json_path, "write the report here");
  check->callback([&] { result = run_check(file, json_path); });

  auto* smooth = app.add_subcommand("smooth",
                                    "Smoothed implication multigraph as DOT");
  smooth->add_option("file", file, "DIMACS input")->required();
  smooth->add_option("--dot", dot_path, "write the drawing here");
  smooth->callback([&] { result = run_dot(file, dot_path, true); });

  auto* render = app.add_subcommand("render", "Implication digraph as DOT");
  render->add_option("file", file, "DIMACS input")->required();
  render->add_option("--dot", dot_path, "write the drawing here");
  render->callback([&] { result = run_dot(file, dot_path, false); });

  auto* gen = app.add_subcommand("gen", "Enumerate isomorphism classes");
  gen->add_option("k", k, "deficiency")->required();
  gen->add_option("n", n, "number of variables")->required();
  gen->add_option("--out", out_dir, "write one DIMACS file per class here");
  gen->add_flag("--force", force, "lift the enumeration range caps");
  gen->callback([&] { result = run_gen(k, n, out_dir, force); });

  auto* count = app.add_subcommand("count", "Count isomorphism classes");
  auto* count_k = count->add_option("k", k, "deficiency");
  auto* count_n = count->add_option("n", n, "number of variables");
  auto* d1 = count->add_option("--d1", d1n, "closed-form count for deficiency 1");
  count->callback([&] {
    if (d1->count() > 0) {
      result = run_count_d1(d1n);
    } else if (count_k->count() > 0 && count_n->count() > 0) {
      result = run_count(k, n);
    } else {
      std::cerr << "error: need either --d1 <n> or <k> <n>\n";
      result = 3;
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }
  return result;
}
