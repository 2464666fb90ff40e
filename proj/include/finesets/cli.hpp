#ifndef FINESETS_CLI_HPP
#define FINESETS_CLI_HPP

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <ostream>

#include "finesets/conjectures.hpp"
#include "finesets/expr.hpp"

namespace finesets::cli {

inline std::string monomial_text(const std::map<std::vector<int>, mpz_class>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < it->first.size(); ++i) {
      int e = it->first[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += it->second.get_str();
    } else {
      out += it->second == 1 ? mono : it->second.get_str() + "*" + mono;
    }
  }
  return out;
}

inline int exit_code(CheckStatus s) {
  switch (s) {
    case CheckStatus::verified:
    case CheckStatus::holds_up_to:
      return 0;
    case CheckStatus::refuted:
      return 2;
    case CheckStatus::resource_skipped:
      return 1;
  }
  return 1;
}

inline void print_report(const CheckReport& r, std::ostream& out) {
  out << "check " << r.check_id << " n=" << r.n << "\n";
  out << "lhs: " << r.lhs << "\n";
  out << "rhs: " << r.rhs << "\n";
  out << "notes: " << r.notes << "\n";
  out << "elapsed: " << r.elapsed_ms << " ms\n";
  out << "status: " << to_string(r.status) << "\n";
}

inline void write_json(const std::string& path, const CheckReport& r) {
  if (!atomic_write(path, to_json(r).dump(2) + "\n")) throw Error("cannot write " + path);
}

/// Runs the command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quasisymmetric functions of permutation sets"};
  app.require_subcommand(1);

  std::string expr;
  bool schur = false;
  int n_vars = 0;
  CLI::App* qsym_cmd = app.add_subcommand("qsym", "F-expansion of a set expression");
  qsym_cmd->add_option("expr", expr, "set expression")->required();
  qsym_cmd->add_flag("--schur", schur, "print the Schur expansion");
  qsym_cmd->add_option("--n-vars", n_vars, "also print the monomial expansion in this many variables")
      ->check(CLI::Range(1, kMaxDegree));

  std::string matrix;
  int grid_n = 0;
  CLI::App* grid_cmd = app.add_subcommand("grid", "grid classes");
  grid_cmd->require_subcommand(1);
  CLI::App* enum_cmd = grid_cmd->add_subcommand("enum", "list the grid class of a matrix");
  enum_cmd->add_option("matrix", matrix, "matrix rows separated by '/'")->required();
  enum_cmd->add_option("--n", grid_n, "degree")->required()->check(CLI::Range(1, kMaxDegree));

  std::string check_id;
  int check_n = 0;
  std::string json_path;
  CLI::App* check_cmd = app.add_subcommand("check", "run a named check");
  check_cmd->add_option("id", check_id, "check id")->required();
  check_cmd->add_option("--n", check_n, "degree (default: the check's default)");
  check_cmd->add_option("--json", json_path, "write the report as JSON");

  std::string conj_id;
  int max_n = 0;
  CLI::App* scan_cmd = app.add_subcommand("scan", "scan a conjecture over increasing n");
  scan_cmd->add_option("id", conj_id, "conjecture id")->required();
  scan_cmd->add_option("--max-n", max_n, "largest degree")->required();
  scan_cmd->add_option("--json", json_path, "write the final report as JSON");

  std::string action;
  int cache_n = 0;
  CLI::App* cache_cmd = app.add_subcommand("cache", "descent table cache");
  cache_cmd->add_option("action", action, "rebuild or verify")->required()->check(CLI::IsMember({"rebuild", "verify"}));
  cache_cmd->add_option("--n", cache_n, "largest degree")->required()->check(CLI::Range(1, 14));

  CLI::App* list_cmd = app.add_subcommand("list-checks", "list checks and conjectures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*qsym_cmd) {
      QSym q = qsym_of(evaluate_expression(expr));
      if (schur) {
        out << checks_detail::schur_text(q) << "\n";
      } else {
        out << q.to_string() << "\n";
      }
      if (n_vars > 0) out << monomial_text(monomial_expansion(q, n_vars)) << "\n";
      return 0;
    }
    if (*grid_cmd) {
      PermMultiset g = enumerate_grid(GridMatrix::parse(matrix), grid_n);
      for (const auto& [p, m] : g) out << p.to_string() << "\n";
      out << g.distinct_size() << " permutations\n";
      return 0;
    }
    if (*check_cmd) {
      int n = check_n > 0 ? check_n : find_check(check_id).default_n;
      CheckReport r = run_check(check_id, n);
      print_report(r, out);
      if (!json_path.empty()) write_json(json_path, r);
      return exit_code(r.status);
    }
    if (*scan_cmd) {
      ResultStore store(default_results_directory());
      CheckReport r = scan_conjecture(conj_id, max_n, store, [&](const CheckReport& step) {
        out << "n=" << step.n << ": " << to_string(step.status) << " (" << step.elapsed_ms << " ms)\n";
      });
      print_report(r, out);
      if (!json_path.empty()) write_json(json_path, r);
      return exit_code(r.status);
    }
    if (*cache_cmd) {
      DescentTableStore& store = DescentTableStore::global();
      bool ok = true;
      for (int n = 1; n <= cache_n; ++n) {
        if (action == "rebuild") {
          store.rebuild(n);
          out << "dtable n=" << n << ": rebuilt\n";
        } else {
          CacheStatus s = store.verify(n);
          ok = ok && s == CacheStatus::ok;
          out << "dtable n=" << n << ": " << to_string(s) << "\n";
        }
      }
      return ok ? 0 : 1;
    }
    if (*list_cmd) {
      for (const CheckInfo& c : check_registry()) {
        out << c.id << "  n=" << c.min_n << ".." << c.max_n << " default " << c.default_n << "  " << c.summary
            << "\n";
      }
      for (const ConjectureInfo& c : conjecture_registry()) {
        out << c.id << "  scan n=" << c.min_n << ".." << c.max_n << "  " << c.summary << "\n";
      }
      return 0;
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace finesets::cli

#endif  // FINESETS_CLI_HPP
