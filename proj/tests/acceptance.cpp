// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <iostream>
#include <sstream>

#include "finesets/cli.hpp"
#include "finesets/conjectures.hpp"

using namespace finesets;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

int failures = 0;

void report(int id, const std::string& title, Outcome o, double elapsed, double limit) {
  if (o.ok && elapsed >= limit) o.fail("took " + std::to_string(elapsed) + " s, limit " + std::to_string(limit) + " s");
  std::ostringstream line;
  line << (o.ok ? "PASS" : "FAIL") << " criterion " << id << ": " << title;
  line.setf(std::ios::fixed);
  line.precision(1);
  line << " [" << elapsed << " s / " << limit << " s]";
  if (!o.detail.empty()) line << " " << o.detail;
  std::cout << line.str() << std::endl;
  if (!o.ok) ++failures;
}

void expect_verified(Outcome& o, const std::string& id, int n, double per_check_limit = 1e9) {
  auto t = Clock::now();
  CheckReport r = run_check(id, n);
  double s = seconds_since(t);
  if (r.status != CheckStatus::verified) o.fail(id + " n=" + std::to_string(n) + ": " + r.notes);
  if (r.status == CheckStatus::verified && r.lhs != r.rhs) o.fail(id + " verified with differing sides");
  if (s >= per_check_limit) o.fail(id + " n=" + std::to_string(n) + " took " + std::to_string(s) + " s");
}

void closed_forms_criterion() {
  auto t = Clock::now();
  Outcome o;
  for (int n = 3; n <= 7; ++n) {
    for (const char* id : {"colayer-hooks", "qsh-formula", "ll-formula", "arc-formula", "prop-R2", "j-formula",
                           "k-formula", "cor-hrc"}) {
      expect_verified(o, id, n, 10.0);
    }
  }
  report(1, "closed-form Schur expansions n=3..7, each check under 10 s", o, seconds_since(t), 5 * 9 * 10.0);
}

void cardinality_criterion() {
  auto t = Clock::now();
  Outcome o;
  for (int n = 3; n <= 10; ++n) {
    expect_verified(o, "kj-cardinality", n);
    expect_verified(o, "ll-sh-cardinality", n);
  }
  report(2, "cardinalities of J, K, L and ++ classes n=3..10", o, seconds_since(t), 60.0);
}

void kronecker_criterion() {
  auto t = Clock::now();
  Outcome o;
  expect_verified(o, "thm-main-2", 5);
  CheckReport six = run_check("thm-main-2", 6);
  if (six.status != CheckStatus::verified) o.fail("n=6: " + six.notes);
  if (six.notes.find("sample of 64 pairs") == std::string::npos) o.fail("n=6 sample smaller than expected");
  report(3, "Kronecker identity over the fine battery, n=5 exhaustive and n=6 sampled", o, seconds_since(t), 600.0);
}

void horizontal_criterion() {
  auto t = Clock::now();
  Outcome o;
  for (int n = 5; n <= 7; ++n) expect_verified(o, "thm-horizontal1", n);
  report(4, "horizontal rotation of inverse descent classes with bijection audit, n=5..7", o, seconds_since(t), 120.0);
}

void cyclic_criterion() {
  auto t = Clock::now();
  Outcome o;
  for (int n = 1; n <= 7; ++n) expect_verified(o, "cor-rotated-shuffles2", n);
  for (int n = 2; n <= 7; ++n) {
    expect_verified(o, "cor-cyc-fine", n);
    expect_verified(o, "eq-recurrence", n);
  }
  report(5, "cyclic descent classes fine for all k and recurrence, n<=7", o, seconds_since(t), 300.0);
}

void counterexample_criterion() {
  auto t = Clock::now();
  Outcome o;
  expect_verified(o, "cor-equid-rotation", 3);
  expect_verified(o, "neg-arc-grid", 4);
  expect_verified(o, "neg-knuth-rot", 5);
  expect_verified(o, "neg-stack", 6);
  expect_verified(o, "neg-product", 4);
  ResultStore scratch(std::nullopt);
  if (scan_conjecture("knuth-product", 4, scratch).status != CheckStatus::holds_up_to) o.fail("Knuth pairs fail at 4");
  CheckReport five = scan_conjecture("knuth-product", 5, scratch);
  if (five.status != CheckStatus::refuted || five.n != 5) o.fail("Knuth pairs do not fail at 5");
  report(6, "counterexamples reproduce", o, seconds_since(t), 600.0);
}

void character_criterion() {
  auto t = Clock::now();
  Outcome o;
  std::size_t compared = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const NamedSet& b : fine_battery(n)) {
      SchurExpansion e = expect_symmetric(qsym_of(b.set));
      for (const Partition& mu : partitions_of(n)) {
        mpq_class want = character_value(e, mu);
        mpz_class got = char_from_signed_formula(b.set, Composition(mu.parts()));
        ++compared;
        if (want != got) o.fail(b.label + " mu=" + mu.to_string());
      }
    }
  }
  o.detail = o.ok ? "(" + std::to_string(compared) + " values)" : o.detail;
  report(7, "signed modal formula equals Murnaghan-Nakayama, battery n<=6", o, seconds_since(t), 300.0);
}

void enumerator_criterion() {
  auto t = Clock::now();
  Outcome o;
  auto agree = [&](const std::string& what, const PermMultiset& enumerated, int n, auto&& pred) {
    if (enumerated != filter_sn(n, pred)) o.fail(what + " n=" + std::to_string(n));
  };
  for (int n = 1; n <= 7; ++n) {
    for (const SignVector& v : checks_detail::sign_vectors_up_to(std::min(5, n))) {
      agree("one-column " + sign_vector_to_string(v), enumerate_grid(one_column_matrix(v), n), n,
            [&](const Permutation& p) { return in_one_column(v, p); });
    }
    for (int k = 1; k <= n; ++k) {
      agree("plus-k", enumerate_grid(one_column_matrix(SignVector(k, 1)), n), n,
            [&](const Permutation& p) { return in_plus_k(k, p); });
      agree("minus-k", enumerate_grid(one_column_matrix(SignVector(k, -1)), n), n,
            [&](const Permutation& p) { return in_minus_k(k, p); });
      agree("cyclic descents", enumerate_grid(cyclic_descent_matrix(k), n), n,
            [&](const Permutation& p) { return in_cyclic_descent_class(k, p); });
      agree("colayered", enumerate_grid(identity_matrix(k), n), n,
            [&](const Permutation& p) { return in_colayered(k, p); });
    }
    agree("left unimodal", enumerate_grid(named_grids::left_unimodal(), n), n, in_left_unimodal);
    PermMultiset arcs =
        multiset_union(enumerate_grid(named_grids::arc_first(), n), enumerate_grid(named_grids::arc_second(), n))
            .underlying_set();
    agree("arc", arcs, n, is_arc);
  }
  for (int n = 1; n <= 6; ++n) {
    expect_verified(o, "prop-prod-onecol", n);
    expect_verified(o, "cor-star", n);
  }
  report(8, "grid enumerator against membership predicates n<=7, stacking and star products n<=6", o,
         seconds_since(t), 600.0);
}

void conjecture_criterion() {
  auto t = Clock::now();
  Outcome o;
  std::string summary;
  for (const char* id : {"conj-10-1", "conj-10-2", "conj-10-3"}) {
    CheckReport r = scan_conjecture(id, 7);
    summary += std::string(" ") + id + "=" + to_string(r.status) + "@" + std::to_string(r.n);
    if (r.status == CheckStatus::refuted) {
      if (r.notes.find("witness: ") == std::string::npos) o.fail(std::string(id) + " refuted without witness");
    } else if (r.status != CheckStatus::holds_up_to || r.n < 6) {
      o.fail(std::string(id) + " did not reach n=6");
    }
  }
  std::ostringstream out, err;
  const char* argv[] = {"finesets", "scan", "knuth-product", "--max-n", "5"};
  int code = cli::run(5, argv, out, err);
  if (code != 2) o.fail("refuted scan exited with " + std::to_string(code));
  summary += " knuth-product exit=" + std::to_string(code);
  o.detail = o.ok ? summary : o.detail + ";" + summary;
  report(9, "conjecture scans", o, seconds_since(t), 1800.0);
}

}  // namespace

int main() {
  closed_forms_criterion();
  cardinality_criterion();
  kronecker_criterion();
  horizontal_criterion();
  cyclic_criterion();
  counterexample_criterion();
  character_criterion();
  enumerator_criterion();
  conjecture_criterion();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
