#ifndef FINESETS_CONJECTURES_HPP
#define FINESETS_CONJECTURES_HPP

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "finesets/checks.hpp"

namespace finesets {

struct ConjectureInfo {
  std::string id;
  std::string summary;
  int min_n;
  int max_n;
  CheckFn step;
};

namespace conj_detail {

using checks_detail::schur_text;
using checks_detail::verdict;

inline CheckReport rotated_one_column(int n) {
  Tally t("conj-10-1", n);
  PermMultiset c = cyclic_group(n);
  for (const SignVector& v : checks_detail::sign_vectors_up_to(n - 1)) {
    t.compare(sign_vector_to_string(v), verdict(product_qsym(c, checks_detail::one_column_class(v, n))), "fine");
  }
  return t.finish();
}

inline CheckReport rotation_sides(int n) {
  Tally t("conj-10-2", n);
  PermMultiset c = cyclic_group(n);
  for (const DescSet& j : all_desc_sets(n - 1)) {
    PermMultiset d = embed(descent_class(n - 1, j, DescentKind::Dinv), n);
    t.compare("J=" + j.to_string(), product_qsym(c, d).to_string(), product_qsym(d, c).to_string());
  }
  return t.finish();
}

inline CheckReport descent_class_sides(int n) {
  Tally t("conj-10-3", n);
  std::vector<PermMultiset> ds;
  std::vector<DescSet> js = all_desc_sets(n);
  for (const DescSet& j : js) ds.push_back(descent_class(n, j, DescentKind::Dinv));
  for (const NamedSet& b : fine_battery(n)) {
    for (std::size_t i = 0; i < js.size(); ++i) {
      t.compare(b.label + " J=" + js[i].to_string(), product_qsym(ds[i], b.set).to_string(),
                product_qsym(b.set, ds[i]).to_string());
    }
  }
  return t.finish();
}

inline CheckReport knuth_products(int n) {
  Tally t("knuth-product", n);
  std::vector<std::pair<std::string, PermMultiset>> classes;
  std::vector<SchurExpansion> q;
  for (auto& [tab, cls] : all_knuth_classes(n)) {
    classes.emplace_back(cls.begin()->first.to_string(), cls);
    q.push_back(expect_symmetric(qsym_of(cls)));
  }
  for (std::size_t a = 0; a < classes.size(); ++a) {
    for (std::size_t b = 0; b < classes.size(); ++b) {
      t.compare(classes[a].first + " * " + classes[b].first,
                schur_text(product_qsym(classes[a].second, classes[b].second)), kronecker(q[a], q[b]).to_string());
      if (t.failed()) return t.finish();
    }
  }
  return t.finish();
}

inline std::vector<GridMatrix> small_matrices() {
  std::vector<GridMatrix> out;
  for (int rows = 1; rows <= 2; ++rows) {
    for (int cols = 1; cols <= 2; ++cols) {
      int cells = rows * cols;
      int total = 1;
      for (int i = 0; i < cells; ++i) total *= 3;
      for (int code = 1; code < total; ++code) {
        std::vector<std::vector<int>> m(rows, std::vector<int>(cols));
        int c = code;
        for (int i = 0; i < cells; ++i) {
          m[i / cols][i % cols] = c % 3 - 1;
          c /= 3;
        }
        bool empty_line = false;
        for (int r = 0; r < rows; ++r) {
          bool any = false;
          for (int x = 0; x < cols; ++x) any = any || m[r][x] != 0;
          empty_line = empty_line || !any;
        }
        for (int x = 0; x < cols; ++x) {
          bool any = false;
          for (int r = 0; r < rows; ++r) any = any || m[r][x] != 0;
          empty_line = empty_line || !any;
        }
        if (!empty_line) out.push_back(GridMatrix::from_rows(m));
      }
    }
  }
  return out;
}

inline CheckReport restriction(int n) {
  Tally t("restriction", n);
  for (const GridMatrix& m : small_matrices()) {
    if (verdict(qsym_of(enumerate_grid(m, n))) != "fine") continue;
    t.compare(m.to_string(), verdict(qsym_of(enumerate_grid(m, n - 1))), "fine");
  }
  return t.finish();
}

}  // namespace conj_detail

inline const std::vector<ConjectureInfo>& conjecture_registry() {
  static const std::vector<ConjectureInfo> registry = {
      {"conj-10-1", "cycles times any one-column class are fine", 2, 8, conj_detail::rotated_one_column},
      {"conj-10-2", "rotating inverse descent classes from either side agrees", 2, 9, conj_detail::rotation_sides},
      {"conj-10-3", "inverse descent classes commute with fine sets in distribution", 1, 7,
       conj_detail::descent_class_sides},
      {"knuth-product", "product of two Knuth classes follows the Kronecker product", 1, 6,
       conj_detail::knuth_products},
      {"restriction", "a fine grid class stays fine one degree lower", 2, 8, conj_detail::restriction},
  };
  return registry;
}

inline const ConjectureInfo& find_conjecture(const std::string& id) {
  for (const ConjectureInfo& c : conjecture_registry()) {
    if (c.id == id) return c;
  }
  throw DomainError("unknown conjecture '" + id + "'");
}

inline std::optional<std::filesystem::path> default_results_directory() {
  if (const char* d = std::getenv("FINESETS_RESULTS_DIR"); d != nullptr && *d != '\0') return std::filesystem::path(d);
  auto cache = default_cache_directory();
  if (!cache) return std::nullopt;
  return *cache / "results";
}

/// One JSON file per (conjecture, n). Files are never overwritten; a rerun must reproduce them.
class ResultStore {
 public:
  explicit ResultStore(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

  std::filesystem::path file_for(const std::string& id, int n) const {
    if (!dir_) throw Error("no results directory configured");
    return *dir_ / (id + "_n" + std::to_string(n) + ".json");
  }

  /// Returns true when the result was newly stored, false when it matched a stored one.
  bool record(const CheckReport& r) {
    if (!dir_) return true;
    nlohmann::json j = to_json(r);
    j.erase("elapsed_ms");
    std::filesystem::path f = file_for(r.check_id, r.n);
    if (create_exclusive(f, j.dump(2) + "\n")) return true;
    std::ifstream in(f);
    nlohmann::json stored = nlohmann::json::parse(in, nullptr, false);
    if (stored != j) throw Error("stored result " + f.string() + " differs from the recomputed one");
    return false;
  }

 private:
  std::optional<std::filesystem::path> dir_;
};

/// Checks degrees min_n..max_n in order and stops at the first failure.
inline CheckReport scan_conjecture(const std::string& id, int max_n, ResultStore& store,
                                   const std::function<void(const CheckReport&)>& progress = {}) {
  const ConjectureInfo& c = find_conjecture(id);
  if (max_n < c.min_n) throw DomainError("scan of " + id + " needs --max-n >= " + std::to_string(c.min_n));
  if (max_n > c.max_n) {
    throw ResourceError("scan of " + id + " is budgeted up to n=" + std::to_string(c.max_n));
  }
  auto start = std::chrono::steady_clock::now();
  CheckReport last;
  for (int n = c.min_n; n <= max_n; ++n) {
    last = c.step(n);
    store.record(last);
    if (progress) progress(last);
    if (last.status == CheckStatus::refuted) break;
  }
  if (last.status != CheckStatus::refuted) {
    last.status = CheckStatus::holds_up_to;
    last.notes = "holds for n=" + std::to_string(c.min_n) + ".." + std::to_string(max_n) + "; " + last.notes;
  }
  last.elapsed_ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
  return last;
}

inline CheckReport scan_conjecture(const std::string& id, int max_n) {
  ResultStore store(default_results_directory());
  return scan_conjecture(id, max_n, store);
}

}  // namespace finesets

#endif  // FINESETS_CONJECTURES_HPP
