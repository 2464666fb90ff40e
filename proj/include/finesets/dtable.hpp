#ifndef FINESETS_DTABLE_HPP
#define FINESETS_DTABLE_HPP

#include <openssl/evp.h>
#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "finesets/partition.hpp"
#include "finesets/permutation.hpp"
#include "finesets/tableau.hpp"

namespace finesets {

/// d_{lambda,D}: number of SYT of shape lambda with descent set D, for every
/// partition of n (descending lex) and every D (dense by D.index()).
struct DescentCountTable {
  int n = 0;
  std::vector<Partition> partitions;
  std::vector<std::vector<std::uint64_t>> counts;

  int partition_index(const Partition& lambda) const {
    for (std::size_t i = 0; i < partitions.size(); ++i) {
      if (partitions[i] == lambda) return static_cast<int>(i);
    }
    throw DomainError("partition " + lambda.to_string() + " is not a partition of " + std::to_string(n));
  }
  std::uint64_t count(const Partition& lambda, const DescSet& d) const {
    return counts[partition_index(lambda)][d.index()];
  }

  friend bool operator==(const DescentCountTable&, const DescentCountTable&) = default;
};

inline DescentCountTable compute_descent_table(int n) {
  if (n < 1 || n > kMaxDegree) throw DomainError("descent table: degree out of range");
  DescentCountTable t;
  t.n = n;
  t.partitions = partitions_of(n);
  std::size_t slots = std::size_t{1} << (n - 1);
  for (const Partition& lambda : t.partitions) {
    std::vector<std::uint64_t> row(slots, 0);
    for_each_syt(SkewShape(lambda), [&](const std::vector<std::vector<int>>&, std::uint32_t bits) { ++row[bits >> 1]; });
    t.counts.push_back(std::move(row));
  }
  return t;
}

// ---------------------------------------------------------------------------
// On-disk form: dtable_<n>.json
// ---------------------------------------------------------------------------

inline std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

/// Entries with nonzero count: partitions in descending lex order, D in canonical order.
inline nlohmann::json descent_table_entries(const DescentCountTable& t) {
  nlohmann::json entries = nlohmann::json::array();
  std::vector<DescSet> sets = all_desc_sets(t.n);
  for (std::size_t i = 0; i < t.partitions.size(); ++i) {
    for (const DescSet& d : sets) {
      std::uint64_t c = t.counts[i][d.index()];
      if (c == 0) continue;
      entries.push_back({{"lambda", t.partitions[i].parts()}, {"D", d.members()}, {"count", c}});
    }
  }
  return entries;
}

inline nlohmann::json descent_table_to_json(const DescentCountTable& t) {
  nlohmann::json entries = descent_table_entries(t);
  nlohmann::json out;
  out["n"] = t.n;
  out["entries"] = entries;
  out["checksum"] = sha256_hex(entries.dump());
  return out;
}

/// Parses and validates a cached table; nullopt on any mismatch.
inline std::optional<DescentCountTable> descent_table_from_json(const nlohmann::json& j, int n) {
  try {
    if (j.at("n").get<int>() != n) return std::nullopt;
    const nlohmann::json& entries = j.at("entries");
    if (sha256_hex(entries.dump()) != j.at("checksum").get<std::string>()) return std::nullopt;
    DescentCountTable t;
    t.n = n;
    t.partitions = partitions_of(n);
    t.counts.assign(t.partitions.size(), std::vector<std::uint64_t>(std::size_t{1} << (n - 1), 0));
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < t.partitions.size(); ++i) index[t.partitions[i].parts()] = i;
    for (const auto& e : entries) {
      auto it = index.find(e.at("lambda").get<std::vector<int>>());
      if (it == index.end()) return std::nullopt;
      std::vector<int> members = e.at("D").get<std::vector<int>>();
      DescSet d = DescSet::from_members(n, members);
      t.counts[it->second][d.index()] = e.at("count").get<std::uint64_t>();
    }
    return t;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

/// FINESETS_CACHE_DIR, else $XDG_CACHE_HOME/finesets, else $HOME/.cache/finesets.
inline std::optional<std::filesystem::path> default_cache_directory() {
  if (const char* d = std::getenv("FINESETS_CACHE_DIR"); d != nullptr && *d != '\0') return std::filesystem::path(d);
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d != nullptr && *d != '\0') {
    return std::filesystem::path(d) / "finesets";
  }
  if (const char* d = std::getenv("HOME"); d != nullptr && *d != '\0') {
    return std::filesystem::path(d) / ".cache" / "finesets";
  }
  return std::nullopt;
}

/// Writes `contents` to a temporary sibling, then renames it over `target`.
inline bool atomic_write(const std::filesystem::path& target, const std::string& contents) {
  std::error_code ec;
  std::filesystem::create_directories(target.parent_path(), ec);
  std::random_device rd;
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(rd());
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) return false;
    f << contents;
    if (!f.flush()) {
      std::filesystem::remove(tmp, ec);
      return false;
    }
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    return false;
  }
  return true;
}

/// Creates a file only if it does not exist yet. Returns false when it already exists.
inline bool create_exclusive(const std::filesystem::path& target, const std::string& contents) {
  std::error_code ec;
  std::filesystem::create_directories(target.parent_path(), ec);
  std::random_device rd;
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(rd());
  {
    std::ofstream f(tmp, std::ios::binary);
    if (!f) throw Error("cannot write " + tmp.string());
    f << contents;
  }
  // link() fails if the target exists, which makes creation atomic and append-only
  int rc = ::link(tmp.c_str(), target.c_str());
  std::filesystem::remove(tmp, ec);
  if (rc != 0) {
    if (std::filesystem::exists(target)) return false;
    throw Error("cannot create " + target.string());
  }
  return true;
}

enum class CacheStatus { ok, missing, corrupt };

inline const char* to_string(CacheStatus s) {
  switch (s) {
    case CacheStatus::ok:
      return "ok";
    case CacheStatus::missing:
      return "missing";
    case CacheStatus::corrupt:
      return "corrupt";
  }
  return "?";
}

/// Schur-basis data for degree n: the descent table plus the Kostka matrix
/// K[mu][lambda] = #SYT(mu) with Des contained in S(lambda), and the index of S(lambda).
struct SchurBasis {
  DescentCountTable table;
  std::vector<std::size_t> row_of;                 // S(lambda).index() per partition
  std::vector<std::vector<std::uint64_t>> kostka;  // [mu][lambda]

  explicit SchurBasis(DescentCountTable t) : table(std::move(t)) {
    int n = table.n;
    std::size_t p = table.partitions.size();
    for (const Partition& lambda : table.partitions) row_of.push_back(Composition(lambda.parts()).partial_sums().index());
    kostka.assign(p, std::vector<std::uint64_t>(p, 0));
    std::size_t slots = std::size_t{1} << (n - 1);
    for (std::size_t mu = 0; mu < p; ++mu) {
      for (std::size_t lam = 0; lam < p; ++lam) {
        std::size_t sup = row_of[lam];
        std::uint64_t total = 0;
        for (std::size_t d = 0; d < slots; ++d) {
          if ((d & ~sup) == 0) total += table.counts[mu][d];
        }
        kostka[mu][lam] = total;
      }
    }
  }
};

/// Process-wide cache of SchurBasis per degree, backed by dtable_<n>.json files.
class DescentTableStore {
 public:
  explicit DescentTableStore(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

  static DescentTableStore& global() {
    static DescentTableStore store(default_cache_directory());
    return store;
  }

  const std::optional<std::filesystem::path>& directory() const { return dir_; }

  std::filesystem::path file_for(int n) const {
    if (!dir_) throw Error("no cache directory configured");
    return *dir_ / ("dtable_" + std::to_string(n) + ".json");
  }

  std::shared_ptr<const SchurBasis> basis(int n) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = mem_.find(n);
    if (it != mem_.end()) return it->second;
    std::optional<DescentCountTable> t;
    if (dir_) t = load(n);
    if (!t) {
      t = compute_descent_table(n);
      if (dir_) atomic_write(file_for(n), descent_table_to_json(*t).dump());
    }
    auto b = std::make_shared<const SchurBasis>(std::move(*t));
    mem_[n] = b;
    return b;
  }

  const DescentCountTable& table(int n) { return basis(n)->table; }

  CacheStatus verify(int n) const {
    if (!dir_ || !std::filesystem::exists(file_for(n))) return CacheStatus::missing;
    std::optional<DescentCountTable> t = load(n);
    if (!t) return CacheStatus::corrupt;
    return *t == compute_descent_table(n) ? CacheStatus::ok : CacheStatus::corrupt;
  }

  void rebuild(int n) {
    DescentCountTable t = compute_descent_table(n);
    if (!dir_ || !atomic_write(file_for(n), descent_table_to_json(t).dump())) {
      throw Error("cannot write descent table cache for n=" + std::to_string(n));
    }
    std::lock_guard<std::mutex> lock(mu_);
    mem_.erase(n);
  }

 private:
  std::optional<DescentCountTable> load(int n) const {
    std::ifstream f(file_for(n));
    if (!f) return std::nullopt;
    nlohmann::json j = nlohmann::json::parse(f, nullptr, false);
    if (j.is_discarded()) return std::nullopt;
    return descent_table_from_json(j, n);
  }

  std::optional<std::filesystem::path> dir_;
  std::mutex mu_;
  std::map<int, std::shared_ptr<const SchurBasis>> mem_;
};

}  // namespace finesets

#endif  // FINESETS_DTABLE_HPP
