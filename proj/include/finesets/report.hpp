#ifndef FINESETS_REPORT_HPP
#define FINESETS_REPORT_HPP

#include <chrono>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "finesets/dtable.hpp"
#include "finesets/error.hpp"

namespace finesets {

enum class CheckStatus { verified, refuted, holds_up_to, resource_skipped };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::verified:
      return "verified";
    case CheckStatus::refuted:
      return "refuted";
    case CheckStatus::holds_up_to:
      return "holds-up-to";
    case CheckStatus::resource_skipped:
      return "resource-skipped";
  }
  return "?";
}

inline CheckStatus check_status_from_string(const std::string& s) {
  if (s == "verified") return CheckStatus::verified;
  if (s == "refuted") return CheckStatus::refuted;
  if (s == "holds-up-to") return CheckStatus::holds_up_to;
  if (s == "resource-skipped") return CheckStatus::resource_skipped;
  throw DomainError("unknown check status '" + s + "'");
}

struct CheckReport {
  std::string check_id;
  int n = 0;
  CheckStatus status = CheckStatus::verified;
  std::string lhs;
  std::string rhs;
  long elapsed_ms = 0;
  std::string notes;

  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

inline nlohmann::json to_json(const CheckReport& r) {
  return nlohmann::json{{"check_id", r.check_id}, {"n", r.n},     {"status", to_string(r.status)},
                        {"lhs", r.lhs},           {"rhs", r.rhs}, {"elapsed_ms", r.elapsed_ms},
                        {"notes", r.notes}};
}

inline CheckReport report_from_json(const nlohmann::json& j) {
  CheckReport r;
  r.check_id = j.at("check_id").get<std::string>();
  r.n = j.at("n").get<int>();
  r.status = check_status_from_string(j.at("status").get<std::string>());
  r.lhs = j.at("lhs").get<std::string>();
  r.rhs = j.at("rhs").get<std::string>();
  r.elapsed_ms = j.at("elapsed_ms").get<long>();
  r.notes = j.at("notes").get<std::string>();
  return r;
}

/// Texts longer than this are replaced by their digest in reports.
inline constexpr std::size_t kMaxInlineText = 2000;

inline std::string digest_if_long(const std::string& text, std::size_t items) {
  if (text.size() <= kMaxInlineText) return text;
  return "sha256:" + sha256_hex(text) + " (" + std::to_string(items) + " items)";
}

/// Collects labelled comparisons for one check and turns them into a report.
class Tally {
 public:
  explicit Tally(std::string id, int n)
      : id_(std::move(id)), n_(n), start_(std::chrono::steady_clock::now()) {}

  void compare(const std::string& label, const std::string& lhs, const std::string& rhs) {
    lhs_.push_back(label.empty() ? lhs : label + ": " + lhs);
    rhs_.push_back(label.empty() ? rhs : label + ": " + rhs);
    if (lhs != rhs && witness_.empty()) {
      witness_ = (label.empty() ? std::string() : label + ": ") + lhs + " != " + rhs;
    }
  }

  void note(const std::string& text) {
    if (!notes_.empty()) notes_ += "; ";
    notes_ += text;
  }

  std::size_t items() const { return lhs_.size(); }
  bool failed() const { return !witness_.empty(); }
  const std::string& witness() const { return witness_; }

  long elapsed_ms() const {
    return static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count());
  }

  CheckReport finish() const {
    CheckReport r;
    r.check_id = id_;
    r.n = n_;
    r.status = failed() ? CheckStatus::refuted : CheckStatus::verified;
    r.lhs = digest_if_long(join(lhs_), lhs_.size());
    r.rhs = digest_if_long(join(rhs_), rhs_.size());
    r.elapsed_ms = elapsed_ms();
    r.notes = std::to_string(items()) + " comparisons";
    if (failed()) r.notes += "; witness: " + witness_;
    if (!notes_.empty()) r.notes += "; " + notes_;
    return r;
  }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out;
    for (const std::string& s : v) {
      if (!out.empty()) out += "; ";
      out += s;
    }
    return out;
  }

  std::string id_;
  int n_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::string> lhs_;
  std::vector<std::string> rhs_;
  std::string witness_;
  std::string notes_;
};

}  // namespace finesets

#endif  // FINESETS_REPORT_HPP
