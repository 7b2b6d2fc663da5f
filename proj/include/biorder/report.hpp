#ifndef BIORDER_REPORT_HPP
#define BIORDER_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace biorder {

enum class Verdict { pass, fail, skip, info };

const char* verdict_name(Verdict v);

// One verified statement. `anchor` is the statement label the check
// implements, so a report can be read without the source tree at hand.
// Witnesses carry positive evidence (truncated, with a total count);
// counterexamples are always complete and sorted — a failed check must point
// at concrete element indices.
struct CheckRecord {
  std::string id;
  std::string anchor;
  Verdict verdict = Verdict::pass;
  nlohmann::json witnesses = nlohmann::json::array();
  nlohmann::json counterexamples = nlohmann::json::array();
  std::size_t witness_total = 0;
  std::optional<std::int64_t> elapsed_ms;  // populated only when timings are on
  std::string note;

  bool failed() const { return verdict == Verdict::fail; }
  nlohmann::json to_json() const;

  static constexpr std::size_t kWitnessCap = 16;

  // Appends w if below the cap; always bumps witness_total.
  void add_witness(nlohmann::json w);
};

struct VerificationReport {
  nlohmann::json config = nlohmann::json::object();
  std::vector<CheckRecord> checks;

  bool all_passed() const;
  const CheckRecord* find(const std::string& id) const;
  nlohmann::json to_json() const;
  std::string to_string() const;  // pretty, key-sorted, deterministic
};

}  // namespace biorder

#endif  // BIORDER_REPORT_HPP
