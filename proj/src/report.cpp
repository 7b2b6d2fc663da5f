#include "biorder/report.hpp"

namespace biorder {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skip: return "skip";
    case Verdict::info: return "info";
  }
  return "?";
}

void CheckRecord::add_witness(nlohmann::json w) {
  if (witnesses.size() < kWitnessCap) witnesses.push_back(std::move(w));
  ++witness_total;
}

nlohmann::json CheckRecord::to_json() const {
  nlohmann::json j;
  j["check"] = id;
  j["anchor"] = anchor;
  j["verdict"] = verdict_name(verdict);
  j["witnesses"] = witnesses;
  j["witness_total"] = witness_total;
  j["counterexamples"] = counterexamples;
  if (elapsed_ms)
    j["elapsed_ms"] = *elapsed_ms;
  else
    j["elapsed_ms"] = nullptr;
  if (!note.empty()) j["note"] = note;
  return j;
}

bool VerificationReport::all_passed() const {
  for (const auto& c : checks)
    if (c.failed()) return false;
  return true;
}

const CheckRecord* VerificationReport::find(const std::string& id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["config"] = config;
  j["summary"] = all_passed() ? "pass" : "fail";
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) arr.push_back(c.to_json());
  j["checks"] = arr;
  return j;
}

std::string VerificationReport::to_string() const {
  // nlohmann objects are key-sorted maps, so dump() is deterministic.
  return to_json().dump(2) + "\n";
}

}  // namespace biorder
