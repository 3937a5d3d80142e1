#pragma once

#include "numeric.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ade {

// Outcome of a verification: a verdict, summary data and the first few
// failing witnesses (in deterministic enumeration order).
struct Report {
  static constexpr std::size_t max_witnesses = 16;

  std::string check;
  bool ok = true;
  json data = json::object();
  std::vector<json> witnesses;
  std::size_t failures = 0;

  Report() = default;
  explicit Report(std::string name) : check(std::move(name)) {}

  void fail(json witness)
  {
    ok = false;
    ++failures;
    if (witnesses.size() < max_witnesses)
      witnesses.push_back(std::move(witness));
  }

  // append another report's failures after ours; order of calls decides
  // which witnesses are kept
  void absorb(const Report& other)
  {
    if (!other.ok)
      ok = false;
    failures += other.failures;
    for (const auto& w : other.witnesses)
      if (witnesses.size() < max_witnesses)
        witnesses.push_back(w);
  }

  json to_json() const
  {
    json j;
    j["check"] = check;
    j["ok"] = ok;
    j["data"] = data;
    if (!ok) {
      j["failures"] = failures;
      j["witnesses"] = witnesses;
    }
    return j;
  }
};

} // namespace ade
