// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace thetakit {

class CheckError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Which coefficient options a check accepts. None: no --prime, no --field.
enum class FieldRequirement { None, Rational, Modular, Either };
std::string to_string(FieldRequirement f);

enum class CheckStatus { Pass, Fail, Inconclusive };
std::string to_string(CheckStatus s);

inline constexpr uint32_t kDefaultPrimes[2] = {31991, 32003};
inline constexpr uint32_t kTiebreakPrime = 32009;

struct CheckOptions {
  std::optional<uint64_t> prime;
  uint64_t seed = 1;
  /// "Q" or "Fp"; unset picks Fp for Either checks.
  std::optional<std::string> field;
};

struct CheckContext;
/// Returns the computed value; PASS iff it equals the descriptor's expected value.
using CheckFn = std::function<nlohmann::json(CheckContext&)>;

struct CheckDescriptor {
  std::string id;
  std::string paper_anchor;
  std::string module;
  nlohmann::json parameters;
  nlohmann::json expected;
  FieldRequirement field = FieldRequirement::None;
  CheckFn run;
};

struct CheckReport {
  std::string id;
  CheckStatus status = CheckStatus::Fail;
  nlohmann::json expected;
  nlohmann::json computed;
  nlohmann::json parameters;
  std::string field;
  std::vector<uint32_t> primes;
  uint64_t seed = 0;
  double runtime_ms = 0;
  std::vector<std::string> notes;

  nlohmann::json to_json() const;
};

struct CheckContext {
  const CheckDescriptor& descriptor;
  bool rational = false;
  std::vector<uint32_t> primes;
  uint64_t seed = 1;
  std::vector<std::string> notes;
  bool inconclusive = false;

  const nlohmann::json& param(const char* key) const { return descriptor.parameters.at(key); }
  /// Runs f over Q, or at both primes with a tie-break prime on disagreement. Records
  /// the primes used; no majority marks the report inconclusive.
  nlohmann::json two_prime(const std::function<nlohmann::json(uint32_t prime)>& f);
};

/// Sorted by id.
const std::vector<CheckDescriptor>& list_checks();
const CheckDescriptor& find_check(const std::string& id);

/// Throws CheckError for an unknown id, a non-prime, or options the check cannot take.
CheckReport run_check(const std::string& id, const CheckOptions& options = {});
CheckReport run_check(const CheckDescriptor& d, const CheckOptions& options = {});

struct RunSummary {
  std::vector<CheckReport> reports;
  size_t pass = 0, fail = 0, inconclusive = 0;
  nlohmann::json to_json(const CheckOptions& options) const;
};

/// Runs every descriptor with up to `workers` threads; reports keep registry order.
RunSummary run_all(const std::vector<CheckDescriptor>& checks, const CheckOptions& options,
                   unsigned workers = 1);

}  // namespace thetakit
