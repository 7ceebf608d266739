#pragma once

// Claim-by-claim verification of the construction. Each claim produces a
// ClaimResult with a verdict, the mode of verification (symbolic identities
// are exact; numeric evidence carries explicit tolerances) and a list of
// witness key/value pairs that make the report reproducible and auditable.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "crgeo/kernels.hpp"

namespace crgeo {

enum class Verdict { pass, fail };
enum class ClaimMode { symbolic, numeric, mixed };

const char* verdict_str(Verdict v);
const char* claim_mode_str(ClaimMode m);

struct Witness {
  std::string key;
  std::string value;
};

struct ClaimResult {
  std::string claim_id;
  std::string statement;  // what is being checked, in plain language
  ClaimMode mode = ClaimMode::symbolic;
  Verdict verdict = Verdict::fail;
  std::vector<Witness> witnesses;
  std::vector<ClaimResult> sub;

  void witness(std::string key, std::string value) {
    witnesses.push_back({std::move(key), std::move(value)});
  }
  bool passed() const;  // this claim and all sub-claims
};

struct VerifyOptions {
  uint64_t seed = 1729;
  std::vector<double> radii{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  int phases = 72;
  std::size_t sample_count = 10000;   // per sampling task
  std::size_t cloud_count = 100000;   // image-cloud size
  double tol_residual = 1e-10;        // numeric residual tolerance
  double tol_cluster = 1e-3;          // cluster diameter at radius 1e-4
  double tol_hausdorff = 1e-2;        // trace-vs-annulus tolerance
  double window = 3.0;                // trace window half-extent
  std::optional<std::string> only;    // claim-id prefix filter
  ExecMode mode = ExecMode::parallel;

  // KEY=VALUE with KEY in {residual, cluster, hausdorff, window}.
  void set_tolerance(const std::string& key, double value);
};

struct Report {
  std::vector<std::pair<std::string, std::string>> config;
  std::string tower;  // description of the blow-up tower used
  std::vector<ClaimResult> claims;

  bool all_pass() const;
};

Report run_verification(const VerifyOptions& opt);

// Individual claims (exposed for targeted tests).
ClaimResult verify_construction_identities();
ClaimResult verify_indeterminacy();
ClaimResult verify_cluster_singleton(bool plus, const VerifyOptions& opt);
ClaimResult verify_tower_claims(bool plus, const VerifyOptions& opt);
ClaimResult verify_line_avoidance(const VerifyOptions& opt);
ClaimResult verify_affine_form();
ClaimResult verify_affine_containment(const VerifyOptions& opt);
ClaimResult verify_cubic_model(const VerifyOptions& opt);

std::string report_text(const Report& r);
std::string report_json(const Report& r);          // serialized JSON document
Report report_from_json(const std::string& text);  // inverse of report_json

std::string fmt_double(double x);  // fixed %.12e formatting used everywhere

}  // namespace crgeo
