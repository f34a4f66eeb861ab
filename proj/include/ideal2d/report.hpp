// Verification reports: one record per checked claim, with deterministic
// ordering and rendering.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ideal2d/transforms.hpp"

namespace ideal2d {

/// Outcome of one checked claim. `passed` holds exactly when `lhs` and
/// `rhs` are equal as strings; both sides are rendered canonically
/// (decimal integers, canonical ideal text, or "key=value;..." bundles).
struct VerificationReport {
  std::string claim_id;
  std::map<std::string, std::int64_t> params;
  std::string lhs;
  std::string rhs;
  bool passed = false;
  std::int64_t runtime_ms = 0;
};

/// Sorts by claim id, then by the parameter map.
void sort_reports(std::vector<VerificationReport>& reports);

bool all_passed(const std::vector<VerificationReport>& reports);

/// JSON array rendering; deterministic except for the runtime_ms values.
std::string render_json(const std::vector<VerificationReport>& reports);

/// Human-readable table with a trailing summary line.
std::string render_table(const std::vector<VerificationReport>& reports);

/// Point-basis tree as indented text (one node per line: path, order,
/// transformed ideal) or as nested JSON.
std::string render_point_basis(const PointBasisNode& root, bool as_json);

}  // namespace ideal2d
