#include "ideal2d/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace ideal2d {

void sort_reports(std::vector<VerificationReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const VerificationReport& p,
                      const VerificationReport& q) {
                     if (p.claim_id != q.claim_id) {
                       return p.claim_id < q.claim_id;
                     }
                     return p.params < q.params;
                   });
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  for (const VerificationReport& r : reports) {
    if (!r.passed) return false;
  }
  return true;
}

std::string render_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const VerificationReport& r : reports) {
    nlohmann::ordered_json params(nlohmann::ordered_json::value_t::object);
    for (const auto& [key, value] : r.params) params[key] = value;
    arr.push_back({{"claim_id", r.claim_id},
                   {"params", std::move(params)},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"passed", r.passed},
                   {"runtime_ms", r.runtime_ms}});
  }
  return arr.dump(2) + "\n";
}

namespace {

void point_basis_text(const PointBasisNode& node, std::size_t depth,
                      std::ostringstream& out) {
  out << std::string(2 * depth, ' ')
      << (node.path.empty() ? std::string("root") : node.path)
      << " order=" << node.order << " " << node.ideal.to_string() << "\n";
  for (const PointBasisNode& child : node.children)
    point_basis_text(child, depth + 1, out);
}

nlohmann::ordered_json point_basis_json(const PointBasisNode& node) {
  nlohmann::ordered_json children = nlohmann::ordered_json::array();
  for (const PointBasisNode& child : node.children)
    children.push_back(point_basis_json(child));
  return {{"path", node.path},
          {"order", node.order},
          {"ideal", node.ideal.to_string()},
          {"children", std::move(children)}};
}

}  // namespace

std::string render_point_basis(const PointBasisNode& root, bool as_json) {
  if (as_json) return point_basis_json(root).dump(2) + "\n";
  std::ostringstream out;
  point_basis_text(root, 0, out);
  return out.str();
}

std::string render_table(const std::vector<VerificationReport>& reports) {
  auto clip = [](const std::string& s) {
    constexpr std::size_t kMax = 48;
    if (s.size() <= kMax) return s;
    return s.substr(0, kMax - 3) + "...";
  };
  std::ostringstream out;
  std::size_t failed = 0;
  for (const VerificationReport& r : reports) {
    out << (r.passed ? "PASS" : "FAIL") << "  " << r.claim_id;
    if (!r.params.empty()) {
      out << " [";
      bool first = true;
      for (const auto& [key, value] : r.params) {
        if (!first) out << " ";
        out << key << "=" << value;
        first = false;
      }
      out << "]";
    }
    out << "  lhs=" << clip(r.lhs) << "  rhs=" << clip(r.rhs) << "\n";
    if (!r.passed) ++failed;
  }
  out << reports.size() << " claims, " << failed << " failed\n";
  return out.str();
}

}  // namespace ideal2d
