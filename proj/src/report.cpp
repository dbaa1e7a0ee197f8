#include "cartan/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace cartan {

std::string table_row(const CohomologyRecord& r) {
  std::string out = r.label + "^" + std::to_string(r.degree) + ": dim " + std::to_string(r.dimension);
  if (r.dimension == 0) return out;
  out += ", basis [";
  for (std::size_t i = 0; i < r.basis.size(); ++i) out += (i ? ", " : "") + r.basis[i];
  return out + "]";
}

nlohmann::json to_json(const CohomologyRecord& r) {
  return {{"label", r.label}, {"degree", r.degree}, {"dimension", r.dimension}, {"basis", r.basis}};
}

bool Report::ok() const {
  for (const auto& s : sections)
    for (const auto& c : s.checks)
      if (!c.pass) return false;
  return true;
}

ReportSection& Report::section(const std::string& title) {
  for (auto& s : sections)
    if (s.title == title) return s;
  sections.push_back({title, {}, {}, {}, nlohmann::json::object()});
  return sections.back();
}

std::string rational_string(const Rational& q) { return q.get_str(); }

nlohmann::json terms_json(const Presentation& p, const Terms& t) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [m, c] : t) out.push_back({{"monomial", p.format(m)}, {"coefficient", rational_string(c)}});
  return out;
}

std::string presentation_hash(const Presentation& p) {
  std::string canon;
  for (std::size_t i = 0; i < p.size(); ++i)
    canon += p.generator(i).name + ":" + std::to_string(p.generator(i).degree) + "=" +
             format_terms(p, p.differential(i)) + ";";
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : canon) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string serialize_result(const CohomologyRecord& r, Format f) {
  return f == Format::Json ? to_json(r).dump() : table_row(r);
}

std::string serialize_result(const Report& r, Format f) {
  if (f == Format::Json) {
    nlohmann::json j;
    j["schema"] = 1;
    j["request"] = r.request;
    j["presentation_hash"] = r.presentation_hash;
    j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
    j["ok"] = r.ok();
    nlohmann::json results = nlohmann::json::array();
    for (const auto& s : r.sections) {
      nlohmann::json js;
      js["title"] = s.title;
      js["cohomology"] = nlohmann::json::array();
      for (const auto& c : s.cohomology) js["cohomology"].push_back(to_json(c));
      js["lines"] = s.lines;
      js["checks"] = nlohmann::json::array();
      for (const auto& c : s.checks) js["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      js["data"] = s.data;
      results.push_back(std::move(js));
    }
    j["results"] = std::move(results);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  if (!r.presentation_hash.empty()) os << "presentation " << r.presentation_hash << "\n";
  if (r.seed) os << "seed " << *r.seed << "\n";
  for (const auto& s : r.sections) {
    os << "\n== " << s.title << " ==\n";
    for (const auto& c : s.cohomology) os << "  " << table_row(c) << "\n";
    for (const auto& l : s.lines) os << "  " << l << "\n";
    std::size_t width = 0;
    for (const auto& c : s.checks) width = std::max(width, c.name.size());
    for (const auto& c : s.checks) {
      os << "  " << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) os << std::string(width - c.name.size() + 2, ' ') << c.detail;
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace cartan
