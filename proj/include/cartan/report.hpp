#pragma once

// Result records and their table / JSON renderings. Rationals are always written exactly
// ("1/2", "-3"), never as decimals.

#include "cartan/algebra.hpp"
#include "cartan/homology.hpp"

#include <json.hpp>

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

namespace cartan {

enum class Format { Table, Json };

/// One degree of a cohomology computation.
struct CohomologyRecord {
  std::string label = "H";  // "H", "HH", "H(Der)", ...
  int degree = 0;
  std::size_t dimension = 0;
  std::vector<std::string> basis;
};

std::string table_row(const CohomologyRecord& r);
nlohmann::json to_json(const CohomologyRecord& r);

template <class Key>
CohomologyRecord record_of(const DegreeCohomology<Key>& h, const std::function<std::string(const Combination<Key>&)>& show,
                           std::string label = "H") {
  CohomologyRecord r{std::move(label), h.degree, h.dimension(), {}};
  for (std::size_t i = 0; i < h.dimension(); ++i) r.basis.push_back(show(h.representative(i)));
  return r;
}

/// A named pass/fail line; detail carries the witness on failure.
struct CheckRecord {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct ReportSection {
  std::string title;
  std::vector<CohomologyRecord> cohomology;
  std::vector<std::string> lines;
  std::vector<CheckRecord> checks;
  nlohmann::json data = nlohmann::json::object();
};

struct Report {
  nlohmann::json request = nlohmann::json::object();
  std::string presentation_hash;
  std::optional<std::uint64_t> seed;
  std::deque<ReportSection> sections;  // references from section() stay valid

  bool ok() const;
  ReportSection& section(const std::string& title);
};

std::string rational_string(const Rational& q);
nlohmann::json terms_json(const Presentation& p, const Terms& t);

/// FNV-1a over the canonical serialization of the presentation, as 16 hex digits.
std::string presentation_hash(const Presentation& p);

std::string serialize_result(const Report& r, Format f);
std::string serialize_result(const CohomologyRecord& r, Format f);

}  // namespace cartan
