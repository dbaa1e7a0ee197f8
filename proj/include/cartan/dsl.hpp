#pragma once

// The .cdga text format:
//
//   # comment
//   gen x:2; gen y:5;
//   d y = x^3;
//   der t (y -> 1) deg -5;
//   elem beta = x*y_bar - 3 x_bar*y;
//
// Polynomials use +, -, rational literals (3, 1/2), juxtaposition or * for products, ^ for
// non-negative integer powers and parentheses. Element declarations may use barred names
// (x_bar); they are then read in the loop model.

#include "cartan/algebra.hpp"
#include "cartan/derivation.hpp"
#include "cartan/errors.hpp"
#include "cartan/loop_model.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cartan {

struct SourceSpan {
  int line = 1, column = 1;
};

class ParseError : public Error {
 public:
  ParseError(SourceSpan where, std::string message, std::set<std::string> expected = {});

  SourceSpan where() const { return where_; }
  const std::string& detail() const { return detail_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  SourceSpan where_;
  std::string detail_;
  std::set<std::string> expected_;
};

struct NamedDerivation {
  std::string name;
  Derivation value;
};

struct NamedElement {
  std::string name;
  Element value;  // over the base algebra, or over the loop model when it mentions bars
  bool in_loop = false;
};

struct SourceDocument {
  PresentationPtr algebra;
  std::vector<NamedDerivation> derivations;
  std::vector<NamedElement> elements;
  std::optional<LoopModel> loop;  // built when some element mentions a barred generator

  const Derivation* derivation(std::string_view name) const;
  const NamedElement* element(std::string_view name) const;
};

/// Throws ParseError for lexical, syntactic and name errors and for degree or d^2 problems
/// (the span points at the offending statement).
SourceDocument parse_document(std::string_view text);
SourceDocument parse_file(const std::string& path);

/// A polynomial over the generators of p, e.g. "x*y_bar - 3 x_bar*y".
Element parse_polynomial(const PresentationPtr& p, std::string_view text);

/// Canonical text; parse_document(serialize_document(doc)) is structurally equal to doc.
std::string serialize_document(const SourceDocument& doc);
bool structurally_equal(const SourceDocument& a, const SourceDocument& b);

}  // namespace cartan
