#pragma once

// Regression checks for the bundled fixtures: every worked claim is evaluated exactly and
// listed with PASS/FAIL and a witness.

#include "cartan/dsl.hpp"
#include "cartan/loop_model.hpp"
#include "cartan/report.hpp"
#include "cartan/suite.hpp"

#include <string>
#include <vector>

namespace cartan {

/// $CARTAN_FIXTURES when set, otherwise the fixtures/ directory of the source tree.
std::string default_fixture_dir();

struct ReproduceOptions {
  int max_degree = -1;  // -1: per-fixture default
  bool heavy = false;   // needed for elliptic228
  SuiteOptions suite;   // identity suite settings (its max_degree is used as given)
  std::string fixture_dir = default_fixture_dir();
};

std::vector<std::string> fixture_names();
std::string fixture_path(const std::string& name, const std::string& dir = default_fixture_dir());

/// Throws Error for an unknown fixture.
Report reproduce(const std::string& name, const ReproduceOptions& options);

/// [a] = [b] in H(L): both cocycles and a - b a coboundary. Zero has every degree.
bool cohomologous(const LoopModel& model, const Element& a, const Element& b);
/// z is a cocycle whose class is nonzero.
bool nonzero_class(const LoopModel& model, const Element& z);

/// dim of (free graded commutative algebra on gens) / (ideal generated by relations), degree by degree.
std::vector<std::size_t> quotient_dimensions(const PresentationPtr& free_algebra, const std::vector<Element>& relations,
                                             int max_degree);

/// Rank of the image in H^n(AV) of the degree-n products of the given cocycles.
std::size_t generated_rank(const LoopModel& model, const std::vector<Element>& generators, int n);

}  // namespace cartan
