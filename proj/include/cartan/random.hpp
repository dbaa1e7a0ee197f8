#pragma once

// Seeded samplers for elements, derivations, Hochschild words and whole presentations.

#include "cartan/derivation.hpp"
#include "cartan/hochschild.hpp"

#include <cstdint>
#include <random>

namespace cartan {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi);
  bool coin(double p = 0.5);
  /// Nonzero rational a/b with |a| <= 3, 1 <= b <= 2.
  Rational coefficient();

  /// Homogeneous element of degree n with at most max_terms terms; zero if the degree is empty.
  Element element(const PresentationPtr& p, int n, int max_terms = 3);
  /// Random homogeneous element of any degree in [lo, hi] that has a nonempty basis.
  Element element_in_range(const PresentationPtr& p, int lo, int hi, int max_terms = 3);

  /// Derivation of the given degree with random values on a random subset of generators.
  Derivation derivation(const PresentationPtr& p, int degree);
  /// Nonzero derivation with degree in [lo, hi] whenever one exists.
  Derivation derivation_in_range(const PresentationPtr& p, int lo, int hi);

  /// Word with head and tail entries drawn from monomials; total degree <= max_degree.
  ChainWord word(const PresentationPtr& p, int max_degree, std::size_t max_length = 3);
  Chain chain(const HochschildComplex& hc, int max_degree, std::size_t max_length = 3, int max_terms = 2);

  /// Simply-connected presentation: up to max_gens generators of degree 2..max_degree,
  /// each differential a random cocycle of the earlier generators.
  PresentationPtr presentation(int max_gens = 5, int max_degree = 9);

 private:
  std::mt19937_64 rng_;
};

}  // namespace cartan
