#pragma once

// The complex (Der(AV, A), [d, -]) in a basis of pairs (generator, monomial) and its homology.

#include "cartan/derivation.hpp"
#include "cartan/homology.hpp"

#include <compare>
#include <cstddef>
#include <vector>

namespace cartan {

/// The derivation sending generator `gen` to the monomial `value`.
struct DerKey {
  std::size_t gen = 0;
  Monomial value;
  friend auto operator<=>(const DerKey&, const DerKey&) = default;
};

/// Cohomological degree p holds derivations of degree p. The codomain contains the domain as a
/// prefix; pass the same pointer twice for Der(AV).
BasisComplex<DerKey> der_complex(PresentationPtr domain, PresentationPtr codomain);

Combination<DerKey> der_keys(const Derivation& theta);
Derivation der_from_keys(PresentationPtr domain, PresentationPtr codomain, int degree, const Combination<DerKey>& c);

struct DerHomology {
  int n = 0;  // homological degree, = -(cohomological degree)
  DegreeCohomology<DerKey> cohomology;
  std::vector<Derivation> representatives;
};

/// H_n(Der(AV)) for n >= 2. Throws std::invalid_argument for smaller n.
DerHomology der_homology(PresentationPtr algebra, int n);

/// All n >= 2 with H_n(Der) possibly nonzero (n up to the top generator degree).
std::vector<DerHomology> der_homology_all(PresentationPtr algebra);

/// Coordinates of [theta] in the basis of `h`. Throws NotACocycle when [d, theta] != 0.
std::vector<Rational> der_class(const DerHomology& h, const Derivation& theta);

}  // namespace cartan
