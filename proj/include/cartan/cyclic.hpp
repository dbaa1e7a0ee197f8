#pragma once

// The cyclic complex E = L[u], |u| = 2, with d_u = d + u s, the extension of L_theta, and the
// contracting homotopy u^{-1} e_theta on the positive u-part.

#include "cartan/calculus.hpp"
#include "cartan/homology.hpp"
#include "cartan/loop_model.hpp"

#include <compare>
#include <vector>

namespace cartan {

/// u^power * monomial.
struct CyclicKey {
  int power = 0;
  Monomial m;
  friend auto operator<=>(const CyclicKey&, const CyclicKey&) = default;
};

using CyclicElement = Combination<CyclicKey>;

CyclicElement cyclic_add(const CyclicElement& a, const CyclicElement& b, const Rational& scale = 1);
CyclicElement lift(const Element& x, int power);
std::string format_cyclic(const LoopModel& model, const CyclicElement& z);
int cyclic_degree(const LoopModel& model, const CyclicKey& k);

/// Basis at degree n: u^k (x) L^{n-2k}; the u-range is fixed by the degree.
BasisComplex<CyclicKey> cyclic_complex(const LoopModel& model);

CyclicElement d_u(const LoopModel& model, const CyclicElement& z);
DegreeCohomology<CyclicKey> cyclic_cohomology(const LoopModel& model, int n);

/// L_theta (x) 1 on L[u]; throws NotACocycle unless [d, theta] = 0.
Operator<CyclicElement> cyclic_L(const LoopModel& model, const Derivation& theta);
/// The same operator without the cocycle requirement.
Operator<CyclicElement> cyclic_L_any(const LoopModel& model, const Derivation& theta);
/// h_theta = u^{-1} e_theta on u L[u]; terms with no u are sent to 0.
Operator<CyclicElement> cyclic_homotopy(const LoopModel& model, const Derivation& theta);

/// Checks, with witnesses on failure:
///  [d, e_theta] + e_{[d,theta]} = 0 and L_theta = [s, e_theta] on the generators of L and on
///  every sample; d_u^2 = 0 and (-1)^{|theta|} [h_theta, d_u] = L_theta (x) 1 - h_{[d,theta]}
///  on every basis element u^k x with k >= 1 up to max_degree.
IdentityReport check_cyclic_cartan(const LoopModel& model, const Derivation& theta, int max_degree,
                                   const std::vector<Element>& samples = {});

}  // namespace cartan
