#pragma once

// Randomized verification of the calculus identities on one presentation: the loop-model
// calculus, the Hochschild calculus with its component relations, both mixed-complex
// structures, the comparison map Theta and the cyclic homotopy.

#include "cartan/calculus.hpp"
#include "cartan/hochschild.hpp"
#include "cartan/loop_model.hpp"
#include "cartan/random.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace cartan {

/// Component relations behind the Hochschild calculus, checked word by word:
/// e = d_{2,0} L_1, d_{1,i} e, d_{2,i} e, L_i s, L_i d_{2,0}, L_i L_j, L_i t and [d_1, S] + S_dtheta = 0.
void check_hochschild_relations(const HochschildComplex& hc, const Derivation& theta, const Derivation& rho,
                                const std::vector<Chain>& inputs, IdentityReport& report);

/// Theta d = d Theta, Theta B = s Theta, Theta L = L Theta on chains; Theta e Theta' = e and
/// Theta Theta' = id on elements of L.
void check_comparison(const LoopModel& model, const HochschildComplex& hc, const Derivation& theta,
                      const std::vector<Chain>& chains, const std::vector<Element>& elements, IdentityReport& report);

struct SuiteOptions {
  int max_degree = 12;
  int trials = 25;
  std::uint64_t seed = 1;
  int samples = 3;         // elements and chains per trial
  int cyclic_degree = 8;   // basis bound for the cyclic homotopy check
  int cyclic_trials = 3;   // random derivations for the cyclic check
};

struct SuiteResult {
  IdentityReport loop;        // calculus on L and its mixed complex
  IdentityReport hochschild;  // calculus on C_*(A), its mixed complex and component relations
  IdentityReport comparison;  // Theta squares and Theta Theta' = id
  IdentityReport cyclic;      // d_u^2 = 0 and the u^{-1} e homotopy

  bool ok() const { return loop.ok() && hochschild.ok() && comparison.ok() && cyclic.ok(); }
  std::size_t evaluations() const;
};

/// extra_derivations are always included in the cyclic check (e.g. a basis of H(Der)).
SuiteResult run_identity_suite(const PresentationPtr& p, const SuiteOptions& options,
                               const std::vector<Derivation>& extra_derivations = {});

}  // namespace cartan
