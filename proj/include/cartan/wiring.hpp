#pragma once

// The two concrete calculi: derivations of AV acting on the loop model L (S = T = 0), and
// derivations of A acting on the Hochschild complex (T = 0).

#include "cartan/calculus.hpp"
#include "cartan/hochschild.hpp"
#include "cartan/loop_model.hpp"

namespace cartan {

CalculusWiring<Derivation, Element> loop_wiring(const LoopModel& model);
CalculusWiring<Derivation, Chain> hochschild_wiring(const HochschildComplex& hc);

}  // namespace cartan
