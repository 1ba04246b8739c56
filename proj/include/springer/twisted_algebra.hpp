#pragma once

#include <vector>

#include "springer/character_table.hpp"
#include "springer/cocycle.hpp"

namespace springer {

/* Irreducible data of the twisted group algebra C[G, kappa]: the count and
 * degrees of its irreducible modules, and their exact trace values on the
 * kappa-regular classes (traces on other classes vanish and are omitted).
 * The count equals the number of kappa-regular classes and the squared
 * degrees sum to |G|.
 */
struct TwistedIrreps {
    int count = 0;
    std::vector<int> degrees;
    std::vector<int> regular_classes; // class indices, as in conjugacy_classes
    // traces[r][i] = trace of irreducible r at the representative of
    // regular_classes[i]
    std::vector<std::vector<Cyclotomic>> traces;
    // element_traces[r][g] = trace at the basis unit of g; unlike ordinary
    // characters these are not constant on classes
    std::vector<std::vector<Cyclotomic>> element_traces;
};

// Computed through the central extension 1 -> Z/m -> G~ -> G -> 1 with
// multiplication twisted by kappa, selecting the character-table block on
// which the central Z/m acts by its standard faithful character.
TwistedIrreps twisted_irreps(const FiniteGroup& g, const Cocycle& kappa,
                             int max_order = 4000);

} // namespace springer
