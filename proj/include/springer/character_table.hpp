#pragma once

#include <vector>

#include "springer/cyclotomic.hpp"
#include "springer/finite_group.hpp"

namespace springer {

/* Exact ordinary character table.  Rows are sorted by degree and then by
 * value tuple, so the table is deterministic.  values[r][c] is the value of
 * character r on conjugacy class c (classes as from conjugacy_classes).
 */
struct CharacterTable {
    std::vector<std::vector<int>> classes;
    std::vector<int> degrees;
    std::vector<std::vector<Cyclotomic>> values;

    int num_classes() const { return static_cast<int>(classes.size()); }
};

// Dixon's method: class-algebra eigenvectors over F_p, then an exact lift
// into Z[zeta_e].  Abelian groups take a direct dual-group path.  Throws
// when |G| exceeds the bound.
CharacterTable character_table(const FiniteGroup& g, int max_order = 2000);

// exact orthogonality checks, used by tests
bool first_orthogonality_holds(const FiniteGroup& g, const CharacterTable& t);
bool second_orthogonality_holds(const FiniteGroup& g, const CharacterTable& t);

} // namespace springer
