#pragma once

#include "admcube/cubes.hpp"

namespace admcube {

// Finitely generated ideal with a canonical single generator over the
// principal ideal rings (gcd over Z, gcd with m over Z/m, 0/1 over fields).
struct IdealRep {
    Ring ring;
    std::vector<Elem> generators;
    Elem canonical;

    bool is_zero_ideal() const { return canonical.is_zero(); }
    bool is_unit_ideal() const { return is_unit(canonical); }
};

IdealRep make_ideal(const Ring& ring, std::vector<Elem> generators);

// Grade as a non-negative integer, or +infinity for the unit ideal.
struct GradeValue {
    bool infinite;
    int value;  // meaningful when !infinite

    bool at_least(int k) const { return infinite || value >= k; }
    std::string to_string() const { return infinite ? "inf" : std::to_string(value); }
};

// Koszul-homology characterization on the given generators g_1..g_n:
// grade = n - max{ i : H_i(Koszul(g; A)) != 0 }; zero ideal -> 0, unit
// ideal -> +infinity. Over Z a closed form cross-checks this.
GradeValue grade(const IdealRep& ideal);

// t-th Fitting ideal of a morphism between free modules.
IdealRep fitting_ideal(const Morphism& phi, int t);

struct BeReport {
    std::vector<int> ranks;                 // r_i for i = 1..s
    std::vector<IdealRep> fitting;          // I_{r_i}(phi_i)
    std::vector<GradeValue> grades;
    std::vector<bool> rank_convention_hit;  // r_i < 0 or r_i > min(dim), flagged
    bool spherical;                         // condition (1)
    bool criterion;                         // condition (2)
    bool equivalent;                        // (1) == (2), when requested
    bool equivalence_checked;
};

enum class BeMode { CriterionOnly, EquivalenceTest };

// The exactness criterion for a complex of free modules concentrated in
// degrees [0, s].
BeReport be_check(const ChainComplex& f, BeMode mode);

}  // namespace admcube
