#pragma once

#include <random>

#include "admcube/adjugates.hpp"

namespace admcube {

// Seeded instance generators behind the randomized suites. Every recipe is
// deterministic in the seed.
class Gen {
  public:
    explicit Gen(uint64_t seed) : eng_(seed) {}

    long uniform(long lo, long hi);
    std::mt19937_64& engine() { return eng_; }

    // family of scalars with |f| <= bound; units excluded, zero allowed
    std::vector<Elem> nonunit_family(const Ring& ring, int n, long bound);
    // nonzero non-units only
    std::vector<Elem> nonzero_nonunit_family(const Ring& ring, int n, long bound);

    Matrix matrix(const Ring& ring, int rows, int cols, long bound);

    // monomorphisms into Z^rank with small entries (images of random maps)
    std::vector<Morphism> subgroup_family(int rank, int n, long bound);

    // typical cube over a random family (admissible iff the family is an
    // x-sequence)
    Cube typical(const Ring& ring, int n, long bound);
    // guaranteed admissible: typical over an x-sequence, optionally closed
    // under composition and monic attachment
    Cube admissible_cube(int n, long bound, bool closure_ops);
    // monic but not admissible (non-coprime non-unit scalars)
    Cube monic_nonadmissible(int n, long bound);
    // contains a non-mono boundary
    Cube nonmonic(int n, long bound);

    // random regular scalar adjugate on a typical cube over Z
    struct AdjPair {
        Cube cube;
        CubeAdjugate adj;
    };
    AdjPair regular_scalar_adjugate(int n, long bound);
    // cofactor adjugate on an equal-rank free commuting cube over Z
    AdjPair cofactor_pair(int n, int rank, long bound);

    // double cube patched from the adjugate family of a typical cube
    DoubleCube patched_double(int n, long bound);

    // complexes of free Z-modules for the exactness corpus: Koszul of
    // sequences and non-sequences, totals of admissible cubes, direct sums,
    // and single-entry mutations
    ChainComplex be_instance(int flavor_hint);

  private:
    std::mt19937_64 eng_;
};

CubeIndex standard_labels(int n);

}  // namespace admcube
