#pragma once

#include <map>

#include "admcube/fpmod.hpp"

namespace admcube {

// Chain complex in homological convention (boundaries have degree -1),
// concentrated in the inclusive degree range [lo, hi]. d ∘ d = 0 is checked
// at construction. Degrees outside the range are zero modules.
class ChainComplex {
  public:
    ChainComplex(int lo, std::vector<FPModule> modules, std::vector<Morphism> boundaries);

    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(mods_.size()) - 1; }
    const Ring& ring() const { return ring_; }

    FPModule module_at(int k) const;
    Morphism boundary_at(int k) const;  // zero morphism outside [lo+1, hi]

  private:
    int lo_;
    Ring ring_;
    std::vector<FPModule> mods_;
    std::vector<Morphism> bnd_;  // bnd_[i] = d_{lo+1+i}
};

// Homology at one degree together with the data needed to reduce cycles to
// homology coordinates (for induced maps).
struct HomologyData {
    FPModule h;
    Matrix cycle_reps;  // gens(C_k) x gens(h)
    Matrix reducer;     // [cycle_reps | d_{k+1} | rel_k], solve target
};

FPModule homology(const ChainComplex& c, int k);
HomologyData homology_data(const ChainComplex& c, int k);

// Coordinates in h of a matrix of cycles (columns live in C_k).
Matrix reduce_cycles(const HomologyData& hd, const Matrix& cycles);

struct SphericalReport {
    bool spherical;
    int witness_degree;              // meaningful when !spherical
    std::string witness_invariants;  // invariant factors at the failure
};

SphericalReport is_spherical(const ChainComplex& c, int n);

// Degreewise morphism of chain complexes; commutation with the boundaries
// is checked at construction.
class ChainMap {
  public:
    ChainMap(ChainComplex src, ChainComplex tgt, std::map<int, Morphism> components);

    const ChainComplex& src() const { return src_; }
    const ChainComplex& tgt() const { return tgt_; }
    Morphism component_at(int k) const;

  private:
    ChainComplex src_, tgt_;
    std::map<int, Morphism> comp_;
};

Morphism induced_on_homology(const ChainMap& f, int k);

// Cone(f)_n = a_{n-1} (+) b_n with boundary [[-d^a, 0], [-f, d^b]].
ChainComplex mapping_cone(const ChainMap& f);

ChainComplex direct_sum_complexes(const ChainComplex& a, const ChainComplex& b);

}  // namespace admcube
