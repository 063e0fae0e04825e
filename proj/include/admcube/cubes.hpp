#pragma once

#include <cstdint>
#include <map>

#include "admcube/complexes.hpp"

namespace admcube {

// Label set S of an S-cube. Labels are sorted; the sort order is the
// canonical bijection S -> (n] that fixes total-complex signs. Subsets are
// bitmasks over label positions.
class CubeIndex {
  public:
    explicit CubeIndex(std::vector<std::string> labels);

    int n() const { return static_cast<int>(labels_.size()); }
    uint32_t full() const { return n() == 0 ? 0 : ((1u << n()) - 1); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int pos) const { return labels_[static_cast<std::size_t>(pos)]; }
    int pos(const std::string& label) const;

    std::string subset_key(uint32_t mask) const;  // comma-joined labels, "" = empty set
    uint32_t subset_from_key(const std::string& key) const;

    // index over a subset of the labels, with the position remap old->new
    CubeIndex sub_index(uint32_t mask, std::vector<int>* old_positions = nullptr) const;

    bool operator==(const CubeIndex& o) const { return labels_ == o.labels_; }

  private:
    std::vector<std::string> labels_;
};

// All subsets of `within` of size k, ordered lexicographically as sorted
// position sequences (the byte-stable report order).
std::vector<uint32_t> subsets_of_size(uint32_t within, int k);
// All subsets of `within`, sizes ascending, lex within a size.
std::vector<uint32_t> subsets_of(uint32_t within);

// Contravariant functor on P(S): vertices x_T and boundaries
// d_T^t : x_T -> x_{T \ t}. Construction checks shapes and key presence;
// commutativity of squares is validate()'s job.
class Cube {
  public:
    Cube(CubeIndex idx, Ring ring, std::vector<FPModule> vertices,
         std::map<std::pair<uint32_t, int>, Morphism> boundaries);

    const CubeIndex& index() const { return idx_; }
    const Ring& ring() const { return ring_; }
    int n() const { return idx_.n(); }
    const FPModule& vertex(uint32_t mask) const;
    const Morphism& boundary(uint32_t t_mask, int t_pos) const;

    // composite x(U <= T): composition of boundary morphisms along any
    // monotone path (path independence holds for valid cubes)
    Morphism morphism_of(uint32_t from_mask, uint32_t to_sub) const;

  private:
    CubeIndex idx_;
    Ring ring_;
    std::vector<FPModule> vertex_;
    std::map<std::pair<uint32_t, int>, Morphism> bnd_;
};

// Exact data equality: same labels, vertex presentations, boundary matrices.
bool cube_equal(const Cube& a, const Cube& b);

struct CubeReport {
    bool valid;
    bool monic;
    std::string witness;  // first failing square / ill-defined boundary
};
CubeReport validate(const Cube& x);
bool is_monic(const Cube& x);

// (x|_U^V)_A = x_{A ⊔ V}; U and V disjoint.
Cube restrict_cube(const Cube& x, uint32_t u_mask, uint32_t v_mask);
Cube frontside_face(const Cube& x, int k_pos);
Cube backside_face(const Cube& x, int k_pos);

// Tot x with ⊕ summands in lex subset order and the characteristic-function
// sign rule under the canonical label-sort bijection.
ChainComplex total_complex(const Cube& x);

// Natural transformation of cubes on a common index.
struct CubeMorphism {
    Cube src;
    Cube tgt;
    std::map<uint32_t, Morphism> comp;
};
// checks componentwise naturality; throws on failure
void validate_cube_morphism(const CubeMorphism& f);
ChainMap total_chainmap(const CubeMorphism& f);

// d^{s,x} : x|^{{s}}_{S\{s}} -> x|^∅_{S\{s}} as a cube morphism.
CubeMorphism face_transformation(const Cube& x, int s_pos);

// H_0(Tot d^{s,x}); for 1-cubes this degenerates to the boundary itself.
Morphism h0_tot_face(const Cube& x, int s_pos);

struct H0Step {
    Cube cube;                              // the S\{k}-cube of cokernels
    std::map<uint32_t, Morphism> projections;  // pi^k_T : x_T ->> H_0^k(x)_T
};
H0Step h0_direction_step(const Cube& x, int k_pos);
Cube h0_direction(const Cube& x, const std::vector<int>& k_positions);

enum class AdmMethod { Recursive, Faces0Spherical, AllRestrictions };

struct AdmReport {
    bool admissible;
    std::string witness;
};
AdmReport is_admissible(const Cube& x, AdmMethod method);

struct FiberedReport {
    bool fibered;
    std::string witness;  // first non-Cartesian square
};
FiberedReport is_fibered(const Cube& x);

// Cube associated with a covering: vertices are iterated fiber products of
// the sources over the common target.
struct FibCube {
    Cube cube;
    std::vector<Morphism> family;            // the input maps, label order
    std::map<uint32_t, Morphism> embed;      // vertex_T >-> (+)_{s in T} src_s, |T| >= 2
};
FibCube fib_of_family(const CubeIndex& idx, const std::vector<Morphism>& fx);

Cube typical_cube(const CubeIndex& idx, const std::vector<Elem>& fs, const FPModule& x);

enum class SeqMode { RegularOrdered, XSequence };
bool sequence_check(const std::vector<Elem>& fs, const FPModule& x, SeqMode mode);

// x ∘_{s,alpha} y; alpha maps masks A (without s) to morphisms x_A -> y_{A∪{s}}.
Cube compose_cubes(const Cube& x, const Cube& y, int s_pos,
                   const std::map<uint32_t, Morphism>& alpha);

// Replace the ∅-vertex by target(f), post-composing the maps into it.
Cube attach(const Cube& x, const Morphism& f);

// Covariant companion: maps go up, u_T^t : x_{T\{t}} -> x_T.
struct Cocube {
    CubeIndex idx;
    Ring ring;
    std::vector<FPModule> vertex;
    std::map<std::pair<uint32_t, int>, Morphism> up;
};

Cocube dual_of_cube(const Cube& x);   // x̂_T = x_{S\T}
Cube dual_of_cocube(const Cocube& c);
// reinterpret a cocube with matching vertex shapes as a cube (typical cubes)
Cube cocube_as_cube(const Cocube& c);

// Tot Typ(fs; A): the Koszul complex of the family.
ChainComplex koszul_complex(const Ring& ring, const std::vector<Elem>& fs);

}  // namespace admcube
