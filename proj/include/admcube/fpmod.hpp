#pragma once

#include <optional>
#include <string>
#include <vector>

#include "admcube/linalg.hpp"

namespace admcube {

// Finitely presented module A^gens / column-span(relations). The relation
// matrix has exactly `gens` rows; zero gens (or unit relations) give the
// zero module.
class FPModule {
  public:
    FPModule(Ring ring, int gens, Matrix relations);
    static FPModule free_module(const Ring& ring, int rank);
    static FPModule zero(const Ring& ring);
    static FPModule cyclic(const Ring& ring, const Int& n);  // A/(n)

    const Ring& ring() const { return ring_; }
    int gens() const { return gens_; }
    const Matrix& relations() const { return rel_; }

    // Canonical invariant factors: nonunit diagonal entries of the SNF of
    // the relations in divisibility order, with one 0 per free generator.
    // Empty list = zero module. Computed lazily and cached.
    const std::vector<Elem>& invariants() const;
    bool is_zero_module() const { return invariants().empty(); }

    bool same_presentation(const FPModule& o) const {
        return ring_ == o.ring_ && gens_ == o.gens_ && rel_ == o.rel_;
    }
    bool isomorphic(const FPModule& o) const {
        return ring_ == o.ring_ && invariants() == o.invariants();
    }
    std::string invariants_string() const;  // e.g. "(2,0)"

  private:
    Ring ring_;
    int gens_;
    Matrix rel_;
    mutable std::optional<std::vector<Elem>> inv_;
};

// Morphism between finitely presented modules, represented on generators by
// a (target gens) x (source gens) matrix.
class Morphism {
  public:
    Morphism(FPModule src, FPModule tgt, Matrix mat);
    static Morphism identity(const FPModule& m);
    static Morphism zero_map(const FPModule& src, const FPModule& tgt);
    static Morphism scalar(const FPModule& m, const Elem& a);  // a_x = a*id

    const FPModule& src() const { return src_; }
    const FPModule& tgt() const { return tgt_; }
    const Matrix& mat() const { return mat_; }

    // Every column of mat * src.relations lies in the span of tgt.relations.
    bool well_defined() const;
    void require_well_defined(const char* what) const;

    Morphism after(const Morphism& g) const;   // this ∘ g
    Morphism plus(const Morphism& o) const;
    Morphism minus(const Morphism& o) const;
    Morphism negated() const;

    // Equality in Hom: same presentations and difference maps to zero.
    bool equals(const Morphism& o) const;
    bool is_zero_morphism() const;

  private:
    FPModule src_, tgt_;
    Matrix mat_;
};

struct Subquotient {
    FPModule module;
    Morphism map;  // mono into source (kernel/image target) or epi out of target
};

Subquotient kernel(const Morphism& f);
Subquotient image(const Morphism& f);    // mono into f.tgt
Subquotient cokernel(const Morphism& f); // epi from f.tgt

struct MorphismFlags {
    bool mono, epi, iso;
};
MorphismFlags morphism_class(const Morphism& f);

struct PullbackData {
    FPModule module;
    Morphism to_src_f;  // projection to the source of f
    Morphism to_src_g;  // projection to the source of g
    Morphism embed;     // mono into src(f) (+) src(g)
};
PullbackData pullback(const Morphism& f, const Morphism& g);

// Unique mediating map into the pullback for a compatible cone (u, v) with
// f*u = g*v; nullopt signals an incompatible cone.
std::optional<Morphism> mediate(const PullbackData& pb, const Morphism& u, const Morphism& v);

// Unique h with mono ∘ h = q, when q factors through the mono.
std::optional<Morphism> lift_through_mono(const Morphism& mono, const Morphism& q);

struct DirectSum {
    FPModule module;
    std::vector<Morphism> inject;
    std::vector<Morphism> project;
};
DirectSum direct_sum(const std::vector<FPModule>& parts);

// x/(f_1,...,f_q): cokernel of (+) (f_i)_x, pruned to a small presentation.
FPModule quotient_by_scalars(const FPModule& x, const std::vector<Elem>& fs);

// Subobject of a fixed ambient module, given by a generator matrix whose
// columns live in A^{gens(ambient)}. Equality is equality of canonical
// forms (Hermite over Z, reduced echelon over fields, integer Hermite of
// the lifted lattice over Z/m).
class Subobject {
  public:
    Subobject(FPModule ambient, Matrix generators);
    static Subobject zero(const FPModule& ambient);
    static Subobject full(const FPModule& ambient);

    const FPModule& ambient() const { return ambient_; }
    const Matrix& generators() const { return gens_; }
    const Matrix& canonical() const { return canon_; }
    std::string key() const;

  private:
    FPModule ambient_;
    Matrix gens_;
    Matrix canon_;
};

Subobject sub_join(const Subobject& a, const Subobject& b);
Subobject sub_meet(const Subobject& a, const Subobject& b);
bool sub_eq(const Subobject& a, const Subobject& b);
bool sub_leq(const Subobject& a, const Subobject& b);

// Image of f as a subobject of its target.
Subobject image_subobject(const Morphism& f);

// The module b / (a ∧ b); equals b/a when a <= b.
FPModule sub_quotient(const Subobject& b, const Subobject& a);

// Minimal presentation of a module together with the isomorphisms both ways.
struct Pruned {
    FPModule module;
    Morphism to_orig;    // module -> original (iso)
    Morphism from_orig;  // original -> module (iso)
};
Pruned prune(const FPModule& m);

}  // namespace admcube
