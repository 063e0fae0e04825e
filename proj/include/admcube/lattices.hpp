#pragma once

#include <map>
#include <memory>
#include <optional>

#include "admcube/fpmod.hpp"

namespace admcube {

// Finite lattice interface with interned elements. Joins/meets may be
// memoized by implementations; ids are stable.
class Lattice {
  public:
    virtual ~Lattice() = default;
    virtual int size() const = 0;
    virtual bool leq(int a, int b) = 0;
    virtual int join(int a, int b) = 0;
    virtual int meet(int a, int b) = 0;
    virtual std::string name(int a) const = 0;

    std::optional<int> top();
    std::optional<int> bottom();

  private:
    std::optional<std::optional<int>> top_, bottom_;
};

// Explicit lattice given by a leq table. Validates the partial-order axioms
// and the existence of all joins and meets.
class FiniteLattice : public Lattice {
  public:
    FiniteLattice(std::vector<std::string> names, std::vector<std::vector<bool>> leq_table);

    int size() const override { return static_cast<int>(names_.size()); }
    bool leq(int a, int b) override { return leq_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int join(int a, int b) override { return join_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    int meet(int a, int b) override { return meet_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
    std::string name(int a) const override { return names_[static_cast<std::size_t>(a)]; }
    int id_of(const std::string& nm) const;

    static FiniteLattice pentagon();  // N5: modularity counterexample
    static FiniteLattice diamond();   // M3: modular, not distributive
    static FiniteLattice chain(int n);

  private:
    std::vector<std::string> names_;
    std::vector<std::vector<bool>> leq_;
    std::vector<std::vector<int>> join_, meet_;
};

// Sublattice P(𝔵) of the subobject lattice of an ambient module, generated
// by a family and closed under join and meet. Closure is capped; exceeding
// the cap is an error, reported explicitly.
class SubobjectLattice : public Lattice {
  public:
    SubobjectLattice(FPModule ambient, std::vector<Subobject> generators, bool include_top,
                     int cap = 512);

    int size() const override { return static_cast<int>(elems_.size()); }
    bool leq(int a, int b) override;
    int join(int a, int b) override;
    int meet(int a, int b) override;
    std::string name(int a) const override;

    const Subobject& at(int a) const { return elems_[static_cast<std::size_t>(a)]; }
    const FPModule& ambient() const { return ambient_; }
    int id_of(const Subobject& s) const;  // must lie in the closure

  private:
    int intern(const Subobject& s);
    FPModule ambient_;
    std::vector<Subobject> elems_;
    std::map<std::string, int> by_key_;
    std::map<std::pair<int, int>, int> join_memo_, meet_memo_;
};

// Family 𝔵 = {x_s}_{s in S} of lattice elements, labels sorted; subfamilies
// are bitmasks over label positions.
struct ElementFamily {
    Lattice* lat;
    std::vector<std::string> labels;
    std::vector<int> elems;

    int n() const { return static_cast<int>(labels.size()); }
    uint32_t full() const { return n() == 0 ? 0 : ((1u << n()) - 1); }
};

ElementFamily make_family(Lattice& lat, std::vector<std::pair<std::string, int>> members);

// Join over a nonempty subfamily.
int join_over(const ElementFamily& f, uint32_t mask);
// Meet over a subfamily; the empty meet is the lattice top (error if absent).
int meet_over(const ElementFamily& f, uint32_t mask);
// Meet over a possibly-empty subfamily as a partial value: nullopt = "top",
// usable only as a neutral ∧-operand.
std::optional<int> meet_over_partial(const ElementFamily& f, uint32_t mask);
// x ∧ (partial): identity when the partial meet is the implicit top.
int meet_with_partial(Lattice& lat, int x, const std::optional<int>& partial);

// 𝔵 ∧ y elementwise.
ElementFamily family_meet_elem(const ElementFamily& f, int y);

// (𝔵_U, y) distributive: (∨_U x_u) ∧ y == ∨_U (x_u ∧ y).
bool distributive_pair(const ElementFamily& f, uint32_t u_mask, int y);

enum class FamilyMode { StrictlyDistributive, Admissible, UniversallyAdmissible, RegularSequence };

struct FamilyReport {
    bool holds;
    std::string witness;  // failing quantifier tuple
};
// RegularSequence uses `ordering` (positions into the family); other modes
// ignore it.
FamilyReport family_class(const ElementFamily& f, FamilyMode mode,
                          const std::vector<int>& ordering = {});

struct ModularReport {
    bool modular;
    std::string witness;  // failing triple
};
ModularReport is_modular(Lattice& lat);
// condition (2) of the modular-law lemma: a <= b, a∨c = b∨c, a∧c = b∧c => a = b
ModularReport modular_cancellation(Lattice& lat);
// a∨(b∧c) <= (a∨b)∧c for a <= c, in any lattice
bool semi_modular_law_holds(Lattice& lat);

struct IdealMapReport {
    bool sublattice_distributive;   // (1)
    bool map_preserves_meets;       // (2)
    bool meet_family_admissible;    // (3)
    bool family_universally_admissible;
    bool implications_ok;           // (1)<=>(2), (2)=>(3), (3)=>univ-adm
};
// Ideals of P(S) in the up-closed sense; requires a lattice top for the
// empty meet. |S| <= 4.
IdealMapReport ideal_map_check(const ElementFamily& f);

enum class TransferVariant { PropAdmSeqLem, CorAdmSeqCor, CorWithRemark };

struct TransferSide {
    bool hyp1;
    bool hyp2;
    bool conclusion;
    bool implication_ok;
};
struct TransferReport {
    bool domination;  // a_s >= b_s (corollary variants; true for the Prop)
    TransferSide adm;
    TransferSide univ;
};

// Prop variant: one family and one element y.
TransferReport transfer_check_prop(const ElementFamily& f, int y);
// Corollary variants: families a, b with matching labels.
TransferReport transfer_check_cor(const ElementFamily& fa, const ElementFamily& fb,
                                  TransferVariant variant);

}  // namespace admcube
