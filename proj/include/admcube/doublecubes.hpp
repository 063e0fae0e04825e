#pragma once

#include "admcube/cubes.hpp"

namespace admcube {

// Indices of a double S-cube are functions S -> {0,1,2}, encoded base-3
// (trit i = value at label position i), or equivalently ordered disjoint
// pairs (U,V) via U = {i : trit 1}, V = {i : trit 2}.
int pow3i(int n);
int trit_at(uint32_t code, int pos);
uint32_t with_trit(uint32_t code, int pos, int value);
uint32_t code_from_pair(uint32_t u_mask, uint32_t v_mask);
std::pair<uint32_t, uint32_t> pair_from_code(uint32_t code, int n);
// (U,V) <= (U',V') iff V ⊆ V' and U ⊆ U' ∪ V'; equals pointwise trit order.
bool dp_leq(uint32_t a, uint32_t b, int n);

std::string double_vertex_key(const CubeIndex& idx, uint32_t code);  // "a=0,b=2"
uint32_t double_code_from_key(const CubeIndex& idx, const std::string& key);

// The order isomorphism P(S) ≅ DP_A(S): T |-> (T ⊖ A, T ∩ A), and its
// inverse (U,V) |-> (U \ A) ∪ V.
uint32_t tot_a_code(uint32_t t_mask, uint32_t a_mask);
uint32_t tot_a_inverse(uint32_t code, uint32_t a_mask, int n);

// Contravariant functor on [2]^S; boundaries are the unit steps
// x_J -> x_{J - δ_s} for J(s) >= 1.
class DoubleCube {
  public:
    DoubleCube(CubeIndex idx, Ring ring, std::vector<FPModule> vertices,
               std::map<std::pair<uint32_t, int>, Morphism> boundaries);

    const CubeIndex& index() const { return idx_; }
    const Ring& ring() const { return ring_; }
    int n() const { return idx_.n(); }
    const FPModule& vertex(uint32_t code) const;
    const Morphism& boundary(uint32_t code, int pos) const;

    // composite x(J' <= J), path independent on valid double cubes
    Morphism morphism_of(uint32_t from_code, uint32_t to_code) const;

  private:
    CubeIndex idx_;
    Ring ring_;
    std::vector<FPModule> vertex_;
    std::map<std::pair<uint32_t, int>, Morphism> bnd_;
};

bool double_cube_equal(const DoubleCube& a, const DoubleCube& b);

struct DoubleReport {
    bool valid;
    bool monic;
    std::string witness;
};
DoubleReport validate_double(const DoubleCube& x);
bool is_monic_double(const DoubleCube& x);

// Pull-backs along the index maps e_T (U |-> U + T) and 2 (U |-> 2χ_U).
Cube pullback_e_t(const DoubleCube& x, uint32_t t_mask);
Cube pullback_two(const DoubleCube& x);

// Restriction x|_{T,(A,B)}^{(C,D)}: a functor on DP_{(A,B)}(T), materialized
// on the valid index codes only.
struct PartialDoubleCube {
    CubeIndex idx;  // labels of T
    std::vector<uint32_t> domain;
    std::map<uint32_t, FPModule> vertex;
    std::map<std::pair<uint32_t, int>, Morphism> bnd;  // unit steps inside the domain
};
PartialDoubleCube restrict_double(const DoubleCube& x, uint32_t t_mask, uint32_t a_mask,
                                  uint32_t b_mask, uint32_t c_mask, uint32_t d_mask);

// Patching family: S-cubes {x^T} with x^T|^∅_{S\{t}} = x^{T\{t}}|^{{t}}_{S\{t}};
// glues to the unique double cube with e_T^* Pat = x^T.
DoubleCube patch(const CubeIndex& idx, const std::map<uint32_t, Cube>& family);
std::map<uint32_t, Cube> unpatch(const DoubleCube& x);
// throws with the offending (T, t) when the condition fails
void check_patching_condition(const CubeIndex& idx, const std::map<uint32_t, Cube>& family);

// Canonical comparison C(x): x -> Fib(Ux) for the associated [2]-covering.
struct DoubleFibComparison {
    std::map<uint32_t, Morphism> component;
    bool all_iso;
};
DoubleFibComparison canonical_fib_comparison(const DoubleCube& x);
bool is_fibered_double(const DoubleCube& x);

// The five equivalent fiberedness conditions for double cubes.
struct FibDoubleConditions {
    bool all_et_fibered;          // (i)
    bool two_and_proper_fibered;  // (ii)
    bool double_fibered;          // (iii)
    bool all_et_components_iso;   // (iv)
    bool two_and_proper_iso;      // (v)
};
FibDoubleConditions fibered_double_conditions(const DoubleCube& x);

// x_{U,V} = a^{∧U} ∧ b^{∧V} inside x_{∅,∅} for monic x with 2^* and all
// proper e_T^* fibered.
struct FibDescribeReport {
    bool applies;
    bool holds;
    std::string witness;
};
FibDescribeReport fib_describe_check(const DoubleCube& x);

enum class DctVariant { Dct, BigAdm };

struct DctReport {
    std::vector<std::pair<std::string, bool>> hypotheses;
    bool hypotheses_all;
    bool conclusion;
    bool implication_ok;
    std::string witness;
};
DctReport dct_check(const DoubleCube& x, DctVariant variant);

}  // namespace admcube
