#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "admcube/common.hpp"

namespace admcube {

enum class RingKind { Integers, Rationals, PrimeField, IntegersMod };

// Descriptor of one of the four supported coefficient rings. Cheap value
// type; elements and matrices carry a copy.
class Ring {
  public:
    static Ring integers() { return Ring(RingKind::Integers, 0); }
    static Ring rationals() { return Ring(RingKind::Rationals, 0); }
    static Ring prime_field(Int p);   // checks primality by trial division
    static Ring integers_mod(Int m);  // m >= 2, composite allowed

    RingKind kind() const { return kind_; }
    const Int& modulus() const { return modulus_; }
    bool is_field() const {
        return kind_ == RingKind::Rationals || kind_ == RingKind::PrimeField;
    }
    bool is_finite() const {
        return kind_ == RingKind::PrimeField || kind_ == RingKind::IntegersMod;
    }

    bool operator==(const Ring& o) const {
        return kind_ == o.kind_ && modulus_ == o.modulus_;
    }
    bool operator!=(const Ring& o) const { return !(*this == o); }

    std::string to_string() const;

  private:
    Ring(RingKind k, Int m) : kind_(k), modulus_(std::move(m)) {}
    RingKind kind_;
    Int modulus_;
};

// Ring element in canonical form: integers as-is, rationals in lowest terms
// with positive denominator, residues in [0, m). Equality is structural.
class Elem {
  public:
    Elem(Ring ring, Int num);            // canonicalizes
    Elem(Ring ring, Int num, Int den);   // rationals only

    const Ring& ring() const { return ring_; }
    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }

    bool operator==(const Elem& o) const {
        return ring_ == o.ring_ && num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const Elem& o) const { return !(*this == o); }

  private:
    Ring ring_;
    Int num_;
    Int den_;  // 1 except for rationals
};

Elem add(const Elem& a, const Elem& b);
Elem sub(const Elem& a, const Elem& b);
Elem mul(const Elem& a, const Elem& b);
Elem neg(const Elem& a);

enum class ElemClass { Zero, Unit, NonUnitNonZero };

struct Classified {
    ElemClass cls;
    std::optional<Elem> inverse;  // present exactly when cls == Unit
};

Classified classify(const Elem& a);

bool is_unit(const Elem& a);

// Exact division a / u by a unit u.
Elem div_by_unit(const Elem& a, const Elem& u);

// gcd >= 0 canonical, lcm = |ab|/gcd, lcm(0,0) = 0. Supported over the
// integers and over fields (where gcd is 0/1 by convention). Z/m with
// composite modulus is rejected.
std::pair<Elem, Elem> gcd_lcm(const Elem& a, const Elem& b);

// Text encoding used bit-exactly by the file format: decimal for integers
// and residues, "p/q" with q > 0 and gcd(p, q) = 1 for rationals.
std::string to_string(const Elem& a);
Elem parse_elem(const Ring& ring, std::string_view text);

}  // namespace admcube
