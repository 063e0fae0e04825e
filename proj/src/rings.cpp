#include "admcube/rings.hpp"

namespace admcube {

namespace {

bool is_prime_trial(const Int& p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    Int d = 3;
    while (d * d <= p) {
        if (p % d == 0) return false;
        d += 2;
    }
    return true;
}

}  // namespace

Ring Ring::prime_field(Int p) {
    if (!is_prime_trial(p)) {
        throw Error("prime_field: " + p.get_str() + " is not prime");
    }
    return Ring(RingKind::PrimeField, std::move(p));
}

Ring Ring::integers_mod(Int m) {
    if (m < 2) throw Error("integers_mod: modulus must be >= 2");
    return Ring(RingKind::IntegersMod, std::move(m));
}

std::string Ring::to_string() const {
    switch (kind_) {
        case RingKind::Integers: return "Z";
        case RingKind::Rationals: return "Q";
        case RingKind::PrimeField: return "F_" + modulus_.get_str();
        case RingKind::IntegersMod: return "Z/" + modulus_.get_str();
    }
    return "?";
}

Elem::Elem(Ring ring, Int num) : ring_(std::move(ring)), num_(std::move(num)), den_(1) {
    if (ring_.is_finite()) num_ = int_mod(num_, ring_.modulus());
}

Elem::Elem(Ring ring, Int num, Int den)
    : ring_(std::move(ring)), num_(std::move(num)), den_(std::move(den)) {
    if (ring_.kind() != RingKind::Rationals) {
        if (den_ != 1) throw Error("Elem: denominator only valid over Q");
        if (ring_.is_finite()) num_ = int_mod(num_, ring_.modulus());
        return;
    }
    if (den_ == 0) throw Error("Elem: zero denominator");
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    Int g = int_gcd(num_, den_);
    if (g > 1) {
        num_ = int_divexact(num_, g);
        den_ = int_divexact(den_, g);
    }
    if (num_ == 0) den_ = 1;
}

namespace {

void require_same_ring(const Elem& a, const Elem& b, const char* op) {
    if (a.ring() != b.ring()) {
        throw Error(std::string("ring mismatch in ") + op + ": " +
                    a.ring().to_string() + " vs " + b.ring().to_string());
    }
}

}  // namespace

Elem add(const Elem& a, const Elem& b) {
    require_same_ring(a, b, "add");
    if (a.ring().kind() == RingKind::Rationals) {
        return Elem(a.ring(), a.num() * b.den() + b.num() * a.den(), a.den() * b.den());
    }
    return Elem(a.ring(), a.num() + b.num());
}

Elem sub(const Elem& a, const Elem& b) {
    require_same_ring(a, b, "sub");
    if (a.ring().kind() == RingKind::Rationals) {
        return Elem(a.ring(), a.num() * b.den() - b.num() * a.den(), a.den() * b.den());
    }
    return Elem(a.ring(), a.num() - b.num());
}

Elem mul(const Elem& a, const Elem& b) {
    require_same_ring(a, b, "mul");
    if (a.ring().kind() == RingKind::Rationals) {
        return Elem(a.ring(), a.num() * b.num(), a.den() * b.den());
    }
    return Elem(a.ring(), a.num() * b.num());
}

Elem neg(const Elem& a) {
    if (a.ring().kind() == RingKind::Rationals) {
        return Elem(a.ring(), -a.num(), a.den());
    }
    return Elem(a.ring(), -a.num());
}

Classified classify(const Elem& a) {
    const Ring& r = a.ring();
    if (a.is_zero()) return {ElemClass::Zero, std::nullopt};
    switch (r.kind()) {
        case RingKind::Integers:
            if (a.num() == 1 || a.num() == -1) {
                return {ElemClass::Unit, Elem(r, a.num())};
            }
            return {ElemClass::NonUnitNonZero, std::nullopt};
        case RingKind::Rationals:
            return {ElemClass::Unit, Elem(r, a.den(), a.num())};
        case RingKind::PrimeField:
        case RingKind::IntegersMod: {
            Int p, q;
            Int g = int_gcdext(a.num(), r.modulus(), p, q);
            if (g == 1) return {ElemClass::Unit, Elem(r, p)};
            return {ElemClass::NonUnitNonZero, std::nullopt};
        }
    }
    throw Error("classify: unreachable");
}

bool is_unit(const Elem& a) { return classify(a).cls == ElemClass::Unit; }

Elem div_by_unit(const Elem& a, const Elem& u) {
    Classified c = classify(u);
    if (c.cls != ElemClass::Unit) throw Error("div_by_unit: divisor is not a unit");
    return mul(a, *c.inverse);
}

std::pair<Elem, Elem> gcd_lcm(const Elem& a, const Elem& b) {
    require_same_ring(a, b, "gcd_lcm");
    const Ring& r = a.ring();
    if (r.kind() == RingKind::Integers) {
        Int g = int_gcd(a.num(), b.num());
        Int l = int_lcm(a.num(), b.num());
        return {Elem(r, g), Elem(r, l)};
    }
    if (r.is_field()) {
        bool az = a.is_zero(), bz = b.is_zero();
        Elem g(r, (az && bz) ? 0 : 1);
        Elem l(r, (az || bz) ? 0 : 1);
        return {g, l};
    }
    throw Error("gcd_lcm: unsupported over " + r.to_string());
}

std::string to_string(const Elem& a) {
    if (a.ring().kind() == RingKind::Rationals) {
        return a.num().get_str() + "/" + a.den().get_str();
    }
    return a.num().get_str();
}

Elem parse_elem(const Ring& ring, std::string_view text) {
    auto bad = [&] { return Error("parse_elem: malformed element '" + std::string(text) + "'"); };
    if (text.empty()) throw bad();
    auto slash = text.find('/');
    auto parse_int = [&](std::string_view s) {
        if (s.empty()) throw bad();
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) throw bad();
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw bad();
        }
        return Int(std::string(s));
    };
    if (slash == std::string_view::npos) {
        return Elem(ring, parse_int(text));
    }
    if (ring.kind() != RingKind::Rationals) {
        throw Error("parse_elem: fraction not valid over " + ring.to_string());
    }
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw bad();
    return Elem(ring, std::move(num), std::move(den));
}

}  // namespace admcube
