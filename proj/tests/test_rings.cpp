#include <random>

#include "admcube/rings.hpp"
#include "doctest.h"

using namespace admcube;

TEST_CASE("arithmetic over the four rings") {
    Ring z = Ring::integers();
    CHECK(add(Elem(z, 2), Elem(z, 3)) == Elem(z, 5));
    CHECK(sub(Elem(z, 2), Elem(z, 3)) == Elem(z, -1));

    Ring z6 = Ring::integers_mod(6);
    CHECK(mul(Elem(z6, 2), Elem(z6, 3)).is_zero());  // zero divisor

    Ring q = Ring::rationals();
    CHECK(add(Elem(q, 1, 2), Elem(q, 1, 3)) == Elem(q, 5, 6));
    CHECK(Elem(q, 2, -4) == Elem(q, -1, 2));
    CHECK(Elem(q, 0, 7) == Elem(q, 0, 1));

    Ring f5 = Ring::prime_field(5);
    CHECK(add(Elem(f5, 3), Elem(f5, 4)) == Elem(f5, 2));

    CHECK_THROWS_AS(add(Elem(z, 1), Elem(z6, 1)), Error);
}

TEST_CASE("ring constructors check invariants") {
    CHECK_THROWS_AS(Ring::prime_field(6), Error);
    CHECK_THROWS_AS(Ring::prime_field(1), Error);
    CHECK_NOTHROW(Ring::prime_field(2));
    CHECK_NOTHROW(Ring::prime_field(97));
    CHECK_THROWS_AS(Ring::integers_mod(1), Error);
}

TEST_CASE("classify with exact inverses") {
    Ring z = Ring::integers();
    auto c = classify(Elem(z, -1));
    CHECK(c.cls == ElemClass::Unit);
    CHECK(*c.inverse == Elem(z, -1));
    CHECK(classify(Elem(z, 0)).cls == ElemClass::Zero);
    CHECK(classify(Elem(z, 2)).cls == ElemClass::NonUnitNonZero);

    Ring z6 = Ring::integers_mod(6);
    auto c5 = classify(Elem(z6, 5));
    CHECK(c5.cls == ElemClass::Unit);
    CHECK(*c5.inverse == Elem(z6, 5));
    CHECK(classify(Elem(z6, 2)).cls == ElemClass::NonUnitNonZero);

    // brute force: over Z/m, NonUnitNonZero means no residue multiplies to 1
    for (long m : {4L, 6L, 12L}) {
        Ring zm = Ring::integers_mod(m);
        for (long a = 0; a < m; ++a) {
            auto cls = classify(Elem(zm, a));
            bool found = false;
            for (long b = 0; b < m; ++b) {
                if (mul(Elem(zm, a), Elem(zm, b)).is_one()) found = true;
            }
            CHECK(found == (cls.cls == ElemClass::Unit));
            if (cls.inverse) CHECK(mul(Elem(zm, a), *cls.inverse).is_one());
        }
    }

    Ring q = Ring::rationals();
    auto cq = classify(Elem(q, 3, 4));
    CHECK(cq.cls == ElemClass::Unit);
    CHECK(mul(Elem(q, 3, 4), *cq.inverse).is_one());
}

TEST_CASE("gcd_lcm conventions") {
    Ring z = Ring::integers();
    auto [g, l] = gcd_lcm(Elem(z, 4), Elem(z, 6));
    CHECK(g == Elem(z, 2));
    CHECK(l == Elem(z, 12));
    auto [g0, l0] = gcd_lcm(Elem(z, 0), Elem(z, 5));
    CHECK(g0 == Elem(z, 5));
    CHECK(l0 == Elem(z, 0));
    auto [gz, lz] = gcd_lcm(Elem(z, 0), Elem(z, 0));
    CHECK(gz.is_zero());
    CHECK(lz.is_zero());

    Ring f7 = Ring::prime_field(7);
    auto [gf, lf] = gcd_lcm(Elem(f7, 3), Elem(f7, 5));
    CHECK(gf.is_one());
    CHECK(lf.is_one());

    CHECK_THROWS_AS(gcd_lcm(Elem(Ring::integers_mod(6), 2), Elem(Ring::integers_mod(6), 3)),
                    Error);
}

TEST_CASE("ring axioms on randomized triples") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-40, 40);
    std::vector<Ring> rings{Ring::integers(), Ring::rationals(), Ring::prime_field(7),
                            Ring::integers_mod(12)};
    for (const Ring& r : rings) {
        for (int it = 0; it < 200; ++it) {
            Elem a = r.kind() == RingKind::Rationals
                         ? Elem(r, dist(rng), 1 + std::abs(dist(rng)))
                         : Elem(r, dist(rng));
            Elem b = r.kind() == RingKind::Rationals
                         ? Elem(r, dist(rng), 1 + std::abs(dist(rng)))
                         : Elem(r, dist(rng));
            Elem c = Elem(r, dist(rng));
            CHECK(add(add(a, b), c) == add(a, add(b, c)));
            CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
            CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
            CHECK(add(a, b) == add(b, a));
            CHECK(mul(a, b) == mul(b, a));
            CHECK(add(a, neg(a)).is_zero());
        }
    }
}

TEST_CASE("text round trip") {
    Ring q = Ring::rationals();
    Elem half(q, 1, 2);
    CHECK(to_string(half) == "1/2");
    CHECK(parse_elem(q, "1/2") == half);
    CHECK(parse_elem(q, "-4/6") == Elem(q, -2, 3));
    CHECK(parse_elem(q, "3") == Elem(q, 3, 1));
    CHECK(to_string(Elem(q, 3, 1)) == "3/1");

    Ring z = Ring::integers();
    CHECK(to_string(Elem(z, -17)) == "-17");
    CHECK(parse_elem(z, "-17") == Elem(z, -17));
    CHECK_THROWS_AS(parse_elem(z, "1/2"), Error);
    CHECK_THROWS_AS(parse_elem(z, "x"), Error);
    CHECK_THROWS_AS(parse_elem(z, ""), Error);

    Ring z6 = Ring::integers_mod(6);
    CHECK(to_string(parse_elem(z6, "-1")) == "5");
}
