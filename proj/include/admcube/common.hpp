#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace admcube {

// Arbitrary-precision integer. All arithmetic in the toolkit is exact;
// there is no overflow or floating point anywhere.
using Int = mpz_class;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int int_abs(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

// Exact quotient; caller guarantees divisibility.
inline Int int_divexact(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// Floor division and the matching remainder (r has the sign of b, |r| < |b|).
inline Int int_fdiv_q(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int int_mod(const Int& a, const Int& m) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// g = p*a + q*b via the extended Euclidean algorithm.
inline Int int_gcdext(const Int& a, const Int& b, Int& p, Int& q) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a.get_mpz_t(),
               b.get_mpz_t());
    return g;
}

}  // namespace admcube
