#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace abl {

using Int = mpz_class;
using Rat = mpq_class;

struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct size_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Raised when a p-adic computation cannot be certified within the precision cap.
struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int pow_ui(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

// b^e mod m, e >= 0
inline Int powmod(const Int& b, const Int& e, const Int& m) {
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

// canonical residue in [0, m)
inline Int mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

// inverse of a mod m; throws if not invertible
Int invmod(const Int& a, const Int& m);

bool is_prime(const Int& n);
Int next_prime(const Int& n);

// p-adic valuation of a nonzero integer; throws on zero
long valuation(const Int& a, const Int& p);
// valuation of a nonzero rational
long valuation(const Rat& a, const Int& p);

// trial-division factorization, ascending primes; desk scale only
std::vector<std::pair<Int, int>> factor_int(Int n);
std::vector<Int> divisors(const Int& n);
Int euler_phi(const Int& n);
// units mod n, ascending
std::vector<Int> units_mod(const Int& n);

// all subgroups of (Z/n)^* as sorted residue vectors (each contains 1)
std::vector<std::vector<Int>> subgroups_of_unit_group(const Int& n);

std::string rat_to_string(const Rat& q);
Rat rat_from_string(const std::string& s);

}  // namespace abl
