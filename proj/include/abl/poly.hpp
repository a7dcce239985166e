#pragma once

#include <optional>
#include <string>
#include <vector>

#include "abl/numeric.hpp"

namespace abl {

// Dense univariate polynomial, lowest degree first. Coefficients are exact
// rationals; when a modulus m is present every coefficient is an integer
// residue in [0, m) and arithmetic is done mod m.
class Poly {
  public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs, std::optional<Int> modulus = std::nullopt);

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(Rat(1)); }
    static Poly constant(const Rat& c);
    static Poly x();
    static Poly from_ints(const std::vector<Int>& coeffs,
                          std::optional<Int> modulus = std::nullopt);
    // x^n - 1 divided by the proper cyclotomic factors
    static Poly cyclotomic(const Int& n);
    // minimal polynomial over Q of eta_t = zeta_{2^t} + zeta_{2^t}^{-1}
    // (the paper's 2 cos(2*pi/2^t) generator); t >= 2
    static Poly eta_min_poly(long t);
    // minimal polynomial over Q of i * eta_t; t >= 2
    static Poly i_eta_min_poly(long t);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    const Rat& coeff(long i) const;
    const Rat& lc() const;
    const std::vector<Rat>& coeffs() const { return c_; }
    const std::optional<Int>& modulus() const { return mod_; }

    bool is_monic() const { return !is_zero() && lc() == 1; }
    bool has_integer_coeffs() const;
    std::vector<Int> int_coeffs() const;  // throws unless integral

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Rat& s) const;
    bool operator==(const Poly& o) const { return c_ == o.c_; }

    // quotient/remainder; requires invertible leading coefficient
    std::pair<Poly, Poly> divrem(const Poly& d) const;
    Poly operator/(const Poly& d) const;
    Poly operator%(const Poly& d) const;
    bool divides(const Poly& g) const;  // this | g

    Poly derivative() const;
    Rat eval(const Rat& x) const;
    Poly monic() const;
    Poly shifted(const Int& a) const;      // f(x + a)
    Poly compose(const Poly& g) const;     // f(g(x))
    Poly with_modulus(const Int& m) const; // reduce rationals mod m (denominators must be units)
    Poly lift_rational() const;            // forget the modulus

    // primitive integer multiple with positive leading coefficient
    Poly primitive() const;

    // ordering used for canonical factor output: degree, then coefficient
    // sequence from the constant term up
    static int cmp(const Poly& a, const Poly& b);

    std::string str(const std::string& var = "x") const;

  private:
    void normalize();
    std::vector<Rat> c_;
    std::optional<Int> mod_;
};

Poly gcd(const Poly& a, const Poly& b);             // monic gcd (field coefficients)
Rat resultant(const Poly& a, const Poly& b);        // over Q
Rat discriminant(const Poly& f);
Poly squarefree_part(const Poly& f);                // over Q

}  // namespace abl
