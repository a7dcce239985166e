#pragma once

#include <optional>
#include <vector>

#include "abl/poly.hpp"

namespace abl {

// Lower convex hull of (i, v_p(a_i)). Slopes are strictly increasing; a root
// of valuation w corresponds to a segment of slope -w (sign convention fixed
// here and used throughout).
struct NewtonPolygon {
    struct Segment {
        Rat slope;
        long length;
    };
    std::vector<Segment> segments;
};

NewtonPolygon newton_polygon(const Poly& f, const Int& p);

// Element of Q_p known to precision p^M.
struct PadicElement {
    Int prime;
    long precision = 0;
    Int value;                      // representative in [0, p^M)
    std::optional<long> valuation;  // nullopt encodes "zero at this precision"

    static PadicElement make(const Int& p, long M, const Int& v);
};

// One Q_p-irreducible factor of the input, known to precision p^prec.
struct LocalFactor {
    std::vector<Int> g;  // monic, coefficients in [0, p^prec)
    long prec = 0;
    long e = 0;  // ramification index
    long f = 0;  // residue degree
};

struct PadicFactorization {
    Int p;
    long prec = 0;
    std::vector<LocalFactor> factors;  // canonical order
};

// Precision policy: start at v_p(disc f) + 8, double on failure, cap at
// 2^12 (ABL_PRECISION_CAP overrides). Throws precision_error when the cap is
// reached without a certified answer, input_error on bad input.
PadicFactorization padic_factor(const Poly& f, const Int& p, long initial_precision = -1);

long precision_cap();

enum class TriBool { yes, no, undecided };

// Does the monic integer polynomial h have a root in the local field
// Q_p[x]/(g)?  g is a Q_p-irreducible factor known mod p^prec.
TriBool has_root_in_local_field(const Poly& h, const Int& p, const std::vector<Int>& g,
                                long prec);

// Roots of f in Q_p itself (from the degree-1 factors of padic_factor).
std::vector<PadicElement> padic_roots(const Poly& f, const Int& p);

}  // namespace abl
