#include "abl/poly.hpp"

#include <algorithm>
#include <sstream>

namespace abl {

Poly::Poly(std::vector<Rat> coeffs, std::optional<Int> modulus)
    : c_(std::move(coeffs)), mod_(std::move(modulus)) {
    if (mod_ && *mod_ < 2) throw input_error("polynomial modulus must be >= 2");
    normalize();
}

void Poly::normalize() {
    if (mod_) {
        for (auto& q : c_) {
            if (q.get_den() != 1) {
                Int inv = invmod(Int(q.get_den()), *mod_);
                q = Rat(mod(Int(q.get_num()) * inv, *mod_));
            } else {
                q = Rat(mod(Int(q.get_num()), *mod_));
            }
        }
    }
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(const Rat& c) {
    return Poly(std::vector<Rat>{c});
}

Poly Poly::x() {
    return Poly(std::vector<Rat>{Rat(0), Rat(1)});
}

Poly Poly::from_ints(const std::vector<Int>& coeffs, std::optional<Int> modulus) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (auto& z : coeffs) c.emplace_back(z);
    return Poly(std::move(c), std::move(modulus));
}

const Rat& Poly::coeff(long i) const {
    static const Rat zero(0);
    if (i < 0 || i > degree()) return zero;
    return c_[i];
}

const Rat& Poly::lc() const {
    if (is_zero()) throw input_error("leading coefficient of zero polynomial");
    return c_.back();
}

bool Poly::has_integer_coeffs() const {
    for (auto& q : c_)
        if (q.get_den() != 1) return false;
    return true;
}

std::vector<Int> Poly::int_coeffs() const {
    if (!has_integer_coeffs()) throw input_error("non-integral coefficients");
    std::vector<Int> out;
    out.reserve(c_.size());
    for (auto& q : c_) out.emplace_back(q.get_num());
    return out;
}

Poly Poly::operator-() const {
    std::vector<Rat> c;
    c.reserve(c_.size());
    for (auto& q : c_) c.push_back(-q);
    return Poly(std::move(c), mod_);
}

static std::optional<Int> join_mod(const std::optional<Int>& a, const std::optional<Int>& b) {
    if (a && b && *a != *b) throw input_error("modulus mismatch");
    return a ? a : b;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rat> c(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < c_.size()) c[i] += c_[i];
        if (i < o.c_.size()) c[i] += o.c_[i];
    }
    return Poly(std::move(c), join_mod(mod_, o.mod_));
}

Poly Poly::operator-(const Poly& o) const {
    return *this + (-o);
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(std::vector<Rat>{}, join_mod(mod_, o.mod_));
    std::vector<Rat> c(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(c), join_mod(mod_, o.mod_));
}

Poly Poly::operator*(const Rat& s) const {
    std::vector<Rat> c;
    c.reserve(c_.size());
    for (auto& q : c_) c.push_back(q * s);
    return Poly(std::move(c), mod_);
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    if (d.is_zero()) throw input_error("division by zero polynomial");
    auto m = join_mod(mod_, d.mod_);
    Rat lcinv;
    if (m) {
        lcinv = Rat(invmod(Int(d.lc().get_num()), *m));
    } else {
        lcinv = 1 / d.lc();
    }
    std::vector<Rat> rem = c_;
    std::vector<Rat> quo(std::max<long>(0, degree() - d.degree() + 1), Rat(0));
    for (long i = degree(); i >= d.degree(); --i) {
        if (rem[i] == 0) continue;
        Rat q = rem[i] * lcinv;
        if (m) q = Rat(mod(Int(q.get_num()), *m));
        quo[i - d.degree()] = q;
        for (long j = 0; j <= d.degree(); ++j) rem[i - d.degree() + j] -= q * d.c_[j];
    }
    return {Poly(std::move(quo), m), Poly(std::move(rem), m)};
}

Poly Poly::operator/(const Poly& d) const { return divrem(d).first; }
Poly Poly::operator%(const Poly& d) const { return divrem(d).second; }

bool Poly::divides(const Poly& g) const {
    if (is_zero()) return g.is_zero();
    return g.divrem(*this).second.is_zero();
}

Poly Poly::derivative() const {
    if (degree() <= 0) return Poly(std::vector<Rat>{}, mod_);
    std::vector<Rat> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(i);
    return Poly(std::move(c), mod_);
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (long i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) throw input_error("monic of zero polynomial");
    if (mod_) {
        Rat s(invmod(Int(lc().get_num()), *mod_));
        return *this * s;
    }
    return *this * (1 / lc());
}

Poly Poly::shifted(const Int& a) const {
    Poly g = Poly(std::vector<Rat>{Rat(a), Rat(1)}, mod_);
    return compose(g);
}

Poly Poly::compose(const Poly& g) const {
    Poly acc(std::vector<Rat>{}, join_mod(mod_, g.mod_));
    for (long i = degree(); i >= 0; --i) acc = acc * g + constant(c_[i]);
    return acc;
}

Poly Poly::with_modulus(const Int& m) const {
    return Poly(c_, m);
}

Poly Poly::lift_rational() const {
    return Poly(c_, std::nullopt);
}

Poly Poly::primitive() const {
    if (is_zero()) return *this;
    Int den(1), num(0);
    for (auto& q : c_) den = lcm(den, Int(q.get_den()));
    for (auto& q : c_) num = gcd(num, Int(q.get_num() * den / q.get_den()));
    Rat s = Rat(den) / Rat(num);
    if (lc() < 0) s = -s;
    return *this * s;
}

int Poly::cmp(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (long i = 0; i <= a.degree(); ++i) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i] ? -1 : 1;
    }
    return 0;
}

std::string Poly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        Rat c = c_[i];
        if (!first) os << (c < 0 && !mod_ ? " - " : " + ");
        if (c < 0 && !first && !mod_) c = -c;
        first = false;
        if (i == 0 || c != 1) {
            os << c.get_str();
            if (i > 0) os << "*";
        }
        if (i > 0) os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

Poly Poly::cyclotomic(const Int& n) {
    if (n < 1) throw input_error("cyclotomic index must be positive");
    std::vector<Rat> xn(mpz_get_ui(n.get_mpz_t()) + 1, Rat(0));
    xn[0] = -1;
    xn.back() = 1;
    Poly f(std::move(xn));
    for (auto& d : divisors(n)) {
        if (d == n) continue;
        f = f / cyclotomic(d);
    }
    return f;
}

Poly Poly::eta_min_poly(long t) {
    if (t < 2) throw input_error("eta_min_poly needs t >= 2");
    Poly f = Poly::x();  // eta_2 = 0
    Poly sub = Poly(std::vector<Rat>{Rat(-2), Rat(0), Rat(1)});  // x^2 - 2
    for (long k = 2; k < t; ++k) f = f.compose(sub);
    return f;
}

Poly Poly::i_eta_min_poly(long t) {
    if (t < 2) throw input_error("i_eta_min_poly needs t >= 2");
    // i*eta_t is a root of p_{t-1}(-x^2-2) where p is the eta tower:
    // (i eta_t)^2 = -eta_t^2 = -2 - eta_{t-1}
    Poly base = (t == 2) ? Poly::x() : eta_min_poly(t - 1);
    Poly sub = Poly(std::vector<Rat>{Rat(-2), Rat(0), Rat(-1)});  // -x^2 - 2
    Poly f = base.compose(sub);
    if (f.lc() < 0) f = -f;
    return f;
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        Poly r2 = r0 % r1;
        r0 = r1;
        r1 = r2;
    }
    if (r0.is_zero()) return r0;
    return r0.monic();
}

Rat resultant(const Poly& a, const Poly& b) {
    // subresultant-free Euclidean computation over Q with degree bookkeeping
    if (a.is_zero() || b.is_zero()) return Rat(0);
    Poly f = a, g = b;
    Rat res(1);
    bool swapped = false;
    if (f.degree() < g.degree()) {
        std::swap(f, g);
        if ((a.degree() & 1) && (b.degree() & 1)) res = -res;
        swapped = true;
    }
    (void)swapped;
    while (g.degree() > 0) {
        Poly r = f % g;
        long df = f.degree(), dg = g.degree(), dr = r.is_zero() ? -1 : r.degree();
        // res(f, g) = lc(g)^(df - dr) * (-1)^(df*dg) * res(g, r)
        Rat lg = g.lc();
        Rat scale(1);
        for (long i = 0; i < df - (dr < 0 ? 0 : dr); ++i) scale *= lg;
        if (r.is_zero()) {
            if (dg == 0) break;
            return Rat(0);
        }
        if ((df & 1) && (dg & 1)) res = -res;
        res *= scale;
        f = g;
        g = r;
    }
    if (g.is_zero()) return Rat(0);
    // g is a nonzero constant
    Rat c = g.coeff(0);
    Rat scale(1);
    for (long i = 0; i < f.degree(); ++i) scale *= c;
    return res * scale;
}

Rat discriminant(const Poly& f) {
    if (f.degree() < 1) throw input_error("discriminant needs degree >= 1");
    Rat r = resultant(f, f.derivative()) / f.lc();
    long d = f.degree();
    if (((d * (d - 1)) / 2) % 2 == 1) r = -r;
    return r;
}

Poly squarefree_part(const Poly& f) {
    if (f.is_zero()) throw input_error("squarefree part of zero");
    if (f.degree() == 0) return Poly::one();
    Poly g = gcd(f, f.derivative());
    return (f / g).monic();
}

}  // namespace abl
