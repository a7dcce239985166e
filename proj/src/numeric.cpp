#include "abl/numeric.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace abl {

Int invmod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw input_error("element not invertible mod " + m.get_str());
    return r;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Int next_prime(const Int& n) {
    Int r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

long valuation(const Int& a, const Int& p) {
    if (a == 0) throw input_error("valuation of zero");
    Int r = a, q;
    long v = 0;
    while (true) {
        Int rem;
        mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
        if (rem != 0) break;
        r = q;
        ++v;
    }
    return v;
}

long valuation(const Rat& a, const Int& p) {
    if (a == 0) throw input_error("valuation of zero");
    return valuation(Int(a.get_num()), p) - valuation(Int(a.get_den()), p);
}

std::vector<std::pair<Int, int>> factor_int(Int n) {
    if (n < 1) throw input_error("factor_int expects positive input");
    std::vector<std::pair<Int, int>> out;
    Int d = 2;
    while (d * d <= n) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.push_back({d, e});
        }
        d = (d == 2) ? Int(3) : Int(d + 2);
    }
    if (n > 1) out.push_back({n, 1});
    return out;
}

std::vector<Int> divisors(const Int& n) {
    auto fac = factor_int(n);
    std::vector<Int> out{1};
    for (auto& [p, e] : fac) {
        std::vector<Int> next;
        Int pk = 1;
        for (int k = 0; k <= e; ++k) {
            for (auto& d : out) next.push_back(d * pk);
            pk *= p;
        }
        out = next;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Int euler_phi(const Int& n) {
    Int r = 1;
    for (auto& [p, e] : factor_int(n)) r *= pow_ui(p, e - 1) * (p - 1);
    return r;
}

std::vector<Int> units_mod(const Int& n) {
    std::vector<Int> out;
    for (Int a = 1; a < n; ++a)
        if (gcd(a, n) == 1) out.push_back(a);
    if (n == 1) out.push_back(0);  // the trivial group, represented by {0 mod 1}
    return out;
}

std::vector<std::vector<Int>> subgroups_of_unit_group(const Int& n) {
    auto units = units_mod(n);
    if (n <= 2) return {units};
    std::set<std::vector<Int>> found;
    std::vector<std::vector<Int>> queue;
    // closure of a generating set
    auto close = [&](std::vector<Int> gens) {
        std::set<Int> h{1};
        std::vector<Int> work{1};
        while (!work.empty()) {
            Int x = work.back();
            work.pop_back();
            for (auto& g : gens) {
                Int y = mod(x * g, n);
                if (h.insert(y).second) work.push_back(y);
            }
        }
        return std::vector<Int>(h.begin(), h.end());
    };
    found.insert({Int(1)});
    queue.push_back({Int(1)});
    while (!queue.empty()) {
        auto h = queue.back();
        queue.pop_back();
        for (auto& u : units) {
            auto gens = h;
            gens.push_back(u);
            auto bigger = close(gens);
            if (found.insert(bigger).second) queue.push_back(bigger);
        }
    }
    return {found.begin(), found.end()};
}

std::string rat_to_string(const Rat& q) {
    return q.get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw input_error("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

}  // namespace abl
