#include "artin/monomial.hpp"

#include <stdexcept>

namespace artin {

namespace {

void enumerate(int remaining, int var, std::vector<int>& cur, std::vector<Monomial>& out) {
    if (var == static_cast<int>(cur.size()) - 1) {
        cur[var] = remaining;
        out.push_back(Monomial(cur));
        return;
    }
    for (int e = remaining; e >= 0; --e) {
        cur[var] = e;
        enumerate(remaining - e, var + 1, cur, out);
    }
}

} // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    if (nvars < 1) throw std::invalid_argument("monomials_of_degree: need at least one variable");
    if (d < 0) throw std::invalid_argument("monomials_of_degree: negative degree");
    std::vector<Monomial> out;
    std::vector<int> cur(nvars, 0);
    enumerate(d, 0, cur, out);
    return out;
}

std::vector<Monomial> monomials_below(int nvars, int cap) {
    std::vector<Monomial> out;
    for (int d = 0; d < cap; ++d) {
        auto layer = monomials_of_degree(nvars, d);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i);
        r /= i;
    }
    return r;
}

} // namespace artin
