#include "artin/series.hpp"

#include <cctype>
#include <sstream>

namespace artin {

IntPoly::IntPoly(std::initializer_list<long long> v) {
    for (long long x : v) c.emplace_back(x);
    trim();
}

IntPoly::IntPoly(std::vector<Int> v) : c(std::move(v)) { trim(); }

void IntPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly IntPoly::one_plus_z_pow(int n) { return IntPoly({1, 1}).pow(n); }

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c.size(), o.c.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const { return *this + (-o); }

IntPoly IntPoly::operator-() const {
    std::vector<Int> r = c;
    for (Int& x : r) x = -x;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c.empty() || o.c.empty()) return IntPoly();
    std::vector<Int> r(c.size() + o.c.size() - 1, Int(0));
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::pow(int n) const {
    IntPoly r = IntPoly::one();
    for (int i = 0; i < n; ++i) r = r * (*this);
    return r;
}

IntPoly IntPoly::at_minus_z() const {
    std::vector<Int> r = c;
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return IntPoly(std::move(r));
}

namespace {

std::string term_str(const Int& coef, int power, bool first) {
    std::ostringstream os;
    Int a = coef;
    if (first) {
        if (a < 0) {
            os << "-";
            a = -a;
        }
    } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
    }
    if (power == 0) {
        os << a.str();
    } else {
        if (a != 1) os << a.str() << "*";
        os << "z";
        if (power > 1) os << "^" << power;
    }
    return os.str();
}

} // namespace

std::string IntPoly::str() const {
    if (c.empty()) return "0";
    std::string s;
    bool first = true;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        s += term_str(c[i], static_cast<int>(i), first);
        first = false;
    }
    return s.empty() ? "0" : s;
}

namespace {

struct ZParser {
    const std::string& text;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw input_error("z-polynomial syntax error at position " + std::to_string(pos) + ": " +
                          what + " in \"" + text + "\"");
    }
    void skip() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool accept(char ch) {
        skip();
        if (pos < text.size() && text[pos] == ch) {
            ++pos;
            return true;
        }
        return false;
    }
    Int parse_int() {
        skip();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an integer");
        Int acc = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            acc = acc * 10 + (text[pos] - '0');
            ++pos;
        }
        return acc;
    }
    int parse_small_int() {
        Int v = parse_int();
        if (v > 1000) fail("exponent too large");
        return static_cast<int>(v);
    }
    IntPoly parse_atom() {
        skip();
        if (pos >= text.size()) fail("unexpected end of input");
        char ch = text[pos];
        if (ch == '(') {
            ++pos;
            IntPoly r = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(ch)))
            return IntPoly(std::vector<Int>{parse_int()});
        if (ch == 'z') {
            ++pos;
            return IntPoly::z();
        }
        fail("expected a factor");
    }
    IntPoly parse_factor() {
        IntPoly a = parse_atom();
        if (accept('^')) return a.pow(parse_small_int());
        return a;
    }
    IntPoly parse_term() {
        IntPoly r = parse_factor();
        while (accept('*')) r = r * parse_factor();
        return r;
    }
    IntPoly parse_expr() {
        bool neg = accept('-');
        IntPoly r = parse_term();
        if (neg) r = -r;
        for (;;) {
            if (accept('+'))
                r = r + parse_term();
            else if (accept('-'))
                r = r - parse_term();
            else
                break;
        }
        return r;
    }
    IntPoly run() {
        IntPoly r = parse_expr();
        skip();
        if (pos != text.size()) fail("unexpected trailing input");
        return r;
    }
};

} // namespace

IntPoly zpoly_parse(const std::string& text) {
    ZParser p{text};
    return p.run();
}

IntSeries::IntSeries(int D, std::vector<Int> coeffs) : D_(D), c_(std::move(coeffs)) {
    if (D < 0) throw input_error("IntSeries: negative cutoff");
    c_.resize(D + 1, Int(0));
}

IntSeries IntSeries::from_poly(const IntPoly& p, int D) {
    std::vector<Int> c(D + 1, Int(0));
    for (int i = 0; i <= D && i <= p.degree(); ++i) c[i] = p.coeff(i);
    return IntSeries(D, std::move(c));
}

IntSeries IntSeries::operator+(const IntSeries& o) const {
    int D = std::min(D_, o.D_);
    std::vector<Int> r(D + 1);
    for (int i = 0; i <= D; ++i) r[i] = c_[i] + o.c_[i];
    return IntSeries(D, std::move(r));
}

IntSeries IntSeries::operator-(const IntSeries& o) const {
    int D = std::min(D_, o.D_);
    std::vector<Int> r(D + 1);
    for (int i = 0; i <= D; ++i) r[i] = c_[i] - o.c_[i];
    return IntSeries(D, std::move(r));
}

IntSeries IntSeries::operator*(const IntSeries& o) const {
    int D = std::min(D_, o.D_);
    std::vector<Int> r(D + 1, Int(0));
    for (int i = 0; i <= D; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; i + j <= D; ++j)
            if (o.c_[j] != 0) r[i + j] += c_[i] * o.c_[j];
    }
    return IntSeries(D, std::move(r));
}

IntSeries IntSeries::reciprocal() const {
    if (c_[0] != 1 && c_[0] != -1)
        throw input_error("IntSeries::reciprocal: constant term must be 1 or -1");
    if (c_[0] == -1) {
        IntSeries neg = IntSeries::zero(D_) - *this;
        IntSeries r = neg.reciprocal();
        return IntSeries::zero(D_) - r;
    }
    std::vector<Int> r(D_ + 1, Int(0));
    r[0] = 1;
    for (int n = 1; n <= D_; ++n) {
        Int acc = 0;
        for (int k = 1; k <= n; ++k) acc += c_[k] * r[n - k];
        r[n] = -acc;
    }
    return IntSeries(D_, std::move(r));
}

std::string IntSeries::str() const {
    std::string s;
    bool first = true;
    for (int i = 0; i <= D_; ++i) {
        if (c_[i] == 0) continue;
        s += term_str(c_[i], i, first);
        first = false;
    }
    if (s.empty()) s = "0";
    s += " + O(z^" + std::to_string(D_ + 1) + ")";
    return s;
}

std::string IntSeries::coeff_list() const {
    std::string s;
    for (int i = 0; i <= D_; ++i) {
        if (i) s += ", ";
        s += c_[i].str();
    }
    return s;
}

RationalFn::RationalFn(IntPoly n, IntPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.coeff(0) != 1 && den.coeff(0) != -1)
        throw input_error("RationalFn: denominator constant term must be 1 or -1");
}

IntSeries RationalFn::expand(int D) const { return expand_rational(num, den, D); }

std::string RationalFn::str() const {
    auto wrap = [](const IntPoly& p) {
        std::string s = p.str();
        bool multi = s.find(' ') != std::string::npos;
        return multi ? "(" + s + ")" : s;
    };
    return wrap(num) + " / " + wrap(den);
}

IntSeries expand_rational(const IntPoly& num, const IntPoly& den, int D) {
    return IntSeries::from_poly(num, D) * IntSeries::from_poly(den, D).reciprocal();
}

IntSeries golod_series(int e, int d, const std::vector<long long>& h, int D) {
    if (static_cast<int>(h.size()) != e - d)
        throw input_error("golod_series: expected h_1..h_(e-d)");
    for (long long v : h)
        if (v < 0) throw input_error("golod_series: negative homology rank");
    std::vector<Int> den(e - d + 2, Int(0));
    den[0] = 1;
    for (int j = 1; j <= e - d; ++j) den[j + 1] = -Int(h[j - 1]);
    return expand_rational(IntPoly::one_plus_z_pow(e), IntPoly(std::move(den)), D);
}

IntSeries la_quotient_series(const IntSeries& P, int D) {
    if (P.coeff(0) != 1) throw input_error("la_quotient_series: P(0) must be 1");
    IntSeries Pd = IntSeries(std::min(D, P.cutoff()), P.coeffs());
    std::vector<Int> z2(3, Int(0));
    z2[2] = 1;
    IntSeries shifted = IntSeries(Pd.cutoff(), z2) * Pd; // z^2 P
    IntSeries den = IntSeries::from_poly(IntPoly::one(), Pd.cutoff()) - shifted;
    return Pd * den.reciprocal();
}

IntSeries gulliksen_ci_series(int e, int D) {
    IntPoly den = IntPoly({1, -1}).pow(e) - IntPoly({0, 0, 1});
    return expand_rational(IntPoly::one(), den, D);
}

IntSeries gulliksen_trivext_series(const IntSeries& P_R, const IntSeries& P_E, int D) {
    int Dm = std::min({D, P_R.cutoff(), P_E.cutoff()});
    IntSeries PR(Dm, P_R.coeffs());
    IntSeries PE(Dm, P_E.coeffs());
    IntSeries zPE = IntSeries::from_poly(IntPoly::z(), Dm) * PE;
    IntSeries den = IntSeries::from_poly(IntPoly::one(), Dm) - zPE;
    return PR * den.reciprocal();
}

RationalFn gulliksen_trivext_rational(const RationalFn& P_R, const RationalFn& P_E) {
    // P_R / (1 - z P_E) = n_R d_E / (d_R (d_E - z n_E))
    IntPoly den = P_R.den * (P_E.den - IntPoly::z() * P_E.num);
    return RationalFn(P_R.num * P_E.den, std::move(den));
}

RationalFn codepth3_gorenstein_rational(int mu) {
    if (mu < 4)
        throw input_error("codepth3_gorenstein_series: mu >= 4 required (mu = 3 is the "
                          "complete-intersection boundary)");
    IntPoly g({1, -1, -(static_cast<long long>(mu) - 1), -1, 1});
    return RationalFn(IntPoly::one_plus_z_pow(2), std::move(g));
}

IntSeries codepth3_gorenstein_series(int mu, int D) {
    return codepth3_gorenstein_rational(mu).expand(D);
}

RationalFn codepth3_gorenstein_quotient_rational(int mu) {
    if (mu < 4) throw input_error("codepth3_gorenstein_quotient: mu >= 4 required");
    IntPoly g({1, -1, -static_cast<long long>(mu), -3});
    return RationalFn(IntPoly::one_plus_z_pow(2), std::move(g));
}

IntSeries codepth3_gorenstein_quotient_series(int mu, int D) {
    return codepth3_gorenstein_quotient_rational(mu).expand(D);
}

IntSeries ezd_series(int e, int D) {
    IntPoly den({1, -static_cast<long long>(e), static_cast<long long>(e), -1});
    return expand_rational(IntPoly::one(), den, D);
}

IntSeries rossi_sega_criterion_series(int e, const IntPoly& PQR, int D) {
    // 1 - z (PQR - 1) + z^(e+1) (z + 1)
    IntPoly den = IntPoly::one() - IntPoly::z() * (PQR - IntPoly::one());
    std::vector<Int> tail(e + 3, Int(0));
    tail[e + 1] = 1;
    tail[e + 2] = 1;
    den = den + IntPoly(std::move(tail));
    return expand_rational(IntPoly::one_plus_z_pow(e), den, D);
}

IntPoly ggo_denominator(long long h) {
    return IntPoly({1, 0, -(h + 1), -2 * (h + 1), -(h + 6), -4});
}

IntPoly ggo_denominator_factored(long long h) {
    return IntPoly::one_plus_z_pow(2) * IntPoly({1, -2, -(h - 2), -4});
}

bool koszul_numerical_test(const IntSeries& P, const IntPoly& H, int D) {
    int Dm = std::min(D, P.cutoff());
    IntSeries prod = IntSeries(Dm, P.coeffs()) * IntSeries::from_poly(H.at_minus_z(), Dm);
    for (int i = 0; i <= Dm; ++i)
        if (prod.coeff(i) != (i == 0 ? 1 : 0)) return false;
    return true;
}

} // namespace artin
