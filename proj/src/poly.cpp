#include "artin/poly.hpp"

#include <algorithm>

namespace artin {

Poly::Poly(PrimeField field, int nvars, int cap) : field_(field), nvars_(nvars), cap_(cap) {
    if (cap <= 0) throw input_error("Poly: degree cap must be positive");
    if (nvars < 0) throw input_error("Poly: negative variable count");
}

int Poly::valuation() const {
    if (terms_.empty()) return cap_;
    return terms_.begin()->first.degree();
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();
}

uint32_t Poly::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void Poly::add_term(const Monomial& m, uint32_t c) {
    c = field_.reduce(c);
    if (c == 0 || m.degree() >= cap_) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second = field_.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

void Poly::check_compatible(const Poly& o) const {
    if (field_ != o.field_ || nvars_ != o.nvars_ || cap_ != o.cap_)
        throw input_error("Poly: mixed field, variable count, or cap");
}

Poly Poly::operator+(const Poly& o) const {
    check_compatible(o);
    Poly r(*this);
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_compatible(o);
    Poly r(*this);
    for (auto& [m, c] : o.terms_) r.add_term(m, field_.neg(c));
    return r;
}

Poly Poly::operator-() const {
    Poly r(field_, nvars_, cap_);
    for (auto& [m, c] : terms_) r.terms_.emplace(m, field_.neg(c));
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_compatible(o);
    Poly r(field_, nvars_, cap_);
    for (auto& [m1, c1] : terms_) {
        if (m1.degree() >= cap_) continue;
        for (auto& [m2, c2] : o.terms_) {
            if (m1.degree() + m2.degree() >= cap_) break;
            r.add_term(m1 * m2, field_.mul(c1, c2));
        }
    }
    return r;
}

Poly Poly::scaled(uint32_t c) const {
    c = field_.reduce(c);
    Poly r(field_, nvars_, cap_);
    if (c == 0) return r;
    for (auto& [m, k] : terms_) r.terms_.emplace(m, field_.mul(k, c));
    return r;
}

Poly Poly::shifted(const Monomial& m) const {
    Poly r(field_, nvars_, cap_);
    for (auto& [t, c] : terms_)
        if (t.degree() + m.degree() < cap_) r.terms_.emplace(t * m, c);
    return r;
}

bool Poly::operator==(const Poly& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && cap_ == o.cap_ && terms_ == o.terms_;
}

std::string Poly::str(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto& [m, c] : terms_) {
        if (!s.empty()) s += " + ";
        if (m.is_one())
            s += std::to_string(c);
        else if (c == 1)
            s += m.str(vars);
        else
            s += std::to_string(c) + "*" + m.str(vars);
    }
    return s;
}

Poly Poly::constant(PrimeField field, int nvars, int cap, uint32_t c) {
    Poly r(field, nvars, cap);
    r.add_term(Monomial::one(nvars), c);
    return r;
}

Poly Poly::variable(PrimeField field, int nvars, int cap, int var) {
    Poly r(field, nvars, cap);
    std::vector<int> e(nvars, 0);
    e[var] = 1;
    r.add_term(Monomial(e), 1);
    return r;
}

} // namespace artin
