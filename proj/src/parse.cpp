#include "artin/parse.hpp"

#include <cctype>
#include <map>

namespace artin {

namespace {

struct Parser {
    const std::string& text;
    const std::vector<std::string>& vars;
    PrimeField field;
    int cap;
    size_t pos = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw input_error("syntax error at position " + std::to_string(pos) + ": " + what +
                          " in \"" + text + "\"");
    }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos < text.size() && text[pos] == c;
    }

    bool accept(char c) {
        if (!peek_is(c)) return false;
        ++pos;
        return true;
    }

    uint32_t parse_int_mod_p() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an integer");
        uint64_t acc = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            acc = acc * 10 + (text[pos] - '0');
            acc %= field.modulus();
            ++pos;
        }
        return static_cast<uint32_t>(acc);
    }

    int parse_exponent() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an exponent");
        long long acc = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            acc = acc * 10 + (text[pos] - '0');
            if (acc > 1000000) fail("exponent too large");
            ++pos;
        }
        return static_cast<int>(acc);
    }

    int var_index(const std::string& name, size_t at) const {
        for (size_t i = 0; i < vars.size(); ++i)
            if (vars[i] == name) return static_cast<int>(i);
        throw input_error("unknown variable '" + name + "' at position " + std::to_string(at) +
                          " in \"" + text + "\"");
    }

    /// Splits a letter run into declared variable names, longest prefix first.
    std::vector<int> split_run(const std::string& run, size_t at) const {
        std::vector<int> out;
        size_t i = 0;
        while (i < run.size()) {
            size_t best = 0;
            int best_idx = -1;
            for (size_t v = 0; v < vars.size(); ++v) {
                const std::string& name = vars[v];
                if (name.size() > best && run.compare(i, name.size(), name) == 0) {
                    best = name.size();
                    best_idx = static_cast<int>(v);
                }
            }
            if (best_idx < 0)
                throw input_error("unknown variable '" + run.substr(i) + "' at position " +
                                  std::to_string(at + i) + " in \"" + text + "\"");
            out.push_back(best_idx);
            i += best;
        }
        return out;
    }

    Poly parse_factor() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Poly inner = parse_expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Poly::constant(field, static_cast<int>(vars.size()), cap, parse_int_mod_p());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            // One or more letter runs, each with an optional exponent on its
            // last name: "yz^2" is y*z^2 and "x^2z" is x^2*z.
            std::vector<int> exps(vars.size(), 0);
            do {
                size_t start = pos;
                while (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) ||
                                             text[pos] == '_'))
                    ++pos;
                std::string run = text.substr(start, pos - start);
                std::vector<int> idxs;
                bool whole = false;
                for (size_t v = 0; v < vars.size(); ++v)
                    if (vars[v] == run) {
                        idxs = {static_cast<int>(v)};
                        whole = true;
                        break;
                    }
                if (!whole) idxs = split_run(run, start);
                for (size_t k = 0; k + 1 < idxs.size(); ++k) exps[idxs[k]] += 1;
                int last_exp = 1;
                if (accept('^')) last_exp = parse_exponent();
                exps[idxs.back()] += last_exp;
            } while (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) ||
                                           text[pos] == '_'));
            Poly r(field, static_cast<int>(vars.size()), cap);
            r.add_term(Monomial(exps), 1);
            return r;
        }
        fail("expected a factor");
    }

    Poly parse_term() {
        Poly r = parse_factor();
        while (accept('*')) r = r * parse_factor();
        return r;
    }

    Poly parse_expr() {
        bool neg = accept('-');
        Poly r = parse_term();
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

    Poly run() {
        Poly r = parse_expr();
        skip_ws();
        if (pos != text.size()) fail("unexpected trailing input");
        return r;
    }
};

} // namespace

Poly parse_poly(const std::string& text, const std::vector<std::string>& vars, PrimeField field,
                int cap) {
    if (cap <= 0) throw input_error("parse_poly: degree cap must be positive");
    Parser p{text, vars, field, cap};
    return p.run();
}

} // namespace artin
