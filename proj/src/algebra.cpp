#include "artin/algebra.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <cctype>

namespace artin {

std::vector<Poly> PresentedRing::parsed_gens(int at_cap) const {
    std::vector<Poly> out;
    out.reserve(gen_texts.size());
    for (const std::string& t : gen_texts) out.push_back(parse_poly(t, vars, field, at_cap));
    return out;
}

std::string PresentedRing::ring_file_text() const {
    std::ostringstream os;
    os << "char = " << field.modulus() << "\n";
    os << "vars = [";
    for (size_t i = 0; i < vars.size(); ++i) os << (i ? ", " : "") << vars[i];
    os << "]\n";
    os << "ideal = [";
    for (size_t i = 0; i < gen_texts.size(); ++i) os << (i ? ", " : "") << '"' << gen_texts[i] << '"';
    os << "]\n";
    if (cap > 0) os << "cap = " << cap << "\n";
    return os.str();
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> parse_bracket_list(const std::string& value, int line,
                                            bool quoted) {
    std::string v = trim(value);
    if (v.size() < 2 || v.front() != '[' || v.back() != ']')
        throw input_error("line " + std::to_string(line) + ": expected a [...] list");
    v = v.substr(1, v.size() - 2);
    std::vector<std::string> items;
    if (quoted) {
        size_t i = 0;
        while (i < v.size()) {
            size_t open = v.find('"', i);
            if (open == std::string::npos) {
                if (!trim(v.substr(i)).empty() && trim(v.substr(i)) != ",")
                    throw input_error("line " + std::to_string(line) +
                                      ": expected quoted strings");
                break;
            }
            size_t close = v.find('"', open + 1);
            if (close == std::string::npos)
                throw input_error("line " + std::to_string(line) + ": unterminated string");
            items.push_back(v.substr(open + 1, close - open - 1));
            i = close + 1;
        }
    } else {
        std::stringstream ss(v);
        std::string item;
        while (std::getline(ss, item, ',')) {
            item = trim(item);
            if (!item.empty()) items.push_back(item);
        }
    }
    return items;
}

} // namespace

PresentedRing parse_ring_file(const std::string& text, std::optional<uint32_t> override_char) {
    std::optional<uint32_t> chr;
    std::vector<std::string> vars;
    std::vector<std::string> ideal;
    int cap = 0;

    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw input_error("line " + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "char") {
            chr = static_cast<uint32_t>(std::stoul(value));
        } else if (key == "vars") {
            vars = parse_bracket_list(value, lineno, false);
        } else if (key == "ideal") {
            ideal = parse_bracket_list(value, lineno, true);
        } else if (key == "cap") {
            cap = std::stoi(value);
            if (cap <= 0)
                throw input_error("line " + std::to_string(lineno) + ": cap must be positive");
        } else {
            throw input_error("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (override_char) chr = override_char;
    if (!chr) throw input_error("ring file: missing 'char'");
    if (vars.empty()) throw input_error("ring file: missing 'vars'");
    for (size_t i = 0; i < vars.size(); ++i) {
        for (char c : vars[i])
            if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_')
                throw input_error("ring file: variable names are letters/underscores, got '" +
                                  vars[i] + "'");
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw input_error("ring file: duplicate variable " + vars[i]);
    }
    return PresentedRing{PrimeField(*chr), vars, ideal, cap};
}

PresentedRing load_ring_file(const std::string& path, std::optional<uint32_t> override_char) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open ring file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_ring_file(ss.str(), override_char);
    } catch (const input_error& e) {
        throw input_error(path + ": " + e.what());
    }
}

FiniteLocalAlgebra::FiniteLocalAlgebra(PrimeField field, std::vector<std::string> labels,
                                       std::vector<uint32_t> mult_table,
                                       std::optional<PresentedRing> origin)
    : field_(field), dim_(static_cast<int>(labels.size())), labels_(std::move(labels)),
      mult_(std::move(mult_table)), origin_(std::move(origin)) {
    if (dim_ < 1) throw input_error("algebra: empty basis");
    if (mult_.size() != static_cast<size_t>(dim_) * dim_ * dim_)
        throw input_error("algebra: structure table has wrong size");

    for (int j = 0; j < dim_; ++j)
        for (int k = 0; k < dim_; ++k)
            if (structure(0, j, k) != (j == k ? 1u : 0u))
                throw input_error("algebra: basis[0] is not a unit");

    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                if (structure(i, j, k) != structure(j, i, k))
                    throw input_error("algebra: multiplication is not commutative");

    for (int i = 1; i < dim_; ++i)
        for (int j = 1; j < dim_; ++j)
            if (structure(i, j, 0) != 0)
                throw input_error(
                    "algebra: basis is not adapted (m-elements multiply outside m)");

    auto check_assoc = [&](int i, int j, int k) {
        Vec ij = mult_basis(i, j);
        Vec jk = mult_basis(j, k);
        Vec left = mult(ij, basis_vec(k));
        Vec right = mult(basis_vec(i), jk);
        if (left != right) throw input_error("algebra: multiplication is not associative");
    };
    if (dim_ <= 20) {
        for (int i = 1; i < dim_; ++i)
            for (int j = i; j < dim_; ++j)
                for (int k = j; k < dim_; ++k) check_assoc(i, j, k);
    } else {
        std::mt19937 rng(12345);
        for (int t = 0; t < 500; ++t) {
            int i = 1 + rng() % (dim_ - 1);
            int j = 1 + rng() % (dim_ - 1);
            int k = 1 + rng() % (dim_ - 1);
            check_assoc(i, j, k);
        }
    }

    // m-adic filtration by iterated subspace products; m is generated as an
    // ideal by the basis elements it contains.
    Subspace full(dim_);
    for (int i = 0; i < dim_; ++i) full.add(basis_vec(i), field_);
    filtration_.push_back(full);
    Subspace mm(dim_);
    for (int i = 1; i < dim_; ++i) mm.add(basis_vec(i), field_);
    filtration_.push_back(mm);
    while (filtration_.back().dim() > 0) {
        const Subspace& prev = filtration_.back();
        Subspace next(dim_);
        for (int g = 1; g < dim_; ++g)
            for (const Vec& v : prev.basis()) next.add(mult(basis_vec(g), v), field_);
        if (next.dim() == prev.dim())
            throw input_error("algebra: maximal ideal is not nilpotent (not local artinian)");
        filtration_.push_back(next);
    }
    socle_degree_ = static_cast<int>(filtration_.size()) - 2;

    degrees_.assign(dim_, 0);
    for (int b = 0; b < dim_; ++b) {
        int d = 0;
        while (d + 1 < static_cast<int>(filtration_.size()) &&
               filtration_[d + 1].contains(basis_vec(b), field_))
            ++d;
        degrees_[b] = d;
    }

    const Subspace& m2 = filtration_[std::min<size_t>(2, filtration_.size() - 1)];
    std::vector<char> is_m2_pivot(dim_, 0);
    for (int c : m2.pivots()) is_m2_pivot[c] = 1;
    for (int b = 1; b < dim_; ++b)
        if (!is_m2_pivot[b]) gen_idx_.push_back(b);

    // Graded iff structure constants are degree-homogeneous and the basis is
    // adapted to the filtration; then the algebra is standard graded.
    graded_ = true;
    std::vector<int> count_ge(socle_degree_ + 2, 0);
    for (int b = 0; b < dim_; ++b)
        for (int d = 0; d <= degrees_[b]; ++d) ++count_ge[d];
    for (size_t d = 0; d < filtration_.size(); ++d)
        if (filtration_[d].dim() != count_ge[std::min<int>(static_cast<int>(d), socle_degree_ + 1)])
            graded_ = false;
    for (int i = 0; i < dim_ && graded_; ++i)
        for (int j = 0; j < dim_ && graded_; ++j)
            for (int k = 0; k < dim_; ++k)
                if (structure(i, j, k) && degrees_[k] != degrees_[i] + degrees_[j]) {
                    graded_ = false;
                    break;
                }
}

Vec FiniteLocalAlgebra::mult_basis(int i, int j) const {
    Vec r(dim_);
    const uint32_t* src = mult_.data() + (static_cast<size_t>(i) * dim_ + j) * dim_;
    std::copy(src, src + dim_, r.begin());
    return r;
}

Vec FiniteLocalAlgebra::mult(const Vec& u, const Vec& v) const {
    Vec r(dim_, 0);
    for (int i = 0; i < dim_; ++i) {
        if (!u[i]) continue;
        for (int j = 0; j < dim_; ++j) {
            if (!v[j]) continue;
            uint32_t c = field_.mul(u[i], v[j]);
            const uint32_t* row = mult_.data() + (static_cast<size_t>(i) * dim_ + j) * dim_;
            for (int k = 0; k < dim_; ++k)
                if (row[k]) r[k] = field_.add(r[k], field_.mul(c, row[k]));
        }
    }
    return r;
}

DenseMat FiniteLocalAlgebra::mult_operator(const Vec& u) const {
    DenseMat M(dim_, dim_);
    for (int j = 0; j < dim_; ++j) {
        Vec col = mult(u, basis_vec(j));
        for (int k = 0; k < dim_; ++k) M.at(k, j) = col[k];
    }
    return M;
}

Vec FiniteLocalAlgebra::unit() const { return basis_vec(0); }

Vec FiniteLocalAlgebra::basis_vec(int i) const {
    Vec v(dim_, 0);
    v[i] = 1;
    return v;
}

namespace {

struct CompileResult {
    std::vector<Monomial> standard;
    std::vector<uint32_t> table;
};

/// Reduction of k[x]/n^(cap+1) by the span of {monomial * generator}; the
/// standard monomials and structure constants of the quotient. Rows are
/// reduced along their grevlex-largest monomial (lowest degree first), so
/// the surviving standard monomials form the complement of the grevlex
/// initial ideal. The basis itself is listed in the global order.
CompileResult compile_at(const PresentedRing& pr, int cap) {
    const PrimeField& F = pr.field;
    int e = static_cast<int>(pr.vars.size());
    int W = cap + 1;
    std::vector<Poly> gens = pr.parsed_gens(W);
    for (size_t g = 0; g < gens.size(); ++g) {
        if (gens[g].is_zero()) continue;
        if (gens[g].valuation() < 2)
            throw input_error("non-minimal presentation: generator \"" + pr.gen_texts[g] +
                              "\" has valuation < 2");
    }

    // Columns ordered by degree, then grevlex-descending within a degree.
    std::vector<Monomial> mons = monomials_below(e, W);
    std::sort(mons.begin(), mons.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return b.grevlex_less(a);
    });
    std::map<Monomial, int> col_of;
    for (size_t i = 0; i < mons.size(); ++i) col_of.emplace(mons[i], static_cast<int>(i));
    int ambient = static_cast<int>(mons.size());

    Subspace ideal(ambient);
    for (const Poly& g : gens) {
        if (g.is_zero()) continue;
        for (const Monomial& m : mons) {
            Poly prod = g.shifted(m);
            if (prod.is_zero()) continue;
            Vec row(ambient, 0);
            for (auto& [mon, c] : prod.terms()) row[col_of.at(mon)] = c;
            ideal.add(std::move(row), F);
        }
    }

    std::vector<char> is_pivot(ambient, 0);
    for (int c : ideal.pivots()) is_pivot[c] = 1;
    CompileResult res;
    for (int c = 0; c < ambient; ++c)
        if (!is_pivot[c]) res.standard.push_back(mons[c]);
    std::sort(res.standard.begin(), res.standard.end());
    for (const Monomial& m : res.standard)
        if (m.degree() >= cap)
            throw input_error("cap too small or ideal not m-primary (cap " +
                              std::to_string(cap) + ")");

    int dim = static_cast<int>(res.standard.size());
    std::map<Monomial, int> basis_idx;
    for (int i = 0; i < dim; ++i) basis_idx.emplace(res.standard[i], i);

    // Normal forms of all truncation monomials in standard coordinates.
    std::vector<Vec> nf(ambient);
    for (int c = 0; c < ambient; ++c) {
        Vec unit(ambient, 0);
        unit[c] = 1;
        Vec red = ideal.reduce(std::move(unit), F);
        Vec coords(dim, 0);
        for (int k = 0; k < ambient; ++k)
            if (red[k]) coords[basis_idx.at(mons[k])] = red[k];
        nf[c] = std::move(coords);
    }

    res.table.assign(static_cast<size_t>(dim) * dim * dim, 0);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Monomial prod = res.standard[i] * res.standard[j];
            uint32_t* out = res.table.data() + (static_cast<size_t>(i) * dim + j) * dim;
            if (prod.degree() >= W) continue; // above the cap: zero in R
            const Vec& v = nf[col_of.at(prod)];
            std::copy(v.begin(), v.end(), out);
        }
    return res;
}

} // namespace

AlgebraPtr compile(const PresentedRing& pr) {
    if (pr.vars.empty()) throw input_error("compile: no variables");
    auto build = [&](int cap) {
        CompileResult res = compile_at(pr, cap);
        std::vector<std::string> labels;
        labels.reserve(res.standard.size());
        for (const Monomial& m : res.standard) labels.push_back(m.str(pr.vars));
        PresentedRing origin = pr;
        origin.cap = cap;
        return std::make_shared<const FiniteLocalAlgebra>(pr.field, std::move(labels),
                                                          std::move(res.table),
                                                          std::move(origin));
    };
    if (pr.cap > 0) return build(pr.cap);
    for (int cap = 3; cap <= 12; ++cap) {
        try {
            return build(cap);
        } catch (const input_error& err) {
            if (std::string(err.what()).find("cap too small") == std::string::npos) throw;
        }
    }
    throw input_error("no cap in 3..12 makes the presentation artinian");
}

std::vector<int> hilbert(const FiniteLocalAlgebra& A) {
    std::vector<int> h;
    const auto& f = A.filtration();
    for (int i = 0; i <= A.socle_degree(); ++i) h.push_back(f[i].dim() - f[i + 1].dim());
    return h;
}

Subspace socle(const FiniteLocalAlgebra& A) {
    int n = A.dim();
    if (n == 1) {
        Subspace s(1);
        s.add(A.unit(), A.field());
        return s;
    }
    DenseMat stacked((n - 1) * n, n);
    for (int g = 1; g < n; ++g) {
        DenseMat M = A.mult_operator(A.basis_vec(g));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) stacked.at((g - 1) * n + r, c) = M.at(r, c);
    }
    return Subspace(n, kernel(std::move(stacked), A.field()), A.field());
}

int type_of(const FiniteLocalAlgebra& A) { return socle(A).dim(); }

bool is_gorenstein(const FiniteLocalAlgebra& A) { return type_of(A) == 1; }

CompressedCheck is_compressed(const FiniteLocalAlgebra& A) {
    std::vector<int> h = hilbert(A);
    int e = A.embdim();
    int s = A.socle_degree();
    auto hq = [&](int i) -> long long {
        if (i < 0) return 0;
        if (e == 0) return i == 0 ? 1 : 0;
        return binomial(e - 1 + i, e - 1);
    };
    bool ok = true;
    for (int i = 0; i <= s; ++i)
        if (h[i] != std::min(hq(i), hq(s - i))) ok = false;
    return CompressedCheck{ok, is_gorenstein(A)};
}

int valuation(const FiniteLocalAlgebra& A, const Vec& v) {
    const auto& f = A.filtration();
    int i = 0;
    while (i + 1 < static_cast<int>(f.size()) && f[i + 1].contains(v, A.field())) ++i;
    return i;
}

int valuation(const FiniteLocalAlgebra& A, const Subspace& J) {
    const auto& f = A.filtration();
    int i = 0;
    while (i + 1 < static_cast<int>(f.size()) && f[i + 1].contains(J, A.field())) ++i;
    return i;
}

int mu(const FiniteLocalAlgebra& A, const Subspace& J) {
    for (const Vec& v : J.basis())
        for (int b = 1; b < A.dim(); ++b)
            if (!J.contains(A.mult(A.basis_vec(b), v), A.field()))
                throw input_error("mu: subspace is not an ideal");
    Subspace mJ(A.dim());
    for (const Vec& v : J.basis())
        for (int b = 1; b < A.dim(); ++b) mJ.add(A.mult(A.basis_vec(b), v), A.field());
    return J.dim() - mJ.dim();
}

Subspace ideal_span(const FiniteLocalAlgebra& A, const std::vector<Vec>& gens) {
    Subspace J(A.dim());
    for (const Vec& g : gens)
        for (int b = 0; b < A.dim(); ++b) J.add(A.mult(A.basis_vec(b), g), A.field());
    return J;
}

AlgebraPtr quotient_by_ideal(const FiniteLocalAlgebra& A, const Subspace& J) {
    int n = A.dim();
    const PrimeField& F = A.field();
    std::vector<char> is_pivot(n, 0);
    for (int c : J.pivots()) is_pivot[c] = 1;
    if (n > 0 && is_pivot[0]) throw input_error("quotient: ideal contains a unit");

    std::vector<int> survivors;
    std::vector<int> coord_of(n, -1);
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) {
            coord_of[c] = static_cast<int>(survivors.size());
            survivors.push_back(c);
        }
    int d = static_cast<int>(survivors.size());
    std::vector<std::string> labels;
    for (int c : survivors) labels.push_back(A.labels()[c]);

    std::vector<uint32_t> table(static_cast<size_t>(d) * d * d, 0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Vec prod = J.reduce(A.mult_basis(survivors[i], survivors[j]), F);
            uint32_t* out = table.data() + (static_cast<size_t>(i) * d + j) * d;
            for (int k = 0; k < n; ++k)
                if (prod[k]) out[coord_of[k]] = prod[k];
        }
    return std::make_shared<const FiniteLocalAlgebra>(F, std::move(labels), std::move(table));
}

AlgebraPtr quotient_power(const FiniteLocalAlgebra& A, int i) {
    if (i < 1) throw input_error("quotient_power: exponent must be >= 1");
    if (i > A.socle_degree()) return std::make_shared<const FiniteLocalAlgebra>(A);
    return quotient_by_ideal(A, A.filtration()[i]);
}

Subspace annihilator(const FiniteLocalAlgebra& A, const Vec& a) {
    return Subspace(A.dim(), kernel(A.mult_operator(a), A.field()), A.field());
}

bool is_exact_zero_divisor(const FiniteLocalAlgebra& A, const Vec& a) {
    bool nonzero = false;
    for (uint32_t x : a)
        if (x) nonzero = true;
    if (!nonzero) return false;
    Subspace ann = annihilator(A, a);
    if (ann.dim() == 0) return false;
    return mu(A, ann) == 1;
}

long long mu_lower_bound_compressed(int e, int s) {
    if (e < 2 || s < 2) throw input_error("mu_lower_bound_compressed: need e >= 2 and s >= 2");
    int t = (s + 2) / 2; // ceil((s+1)/2)
    if (s % 2 == 1) return binomial(e - 2 + t, e - 2);
    return binomial(e - 2 + t, e - 2) + binomial(e - 3 + t, e - 2);
}

} // namespace artin
