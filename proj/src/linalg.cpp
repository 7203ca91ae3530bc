#include "artin/linalg.hpp"

#include <algorithm>
#include <map>

namespace artin {

namespace {

// dst -= f * src, both length n, entries canonical.
void axpy_sub(uint32_t* dst, const uint32_t* src, uint32_t f, int n, const PrimeField& F) {
    if (f == 0) return;
    uint64_t p = F.modulus();
    uint64_t fl = f;
    for (int i = 0; i < n; ++i) {
        if (src[i]) {
            uint64_t v = dst[i] + (p - src[i]) * fl % p;
            dst[i] = static_cast<uint32_t>(v >= p ? v - p : v);
        }
    }
}

void scale_row(uint32_t* r, uint32_t f, int n, const PrimeField& F) {
    if (f == 1) return;
    for (int i = 0; i < n; ++i)
        if (r[i]) r[i] = F.mul(r[i], f);
}

} // namespace

std::vector<int> rref(DenseMat& m, const PrimeField& F) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int sel = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c)) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        scale_row(m.row(r), F.inv(m.at(r, c)), m.cols, F);
        for (int i = 0; i < m.rows; ++i)
            if (i != r && m.at(i, c)) axpy_sub(m.row(i), m.row(r), m.at(i, c), m.cols, F);
        pivots.push_back(c);
        ++r;
    }
    m.rows = r;
    m.a.resize(static_cast<size_t>(r) * m.cols);
    return pivots;
}

std::vector<Vec> kernel(DenseMat m, const PrimeField& F) {
    std::vector<int> pivots = rref(m, F);
    std::vector<char> is_pivot(m.cols, 0);
    for (int c : pivots) is_pivot[c] = 1;
    std::vector<Vec> out;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        Vec v(m.cols, 0);
        v[f] = 1;
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = F.neg(m.at(static_cast<int>(i), f));
        out.push_back(std::move(v));
    }
    return out;
}

int rank(DenseMat m, const PrimeField& F) { return static_cast<int>(rref(m, F).size()); }

Subspace::Subspace(int ambient, const std::vector<Vec>& vectors, const PrimeField& F)
    : ambient_(ambient) {
    for (const Vec& v : vectors) add(v, F);
}

Vec Subspace::reduce(Vec v, const PrimeField& F) const {
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint32_t c = v[pivots_[i]];
        if (c) axpy_sub(v.data(), rows_[i].data(), c, ambient_, F);
    }
    return v;
}

bool Subspace::contains(const Vec& v, const PrimeField& F) const {
    Vec r = reduce(v, F);
    return std::all_of(r.begin(), r.end(), [](uint32_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other, const PrimeField& F) const {
    for (const Vec& v : other.rows_)
        if (!contains(v, F)) return false;
    return true;
}

bool Subspace::add(Vec v, const PrimeField& F) {
    v = reduce(std::move(v), F);
    int lead = -1;
    for (int i = 0; i < ambient_; ++i)
        if (v[i]) {
            lead = i;
            break;
        }
    if (lead < 0) return false;
    scale_row(v.data(), F.inv(v[lead]), ambient_, F);
    // Back-reduce existing rows, then insert keeping pivot order.
    for (size_t i = 0; i < rows_.size(); ++i) {
        uint32_t c = rows_[i][lead];
        if (c) axpy_sub(rows_[i].data(), v.data(), c, ambient_, F);
    }
    auto it = std::upper_bound(pivots_.begin(), pivots_.end(), lead);
    size_t idx = static_cast<size_t>(it - pivots_.begin());
    pivots_.insert(it, lead);
    rows_.insert(rows_.begin() + idx, std::move(v));
    return true;
}

SpanSolver::SpanSolver(const std::vector<Vec>& spanning, int ambient, const PrimeField& F)
    : ambient_(ambient), n_(static_cast<int>(spanning.size())) {
    for (int i = 0; i < n_; ++i) {
        Vec v = spanning[i];
        Vec co(n_, 0);
        co[i] = 1;
        for (size_t j = 0; j < reduced_.size(); ++j) {
            uint32_t c = v[lead_[j]];
            if (c) {
                axpy_sub(v.data(), reduced_[j].data(), c, ambient_, F);
                axpy_sub(co.data(), coeffs_[j].data(), c, n_, F);
            }
        }
        int lead = -1;
        for (int k = 0; k < ambient_; ++k)
            if (v[k]) {
                lead = k;
                break;
            }
        if (lead < 0) continue; // dependent vector; solver still covers the span
        uint32_t inv = F.inv(v[lead]);
        scale_row(v.data(), inv, ambient_, F);
        scale_row(co.data(), inv, n_, F);
        reduced_.push_back(std::move(v));
        coeffs_.push_back(std::move(co));
        lead_.push_back(lead);
    }
}

std::optional<Vec> SpanSolver::solve(const Vec& v, const PrimeField& F) const {
    Vec rem = v;
    Vec out(n_, 0);
    for (size_t j = 0; j < reduced_.size(); ++j) {
        uint32_t c = rem[lead_[j]];
        if (c) {
            axpy_sub(rem.data(), reduced_[j].data(), c, ambient_, F);
            for (int k = 0; k < n_; ++k)
                if (coeffs_[j][k]) out[k] = F.add(out[k], F.mul(c, coeffs_[j][k]));
        }
    }
    for (uint32_t x : rem)
        if (x) return std::nullopt;
    return out;
}

namespace {

// rowb -= f * rowa over sparse rows; result re-sorted and pruned.
SparseRow sparse_axpy_sub(const SparseRow& rowb, const SparseRow& rowa, uint32_t f,
                          const PrimeField& F) {
    SparseRow out;
    out.reserve(rowb.size() + rowa.size());
    size_t i = 0, j = 0;
    while (i < rowb.size() || j < rowa.size()) {
        if (j >= rowa.size() || (i < rowb.size() && rowb[i].first < rowa[j].first)) {
            out.push_back(rowb[i++]);
        } else if (i >= rowb.size() || rowa[j].first < rowb[i].first) {
            out.emplace_back(rowa[j].first, F.neg(F.mul(f, rowa[j].second)));
            ++j;
        } else {
            uint32_t v = F.sub(rowb[i].second, F.mul(f, rowa[j].second));
            if (v) out.emplace_back(rowb[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

void sparse_scale(SparseRow& r, uint32_t f, const PrimeField& F) {
    if (f == 1) return;
    for (auto& [c, v] : r) v = F.mul(v, f);
}

} // namespace

std::vector<uint32_t> sparse_rref(SparseMat& m, const PrimeField& F) {
    std::map<uint32_t, size_t> pivot_row; // column -> index into echelon rows
    std::vector<SparseRow> echelon;

    for (SparseRow& raw : m.rows) {
        SparseRow row = std::move(raw);
        while (!row.empty()) {
            auto it = pivot_row.find(row.front().first);
            if (it == pivot_row.end()) break;
            row = sparse_axpy_sub(row, echelon[it->second], row.front().second, F);
        }
        if (row.empty()) continue;
        sparse_scale(row, F.inv(row.front().second), F);
        pivot_row.emplace(row.front().first, echelon.size());
        echelon.push_back(std::move(row));
    }

    // Back-substitution in descending pivot order. A processed row has no
    // entries left in other pivot columns, so each later subtraction leaves
    // the remaining pivot-column values of the current row untouched; one
    // snapshot of those values is enough.
    std::vector<std::pair<uint32_t, size_t>> order(pivot_row.begin(), pivot_row.end());
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        SparseRow& row = echelon[it->second];
        SparseRow todo;
        for (size_t k = 1; k < row.size(); ++k)
            if (pivot_row.count(row[k].first)) todo.push_back(row[k]);
        SparseRow acc = std::move(row);
        for (auto& [col, val] : todo) acc = sparse_axpy_sub(acc, echelon[pivot_row[col]], val, F);
        echelon[it->second] = std::move(acc);
    }

    m.rows.clear();
    std::vector<uint32_t> pivots;
    pivots.reserve(order.size());
    for (auto& [col, idx] : order) {
        pivots.push_back(col);
        m.rows.push_back(std::move(echelon[idx]));
    }
    return pivots;
}

SparseKernel sparse_kernel(SparseMat m, const PrimeField& F) {
    uint32_t cols = m.cols;
    std::vector<uint32_t> pivots = sparse_rref(m, F);
    std::vector<char> is_pivot(cols, 0);
    for (uint32_t c : pivots) is_pivot[c] = 1;

    // For each free column f: v[f] = 1, v[pivot_i] = -row_i[f].
    std::vector<std::vector<std::pair<uint32_t, uint32_t>>> by_free(cols);
    for (size_t i = 0; i < m.rows.size(); ++i)
        for (auto& [c, v] : m.rows[i])
            if (!is_pivot[c]) by_free[c].emplace_back(pivots[i], F.neg(v));

    SparseKernel out;
    for (uint32_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        SparseRow v = std::move(by_free[f]);
        v.emplace_back(f, 1);
        std::sort(v.begin(), v.end());
        out.vectors.push_back(std::move(v));
        out.free_cols.push_back(f);
    }
    return out;
}

} // namespace artin
