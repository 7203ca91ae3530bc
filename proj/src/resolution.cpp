#include "artin/resolution.hpp"

#include <algorithm>
#include <numeric>

namespace artin {

bool ModulePresentation::entries_in_m() const {
    for (auto& row : entries)
        for (auto& v : row)
            if (!v.empty() && v[0] != 0) return false;
    return true;
}

ModulePresentation residue_field_presentation(AlgebraPtr A) {
    ModulePresentation M;
    M.rows = 1;
    M.cols = A->embdim();
    M.entries.resize(1);
    for (int g : A->m_generators()) M.entries[0].push_back(A->basis_vec(g));
    M.A = std::move(A);
    return M;
}

std::vector<std::vector<Vec>> compose(const ModulePresentation& M, const ModulePresentation& N) {
    const FiniteLocalAlgebra& A = *M.A;
    std::vector<std::vector<Vec>> out(M.rows, std::vector<Vec>(N.cols, Vec(A.dim(), 0)));
    for (int r = 0; r < M.rows; ++r)
        for (int c = 0; c < N.cols; ++c) {
            Vec acc(A.dim(), 0);
            for (int k = 0; k < M.cols; ++k) {
                Vec prod = A.mult(M.at(r, k), N.at(k, c));
                for (int t = 0; t < A.dim(); ++t) acc[t] = A.field().add(acc[t], prod[t]);
            }
            out[r][c] = std::move(acc);
        }
    return out;
}

namespace {

/// x_gen * v for a sparse vector over R^cols coordinates (blocks of size n).
SparseRow mult_sparse_block(const FiniteLocalAlgebra& A, int gen, const SparseRow& v, int n) {
    SparseRow out;
    size_t i = 0;
    while (i < v.size()) {
        uint32_t block = v[i].first / n;
        Vec coord(n, 0);
        while (i < v.size() && v[i].first / n == block) {
            coord[v[i].first % n] = v[i].second;
            ++i;
        }
        Vec prod = A.mult(A.basis_vec(gen), coord);
        for (int k = 0; k < n; ++k)
            if (prod[k]) out.emplace_back(block * static_cast<uint32_t>(n) + k, prod[k]);
    }
    return out;
}

} // namespace

ModulePresentation syzygy(const ModulePresentation& M, const ResolutionOptions& opts) {
    const FiniteLocalAlgebra& A = *M.A;
    const PrimeField& F = A.field();
    int n = A.dim();

    if (!M.entries_in_m()) throw input_error("syzygy: presentation entries must lie in m");

    SparseMat S;
    S.cols = static_cast<uint32_t>(M.cols) * n;
    S.rows.assign(static_cast<size_t>(M.rows) * n, {});
    size_t nnz = 0;
    for (int r = 0; r < M.rows; ++r)
        for (int c = 0; c < M.cols; ++c) {
            const Vec& entry = M.at(r, c);
            if (std::all_of(entry.begin(), entry.end(), [](uint32_t x) { return !x; })) continue;
            DenseMat op = A.mult_operator(entry);
            for (int k = 0; k < n; ++k)
                for (int u = 0; u < n; ++u)
                    if (op.at(k, u)) {
                        S.rows[static_cast<size_t>(r) * n + k].emplace_back(
                            static_cast<uint32_t>(c) * n + u, op.at(k, u));
                        ++nnz;
                    }
        }
    for (auto& row : S.rows) std::sort(row.begin(), row.end());
    if (nnz > opts.max_scalar_entries)
        throw resource_guard_error("syzygy: scalar matrix exceeds " +
                                   std::to_string(opts.max_scalar_entries) +
                                   " nonzero entries (raise the bound to override)");

    SparseKernel ker = sparse_kernel(std::move(S), F);
    int k = static_cast<int>(ker.vectors.size());

    ModulePresentation out;
    out.A = M.A;
    out.rows = M.cols;
    out.entries.assign(M.cols, {});
    if (k == 0) {
        out.cols = 0;
        return out;
    }

    std::vector<int> free_pos(static_cast<size_t>(M.cols) * n, -1);
    for (int i = 0; i < k; ++i) free_pos[ker.free_cols[i]] = i;

    // m * ker expressed in kernel coordinates: the value of x_g kappa_i at the
    // free columns is exactly its coefficient vector over the kernel basis.
    int e = A.embdim();
    DenseMat W(e * k, k);
    int wr = 0;
    for (int i = 0; i < k; ++i)
        for (int g : A.m_generators()) {
            SparseRow prod = mult_sparse_block(A, g, ker.vectors[i], n);
            for (auto& [col, val] : prod)
                if (free_pos[col] >= 0) W.at(wr, free_pos[col]) = val;
            ++wr;
        }
    std::vector<int> piv = rref(W, F);
    std::vector<char> in_mk(k, 0);
    for (int p : piv) in_mk[p] = 1;

    for (int i = 0; i < k; ++i) {
        if (in_mk[i]) continue;
        for (int r = 0; r < M.cols; ++r) out.entries[r].push_back(Vec(n, 0));
        int c = out.cols++;
        for (auto& [col, val] : ker.vectors[i]) out.entries[col / n][c][col % n] = val;
    }
    if (!out.entries_in_m())
        throw consistency_error("syzygy: a minimal generator has a unit coordinate");
    return out;
}

namespace {

/// Degreewise kernel pipeline for standard graded algebras. Free modules are
/// carried as homogeneous generators; the coordinate space of degree delta
/// over generators of degrees L lists, per generator, the algebra basis
/// elements of degree delta - L[r].
struct BlockIndex {
    std::vector<int> offset;              // per generator; -1 when empty
    std::vector<std::pair<int, int>> slot; // flattened (generator, basis elt)
    int size = 0;
};

BlockIndex block_index(const std::vector<int>& L, int delta,
                       const std::vector<std::vector<int>>& basis_by_deg) {
    BlockIndex bi;
    bi.offset.assign(L.size(), -1);
    int smax = static_cast<int>(basis_by_deg.size()) - 1;
    for (size_t r = 0; r < L.size(); ++r) {
        int d = delta - L[r];
        if (d < 0 || d > smax || basis_by_deg[d].empty()) continue;
        bi.offset[r] = bi.size;
        for (int b : basis_by_deg[d]) bi.slot.emplace_back(static_cast<int>(r), b);
        bi.size += static_cast<int>(basis_by_deg[d].size());
    }
    return bi;
}

struct GradedGen {
    int degree;
    Vec coords; // over block_index(parent degrees, degree)
};

BettiTable graded_betti(const FiniteLocalAlgebra& A, int D, const ResolutionOptions& opts) {
    const PrimeField& F = A.field();
    int n = A.dim();
    int s = A.socle_degree();
    int e = A.embdim();

    std::vector<std::vector<int>> basis_by_deg(s + 1);
    std::vector<int> pos_in_deg(n, -1);
    for (int b = 0; b < n; ++b) {
        pos_in_deg[b] = static_cast<int>(basis_by_deg[A.basis_degrees()[b]].size());
        basis_by_deg[A.basis_degrees()[b]].push_back(b);
    }

    BettiTable bt;
    bt.D = D;
    bt.b.assign(D + 1, 0);
    bt.b[0] = 1;
    if (D >= 1) bt.b[1] = e;

    std::vector<int> parent_deg{0};
    std::vector<GradedGen> gens;
    for (int g : A.m_generators()) {
        Vec v(basis_by_deg[1].size(), 0);
        v[pos_in_deg[g]] = 1;
        gens.push_back({1, std::move(v)});
    }

    for (int level = 1; level < D; ++level) {
        if (gens.empty()) break;
        std::vector<int> cur_deg;
        for (auto& g : gens) cur_deg.push_back(g.degree);
        int dmin = *std::min_element(cur_deg.begin(), cur_deg.end());
        int dmax = *std::max_element(cur_deg.begin(), cur_deg.end());

        // Per-generator block layouts at their own degree, for reading coords.
        std::vector<BlockIndex> own;
        own.reserve(gens.size());
        for (auto& g : gens) own.push_back(block_index(parent_deg, g.degree, basis_by_deg));

        std::vector<GradedGen> next;
        size_t entries_guard = 0;
        for (int delta = dmin + 1; delta <= dmax + s; ++delta) {
            BlockIndex cols = block_index(cur_deg, delta, basis_by_deg);
            if (cols.size == 0) continue;
            BlockIndex rows = block_index(parent_deg, delta, basis_by_deg);

            entries_guard += static_cast<size_t>(rows.size) * cols.size;
            if (entries_guard > opts.max_scalar_entries)
                throw resource_guard_error(
                    "betti: graded kernel blocks exceed " +
                    std::to_string(opts.max_scalar_entries) +
                    " entries at homological degree " + std::to_string(level + 1));

            DenseMat Mat(rows.size, cols.size);
            for (int cp = 0; cp < cols.size; ++cp) {
                auto [c, v] = cols.slot[cp];
                const Vec& kap = gens[c].coords;
                const BlockIndex& ob = own[c];
                for (int t = 0; t < ob.size; ++t) {
                    if (!kap[t]) continue;
                    auto [r, w] = ob.slot[t];
                    if (rows.offset[r] < 0) continue;
                    int dout = delta - parent_deg[r];
                    if (dout < 0 || dout > s) continue;
                    // coefficient of each basis u (deg dout) in v * w
                    for (size_t q = 0; q < basis_by_deg[dout].size(); ++q) {
                        int u = basis_by_deg[dout][q];
                        uint32_t sc = A.structure(v, w, u);
                        if (!sc) continue;
                        int rp = rows.offset[r] + static_cast<int>(q);
                        Mat.at(rp, cp) = F.add(Mat.at(rp, cp), F.mul(kap[t], sc));
                    }
                }
            }

            std::vector<Vec> K = kernel(std::move(Mat), F);

            // (m K)_delta = sum over positive degrees u of A_u * gens_{delta-u}
            Subspace N(cols.size);
            for (auto& g : next) {
                int u_deg = delta - g.degree;
                if (u_deg < 1 || u_deg > s) continue;
                BlockIndex gb = block_index(cur_deg, g.degree, basis_by_deg);
                for (int v : basis_by_deg[u_deg]) {
                    Vec w(cols.size, 0);
                    for (int t = 0; t < gb.size; ++t) {
                        if (!g.coords[t]) continue;
                        auto [c, wb] = gb.slot[t];
                        int dout = delta - cur_deg[c];
                        if (cols.offset[c] < 0 || dout < 0 || dout > s) continue;
                        for (size_t q = 0; q < basis_by_deg[dout].size(); ++q) {
                            int u = basis_by_deg[dout][q];
                            uint32_t sc = A.structure(v, wb, u);
                            if (sc) {
                                int cp = cols.offset[c] + static_cast<int>(q);
                                w[cp] = F.add(w[cp], F.mul(g.coords[t], sc));
                            }
                        }
                    }
                    N.add(std::move(w), F);
                }
            }

            for (Vec& z : K) {
                Vec copy = z;
                if (N.add(std::move(copy), F)) {
                    // minimality: no unit coordinate (a slot with basis elt 1)
                    for (int t = 0; t < cols.size; ++t)
                        if (z[t] && cols.slot[t].second == 0)
                            throw consistency_error(
                                "graded betti: minimal generator with unit coordinate");
                    next.push_back({delta, std::move(z)});
                }
            }
        }

        bt.b[level + 1] = static_cast<long long>(next.size());
        parent_deg = std::move(cur_deg);
        gens = std::move(next);
    }
    return bt;
}

} // namespace

BettiTable betti_of_residue_field(const FiniteLocalAlgebra& A, int D,
                                  const ResolutionOptions& opts) {
    if (D < 1) throw input_error("betti: depth must be >= 1");
    if (D > 8 && !opts.allow_deep)
        throw resource_guard_error("betti: depth " + std::to_string(D) +
                                   " exceeds the default guard of 8 (Golod-type rings have "
                                   "exponentially growing Betti numbers); pass the override "
                                   "to proceed");
    if (A.is_graded()) {
        BettiTable bt = graded_betti(A, D, opts);
        bt.module_id = "k";
        return bt;
    }
    BettiTable bt;
    bt.module_id = "k";
    bt.D = D;
    bt.b.assign(D + 1, 0);
    bt.b[0] = 1;
    auto Aptr = std::make_shared<const FiniteLocalAlgebra>(A);
    ModulePresentation M = residue_field_presentation(Aptr);
    if (D >= 1) bt.b[1] = M.cols;
    for (int i = 2; i <= D; ++i) {
        if (M.cols == 0) break;
        M = syzygy(M, opts);
        bt.b[i] = M.cols;
    }
    return bt;
}

IntSeries poincare_truncation(const FiniteLocalAlgebra& A, int D, const ResolutionOptions& opts) {
    BettiTable bt = betti_of_residue_field(A, D, opts);
    std::vector<Int> c;
    for (long long v : bt.b) c.emplace_back(v);
    return IntSeries(D, std::move(c));
}

} // namespace artin
