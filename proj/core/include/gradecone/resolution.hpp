#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <vector>

#include "gradecone/groebner.hpp"
#include "gradecone/linalg.hpp"

namespace gradecone {

// A chain of free modules F_0 <- F_1 <- ... <- F_p with differentials stored
// column-wise: diffs[k] lists d_{k+1}(e_b) as elements of F_k. When
// quotient_gb is nonempty the chain lives over S = R/J with polynomial
// representatives kept in normal form modulo J; compositions vanish only
// after reduction. Over the polynomial ring quotient_gb is empty.
template <class F>
struct FreeResolution {
    RingPtr<F> ring;
    std::vector<Polynomial<F>> quotient_gb;
    std::vector<FreeModulePtr<F>> modules;
    std::vector<std::vector<ModElem<F>>> diffs;

    std::size_t length() const { return diffs.size(); }
    std::size_t rank(std::size_t i) const {
        return i < modules.size() ? modules[i]->rank() : 0;
    }
};

namespace detail {

template <class F>
Polynomial<F> nf_poly(const Polynomial<F>& f, const std::vector<Polynomial<F>>& gbJ) {
    return gbJ.empty() ? f : normal_form_ideal(f, gbJ);
}

template <class F>
ModElem<F> nf_elem(const ModElem<F>& e, const std::vector<Polynomial<F>>& gbJ) {
    if (gbJ.empty() || e.is_zero()) return e;
    std::vector<MTerm<F>> terms;
    for (std::size_t a = 0; a < e.module()->rank(); ++a) {
        auto r = normal_form_ideal(e.component(static_cast<int>(a)), gbJ);
        for (const auto& t : r.terms()) terms.push_back({t.c, t.m, static_cast<int>(a)});
    }
    return ModElem<F>(e.module(), std::move(terms));
}

// Syzygies of a generator list over S = R/J, by lifting: append h*e_a for
// every h in the basis of J and every component, take syzygies over R,
// project onto the original coordinates, reduce mod J.
template <class F>
std::vector<ModElem<F>> syzygies_over_quotient(FreeModulePtr<F> amb,
                                               const std::vector<ModElem<F>>& gens,
                                               const std::vector<Polynomial<F>>& gbJ) {
    if (gbJ.empty()) return syzygies_of_generators(amb, gens);

    std::vector<ModElem<F>> aug = gens;
    for (const auto& h : gbJ)
        for (std::size_t a = 0; a < amb->rank(); ++a)
            aug.push_back(ModElem<F>::from_poly(amb, h, static_cast<int>(a)));

    auto syz = syzygies_of_generators(amb, aug);

    std::vector<int> degs;
    for (const auto& g : gens) degs.push_back(g.is_zero() ? 0 : g.degree());
    auto genmod = make_free_module(amb->ring, degs);

    std::vector<ModElem<F>> out;
    for (const auto& s : syz) {
        std::vector<MTerm<F>> terms;
        for (const auto& t : s.terms())
            if (t.comp < static_cast<int>(gens.size())) terms.push_back(t);
        ModElem<F> proj = nf_elem(ModElem<F>(genmod, std::move(terms)), gbJ);
        if (!proj.is_zero()) out.push_back(std::move(proj));
    }
    return out;
}

} // namespace detail

// Build the chain for coker(d_1 : <rels> -> F0) over R or over S = R/J.
// max_maps < 0 runs to termination, which only the polynomial ring
// guarantees; a nonnegative value stops after that many differentials, so
// pass N+1 of them to make ranks 0..N survive minimalization intact.
template <class F>
FreeResolution<F> build_resolution(FreeModulePtr<F> f0, std::vector<ModElem<F>> rels,
                                   const std::vector<Polynomial<F>>& quotient_gb = {},
                                   int max_maps = -1) {
    FreeResolution<F> res;
    res.ring = f0->ring;
    res.quotient_gb = quotient_gb;
    res.modules.push_back(f0);

    std::vector<ModElem<F>> cols;
    for (auto& r : rels) {
        auto e = detail::nf_elem(r, quotient_gb);
        if (!e.is_zero()) cols.push_back(std::move(e));
    }
    if (cols.empty()) return res;

    const int hard_cap = static_cast<int>(f0->ring->nvars()) + 2;
    int k = 0;
    while (max_maps < 0 || k < max_maps) {
        std::vector<int> degs;
        for (const auto& c : cols) degs.push_back(c.degree());
        res.modules.push_back(make_free_module(res.ring, degs));
        res.diffs.push_back(cols);
        ++k;
        if (max_maps >= 0 && k == max_maps) break;

        cols = detail::syzygies_over_quotient(res.modules[res.modules.size() - 2], cols,
                                              quotient_gb);
        if (!quotient_gb.empty()) {
            std::vector<ModElem<F>> reduced;
            for (auto& c : cols) {
                auto e = detail::nf_elem(c, quotient_gb);
                if (!e.is_zero()) reduced.push_back(std::move(e));
            }
            cols = std::move(reduced);
        }
        if (cols.empty()) break;
        if (quotient_gb.empty() && k >= hard_cap)
            throw std::logic_error("build_resolution: chain over the polynomial ring "
                                   "exceeded the variable-count bound");
    }
    return res;
}

namespace detail {

// Inverse of a unit of R/J with polynomial representative u, by Newton
// iteration v <- v(2 - uv) mod J. Converges when the nonconstant part of u
// is nilpotent mod J (always in the Artinian case); constants return
// immediately. Anything else is a unit of the localization only and has no
// polynomial inverse, which is a hard error.
template <class F>
Polynomial<F> invert_unit_mod(const Polynomial<F>& u, const std::vector<Polynomial<F>>& gbJ) {
    const auto& ring = u.ring();
    auto c = u.constant_term();
    if (c.is_zero()) throw std::invalid_argument("invert_unit_mod: not a unit");
    auto cinv_poly = Polynomial<F>::constant(ring, c.inv());
    if (u.is_constant()) return cinv_poly;
    if (gbJ.empty())
        throw std::domain_error("invert_unit_mod: only constants are invertible over "
                                "the polynomial ring");

    auto one = Polynomial<F>::constant(ring, ring->field.one());
    auto two = one + one;
    Polynomial<F> v = cinv_poly;
    for (int it = 0; it < 64; ++it) {
        auto uv = nf_poly(u * v, gbJ);
        if (uv == one) return v;
        v = nf_poly(v * (two - uv), gbJ);
        // Newton squares the error term, so in the Artinian case v stays
        // small; unbounded growth means the nonconstant part is not
        // nilpotent and no polynomial inverse exists.
        if (v.terms().size() > 4096)
            throw std::domain_error("invert_unit_mod: unit has no polynomial inverse "
                                    "mod the quotient");
    }
    throw std::domain_error("invert_unit_mod: unit has no polynomial inverse mod the "
                            "quotient; minimalization is not defined over this ring");
}

template <class F>
struct DenseChainMatrix {
    // entries[r][c] with rows indexed by the target module basis
    std::vector<std::vector<Polynomial<F>>> entries;
    std::size_t ncols = 0;
    std::size_t rows() const { return entries.size(); }
    std::size_t cols() const { return ncols; }
};

template <class F>
DenseChainMatrix<F> to_dense(const FreeResolution<F>& res, std::size_t k) {
    const auto& target = res.modules[k];
    const auto& cols = res.diffs[k];
    DenseChainMatrix<F> m;
    m.ncols = cols.size();
    m.entries.assign(target->rank(),
                     std::vector<Polynomial<F>>(cols.size(), Polynomial<F>::zero(res.ring)));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        auto comps = cols[c].components();
        for (std::size_t r = 0; r < comps.size(); ++r) m.entries[r][c] = std::move(comps[r]);
    }
    return m;
}

template <class F>
std::vector<ModElem<F>> from_dense(const DenseChainMatrix<F>& m, FreeModulePtr<F> target) {
    std::vector<ModElem<F>> cols;
    cols.reserve(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::vector<MTerm<F>> terms;
        for (std::size_t r = 0; r < m.rows(); ++r)
            for (const auto& t : m.entries[r][c].terms())
                terms.push_back({t.c, t.m, static_cast<int>(r)});
        cols.emplace_back(target, std::move(terms));
    }
    return cols;
}

} // namespace detail

// Cancel every unit entry, front to back. A pivot at (r, c) of d_k rewrites
// the remaining entries of d_k by the standard elementary collapse, drops
// basis vector c of F_k and r of F_{k-1}, deletes row c of d_{k+1} and
// column r of d_{k-1}, and leaves everything else untouched. Processing
// k = 1..p in order needs no second pass: the adjacent updates are pure
// deletions and cannot create units. Afterwards every basis is sorted by
// ascending degree. Entries stay reduced mod the quotient.
template <class F>
void minimalize(FreeResolution<F>& res) {
    if (res.diffs.empty()) return;
    const auto& gbJ = res.quotient_gb;

    std::vector<detail::DenseChainMatrix<F>> mats;
    std::vector<std::vector<int>> degs;
    mats.reserve(res.length());
    for (std::size_t k = 0; k < res.length(); ++k) mats.push_back(detail::to_dense(res, k));
    for (const auto& mod : res.modules) degs.push_back(mod->degrees);

    auto erase_row = [](detail::DenseChainMatrix<F>& m, std::size_t r) {
        m.entries.erase(m.entries.begin() + static_cast<std::ptrdiff_t>(r));
    };
    auto erase_col = [](detail::DenseChainMatrix<F>& m, std::size_t c) {
        for (auto& row : m.entries) row.erase(row.begin() + static_cast<std::ptrdiff_t>(c));
        --m.ncols;
    };

    // A pivot must be a unit of the coefficient ring: any nonzero constant
    // term works over an Artinian quotient, but over the polynomial ring
    // itself only genuine constants are invertible.
    auto is_pivot = [&](const Polynomial<F>& e) {
        if (e.constant_term().is_zero()) return false;
        return !gbJ.empty() || e.is_constant();
    };

    for (std::size_t k = 0; k < mats.size(); ++k) {
        auto& m = mats[k];
        for (;;) {
            std::size_t pr = m.rows(), pc = 0;
            for (std::size_t r = 0; r < m.rows() && pr == m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c)
                    if (is_pivot(m.entries[r][c])) {
                        pr = r;
                        pc = c;
                        break;
                    }
            if (pr == m.rows()) break;

            auto uinv = detail::invert_unit_mod(m.entries[pr][pc], gbJ);
            for (std::size_t r = 0; r < m.rows(); ++r) {
                if (r == pr) continue;
                if (m.entries[r][pc].is_zero()) continue;
                auto factor = detail::nf_poly(m.entries[r][pc] * uinv, gbJ);
                for (std::size_t c = 0; c < m.cols(); ++c) {
                    if (c == pc || m.entries[pr][c].is_zero()) continue;
                    m.entries[r][c] = detail::nf_poly(
                        m.entries[r][c] - factor * m.entries[pr][c], gbJ);
                }
            }
            erase_row(m, pr);
            erase_col(m, pc);
            degs[k].erase(degs[k].begin() + static_cast<std::ptrdiff_t>(pr));
            degs[k + 1].erase(degs[k + 1].begin() + static_cast<std::ptrdiff_t>(pc));
            if (k + 1 < mats.size()) erase_row(mats[k + 1], pc);
            if (k > 0) erase_col(mats[k - 1], pr);
        }
    }

    while (!mats.empty() && mats.back().cols() == 0) {
        mats.pop_back();
        degs.pop_back();
    }

    // sort the basis of every F_k, k >= 1, ascending by degree; F_0 keeps the
    // caller's generator order. Columns of d_k follow F_k, rows follow F_{k-1}.
    std::vector<std::vector<std::size_t>> perm(degs.size());
    for (std::size_t k = 0; k < degs.size(); ++k) {
        perm[k].resize(degs[k].size());
        for (std::size_t i = 0; i < perm[k].size(); ++i) perm[k][i] = i;
        if (k > 0)
            std::stable_sort(perm[k].begin(), perm[k].end(), [&](std::size_t a, std::size_t b) {
                return degs[k][a] < degs[k][b];
            });
    }

    res.modules.clear();
    res.diffs.clear();
    for (std::size_t k = 0; k < degs.size(); ++k) {
        std::vector<int> sorted;
        sorted.reserve(degs[k].size());
        for (auto i : perm[k]) sorted.push_back(degs[k][i]);
        res.modules.push_back(make_free_module(res.ring, std::move(sorted)));
    }
    for (std::size_t k = 0; k + 1 < degs.size(); ++k) {
        detail::DenseChainMatrix<F> m;
        m.ncols = perm[k + 1].size();
        m.entries.assign(perm[k].size(), std::vector<Polynomial<F>>(
                                             perm[k + 1].size(), Polynomial<F>::zero(res.ring)));
        for (std::size_t r = 0; r < perm[k].size(); ++r)
            for (std::size_t c = 0; c < perm[k + 1].size(); ++c)
                m.entries[r][c] = mats[k].entries[perm[k][r]][perm[k + 1][c]];
        res.diffs.push_back(detail::from_dense(m, res.modules[k]));
    }
}

// Public entry point for the graded case: validates homogeneity, builds,
// minimalizes, and enforces the syzygy-theorem length bound.
template <class F>
FreeResolution<F> minimal_free_resolution(FreeModulePtr<F> f0,
                                          const std::vector<ModElem<F>>& rels) {
    for (const auto& r : rels)
        if (!r.is_homogeneous())
            throw std::invalid_argument(
                "minimal_free_resolution: relations must be homogeneous");
    auto res = build_resolution(f0, rels);
    minimalize(res);
    if (res.length() > f0->ring->nvars())
        throw std::logic_error("minimal_free_resolution: length exceeds variable count");
    return res;
}

// Exact Betti numbers beta_0..beta_N of coker(rels) over S = R/J. One extra
// differential is built so that stage N survives minimalization with its
// final rank; if the chain terminates early the tail is genuinely zero.
template <class F>
std::vector<long long> finite_stage_betti(FreeModulePtr<F> f0,
                                          const std::vector<ModElem<F>>& rels,
                                          const std::vector<Polynomial<F>>& gbJ, int stages) {
    if (stages < 2) throw std::invalid_argument("finite_stage_betti: need at least 2 stages");
    auto res = build_resolution(f0, rels, gbJ, stages + 1);
    minimalize(res);
    std::vector<long long> beta;
    beta.reserve(static_cast<std::size_t>(stages) + 1);
    for (int i = 0; i <= stages; ++i)
        beta.push_back(static_cast<long long>(res.rank(static_cast<std::size_t>(i))));
    return beta;
}

// ---- certificates ----

template <class F>
ModElem<F> apply_map(const std::vector<ModElem<F>>& cols, const ModElem<F>& v,
                     FreeModulePtr<F> target) {
    ModElem<F> acc = ModElem<F>::zero(target);
    for (const auto& t : v.terms())
        acc = acc + cols[static_cast<std::size_t>(t.comp)].term_multiplied(t.c, t.m);
    return acc;
}

template <class F>
bool is_complex(const FreeResolution<F>& res) {
    for (std::size_t k = 0; k + 1 < res.length(); ++k)
        for (const auto& col : res.diffs[k + 1]) {
            auto img = apply_map(res.diffs[k], col, res.modules[k]);
            if (!detail::nf_elem(img, res.quotient_gb).is_zero()) return false;
        }
    return true;
}

template <class F>
bool is_minimal(const FreeResolution<F>& res) {
    for (const auto& cols : res.diffs)
        for (const auto& col : cols)
            for (const auto& t : col.terms())
                if (t.m.degree() == 0) return false;
    return true;
}

template <class F>
bool is_graded(const FreeResolution<F>& res) {
    for (std::size_t k = 0; k < res.length(); ++k)
        for (std::size_t c = 0; c < res.diffs[k].size(); ++c) {
            const auto& col = res.diffs[k][c];
            if (col.is_zero()) continue;
            if (!col.is_homogeneous()) return false;
            if (col.degree() != res.modules[k + 1]->degrees[c]) return false;
        }
    return true;
}

// ---- graded pieces, for rank-based exactness checks ----

// Standard monomials of degree d mod the leading terms of gbJ; with gbJ
// empty this is every monomial of degree d.
template <class F>
std::vector<Monomial> standard_monomials(const RingPtr<F>& ring,
                                         const std::vector<Polynomial<F>>& gbJ, int degree) {
    std::vector<Monomial> out;
    for (auto& m : monomials_of_degree(ring->nvars(), degree)) {
        bool reducible = false;
        for (const auto& g : gbJ)
            if (g.leading_monomial().divides(m)) {
                reducible = true;
                break;
            }
        if (!reducible) out.push_back(std::move(m));
    }
    return out;
}

namespace detail {

template <class F>
struct PieceBasis {
    std::vector<std::pair<int, Monomial>> elems; // (component, monomial)
    std::map<std::pair<int, std::vector<int>>, std::size_t> index;
};

template <class F>
PieceBasis<F> piece_basis(const FreeModule<F>& mod, const std::vector<Polynomial<F>>& gbJ,
                          int degree) {
    PieceBasis<F> b;
    for (std::size_t a = 0; a < mod.rank(); ++a)
        for (auto& m : standard_monomials(mod.ring, gbJ, degree - mod.degrees[a])) {
            b.index[{static_cast<int>(a), m.exps()}] = b.elems.size();
            b.elems.emplace_back(static_cast<int>(a), std::move(m));
        }
    return b;
}

} // namespace detail

// Matrix of d_{k+1} restricted to the degree-n graded piece, in the standard
// monomial bases of source and target.
template <class F>
Matrix<F> graded_piece_matrix(const FreeResolution<F>& res, std::size_t k, int n) {
    const auto& field = res.ring->field;
    auto src = detail::piece_basis(*res.modules[k + 1], res.quotient_gb, n);
    auto dst = detail::piece_basis(*res.modules[k], res.quotient_gb, n);
    Matrix<F> m(field, dst.elems.size(), src.elems.size());
    for (std::size_t j = 0; j < src.elems.size(); ++j) {
        const auto& [comp, mono] = src.elems[j];
        auto img = detail::nf_elem(
            res.diffs[k][static_cast<std::size_t>(comp)].term_multiplied(field.one(), mono),
            res.quotient_gb);
        for (const auto& t : img.terms()) {
            auto it = dst.index.find({t.comp, t.m.exps()});
            if (it == dst.index.end())
                throw std::logic_error("graded_piece_matrix: image leaves the graded piece");
            m.at(it->second, j) = t.c;
        }
    }
    return m;
}

template <class F>
std::size_t piece_dimension(const FreeResolution<F>& res, std::size_t i, int n) {
    return detail::piece_basis(*res.modules[i], res.quotient_gb, n).elems.size();
}

// Exactness at positions 1..length-1 for every ambient degree in [lo, hi],
// by comparing kernel and image dimensions of the graded pieces. Valid for
// graded chains only.
template <class F>
bool is_exact_on_degrees(const FreeResolution<F>& res, int lo, int hi) {
    const auto& field = res.ring->field;
    for (std::size_t k = 0; k + 1 < res.length(); ++k) {
        for (int n = lo; n <= hi; ++n) {
            auto inner = graded_piece_matrix(res, k, n);     // d_{k+1} in degree n
            auto outer = graded_piece_matrix(res, k + 1, n); // d_{k+2} in degree n
            std::size_t nullity = inner.cols - rank(field, inner);
            if (nullity != rank(field, outer)) return false;
        }
    }
    return true;
}

// For a fully terminated resolution, exactness at the last spot means the
// final differential is injective.
template <class F>
bool last_map_injective_on_degrees(const FreeResolution<F>& res, int lo, int hi) {
    if (res.length() == 0) return true;
    const auto& field = res.ring->field;
    for (int n = lo; n <= hi; ++n) {
        auto m = graded_piece_matrix(res, res.length() - 1, n);
        if (rank(field, m) != m.cols) return false;
    }
    return true;
}

// The first differential presents the same submodule as the given relation
// list: both reduced bases coincide.
template <class F>
bool presents_same_relations(const FreeResolution<F>& res,
                             const std::vector<ModElem<F>>& rels) {
    std::vector<ModElem<F>> a = rels, b;
    if (res.length() > 0) b = res.diffs[0];
    for (const auto& h : res.quotient_gb)
        for (std::size_t c = 0; c < res.modules[0]->rank(); ++c) {
            a.push_back(ModElem<F>::from_poly(res.modules[0], h, static_cast<int>(c)));
            b.push_back(ModElem<F>::from_poly(res.modules[0], h, static_cast<int>(c)));
        }
    auto ga = reduce_basis(buchberger(res.modules[0], a)).elems;
    auto gb = reduce_basis(buchberger(res.modules[0], b)).elems;
    if (ga.size() != gb.size()) return false;
    for (std::size_t i = 0; i < ga.size(); ++i)
        if (ga[i] != gb[i]) return false;
    return true;
}

} // namespace gradecone
