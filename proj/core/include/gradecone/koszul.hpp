#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradecone/linalg.hpp"
#include "gradecone/local.hpp"
#include "gradecone/resolution.hpp"

// Koszul complexes on degree-one elements, with homology extracted piecewise
// by exact linear algebra. The module is abstracted to its graded pieces and
// the degree-raising operators the elements induce, which covers both honest
// graded quotients R/J and levelwise truncations of a local module (where
// piece n is M/m^{n+1}M and a linear form acts between consecutive levels).

namespace gradecone {

// Graded pieces 0..cutoff plus, per element, the matrices piece_n -> piece_{n+1}.
template <class F>
struct GradedLinearModule {
    F field;
    int cutoff = 0;
    std::vector<std::size_t> piece_dims;    // size cutoff+1
    std::vector<std::vector<Matrix<F>>> ops; // ops[j][n]: piece n -> piece n+1

    std::size_t piece(int n) const {
        if (n < 0 || n > cutoff) return 0;
        return piece_dims[static_cast<std::size_t>(n)];
    }
    std::size_t nelems() const { return ops.size(); }

    // drop trailing operators, keeping the first r as Koszul elements
    GradedLinearModule restricted(std::size_t r) const {
        GradedLinearModule m = *this;
        if (r < m.ops.size()) m.ops.resize(r);
        return m;
    }
};

namespace detail {

template <class F>
void require_linear_forms(const std::vector<Polynomial<F>>& forms) {
    for (const auto& f : forms)
        if (f.is_zero() || !f.is_homogeneous() || f.degree() != 1)
            throw std::invalid_argument("koszul: elements must be nonzero linear forms");
}

} // namespace detail

// Graded quotient R/J (J given by a Groebner basis) with multiplication by
// the given linear forms.
template <class F>
GradedLinearModule<F> linear_module_from_quotient(const RingPtr<F>& ring,
                                                  const std::vector<Polynomial<F>>& gbJ,
                                                  const std::vector<Polynomial<F>>& forms,
                                                  int cutoff) {
    detail::require_linear_forms(forms);
    if (cutoff < 0) throw std::invalid_argument("koszul: negative cutoff");
    GradedLinearModule<F> mod{ring->field, cutoff, {}, {}};

    std::vector<std::vector<Monomial>> bases;
    for (int n = 0; n <= cutoff; ++n) {
        bases.push_back(standard_monomials(ring, gbJ, n));
        mod.piece_dims.push_back(bases.back().size());
    }
    std::vector<std::map<std::vector<int>, std::size_t>> index(bases.size());
    for (std::size_t n = 0; n < bases.size(); ++n)
        for (std::size_t i = 0; i < bases[n].size(); ++i) index[n][bases[n][i].exps()] = i;

    for (const auto& f : forms) {
        std::vector<Matrix<F>> mats;
        for (int n = 0; n < cutoff; ++n) {
            const auto& src = bases[static_cast<std::size_t>(n)];
            const auto& dst_index = index[static_cast<std::size_t>(n) + 1];
            Matrix<F> a(ring->field, mod.piece(n + 1), mod.piece(n));
            for (std::size_t j = 0; j < src.size(); ++j) {
                auto img = normal_form_ideal(
                    f * Polynomial<F>::monomial(ring, ring->field.one(), src[j]), gbJ);
                for (const auto& t : img.terms()) {
                    auto it = dst_index.find(t.m.exps());
                    if (it == dst_index.end())
                        throw std::logic_error("koszul: normal form left the graded basis");
                    a.at(it->second, j) = t.c;
                }
            }
            mats.push_back(std::move(a));
        }
        mod.ops.push_back(std::move(mats));
    }
    return mod;
}

// Levelwise truncation of the local module M = R_m/(gens): piece n is the
// whole quotient M/m^{n+1}M and a linear form acts as the degree-one part of
// the Rees action, level n to level n+1. Pieces are exact for every n; only
// the cutoff itself is a truncation.
template <class F>
GradedLinearModule<F> truncated_local_module(const RingPtr<F>& ring,
                                             const std::vector<Polynomial<F>>& gens,
                                             const std::vector<Polynomial<F>>& forms,
                                             int cutoff) {
    detail::require_linear_forms(forms);
    if (cutoff < 0) throw std::invalid_argument("koszul: negative cutoff");
    GradedLinearModule<F> mod{ring->field, cutoff, {}, {}};

    std::vector<ArtinQuotient<F>> levels;
    for (int n = 0; n <= cutoff; ++n) {
        levels.push_back(build_artin_quotient(ring, gens, n + 1));
        mod.piece_dims.push_back(levels.back().dim());
    }
    for (const auto& f : forms) {
        std::vector<Matrix<F>> mats;
        for (int n = 0; n < cutoff; ++n) {
            const auto& src = levels[static_cast<std::size_t>(n)];
            const auto& dst = levels[static_cast<std::size_t>(n) + 1];
            Matrix<F> a(ring->field, dst.dim(), src.dim());
            for (std::size_t j = 0; j < src.dim(); ++j) {
                auto col = dst.coords(
                    f * Polynomial<F>::monomial(ring, ring->field.one(), src.basis[j]));
                for (std::size_t i = 0; i < dst.dim(); ++i) a.at(i, j) = col[i];
            }
            mats.push_back(std::move(a));
        }
        mod.ops.push_back(std::move(mats));
    }
    return mod;
}

// The operators must commute for the Koszul differential to square to zero;
// true by construction here, but cheap enough to assert in tests.
template <class F>
bool operators_commute(const GradedLinearModule<F>& mod) {
    for (std::size_t a = 0; a < mod.nelems(); ++a)
        for (std::size_t b = a + 1; b < mod.nelems(); ++b)
            for (int n = 0; n + 2 <= mod.cutoff; ++n) {
                auto ab = matmul(mod.field, mod.ops[a][static_cast<std::size_t>(n) + 1],
                                 mod.ops[b][static_cast<std::size_t>(n)]);
                auto ba = matmul(mod.field, mod.ops[b][static_cast<std::size_t>(n) + 1],
                                 mod.ops[a][static_cast<std::size_t>(n)]);
                if (!(ab.data == ba.data)) return false;
            }
    return true;
}

namespace detail {

inline std::vector<std::vector<int>> subsets_of_size(int r, int i) {
    std::vector<std::vector<int>> out;
    if (i < 0 || i > r) return out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == i) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < r; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline std::size_t subset_index(const std::vector<std::vector<int>>& subsets,
                                const std::vector<int>& s) {
    for (std::size_t i = 0; i < subsets.size(); ++i)
        if (subsets[i] == s) return i;
    throw std::logic_error("koszul: subset not found");
}

} // namespace detail

// Matrix of the Koszul differential d_i : (K_i)_n -> (K_{i-1})_n for the
// first r operators. Basis of (K_i)_n: pairs (S, b) with S an i-subset in
// enumeration order and b a basis vector of piece n-i; d(e_S (x) b) =
// sum over the k-th element j of S of (-1)^k e_{S\j} (x) op_j(b).
template <class F>
Matrix<F> koszul_matrix(const GradedLinearModule<F>& mod, std::size_t r, int i, int n) {
    auto cols_sets = detail::subsets_of_size(static_cast<int>(r), i);
    auto rows_sets = detail::subsets_of_size(static_cast<int>(r), i - 1);
    const std::size_t src_dim = (n - i >= 0) ? mod.piece(n - i) : 0;
    const std::size_t dst_dim = (n - i + 1 >= 0) ? mod.piece(n - i + 1) : 0;
    Matrix<F> d(mod.field, rows_sets.size() * dst_dim, cols_sets.size() * src_dim);
    if (src_dim == 0 || dst_dim == 0 || i < 1) return d;

    const auto& field = mod.field;
    for (std::size_t si = 0; si < cols_sets.size(); ++si) {
        const auto& s = cols_sets[si];
        for (std::size_t k = 0; k < s.size(); ++k) {
            std::vector<int> t = s;
            t.erase(t.begin() + static_cast<std::ptrdiff_t>(k));
            const std::size_t ti = detail::subset_index(rows_sets, t);
            const auto& a = mod.ops[static_cast<std::size_t>(s[k])][static_cast<std::size_t>(n - i)];
            const bool neg = (k % 2) == 1;
            for (std::size_t row = 0; row < dst_dim; ++row)
                for (std::size_t col = 0; col < src_dim; ++col) {
                    if (a.at(row, col) == field.zero()) continue;
                    auto& entry = d.at(ti * dst_dim + row, si * src_dim + col);
                    entry = neg ? entry - a.at(row, col) : entry + a.at(row, col);
                }
        }
    }
    return d;
}

// Homology dimensions dim H_i(K(first r ops))_n for i in [0, r] and n in
// [lo, hi]. hi must stay within the module's cutoff.
struct KoszulHomology {
    std::size_t r = 0;
    int lo = 0, hi = 0;
    std::vector<std::vector<long long>> dims; // dims[i][n-lo]

    long long at(std::size_t i, int n) const {
        return dims[i][static_cast<std::size_t>(n - lo)];
    }
    // largest n with nonzero H_i, or lo-1 if none
    int top_nonzero(std::size_t i) const {
        for (int n = hi; n >= lo; --n)
            if (at(i, n) != 0) return n;
        return lo - 1;
    }
    bool any_nonzero(std::size_t i) const { return top_nonzero(i) >= lo; }
};

template <class F>
KoszulHomology koszul_homology(const GradedLinearModule<F>& mod, std::size_t r, int lo,
                               int hi) {
    if (r > mod.nelems()) throw std::invalid_argument("koszul_homology: not enough operators");
    if (hi > mod.cutoff)
        throw std::invalid_argument("koszul_homology: range exceeds the truncation cutoff");
    if (lo < 0 || hi < lo) throw std::invalid_argument("koszul_homology: bad range");

    KoszulHomology h;
    h.r = r;
    h.lo = lo;
    h.hi = hi;
    h.dims.assign(r + 1, std::vector<long long>(static_cast<std::size_t>(hi - lo + 1), 0));

    auto cols_of = [&](int i, int n) -> long long {
        if (i < 0 || i > static_cast<int>(r) || n - i < 0) return 0;
        long long c = 1; // binomial(r, i)
        for (int v = 0; v < i; ++v) c = c * (static_cast<long long>(r) - v) / (v + 1);
        return c * static_cast<long long>(mod.piece(n - i));
    };

    for (int n = lo; n <= hi; ++n) {
        std::vector<long long> rk(r + 2, 0);
        for (std::size_t i = 1; i <= r + 1; ++i) {
            if (i <= r && cols_of(static_cast<int>(i), n) > 0)
                rk[i] = static_cast<long long>(
                    rank(mod.field, koszul_matrix(mod, r, static_cast<int>(i), n)));
        }
        for (std::size_t i = 0; i <= r; ++i) {
            long long kernel = cols_of(static_cast<int>(i), n) - rk[i];
            h.dims[i][static_cast<std::size_t>(n - lo)] = kernel - rk[i + 1];
        }
    }
    return h;
}

// Rank of the map H_i(K(first r ops))_n -> H_i(K)_{n+1} induced by operator
// index j (acting blockwise on coefficients): the span of the mapped cycles
// together with the boundaries of degree n+1, modulo those boundaries.
template <class F>
long long induced_operator_rank(const GradedLinearModule<F>& mod, std::size_t r,
                                std::size_t j, int i, int n) {
    if (n + 1 > mod.cutoff) throw std::invalid_argument("induced rank: past the cutoff");
    const auto& field = mod.field;
    auto d_i = koszul_matrix(mod, r, i, n);
    auto cycles = kernel_basis(field, d_i);
    if (i == 0) {
        // K_0 has no differential below it: every vector is a cycle
        cycles.clear();
        for (std::size_t c = 0; c < mod.piece(n); ++c) {
            std::vector<typename F::Elem> v(mod.piece(n), field.zero());
            v[c] = field.one();
            cycles.push_back(std::move(v));
        }
    }

    // blockwise action on (K_i)_n = (subsets) x piece(n-i)
    const auto& a = mod.ops[j][static_cast<std::size_t>(n - i)];
    const std::size_t src = mod.piece(n - i), dst = mod.piece(n - i + 1);
    auto sets = detail::subsets_of_size(static_cast<int>(r), i);
    std::vector<std::vector<typename F::Elem>> mapped;
    for (const auto& v : cycles) {
        std::vector<typename F::Elem> w(sets.size() * dst, field.zero());
        for (std::size_t s = 0; s < sets.size(); ++s) {
            std::vector<typename F::Elem> seg(v.begin() + static_cast<std::ptrdiff_t>(s * src),
                                              v.begin() +
                                                  static_cast<std::ptrdiff_t>((s + 1) * src));
            auto img = apply(field, a, seg);
            for (std::size_t t = 0; t < dst; ++t) w[s * dst + t] = img[t];
        }
        mapped.push_back(std::move(w));
    }

    auto d_next = koszul_matrix(mod, r, i + 1, n + 1);
    std::vector<std::vector<typename F::Elem>> boundaries;
    for (std::size_t c = 0; c < d_next.cols; ++c) {
        std::vector<typename F::Elem> col(d_next.rows, field.zero());
        for (std::size_t rr = 0; rr < d_next.rows; ++rr) col[rr] = d_next.at(rr, c);
        boundaries.push_back(std::move(col));
    }
    const std::size_t nrows = sets.size() * dst;
    auto with = boundaries;
    for (auto& v : mapped) with.push_back(std::move(v));
    return static_cast<long long>(detail::span_dim(field, with, nrows)) -
           static_cast<long long>(detail::span_dim(field, boundaries, nrows));
}

// Depth of a graded quotient by Koszul sensitivity: the homology of the full
// variable sequence vanishes above index n - depth. Works top-down and stops
// at the first nonvanishing index. The certificate is honest only if the
// window really contains all nonzero degrees, which holds once nothing is
// alive near the top; otherwise certified is false.
struct KoszulDepth {
    int depth = 0;
    int top_index = -1;   // largest i with H_i nonzero in the window
    bool certified = true;
};

template <class F>
KoszulDepth depth_via_koszul(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gbJ,
                             int cutoff) {
    std::vector<Polynomial<F>> vars;
    for (std::size_t i = 0; i < ring->nvars(); ++i)
        vars.push_back(Polynomial<F>::variable(ring, i));
    auto mod = linear_module_from_quotient(ring, gbJ, vars, cutoff);

    bool module_zero = true;
    for (auto d : mod.piece_dims)
        if (d != 0) module_zero = false;
    if (module_zero) throw std::invalid_argument("depth_via_koszul: zero module");

    const std::size_t r = vars.size();
    const int margin = static_cast<int>(r) + 1;
    KoszulDepth out;
    auto h = koszul_homology(mod, r, 0, cutoff);
    for (std::size_t i = r; i >= 1; --i) {
        if (!h.any_nonzero(i)) continue;
        out.top_index = static_cast<int>(i);
        out.depth = static_cast<int>(r) - static_cast<int>(i);
        // the verdict is only honest if every index died well below the
        // cutoff, leaving headroom for a straggler
        out.certified = true;
        for (std::size_t low = 1; low <= r; ++low)
            if (h.top_nonzero(low) > cutoff - margin) out.certified = false;
        return out;
    }
    out.depth = static_cast<int>(r);
    out.top_index = 0;
    return out;
}

// ---- windowed vanishing reports for truncated local modules ----

enum class WindowVerdict { PassOnWindow, Fail, NotApplicable };

inline std::string window_verdict_name(WindowVerdict v) {
    switch (v) {
    case WindowVerdict::PassOnWindow: return "PASS-ON-WINDOW";
    case WindowVerdict::Fail: return "FAIL";
    case WindowVerdict::NotApplicable: return "NOT-APPLICABLE";
    }
    return "?";
}

// Evidence report: Koszul homology of degree-one Rees elements on the
// levelwise truncation of M, checked to vanish on the tail of the window.
// Indices below min_index carry no finiteness claim and are not inspected.
struct LmVanishingReport {
    WindowVerdict verdict = WindowVerdict::NotApplicable;
    std::string reason;
    int dim = -1;
    int cutoff = 0;
    int margin = 0;
    int tail_lo = 0; // tail window [tail_lo, cutoff - margin]
    std::size_t min_index = 1;
    std::vector<std::array<long long, 3>> nonzero; // (i, n, dim), i >= min_index
    std::uint64_t seed = 0;
};

template <class F>
LmVanishingReport check_lm_vanishing(const RingPtr<F>& ring,
                                     const std::vector<Polynomial<F>>& gens,
                                     const std::vector<Polynomial<F>>& superficials,
                                     const std::vector<Polynomial<F>>& extras, int cutoff,
                                     int trials, int window_lo, int window_hi,
                                     std::uint64_t seed) {
    LmVanishingReport rep;
    rep.cutoff = cutoff;
    rep.seed = seed;

    auto diag = diagnose_local(ring, gens, trials, window_lo, window_hi, seed);
    rep.dim = diag.dim;
    if (diag.dim < 1) {
        rep.reason = "module is Artinian";
        return rep;
    }
    if (!diag.certified) {
        rep.reason = "Cohen-Macaulay status could not be certified: " + diag.note;
        return rep;
    }
    if (!diag.cm) {
        rep.reason = "module is not Cohen-Macaulay";
        return rep;
    }
    if (static_cast<int>(superficials.size()) != diag.dim) {
        rep.reason = "need one superficial element per dimension";
        return rep;
    }

    // re-verify the sequence on successive quotients
    std::vector<Polynomial<F>> cur = gens;
    for (const auto& l : superficials) {
        auto q = build_artin_quotient(ring, cur, window_hi + 2);
        int fail = -1;
        if (!superficial_window_check(q, l, window_lo, window_hi, &fail)) {
            rep.reason = "element failed the superficial window check at degree " +
                         std::to_string(fail);
            return rep;
        }
        cur.push_back(l);
    }

    std::vector<Polynomial<F>> elements = superficials;
    elements.insert(elements.end(), extras.begin(), extras.end());
    if (!extras.empty()) {
        // superficials plus extras must minimally generate m: exactly one
        // element per variable, linear parts of full rank
        if (elements.size() != ring->nvars()) {
            rep.reason = "elements do not minimally generate the maximal ideal";
            return rep;
        }
        Matrix<F> coeffs(ring->field, ring->nvars(), elements.size());
        for (std::size_t j = 0; j < elements.size(); ++j)
            for (const auto& t : elements[j].terms())
                for (std::size_t i = 0; i < ring->nvars(); ++i)
                    if (t.m.exp(i) == 1 && t.m.degree() == 1) coeffs.at(i, j) = t.c;
        if (rank(ring->field, coeffs) != ring->nvars()) {
            rep.reason = "elements do not span the maximal ideal";
            return rep;
        }
    }

    const std::size_t r = elements.size();
    rep.margin = static_cast<int>(r);
    // finiteness is claimed for every index with superficials alone, and
    // only above the number of filler elements for the full set
    rep.min_index = extras.empty() ? 1 : extras.size() + 1;
    const int hi = cutoff - rep.margin;
    rep.tail_lo = std::max(0, hi - 2);
    if (hi < 1) {
        rep.reason = "cutoff leaves no window after the margin";
        return rep;
    }

    auto mod = truncated_local_module(ring, gens, elements, cutoff);
    auto h = koszul_homology(mod, r, 0, hi);
    bool tail_clean = true;
    for (std::size_t i = rep.min_index; i <= r; ++i)
        for (int n = 0; n <= hi; ++n)
            if (h.at(i, n) != 0) {
                rep.nonzero.push_back({static_cast<long long>(i), n, h.at(i, n)});
                if (n >= rep.tail_lo) tail_clean = false;
            }
    rep.verdict = tail_clean ? WindowVerdict::PassOnWindow : WindowVerdict::Fail;
    if (!tail_clean) rep.reason = "nonzero homology inside the tail window";
    return rep;
}

} // namespace gradecone
