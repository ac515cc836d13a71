#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradecone/groebner.hpp"
#include "gradecone/hilbert.hpp"
#include "gradecone/linalg.hpp"
#include "gradecone/resolution.hpp"

// Local algebra at the origin, reached through the associated graded ring.
// A quotient of the localized polynomial ring is represented by ideal
// generators vanishing at the origin; every invariant below (length,
// dimension, multiplicity, depth) is extracted from either the ideal of
// initial forms or an Artinian truncation by a power of the maximal ideal,
// both of which ordinary global Groebner bases can handle.

namespace gradecone {

// Generators must vanish at the origin, otherwise the local quotient is zero
// and none of the filtration invariants make sense.
template <class F>
void validate_local_generators(const std::vector<Polynomial<F>>& gens) {
    for (const auto& g : gens)
        if (!g.constant_term().is_zero())
            throw std::invalid_argument("local quotient: generator is a unit at the origin");
}

// Krull dimension of R/J from the leading terms of a Groebner basis of J:
// the largest set of variables that meets the support of no leading term is
// a maximal independent set. Exponential in the variable count, which stays
// small here. Returns -1 for the unit ideal.
template <class F>
int quotient_dimension(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gb) {
    const std::size_t n = ring->nvars();
    if (n > 20) throw std::invalid_argument("quotient_dimension: too many variables");
    std::vector<std::uint32_t> supports;
    for (const auto& g : gb) {
        if (g.is_zero()) continue;
        if (g.leading_monomial().is_one()) return -1;
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < n; ++i)
            if (g.leading_monomial().exp(i) > 0) s |= (1u << i);
        supports.push_back(s);
    }
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (auto s : supports)
            if ((s & ~mask) == 0) {
                independent = false;
                break;
            }
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

namespace detail {

// a variable name not already used by the ring
template <class F>
std::string fresh_var_name(const RingPtr<F>& ring) {
    std::string name = "t";
    while (std::find(ring->vars.begin(), ring->vars.end(), name) != ring->vars.end())
        name += "_";
    return name;
}

// terms carrying the maximal power of the last variable, that power divided
// out; for a homogenized polynomial this is its lowest-order part
template <class F>
Polynomial<F> top_homogenizing_part(const Polynomial<F>& g) {
    const std::size_t t = g.ring()->nvars() - 1;
    int k = 0;
    for (const auto& tm : g.terms()) k = std::max(k, tm.m.exp(t));
    std::vector<Term<F>> ts;
    for (const auto& tm : g.terms())
        if (tm.m.exp(t) == k) {
            std::vector<int> e = tm.m.exps();
            e[static_cast<std::size_t>(t)] -= k;
            ts.push_back({tm.c, Monomial{std::move(e)}});
        }
    return Polynomial<F>(g.ring(), std::move(ts));
}

} // namespace detail

// Ideal of initial forms of I (the defining ideal of the tangent cone at the
// origin), as a reduced Groebner basis in the input ring. Computed by
// homogenizing the generators, saturating by the homogenizing variable t
// under grevlex with t cheapest (where stripping t powers off a reduced
// basis is a sound saturation step), then re-running Buchberger under the
// t-heavy order, whose leading data singles out the lowest-order part of
// each dehomogenization.
template <class F>
std::vector<Polynomial<F>> tangent_cone(const RingPtr<F>& ring,
                                        const std::vector<Polynomial<F>>& gens) {
    if (!is_graded(ring->order.kind))
        throw std::invalid_argument("tangent_cone: needs a graded order");
    validate_local_generators(gens);

    std::vector<Polynomial<F>> work;
    for (const auto& g : gens)
        if (!g.is_zero()) work.push_back(g);
    if (work.empty()) return {};

    bool homogeneous = true;
    for (const auto& g : work)
        if (!g.is_homogeneous()) homogeneous = false;
    if (homogeneous) return groebner_ideal(ring, work);

    const std::string tname = detail::fresh_var_name(ring);
    auto ring_sat = ring->with_appended_var(tname, OrderKind::GrevLex);
    std::vector<Polynomial<F>> cur;
    for (const auto& g : work) cur.push_back(g.homogenized(ring_sat));

    // saturation by t: with t the cheapest grevlex variable, a leading term
    // divisible by t forces the whole element to be, so stripping reaches
    // the saturated ideal in finitely many rounds
    for (int round = 0;; ++round) {
        if (round > 64) throw std::logic_error("tangent_cone: saturation did not stabilize");
        auto gb = groebner_ideal(ring_sat, cur);
        std::vector<Polynomial<F>> stripped;
        stripped.reserve(gb.size());
        for (const auto& g : gb) stripped.push_back(g.last_var_power_stripped());
        if (same_ideal(stripped, gb)) {
            cur = std::move(gb);
            break;
        }
        cur = std::move(stripped);
    }

    auto ring_heavy = ring->with_appended_var(tname, OrderKind::HomogTHeavy);
    std::vector<Polynomial<F>> heavy;
    heavy.reserve(cur.size());
    for (const auto& g : cur) heavy.push_back(g.converted(ring_heavy));

    std::vector<Polynomial<F>> forms;
    for (const auto& g : groebner_ideal(ring_heavy, heavy))
        forms.push_back(detail::top_homogenizing_part(g).dehomogenized(ring));
    return groebner_ideal(ring, forms);
}

// Every standard monomial of a zero-dimensional homogeneous ideal, ascending
// by degree. Throws if the quotient has positive dimension.
template <class F>
std::vector<Monomial> standard_monomials_all(const RingPtr<F>& ring,
                                             const std::vector<Polynomial<F>>& gb) {
    if (quotient_dimension(ring, gb) != 0)
        throw std::domain_error("standard_monomials_all: quotient has infinite length");
    std::vector<Monomial> out;
    for (int d = 0;; ++d) {
        auto level = standard_monomials(ring, gb, d);
        if (level.empty()) break;
        for (auto& m : level) out.push_back(std::move(m));
    }
    return out;
}

// Length of the localized quotient R_m/(gens), via the tangent cone: the
// associated graded module has the same length, counted by its standard
// monomials. Throws domain_error when the length is infinite.
template <class F>
long long local_length(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens) {
    auto cone = tangent_cone(ring, gens);
    if (quotient_dimension(ring, cone) != 0)
        throw std::domain_error("local_length: quotient has infinite length");
    return static_cast<long long>(standard_monomials_all(ring, cone).size());
}

// Loewy length of an Artinian local quotient: least i with m^i = 0, read off
// as one past the top nonzero degree of the associated graded ring.
template <class F>
int loewy_length(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens) {
    auto cone = tangent_cone(ring, gens);
    auto basis = standard_monomials_all(ring, cone);
    int top = 0;
    for (const auto& m : basis) top = std::max(top, m.degree());
    return top + 1;
}

// Hilbert data of the associated graded module of the local quotient, i.e.
// of R/in(I): resolve the cone ideal minimally, then expand. Exact Hilbert
// coefficients e_0, e_1, ... of the local ring fall out of the h-polynomial.
template <class F>
HilbertData local_hilbert(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens) {
    auto cone = tangent_cone(ring, gens);
    auto f0 = rank_one_module(ring);
    auto res = minimal_free_resolution(f0, wrap_ideal(f0, cone));
    std::vector<std::vector<int>> shifts;
    for (const auto& mod : res.modules) shifts.push_back(mod->degrees);
    return hilbert_series(betti_from_shifts(shifts), static_cast<int>(ring->nvars()));
}

// ---- Artinian truncations ----

// The finite-dimensional algebra R/(I + m^cap) with its monomial basis. The
// capped Groebner run gets the full degree-cap block as explicit generators
// and truncates arithmetic one degree higher, which is sound because every
// dropped term lies inside the block ideal.
template <class F>
struct ArtinQuotient {
    RingPtr<F> ring;
    int cap = 0;
    std::vector<Polynomial<F>> divisors; // reduced capped basis of I + m^cap
    std::vector<Monomial> basis;         // standard monomials, degree ascending
    std::map<std::vector<int>, std::size_t> index;

    std::size_t dim() const { return basis.size(); }

    std::vector<typename F::Elem> coords(const Polynomial<F>& f) const {
        auto nf = normal_form_ideal(f, divisors, cap + 1);
        std::vector<typename F::Elem> v(basis.size(), ring->field.zero());
        for (const auto& t : nf.terms()) {
            auto it = index.find(t.m.exps());
            if (it == index.end())
                throw std::logic_error("ArtinQuotient: normal form left the basis");
            v[it->second] = t.c;
        }
        return v;
    }
};

template <class F>
ArtinQuotient<F> build_artin_quotient(const RingPtr<F>& ring,
                                      const std::vector<Polynomial<F>>& gens, int cap) {
    if (cap < 1) throw std::invalid_argument("build_artin_quotient: cap must be positive");
    validate_local_generators(gens);
    ArtinQuotient<F> q;
    q.ring = ring;
    q.cap = cap;

    std::vector<Polynomial<F>> padded = gens;
    for (auto& m : monomials_of_degree(ring->nvars(), cap))
        padded.push_back(Polynomial<F>::monomial(ring, ring->field.one(), m));
    GBOptions opts;
    opts.degree_cap = cap + 1;
    q.divisors = groebner_ideal(ring, padded, opts);

    for (int d = 0; d < cap; ++d)
        for (auto& m : standard_monomials(ring, q.divisors, d)) q.basis.push_back(std::move(m));
    for (std::size_t i = 0; i < q.basis.size(); ++i) q.index[q.basis[i].exps()] = i;
    return q;
}

// Monomial basis of R/(I + m^cap), ascending by degree: the graded pieces of
// the truncated local quotient, with length = size.
template <class F>
std::vector<Monomial> truncated_quotient_basis(const RingPtr<F>& ring,
                                               const std::vector<Polynomial<F>>& gens,
                                               int cap) {
    return build_artin_quotient(ring, gens, cap).basis;
}

// Matrix of multiplication by f on the truncated quotient, in its monomial
// basis.
template <class F>
Matrix<F> multiplication_matrix(const ArtinQuotient<F>& q, const Polynomial<F>& f) {
    Matrix<F> m(q.ring->field, q.dim(), q.dim());
    for (std::size_t j = 0; j < q.dim(); ++j) {
        auto col = q.coords(f * Polynomial<F>::monomial(q.ring, q.ring->field.one(), q.basis[j]));
        for (std::size_t i = 0; i < q.dim(); ++i) m.at(i, j) = col[i];
    }
    return m;
}

namespace detail {

template <class F>
Matrix<F> matrix_from_columns(const F& field,
                              const std::vector<std::vector<typename F::Elem>>& cols,
                              std::size_t nrows) {
    Matrix<F> m(field, nrows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < nrows; ++i) m.at(i, j) = cols[j][i];
    return m;
}

// spanning columns of m^k inside the truncated quotient: normal forms of all
// monomials of degree k up to the cap (not just standard ones of degree >= k,
// since reduction can lower the apparent degree)
template <class F>
std::vector<std::vector<typename F::Elem>> power_span(const ArtinQuotient<F>& q, int k) {
    std::vector<std::vector<typename F::Elem>> cols;
    for (int d = k; d < q.cap; ++d)
        for (const auto& m : monomials_of_degree(q.ring->nvars(), d)) {
            auto v = q.coords(Polynomial<F>::monomial(q.ring, q.ring->field.one(), m));
            bool zero = true;
            for (const auto& x : v)
                if (!x.is_zero()) {
                    zero = false;
                    break;
                }
            if (!zero) cols.push_back(std::move(v));
        }
    return cols;
}

// spanning columns of the preimage L^{-1}(span S): kernel vectors of [S | L]
// restricted to their L-block coordinates
template <class F>
std::vector<std::vector<typename F::Elem>> preimage_span(
    const F& field, const Matrix<F>& L,
    const std::vector<std::vector<typename F::Elem>>& s_cols) {
    const std::size_t n = L.rows;
    Matrix<F> aug(field, n, s_cols.size() + L.cols);
    for (std::size_t j = 0; j < s_cols.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) aug.at(i, j) = s_cols[j][i];
    for (std::size_t j = 0; j < L.cols; ++j)
        for (std::size_t i = 0; i < n; ++i) aug.at(i, s_cols.size() + j) = L.at(i, j);

    std::vector<std::vector<typename F::Elem>> out;
    for (const auto& k : kernel_basis(field, aug)) {
        std::vector<typename F::Elem> v(k.begin() + static_cast<std::ptrdiff_t>(s_cols.size()),
                                        k.end());
        bool zero = true;
        for (const auto& x : v)
            if (!x.is_zero()) {
                zero = false;
                break;
            }
        if (!zero) out.push_back(std::move(v));
    }
    return out;
}

template <class F>
std::size_t span_dim(const F& field, const std::vector<std::vector<typename F::Elem>>& cols,
                     std::size_t nrows) {
    if (cols.empty()) return 0;
    return rank(field, matrix_from_columns(field, cols, nrows));
}

// dim(U cap W) = dim U + dim W - dim(U + W)
template <class F>
std::size_t intersection_dim(const F& field,
                             const std::vector<std::vector<typename F::Elem>>& u,
                             const std::vector<std::vector<typename F::Elem>>& w,
                             std::size_t nrows) {
    auto joined = u;
    joined.insert(joined.end(), w.begin(), w.end());
    return span_dim(field, u, nrows) + span_dim(field, w, nrows) -
           span_dim(field, joined, nrows);
}

template <class F>
Polynomial<F> linear_form(const RingPtr<F>& ring, std::mt19937_64& rng) {
    for (;;) {
        std::vector<Term<F>> ts;
        for (std::size_t i = 0; i < ring->nvars(); ++i) {
            auto c = ring->field.from_int(static_cast<long long>(rng() % 2048));
            if (!c.is_zero()) ts.push_back({c, Monomial::var(i, ring->nvars())});
        }
        Polynomial<F> f(ring, std::move(ts));
        if (!f.is_zero()) return f;
    }
}

} // namespace detail

// Outcome of a randomized superficial-element search. The verification is a
// finite window check of the defining colon condition
//   (m^{n+1}M : l) cap m^{c}M = m^n M  for n in [c, window_hi],
// scanning cutoffs c from window_lo up while at least three degrees of
// evidence remain. The scan matters: when the associated graded module is
// not Cohen-Macaulay the colon picks up junk of bounded order above any
// fixed cutoff, and pinning c = window_lo would reject every candidate.
// Evidence on a window, not a proof for all n.
template <class F>
struct SuperficialSearch {
    bool found = false;
    Polynomial<F> ell;
    int window_lo = 0;
    int window_hi = 0;
    int trials_used = 0;
    int fail_degree = -1; // last window degree where a candidate failed
    std::uint64_t seed = 0;
};

template <class F>
bool superficial_window_check(const ArtinQuotient<F>& q, const Polynomial<F>& ell, int lo,
                              int hi, int* fail_degree = nullptr) {
    const auto& field = q.ring->field;
    const std::size_t n = q.dim();
    auto L = multiplication_matrix(q, ell);
    std::vector<std::size_t> power_dim(static_cast<std::size_t>(hi) + 2);
    std::vector<std::vector<std::vector<typename F::Elem>>> powers(
        static_cast<std::size_t>(hi) + 2);
    for (int k = lo; k <= hi + 1; ++k) {
        powers[static_cast<std::size_t>(k)] = detail::power_span(q, k);
        power_dim[static_cast<std::size_t>(k)] =
            detail::span_dim(field, powers[static_cast<std::size_t>(k)], n);
    }
    std::vector<std::vector<std::vector<typename F::Elem>>> colon(
        static_cast<std::size_t>(hi) + 1);
    for (int deg = lo; deg <= hi; ++deg)
        colon[static_cast<std::size_t>(deg)] =
            detail::preimage_span(field, L, powers[static_cast<std::size_t>(deg) + 1]);
    for (int c = lo; c + 2 <= hi; ++c) {
        bool ok = true;
        for (int deg = c; deg <= hi; ++deg) {
            auto meet = detail::intersection_dim(field, colon[static_cast<std::size_t>(deg)],
                                                 powers[static_cast<std::size_t>(c)], n);
            if (meet != power_dim[static_cast<std::size_t>(deg)]) {
                if (fail_degree) *fail_degree = deg;
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

template <class F>
SuperficialSearch<F> find_superficial(const RingPtr<F>& ring,
                                      const std::vector<Polynomial<F>>& gens, int trials,
                                      int window_lo, int window_hi, std::uint64_t seed) {
    if (window_lo < 1 || window_hi < window_lo)
        throw std::invalid_argument("find_superficial: bad window");
    auto cone = tangent_cone(ring, gens);
    if (quotient_dimension(ring, cone) < 1)
        throw std::invalid_argument("find_superficial: module is Artinian");

    SuperficialSearch<F> out;
    out.window_lo = window_lo;
    out.window_hi = window_hi;
    out.seed = seed;
    auto q = build_artin_quotient(ring, gens, window_hi + 2);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < trials; ++t) {
        auto ell = detail::linear_form(ring, rng);
        out.trials_used = t + 1;
        if (superficial_window_check(q, ell, window_lo, window_hi, &out.fail_degree)) {
            out.found = true;
            out.ell = ell;
            return out;
        }
    }
    return out;
}

// Superficial sequence of the given length, each element verified on the
// quotient by its predecessors.
template <class F>
struct SuperficialSequence {
    bool complete = false;
    std::vector<Polynomial<F>> elems;
    std::vector<SuperficialSearch<F>> records;
};

template <class F>
SuperficialSequence<F> find_superficial_sequence(const RingPtr<F>& ring,
                                                 const std::vector<Polynomial<F>>& gens,
                                                 int length, int trials, int window_lo,
                                                 int window_hi, std::uint64_t seed) {
    SuperficialSequence<F> out;
    std::vector<Polynomial<F>> cur = gens;
    for (int i = 0; i < length; ++i) {
        auto rec = find_superficial(ring, cur, trials, window_lo, window_hi, seed + 1000003u * static_cast<std::uint64_t>(i));
        out.records.push_back(rec);
        if (!rec.found) return out;
        cur.push_back(rec.ell);
        out.elems.push_back(rec.ell);
    }
    out.complete = true;
    return out;
}

// Dimension, depth and the Cohen-Macaulay verdict of the local quotient.
// Strategy: cut by a verified superficial sequence down to dimension zero
// and compare the resulting length with the multiplicity; equality certifies
// Cohen-Macaulayness. When the module is not CM, the depth is the number of
// leading superficial elements that act regularly, detected by a vanishing
// colon excess at the top of the window.
template <class F>
struct LocalDiagnosis {
    int dim = 0;
    int depth = 0;
    bool cm = false;
    bool certified = false; // false when the superficial search came up empty
    long long e0 = 0;
    long long cut_length = -1;
    std::vector<Polynomial<F>> cut;
    std::string note;
};

namespace detail {

// dim (m^{n+1} : l) - dim m^n at the top window degree; zero exactly when l
// has no torsion against it, i.e. acts regularly (window evidence)
template <class F>
long long colon_excess(const ArtinQuotient<F>& q, const Polynomial<F>& ell, int deg) {
    const auto& field = q.ring->field;
    auto L = multiplication_matrix(q, ell);
    auto target = power_span(q, deg + 1);
    auto colon = preimage_span(field, L, target);
    return static_cast<long long>(span_dim(field, colon, q.dim())) -
           static_cast<long long>(span_dim(field, power_span(q, deg), q.dim()));
}

} // namespace detail

template <class F>
LocalDiagnosis<F> diagnose_local(const RingPtr<F>& ring, const std::vector<Polynomial<F>>& gens,
                                 int trials, int window_lo, int window_hi,
                                 std::uint64_t seed) {
    LocalDiagnosis<F> out;
    auto cone = tangent_cone(ring, gens);
    out.dim = quotient_dimension(ring, cone);
    if (out.dim < 0) throw std::invalid_argument("diagnose_local: unit ideal");
    auto hd = local_hilbert(ring, gens);
    out.e0 = hd.e.empty() ? 0 : hd.e[0];

    if (out.dim == 0) {
        out.depth = 0;
        out.cm = true;
        out.certified = true;
        out.cut_length = static_cast<long long>(standard_monomials_all(ring, cone).size());
        return out;
    }

    auto seq = find_superficial_sequence(ring, gens, out.dim, trials, window_lo, window_hi,
                                         seed);
    if (!seq.complete) {
        out.note = "superficial search exhausted its trials";
        return out;
    }
    out.cut = seq.elems;

    std::vector<Polynomial<F>> cut_gens = gens;
    for (const auto& l : seq.elems) cut_gens.push_back(l);
    auto cut_cone = tangent_cone(ring, cut_gens);
    if (quotient_dimension(ring, cut_cone) != 0) {
        out.note = "superficial sequence failed to cut to dimension zero";
        return out;
    }
    out.cut_length = static_cast<long long>(standard_monomials_all(ring, cut_cone).size());
    out.certified = true;
    out.cm = (out.cut_length == out.e0);
    if (out.cm) {
        out.depth = out.dim;
        return out;
    }

    // count regular leading elements of the sequence; not CM means the count
    // must stop short of the dimension, so a full count is a window artifact
    std::vector<Polynomial<F>> prefix = gens;
    int regular = 0;
    for (int i = 0; i < out.dim; ++i) {
        auto q = build_artin_quotient(ring, prefix, window_hi + 2);
        if (detail::colon_excess(q, seq.elems[static_cast<std::size_t>(i)], window_hi) != 0)
            break;
        ++regular;
        prefix.push_back(seq.elems[static_cast<std::size_t>(i)]);
    }
    if (regular == out.dim) {
        regular = out.dim - 1;
        out.note = "colon excess saw no torsion inside the window; depth clamped";
    }
    out.depth = regular;
    return out;
}

} // namespace gradecone
