#pragma once

#include <cassert>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "gradecone/module_element.hpp"

namespace gradecone {

// degree_cap > 0 turns on truncated arithmetic: every term of shifted degree
// >= cap is treated as reducible to zero. That computes Groebner data for the
// submodule plus (maximal ideal)^cap * (free module), which is what the
// truncated quotient tower needs. Tracking and capping are mutually
// exclusive: dropped terms have no certificate.
struct GBOptions {
    int degree_cap = 0;
    bool track = false;
};

template <class F>
struct Division {
    ModElem<F> remainder;
    std::vector<Polynomial<F>> quotients; // parallel to the divisor list when requested
};

// Full normal form: every term of the remainder is irreducible against the
// divisor list. Reducer choice is the first list element whose leading term
// divides, so the result is deterministic for a fixed list; for a reduced
// Groebner basis it is the canonical normal form.
template <class F>
Division<F> divide(const ModElem<F>& f, const std::vector<ModElem<F>>& divisors,
                   const GBOptions& opts = {}, bool want_quotients = false) {
    const auto& mod = *f.module();
    Division<F> out;
    if (want_quotients)
        out.quotients.assign(divisors.size(), Polynomial<F>::zero(mod.ring));

    ModElem<F> work = opts.degree_cap > 0 ? f.truncated(opts.degree_cap) : f;
    std::vector<MTerm<F>> rem;
    while (!work.is_zero()) {
        const MTerm<F>& t = work.leading_term();
        bool reduced = false;
        for (std::size_t g = 0; g < divisors.size(); ++g) {
            if (divisors[g].is_zero()) continue;
            const MTerm<F>& lg = divisors[g].leading_term();
            if (lg.comp != t.comp || !lg.m.divides(t.m)) continue;
            Monomial u = lg.m.divide_into(t.m);
            auto c = t.c / lg.c;
            ModElem<F> sub = divisors[g].term_multiplied(c, u);
            if (opts.degree_cap > 0) sub = sub.truncated(opts.degree_cap);
            work = work - sub;
            if (want_quotients)
                out.quotients[g] = out.quotients[g] + Polynomial<F>::monomial(mod.ring, c, u);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.push_back(t);
            work = work - ModElem<F>(f.module(), {t});
        }
    }
    out.remainder = ModElem<F>(f.module(), std::move(rem));
    return out;
}

template <class F>
ModElem<F> normal_form(const ModElem<F>& f, const std::vector<ModElem<F>>& divisors,
                       const GBOptions& opts = {}) {
    return divide(f, divisors, opts, false).remainder;
}

template <class F>
struct GroebnerBasis {
    FreeModulePtr<F> mod;
    std::vector<ModElem<F>> elems;
    // when tracked: elems[i] == sum_j exprs[i][j] * gens[j]
    std::vector<std::vector<Polynomial<F>>> exprs;
    bool tracked = false;
    bool capped = false;
    int degree_cap = 0;
};

namespace detail {

struct PairKey {
    int degree;
    std::vector<int> lcm_exps;
    int i, j;
    bool operator<(const PairKey& o) const {
        if (degree != o.degree) return degree < o.degree;
        if (lcm_exps != o.lcm_exps) return lcm_exps < o.lcm_exps;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

} // namespace detail

// Buchberger with the normal selection strategy (minimal shifted lcm degree
// first) and both classical criteria. The coprime criterion is only sound for
// ideals, so it is gated on rank 1. Homogeneous input processed this way
// keeps every intermediate element homogeneous.
template <class F>
GroebnerBasis<F> buchberger(FreeModulePtr<F> mod, const std::vector<ModElem<F>>& gens,
                            const GBOptions& opts = {}) {
    if (opts.track && opts.degree_cap > 0)
        throw std::invalid_argument("buchberger: tracking is incompatible with a degree cap");
    const auto& ring = mod->ring;

    GroebnerBasis<F> gb;
    gb.mod = mod;
    gb.tracked = opts.track;
    gb.capped = opts.degree_cap > 0;
    gb.degree_cap = opts.degree_cap;

    auto add_elem = [&](ModElem<F> e, std::vector<Polynomial<F>> expr) {
        gb.elems.push_back(std::move(e));
        if (opts.track) gb.exprs.push_back(std::move(expr));
    };

    for (std::size_t i = 0; i < gens.size(); ++i) {
        ModElem<F> g = opts.degree_cap > 0 ? gens[i].truncated(opts.degree_cap) : gens[i];
        std::vector<Polynomial<F>> expr;
        if (opts.track) {
            expr.assign(gens.size(), Polynomial<F>::zero(ring));
            expr[i] = Polynomial<F>::constant(ring, ring->field.one());
        }
        if (!g.is_zero()) add_elem(std::move(g), std::move(expr));
    }

    std::set<detail::PairKey> pending;
    auto push_pairs_for = [&](std::size_t j) {
        const auto& lj = gb.elems[j].leading_term();
        for (std::size_t i = 0; i < j; ++i) {
            const auto& li = gb.elems[i].leading_term();
            if (li.comp != lj.comp) continue;
            Monomial l = li.m.lcm(lj.m);
            int deg = l.degree() + mod->degrees[static_cast<std::size_t>(li.comp)];
            pending.insert({deg, l.exps(), static_cast<int>(i), static_cast<int>(j)});
        }
    };
    for (std::size_t j = 0; j < gb.elems.size(); ++j) push_pairs_for(j);

    auto pair_pending = [&](int a, int b, const Monomial& lcm_ab, int comp) {
        if (a > b) std::swap(a, b);
        Monomial l = gb.elems[static_cast<std::size_t>(a)].leading_term().m.lcm(
            gb.elems[static_cast<std::size_t>(b)].leading_term().m);
        (void)lcm_ab;
        int deg = l.degree() + mod->degrees[static_cast<std::size_t>(comp)];
        return pending.count({deg, l.exps(), a, b}) > 0;
    };

    while (!pending.empty()) {
        detail::PairKey key = *pending.begin();
        pending.erase(pending.begin());
        const std::size_t i = static_cast<std::size_t>(key.i);
        const std::size_t j = static_cast<std::size_t>(key.j);
        const auto& gi = gb.elems[i];
        const auto& gj = gb.elems[j];
        const auto& li = gi.leading_term();
        const auto& lj = gj.leading_term();
        Monomial lcm = li.m.lcm(lj.m);

        if (mod->rank() == 1 && li.m.coprime(lj.m)) continue;

        bool chained = false;
        for (std::size_t k = 0; k < gb.elems.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            const auto& lk = gb.elems[k].leading_term();
            if (lk.comp != li.comp || !lk.m.divides(lcm)) continue;
            if (!pair_pending(static_cast<int>(i), static_cast<int>(k), lcm, li.comp) &&
                !pair_pending(static_cast<int>(j), static_cast<int>(k), lcm, li.comp))
                chained = true;
        }
        if (chained) continue;

        Monomial ui = li.m.divide_into(lcm);
        Monomial uj = lj.m.divide_into(lcm);
        ModElem<F> s = gi.term_multiplied(li.c.inv(), ui) - gj.term_multiplied(lj.c.inv(), uj);
        if (opts.degree_cap > 0) s = s.truncated(opts.degree_cap);
        auto div = divide(s, gb.elems, opts, opts.track);
        if (div.remainder.is_zero()) continue;

        std::vector<Polynomial<F>> expr;
        if (opts.track) {
            expr.assign(gens.size(), Polynomial<F>::zero(ring));
            auto pui = Polynomial<F>::monomial(ring, li.c.inv(), ui);
            auto puj = Polynomial<F>::monomial(ring, lj.c.inv(), uj);
            for (std::size_t a = 0; a < gens.size(); ++a) {
                expr[a] = pui * gb.exprs[i][a] - puj * gb.exprs[j][a];
                for (std::size_t l = 0; l < gb.elems.size(); ++l)
                    if (!div.quotients[l].is_zero())
                        expr[a] = expr[a] - div.quotients[l] * gb.exprs[l][a];
            }
        }
        add_elem(std::move(div.remainder), std::move(expr));
        push_pairs_for(gb.elems.size() - 1);
    }
    return gb;
}

// Inter-reduction to the reduced Groebner basis: minimal leading terms, fully
// tail-reduced, monic, sorted ascending by leading term. The result is the
// unique reduced basis for the submodule (with the cap block implicit when
// capped), so it is deterministic regardless of pair-processing history.
template <class F>
GroebnerBasis<F> reduce_basis(GroebnerBasis<F> gb) {
    const auto& mod = *gb.mod;

    std::vector<std::size_t> idx(gb.elems.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        int c = compare_mterms(mod, gb.elems[a].leading_term(), gb.elems[b].leading_term());
        if (c != 0) return c < 0;
        return a < b;
    });

    std::vector<ModElem<F>> kept;
    std::vector<std::vector<Polynomial<F>>> kept_exprs;
    for (std::size_t a : idx) {
        const auto& lt = gb.elems[a].leading_term();
        bool divisible = false;
        for (const auto& h : kept) {
            const auto& lh = h.leading_term();
            if (lh.comp == lt.comp && lh.m.divides(lt.m)) { divisible = true; break; }
        }
        if (divisible) continue;
        auto lc = lt.c;
        kept.push_back(gb.elems[a].scaled(lc.inv()));
        if (gb.tracked) {
            std::vector<Polynomial<F>> e = gb.exprs[a];
            auto inv = Polynomial<F>::constant(mod.ring, lc.inv());
            for (auto& p : e) p = inv * p;
            kept_exprs.push_back(std::move(e));
        }
    }

    GBOptions ropts;
    ropts.degree_cap = gb.degree_cap;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t a = 0; a < kept.size(); ++a) {
            std::vector<ModElem<F>> others;
            std::vector<std::size_t> omap;
            others.reserve(kept.size() - 1);
            for (std::size_t b = 0; b < kept.size(); ++b)
                if (b != a) { others.push_back(kept[b]); omap.push_back(b); }
            auto div = divide(kept[a], others, ropts, gb.tracked);
            if (div.remainder != kept[a]) {
                changed = true;
                if (gb.tracked) {
                    for (std::size_t l = 0; l < others.size(); ++l) {
                        if (div.quotients[l].is_zero()) continue;
                        for (std::size_t g = 0; g < kept_exprs[a].size(); ++g)
                            kept_exprs[a][g] =
                                kept_exprs[a][g] - div.quotients[l] * kept_exprs[omap[l]][g];
                    }
                }
                kept[a] = div.remainder;
            }
        }
    }

    gb.elems = std::move(kept);
    gb.exprs = std::move(kept_exprs);
    return gb;
}

template <class F>
GroebnerBasis<F> reduced_groebner_basis(FreeModulePtr<F> mod,
                                        const std::vector<ModElem<F>>& gens,
                                        const GBOptions& opts = {}) {
    return reduce_basis(buchberger(mod, gens, opts));
}

// Certificate check: every S-pair of the basis reduces to zero.
template <class F>
bool is_groebner_certificate(const GroebnerBasis<F>& gb) {
    GBOptions opts;
    opts.degree_cap = gb.degree_cap;
    for (std::size_t j = 0; j < gb.elems.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const auto& li = gb.elems[i].leading_term();
            const auto& lj = gb.elems[j].leading_term();
            if (li.comp != lj.comp) continue;
            Monomial lcm = li.m.lcm(lj.m);
            ModElem<F> s = gb.elems[i].term_multiplied(li.c.inv(), li.m.divide_into(lcm)) -
                           gb.elems[j].term_multiplied(lj.c.inv(), lj.m.divide_into(lcm));
            if (opts.degree_cap > 0) s = s.truncated(opts.degree_cap);
            if (!normal_form(s, gb.elems, opts).is_zero()) return false;
        }
    }
    return true;
}

// Schreyer-style syzygies of a Groebner basis: for every same-component pair,
// the recorded reduction of its S-vector to zero. The returned elements
// generate the full syzygy module of gb.elems. Basis element i of the new
// free module has degree = degree of gb.elems[i].
template <class F>
std::vector<ModElem<F>> schreyer_syzygies(const GroebnerBasis<F>& gb) {
    if (gb.capped)
        throw std::invalid_argument("schreyer_syzygies: capped bases carry no certificates");
    const auto& ring = gb.mod->ring;
    std::vector<int> degs;
    degs.reserve(gb.elems.size());
    for (const auto& e : gb.elems) degs.push_back(e.degree());
    auto syzmod = make_free_module(ring, degs);

    std::vector<ModElem<F>> out;
    for (std::size_t j = 0; j < gb.elems.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const auto& li = gb.elems[i].leading_term();
            const auto& lj = gb.elems[j].leading_term();
            if (li.comp != lj.comp) continue;
            Monomial lcm = li.m.lcm(lj.m);
            Monomial ui = li.m.divide_into(lcm);
            Monomial uj = lj.m.divide_into(lcm);
            ModElem<F> s = gb.elems[i].term_multiplied(li.c.inv(), ui) -
                           gb.elems[j].term_multiplied(lj.c.inv(), uj);
            auto div = divide(s, gb.elems, {}, true);
            if (!div.remainder.is_zero())
                throw std::logic_error("schreyer_syzygies: input is not a Groebner basis");
            std::vector<MTerm<F>> terms;
            terms.push_back({li.c.inv(), ui, static_cast<int>(i)});
            terms.push_back({-lj.c.inv(), uj, static_cast<int>(j)});
            for (std::size_t l = 0; l < gb.elems.size(); ++l)
                for (const auto& t : div.quotients[l].terms())
                    terms.push_back({-t.c, t.m, static_cast<int>(l)});
            ModElem<F> syz(syzmod, std::move(terms));
            if (!syz.is_zero()) out.push_back(std::move(syz));
        }
    }
    return out;
}

// Syzygies of an arbitrary generating list, via a tracked basis: combine the
// Schreyer syzygies through the transformation onto the generators, plus one
// trivial syzygy e_i - (division of gens[i] by the basis) per generator.
template <class F>
std::vector<ModElem<F>> syzygies_of_generators(FreeModulePtr<F> mod,
                                               const std::vector<ModElem<F>>& gens) {
    const auto& ring = mod->ring;
    std::vector<int> degs;
    degs.reserve(gens.size());
    for (const auto& g : gens)
        degs.push_back(g.is_zero() ? 0 : g.degree());
    auto genmod = make_free_module(ring, degs);

    GBOptions opts;
    opts.track = true;
    auto gb = reduce_basis(buchberger(mod, gens, opts));

    std::vector<ModElem<F>> out;
    auto emit = [&](std::vector<Polynomial<F>> coords) {
        std::vector<MTerm<F>> terms;
        for (std::size_t a = 0; a < coords.size(); ++a)
            for (const auto& t : coords[a].terms())
                terms.push_back({t.c, t.m, static_cast<int>(a)});
        ModElem<F> e(genmod, std::move(terms));
        if (!e.is_zero()) out.push_back(std::move(e));
    };

    for (const auto& s : schreyer_syzygies(gb)) {
        std::vector<Polynomial<F>> coords(gens.size(), Polynomial<F>::zero(ring));
        for (const auto& t : s.terms()) {
            auto mono = Polynomial<F>::monomial(ring, t.c, t.m);
            const auto& expr = gb.exprs[static_cast<std::size_t>(t.comp)];
            for (std::size_t a = 0; a < gens.size(); ++a)
                if (!expr[a].is_zero()) coords[a] = coords[a] + mono * expr[a];
        }
        emit(std::move(coords));
    }

    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) {
            std::vector<Polynomial<F>> coords(gens.size(), Polynomial<F>::zero(ring));
            coords[i] = Polynomial<F>::constant(ring, ring->field.one());
            emit(std::move(coords));
            continue;
        }
        auto div = divide(gens[i], gb.elems, {}, true);
        if (!div.remainder.is_zero())
            throw std::logic_error("syzygies_of_generators: generator escapes its own span");
        std::vector<Polynomial<F>> coords(gens.size(), Polynomial<F>::zero(ring));
        coords[i] = Polynomial<F>::constant(ring, ring->field.one());
        for (std::size_t l = 0; l < gb.elems.size(); ++l) {
            if (div.quotients[l].is_zero()) continue;
            for (std::size_t a = 0; a < gens.size(); ++a)
                if (!gb.exprs[l][a].is_zero())
                    coords[a] = coords[a] - div.quotients[l] * gb.exprs[l][a];
        }
        emit(std::move(coords));
    }
    return out;
}

// ---- ideal (rank one) conveniences ----

template <class F>
FreeModulePtr<F> rank_one_module(const RingPtr<F>& ring) {
    return make_free_module(ring, std::vector<int>{0});
}

template <class F>
std::vector<ModElem<F>> wrap_ideal(const FreeModulePtr<F>& mod,
                                   const std::vector<Polynomial<F>>& polys) {
    std::vector<ModElem<F>> out;
    out.reserve(polys.size());
    for (const auto& f : polys)
        if (!f.is_zero()) out.push_back(ModElem<F>::from_poly(mod, f, 0));
    return out;
}

// Reduced Groebner basis of an ideal, returned as polynomials sorted by
// ascending leading term.
template <class F>
std::vector<Polynomial<F>> groebner_ideal(const RingPtr<F>& ring,
                                          const std::vector<Polynomial<F>>& gens,
                                          const GBOptions& opts = {}) {
    auto mod = rank_one_module(ring);
    auto gb = reduce_basis(buchberger(mod, wrap_ideal(mod, gens), opts));
    std::vector<Polynomial<F>> out;
    out.reserve(gb.elems.size());
    for (const auto& e : gb.elems) out.push_back(e.component(0));
    return out;
}

template <class F>
Polynomial<F> normal_form_ideal(const Polynomial<F>& f, const std::vector<Polynomial<F>>& gb,
                                int degree_cap = 0) {
    auto mod = rank_one_module(f.ring());
    GBOptions opts;
    opts.degree_cap = degree_cap;
    return normal_form(ModElem<F>::from_poly(mod, f, 0), wrap_ideal(mod, gb), opts).component(0);
}

template <class F>
bool ideal_contains(const std::vector<Polynomial<F>>& gb, const Polynomial<F>& f) {
    return normal_form_ideal(f, gb).is_zero();
}

// Equality of ideals presented by reduced Groebner bases under the same order.
template <class F>
bool same_ideal(const std::vector<Polynomial<F>>& red_gb_a,
                const std::vector<Polynomial<F>>& red_gb_b) {
    if (red_gb_a.size() != red_gb_b.size()) return false;
    for (std::size_t i = 0; i < red_gb_a.size(); ++i)
        if (red_gb_a[i] != red_gb_b[i]) return false;
    return true;
}

} // namespace gradecone
