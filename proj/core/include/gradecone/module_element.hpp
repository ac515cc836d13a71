#pragma once

#include <memory>
#include <stdexcept>
#include <vector>

#include "gradecone/polynomial.hpp"

namespace gradecone {

// Graded free module R(-d_0) + ... + R(-d_{k-1}). degrees[i] is the degree of
// basis element e_i, so a term c*m*e_i is homogeneous of degree
// deg(m) + degrees[i].
template <class F>
struct FreeModule {
    RingPtr<F> ring;
    std::vector<int> degrees;

    std::size_t rank() const { return degrees.size(); }
    bool same_as(const FreeModule& o) const {
        return degrees == o.degrees &&
               (ring == o.ring || (ring && o.ring && ring->same_as(*o.ring)));
    }
};

template <class F>
using FreeModulePtr = std::shared_ptr<const FreeModule<F>>;

template <class F>
FreeModulePtr<F> make_free_module(RingPtr<F> ring, std::vector<int> degrees) {
    auto m = std::make_shared<FreeModule<F>>();
    m->ring = std::move(ring);
    m->degrees = std::move(degrees);
    return m;
}

template <class F>
struct MTerm {
    typename F::Elem c;
    Monomial m;
    int comp;

    int shifted_degree(const FreeModule<F>& mod) const {
        return m.degree() + mod.degrees[static_cast<std::size_t>(comp)];
    }
};

// Term-over-position order refined by shift-aware degree: under a graded ring
// order, higher shifted degree wins first, then the ring order on monomials,
// then the lower component index. Under lex the degree prefix is dropped.
// Multiplicative and global in either case.
template <class F>
int compare_mterms(const FreeModule<F>& mod, const MTerm<F>& a, const MTerm<F>& b) {
    const MonomialOrder& ord = mod.ring->order;
    if (is_graded(ord.kind)) {
        int da = a.shifted_degree(mod), db = b.shifted_degree(mod);
        if (da != db) return da > db ? 1 : -1;
    }
    int c = ord.compare(a.m, b.m);
    if (c != 0) return c;
    if (a.comp != b.comp) return a.comp < b.comp ? 1 : -1;
    return 0;
}

// Element of a free module, stored as a flat term list sorted strictly
// descending in the module order.
template <class F>
class ModElem {
public:
    using Elem = typename F::Elem;

    ModElem() = default;
    explicit ModElem(FreeModulePtr<F> mod) : mod_(std::move(mod)) {}
    ModElem(FreeModulePtr<F> mod, std::vector<MTerm<F>> terms)
        : mod_(std::move(mod)), terms_(std::move(terms)) {
        normalize();
    }

    static ModElem zero(FreeModulePtr<F> mod) { return ModElem(std::move(mod)); }

    // f * e_comp
    static ModElem from_poly(FreeModulePtr<F> mod, const Polynomial<F>& f, int comp) {
        ModElem r(mod);
        r.terms_.reserve(f.terms().size());
        for (const auto& t : f.terms()) r.terms_.push_back({t.c, t.m, comp});
        r.normalize();
        return r;
    }

    static ModElem basis_vector(FreeModulePtr<F> mod, int comp) {
        ModElem r(mod);
        r.terms_.push_back({mod->ring->field.one(), Monomial(mod->ring->nvars()), comp});
        return r;
    }

    const FreeModulePtr<F>& module() const { return mod_; }
    const std::vector<MTerm<F>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    const MTerm<F>& leading_term() const {
        if (terms_.empty()) throw std::domain_error("ModElem: leading term of zero");
        return terms_.front();
    }

    // shifted degree of the leading term; for homogeneous elements this is the
    // degree of the element
    int degree() const { return leading_term().shifted_degree(*mod_); }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        int d = terms_.front().shifted_degree(*mod_);
        for (const auto& t : terms_)
            if (t.shifted_degree(*mod_) != d) return false;
        return true;
    }

    Polynomial<F> component(int comp) const {
        std::vector<Term<F>> ts;
        for (const auto& t : terms_)
            if (t.comp == comp) ts.push_back({t.c, t.m});
        return Polynomial<F>(mod_->ring, std::move(ts));
    }

    std::vector<Polynomial<F>> components() const {
        std::vector<Polynomial<F>> out;
        out.reserve(mod_->rank());
        for (std::size_t i = 0; i < mod_->rank(); ++i)
            out.push_back(component(static_cast<int>(i)));
        return out;
    }

    // terms as "c*m*e<comp>" joined with signs, mirroring Polynomial::str
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            Polynomial<F> p(mod_->ring, {Term<F>{terms_[i].c, terms_[i].m}});
            std::string piece = p.str();
            bool neg = false;
            if (piece.size() > 1 && piece[0] == '-') {
                neg = true;
                piece = piece.substr(1);
            }
            if (piece == "1")
                piece = "e" + std::to_string(terms_[i].comp);
            else
                piece += "*e" + std::to_string(terms_[i].comp);
            if (i == 0)
                out += neg ? "-" + piece : piece;
            else
                out += (neg ? " - " : " + ") + piece;
        }
        return out;
    }

    ModElem operator+(const ModElem& o) const { return merged(o, false); }
    ModElem operator-(const ModElem& o) const { return merged(o, true); }
    ModElem operator-() const {
        ModElem r(*this);
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    ModElem scaled(const Elem& c) const {
        if (c.is_zero()) return zero(mod_);
        ModElem r(*this);
        for (auto& t : r.terms_) t.c = t.c * c;
        return r;
    }

    ModElem term_multiplied(const Elem& c, const Monomial& m) const {
        if (c.is_zero()) return zero(mod_);
        ModElem r(*this);
        for (auto& t : r.terms_) {
            t.c = t.c * c;
            t.m = t.m * m;
        }
        return r;
    }

    ModElem poly_multiplied(const Polynomial<F>& f) const {
        ModElem acc = zero(mod_);
        for (const auto& t : f.terms())
            acc = acc + term_multiplied(t.c, t.m);
        return acc;
    }

    ModElem monic() const {
        if (is_zero()) return *this;
        return scaled(leading_term().c.inv());
    }

    // drop terms of shifted degree >= cap
    ModElem truncated(int cap) const {
        ModElem r(mod_);
        for (const auto& t : terms_)
            if (t.shifted_degree(*mod_) < cap) r.terms_.push_back(t);
        return r;
    }

    bool operator==(const ModElem& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].c == o.terms_[i].c) || terms_[i].m != o.terms_[i].m ||
                terms_[i].comp != o.terms_[i].comp)
                return false;
        return true;
    }
    bool operator!=(const ModElem& o) const { return !(*this == o); }

private:
    void normalize() {
        auto gt = [this](const MTerm<F>& a, const MTerm<F>& b) {
            return compare_mterms(*mod_, a, b) > 0;
        };
        std::stable_sort(terms_.begin(), terms_.end(), gt);
        std::vector<MTerm<F>> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().m == t.m && out.back().comp == t.comp) {
                out.back().c = out.back().c + t.c;
                if (out.back().c.is_zero()) out.pop_back();
            } else if (!t.c.is_zero()) {
                out.push_back(std::move(t));
            }
        }
        terms_ = std::move(out);
    }

    ModElem merged(const ModElem& o, bool subtract) const {
        ModElem r(mod_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = compare_mterms(*mod_, terms_[i], o.terms_[j]);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(o.terms_[j]);
                if (subtract) r.terms_.back().c = -r.terms_.back().c;
                ++j;
            } else {
                Elem s = subtract ? terms_[i].c - o.terms_[j].c : terms_[i].c + o.terms_[j].c;
                if (!s.is_zero()) r.terms_.push_back({s, terms_[i].m, terms_[i].comp});
                ++i; ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) {
            r.terms_.push_back(o.terms_[j]);
            if (subtract) r.terms_.back().c = -r.terms_.back().c;
        }
        return r;
    }

    FreeModulePtr<F> mod_;
    std::vector<MTerm<F>> terms_;
};

} // namespace gradecone
