#pragma once

#include <algorithm>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradecone/fields.hpp"
#include "gradecone/monomial.hpp"
#include "gradecone/order.hpp"

namespace gradecone {

// Ring context: coefficient field, named variables, active monomial order.
// Shared immutably by every polynomial built over it; operations between
// polynomials require structurally equal rings.
template <class F>
struct Ring {
    F field;
    std::vector<std::string> vars;
    MonomialOrder order;

    std::size_t nvars() const { return vars.size(); }

    bool same_as(const Ring& o) const {
        return field == o.field && vars == o.vars && order.kind == o.order.kind;
    }

    // same variables under a different order
    std::shared_ptr<const Ring> with_order(OrderKind k) const {
        auto r = std::make_shared<Ring>(*this);
        r->order.kind = k;
        return r;
    }

    // appends a homogenizing variable (last position)
    std::shared_ptr<const Ring> with_appended_var(const std::string& name, OrderKind k) const {
        auto r = std::make_shared<Ring>(*this);
        r->vars.push_back(name);
        r->order.kind = k;
        return r;
    }

    // drops the last variable
    std::shared_ptr<const Ring> without_last_var(OrderKind k) const {
        auto r = std::make_shared<Ring>(*this);
        r->vars.pop_back();
        r->order.kind = k;
        return r;
    }
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> vars, OrderKind kind = OrderKind::GrevLex) {
    auto r = std::make_shared<Ring<F>>();
    r->field = field;
    r->vars = std::move(vars);
    r->order.kind = kind;
    return r;
}

template <class F>
struct Term {
    typename F::Elem c;
    Monomial m;
};

// Sparse polynomial: nonzero terms, strictly descending in the ring's order.
template <class F>
class Polynomial {
public:
    using Elem = typename F::Elem;

    Polynomial() = default;
    explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}
    Polynomial(RingPtr<F> ring, std::vector<Term<F>> terms)
        : ring_(std::move(ring)), terms_(std::move(terms)) {
        normalize();
    }

    static Polynomial zero(RingPtr<F> ring) { return Polynomial(std::move(ring)); }
    static Polynomial constant(RingPtr<F> ring, Elem c) {
        Polynomial f(ring);
        if (!c.is_zero()) f.terms_.push_back({c, Monomial(ring->nvars())});
        return f;
    }
    static Polynomial monomial(RingPtr<F> ring, Elem c, Monomial m) {
        Polynomial f(ring);
        if (!c.is_zero()) f.terms_.push_back({c, std::move(m)});
        return f;
    }
    static Polynomial variable(RingPtr<F> ring, std::size_t i) {
        auto n = ring->nvars();
        return monomial(ring, ring->field.one(), Monomial::var(i, n));
    }

    const RingPtr<F>& ring() const { return ring_; }
    const std::vector<Term<F>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Term<F>& leading_term() const {
        if (terms_.empty()) throw std::domain_error("Polynomial: leading term of zero");
        return terms_.front();
    }
    const Monomial& leading_monomial() const { return leading_term().m; }
    const Elem& leading_coeff() const { return leading_term().c; }

    // max total degree over terms
    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.m.degree());
        return d;
    }
    // min total degree over terms (the "order" of the power series)
    int ord() const {
        if (terms_.empty()) return -1;
        int d = terms_.front().m.degree();
        for (const auto& t : terms_) d = std::min(d, t.m.degree());
        return d;
    }
    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.m.degree() != terms_.front().m.degree()) return false;
        return true;
    }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.front().m.is_one());
    }
    Elem constant_term() const {
        for (const auto& t : terms_)
            if (t.m.is_one()) return t.c;
        return ring_->field.zero();
    }

    Polynomial operator+(const Polynomial& o) const {
        require_same_ring(o);
        Polynomial r(ring_);
        r.terms_ = merge_terms(terms_, o.terms_, false);
        return r;
    }
    Polynomial operator-(const Polynomial& o) const {
        require_same_ring(o);
        Polynomial r(ring_);
        r.terms_ = merge_terms(terms_, o.terms_, true);
        return r;
    }
    Polynomial operator-() const {
        Polynomial r(*this);
        for (auto& t : r.terms_) t.c = -t.c;
        return r;
    }

    Polynomial scaled(const Elem& c) const {
        if (c.is_zero()) return zero(ring_);
        Polynomial r(*this);
        for (auto& t : r.terms_) t.c = t.c * c;
        return r;
    }

    // multiply by a single term; preserves term ordering, no re-sort needed
    Polynomial term_multiplied(const Elem& c, const Monomial& m) const {
        if (c.is_zero()) return zero(ring_);
        Polynomial r(*this);
        for (auto& t : r.terms_) {
            t.c = t.c * c;
            t.m = t.m * m;
        }
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        require_same_ring(o);
        Polynomial acc = zero(ring_);
        for (const auto& t : o.terms_)
            acc = acc + term_multiplied(t.c, t.m);
        return acc;
    }

    bool operator==(const Polynomial& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].c == o.terms_[i].c) || terms_[i].m != o.terms_[i].m) return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return scaled(leading_coeff().inv());
    }

    // sum of the lowest-degree terms
    Polynomial initial_form() const {
        if (is_zero()) return *this;
        int o = ord();
        Polynomial r(ring_);
        for (const auto& t : terms_)
            if (t.m.degree() == o) r.terms_.push_back(t);
        return r;
    }

    // homogeneous component of the given degree
    Polynomial component(int d) const {
        Polynomial r(ring_);
        for (const auto& t : terms_)
            if (t.m.degree() == d) r.terms_.push_back(t);
        return r;
    }

    // drop every term of total degree >= cap (reduction modulo the degree-cap
    // power of the maximal ideal; used by truncated quotients)
    Polynomial truncated(int cap) const {
        Polynomial r(ring_);
        for (const auto& t : terms_)
            if (t.m.degree() < cap) r.terms_.push_back(t);
        return r;
    }

    // re-sort into another ring over the same variables (order change)
    Polynomial converted(RingPtr<F> target) const {
        if (target->nvars() != ring_->nvars())
            throw std::invalid_argument("Polynomial: convert across different variable counts");
        Polynomial r(target, terms_);
        return r;
    }

    // multiply each term by t^(deg f - deg term), t = appended last variable of
    // the target ring; result is homogeneous of degree deg f
    Polynomial homogenized(RingPtr<F> target) const {
        if (target->nvars() != ring_->nvars() + 1)
            throw std::invalid_argument("Polynomial: homogenize needs one extra variable");
        int d = degree();
        std::vector<Term<F>> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_)
            ts.push_back({t.c, t.m.with_appended_var(d - t.m.degree())});
        return Polynomial(target, std::move(ts));
    }

    // set the last variable to 1 and drop it
    Polynomial dehomogenized(RingPtr<F> target) const {
        if (target->nvars() + 1 != ring_->nvars())
            throw std::invalid_argument("Polynomial: dehomogenize drops exactly one variable");
        std::vector<Term<F>> ts;
        ts.reserve(terms_.size());
        const std::size_t t_idx = ring_->nvars() - 1;
        for (const auto& t : terms_)
            ts.push_back({t.c, t.m.without_var(t_idx)});
        return Polynomial(target, std::move(ts));
    }

    // largest power of the last variable dividing every term, stripped off
    Polynomial last_var_power_stripped() const {
        if (is_zero()) return *this;
        const std::size_t t_idx = ring_->nvars() - 1;
        int k = terms_.front().m.exp(t_idx);
        for (const auto& t : terms_) k = std::min(k, t.m.exp(t_idx));
        if (k == 0) return *this;
        std::vector<int> div(ring_->nvars(), 0);
        div[t_idx] = k;
        Monomial q{div};
        Polynomial r(*this);
        for (auto& t : r.terms_) t.m = q.divide_into(t.m);
        return r;
    }

    std::string str() const;

private:
    void require_same_ring(const Polynomial& o) const {
        if (ring_ == o.ring_) return;
        if (!ring_ || !o.ring_ || !ring_->same_as(*o.ring_))
            throw std::invalid_argument("Polynomial: mixed rings");
    }

    void normalize() {
        auto gt = [this](const Term<F>& a, const Term<F>& b) {
            return ring_->order.greater(a.m, b.m);
        };
        std::stable_sort(terms_.begin(), terms_.end(), gt);
        std::vector<Term<F>> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().m == t.m) {
                out.back().c = out.back().c + t.c;
                if (out.back().c.is_zero()) out.pop_back();
            } else if (!t.c.is_zero()) {
                out.push_back(std::move(t));
            }
        }
        terms_ = std::move(out);
    }

    // merge two descending term lists; subtract = use -c for the second
    std::vector<Term<F>> merge_terms(const std::vector<Term<F>>& a,
                                     const std::vector<Term<F>>& b, bool subtract) const {
        std::vector<Term<F>> out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            int c = ring_->order.compare(a[i].m, b[j].m);
            if (c > 0) {
                out.push_back(a[i++]);
            } else if (c < 0) {
                out.push_back(b[j]);
                if (subtract) out.back().c = -out.back().c;
                ++j;
            } else {
                Elem s = subtract ? a[i].c - b[j].c : a[i].c + b[j].c;
                if (!s.is_zero()) out.push_back({s, a[i].m});
                ++i; ++j;
            }
        }
        for (; i < a.size(); ++i) out.push_back(a[i]);
        for (; j < b.size(); ++j) {
            out.push_back(b[j]);
            if (subtract) out.back().c = -out.back().c;
        }
        return out;
    }

    RingPtr<F> ring_;
    std::vector<Term<F>> terms_;
};

namespace detail {

template <class F>
std::string monomial_str(const Ring<F>& ring, const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.nvars(); ++i) {
        if (m.exp(i) == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.vars[i];
        if (m.exp(i) > 1) s += "^" + std::to_string(m.exp(i));
    }
    return s;
}

} // namespace detail

// Canonical text form; parse(str()) returns the same polynomial.
template <class F>
std::string Polynomial<F>::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& t : terms_) {
        std::string cs = t.c.str();
        std::string ms = detail::monomial_str(*ring_, t.m);
        std::string body;
        if (ms.empty()) {
            body = cs;
        } else if (t.c.is_one()) {
            body = ms;
        } else if (cs == "-1") {
            body = "-" + ms;
        } else {
            body = cs + "*" + ms;
        }
        if (out.empty()) {
            out = body;
        } else if (body.front() == '-') {
            out += " - " + body.substr(1);
        } else {
            out += " + " + body;
        }
    }
    return out;
}

} // namespace gradecone
