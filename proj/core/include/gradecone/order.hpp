#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "gradecone/monomial.hpp"

namespace gradecone {

// Global monomial orders. All are total, multiplicative, and have 1 as the
// minimum, so Buchberger-style division terminates.
//
// HomogTHeavy is the dehomogenization-compatible order used for tangent
// cones: total degree first, then a higher exponent of the homogenizing
// variable (always the last one) wins, then grevlex on the remaining
// variables. For a homogeneous polynomial its leading term therefore sits in
// the component with the largest t-power, i.e. the lowest-order part of the
// dehomogenization.
enum class OrderKind { Lex, GrLex, GrevLex, HomogTHeavy };

inline bool is_graded(OrderKind k) { return k != OrderKind::Lex; }

namespace detail {

// lex on a range of exponents: first nonzero difference decides
inline int cmp_lex(const Monomial& a, const Monomial& b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) > b.exp(i) ? 1 : -1;
    }
    return 0;
}

// grevlex tie-break on a range (degrees assumed equal): the *last* variable in
// which the exponents differ decides, and the smaller exponent there wins
inline int cmp_revlex_tail(const Monomial& a, const Monomial& b, std::size_t n) {
    for (std::size_t i = n; i-- > 0;) {
        if (a.exp(i) != b.exp(i)) return a.exp(i) < b.exp(i) ? 1 : -1;
    }
    return 0;
}

} // namespace detail

struct MonomialOrder {
    OrderKind kind = OrderKind::GrevLex;

    // returns +1 if a > b, 0 if equal, -1 if a < b
    int compare(const Monomial& a, const Monomial& b) const {
        const std::size_t n = a.nvars();
        switch (kind) {
        case OrderKind::Lex:
            return detail::cmp_lex(a, b, n);
        case OrderKind::GrLex:
            if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
            return detail::cmp_lex(a, b, n);
        case OrderKind::GrevLex:
            if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
            return detail::cmp_revlex_tail(a, b, n);
        case OrderKind::HomogTHeavy: {
            if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
            const std::size_t t = n - 1;
            if (a.exp(t) != b.exp(t)) return a.exp(t) > b.exp(t) ? 1 : -1;
            return detail::cmp_revlex_tail(a, b, t);
        }
        }
        throw std::logic_error("MonomialOrder: unknown kind");
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string name() const {
        switch (kind) {
        case OrderKind::Lex: return "lex";
        case OrderKind::GrLex: return "grlex";
        case OrderKind::GrevLex: return "grevlex";
        case OrderKind::HomogTHeavy: return "homog-t-heavy";
        }
        return "?";
    }
};

inline OrderKind order_kind_from_name(const std::string& s) {
    if (s == "lex") return OrderKind::Lex;
    if (s == "grlex") return OrderKind::GrLex;
    if (s == "grevlex") return OrderKind::GrevLex;
    if (s == "homog-t-heavy") return OrderKind::HomogTHeavy;
    throw std::invalid_argument("unknown monomial order: " + s);
}

} // namespace gradecone
