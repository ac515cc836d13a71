#pragma once

#include <cassert>
#include <vector>

namespace gradecone {

// Dense matrices over an exact field, row major. Everything here is plain
// Gaussian elimination with the first nonzero pivot in column order, which
// keeps results deterministic.
template <class F>
struct Matrix {
    using Elem = typename F::Elem;
    std::size_t rows = 0, cols = 0;
    std::vector<Elem> data;

    Matrix() = default;
    Matrix(const F& field, std::size_t r, std::size_t c)
        : rows(r), cols(c), data(r * c, field.zero()) {}

    Elem& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const Elem& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

template <class F>
Matrix<F> rref(const F& field, Matrix<F> m, std::vector<std::size_t>* pivot_cols = nullptr) {
    std::size_t lead = 0;
    for (std::size_t col = 0; col < m.cols && lead < m.rows; ++col) {
        std::size_t piv = lead;
        while (piv < m.rows && m.at(piv, col) == field.zero()) ++piv;
        if (piv == m.rows) continue;
        for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(lead, c), m.at(piv, c));
        auto inv = m.at(lead, col).inv();
        for (std::size_t c = col; c < m.cols; ++c) m.at(lead, c) = m.at(lead, c) * inv;
        for (std::size_t r = 0; r < m.rows; ++r) {
            if (r == lead || m.at(r, col) == field.zero()) continue;
            auto factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols; ++c)
                m.at(r, c) = m.at(r, c) - factor * m.at(lead, c);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++lead;
    }
    return m;
}

template <class F>
std::size_t rank(const F& field, const Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    rref(field, m, &pivots);
    return pivots.size();
}

// Basis of the right kernel, one column vector per free column.
template <class F>
std::vector<std::vector<typename F::Elem>> kernel_basis(const F& field, const Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    Matrix<F> r = rref(field, m, &pivots);
    std::vector<bool> is_pivot(m.cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<typename F::Elem>> out;
    for (std::size_t free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<typename F::Elem> v(m.cols, field.zero());
        v[free_col] = field.one();
        for (std::size_t p = 0; p < pivots.size(); ++p)
            v[pivots[p]] = -r.at(p, free_col);
        out.push_back(std::move(v));
    }
    return out;
}

template <class F>
std::vector<typename F::Elem> apply(const F& field, const Matrix<F>& m,
                                    const std::vector<typename F::Elem>& v) {
    assert(v.size() == m.cols);
    std::vector<typename F::Elem> out(m.rows, field.zero());
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c)
            if (!(m.at(r, c) == field.zero()) && !(v[c] == field.zero()))
                out[r] = out[r] + m.at(r, c) * v[c];
    return out;
}

template <class F>
Matrix<F> matmul(const F& field, const Matrix<F>& a, const Matrix<F>& b) {
    assert(a.cols == b.rows);
    Matrix<F> out(field, a.rows, b.cols);
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(r, k) == field.zero()) continue;
            for (std::size_t c = 0; c < b.cols; ++c)
                out.at(r, c) = out.at(r, c) + a.at(r, k) * b.at(k, c);
        }
    return out;
}

// Restriction of the map m : V -> W to a subspace of V spanned by the given
// coordinate vectors, expressed in that spanning set's own coordinates on the
// target span. Used to induce operators on subquotients.
template <class F>
bool solve_in_span(const F& field, const std::vector<std::vector<typename F::Elem>>& span,
                   const std::vector<typename F::Elem>& target,
                   std::vector<typename F::Elem>* coords) {
    std::size_t dim = target.size();
    Matrix<F> aug(field, dim, span.size() + 1);
    for (std::size_t j = 0; j < span.size(); ++j) {
        assert(span[j].size() == dim);
        for (std::size_t i = 0; i < dim; ++i) aug.at(i, j) = span[j][i];
    }
    for (std::size_t i = 0; i < dim; ++i) aug.at(i, span.size()) = target[i];

    std::vector<std::size_t> pivots;
    Matrix<F> r = rref(field, aug, &pivots);
    for (auto c : pivots)
        if (c == span.size()) return false;
    if (coords) {
        coords->assign(span.size(), field.zero());
        for (std::size_t p = 0; p < pivots.size(); ++p)
            (*coords)[pivots[p]] = r.at(p, span.size());
    }
    return true;
}

} // namespace gradecone
