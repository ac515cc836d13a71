#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gradecone {

// Dense exponent vector with cached total degree. Exponents are non-negative;
// the vector length is the ring's variable count and never changes.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0), deg_(0) {}
    explicit Monomial(std::vector<int> exps) : e_(std::move(exps)) {
        for (int x : e_)
            if (x < 0) throw std::invalid_argument("Monomial: negative exponent");
        deg_ = std::accumulate(e_.begin(), e_.end(), 0);
    }

    static Monomial var(std::size_t i, std::size_t nvars) {
        Monomial m(nvars);
        m.e_[i] = 1;
        m.deg_ = 1;
        return m;
    }

    std::size_t nvars() const { return e_.size(); }
    int degree() const { return deg_; }
    int exp(std::size_t i) const { return e_[i]; }
    const std::vector<int>& exps() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
        r.deg_ = deg_ + o.deg_;
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > o.e_[i]) return false;
        return true;
    }

    // quotient o / *this; caller must ensure divisibility
    Monomial divide_into(const Monomial& o) const {
        Monomial r(o);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] -= e_[i];
            if (r.e_[i] < 0) throw std::domain_error("Monomial: non-divisible quotient");
        }
        r.deg_ = o.deg_ - deg_;
        return r;
    }

    Monomial lcm(const Monomial& o) const {
        Monomial r(*this);
        r.deg_ = 0;
        for (std::size_t i = 0; i < e_.size(); ++i) {
            r.e_[i] = std::max(e_[i], o.e_[i]);
            r.deg_ += r.e_[i];
        }
        return r;
    }

    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] > 0 && o.e_[i] > 0) return false;
        return true;
    }

    // drop variable i (used when dehomogenizing); exponent at i is discarded
    Monomial without_var(std::size_t i) const {
        Monomial r;
        r.e_.reserve(e_.size() - 1);
        for (std::size_t j = 0; j < e_.size(); ++j)
            if (j != i) r.e_.push_back(e_[j]);
        r.deg_ = deg_ - e_[i];
        return r;
    }

    // append a variable with the given exponent (used when homogenizing)
    Monomial with_appended_var(int exp) const {
        Monomial r(*this);
        r.e_.push_back(exp);
        r.deg_ += exp;
        return r;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

private:
    std::vector<int> e_;
    int deg_ = 0;
};

// Monomials of the given total degree, ascending in lexicographic exponent
// order. Stable enumeration shared by graded-piece and counting code.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    if (nvars == 0) {
        if (degree == 0) out.emplace_back(std::vector<int>{});
        return out;
    }
    std::vector<int> exps(nvars, 0);
    auto rec = [&](auto&& self, std::size_t i, int rem) -> void {
        if (i + 1 == nvars) {
            exps[i] = rem;
            out.emplace_back(exps);
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            exps[i] = e;
            self(self, i + 1, rem - e);
        }
    };
    rec(rec, 0, degree);
    return out;
}

} // namespace gradecone
