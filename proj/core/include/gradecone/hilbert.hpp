#pragma once

#include <vector>

#include "gradecone/betti.hpp"
#include "gradecone/monomial.hpp"

namespace gradecone {

// Dense integer polynomial in one variable z, used for Hilbert numerators
// and h-polynomials. Trailing zeros are trimmed; zero is the empty vector.
struct IntPoly {
    std::vector<long long> c;

    static IntPoly zero() { return {}; }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    long long coeff(int k) const {
        return k >= 0 && k < static_cast<int>(c.size()) ? c[static_cast<std::size_t>(k)] : 0;
    }
    long long eval_at_one() const;
    void trim();
    std::string str() const; // e.g. "1 + 2*z - z^3"
};

struct HilbertData {
    IntPoly numerator; // sum_i (-1)^i sum_j beta_{i,j} z^j
    IntPoly h_poly;    // numerator / (1-z)^{n-dim}
    int dim = 0;       // Krull dimension
    std::vector<long long> e; // Hilbert coefficients e_0..e_t
    long long mu = 0;  // minimal generator count
};

// Numerator from the Betti table, then exact division by (1-z) as often as
// it divides. dim = n - (number of divisions), e_i = h^(i)(1)/i!.
HilbertData hilbert_series(const BettiTable& bt, int nvars);

// Hilbert function values H(0..upto) by expanding h(z)/(1-z)^dim.
std::vector<long long> hilbert_function(const HilbertData& hd, int upto);

// Independent oracle: per degree d <= up_to_degree, the number of monomials
// in nvars variables divisible by no generator. Counts by direct
// enumeration, no resolutions involved.
std::vector<long long> standard_monomial_hilbert(std::size_t nvars,
                                                 const std::vector<Monomial>& gens,
                                                 int up_to_degree);

} // namespace gradecone
