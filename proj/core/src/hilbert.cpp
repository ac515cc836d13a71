#include "gradecone/hilbert.hpp"

#include <stdexcept>

namespace gradecone {

long long IntPoly::eval_at_one() const {
    long long s = 0;
    for (long long x : c) s += x;
    return s;
}

void IntPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

std::string IntPoly::str() const {
    if (c.empty()) return "0";
    std::string out;
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        long long a = c[k];
        std::string mag;
        long long abs_a = a < 0 ? -a : a;
        if (k == 0)
            mag = std::to_string(abs_a);
        else {
            std::string zpow = k == 1 ? "z" : "z^" + std::to_string(k);
            mag = abs_a == 1 ? zpow : std::to_string(abs_a) + "*" + zpow;
        }
        if (out.empty())
            out = (a < 0 ? "-" : "") + mag;
        else
            out += (a < 0 ? " - " : " + ") + mag;
    }
    return out.empty() ? "0" : out;
}

HilbertData hilbert_series(const BettiTable& bt, int nvars) {
    HilbertData hd;
    hd.mu = min_generators(bt);

    for (const auto& [key, v] : bt.beta) {
        auto [i, j] = key;
        if (j < 0) throw std::invalid_argument("hilbert_series: negative shift");
        if (static_cast<std::size_t>(j) >= hd.numerator.c.size())
            hd.numerator.c.resize(static_cast<std::size_t>(j) + 1, 0);
        hd.numerator.c[static_cast<std::size_t>(j)] += (i % 2 == 0 ? v : -v);
    }
    hd.numerator.trim();
    if (hd.numerator.is_zero())
        throw std::invalid_argument("hilbert_series: zero numerator, module is trivial");

    // divide by (1-z) while the value at 1 stays zero; each division drops
    // one from the codimension count
    IntPoly h = hd.numerator;
    int divisions = 0;
    while (h.eval_at_one() == 0) {
        // q(z) = h(z)/(1-z): q_k = sum_{j<=k} h_j, with the top cancelling
        std::vector<long long> q(h.c.size() - 1, 0);
        long long run = 0;
        for (std::size_t k = 0; k + 1 < h.c.size(); ++k) {
            run += h.c[k];
            q[k] = run;
        }
        h.c = std::move(q);
        h.trim();
        ++divisions;
        if (divisions > nvars)
            throw std::logic_error("hilbert_series: more divisions than variables");
    }
    hd.h_poly = h;
    hd.dim = nvars - divisions;

    // e_i = h^(i)(1)/i! = sum_k h_k * C(k, i)
    int t = h.degree();
    for (int i = 0; i <= t; ++i) {
        long long s = 0;
        for (int k = i; k <= t; ++k) {
            long long binom = 1;
            for (int a = 0; a < i; ++a) binom = binom * (k - a) / (a + 1);
            s += h.coeff(k) * binom;
        }
        hd.e.push_back(s);
    }
    return hd;
}

std::vector<long long> hilbert_function(const HilbertData& hd, int upto) {
    std::vector<long long> v(static_cast<std::size_t>(upto) + 1, 0);
    for (int k = 0; k <= upto; ++k) v[static_cast<std::size_t>(k)] = hd.h_poly.coeff(k);
    for (int r = 0; r < hd.dim; ++r)
        for (std::size_t k = 1; k < v.size(); ++k) v[k] += v[k - 1];
    return v;
}

namespace {

void count_free(std::size_t nvars, const std::vector<Monomial>& gens, std::vector<int>& exps,
                std::size_t i, int deg, std::vector<long long>& counts) {
    if (i == nvars) {
        Monomial m(exps);
        for (const auto& g : gens)
            if (g.divides(m)) return;
        ++counts[static_cast<std::size_t>(deg)];
        return;
    }
    int room = static_cast<int>(counts.size()) - 1 - deg;
    for (int e = 0; e <= room; ++e) {
        exps[i] = e;
        count_free(nvars, gens, exps, i + 1, deg + e, counts);
    }
    exps[i] = 0;
}

} // namespace

std::vector<long long> standard_monomial_hilbert(std::size_t nvars,
                                                 const std::vector<Monomial>& gens,
                                                 int up_to_degree) {
    if (up_to_degree < 0) throw std::invalid_argument("standard_monomial_hilbert: bad bound");
    std::vector<long long> counts(static_cast<std::size_t>(up_to_degree) + 1, 0);
    std::vector<int> exps(nvars, 0);
    count_free(nvars, gens, exps, 0, 0, counts);
    return counts;
}

} // namespace gradecone
