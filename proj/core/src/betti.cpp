#include "gradecone/betti.hpp"

#include <algorithm>
#include <stdexcept>

namespace gradecone {

long long BettiTable::at(int i, int j) const {
    auto it = beta.find({i, j});
    return it == beta.end() ? 0 : it->second;
}

long long BettiTable::total(int i) const {
    long long t = 0;
    for (const auto& [key, v] : beta)
        if (key.first == i) t += v;
    return t;
}

std::vector<long long> BettiTable::totals() const {
    std::vector<long long> t(static_cast<std::size_t>(p) + 1, 0);
    for (const auto& [key, v] : beta) t[static_cast<std::size_t>(key.first)] += v;
    return t;
}

BettiTable betti_from_shifts(const std::vector<std::vector<int>>& shifts) {
    if (shifts.empty() || shifts[0].empty())
        throw std::invalid_argument("betti_from_shifts: no generators in step 0");
    std::vector<std::vector<int>> steps = shifts;
    while (!steps.empty() && steps.back().empty()) steps.pop_back();

    BettiTable bt;
    bt.p = static_cast<int>(steps.size()) - 1;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i].empty())
            throw std::invalid_argument("betti_from_shifts: empty interior step");
        int lo = steps[i][0], hi = steps[i][0];
        for (int j : steps[i]) {
            ++bt.beta[{static_cast<int>(i), j}];
            lo = std::min(lo, j);
            hi = std::max(hi, j);
        }
        bt.gamma.push_back(lo);
        bt.alpha.push_back(hi);
    }
    for (int i = 1; i <= bt.p; ++i)
        if (bt.gamma[static_cast<std::size_t>(i)] <= bt.gamma[static_cast<std::size_t>(i) - 1])
            throw std::logic_error("betti_from_shifts: minimal degrees fail to increase; "
                                   "the resolution is not minimal");
    return bt;
}

bool is_pure(const BettiTable& bt) {
    for (int i = 0; i <= bt.p; ++i)
        if (bt.alpha[static_cast<std::size_t>(i)] != bt.gamma[static_cast<std::size_t>(i)])
            return false;
    return true;
}

bool is_quasi_pure(const BettiTable& bt) {
    for (int i = 1; i <= bt.p; ++i)
        if (bt.gamma[static_cast<std::size_t>(i)] < bt.alpha[static_cast<std::size_t>(i) - 1])
            return false;
    return true;
}

long long min_generators(const BettiTable& bt) { return bt.total(0); }

int regularity(const BettiTable& bt) {
    int reg = bt.alpha[0];
    for (int i = 1; i <= bt.p; ++i)
        reg = std::max(reg, bt.alpha[static_cast<std::size_t>(i)] - i);
    return reg;
}

HomologicalInvariants homological_invariants(const BettiTable& bt, int nvars, int hilbert_dim) {
    HomologicalInvariants inv;
    inv.pd = bt.p;
    inv.depth = nvars - bt.p;
    inv.dim = hilbert_dim;
    inv.reg = regularity(bt);
    inv.cm = inv.depth == inv.dim;
    return inv;
}

std::string betti_text(const BettiTable& bt) {
    std::string out = "total:";
    for (long long t : bt.totals()) out += " " + std::to_string(t);
    out += "\n";

    int rlo = bt.gamma[0], rhi = bt.alpha[0];
    for (int i = 0; i <= bt.p; ++i) {
        rlo = std::min(rlo, bt.gamma[static_cast<std::size_t>(i)] - i);
        rhi = std::max(rhi, bt.alpha[static_cast<std::size_t>(i)] - i);
    }
    for (int r = rlo; r <= rhi; ++r) {
        out += std::to_string(r) + ":";
        for (int i = 0; i <= bt.p; ++i) {
            long long v = bt.at(i, i + r);
            out += " " + (v == 0 ? std::string(".") : std::to_string(v));
        }
        out += "\n";
    }
    return out;
}

ComplexityEstimate estimate_complexity(const std::vector<long long>& betti) {
    if (betti.size() < 5)
        throw std::invalid_argument("estimate_complexity: need at least 5 Betti numbers");

    // cx 0 means eventually zero
    std::size_t last_nonzero = 0;
    bool any = false;
    for (std::size_t i = 0; i < betti.size(); ++i)
        if (betti[i] != 0) {
            last_nonzero = i;
            any = true;
        }
    if (!any || last_nonzero + 3 <= betti.size()) {
        ComplexityEstimate e;
        e.cx = 0;
        e.stable = true;
        return e;
    }

    // difference the tail until it vanishes identically; b rounds of
    // differencing killing the tail means polynomial growth of degree b-1
    std::vector<long long> seq(betti.begin() + static_cast<std::ptrdiff_t>(betti.size()) / 3,
                               betti.end());
    auto all_zero = [](const std::vector<long long>& v) {
        for (long long x : v)
            if (x != 0) return false;
        return true;
    };
    for (int b = 1; seq.size() >= 2; ++b) {
        std::vector<long long> next;
        next.reserve(seq.size() - 1);
        for (std::size_t i = 1; i < seq.size(); ++i) next.push_back(seq[i] - seq[i - 1]);
        if (all_zero(next)) {
            ComplexityEstimate e;
            e.cx = b;
            e.stable = next.size() >= 3;
            return e;
        }
        seq = std::move(next);
    }
    ComplexityEstimate e;
    e.cx = static_cast<int>(betti.size());
    e.stable = false;
    return e;
}

} // namespace gradecone
