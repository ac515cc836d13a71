#pragma once

#include <map>
#include <string>
#include <vector>

namespace gradecone {

// Graded Betti numbers of a minimal resolution: beta[{i,j}] counts basis
// elements of homological step i living in degree j. p is the projective
// dimension. alpha[i]/gamma[i] are the extreme degrees at step i. Minimality
// forces gamma to increase strictly, and the constructor enforces that;
// alpha may drop, and whether it drops at the last step is exactly the
// Cohen-Macaulay question this library keeps poking at.
struct BettiTable {
    std::map<std::pair<int, int>, long long> beta;
    int p = 0;
    std::vector<int> alpha, gamma;

    long long at(int i, int j) const;
    long long total(int i) const;
    std::vector<long long> totals() const;
};

// Build from the per-step shift lists of a minimal graded resolution.
BettiTable betti_from_shifts(const std::vector<std::vector<int>>& shifts);

// alpha_i == gamma_i everywhere.
bool is_pure(const BettiTable& bt);

// gamma_i >= alpha_{i-1} for every interior step.
bool is_quasi_pure(const BettiTable& bt);

long long min_generators(const BettiTable& bt);

int regularity(const BettiTable& bt);

struct HomologicalInvariants {
    int pd = 0;
    int depth = 0;
    int dim = 0;
    int reg = 0;
    bool cm = false;
};

// depth via the Auslander-Buchsbaum identity over the n-variable polynomial
// ring; dim is supplied by the Hilbert side.
HomologicalInvariants homological_invariants(const BettiTable& bt, int nvars, int hilbert_dim);

// Fixed text rendering: "total:" row of step totals, then one row per
// degree slope r from min(gamma_i - i) to max(alpha_i - i) listing
// beta_{i, i+r}, zeros as dots, single spaces throughout.
std::string betti_text(const BettiTable& bt);

struct ComplexityEstimate {
    int cx = 0;
    bool stable = false;
};

// Growth estimate from a finite Betti number sequence: smallest b whose
// b-th finite differences of the tail vanish on the last entries. The
// stable flag demands at least three consecutive vanishing differences;
// this is a heuristic and is reported as such.
ComplexityEstimate estimate_complexity(const std::vector<long long>& betti);

} // namespace gradecone
