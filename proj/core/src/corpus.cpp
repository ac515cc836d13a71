#include "gradecone/instance.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "gradecone/local.hpp"
#include "gradecone/resolution.hpp"

namespace gradecone {

namespace {

// Raw-engine draws modulo the bound: std::uniform_int_distribution is not
// specified bit-for-bit across standard libraries, and corpus files must
// reproduce everywhere. The tiny modulo bias is irrelevant here.
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(std::uint64_t seed) : eng(seed) {}
    std::uint64_t draw(std::uint64_t bound) { return eng() % bound; }
    long long in_range(long long lo, long long hi) { // inclusive
        return lo + static_cast<long long>(draw(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// ---- polynomial text rendering ----

std::string mono_text(const std::vector<std::string>& vars, const std::vector<int>& e) {
    std::string s;
    for (std::size_t v = 0; v < vars.size(); ++v) {
        if (e[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars[v];
        if (e[v] > 1) s += "^" + std::to_string(e[v]);
    }
    return s.empty() ? "1" : s;
}

// term list -> "2*x^2*y - y^3"; terms with zero coefficient are dropped
std::string poly_text(const std::vector<std::string>& vars,
                      const std::vector<std::pair<long long, std::vector<int>>>& terms) {
    std::string s;
    for (const auto& [c, e] : terms) {
        if (c == 0) continue;
        const long long a = c < 0 ? -c : c;
        std::string body = mono_text(vars, e);
        std::string t = (a == 1 && body != "1") ? body : std::to_string(a);
        if (a != 1 && body != "1") t += "*" + body;
        if (s.empty()) s = (c < 0 ? "-" : "") + t;
        else s += (c < 0 ? " - " : " + ") + t;
    }
    return s.empty() ? "0" : s;
}

std::vector<int> random_exponents(Rng& rng, std::size_t nvars, int degree) {
    std::vector<int> e(nvars, 0);
    for (int k = 0; k < degree; ++k) e[rng.draw(nvars)] += 1;
    return e;
}

bool divides(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// ---- monomial ideals ----

LocalInstance monomial_instance(Rng& rng, std::size_t nvars, int max_degree) {
    std::vector<std::string> vars(nvars == 2 ? std::vector<std::string>{"x", "y"}
                                             : std::vector<std::string>{"x", "y", "z"});
    const std::size_t ngens = 2 + rng.draw(nvars + 1);
    std::vector<std::vector<int>> gens;
    for (std::size_t g = 0; g < ngens; ++g) {
        const int d = static_cast<int>(1 + rng.draw(static_cast<std::uint64_t>(max_degree)));
        gens.push_back(random_exponents(rng, nvars, d));
    }
    // keep only the minimal generators
    std::vector<std::vector<int>> minimal;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j)
            if (i != j && divides(gens[j], gens[i]) &&
                (gens[j] != gens[i] || j < i))
                redundant = true;
        if (!redundant) minimal.push_back(gens[i]);
    }
    LocalInstance inst;
    inst.vars = vars;
    for (const auto& e : minimal) inst.ideal.push_back(mono_text(vars, e));
    return inst;
}

// ---- perturbed homogeneous, two variables ----

LocalInstance form_tail_instance(Rng& rng, int max_degree) {
    const std::vector<std::string> vars{"x", "y"};
    LocalInstance inst;
    inst.vars = vars;
    const std::size_t ngens = 1 + rng.draw(2);
    for (std::size_t g = 0; g < ngens; ++g) {
        const int d = static_cast<int>(2 + rng.draw(static_cast<std::uint64_t>(max_degree - 1)));
        std::vector<std::pair<long long, std::vector<int>>> terms;
        bool nonzero = false;
        for (int k = 0; k <= d; ++k) {
            const long long c = rng.in_range(-2, 2);
            nonzero = nonzero || c != 0;
            terms.push_back({c, {d - k, k}});
        }
        if (!nonzero) terms[rng.draw(terms.size())].first = 1;
        // higher-order tail, present two times out of three
        if (rng.draw(3) != 0) {
            const int td = d + 1 + static_cast<int>(rng.draw(2));
            terms.push_back({rng.in_range(1, 2), random_exponents(rng, 2, td)});
        }
        inst.ideal.push_back(poly_text(vars, terms));
    }
    return inst;
}

// ---- semigroup curves, three variables ----

// least k with k*v0 in <v1, v2>, plus the witness exponents
struct CurveRelation {
    int k = 0, b1 = 0, b2 = 0;
};

CurveRelation least_multiple_in(long long v0, long long v1, long long v2) {
    for (int k = 1;; ++k) {
        const long long target = k * v0;
        for (long long b1 = 0; b1 * v1 <= target; ++b1)
            if ((target - b1 * v1) % v2 == 0)
                return {k, static_cast<int>(b1), static_cast<int>((target - b1 * v1) / v2)};
        if (k > 4096) throw std::logic_error("semigroup relation search ran away");
    }
}

bool semigroup_member(long long n, long long a, long long b) {
    for (long long i = 0; i * a <= n; ++i)
        if ((n - i * a) % b == 0) return true;
    return false;
}

LocalInstance curve_instance(const std::array<long long, 3>& t);

// is the tangent cone of the curve quotient Cohen-Macaulay? cheap: three
// binomials keep the Groebner bases and the resolution small
bool curve_cone_cm(const std::array<long long, 3>& t) {
    FpContext F(32003);
    auto inst = curve_instance(t);
    auto R = make_ring(F, inst.vars);
    std::vector<Polynomial<FpContext>> gens;
    for (const auto& s : inst.ideal) gens.push_back(parse_polynomial(R, s));
    auto cone = tangent_cone(R, gens);
    const int dim = quotient_dimension(R, cone);
    auto f0 = rank_one_module(R);
    auto res = minimal_free_resolution(f0, wrap_ideal(f0, cone));
    const int depth = static_cast<int>(R->nvars()) - static_cast<int>(res.length());
    return depth == dim;
}

// Minimally generated coprime triples a < b < c up to the bound whose curve
// quotient has a non-CM tangent cone, in a fixed order so corpus draws are
// stable. The module side is a one-dimensional domain either way; only the
// non-CM cones make interesting instances, so the CM ones are filtered out
// here rather than wasting checker time downstream.
const std::vector<std::array<long long, 3>>& curve_triples() {
    static const std::vector<std::array<long long, 3>> triples = [] {
        std::vector<std::array<long long, 3>> out;
        const long long bound = 26;
        for (long long a = 3; a <= bound; ++a)
            for (long long b = a + 1; b <= bound; ++b)
                for (long long c = b + 1; c <= bound; ++c) {
                    if (std::gcd(a, std::gcd(b, c)) != 1) continue;
                    if (b % a == 0) continue;
                    if (semigroup_member(c, a, b)) continue;
                    if (curve_cone_cm({a, b, c})) continue;
                    out.push_back({a, b, c});
                }
        return out;
    }();
    return triples;
}

// Defining binomials of the monomial curve (t^a, t^b, t^c): each variable's
// least pure power lying in the semigroup generated by the other two, minus
// the witness monomial. The forms and the tails genuinely differ, which is
// what makes these instances interesting for tangent cones.
LocalInstance curve_instance(const std::array<long long, 3>& t) {
    const std::vector<std::string> vars{"x", "y", "z"};
    auto r1 = least_multiple_in(t[0], t[1], t[2]);
    auto r2 = least_multiple_in(t[1], t[0], t[2]);
    auto r3 = least_multiple_in(t[2], t[0], t[1]);
    LocalInstance inst;
    inst.vars = vars;
    inst.name = "curve-" + std::to_string(t[0]) + "-" + std::to_string(t[1]) + "-" +
                std::to_string(t[2]);
    inst.ideal.push_back(poly_text(vars, {{1, {r1.k, 0, 0}}, {-1, {0, r1.b1, r1.b2}}}));
    inst.ideal.push_back(poly_text(vars, {{1, {0, r2.k, 0}}, {-1, {r2.b1, 0, r2.b2}}}));
    inst.ideal.push_back(poly_text(vars, {{1, {0, 0, r3.k}}, {-1, {r3.b1, r3.b2, 0}}}));
    return inst;
}

// ---- complete intersections ----

// (u*x + v*y)^s expanded over the given two variable indices of nvars
std::vector<std::pair<long long, std::vector<int>>> linear_power(std::size_t nvars,
                                                                 std::size_t i, long long u,
                                                                 std::size_t j, long long v,
                                                                 int s) {
    std::vector<std::pair<long long, std::vector<int>>> terms;
    long long binom = 1;
    std::vector<long long> upow(static_cast<std::size_t>(s) + 1, 1),
        vpow(static_cast<std::size_t>(s) + 1, 1);
    for (int k = 1; k <= s; ++k) {
        upow[static_cast<std::size_t>(k)] = upow[static_cast<std::size_t>(k) - 1] * u;
        vpow[static_cast<std::size_t>(k)] = vpow[static_cast<std::size_t>(k) - 1] * v;
    }
    for (int k = 0; k <= s; ++k) {
        std::vector<int> e(nvars, 0);
        e[i] = s - k;
        e[j] = k;
        terms.push_back({binom * upow[static_cast<std::size_t>(s - k)] *
                             vpow[static_cast<std::size_t>(k)],
                         e});
        binom = binom * (s - k) / (k + 1);
    }
    return terms;
}

LocalInstance ci_instance(Rng& rng, std::size_t nvars, std::size_t index) {
    std::vector<std::string> vars(nvars == 2 ? std::vector<std::string>{"x", "y"}
                                             : std::vector<std::string>{"x", "y", "z"});
    LocalInstance inst;
    inst.vars = vars;
    const int s = index % 2 == 0 ? 2 : 3;
    // two independent linear forms l1 = x + u*y, l2 = v*x + y (1 - u*v != 0)
    long long u = rng.in_range(-2, 2);
    long long v = rng.in_range(-2, 2);
    if (u * v == 1) v = 0;
    inst.base.push_back(poly_text(vars, linear_power(nvars, 0, 1, 1, u, s)));
    inst.base.push_back(poly_text(vars, linear_power(nvars, 0, v, 1, 1, s)));
    if (nvars == 2) {
        if (index % 4 < 2) {
            // M = A/(l1): the quotient is a truncated line, with a periodic
            // rank-one resolution over A
            inst.module.push_back(poly_text(vars, {{1, {1, 0}}, {u, {0, 1}}}));
            inst.declared_cx = 1;
        }
        // otherwise M = A itself, complexity zero, left to the estimator
    } else {
        // cut by a third independent linear form to reach dimension zero
        long long w1 = rng.in_range(-1, 1);
        long long w2 = rng.in_range(-1, 1);
        inst.module.push_back(poly_text(vars, {{w1, {1, 0, 0}}, {w2, {0, 1, 0}}, {1, {0, 0, 1}}}));
    }
    return inst;
}

} // namespace

std::vector<LocalInstance> generate_corpus(const CorpusParams& params, std::uint64_t seed) {
    if (params.nvars != 2 && params.nvars != 3)
        throw std::invalid_argument("generate_corpus: nvars must be 2 or 3");
    if (params.max_degree < 2)
        throw std::invalid_argument("generate_corpus: max_degree must be at least 2");
    if (params.kind != "monomial" && params.kind != "perturbed-homogeneous" &&
        params.kind != "ci")
        throw std::invalid_argument("generate_corpus: unknown kind '" + params.kind + "'");

    // curve draws cycle through a seed-shuffled enumeration, so any count up
    // to the family size yields pairwise distinct instances
    std::vector<std::size_t> curve_order;
    if (params.kind == "perturbed-homogeneous" && params.nvars == 3) {
        const std::size_t n = curve_triples().size();
        curve_order.resize(n);
        for (std::size_t i = 0; i < n; ++i) curve_order[i] = i;
        Rng shuf(mix_seed(seed, 0x5eedull));
        for (std::size_t i = n - 1; i > 0; --i)
            std::swap(curve_order[i], curve_order[shuf.draw(i + 1)]);
    }

    std::vector<LocalInstance> out;
    out.reserve(params.count);
    for (std::size_t i = 0; i < params.count; ++i) {
        const std::uint64_t si = mix_seed(seed, i);
        Rng rng(si);
        LocalInstance inst;
        if (params.kind == "monomial") {
            inst = monomial_instance(rng, params.nvars, params.max_degree);
        } else if (params.kind == "perturbed-homogeneous") {
            if (params.nvars == 2) {
                inst = form_tail_instance(rng, params.max_degree);
            } else {
                const auto& triples = curve_triples();
                inst = curve_instance(triples[curve_order[i % curve_order.size()]]);
            }
        } else {
            inst = ci_instance(rng, params.nvars, i);
        }
        if (inst.name.empty())
            inst.name = params.kind + "-" + std::to_string(i);
        inst.seed = si;
        out.push_back(std::move(inst));
    }
    return out;
}

} // namespace gradecone
