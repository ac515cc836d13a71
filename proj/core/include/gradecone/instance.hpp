#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gradecone/parse.hpp"

namespace gradecone {

// A local module presented over a polynomial ring localized at the origin:
// M = (k[vars]_m)/I with I inside m. Generators are kept as source strings
// so one instance can be materialized over any coefficient field. base and
// module optionally split the ideal into an ambient complete intersection
// and module relations on top of it, which is what the Hilbert-coefficient
// checkers consume; plain ideals leave them empty.
struct LocalInstance {
    std::string name;
    std::string field = "fp:32003"; // "fp:<p>" or "q"
    std::vector<std::string> vars;
    std::vector<std::string> ideal;
    std::vector<std::string> base;
    std::vector<std::string> module;
    std::optional<int> declared_cx;
    std::optional<bool> declared_cm;
    std::uint64_t seed = 0;
};

// Parse the JSON instance document. Throws std::invalid_argument with a
// position-annotated message on malformed input.
LocalInstance parse_local_instance(const std::string& text);

// Inverse of parse_local_instance, with stable key order.
std::string render_local_instance(const LocalInstance& inst);

// The polynomial data of an instance over a concrete field.
template <class F>
struct InstanceData {
    RingPtr<F> ring;
    std::vector<Polynomial<F>> ideal;
    std::vector<Polynomial<F>> base;
    std::vector<Polynomial<F>> module;
};

template <class F>
InstanceData<F> materialize(const F& field, const LocalInstance& inst,
                            OrderKind order = OrderKind::GrevLex) {
    if (inst.vars.empty()) throw std::invalid_argument("instance: no variables");
    InstanceData<F> data;
    data.ring = make_ring(field, inst.vars, order);
    auto parse_all = [&](const std::vector<std::string>& src) {
        std::vector<Polynomial<F>> out;
        out.reserve(src.size());
        for (const auto& s : src) out.push_back(parse_polynomial<F>(data.ring, s));
        return out;
    };
    data.base = parse_all(inst.base);
    data.module = parse_all(inst.module);
    if (!inst.ideal.empty()) {
        data.ideal = parse_all(inst.ideal);
    } else {
        data.ideal = data.base;
        data.ideal.insert(data.ideal.end(), data.module.begin(), data.module.end());
    }
    if (data.ideal.empty()) throw std::invalid_argument("instance: empty ideal");
    for (const auto& f : data.ideal)
        if (!f.is_zero() && !f.constant_term().is_zero())
            throw std::invalid_argument("instance: generator has a nonzero constant term");
    return data;
}

// ---- seeded corpus generation ----

struct CorpusParams {
    std::size_t nvars = 2;   // 2 or 3
    int max_degree = 4;      // bound on generator degrees
    std::size_t count = 10;
    std::string kind = "monomial"; // monomial | perturbed-homogeneous | ci
};

// Deterministic per (params, seed); instance i carries its own derived seed.
std::vector<LocalInstance> generate_corpus(const CorpusParams& params, std::uint64_t seed);

} // namespace gradecone
