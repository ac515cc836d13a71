#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gradecone {

// Checker outcome vocabulary. FAIL is reserved for a verified hypothesis set
// with a violated conclusion, which for proved statements means the
// implementation is wrong somewhere; VACUOUS marks a conclusion that holds
// for want of anything to check; NOT-APPLICABLE marks a hypothesis that
// could not be verified on this instance.
enum class Verdict { Pass, Fail, Vacuous, NotApplicable };

inline const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Vacuous: return "VACUOUS";
    case Verdict::NotApplicable: return "NOT-APPLICABLE";
    }
    return "?";
}

struct Hypothesis {
    std::string name;
    bool holds = false;
    std::string witness;
};

// One computed invariant, kept order-preserving and render-ready so reports
// serialize to identical bytes on replay.
struct InvariantEntry {
    enum class Kind { Int, Text, IntList };
    std::string key;
    Kind kind = Kind::Int;
    long long num = 0;
    std::string text;
    std::vector<long long> list;

    static InvariantEntry of(std::string k, long long v) {
        InvariantEntry e;
        e.key = std::move(k);
        e.kind = Kind::Int;
        e.num = v;
        return e;
    }
    static InvariantEntry of(std::string k, std::string v) {
        InvariantEntry e;
        e.key = std::move(k);
        e.kind = Kind::Text;
        e.text = std::move(v);
        return e;
    }
    static InvariantEntry of(std::string k, std::vector<long long> v) {
        InvariantEntry e;
        e.key = std::move(k);
        e.kind = Kind::IntList;
        e.list = std::move(v);
        return e;
    }
};

struct CheckReport {
    std::string theorem;
    std::string instance;
    std::uint64_t seed = 0;
    std::vector<Hypothesis> hypotheses;
    std::vector<InvariantEntry> invariants;
    Verdict verdict = Verdict::NotApplicable;

    void hyp(std::string name, bool holds, std::string witness) {
        hypotheses.push_back({std::move(name), holds, std::move(witness)});
    }
    bool hypotheses_hold() const {
        for (const auto& h : hypotheses)
            if (!h.holds) return false;
        return true;
    }
    template <class T>
    void inv(std::string key, T value) {
        invariants.push_back(InvariantEntry::of(std::move(key), std::move(value)));
    }
    void inv_int(std::string key, long long value) {
        invariants.push_back(InvariantEntry::of(std::move(key), value));
    }

    // exit-code contract: success and vacuity are 0, unverifiable is 2, a
    // violated conclusion is 3
    int exit_code() const {
        switch (verdict) {
        case Verdict::Pass:
        case Verdict::Vacuous: return 0;
        case Verdict::NotApplicable: return 2;
        case Verdict::Fail: return 3;
        }
        return 1;
    }
};

// Deterministic JSON rendering (single document, stable key order).
std::string report_json(const CheckReport& rep);

// Fixed-layout human rendering for terminal use.
std::string report_text(const CheckReport& rep);

} // namespace gradecone
