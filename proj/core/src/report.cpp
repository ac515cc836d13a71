#include "gradecone/report.hpp"

#include <json.hpp>

namespace gradecone {

// Reports must replay byte-identically for a fixed seed, so both renderers
// emit fields in insertion order with no locale- or hash-dependent parts.

std::string report_json(const CheckReport& rep) {
    nlohmann::ordered_json j;
    j["theorem"] = rep.theorem;
    j["instance"] = rep.instance;
    j["seed"] = rep.seed;
    j["hypotheses"] = nlohmann::ordered_json::array();
    for (const auto& h : rep.hypotheses) {
        nlohmann::ordered_json hj;
        hj["name"] = h.name;
        hj["holds"] = h.holds;
        hj["witness"] = h.witness;
        j["hypotheses"].push_back(std::move(hj));
    }
    nlohmann::ordered_json inv = nlohmann::ordered_json::object();
    for (const auto& e : rep.invariants) {
        switch (e.kind) {
        case InvariantEntry::Kind::Int: inv[e.key] = e.num; break;
        case InvariantEntry::Kind::Text: inv[e.key] = e.text; break;
        case InvariantEntry::Kind::IntList: inv[e.key] = e.list; break;
        }
    }
    j["invariants"] = std::move(inv);
    j["verdict"] = verdict_name(rep.verdict);
    return j.dump(2);
}

namespace {

void append_indented(std::string& out, const std::string& block) {
    std::size_t start = 0;
    while (start < block.size()) {
        std::size_t end = block.find('\n', start);
        if (end == std::string::npos) end = block.size();
        out += "    ";
        out.append(block, start, end - start);
        out += '\n';
        start = end + 1;
    }
}

} // namespace

std::string report_text(const CheckReport& rep) {
    std::string out;
    out += "theorem   " + rep.theorem + "\n";
    out += "instance  " + rep.instance + "\n";
    out += "seed      " + std::to_string(rep.seed) + "\n";
    for (const auto& h : rep.hypotheses) {
        out += h.holds ? "  [ok] " : "  [--] ";
        out += h.name + ": " + h.witness + "\n";
    }
    for (const auto& e : rep.invariants) {
        switch (e.kind) {
        case InvariantEntry::Kind::Int:
            out += "  " + e.key + " = " + std::to_string(e.num) + "\n";
            break;
        case InvariantEntry::Kind::Text:
            if (e.text.find('\n') != std::string::npos) {
                out += "  " + e.key + ":\n";
                append_indented(out, e.text);
            } else {
                out += "  " + e.key + " = " + e.text + "\n";
            }
            break;
        case InvariantEntry::Kind::IntList: {
            out += "  " + e.key + " = [";
            for (std::size_t i = 0; i < e.list.size(); ++i) {
                if (i) out += ", ";
                out += std::to_string(e.list[i]);
            }
            out += "]\n";
            break;
        }
        }
    }
    out += "verdict   ";
    out += verdict_name(rep.verdict);
    out += "\n";
    return out;
}

} // namespace gradecone
