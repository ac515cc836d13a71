#include "gradecone/instance.hpp"

#include <json.hpp>

namespace gradecone {

namespace {

using nlohmann::json;

std::vector<std::string> string_list(const json& j, const char* key) {
    std::vector<std::string> out;
    if (!j.contains(key)) return out;
    const auto& arr = j.at(key);
    if (!arr.is_array())
        throw std::invalid_argument(std::string("instance: '") + key + "' must be an array");
    for (const auto& item : arr) {
        if (!item.is_string())
            throw std::invalid_argument(std::string("instance: '") + key +
                                        "' entries must be strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

} // namespace

LocalInstance parse_local_instance(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("instance: malformed JSON at byte " +
                                    std::to_string(e.byte) + ": " + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("instance: top level must be an object");

    static const char* known[] = {"name", "field",  "vars",     "ideal",
                                  "base", "module", "declared", "seed"};
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw std::invalid_argument("instance: unknown key '" + key + "'");
    }

    LocalInstance inst;
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw std::invalid_argument("instance: 'name' must be a string");
        inst.name = j["name"].get<std::string>();
    }
    if (j.contains("field")) {
        if (!j["field"].is_string())
            throw std::invalid_argument("instance: 'field' must be a string");
        inst.field = j["field"].get<std::string>();
    }
    inst.vars = string_list(j, "vars");
    if (inst.vars.empty())
        throw std::invalid_argument("instance: 'vars' must be a nonempty string array");
    inst.ideal = string_list(j, "ideal");
    inst.base = string_list(j, "base");
    inst.module = string_list(j, "module");
    if (inst.ideal.empty() && inst.base.empty() && inst.module.empty())
        throw std::invalid_argument("instance: needs 'ideal' or 'base'/'module' generators");

    if (j.contains("declared")) {
        const auto& d = j["declared"];
        if (!d.is_object()) throw std::invalid_argument("instance: 'declared' must be an object");
        for (const auto& [key, value] : d.items()) {
            if (key == "cx") {
                if (!value.is_number_integer())
                    throw std::invalid_argument("instance: declared cx must be an integer");
                inst.declared_cx = value.get<int>();
            } else if (key == "cm") {
                if (!value.is_boolean())
                    throw std::invalid_argument("instance: declared cm must be a boolean");
                inst.declared_cm = value.get<bool>();
            } else {
                throw std::invalid_argument("instance: unknown declared key '" + key + "'");
            }
        }
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_unsigned())
            throw std::invalid_argument("instance: 'seed' must be a nonnegative integer");
        inst.seed = j["seed"].get<std::uint64_t>();
    }
    return inst;
}

std::string render_local_instance(const LocalInstance& inst) {
    nlohmann::ordered_json j;
    if (!inst.name.empty()) j["name"] = inst.name;
    j["field"] = inst.field;
    j["vars"] = inst.vars;
    if (!inst.ideal.empty()) j["ideal"] = inst.ideal;
    if (!inst.base.empty()) j["base"] = inst.base;
    if (!inst.module.empty()) j["module"] = inst.module;
    if (inst.declared_cx || inst.declared_cm) {
        nlohmann::ordered_json d = nlohmann::ordered_json::object();
        if (inst.declared_cx) d["cx"] = *inst.declared_cx;
        if (inst.declared_cm) d["cm"] = *inst.declared_cm;
        j["declared"] = std::move(d);
    }
    if (inst.seed) j["seed"] = inst.seed;
    return j.dump(2);
}

} // namespace gradecone
