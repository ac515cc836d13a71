// gradecone: exact local commutative algebra from the command line.
//
// Every subcommand except `corpus` reads one instance file (JSON, `-` for
// stdin) describing a quotient A = k[x_1..x_n]/I, optionally split into a
// base sequence and module generators. Results go to stdout, text by
// default or exactly one JSON document with --json; diagnostics go to
// stderr. Exit codes: 0 for success (and PASS or VACUOUS verdicts), 1 for
// usage and input errors, 2 for NOT-APPLICABLE (or a non-Artinian quotient
// where finite length is required), 3 for FAIL.

#include <CLI11.hpp>
#include <json.hpp>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <map>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "gradecone/betti.hpp"
#include "gradecone/fields.hpp"
#include "gradecone/hilbert.hpp"
#include "gradecone/instance.hpp"
#include "gradecone/koszul.hpp"
#include "gradecone/local.hpp"
#include "gradecone/report.hpp"
#include "gradecone/resolution.hpp"
#include "gradecone/theorems.hpp"

namespace {

using namespace gradecone;
using ojson = nlohmann::ordered_json;

struct Options {
    std::string file;
    std::string field;    // overrides the instance's field when nonempty
    std::string window = "2:12";
    std::string poly;
    std::string kind = "monomial";
    std::string theorem;
    bool json = false;
    int cutoff = 12;
    int trials = 200;
    int stages = 6;
    int count = 10;
    int nvars = 2;
    int max_degree = 4;
    int workers = 1;
    std::optional<long long> declare_cx;
    std::optional<std::uint64_t> seed;
};

std::optional<std::uint64_t> env_seed() {
    const char* s = std::getenv("GRADECONE_SEED");
    if (!s || !*s) return std::nullopt;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end == s || *end != '\0')
        throw std::invalid_argument("GRADECONE_SEED is not an unsigned integer");
    return static_cast<std::uint64_t>(v);
}

// flag beats environment beats the caller's fallback (usually the
// instance's own seed)
std::uint64_t resolve_seed(const Options& o, std::uint64_t fallback) {
    if (o.seed) return *o.seed;
    if (auto e = env_seed()) return *e;
    return fallback;
}

std::optional<std::uint64_t> seed_override(const Options& o) {
    if (o.seed) return o.seed;
    return env_seed();
}

std::pair<int, int> parse_window(const std::string& w) {
    auto pos = w.find(':');
    int lo = 0, hi = 0;
    try {
        if (pos == std::string::npos) throw std::invalid_argument("");
        lo = std::stoi(w.substr(0, pos));
        hi = std::stoi(w.substr(pos + 1));
    } catch (const std::exception&) {
        throw std::invalid_argument("window: expected <lo>:<hi> with integer bounds");
    }
    if (lo < 0 || hi < lo) throw std::invalid_argument("window: need 0 <= lo <= hi");
    return {lo, hi};
}

std::string field_spec(const Options& o, const LocalInstance& inst) {
    std::string s = o.field.empty() ? inst.field : o.field;
    return s.empty() ? std::string("fp:32003") : s;
}

template <class Fn>
int with_field(const std::string& spec, Fn&& fn) {
    if (spec == "q" || spec == "Q") return fn(RatContext{});
    if (spec.rfind("fp:", 0) == 0) {
        unsigned long long p = 0;
        try {
            std::size_t used = 0;
            p = std::stoull(spec.substr(3), &used);
            if (used != spec.size() - 3) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("field: bad characteristic in '" + spec + "'");
        }
        if (p < 2 || p > 0xffffffffull || !is_prime_u32(static_cast<std::uint32_t>(p)))
            throw std::invalid_argument("field: '" + spec + "' is not a prime field");
        return fn(FpContext{static_cast<std::uint32_t>(p)});
    }
    throw std::invalid_argument("field: expected fp:<prime> or q, got '" + spec + "'");
}

LocalInstance load_instance(const std::string& path) {
    std::string text;
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) throw std::invalid_argument("cannot open instance file '" + path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    return parse_local_instance(text);
}

void print_doc(const ojson& j) { std::cout << j.dump(2) << "\n"; }

void row(const std::string& key, const std::string& value, int width = 12) {
    std::cout << std::left << std::setw(width) << key << value << "\n";
}

template <class T>
std::string fmt_list(const std::vector<T>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(v[i]);
    }
    return s + "]";
}

std::string fmt_strings(const std::vector<std::string>& v) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i];
    }
    return s + "]";
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

template <class F>
bool all_homogeneous(const std::vector<Polynomial<F>>& v) {
    for (const auto& f : v)
        if (!f.is_zero() && !f.is_homogeneous()) return false;
    return true;
}

template <class F>
std::vector<std::string> poly_strings(const std::vector<Polynomial<F>>& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& f : v) out.push_back(f.str());
    return out;
}

template <class F>
std::vector<std::vector<int>> resolution_shifts(const FreeResolution<F>& res) {
    std::vector<std::vector<int>> shifts;
    shifts.reserve(res.modules.size());
    for (const auto& m : res.modules) shifts.push_back(m->degrees);
    return shifts;
}

// ---- per-subcommand runners ----

template <class F>
int run_gb(const F& field, const Options& o, const LocalInstance& inst) {
    auto data = materialize(field, inst);
    auto gb = groebner_ideal(data.ring, data.ideal);
    auto strs = poly_strings(gb);
    if (o.json) {
        ojson j;
        j["field"] = field_spec(o, inst);
        j["vars"] = inst.vars;
        j["order"] = "grevlex";
        j["basis"] = strs;
        print_doc(j);
    } else {
        for (const auto& s : strs) std::cout << s << "\n";
    }
    return 0;
}

template <class F>
int run_nf(const F& field, const Options& o, const LocalInstance& inst) {
    auto data = materialize(field, inst);
    auto gb = groebner_ideal(data.ring, data.ideal);
    auto f = parse_polynomial<F>(data.ring, o.poly);
    auto r = normal_form_ideal(f, gb);
    if (o.json) {
        ojson j;
        j["poly"] = f.str();
        j["normal_form"] = r.str();
        j["is_zero"] = r.is_zero();
        print_doc(j);
    } else {
        std::cout << r.str() << "\n";
    }
    return 0;
}

template <class F>
int run_tc(const F& field, const Options& o, const LocalInstance& inst) {
    auto data = materialize(field, inst);
    bool homog = all_homogeneous(data.ideal);
    auto cone = tangent_cone(data.ring, data.ideal);
    auto strs = poly_strings(cone);
    if (homog) std::cerr << "note: input is homogeneous, the cone agrees with the ideal\n";
    if (o.json) {
        ojson j;
        j["field"] = field_spec(o, inst);
        j["vars"] = inst.vars;
        j["homogeneous_input"] = homog;
        j["cone"] = strs;
        print_doc(j);
    } else {
        for (const auto& s : strs) std::cout << s << "\n";
    }
    return 0;
}

// minimal graded free resolution of R/in(I), i.e. of the tangent cone
// quotient; for homogeneous input this is the quotient itself
template <class F>
FreeResolution<F> cone_resolution(const InstanceData<F>& data) {
    auto cone = tangent_cone(data.ring, data.ideal);
    auto f0 = rank_one_module(data.ring);
    return minimal_free_resolution(f0, wrap_ideal(f0, cone));
}

template <class F>
int run_res(const F& field, const Options& o, const LocalInstance& inst) {
    auto data = materialize(field, inst);
    auto res = cone_resolution(data);
    auto shifts = resolution_shifts(res);
    if (o.json) {
        ojson j;
        j["length"] = shifts.size() - 1;
        j["steps"] = ojson::array();
        for (const auto& s : shifts) {
            ojson step;
            step["rank"] = s.size();
            step["shifts"] = s;
            j["steps"].push_back(step);
        }
        print_doc(j);
    } else {
        for (std::size_t i = 0; i < shifts.size(); ++i)
            std::cout << i << ": rank " << shifts[i].size() << ", shifts "
                      << fmt_list(shifts[i]) << "\n";
    }
    return 0;
}

template <class F>
int run_betti(const F& field, const Options& o, const LocalInstance& inst) {
    auto data = materialize(field, inst);
    auto bt = betti_from_shifts(resolution_shifts(cone_resolution(data)));
    if (o.json) {
        ojson j;
        j["pd"] = bt.p;
        j["regularity"] = regularity(bt);
        j["alpha"] = bt.alpha;
        j["gamma"] = bt.gamma;
        j["pure"] = is_pure(bt);
        j["quasi_pure"] = is_quasi_pure(bt);
        j["totals"] = bt.totals();
        j["beta"] = ojson::array();
        for (const auto& [ij, v] : bt.beta) {
            ojson e;
            e["i"] = ij.first;
            e["j"] = ij.second;
            e["value"] = v;
            j["beta"].push_back(e);
        }
        print_doc(j);
    } else {
        std::cout << betti_text(bt);
        row("pd", std::to_string(bt.p));
        row("regularity", std::to_string(regularity(bt)));
        row("alpha", fmt_list(bt.alpha));
        row("gamma", fmt_list(bt.gamma));
        row("pure", yesno(is_pure(bt)));
        row("quasi-pure", yesno(is_quasi_pure(bt)));
    }
    return 0;
}

template <class F>
int run_hilbert(const F& field, const Options& o, const LocalInstance& inst) {
    auto data = materialize(field, inst);
    auto hd = local_hilbert(data.ring, data.ideal);
    auto vals = hilbert_function(hd, o.cutoff);
    if (o.json) {
        ojson j;
        j["numerator"] = hd.numerator.str();
        j["h_poly"] = hd.h_poly.str();
        j["dim"] = hd.dim;
        j["e"] = hd.e;
        j["mu"] = hd.mu;
        j["values"] = vals;
        print_doc(j);
    } else {
        row("numerator", hd.numerator.str());
        row("h-poly", hd.h_poly.str());
        row("dim", std::to_string(hd.dim));
        row("e", fmt_list(hd.e));
        row("mu", std::to_string(hd.mu));
        row("values", fmt_list(vals));
    }
    return 0;
}

template <class F>
int run_koszul(const F& field, const Options& o, const LocalInstance& inst) {
    auto data = materialize(field, inst);
    if (!all_homogeneous(data.ideal))
        std::cerr << "note: Koszul homology is computed on the tangent cone\n";
    auto cone = tangent_cone(data.ring, data.ideal);
    std::vector<Polynomial<F>> vars;
    for (std::size_t i = 0; i < data.ring->nvars(); ++i)
        vars.push_back(Polynomial<F>::variable(data.ring, i));
    auto mod = linear_module_from_quotient(data.ring, cone, vars, o.cutoff);
    auto h = koszul_homology(mod, vars.size(), 0, o.cutoff);
    if (o.json) {
        ojson j;
        j["r"] = h.r;
        j["lo"] = h.lo;
        j["hi"] = h.hi;
        j["dims"] = h.dims;
        print_doc(j);
    } else {
        std::cout << "H_i of the variable sequence, columns n = " << h.lo << ".." << h.hi
                  << "\n";
        for (std::size_t i = 0; i <= h.r; ++i) {
            std::cout << "H_" << i << ":";
            for (int n = h.lo; n <= h.hi; ++n) std::cout << " " << h.at(i, n);
            std::cout << "\n";
        }
    }
    return 0;
}

template <class F>
int run_depth(const F& field, const Options& o, const LocalInstance& inst) {
    auto data = materialize(field, inst);
    auto cone = tangent_cone(data.ring, data.ideal);
    auto kd = depth_via_koszul(data.ring, cone, o.cutoff);
    auto f0 = rank_one_module(data.ring);
    auto res = minimal_free_resolution(f0, wrap_ideal(f0, cone));
    int pd = static_cast<int>(res.length());
    int rdepth = static_cast<int>(data.ring->nvars()) - pd;
    bool agree = kd.depth == rdepth;
    if (o.json) {
        ojson j;
        j["koszul_depth"] = kd.depth;
        j["top_index"] = kd.top_index;
        j["certified"] = kd.certified;
        j["pd"] = pd;
        j["resolution_depth"] = rdepth;
        j["agree"] = agree;
        print_doc(j);
    } else {
        row("koszul depth", std::to_string(kd.depth) + " (top index " +
                                std::to_string(kd.top_index) + ", certified " +
                                yesno(kd.certified) + ")",
            18);
        row("pd", std::to_string(pd), 18);
        row("resolution depth", std::to_string(rdepth), 18);
        row("agree", yesno(agree), 18);
    }
    return 0;
}

template <class F>
int run_superficial(const F& field, const Options& o, const LocalInstance& inst) {
    auto data = materialize(field, inst);
    auto [lo, hi] = parse_window(o.window);
    std::uint64_t seed = resolve_seed(o, inst.seed);
    auto rec = find_superficial(data.ring, data.ideal, o.trials, lo, hi, seed);
    if (o.json) {
        ojson j;
        j["found"] = rec.found;
        j["element"] = rec.found ? rec.ell.str() : std::string();
        j["window"] = {rec.window_lo, rec.window_hi};
        j["trials_used"] = rec.trials_used;
        j["fail_degree"] = rec.fail_degree;
        j["seed"] = rec.seed;
        print_doc(j);
    } else if (rec.found) {
        row("element", rec.ell.str());
        row("window", "[" + std::to_string(rec.window_lo) + ", " +
                          std::to_string(rec.window_hi) + "]");
        row("trials used", std::to_string(rec.trials_used));
        row("seed", std::to_string(rec.seed));
    } else {
        std::cout << "no superficial element after " << rec.trials_used
                  << " trials (last failure at degree " << rec.fail_degree << ")\n";
    }
    return rec.found ? 0 : 2;
}

template <class F>
int run_loewy(const F& field, const Options& o, const LocalInstance& inst) {
    auto data = materialize(field, inst);
    long long ll = 0, len = 0;
    try {
        ll = loewy_length(data.ring, data.ideal);
        len = local_length(data.ring, data.ideal);
    } catch (const std::domain_error& e) {
        std::cerr << "gradecone: " << e.what() << "\n";
        return 2;
    }
    if (o.json) {
        ojson j;
        j["loewy_length"] = ll;
        j["length"] = len;
        print_doc(j);
    } else {
        row("loewy length", std::to_string(ll), 14);
        row("length", std::to_string(len), 14);
    }
    return 0;
}

// The five certificate-style checkers share the CheckReport schema; the
// windowed vanishing check below reports its own shape.
template <class F>
CheckReport dispatch_check(const std::string& theorem, const F& field,
                           const LocalInstance& inst, const CheckOptions& co) {
    if (theorem == "thm-3.3") return check_alpha_drop(field, inst, co);
    if (theorem == "cor-3.4") return check_quasipure_cm(field, inst, co);
    if (theorem == "lem-4.2") return check_finite_pd_bounds(field, inst, co, false);
    if (theorem == "thm-4.3") return check_finite_pd_bounds(field, inst, co, true);
    if (theorem == "thm-5.7") return check_sci_bounds(field, inst, co);
    throw std::invalid_argument("unknown theorem '" + theorem + "'");
}

int lm_exit_code(WindowVerdict v) {
    switch (v) {
    case WindowVerdict::PassOnWindow: return 0;
    case WindowVerdict::NotApplicable: return 2;
    case WindowVerdict::Fail: return 3;
    }
    return 1;
}

template <class F>
int run_lm_check(const F& field, const Options& o, const LocalInstance& inst) {
    auto data = materialize(field, inst);
    auto [lo, hi] = parse_window(o.window);
    std::uint64_t seed = resolve_seed(o, inst.seed);
    auto cone = tangent_cone(data.ring, data.ideal);
    int dim = quotient_dimension(data.ring, cone);

    LmVanishingReport rep;
    std::vector<std::string> supers;
    if (dim >= 1) {
        auto seq =
            find_superficial_sequence(data.ring, data.ideal, dim, o.trials, lo, hi, seed);
        supers = poly_strings(seq.elems);
        if (!seq.complete) {
            rep.verdict = WindowVerdict::NotApplicable;
            rep.reason = "superficial element search exhausted its trials";
            rep.dim = dim;
            rep.cutoff = o.cutoff;
            rep.seed = seed;
        } else {
            rep = check_lm_vanishing(data.ring, data.ideal, seq.elems, {}, o.cutoff,
                                     o.trials, lo, hi, seed);
        }
    } else {
        rep = check_lm_vanishing(data.ring, data.ideal, {}, {}, o.cutoff, o.trials, lo, hi,
                                 seed);
    }

    std::string instance_name = detail::describe_instance(inst);
    if (o.json) {
        ojson j;
        j["theorem"] = "thm-3.1";
        j["instance"] = instance_name;
        j["seed"] = rep.seed;
        j["superficial"] = supers;
        j["dim"] = rep.dim;
        j["cutoff"] = rep.cutoff;
        j["margin"] = rep.margin;
        j["tail"] = {rep.tail_lo, rep.cutoff - rep.margin};
        j["min_index"] = rep.min_index;
        j["nonzero"] = ojson::array();
        for (const auto& t : rep.nonzero) j["nonzero"].push_back({t[0], t[1], t[2]});
        j["reason"] = rep.reason;
        j["verdict"] = window_verdict_name(rep.verdict);
        print_doc(j);
    } else {
        row("theorem", "thm-3.1", 13);
        row("instance", instance_name, 13);
        row("seed", std::to_string(rep.seed), 13);
        row("superficial", fmt_strings(supers), 13);
        row("dim", std::to_string(rep.dim), 13);
        row("cutoff", std::to_string(rep.cutoff), 13);
        row("margin", std::to_string(rep.margin), 13);
        row("tail", "[" + std::to_string(rep.tail_lo) + ", " +
                        std::to_string(rep.cutoff - rep.margin) + "]",
            13);
        row("min-index", std::to_string(rep.min_index), 13);
        std::string nz = "[";
        for (std::size_t i = 0; i < rep.nonzero.size(); ++i) {
            if (i) nz += ", ";
            nz += "(" + std::to_string(rep.nonzero[i][0]) + ", " +
                  std::to_string(rep.nonzero[i][1]) + ", " +
                  std::to_string(rep.nonzero[i][2]) + ")";
        }
        nz += "]";
        row("nonzero", nz, 13);
        if (!rep.reason.empty()) row("reason", rep.reason, 13);
        row("verdict", window_verdict_name(rep.verdict), 13);
    }
    return lm_exit_code(rep.verdict);
}

template <class F>
int run_check(const F& field, const Options& o, LocalInstance inst) {
    if (o.declare_cx) inst.declared_cx = *o.declare_cx;
    if (o.theorem == "thm-3.1") return run_lm_check(field, o, inst);

    auto [lo, hi] = parse_window(o.window);
    CheckOptions co;
    co.seed = seed_override(o);
    co.trials = o.trials;
    co.window_lo = lo;
    co.window_hi = hi;
    co.stages = o.stages;
    auto rep = dispatch_check(o.theorem, field, inst, co);
    if (o.json)
        std::cout << report_json(rep) << "\n";
    else
        std::cout << report_text(rep);
    return rep.exit_code();
}

int run_corpus(const Options& o) {
    CorpusParams params;
    params.nvars = o.nvars;
    params.max_degree = o.max_degree;
    params.count = o.count;
    params.kind = o.kind;
    std::uint64_t seed = resolve_seed(o, 1);
    auto insts = generate_corpus(params, seed);

    if (o.theorem.empty()) {
        if (o.json) {
            ojson arr = ojson::array();
            for (const auto& inst : insts) arr.push_back(ojson::parse(render_local_instance(inst)));
            print_doc(arr);
        } else {
            for (const auto& inst : insts)
                std::cout << ojson::parse(render_local_instance(inst)).dump() << "\n";
        }
        return 0;
    }

    auto [lo, hi] = parse_window(o.window);
    CheckOptions co;
    co.trials = o.trials;
    co.window_lo = lo;
    co.window_hi = hi;
    co.stages = o.stages;
    // each generated instance carries its own derived seed; the run seed
    // only picks the corpus

    std::vector<CheckReport> reps(insts.size());
    std::vector<std::string> errs(insts.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= insts.size()) break;
            try {
                with_field(field_spec(o, insts[i]), [&](auto field) {
                    reps[i] = dispatch_check(o.theorem, field, insts[i], co);
                    return 0;
                });
            } catch (const std::exception& e) {
                errs[i] = e.what();
            }
        }
    };
    int workers = std::max(1, o.workers);
    std::vector<std::thread> pool;
    for (int t = 1; t < workers; ++t) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();

    bool broken = false;
    for (std::size_t i = 0; i < errs.size(); ++i)
        if (!errs[i].empty()) {
            std::cerr << "gradecone: instance " << i << " (" << insts[i].name
                      << "): " << errs[i] << "\n";
            broken = true;
        }
    if (broken) return 1;

    std::map<std::string, int> tally{
        {"PASS", 0}, {"FAIL", 0}, {"VACUOUS", 0}, {"NOT-APPLICABLE", 0}};
    for (const auto& rep : reps) tally[verdict_name(rep.verdict)]++;

    if (o.json) {
        ojson j;
        j["theorem"] = o.theorem;
        j["kind"] = o.kind;
        j["seed"] = seed;
        j["count"] = insts.size();
        j["results"] = ojson::array();
        for (const auto& rep : reps) j["results"].push_back(ojson::parse(report_json(rep)));
        ojson s;
        s["PASS"] = tally["PASS"];
        s["FAIL"] = tally["FAIL"];
        s["VACUOUS"] = tally["VACUOUS"];
        s["NOT-APPLICABLE"] = tally["NOT-APPLICABLE"];
        j["summary"] = s;
        print_doc(j);
    } else {
        for (std::size_t i = 0; i < reps.size(); ++i)
            std::cout << i << " " << insts[i].name << " " << verdict_name(reps[i].verdict)
                      << "\n";
        std::cout << "checked " << reps.size() << " instances: PASS " << tally["PASS"]
                  << ", FAIL " << tally["FAIL"] << ", VACUOUS " << tally["VACUOUS"]
                  << ", NOT-APPLICABLE " << tally["NOT-APPLICABLE"] << "\n";
    }
    return tally["FAIL"] > 0 ? 3 : 0;
}

template <class Runner>
int with_instance(const Options& o, Runner&& r) {
    auto inst = load_instance(o.file);
    return with_field(field_spec(o, inst),
                      [&](auto field) { return r(field, inst); });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for local quotient rings: tangent cones, graded "
                 "resolutions, Hilbert data, Koszul depth, and theorem checkers"};
    app.require_subcommand(1);
    Options o;

    auto add_io = [&](CLI::App* s) {
        s->add_option("file", o.file, "instance JSON file, or - for stdin")->required();
        s->add_flag("--json", o.json, "emit one JSON document on stdout");
        s->add_option("--field", o.field,
                      "coefficient field, fp:<prime> or q (default: the instance's)");
    };
    auto add_window = [&](CLI::App* s) {
        s->add_option("--seed", o.seed, "seed (beats GRADECONE_SEED and the instance seed)");
        s->add_option("--trials", o.trials, "random candidates per superficial search");
        s->add_option("--window", o.window, "verification window <lo>:<hi>");
    };

    auto* gb = app.add_subcommand("gb", "Groebner basis of the instance ideal");
    add_io(gb);
    auto* nf = app.add_subcommand("nf", "normal form of a polynomial modulo the ideal");
    add_io(nf);
    nf->add_option("--poly", o.poly, "polynomial to reduce")->required();
    auto* tc = app.add_subcommand("tc", "tangent cone generators (initial ideal at the origin)");
    add_io(tc);
    auto* res = app.add_subcommand("res", "minimal graded free resolution of the cone quotient");
    add_io(res);
    auto* betti = app.add_subcommand("betti", "Betti table of the cone quotient with purity flags");
    add_io(betti);
    auto* hilbert = app.add_subcommand("hilbert", "Hilbert series data of the cone quotient");
    add_io(hilbert);
    hilbert->add_option("--cutoff", o.cutoff, "last Hilbert function value to print");
    auto* koszul = app.add_subcommand("koszul", "Koszul homology of the variables on the cone quotient");
    add_io(koszul);
    koszul->add_option("--cutoff", o.cutoff, "truncation degree");
    auto* depth = app.add_subcommand("depth", "depth via Koszul vanishing and via n - pd");
    add_io(depth);
    depth->add_option("--cutoff", o.cutoff, "truncation degree for the Koszul side");
    auto* superficial = app.add_subcommand("superficial", "find and verify a superficial element");
    add_io(superficial);
    add_window(superficial);
    auto* loewy = app.add_subcommand("loewy", "Loewy length and length of an Artinian quotient");
    add_io(loewy);

    const std::vector<std::string> all_theorems{"thm-3.1", "thm-3.3", "cor-3.4",
                                                "lem-4.2", "thm-4.3", "thm-5.7"};
    const std::vector<std::string> report_theorems{"thm-3.3", "cor-3.4", "lem-4.2",
                                                   "thm-4.3", "thm-5.7"};

    auto* check = app.add_subcommand("check", "run one theorem checker on the instance");
    add_io(check);
    add_window(check);
    check->add_option("--theorem", o.theorem, "which result to check")
        ->required()
        ->check(CLI::IsMember(all_theorems));
    check->add_option("--stages", o.stages, "resolution stages for complexity estimates");
    check->add_option("--cutoff", o.cutoff, "truncation degree for thm-3.1");
    check->add_option("--declare-cx", o.declare_cx, "override the instance's declared complexity");

    auto* corpus = app.add_subcommand("corpus", "generate a seeded instance corpus, optionally checking it");
    corpus->add_flag("--json", o.json, "emit one JSON document on stdout");
    corpus->add_option("--field", o.field, "coefficient field override for checking");
    corpus->add_option("--kind", o.kind, "instance family")
        ->check(CLI::IsMember({"monomial", "perturbed-homogeneous", "ci"}));
    corpus->add_option("--count", o.count, "number of instances");
    corpus->add_option("--nvars", o.nvars, "number of variables (2 or 3)");
    corpus->add_option("--max-degree", o.max_degree, "largest generator degree");
    corpus->add_option("--check", o.theorem, "run this checker over the corpus")
        ->check(CLI::IsMember(report_theorems));
    corpus->add_option("--workers", o.workers, "checker threads");
    corpus->add_option("--seed", o.seed, "corpus seed (beats GRADECONE_SEED; default 1)");
    corpus->add_option("--trials", o.trials, "random candidates per superficial search");
    corpus->add_option("--window", o.window, "verification window <lo>:<hi>");
    corpus->add_option("--stages", o.stages, "resolution stages for complexity estimates");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (gb->parsed())
            return with_instance(o, [&](auto f, const LocalInstance& i) { return run_gb(f, o, i); });
        if (nf->parsed())
            return with_instance(o, [&](auto f, const LocalInstance& i) { return run_nf(f, o, i); });
        if (tc->parsed())
            return with_instance(o, [&](auto f, const LocalInstance& i) { return run_tc(f, o, i); });
        if (res->parsed())
            return with_instance(o, [&](auto f, const LocalInstance& i) { return run_res(f, o, i); });
        if (betti->parsed())
            return with_instance(o, [&](auto f, const LocalInstance& i) { return run_betti(f, o, i); });
        if (hilbert->parsed())
            return with_instance(o, [&](auto f, const LocalInstance& i) { return run_hilbert(f, o, i); });
        if (koszul->parsed())
            return with_instance(o, [&](auto f, const LocalInstance& i) { return run_koszul(f, o, i); });
        if (depth->parsed())
            return with_instance(o, [&](auto f, const LocalInstance& i) { return run_depth(f, o, i); });
        if (superficial->parsed())
            return with_instance(o, [&](auto f, const LocalInstance& i) { return run_superficial(f, o, i); });
        if (loewy->parsed())
            return with_instance(o, [&](auto f, const LocalInstance& i) { return run_loewy(f, o, i); });
        if (check->parsed())
            return with_instance(o, [&](auto f, const LocalInstance& i) { return run_check(f, o, i); });
        if (corpus->parsed()) return run_corpus(o);
    } catch (const std::exception& e) {
        std::cerr << "gradecone: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
