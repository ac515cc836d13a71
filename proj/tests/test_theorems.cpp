#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "gradecone/report.hpp"
#include "gradecone/theorems.hpp"

using namespace gradecone;

namespace {

FpContext field{32003};

LocalInstance plane_instance(std::vector<std::string> ideal) {
    LocalInstance inst;
    inst.vars = {"x", "y"};
    inst.ideal = std::move(ideal);
    return inst;
}

CheckOptions seeded() {
    CheckOptions opts;
    opts.seed = 42;
    return opts;
}

const Hypothesis* find_hyp(const CheckReport& rep, const std::string& name) {
    for (const auto& h : rep.hypotheses)
        if (h.name == name) return &h;
    return nullptr;
}

const InvariantEntry& find_inv(const CheckReport& rep, const std::string& key) {
    for (const auto& e : rep.invariants)
        if (e.key == key) return e;
    static InvariantEntry missing;
    FAIL_CHECK("missing invariant " << key);
    return missing;
}

long long inv_num(const CheckReport& rep, const std::string& key) {
    return find_inv(rep, key).num;
}

} // namespace

TEST_CASE("alpha drop checker on the worked quotients") {
    SUBCASE("depth-zero module: hypothesis fails") {
        auto rep = check_alpha_drop(field, plane_instance({"x^2", "x*y"}), seeded());
        CHECK(rep.verdict == Verdict::NotApplicable);
        auto* h = find_hyp(rep, "module-cohen-macaulay");
        REQUIRE(h != nullptr);
        CHECK_FALSE(h->holds);
        CHECK(rep.exit_code() == 2);
    }

    SUBCASE("residue field: CM on both sides, nothing to conclude") {
        auto rep = check_alpha_drop(field, plane_instance({"x", "y"}), seeded());
        CHECK(rep.verdict == Verdict::Vacuous);
        CHECK(rep.exit_code() == 0);
    }

    SUBCASE("cusp: cone is CM too") {
        auto rep = check_alpha_drop(field, plane_instance({"x^2 - y^3"}), seeded());
        CHECK(rep.verdict == Verdict::Vacuous);
    }

    SUBCASE("space curve with a bad cone: the last shift drops") {
        LocalInstance inst;
        inst.vars = {"x", "y", "z"};
        inst.ideal = {"x^4 - y*z", "y^3 - x*z", "z^2 - x^3*y^2"};
        auto rep = check_alpha_drop(field, inst, seeded());
        CHECK(rep.verdict == Verdict::Pass);
        CHECK(inv_num(rep, "alpha-drop") == 1);
        CHECK(rep.exit_code() == 0);
    }
}

TEST_CASE("quasi-pure resolution forces a CM cone") {
    SUBCASE("quasi-pure artinian example passes") {
        auto rep = check_quasipure_cm(field, plane_instance({"x^3", "x^2*y", "y^4"}), seeded());
        CHECK(rep.verdict == Verdict::Pass);
        CHECK(inv_num(rep, "quasi-pure") == 1);
    }

    SUBCASE("gapped staircase is not quasi-pure: vacuous") {
        auto rep = check_quasipure_cm(field, plane_instance({"x^2", "x*y", "y^5"}), seeded());
        CHECK(rep.verdict == Verdict::Vacuous);
        CHECK(inv_num(rep, "quasi-pure") == 0);
    }
}

TEST_CASE("finite projective dimension bounds on hypersurfaces") {
    LocalInstance h2;
    h2.vars = {"x", "y"};
    h2.base = {"x^2 + y^2"};
    LocalInstance h3;
    h3.vars = {"x", "y"};
    h3.base = {"x^3 - y^4"};

    SUBCASE("order two: e0 = 2, e1 = 1") {
        auto rep = check_finite_pd_bounds(field, h2, seeded(), false);
        CHECK(rep.verdict == Verdict::Pass);
        CHECK(inv_num(rep, "e0") == 2);
        CHECK(inv_num(rep, "e1") == 1);
        CHECK(inv_num(rep, "c-reg") == 1);
    }

    SUBCASE("order three: e0 = 3, e1 = 3") {
        auto rep = check_finite_pd_bounds(field, h3, seeded(), false);
        CHECK(rep.verdict == Verdict::Pass);
        CHECK(inv_num(rep, "e0") == 3);
        CHECK(inv_num(rep, "e1") == 3);
        CHECK(inv_num(rep, "c-reg") == 2);
    }

    SUBCASE("equality clause fires on both and certifies a CM cone") {
        for (const auto* inst : {&h2, &h3}) {
            auto rep = check_finite_pd_bounds(field, *inst, seeded(), true);
            CHECK(rep.verdict == Verdict::Pass);
            auto* eq = find_hyp(rep, "e1-equality");
            REQUIRE(eq != nullptr);
            CHECK(eq->holds);
            CHECK(inv_num(rep, "graded-cm") == 1);
        }
    }

    SUBCASE("no base sequence: not applicable") {
        auto rep = check_finite_pd_bounds(field, plane_instance({"x^2 - y^3"}), seeded(), false);
        CHECK(rep.verdict == Verdict::NotApplicable);
    }
}

TEST_CASE("complexity-bounded intersection checker") {
    LocalInstance ci22;
    ci22.vars = {"x", "y"};
    ci22.base = {"x^2", "y^2"};
    ci22.module = {"x"};
    ci22.declared_cx = 1;

    SUBCASE("declared complexity one") {
        auto rep = check_sci_bounds(field, ci22, seeded());
        CHECK(rep.verdict == Verdict::Pass);
        CHECK(find_inv(rep, "cx-source").text == "DECLARED");
        CHECK(inv_num(rep, "cx") == 1);
        CHECK(inv_num(rep, "alpha-bound") == 1);
        CHECK(inv_num(rep, "e0") == 2);
        CHECK(inv_num(rep, "e1") == 1);
        CHECK(inv_num(rep, "mu") == 1);

        auto stages = find_inv(rep, "stage-betti").list;
        REQUIRE(stages.size() >= 6);
        for (std::size_t i = 0; i + 1 < stages.size(); ++i) CHECK(stages[i] == 1);
        CHECK(inv_num(rep, "cx-estimated") == 1);
        CHECK(inv_num(rep, "cx-estimate-stable") == 1);
    }

    SUBCASE("estimator agrees when nothing is declared") {
        LocalInstance est = ci22;
        est.declared_cx.reset();
        auto rep = check_sci_bounds(field, est, seeded());
        CHECK(rep.verdict == Verdict::Pass);
        CHECK(find_inv(rep, "cx-source").text == "ESTIMATED");
        CHECK(inv_num(rep, "cx") == 1);
    }
}

TEST_CASE("reports replay byte for byte") {
    LocalInstance ci22;
    ci22.vars = {"x", "y"};
    ci22.base = {"x^2", "y^2"};
    ci22.module = {"x"};
    ci22.declared_cx = 1;

    auto a = report_json(check_sci_bounds(field, ci22, seeded()));
    auto b = report_json(check_sci_bounds(field, ci22, seeded()));
    CHECK(a == b);

    auto rep = check_alpha_drop(field, plane_instance({"x^2", "x*y"}), seeded());
    auto text = report_text(rep);
    CHECK(text.find("theorem   thm-3.3") != std::string::npos);
    CHECK(text.find("verdict   NOT-APPLICABLE") != std::string::npos);
}

TEST_CASE("instance files round-trip") {
    LocalInstance inst;
    inst.name = "ci22";
    inst.vars = {"x", "y"};
    inst.base = {"x^2", "y^2"};
    inst.module = {"x"};
    inst.declared_cx = 1;
    inst.seed = 7;

    auto back = parse_local_instance(render_local_instance(inst));
    CHECK(back.name == inst.name);
    CHECK(back.vars == inst.vars);
    CHECK(back.base == inst.base);
    CHECK(back.module == inst.module);
    CHECK(back.declared_cx == inst.declared_cx);
    CHECK(back.seed == inst.seed);

    SUBCASE("malformed input is rejected with context") {
        CHECK_THROWS_AS(parse_local_instance("{"), std::invalid_argument);
        CHECK_THROWS_AS(parse_local_instance("[]"), std::invalid_argument);
        CHECK_THROWS_AS(parse_local_instance(R"({"vars": ["x"], "idel": []})"),
                        std::invalid_argument);
        CHECK_THROWS_AS(parse_local_instance(R"({"vars": []})"), std::invalid_argument);
    }
}

TEST_CASE("corpus generation is deterministic and seeded") {
    CorpusParams cp;
    cp.nvars = 2;
    cp.count = 6;
    cp.kind = "monomial";
    auto a = generate_corpus(cp, 11);
    auto b = generate_corpus(cp, 11);
    auto c = generate_corpus(cp, 12);
    REQUIRE(a.size() == 6);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(render_local_instance(a[i]) == render_local_instance(b[i]));
        CHECK(a[i].seed != 0);
    }
    bool differs = false;
    for (std::size_t i = 0; i < a.size(); ++i)
        differs = differs || render_local_instance(a[i]) != render_local_instance(c[i]);
    CHECK(differs);

    SUBCASE("bad parameters are rejected") {
        CorpusParams bad = cp;
        bad.nvars = 5;
        CHECK_THROWS_AS(generate_corpus(bad, 1), std::invalid_argument);
        bad = cp;
        bad.kind = "mystery";
        CHECK_THROWS_AS(generate_corpus(bad, 1), std::invalid_argument);
    }
}

TEST_CASE("ci corpus never fails the intersection checker") {
    CorpusParams cp;
    cp.nvars = 2;
    cp.count = 12;
    cp.kind = "ci";
    auto insts = generate_corpus(cp, 7);
    std::map<std::string, int> tally;
    for (const auto& inst : insts)
        tally[verdict_name(check_sci_bounds(field, inst, CheckOptions{}).verdict)]++;
    CHECK(tally["FAIL"] == 0);
    CHECK(tally["PASS"] >= 6);
}

TEST_CASE("curve corpus exercises the alpha drop") {
    CorpusParams cp;
    cp.nvars = 3;
    cp.count = 20;
    cp.kind = "perturbed-homogeneous";
    auto insts = generate_corpus(cp, 1);
    REQUIRE(insts.size() == 20);
    std::map<std::string, int> seen;
    int pass = 0, fail = 0;
    for (const auto& inst : insts) {
        seen[inst.name]++;
        auto rep = check_alpha_drop(field, inst, CheckOptions{});
        if (rep.verdict == Verdict::Pass) ++pass;
        if (rep.verdict == Verdict::Fail) ++fail;
    }
    CHECK(seen.size() == 20); // drawn without replacement
    CHECK(fail == 0);
    CHECK(pass == 20);
}
