#include "doctest.h"

#include <algorithm>

#include "fnet/consistency.hpp"
#include "fnet/parser.hpp"

#include "generators.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace fnet;

namespace {

struct Fixture {
    Model model;
    const FunctionNet* net;
    Fixture() : model(testutil::parse_ok(testutil::figures_text())) {
        net = model.find_net("CarComfort");
    }
};

std::vector<std::string> conditions(const ConsistencyReport& report) {
    std::vector<std::string> out;
    for (const auto& f : report.findings) out.push_back(f.condition);
    return out;
}

View parse_view(const std::string& text) {
    ParseResult pr = parse_model_syntax(text);
    REQUIRE(pr.ok());
    for (auto& el : pr.model.elements)
        if (auto* v = std::get_if<View>(&el)) return *v;
    FAIL("no view in input");
    return {};
}

}  // namespace

TEST_CASE_FIXTURE(Fixture, "the example views are consistent with the net") {
    ConsistencyReport r1 = check_view(*model.find_view("AutoLock"), *net);
    for (const auto& f : r1.findings) MESSAGE(f.condition << ": " << f.message);
    CHECK(r1.consistent());
    CHECK(check_view(*model.find_view("AutoLockBasic"), *net).consistent());
}

TEST_CASE_FIXTURE(Fixture, "a view mirroring the whole net is consistent") {
    View v = parse_view(
        "view All on CarComfort {\n"
        "  block CLRequestProc { block ButtonOn block ButtonOff block Arbiter }\n"
        "  block EvalSpeed\n"
        "  block CentralSettingsUnit\n"
        "  block VehicleState\n"
        "  block left\n"
        "  block right\n"
        "  connect VehicleSpeed : VehicleState -> EvalSpeed\n"
        "}\n");
    ConsistencyReport r = check_view(v, *net);
    for (const auto& f : r.findings) MESSAGE(f.condition << ": " << f.message);
    CHECK(r.consistent());
}

TEST_CASE_FIXTURE(Fixture, "condition 1: unknown and ambiguous names") {
    View v = parse_view("view V on CarComfort { block EvalSpeed block Bogus }");
    CHECK(conditions(check_view(v, *net)) == std::vector<std::string>{"C1"});

    View amb = parse_view("view V on CarComfort { block LockCtrl }");
    ConsistencyReport r = check_view(amb, *net);
    REQUIRE(conditions(r) == std::vector<std::string>{"C1"});
    CHECK(r.findings[0].message.find("ambiguous") != std::string::npos);
}

TEST_CASE_FIXTURE(Fixture, "condition 2: drawn nesting must exist in the net") {
    View v = parse_view(
        "view V on CarComfort { block EvalSpeed { block VehicleState } }");
    CHECK(conditions(check_view(v, *net)) == std::vector<std::string>{"C2"});

    // nesting may skip levels: the net relationship is transitive
    View deep = parse_view(
        "view V on CarComfort { block CLRequestProc { block ButtonOn } }");
    CHECK(check_view(deep, *net).consistent());
}

TEST_CASE_FIXTURE(Fixture, "condition 3: net containment must be drawn") {
    View v = parse_view(
        "view V on CarComfort { block CLRequestProc block ButtonOn }");
    CHECK(conditions(check_view(v, *net)) == std::vector<std::string>{"C3"});
    // an inverted pair violates both directions
    View inv = parse_view(
        "view V on CarComfort { block ButtonOn { block CLRequestProc } }");
    auto conds = conditions(check_view(inv, *net));
    CHECK(std::count(conds.begin(), conds.end(), "C2") == 1);
    CHECK(std::count(conds.begin(), conds.end(), "C3") == 1);
}

TEST_CASE_FIXTURE(Fixture, "condition 4: phantom communication") {
    View v = parse_view(
        "view V on CarComfort { block EvalSpeed block VehicleState\n"
        "  connect Ghost : VehicleState -> EvalSpeed }");
    CHECK(conditions(check_view(v, *net)) == std::vector<std::string>{"C4"});

    // one view connector may not merge the labels of two net connectors
    View merged = parse_view(
        "view V on CarComfort { block EvalSpeed block VehicleState block CentralSettingsUnit\n"
        "  connect VehicleSpeed, AutoLockStatus : VehicleState -> EvalSpeed }");
    auto conds = conditions(check_view(merged, *net));
    CHECK(std::count(conds.begin(), conds.end(), "C4") == 1);
}

TEST_CASE_FIXTURE(Fixture, "condition 5: existing signal between the wrong blocks") {
    View v = parse_view(
        "view V on CarComfort { block Arbiter block VehicleState\n"
        "  connect VehicleSpeed : VehicleState -> Arbiter }");
    CHECK(conditions(check_view(v, *net)) == std::vector<std::string>{"C5"});

    View reversed = parse_view(
        "view V on CarComfort { block EvalSpeed block VehicleState\n"
        "  connect VehicleSpeed : EvalSpeed -> VehicleState }");
    CHECK(conditions(check_view(reversed, *net)) == std::vector<std::string>{"C5"});
}

TEST_CASE_FIXTURE(Fixture, "condition 5: superblock lifting") {
    // CmdOpenClose really ends at left.LockCtrl; showing it at 'left' is fine
    // as long as LockCtrl itself is not in the view
    View lifted = parse_view(
        "view V on CarComfort { block Arbiter block left\n"
        "  connect CmdOpenClose : Arbiter -> left }");
    ConsistencyReport r = check_view(lifted, *net);
    CHECK(r.consistent());
    REQUIRE(r.notes.size() == 1);
    CHECK(r.notes[0].find("lifting") != std::string::npos);

    // once the exact endpoint is shown, the lifted connector is wrong
    ParseResult pr = parse_model(
        "net A { block P { block Q { } } block R { } connect S : R -> Q }\n"
        "view W on A { block R block P { block Q }\n"
        "  connect S : R -> P }\n");
    REQUIRE(pr.ok());
    const FunctionNet* small = pr.model.find_net("A");
    CHECK(conditions(check_view(*pr.model.find_view("W"), *small)) ==
          std::vector<std::string>{"C5"});

    View without_q = parse_view("view W2 on A { block R block P\n  connect S : R -> P }");
    ConsistencyReport ok = check_view(without_q, *small);
    CHECK(ok.consistent());
    CHECK(ok.notes.size() == 1);
}

TEST_CASE_FIXTURE(Fixture, "links to environment blocks are exempt") {
    View v = parse_view(
        "view V on CarComfort { block left env Actuator\n"
        "  mech : left -> Actuator\n"
        "  connect Anything : left -> Actuator }");
    CHECK(check_view(v, *net).consistent());
}

TEST_CASE_FIXTURE(Fixture, "a view for a different net is a usage error") {
    View v = parse_view("view V on SomewhereElse { block X }");
    CHECK_THROWS_AS(check_view(v, *net), Error);
}

TEST_CASE("match_connector details") {
    Model m = testutil::parse_ok(testutil::figures_text());
    const FunctionNet* net = m.find_net("CarComfort");
    NetIndex index(*net);
    auto occ = [&](const char* name) {
        Resolution r = index.resolve({name});
        REQUIRE(r.status == ResolveStatus::Ok);
        return r.occurrence;
    };

    MatchResult exact = match_connector(occ("EvalSpeed"), occ("Arbiter"),
                                        {"LockRequest"}, index, {});
    CHECK(exact.matched);
    CHECK_FALSE(exact.lifted_source);
    CHECK_FALSE(exact.lifted_target);
    CHECK(net->connectors[exact.net_connector].signals ==
          std::vector<std::string>{"LockRequest"});

    MatchResult lifted = match_connector(occ("EvalSpeed"), occ("CLRequestProc"),
                                         {"LockRequest"}, index, {});
    CHECK(lifted.matched);
    CHECK(lifted.lifted_target);

    MatchResult barred = match_connector(
        occ("EvalSpeed"), occ("CLRequestProc"), {"LockRequest"}, index,
        {"CarComfort.CLRequestProc.Arbiter"});
    CHECK_FALSE(barred.matched);
    CHECK(barred.signal_candidates);

    MatchResult phantom = match_connector(occ("EvalSpeed"), occ("Arbiter"),
                                          {"Ghost"}, index, {});
    CHECK_FALSE(phantom.matched);
    CHECK_FALSE(phantom.signal_candidates);
}

TEST_CASE_FIXTURE(Fixture, "condition 6: the example variant specializes its feature view") {
    ConsistencyReport r = check_specialization(*model.find_view("AutoLockBasic"),
                                               *model.find_view("AutoLock"), *net);
    for (const auto& f : r.findings) MESSAGE(f.condition << ": " << f.message);
    CHECK(r.consistent());
}

TEST_CASE_FIXTURE(Fixture, "condition 6 violations") {
    const View* base = model.find_view("AutoLock");

    View extra = parse_view(
        "view V on CarComfort { block EvalSpeed block Arbiter block ButtonOn }");
    auto conds = conditions(check_specialization(extra, *base, *net));
    CHECK(std::count(conds.begin(), conds.end(), "C6") == 1);

    // same block, different marker
    View marker = parse_view("view V on CarComfort { ext EvalSpeed }");
    conds = conditions(check_specialization(marker, *base, *net));
    CHECK(std::count(conds.begin(), conds.end(), "C6") == 1);

    // a connector the feature view does not show
    View conn = parse_view(
        "view V on CarComfort { block EvalSpeed ext CentralSettingsUnit\n"
        "  connect AutoLockStatus : EvalSpeed -> CentralSettingsUnit }");
    ConsistencyReport r = check_specialization(conn, *base, *net);
    conds = conditions(r);
    CHECK(std::count(conds.begin(), conds.end(), "C6") == 1);
}

TEST_CASE_FIXTURE(Fixture, "specialization is reflexive on consistent views") {
    for (const char* name : {"AutoLock", "AutoLockBasic"}) {
        const View* v = model.find_view(name);
        CHECK(check_specialization(*v, *v, *net).consistent());
    }
}

TEST_CASE("validate_view flags local defects") {
    auto has = [](const Diagnostics& d, const std::string& rule) {
        return std::any_of(d.begin(), d.end(),
                           [&](const Diagnostic& x) { return x.rule == rule; });
    };
    View dup = parse_view("view V on N { block A block A }");
    CHECK(has(validate_view(dup), "DUPLICATE_VIEW_BLOCK"));
    View dangling = parse_view("view V on N { block A\n  connect S : A -> B }");
    CHECK(has(validate_view(dangling), "UNKNOWN_VIEW_ENDPOINT"));
    View mhe = parse_view("view V on N { block A block B\n  mech S : A -> B }");
    CHECK(has(validate_view(mhe), "MHE_SIGNALS"));
}

TEST_CASE("property: the checker agrees with the brute force oracle") {
    gen::Rng rng(990011);
    int inconsistent = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        gen::NetInfo info = gen::random_net(rng, 8);
        View view = gen::random_view(rng, info);
        bool expected = oracle::consistent(view, info.net);
        ConsistencyReport got = check_view(view, info.net);
        if (got.consistent() != expected) {
            MESSAGE("iteration " << iter);
            for (const auto& f : got.findings) MESSAGE(f.condition << ": " << f.message);
        }
        REQUIRE(got.consistent() == expected);
        if (!expected) ++inconsistent;
    }
    // the generator must actually exercise both outcomes
    CHECK(inconsistent > 50);
    CHECK(inconsistent < 980);
}

TEST_CASE("property: dropping an unrelated block never breaks consistency of others") {
    // findings are attributed to the blocks and connectors that cause them:
    // a consistent view stays consistent when a block without connectors and
    // without nesting relationships to the rest is added as an env block
    gen::Rng rng(990012);
    for (int iter = 0; iter < 200; ++iter) {
        gen::NetInfo info = gen::random_net(rng, 6);
        View view = gen::random_view(rng, info);
        bool before = check_view(view, info.net).consistent();
        View extended = view;
        ViewBlock env;
        env.marker = Marker::Env;
        env.name = "Outside";
        extended.blocks.push_back(env);
        CHECK(check_view(extended, info.net).consistent() == before);
    }
}
