#include "helpers.hpp"

#include "braidforge/specfile.hpp"

using namespace bft;
using namespace braidforge::examples;
using namespace braidforge::io;
using nlohmann::json;

namespace {

RunResult run_example(const Example& e, std::uint64_t seed = 0)
{
    SuiteOptions o;
    o.seed = seed;
    return run_verification(e.name, e.category, e.generators, e.checks, o);
}

RunResult run_roundtrip(const Example& e, std::uint64_t seed = 0)
{
    const json j = json::parse(canonical(spec_to_json(spec_from_category(e.category, e.generators))));
    const Built b = build(parse_spec(j), kDefaultTol);
    REQUIRE(b.category.has_value());
    SuiteOptions o;
    o.seed = seed;
    return run_verification("file", *b.category, b.generators, Report("named_checks", o.tol), o);
}

}  // namespace

TEST_CASE("export, parse and rebuild preserve verdicts")
{
    std::vector<Example> ex;
    ex.push_back(ising_example());
    ex.push_back(sf_example(1));
    ex.push_back(sweedler_example());
    for (const Example& e : ex) {
        CAPTURE(e.name);
        const RunResult a = run_example(e, 4), b = run_roundtrip(e, 4);
        CHECK(a.passed() == b.passed());
        CHECK(a.generators == b.generators);
        CHECK(std::abs(a.data_checks.max_residual() - b.data_checks.max_residual()) < 1e-12);
        REQUIRE(a.suites.size() == b.suites.size());
        for (std::size_t i = 0; i < a.suites.size(); ++i) {
            CAPTURE(a.suites[i].suite);
            CHECK(a.suites[i].passed() == b.suites[i].passed());
            CHECK(a.suites[i].count_run() == b.suites[i].count_run());
            CHECK(std::abs(a.suites[i].max_residual() - b.suites[i].max_residual()) < 1e-12);
        }
        // canonical SpecFile text is a fixed point of the round trip
        const SpecFile s = spec_from_category(e.category, e.generators);
        const std::string once = canonical(spec_to_json(s));
        CHECK(canonical(spec_to_json(parse_spec(json::parse(once)))) == once);
    }
}

TEST_CASE("malformed spec files name the offending tensor")
{
    const json good = spec_to_json(spec_from_category(ising(), {}));
    auto message = [](const json& j) -> std::string {
        try {
            const SpecFile s = parse_spec(j);
            build(s, kDefaultTol);
        } catch (const InputError& e) {
            return e.what();
        }
        return "";
    };
    json j = good;
    j.erase("delta");
    CHECK(message(j).find("'delta'") != std::string::npos);
    j = good;
    j["mu"][0][0] = json::array({1.0});
    CHECK(message(j).find("mu") != std::string::npos);
    j = good;
    j["eps"] = json::array({json::array({1, 0})});
    CHECK(message(j).find("eps") != std::string::npos);
    j = good;
    j["ambient"] = "hilbert";
    CHECK(message(j).find("ambient") != std::string::npos);
    j = good;
    j["beta"] = "x";
    CHECK(message(j).find("beta") != std::string::npos);
    j = good;
    j["generators"] = json::array({json{{"kind", "wormhole"}}});
    CHECK(message(j).find("wormhole") != std::string::npos);
    CHECK(message(json::array()).find("top level") != std::string::npos);
}

TEST_CASE("corrupted coproduct fails coassociativity and skips the suites")
{
    json j = spec_to_json(spec_from_category(ising(), {}));
    j["delta"][0][1][0] = json::array({0.25, 0.0});
    const Built b = build(parse_spec(j), kDefaultTol);
    REQUIRE(b.category.has_value());
    CHECK_FALSE(b.hopf_checks.passed());
    CHECK_FALSE(b.hopf_checks.find("coassoc")->pass);
    SuiteOptions o;
    const RunResult r = run_verification("file", *b.category, b.generators, Report("named_checks", o.tol), o);
    CHECK_FALSE(r.passed());
    for (const auto& s : r.suites)
        CHECK(s.skipped);
    CHECK(run_json(r)["verdict"] == "fail");
}

TEST_CASE("hashing and canonical JSON")
{
    CHECK(fnv1a64("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(hex64(0xabcULL) == "0000000000000abc");
    const json j = json::parse(R"({"b": 1, "a": [1.5, {"d": 0, "c": 2}]})");
    const std::string s = canonical(j);
    CHECK(s.find("\"a\"") < s.find("\"b\""));
    CHECK(canonical(json::parse(s)) == s);
    CHECK(complex_json(Scalar(-0.0, -0.0)) == json::array({0.0, 0.0}));
    CHECK(std::signbit(complex_json(Scalar(-0.0, 1.0))[0].get<double>()) == false);
}

TEST_CASE("report documents render as text")
{
    const Example good = ising_example();
    const RunResult r = run_example(good);
    const json j = run_json(r);
    CHECK(j["verdict"] == "pass");
    CHECK(j["input_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
    const std::string t = render_text(j);
    for (const char* s : {"pentagon", "triangle", "hexagon", "naturality", "ribbon", "verdict pass"})
        CHECK(t.find(s) != std::string::npos);
    CHECK(t.find("failures") == std::string::npos);

    // a failing run lists failures with their object labels
    const GCategory c = ising();
    BraidData b = *c.braid();
    b.beta = -b.beta;
    Example bad{"ising", GCategory::create(c.hopf(), c.assoc(), b, Ambient::Vect), {}, {}};
    bad.generators = ty_generators(bad.category, ising_params());
    bad.checks = ising_conformal_weights(bad.category);
    const std::string tb = render_text(run_json(run_example(bad)));
    CHECK(tb.find("verdict fail") != std::string::npos);
    CHECK(tb.find("conformal.c_mm_channel_1") != std::string::npos);

    CHECK_THROWS_AS(render_text(json{{"tool", "other"}}), InputError);
    CHECK_THROWS_AS(check_report_file(json::array()), InputError);
}

TEST_CASE("run documents are deterministic for a fixed seed")
{
    const Example e = sf_example(1);
    CHECK(canonical(run_json(run_example(e, 7))) == canonical(run_json(run_example(e, 7))));
    CHECK(category_digest(e.category, e.generators) == category_digest(e.category, e.generators));
}
