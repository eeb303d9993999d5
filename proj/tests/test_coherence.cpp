#include "helpers.hpp"

using namespace bft;
using namespace braidforge::examples;

namespace {

void require_all_pass(const std::vector<Report>& reports)
{
    for (const auto& r : reports) {
        CAPTURE(r.suite);
        for (const auto* e : r.failures())
            FAIL_CHECK(e->axiom << " residual " << e->residual << " " << e->note);
        CHECK(r.passed());
    }
}

const Report& suite(const std::vector<Report>& rs, const std::string& name)
{
    for (const auto& r : rs)
        if (r.suite == name)
            return r;
    throw Error("missing suite " + name);
}

}  // namespace

TEST_CASE("Ising: every suite passes with full pattern coverage")
{
    const Example e = ising_example();
    const auto rs = run_all_suites(e.category, GeneratorSet(e.generators));
    require_all_pass(rs);
    CHECK(suite(rs, "pentagon").count_run() == 256);
    CHECK(suite(rs, "pentagon").coverage.size() == 16);
    CHECK(suite(rs, "hexagon").coverage.size() == 8);
    CHECK(suite(rs, "hexagon").count_run() == 2 * 64);
    CHECK(suite(rs, "triangle").count_run() == 16);
    CHECK_FALSE(suite(rs, "ribbon").skipped);
}

TEST_CASE("SF n=1 with odd objects")
{
    const GCategory c = symplectic_fermions(1);
    const auto rs = run_all_suites(c, GeneratorSet(sf_generators(c, true)));
    require_all_pass(rs);
    CHECK(suite(rs, "pentagon").count_run() == 625);
}

TEST_CASE("Sweedler: pentagon and triangle, braided suites skipped")
{
    const Example e = sweedler_example();
    const auto rs = run_all_suites(e.category, GeneratorSet(e.generators));
    require_all_pass(rs);
    CHECK(suite(rs, "pentagon").coverage.size() == 16);
    CHECK(suite(rs, "hexagon").skipped);
    CHECK(suite(rs, "ribbon").skipped);
}

TEST_CASE("serial reference and parallel runner produce identical reports")
{
    const Example e = sf_example(1);
    SuiteOptions ser, par;
    ser.exec = Exec::Serial;
    par.exec = Exec::Parallel;
    ser.seed = par.seed = 5;
    const auto a = run_all_suites(e.category, GeneratorSet(e.generators), ser);
    const auto b = run_all_suites(e.category, GeneratorSet(e.generators), par);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        REQUIRE(a[i].entries.size() == b[i].entries.size());
        for (std::size_t k = 0; k < a[i].entries.size(); ++k) {
            CHECK(a[i].entries[k].labels == b[i].entries[k].labels);
            CHECK(a[i].entries[k].axiom == b[i].entries[k].axiom);
            CHECK(a[i].entries[k].note == b[i].entries[k].note);
            CHECK(a[i].entries[k].residual == b[i].entries[k].residual);
        }
    }
}

TEST_CASE("naturality samples depend only on the seed")
{
    const Example e = ising_example();
    SuiteOptions o;
    o.seed = 3;
    const Report a = naturality_suite(e.category, GeneratorSet(e.generators), o);
    const Report b = naturality_suite(e.category, GeneratorSet(e.generators), o);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t k = 0; k < a.entries.size(); ++k)
        CHECK(a.entries[k].residual == b.entries[k].residual);
    // non-identity morphisms between distinct generators are exercised
    bool cross = false;
    for (const auto& en : a.entries)
        cross = cross || en.note.find("f:H->1") != std::string::npos;
    CHECK(cross);
}

TEST_CASE("dimension cap produces explicit skip entries")
{
    const Example e = sf_example(1);
    SuiteOptions o;
    o.dim_cap = 16;
    const Report r = pentagon_suite(e.category, GeneratorSet(e.generators), o);
    CHECK(r.count_skipped() > 0);
    CHECK(r.count_run() + r.count_skipped() == 256);
    CHECK(r.passed());
    for (const auto& en : r.entries)
        if (en.skipped)
            CHECK(en.note.find("exceeds cap") != std::string::npos);
}

TEST_CASE("generator sets must contain the unit and a degree-1 object")
{
    const GCategory c = ising();
    const auto g = ty_generators(c, ising_params());
    CHECK_NOTHROW(GeneratorSet(g).validate(c));
    CHECK_THROWS_AS(GeneratorSet({g[1], g[2], g[3]}).validate(c), ShapeError);
    CHECK_THROWS_AS(GeneratorSet({g[0], g[1], g[2]}).validate(c), ShapeError);
}

TEST_CASE("negative control: lambda scaled by 1% in SF")
{
    const GCategory good = symplectic_fermions(1);
    AssocData a = good.assoc();
    a.lambda = Scalar(1.01) * a.lambda;
    const GCategory bad = GCategory::unchecked(good.hopf(), a, good.braid(), Ambient::SVect);
    CHECK_FALSE(bad.validation().find("assoc.normalization")->pass);
    const Report r = pentagon_suite(bad, GeneratorSet(sf_generators(bad)));
    CHECK_FALSE(r.passed());
    // every failing quadruple has at least three degree-1 objects
    for (const auto* e : r.failures())
        CHECK(std::count(e->pattern.begin(), e->pattern.end(), '1') >= 3);
}

TEST_CASE("negative control: beta sign flip in Ising")
{
    const GCategory good = ising();
    BraidData b = *good.braid();
    b.beta = -b.beta;
    const GCategory flipped = GCategory::create(good.hopf(), good.assoc(), b, Ambient::Vect);
    // hexagons and ribbon cannot see the sign of beta
    const auto g = GeneratorSet(ty_generators(flipped, ising_params()));
    CHECK(hexagon_suite(flipped, g).passed());
    CHECK(ribbon_suite(flipped, g).passed());
    // the conformal weights can
    const Report w = ising_conformal_weights(flipped);
    CHECK_FALSE(w.passed());
    CHECK_FALSE(w.find("conformal.c_mm_channel_1")->pass);
    CHECK_FALSE(ty_specialization(flipped, ising_params()).find("eq3.c_mm_channels")->pass);
}

TEST_CASE("negative control: one corrupted multiplication entry")
{
    const GCategory good = ising();
    HopfData h = good.hopf();
    Matrix mu = h.mu.matrix();
    // delta_1 delta_1 = 1.001 delta_1 stays associative but breaks the unit
    mu(1, 1 * 2 + 1) += 1e-3;
    h.mu = Mor(h.mu.source(), h.mu.target(), mu);
    const GCategory bad = GCategory::unchecked(h, good.assoc(), good.braid(), Ambient::Vect);
    CHECK_FALSE(bad.valid());
    CHECK(bad.validation().find("hopf.assoc")->pass);
    CHECK_FALSE(bad.validation().find("hopf.unit.left")->pass);
    const Report r = pentagon_suite(bad, GeneratorSet(ty_generators(bad, ising_params())));
    CHECK_FALSE(r.passed());
}
