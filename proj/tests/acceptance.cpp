// Acceptance run: one line per criterion.  argv[1] is the braidforge executable.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include <unistd.h>

#include "braidforge/coherence.hpp"
#include "braidforge/examples.hpp"
#include "braidforge/specfile.hpp"

using namespace braidforge;
using namespace braidforge::examples;
namespace fs = std::filesystem;

namespace {

constexpr double kTol = 1e-9;

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool entry_ok(const Report& r, const std::string& axiom)
{
    const ReportEntry* e = r.find(axiom);
    return e && e->pass && e->residual <= kTol;
}

const Report& by_suite(const std::vector<Report>& rs, const std::string& name)
{
    for (const auto& r : rs)
        if (r.suite == name)
            return r;
    throw Error("missing suite " + name);
}

std::string slurp(const fs::path& p)
{
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

Outcome criterion1()
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    const GCategory c = ising(kTol);
    const Report spec = ty_specialization(c, ising_params());
    const Report conf = ising_conformal_weights(c);
    const double dt = seconds_since(t0);
    o.require(spec.passed() && spec.max_residual() <= kTol, "Eq3 table entries");
    o.require(entry_ok(conf, "conformal.c_mm_channel_1"), "c_mm on 1-hat");
    o.require(entry_ok(conf, "conformal.c_mm_channel_eps"), "c_mm on eps-hat");
    o.require(dt < 1.0, "runtime");
    char buf[128];
    std::snprintf(buf, sizeof buf, "max residual %.2e, %.3f s", std::max(spec.max_residual(), conf.max_residual()), dt);
    if (o.pass)
        o.detail = buf;
    return o;
}

Outcome criterion2()
{
    Outcome o;
    double worst = 0, t2 = 0;
    for (int n : {1, 2}) {
        const auto t0 = std::chrono::steady_clock::now();
        const GCategory c = symplectic_fermions(n, kTol);
        const Report r = sf_specialization(c, n);
        const double dt = seconds_since(t0);
        if (n == 2)
            t2 = dt;
        worst = std::max(worst, r.max_residual());
        for (const char* row : {"eq5.row00", "eq5.row01", "eq5.row10", "eq5.row11"})
            o.require(entry_ok(r, row), "n=" + std::to_string(n) + " " + row);
        o.require(r.passed(), "n=" + std::to_string(n) + " named checks");
    }
    o.require(t2 < 10.0, "runtime n=2");
    char buf[128];
    std::snprintf(buf, sizeof buf, "max residual %.2e, n=2 in %.3f s", worst, t2);
    if (o.pass)
        o.detail = buf;
    return o;
}

Outcome criterion3()
{
    Outcome o;
    std::vector<std::pair<std::string, GCategory>> cs;
    cs.emplace_back("ising", ising(kTol));
    cs.emplace_back("ty2", tambara_yamagami(TYParams::from_gram(2, {{1, 0}, {0, 1}}), kTol));
    cs.emplace_back("sf1", symplectic_fermions(1, kTol));
    cs.emplace_back("sf2", symplectic_fermions(2, kTol));
    double worst = 0;
    for (const auto& [name, c] : cs) {
        const Report a = check_assoc_data(c.hopf(), c.assoc(), kTol);
        const Report b = check_braid_data(c.hopf(), c.assoc(), *c.braid(), kTol);
        o.require(a.passed() && a.max_residual() <= kTol, name + " assoc data");
        o.require(b.passed() && b.max_residual() <= kTol, name + " braid data");
        o.require(entry_ok(a, "normalization"), name + " (lambda x lambda)(gamma) = 1");
        o.require(entry_ok(b, "cond2.lambda_sigma"), name + " lambda(sigma) = beta^2");
        o.require(entry_ok(b, "cond5.omega"), name + " omega equation");
        worst = std::max({worst, a.max_residual(), b.max_residual()});
    }
    char buf[96];
    std::snprintf(buf, sizeof buf, "max residual %.2e over ising, ty2, sf1, sf2", worst);
    if (o.pass)
        o.detail = buf;
    return o;
}

Outcome criterion4()
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    SuiteOptions opt;
    opt.tol = kTol;
    std::size_t instances = 0;
    for (const Example& e : {ising_example(kTol), sf_example(1, kTol)}) {
        const auto rs = run_all_suites(e.category, GeneratorSet(e.generators), opt);
        for (const auto& r : rs) {
            o.require(!r.skipped && r.passed() && r.count_skipped() == 0, e.name + " " + r.suite);
            instances += r.count_run();
        }
        o.require(by_suite(rs, "pentagon").coverage.size() == 16, e.name + " pentagon patterns");
        o.require(by_suite(rs, "hexagon").coverage.size() == 8, e.name + " hexagon patterns");
    }
    const Example sw = sweedler_example(kTol);
    const GeneratorSet g(sw.generators);
    const Report p = pentagon_suite(sw.category, g, opt), t = triangle_suite(sw.category, g, opt);
    o.require(p.passed() && p.coverage.size() == 16, "sweedler pentagon");
    o.require(t.passed(), "sweedler triangle");
    instances += p.count_run() + t.count_run();
    const double dt = seconds_since(t0);
    o.require(dt < 120.0, "runtime");
    char buf[96];
    std::snprintf(buf, sizeof buf, "%zu instances, %.2f s", instances, dt);
    if (o.pass)
        o.detail = buf;
    return o;
}

Outcome criterion5()
{
    Outcome o;
    std::vector<std::string> caught;
    {
        const GCategory good = symplectic_fermions(1, kTol);
        AssocData a = good.assoc();
        a.lambda = Scalar(1.01) * a.lambda;
        const GCategory bad = GCategory::unchecked(good.hopf(), a, good.braid(), Ambient::SVect, kTol);
        const Report p = pentagon_suite(bad, GeneratorSet(sf_generators(bad)));
        const bool hit = !bad.validation().find("assoc.normalization")->pass && !p.passed();
        o.require(hit, "lambda +1%");
        if (hit)
            caught.push_back("lambda+1%: assoc.normalization, pentagon");
    }
    {
        const GCategory good = ising(kTol);
        BraidData b = *good.braid();
        b.beta = -b.beta;
        const GCategory flipped = GCategory::create(good.hopf(), good.assoc(), b, Ambient::Vect, kTol);
        const bool hit = !ising_conformal_weights(flipped).find("conformal.c_mm_channel_1")->pass &&
                         !ty_specialization(flipped, ising_params()).find("eq3.c_mm_channels")->pass;
        o.require(hit, "beta sign flip");
        if (hit)
            caught.push_back("beta flip: conformal.c_mm_channel_1, eq3.c_mm_channels");
    }
    {
        const GCategory good = ising(kTol);
        HopfData h = good.hopf();
        Matrix mu = h.mu.matrix();
        mu(1, 3) += 1e-3;
        h.mu = Mor(h.mu.source(), h.mu.target(), mu);
        const GCategory bad = GCategory::unchecked(h, good.assoc(), good.braid(), Ambient::Vect, kTol);
        std::string names;
        const auto fails = bad.validation().failures();
        for (std::size_t i = 0; i < fails.size() && i < 3; ++i)
            names += (names.empty() ? "" : ", ") + fails[i]->axiom;
        if (fails.size() > 3)
            names += " and " + std::to_string(fails.size() - 3) + " more";
        const bool hit = !bad.valid() && !names.empty();
        o.require(hit, "corrupted mu");
        if (hit)
            caught.push_back("mu entry: " + names);
    }
    if (o.pass)
        for (const auto& s : caught)
            o.detail += (o.detail.empty() ? "" : "; ") + s;
    return o;
}

Outcome criterion6()
{
    Outcome o;
    std::string detail;
    for (const Example& e : {ising_example(kTol), sf_example(1, kTol), sf_example(2, kTol), sweedler_example(kTol)}) {
        const GCategory& c = e.category;
        const GObject& t = e.generators.back();
        const GObject tt = c.star(t, t);
        const HModule reg = regular_module(c.hopf());
        const auto basis = hom_basis(c.hopf(), *tt.module, reg);
        // a fixed generic combination of the intertwiner basis
        Matrix f = Matrix::Zero(static_cast<Eigen::Index>(reg.dim()), static_cast<Eigen::Index>(tt.dim()));
        for (std::size_t i = 0; i < basis.size(); ++i)
            f += std::polar(1.0, 0.7 * double(i + 1)) * (1.0 + 0.1 * double(i)) * basis[i].matrix();
        const double smin = basis.empty() ? 0.0 : smallest_singular_value(f);
        const double res = intertwiner_residual(c.hopf(), *tt.module, reg, Mor(tt.carrier, reg.carrier, f));
        o.require(!basis.empty() && smin > 1e-6 && res <= kTol, e.name);
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s%s smin %.2e", detail.empty() ? "" : ", ", e.name.c_str(), smin);
        detail += buf;
    }
    if (o.pass)
        o.detail = detail;
    return o;
}

Outcome criterion7(const std::string& cli)
{
    Outcome o;
    if (cli.empty()) {
        o.require(false, "no CLI path given");
        return o;
    }
    const fs::path dir = fs::temp_directory_path() / ("braidforge_acc_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    auto run = [&](const std::string& args, const fs::path& out) {
        const std::string cmd = "\"" + cli + "\" " + args + " > \"" + out.string() + "\" 2>&1";
        const int rc = std::system(cmd.c_str());
        return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    };
    const int r1 = run("verify sf --pairs 1 --seed 7", dir / "a.json");
    const int r2 = run("verify sf --pairs 1 --seed 7", dir / "b.json");
    const std::string a = slurp(dir / "a.json"), b = slurp(dir / "b.json");
    o.require(r1 == 0 && r2 == 0, "verify sf exit codes");
    o.require(!a.empty() && a == b, "byte-identical reruns");

    const int re = run("export sf --pairs 1 --out \"" + (dir / "sf1.spec.json").string() + "\"", dir / "e.txt");
    const int rf = run("verify file \"" + (dir / "sf1.spec.json").string() + "\" --seed 7", dir / "f.json");
    o.require(re == 0, "export exit code");
    o.require(rf == r1, "round-trip exit code");
    try {
        const auto ja = nlohmann::json::parse(a), jf = nlohmann::json::parse(slurp(dir / "f.json"));
        o.require(ja["verdict"] == jf["verdict"], "round-trip verdict");
        o.require(ja["data_checks"]["pass"] == jf["data_checks"]["pass"], "round-trip data checks");
        for (std::size_t i = 0; i < ja["suites"].size(); ++i) {
            const auto &sa = ja["suites"][i], &sf = jf["suites"][i];
            o.require(sa["pass"] == sf["pass"] && sa["summary"]["run"] == sf["summary"]["run"],
                      "round-trip suite " + sa["suite"].get<std::string>());
        }
    } catch (const std::exception& e) {
        o.require(false, std::string("JSON: ") + e.what());
    }
    fs::remove_all(dir);
    if (o.pass)
        o.detail = std::to_string(a.size()) + " bytes identical; file round trip verdict " +
                   (r1 == 0 ? "pass" : "fail");
    return o;
}

}  // namespace

int main(int argc, char** argv)
{
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"Ising braiding table and c_mm channels", criterion1},
        {"SF n=1,2 braiding table rows", criterion2},
        {"associativity and braiding data conditions", criterion3},
        {"coherence suites", criterion4},
        {"negative controls", criterion5},
        {"T*T isomorphic to the regular module", criterion6},
        {"CLI determinism and SpecFile round trip", [&] { return criterion7(cli); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        std::printf("criterion %zu: %s  %s  (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                    o.detail.c_str());
        failed += !o.pass;
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
