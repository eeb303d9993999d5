#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "braidforge/examples.hpp"
#include "braidforge/specfile.hpp"

using namespace braidforge;
using nlohmann::json;

namespace {

enum Exit { kPass = 0, kFail = 1, kInput = 2 };

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        out.push_back(cur);
    return out;
}

double parse_double(const std::string& s, const std::string& what)
{
    char* end = nullptr;
    errno = 0;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || *end != '\0' || errno == ERANGE || !std::isfinite(v))
        throw io::InputError(what + ": not a number: '" + s + "'");
    return v;
}

// "re,im" or a bare real
Scalar parse_complex(const std::string& s, const std::string& what)
{
    const auto parts = split(s, ',');
    if (parts.size() == 1)
        return parse_double(parts[0], what);
    if (parts.size() == 2)
        return {parse_double(parts[0], what), parse_double(parts[1], what)};
    throw io::InputError(what + ": expected re,im");
}

// rows separated by ';', entries by ',' or spaces
std::vector<std::vector<int>> parse_gram(const std::string& s)
{
    std::vector<std::vector<int>> g;
    for (const auto& row : split(s, ';')) {
        std::vector<int> r;
        std::string tok;
        std::string norm = row;
        for (char& ch : norm)
            if (ch == ',')
                ch = ' ';
        std::istringstream in(norm);
        while (in >> tok) {
            if (tok != "0" && tok != "1")
                throw io::InputError("--gram: entries must be 0 or 1");
            r.push_back(tok == "1");
        }
        g.push_back(std::move(r));
    }
    return g;
}

struct Options {
    std::string target;
    std::string path;
    int pairs = 1;
    int k = 1;
    std::string gram, tau, beta, sigma;
    double tol = kDefaultTol;
    std::uint64_t seed = 0;
    std::string out;
    bool extended = false;
    bool serial = false;
};

void apply_env(Options& o, const CLI::App& cmd)
{
    if (cmd.count("--tol") == 0) {
        if (const char* e = std::getenv("BRAIDFORGE_TOL"))
            o.tol = parse_double(e, "BRAIDFORGE_TOL");
    }
    if (cmd.count("--seed") == 0) {
        if (const char* e = std::getenv("BRAIDFORGE_SEED")) {
            const std::string s = e;
            char* end = nullptr;
            errno = 0;
            const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
            if (s.empty() || *end != '\0' || errno == ERANGE || s[0] == '-')
                throw io::InputError("BRAIDFORGE_SEED: not an unsigned integer: '" + s + "'");
            o.seed = v;
        }
    }
    if (!(o.tol > 0.0))
        throw io::InputError("--tol must be positive");
}

examples::TYParams ty_params(const Options& o)
{
    std::vector<std::vector<int>> gram;
    if (o.gram.empty()) {
        gram.assign(o.k, std::vector<int>(o.k, 0));
        for (int i = 0; i < o.k; ++i)
            gram[i][i] = 1;
    } else {
        gram = parse_gram(o.gram);
    }
    std::optional<Scalar> tau, beta;
    std::optional<std::vector<Scalar>> sigma;
    if (!o.tau.empty())
        tau = parse_complex(o.tau, "--tau");
    if (!o.beta.empty())
        beta = parse_complex(o.beta, "--beta");
    if (!o.sigma.empty()) {
        std::vector<Scalar> v;
        for (const auto& s : split(o.sigma, ';'))
            v.push_back(parse_complex(s, "--sigma"));
        sigma = v;
    }
    examples::TYParams p = examples::TYParams::from_gram(o.k, gram, tau, sigma, beta);
    p.validate(o.tol);
    return p;
}

examples::Example builtin(const Options& o)
{
    if (o.target == "ising")
        return examples::ising_example(o.tol);
    if (o.target == "ty")
        return examples::ty_example(ty_params(o), o.tol);
    if (o.target == "sf") {
        if (o.pairs < 1 || o.pairs > 3)
            throw io::InputError("--pairs must lie in [1, 3]");
        examples::Example e = examples::sf_example(o.pairs, o.tol);
        if (o.extended)
            e.generators = examples::sf_generators(e.category, true);
        return e;
    }
    if (o.target == "sweedler")
        return examples::sweedler_example(o.tol);
    throw io::InputError("unknown target '" + o.target + "'");
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw io::InputError("cannot write '" + path + "'");
    f << text;
}

int cmd_verify(Options& o, const CLI::App& cmd)
{
    apply_env(o, cmd);
    SuiteOptions opt;
    opt.tol = o.tol;
    opt.seed = o.seed;
    opt.exec = o.serial ? Exec::Serial : Exec::Parallel;

    io::RunResult result;
    if (o.target == "file") {
        if (o.path.empty())
            throw io::InputError("verify file: missing path");
        const io::SpecFile spec = io::load_spec(o.path);
        io::Built b = io::build(spec, o.tol);
        if (!b.category) {
            result.target = "file";
            result.seed = o.seed;
            result.tol = o.tol;
            result.data_checks = b.hopf_checks;
            result.data_checks.suite = "data_checks";
            result.named_checks = Report("named_checks", o.tol);
            result.data_ok = b.hopf_checks.passed();
            for (const char* name : {"pentagon", "triangle", "hexagon", "naturality", "ribbon"}) {
                Report s(name, o.tol);
                s.skipped = true;
                s.status_note = "no associativity data (gamma, lambda)";
                result.suites.push_back(std::move(s));
            }
            result.digest = io::fnv1a64(io::canonical(io::spec_to_json(spec)));
        } else {
            result = io::run_verification("file", *b.category, b.generators,
                                          Report("named_checks", o.tol), opt);
            result.digest = io::category_digest(*b.category, b.generators);
        }
    } else {
        examples::Example e = builtin(o);
        result = io::run_verification(o.target, e.category, e.generators, e.checks, opt);
        result.digest = io::category_digest(e.category, e.generators);
    }
    const json doc = io::run_json(result);
    if (o.out.empty()) {
        std::cout << io::canonical(doc);
    } else {
        emit(io::canonical(doc), o.out);
        std::cout << io::render_text(doc);
    }
    return result.passed() ? kPass : kFail;
}

int cmd_export(Options& o, const CLI::App& cmd)
{
    apply_env(o, cmd);
    examples::Example e = builtin(o);
    emit(io::canonical(io::spec_to_json(io::spec_from_category(e.category, e.generators))), o.out);
    return kPass;
}

int cmd_report(const std::string& path, const std::string& format)
{
    std::ifstream in(path);
    if (!in)
        throw io::InputError("cannot open report '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw io::InputError("report '" + path + "': invalid JSON");
    }
    io::check_report_file(doc);
    if (format == "json")
        std::cout << io::canonical(doc);
    else
        std::cout << io::render_text(doc);
    return kPass;
}

void target_options(CLI::App* c, Options& o)
{
    c->add_option("--pairs", o.pairs, "symplectic fermion pairs n");
    c->add_option("--k", o.k, "rank of G = (Z/2)^k for ty");
    c->add_option("--gram", o.gram, "Gram matrix over Z/2, rows separated by ';'");
    c->add_option("--tau", o.tau, "tau as re,im");
    c->add_option("--beta", o.beta, "beta as re,im");
    c->add_option("--sigma", o.sigma, "sigma on generators, re,im;re,im;...");
    c->add_option("--tol", o.tol, "tolerance (default 1e-9)");
    c->add_option("--seed", o.seed, "seed for naturality sampling (default 0)");
    c->add_option("--out", o.out, "output file");
    c->add_flag("--extended", o.extended, "add odd degree-1 generators (sf)");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"braidforge: coherence verification for Z/2-graded Hopf-algebraic categories"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(io::kToolVersion));

    Options vo;
    auto* verify = app.add_subcommand("verify", "build a category and run every applicable suite");
    verify->add_option("target", vo.target, "ising | ty | sf | sweedler | file")
        ->required()
        ->check(CLI::IsMember({"ising", "ty", "sf", "sweedler", "file"}));
    verify->add_option("path", vo.path, "SpecFile for target 'file'");
    target_options(verify, vo);
    verify->add_flag("--serial", vo.serial, "run suites on the serial reference path");

    Options eo;
    auto* exp = app.add_subcommand("export", "write a built-in example as a SpecFile");
    exp->add_option("target", eo.target, "ising | ty | sf | sweedler")
        ->required()
        ->check(CLI::IsMember({"ising", "ty", "sf", "sweedler"}));
    target_options(exp, eo);

    std::string report_path, format = "text";
    auto* rep = app.add_subcommand("report", "render a report file");
    rep->add_option("file", report_path, "ReportFile")->required();
    rep->add_option("--format", format, "text | json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInput;
    }

    try {
        if (*verify)
            return cmd_verify(vo, *verify);
        if (*exp)
            return cmd_export(eo, *exp);
        return cmd_report(report_path, format);
    } catch (const io::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInput;
    } catch (const DataError& e) {
        std::cerr << "verification failed: " << e.what() << "\n";
        return kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
}
