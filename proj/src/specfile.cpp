#include "braidforge/specfile.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <Eigen/LU>

namespace braidforge::io {

using nlohmann::json;

namespace {

Scalar scalar_at(const json& v, const std::string& where)
{
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw InputError(where + ": expected a complex number [re, im]");
    const Scalar z(v[0].get<double>(), v[1].get<double>());
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw InputError(where + ": non-finite scalar");
    return z;
}

const json& field(const json& j, const std::string& name)
{
    if (!j.contains(name))
        throw InputError("tensor '" + name + "': missing");
    return j.at(name);
}

void expect_len(const json& v, std::size_t n, const std::string& where)
{
    if (!v.is_array() || v.size() != n)
        throw InputError(where + ": expected an array of length " + std::to_string(n));
}

Vector vec_of(const json& v, std::size_t n, const std::string& name)
{
    const std::string where = "tensor '" + name + "'";
    expect_len(v, n, where);
    Vector out(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i)
        out(static_cast<Eigen::Index>(i)) = scalar_at(v[i], where + "[" + std::to_string(i) + "]");
    return out;
}

Matrix mat_of(const json& v, std::size_t rows, std::size_t cols, const std::string& name)
{
    const std::string where = "tensor '" + name + "'";
    expect_len(v, rows, where);
    Matrix out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        expect_len(v[i], cols, where + "[" + std::to_string(i) + "]");
        for (std::size_t j = 0; j < cols; ++j)
            out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = scalar_at(
                v[i][j], where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
    return out;
}

// t[a][b][c] read into a (n0 x n1 x n2) array, flattened as (a, b, c)
std::vector<Scalar> cube_of(const json& v, std::size_t n, const std::string& name)
{
    const std::string where = "tensor '" + name + "'";
    expect_len(v, n, where);
    std::vector<Scalar> out;
    out.reserve(n * n * n);
    for (std::size_t a = 0; a < n; ++a) {
        expect_len(v[a], n, where + "[" + std::to_string(a) + "]");
        for (std::size_t b = 0; b < n; ++b) {
            const std::string w2 = where + "[" + std::to_string(a) + "][" + std::to_string(b) + "]";
            expect_len(v[a][b], n, w2);
            for (std::size_t c = 0; c < n; ++c)
                out.push_back(scalar_at(v[a][b][c], w2 + "[" + std::to_string(c) + "]"));
        }
    }
    return out;
}

template <class F>
Mor checked(const std::string& name, F&& make)
{
    try {
        return make();
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError("tensor '" + name + "': " + e.what());
    }
}

json vec_json(const Vector& v)
{
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        a.push_back(complex_json(v(i)));
    return a;
}

json mat_json(const Matrix& m)
{
    json a = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            row.push_back(complex_json(m(i, j)));
        a.push_back(std::move(row));
    }
    return a;
}

std::vector<std::string> string_list(const json& v, const std::string& where)
{
    if (!v.is_array())
        throw InputError(where + ": expected an array of strings");
    std::vector<std::string> out;
    for (const auto& s : v) {
        if (!s.is_string())
            throw InputError(where + ": expected an array of strings");
        out.push_back(s.get<std::string>());
    }
    return out;
}

std::vector<std::uint8_t> parity_list(const json& v, std::size_t n, const std::string& where)
{
    expect_len(v, n, where);
    std::vector<std::uint8_t> out;
    for (const auto& p : v) {
        if (!p.is_number_integer() || (p.get<int>() != 0 && p.get<int>() != 1))
            throw InputError(where + ": parities must be 0 or 1");
        out.push_back(static_cast<std::uint8_t>(p.get<int>()));
    }
    return out;
}

SuperSpace space_of(const json& labels, const json& parities, const std::string& where)
{
    auto l = string_list(labels, where + ".labels");
    auto p = parity_list(parities, l.size(), where + ".parities");
    try {
        return SuperSpace(l, p);
    } catch (const std::exception& e) {
        throw InputError(where + ": " + e.what());
    }
}

GeneratorDecl parse_generator(const json& j, std::size_t d, std::size_t idx)
{
    const std::string where = "generators[" + std::to_string(idx) + "]";
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw InputError(where + ": needs a string 'kind'");
    GeneratorDecl g;
    g.kind = j["kind"].get<std::string>();
    if (j.contains("label")) {
        if (!j["label"].is_string())
            throw InputError(where + ".label: expected a string");
        g.label = j["label"].get<std::string>();
    }
    if (g.kind == "unit" || g.kind == "regular") {
        return g;
    } else if (g.kind == "character") {
        if (g.label.empty())
            throw InputError(where + ": character needs a label");
        g.chi = vec_of(field(j, "chi"), d, where + ".chi").transpose();
        if (j.contains("parity")) {
            if (!j["parity"].is_number_integer() || (j["parity"] != 0 && j["parity"] != 1))
                throw InputError(where + ".parity: must be 0 or 1");
            g.parity = j["parity"].get<int>();
        }
    } else if (g.kind == "module" || g.kind == "degree_one") {
        if (g.label.empty())
            throw InputError(where + ": needs a label");
        g.labels = string_list(field(j, "labels"), where + ".labels");
        g.parities = parity_list(field(j, "parities"), g.labels.size(), where + ".parities");
        if (g.kind == "module") {
            const std::size_t m = g.labels.size();
            const json& a = field(j, "action");
            const std::string aw = where + ".action";
            expect_len(a, m, aw);
            g.action = Matrix::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(d * m));
            for (std::size_t o = 0; o < m; ++o) {
                const Matrix block = mat_of(a[o], d, m, aw + "[" + std::to_string(o) + "]");
                for (std::size_t hh = 0; hh < d; ++hh)
                    for (std::size_t i = 0; i < m; ++i)
                        g.action(static_cast<Eigen::Index>(o), static_cast<Eigen::Index>(hh * m + i)) =
                            block(static_cast<Eigen::Index>(hh), static_cast<Eigen::Index>(i));
            }
        }
    } else {
        throw InputError(where + ": unknown kind '" + g.kind + "'");
    }
    return g;
}

json generator_json(const GeneratorDecl& g, std::size_t d)
{
    json j;
    j["kind"] = g.kind;
    if (!g.label.empty())
        j["label"] = g.label;
    if (g.kind == "character") {
        j["chi"] = vec_json(g.chi.transpose());
        j["parity"] = g.parity;
    } else if (g.kind == "module" || g.kind == "degree_one") {
        j["labels"] = g.labels;
        j["parities"] = g.parities;
        if (g.kind == "module") {
            const std::size_t m = g.labels.size();
            json a = json::array();
            for (std::size_t o = 0; o < m; ++o) {
                Matrix block(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(m));
                for (std::size_t hh = 0; hh < d; ++hh)
                    for (std::size_t i = 0; i < m; ++i)
                        block(static_cast<Eigen::Index>(hh), static_cast<Eigen::Index>(i)) =
                            g.action(static_cast<Eigen::Index>(o), static_cast<Eigen::Index>(hh * m + i));
                a.push_back(mat_json(block));
            }
            j["action"] = std::move(a);
        }
    }
    return j;
}

GObject generator_object(const GCategory& c, const GeneratorDecl& g, std::size_t idx)
{
    const HopfData& h = c.hopf();
    const std::string where = "generators[" + std::to_string(idx) + "]";
    try {
        if (g.kind == "unit")
            return c.unit();
        if (g.kind == "regular")
            return c.module_object(regular_module(h));
        if (g.kind == "character")
            return c.module_object(
                character_module(h, g.label, Mor::functional(h.space, g.chi), g.parity));
        const SuperSpace v(g.labels, g.parities);
        if (g.kind == "degree_one")
            return c.degree_one(v, g.label);
        const HModule m = make_module(h, g.label, v, Mor(tensor_obj(h.space, v), v, g.action));
        const Report mr = check_module(h, m, c.tol());
        if (!mr.passed())
            throw InputError(where + ": action is not a module structure");
        return c.module_object(m);
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(where + ": " + e.what());
    }
}

}  // namespace

json complex_json(Scalar z)
{
    // normalize negative zero so equal values serialize identically
    const double re = z.real() == 0.0 ? 0.0 : z.real();
    const double im = z.imag() == 0.0 ? 0.0 : z.imag();
    return json::array({re, im});
}

SpecFile parse_spec(const json& j)
{
    if (!j.is_object())
        throw InputError("spec file: top level must be an object");
    SpecFile s;
    if (j.contains("ambient")) {
        const auto a = j["ambient"].is_string() ? j["ambient"].get<std::string>() : "";
        if (a == "vect")
            s.ambient = Ambient::Vect;
        else if (a == "svect")
            s.ambient = Ambient::SVect;
        else
            throw InputError("field 'ambient': must be \"vect\" or \"svect\"");
    }
    const json& basis = field(j, "basis");
    if (!basis.is_object())
        throw InputError("field 'basis': expected {labels, parities}");
    HopfData& h = s.hopf;
    h.space = space_of(field(basis, "labels"), field(basis, "parities"), "basis");
    const std::size_t d = h.dim();
    const SuperSpace hh = tensor_obj(h.space, h.space);

    {
        const auto t = cube_of(field(j, "mu"), d, "mu");
        Matrix m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d * d));
        for (std::size_t k = 0; k < d; ++k)
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b)
                    m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(a * d + b)) =
                        t[(k * d + a) * d + b];
        h.mu = checked("mu", [&] { return Mor(hh, h.space, m); });
    }
    {
        const auto t = cube_of(field(j, "delta"), d, "delta");
        Matrix m(static_cast<Eigen::Index>(d * d), static_cast<Eigen::Index>(d));
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                for (std::size_t k = 0; k < d; ++k)
                    m(static_cast<Eigen::Index>(a * d + b), static_cast<Eigen::Index>(k)) =
                        t[(a * d + b) * d + k];
        h.delta = checked("delta", [&] { return Mor(h.space, hh, m); });
    }
    const Vector eta = vec_of(field(j, "eta"), d, "eta");
    h.eta = checked("eta", [&] { return Mor::element(h.space, eta); });
    const Vector eps = vec_of(field(j, "eps"), d, "eps");
    h.eps = checked("eps", [&] { return Mor::functional(h.space, eps.transpose()); });
    const Matrix sa = mat_of(field(j, "antipode"), d, d, "antipode");
    h.antipode = checked("antipode", [&] { return Mor(h.space, h.space, sa); });
    const Matrix si = mat_of(field(j, "antipode_inv"), d, d, "antipode_inv");
    h.antipode_inv = checked("antipode_inv", [&] { return Mor(h.space, h.space, si); });

    if (j.contains("gamma")) {
        const Matrix g = mat_of(j["gamma"], d, d, "gamma");
        Vector v(static_cast<Eigen::Index>(d * d));
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                v(static_cast<Eigen::Index>(a * d + b)) =
                    g(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
        s.gamma = checked("gamma", [&] { return Mor::element(hh, v); });
    }
    if (j.contains("lambda")) {
        const Vector l = vec_of(j["lambda"], d, "lambda");
        s.lambda = checked("lambda", [&] { return Mor::functional(h.space, l.transpose()); });
    }
    if (j.contains("g")) {
        const Vector g = vec_of(j["g"], d, "g");
        s.g = checked("g", [&] { return Mor::element(h.space, g); });
    }
    if (j.contains("sigma")) {
        const Vector v = vec_of(j["sigma"], d, "sigma");
        s.sigma = checked("sigma", [&] { return Mor::element(h.space, v); });
    }
    if (j.contains("sigma_inv")) {
        const Vector v = vec_of(j["sigma_inv"], d, "sigma_inv");
        s.sigma_inv = checked("sigma_inv", [&] { return Mor::element(h.space, v); });
    }
    if (j.contains("beta"))
        s.beta = scalar_at(j["beta"], "tensor 'beta'");
    if (j.contains("omega")) {
        const auto o = j["omega"].is_string() ? j["omega"].get<std::string>() : "";
        if (o == "identity")
            s.omega = OmegaFlag::Identity;
        else if (o == "parity")
            s.omega = OmegaFlag::Parity;
        else
            throw InputError("field 'omega': must be \"identity\" or \"parity\"");
    }
    if (s.sigma.has_value() != s.beta.has_value())
        throw InputError("tensor 'beta': sigma and beta must be given together");
    if (j.contains("generators")) {
        const json& g = j["generators"];
        if (!g.is_array())
            throw InputError("field 'generators': expected an array");
        for (std::size_t i = 0; i < g.size(); ++i)
            s.generators.push_back(parse_generator(g[i], d, i));
    }
    return s;
}

SpecFile load_spec(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open spec file '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("spec file '" + path + "': invalid JSON: " + e.what());
    }
    return parse_spec(j);
}

json spec_to_json(const SpecFile& s)
{
    const HopfData& h = s.hopf;
    const std::size_t d = h.dim();
    json j;
    j["ambient"] = s.ambient == Ambient::Vect ? "vect" : "svect";
    j["basis"] = {{"labels", h.space.labels()}, {"parities", h.space.parities()}};
    const Matrix& mu = h.mu.matrix();
    const Matrix& de = h.delta.matrix();
    json jm = json::array(), jd = json::array();
    for (std::size_t a = 0; a < d; ++a) {
        json ma = json::array(), da = json::array();
        for (std::size_t b = 0; b < d; ++b) {
            json mb = json::array(), db = json::array();
            for (std::size_t c = 0; c < d; ++c) {
                mb.push_back(complex_json(
                    mu(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b * d + c))));
                db.push_back(complex_json(
                    de(static_cast<Eigen::Index>(a * d + b), static_cast<Eigen::Index>(c))));
            }
            ma.push_back(std::move(mb));
            da.push_back(std::move(db));
        }
        jm.push_back(std::move(ma));
        jd.push_back(std::move(da));
    }
    j["mu"] = std::move(jm);
    j["delta"] = std::move(jd);
    j["eta"] = vec_json(h.eta.as_vector());
    j["eps"] = vec_json(h.eps.matrix().row(0).transpose());
    j["antipode"] = mat_json(h.antipode.matrix());
    j["antipode_inv"] = mat_json(h.antipode_inv.matrix());
    if (s.gamma)
        j["gamma"] = mat_json(reshape_pair(h, s.gamma->as_vector()));
    if (s.lambda)
        j["lambda"] = vec_json(s.lambda->matrix().row(0).transpose());
    if (s.g)
        j["g"] = vec_json(s.g->as_vector());
    if (s.sigma)
        j["sigma"] = vec_json(s.sigma->as_vector());
    if (s.sigma_inv)
        j["sigma_inv"] = vec_json(s.sigma_inv->as_vector());
    if (s.beta)
        j["beta"] = complex_json(*s.beta);
    j["omega"] = s.omega == OmegaFlag::Parity ? "parity" : "identity";
    if (!s.generators.empty()) {
        json g = json::array();
        for (const auto& decl : s.generators)
            g.push_back(generator_json(decl, d));
        j["generators"] = std::move(g);
    }
    return j;
}

SpecFile spec_from_category(const GCategory& c, const std::vector<GObject>& generators)
{
    SpecFile s;
    s.ambient = c.ambient();
    s.hopf = c.hopf();
    s.gamma = c.assoc().gamma;
    s.lambda = c.assoc().lambda;
    s.g = c.assoc().g;
    if (c.braid()) {
        s.sigma = c.braid()->sigma;
        s.sigma_inv = c.braid()->sigma_inv;
        s.beta = c.braid()->beta;
        s.omega = c.braid()->omega;
    }
    const Matrix eps = c.hopf().eps.matrix();
    for (const auto& x : generators) {
        GeneratorDecl g;
        g.label = x.label;
        if (x.degree == 1) {
            g.kind = "degree_one";
            g.labels = x.carrier.labels();
            g.parities = x.carrier.parities();
        } else {
            const Matrix a = x.module->action_mor().matrix();
            if (x.dim() == 1 && x.carrier.is_purely_even() && max_abs(a - eps) == 0.0 &&
                x.label == "1") {
                g.kind = "unit";
            } else if (x.label == "H" && x.carrier.same_grading(c.hopf().space) &&
                       max_abs(a - c.hopf().mu.matrix()) == 0.0) {
                g.kind = "regular";
            } else if (x.dim() == 1) {
                g.kind = "character";
                g.chi = a.row(0);
                g.parity = x.carrier.parity(0);
            } else {
                g.kind = "module";
                g.labels = x.carrier.labels();
                g.parities = x.carrier.parities();
                g.action = a;
            }
        }
        s.generators.push_back(std::move(g));
    }
    return s;
}

Built build(const SpecFile& s, double tol)
{
    Built b;
    b.hopf_checks = check_hopf_axioms(s.hopf, tol);
    if (!s.gamma || !s.lambda)
        return b;
    AssocData a;
    a.gamma = *s.gamma;
    a.lambda = *s.lambda;
    if (s.g) {
        a.g = *s.g;
    } else {
        GrouplikeSolution g = solve_grouplike(s.hopf, a.lambda, tol);
        if (!g.ok())
            throw InputError("tensor 'g': not given and not determined by lambda (" + g.failure + ")");
        a.g = *g.g;
    }
    std::optional<BraidData> br;
    if (s.sigma) {
        BraidData d;
        d.sigma = *s.sigma;
        if (s.sigma_inv) {
            d.sigma_inv = *s.sigma_inv;
        } else {
            const Matrix l = left_mult(d.sigma, s.hopf).matrix();
            Eigen::FullPivLU<Matrix> lu(l);
            if (!lu.isInvertible())
                throw InputError("tensor 'sigma': not invertible");
            d.sigma_inv = Mor::element(s.hopf.space, lu.solve(s.hopf.eta.as_vector()));
        }
        d.beta = *s.beta;
        d.omega = s.omega;
        br = d;
    }
    try {
        b.category = GCategory::unchecked(s.hopf, a, br, s.ambient, tol);
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError(std::string("spec file: ") + e.what());
    }
    const GCategory& c = *b.category;
    if (s.generators.empty()) {
        b.generators = {c.unit(), c.module_object(regular_module(s.hopf)),
                        c.degree_one(SuperSpace({"T"}, {0}), "T")};
    } else {
        for (std::size_t i = 0; i < s.generators.size(); ++i)
            b.generators.push_back(generator_object(c, s.generators[i], i));
    }
    return b;
}

std::string canonical(const json& j)
{
    return j.dump(2) + "\n";
}

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v)
{
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

json report_json(const Report& r)
{
    json entries = json::array();
    for (const auto& e : r.entries) {
        json x;
        x["axiom"] = e.axiom;
        x["labels"] = e.labels;
        if (!e.pattern.empty())
            x["pattern"] = e.pattern;
        x["residual"] = e.skipped ? json(nullptr) : json(e.residual);
        x["pass"] = e.pass;
        if (e.skipped)
            x["skipped"] = true;
        if (e.informational)
            x["informational"] = true;
        if (e.lower_bound)
            x["lower_bound"] = true;
        if (!e.note.empty())
            x["note"] = e.note;
        entries.push_back(std::move(x));
    }
    json j;
    j["suite"] = r.suite;
    j["status"] = r.skipped ? "skipped" : "run";
    if (!r.status_note.empty())
        j["status_note"] = r.status_note;
    j["tol"] = r.tol;
    j["entries"] = std::move(entries);
    j["coverage"] = std::vector<std::string>(r.coverage.begin(), r.coverage.end());
    j["summary"] = {{"run", r.count_run()},
                    {"passed", r.count_passed()},
                    {"failed", r.count_failed()},
                    {"skipped", r.count_skipped()},
                    {"max_residual", r.max_residual()}};
    j["pass"] = r.passed();
    return j;
}

bool RunResult::passed() const
{
    if (!data_ok || !data_checks.passed() || !named_checks.passed())
        return false;
    for (const auto& s : suites)
        if (!s.passed())
            return false;
    return true;
}

json run_json(const RunResult& r)
{
    json j;
    j["tool"] = "braidforge";
    j["version"] = kToolVersion;
    j["target"] = r.target;
    j["input_digest"] = "fnv1a64:" + hex64(r.digest);
    j["seed"] = r.seed;
    j["tol"] = r.tol;
    j["generators"] = r.generators;
    j["data_checks"] = report_json(r.data_checks);
    j["named_checks"] = report_json(r.named_checks);
    json suites = json::array();
    for (const auto& s : r.suites)
        suites.push_back(report_json(s));
    j["suites"] = std::move(suites);
    j["verdict"] = r.passed() ? "pass" : "fail";
    return j;
}

RunResult run_verification(const std::string& target, const GCategory& c,
                           const std::vector<GObject>& generators, const Report& named_checks,
                           const SuiteOptions& opt)
{
    RunResult r;
    r.target = target;
    r.seed = opt.seed;
    r.tol = opt.tol;
    for (const auto& g : generators)
        r.generators.push_back(g.label);
    r.data_checks = c.validation();
    r.data_checks.suite = "data_checks";
    r.named_checks = named_checks;
    r.named_checks.suite = "named_checks";
    r.data_ok = r.data_checks.passed();
    if (r.data_ok) {
        r.suites = run_all_suites(c, GeneratorSet(generators), opt);
    } else {
        for (const char* name : {"pentagon", "triangle", "hexagon", "naturality", "ribbon"}) {
            Report s(name, opt.tol);
            s.skipped = true;
            s.status_note = "data checks failed";
            r.suites.push_back(std::move(s));
        }
    }
    return r;
}

std::uint64_t category_digest(const GCategory& c, const std::vector<GObject>& generators)
{
    return fnv1a64(canonical(spec_to_json(spec_from_category(c, generators))));
}

void check_report_file(const json& j)
{
    if (!j.is_object() || j.value("tool", "") != "braidforge" || !j.contains("verdict") ||
        !j.contains("suites") || !j["suites"].is_array())
        throw InputError("not a braidforge report file");
    for (const auto& s : j["suites"])
        if (!s.is_object() || !s.contains("suite") || !s.contains("summary") || !s.contains("entries"))
            throw InputError("report file: malformed suite section");
}

std::string render_text(const json& j)
{
    check_report_file(j);
    std::ostringstream os;
    char buf[256];
    os << "braidforge " << j.value("version", "?") << "  target " << j.value("target", "?")
       << "  verdict " << j["verdict"].get<std::string>() << "\n";
    os << "input " << j.value("input_digest", "?") << "  seed " << j.value("seed", 0)
       << "  tol " << j.value("tol", 0.0) << "\n";
    if (j.contains("generators")) {
        os << "generators";
        for (const auto& g : j["generators"])
            os << " " << g.get<std::string>();
        os << "\n";
    }
    os << "\n";
    std::snprintf(buf, sizeof buf, "%-14s %-8s %6s %6s %6s %6s  %s\n", "section", "status", "run",
                  "pass", "fail", "skip", "max residual");
    os << buf;
    std::vector<const json*> sections;
    for (const char* k : {"data_checks", "named_checks"})
        if (j.contains(k))
            sections.push_back(&j[k]);
    for (const auto& s : j["suites"])
        sections.push_back(&s);
    for (const json* s : sections) {
        const json& sum = (*s)["summary"];
        std::snprintf(buf, sizeof buf, "%-14s %-8s %6llu %6llu %6llu %6llu  %.3e\n",
                      (*s)["suite"].get<std::string>().c_str(),
                      s->value("status", "run").c_str(),
                      static_cast<unsigned long long>(sum.value("run", 0ULL)),
                      static_cast<unsigned long long>(sum.value("passed", 0ULL)),
                      static_cast<unsigned long long>(sum.value("failed", 0ULL)),
                      static_cast<unsigned long long>(sum.value("skipped", 0ULL)),
                      sum.value("max_residual", 0.0));
        os << buf;
        if (s->contains("status_note"))
            os << "    note: " << (*s)["status_note"].get<std::string>() << "\n";
    }
    bool header = false;
    for (const json* s : sections)
        for (const auto& e : (*s)["entries"]) {
            if (e.value("pass", true) || e.value("informational", false) || e.value("skipped", false))
                continue;
            if (!header) {
                os << "\nfailures\n";
                header = true;
            }
            std::string labels;
            for (const auto& l : e["labels"])
                labels += (labels.empty() ? "" : ",") + l.get<std::string>();
            const std::string res =
                e["residual"].is_number() ? [&] {
                    std::snprintf(buf, sizeof buf, "%.3e", e["residual"].get<double>());
                    return std::string(buf);
                }()
                                          : std::string("nan");
            os << "  " << (*s)["suite"].get<std::string>() << "  " << e["axiom"].get<std::string>()
               << "  (" << labels << ")  " << res;
            if (e.contains("note"))
                os << "  " << e["note"].get<std::string>();
            os << "\n";
        }
    return os.str();
}

}  // namespace braidforge::io
