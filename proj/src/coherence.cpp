#include "braidforge/coherence.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <random>

namespace braidforge {

namespace {

struct Instance {
    std::vector<std::string> labels;
    std::string pattern;
    std::string axiom;  // used when the instance throws
    std::function<void(Report&)> run;
};

std::string degrees(std::initializer_list<const GObject*> xs)
{
    std::string s;
    for (const GObject* x : xs)
        s += x->degree ? '1' : '0';
    return s;
}

Report run_instances(std::string suite, const SuiteOptions& opt, const std::vector<Instance>& inst)
{
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<Report> parts(inst.size());
    const long n = static_cast<long>(inst.size());
#pragma omp parallel for schedule(dynamic) if (opt.exec == Exec::Parallel)
    for (long i = 0; i < n; ++i) {
        Report r(suite, opt.tol);
        try {
            inst[i].run(r);
        } catch (const std::exception& e) {
            r.add(inst[i].axiom, std::numeric_limits<double>::quiet_NaN(), inst[i].labels,
                  inst[i].pattern)
                .note = std::string("exception: ") + e.what();
        }
        parts[i] = std::move(r);
    }
    Report out(std::move(suite), opt.tol);
    for (const auto& p : parts)
        out.append(p);
    out.sort_entries();
    out.wall_time_s =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

bool over_cap(const SuiteOptions& opt, std::size_t dim)
{
    return dim > opt.dim_cap;
}

std::string cap_note(std::size_t dim, const SuiteOptions& opt)
{
    return "carrier dimension " + std::to_string(dim) + " exceeds cap " +
           std::to_string(opt.dim_cap);
}

Wiring id_of(const GObject& x)
{
    return Wiring({x.carrier});
}

struct Sample {
    GObject target;
    Wiring map;
    std::string note;
};

// hom spaces between degree-0 generators, computed once per suite
using HomTable = std::map<std::pair<std::size_t, std::size_t>, std::vector<Mor>>;

HomTable hom_table(const GCategory& c, const GeneratorSet& g)
{
    HomTable t;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            if (g.objects[i].degree == 0 && g.objects[j].degree == 0)
                t[{i, j}] = hom_basis(c.hopf(), *g.objects[i].module, *g.objects[j].module);
    return t;
}

Scalar random_scalar(std::mt19937_64& rng)
{
    const double re = 2.0 * uniform01(rng()) - 1.0;
    const double im = 2.0 * uniform01(rng()) - 1.0;
    return {re, im};
}

// a morphism out of generator i into a same-degree generator chosen by rng
Sample sample_from(const GeneratorSet& g, const HomTable& homs, std::size_t i, std::mt19937_64& rng)
{
    const GObject& x = g.objects[i];
    std::vector<std::size_t> targets;
    for (std::size_t j = 0; j < g.size(); ++j) {
        const GObject& y = g.objects[j];
        if (y.degree != x.degree)
            continue;
        if (x.degree == 0) {
            if (!homs.at({i, j}).empty())
                targets.push_back(j);
        } else {
            bool any = false;
            for (std::size_t a = 0; a < x.dim() && !any; ++a)
                for (std::size_t b = 0; b < y.dim() && !any; ++b)
                    any = x.carrier.parity(a) == y.carrier.parity(b);
            if (any)
                targets.push_back(j);
        }
    }
    if (targets.empty())
        return Sample{x, id_of(x), "f:" + x.label + "->" + x.label + " identity"};
    const std::size_t j = targets[rng() % targets.size()];
    const GObject& y = g.objects[j];
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(y.dim()), static_cast<Eigen::Index>(x.dim()));
    if (x.degree == 0) {
        for (const Mor& b : homs.at({i, j}))
            m += random_scalar(rng) * b.matrix();
    } else {
        for (std::size_t b = 0; b < x.dim(); ++b)
            for (std::size_t a = 0; a < y.dim(); ++a)
                if (x.carrier.parity(b) == y.carrier.parity(a))
                    m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
                        random_scalar(rng);
    }
    return Sample{y, Wiring::of(Mor(x.carrier, y.carrier, m)), "f:" + x.label + "->" + y.label};
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index)
{
    // splitmix64 finalizer over the pair
    auto mix = [](std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    };
    return mix(seed ^ mix(index));
}

double uniform01(std::uint64_t bits)
{
    return double(bits >> 11) * 0x1.0p-53;
}

std::vector<std::string> GeneratorSet::labels() const
{
    std::vector<std::string> out;
    for (const auto& o : objects)
        out.push_back(o.label);
    return out;
}

void GeneratorSet::validate(const GCategory& c) const
{
    bool unit = false, odd_degree = false;
    const Matrix eps = c.hopf().eps.matrix();
    for (const auto& o : objects) {
        if (o.degree == 1)
            odd_degree = true;
        if (o.degree == 0 && o.dim() == 1 && o.carrier.is_purely_even() && o.module) {
            const Matrix a = o.module->action_mor().matrix();
            unit = unit || max_abs(a - eps) == 0.0;
        }
    }
    if (!unit)
        throw ShapeError("generator set must contain the unit object");
    if (c.hopf().dim() > 1 && !odd_degree)
        throw ShapeError("generator set must contain a degree-1 object");
}

Report pentagon_suite(const GCategory& c, const GeneratorSet& g, const SuiteOptions& opt)
{
    std::vector<Instance> inst;
    for (const auto& x : g.objects)
        for (const auto& y : g.objects)
            for (const auto& z : g.objects)
                for (const auto& w : g.objects) {
                    Instance in{{x.label, y.label, z.label, w.label}, degrees({&x, &y, &z, &w}),
                                "pentagon", {}};
                    in.run = [&c, &opt, x, y, z, w, labels = in.labels,
                              pat = in.pattern](Report& r) {
                        const GObject zw = c.star(z, w), yz = c.star(y, z), xy = c.star(x, y);
                        const std::size_t dim = c.star(x, c.star(y, zw)).dim();
                        if (over_cap(opt, dim)) {
                            r.add_skip("pentagon", labels, pat, cap_note(dim, opt));
                            return;
                        }
                        // X*(Y*(Z*W)) -> ((X*Y)*Z)*W
                        Wiring lhs = c.star_wiring(x, c.star(y, zw), id_of(x), c.associator_wiring(y, z, w));
                        lhs.then(c.associator_wiring(x, yz, w));
                        lhs.then(c.star_wiring(c.star(x, yz), w, c.associator_wiring(x, y, z), id_of(w)));
                        Wiring rhs = c.associator_wiring(x, y, zw);
                        rhs.then(c.associator_wiring(xy, z, w));
                        r.add("pentagon", max_residual(lhs, rhs, Exec::Serial), labels, pat);
                    };
                    inst.push_back(std::move(in));
                }
    return run_instances("pentagon", opt, inst);
}

Report triangle_suite(const GCategory& c, const GeneratorSet& g, const SuiteOptions& opt)
{
    std::vector<Instance> inst;
    const GObject one = c.unit();
    for (const auto& x : g.objects)
        for (const auto& y : g.objects) {
            Instance in{{x.label, y.label}, degrees({&x, &y}), "triangle", {}};
            in.run = [&c, &opt, x, y, one, labels = in.labels, pat = in.pattern](Report& r) {
                const GObject src = c.star(x, c.star(one, y));
                if (over_cap(opt, src.dim())) {
                    r.add_skip("triangle", labels, pat, cap_note(src.dim(), opt));
                    return;
                }
                r.add("triangle",
                      max_residual(c.associator_wiring(x, one, y), Mor::identity(src.carrier),
                                   Exec::Serial),
                      labels, pat);
            };
            inst.push_back(std::move(in));
        }
    return run_instances("triangle", opt, inst);
}

Report hexagon_suite(const GCategory& c, const GeneratorSet& g, const SuiteOptions& opt)
{
    if (!c.has_braiding()) {
        Report r("hexagon", opt.tol);
        r.skipped = true;
        r.status_note = "no braiding data";
        return r;
    }
    std::vector<Instance> inst;
    for (const auto& x : g.objects)
        for (const auto& y : g.objects)
            for (const auto& z : g.objects) {
                Instance in{{x.label, y.label, z.label}, degrees({&x, &y, &z}), "hexagon", {}};
                in.run = [&c, &opt, x, y, z, labels = in.labels, pat = in.pattern](Report& r) {
                    const GObject xy = c.star(x, y), yz = c.star(y, z);
                    const std::size_t dim = c.star(x, yz).dim();
                    if (over_cap(opt, dim)) {
                        r.add_skip("hexagon.H1", labels, pat, cap_note(dim, opt));
                        r.add_skip("hexagon.H2", labels, pat, cap_note(dim, opt));
                        return;
                    }
                    // both sides X*(Y*Z) -> (Z*X)*Y
                    auto side = [&](auto&& braid) {
                        Wiring lhs = c.associator_wiring(x, y, z);
                        lhs.then(braid(xy, z)).then(c.associator_wiring(z, x, y));
                        Wiring rhs = c.star_wiring(x, yz, id_of(x), braid(y, z));
                        rhs.then(c.associator_wiring(x, z, y))
                            .then(c.star_wiring(c.star(x, z), y, braid(x, z), id_of(y)));
                        return max_residual(lhs, rhs, Exec::Serial);
                    };
                    r.add("hexagon.H2",
                          side([&](const GObject& a, const GObject& b) {
                              return c.braiding_wiring(a, b);
                          }),
                          labels, pat);
                    // c replaced by the inverse of the opposite braiding
                    r.add("hexagon.H1",
                          side([&](const GObject& a, const GObject& b) {
                              return c.braiding_inverse_wiring(b, a);
                          }),
                          labels, pat);
                };
                inst.push_back(std::move(in));
            }
    return run_instances("hexagon", opt, inst);
}

Report naturality_suite(const GCategory& c, const GeneratorSet& g, const SuiteOptions& opt)
{
    const HomTable homs = hom_table(c, g);
    std::vector<Instance> inst;
    std::uint64_t index = 0;
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const GObject &x = g.objects[i], &y = g.objects[j], &z = g.objects[k];
                Instance in{{x.label, y.label, z.label}, degrees({&x, &y, &z}), "naturality.assoc", {}};
                in.run = [&c, &g, &opt, &homs, i, j, k, seed = instance_seed(opt.seed, index++),
                          labels = in.labels, pat = in.pattern](Report& r) {
                    const GObject &x = g.objects[i], &y = g.objects[j], &z = g.objects[k];
                    const std::size_t dim = c.star(x, c.star(y, z)).dim();
                    std::mt19937_64 rng(seed);
                    for (int slot = 0; slot < 3; ++slot) {
                        const std::string axiom = "naturality.assoc.slot" + std::to_string(slot);
                        if (over_cap(opt, dim)) {
                            r.add_skip(axiom, labels, pat, cap_note(dim, opt));
                            continue;
                        }
                        for (std::size_t s = 0; s < opt.samples; ++s) {
                            const std::size_t src = slot == 0 ? i : slot == 1 ? j : k;
                            Sample f = sample_from(g, homs, src, rng);
                            GObject t[3] = {x, y, z};
                            Wiring m[3] = {id_of(x), id_of(y), id_of(z)};
                            t[slot] = f.target;
                            m[slot] = f.map;
                            Wiring lhs = c.star_wiring(x, c.star(y, z), m[0], c.star_wiring(y, z, m[1], m[2]));
                            lhs.then(c.associator_wiring(t[0], t[1], t[2]));
                            Wiring rhs = c.associator_wiring(x, y, z);
                            rhs.then(c.star_wiring(c.star(x, y), z, c.star_wiring(x, y, m[0], m[1]), m[2]));
                            r.add(axiom, max_residual(lhs, rhs, Exec::Serial), labels, pat).note =
                                "sample " + std::to_string(s) + " " + f.note;
                        }
                    }
                };
                inst.push_back(std::move(in));
            }
    if (c.has_braiding()) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const GObject &x = g.objects[i], &y = g.objects[j];
                Instance in{{x.label, y.label}, degrees({&x, &y}), "naturality.braiding", {}};
                in.run = [&c, &g, &opt, &homs, i, j, seed = instance_seed(opt.seed, index++),
                          labels = in.labels, pat = in.pattern](Report& r) {
                    const GObject &x = g.objects[i], &y = g.objects[j];
                    const std::size_t dim = c.star(x, y).dim();
                    std::mt19937_64 rng(seed);
                    for (int slot = 0; slot < 2; ++slot) {
                        const std::string axiom = "naturality.braiding.slot" + std::to_string(slot);
                        if (over_cap(opt, dim)) {
                            r.add_skip(axiom, labels, pat, cap_note(dim, opt));
                            continue;
                        }
                        for (std::size_t s = 0; s < opt.samples; ++s) {
                            Sample f = sample_from(g, homs, slot == 0 ? i : j, rng);
                            GObject t[2] = {x, y};
                            Wiring m[2] = {id_of(x), id_of(y)};
                            t[slot] = f.target;
                            m[slot] = f.map;
                            Wiring lhs = c.star_wiring(x, y, m[0], m[1]);
                            lhs.then(c.braiding_wiring(t[0], t[1]));
                            Wiring rhs = c.braiding_wiring(x, y);
                            rhs.then(c.star_wiring(y, x, m[1], m[0]));
                            r.add(axiom, max_residual(lhs, rhs, Exec::Serial), labels, pat).note =
                                "sample " + std::to_string(s) + " " + f.note;
                        }
                    }
                };
                inst.push_back(std::move(in));
            }
    }
    return run_instances("naturality", opt, inst);
}

Report ribbon_suite(const GCategory& c, const GeneratorSet& g, const SuiteOptions& opt)
{
    if (!c.has_twist()) {
        Report r("ribbon", opt.tol);
        r.skipped = true;
        r.status_note = c.has_braiding() ? "sigma^2 is not central; no twist" : "no braiding data";
        return r;
    }
    const HomTable homs = hom_table(c, g);
    std::vector<Instance> inst;
    const GObject one = c.unit();
    inst.push_back(Instance{{one.label}, "0", "ribbon.unit", [&c, one](Report& r) {
                                r.add("ribbon.unit",
                                      max_residual(c.twist_wiring(one), Mor::identity(one.carrier),
                                                   Exec::Serial),
                                      {one.label}, "0");
                            }});
    std::uint64_t index = 0;
    const std::size_t n = g.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const GObject &x = g.objects[i], &y = g.objects[j];
            Instance in{{x.label, y.label}, degrees({&x, &y}), "ribbon", {}};
            in.run = [&c, &opt, x, y, labels = in.labels, pat = in.pattern](Report& r) {
                const GObject xy = c.star(x, y);
                if (over_cap(opt, xy.dim())) {
                    r.add_skip("ribbon", labels, pat, cap_note(xy.dim(), opt));
                    return;
                }
                Wiring rhs = c.star_wiring(x, y, c.twist_wiring(x), c.twist_wiring(y));
                rhs.then(c.braiding_wiring(x, y)).then(c.braiding_wiring(y, x));
                r.add("ribbon", max_residual(c.twist_wiring(xy), rhs, Exec::Serial), labels, pat);
            };
            inst.push_back(std::move(in));
        }
    for (std::size_t i = 0; i < n; ++i) {
        const GObject& x = g.objects[i];
        Instance in{{x.label}, degrees({&x}), "ribbon.naturality", {}};
        in.run = [&c, &g, &opt, &homs, i, seed = instance_seed(opt.seed, index++),
                  labels = in.labels, pat = in.pattern](Report& r) {
            const GObject& x = g.objects[i];
            std::mt19937_64 rng(seed);
            for (std::size_t s = 0; s < opt.samples; ++s) {
                Sample f = sample_from(g, homs, i, rng);
                Wiring lhs = f.map;
                lhs.then(c.twist_wiring(f.target));
                Wiring rhs = c.twist_wiring(x);
                rhs.then(f.map);
                r.add("ribbon.naturality", max_residual(lhs, rhs, Exec::Serial), labels, pat).note =
                    "sample " + std::to_string(s) + " " + f.note;
            }
        };
        inst.push_back(std::move(in));
    }
    return run_instances("ribbon", opt, inst);
}

std::vector<Report> run_all_suites(const GCategory& c, const GeneratorSet& g, const SuiteOptions& opt)
{
    g.validate(c);
    std::vector<Report> out;
    out.push_back(pentagon_suite(c, g, opt));
    out.push_back(triangle_suite(c, g, opt));
    out.push_back(hexagon_suite(c, g, opt));
    out.push_back(naturality_suite(c, g, opt));
    out.push_back(ribbon_suite(c, g, opt));
    return out;
}

}  // namespace braidforge
