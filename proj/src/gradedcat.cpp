#include "braidforge/gradedcat.hpp"

#include <Eigen/LU>

namespace braidforge {

namespace {

int pattern(const GObject& x, const GObject& y)
{
    return x.degree * 2 + y.degree;
}

int pattern(const GObject& x, const GObject& y, const GObject& z)
{
    return x.degree * 4 + y.degree * 2 + z.degree;
}

const HModule& module_of(const GObject& x)
{
    if (!x.module)
        throw ShapeError("object '" + x.label + "' has no module structure");
    return *x.module;
}

}  // namespace

GCategory GCategory::create(HopfData h, AssocData a, std::optional<BraidData> b, Ambient ambient,
                            double tol)
{
    GCategory c = unchecked(std::move(h), std::move(a), std::move(b), ambient, tol);
    if (!c.valid()) {
        std::string what = "GCategory: data fails its checks:";
        for (const auto* e : c.validation_.failures())
            what += " " + e->axiom;
        throw DataError(what, c.validation_);
    }
    return c;
}

GCategory GCategory::unchecked(HopfData h, AssocData a, std::optional<BraidData> b,
                               Ambient ambient, double tol)
{
    GCategory c;
    h.validate_shapes();
    if (ambient == Ambient::Vect && b)
        b->omega = OmegaFlag::Identity;
    c.h_ = std::move(h);
    c.a_ = std::move(a);
    c.b_ = std::move(b);
    c.ambient_ = ambient;
    c.tol_ = tol;

    Report v("validation", tol);
    if (ambient == Ambient::Vect)
        v.add("ambient.even", c.h_.space.is_purely_even() ? 0.0 : 1.0);
    v.append(check_hopf_axioms(c.h_, tol), "hopf.");
    v.append(check_assoc_data(c.h_, c.a_, tol), "assoc.");
    if (c.b_) {
        Report br = check_braid_data(c.h_, c.a_, *c.b_, tol);
        const ReportEntry* central = br.find("sigma2_central");
        c.sigma2_central_ = central && central->pass;
        v.append(br, "braid.");
    }
    c.validation_ = std::move(v);
    c.prepare();
    return c;
}

OmegaFlag GCategory::omega() const
{
    return b_ ? b_->omega : OmegaFlag::Identity;
}

void GCategory::prepare()
{
    const SuperSpace& H = h_.space;
    const Mor s2 = h_.antipode * h_.antipode;
    {
        Wiring w({H, H});
        w.apply(1, 1, s2);
        p_ = Mor::element(tensor_obj(H, H), w.apply_to(a_.gamma.as_vector()));
    }
    {
        Wiring w({H, H});
        w.apply(0, 1, h_.antipode);
        r_ = Mor::element(tensor_obj(H, H), w.apply_to(a_.gamma.as_vector()));
    }
    {
        Wiring wq({H, H});
        wq.apply(1, 1, left_mult(a_.g, h_) * h_.antipode);
        const Mor q = Mor::element(tensor_obj(H, H), wq.apply_to(p_.as_vector()));
        Wiring w({H});
        w.insert(0, q).split(0, {H, H}).apply(1, 2, h_.mu).contract(1, 1, a_.lambda);
        phi_ = w.to_mor(Exec::Serial);
    }
    right_g_ = right_mult(a_.g, h_);
    if (b_) {
        sigma_m2_ = Mor::element(
            H, multiply(h_, 1, b_->sigma_inv.as_vector(), b_->sigma_inv.as_vector()));
        right_sigma_ = right_mult(b_->sigma, h_);
        right_sigma_inv_ = right_mult(b_->sigma_inv, h_);
    }
}

GObject GCategory::unit() const
{
    return module_object(trivial_module(h_));
}

GObject GCategory::module_object(const HModule& m) const
{
    if (ambient_ == Ambient::Vect && !m.carrier.is_purely_even())
        throw ShapeError("module '" + m.label + "' has odd vectors in a vect-based category");
    return GObject{0, m.label, m.carrier, m};
}

GObject GCategory::degree_one(const SuperSpace& v, std::string label) const
{
    if (ambient_ == Ambient::Vect && !v.is_purely_even())
        throw ShapeError("object '" + label + "' has odd vectors in a vect-based category");
    return GObject{1, std::move(label), v, std::nullopt};
}

std::vector<SuperSpace> GCategory::star_parts(const GObject& x, const GObject& y) const
{
    if (x.degree == 1 && y.degree == 1)
        return {h_.space, x.carrier, y.carrier};
    return {x.carrier, y.carrier};
}

std::size_t GCategory::star_dim(const GObject& x, const GObject& y) const
{
    std::size_t n = x.dim() * y.dim();
    return (x.degree == 1 && y.degree == 1) ? n * h_.dim() : n;
}

GObject GCategory::star(const GObject& x, const GObject& y) const
{
    const std::string label = "(" + x.label + "*" + y.label + ")";
    switch (pattern(x, y)) {
    case 0: {
        HModule m = module_tensor(h_, module_of(x), module_of(y));
        m.label = label;
        return GObject{0, label, m.carrier, std::move(m)};
    }
    case 1:
    case 2:
        return GObject{1, label, tensor_obj(x.carrier, y.carrier), std::nullopt};
    default: {
        const SuperSpace& H = h_.space;
        const SuperSpace carrier = tensor_obj(std::vector<SuperSpace>{H, x.carrier, y.carrier});
        Wiring act({H, carrier});
        act.split(1, {H, tensor_obj(x.carrier, y.carrier)}).apply(0, 2, h_.mu).merge_all();
        return GObject{0, label, carrier, HModule{label, carrier, std::move(act)}};
    }
    }
}

GMor GCategory::identity(const GObject& x) const
{
    return GMor{x, x, Mor::identity(x.carrier)};
}

Wiring GCategory::star_wiring(const GObject& x, const GObject& y, const Wiring& f,
                              const Wiring& g) const
{
    Wiring w({tensor_obj(star_parts(x, y))});
    w.split(0, star_parts(x, y));
    const std::size_t pos = (x.degree == 1 && y.degree == 1) ? 1 : 0;
    w.apply(pos, f).apply(pos + 1, g).merge_all();
    return w;
}

GMor GCategory::star_mor(const GMor& f, const GMor& g) const
{
    if (f.source.degree != f.target.degree || g.source.degree != g.target.degree)
        throw ShapeError("star_mor: morphisms must preserve degree");
    const Wiring w = star_wiring(f.source, g.source, Wiring::of(f.map), Wiring::of(g.map));
    const GObject src = star(f.source, g.source);
    const GObject tgt = star(f.target, g.target);
    Mor m = w.to_mor();
    return GMor{src, tgt, Mor(src.carrier, tgt.carrier, m.matrix())};
}

Wiring GCategory::act(const GObject& x, const Mor& element) const
{
    return act_element(h_, module_of(x), element);
}

Wiring GCategory::associator_wiring(const GObject& x, const GObject& y, const GObject& z) const
{
    const SuperSpace& H = h_.space;
    const GObject src = star(x, star(y, z));
    Wiring w({src.carrier});
    switch (pattern(x, y, z)) {
    case 0b000:
    case 0b001:
    case 0b100:
        return w;
    case 0b010:
        // a x b |-> p'a x p''b
        w.split(0, {x.carrier, y.carrier, z.carrier})
            .insert(0, p_)
            .split(0, {H, H})
            .permute({0, 2, 3, 1, 4})
            .apply(0, module_of(x).action)
            .apply(2, module_of(z).action);
        break;
    case 0b011:
        // a h x y |-> h2 S^-1(h1)a x y
        w.split(0, {x.carrier, H, y.carrier, z.carrier})
            .apply(1, 1, h_.delta, {H, H})
            .permute({2, 1, 0, 3, 4})
            .apply(1, 1, h_.antipode_inv)
            .apply(1, module_of(x).action);
        break;
    case 0b101:
        // h x a y |-> h gamma' x gamma''a y
        w.split(0, {H, x.carrier, y.carrier, z.carrier})
            .insert(1, a_.gamma)
            .split(1, {H, H})
            .apply(0, 2, h_.mu)
            .permute({0, 2, 1, 3, 4})
            .apply(2, module_of(y).action);
        break;
    case 0b110:
        // h x y a |-> h1 x y (h2 g)a
        w.split(0, {H, x.carrier, y.carrier, z.carrier})
            .apply(0, 1, h_.delta, {H, H})
            .permute({0, 2, 3, 1, 4})
            .apply(3, 1, right_g_)
            .apply(3, module_of(z).action);
        break;
    case 0b111:
        // x h y z |-> phi(h) x y z
        w.split(0, {x.carrier, H, y.carrier, z.carrier}).permute({1, 0, 2, 3}).apply(0, 1, phi_);
        break;
    }
    w.merge_all();
    return w;
}

GMor GCategory::associator(const GObject& x, const GObject& y, const GObject& z) const
{
    const GObject src = star(x, star(y, z));
    const GObject tgt = star(star(x, y), z);
    Mor m = associator_wiring(x, y, z).to_mor();
    GMor out{src, tgt, Mor(src.carrier, tgt.carrier, m.matrix())};
    inverse(out);
    return out;
}

Wiring GCategory::braiding_wiring(const GObject& x, const GObject& y) const
{
    if (!b_)
        throw Error("braiding requested but no braiding data attached");
    const SuperSpace& H = h_.space;
    const OmegaFlag om = omega();
    Wiring w({tensor_obj(star_parts(x, y))});
    switch (pattern(x, y)) {
    case 0:
        w.split(0, {x.carrier, y.carrier})
            .insert(0, r_)
            .split(0, {H, H})
            .permute({0, 2, 1, 3})
            .apply(0, module_of(x).action)
            .apply(1, module_of(y).action)
            .permute({1, 0});
        break;
    case 1:
        w.split(0, {x.carrier, y.carrier}).apply(0, act(x, b_->sigma)).permute({1, 0});
        break;
    case 2:
        w.split(0, {x.carrier, y.carrier})
            .apply(1, 1, omega_map(y.carrier, om))
            .apply(1, act(y, b_->sigma))
            .permute({1, 0});
        break;
    default:
        w.split(0, {H, x.carrier, y.carrier})
            .apply(2, 1, omega_map(y.carrier, om))
            .apply(0, 1, right_sigma_inv_)
            .permute({0, 2, 1})
            .scale(b_->beta);
        break;
    }
    w.merge_all();
    return w;
}

Wiring GCategory::braiding_inverse_wiring(const GObject& x, const GObject& y) const
{
    if (!b_)
        throw Error("braiding requested but no braiding data attached");
    const SuperSpace& H = h_.space;
    const OmegaFlag om = omega();
    Wiring w({tensor_obj(star_parts(y, x))});
    switch (pattern(x, y)) {
    case 0:
        w.split(0, {y.carrier, x.carrier})
            .permute({1, 0})
            .insert(0, a_.gamma)
            .split(0, {H, H})
            .permute({0, 2, 1, 3})
            .apply(0, module_of(x).action)
            .apply(1, module_of(y).action);
        break;
    case 1:
        w.split(0, {y.carrier, x.carrier}).permute({1, 0}).apply(0, act(x, b_->sigma_inv));
        break;
    case 2:
        w.split(0, {y.carrier, x.carrier})
            .permute({1, 0})
            .apply(1, act(y, b_->sigma_inv))
            .apply(1, 1, omega_map(y.carrier, om));
        break;
    default:
        w.split(0, {H, y.carrier, x.carrier})
            .permute({0, 2, 1})
            .apply(2, 1, omega_map(y.carrier, om))
            .apply(0, 1, right_sigma_)
            .scale(1.0 / b_->beta);
        break;
    }
    w.merge_all();
    return w;
}

GMor GCategory::braiding(const GObject& x, const GObject& y) const
{
    const GObject src = star(x, y);
    const GObject tgt = star(y, x);
    Mor m = braiding_wiring(x, y).to_mor();
    GMor out{src, tgt, Mor(src.carrier, tgt.carrier, m.matrix())};
    inverse(out);
    return out;
}

Wiring GCategory::twist_wiring(const GObject& x) const
{
    if (!has_twist())
        throw Error("twist requested but sigma^2 is not central (or no braiding data)");
    if (x.degree == 0)
        return act(x, sigma_m2_);
    Wiring w({x.carrier});
    w.apply(0, 1, omega_map(x.carrier, omega())).scale(1.0 / b_->beta);
    return w;
}

GMor GCategory::twist(const GObject& x) const
{
    Mor m = twist_wiring(x).to_mor();
    GMor out{x, x, Mor(x.carrier, x.carrier, m.matrix())};
    inverse(out);
    return out;
}

GMor GCategory::inverse(const GMor& f) const
{
    const Matrix& m = f.map.matrix();
    if (m.rows() != m.cols())
        throw Error("inverse: morphism is not square");
    Eigen::FullPivLU<Matrix> lu(m);
    if (!lu.isInvertible())
        throw Error("inverse: morphism is singular");
    Matrix inv = lu.inverse();
    const double res = std::max(max_abs(m * inv - Matrix::Identity(m.rows(), m.cols())),
                                max_abs(inv * m - Matrix::Identity(m.rows(), m.cols())));
    if (res > std::max(tol_, 1e-9))
        throw Error("inverse: verification residual " + std::to_string(res));
    // clear parity-violating roundoff
    for (Eigen::Index i = 0; i < inv.rows(); ++i)
        for (Eigen::Index j = 0; j < inv.cols(); ++j)
            if (f.source.carrier.parity(i) != f.target.carrier.parity(j))
                inv(i, j) = 0;
    return GMor{f.target, f.source, Mor(f.target.carrier, f.source.carrier, std::move(inv))};
}

double GCategory::intertwiner_residual(const GMor& f) const
{
    if (f.source.degree != f.target.degree)
        throw ShapeError("GMor: degrees differ");
    if (f.source.degree == 1)
        return 0.0;
    return braidforge::intertwiner_residual(h_, module_of(f.source), module_of(f.target), f.map);
}

}  // namespace braidforge
