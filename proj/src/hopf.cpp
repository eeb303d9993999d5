#include "braidforge/hopf.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace braidforge {

namespace {

void expect(const Mor& m, const SuperSpace& src, const SuperSpace& tgt, const char* name)
{
    if (!m.source().same_grading(src) || !m.target().same_grading(tgt))
        throw ShapeError(std::string("HopfData: ") + name + " has the wrong shape");
}

Wiring ident(const SuperSpace& h, std::size_t k)
{
    return Wiring(std::vector<SuperSpace>(k, h));
}

double vec_diff(const Vector& a, const Vector& b)
{
    return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

Vector apply_vec(const Mor& f, const Vector& v)
{
    return f.matrix() * v;
}

}  // namespace

void HopfData::validate_shapes() const
{
    const SuperSpace one = SuperSpace::unit();
    const SuperSpace hh = tensor_obj(space, space);
    expect(mu, hh, space, "mu");
    expect(eta, one, space, "eta");
    expect(delta, space, hh, "delta");
    expect(eps, space, one, "eps");
    expect(antipode, space, space, "antipode");
    expect(antipode_inv, space, space, "antipode_inv");
}

Mor left_mult(const Mor& x, const HopfData& h)
{
    if (!x.target().same_grading(h.space) || x.source().dim() != 1)
        throw ShapeError("left_mult: not an element of H");
    Wiring w({h.space});
    w.insert(0, x).apply(0, 2, h.mu);
    return w.to_mor(Exec::Serial);
}

Mor right_mult(const Mor& x, const HopfData& h)
{
    if (!x.target().same_grading(h.space) || x.source().dim() != 1)
        throw ShapeError("right_mult: not an element of H");
    Wiring w({h.space});
    w.insert(1, x).apply(0, 2, h.mu);
    return w.to_mor(Exec::Serial);
}

Mor adjoint(const Mor& x, const Mor& x_inv, const HopfData& h)
{
    if (!x.target().same_grading(h.space) || !x_inv.target().same_grading(h.space))
        throw ShapeError("adjoint: not elements of H");
    Wiring w({h.space});
    w.insert(0, x).insert(2, x_inv).apply(0, 2, h.mu).apply(0, 2, h.mu);
    return w.to_mor(Exec::Serial);
}

Wiring power_product(const HopfData& h, std::size_t k)
{
    Wiring w(std::vector<SuperSpace>(2 * k, h.space));
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < k; ++i) {
        order.push_back(i);
        order.push_back(k + i);
    }
    w.permute(order);
    for (std::size_t i = 0; i < k; ++i)
        w.apply(i, 2, h.mu);
    return w;
}

Vector multiply(const HopfData& h, std::size_t k, const Vector& x, const Vector& y)
{
    const Wiring w = power_product(h, k);
    const std::uint64_t n = static_cast<std::uint64_t>(y.size());
    SparseColumn s;
    for (Eigen::Index a = 0; a < x.size(); ++a) {
        if (x(a) == Scalar(0))
            continue;
        for (Eigen::Index b = 0; b < y.size(); ++b)
            if (y(b) != Scalar(0))
                s.push_back({static_cast<std::uint64_t>(a) * n + static_cast<std::uint64_t>(b),
                             x(a) * y(b)});
    }
    Vector out = Vector::Zero(static_cast<Eigen::Index>(w.target_dim()));
    for (const auto& e : w.push(std::move(s)))
        out(static_cast<Eigen::Index>(e.index)) = e.value;
    return out;
}

Vector unit_power(const HopfData& h, std::size_t k)
{
    Vector out = Vector::Ones(1);
    const Vector e = h.eta.as_vector();
    for (std::size_t i = 0; i < k; ++i) {
        Vector next(out.size() * e.size());
        for (Eigen::Index a = 0; a < out.size(); ++a)
            next.segment(a * e.size(), e.size()) = out(a) * e;
        out = std::move(next);
    }
    return out;
}

Vector element_exp(const HopfData& h, std::size_t k, const Vector& x, std::size_t max_terms)
{
    Vector result = unit_power(h, k);
    Vector term = result;
    for (std::size_t n = 1; n < max_terms; ++n) {
        term = multiply(h, k, term, x) / double(n);
        if (term.cwiseAbs().maxCoeff() == 0.0)
            break;
        result += term;
    }
    return result;
}

Vector embed_legs(const HopfData& h, const Vector& x, std::size_t i, std::size_t j)
{
    if (i >= j || j > 2)
        throw ShapeError("embed_legs: legs must satisfy i < j <= 2");
    const std::size_t missing = 3 - i - j;
    Wiring w({h.space, h.space});
    w.insert(missing, h.eta);
    return w.apply_to(x);
}

Matrix reshape_pair(const HopfData& h, const Vector& x)
{
    const Eigen::Index d = static_cast<Eigen::Index>(h.dim());
    Matrix m(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
        for (Eigen::Index j = 0; j < d; ++j)
            m(i, j) = x(i * d + j);
    return m;
}

double smallest_singular_value(const Matrix& m)
{
    if (m.size() == 0)
        return 0.0;
    Eigen::JacobiSVD<Matrix> svd(m);
    return svd.singularValues().minCoeff();
}

Report check_hopf_axioms(const HopfData& h, double tol)
{
    h.validate_shapes();
    Report r("hopf_axioms", tol);
    const SuperSpace& H = h.space;

    {
        Wiring a = ident(H, 3), b = ident(H, 3);
        a.apply(0, 2, h.mu).apply(0, 2, h.mu);
        b.apply(1, 2, h.mu).apply(0, 2, h.mu);
        r.add("assoc", max_residual(a, b));
    }
    {
        Wiring l = ident(H, 1), rr = ident(H, 1);
        l.insert(0, h.eta).apply(0, 2, h.mu);
        rr.insert(1, h.eta).apply(0, 2, h.mu);
        r.add("unit.left", max_residual(l, ident(H, 1)));
        r.add("unit.right", max_residual(rr, ident(H, 1)));
    }
    {
        Wiring a = ident(H, 1), b = ident(H, 1);
        a.apply(0, 1, h.delta, {H, H}).apply(0, 1, h.delta, {H, H});
        b.apply(0, 1, h.delta, {H, H}).apply(1, 1, h.delta, {H, H});
        r.add("coassoc", max_residual(a, b));
    }
    {
        Wiring l = ident(H, 1), rr = ident(H, 1);
        l.apply(0, 1, h.delta, {H, H}).contract(0, 1, h.eps);
        rr.apply(0, 1, h.delta, {H, H}).contract(1, 1, h.eps);
        r.add("counit.left", max_residual(l, ident(H, 1)));
        r.add("counit.right", max_residual(rr, ident(H, 1)));
    }
    {
        Wiring a = ident(H, 2), b = ident(H, 2);
        a.apply(0, 2, h.mu).apply(0, 1, h.delta, {H, H});
        b.apply(0, 1, h.delta, {H, H})
            .apply(2, 1, h.delta, {H, H})
            .permute({0, 2, 1, 3})
            .apply(0, 2, h.mu)
            .apply(1, 2, h.mu);
        r.add("bialgebra", max_residual(a, b));
    }
    {
        const Vector de = apply_vec(h.delta, h.eta.as_vector());
        r.add("delta_eta", vec_diff(de, unit_power(h, 2)));
        Wiring a = ident(H, 2), b = ident(H, 2);
        a.apply(0, 2, h.mu).contract(0, 1, h.eps);
        b.contract(0, 1, h.eps).contract(0, 1, h.eps);
        r.add("eps_mu", max_residual(a, b));
        r.add("eps_eta", std::abs((h.eps.matrix() * h.eta.matrix())(0, 0) - Scalar(1)));
    }
    {
        const Mor ee = h.eta * h.eps;
        Wiring l = ident(H, 1), rr = ident(H, 1);
        l.apply(0, 1, h.delta, {H, H}).apply(0, 1, h.antipode).apply(0, 2, h.mu);
        rr.apply(0, 1, h.delta, {H, H}).apply(1, 1, h.antipode).apply(0, 2, h.mu);
        r.add("antipode.left", max_residual(l, ee));
        r.add("antipode.right", max_residual(rr, ee));
        const Mor id = Mor::identity(H);
        r.add("antipode_inverse.left", approx_eq(h.antipode * h.antipode_inv, id, tol).residual);
        r.add("antipode_inverse.right", approx_eq(h.antipode_inv * h.antipode, id, tol).residual);
        r.add("derived.eps_antipode", approx_eq(h.eps * h.antipode, h.eps, tol).residual);
        r.add("derived.antipode_eta", approx_eq(h.antipode * h.eta, h.eta, tol).residual);
    }
    return r;
}

GrouplikeSolution solve_grouplike(const HopfData& h, const Mor& lambda, double tol)
{
    GrouplikeSolution out;
    const SuperSpace& H = h.space;
    const Eigen::RowVectorXcd lam = lambda.matrix().row(0);
    const double norm2 = lam.squaredNorm();
    if (norm2 == 0.0) {
        out.failure = "lambda is zero";
        return out;
    }
    Wiring w = ident(H, 1);
    w.apply(0, 1, h.delta, {H, H}).contract(1, 1, lambda);
    const Matrix m = w.to_mor(Exec::Serial).matrix();
    // least-squares rank-one fit m = g lam, exact on the support of lam
    const Vector g = m * lam.adjoint() / norm2;
    out.consistency = max_abs(m - g * lam);
    if (out.consistency > tol) {
        out.failure = "inconsistent system (id (x) lambda) Delta = g lambda";
        return out;
    }
    Mor gm;
    try {
        gm = Mor::element(H, g);
    } catch (const ShapeError&) {
        out.failure = "solution is not even";
        return out;
    }
    {
        // Delta g against g (x) g
        Vector gg(g.size() * g.size());
        for (Eigen::Index a = 0; a < g.size(); ++a)
            gg.segment(a * g.size(), g.size()) = g(a) * g;
        out.coproduct = vec_diff(apply_vec(h.delta, g), gg);
    }
    out.counit = std::abs((h.eps.matrix() * g)(0) - Scalar(1));
    out.inverse = vec_diff(multiply(h, 1, g, apply_vec(h.antipode, g)), h.eta.as_vector());
    if (out.coproduct > tol || out.counit > tol)
        out.failure = "solution is not group-like";
    else if (out.inverse > tol)
        out.failure = "solution is not invertible";
    out.g = gm;
    return out;
}

Report check_assoc_data(const HopfData& h, const AssocData& a, double tol)
{
    h.validate_shapes();
    Report r("assoc_data", tol);
    const SuperSpace& H = h.space;
    const Vector gamma = a.gamma.as_vector();
    const Vector g = a.g.as_vector();

    {
        Wiring dl({H, H}), dr({H, H});
        dl.apply(0, 1, h.delta, {H, H});
        dr.apply(1, 1, h.delta, {H, H});
        const Vector g12 = embed_legs(h, gamma, 0, 1);
        const Vector g13 = embed_legs(h, gamma, 0, 2);
        const Vector g23 = embed_legs(h, gamma, 1, 2);
        r.add("copairing.delta_left", vec_diff(dl.apply_to(gamma), multiply(h, 3, g13, g23)));
        r.add("copairing.delta_right", vec_diff(dr.apply_to(gamma), multiply(h, 3, g12, g13)));
        Wiring cl({H, H}), cr({H, H});
        cl.contract(0, 1, h.eps);
        cr.contract(1, 1, h.eps);
        r.add("copairing.counit_left", vec_diff(cl.apply_to(gamma), h.eta.as_vector()));
        r.add("copairing.counit_right", vec_diff(cr.apply_to(gamma), h.eta.as_vector()));
        Wiring sl({H, H}), sr({H, H});
        sl.apply(0, 1, h.antipode);
        sr.apply(1, 1, h.antipode);
        r.add("copairing.antipode", vec_diff(sl.apply_to(gamma), sr.apply_to(gamma)));
    }
    r.add_lower_bound("nondegeneracy", smallest_singular_value(reshape_pair(h, gamma)));
    {
        Wiring c = ident(H, 1);
        c.apply(0, 1, h.delta, {H, H}).contract(0, 1, a.lambda);
        r.add("cointegral.right", max_residual(c, h.eta * a.lambda));
        Wiring d = ident(H, 1);
        d.apply(0, 1, h.delta, {H, H}).contract(1, 1, a.lambda);
        r.add("grouplike.equation", max_residual(d, a.g * a.lambda));
        Vector gg(g.size() * g.size());
        for (Eigen::Index i = 0; i < g.size(); ++i)
            gg.segment(i * g.size(), g.size()) = g(i) * g;
        r.add("grouplike.coproduct", vec_diff(apply_vec(h.delta, g), gg));
        r.add("grouplike.counit", std::abs((h.eps.matrix() * g)(0) - Scalar(1)));
    }
    {
        Wiring n({H, H});
        n.apply(1, 1, h.antipode).contract(0, 1, a.lambda).contract(0, 1, a.lambda);
        r.add("normalization", std::abs(n.apply_to(gamma)(0) - Scalar(1)));
    }
    {
        const Mor g_inv = Mor::element(H, apply_vec(h.antipode, g));
        const Mor twist = h.antipode * h.antipode * adjoint(g_inv, a.g, h);
        Wiring s({H, H}), t({H, H});
        s.permute({1, 0});
        t.apply(1, 1, twist);
        r.add("symmetry", vec_diff(s.apply_to(gamma), t.apply_to(gamma)));
    }
    return r;
}

Report check_braid_data(const HopfData& h, const AssocData& a, const BraidData& b, double tol)
{
    h.validate_shapes();
    Report r("braid_data", tol);
    const SuperSpace& H = h.space;
    const Vector sigma = b.sigma.as_vector();
    const Vector sigma_inv = b.sigma_inv.as_vector();
    const Vector gamma = a.gamma.as_vector();
    const Vector one = h.eta.as_vector();

    r.add("sigma.inverse", std::max(vec_diff(multiply(h, 1, sigma, sigma_inv), one),
                                    vec_diff(multiply(h, 1, sigma_inv, sigma), one)));
    r.add_lower_bound("beta.nonzero", std::abs(b.beta));
    {
        Wiring w({H, H});
        w.apply(0, 1, left_mult(b.sigma_inv, h)).apply(1, 1, right_mult(b.sigma_inv, h));
        r.add("cond1.gamma_twist", vec_diff(w.apply_to(apply_vec(h.delta, sigma)), gamma));
    }
    const Mor ad = adjoint(b.sigma, b.sigma_inv, h);
    const Mor ad_inv = adjoint(b.sigma_inv, b.sigma, h);
    r.add("cond2.lambda_antipode", approx_eq(a.lambda * h.antipode, a.lambda * ad, tol).residual);
    r.add("cond2.lambda_sigma", std::abs((a.lambda.matrix() * sigma)(0) - b.beta * b.beta));
    {
        Wiring l({H, H}), rr({H, H});
        l.apply(0, 2, h.mu).apply(0, 1, ad);
        rr.apply(0, 1, ad).apply(1, 1, ad).apply(0, 2, h.mu);
        r.add("cond3.algebra", max_residual(l, rr));
        r.add("cond3.unit", vec_diff(apply_vec(ad, one), one));
        Wiring c({H}), d({H});
        c.apply(0, 1, ad).apply(0, 1, h.delta, {H, H});
        d.apply(0, 1, h.delta, {H, H}).permute({1, 0}).apply(0, 1, ad).apply(1, 1, ad);
        r.add("cond3.coopposite", max_residual(c, d));
        r.add("cond3.counit", approx_eq(h.eps * ad, h.eps, tol).residual);
        r.add("cond3.antipode", approx_eq(ad * h.antipode, h.antipode_inv * ad, tol).residual);
        r.add("cond3.bijective", approx_eq(ad_inv * ad, Mor::identity(H), tol).residual);
    }
    {
        const Vector g = a.g.as_vector();
        const Vector g_inv = apply_vec(h.antipode, g);
        const Vector s_sigma = apply_vec(h.antipode, sigma);
        r.add("cond4.antipode_sigma", vec_diff(s_sigma, multiply(h, 1, g, sigma)));
        r.add("cond4.grouplike_sides", vec_diff(multiply(h, 1, g, sigma), multiply(h, 1, sigma, g_inv)));
    }
    {
        Wiring l({H, H}), rr({H, H});
        l.apply(1, 1, omega_map(H, b.omega));
        rr.apply(0, 1, ad).apply(1, 1, ad_inv * h.antipode);
        r.add("cond5.omega", vec_diff(l.apply_to(gamma), rr.apply_to(gamma)));
    }
    {
        const Mor s2 = Mor::element(H, multiply(h, 1, sigma, sigma));
        const double res = approx_eq(left_mult(s2, h), right_mult(s2, h), tol).residual;
        r.add_info("sigma2_central", res, res <= tol, "gates the twist");
    }
    return r;
}

}  // namespace braidforge
