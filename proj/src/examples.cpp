#include "braidforge/examples.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/LU>
#include <Eigen/SVD>

namespace braidforge::examples {

namespace {

constexpr Scalar kI{0.0, 1.0};

Scalar expi(double x)
{
    return std::polar(1.0, x);
}

std::string bits(std::size_t a, int k)
{
    std::string s;
    for (int i = k - 1; i >= 0; --i)
        s += ((a >> i) & 1) ? '1' : '0';
    return s;
}

// sign of concatenating the sorted generator sets a and b (bit masks)
int merge_sign(std::uint32_t a, std::uint32_t b)
{
    int inv = 0;
    for (std::uint32_t t = b; t; t &= t - 1) {
        const int j = std::countr_zero(t);
        inv += std::popcount(a >> (j + 1));
    }
    return (inv & 1) ? -1 : 1;
}

Mor functional_at(const SuperSpace& h, std::size_t index, Scalar value = 1.0)
{
    Eigen::RowVectorXcd row = Eigen::RowVectorXcd::Zero(static_cast<Eigen::Index>(h.dim()));
    row(static_cast<Eigen::Index>(index)) = value;
    return Mor::functional(h, row);
}

Scalar scalar_of(const GMor& f)
{
    return f.map.matrix()(0, 0);
}

}  // namespace

// ---------------------------------------------------------------- TY data

void TYParams::validate(double tol) const
{
    if (k < 1 || k > 6)
        throw ShapeError("TYParams: k must lie in [1, 6]");
    const std::size_t n = order();
    if (chi.size() != n)
        throw ShapeError("TYParams: chi table must be 2^k x 2^k");
    for (const auto& row : chi) {
        if (row.size() != n)
            throw ShapeError("TYParams: chi table must be 2^k x 2^k");
        for (int v : row)
            if (v != 1 && v != -1)
                throw ShapeError("TYParams: chi entries must be +1 or -1");
    }
    Matrix m(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (chi[a][b] != chi[b][a])
                throw ShapeError("TYParams: chi is not symmetric");
            for (std::size_t c = 0; c < n; ++c)
                if (chi[a ^ c][b] != chi[a][b] * chi[c][b])
                    throw ShapeError("TYParams: chi is not a bicharacter");
            m(a, b) = chi[a][b];
        }
    }
    if (smallest_singular_value(m) < tol)
        throw ShapeError("TYParams: chi is degenerate");
    if (std::abs(tau * tau - 1.0 / double(n)) > tol)
        throw ShapeError("TYParams: tau^2 must equal 1/|G|");
    if (sigma.size() != n)
        throw ShapeError("TYParams: sigma must have 2^k values");
    if (std::abs(sigma[0] - Scalar(1)) > tol)
        throw ShapeError("TYParams: sigma(e) must be 1");
    Scalar total = 0;
    for (std::size_t a = 0; a < n; ++a) {
        total += sigma[a];
        for (std::size_t b = 0; b < n; ++b)
            if (std::abs(double(chi[a][b]) * sigma[a] * sigma[b] - sigma[a ^ b]) > tol)
                throw ShapeError("TYParams: sigma is not a quadratic form for chi");
    }
    if (std::abs(beta) <= tol)
        throw ShapeError("TYParams: beta must be nonzero");
    if (std::abs(beta * beta - tau * total) > tol)
        throw ShapeError("TYParams: beta^2 must equal tau * sum sigma");
}

TYParams TYParams::from_gram(int k, const std::vector<std::vector<int>>& gram,
                             std::optional<Scalar> tau, std::optional<std::vector<Scalar>> sigma_gens,
                             std::optional<Scalar> beta)
{
    if (k < 1 || k > 6)
        throw ShapeError("TYParams: k must lie in [1, 6]");
    if (gram.size() != std::size_t(k))
        throw ShapeError("TYParams: Gram matrix must be k x k");
    for (const auto& row : gram) {
        if (row.size() != std::size_t(k))
            throw ShapeError("TYParams: Gram matrix must be k x k");
        for (int v : row)
            if (v != 0 && v != 1)
                throw ShapeError("TYParams: Gram entries must be 0 or 1");
    }
    TYParams p;
    p.k = k;
    const std::size_t n = p.order();
    p.chi.assign(n, std::vector<int>(n, 1));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            int e = 0;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    e += int((a >> i) & 1) * gram[i][j] * int((b >> j) & 1);
            p.chi[a][b] = (e & 1) ? -1 : 1;
        }
    p.tau = tau.value_or(Scalar(1.0 / std::sqrt(double(n))));
    std::vector<Scalar> gens;
    if (sigma_gens) {
        if (sigma_gens->size() != std::size_t(k))
            throw ShapeError("TYParams: need one sigma value per generator");
        gens = *sigma_gens;
    } else {
        for (int i = 0; i < k; ++i)
            gens.push_back(gram[i][i] ? kI : Scalar(1));
    }
    p.sigma.assign(n, 1.0);
    for (std::size_t a = 1; a < n; ++a) {
        const int i = std::countr_zero(a);
        const std::size_t rest = a ^ (std::size_t{1} << i);
        p.sigma[a] = double(p.chi[rest][std::size_t{1} << i]) * p.sigma[rest] * gens[i];
    }
    Scalar total = 0;
    for (auto s : p.sigma)
        total += s;
    p.beta = beta.value_or(std::sqrt(p.tau * total));
    return p;
}

TYParams ising_params()
{
    return TYParams::from_gram(1, {{1}}, Scalar(1.0 / std::numbers::sqrt2), std::vector<Scalar>{kI},
                               expi(std::numbers::pi / 8));
}

// ---------------------------------------------------------------- Hopf algebras

HopfData function_algebra(int k)
{
    const std::size_t n = std::size_t{1} << k;
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a)
        labels.push_back("d" + bits(a, k));
    HopfData h;
    h.space = SuperSpace(labels, std::vector<std::uint8_t>(n, 0));
    const SuperSpace hh = tensor_obj(h.space, h.space);
    Matrix mu = Matrix::Zero(n, n * n);
    Matrix delta = Matrix::Zero(n * n, n);
    for (std::size_t a = 0; a < n; ++a) {
        mu(a, a * n + a) = 1;
        for (std::size_t g = 0; g < n; ++g)
            delta(a * n + (a ^ g), g) = 1;
    }
    h.mu = Mor(hh, h.space, mu);
    h.eta = Mor::element(h.space, Vector::Ones(n));
    h.delta = Mor(h.space, hh, delta);
    h.eps = functional_at(h.space, 0);
    h.antipode = Mor::identity(h.space);
    h.antipode_inv = Mor::identity(h.space);
    return h;
}

HopfData exterior_algebra(int n)
{
    if (n < 0 || n > 4)
        throw ShapeError("exterior_algebra: n must lie in [0, 4]");
    const int m = 2 * n;
    std::vector<std::uint32_t> basis;
    for (int r = 0; r <= m; ++r) {
        // subsets of size r in lexicographic order of their sorted element lists
        std::vector<std::uint32_t> level;
        for (std::uint32_t s = 0; s < (1u << m); ++s)
            if (std::popcount(s) == r)
                level.push_back(s);
        std::sort(level.begin(), level.end(), [m](std::uint32_t a, std::uint32_t b) {
            for (int i = 0; i < m; ++i) {
                const bool ia = (a >> i) & 1, ib = (b >> i) & 1;
                if (ia != ib)
                    return ia;
            }
            return false;
        });
        basis.insert(basis.end(), level.begin(), level.end());
    }
    const std::size_t d = basis.size();
    std::vector<std::size_t> index(std::size_t{1} << m);
    std::vector<std::string> labels;
    std::vector<std::uint8_t> parities;
    for (std::size_t i = 0; i < d; ++i) {
        index[basis[i]] = i;
        std::string l;
        for (int j = 0; j < m; ++j)
            if ((basis[i] >> j) & 1)
                l += "e" + std::to_string(j + 1);
        labels.push_back(l.empty() ? "1" : l);
        parities.push_back(std::popcount(basis[i]) & 1);
    }
    HopfData h;
    h.space = SuperSpace(labels, parities);
    const SuperSpace hh = tensor_obj(h.space, h.space);
    Matrix mu = Matrix::Zero(d, d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if ((basis[i] & basis[j]) == 0)
                mu(index[basis[i] | basis[j]], i * d + j) = merge_sign(basis[i], basis[j]);
    h.mu = Mor(hh, h.space, mu);
    Vector unit = Vector::Zero(d);
    unit(0) = 1;
    h.eta = Mor::element(h.space, unit);
    // primitive generators, coproduct extended multiplicatively in H (x) H
    Matrix delta = Matrix::Zero(d * d, d);
    for (std::size_t i = 0; i < d; ++i) {
        Vector v = unit_power(h, 2);
        for (int j = 0; j < m; ++j) {
            if (!((basis[i] >> j) & 1))
                continue;
            const std::size_t e = index[1u << j];
            Vector prim = Vector::Zero(d * d);
            prim(e * d) += 1;
            prim(e) += 1;
            v = multiply(h, 2, v, prim);
        }
        delta.col(i) = v;
    }
    h.delta = Mor(h.space, hh, delta);
    h.eps = functional_at(h.space, 0);
    Matrix s = Matrix::Zero(d, d);
    for (std::size_t i = 0; i < d; ++i)
        s(i, i) = (std::popcount(basis[i]) & 1) ? -1.0 : 1.0;
    h.antipode = Mor(h.space, h.space, s);
    h.antipode_inv = Mor(h.space, h.space, s);
    return h;
}

HopfData sweedler_algebra()
{
    // basis G^a x^b at index 2b + a: 1, G, x, Gx
    HopfData h;
    h.space = SuperSpace({"1", "G", "x", "Gx"}, {0, 0, 0, 0});
    const SuperSpace hh = tensor_obj(h.space, h.space);
    auto idx = [](int a, int b) { return 2 * b + a; };
    Matrix mu = Matrix::Zero(4, 16);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int e = 0; e < 2; ++e)
                    if (b + e < 2)
                        mu(idx((a + c) % 2, b + e), idx(a, b) * 4 + idx(c, e)) = (b && c) ? -1 : 1;
    h.mu = Mor(hh, h.space, mu);
    Vector unit = Vector::Zero(4);
    unit(0) = 1;
    h.eta = Mor::element(h.space, unit);
    auto e = [](int i, int j) {
        Vector v = Vector::Zero(16);
        v(i * 4 + j) = 1;
        return v;
    };
    const Vector dg = e(1, 1);
    const Vector dx = e(2, 0) + e(1, 2);
    Matrix delta(16, 4);
    delta.col(0) = e(0, 0);
    delta.col(1) = dg;
    delta.col(2) = dx;
    delta.col(3) = multiply(h, 2, dg, dx);
    h.delta = Mor(h.space, hh, delta);
    Eigen::RowVectorXcd eps(4);
    eps << 1, 1, 0, 0;
    h.eps = Mor::functional(h.space, eps);
    Matrix s = Matrix::Zero(4, 4);
    s(0, 0) = 1;
    s(1, 1) = 1;
    s(3, 2) = -1;
    s(2, 3) = 1;
    h.antipode = Mor(h.space, h.space, s);
    h.antipode_inv = Mor(h.space, h.space, s * s * s);
    return h;
}

// ---------------------------------------------------------------- categories

GCategory tambara_yamagami(const TYParams& p, double tol)
{
    p.validate(tol);
    HopfData h = function_algebra(p.k);
    const std::size_t n = p.order();
    Vector gamma(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            gamma(a * n + b) = double(p.chi[a][b]);
    AssocData a;
    a.gamma = Mor::element(tensor_obj(h.space, h.space), gamma);
    a.lambda = Mor::functional(h.space, Eigen::RowVectorXcd::Constant(n, p.tau));
    GrouplikeSolution g = solve_grouplike(h, a.lambda, tol);
    if (!g.ok())
        throw Error("tambara_yamagami: " + g.failure);
    a.g = *g.g;
    Vector s(n), si(n);
    for (std::size_t x = 0; x < n; ++x) {
        s(x) = p.sigma[x];
        si(x) = 1.0 / p.sigma[x];
    }
    BraidData b{Mor::element(h.space, s), Mor::element(h.space, si), p.beta, OmegaFlag::Identity};
    return GCategory::create(std::move(h), std::move(a), std::move(b), Ambient::Vect, tol);
}

GCategory ising(double tol)
{
    return tambara_yamagami(ising_params(), tol);
}

Vector sf_copairing(const HopfData& h, int n)
{
    const std::size_t d = h.dim();
    Vector c = Vector::Zero(d * d);
    for (int k = 0; k < n; ++k) {
        // generators are basis vectors 1..2n
        const std::size_t a = 1 + 2 * k, b = 2 + 2 * k;
        c(a * d + b) += 1;
        c(b * d + a) -= 1;
    }
    return c;
}

Vector sf_chat(const HopfData& h, int n)
{
    const std::size_t d = h.dim();
    Vector chat = Vector::Zero(d * d);
    for (int k = 0; k < n; ++k) {
        const std::size_t a = 1 + 2 * k, b = 2 + 2 * k;
        chat(b * d + a) += -2.0;
    }
    return h.mu.matrix() * chat;
}

GCategory symplectic_fermions(int n, double tol)
{
    if (n < 1 || n > 3)
        throw ShapeError("symplectic_fermions: n must lie in [1, 3]");
    HopfData h = exterior_algebra(n);
    const std::size_t d = h.dim();
    AssocData a;
    a.gamma = Mor::element(tensor_obj(h.space, h.space), element_exp(h, 2, sf_copairing(h, n)));
    const Vector chat = sf_chat(h, n);
    Vector power = h.eta.as_vector();
    for (int i = 0; i < n; ++i)
        power = multiply(h, 1, power, chat);
    double fact = 1;
    for (int i = 2; i <= n; ++i)
        fact *= i;
    const Scalar target = fact * std::pow(Scalar(0, -2), n);
    a.lambda = functional_at(h.space, d - 1, target / power(d - 1));
    GrouplikeSolution g = solve_grouplike(h, a.lambda, tol);
    if (!g.ok())
        throw Error("symplectic_fermions: " + g.failure);
    a.g = *g.g;
    BraidData b;
    b.sigma = Mor::element(h.space, element_exp(h, 1, 0.5 * chat));
    b.sigma_inv = Mor::element(h.space, element_exp(h, 1, -0.5 * chat));
    b.beta = expi(-std::numbers::pi * n / 4);
    b.omega = OmegaFlag::Parity;
    return GCategory::create(std::move(h), std::move(a), std::move(b), Ambient::SVect, tol);
}

SweedlerSolution solve_sweedler_assoc(const HopfData& h, double tol)
{
    const SuperSpace& H = h.space;
    const Eigen::Index d = static_cast<Eigen::Index>(h.dim());
    SweedlerSolution out;

    // right cointegrals: (lambda (x) id) Delta = eta lambda, linear in lambda
    const Matrix dm = Wiring::of(h.delta).to_mor(Exec::Serial).matrix();
    const Vector eta = h.eta.as_vector();
    Matrix sys = Matrix::Zero(d * d, d);
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index o = 0; o < d; ++o)
            for (Eigen::Index k = 0; k < d; ++k)
                sys(j * d + o, k) = dm(k * d + o, j) - (k == j ? eta(o) : Scalar(0));
    Eigen::JacobiSVD<Matrix> svd(sys, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double thresh = 1e-9 * std::max(1.0, sv(0));
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > thresh)
        ++rank;
    out.cointegral_nullity = static_cast<std::size_t>(d - rank);
    if (out.cointegral_nullity != 1)
        throw Error("sweedler solver: right cointegral space has dimension " +
                    std::to_string(out.cointegral_nullity));
    Vector l0 = svd.matrixV().col(d - 1);
    Eigen::Index big = 0;
    l0.cwiseAbs().maxCoeff(&big);
    l0 *= std::abs(l0(big)) / l0(big);
    const Mor lambda0 = Mor::functional(H, l0.transpose());
    GrouplikeSolution gs = solve_grouplike(h, lambda0, tol);
    if (!gs.ok())
        throw Error("sweedler solver: " + gs.failure);

    // linear pieces of the copairing system
    const SuperSpace hh = tensor_obj(H, H);
    auto dense = [](Wiring w) { return w.to_mor(Exec::Serial).matrix(); };
    Wiring wl({H, H}), wr({H, H}), el({H, H}), er({H, H}), sl({H, H}), sr({H, H}), sw({H, H}),
        tw({H, H});
    wl.apply(0, 1, h.delta, {H, H});
    wr.apply(1, 1, h.delta, {H, H});
    el.contract(0, 1, h.eps);
    er.contract(1, 1, h.eps);
    sl.apply(0, 1, h.antipode);
    sr.apply(1, 1, h.antipode);
    sw.permute({1, 0});
    const Mor g_inv = Mor::element(H, h.antipode.matrix() * gs.g->as_vector());
    tw.apply(1, 1, h.antipode * h.antipode * adjoint(g_inv, *gs.g, h));
    const Matrix ml = dense(wl), mr = dense(wr), mel = dense(el), mer = dense(er);
    const Matrix msym = dense(sl) - dense(sr), mcond = dense(sw) - dense(tw);

    auto residual = [&](const Vector& z) {
        const Vector g12 = embed_legs(h, z, 0, 1), g13 = embed_legs(h, z, 0, 2),
                     g23 = embed_legs(h, z, 1, 2);
        std::vector<Vector> parts = {ml * z - multiply(h, 3, g13, g23),
                                     mr * z - multiply(h, 3, g12, g13),
                                     mel * z - eta,
                                     mer * z - eta,
                                     msym * z,
                                     mcond * z};
        Eigen::Index len = 1;
        for (const auto& p : parts)
            len += p.size();
        Vector f(len);
        Eigen::Index at = 0;
        for (const auto& p : parts) {
            f.segment(at, p.size()) = p;
            at += p.size();
        }
        // gauge: non-degenerate with unit determinant
        f(at) = reshape_pair(h, z).determinant() - Scalar(1);
        return f;
    };

    std::mt19937_64 rng(0x5eed);
    auto uniform = [&rng]() { return double(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0; };
    const Eigen::Index nz = d * d;
    for (std::size_t attempt = 0; attempt < 32; ++attempt) {
        Vector z(nz);
        for (Eigen::Index i = 0; i < nz; ++i)
            z(i) = Scalar(uniform(), uniform());
        Vector f = residual(z);
        double damping = 1e-3;
        for (std::size_t it = 0; it < 400; ++it) {
            ++out.iterations;
            if (f.cwiseAbs().maxCoeff() < 1e-14)
                break;
            Matrix jac(f.size(), nz);
            const double step = 1e-7;
            for (Eigen::Index j = 0; j < nz; ++j) {
                Vector zp = z, zm = z;
                zp(j) += step;
                zm(j) -= step;
                jac.col(j) = (residual(zp) - residual(zm)) / (2 * step);
            }
            const Matrix jh = jac.adjoint();
            const Matrix normal = jh * jac;
            const Vector rhs = -(jh * f);
            bool improved = false;
            for (int tries = 0; tries < 12 && !improved; ++tries) {
                Matrix a = normal;
                a.diagonal().array() += damping;
                const Vector dz = a.fullPivLu().solve(rhs);
                const Vector zn = z + dz;
                const Vector fn = residual(zn);
                if (fn.norm() < f.norm()) {
                    z = zn;
                    f = fn;
                    damping = std::max(damping / 3.0, 1e-12);
                    improved = true;
                } else {
                    damping *= 4.0;
                }
            }
            if (!improved)
                break;
        }
        if (f.cwiseAbs().maxCoeff() > 1e-12) {
            ++out.restarts;
            continue;
        }
        // clean roundoff, then normalize lambda against gamma
        for (Eigen::Index i = 0; i < nz; ++i) {
            if (std::abs(z(i).real()) < 1e-13)
                z(i).real(0);
            if (std::abs(z(i).imag()) < 1e-13)
                z(i).imag(0);
        }
        Wiring nw({H, H});
        nw.apply(1, 1, h.antipode).contract(0, 1, lambda0).contract(0, 1, lambda0);
        const Scalar norm = nw.apply_to(z)(0);
        if (std::abs(norm) < 1e-9) {
            ++out.restarts;
            continue;
        }
        out.data.gamma = Mor::element(hh, z);
        out.data.lambda = Mor::functional(H, l0.transpose() / std::sqrt(norm));
        out.data.g = *gs.g;
        out.residual = residual(z).cwiseAbs().maxCoeff();
        const Report check = check_assoc_data(h, out.data, tol);
        if (!check.passed()) {
            ++out.restarts;
            continue;
        }
        return out;
    }
    throw Error("sweedler solver: no admissible copairing found");
}

GCategory sweedler(double tol)
{
    HopfData h = sweedler_algebra();
    SweedlerSolution s = solve_sweedler_assoc(h, tol);
    return GCategory::create(std::move(h), std::move(s.data), std::nullopt, Ambient::Vect, tol);
}

// ---------------------------------------------------------------- generators

std::vector<GObject> ty_generators(const GCategory& c, const TYParams& p)
{
    const HopfData& h = c.hopf();
    const std::string simple = p.k == 1 ? "eps" : "d" + bits(1, p.k);
    return {c.unit(), c.module_object(character_module(h, simple, functional_at(h.space, 1))),
            c.module_object(regular_module(h)), c.degree_one(SuperSpace({"m"}, {0}), "m")};
}

std::vector<GObject> sf_generators(const GCategory& c, bool extended)
{
    const HopfData& h = c.hopf();
    std::vector<GObject> g = {c.unit(), c.module_object(character_module(h, "1odd", h.eps, 1)),
                              c.module_object(regular_module(h)),
                              c.degree_one(SuperSpace({"T"}, {0}), "T")};
    if (extended)
        g.push_back(c.degree_one(SuperSpace({"Todd"}, {1}), "Todd"));
    return g;
}

std::vector<GObject> sweedler_generators(const GCategory& c)
{
    const HopfData& h = c.hopf();
    Eigen::RowVectorXcd sign(4);
    sign << 1, -1, 0, 0;
    return {c.unit(), c.module_object(character_module(h, "sgn", Mor::functional(h.space, sign))),
            c.module_object(regular_module(h)), c.degree_one(SuperSpace({"T"}, {0}), "T")};
}

// ---------------------------------------------------------------- specializations

Report ty_specialization(const GCategory& c, const TYParams& p)
{
    Report r("ty_specialization", c.tol());
    const HopfData& h = c.hopf();
    const std::size_t n = p.order();
    std::vector<GObject> simples;
    for (std::size_t a = 0; a < n; ++a)
        simples.push_back(
            c.module_object(character_module(h, "d" + bits(a, p.k), functional_at(h.space, a))));
    const GObject m = c.degree_one(SuperSpace({"m"}, {0}), "m");
    double ab = 0, am = 0, ma = 0;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            ab = std::max(ab, std::abs(scalar_of(c.braiding(simples[a], simples[b])) -
                                       double(p.chi[a][b])));
        am = std::max(am, std::abs(scalar_of(c.braiding(simples[a], m)) - p.sigma[a]));
        ma = std::max(ma, std::abs(scalar_of(c.braiding(m, simples[a])) - p.sigma[a]));
    }
    r.add("eq3.c_ab_chi", ab);
    r.add("eq3.c_am_sigma", am);
    r.add("eq3.c_ma_sigma", ma);
    // m*m = H (x) m (x) m, the channel g spanned by delta_g
    Matrix expect = Matrix::Zero(n, n);
    for (std::size_t g = 0; g < n; ++g)
        expect(g, g) = p.beta / p.sigma[g];
    r.add("eq3.c_mm_channels", max_abs(c.braiding(m, m).map.matrix() - expect));
    return r;
}

Report ising_conformal_weights(const GCategory& c)
{
    Report r("ising_conformal_weights", c.tol());
    const HopfData& h = c.hopf();
    if (h.dim() != 2 || !c.has_braiding())
        throw Error("ising_conformal_weights: not an Ising-type category");
    const double h1 = 0.0, he = 0.5, hs = 1.0 / 16.0;
    const GObject one = c.module_object(character_module(h, "1", functional_at(h.space, 0)));
    const GObject eps = c.module_object(character_module(h, "eps", functional_at(h.space, 1)));
    const GObject m = c.degree_one(SuperSpace({"m"}, {0}), "m");
    auto w = [](double x) { return expi(std::numbers::pi * x); };
    // c_{r,s} acts on the channel t by exp(pi i (h_r + h_s - h_t))
    double simple = 0;
    simple = std::max(simple, std::abs(scalar_of(c.braiding(eps, eps)) - w(he + he - h1)));
    simple = std::max(simple, std::abs(scalar_of(c.braiding(one, eps)) - w(h1 + he - he)));
    simple = std::max(simple, std::abs(scalar_of(c.braiding(eps, m)) - w(he + hs - hs)));
    simple = std::max(simple, std::abs(scalar_of(c.braiding(m, eps)) - w(hs + he - hs)));
    r.add("conformal.c_simple_pairs", simple);
    const Matrix cmm = c.braiding(m, m).map.matrix();
    r.add("conformal.c_mm_channel_1", std::abs(cmm(0, 0) - w(hs + hs - h1)));
    r.add("conformal.c_mm_channel_eps", std::abs(cmm(1, 1) - w(hs + hs - he)));
    if (c.has_twist()) {
        double tw = 0;
        tw = std::max(tw, std::abs(scalar_of(c.twist(eps)) - expi(-2 * std::numbers::pi * he)));
        tw = std::max(tw, std::abs(scalar_of(c.twist(m)) - expi(-2 * std::numbers::pi * hs)));
        r.add("conformal.twists", tw);
    }
    return r;
}

Report sf_specialization(const GCategory& c, int n)
{
    Report r("sf_specialization", c.tol());
    const HopfData& h = c.hopf();
    const SuperSpace& H = h.space;
    const Vector cc = sf_copairing(h, n);
    const Vector chat = sf_chat(h, n);
    const Vector exp_minus_c = element_exp(h, 2, -cc);
    const Mor s_half = Mor::element(H, element_exp(h, 1, 0.5 * chat));
    const Mor s_mhalf = Mor::element(H, element_exp(h, 1, -0.5 * chat));
    const Scalar prefactor = expi(-std::numbers::pi * n / 4);

    const auto gens = sf_generators(c, true);
    std::vector<GObject> c0, c1;
    for (const auto& g : gens)
        (g.degree == 0 ? c0 : c1).push_back(g);

    double row00 = 0, row01 = 0, row10 = 0, row11 = 0;
    for (const auto& a : c0)
        for (const auto& b : c0) {
            Wiring w({tensor_obj(a.carrier, b.carrier)});
            w.split(0, {a.carrier, b.carrier})
                .insert(0, Mor::element(tensor_obj(H, H), exp_minus_c))
                .split(0, {H, H})
                .permute({0, 2, 1, 3})
                .apply(0, a.module->action)
                .apply(1, b.module->action)
                .permute({1, 0})
                .merge_all();
            row00 = std::max(row00, max_residual(c.braiding_wiring(a, b), w));
        }
    for (const auto& a : c0)
        for (const auto& x : c1) {
            Wiring w01({tensor_obj(a.carrier, x.carrier)});
            w01.split(0, {a.carrier, x.carrier})
                .apply(0, act_element(h, *a.module, s_half))
                .permute({1, 0})
                .merge_all();
            row01 = std::max(row01, max_residual(c.braiding_wiring(a, x), w01));
            Wiring w10({tensor_obj(x.carrier, a.carrier)});
            w10.split(0, {x.carrier, a.carrier})
                .apply(1, 1, omega_map(a.carrier, OmegaFlag::Parity))
                .apply(1, act_element(h, *a.module, s_half))
                .permute({1, 0})
                .merge_all();
            row10 = std::max(row10, max_residual(c.braiding_wiring(x, a), w10));
        }
    for (const auto& x : c1)
        for (const auto& y : c1) {
            Wiring w({tensor_obj(std::vector<SuperSpace>{H, x.carrier, y.carrier})});
            w.split(0, {H, x.carrier, y.carrier})
                .apply(2, 1, omega_map(y.carrier, OmegaFlag::Parity))
                .apply(0, 1, right_mult(s_mhalf, h))
                .permute({0, 2, 1})
                .scale(prefactor)
                .merge_all();
            row11 = std::max(row11, max_residual(c.braiding_wiring(x, y), w));
        }
    r.add("eq5.row00", row00);
    r.add("eq5.row01", row01);
    r.add("eq5.row10", row10);
    r.add("eq5.row11", row11);

    Wiring lam({H, H});
    lam.contract(0, 1, c.assoc().lambda).contract(0, 1, c.assoc().lambda);
    r.add("sf.lambda_exp_minus_C", std::abs(lam.apply_to(exp_minus_c)(0) - Scalar(1)));
    Vector power = h.eta.as_vector();
    for (int i = 0; i < n; ++i)
        power = multiply(h, 1, power, chat);
    double fact = 1;
    for (int i = 2; i <= n; ++i)
        fact *= i;
    r.add("sf.lambda_chat_power",
          std::abs((c.assoc().lambda.matrix() * power)(0) - fact * std::pow(Scalar(0, -2), n)));
    return r;
}

// ---------------------------------------------------------------- bundles

Example ising_example(double tol)
{
    GCategory c = ising(tol);
    const TYParams p = ising_params();
    Report checks("family_checks", tol);
    checks.append(ty_specialization(c, p));
    checks.append(ising_conformal_weights(c));
    auto gens = ty_generators(c, p);
    return Example{"ising", std::move(c), std::move(gens), std::move(checks)};
}

Example ty_example(const TYParams& p, double tol)
{
    GCategory c = tambara_yamagami(p, tol);
    Report checks("family_checks", tol);
    checks.append(ty_specialization(c, p));
    auto gens = ty_generators(c, p);
    return Example{"ty", std::move(c), std::move(gens), std::move(checks)};
}

Example sf_example(int n, double tol)
{
    GCategory c = symplectic_fermions(n, tol);
    Report checks("family_checks", tol);
    checks.append(sf_specialization(c, n));
    auto gens = sf_generators(c);
    return Example{"sf" + std::to_string(n), std::move(c), std::move(gens), std::move(checks)};
}

Example sweedler_example(double tol)
{
    HopfData h = sweedler_algebra();
    SweedlerSolution s = solve_sweedler_assoc(h, tol);
    Report checks("family_checks", tol);
    checks.add("sweedler.cointegral_nullity", std::abs(double(s.cointegral_nullity) - 1.0));
    checks.add("sweedler.solver_residual", s.residual);
    const Matrix sm = h.antipode.matrix();
    const Matrix s4 = sm * sm * sm * sm;
    checks.add("sweedler.antipode_order4", max_abs(s4 - Matrix::Identity(4, 4)));
    const double s2 = max_abs(sm * sm - Matrix::Identity(4, 4));
    checks.add_info("sweedler.antipode_square_nontrivial", s2, s2 > tol, "S^2 = Ad_G != id");
    GCategory c = GCategory::create(std::move(h), std::move(s.data), std::nullopt, Ambient::Vect, tol);
    auto gens = sweedler_generators(c);
    return Example{"sweedler", std::move(c), std::move(gens), std::move(checks)};
}

}  // namespace braidforge::examples
