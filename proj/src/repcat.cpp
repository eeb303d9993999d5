#include "braidforge/repcat.hpp"

#include <Eigen/SVD>

namespace braidforge {

HModule make_module(const HopfData& h, std::string label, SuperSpace carrier, const Mor& action)
{
    if (!action.source().same_grading(tensor_obj(h.space, carrier)) ||
        !action.target().same_grading(carrier))
        throw ShapeError("module '" + label + "': action must map H (x) M -> M");
    Wiring w({h.space, carrier});
    w.apply(0, 2, action, {carrier});
    return HModule{std::move(label), std::move(carrier), std::move(w)};
}

Report check_module(const HopfData& h, const HModule& m, double tol)
{
    Report r("module:" + m.label, tol);
    const SuperSpace& H = h.space;
    Wiring a({H, H, m.carrier}), b({H, H, m.carrier});
    a.apply(0, 2, h.mu).apply(0, m.action);
    b.apply(1, m.action).apply(0, m.action);
    r.add("action.assoc", max_residual(a, b));
    Wiring u({m.carrier});
    u.insert(0, h.eta).apply(0, m.action);
    r.add("action.unit", max_residual(u, Wiring({m.carrier})));
    return r;
}

HModule regular_module(const HopfData& h)
{
    return make_module(h, "H", h.space, h.mu);
}

HModule trivial_module(const HopfData& h)
{
    return character_module(h, "1", h.eps, 0);
}

HModule character_module(const HopfData& h, std::string label, const Mor& chi, int parity)
{
    if (chi.source().dim() != h.dim() || chi.target().dim() != 1)
        throw ShapeError("character_module: chi must be a functional on H");
    SuperSpace c = parity ? SuperSpace({label}, {1}) : SuperSpace::unit();
    Matrix a = chi.matrix();
    return make_module(h, std::move(label), c, Mor(tensor_obj(h.space, c), c, a));
}

HModule module_tensor(const HopfData& h, const HModule& m, const HModule& n)
{
    const SuperSpace& H = h.space;
    const SuperSpace carrier = tensor_obj(m.carrier, n.carrier);
    Wiring w({H, carrier});
    w.split(1, {m.carrier, n.carrier})
        .apply(0, 1, h.delta, {H, H})
        .permute({0, 2, 1, 3})
        .apply(0, m.action)
        .apply(1, n.action)
        .merge(0, 2);
    return HModule{"(" + m.label + "." + n.label + ")", carrier, std::move(w)};
}

const SuperSpace& forgetful(const HModule& m)
{
    return m.carrier;
}

Wiring act_element(const HopfData& h, const HModule& m, const Mor& x)
{
    if (!x.target().same_grading(h.space) || x.source().dim() != 1)
        throw ShapeError("act_element: not an element of H");
    Wiring w({m.carrier});
    w.insert(0, x).apply(0, m.action);
    return w;
}

Matrix action_matrix(const HopfData& h, const HModule& m, const Vector& x)
{
    return act_element(h, m, Mor::element(h.space, x)).to_mor(Exec::Serial).matrix();
}

double intertwiner_residual(const HopfData& h, const HModule& m, const HModule& n, const Mor& f)
{
    Wiring a({h.space, m.carrier}), b({h.space, m.carrier});
    a.apply(0, m.action).apply(0, 1, f);
    b.apply(1, 1, f).apply(0, n.action);
    return max_residual(a, b);
}

std::vector<Mor> hom_basis(const HopfData& h, const HModule& m, const HModule& n, double cutoff)
{
    const Eigen::Index dm = static_cast<Eigen::Index>(m.dim());
    const Eigen::Index dn = static_cast<Eigen::Index>(n.dim());
    std::vector<std::pair<Eigen::Index, Eigen::Index>> unknowns;
    for (Eigen::Index j = 0; j < dm; ++j)
        for (Eigen::Index i = 0; i < dn; ++i)
            if (n.carrier.parity(i) == m.carrier.parity(j))
                unknowns.emplace_back(i, j);
    if (unknowns.empty())
        return {};
    // dense action matrices for every basis element of H
    const Matrix am = m.action.to_mor(Exec::Serial).matrix();
    const Matrix an = n.action.to_mor(Exec::Serial).matrix();
    const Eigen::Index d = static_cast<Eigen::Index>(h.dim());
    const Eigen::Index u = static_cast<Eigen::Index>(unknowns.size());
    // rows indexed by (k, i, j'): (f A_k - B_k f)(i, j')
    Matrix e = Matrix::Zero(d * dn * dm, u);
    for (Eigen::Index k = 0; k < d; ++k) {
        const Matrix a = am.middleCols(k * dm, dm);
        const Matrix b = an.middleCols(k * dn, dn);
        for (Eigen::Index c = 0; c < u; ++c) {
            const auto [i, j] = unknowns[c];
            // f = E_{ij}: (E_{ij} A)(i, j') = A(j, j');  (B E_{ij})(i', j) = B(i', i)
            for (Eigen::Index jp = 0; jp < dm; ++jp)
                e((k * dn + i) * dm + jp, c) += a(j, jp);
            for (Eigen::Index ip = 0; ip < dn; ++ip)
                e((k * dn + ip) * dm + j, c) -= b(ip, i);
        }
    }
    Eigen::JacobiSVD<Matrix> svd(e, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() ? sv(0) : 0.0;
    const double thresh = cutoff * std::max(1.0, smax);
    Eigen::Index rank = 0;
    while (rank < sv.size() && sv(rank) > thresh)
        ++rank;
    std::vector<Mor> out;
    for (Eigen::Index c = rank; c < u; ++c) {
        Vector v = svd.matrixV().col(c);
        Eigen::Index big = 0;
        v.cwiseAbs().maxCoeff(&big);
        v *= std::abs(v(big)) / v(big);
        Matrix f = Matrix::Zero(dn, dm);
        for (Eigen::Index t = 0; t < u; ++t) {
            Scalar z = v(t);
            if (std::abs(z) < 1e-15)
                z = 0;
            f(unknowns[t].first, unknowns[t].second) = z;
        }
        out.emplace_back(m.carrier, n.carrier, std::move(f));
    }
    return out;
}

}  // namespace braidforge
