#include "braidforge/superlin.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace braidforge {

SuperSpace::SuperSpace(std::vector<std::string> labels, std::vector<std::uint8_t> parities)
{
    if (labels.size() != parities.size())
        throw ShapeError("SuperSpace: label and parity lists differ in length");
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (parities[i] > 1)
            throw ShapeError("SuperSpace: parity must be 0 or 1");
        if (!seen.insert(labels[i]).second)
            throw ShapeError("SuperSpace: duplicate basis label '" + labels[i] + "'");
    }
    labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
    parities_ = std::move(parities);
}

SuperSpace SuperSpace::unit()
{
    return SuperSpace({"1"}, {0});
}

SuperSpace SuperSpace::from_parities(const std::vector<std::uint8_t>& parities,
                                     const std::string& prefix)
{
    std::vector<std::string> labels;
    labels.reserve(parities.size());
    for (std::size_t i = 0; i < parities.size(); ++i)
        labels.push_back(prefix + std::to_string(i));
    return SuperSpace(std::move(labels), parities);
}

SuperSpace SuperSpace::even(std::size_t n, const std::string& prefix)
{
    return from_parities(std::vector<std::uint8_t>(n, 0), prefix);
}

bool SuperSpace::is_purely_even() const
{
    return std::all_of(parities_.begin(), parities_.end(), [](auto p) { return p == 0; });
}

SuperSpace tensor_obj(const SuperSpace& v, const SuperSpace& w)
{
    std::vector<std::string> labels;
    std::vector<std::uint8_t> parities;
    labels.reserve(v.dim() * w.dim());
    parities.reserve(v.dim() * w.dim());
    for (std::size_t i = 0; i < v.dim(); ++i) {
        for (std::size_t j = 0; j < w.dim(); ++j) {
            // the unit label "1" is absorbed so that 1 (x) W keeps W's labels
            if (v.dim() == 1 && v.label(0) == "1" && v.parity(0) == 0)
                labels.push_back(w.label(j));
            else if (w.dim() == 1 && w.label(0) == "1" && w.parity(0) == 0)
                labels.push_back(v.label(i));
            else
                labels.push_back(v.label(i) + "|" + w.label(j));
            parities.push_back(static_cast<std::uint8_t>(v.parity(i) ^ w.parity(j)));
        }
    }
    return SuperSpace(SuperSpace::Unchecked{},
                      std::make_shared<const std::vector<std::string>>(std::move(labels)),
                      std::move(parities));
}

SuperSpace tensor_obj(std::span<const SuperSpace> factors)
{
    SuperSpace out = SuperSpace::unit();
    for (const auto& f : factors)
        out = tensor_obj(out, f);
    return out;
}

Mor::Mor(SuperSpace source, SuperSpace target, Matrix m)
    : source_(std::move(source)), target_(std::move(target)), m_(std::move(m))
{
    if (static_cast<std::size_t>(m_.rows()) != target_.dim() ||
        static_cast<std::size_t>(m_.cols()) != source_.dim())
        throw ShapeError("Mor: matrix is " + std::to_string(m_.rows()) + "x" +
                         std::to_string(m_.cols()) + ", expected " +
                         std::to_string(target_.dim()) + "x" + std::to_string(source_.dim()));
    for (Eigen::Index j = 0; j < m_.cols(); ++j) {
        for (Eigen::Index i = 0; i < m_.rows(); ++i) {
            const Scalar z = m_(i, j);
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw ShapeError("Mor: non-finite entry");
            if (target_.parity(i) != source_.parity(j) && z != Scalar(0))
                throw ShapeError("Mor: entry (" + std::to_string(i) + "," + std::to_string(j) +
                                 ") breaks parity (morphisms must be even)");
        }
    }
}

Mor Mor::identity(const SuperSpace& v)
{
    return Mor(v, v, Matrix::Identity(v.dim(), v.dim()));
}

Mor Mor::zero(const SuperSpace& source, const SuperSpace& target)
{
    return Mor(source, target, Matrix::Zero(target.dim(), source.dim()));
}

Mor Mor::scalar(Scalar s)
{
    Matrix m(1, 1);
    m(0, 0) = s;
    return Mor(SuperSpace::unit(), SuperSpace::unit(), m);
}

Mor Mor::element(const SuperSpace& v, const Vector& coords)
{
    return Mor(SuperSpace::unit(), v, Matrix(coords));
}

Mor Mor::functional(const SuperSpace& v, const Eigen::RowVectorXcd& coords)
{
    return Mor(v, SuperSpace::unit(), Matrix(coords));
}

Vector Mor::as_vector() const
{
    if (source_.dim() != 1)
        throw ShapeError("Mor::as_vector: source is not one-dimensional");
    return m_.col(0);
}

Mor compose(const Mor& g, const Mor& f)
{
    if (!g.source().same_grading(f.target()))
        throw ShapeError("compose: target of the first map does not match source of the second");
    return Mor(f.source(), g.target(), g.matrix() * f.matrix());
}

Mor operator*(const Mor& g, const Mor& f)
{
    return compose(g, f);
}

Mor operator*(Scalar s, const Mor& f)
{
    return Mor(f.source(), f.target(), s * f.matrix());
}

Mor operator+(const Mor& a, const Mor& b)
{
    if (!a.source().same_grading(b.source()) || !a.target().same_grading(b.target()))
        throw ShapeError("Mor sum: shape mismatch");
    return Mor(a.source(), a.target(), a.matrix() + b.matrix());
}

Mor operator-(const Mor& a, const Mor& b)
{
    return a + Scalar(-1) * b;
}

Mor tensor_mor(const Mor& f, const Mor& g)
{
    const Matrix& a = f.matrix();
    const Matrix& b = g.matrix();
    Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            k.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return Mor(tensor_obj(f.source(), g.source()), tensor_obj(f.target(), g.target()), std::move(k));
}

Mor tensor_mor(std::span<const Mor> fs)
{
    Mor out = Mor::identity(SuperSpace::unit());
    for (const auto& f : fs)
        out = tensor_mor(out, f);
    return out;
}

int koszul_sign(std::span<const int> parities, std::span<const std::size_t> order)
{
    int sign = 1;
    for (std::size_t a = 0; a < order.size(); ++a)
        for (std::size_t b = a + 1; b < order.size(); ++b)
            if (order[a] > order[b] && parities[order[a]] && parities[order[b]])
                sign = -sign;
    return sign;
}

Mor permutation(std::span<const SuperSpace> factors, std::span<const std::size_t> order)
{
    const std::size_t k = factors.size();
    if (order.size() != k)
        throw ShapeError("permutation: order has wrong length");
    std::vector<bool> used(k, false);
    for (auto o : order) {
        if (o >= k || used[o])
            throw ShapeError("permutation: order is not a permutation");
        used[o] = true;
    }
    std::vector<std::size_t> dims(k);
    std::size_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        dims[i] = factors[i].dim();
        total *= dims[i];
    }
    std::vector<SuperSpace> out_factors;
    for (auto o : order)
        out_factors.push_back(factors[o]);

    std::vector<std::size_t> out_stride(k, 1);
    for (std::size_t t = k; t-- > 1;)
        out_stride[t - 1] = out_stride[t] * dims[order[t]];
    std::vector<std::size_t> pos_in_out(k);
    for (std::size_t t = 0; t < k; ++t)
        pos_in_out[order[t]] = t;

    Matrix m = Matrix::Zero(total, total);
    std::vector<std::size_t> idx(k, 0);
    std::vector<int> par(k);
    for (std::size_t flat = 0; flat < total; ++flat) {
        std::size_t rem = flat;
        for (std::size_t t = k; t-- > 0;) {
            idx[t] = rem % dims[t];
            rem /= dims[t];
            par[t] = factors[t].parity(idx[t]);
        }
        std::size_t out = 0;
        for (std::size_t t = 0; t < k; ++t)
            out += idx[t] * out_stride[pos_in_out[t]];
        m(out, flat) = double(koszul_sign(par, order));
    }
    return Mor(tensor_obj(factors), tensor_obj(out_factors), std::move(m));
}

Mor symmetry(const SuperSpace& v, const SuperSpace& w)
{
    const SuperSpace f[2] = {v, w};
    const std::size_t order[2] = {1, 0};
    return permutation(f, order);
}

Mor omega_map(const SuperSpace& v, OmegaFlag flag)
{
    Matrix m = Matrix::Identity(v.dim(), v.dim());
    if (flag == OmegaFlag::Parity)
        for (std::size_t i = 0; i < v.dim(); ++i)
            if (v.parity(i))
                m(i, i) = -1.0;
    return Mor(v, v, std::move(m));
}

double max_abs(const Matrix& m)
{
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Comparison approx_eq(const Mor& f, const Mor& g, double tol)
{
    if (f.matrix().rows() != g.matrix().rows() || f.matrix().cols() != g.matrix().cols())
        throw ShapeError("approx_eq: shape mismatch");
    Comparison c;
    c.residual = max_abs(f.matrix() - g.matrix());
    c.equal = c.residual <= tol;
    return c;
}

}  // namespace braidforge
