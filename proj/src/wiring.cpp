#include "braidforge/wiring.hpp"

#include <algorithm>
#include <numeric>

namespace braidforge {

namespace {

struct Csc {
    std::vector<std::uint32_t> start;
    std::vector<std::uint32_t> row;
    std::vector<Scalar> val;
};

Csc to_csc(const Matrix& m)
{
    Csc c;
    c.start.reserve(m.cols() + 1);
    c.start.push_back(0);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
            if (m(i, j) != Scalar(0)) {
                c.row.push_back(static_cast<std::uint32_t>(i));
                c.val.push_back(m(i, j));
            }
        }
        c.start.push_back(static_cast<std::uint32_t>(c.row.size()));
    }
    return c;
}

void sort_merge(SparseColumn& c)
{
    std::sort(c.begin(), c.end(),
              [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
    std::size_t w = 0;
    for (std::size_t r = 0; r < c.size();) {
        std::uint64_t idx = c[r].index;
        Scalar acc = 0;
        while (r < c.size() && c[r].index == idx)
            acc += c[r++].value;
        if (acc != Scalar(0))
            c[w++] = {idx, acc};
    }
    c.resize(w);
}

Matrix kron3(std::uint64_t left, const Matrix& f, std::uint64_t right)
{
    const Eigen::Index rows = static_cast<Eigen::Index>(left) * f.rows() * right;
    const Eigen::Index cols = static_cast<Eigen::Index>(left) * f.cols() * right;
    Matrix k = Matrix::Zero(rows, cols);
    for (std::uint64_t l = 0; l < left; ++l)
        for (Eigen::Index i = 0; i < f.rows(); ++i)
            for (Eigen::Index j = 0; j < f.cols(); ++j) {
                if (f(i, j) == Scalar(0))
                    continue;
                for (std::uint64_t r = 0; r < right; ++r)
                    k((l * f.rows() + i) * right + r, (l * f.cols() + j) * right + r) = f(i, j);
            }
    return k;
}

}  // namespace

struct Wiring::Op {
    enum class Kind { Apply, Permute, Scale } kind = Kind::Scale;
    std::uint64_t left = 1;
    std::uint64_t right = 1;

    std::uint64_t m_in = 1;
    std::uint64_t m_out = 1;
    std::shared_ptr<const Csc> f;
    std::shared_ptr<const Matrix> dense;

    std::vector<SuperSpace> spaces;
    std::vector<std::size_t> order;
    std::vector<std::uint64_t> dims;
    std::vector<std::uint64_t> out_stride;

    Scalar s = 1.0;

    SparseColumn run(const SparseColumn& in) const;
    Matrix reference(const Matrix& state) const;
};

SparseColumn Wiring::Op::run(const SparseColumn& in) const
{
    SparseColumn out;
    switch (kind) {
    case Kind::Scale:
        out = in;
        for (auto& e : out)
            e.value *= s;
        return out;
    case Kind::Apply: {
        out.reserve(in.size() * 2);
        const std::uint64_t block = m_in * right;
        for (const auto& e : in) {
            const std::uint64_t l = e.index / block;
            const std::uint64_t rem = e.index % block;
            const std::uint64_t j = rem / right;
            const std::uint64_t r = rem % right;
            for (std::uint32_t k = f->start[j]; k < f->start[j + 1]; ++k)
                out.push_back({(l * m_out + f->row[k]) * right + r, e.value * f->val[k]});
        }
        if (m_in > 1)
            sort_merge(out);
        return out;
    }
    case Kind::Permute: {
        out.reserve(in.size());
        const std::size_t k = dims.size();
        std::uint64_t mid_dim = 1;
        for (auto d : dims)
            mid_dim *= d;
        std::uint64_t digit[16];
        int odd[16];
        for (const auto& e : in) {
            const std::uint64_t l = e.index / (mid_dim * right);
            const std::uint64_t r = e.index % right;
            std::uint64_t mid = (e.index / right) % mid_dim;
            for (std::size_t t = k; t-- > 0;) {
                digit[t] = mid % dims[t];
                mid /= dims[t];
                odd[t] = spaces[t].parity(digit[t]);
            }
            int sign = 1;
            std::uint64_t nmid = 0;
            for (std::size_t a = 0; a < k; ++a) {
                nmid += digit[order[a]] * out_stride[a];
                if (!odd[order[a]])
                    continue;
                for (std::size_t b = a + 1; b < k; ++b)
                    if (order[a] > order[b] && odd[order[b]])
                        sign = -sign;
            }
            out.push_back({(l * mid_dim + nmid) * right + r, double(sign) * e.value});
        }
        return out;
    }
    }
    return out;
}

Matrix Wiring::Op::reference(const Matrix& state) const
{
    switch (kind) {
    case Kind::Scale:
        return s * state;
    case Kind::Apply:
        return kron3(left, *dense, right) * state;
    case Kind::Permute: {
        Mor p = permutation(spaces, order);
        return kron3(left, p.matrix(), right) * state;
    }
    }
    return state;
}

Wiring::Wiring(std::vector<SuperSpace> inputs) : inputs_(std::move(inputs)), factors_(inputs_) {}

Wiring Wiring::of(const Mor& f)
{
    Wiring w({f.source()});
    w.apply(0, 1, f);
    return w;
}

std::size_t Wiring::source_dim() const
{
    std::size_t n = 1;
    for (const auto& s : inputs_)
        n *= s.dim();
    return n;
}

std::size_t Wiring::target_dim() const
{
    return prod_dims(0, factors_.size());
}

void Wiring::check_range(std::size_t first, std::size_t count) const
{
    if (first + count > factors_.size())
        throw ShapeError("Wiring: factor range [" + std::to_string(first) + "," +
                         std::to_string(first + count) + ") out of bounds (" +
                         std::to_string(factors_.size()) + " factors)");
}

std::size_t Wiring::prod_dims(std::size_t first, std::size_t count) const
{
    std::size_t n = 1;
    for (std::size_t i = first; i < first + count; ++i)
        n *= factors_[i].dim();
    return n;
}

Wiring& Wiring::apply(std::size_t first, std::size_t count, const Mor& f)
{
    return apply(first, count, f, {f.target()});
}

Wiring& Wiring::apply(std::size_t first, std::size_t count, const Mor& f,
                      std::vector<SuperSpace> outputs)
{
    check_range(first, count);
    std::vector<SuperSpace> in(factors_.begin() + first, factors_.begin() + first + count);
    if (!tensor_obj(in).same_grading(f.source()))
        throw ShapeError("Wiring::apply: morphism source does not match factors");
    if (!tensor_obj(outputs).same_grading(f.target()))
        throw ShapeError("Wiring::apply: declared outputs do not match morphism target");
    auto op = std::make_shared<Op>();
    op->kind = Op::Kind::Apply;
    op->left = prod_dims(0, first);
    op->right = prod_dims(first + count, factors_.size() - first - count);
    op->m_in = f.source().dim();
    op->m_out = f.target().dim();
    op->f = std::make_shared<const Csc>(to_csc(f.matrix()));
    op->dense = std::make_shared<const Matrix>(f.matrix());
    ops_.push_back(std::move(op));
    factors_.erase(factors_.begin() + first, factors_.begin() + first + count);
    factors_.insert(factors_.begin() + first, outputs.begin(), outputs.end());
    return *this;
}

Wiring& Wiring::apply(std::size_t first, const Wiring& sub)
{
    const std::size_t count = sub.inputs_.size();
    check_range(first, count);
    for (std::size_t i = 0; i < count; ++i)
        if (!factors_[first + i].same_grading(sub.inputs_[i]))
            throw ShapeError("Wiring::apply: sub-diagram input " + std::to_string(i) +
                             " does not match factor " + std::to_string(first + i));
    const std::uint64_t left = prod_dims(0, first);
    const std::uint64_t right = prod_dims(first + count, factors_.size() - first - count);
    for (const auto& op : sub.ops_) {
        if (op->kind == Op::Kind::Scale || (left == 1 && right == 1)) {
            ops_.push_back(op);
            continue;
        }
        auto copy = std::make_shared<Op>(*op);
        copy->left *= left;
        copy->right *= right;
        ops_.push_back(std::move(copy));
    }
    factors_.erase(factors_.begin() + first, factors_.begin() + first + count);
    factors_.insert(factors_.begin() + first, sub.factors_.begin(), sub.factors_.end());
    return *this;
}

Wiring& Wiring::insert(std::size_t pos, const Mor& element)
{
    if (element.source().dim() != 1 || element.source().parity(0) != 0)
        throw ShapeError("Wiring::insert: not an element (source must be the unit)");
    return apply(pos, 0, element, {element.target()});
}

Wiring& Wiring::contract(std::size_t first, std::size_t count, const Mor& functional)
{
    if (functional.target().dim() != 1 || functional.target().parity(0) != 0)
        throw ShapeError("Wiring::contract: target must be the unit");
    return apply(first, count, functional, {});
}

Wiring& Wiring::permute(const std::vector<std::size_t>& order)
{
    const std::size_t k = factors_.size();
    if (order.size() != k)
        throw ShapeError("Wiring::permute: order has wrong length");
    if (k > 16)
        throw ShapeError("Wiring::permute: too many factors");
    std::vector<bool> used(k, false);
    for (auto o : order) {
        if (o >= k || used[o])
            throw ShapeError("Wiring::permute: not a permutation");
        used[o] = true;
    }
    bool trivial = true;
    for (std::size_t i = 0; i < k; ++i)
        trivial = trivial && order[i] == i;
    if (trivial)
        return *this;
    auto op = std::make_shared<Op>();
    op->kind = Op::Kind::Permute;
    op->spaces = factors_;
    op->order = order;
    for (const auto& s : factors_)
        op->dims.push_back(s.dim());
    op->out_stride.assign(k, 1);
    for (std::size_t t = k; t-- > 1;)
        op->out_stride[t - 1] = op->out_stride[t] * op->dims[order[t]];
    ops_.push_back(std::move(op));
    std::vector<SuperSpace> next;
    for (auto o : order)
        next.push_back(factors_[o]);
    factors_ = std::move(next);
    return *this;
}

Wiring& Wiring::split(std::size_t pos, std::vector<SuperSpace> parts)
{
    check_range(pos, 1);
    if (!tensor_obj(parts).same_grading(factors_[pos]))
        throw ShapeError("Wiring::split: parts do not flatten to the factor");
    factors_.erase(factors_.begin() + pos);
    factors_.insert(factors_.begin() + pos, parts.begin(), parts.end());
    return *this;
}

Wiring& Wiring::merge(std::size_t first, std::size_t count)
{
    check_range(first, count);
    std::vector<SuperSpace> in(factors_.begin() + first, factors_.begin() + first + count);
    factors_.erase(factors_.begin() + first, factors_.begin() + first + count);
    factors_.insert(factors_.begin() + first, tensor_obj(in));
    return *this;
}

Wiring& Wiring::merge_all()
{
    if (factors_.size() != 1)
        merge(0, factors_.size());
    return *this;
}

Wiring& Wiring::scale(Scalar s)
{
    auto op = std::make_shared<Op>();
    op->kind = Op::Kind::Scale;
    op->s = s;
    ops_.push_back(std::move(op));
    return *this;
}

Wiring& Wiring::then(const Wiring& next)
{
    if (!tensor_obj(factors_).same_grading(tensor_obj(next.inputs_)))
        throw ShapeError("Wiring::then: gradings do not match");
    ops_.insert(ops_.end(), next.ops_.begin(), next.ops_.end());
    factors_ = next.factors_;
    return *this;
}

SparseColumn Wiring::push(SparseColumn state) const
{
    for (const auto& op : ops_)
        state = op->run(state);
    sort_merge(state);
    return state;
}

SparseColumn Wiring::column(std::size_t j) const
{
    return push({{static_cast<std::uint64_t>(j), Scalar(1)}});
}

Mor Wiring::to_mor(Exec exec) const
{
    const long n_in = static_cast<long>(source_dim());
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(target_dim()), n_in);
#pragma omp parallel for schedule(dynamic, 4) if (exec == Exec::Parallel)
    for (long j = 0; j < n_in; ++j) {
        for (const auto& e : column(static_cast<std::size_t>(j)))
            out(static_cast<Eigen::Index>(e.index), j) = e.value;
    }
    return Mor(source(), target(), std::move(out));
}

Matrix Wiring::apply_to(const Matrix& columns, Exec exec) const
{
    if (static_cast<std::size_t>(columns.rows()) != source_dim())
        throw ShapeError("Wiring::apply_to: wrong input dimension");
    const long n = static_cast<long>(columns.cols());
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(target_dim()), n);
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::Parallel)
    for (long c = 0; c < n; ++c) {
        SparseColumn s;
        for (Eigen::Index i = 0; i < columns.rows(); ++i)
            if (columns(i, c) != Scalar(0))
                s.push_back({static_cast<std::uint64_t>(i), columns(i, c)});
        for (const auto& e : push(std::move(s)))
            out(static_cast<Eigen::Index>(e.index), c) = e.value;
    }
    return out;
}

Vector Wiring::apply_to(const Vector& v) const
{
    return apply_to(Matrix(v), Exec::Serial).col(0);
}

Mor Wiring::reference_mor() const
{
    Matrix state = Matrix::Identity(static_cast<Eigen::Index>(source_dim()),
                                    static_cast<Eigen::Index>(source_dim()));
    for (const auto& op : ops_)
        state = op->reference(state);
    return Mor(source(), target(), std::move(state));
}

namespace {

double column_diff(const SparseColumn& a, const SparseColumn& b)
{
    double worst = 0.0;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        Scalar d;
        if (j >= b.size() || (i < a.size() && a[i].index < b[j].index))
            d = a[i++].value;
        else if (i >= a.size() || b[j].index < a[i].index)
            d = -b[j++].value;
        else
            d = a[i++].value - b[j++].value;
        worst = std::max(worst, std::abs(d));
    }
    return worst;
}

}  // namespace

double max_residual(const Wiring& a, const Wiring& b, Exec exec)
{
    if (a.source_dim() != b.source_dim() || a.target_dim() != b.target_dim())
        throw ShapeError("max_residual: shape mismatch");
    const long n = static_cast<long>(a.source_dim());
    double worst = 0.0;
#pragma omp parallel for schedule(dynamic, 4) reduction(max : worst) if (exec == Exec::Parallel)
    for (long j = 0; j < n; ++j)
        worst = std::max(worst, column_diff(a.column(j), b.column(j)));
    return worst;
}

double max_residual(const Wiring& a, const Mor& b, Exec exec)
{
    if (a.source_dim() != b.source().dim() || a.target_dim() != b.target().dim())
        throw ShapeError("max_residual: shape mismatch");
    const long n = static_cast<long>(a.source_dim());
    double worst = 0.0;
#pragma omp parallel for schedule(dynamic, 4) reduction(max : worst) if (exec == Exec::Parallel)
    for (long j = 0; j < n; ++j) {
        SparseColumn bc;
        for (Eigen::Index i = 0; i < b.matrix().rows(); ++i)
            if (b(i, j) != Scalar(0))
                bc.push_back({static_cast<std::uint64_t>(i), b(i, j)});
        worst = std::max(worst, column_diff(a.column(j), bc));
    }
    return worst;
}

}  // namespace braidforge
