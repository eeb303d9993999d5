#pragma once

// Lazy evaluation of string diagrams in the ambient category.
//
// A Wiring is a pipeline of factor-local steps acting on a list of tensor
// factors: apply a morphism to a contiguous range of factors, permute factors
// with Koszul signs, scale.  Split and merge only change how the flattened
// index is read.  Evaluation pushes sparse basis columns through the pipeline,
// so intermediate spaces are never materialized as dense Kronecker products.

#include <memory>
#include <vector>

#include "braidforge/superlin.hpp"

namespace braidforge {

enum class Exec { Serial, Parallel };

struct SparseEntry {
    std::uint64_t index;
    Scalar value;
};
using SparseColumn = std::vector<SparseEntry>;

class Wiring {
public:
    Wiring() = default;
    explicit Wiring(std::vector<SuperSpace> inputs);
    static Wiring of(const Mor& f);

    const std::vector<SuperSpace>& inputs() const { return inputs_; }
    const std::vector<SuperSpace>& outputs() const { return factors_; }
    SuperSpace source() const { return tensor_obj(inputs_); }
    SuperSpace target() const { return tensor_obj(factors_); }
    std::size_t source_dim() const;
    std::size_t target_dim() const;
    std::size_t steps() const { return ops_.size(); }

    // replace factors [first, first+count) by f's target (a single factor, or `outputs`)
    Wiring& apply(std::size_t first, std::size_t count, const Mor& f);
    Wiring& apply(std::size_t first, std::size_t count, const Mor& f,
                  std::vector<SuperSpace> outputs);
    // embed a sub-diagram whose inputs are factors [first, first+sub.inputs().size())
    Wiring& apply(std::size_t first, const Wiring& sub);
    // insert an element 1 -> V as a new factor at position pos
    Wiring& insert(std::size_t pos, const Mor& element);
    // apply a functional to a range; the factors disappear
    Wiring& contract(std::size_t first, std::size_t count, const Mor& functional);
    // new factor k = old factor order[k]
    Wiring& permute(const std::vector<std::size_t>& order);
    Wiring& split(std::size_t pos, std::vector<SuperSpace> parts);
    Wiring& merge(std::size_t first, std::size_t count);
    Wiring& merge_all();
    Wiring& scale(Scalar s);
    // composition: next after this; flattened gradings must agree
    Wiring& then(const Wiring& next);

    SparseColumn column(std::size_t j) const;
    SparseColumn push(SparseColumn state) const;

    Mor to_mor(Exec exec = Exec::Parallel) const;
    Matrix apply_to(const Matrix& columns, Exec exec = Exec::Parallel) const;
    Vector apply_to(const Vector& v) const;

    // dense Kronecker-product evaluation; kept as the reference for the sparse kernel
    Mor reference_mor() const;

private:
    struct Op;
    void check_range(std::size_t first, std::size_t count) const;
    std::size_t prod_dims(std::size_t first, std::size_t count) const;

    std::vector<SuperSpace> inputs_;
    std::vector<SuperSpace> factors_;
    std::vector<std::shared_ptr<const Op>> ops_;
};

// max over columns of the max-norm difference of two diagrams with equal shapes
double max_residual(const Wiring& a, const Wiring& b, Exec exec = Exec::Parallel);
// residual of a diagram against a dense morphism
double max_residual(const Wiring& a, const Mor& b, Exec exec = Exec::Parallel);

}  // namespace braidforge
