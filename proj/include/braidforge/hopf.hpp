#pragma once

#include <optional>

#include "braidforge/report.hpp"
#include "braidforge/superlin.hpp"
#include "braidforge/wiring.hpp"

namespace braidforge {

struct HopfData {
    SuperSpace space;
    Mor mu;            // H (x) H -> H
    Mor eta;           // 1 -> H
    Mor delta;         // H -> H (x) H
    Mor eps;           // H -> 1
    Mor antipode;      // H -> H
    Mor antipode_inv;  // H -> H

    std::size_t dim() const { return space.dim(); }
    // throws ShapeError when a structure map has the wrong source or target
    void validate_shapes() const;
};

// gamma: 1 -> H (x) H, lambda: H -> 1, g: 1 -> H
struct AssocData {
    Mor gamma;
    Mor lambda;
    Mor g;
};

struct BraidData {
    Mor sigma;
    Mor sigma_inv;
    Scalar beta = 1.0;
    OmegaFlag omega = OmegaFlag::Identity;
};

Mor left_mult(const Mor& x, const HopfData& h);
Mor right_mult(const Mor& x, const HopfData& h);
Mor adjoint(const Mor& x, const Mor& x_inv, const HopfData& h);

// element arithmetic in the tensor powers H^{(x)k} (componentwise super product)
Wiring power_product(const HopfData& h, std::size_t k);
Vector multiply(const HopfData& h, std::size_t k, const Vector& x, const Vector& y);
Vector unit_power(const HopfData& h, std::size_t k);
// exp(x) by its power series; x must be nilpotent or the series is cut at `max_terms`
Vector element_exp(const HopfData& h, std::size_t k, const Vector& x, std::size_t max_terms = 64);
// element x of H (x) H placed on legs (i, j) of H^{(x)3}, unit elsewhere
Vector embed_legs(const HopfData& h, const Vector& x, std::size_t i, std::size_t j);

Report check_hopf_axioms(const HopfData& h, double tol = kDefaultTol);
Report check_assoc_data(const HopfData& h, const AssocData& a, double tol = kDefaultTol);
Report check_braid_data(const HopfData& h, const AssocData& a, const BraidData& b,
                        double tol = kDefaultTol);

struct GrouplikeSolution {
    std::optional<Mor> g;
    double consistency = 0.0;  // residual of (id (x) lambda) Delta = g lambda
    double coproduct = 0.0;    // Delta g = g (x) g
    double counit = 0.0;       // eps g = 1
    double inverse = 0.0;      // g S(g) = 1
    std::string failure;
    bool ok() const { return g.has_value() && failure.empty(); }
};
GrouplikeSolution solve_grouplike(const HopfData& h, const Mor& lambda, double tol = kDefaultTol);

// reshape of an element of H (x) H into a dim x dim matrix
Matrix reshape_pair(const HopfData& h, const Vector& x);
double smallest_singular_value(const Matrix& m);

}  // namespace braidforge
