#pragma once

#include "braidforge/hopf.hpp"

namespace braidforge {

// Left H-module.  The action is kept as a diagram with inputs {H, carrier}
// and output {carrier}; dense matrices are produced on request.
struct HModule {
    std::string label;
    SuperSpace carrier;
    Wiring action;

    Mor action_mor() const { return action.to_mor(); }
    std::size_t dim() const { return carrier.dim(); }
};

HModule make_module(const HopfData& h, std::string label, SuperSpace carrier, const Mor& action);

Report check_module(const HopfData& h, const HModule& m, double tol = kDefaultTol);
HModule regular_module(const HopfData& h);
HModule trivial_module(const HopfData& h);
// one-dimensional module of the given parity on which H acts through an algebra map chi: H -> 1
HModule character_module(const HopfData& h, std::string label, const Mor& chi, int parity = 0);
HModule module_tensor(const HopfData& h, const HModule& m, const HModule& n);
const SuperSpace& forgetful(const HModule& m);

// carrier -> carrier diagram for the action of a fixed element x of H
Wiring act_element(const HopfData& h, const HModule& m, const Mor& x);
// matrix of the action of x on the carrier
Matrix action_matrix(const HopfData& h, const HModule& m, const Vector& x);

// basis of even intertwiners M -> N; null space by SVD with a relative singular-value cutoff
std::vector<Mor> hom_basis(const HopfData& h, const HModule& m, const HModule& n,
                           double cutoff = 1e-9);
double intertwiner_residual(const HopfData& h, const HModule& m, const HModule& n, const Mor& f);

}  // namespace braidforge
