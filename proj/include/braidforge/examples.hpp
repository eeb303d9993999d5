#pragma once

#include "braidforge/gradedcat.hpp"

namespace braidforge::examples {

// Tambara-Yamagami parameters for G = (Z/2)^k; group elements are bit masks
struct TYParams {
    int k = 1;
    std::vector<std::vector<int>> chi;  // 2^k x 2^k table of signs
    Scalar tau;
    std::vector<Scalar> sigma;          // quadratic form on G
    Scalar beta;

    std::size_t order() const { return std::size_t{1} << k; }
    // throws ShapeError naming the violated invariant
    void validate(double tol = kDefaultTol) const;

    // chi(a,b) = (-1)^{a^T Q b}.  Defaults: tau = +1/sqrt|G|; sigma on generators
    // i^{Q_ii}, extended by sigma(a+b) = chi(a,b) sigma(a) sigma(b); beta = principal
    // square root of tau * sum sigma.
    static TYParams from_gram(int k, const std::vector<std::vector<int>>& gram,
                              std::optional<Scalar> tau = std::nullopt,
                              std::optional<std::vector<Scalar>> sigma_generators = std::nullopt,
                              std::optional<Scalar> beta = std::nullopt);
};

TYParams ising_params();

HopfData function_algebra(int k);
HopfData exterior_algebra(int n);
HopfData sweedler_algebra();

GCategory tambara_yamagami(const TYParams& p, double tol = kDefaultTol);
GCategory ising(double tol = kDefaultTol);
GCategory symplectic_fermions(int n, double tol = kDefaultTol);

struct SweedlerSolution {
    AssocData data;
    std::size_t cointegral_nullity = 0;
    std::size_t iterations = 0;
    std::size_t restarts = 0;
    double residual = 0.0;
};
// solves for (gamma, lambda, g); throws Error when the solver does not converge
SweedlerSolution solve_sweedler_assoc(const HopfData& h, double tol = kDefaultTol);
GCategory sweedler(double tol = kDefaultTol);

// SF copairing element C and the element C-hat multiplied into H
Vector sf_copairing(const HopfData& h, int n);
Vector sf_chat(const HopfData& h, int n);

// generator sets {unit, one simple, regular, T}; `extended` adds odd objects where they exist
std::vector<GObject> ty_generators(const GCategory& c, const TYParams& p);
std::vector<GObject> sf_generators(const GCategory& c, bool extended = false);
std::vector<GObject> sweedler_generators(const GCategory& c);

// named specialization checks
Report ty_specialization(const GCategory& c, const TYParams& p);
Report ising_conformal_weights(const GCategory& c);
Report sf_specialization(const GCategory& c, int n);

struct Example {
    std::string name;
    GCategory category;
    std::vector<GObject> generators;
    Report checks;  // family-specific named checks
};

Example ising_example(double tol = kDefaultTol);
Example ty_example(const TYParams& p, double tol = kDefaultTol);
Example sf_example(int n, double tol = kDefaultTol);
Example sweedler_example(double tol = kDefaultTol);

}  // namespace braidforge::examples
