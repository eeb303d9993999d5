#pragma once

#include <optional>

#include "braidforge/repcat.hpp"

namespace braidforge {

enum class Ambient { Vect, SVect };

// degree 0: an H-module; degree 1: a bare super vector space
struct GObject {
    int degree = 0;
    std::string label;
    SuperSpace carrier;
    std::optional<HModule> module;

    std::size_t dim() const { return carrier.dim(); }
};

struct GMor {
    GObject source;
    GObject target;
    Mor map;
};

class DataError : public Error {
public:
    DataError(const std::string& what, Report report) : Error(what), report_(std::move(report)) {}
    const Report& report() const { return report_; }

private:
    Report report_;
};

class GCategory {
public:
    // validates every piece of data; throws DataError carrying the failing report
    static GCategory create(HopfData h, AssocData a, std::optional<BraidData> b, Ambient ambient,
                            double tol = kDefaultTol);
    // no validation; for fault injection and for reporting on user data that fails its checks
    static GCategory unchecked(HopfData h, AssocData a, std::optional<BraidData> b,
                               Ambient ambient, double tol = kDefaultTol);

    const HopfData& hopf() const { return h_; }
    const AssocData& assoc() const { return a_; }
    const std::optional<BraidData>& braid() const { return b_; }
    Ambient ambient() const { return ambient_; }
    double tol() const { return tol_; }
    OmegaFlag omega() const;
    // hopf, assoc and (when present) braid checks, computed at construction
    const Report& validation() const { return validation_; }
    bool valid() const { return validation_.passed(); }
    bool has_braiding() const { return b_.has_value(); }
    bool has_twist() const { return b_.has_value() && sigma2_central_; }

    GObject unit() const;
    GObject module_object(const HModule& m) const;
    GObject degree_one(const SuperSpace& v, std::string label) const;

    GObject star(const GObject& x, const GObject& y) const;
    std::size_t star_dim(const GObject& x, const GObject& y) const;
    // tensor factors of the carrier of x*y
    std::vector<SuperSpace> star_parts(const GObject& x, const GObject& y) const;

    GMor identity(const GObject& x) const;
    GMor star_mor(const GMor& f, const GMor& g) const;
    // f: x -> x2, g: y -> y2 as diagrams on single carriers
    Wiring star_wiring(const GObject& x, const GObject& y, const Wiring& f, const Wiring& g) const;

    // X*(Y*Z) -> (X*Y)*Z
    Wiring associator_wiring(const GObject& x, const GObject& y, const GObject& z) const;
    GMor associator(const GObject& x, const GObject& y, const GObject& z) const;
    // X*Y -> Y*X and its inverse Y*X -> X*Y
    Wiring braiding_wiring(const GObject& x, const GObject& y) const;
    Wiring braiding_inverse_wiring(const GObject& x, const GObject& y) const;
    GMor braiding(const GObject& x, const GObject& y) const;
    Wiring twist_wiring(const GObject& x) const;
    GMor twist(const GObject& x) const;

    // numerical inverse, verified against the identity; throws Error when singular
    GMor inverse(const GMor& f) const;
    // zero in degree 1; intertwiner residual in degree 0
    double intertwiner_residual(const GMor& f) const;

    const Mor& phi() const { return phi_; }

private:
    GCategory() = default;
    void prepare();
    Wiring act(const GObject& x, const Mor& element) const;

    HopfData h_;
    AssocData a_;
    std::optional<BraidData> b_;
    Ambient ambient_ = Ambient::Vect;
    double tol_ = kDefaultTol;
    Report validation_;
    bool sigma2_central_ = false;

    Mor p_;          // (id (x) S^2) gamma, element of H (x) H
    Mor r_;          // (S (x) id) gamma
    Mor phi_;        // H -> H, h |-> q' lambda(q'' h) with q = (id (x) L_g S) p
    Mor right_g_;
    Mor sigma_m2_;   // sigma^-1 sigma^-1
    Mor right_sigma_;
    Mor right_sigma_inv_;
};

}  // namespace braidforge
