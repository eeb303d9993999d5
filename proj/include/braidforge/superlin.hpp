#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace braidforge {

using Scalar = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kDefaultTol = 1e-9;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// raised for malformed structure data (bad shapes, odd entries, non-finite values)
class ShapeError : public Error {
public:
    using Error::Error;
};

class SuperSpace {
public:
    SuperSpace() = default;
    SuperSpace(std::vector<std::string> labels, std::vector<std::uint8_t> parities);

    static SuperSpace unit();
    static SuperSpace zero() { return {}; }
    // basis labels prefix0, prefix1, ...
    static SuperSpace from_parities(const std::vector<std::uint8_t>& parities,
                                    const std::string& prefix = "v");
    static SuperSpace even(std::size_t n, const std::string& prefix = "v");

    std::size_t dim() const { return parities_.size(); }
    int parity(std::size_t i) const { return parities_[i]; }
    const std::vector<std::uint8_t>& parities() const { return parities_; }
    const std::string& label(std::size_t i) const { return (*labels_)[i]; }
    const std::vector<std::string>& labels() const { return *labels_; }
    bool is_purely_even() const;

    // gradings agree; labels are not compared
    bool same_grading(const SuperSpace& other) const { return parities_ == other.parities_; }

private:
    friend SuperSpace tensor_obj(const SuperSpace&, const SuperSpace&);
    struct Unchecked {};
    SuperSpace(Unchecked, std::shared_ptr<const std::vector<std::string>> labels,
               std::vector<std::uint8_t> parities)
        : labels_(std::move(labels)), parities_(std::move(parities)) {}

    std::shared_ptr<const std::vector<std::string>> labels_ =
        std::make_shared<const std::vector<std::string>>();
    std::vector<std::uint8_t> parities_;
};

SuperSpace tensor_obj(const SuperSpace& v, const SuperSpace& w);
SuperSpace tensor_obj(std::span<const SuperSpace> factors);

class Mor {
public:
    Mor() = default;
    // throws ShapeError on wrong shape, odd entries or non-finite entries
    Mor(SuperSpace source, SuperSpace target, Matrix m);

    static Mor identity(const SuperSpace& v);
    static Mor zero(const SuperSpace& source, const SuperSpace& target);
    static Mor scalar(Scalar s);
    // element of V, i.e. a map 1 -> V
    static Mor element(const SuperSpace& v, const Vector& coords);
    // functional V -> 1
    static Mor functional(const SuperSpace& v, const Eigen::RowVectorXcd& coords);

    const SuperSpace& source() const { return source_; }
    const SuperSpace& target() const { return target_; }
    const Matrix& matrix() const { return m_; }
    Scalar operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }

    // coordinates of an element (requires source = unit)
    Vector as_vector() const;

private:
    SuperSpace source_;
    SuperSpace target_;
    Matrix m_;
};

// g after f
Mor compose(const Mor& g, const Mor& f);
Mor operator*(const Mor& g, const Mor& f);
Mor operator*(Scalar s, const Mor& f);
Mor operator+(const Mor& a, const Mor& b);
Mor operator-(const Mor& a, const Mor& b);

Mor tensor_mor(const Mor& f, const Mor& g);
Mor tensor_mor(std::span<const Mor> fs);

// Koszul-signed permutation of tensor factors: output factor k is input factor order[k]
Mor permutation(std::span<const SuperSpace> factors, std::span<const std::size_t> order);
Mor symmetry(const SuperSpace& v, const SuperSpace& w);

enum class OmegaFlag { Identity, Parity };
Mor omega_map(const SuperSpace& v, OmegaFlag flag);

struct Comparison {
    double residual = 0.0;
    bool equal = true;
};
Comparison approx_eq(const Mor& f, const Mor& g, double tol = kDefaultTol);

double max_abs(const Matrix& m);

// Koszul sign of reordering factors; parities[k] is the parity of the k-th input factor
int koszul_sign(std::span<const int> parities, std::span<const std::size_t> order);

}  // namespace braidforge
