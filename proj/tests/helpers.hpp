#pragma once

#include <random>

#include <doctest.h>

#include "braidforge/coherence.hpp"
#include "braidforge/examples.hpp"

namespace bft {

using namespace braidforge;

inline Scalar rand_scalar(std::mt19937_64& rng)
{
    return {2.0 * uniform01(rng()) - 1.0, 2.0 * uniform01(rng()) - 1.0};
}

inline SuperSpace rand_space(std::mt19937_64& rng, std::size_t max_dim, const std::string& prefix)
{
    const std::size_t d = 1 + rng() % max_dim;
    std::vector<std::uint8_t> p(d);
    for (auto& x : p)
        x = rng() & 1;
    return SuperSpace::from_parities(p, prefix);
}

// random even map v -> w
inline Mor rand_even(std::mt19937_64& rng, const SuperSpace& v, const SuperSpace& w)
{
    Matrix m = Matrix::Zero(w.dim(), v.dim());
    for (std::size_t i = 0; i < w.dim(); ++i)
        for (std::size_t j = 0; j < v.dim(); ++j)
            if (w.parity(i) == v.parity(j))
                m(i, j) = rand_scalar(rng);
    return Mor(v, w, m);
}

inline const GObject& by_label(const std::vector<GObject>& g, const std::string& label)
{
    for (const auto& x : g)
        if (x.label == label)
            return x;
    throw Error("no generator " + label);
}

inline Scalar expi(double x)
{
    return std::polar(1.0, x);
}

}  // namespace bft
