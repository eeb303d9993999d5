#pragma once

#include <cstdint>

#include "braidforge/gradedcat.hpp"

namespace braidforge {

struct GeneratorSet {
    std::vector<GObject> objects;

    GeneratorSet() = default;
    explicit GeneratorSet(std::vector<GObject> objs) : objects(std::move(objs)) {}
    std::vector<std::string> labels() const;
    std::size_t size() const { return objects.size(); }
    // must contain the unit and, when dim H > 1, a degree-1 object; throws ShapeError
    void validate(const GCategory& c) const;
};

struct SuiteOptions {
    double tol = kDefaultTol;
    std::uint64_t seed = 0;
    Exec exec = Exec::Parallel;       // Serial is the reference path
    std::size_t dim_cap = 10000;      // instances with larger carriers are skipped
    std::size_t samples = 3;          // naturality samples per slot
};

Report pentagon_suite(const GCategory& c, const GeneratorSet& g, const SuiteOptions& opt = {});
Report triangle_suite(const GCategory& c, const GeneratorSet& g, const SuiteOptions& opt = {});
// H2 and its mate H1 with inverse braidings, every ordered triple
Report hexagon_suite(const GCategory& c, const GeneratorSet& g, const SuiteOptions& opt = {});
Report naturality_suite(const GCategory& c, const GeneratorSet& g, const SuiteOptions& opt = {});
Report ribbon_suite(const GCategory& c, const GeneratorSet& g, const SuiteOptions& opt = {});

// every applicable suite, in a fixed order
std::vector<Report> run_all_suites(const GCategory& c, const GeneratorSet& g,
                                   const SuiteOptions& opt = {});

// deterministic per-instance stream derived from (seed, index)
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t index);
double uniform01(std::uint64_t bits);

}  // namespace braidforge
