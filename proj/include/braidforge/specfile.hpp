#pragma once

#include <cstdint>
#include <string_view>

#include <json.hpp>

#include "braidforge/coherence.hpp"

namespace braidforge::io {

inline constexpr const char* kToolVersion = "0.1.0";

// malformed input; the message names the offending tensor or field
class InputError : public Error {
public:
    using Error::Error;
};

struct GeneratorDecl {
    std::string kind;  // unit | regular | character | module | degree_one
    std::string label;
    std::vector<std::string> labels;     // carrier basis (module, degree_one)
    std::vector<std::uint8_t> parities;
    int parity = 0;                      // character
    Eigen::RowVectorXcd chi;             // character
    Matrix action;                       // module: dimM x (dimH * dimM)
};

struct SpecFile {
    Ambient ambient = Ambient::Vect;
    HopfData hopf;
    std::optional<Mor> gamma, lambda, g;
    std::optional<Mor> sigma, sigma_inv;
    std::optional<Scalar> beta;
    OmegaFlag omega = OmegaFlag::Identity;
    std::vector<GeneratorDecl> generators;
};

SpecFile parse_spec(const nlohmann::json& j);
SpecFile load_spec(const std::string& path);
nlohmann::json spec_to_json(const SpecFile& s);
SpecFile spec_from_category(const GCategory& c, const std::vector<GObject>& generators);

// category without validation gating (its validation report carries the checks) and its
// generators; nullopt category when gamma or lambda are absent
struct Built {
    std::optional<GCategory> category;
    std::vector<GObject> generators;
    Report hopf_checks;
};
Built build(const SpecFile& s, double tol);

std::string canonical(const nlohmann::json& j);
std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

nlohmann::json complex_json(Scalar z);
nlohmann::json report_json(const Report& r);

struct RunResult {
    std::string target;
    std::uint64_t digest = 0;
    std::uint64_t seed = 0;
    double tol = kDefaultTol;
    std::vector<std::string> generators;
    Report data_checks;
    Report named_checks;
    std::vector<Report> suites;
    bool data_ok = true;

    bool passed() const;
};
nlohmann::json run_json(const RunResult& r);

// data checks, then every applicable suite; suites are skipped when the data checks fail
RunResult run_verification(const std::string& target, const GCategory& c,
                           const std::vector<GObject>& generators, const Report& named_checks,
                           const SuiteOptions& opt);
// digest of the canonical SpecFile of (c, generators)
std::uint64_t category_digest(const GCategory& c, const std::vector<GObject>& generators);

// text rendering of a ReportFile; throws InputError when the document is not one
std::string render_text(const nlohmann::json& report);
void check_report_file(const nlohmann::json& report);

}  // namespace braidforge::io
