#pragma once

#include <set>
#include <string>
#include <vector>

#include "braidforge/superlin.hpp"

namespace braidforge {

struct ReportEntry {
    std::vector<std::string> labels;  // object tuple; empty for data checks
    std::string axiom;
    std::string pattern;              // degree pattern, e.g. "0110"
    double residual = 0.0;
    bool pass = true;
    bool skipped = false;             // refused by the dimension cap
    bool informational = false;       // reported but does not gate the verdict
    bool lower_bound = false;         // passes iff residual >= tol (smallest singular values)
    std::string note;
};

struct Report {
    std::string suite;
    double tol = kDefaultTol;
    std::vector<ReportEntry> entries;
    bool skipped = false;             // whole suite not run (e.g. no twist)
    std::string status_note;
    double wall_time_s = 0.0;         // not serialized
    std::set<std::string> coverage;   // degree patterns exercised

    Report() = default;
    Report(std::string name, double t) : suite(std::move(name)), tol(t) {}

    ReportEntry& add(std::string axiom, double residual, std::vector<std::string> labels = {},
                     std::string pattern = {});
    ReportEntry& add_lower_bound(std::string axiom, double value);
    ReportEntry& add_info(std::string axiom, double residual, bool holds, std::string note = {});
    ReportEntry& add_skip(std::string axiom, std::vector<std::string> labels, std::string pattern,
                          std::string note);
    void append(const Report& other, const std::string& prefix = {});

    bool passed() const;
    double max_residual() const;
    std::size_t count_run() const;
    std::size_t count_passed() const;
    std::size_t count_failed() const;
    std::size_t count_skipped() const;
    const ReportEntry* find(const std::string& axiom) const;
    std::vector<const ReportEntry*> failures() const;
    // deterministic order: by labels, then axiom
    void sort_entries();
};

}  // namespace braidforge
