#include "braidforge/report.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace braidforge {

ReportEntry& Report::add(std::string axiom, double residual, std::vector<std::string> labels,
                         std::string pattern)
{
    ReportEntry e;
    e.axiom = std::move(axiom);
    e.residual = residual;
    e.pass = std::isfinite(residual) && residual <= tol;
    e.labels = std::move(labels);
    if (!pattern.empty())
        coverage.insert(pattern);
    e.pattern = std::move(pattern);
    entries.push_back(std::move(e));
    return entries.back();
}

ReportEntry& Report::add_lower_bound(std::string axiom, double value)
{
    ReportEntry e;
    e.axiom = std::move(axiom);
    e.residual = value;
    e.lower_bound = true;
    e.pass = std::isfinite(value) && value >= tol;
    entries.push_back(std::move(e));
    return entries.back();
}

ReportEntry& Report::add_info(std::string axiom, double residual, bool holds, std::string note)
{
    ReportEntry e;
    e.axiom = std::move(axiom);
    e.residual = residual;
    e.pass = holds;
    e.informational = true;
    e.note = std::move(note);
    entries.push_back(std::move(e));
    return entries.back();
}

ReportEntry& Report::add_skip(std::string axiom, std::vector<std::string> labels,
                              std::string pattern, std::string note)
{
    ReportEntry e;
    e.axiom = std::move(axiom);
    e.labels = std::move(labels);
    e.pattern = std::move(pattern);
    e.skipped = true;
    e.pass = true;
    e.note = std::move(note);
    entries.push_back(std::move(e));
    return entries.back();
}

void Report::append(const Report& other, const std::string& prefix)
{
    for (auto e : other.entries) {
        e.axiom = prefix + e.axiom;
        entries.push_back(std::move(e));
    }
    coverage.insert(other.coverage.begin(), other.coverage.end());
}

bool Report::passed() const
{
    return std::all_of(entries.begin(), entries.end(), [](const ReportEntry& e) {
        return e.skipped || e.informational || e.pass;
    });
}

double Report::max_residual() const
{
    double m = 0.0;
    for (const auto& e : entries)
        if (!e.skipped && !e.informational && !e.lower_bound)
            m = std::max(m, std::isfinite(e.residual) ? e.residual : HUGE_VAL);
    return m;
}

std::size_t Report::count_run() const
{
    return std::count_if(entries.begin(), entries.end(),
                         [](const ReportEntry& e) { return !e.skipped && !e.informational; });
}

std::size_t Report::count_passed() const
{
    return std::count_if(entries.begin(), entries.end(), [](const ReportEntry& e) {
        return !e.skipped && !e.informational && e.pass;
    });
}

std::size_t Report::count_failed() const
{
    return count_run() - count_passed();
}

std::size_t Report::count_skipped() const
{
    return std::count_if(entries.begin(), entries.end(),
                         [](const ReportEntry& e) { return e.skipped; });
}

const ReportEntry* Report::find(const std::string& axiom) const
{
    for (const auto& e : entries)
        if (e.axiom == axiom)
            return &e;
    return nullptr;
}

std::vector<const ReportEntry*> Report::failures() const
{
    std::vector<const ReportEntry*> out;
    for (const auto& e : entries)
        if (!e.skipped && !e.informational && !e.pass)
            out.push_back(&e);
    return out;
}

void Report::sort_entries()
{
    std::stable_sort(entries.begin(), entries.end(), [](const ReportEntry& a, const ReportEntry& b) {
        return std::tie(a.labels, a.axiom, a.note) < std::tie(b.labels, b.axiom, b.note);
    });
}

}  // namespace braidforge
