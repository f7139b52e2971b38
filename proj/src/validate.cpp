#include "baton/error.hpp"
#include "baton/pattern_io.hpp"

#include <cmath>
#include <string>

namespace baton {

std::string_view to_string(Severity severity) {
    return severity == Severity::error ? "error" : "warning";
}

std::size_t ValidationReport::error_count() const {
    std::size_t n = 0;
    for (const auto& f : findings) {
        n += f.severity == Severity::error ? 1 : 0;
    }
    return n;
}

std::size_t ValidationReport::warning_count() const {
    return findings.size() - error_count();
}

nlohmann::ordered_json report_to_json(const ValidationReport& report) {
    nlohmann::ordered_json out;
    out["accepted"] = report.accepted();
    out["error_count"] = report.error_count();
    out["warning_count"] = report.warning_count();
    auto findings = nlohmann::ordered_json::array();
    for (const auto& f : report.findings) {
        nlohmann::ordered_json item;
        item["severity"] = std::string(to_string(f.severity));
        item["code"] = f.code;
        item["message"] = f.message;
        if (f.anchor_index) {
            item["anchor_index"] = *f.anchor_index;
        } else {
            item["anchor_index"] = nullptr;
        }
        findings.push_back(std::move(item));
    }
    out["findings"] = std::move(findings);
    return out;
}

namespace {

// Half-width of the curve-parameter window probed around each anchor.
constexpr double kNeighborhood = 0.05;
constexpr int kNeighborhoodSteps = 10;

std::string label(const Pattern& p, std::size_t i) {
    const auto& a = p.anchor(i);
    return (a.role == AnchorRole::preparation ? "P" : "I") + std::to_string(i / 2 + 1);
}

void check_extremum(const Pattern& p, std::size_t i, double tol, ValidationReport& report) {
    const std::size_t n = p.anchor_count();
    const auto& a = p.anchor(i);
    const auto& prev = p.anchor((i + n - 1) % n);
    const auto& next = p.anchor((i + 1) % n);
    const bool prep = a.role == AnchorRole::preparation;
    for (const auto* other : {&prev, &next}) {
        const double gap = prep ? a.position.y - other->position.y
                                : other->position.y - a.position.y;
        if (!(gap > tol)) {
            const std::size_t j = other == &prev ? (i + n - 1) % n : (i + 1) % n;
            report.findings.push_back(
                {Severity::error, "extremum_violation",
                 label(p, i) + (prep ? " must lie above " : " must lie below ") + label(p, j) +
                     " (height difference " + std::to_string(gap) + ")",
                 i});
            return;
        }
    }
}

void check_neighborhood(const Pattern& p, std::size_t i, double tol, ValidationReport& report) {
    const auto& a = p.anchor(i);
    const bool prep = a.role == AnchorRole::preparation;
    const double s0 = static_cast<double>(i);
    bool crossed = false;
    for (int k = 1; k <= kNeighborhoodSteps && !crossed; ++k) {
        const double d = kNeighborhood * k / kNeighborhoodSteps;
        for (const double s : {s0 - d, s0 + d}) {
            const double y = curve_point(p, s).y;
            if (prep ? y > a.position.y + tol : y < a.position.y - tol) {
                crossed = true;
                break;
            }
        }
    }
    if (!crossed) {
        return;
    }
    if (a.roundness == 0.0) {
        report.findings.push_back({Severity::warning, "extremum_inconclusive",
                                   "curve near cusp " + label(p, i) +
                                       " does not confirm a vertical extremum",
                                   i});
    } else {
        report.findings.push_back({Severity::error, "neighborhood_violation",
                                   "curve near " + label(p, i) +
                                       (prep ? " rises above" : " dips below") +
                                       " the anchor height",
                                   i});
    }
}

} // namespace

ValidationReport validate_pattern(const Pattern& pattern, double tolerance) {
    if (!std::isfinite(tolerance) || tolerance <= 0.0) {
        throw DomainError("validation tolerance must be finite and > 0");
    }
    ValidationReport report;
    const std::size_t n = pattern.anchor_count();
    for (std::size_t i = 0; i < n; ++i) {
        check_extremum(pattern, i, tolerance, report);
        check_neighborhood(pattern, i, tolerance, report);
        if (pattern.anchor(i).roundness == 0.0) {
            report.findings.push_back({Severity::warning, "cusp",
                                       label(pattern, i) + " has zero roundness (cusp)", i});
        }
        const std::size_t next = (i + 1) % n;
        if (distance(pattern.anchor(i).position, pattern.anchor(next).position) <= tolerance) {
            report.findings.push_back({Severity::error, "coincident_anchors",
                                       label(pattern, i) + " and " + label(pattern, next) +
                                           " coincide",
                                       i});
        }
    }
    return report;
}

} // namespace baton
