#pragma once

#include "baton/pattern.hpp"

#include <json.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace baton {

inline constexpr int kFormatVersion = 1;
inline constexpr double kDefaultValidationTolerance = 1e-9;

enum class ParseMode {
    strict,  // unknown fields are a DocumentError
    lenient, // unknown fields are kept and written back on serialization
};

// On-disk form of a Pattern plus optional metadata.
struct PatternDocument {
    Pattern pattern;
    std::optional<std::string> name;
    std::optional<std::string> description;
    // Unknown fields kept in lenient mode: top level, and one object per
    // anchor in canonical order (empty objects when there were none).
    nlohmann::ordered_json extra = nlohmann::ordered_json::object();
    std::vector<nlohmann::ordered_json> anchor_extra;
};

// Throws DocumentError with a stable code: "syntax", "missing_field",
// "bad_field", "unknown_field", "unsupported_version", "anchor_count",
// "alternation", "beat_numbering". Documents listing a rotation of the
// anchor cycle are normalized to start at P1.
PatternDocument parse_document(std::string_view text, ParseMode mode = ParseMode::strict);
PatternDocument document_from_json(const nlohmann::json& root, ParseMode mode = ParseMode::strict);
Pattern parse_pattern(std::string_view text, ParseMode mode = ParseMode::strict);

// Canonical, deterministic rendering: fixed field order, anchors from P1,
// shortest round-trip decimals, two-space indentation, trailing newline.
std::string serialize_document(const PatternDocument& doc);
std::string serialize_pattern(const Pattern& pattern);
nlohmann::ordered_json document_to_json(const PatternDocument& doc);

enum class Severity { error, warning };

struct Finding {
    Severity severity = Severity::error;
    std::string code;
    std::string message;
    std::optional<std::size_t> anchor_index;
};

struct ValidationReport {
    std::vector<Finding> findings;

    std::size_t error_count() const;
    std::size_t warning_count() const;
    bool accepted() const { return error_count() == 0; }
};

nlohmann::ordered_json report_to_json(const ValidationReport& report);

// Checks the model's shape rules against a structurally valid pattern:
//   extremum_violation     (error)   preparation not above both neighbouring
//                                    ictus anchors by more than `tolerance`
//   neighborhood_violation (error)   curve near an anchor crosses its height
//                                    the wrong way
//   extremum_inconclusive  (warning) same, at a cusp
//   cusp                   (warning) zero roundness
//   coincident_anchors     (error)   adjacent anchors closer than `tolerance`
ValidationReport validate_pattern(const Pattern& pattern,
                                  double tolerance = kDefaultValidationTolerance);

// Conductor <-> performer view: (x, y, r) -> (-x, y, -r). An involution.
Pattern reflect_pattern(const Pattern& pattern);
PatternDocument reflect_document(const PatternDocument& doc);

// Built-in patterns for 2, 3, 4 and 6 beats (conductor view). The
// coordinates are editorial. DomainError for any other beat count.
const std::vector<int>& default_beat_counts();
PatternDocument default_document(int beats);
Pattern default_pattern(int beats);

std::string_view to_string(AnchorRole role);
std::string_view to_string(View view);
std::string_view to_string(Severity severity);

} // namespace baton
