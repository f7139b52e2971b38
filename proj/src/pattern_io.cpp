#include "baton/pattern_io.hpp"

#include "baton/error.hpp"

#include <algorithm>
#include <array>
#include <string>

namespace baton {

using nlohmann::json;
using nlohmann::ordered_json;

std::string_view to_string(AnchorRole role) {
    return role == AnchorRole::preparation ? "prep" : "ictus";
}

std::string_view to_string(View view) {
    return view == View::conductor ? "conductor" : "performer";
}

namespace {

constexpr std::array kTopLevelFields = {"format_version", "beats",       "view",
                                        "anchors",        "name",        "description"};
constexpr std::array kAnchorFields = {"role", "beat", "x", "y", "roundness"};

template <std::size_t N>
bool is_known(const std::array<const char*, N>& fields, const std::string& key) {
    return std::any_of(fields.begin(), fields.end(),
                       [&](const char* f) { return key == f; });
}

[[noreturn]] void fail(const char* code, const std::string& message) {
    throw DocumentError(code, message);
}

const json& require(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        fail("missing_field", where + " is missing \"" + key + "\"");
    }
    return *it;
}

int require_int(const json& obj, const char* key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_number_integer()) {
        fail("bad_field", where + " field \"" + key + "\" must be an integer");
    }
    const auto n = v.get<long long>();
    if (n < -1000000 || n > 1000000) {
        fail("bad_field", where + " field \"" + key + "\" is out of range");
    }
    return static_cast<int>(n);
}

double require_number(const json& obj, const char* key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_number()) {
        fail("bad_field", where + " field \"" + key + "\" must be a number");
    }
    const double d = v.get<double>();
    if (!std::isfinite(d)) {
        fail("bad_field", where + " field \"" + key + "\" must be finite");
    }
    return d;
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_string()) {
        fail("bad_field", where + " field \"" + key + "\" must be a string");
    }
    return v.get<std::string>();
}

struct RawAnchor {
    AnchorPoint point;
    int beat = 0;
    ordered_json extra = ordered_json::object();
};

RawAnchor read_anchor(const json& a, std::size_t index, ParseMode mode) {
    const std::string where = "anchor " + std::to_string(index);
    if (!a.is_object()) {
        fail("bad_field", where + " must be an object");
    }
    RawAnchor raw;
    const std::string role = require_string(a, "role", where);
    if (role == "prep") {
        raw.point.role = AnchorRole::preparation;
    } else if (role == "ictus") {
        raw.point.role = AnchorRole::ictus;
    } else {
        fail("bad_field", where + " role must be \"prep\" or \"ictus\", got \"" + role + "\"");
    }
    raw.beat = require_int(a, "beat", where);
    raw.point.position = {require_number(a, "x", where), require_number(a, "y", where)};
    raw.point.roundness = require_number(a, "roundness", where);
    for (const auto& [key, value] : a.items()) {
        if (is_known(kAnchorFields, key)) {
            continue;
        }
        if (mode == ParseMode::strict) {
            fail("unknown_field", where + " has unknown field \"" + key + "\"");
        }
        raw.extra[key] = value;
    }
    return raw;
}

} // namespace

PatternDocument document_from_json(const json& root, ParseMode mode) {
    if (!root.is_object()) {
        fail("syntax", "pattern document must be an object");
    }
    const std::string where = "document";
    const int version = require_int(root, "format_version", where);
    if (version != kFormatVersion) {
        fail("unsupported_version", "unsupported format_version " + std::to_string(version) +
                                        " (supported: " + std::to_string(kFormatVersion) + ")");
    }
    const int beats = require_int(root, "beats", where);
    if (beats < 1) {
        fail("bad_field", "beats must be >= 1, got " + std::to_string(beats));
    }
    const std::string view_name = require_string(root, "view", where);
    View view = View::conductor;
    if (view_name == "performer") {
        view = View::performer;
    } else if (view_name != "conductor") {
        fail("bad_field", "view must be \"conductor\" or \"performer\", got \"" + view_name + "\"");
    }

    const json& anchors = require(root, "anchors", where);
    if (!anchors.is_array()) {
        fail("bad_field", "anchors must be an array");
    }
    const std::size_t expected = 2 * static_cast<std::size_t>(beats);
    if (anchors.size() != expected) {
        fail("anchor_count", "anchor count " + std::to_string(anchors.size()) +
                                 " != 2N = " + std::to_string(expected));
    }
    std::vector<RawAnchor> raw;
    raw.reserve(expected);
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        raw.push_back(read_anchor(anchors[i], i, mode));
    }
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const std::size_t next = (i + 1) % raw.size();
        if (raw.size() > 1 && raw[i].point.role == raw[next].point.role) {
            fail("alternation", "anchors " + std::to_string(i) + " and " + std::to_string(next) +
                                    " are both " + std::string(to_string(raw[i].point.role)) +
                                    "; roles must alternate prep/ictus");
        }
    }
    const auto start = std::find_if(raw.begin(), raw.end(), [](const RawAnchor& r) {
        return r.point.role == AnchorRole::preparation && r.beat == 1;
    });
    if (start == raw.end()) {
        fail("beat_numbering", "no preparation anchor for beat 1");
    }
    std::rotate(raw.begin(), start, raw.end());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        const int expected_beat = static_cast<int>(i / 2) + 1;
        if (raw[i].beat != expected_beat) {
            fail("beat_numbering", std::string(to_string(raw[i].point.role)) + " anchor listed as beat " +
                                       std::to_string(raw[i].beat) + " where beat " +
                                       std::to_string(expected_beat) + " was expected");
        }
    }

    std::vector<AnchorPoint> points;
    std::vector<ordered_json> anchor_extra;
    points.reserve(raw.size());
    for (auto& r : raw) {
        points.push_back(r.point);
        anchor_extra.push_back(std::move(r.extra));
    }

    PatternDocument doc{Pattern(beats, std::move(points), view), std::nullopt, std::nullopt,
                        ordered_json::object(), {}};
    if (root.contains("name")) {
        doc.name = require_string(root, "name", where);
    }
    if (root.contains("description")) {
        doc.description = require_string(root, "description", where);
    }
    for (const auto& [key, value] : root.items()) {
        if (is_known(kTopLevelFields, key)) {
            continue;
        }
        if (mode == ParseMode::strict) {
            fail("unknown_field", "document has unknown field \"" + key + "\"");
        }
        doc.extra[key] = value;
    }
    const bool any_anchor_extra = std::any_of(anchor_extra.begin(), anchor_extra.end(),
                                              [](const ordered_json& e) { return !e.empty(); });
    if (any_anchor_extra) {
        doc.anchor_extra = std::move(anchor_extra);
    }
    return doc;
}

PatternDocument parse_document(std::string_view text, ParseMode mode) {
    json root = json::parse(text.begin(), text.end(), nullptr, false);
    if (root.is_discarded()) {
        fail("syntax", "pattern document is not well-formed JSON");
    }
    return document_from_json(root, mode);
}

Pattern parse_pattern(std::string_view text, ParseMode mode) {
    return parse_document(text, mode).pattern;
}

ordered_json document_to_json(const PatternDocument& doc) {
    const Pattern& p = doc.pattern;
    ordered_json out;
    out["format_version"] = kFormatVersion;
    out["beats"] = p.beats();
    out["view"] = std::string(to_string(p.view()));
    if (doc.name) {
        out["name"] = *doc.name;
    }
    if (doc.description) {
        out["description"] = *doc.description;
    }
    ordered_json anchors = ordered_json::array();
    for (std::size_t i = 0; i < p.anchor_count(); ++i) {
        const AnchorPoint& a = p.anchor(i);
        ordered_json item;
        item["role"] = std::string(to_string(a.role));
        item["beat"] = static_cast<int>(i / 2) + 1;
        item["x"] = a.position.x;
        item["y"] = a.position.y;
        item["roundness"] = a.roundness;
        if (i < doc.anchor_extra.size()) {
            for (const auto& [key, value] : doc.anchor_extra[i].items()) {
                item[key] = value;
            }
        }
        anchors.push_back(std::move(item));
    }
    out["anchors"] = std::move(anchors);
    for (const auto& [key, value] : doc.extra.items()) {
        out[key] = value;
    }
    return out;
}

std::string serialize_document(const PatternDocument& doc) {
    return document_to_json(doc).dump(2) + "\n";
}

std::string serialize_pattern(const Pattern& pattern) {
    return serialize_document(PatternDocument{pattern, std::nullopt, std::nullopt,
                                              ordered_json::object(), {}});
}

Pattern reflect_pattern(const Pattern& pattern) {
    std::vector<AnchorPoint> anchors(pattern.anchors().begin(), pattern.anchors().end());
    for (auto& a : anchors) {
        a.position.x = -a.position.x;
        a.roundness = -a.roundness;
    }
    const View flipped = pattern.view() == View::conductor ? View::performer : View::conductor;
    return Pattern(pattern.beats(), std::move(anchors), flipped);
}

PatternDocument reflect_document(const PatternDocument& doc) {
    PatternDocument out = doc;
    out.pattern = reflect_pattern(doc.pattern);
    return out;
}

} // namespace baton
