#include "baton/service.hpp"

#include "baton/error.hpp"
#include "baton/kinematics.hpp"
#include "baton/pattern_io.hpp"
#include "baton/version.hpp"

#include <httplib.h>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <optional>

namespace baton::service {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

Response json_response(int status, const ordered_json& body) {
    return {status, body.dump(), "application/json"};
}

Response error_response(int status, const std::string& code, const std::string& message,
                        const std::optional<ordered_json>& detail = std::nullopt) {
    ordered_json body;
    body["code"] = code;
    body["message"] = message;
    if (detail) {
        body["detail"] = *detail;
    }
    return json_response(status, body);
}

// Thrown inside handlers and turned into an error body at the edge.
struct RequestError {
    int status;
    std::string code;
    std::string message;
    std::optional<ordered_json> detail;
};

json parse_body(std::string_view body) {
    json root = json::parse(body.begin(), body.end(), nullptr, false);
    if (root.is_discarded() || !root.is_object()) {
        throw RequestError{400, "bad_document", "request body is not a JSON object", {}};
    }
    return root;
}

double number_field(const json& root, const char* key) {
    auto it = root.find(key);
    if (it == root.end() || !it->is_number()) {
        throw RequestError{400, "bad_request", std::string("\"") + key + "\" must be a number", {}};
    }
    return it->get<double>();
}

double optional_number(const json& root, const char* key, double fallback) {
    return root.contains(key) ? number_field(root, key) : fallback;
}

int int_field(const json& root, const char* key) {
    auto it = root.find(key);
    if (it == root.end() || !it->is_number_integer()) {
        throw RequestError{400, "bad_request", std::string("\"") + key + "\" must be an integer", {}};
    }
    const auto v = it->get<long long>();
    if (v < INT32_MIN || v > INT32_MAX) {
        throw RequestError{400, "bad_request", std::string("\"") + key + "\" is out of range", {}};
    }
    return static_cast<int>(v);
}

Pattern accepted_pattern(const json& root) {
    auto it = root.find("pattern");
    if (it == root.end()) {
        throw RequestError{400, "bad_document", "request is missing \"pattern\"", {}};
    }
    Pattern pattern = [&] {
        try {
            return document_from_json(*it).pattern;
        } catch (const DocumentError& e) {
            throw RequestError{400, "bad_document", e.what(), ordered_json{{"reason", e.code()}}};
        }
    }();
    const ValidationReport report = validate_pattern(pattern);
    if (!report.accepted()) {
        throw RequestError{422, "validation_failed", "pattern failed validation",
                           report_to_json(report)};
    }
    return pattern;
}

TimingLaw timing_law(const json& root, int beats) {
    const double bpm = number_field(root, "bpm");
    const double beta = number_field(root, "beta");
    try {
        return TimingLaw(beats, bpm, beta);
    } catch (const DomainError& e) {
        throw RequestError{400, "bad_request", e.what(), {}};
    }
}

ordered_json sample_json(const MotionSample& m) {
    ordered_json o;
    o["t"] = m.t;
    o["s"] = m.s;
    o["x"] = m.position.x;
    o["y"] = m.position.y;
    o["vx"] = m.velocity.x;
    o["vy"] = m.velocity.y;
    o["phase_rate"] = m.phase_rate;
    o["spatial_speed"] = m.spatial_speed;
    return o;
}

ordered_json event_json(const BeatEvent& e) {
    ordered_json o;
    o["cycle"] = e.cycle;
    o["beat"] = e.beat;
    o["kind"] = std::string(to_string(e.kind));
    o["time"] = e.time;
    o["cycle_time"] = e.cycle_time;
    o["curve_parameter"] = e.curve_parameter;
    o["downbeat"] = e.downbeat();
    return o;
}

template <typename F>
Response guarded(F&& handler) {
    try {
        return handler();
    } catch (const RequestError& e) {
        return error_response(e.status, e.code, e.message, e.detail);
    } catch (const DomainError& e) {
        return error_response(400, "bad_request", e.what());
    } catch (const std::exception& e) {
        return error_response(500, "internal", e.what());
    }
}

} // namespace

Response get_default(std::string_view beats) {
    return guarded([&] {
        int n = 0;
        const auto r = std::from_chars(beats.data(), beats.data() + beats.size(), n);
        const auto& known = default_beat_counts();
        if (r.ec != std::errc() || r.ptr != beats.data() + beats.size() ||
            std::find(known.begin(), known.end(), n) == known.end()) {
            return error_response(404, "unsupported_beats",
                                  "no built-in pattern for beats=" + std::string(beats) +
                                      " (available: 2, 3, 4, 6)");
        }
        return json_response(200, document_to_json(default_document(n)));
    });
}

Response post_validate(std::string_view body) {
    return guarded([&] {
        const json root = parse_body(body);
        try {
            const Pattern pattern = document_from_json(root).pattern;
            return json_response(200, report_to_json(validate_pattern(pattern)));
        } catch (const DocumentError& e) {
            throw RequestError{400, "bad_document", e.what(), ordered_json{{"reason", e.code()}}};
        }
    });
}

Response post_sample(std::string_view body) {
    return guarded([&] {
        const json root = parse_body(body);
        const Pattern pattern = accepted_pattern(root);
        const TimingLaw law = timing_law(root, pattern.beats());
        const double t0 = number_field(root, "t0");
        const double t1 = number_field(root, "t1");
        const int count = int_field(root, "count");
        const double offset = optional_number(root, "start_offset", 0.0);
        if (count < 2 || count > kMaxSampleCount) {
            throw RequestError{400, "bad_request",
                               "count must be in [2, " + std::to_string(kMaxSampleCount) + "]", {}};
        }
        if (!(t0 >= 0.0 && t0 < t1 && std::isfinite(t1))) {
            throw RequestError{400, "bad_request", "require 0 <= t0 < t1", {}};
        }
        if (!(offset >= 0.0 && std::isfinite(offset))) {
            throw RequestError{400, "bad_request", "start_offset must be finite and >= 0", {}};
        }

        // Playback time t corresponds to engine time t + start_offset.
        auto samples = sample_trajectory(pattern, law, t0 + offset, t1 + offset, count);
        auto events = beat_events(law, t0 + offset, t1 + offset);
        ordered_json out;
        out["beats"] = pattern.beats();
        out["bpm"] = law.tempo().bpm();
        out["beta"] = law.beta();
        out["cycle_duration"] = law.cycle_duration();
        out["segment_duration"] = law.segment_duration();
        out["start_offset"] = offset;
        auto sarr = ordered_json::array();
        for (std::size_t k = 0; k < samples.size(); ++k) {
            auto& m = samples[k];
            if (offset != 0.0) {
                m.t = k + 1 == samples.size() ? t1 : m.t - offset;
            }
            sarr.push_back(sample_json(m));
        }
        auto earr = ordered_json::array();
        for (auto& e : events) {
            e.time -= offset;
            earr.push_back(event_json(e));
        }
        out["samples"] = std::move(sarr);
        out["events"] = std::move(earr);
        return json_response(200, out);
    });
}

Response post_speed_profile(std::string_view body) {
    return guarded([&] {
        const json root = parse_body(body);
        const Pattern pattern = accepted_pattern(root);
        const TimingLaw law = timing_law(root, pattern.beats());
        const int per_segment =
            root.contains("samples_per_segment") ? int_field(root, "samples_per_segment") : 64;
        const long long total = 2LL * pattern.beats() * per_segment + 1;
        if (per_segment < 2 || total > kMaxSampleCount) {
            throw RequestError{400, "bad_request",
                               "samples_per_segment must be >= 2 with at most " +
                                   std::to_string(kMaxSampleCount) + " points per cycle",
                               {}};
        }
        const auto profile = speed_profile(pattern, law, per_segment);
        ordered_json out;
        out["beats"] = pattern.beats();
        out["bpm"] = law.tempo().bpm();
        out["beta"] = law.beta();
        out["cycle_duration"] = law.cycle_duration();
        out["segment_duration"] = law.segment_duration();
        auto arr = ordered_json::array();
        for (const auto& p : profile) {
            ordered_json o;
            o["t"] = p.t;
            o["phase_rate"] = p.phase_rate;
            o["spatial_speed"] = p.spatial_speed;
            arr.push_back(std::move(o));
        }
        out["profile"] = std::move(arr);
        return json_response(200, out);
    });
}

Response get_health() {
    ordered_json out;
    out["status"] = "ok";
    out["version"] = kVersion;
    return json_response(200, out);
}

Response route(std::string_view method, std::string_view path, std::string_view body) {
    constexpr std::string_view prefix = "/api/v1";
    constexpr std::string_view defaults = "/api/v1/patterns/defaults/";
    if (path.substr(0, prefix.size()) != prefix) {
        return error_response(404, "not_found", "no route for " + std::string(path));
    }
    const bool get = method == "GET";
    const bool post = method == "POST";
    if (path == "/api/v1/health" && get) {
        return get_health();
    }
    if (path.substr(0, defaults.size()) == defaults && get) {
        return get_default(path.substr(defaults.size()));
    }
    if (path == "/api/v1/patterns/validate" && post) {
        return post_validate(body);
    }
    if (path == "/api/v1/sample" && post) {
        return post_sample(body);
    }
    if (path == "/api/v1/speed-profile" && post) {
        return post_speed_profile(body);
    }
    return error_response(404, "not_found",
                          "no route for " + std::string(method) + " " + std::string(path));
}

struct PlaybackServer::Impl {
    httplib::Server server;
};

PlaybackServer::PlaybackServer() : impl_(std::make_unique<Impl>()) {
    auto& srv = impl_->server;
    srv.set_default_headers({{"Access-Control-Allow-Origin", "*"}});
    srv.Options(".*", [](const httplib::Request&, httplib::Response& res) {
        res.status = 204;
        res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
        res.set_header("Access-Control-Allow-Headers", "Content-Type");
    });
    const auto forward = [](const httplib::Request& req, httplib::Response& res) {
        const Response r = route(req.method, req.path, req.body);
        res.status = r.status;
        res.set_content(r.body, r.content_type);
    };
    srv.Get(".*", forward);
    srv.Post(".*", forward);
}

PlaybackServer::~PlaybackServer() { stop(); }

int PlaybackServer::bind(const std::string& host, int port) {
    if (port == 0) {
        return impl_->server.bind_to_any_port(host);
    }
    return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool PlaybackServer::run() { return impl_->server.listen_after_bind(); }

void PlaybackServer::stop() {
    if (impl_ && impl_->server.is_running()) {
        impl_->server.stop();
    }
}

bool PlaybackServer::running() const { return impl_->server.is_running(); }

} // namespace baton::service
