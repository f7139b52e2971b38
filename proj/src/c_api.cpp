#include "baton/baton.h"

#include "baton/error.hpp"
#include "baton/kinematics.hpp"
#include "baton/pattern_io.hpp"
#include "baton/render.hpp"
#include "baton/service.hpp"
#include "baton/version.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <string>

struct baton_pattern {
    baton::PatternDocument doc;
};

struct baton_timing {
    baton::TimingLaw law;
};

namespace {

thread_local std::string last_error;
thread_local std::string last_error_code;

baton_status fail(baton_status status, const std::string& message, std::string code = {}) {
    last_error = message;
    last_error_code = std::move(code);
    return status;
}

// Runs `body`, mapping the core's exceptions onto status codes.
template <typename F>
baton_status guard(F&& body) {
    try {
        last_error.clear();
        last_error_code.clear();
        body();
        return BATON_OK;
    } catch (const baton::DocumentError& e) {
        return fail(BATON_ERR_DOCUMENT, e.what(), e.code());
    } catch (const baton::ConfigurationError& e) {
        return fail(BATON_ERR_CONFIGURATION, e.what());
    } catch (const baton::DomainError& e) {
        return fail(BATON_ERR_DOMAIN, e.what());
    } catch (const std::bad_alloc&) {
        return fail(BATON_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(BATON_ERR_INTERNAL, e.what());
    }
}

char* duplicate(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

baton_status null_argument() {
    return fail(BATON_ERR_INVALID_ARGUMENT, "null pointer argument");
}

baton::RenderOptions to_options(const baton_render_options* in) {
    baton::RenderOptions o;
    if (in != nullptr) {
        o.width = in->width;
        o.height = in->height;
        o.margin = in->margin;
        o.stroke_width = in->stroke_width;
        o.show_anchors = in->show_anchors != 0;
        o.show_labels = in->show_labels != 0;
        o.show_spatial_speed = in->show_spatial_speed != 0;
        o.samples_per_segment = in->samples_per_segment;
    }
    return o;
}

std::string text_report(const baton::ValidationReport& report) {
    std::string out;
    for (const auto& f : report.findings) {
        out += std::string(baton::to_string(f.severity)) + " " + f.code;
        if (f.anchor_index) {
            out += " [anchor " + std::to_string(*f.anchor_index) + "]";
        }
        out += ": " + f.message + "\n";
    }
    const auto errors = report.error_count();
    const auto warnings = report.warning_count();
    out += std::to_string(errors) + (errors == 1 ? " error, " : " errors, ") +
           std::to_string(warnings) + (warnings == 1 ? " warning\n" : " warnings\n");
    return out;
}

} // namespace

extern "C" {

const char* baton_version(void) { return baton::kVersion; }

const char* baton_last_error(void) { return last_error.c_str(); }

const char* baton_last_error_code(void) { return last_error_code.c_str(); }

void baton_string_free(char* s) { std::free(s); }

baton_status baton_pattern_default(int beats, baton_pattern** out) {
    if (out == nullptr) {
        return null_argument();
    }
    return guard([&] { *out = new baton_pattern{baton::default_document(beats)}; });
}

baton_status baton_pattern_parse(const char* text, size_t length, int lenient,
                                 baton_pattern** out) {
    if (text == nullptr || out == nullptr) {
        return null_argument();
    }
    return guard([&] {
        const auto mode = lenient ? baton::ParseMode::lenient : baton::ParseMode::strict;
        *out = new baton_pattern{baton::parse_document(std::string_view(text, length), mode)};
    });
}

void baton_pattern_free(baton_pattern* pattern) { delete pattern; }

baton_status baton_pattern_serialize(const baton_pattern* pattern, char** out) {
    if (pattern == nullptr || out == nullptr) {
        return null_argument();
    }
    return guard([&] { *out = duplicate(baton::serialize_document(pattern->doc)); });
}

int baton_pattern_beats(const baton_pattern* pattern) {
    return pattern == nullptr ? 0 : pattern->doc.pattern.beats();
}

baton_status baton_pattern_anchor(const baton_pattern* pattern, size_t index, baton_anchor* out) {
    if (pattern == nullptr || out == nullptr) {
        return null_argument();
    }
    if (index >= pattern->doc.pattern.anchor_count()) {
        return fail(BATON_ERR_DOMAIN, "anchor index " + std::to_string(index) + " out of range");
    }
    const auto& a = pattern->doc.pattern.anchor(index);
    out->role = a.role == baton::AnchorRole::preparation ? BATON_ROLE_PREPARATION
                                                         : BATON_ROLE_ICTUS;
    out->beat = static_cast<int>(index / 2) + 1;
    out->x = a.position.x;
    out->y = a.position.y;
    out->roundness = a.roundness;
    return BATON_OK;
}

baton_status baton_pattern_reflect(const baton_pattern* pattern, baton_pattern** out) {
    if (pattern == nullptr || out == nullptr) {
        return null_argument();
    }
    return guard([&] { *out = new baton_pattern{baton::reflect_document(pattern->doc)}; });
}

baton_status baton_pattern_validate(const baton_pattern* pattern, double tolerance,
                                    baton_report_format format, size_t* error_count,
                                    size_t* warning_count, char** report) {
    if (pattern == nullptr) {
        return null_argument();
    }
    if (format != BATON_REPORT_TEXT && format != BATON_REPORT_JSON) {
        return fail(BATON_ERR_INVALID_ARGUMENT, "unknown report format");
    }
    return guard([&] {
        const auto r = baton::validate_pattern(pattern->doc.pattern, tolerance);
        if (error_count != nullptr) {
            *error_count = r.error_count();
        }
        if (warning_count != nullptr) {
            *warning_count = r.warning_count();
        }
        if (report != nullptr) {
            *report = duplicate(format == BATON_REPORT_JSON
                                    ? baton::report_to_json(r).dump(2) + "\n"
                                    : text_report(r));
        }
    });
}

baton_status baton_curve_point(const baton_pattern* pattern, double s, baton_vec2* out) {
    if (pattern == nullptr || out == nullptr) {
        return null_argument();
    }
    return guard([&] {
        const auto p = baton::curve_point(pattern->doc.pattern, s);
        *out = {p.x, p.y};
    });
}

baton_status baton_curve_tangent(const baton_pattern* pattern, double s, baton_vec2* out) {
    if (pattern == nullptr || out == nullptr) {
        return null_argument();
    }
    return guard([&] {
        const auto v = baton::curve_tangent(pattern->doc.pattern, s);
        *out = {v.x, v.y};
    });
}

baton_status baton_timing_create(int beats, double bpm, double beta, baton_timing** out) {
    if (out == nullptr) {
        return null_argument();
    }
    return guard([&] { *out = new baton_timing{baton::TimingLaw(beats, bpm, beta)}; });
}

void baton_timing_free(baton_timing* timing) { delete timing; }

double baton_timing_cycle_duration(const baton_timing* timing) {
    return timing == nullptr ? 0.0 : timing->law.cycle_duration();
}

double baton_timing_segment_duration(const baton_timing* timing) {
    return timing == nullptr ? 0.0 : timing->law.segment_duration();
}

baton_status baton_timing_phase(const baton_timing* timing, double t, double* out) {
    if (timing == nullptr || out == nullptr) {
        return null_argument();
    }
    return guard([&] { *out = baton::phase(timing->law, t); });
}

baton_status baton_timing_phase_rate(const baton_timing* timing, double t, double* out) {
    if (timing == nullptr || out == nullptr) {
        return null_argument();
    }
    return guard([&] { *out = baton::phase_rate(timing->law, t); });
}

baton_status baton_position(const baton_pattern* pattern, const baton_timing* timing, double t,
                            baton_vec2* out) {
    if (pattern == nullptr || timing == nullptr || out == nullptr) {
        return null_argument();
    }
    return guard([&] {
        const auto p = baton::baton_position(pattern->doc.pattern, timing->law, t);
        *out = {p.x, p.y};
    });
}

baton_status baton_velocity(const baton_pattern* pattern, const baton_timing* timing, double t,
                            baton_vec2* out) {
    if (pattern == nullptr || timing == nullptr || out == nullptr) {
        return null_argument();
    }
    return guard([&] {
        const auto v = baton::baton_velocity(pattern->doc.pattern, timing->law, t);
        *out = {v.x, v.y};
    });
}

baton_status baton_sample(const baton_pattern* pattern, const baton_timing* timing, double t0,
                          double t1, int count, double start_offset, baton_sample_format format,
                          char** out) {
    if (pattern == nullptr || timing == nullptr || out == nullptr) {
        return null_argument();
    }
    if (format != BATON_FORMAT_TABLE && format != BATON_FORMAT_STRUCTURED) {
        return fail(BATON_ERR_INVALID_ARGUMENT, "unknown sample format");
    }
    return guard([&] {
        if (!(start_offset >= 0.0) || !std::isfinite(start_offset)) {
            throw baton::DomainError("start offset must be finite and >= 0");
        }
        if (!(t0 >= 0.0 && t0 < t1)) {
            throw baton::DomainError("time window must satisfy 0 <= from < to");
        }
        auto samples = baton::sample_trajectory(pattern->doc.pattern, timing->law,
                                                t0 + start_offset, t1 + start_offset, count);
        if (start_offset != 0.0) {
            for (std::size_t k = 0; k < samples.size(); ++k) {
                samples[k].t = k + 1 == samples.size() ? t1 : samples[k].t - start_offset;
            }
        }
        *out = duplicate(baton::export_samples(samples, format == BATON_FORMAT_TABLE
                                                            ? baton::SampleFormat::table
                                                            : baton::SampleFormat::structured));
    });
}

void baton_render_options_init(baton_render_options* opts) {
    if (opts == nullptr) {
        return;
    }
    const baton::RenderOptions d;
    opts->width = d.width;
    opts->height = d.height;
    opts->margin = d.margin;
    opts->stroke_width = d.stroke_width;
    opts->show_anchors = d.show_anchors ? 1 : 0;
    opts->show_labels = d.show_labels ? 1 : 0;
    opts->show_spatial_speed = d.show_spatial_speed ? 1 : 0;
    opts->samples_per_segment = d.samples_per_segment;
}

baton_status baton_render_curve(const baton_pattern* pattern, const baton_render_options* opts,
                                char** svg) {
    if (pattern == nullptr || svg == nullptr) {
        return null_argument();
    }
    return guard([&] { *svg = duplicate(baton::render_curve(pattern->doc.pattern, to_options(opts))); });
}

baton_status baton_render_speed_plot(const baton_pattern* pattern, const baton_timing* timing,
                                     const baton_render_options* opts, char** svg) {
    if (pattern == nullptr || timing == nullptr || svg == nullptr) {
        return null_argument();
    }
    return guard([&] {
        *svg = duplicate(
            baton::render_speed_plot(pattern->doc.pattern, timing->law, to_options(opts)));
    });
}

baton_status baton_serve(const char* host, int port) {
    if (host == nullptr) {
        return null_argument();
    }
    if (port < 0 || port > 65535) {
        return fail(BATON_ERR_DOMAIN, "port must be in [0, 65535]");
    }
    baton::service::PlaybackServer server;
    const int bound = server.bind(host, port);
    if (bound < 0) {
        return fail(BATON_ERR_SERVICE,
                    "could not bind " + std::string(host) + ":" + std::to_string(port));
    }
    if (!server.run()) {
        return fail(BATON_ERR_SERVICE, "service loop terminated abnormally");
    }
    return BATON_OK;
}

} // extern "C"
