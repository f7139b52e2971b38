// baton: command-line front end for the conducting-pattern engine.
//
// Exit status: 0 success, 1 pattern rejected (document or validation
// errors), 2 usage errors, 3 I/O errors.

#include "baton/baton.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

struct Exit {
    int code;
    std::string message;
};

struct PatternDeleter {
    void operator()(baton_pattern* p) const { baton_pattern_free(p); }
};
struct TimingDeleter {
    void operator()(baton_timing* t) const { baton_timing_free(t); }
};
struct StringDeleter {
    void operator()(char* s) const { baton_string_free(s); }
};

using PatternPtr = std::unique_ptr<baton_pattern, PatternDeleter>;
using TimingPtr = std::unique_ptr<baton_timing, TimingDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int exit_code_for(baton_status status) {
    switch (status) {
    case BATON_ERR_DOCUMENT:
        return kExitRejected;
    case BATON_ERR_SERVICE:
        return kExitIo;
    case BATON_ERR_INTERNAL:
        return kExitRejected;
    default:
        return kExitUsage;
    }
}

void check(baton_status status, const std::string& context = {}) {
    if (status == BATON_OK) {
        return;
    }
    std::string msg = context.empty() ? "" : context + ": ";
    msg += baton_last_error();
    throw Exit{exit_code_for(status), msg};
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Exit{kExitIo, "cannot open " + path};
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) {
        throw Exit{kExitIo, "error reading " + path};
    }
    return buf.str();
}

void write_output(const std::string& path, const char* text) {
    if (path == "-") {
        std::cout << text << std::flush;
        if (!std::cout) {
            throw Exit{kExitIo, "error writing to stdout"};
        }
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Exit{kExitIo, "cannot open " + path + " for writing"};
    }
    out << text;
    out.close();
    if (!out) {
        throw Exit{kExitIo, "error writing " + path};
    }
}

PatternPtr load_pattern(const std::string& path, bool lenient) {
    const std::string text = read_input(path);
    baton_pattern* raw = nullptr;
    check(baton_pattern_parse(text.data(), text.size(), lenient ? 1 : 0, &raw),
          path == "-" ? "stdin" : path);
    return PatternPtr(raw);
}

// Rejects patterns the engine would not accept, printing the report.
void require_accepted(const baton_pattern* pattern) {
    size_t errors = 0;
    char* report = nullptr;
    check(baton_pattern_validate(pattern, 1e-9, BATON_REPORT_TEXT, &errors, nullptr, &report));
    StringPtr owned(report);
    if (errors != 0) {
        std::cerr << owned.get();
        throw Exit{kExitRejected, "pattern failed validation"};
    }
}

TimingPtr make_timing(int beats, double bpm, double beta) {
    baton_timing* raw = nullptr;
    check(baton_timing_create(beats, bpm, beta, &raw));
    return TimingPtr(raw);
}

struct RenderFlags {
    baton_render_options opts{};
    bool no_labels = false;
    bool no_anchors = false;

    RenderFlags() { baton_render_options_init(&opts); }

    void add_to(CLI::App* cmd) {
        cmd->add_option("--width", opts.width, "canvas width in pixels")->capture_default_str();
        cmd->add_option("--height", opts.height, "canvas height in pixels")->capture_default_str();
        cmd->add_option("--margin", opts.margin, "margin in pixels")->capture_default_str();
        cmd->add_option("--stroke", opts.stroke_width, "stroke width")->capture_default_str();
        cmd->add_option("--samples-per-segment", opts.samples_per_segment,
                        "curve samples per half-beat segment (>= 8)")
            ->capture_default_str();
        cmd->add_flag("--no-labels", no_labels, "omit text labels");
        cmd->add_flag("--no-anchors", no_anchors, "omit anchor markers");
    }

    baton_render_options* resolved() {
        opts.show_labels = no_labels ? 0 : 1;
        opts.show_anchors = no_anchors ? 0 : 1;
        return &opts;
    }
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Conducting-pattern engine: defaults, validation, rendering, sampling and "
                 "the playback service"};
    app.set_version_flag("--version", baton_version());
    app.require_subcommand(1);

    std::string input = "-";
    std::string output = "-";
    bool lenient = false;
    double bpm = 60.0;
    double beta = 0.6;

    auto* defaults = app.add_subcommand("defaults", "emit a built-in pattern document");
    int beats = 4;
    defaults->add_option("--beats", beats, "beats per cycle (2, 3, 4 or 6)")->required();
    defaults->add_option("--out", output, "output path, - for stdout")->capture_default_str();

    auto* validate = app.add_subcommand("validate", "check a pattern; exit 0 iff no errors");
    double tolerance = 1e-9;
    bool json_report = false;
    validate->add_option("file", input, "pattern document, - for stdin")->required();
    validate->add_option("--tolerance", tolerance, "height tolerance")->capture_default_str();
    validate->add_flag("--json", json_report, "print the report as JSON");
    validate->add_flag("--lenient", lenient, "keep unknown fields instead of rejecting");

    auto* reflect = app.add_subcommand("reflect", "switch between conductor and performer view");
    reflect->add_option("file", input, "pattern document, - for stdin")->required();
    reflect->add_option("--out", output, "output path, - for stdout")->capture_default_str();
    reflect->add_flag("--lenient", lenient, "keep unknown fields instead of rejecting");

    RenderFlags render_flags;
    auto* render = app.add_subcommand("render", "draw the pattern curve as SVG");
    render->add_option("file", input, "pattern document, - for stdin")->required();
    render->add_option("--out", output, "output path, - for stdout")->capture_default_str();
    render->add_flag("--lenient", lenient, "keep unknown fields instead of rejecting");
    render_flags.add_to(render);

    RenderFlags speed_flags;
    bool spatial = false;
    auto* speed = app.add_subcommand("speed", "plot phase rate over one cycle as SVG");
    speed->add_option("file", input, "pattern document, - for stdin")->required();
    speed->add_option("--bpm", bpm, "tempo in beats per minute")->capture_default_str();
    speed->add_option("--beta", beta, "speed balance in [0,1]")->capture_default_str();
    speed->add_option("--out", output, "output path, - for stdout")->capture_default_str();
    speed->add_flag("--spatial", spatial, "overlay spatial speed");
    speed->add_flag("--lenient", lenient, "keep unknown fields instead of rejecting");
    speed_flags.add_to(speed);

    auto* sample = app.add_subcommand("sample", "sample the baton motion");
    std::optional<double> from;
    std::optional<double> to;
    int count = 100;
    double offset = 0.0;
    std::string format = "table";
    sample->add_option("file", input, "pattern document, - for stdin")->required();
    sample->add_option("--bpm", bpm, "tempo in beats per minute")->capture_default_str();
    sample->add_option("--beta", beta, "speed balance in [0,1]")->capture_default_str();
    sample->add_option("--from", from, "start time in seconds (default 0)");
    sample->add_option("--to", to, "end time in seconds (default: one cycle)");
    sample->add_option("--count", count, "number of samples (>= 2)")->capture_default_str();
    sample->add_option("--offset", offset, "engine time at playback time 0")
        ->capture_default_str();
    sample->add_option("--format", format, "table or structured")
        ->check(CLI::IsMember({"table", "structured"}))
        ->capture_default_str();
    sample->add_option("--out", output, "output path, - for stdout")->capture_default_str();
    sample->add_flag("--lenient", lenient, "keep unknown fields instead of rejecting");

    auto* serve = app.add_subcommand("serve", "run the HTTP playback service");
    int port = 8080;
    std::string host = "127.0.0.1";
    serve->add_option("--port", port, "TCP port")->capture_default_str();
    serve->add_option("--host", host, "bind address")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (defaults->parsed()) {
            baton_pattern* raw = nullptr;
            check(baton_pattern_default(beats, &raw));
            PatternPtr p(raw);
            char* text = nullptr;
            check(baton_pattern_serialize(p.get(), &text));
            write_output(output, StringPtr(text).get());
        } else if (validate->parsed()) {
            auto p = load_pattern(input, lenient);
            size_t errors = 0;
            char* report = nullptr;
            check(baton_pattern_validate(p.get(), tolerance,
                                         json_report ? BATON_REPORT_JSON : BATON_REPORT_TEXT,
                                         &errors, nullptr, &report));
            write_output("-", StringPtr(report).get());
            return errors == 0 ? 0 : kExitRejected;
        } else if (reflect->parsed()) {
            auto p = load_pattern(input, lenient);
            baton_pattern* raw = nullptr;
            check(baton_pattern_reflect(p.get(), &raw));
            PatternPtr mirrored(raw);
            char* text = nullptr;
            check(baton_pattern_serialize(mirrored.get(), &text));
            write_output(output, StringPtr(text).get());
        } else if (render->parsed()) {
            auto p = load_pattern(input, lenient);
            require_accepted(p.get());
            char* svg = nullptr;
            check(baton_render_curve(p.get(), render_flags.resolved(), &svg));
            write_output(output, StringPtr(svg).get());
        } else if (speed->parsed()) {
            make_timing(1, bpm, beta);
            auto p = load_pattern(input, lenient);
            require_accepted(p.get());
            auto law = make_timing(baton_pattern_beats(p.get()), bpm, beta);
            auto* opts = speed_flags.resolved();
            opts->show_spatial_speed = spatial ? 1 : 0;
            char* svg = nullptr;
            check(baton_render_speed_plot(p.get(), law.get(), opts, &svg));
            write_output(output, StringPtr(svg).get());
        } else if (sample->parsed()) {
            // Flag errors take precedence over problems with the input.
            make_timing(1, bpm, beta);
            auto p = load_pattern(input, lenient);
            require_accepted(p.get());
            auto law = make_timing(baton_pattern_beats(p.get()), bpm, beta);
            const double t0 = from.value_or(0.0);
            const double t1 = to.value_or(t0 + baton_timing_cycle_duration(law.get()));
            char* text = nullptr;
            check(baton_sample(p.get(), law.get(), t0, t1, count, offset,
                               format == "table" ? BATON_FORMAT_TABLE : BATON_FORMAT_STRUCTURED,
                               &text));
            write_output(output, StringPtr(text).get());
        } else if (serve->parsed()) {
            std::cerr << "serving on http://" << host << ":" << port << "/api/v1\n";
            check(baton_serve(host.c_str(), port));
        }
    } catch (const Exit& e) {
        if (!e.message.empty()) {
            std::cerr << "baton: " << e.message << "\n";
        }
        return e.code;
    }
    return 0;
}
