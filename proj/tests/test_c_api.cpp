#include "baton/baton.h"

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <string>

TEST(CApi, PatternLifecycle) {
    baton_pattern* p = nullptr;
    ASSERT_EQ(baton_pattern_default(4, &p), BATON_OK);
    EXPECT_EQ(baton_pattern_beats(p), 4);

    baton_anchor a{};
    ASSERT_EQ(baton_pattern_anchor(p, 3, &a), BATON_OK);
    EXPECT_EQ(a.role, BATON_ROLE_ICTUS);
    EXPECT_EQ(a.beat, 2);
    EXPECT_EQ(baton_pattern_anchor(p, 8, &a), BATON_ERR_DOMAIN);

    char* text = nullptr;
    ASSERT_EQ(baton_pattern_serialize(p, &text), BATON_OK);
    baton_pattern* q = nullptr;
    ASSERT_EQ(baton_pattern_parse(text, std::strlen(text), 0, &q), BATON_OK);
    char* again = nullptr;
    ASSERT_EQ(baton_pattern_serialize(q, &again), BATON_OK);
    EXPECT_STREQ(text, again);
    baton_string_free(text);
    baton_string_free(again);

    baton_pattern* mirrored = nullptr;
    ASSERT_EQ(baton_pattern_reflect(p, &mirrored), BATON_OK);
    baton_vec2 orig{}, mirror{};
    ASSERT_EQ(baton_curve_point(p, 2.3, &orig), BATON_OK);
    ASSERT_EQ(baton_curve_point(mirrored, 2.3, &mirror), BATON_OK);
    EXPECT_NEAR(mirror.x, -orig.x, 1e-12);
    EXPECT_NEAR(mirror.y, orig.y, 1e-12);

    baton_vec2 tangent{};
    ASSERT_EQ(baton_curve_tangent(p, 1.0, &tangent), BATON_OK);
    EXPECT_EQ(tangent.y, 0.0);

    baton_pattern_free(mirrored);
    baton_pattern_free(q);
    baton_pattern_free(p);
}

TEST(CApi, ErrorsCarryStatusAndMessage) {
    baton_pattern* p = nullptr;
    EXPECT_EQ(baton_pattern_default(5, &p), BATON_ERR_DOMAIN);
    EXPECT_EQ(p, nullptr);
    EXPECT_NE(std::string(baton_last_error()).find("5"), std::string::npos);

    const char* broken = "{\"format_version\": 1, \"beats\": 2, \"view\": \"conductor\", \"anchors\": []}";
    EXPECT_EQ(baton_pattern_parse(broken, std::strlen(broken), 0, &p), BATON_ERR_DOCUMENT);
    EXPECT_STREQ(baton_last_error_code(), "anchor_count");

    baton_timing* t = nullptr;
    EXPECT_EQ(baton_timing_create(4, 60.0, 1.3, &t), BATON_ERR_DOMAIN);
    EXPECT_NE(std::string(baton_last_error()).find("[0,1]"), std::string::npos);
    EXPECT_EQ(baton_pattern_default(4, nullptr), BATON_ERR_INVALID_ARGUMENT);

    ASSERT_EQ(baton_pattern_default(3, &p), BATON_OK);
    ASSERT_EQ(baton_timing_create(4, 60.0, 0.5, &t), BATON_OK);
    baton_vec2 pos{};
    EXPECT_EQ(baton_position(p, t, 0.0, &pos), BATON_ERR_CONFIGURATION);
    EXPECT_EQ(baton_curve_point(p, NAN, &pos), BATON_ERR_DOMAIN);
    baton_timing_free(t);
    baton_pattern_free(p);
}

TEST(CApi, TimingAndMotion) {
    baton_pattern* p = nullptr;
    baton_timing* t = nullptr;
    ASSERT_EQ(baton_pattern_default(4, &p), BATON_OK);
    ASSERT_EQ(baton_timing_create(4, 120.0, 0.7, &t), BATON_OK);
    EXPECT_DOUBLE_EQ(baton_timing_cycle_duration(t), 2.0);
    EXPECT_DOUBLE_EQ(baton_timing_segment_duration(t), 0.25);
    double rate = 0.0;
    ASSERT_EQ(baton_timing_phase_rate(t, 0.25, &rate), BATON_OK);
    EXPECT_NEAR(rate, 6.8, 1e-12);
    double s = 0.0;
    ASSERT_EQ(baton_timing_phase(t, 2.25, &s), BATON_OK);
    EXPECT_NEAR(s, 9.0, 1e-12);
    EXPECT_EQ(baton_timing_phase(t, -1.0, &s), BATON_ERR_DOMAIN);

    baton_vec2 pos{}, vel{};
    ASSERT_EQ(baton_position(p, t, 0.25, &pos), BATON_OK);
    baton_anchor ictus{};
    baton_pattern_anchor(p, 1, &ictus);
    EXPECT_NEAR(pos.x, ictus.x, 1e-12);
    EXPECT_NEAR(pos.y, ictus.y, 1e-12);
    ASSERT_EQ(baton_velocity(p, t, 0.25, &vel), BATON_OK);
    EXPECT_NEAR(vel.y, 0.0, 1e-12);

    char* table = nullptr;
    ASSERT_EQ(baton_sample(p, t, 0.0, 2.0, 3, 0.0, BATON_FORMAT_TABLE, &table), BATON_OK);
    EXPECT_EQ(std::string(table).rfind("t,s,x,y,vx,vy,phase_rate,spatial_speed\n", 0), 0u);
    baton_string_free(table);
    EXPECT_EQ(baton_sample(p, t, 0.0, 2.0, 1, 0.0, BATON_FORMAT_TABLE, &table), BATON_ERR_DOMAIN);
    EXPECT_EQ(baton_sample(p, t, 0.0, 2.0, 3, 0.0, static_cast<baton_sample_format>(7), &table),
              BATON_ERR_INVALID_ARGUMENT);

    baton_timing_free(t);
    baton_pattern_free(p);
}

TEST(CApi, ValidationAndRendering) {
    baton_pattern* p = nullptr;
    ASSERT_EQ(baton_pattern_default(4, &p), BATON_OK);
    size_t errors = 99, warnings = 99;
    char* report = nullptr;
    ASSERT_EQ(baton_pattern_validate(p, 1e-9, BATON_REPORT_TEXT, &errors, &warnings, &report),
              BATON_OK);
    EXPECT_EQ(errors, 0u);
    EXPECT_EQ(warnings, 1u);
    EXPECT_NE(std::string(report).find("cusp"), std::string::npos);
    baton_string_free(report);

    baton_render_options opts;
    baton_render_options_init(&opts);
    EXPECT_EQ(opts.samples_per_segment, 32);
    char* svg = nullptr;
    ASSERT_EQ(baton_render_curve(p, &opts, &svg), BATON_OK);
    EXPECT_NE(std::string(svg).find("<svg"), std::string::npos);
    baton_string_free(svg);
    opts.samples_per_segment = 4;
    EXPECT_EQ(baton_render_curve(p, &opts, &svg), BATON_ERR_DOMAIN);

    baton_timing* t = nullptr;
    ASSERT_EQ(baton_timing_create(4, 60.0, 0.6, &t), BATON_OK);
    ASSERT_EQ(baton_render_speed_plot(p, t, nullptr, &svg), BATON_OK);
    EXPECT_NE(std::string(svg).find("phase-rate"), std::string::npos);
    baton_string_free(svg);
    baton_timing_free(t);
    baton_pattern_free(p);

    EXPECT_STREQ(baton_version(), "0.1.0");
    EXPECT_EQ(baton_serve("127.0.0.1", 70000), BATON_ERR_DOMAIN);
}
