#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "deabench/config.hpp"
#include "deabench/errors.hpp"
#include "deabench/fixtures.hpp"
#include "deabench/panel_io.hpp"
#include "deabench/regions.hpp"
#include "deabench/report.hpp"
#include "deabench/table.hpp"

using namespace deabench;

namespace {

// Scratch file under the build tree's working directory, removed on scope exit.
struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const std::string &name, const std::string &content)
        : path(std::filesystem::path("scratch_" + name)) {
        std::ofstream out(path, std::ios::binary);
        out << content;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

std::string read_file(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("region normalization covers the documented aliases") {
    CHECK(canonical_regions().size() == 21);
    CHECK(is_canonical_region("Alto Adige"));
    CHECK_FALSE(is_canonical_region("Trentino-Alto Adige"));
    CHECK(normalize_region("PROV AUT BOLZANO") == "Alto Adige");
    CHECK(normalize_region("P.A. Trento") == "Trentino");
    CHECK(normalize_region("EMILIA ROMAGNA") == "Emilia-Romagna");
    CHECK(normalize_region("friuli venezia giulia") == "Friuli-Venezia Giulia");
    CHECK_FALSE(normalize_region("Atlantis").has_value());
}

TEST_CASE("panel loader accepts clean rows and normalizes regions") {
    TempFile f("panel_ok.csv", "region,year,indicator,value\n"
                               "Abruzzo,2010,per_capita_spend,1777\n"
                               "P.A. Bolzano,2010,per_capita_spend,2250.5\n");
    auto panel = load_panel(f.path);
    CHECK(panel.at("Abruzzo", 2010, "per_capita_spend") == 1777.0);
    CHECK(panel.at("Alto Adige", 2010, "per_capita_spend") == 2250.5);
}

TEST_CASE("panel loader reports the offending line") {
    TempFile f("panel_dup.csv", "region,year,indicator,value\n"
                                "Abruzzo,2010,x,1\n"
                                "Abruzzo,2010,x,2\n");
    CHECK_THROWS_WITH_AS(load_panel(f.path), doctest::Contains(":3"), data_error);

    TempFile g("panel_badval.csv", "region,year,indicator,value\n"
                                   "Abruzzo,2010,x,not_a_number\n");
    CHECK_THROWS_WITH_AS(load_panel(g.path), doctest::Contains(":2"), data_error);
}

TEST_CASE("unsplit Trentino-Alto Adige is rejected with a hint") {
    TempFile f("panel_taa.csv", "region,year,indicator,value\n"
                                "Trentino-Alto Adige,2010,x,1\n");
    CHECK_THROWS_WITH_AS(load_panel(f.path), doctest::Contains("autonomous provinces"),
                         data_error);
}

TEST_CASE("year tables round-trip through CSV at the declared precision") {
    YearTable t(std::vector<int>{2010, 2011});
    t.set("Abruzzo", 2010, 0.346);
    t.set("Abruzzo", 2011, 1.0);
    t.set("Lazio", 2010, 0.5);
    t.set("Lazio", 2011, 0.25);
    const std::filesystem::path p = "scratch_roundtrip.csv";
    write_year_table(t, p, 3);
    auto back = load_year_table(p);
    for (const auto &row : t.rows())
        for (int y : t.years()) CHECK(back.at(row, y) == doctest::Approx(t.at(row, y)).epsilon(1e-12));
    // Writing again produces byte-identical output.
    const std::string first = read_file(p);
    write_year_table(back, p, 3);
    CHECK(read_file(p) == first);
    std::filesystem::remove(p);
}

TEST_CASE("malformed wide CSV raises located data errors") {
    TempFile f("wide_bad.csv", "region,2010,2011\nAbruzzo,1.0\n");
    CHECK_THROWS_WITH_AS(load_year_table(f.path), doctest::Contains(":2"), data_error);
    TempFile g("wide_dup.csv", "region,2010\nAbruzzo,1\nAbruzzo,2\n");
    CHECK_THROWS_AS(load_year_table(g.path), data_error);
}

TEST_CASE("config parsing covers every documented key") {
    TempFile f("cfg_ok.txt",
               "# comment\n"
               "shares.default = 0.45, 0.50, 0.05\n"
               "shares.2012 = 0.44, 0.51, 0.05\n"
               "composite.hospital_weight = 0.9\n"
               "composite.district_weight = 1.1\n"
               "rts = vrs\n"
               "weight_floor = 0.01\n"
               "split.hospital = median\n"
               "split.district = mean\n"
               "out_dir = artifacts\n"
               "precision.indices = 4\n"
               "precision.efficiency = 3\n");
    auto cfg = load_config(f.path);
    CHECK(cfg.rts == dea::RtsMode::VRS);
    CHECK(cfg.weight_floor == doctest::Approx(0.01).epsilon(1e-12));
    CHECK(cfg.hospital_split == SplitRule::median);
    CHECK(cfg.district_split == SplitRule::mean);
    CHECK(cfg.out_dir == std::filesystem::path("artifacts"));
    CHECK(cfg.index_precision == 4);
    CHECK(cfg.efficiency_precision == 3);
    auto [h, d] = cfg.shares.effective_multipliers(2012);
    CHECK(h == doctest::Approx(0.44 / 0.95).epsilon(1e-9));
    CHECK(cfg.composite_weights.hospital_weight == doctest::Approx(0.9).epsilon(1e-12));
}

TEST_CASE("config errors: unknown keys and invalid values") {
    TempFile f("cfg_unknown.txt", "no_such_key = 1\n");
    CHECK_THROWS_WITH_AS(load_config(f.path), doctest::Contains("unknown key"), config_error);
    TempFile g("cfg_badrts.txt", "rts = sometimes\n");
    CHECK_THROWS_AS(load_config(g.path), config_error);
    TempFile h("cfg_badshares.txt", "shares.2010 = 0.9, 0.2, 0.1\n");
    CHECK_THROWS_AS(load_config(h.path), config_error);
    CHECK_THROWS_AS(load_config("no_such_file.txt"), config_error);
}

TEST_CASE("fixture bundle loads with the documented shapes") {
    const auto fx = load_fixtures(fixture_directory());
    CHECK(fx.tables.size() == 12);
    for (const auto &name : {"tab_2_1", "tab_2_2", "tab_3_1", "tab_3_2", "tab_4_1", "tab_4_2",
                             "tab_4_3", "tab_4_4", "tab_4_5", "tab_4_6"}) {
        const auto &t = fx.tab(name);
        CHECK(t.row_count() == 21);
        CHECK(t.years() == std::vector<int>{2010, 2011, 2012, 2013});
        for (const auto &row : t.rows()) CHECK(is_canonical_region(row));
    }
    CHECK(fx.tab("tab_1_1").years().size() == 7);
    CHECK(fx.tab("tab_2_3").years().front() == 2008);
    CHECK(fx.tab("tab_1_1").has_row("ITALIA"));
    CHECK_THROWS_AS(fx.tab("tab_9_9"), data_error);
    CHECK_THROWS_AS(load_fixtures("no/such/dir"), data_error);
}

TEST_CASE("fixed formatting is locale-free and deterministic") {
    CHECK(format_fixed(0.3455, 2) == "0.35");
    CHECK(format_fixed(-1.0, 3) == "-1.000");
    CHECK(format_fixed(1234.56, 1) == "1234.6");
}

TEST_CASE("markdown tables carry per-column color buckets and a legend") {
    YearTable t(std::vector<int>{2010});
    t.set("Abruzzo", 2010, 0.0);
    t.set("Lazio", 2010, 1.0);
    const std::string md = markdown_year_table(t, "toy", 2);
    CHECK(md.find("(b0)") != std::string::npos);
    CHECK(md.find("(b8)") != std::string::npos);
    CHECK(md.find("Legend") != std::string::npos);
}

TEST_CASE("svg emitters escape labels and stay deterministic") {
    std::vector<ScatterPoint> pts = {{"A&B", 0.1, 0.2}, {"C<D>", 0.9, 0.8}};
    const std::string svg = svg_scatter(pts, 0.5, 0.5, "x", "y", "title");
    CHECK(svg.find("A&amp;B") != std::string::npos);
    CHECK(svg.find("C&lt;D&gt;") != std::string::npos);
    CHECK(svg == svg_scatter(pts, 0.5, 0.5, "x", "y", "title"));
    const std::string line = svg_line_chart({2010, 2011}, {0.64, 0.68}, "mean", "series");
    CHECK(line.find("2010") != std::string::npos);
    CHECK(line.find("polyline") != std::string::npos);
}

TEST_CASE("atomic writes leave no temp files behind") {
    const std::filesystem::path p = "scratch_atomic.txt";
    write_file_atomic(p, "payload");
    CHECK(read_file(p) == "payload");
    std::filesystem::remove(p);
}
