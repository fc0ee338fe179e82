// deabench: command-line front end over the benchmark library.
//
// Exit codes: 0 success, 1 usage, 2 data, 3 config, 4 internal,
// 5 reproduction hard-criterion failure.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "deabench/analysis.hpp"
#include "deabench/config.hpp"
#include "deabench/efficiency.hpp"
#include "deabench/errors.hpp"
#include "deabench/fixtures.hpp"
#include "deabench/indices.hpp"
#include "deabench/panel_io.hpp"
#include "deabench/regions.hpp"
#include "deabench/report.hpp"
#include "deabench/reproduce.hpp"
#include "deabench/table.hpp"

namespace {

using namespace deabench;

struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string command;
    std::string domain = "hospital";
    std::string kind = "coverage";
    std::string rts;   // empty = take from config
    std::string split; // empty = take from config per domain
    std::string mode = "simple";
    int year = 2010;
    bool year_given = false;
    std::string config_path;
    std::string out_dir;
    std::string panel_path;
};

ServiceDomain parse_domain(const std::string &s) {
    if (s == "hospital") return ServiceDomain::hospital;
    if (s == "district") return ServiceDomain::district;
    throw usage_error("--domain must be hospital or district");
}

dea::RtsMode parse_rts(const std::string &s, const RunConfig &config) {
    if (s.empty()) return config.rts;
    if (s == "crs") return dea::RtsMode::CRS;
    if (s == "vrs") return dea::RtsMode::VRS;
    throw usage_error("--rts must be crs or vrs");
}

SplitRule parse_split(const std::string &s, ServiceDomain domain, const RunConfig &config) {
    if (s.empty())
        return domain == ServiceDomain::hospital ? config.hospital_split : config.district_split;
    if (s == "mean") return SplitRule::mean;
    if (s == "median") return SplitRule::median;
    throw usage_error("--split must be mean or median");
}

std::string index_name(ServiceDomain domain, const std::string &kind) {
    const bool hospital = domain == ServiceDomain::hospital;
    if (kind == "coverage") return hospital ? "ICSO" : "ICSD";
    if (kind == "quality") return hospital ? "IQSO" : "IQSD";
    throw usage_error("--kind must be coverage or quality");
}

std::string fixture_for_index(const std::string &index) {
    static const std::map<std::string, std::string> map = {
        {"ICSO", "tab_2_1"}, {"IQSO", "tab_2_2"}, {"ICSD", "tab_3_1"}, {"IQSD", "tab_3_2"}};
    return map.at(index);
}

std::string lower(std::string s) {
    for (char &c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

YearTable table_from_series(const ScoreSeries &series) {
    YearTable out(series.years());
    for (const auto &region : canonical_regions())
        for (int y : out.years())
            if (series.scores.count({region, y})) out.set(region, y, series.at(region, y));
    return out;
}

RunConfig resolve_config(const Options &opt) {
    RunConfig config = opt.config_path.empty() ? RunConfig{} : load_config(opt.config_path);
    if (!opt.out_dir.empty()) config.out_dir = opt.out_dir;
    config.validate();
    return config;
}

DatasetBundle resolve_fixtures(const RunConfig &config) {
    return load_fixtures(fixture_directory(config.fixtures_dir.string()));
}

void emit_table(const YearTable &table, const RunConfig &config, const std::string &stem,
                const std::string &title, int precision) {
    std::filesystem::create_directories(config.out_dir);
    write_year_table(table, config.out_dir / (stem + ".csv"), precision);
    write_file_atomic(config.out_dir / (stem + ".md"),
                      markdown_year_table(table, title, precision));
    std::cout << "wrote " << (config.out_dir / stem).string() << ".{csv,md}\n";
}

int cmd_indices(const Options &opt) {
    if (opt.panel_path.empty())
        throw usage_error("indices needs --panel <region,year,indicator,value CSV>");
    const RunConfig config = resolve_config(opt);
    const ServiceDomain domain = parse_domain(opt.domain);
    const std::string index = index_name(domain, opt.kind);
    const IndicatorPanel panel = load_panel(opt.panel_path);

    ScoreSeries all;
    all.index_name = index;
    for (int y : panel.years()) {
        if (opt.year_given && y != opt.year) continue;
        ScoreSeries slice;
        if (index == "ICSO" || index == "ICSD")
            slice = compute_coverage_index(panel, domain, y, config.weight_floor);
        else if (index == "IQSO")
            slice = compute_iqso(panel, y);
        else
            slice = compute_iqsd(panel, y, config.weight_floor);
        for (const auto &[key, v] : slice.scores) all.scores[key] = v;
    }
    if (all.scores.empty()) throw data_error("panel holds no rows for the requested year(s)");

    emit_table(table_from_series(all), config, "indices_" + lower(index),
               index + " (" + opt.domain + " " + opt.kind + ")", config.index_precision);
    return 0;
}

int cmd_efficiency(const Options &opt) {
    const RunConfig config = resolve_config(opt);
    const ServiceDomain domain = parse_domain(opt.domain);
    const dea::RtsMode rts = parse_rts(opt.rts, config);
    const DatasetBundle fx = resolve_fixtures(config);

    const YearTable table = reconstruct_efficiency(fx, domain, rts, config.shares);
    const std::string rts_name = rts == dea::RtsMode::CRS ? "crs" : "vrs";
    emit_table(table, config, "efficiency_" + opt.domain + "_" + rts_name,
               "Input-oriented efficiency, " + opt.domain + " (" + rts_name + ")",
               config.efficiency_precision);
    return 0;
}

int cmd_composite(const Options &opt) {
    const RunConfig config = resolve_config(opt);
    const DatasetBundle fx = resolve_fixtures(config);
    CompositeMode mode;
    if (opt.mode == "simple")
        mode = CompositeMode::simple;
    else if (opt.mode == "weighted")
        mode = CompositeMode::weighted;
    else
        throw usage_error("--mode must be simple or weighted");

    const ScoreSeries composite = composite_efficiency(
        series_from_table(fx.tab("tab_4_3"), "hospital"),
        series_from_table(fx.tab("tab_4_4"), "district"), mode, config.composite_weights);
    emit_table(table_from_series(composite), config, "composite_" + opt.mode,
               "Composite efficiency (" + opt.mode + ")", config.efficiency_precision);
    return 0;
}

int cmd_quadrants(const Options &opt) {
    const RunConfig config = resolve_config(opt);
    const ServiceDomain domain = parse_domain(opt.domain);
    const SplitRule rule = parse_split(opt.split, domain, config);
    const DatasetBundle fx = resolve_fixtures(config);

    const bool hospital = domain == ServiceDomain::hospital;
    const ScoreSeries coverage =
        series_from_table(fx.tab(hospital ? "tab_2_1" : "tab_3_1"), hospital ? "ICSO" : "ICSD");
    const ScoreSeries quality =
        series_from_table(fx.tab(hospital ? "tab_2_2" : "tab_3_2"), hospital ? "IQSO" : "IQSD");
    if (!fx.tab("tab_2_1").has_year(opt.year))
        throw data_error("year " + std::to_string(opt.year) + " is not in the fixture tables");
    const auto assignments = quadrants(coverage, quality, opt.year, rule);

    const std::string rule_name = rule == SplitRule::mean ? "mean" : "median";
    const std::string stem = "quadrants_" + opt.domain + "_" + std::to_string(opt.year);
    std::filesystem::create_directories(config.out_dir);

    std::ostringstream csv;
    csv << "region,quadrant,coverage,quality,split_coverage,split_quality,split_rule\n";
    std::ostringstream md;
    md << "## Quadrants, " << opt.domain << " " << opt.year << " (" << rule_name
       << " split; ties at the split count as high)\n\n"
       << "| region | quadrant | coverage | quality |\n|---|---|---|---|\n";
    std::vector<ScatterPoint> points;
    for (const auto &a : assignments) {
        csv << a.region << ',' << quadrant_name(a.quadrant) << ','
            << format_fixed(a.x, config.index_precision) << ','
            << format_fixed(a.y, config.index_precision) << ','
            << format_fixed(a.split_point_x, config.index_precision) << ','
            << format_fixed(a.split_point_y, config.index_precision) << ',' << rule_name << '\n';
        md << "| " << a.region << " | " << quadrant_name(a.quadrant) << " | "
           << format_fixed(a.x, config.index_precision) << " | "
           << format_fixed(a.y, config.index_precision) << " |\n";
        points.push_back({a.region, a.x, a.y});
    }
    write_file_atomic(config.out_dir / (stem + ".csv"), csv.str());
    write_file_atomic(config.out_dir / (stem + ".md"), md.str());
    write_file_atomic(config.out_dir / (stem + ".svg"),
                      svg_scatter(points, assignments.front().split_point_x,
                                  assignments.front().split_point_y, coverage.index_name,
                                  quality.index_name,
                                  opt.domain + " services, " + std::to_string(opt.year)));
    std::cout << "wrote " << (config.out_dir / stem).string() << ".{csv,md,svg}\n";
    return 0;
}

int cmd_stats(const Options &opt) {
    const RunConfig config = resolve_config(opt);
    const ServiceDomain domain = parse_domain(opt.domain);
    const std::string index = index_name(domain, opt.kind);
    const DatasetBundle fx = resolve_fixtures(config);

    const auto stats = yearly_stats(series_from_table(fx.tab(fixture_for_index(index)), index));
    const std::string stem = "stats_" + lower(index);
    std::filesystem::create_directories(config.out_dir);

    std::ostringstream csv;
    csv << "year,mean,std_dev\n";
    std::ostringstream md;
    md << "## Yearly statistics, " << index << " (population sigma)\n\n"
       << "| year | mean | std_dev |\n|---|---|---|\n";
    std::vector<int> years;
    std::vector<double> means;
    for (const auto &s : stats) {
        csv << s.year << ',' << format_fixed(s.mean, 6) << ',' << format_fixed(s.std_dev, 6)
            << '\n';
        md << "| " << s.year << " | " << format_fixed(s.mean, config.index_precision) << " | "
           << format_fixed(s.std_dev, config.index_precision) << " |\n";
        years.push_back(s.year);
        means.push_back(s.mean);
    }
    write_file_atomic(config.out_dir / (stem + ".csv"), csv.str());
    write_file_atomic(config.out_dir / (stem + ".md"), md.str());
    write_file_atomic(config.out_dir / (stem + ".svg"),
                      svg_line_chart(years, means, index + " mean", index + " yearly mean"));
    std::cout << "wrote " << (config.out_dir / stem).string() << ".{csv,md,svg}\n";
    return 0;
}

int cmd_reproduce(const Options &opt) {
    const RunConfig config = resolve_config(opt);
    const DatasetBundle fx = resolve_fixtures(config);
    const ReproduceReport report = run_reproduction(config, fx);

    std::filesystem::create_directories(config.out_dir);
    write_file_atomic(config.out_dir / "reproduce_report.md", report.markdown);

    for (const auto &c : report.criteria)
        std::cout << (c.pass ? "PASS" : "FAIL") << " [" << (c.hard ? "hard" : "soft")
                  << "] criterion " << c.number << ": " << c.name << '\n';
    std::cout << "best returns-to-scale mode: " << report.best_rts_mode << '\n';
    std::cout << "report: " << (config.out_dir / "reproduce_report.md").string() << '\n';
    return report.hard_pass() ? 0 : 5;
}

} // namespace

int main(int argc, char **argv) {
    Options opt;
    CLI::App app{"deabench: regional healthcare service indices, DEA efficiency and reports"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--config", opt.config_path, "flat key=value config file");
        sub->add_option("--out", opt.out_dir, "output directory (default: out)");
    };
    auto *indices = app.add_subcommand("indices", "synthesize an index from a raw panel");
    indices->add_option("--panel", opt.panel_path, "long CSV: region,year,indicator,value");
    indices->add_option("--domain", opt.domain, "hospital|district");
    indices->add_option("--kind", opt.kind, "coverage|quality");
    indices->add_option("--year", opt.year, "restrict to one year")
        ->each([&](const std::string &) { opt.year_given = true; });
    add_common(indices);

    auto *efficiency = app.add_subcommand("efficiency", "DEA efficiency from the fixtures");
    efficiency->add_option("--domain", opt.domain, "hospital|district");
    efficiency->add_option("--rts", opt.rts, "crs|vrs");
    add_common(efficiency);

    auto *composite = app.add_subcommand("composite", "composite efficiency from the fixtures");
    composite->add_option("--mode", opt.mode, "simple|weighted");
    add_common(composite);

    auto *quad = app.add_subcommand("quadrants", "coverage/quality quadrants from the fixtures");
    quad->add_option("--domain", opt.domain, "hospital|district");
    quad->add_option("--split", opt.split, "mean|median");
    quad->add_option("--year", opt.year, "year (default 2010)");
    add_common(quad);

    auto *stats = app.add_subcommand("stats", "yearly mean/sigma of an index table");
    stats->add_option("--domain", opt.domain, "hospital|district");
    stats->add_option("--kind", opt.kind, "coverage|quality");
    add_common(stats);

    auto *reproduce = app.add_subcommand("reproduce", "run the full acceptance suite");
    reproduce->add_option("--rts", opt.rts, "crs|vrs (informational override)");
    add_common(reproduce);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 1;
    }

    try {
        if (indices->parsed()) return cmd_indices(opt);
        if (efficiency->parsed()) return cmd_efficiency(opt);
        if (composite->parsed()) return cmd_composite(opt);
        if (quad->parsed()) return cmd_quadrants(opt);
        if (stats->parsed()) return cmd_stats(opt);
        if (reproduce->parsed()) return cmd_reproduce(opt);
        std::cerr << "error: no command given\n";
        return 1;
    } catch (const usage_error &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const data_error &e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 2;
    } catch (const validation_error &e) {
        std::cerr << "data error: " << e.what() << '\n';
        return 2;
    } catch (const config_error &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
}
