#include "CLI11.hpp"
#include "oddcover/io.hpp"

#include <iostream>
#include <string>

using namespace oddcover;

namespace {

struct RunConfig {
    std::string command;
    std::string input;
    std::string output;
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    int window = 4;
    std::string format = "text";
};

int run(const RunConfig& cfg) {
    if (cfg.command == "normalize") {
        IntegerPolygon p = normalize_polygon(load_polygon_file(cfg.input));
        std::string report = cfg.format == "structured" ? json_normalize_report(p)
                                                        : text_normalize_report(p);
        if (!cfg.output.empty()) write_text_file(cfg.output, format_polygon_text(p.polygon));
        std::cout << report;
        return 0;
    }
    if (cfg.command == "analyze") {
        OddCover c = build_cover(load_polygon_file(cfg.input));
        std::cout << (cfg.format == "structured" ? json_analyze_report(c)
                                                 : text_analyze_report(c));
        return 0;
    }
    if (cfg.command == "cover") {
        OddCover c = build_cover(load_polygon_file(cfg.input));
        if (!cfg.output.empty()) save_cover_file(cfg.output, c);
        std::cout << (cfg.format == "structured" ? json_cover_report(c) : text_cover_report(c));
        return 0;
    }
    if (cfg.command == "verify") {
        OddCover c = load_cover_file(cfg.input);
        VerifyReport rep = verify_cover(c, cfg.samples, cfg.seed);
        std::string report = cfg.format == "structured" ? json_verify_report(rep)
                                                        : text_verify_report(rep);
        if (!cfg.output.empty()) write_text_file(cfg.output, report);
        std::cout << report;
        return rep.pass ? 0 : 1;
    }
    if (cfg.command == "odd-area") {
        OddAreaInput in = load_odd_area_input(cfg.input);
        if (in.k.size() % 2 == 0)
            throw std::invalid_argument(
                "odd-area: the translate list must have odd cardinality (|K| odd), got " +
                std::to_string(in.k.size()));
        Rational area = odd_area(in.polygon, in.k);
        Rational ratio = area / polygon_area(in.polygon);
        if (cfg.format == "structured") {
            std::cout << json_odd_area_report(in.polygon, in.k, area, ratio);
        } else {
            std::cout << "odd area: " << to_string(area) << "\nratio: " << to_string(ratio)
                      << "\n";
        }
        return 0;
    }
    if (cfg.command == "render") {
        OddCover c = load_cover_file(cfg.input);
        std::string svg = render_svg(c, cfg.window);
        if (!cfg.output.empty())
            write_text_file(cfg.output, svg);
        else
            std::cout << svg;
        return 0;
    }
    throw std::invalid_argument("unknown command: " + cfg.command);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"odd plane coverings by polygon translates"};
    app.require_subcommand(1);

    RunConfig cfg;
    for (const char* name :
         {"normalize", "analyze", "cover", "verify", "odd-area", "render"}) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("--input", cfg.input, "input file")->required();
        sub->add_option("--output", cfg.output, "output file");
        sub->add_option("--samples", cfg.samples, "sample count")->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--window", cfg.window, "window size n")->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "report format")
            ->check(CLI::IsMember({"text", "structured", "svg"}));
        sub->callback([&cfg, name] { cfg.command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (app.count_all() > 0 && e.get_exit_code() != 0)
            std::cerr << json_error("usage", e.what());
        return app.exit(e, std::cout, std::cerr) == 0 ? 0 : 2;
    }

    try {
        return run(cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << json_error("invalid-input", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json_error("runtime", e.what());
        return 1;
    }
}
