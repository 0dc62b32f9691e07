#include "CLI11.hpp"

#include "coslice/boxprod.hpp"
#include "coslice/json_io.hpp"
#include "coslice/render.hpp"
#include "coslice/sphere_literal.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace coslice;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

CyclicGroupSpec spec_from(std::optional<long> p, std::optional<long> n) {
    if (!p || !n) throw parse_error("built-in functors need --p and --n");
    CyclicGroupSpec spec{*p, *n};
    try {
        check_spec(spec);
    } catch (const std::invalid_argument& e) {
        throw parse_error(e.what());
    }
    return spec;
}

bool is_builtin(const std::string& source) {
    return source == "burnside" || source == "constant_Z" || source == "dual_Z";
}

MackeyFunctor load_input(const std::string& source, std::optional<long> p,
                         std::optional<long> n) {
    if (is_builtin(source)) {
        CyclicGroupSpec spec = spec_from(p, n);
        if (source == "burnside") return burnside_functor(spec);
        if (source == "constant_Z") return constant_z(spec);
        return dual_z(spec);
    }
    return mackey_from_json(read_file(source));
}

int run_validate(const std::string& path) {
    MackeyFunctor m = mackey_from_json(read_file(path));
    auto report = validate(m);
    if (report.empty()) {
        std::cout << "valid\n";
        return 0;
    }
    for (const AxiomViolation& v : report)
        std::cout << "violation: " << v.axiom << ", level " << v.level << " (" << v.detail
                  << ")\n";
    return 1;
}

int run_slice_tower(const std::string& input, std::optional<long> p, std::optional<long> n,
                    const std::string& format) {
    SliceTower tower = slice_tower(load_input(input, p, n));
    if (format == "json")
        std::cout << slice_tower_to_json(tower) << "\n";
    else
        std::cout << slice_tower_text(tower);
    return 0;
}

int run_boxprod(const std::string& a_src, const std::string& b_src, std::optional<long> p,
                std::optional<long> n, bool compare) {
    MackeyFunctor a = load_input(a_src, p, n);
    MackeyFunctor b = load_input(b_src, p, n);
    BoxProduct box = box_product(a, b);
    std::cout << mackey_to_json(box.functor) << "\n";
    if (compare) {
        if (!(b == constant_z(a.spec)))
            throw std::domain_error(
                "--compare-zero-slice needs the second factor to be the constant functor Z");
        ZeroSliceComparison cmp = comparison_to_zero_slice(a);
        std::cout << "comparison to zero slice: "
                  << (cmp.surjective && cmp.injective
                          ? "isomorphism"
                          : std::string(cmp.surjective ? "surjective" : "not surjective") +
                                ", " + (cmp.injective ? "injective" : "not injective"))
                  << "\n";
    }
    return 0;
}

int run_sdim(const std::string& literal, std::optional<long> p, std::optional<long> n) {
    CyclicGroupSpec spec = spec_from(p, n);
    SphereSpec sphere = parse_sphere_literal(literal, spec);
    SdimInterval interval = sdim_bounds(sphere);
    std::cout << "[" << interval.lower << ", " << interval.upper << "]\n";
    for (const std::string& rule : interval.rules) std::cout << "rule: " << rule << "\n";
    return 0;
}

int run_chart(const std::string& input, std::optional<long> p, std::optional<long> n,
              const std::string& format) {
    SliceTower tower = slice_tower(load_input(input, p, n));
    ChartData chart = chart_from_tower(tower);
    std::cout << (format == "svg" ? chart_svg(chart) : chart_text(chart));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact slice filtrations of Mackey functors for cyclic p-groups"};
    app.require_subcommand(1);

    std::string validate_path;
    CLI::App* cmd_validate = app.add_subcommand("validate", "check the Mackey functor axioms");
    cmd_validate->add_option("file", validate_path, "functor in interchange JSON")->required();

    std::string tower_input, tower_format = "text";
    std::optional<long> tower_p, tower_n;
    CLI::App* cmd_tower =
        app.add_subcommand("slice-tower", "compute the slice tower of an Eilenberg-Mac Lane functor");
    cmd_tower->add_option("input", tower_input, "JSON file or burnside|constant_Z|dual_Z")
        ->required();
    cmd_tower->add_option("--p", tower_p, "prime for built-in inputs");
    cmd_tower->add_option("--n", tower_n, "exponent for built-in inputs");
    cmd_tower->add_option("--format", tower_format)->check(CLI::IsMember({"text", "json"}));

    std::string box_a, box_b;
    std::optional<long> box_p, box_n;
    bool box_compare = false;
    CLI::App* cmd_box = app.add_subcommand("boxprod", "box product of two Mackey functors");
    cmd_box->add_option("a", box_a, "first factor")->required();
    cmd_box->add_option("b", box_b, "second factor")->required();
    cmd_box->add_option("--p", box_p, "prime for built-in inputs");
    cmd_box->add_option("--n", box_n, "exponent for built-in inputs");
    cmd_box->add_flag("--compare-zero-slice", box_compare,
                      "report the canonical map to the zero slice of the first factor");

    std::string sdim_literal;
    std::optional<long> sdim_p, sdim_n;
    CLI::App* cmd_sdim = app.add_subcommand("sdim", "slice-connectivity bounds for a sphere");
    cmd_sdim->add_option("sphere", sdim_literal, "sphere literal")->required();
    cmd_sdim->add_option("--p", sdim_p, "prime")->required();
    cmd_sdim->add_option("--n", sdim_n, "exponent")->required();

    std::string chart_input, chart_format = "text";
    std::optional<long> chart_p, chart_n;
    CLI::App* cmd_chart = app.add_subcommand("chart", "slice-filtration chart");
    cmd_chart->add_option("input", chart_input, "JSON file or burnside|constant_Z|dual_Z")
        ->required();
    cmd_chart->add_option("--p", chart_p, "prime for built-in inputs");
    cmd_chart->add_option("--n", chart_n, "exponent for built-in inputs");
    cmd_chart->add_option("--format", chart_format)->check(CLI::IsMember({"text", "svg"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (app.got_subcommand(cmd_validate)) return run_validate(validate_path);
        if (app.got_subcommand(cmd_tower))
            return run_slice_tower(tower_input, tower_p, tower_n, tower_format);
        if (app.got_subcommand(cmd_box))
            return run_boxprod(box_a, box_b, box_p, box_n, box_compare);
        if (app.got_subcommand(cmd_sdim)) return run_sdim(sdim_literal, sdim_p, sdim_n);
        if (app.got_subcommand(cmd_chart))
            return run_chart(chart_input, chart_p, chart_n, chart_format);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
