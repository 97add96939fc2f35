// reflect3: classify, compose and decompose rigid motions of 3-space.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "reflect3/cli.hpp"

namespace {

using reflect3::cli::Json;

Json load(const std::string& path) {
    if (path.empty() || path == "-")
        return reflect3::cli::read_json(std::cin);
    std::ifstream in(path);
    if (!in)
        throw reflect3::cli::InputError("cannot open " + path);
    return reflect3::cli::read_json(in);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"reflect3: rigid motions of 3-space as sequences of plane reflections"};
    app.footer(reflect3::cli::schema_help());
    app.require_subcommand(1);

    double tol_len = 1e-9;
    app.add_option("--tol", tol_len, "length tolerance for coincidence tests (default 1e-9)")
        ->check(CLI::PositiveNumber);

    std::string input;
    std::string src, dst;
    std::string start;
    long long count = 12;
    std::string format = "csv";

    auto* classify = app.add_subcommand("classify", "canonical form of a motion (JSON on stdout)");
    classify->add_option("--input", input, "motion document (default stdin)");

    auto* compose = app.add_subcommand("compose", "affine form {linear, translation} of a motion");
    compose->add_option("--input", input, "motion document (default stdin)");

    auto* triples = app.add_subcommand("triples", "three-mirror decomposition sending one triple to another");
    triples->add_option("--src", src, "source triple document")->required();
    triples->add_option("--dst", dst, "target triple document")->required();

    auto* iterate = app.add_subcommand("iterate", "orbit x0, m(x0), m^2(x0), ...");
    iterate->add_option("--input", input, "motion document (default stdin)");
    iterate->add_option("--start", start, "start point \"x,y,z\"")->required();
    iterate->add_option("--count", count, "number of applications (default 12)");
    iterate->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* example = app.add_subcommand("example", "full report for the worked f, g, h example");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : reflect3::cli::kInputError;
    }

    try {
        const reflect3::Toleranced tol(tol_len, 1e-9);
        if (classify->parsed())
            reflect3::cli::cmd_classify(load(input), tol, std::cout);
        else if (compose->parsed())
            reflect3::cli::cmd_compose(load(input), std::cout);
        else if (triples->parsed())
            reflect3::cli::cmd_triples(load(src), load(dst), tol, std::cout);
        else if (iterate->parsed())
            reflect3::cli::cmd_iterate(load(input), start, count, format, std::cout);
        else if (example->parsed())
            reflect3::cli::cmd_example(tol, std::cout);
    } catch (const reflect3::cli::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return reflect3::cli::kInputError;
    } catch (const reflect3::GeometryError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return reflect3::cli::exit_code_for(e);
    }
    return reflect3::cli::kSuccess;
}
