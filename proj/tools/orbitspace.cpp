// Command-line front end: enumerate coherent vertex collections of a
// pp-divisor problem file, derive toric stratifications, or just validate
// the input. Exit codes: 0 success, 2 validation failure, 3 unsupported
// input, 4 internal error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "orbitspace/orbitspace.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitInternal = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw orbitspace::Error(orbitspace::ErrorCode::invalid_schema, "cannot read file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw orbitspace::Error(orbitspace::ErrorCode::invalid_schema, "cannot write file '" + out_path + "'");
    out << text;
}

int exit_code_for(const orbitspace::Error& e) {
    switch (e.code()) {
        case orbitspace::ErrorCode::unsupported_fan: return kExitUnsupported;
        case orbitspace::ErrorCode::internal: return kExitInternal;
        default: return kExitValidation;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbitspace: classify complete orbit spaces of a pp-divisor"};
    app.require_subcommand(1);

    std::string file;
    std::string out_path;
    bool classify_flag = false;
    bool json_flag = false;

    CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "enumerate all coherent vertex collections");
    cmd_enumerate->add_option("file", file, "problem description file")->required();
    cmd_enumerate->add_flag("--classify", classify_flag, "attach orbit-space classification to each collection");
    cmd_enumerate->add_flag("--json", json_flag, "machine-readable report");
    cmd_enumerate->add_option("--out", out_path, "write the report to a file instead of stdout");

    CLI::App* cmd_strata = app.add_subcommand("strata", "derive the stratification from the declared fan");
    cmd_strata->add_option("file", file, "problem description file")->required();
    cmd_strata->add_flag("--json", json_flag, "machine-readable report");

    CLI::App* cmd_validate = app.add_subcommand("validate", "parse and validate a problem description");
    cmd_validate->add_option("file", file, "problem description file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const orbitspace::ProblemDescription desc = orbitspace::parse_problem(read_file(file));
        if (cmd_enumerate->parsed()) {
            const orbitspace::Report rep = orbitspace::run_enumerate(desc, classify_flag);
            write_output(json_flag ? orbitspace::render_json(rep) : orbitspace::render_text(rep), out_path);
        } else if (cmd_strata->parsed()) {
            const orbitspace::Report rep = orbitspace::run_strata(desc);
            write_output(json_flag ? orbitspace::render_json(rep) : orbitspace::render_text(rep), out_path);
        } else if (cmd_validate->parsed()) {
            orbitspace::build_problem(desc);
            std::cout << "OK: rank " << desc.rank << ", " << desc.coefficients.size()
                      << " coefficient(s)\n";
        }
    } catch (const orbitspace::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
