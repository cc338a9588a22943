#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "infranil/io.hpp"

namespace fs = std::filesystem;
using namespace infranil;

namespace {

std::string read_all(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string read_input_text(const std::string& path) {
    if (path == "-") return read_all(std::cin);
    std::ifstream f(path);
    if (!f) throw ParseError("UnreadableInput", "cannot open input file " + path);
    return read_all(f);
}

void apply_flag_overrides(InputDocument& doc, long max_k, long precision, bool trace) {
    if (max_k > 0) doc.options.maxK = max_k;
    if (precision > 0) doc.options.precision = static_cast<unsigned>(precision);
    doc.options.trace = trace;
}

int emit(const ReportDocument& rep, bool json_only) {
    if (json_only) {
        std::cout << rep.machine.dump(2) << "\n";
    } else {
        std::cout << rep.human();
    }
    if (rep.has_error())
        std::cerr << "error [" << rep.machine["error"]["tag"].get<std::string>()
                  << "]: " << rep.machine["error"]["message"].get<std::string>() << "\n";
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Nielsen/Lefschetz invariants, dynamical zeta functions, and homotopy "
        "minimal period certificates for affine self-maps of infra-nilmanifolds"};
    app.set_help_all_flag("--help-all");

    std::string command;
    std::string input = "-";
    std::string batch_dir;
    std::string out_dir = ".";
    long max_k = 0;
    long precision = 0;
    bool json_only = false;
    bool trace = false;

    app.add_option("command", command, "classify | nielsen | zeta | hper | report")->required();
    app.add_option("input", input, "input document (path or - for stdin)");
    app.add_option("--batch", batch_dir, "process every .json file in a directory");
    app.add_option("--out", out_dir, "output directory for batch reports");
    app.add_option("--max-k", max_k, "sequence length for certification (default 40)");
    app.add_option("--precision", precision, "enclosure precision exponent (default 32)");
    app.add_flag("--json", json_only, "machine-readable report only");
    app.add_flag("--trace", trace, "include the full bound derivation in the report");

    CLI11_PARSE(app, argc, argv);

    try {
        const Command cmd = parse_command(command);

        if (batch_dir.empty()) {
            InputDocument doc;
            try {
                doc = parse_input(read_input_text(input));
            } catch (const Error& e) {
                nlohmann::ordered_json err{{"error",
                                            {{"exitCode", static_cast<int>(e.error_class())},
                                             {"tag", e.tag()},
                                             {"message", e.what()}}}};
                std::cout << err.dump(2) << "\n";
                std::cerr << "error [" << e.tag() << "]: " << e.what() << "\n";
                return static_cast<int>(e.error_class());
            }
            apply_flag_overrides(doc, max_k, precision, trace);
            return emit(run(doc, cmd), json_only);
        }

        // Batch mode: one report per input plus a CSV summary.
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(batch_dir))
            if (entry.is_regular_file() && entry.path().extension() == ".json")
                files.push_back(entry.path());
        std::sort(files.begin(), files.end());
        if (files.empty()) {
            std::cerr << "error: no .json inputs in " << batch_dir << "\n";
            return 2;
        }
        fs::create_directories(out_dir);
        std::ofstream csv(fs::path(out_dir) / "summary.csv");
        csv << csv_header() << "\n";
        std::cout << csv_header() << "\n";
        int exit_code = 0;
        for (const auto& path : files) {
            ReportDocument rep;
            try {
                InputDocument doc = parse_input(read_input_text(path.string()));
                if (doc.name == "unnamed") doc.name = path.stem().string();
                apply_flag_overrides(doc, max_k, precision, trace);
                rep = run(doc, cmd);
            } catch (const Error& e) {
                rep.machine["name"] = path.stem().string();
                rep.machine["error"] = {{"exitCode", static_cast<int>(e.error_class())},
                                        {"tag", e.tag()},
                                        {"message", e.what()}};
            }
            const fs::path stem = fs::path(out_dir) / path.stem();
            std::ofstream(stem.string() + ".report.json") << rep.machine.dump(2) << "\n";
            std::ofstream(stem.string() + ".report.txt") << rep.human();
            const std::string row = csv_row(rep);
            csv << row << "\n";
            std::cout << row << "\n";
            if (rep.exit_code() != 0 && exit_code == 0) exit_code = rep.exit_code();
        }
        return exit_code;
    } catch (const Error& e) {
        std::cerr << "error [" << e.tag() << "]: " << e.what() << "\n";
        return static_cast<int>(e.error_class());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
