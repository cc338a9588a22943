#ifndef INFRANIL_IO_HPP
#define INFRANIL_IO_HPP

#include <json.hpp>
#include <string>

#include "infranil/hper.hpp"
#include "infranil/map_data.hpp"

namespace infranil {

struct Options {
    long maxK = 40;           // sequence length for certification
    unsigned precision = 32;  // enclosure precision exponent
    bool trace = false;       // include the full bound derivation text
};

struct InputDocument {
    std::string name;
    MapData map;
    Options options;
};

// Parses and validates the canonical JSON input document.  Structural
// problems (malformed rationals, non-square matrices, holonomy not closed,
// bracket antisymmetry conflicts) throw ParseError with a position.
InputDocument parse_input(const std::string& text);

// Canonical rendering; parse(render(parse(x))) == parse(x).
nlohmann::ordered_json render_input(const InputDocument& doc);

enum class Command { Classify, Nielsen, Zeta, Hper, Report };
Command parse_command(const std::string& name);

struct ReportDocument {
    nlohmann::ordered_json machine;

    bool has_error() const { return machine.contains("error"); }
    int exit_code() const;
    // Human-readable rendering generated from the same values as the
    // machine document.
    std::string human() const;
};

// Executes the requested pipeline stage(s).  Domain and certification
// errors surface as an error object inside the report (and a nonzero exit
// code), not as exceptions.
ReportDocument run(const InputDocument& doc, Command command);

// CSV summary line for batch mode.
std::string csv_header();
std::string csv_row(const ReportDocument& report);

}  // namespace infranil

#endif
