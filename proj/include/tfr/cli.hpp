#pragma once

#include "tfr/lattice.hpp"

#include <string>
#include <vector>

#include "json.hpp"

namespace tfr {

// Parsed input file: ambient dimension, named maximal cones, optional
// per-cone monoid generators (absent = normal complex), field and box.
struct FanDocument {
    size_t dim = 0;
    FieldSpec field = FieldSpec::rationals();
    long box = 3;
    std::vector<std::string> names;              // maximal cones, file order
    std::vector<IMat> generators;                // parallel to names
    std::map<std::string, IMat> monoid_generators;

    Fan fan = Fan::empty(0);
    MonoidalComplex complex;
    std::vector<size_t> max_index;               // fan index per name

    std::string name_of(size_t fan_index) const;  // name or canonical key
};

// Throws ParseError (with line number) or ValidationError (naming the
// offending cones).
FanDocument parse_fan_document(const std::string& text);

struct CliOptions {
    std::optional<FieldSpec> field;    // overrides the document
    std::optional<long> box;
    unsigned long long budget = 1u << 22;
    std::vector<std::string> split;    // cone names of the first subfan (mv-check)
};

// exit_status: 0 decided, 2 inconclusive (budget or truncation), 1 error.
struct Report {
    int exit_status = 0;
    std::string text;
    nlohmann::json data;
};

// cmd ∈ {validate, fvector, hilbert, cohomology, cm, gorenstein, shell,
// euler, mv-check, grading}.
Report run_command(const std::string& cmd, const FanDocument& doc,
                   const CliOptions& opts);

}  // namespace tfr
