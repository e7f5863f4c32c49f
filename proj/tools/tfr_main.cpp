#include "tfr/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

int main(int argc, char** argv) {
    CLI::App app{"toric face ring toolbox"};
    std::string command, path, field_arg, split_arg;
    long box = -1;
    unsigned long long budget = 1u << 22;
    bool as_json = false;

    app.add_option("command", command,
                   "validate|fvector|hilbert|cohomology|cm|gorenstein|shell|euler|"
                   "mv-check|grading")
        ->required();
    app.add_option("input", path, "fan document file")->required();
    app.add_option("--field", field_arg, "q or fp:<p> (overrides the document)");
    app.add_option("--box", box, "box radius (overrides the document)");
    app.add_option("--budget", budget, "search node budget");
    app.add_option("--split", split_arg, "comma-separated cone names (mv-check)");
    app.add_flag("--json", as_json, "machine-readable output");
    CLI11_PARSE(app, argc, argv);

    try {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "error: cannot open " << path << "\n";
            return 1;
        }
        std::stringstream buf;
        buf << in.rdbuf();

        tfr::FanDocument doc = tfr::parse_fan_document(buf.str());
        tfr::CliOptions opts;
        if (!field_arg.empty()) {
            if (field_arg == "q")
                opts.field = tfr::FieldSpec::rationals();
            else if (field_arg.rfind("fp:", 0) == 0)
                opts.field = tfr::FieldSpec::prime(tfr::Int(field_arg.substr(3)));
            else {
                std::cerr << "error: --field must be q or fp:<p>\n";
                return 1;
            }
        }
        if (box >= 0) opts.box = box;
        opts.budget = budget;
        if (!split_arg.empty()) {
            std::stringstream ss(split_arg);
            std::string name;
            while (std::getline(ss, name, ',')) opts.split.push_back(name);
        }

        tfr::Report rep = tfr::run_command(command, doc, opts);
        if (as_json)
            std::cout << rep.data.dump(2) << "\n";
        else
            std::cout << rep.text;
        return rep.exit_status;
    } catch (const tfr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
