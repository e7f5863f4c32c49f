#include "tfr/cli.hpp"

#include "tfr/cohomology.hpp"
#include "tfr/gorenstein.hpp"
#include "tfr/ring.hpp"
#include "tfr/shelling.hpp"

#include <sstream>

namespace tfr {

namespace {

using nlohmann::json;

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    std::string t;
    while (in >> t) {
        if (t[0] == '#') break;
        out.push_back(t);
    }
    return out;
}

Int parse_int(const std::string& t, size_t lineno) {
    try {
        size_t pos = 0;
        // Int has a string constructor; validate manually for location info
        for (size_t i = 0; i < t.size(); ++i)
            if (!(std::isdigit(static_cast<unsigned char>(t[i])) || (i == 0 && t[i] == '-')))
                throw std::invalid_argument(t);
        (void)pos;
        return Int(t);
    } catch (...) {
        throw Error("ParseError", "line " + std::to_string(lineno) + ": bad integer '" + t + "'");
    }
}

FieldSpec parse_field(const std::string& t, size_t lineno) {
    if (t == "q") return FieldSpec::rationals();
    if (t.rfind("fp:", 0) == 0) return FieldSpec::prime(parse_int(t.substr(3), lineno));
    throw Error("ParseError", "line " + std::to_string(lineno) + ": field must be q or fp:<p>");
}

std::string vec_str(const IVec& a) { return to_string(a); }

json vec_json(const IVec& a) {
    json j = json::array();
    for (const Int& c : a) j.push_back(c.str());
    return j;
}

}  // namespace

std::string FanDocument::name_of(size_t fan_index) const {
    for (size_t k = 0; k < max_index.size(); ++k)
        if (max_index[k] == fan_index) return names[k];
    return fan.cone(fan_index).key();
}

FanDocument parse_fan_document(const std::string& text) {
    FanDocument doc;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    std::string section;  // cone/monoid name awaiting rows
    bool section_is_monoid = false;
    IMat rows;
    bool have_dim = false;

    auto flush_section = [&]() {
        if (section.empty()) return;
        if (section_is_monoid)
            doc.monoid_generators[section] = rows;
        else {
            doc.names.push_back(section);
            doc.generators.push_back(rows);
        }
        section.clear();
        rows.clear();
    };

    while (std::getline(in, line)) {
        ++lineno;
        auto ts = tokens(line);
        if (ts.empty()) continue;
        if (ts[0] == "dim") {
            if (ts.size() != 2)
                throw Error("ParseError", "line " + std::to_string(lineno) + ": dim <d>");
            doc.dim = size_t(parse_int(ts[1], lineno).convert_to<long>());
            have_dim = true;
        } else if (ts[0] == "field") {
            if (ts.size() != 2)
                throw Error("ParseError", "line " + std::to_string(lineno) + ": field <q|fp:p>");
            doc.field = parse_field(ts[1], lineno);
        } else if (ts[0] == "box") {
            if (ts.size() != 2)
                throw Error("ParseError", "line " + std::to_string(lineno) + ": box <r>");
            doc.box = parse_int(ts[1], lineno).convert_to<long>();
        } else if (ts[0] == "cone" || ts[0] == "monoid") {
            if (ts.size() != 2)
                throw Error("ParseError",
                            "line " + std::to_string(lineno) + ": " + ts[0] + " <name>");
            flush_section();
            section = ts[1];
            section_is_monoid = (ts[0] == "monoid");
        } else {
            if (section.empty())
                throw Error("ParseError",
                            "line " + std::to_string(lineno) + ": unexpected '" + ts[0] + "'");
            IVec row;
            for (const auto& t : ts) row.push_back(parse_int(t, lineno));
            if (have_dim && row.size() != doc.dim)
                throw Error("ParseError", "line " + std::to_string(lineno) + ": expected " +
                                              std::to_string(doc.dim) + " coordinates");
            rows.push_back(std::move(row));
        }
    }
    flush_section();
    if (!have_dim) throw Error("ParseError", "missing 'dim' directive");
    for (const auto& [name, gens] : doc.monoid_generators) {
        bool known = false;
        for (const auto& n : doc.names) known = known || (n == name);
        if (!known) throw Error("ParseError", "monoid '" + name + "' names no cone");
    }

    // build cones, then check the pairwise face condition with names
    std::vector<Cone> cones;
    for (size_t i = 0; i < doc.names.size(); ++i) {
        try {
            cones.push_back(Cone::from_generators(doc.generators[i], doc.dim));
        } catch (const Error& e) {
            throw Error("ValidationError", "cone '" + doc.names[i] + "': " + e.what());
        }
    }
    for (size_t i = 0; i < cones.size(); ++i)
        for (size_t j = i + 1; j < cones.size(); ++j) {
            Cone meet = cones[i].intersect(cones[j]);
            if (!meet.is_face_of(cones[i]) || !meet.is_face_of(cones[j]))
                throw Error("ValidationError", "cones '" + doc.names[i] + "' and '" +
                                                   doc.names[j] +
                                                   "' do not meet in a common face");
        }
    doc.fan = cones.empty() ? Fan::empty(doc.dim) : Fan::from_maximal(cones, doc.dim);
    for (const auto& c : cones) doc.max_index.push_back(doc.fan.require_index(c));

    doc.complex = normal_complex(doc.fan);
    for (size_t i = 0; i < doc.names.size(); ++i) {
        auto it = doc.monoid_generators.find(doc.names[i]);
        if (it == doc.monoid_generators.end()) continue;
        AffineMonoid m = AffineMonoid::generated_by(it->second, doc.dim);
        if (!(m.cone == cones[i]))
            throw Error("ValidationError",
                        "monoid '" + doc.names[i] + "' does not generate its cone");
        doc.complex.monoids[doc.max_index[i]] = std::move(m);
    }
    return doc;
}

namespace {

struct Ctx {
    const FanDocument& doc;
    FieldSpec field;
    long box;
    unsigned long long budget;
};

void emit(std::ostringstream& out, json& j, const std::string& key,
          const std::string& value) {
    out << key << ": " << value << "\n";
    j[key] = value;
}

Report cmd_validate(const Ctx& c) {
    Report r;
    std::ostringstream out;
    out << "fan with " << c.doc.fan.size() << " cones, dimension " << c.doc.fan.dim()
        << ", " << (c.doc.fan.pure() ? "pure" : "not pure") << "\n";
    r.data["cones"] = c.doc.fan.size();
    r.data["dim"] = c.doc.fan.dim();
    r.data["pure"] = c.doc.fan.pure();
    auto rep = validate_monoidal_complex(c.doc.complex, c.box);
    out << "monoidal complex: " << (rep.valid ? "valid" : "invalid") << " ("
        << (rep.exact ? "exact" : "verified to radius " + std::to_string(rep.box_radius))
        << ")\n";
    for (const auto& viol : rep.violations) out << "  violation: " << viol << "\n";
    r.data["complex_valid"] = rep.valid;
    r.data["complex_exact"] = rep.exact;
    r.data["violations"] = rep.violations;
    if (!rep.valid) r.exit_status = 1;
    else if (!rep.exact) r.exit_status = 2;
    r.text = out.str();
    return r;
}

Report cmd_fvector(const Ctx& c) {
    Report r;
    std::vector<size_t> f(c.doc.fan.dim() + 1, 0);
    for (const auto& cone : c.doc.fan.cones()) ++f[cone.dim()];
    std::ostringstream out;
    out << "f-vector:";
    r.data["f"] = json::array();
    for (size_t x : f) {
        out << " " << x;
        r.data["f"].push_back(x);
    }
    out << "\n";
    r.text = out.str();
    return r;
}

Report cmd_hilbert(const Ctx& c) {
    Report r;
    HilbertTable t = hilbert_table(c.doc.complex, c.box);
    std::ostringstream out;
    size_t total = 0;
    r.data["support"] = json::array();
    for (const auto& [a, d] : t.entries)
        if (d) {
            ++total;
            r.data["support"].push_back(vec_json(a));
        }
    out << "support points in box " << c.box << ": " << total << "\n";
    for (const auto& [a, d] : t.entries)
        if (d) out << "  " << vec_str(a) << "\n";
    r.data["box"] = c.box;
    r.data["count"] = total;
    r.text = out.str();
    return r;
}

Report cmd_cohomology(const Ctx& c) {
    Report r;
    CohomologyTable t = hochster_table(c.doc.fan, c.field);
    std::ostringstream out;
    out << "depth " << t.depth << ", dim " << t.fan_dim << ", "
        << (t.cm ? "Cohen-Macaulay" : "not Cohen-Macaulay") << "\n";
    r.data["depth"] = t.depth;
    r.data["dim"] = t.fan_dim;
    r.data["cm"] = t.cm;
    r.data["rows"] = json::array();
    for (size_t i = 0; i < t.entries.size(); ++i) {
        bool nonzero = false;
        for (size_t x : t.entries[i]) nonzero = nonzero || x;
        if (!nonzero) continue;
        out << "  " << c.doc.name_of(i) << ":";
        json row;
        row["cone"] = c.doc.name_of(i);
        row["dims"] = t.entries[i];
        for (size_t x : t.entries[i]) out << " " << x;
        out << "\n";
        r.data["rows"].push_back(row);
    }
    r.text = out.str();
    return r;
}

Report cmd_cm(const Ctx& c) {
    Report r;
    CohomologyTable t = hochster_table(c.doc.fan, c.field);
    std::ostringstream out;
    if (t.cm) {
        out << "Cohen-Macaulay: depth " << t.depth << " = dim " << t.fan_dim << "\n";
    } else {
        // witness: a degree carrying the lowest nonvanishing cohomology
        IVec witness;
        for (size_t i = 0; i < t.entries.size(); ++i)
            if (t.entries[i][t.depth]) {
                const Cone& cone = c.doc.fan.cone(i);
                witness = cone.is_zero() ? IVec(c.doc.fan.ambient_dim(), Int(0))
                                         : negated(cone.relint_point());
                break;
            }
        out << "not Cohen-Macaulay: depth " << t.depth << " < dim " << t.fan_dim
            << "; witness H^" << t.depth << "_m at degree " << vec_str(witness) << "\n";
        r.data["witness_degree"] = vec_json(witness);
    }
    r.data["cm"] = t.cm;
    r.data["depth"] = t.depth;
    r.data["dim"] = t.fan_dim;
    r.text = out.str();
    return r;
}

Report cmd_gorenstein(const Ctx& c) {
    Report r;
    GorensteinVerdict v = gorenstein_decide(c.doc.fan, c.field, c.box);
    std::ostringstream out;
    out << (v.gorenstein ? "Gorenstein" : "not Gorenstein");
    if (v.sigma) out << "; sigma = " << vec_str(*v.sigma);
    if (v.euler_fan) out << "; Euler fan";
    if (!v.exact) out << " (verified to radius " << v.box_radius << ")";
    out << "\n" << v.detail << "\n";
    r.data["gorenstein"] = v.gorenstein;
    r.data["cm"] = v.cm;
    r.data["euler_fan"] = v.euler_fan;
    r.data["exact"] = v.exact;
    r.data["box"] = v.box_radius;
    if (v.sigma) r.data["sigma"] = vec_json(*v.sigma);
    if (!v.exact) r.exit_status = v.gorenstein ? 0 : 2;
    r.text = out.str();
    return r;
}

Report cmd_shell(const Ctx& c) {
    Report r;
    ShellingResult res = find_shelling(c.doc.fan, c.budget);
    std::ostringstream out;
    switch (res.outcome) {
        case ShellingOutcome::shellable: {
            out << "shellable:";
            r.data["order"] = json::array();
            for (size_t i : res.certificate->order) {
                out << " " << c.doc.name_of(i);
                r.data["order"].push_back(c.doc.name_of(i));
            }
            out << "\n";
            r.data["shellable"] = true;
            break;
        }
        case ShellingOutcome::not_shellable:
            out << "not shellable (exhaustive)\n";
            r.data["shellable"] = false;
            break;
        case ShellingOutcome::inconclusive:
            out << "inconclusive (budget " << c.budget << " exhausted)\n";
            r.exit_status = 2;
            break;
    }
    r.data["nodes"] = res.nodes;
    r.text = out.str();
    return r;
}

Report cmd_euler(const Ctx& c) {
    Report r;
    std::ostringstream out;
    const bool euler = is_euler_fan(c.doc.fan);
    out << (euler ? "Euler fan" : "not an Euler fan") << "\n";
    r.data["euler_fan"] = euler;
    r.data["chi"] = json::array();
    for (size_t i = 0; i < c.doc.fan.size(); ++i) {
        const Int chi = euler_char(c.doc.fan, i);
        out << "  " << c.doc.name_of(i) << ": " << chi.str() << "\n";
        json row;
        row["cone"] = c.doc.name_of(i);
        row["chi"] = chi.str();
        r.data["chi"].push_back(row);
    }
    r.text = out.str();
    return r;
}

Report cmd_mv_check(const Ctx& c, const std::vector<std::string>& split) {
    Report r;
    if (split.empty())
        throw Error("BadArguments", "mv-check needs --split with cone names");
    std::vector<Cone> part1, part2;
    for (size_t k = 0; k < c.doc.names.size(); ++k) {
        bool in1 = false;
        for (const auto& n : split) in1 = in1 || (n == c.doc.names[k]);
        (in1 ? part1 : part2).push_back(c.doc.fan.cone(c.doc.max_index[k]));
    }
    if (part1.size() != split.size())
        throw Error("BadArguments", "--split names an unknown cone");
    Fan f1 = part1.empty() ? Fan::empty(c.doc.dim) : Fan::from_maximal(part1, c.doc.dim);
    Fan f2 = part2.empty() ? Fan::empty(c.doc.dim) : Fan::from_maximal(part2, c.doc.dim);
    auto rep = mayer_vietoris_check(c.doc.fan, f1, f2, c.box, c.field);
    std::ostringstream out;
    out << (rep.ok ? "alternating-sum identity holds" : "identity FAILS") << " (box "
        << c.box << ")\n" << rep.message << "\n";
    r.data["ok"] = rep.ok;
    r.data["box"] = c.box;
    r.data["message"] = rep.message;
    if (rep.first_failure) r.data["first_failure"] = vec_json(*rep.first_failure);
    if (!rep.ok) r.exit_status = 1;
    r.text = out.str();
    return r;
}

Report cmd_grading(const Ctx& c) {
    Report r;
    auto g = find_admissible_grading(c.doc.complex);
    std::ostringstream out;
    if (!g) {
        out << "no admissible grading\n";
        r.data["admissible"] = false;
    } else {
        out << "admissible grading:\n";
        r.data["admissible"] = true;
        r.data["functionals"] = json::array();
        for (size_t k = 0; k < g->max_cones.size(); ++k) {
            out << "  " << c.doc.name_of(g->max_cones[k]) << ": " << vec_str(g->w[k])
                << "\n";
            json row;
            row["cone"] = c.doc.name_of(g->max_cones[k]);
            row["w"] = vec_json(g->w[k]);
            r.data["functionals"].push_back(row);
        }
    }
    r.text = out.str();
    return r;
}

}  // namespace

Report run_command(const std::string& cmd, const FanDocument& doc,
                   const CliOptions& opts) {
    Ctx c{doc, opts.field.value_or(doc.field), opts.box.value_or(doc.box), opts.budget};
    Report r;
    if (cmd == "validate") r = cmd_validate(c);
    else if (cmd == "fvector") r = cmd_fvector(c);
    else if (cmd == "hilbert") r = cmd_hilbert(c);
    else if (cmd == "cohomology") r = cmd_cohomology(c);
    else if (cmd == "cm") r = cmd_cm(c);
    else if (cmd == "gorenstein") r = cmd_gorenstein(c);
    else if (cmd == "shell") r = cmd_shell(c);
    else if (cmd == "euler") r = cmd_euler(c);
    else if (cmd == "mv-check") r = cmd_mv_check(c, opts.split);
    else if (cmd == "grading") r = cmd_grading(c);
    else throw Error("BadArguments", "unknown command '" + cmd + "'");
    r.data["command"] = cmd;
    r.data["field"] = c.field.str();
    return r;
}

}  // namespace tfr
