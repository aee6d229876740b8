#include "pqm/instance_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pqm {

namespace {

constexpr int kFormatVersion = 1;

Json poset_to_json(const FinitePoset& p) {
    Json out;
    out["elements"] = p.elements();
    Json relations = Json::array();
    for (const auto& [a, b] : p.cover_pairs()) relations.push_back(Json::array({a, b}));
    out["relations"] = std::move(relations);
    return out;
}

Json diagram_body(const PersistencePoset& x) {
    Json out;
    out["T"] = x.stabilization();
    Json posets = Json::array();
    for (Nat i = 0; i <= x.stabilization(); ++i) posets.push_back(poset_to_json(x.poset_at(i)));
    out["posets"] = std::move(posets);
    Json steps = Json::array();
    for (Nat i = 0; i < x.stabilization(); ++i) {
        Json step = Json::object();
        const MonotoneMap& s = x.step_at(i);
        for (const auto& name : s.dom().elements()) step[name] = s.apply(name);
        steps.push_back(std::move(step));
    }
    out["steps"] = std::move(steps);
    return out;
}

const Json& expect(const Json& doc, const char* key) {
    if (!doc.contains(key))
        throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
    return doc.at(key);
}

FinitePoset poset_from_json(const Json& doc, const std::string& where) {
    try {
        std::vector<std::string> elements = expect(doc, "elements").get<std::vector<std::string>>();
        std::vector<std::pair<std::string, std::string>> relations;
        for (const auto& pair : expect(doc, "relations")) {
            if (!pair.is_array() || pair.size() != 2)
                throw Error(ErrorKind::ParseError, "relation entries must be [a, b] pairs");
            relations.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
        }
        return FinitePoset::from_relations(elements, relations);
    } catch (const Error& e) {
        throw Error(e.kind(), where + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, where + ": " + e.what());
    }
}

std::unordered_map<std::string, std::string> assignment_from_json(const Json& doc,
                                                                  const std::string& where) {
    if (!doc.is_object()) throw Error(ErrorKind::ParseError, where + ": assignment must be an object");
    std::unordered_map<std::string, std::string> out;
    for (const auto& [key, value] : doc.items()) {
        if (!value.is_string()) throw Error(ErrorKind::ParseError, where + ": image of '" + key + "' must be a string");
        out.emplace(key, value.get<std::string>());
    }
    return out;
}

PersistencePoset diagram_from_json(const Json& doc, const std::string& where) {
    const Json& posets_json = expect(doc, "posets");
    if (!posets_json.is_array() || posets_json.empty())
        throw Error(ErrorKind::ParseError, where + ": 'posets' must be a non-empty array");
    std::vector<FinitePoset> posets;
    for (std::size_t i = 0; i < posets_json.size(); ++i)
        posets.push_back(poset_from_json(posets_json[i], where + ".posets[" + std::to_string(i) + "]"));
    const Json& steps_json = expect(doc, "steps");
    std::vector<std::unordered_map<std::string, std::string>> steps;
    for (std::size_t i = 0; i < steps_json.size(); ++i)
        steps.push_back(assignment_from_json(steps_json[i], where + ".steps[" + std::to_string(i) + "]"));
    if (doc.contains("T")) {
        const Nat declared = nat_from_json(doc.at("T"));
        if (declared != static_cast<Nat>(posets.size()) - 1)
            throw Error(ErrorKind::ArityMismatch,
                        where + ": declared T=" + std::to_string(declared) + " but " +
                            std::to_string(posets.size()) + " posets given");
    }
    try {
        return PersistencePoset::create(std::move(posets), steps);
    } catch (const Error& e) {
        throw Error(e.kind(), where + ": " + e.what());
    }
}

MatrixFp matrix_from_json(const Json& doc, Nat p, Nat rows, Nat cols, const std::string& where) {
    if (!doc.is_array() || static_cast<Nat>(doc.size()) != rows)
        throw Error(ErrorKind::ParseError, where + ": expected " + std::to_string(rows) + " rows");
    MatrixFp m(p, rows, cols);
    for (Nat r = 0; r < rows; ++r) {
        const Json& row = doc[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Nat>(row.size()) != cols)
            throw Error(ErrorKind::ParseError, where + ": expected " + std::to_string(cols) + " columns");
        for (Nat c = 0; c < cols; ++c) m.set(r, c, row[static_cast<std::size_t>(c)].get<Nat>());
    }
    return m;
}

}  // namespace

const char* instance_kind_name(InstanceKind kind) {
    switch (kind) {
        case InstanceKind::PosetDiagram: return "poset-diagram";
        case InstanceKind::Map: return "map";
        case InstanceKind::Module: return "module";
        case InstanceKind::BarcodeFile: return "barcode";
    }
    return "unknown";
}

Json nat_to_json(Nat v) {
    if (is_inf(v)) return Json("inf");
    return Json(v);
}

Nat nat_from_json(const Json& v) {
    if (v.is_string()) {
        if (v.get<std::string>() == "inf") return kInf;
        throw Error(ErrorKind::ParseError, "expected a number or \"inf\", got '" + v.get<std::string>() + "'");
    }
    if (!v.is_number_integer()) throw Error(ErrorKind::ParseError, "expected an integer index");
    const Nat n = v.get<Nat>();
    if (n < 0) throw Error(ErrorKind::ParseError, "indices must be non-negative");
    return n;
}

Json emit_poset_diagram(const PersistencePoset& x) {
    Json out;
    out["version"] = kFormatVersion;
    out["kind"] = "poset-diagram";
    Json body = diagram_body(x);
    out["T"] = body["T"];
    out["posets"] = body["posets"];
    out["steps"] = body["steps"];
    return out;
}

Json emit_map(const PersistencePosetMap& f) {
    Json out;
    out["version"] = kFormatVersion;
    out["kind"] = "map";
    out["source"] = diagram_body(f.source());
    out["target"] = diagram_body(f.target());
    Json components = Json::array();
    for (Nat i = 0; i <= f.stabilization(); ++i) {
        Json comp = Json::object();
        const MonotoneMap& c = f.component_at(i);
        for (const auto& name : c.dom().elements()) comp[name] = c.apply(name);
        components.push_back(std::move(comp));
    }
    out["components"] = std::move(components);
    return out;
}

Json emit_module(const PersistenceModule& m) {
    Json out;
    out["version"] = kFormatVersion;
    out["kind"] = "module";
    out["p"] = m.p;
    out["T"] = m.stabilization();
    out["dims"] = m.dims;
    Json steps = Json::array();
    for (const auto& step : m.steps) steps.push_back(step.to_rows());
    out["steps"] = std::move(steps);
    return out;
}

Json emit_barcode(const Barcode& b) {
    Json out;
    out["version"] = kFormatVersion;
    out["kind"] = "barcode";
    out["T"] = b.stabilization;
    Json intervals = Json::array();
    for (const auto& bar : b.intervals)
        intervals.push_back(Json::array({bar.birth, nat_to_json(bar.death)}));
    out["intervals"] = std::move(intervals);
    return out;
}

ParsedInstance parse_instance_text(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
    if (!doc.is_object()) throw Error(ErrorKind::ParseError, "document must be a JSON object");
    expect(doc, "version");
    const std::string kind = expect(doc, "kind").get<std::string>();
    ParsedInstance out;
    if (kind == "poset-diagram") {
        out.kind = InstanceKind::PosetDiagram;
        out.diagram = diagram_from_json(doc, "poset-diagram");
    } else if (kind == "map") {
        out.kind = InstanceKind::Map;
        PersistencePoset source = diagram_from_json(expect(doc, "source"), "source");
        PersistencePoset target = diagram_from_json(expect(doc, "target"), "target");
        const Json& comps_json = expect(doc, "components");
        std::vector<std::unordered_map<std::string, std::string>> components;
        for (std::size_t i = 0; i < comps_json.size(); ++i)
            components.push_back(assignment_from_json(comps_json[i], "components[" + std::to_string(i) + "]"));
        try {
            out.map = PersistencePosetMap::create(std::move(source), std::move(target), components);
        } catch (const Error& e) {
            throw Error(e.kind(), std::string("map: ") + e.what());
        }
    } else if (kind == "module") {
        out.kind = InstanceKind::Module;
        const Nat p = nat_from_json(expect(doc, "p"));
        require_prime(p);
        std::vector<Nat> dims;
        for (const auto& d : expect(doc, "dims")) dims.push_back(nat_from_json(d));
        const Json& steps_json = expect(doc, "steps");
        std::vector<MatrixFp> steps;
        for (std::size_t i = 0; i + 1 < dims.size(); ++i) {
            if (i >= steps_json.size())
                throw Error(ErrorKind::ArityMismatch, "module: missing step matrix " + std::to_string(i));
            steps.push_back(matrix_from_json(steps_json[i], p, dims[i + 1], dims[i],
                                             "module.steps[" + std::to_string(i) + "]"));
        }
        if (steps_json.size() + 1 != dims.size())
            throw Error(ErrorKind::ArityMismatch, "module: steps/dims length mismatch");
        if (doc.contains("T")) {
            const Nat declared = nat_from_json(doc.at("T"));
            if (declared != static_cast<Nat>(dims.size()) - 1)
                throw Error(ErrorKind::ArityMismatch, "module: declared T does not match dims");
        }
        out.module = PersistenceModule::validate(p, std::move(dims), std::move(steps));
    } else if (kind == "barcode") {
        out.kind = InstanceKind::BarcodeFile;
        Barcode b;
        b.stabilization = nat_from_json(expect(doc, "T"));
        for (const auto& pair : expect(doc, "intervals")) {
            if (!pair.is_array() || pair.size() != 2)
                throw Error(ErrorKind::ParseError, "barcode intervals must be [b, d] pairs");
            Interval bar;
            bar.birth = nat_from_json(pair[0]);
            bar.death = nat_from_json(pair[1]);
            if (!is_inf(bar.death) && bar.death <= bar.birth)
                throw Error(ErrorKind::ValidationError, "interval death must exceed birth");
            if (!is_inf(bar.death) && bar.death > b.stabilization)
                throw Error(ErrorKind::ValidationError, "finite deaths must be <= T");
            b.intervals.push_back(bar);
        }
        std::sort(b.intervals.begin(), b.intervals.end());
        out.barcode = std::move(b);
    } else {
        throw Error(ErrorKind::ParseError, "unknown kind '" + kind + "'");
    }
    return out;
}

ParsedInstance parse_instance_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_instance_text(buffer.str());
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what());
    }
}

std::string dump_document(const Json& doc) { return doc.dump(2) + "\n"; }

void write_document(const Json& doc, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::IoError, "cannot write '" + path + "'");
    out << dump_document(doc);
}

Json ledger_to_json(const ReductionLedger& ledger) {
    Json out;
    out["side"] = ledger.side == Side::Lower ? "lower" : "upper";
    out["prime"] = ledger.prime;
    out["max_degree"] = ledger.max_degree;
    out["target_cardinality"] = ledger.target_cardinality;
    Json entries = Json::array();
    for (const auto& entry : ledger.entries) {
        Json e;
        e["point"] = entry.point;
        e["threshold"] = entry.threshold;
        e["fiber_sizes"] = entry.fiber_sizes;
        e["eps"] = nat_to_json(entry.eps);
        entries.push_back(std::move(e));
    }
    out["entries"] = std::move(entries);
    out["eps_max"] = nat_to_json(ledger.eps_max);
    out["sum2eps"] = nat_to_json(ledger.sum2eps);
    out["bound_main"] = nat_to_json(ledger.bound_main);
    out["bound_prior"] = nat_to_json(ledger.bound_prior);
    Json measured = Json::array();
    for (Nat d : ledger.measured) measured.push_back(nat_to_json(d));
    out["measured"] = std::move(measured);
    out["hypothesis_ok"] = ledger.hypothesis_ok;
    return out;
}

Json verdict_report_to_json(const VerdictReport& report) {
    Json out;
    out["ledger"] = ledger_to_json(report.ledger);
    out["cylinder_ok"] = report.cylinder_ok;
    out["steps_checked"] = report.steps_checked;
    if (report.steps_checked) {
        Json steps = Json::array();
        for (const auto& check : report.steps) {
            Json s;
            s["point"] = check.point;
            s["eps"] = nat_to_json(check.eps);
            Json distances = Json::array();
            for (Nat d : check.distances) distances.push_back(nat_to_json(d));
            s["distances"] = std::move(distances);
            s["ok"] = check.ok;
            steps.push_back(std::move(s));
        }
        out["steps"] = std::move(steps);
    }
    out["verdict"] = verdict_name(report.verdict);
    return out;
}

Json make_report(const std::string& command, const Json& configuration, const Json& results,
                 const std::optional<std::string>& verdict, double total_ms) {
    Json out;
    out["version"] = kFormatVersion;
    out["command"] = command;
    out["configuration"] = configuration;
    out["results"] = results;
    if (verdict) out["verdict"] = *verdict;
    else out["verdict"] = nullptr;
    out["timing"] = Json{{"total_ms", total_ms}};
    return out;
}

}  // namespace pqm
