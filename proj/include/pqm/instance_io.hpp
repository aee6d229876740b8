#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "pqm/barcode.hpp"
#include "pqm/common.hpp"
#include "pqm/homology.hpp"
#include "pqm/persistence.hpp"
#include "pqm/reduction.hpp"

namespace pqm {

using Json = nlohmann::ordered_json;

enum class InstanceKind { PosetDiagram, Map, Module, BarcodeFile };

const char* instance_kind_name(InstanceKind kind);

// One parsed document; exactly the member matching `kind` is set.
struct ParsedInstance {
    InstanceKind kind;
    std::optional<PersistencePoset> diagram;
    std::optional<PersistencePosetMap> map;
    std::optional<PersistenceModule> module;
    std::optional<Barcode> barcode;
};

// Serialization of the documented JSON schemas. "inf" encodes the infinite
// index; relation lists are generating pairs (readers close them).
Json emit_poset_diagram(const PersistencePoset& x);
Json emit_map(const PersistencePosetMap& f);
Json emit_module(const PersistenceModule& m);
Json emit_barcode(const Barcode& b);

ParsedInstance parse_instance_text(const std::string& text);
ParsedInstance parse_instance_file(const std::string& path);

std::string dump_document(const Json& doc);  // stable two-space indent + newline
void write_document(const Json& doc, const std::string& path);

Json nat_to_json(Nat v);        // number, or "inf"
Nat nat_from_json(const Json& v);

Json ledger_to_json(const ReductionLedger& ledger);
Json verdict_report_to_json(const VerdictReport& report);

// Machine-readable report envelope: command echo, configuration, results,
// verdict and timing. Equal inputs give equal reports apart from "timing".
Json make_report(const std::string& command, const Json& configuration, const Json& results,
                 const std::optional<std::string>& verdict, double total_ms);

}  // namespace pqm
