// pqm: persistence posets, order-complex homology, and mapping-cylinder
// reduction from the command line. Exit codes: 0 success/pass, 1 verdict
// fail, 2 hypothesis failed, 3 input error.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "pqm/barcode.hpp"
#include "pqm/generators.hpp"
#include "pqm/instance_io.hpp"
#include "pqm/reduction.hpp"
#include "pqm/render.hpp"

namespace {

using pqm::Json;
using pqm::Nat;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitInput = 3;

struct CommonOpts {
    Nat prime = 2;
    Nat max_degree = 2;
    std::string side = "lower";
    std::string format = "text";
    std::uint64_t seed = 0;
    bool verify_steps = false;
};

pqm::Side side_of(const std::string& name) {
    if (name == "lower") return pqm::Side::Lower;
    if (name == "upper") return pqm::Side::Upper;
    throw pqm::Error(pqm::ErrorKind::InvalidArgument, "side must be lower or upper");
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_side = true) {
    cmd->add_option("--prime", opts.prime, "coefficient field modulus (prime)")->default_val(2);
    cmd->add_option("--max-degree", opts.max_degree, "largest homology degree")->default_val(2);
    if (with_side)
        cmd->add_option("--side", opts.side, "principal-set side: lower or upper")->default_val("lower");
    cmd->add_option("--format", opts.format, "output format: json or text")->default_val("text");
}

Json config_json(const CommonOpts& opts, bool with_side = true, bool with_seed = false) {
    Json out;
    out["prime"] = opts.prime;
    out["max_degree"] = opts.max_degree;
    if (with_side) out["side"] = opts.side;
    if (with_seed) out["seed"] = opts.seed;
    out["verify_steps"] = opts.verify_steps;
    out["format"] = opts.format;
    return out;
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void emit_report(const std::string& command, const CommonOpts& opts, const Json& results,
                 const std::optional<std::string>& verdict, const Timer& timer,
                 const std::string& text_summary, bool with_side = true, bool with_seed = false) {
    if (opts.format == "json") {
        std::cout << pqm::dump_document(pqm::make_report(
            command, config_json(opts, with_side, with_seed), results, verdict, timer.ms()));
    } else {
        std::cout << text_summary;
        if (verdict) std::cout << "verdict: " << *verdict << "\n";
    }
}

std::string diagram_summary(const pqm::PersistencePoset& x) {
    std::string out = "kind: poset-diagram\nT: " + std::to_string(x.stabilization()) + "\nsizes:";
    for (Nat i = 0; i <= x.stabilization(); ++i) out += " " + std::to_string(x.poset_at(i).size());
    out += "\nfiltration: " + std::string(x.is_filtration() ? "yes" : "no");
    out += "\nthreshold: " + pqm::nat_to_string(x.threshold());
    out += "\ncardinality: " + std::to_string(x.cardinality()) + "\n";
    return out;
}

Json diagram_results(const pqm::PersistencePoset& x) {
    Json out;
    out["T"] = x.stabilization();
    Json sizes = Json::array();
    for (Nat i = 0; i <= x.stabilization(); ++i) sizes.push_back(x.poset_at(i).size());
    out["sizes"] = std::move(sizes);
    out["filtration"] = x.is_filtration();
    out["threshold"] = pqm::nat_to_json(x.threshold());
    out["cardinality"] = x.cardinality();
    return out;
}

Json barcode_json(const pqm::Barcode& bc) {
    Json intervals = Json::array();
    for (const auto& bar : bc.intervals)
        intervals.push_back(Json::array({bar.birth, pqm::nat_to_json(bar.death)}));
    return intervals;
}

std::string barcode_text(const pqm::Barcode& bc) {
    std::string out = "[";
    for (std::size_t i = 0; i < bc.intervals.size(); ++i) {
        if (i) out += ", ";
        out += "[" + std::to_string(bc.intervals[i].birth) + "," +
               pqm::nat_to_string(bc.intervals[i].death) + ")";
    }
    return out + "]";
}

pqm::Barcode barcode_from_instance(const pqm::ParsedInstance& parsed, Nat degree, Nat prime) {
    switch (parsed.kind) {
        case pqm::InstanceKind::BarcodeFile:
            return *parsed.barcode;
        case pqm::InstanceKind::Module:
            return pqm::interval_decomposition(*parsed.module);
        case pqm::InstanceKind::PosetDiagram:
            return pqm::interval_decomposition(
                pqm::persistence_module_of(*parsed.diagram, degree, prime));
        default:
            throw pqm::Error(pqm::ErrorKind::ValidationError,
                             "map instances have no single barcode; pass a diagram, module or barcode");
    }
}

int run_check(const std::string& path, const CommonOpts& opts) {
    Timer timer;
    const pqm::ParsedInstance parsed = pqm::parse_instance_file(path);
    Json results;
    std::string text;
    results["kind"] = pqm::instance_kind_name(parsed.kind);
    switch (parsed.kind) {
        case pqm::InstanceKind::PosetDiagram:
            results.update(diagram_results(*parsed.diagram));
            text = diagram_summary(*parsed.diagram);
            break;
        case pqm::InstanceKind::Map:
            results["source"] = diagram_results(parsed.map->source());
            results["target"] = diagram_results(parsed.map->target());
            results["commutes"] = true;  // construction validated it
            text = "kind: map\nsource " + diagram_summary(parsed.map->source()) + "target " +
                   diagram_summary(parsed.map->target()) + "commutes: yes\n";
            break;
        case pqm::InstanceKind::Module:
            results["T"] = parsed.module->stabilization();
            results["p"] = parsed.module->p;
            results["dims"] = parsed.module->dims;
            text = "kind: module\nT: " + std::to_string(parsed.module->stabilization()) + "\n";
            break;
        case pqm::InstanceKind::BarcodeFile:
            results["T"] = parsed.barcode->stabilization;
            results["intervals"] = barcode_json(*parsed.barcode);
            text = "kind: barcode\nbars: " + barcode_text(*parsed.barcode) + "\n";
            break;
    }
    emit_report("check", opts, results, std::nullopt, timer, text, false);
    return kExitPass;
}

int run_homology(const std::string& path, const CommonOpts& opts) {
    Timer timer;
    const pqm::ParsedInstance parsed = pqm::parse_instance_file(path);
    if (parsed.kind != pqm::InstanceKind::PosetDiagram)
        throw pqm::Error(pqm::ErrorKind::ValidationError, "homology needs a poset-diagram instance");
    const auto modules = pqm::persistence_modules_upto(*parsed.diagram, opts.max_degree, opts.prime);
    Json results;
    std::string text;
    Json degrees = Json::array();
    for (Nat j = 0; j <= opts.max_degree; ++j) {
        const auto& m = modules[static_cast<std::size_t>(j)];
        Json entry;
        entry["degree"] = j;
        entry["dims"] = m.dims;
        degrees.push_back(std::move(entry));
        text += "H_" + std::to_string(j) + " dims:";
        for (Nat d : m.dims) text += " " + std::to_string(d);
        text += "\n";
    }
    results["degrees"] = std::move(degrees);
    emit_report("homology", opts, results, std::nullopt, timer, text, false);
    return kExitPass;
}

int run_barcode(const std::string& path, const CommonOpts& opts) {
    Timer timer;
    const pqm::ParsedInstance parsed = pqm::parse_instance_file(path);
    Json results;
    std::string text;
    if (parsed.kind == pqm::InstanceKind::PosetDiagram) {
        const auto modules = pqm::persistence_modules_upto(*parsed.diagram, opts.max_degree, opts.prime);
        Json degrees = Json::array();
        for (Nat j = 0; j <= opts.max_degree; ++j) {
            const pqm::Barcode bc = pqm::interval_decomposition(modules[static_cast<std::size_t>(j)]);
            Json entry;
            entry["degree"] = j;
            entry["intervals"] = barcode_json(bc);
            degrees.push_back(std::move(entry));
            text += "H_" + std::to_string(j) + ": " + barcode_text(bc) + "\n";
        }
        results["degrees"] = std::move(degrees);
    } else if (parsed.kind == pqm::InstanceKind::Module) {
        const pqm::Barcode bc = pqm::interval_decomposition(*parsed.module);
        results["intervals"] = barcode_json(bc);
        text = barcode_text(bc) + "\n";
    } else {
        throw pqm::Error(pqm::ErrorKind::ValidationError, "barcode needs a poset-diagram or module instance");
    }
    emit_report("barcode", opts, results, std::nullopt, timer, text, false);
    return kExitPass;
}

int run_distance(const std::string& path_a, const std::string& path_b, const CommonOpts& opts) {
    Timer timer;
    const pqm::ParsedInstance a = pqm::parse_instance_file(path_a);
    const pqm::ParsedInstance b = pqm::parse_instance_file(path_b);
    if (a.kind != b.kind)
        throw pqm::Error(pqm::ErrorKind::DomainMismatch, "distance needs two instances of the same kind");
    Json results;
    std::string text;
    if (a.kind == pqm::InstanceKind::PosetDiagram) {
        const auto ma = pqm::persistence_modules_upto(*a.diagram, opts.max_degree, opts.prime);
        const auto mb = pqm::persistence_modules_upto(*b.diagram, opts.max_degree, opts.prime);
        Json per_degree = Json::array();
        for (Nat j = 0; j <= opts.max_degree; ++j) {
            const Nat d = pqm::min_interleaving_eps(ma[static_cast<std::size_t>(j)],
                                                    mb[static_cast<std::size_t>(j)]);
            per_degree.push_back(pqm::nat_to_json(d));
            text += "d_I degree " + std::to_string(j) + ": " + pqm::nat_to_string(d) + "\n";
        }
        results["per_degree"] = std::move(per_degree);
    } else if (a.kind == pqm::InstanceKind::Module) {
        const Nat d = pqm::min_interleaving_eps(*a.module, *b.module);
        results["distance"] = pqm::nat_to_json(d);
        text = "distance: " + pqm::nat_to_string(d) + "\n";
    } else if (a.kind == pqm::InstanceKind::BarcodeFile) {
        pqm::Barcode ba = *a.barcode, bb = *b.barcode;
        const Nat big_t = std::max(ba.stabilization, bb.stabilization);
        ba.stabilization = big_t;
        bb.stabilization = big_t;
        const Nat d = pqm::bottleneck_distance(ba, bb);
        results["distance"] = pqm::nat_to_json(d);
        text = "distance: " + pqm::nat_to_string(d) + "\n";
    } else {
        throw pqm::Error(pqm::ErrorKind::ValidationError, "distance does not apply to map instances");
    }
    emit_report("distance", opts, results, std::nullopt, timer, text, false);
    return kExitPass;
}

const pqm::PersistencePosetMap& require_map(const pqm::ParsedInstance& parsed) {
    if (parsed.kind != pqm::InstanceKind::Map)
        throw pqm::Error(pqm::ErrorKind::ValidationError, "this command needs a map instance");
    return *parsed.map;
}

int run_fibers(const std::string& path, const CommonOpts& opts) {
    Timer timer;
    const pqm::PersistencePosetMap f = require_map(pqm::parse_instance_file(path));
    const pqm::Side side = side_of(opts.side);
    if (!f.target().is_filtration())
        throw pqm::Error(pqm::ErrorKind::TargetNotFiltration, "fibers need a filtration target");
    Json results;
    Json fibers = Json::array();
    std::string text;
    for (const auto& v : pqm::enumerate_persistence_points(f.target())) {
        const pqm::PersistencePoset fiber = pqm::persistence_fiber(f, v, side);
        const pqm::AcyclicityResult r = pqm::acyclicity_measure(fiber, opts.prime, opts.max_degree);
        Json entry;
        entry["point"] = v.name_at_stabilization();
        entry["threshold"] = v.threshold;
        Json sizes = Json::array();
        for (Nat i = 0; i <= fiber.stabilization(); ++i) sizes.push_back(fiber.poset_at(i).size());
        entry["fiber_sizes"] = std::move(sizes);
        entry["eps"] = pqm::nat_to_json(r.value);
        entry["empty"] = r.empty_input;
        fibers.push_back(std::move(entry));
        text += "point " + v.name_at_stabilization() + " (born " + std::to_string(v.threshold) +
                "): eps = " + pqm::nat_to_string(r.value) + (r.empty_input ? " (empty fiber)" : "") +
                "\n";
    }
    results["fibers"] = std::move(fibers);
    emit_report("fibers", opts, results, std::nullopt, timer, text);
    return kExitPass;
}

std::string ledger_text(const pqm::ReductionLedger& ledger) {
    std::string text;
    for (const auto& e : ledger.entries)
        text += "remove " + e.point + " (born " + std::to_string(e.threshold) +
                "): eps = " + pqm::nat_to_string(e.eps) + "\n";
    text += "eps_max: " + pqm::nat_to_string(ledger.eps_max) + "\n";
    text += "|Q|: " + std::to_string(ledger.target_cardinality) + "\n";
    text += "bound_main (2 eps_max |Q|): " + pqm::nat_to_string(ledger.bound_main) + "\n";
    text += "sum2eps: " + pqm::nat_to_string(ledger.sum2eps) + "\n";
    text += "bound_prior (4 eps_max |Q|): " + pqm::nat_to_string(ledger.bound_prior) + "\n";
    text += "measured:";
    for (std::size_t j = 0; j < ledger.measured.size(); ++j)
        text += " H_" + std::to_string(j) + "=" + pqm::nat_to_string(ledger.measured[j]);
    text += "\n";
    return text;
}

int run_reduce(const std::string& path, const CommonOpts& opts) {
    Timer timer;
    const pqm::PersistencePosetMap f = require_map(pqm::parse_instance_file(path));
    const pqm::ReductionLedger ledger =
        pqm::reduction_schedule(f, side_of(opts.side), opts.prime, opts.max_degree);
    Json results;
    results["ledger"] = pqm::ledger_to_json(ledger);
    const std::string verdict = ledger.hypothesis_ok ? "ok" : "hypothesis-failed";
    emit_report("reduce", opts, results, verdict, timer, ledger_text(ledger));
    return ledger.hypothesis_ok ? kExitPass : kExitHypothesis;
}

int run_verify(const std::string& path, const CommonOpts& opts) {
    Timer timer;
    const pqm::PersistencePosetMap f = require_map(pqm::parse_instance_file(path));
    const pqm::VerdictReport report =
        pqm::verify_main_bound(f, side_of(opts.side), opts.prime, opts.max_degree, opts.verify_steps);
    Json results = pqm::verdict_report_to_json(report);
    std::string text = ledger_text(report.ledger);
    text += "cylinder equivalence: " + std::string(report.cylinder_ok ? "ok" : "FAILED") + "\n";
    if (report.steps_checked)
        for (const auto& s : report.steps)
            text += "step " + s.point + ": " + (s.ok ? "ok" : "FAILED") + "\n";
    emit_report("verify", opts, results, pqm::verdict_name(report.verdict), timer, text);
    switch (report.verdict) {
        case pqm::Verdict::Pass: return kExitPass;
        case pqm::Verdict::Fail: return kExitFail;
        case pqm::Verdict::HypothesisFailed: return kExitHypothesis;
    }
    return kExitInput;
}

pqm::PersistenceModule module_from_instance(const pqm::ParsedInstance& parsed, Nat prime) {
    if (parsed.kind == pqm::InstanceKind::Module) return *parsed.module;
    if (parsed.kind == pqm::InstanceKind::BarcodeFile) return pqm::barcode_module(*parsed.barcode, prime);
    throw pqm::Error(pqm::ErrorKind::ValidationError, "oracle needs module or barcode instances");
}

int run_oracle(const std::string& path_a, const std::string& path_b, std::optional<Nat> eps,
               const pqm::BruteForceCaps& caps, const CommonOpts& opts) {
    Timer timer;
    const pqm::PersistenceModule m = module_from_instance(pqm::parse_instance_file(path_a), opts.prime);
    const pqm::PersistenceModule n = module_from_instance(pqm::parse_instance_file(path_b), opts.prime);
    Json results;
    std::string text;
    int exit_code = kExitPass;
    if (eps) {
        const bool ok = pqm::brute_force_interleaving_check(m, n, *eps, caps);
        results["eps"] = *eps;
        results["interleaved"] = ok;
        text = "interleaved at eps " + std::to_string(*eps) + ": " + (ok ? "yes" : "no") + "\n";
    } else {
        const Nat claimed = pqm::min_interleaving_eps(m, n);
        const Nat scan_cap =
            std::max(m.stabilization(), n.stabilization()) * 2 + 4;
        Nat least = pqm::kInf;
        for (Nat e = 0; e <= scan_cap; ++e)
            if (pqm::brute_force_interleaving_check(m, n, e, caps)) { least = e; break; }
        const bool agree = (claimed == least);
        results["bottleneck"] = pqm::nat_to_json(claimed);
        results["brute_force"] = pqm::nat_to_json(least);
        results["agree"] = agree;
        text = "bottleneck: " + pqm::nat_to_string(claimed) + "\nbrute force: " +
               pqm::nat_to_string(least) + "\nagree: " + (agree ? "yes" : "no") + "\n";
        if (!agree) exit_code = kExitFail;
    }
    emit_report("oracle", opts, results, std::nullopt, timer, text, false);
    return exit_code;
}

int run_gen(const std::string& kind, CommonOpts& opts, Nat n, Nat t_index, Nat block, Nat delay,
            double edge_prob, const std::string& out_path) {
    Timer timer;
    Json doc;
    if (kind == "random-filtration") {
        pqm::RandomFiltrationParams params;
        params.seed = opts.seed;
        params.n = n;
        params.t_index = t_index;
        params.edge_prob = edge_prob;
        doc = pqm::emit_poset_diagram(pqm::generate_random_filtration(params));
    } else if (kind == "fibered-map") {
        pqm::FiberedMapParams params;
        params.seed = opts.seed;
        params.target_n = n;
        params.t_index = t_index;
        params.max_block = block;
        params.delay = delay;
        params.edge_prob = edge_prob;
        doc = pqm::emit_map(pqm::generate_fibered_map(params));
    } else if (kind == "cone-collapse") {
        pqm::ConeCollapseParams params;
        params.seed = opts.seed;
        params.n = n;
        params.t_index = t_index;
        params.edge_prob = edge_prob;
        doc = pqm::emit_map(pqm::generate_cone_collapse(params));
    } else {
        throw pqm::Error(pqm::ErrorKind::InvalidArgument,
                         "kind must be random-filtration, fibered-map or cone-collapse");
    }
    if (out_path.empty()) {
        std::cout << pqm::dump_document(doc);
    } else {
        pqm::write_document(doc, out_path);
        Json results;
        results["kind"] = kind;
        results["path"] = out_path;
        emit_report("gen", opts, results, std::nullopt, timer,
                    "wrote " + kind + " instance to " + out_path + "\n", false, true);
    }
    return kExitPass;
}

int run_diagram(const std::string& path, Nat degree, const CommonOpts& opts,
                const std::string& out_path) {
    Timer timer;
    const pqm::ParsedInstance parsed = pqm::parse_instance_file(path);
    const pqm::Barcode bc = barcode_from_instance(parsed, degree, opts.prime);
    pqm::render_diagram_to_file(bc, out_path);
    Json results;
    results["path"] = out_path;
    results["degree"] = degree;
    results["bars"] = static_cast<Nat>(bc.intervals.size());
    emit_report("diagram", opts, results, std::nullopt, timer,
                "wrote diagram (" + std::to_string(bc.intervals.size()) + " bars) to " + out_path + "\n",
                false);
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"persistence posets, order-complex homology, and Quillen-McCord reduction"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string path, path_b, out_path, kind;
    Nat n = 5, t_index = 3, block = 3, delay = 0, degree = 0;
    double edge_prob = 0.35;
    std::optional<Nat> oracle_eps;
    pqm::BruteForceCaps caps;

    auto* check = app.add_subcommand("check", "validate an instance file and summarize it");
    check->add_option("file", path)->required();
    add_common(check, opts, false);

    auto* homology = app.add_subcommand("homology", "per-index Betti numbers of a diagram");
    homology->add_option("file", path)->required();
    add_common(homology, opts, false);

    auto* barcode = app.add_subcommand("barcode", "interval decomposition per degree");
    barcode->add_option("file", path)->required();
    add_common(barcode, opts, false);

    auto* distance = app.add_subcommand("distance", "interleaving/bottleneck distance of two instances");
    distance->add_option("a", path)->required();
    distance->add_option("b", path_b)->required();
    add_common(distance, opts, false);

    auto* fibers = app.add_subcommand("fibers", "fiber sizes and eps per target persistence point");
    fibers->add_option("file", path)->required();
    add_common(fibers, opts);

    auto* reduce = app.add_subcommand("reduce", "run the removal schedule and print the ledger");
    reduce->add_option("file", path)->required();
    add_common(reduce, opts);

    auto* verify = app.add_subcommand("verify", "verify the interleaving bound end to end");
    verify->add_option("file", path)->required();
    add_common(verify, opts);
    verify->add_flag("--verify-steps", opts.verify_steps, "re-check homology after every removal");

    auto* oracle = app.add_subcommand("oracle", "brute-force interleaving check on two modules");
    oracle->add_option("a", path)->required();
    oracle->add_option("b", path_b)->required();
    oracle->add_option("--eps", oracle_eps, "check a single eps instead of searching");
    oracle->add_option("--cap-dim", caps.total_dim, "total dimension cap per module")->default_val(6);
    oracle->add_option("--cap-t", caps.max_stabilization, "stabilization index cap")->default_val(5);
    add_common(oracle, opts, false);

    auto* gen = app.add_subcommand("gen", "deterministic instance generators");
    gen->add_option("--kind", kind, "random-filtration, fibered-map or cone-collapse")->required();
    gen->add_option("--seed", opts.seed)->default_val(0);
    gen->add_option("--n", n, "elements (target elements for fibered-map)")->default_val(5);
    gen->add_option("--t", t_index, "stabilization index")->default_val(3);
    gen->add_option("--block", block, "fibered-map block size cap")->default_val(3);
    gen->add_option("--delay", delay, "fibered-map attachment delay cap")->default_val(0);
    gen->add_option("--edge-prob", edge_prob, "relation density")->default_val(0.35);
    gen->add_option("--out", out_path, "output path (stdout when omitted)");
    gen->add_option("--format", opts.format)->default_val("text");

    auto* diagram = app.add_subcommand("diagram", "render a persistence diagram as SVG");
    diagram->add_option("file", path)->required();
    diagram->add_option("--degree", degree, "degree used for poset-diagram inputs")->default_val(0);
    diagram->add_option("--out", out_path, "output SVG path")->required();
    add_common(diagram, opts, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return run_check(path, opts);
        if (homology->parsed()) return run_homology(path, opts);
        if (barcode->parsed()) return run_barcode(path, opts);
        if (distance->parsed()) return run_distance(path, path_b, opts);
        if (fibers->parsed()) return run_fibers(path, opts);
        if (reduce->parsed()) return run_reduce(path, opts);
        if (verify->parsed()) return run_verify(path, opts);
        if (oracle->parsed()) return run_oracle(path, path_b, oracle_eps, caps, opts);
        if (gen->parsed()) return run_gen(kind, opts, n, t_index, block, delay, edge_prob, out_path);
        if (diagram->parsed()) return run_diagram(path, degree, opts, out_path);
    } catch (const pqm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
