#include <doctest.h>

#include "helpers.hpp"
#include "pqm/generators.hpp"
#include "pqm/instance_io.hpp"
#include "pqm/render.hpp"

using namespace pqm;
using namespace pqm::testing;

TEST_CASE("minimal poset-diagram document parses") {
    const std::string text = R"({
      "version": 1,
      "kind": "poset-diagram",
      "T": 0,
      "posets": [{"elements": ["a"], "relations": []}],
      "steps": []
    })";
    const ParsedInstance parsed = parse_instance_text(text);
    CHECK(parsed.kind == InstanceKind::PosetDiagram);
    CHECK(parsed.diagram->cardinality() == 1);
}

TEST_CASE("relation cycles are reported") {
    const std::string text = R"({
      "version": 1, "kind": "poset-diagram", "T": 0,
      "posets": [{"elements": ["a", "b"], "relations": [["a","b"],["b","a"]]}],
      "steps": []
    })";
    try {
        parse_instance_text(text);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::CycleDetected);
        CHECK(std::string(e.what()).find("posets[0]") != std::string::npos);
    }
}

TEST_CASE("commutation failures name the square") {
    const std::string text = R"({
      "version": 1, "kind": "map",
      "source": {"T": 1,
        "posets": [{"elements": ["x"], "relations": []},
                   {"elements": ["x"], "relations": []}],
        "steps": [{"x": "x"}]},
      "target": {"T": 1,
        "posets": [{"elements": ["u", "v"], "relations": []},
                   {"elements": ["u", "v"], "relations": []}],
        "steps": [{"u": "u", "v": "v"}]},
      "components": [{"x": "u"}, {"x": "v"}]
    })";
    try {
        parse_instance_text(text);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ValidationError);
        CHECK(std::string(e.what()).find("index 0") != std::string::npos);
        CHECK(std::string(e.what()).find("'x'") != std::string::npos);
    }
}

TEST_CASE("round trips") {
    RandomFiltrationParams fp;
    fp.seed = 5;
    fp.n = 6;
    fp.t_index = 3;
    const PersistencePoset x = generate_random_filtration(fp);
    const ParsedInstance back = parse_instance_text(dump_document(emit_poset_diagram(x)));
    CHECK(*back.diagram == x);

    FiberedMapParams mp;
    mp.seed = 9;
    mp.target_n = 3;
    mp.t_index = 2;
    mp.max_block = 3;
    mp.delay = 1;
    const PersistencePosetMap f = generate_fibered_map(mp);
    const ParsedInstance map_back = parse_instance_text(dump_document(emit_map(f)));
    CHECK(map_back.map->source() == f.source());
    CHECK(map_back.map->target() == f.target());

    const PersistenceModule m = bars(3, {{0, 2}, {1, kInf}}, 3);
    const ParsedInstance mod_back = parse_instance_text(dump_document(emit_module(m)));
    CHECK(mod_back.module->dims == m.dims);
    CHECK(interval_decomposition(*mod_back.module) == interval_decomposition(m));

    const Barcode bc = barcode_of(4, {{0, 3}, {2, kInf}});
    const ParsedInstance bc_back = parse_instance_text(dump_document(emit_barcode(bc)));
    CHECK(*bc_back.barcode == bc);
}

TEST_CASE("inf literals and bad documents") {
    CHECK(nat_from_json(Json("inf")) == kInf);
    CHECK_THROWS_AS(parse_instance_text("not json"), Error);
    CHECK_THROWS_AS(parse_instance_text(R"({"version":1,"kind":"nope"})"), Error);
    CHECK_THROWS_AS(parse_instance_text(R"({"kind":"barcode"})"), Error);
    const std::string bad_interval = R"({
      "version": 1, "kind": "barcode", "T": 3, "intervals": [[2, 1]]
    })";
    CHECK_THROWS_AS(parse_instance_text(bad_interval), Error);
}

TEST_CASE("generators are deterministic in the seed") {
    RandomFiltrationParams params;
    params.seed = 77;
    params.n = 5;
    params.t_index = 3;
    const std::string a = dump_document(emit_poset_diagram(generate_random_filtration(params)));
    const std::string b = dump_document(emit_poset_diagram(generate_random_filtration(params)));
    CHECK(a == b);
    params.seed = 78;
    const std::string c = dump_document(emit_poset_diagram(generate_random_filtration(params)));
    CHECK(a != c);
}

TEST_CASE("random filtrations are filtrations") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        RandomFiltrationParams params;
        params.seed = seed;
        params.n = 6;
        params.t_index = 3;
        const PersistencePoset x = generate_random_filtration(params);
        CHECK(x.is_filtration());
        CHECK(x.stabilization() == 3);
        CHECK(x.cardinality() == 6);
    }
}

TEST_CASE("fibered maps with delay zero have cone fibers") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        FiberedMapParams params;
        params.seed = seed;
        params.target_n = 3;
        params.t_index = 2;
        params.max_block = 3;
        params.delay = 0;
        const PersistencePosetMap f = generate_fibered_map(params);
        CHECK(f.target().is_filtration());
        for (const auto& v : enumerate_persistence_points(f.target())) {
            const PersistencePoset fiber = persistence_fiber(f, v, Side::Lower);
            CHECK(fiber.threshold() == v.threshold);
            const AcyclicityResult r = acyclicity_measure(fiber, 2, 2);
            CHECK(r.value == 0);
        }
    }
}

TEST_CASE("generator caps are enforced") {
    RandomFiltrationParams params;
    params.n = 1000;
    CHECK_THROWS_AS(generate_random_filtration(params), Error);
    FiberedMapParams mp;
    mp.delay = 99;
    CHECK_THROWS_AS(generate_fibered_map(mp), Error);
}

TEST_CASE("cone collapse instances are identity maps with reducible points") {
    ConeCollapseParams params;
    params.seed = 3;
    params.n = 4;
    params.t_index = 2;
    const PersistencePosetMap f = generate_cone_collapse(params);
    CHECK(f.source() == f.target());
    for (const auto& v : enumerate_persistence_points(f.target()))
        CHECK(acyclicity_measure(persistence_fiber(f, v, Side::Lower), 2, 2).value == 0);
}

TEST_CASE("empty barcode renders the scaffold only") {
    const std::string svg = render_diagram_svg(barcode_of(3, {}));
    CHECK(svg.find("<svg") == 0);
    CHECK(svg.find("circle") == std::string::npos);
    CHECK(svg.find("stroke-dasharray") != std::string::npos);
}

TEST_CASE("single infinite bar lands on the inf row") {
    const std::string svg = render_diagram_svg(barcode_of(3, {{0, kInf}}));
    CHECK(svg.find("<circle cx=\"48\" cy=\"48\" r=\"4\"") != std::string::npos);
}

TEST_CASE("documented mark coordinates") {
    // T = 3: x(v) = 48 + 96 v, y(v) = 432 - 96 v, inf row at y = 48.
    const std::string svg = render_diagram_svg(barcode_of(3, {{0, kInf}, {1, 2}}));
    CHECK(svg.find("<circle cx=\"48\" cy=\"48\" r=\"4\"") != std::string::npos);
    CHECK(svg.find("<circle cx=\"144\" cy=\"240\" r=\"4\"") != std::string::npos);
    // Byte determinism.
    CHECK(svg == render_diagram_svg(barcode_of(3, {{0, kInf}, {1, 2}})));
}

TEST_CASE("reports carry the configuration and strip cleanly") {
    Json config;
    config["prime"] = 2;
    Json results;
    results["answer"] = 42;
    const Json report = make_report("check", config, results, std::nullopt, 1.5);
    CHECK(report.at("command") == "check");
    CHECK(report.at("verdict").is_null());
    Json stripped = report;
    stripped.erase("timing");
    Json other = make_report("check", config, results, std::nullopt, 99.0);
    other.erase("timing");
    CHECK(stripped == other);
}
