#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include "pqm/barcode.hpp"
#include "pqm/generators.hpp"
#include "pqm/instance_io.hpp"
#include "pqm/reduction.hpp"
#include "pqm/render.hpp"

namespace py = pybind11;
using namespace pqm;

namespace {

// kInf crosses into python as float('inf'); everything else stays int.
py::object nat_out(Nat v) {
    if (is_inf(v)) return py::float_(std::numeric_limits<double>::infinity());
    return py::int_(v);
}

Nat nat_in(const py::object& v) {
    if (py::isinstance<py::float_>(v)) {
        const double d = v.cast<double>();
        if (std::isinf(d)) return kInf;
    }
    return v.cast<Nat>();
}

Side side_in(const std::string& side) {
    if (side == "lower") return Side::Lower;
    if (side == "upper") return Side::Upper;
    throw Error(ErrorKind::InvalidArgument, "side must be 'lower' or 'upper'");
}

MatrixFp matrix_in(Nat p, Nat rows, Nat cols, const std::vector<std::vector<Nat>>& entries) {
    MatrixFp m(p, rows, cols);
    if (static_cast<Nat>(entries.size()) != rows)
        throw Error(ErrorKind::ArityMismatch, "wrong number of rows");
    for (Nat r = 0; r < rows; ++r) {
        if (static_cast<Nat>(entries[static_cast<std::size_t>(r)].size()) != cols)
            throw Error(ErrorKind::ArityMismatch, "wrong number of columns");
        for (Nat c = 0; c < cols; ++c)
            m.set(r, c, entries[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]);
    }
    return m;
}

py::list barcode_out(const Barcode& bc) {
    py::list out;
    for (const auto& bar : bc.intervals) out.append(py::make_tuple(bar.birth, nat_out(bar.death)));
    return out;
}

Barcode barcode_in(Nat t_index, const py::iterable& intervals) {
    Barcode bc;
    bc.stabilization = t_index;
    for (const auto& item : intervals) {
        const auto pair = item.cast<py::tuple>();
        Interval bar;
        bar.birth = pair[0].cast<Nat>();
        bar.death = nat_in(py::reinterpret_borrow<py::object>(pair[1]));
        bc.intervals.push_back(bar);
    }
    std::sort(bc.intervals.begin(), bc.intervals.end());
    return bc;
}

PersistenceModule module_in(Nat p, const std::vector<Nat>& dims,
                            const std::vector<std::vector<std::vector<Nat>>>& steps) {
    std::vector<MatrixFp> ms;
    for (std::size_t i = 0; i + 1 < dims.size(); ++i) {
        if (i >= steps.size()) throw Error(ErrorKind::ArityMismatch, "missing step matrix");
        ms.push_back(matrix_in(p, dims[i + 1], dims[i], steps[i]));
    }
    return PersistenceModule::validate(p, dims, ms);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Persistence finite posets, order-complex homology over prime fields, "
              "and the mapping-cylinder reduction with its interleaving bounds.";

    py::register_exception<Error>(m, "PqmError");

    py::class_<FinitePoset>(m, "FinitePoset")
        .def(py::init([](const std::vector<std::string>& elements,
                         const std::vector<std::pair<std::string, std::string>>& relations) {
                 return FinitePoset::from_relations(elements, relations);
             }),
             py::arg("elements"), py::arg("relations"))
        .def_property_readonly("elements", &FinitePoset::elements)
        .def("__len__", &FinitePoset::size)
        .def("leq", py::overload_cast<const std::string&, const std::string&>(
                        &FinitePoset::leq, py::const_),
             py::arg("a"), py::arg("b"))
        .def("principal_set",
             [](const FinitePoset& p, const std::string& v, const std::string& side, bool strict) {
                 return p.principal_set(v, side_in(side), strict);
             },
             py::arg("v"), py::arg("side") = "lower", py::arg("strict") = false)
        .def("extremal_elements",
             [](const FinitePoset& p, const std::string& which) {
                 if (which == "minimal") return p.extremal_elements(Extremal::Minimal);
                 if (which == "maximal") return p.extremal_elements(Extremal::Maximal);
                 throw Error(ErrorKind::InvalidArgument, "which must be 'minimal' or 'maximal'");
             },
             py::arg("which"))
        .def("induced", &FinitePoset::induced, py::arg("subset"))
        .def("dual", &FinitePoset::dual)
        .def("cover_pairs", &FinitePoset::cover_pairs)
        .def("strict_pairs", &FinitePoset::strict_pairs)
        .def("__eq__", [](const FinitePoset& a, const FinitePoset& b) { return a == b; })
        .def("__repr__", [](const FinitePoset& p) {
            return "<FinitePoset with " + std::to_string(p.size()) + " elements>";
        });

    m.def("validate_poset",
          [](const std::vector<std::string>& elements,
             const std::vector<std::pair<std::string, std::string>>& relations) {
              return FinitePoset::from_relations(elements, relations);
          },
          py::arg("elements"), py::arg("relations"));

    py::class_<MonotoneMap>(m, "MonotoneMap")
        .def(py::init<FinitePoset, FinitePoset,
                      const std::unordered_map<std::string, std::string>&>(),
             py::arg("dom"), py::arg("cod"), py::arg("assignment"))
        .def_static("identity", &MonotoneMap::identity, py::arg("poset"))
        .def_property_readonly("dom", &MonotoneMap::dom)
        .def_property_readonly("cod", &MonotoneMap::cod)
        .def("apply", &MonotoneMap::apply, py::arg("name"))
        .def("is_injective", &MonotoneMap::is_injective);

    py::class_<MappingCylinder>(m, "MappingCylinder")
        .def_readonly("cylinder", &MappingCylinder::cylinder)
        .def_readonly("include_dom", &MappingCylinder::include_dom)
        .def_readonly("include_cod", &MappingCylinder::include_cod)
        .def_readonly("retraction", &MappingCylinder::retraction)
        .def_readonly("tag_suffix", &MappingCylinder::tag_suffix);

    m.def("mapping_cylinder", &mapping_cylinder, py::arg("f"));

    py::class_<PersistencePoset>(m, "PersistencePoset")
        .def(py::init([](const std::vector<FinitePoset>& posets,
                         const std::vector<std::unordered_map<std::string, std::string>>& steps) {
                 return PersistencePoset::create(posets, steps);
             }),
             py::arg("posets"), py::arg("steps"))
        .def_static("constant", &PersistencePoset::constant, py::arg("poset"), py::arg("T"))
        .def_property_readonly("T", &PersistencePoset::stabilization)
        .def("poset_at", &PersistencePoset::poset_at, py::arg("i"))
        .def("is_filtration", &PersistencePoset::is_filtration)
        .def("threshold", [](const PersistencePoset& x) { return nat_out(x.threshold()); })
        .def("cardinality", &PersistencePoset::cardinality)
        .def("shifted", &PersistencePoset::shifted, py::arg("shift"))
        .def("dualized", &PersistencePoset::dualized)
        .def("__eq__",
             [](const PersistencePoset& a, const PersistencePoset& b) { return a == b; })
        .def("__repr__", [](const PersistencePoset& x) {
            return "<PersistencePoset T=" + std::to_string(x.stabilization()) +
                   " |X|=" + std::to_string(x.cardinality()) + ">";
        });

    m.def("validate_persistence_poset",
          [](const std::vector<FinitePoset>& posets,
             const std::vector<std::unordered_map<std::string, std::string>>& steps) {
              return PersistencePoset::create(posets, steps);
          },
          py::arg("posets"), py::arg("steps"));

    py::class_<PersistencePoint>(m, "PersistencePoint")
        .def_readonly("threshold", &PersistencePoint::threshold)
        .def_readonly("track", &PersistencePoint::track)
        .def("name_at_stabilization", &PersistencePoint::name_at_stabilization)
        .def("__repr__", [](const PersistencePoint& v) {
            return "<PersistencePoint '" + v.track.back() + "' born " +
                   std::to_string(v.threshold) + ">";
        });

    m.def("make_persistence_point", &make_persistence_point, py::arg("x"), py::arg("t"),
          py::arg("name"));
    m.def("enumerate_persistence_points", &enumerate_persistence_points, py::arg("x"));
    m.def("remove_persistence_point", &remove_persistence_point, py::arg("x"), py::arg("v"));
    m.def("principal_persistence_set",
          [](const PersistencePoset& x, const PersistencePoint& v, const std::string& side,
             bool strict) { return principal_persistence_set(x, v, side_in(side), strict); },
          py::arg("x"), py::arg("v"), py::arg("side") = "lower", py::arg("strict") = false);

    py::class_<PersistencePosetMap>(m, "PersistencePosetMap")
        .def(py::init([](const PersistencePoset& source, const PersistencePoset& target,
                         const std::vector<std::unordered_map<std::string, std::string>>& comps) {
                 return PersistencePosetMap::create(source, target, comps);
             }),
             py::arg("source"), py::arg("target"), py::arg("components"))
        .def_static("identity", &PersistencePosetMap::identity, py::arg("x"))
        .def_property_readonly("source", &PersistencePosetMap::source)
        .def_property_readonly("target", &PersistencePosetMap::target)
        .def("dualized", &PersistencePosetMap::dualized);

    m.def("persistence_fiber",
          [](const PersistencePosetMap& f, const PersistencePoint& v, const std::string& side) {
              return persistence_fiber(f, v, side_in(side));
          },
          py::arg("f"), py::arg("v"), py::arg("side") = "lower");

    py::class_<PersistenceMappingCylinder>(m, "PersistenceMappingCylinder")
        .def_readonly("cylinder", &PersistenceMappingCylinder::cylinder)
        .def_readonly("include_source", &PersistenceMappingCylinder::include_source)
        .def_readonly("include_target", &PersistenceMappingCylinder::include_target)
        .def_readonly("retraction", &PersistenceMappingCylinder::retraction)
        .def_readonly("tag_suffix", &PersistenceMappingCylinder::tag_suffix);

    m.def("persistence_mapping_cylinder", &persistence_mapping_cylinder, py::arg("f"));

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def(py::init([](const std::vector<std::string>& vertices,
                         const std::vector<std::vector<std::string>>& simplices) {
                 return SimplicialComplex::from_simplices(vertices, simplices);
             }),
             py::arg("vertices"), py::arg("simplices"))
        .def_property_readonly("vertices", &SimplicialComplex::vertices)
        .def("simplices",
             [](const SimplicialComplex& k) {
                 std::vector<std::vector<std::string>> out;
                 for (const auto& s : k.simplices()) out.push_back(k.simplex_names(s));
                 return out;
             })
        .def("dim", &SimplicialComplex::dim)
        .def("__len__", &SimplicialComplex::simplex_count)
        .def("__eq__",
             [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; });

    m.def("order_complex",
          [](const FinitePoset& p, std::optional<Nat> max_dim) { return order_complex(p, max_dim); },
          py::arg("poset"), py::arg("max_dim") = std::nullopt);

    py::class_<SimplicialMap>(m, "SimplicialMap")
        .def(py::init([](const SimplicialComplex& dom, const SimplicialComplex& cod,
                         const std::unordered_map<std::string, std::string>& assignment) {
                 return SimplicialMap(dom, cod, assignment);
             }),
             py::arg("dom"), py::arg("cod"), py::arg("assignment"))
        .def_static("identity", &SimplicialMap::identity, py::arg("k"))
        .def_property_readonly("dom", &SimplicialMap::dom)
        .def_property_readonly("cod", &SimplicialMap::cod);

    m.def("induced_simplicial_map",
          [](const MonotoneMap& f, std::optional<Nat> max_dim) {
              return induced_simplicial_map(f, max_dim);
          },
          py::arg("f"), py::arg("max_dim") = std::nullopt);
    m.def("join", &join, py::arg("k"), py::arg("l"));
    m.def("star_link",
          [](const SimplicialComplex& k, const std::string& v) {
              const StarLink sl = star_link(k, v);
              return py::make_tuple(sl.star, sl.link);
          },
          py::arg("k"), py::arg("v"));
    m.def("is_contiguous", &is_contiguous, py::arg("phi"), py::arg("psi"));

    m.def("boundary_matrices",
          [](const SimplicialComplex& k, Nat p, Nat max_degree) {
              std::vector<std::vector<std::vector<Nat>>> out;
              for (const auto& bd : boundary_matrices(k, p, max_degree)) out.push_back(bd.to_rows());
              return out;
          },
          py::arg("k"), py::arg("p") = 2, py::arg("max_degree") = 2);
    m.def("betti_numbers", &betti_numbers, py::arg("k"), py::arg("p") = 2,
          py::arg("max_degree") = 2);
    m.def("induced_homology_map",
          [](const SimplicialMap& phi, Nat degree, Nat p) {
              return induced_homology_map(phi, degree, p).to_rows();
          },
          py::arg("phi"), py::arg("degree"), py::arg("p") = 2);

    py::class_<PersistenceModule>(m, "PersistenceModule")
        .def(py::init(&module_in), py::arg("p"), py::arg("dims"), py::arg("steps"))
        .def_readonly("p", &PersistenceModule::p)
        .def_readonly("dims", &PersistenceModule::dims)
        .def_property_readonly("steps",
                               [](const PersistenceModule& mod) {
                                   std::vector<std::vector<std::vector<Nat>>> out;
                                   for (const auto& s : mod.steps) out.push_back(s.to_rows());
                                   return out;
                               })
        .def_property_readonly("T", &PersistenceModule::stabilization)
        .def("total_dim", &PersistenceModule::total_dim)
        .def("extended_to", &PersistenceModule::extended_to, py::arg("T"))
        .def("__repr__", [](const PersistenceModule& mod) {
            std::string dims;
            for (Nat d : mod.dims) dims += (dims.empty() ? "" : ",") + std::to_string(d);
            return "<PersistenceModule p=" + std::to_string(mod.p) + " dims=(" + dims + ")>";
        });

    m.def("persistence_module_of", &persistence_module_of, py::arg("x"), py::arg("degree"),
          py::arg("p") = 2);
    m.def("rank_invariant", &rank_invariant, py::arg("module"), py::arg("i"), py::arg("j"));

    py::class_<Barcode>(m, "Barcode")
        .def(py::init([](Nat t_index, const py::iterable& intervals) {
                 return barcode_in(t_index, intervals);
             }),
             py::arg("T"), py::arg("intervals"))
        .def_property_readonly("T", [](const Barcode& bc) { return bc.stabilization; })
        .def_property_readonly("intervals", &barcode_out)
        .def("count_alive", &Barcode::count_alive, py::arg("i"))
        .def("__eq__", [](const Barcode& a, const Barcode& b) { return a == b; })
        .def("__repr__", [](const Barcode& bc) {
            std::string bars;
            for (const auto& bar : bc.intervals)
                bars += "[" + std::to_string(bar.birth) + "," + nat_to_string(bar.death) + ") ";
            return "<Barcode T=" + std::to_string(bc.stabilization) + " " + bars + ">";
        });

    m.def("interval_decomposition", &interval_decomposition, py::arg("module"));
    m.def("barcode_module", &barcode_module, py::arg("barcode"), py::arg("p") = 2);
    m.def("point_module", &point_module, py::arg("threshold"), py::arg("degree"), py::arg("T"),
          py::arg("p") = 2);
    m.def("bottleneck_distance",
          [](const Barcode& a, const Barcode& b) { return nat_out(bottleneck_distance(a, b)); },
          py::arg("a"), py::arg("b"));
    m.def("min_interleaving_eps",
          [](const PersistenceModule& a, const PersistenceModule& b) {
              return nat_out(min_interleaving_eps(a, b));
          },
          py::arg("m"), py::arg("n"));
    m.def("brute_force_interleaving_check",
          [](const PersistenceModule& a, const PersistenceModule& b, Nat eps, Nat cap_dim,
             Nat cap_t) {
              BruteForceCaps caps;
              caps.total_dim = cap_dim;
              caps.max_stabilization = cap_t;
              return brute_force_interleaving_check(a, b, eps, caps);
          },
          py::arg("m"), py::arg("n"), py::arg("eps"), py::arg("cap_dim") = 6, py::arg("cap_t") = 5);
    m.def("acyclicity_measure",
          [](const PersistencePoset& x, Nat p, Nat max_degree) {
              const AcyclicityResult r = acyclicity_measure(x, p, max_degree);
              return py::make_tuple(nat_out(r.value), r.empty_input);
          },
          py::arg("x"), py::arg("p") = 2, py::arg("max_degree") = 2);
    m.def("reducibility_measure",
          [](const PersistencePoset& x, const PersistencePoint& v, const std::string& side, Nat p,
             Nat max_degree) {
              return nat_out(reducibility_measure(x, v, side_in(side), p, max_degree));
          },
          py::arg("x"), py::arg("v"), py::arg("side") = "lower", py::arg("p") = 2,
          py::arg("max_degree") = 2);

    py::class_<LedgerEntry>(m, "LedgerEntry")
        .def_readonly("point", &LedgerEntry::point)
        .def_readonly("threshold", &LedgerEntry::threshold)
        .def_readonly("fiber_sizes", &LedgerEntry::fiber_sizes)
        .def_property_readonly("eps", [](const LedgerEntry& e) { return nat_out(e.eps); });

    py::class_<ReductionLedger>(m, "ReductionLedger")
        .def_property_readonly("side",
                               [](const ReductionLedger& l) {
                                   return l.side == Side::Lower ? "lower" : "upper";
                               })
        .def_readonly("prime", &ReductionLedger::prime)
        .def_readonly("max_degree", &ReductionLedger::max_degree)
        .def_readonly("target_cardinality", &ReductionLedger::target_cardinality)
        .def_readonly("entries", &ReductionLedger::entries)
        .def_property_readonly("eps_max", [](const ReductionLedger& l) { return nat_out(l.eps_max); })
        .def_property_readonly("sum2eps", [](const ReductionLedger& l) { return nat_out(l.sum2eps); })
        .def_property_readonly("bound_main",
                               [](const ReductionLedger& l) { return nat_out(l.bound_main); })
        .def_property_readonly("bound_prior",
                               [](const ReductionLedger& l) { return nat_out(l.bound_prior); })
        .def_property_readonly("measured",
                               [](const ReductionLedger& l) {
                                   py::list out;
                                   for (Nat d : l.measured) out.append(nat_out(d));
                                   return out;
                               })
        .def_readonly("hypothesis_ok", &ReductionLedger::hypothesis_ok);

    py::class_<StepCheck>(m, "StepCheck")
        .def_readonly("point", &StepCheck::point)
        .def_property_readonly("eps", [](const StepCheck& s) { return nat_out(s.eps); })
        .def_property_readonly("distances",
                               [](const StepCheck& s) {
                                   py::list out;
                                   for (Nat d : s.distances) out.append(nat_out(d));
                                   return out;
                               })
        .def_readonly("ok", &StepCheck::ok);

    py::class_<VerdictReport>(m, "VerdictReport")
        .def_readonly("ledger", &VerdictReport::ledger)
        .def_readonly("cylinder_ok", &VerdictReport::cylinder_ok)
        .def_readonly("steps", &VerdictReport::steps)
        .def_readonly("steps_checked", &VerdictReport::steps_checked)
        .def_property_readonly("verdict",
                               [](const VerdictReport& r) { return verdict_name(r.verdict); });

    m.def("reduction_schedule",
          [](const PersistencePosetMap& f, const std::string& side, Nat p, Nat max_degree) {
              return reduction_schedule(f, side_in(side), p, max_degree);
          },
          py::arg("f"), py::arg("side") = "lower", py::arg("p") = 2, py::arg("max_degree") = 2);
    m.def("verify_step_bound", &verify_step_bound, py::arg("before"), py::arg("after"),
          py::arg("eps_v"), py::arg("p") = 2, py::arg("max_degree") = 2);
    m.def("cylinder_equivalence_check", &cylinder_equivalence_check, py::arg("f"), py::arg("p") = 2,
          py::arg("max_degree") = 2);
    m.def("verify_main_bound",
          [](const PersistencePosetMap& f, const std::string& side, Nat p, Nat max_degree,
             bool verify_steps) {
              return verify_main_bound(f, side_in(side), p, max_degree, verify_steps);
          },
          py::arg("f"), py::arg("side") = "lower", py::arg("p") = 2, py::arg("max_degree") = 2,
          py::arg("verify_steps") = false);

    m.def("generate_random_filtration",
          [](std::uint64_t seed, Nat n, Nat t_index, double edge_prob) {
              RandomFiltrationParams params{seed, n, t_index, edge_prob};
              return generate_random_filtration(params);
          },
          py::arg("seed"), py::arg("n") = 5, py::arg("T") = 3, py::arg("edge_prob") = 0.35);
    m.def("generate_fibered_map",
          [](std::uint64_t seed, Nat target_n, Nat t_index, Nat max_block, Nat delay,
             double edge_prob) {
              FiberedMapParams params{seed, target_n, t_index, max_block, delay, edge_prob};
              return generate_fibered_map(params);
          },
          py::arg("seed"), py::arg("target_n") = 3, py::arg("T") = 3, py::arg("max_block") = 3,
          py::arg("delay") = 0, py::arg("edge_prob") = 0.35);
    m.def("generate_cone_collapse",
          [](std::uint64_t seed, Nat n, Nat t_index, double edge_prob) {
              ConeCollapseParams params{seed, n, t_index, edge_prob};
              return generate_cone_collapse(params);
          },
          py::arg("seed"), py::arg("n") = 5, py::arg("T") = 3, py::arg("edge_prob") = 0.35);

    m.def("emit_poset_diagram",
          [](const PersistencePoset& x) { return dump_document(emit_poset_diagram(x)); },
          py::arg("x"));
    m.def("emit_map", [](const PersistencePosetMap& f) { return dump_document(emit_map(f)); },
          py::arg("f"));
    m.def("emit_module",
          [](const PersistenceModule& mod) { return dump_document(emit_module(mod)); },
          py::arg("module"));
    m.def("emit_barcode", [](const Barcode& bc) { return dump_document(emit_barcode(bc)); },
          py::arg("barcode"));
    m.def("parse_instance",
          [](const std::string& text) -> py::object {
              const ParsedInstance parsed = parse_instance_text(text);
              switch (parsed.kind) {
                  case InstanceKind::PosetDiagram: return py::cast(*parsed.diagram);
                  case InstanceKind::Map: return py::cast(*parsed.map);
                  case InstanceKind::Module: return py::cast(*parsed.module);
                  case InstanceKind::BarcodeFile: return py::cast(*parsed.barcode);
              }
              return py::none();
          },
          py::arg("text"));
    m.def("parse_instance_file",
          [](const std::string& path) -> py::object {
              const ParsedInstance parsed = parse_instance_file(path);
              switch (parsed.kind) {
                  case InstanceKind::PosetDiagram: return py::cast(*parsed.diagram);
                  case InstanceKind::Map: return py::cast(*parsed.map);
                  case InstanceKind::Module: return py::cast(*parsed.module);
                  case InstanceKind::BarcodeFile: return py::cast(*parsed.barcode);
              }
              return py::none();
          },
          py::arg("path"));
    m.def("render_diagram_svg", &render_diagram_svg, py::arg("barcode"));

    m.attr("__version__") = "0.1.0";
}
