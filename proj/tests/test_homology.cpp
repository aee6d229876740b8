#include <doctest.h>

#include "helpers.hpp"
#include "pqm/homology.hpp"

using namespace pqm;
using namespace pqm::testing;

namespace {

// Minimal finite model of the circle: a, b < c, d.
FinitePoset circle_poset() {
    return poset({"a", "b", "c", "d"}, {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
}

}  // namespace

TEST_CASE("boundary of a single vertex is the empty matrix") {
    const auto bd = boundary_matrices(order_complex(poset({"a"}, {})), 2, 0);
    CHECK(bd[0].rows() == 0);
    CHECK(bd[0].cols() == 1);
}

TEST_CASE("boundary of an edge mod 2") {
    const auto bd = boundary_matrices(order_complex(chain({"a", "b"})), 2, 1);
    REQUIRE(bd[1].rows() == 2);
    REQUIRE(bd[1].cols() == 1);
    CHECK(bd[1].at(0, 0) == 1);
    CHECK(bd[1].at(1, 0) == 1);
}

TEST_CASE("boundary of the hollow triangle mod 3 has rank 2") {
    const SimplicialComplex k = SimplicialComplex::from_simplices(
        {"a", "b", "c"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}});
    const auto bd = boundary_matrices(k, 3, 1);
    REQUIRE(bd[1].rows() == 3);
    REQUIRE(bd[1].cols() == 3);
    CHECK(rank(bd[1]) == 2);
    // Signs: ∂{a,b} = {b} - {a}.
    CHECK(bd[1].at(0, 0) == 2);
    CHECK(bd[1].at(1, 0) == 1);
}

TEST_CASE("boundary squared is zero") {
    const SimplicialComplex k = order_complex(diamond());
    for (Nat p : {2, 3, 5}) {
        const auto bd = boundary_matrices(k, p, 2);
        for (std::size_t j = 1; j + 1 < bd.size(); ++j) CHECK((bd[j] * bd[j + 1]).is_zero());
    }
    CHECK_THROWS_AS(boundary_matrices(k, 4, 1), Error);
}

TEST_CASE("betti numbers of cones and point clouds") {
    CHECK(betti_numbers(order_complex(chain({"a", "b", "c"})), 2, 2) == std::vector<Nat>{1, 0, 0});
    CHECK(betti_numbers(order_complex(antichain({"a", "b", "c"})), 2, 1) == std::vector<Nat>{3, 0});
}

TEST_CASE("betti numbers of the 4-point circle model") {
    const SimplicialComplex k = order_complex(circle_poset());
    // Oracles: union-find components and E - V + C for the cycle rank.
    CHECK(component_count(k) == 1);
    CHECK(graph_cycle_rank(k) == 1);
    for (Nat p : {2, 3, 5}) {
        const auto betti = betti_numbers(k, p, 2);
        CHECK(betti == std::vector<Nat>{1, 1, 0});
    }
}

TEST_CASE("euler characteristic matches simplex counts") {
    const std::vector<SimplicialComplex> complexes = {
        order_complex(circle_poset()), order_complex(diamond()),
        order_complex(chain({"a", "b", "c", "d"}))};
    for (const auto& k : complexes) {
        const Nat max_degree = std::max<Nat>(k.dim(), 0);
        const auto betti = betti_numbers(k, 2, max_degree);
        Nat chi_betti = 0, chi_cells = 0;
        for (Nat j = 0; j <= max_degree; ++j) {
            const Nat sign = (j % 2 == 0) ? 1 : -1;
            chi_betti += sign * betti[static_cast<std::size_t>(j)];
            chi_cells += sign * static_cast<Nat>(k.simplices_of_dim(j).size());
        }
        CHECK(chi_betti == chi_cells);
    }
}

TEST_CASE("cones over arbitrary complexes are acyclic") {
    const SimplicialComplex point = SimplicialComplex::from_simplices({"apex"}, {});
    const std::vector<SimplicialComplex> bases = {
        order_complex(circle_poset()),
        SimplicialComplex::from_simplices({"x", "y", "z"}, {{"x", "y"}}),
        order_complex(antichain({"u", "v"}))};
    for (const auto& base : bases) {
        const auto betti = betti_numbers(join(point, base), 2, 2);
        CHECK(betti == std::vector<Nat>{1, 0, 0});
    }
}

TEST_CASE("homology is invariant under relabeling") {
    const FinitePoset p = circle_poset();
    const FinitePoset relabeled = poset({"w", "x", "y", "z"},
                                        {{"w", "y"}, {"w", "z"}, {"x", "y"}, {"x", "z"}});
    CHECK(betti_numbers(order_complex(p), 3, 2) == betti_numbers(order_complex(relabeled), 3, 2));
}

TEST_CASE("induced map of the identity is the identity") {
    const SimplicialComplex k = order_complex(circle_poset());
    for (Nat j : {0, 1}) {
        const MatrixFp m = induced_homology_map(SimplicialMap::identity(k), j, 2);
        CHECK(m == MatrixFp::identity(2, j == 0 ? 1 : 1));
    }
}

TEST_CASE("induced map of a point inclusion in degree zero") {
    const SimplicialComplex pt = SimplicialComplex::from_simplices({"a"}, {});
    const SimplicialComplex simplex = order_complex(chain({"a", "b", "c"}));
    const SimplicialMap incl(pt, simplex, {{"a", "a"}});
    CHECK(induced_homology_map(incl, 0, 2) == MatrixFp::identity(2, 1));
}

TEST_CASE("collapsing the circle kills degree one") {
    const SimplicialComplex k = order_complex(circle_poset());
    const SimplicialComplex pt = SimplicialComplex::from_simplices({"z"}, {});
    const SimplicialMap collapse(k, pt, {{"a", "z"}, {"b", "z"}, {"c", "z"}, {"d", "z"}});
    const MatrixFp h1 = induced_homology_map(collapse, 1, 2);
    CHECK(h1.rows() == 0);  // H_1(point) = 0
    CHECK(h1.cols() == 1);  // out of the rank-one H_1 of the circle
}

TEST_CASE("induced maps are functorial") {
    const FinitePoset p = circle_poset();
    const FinitePoset c = chain({"x", "y"});
    const FinitePoset pt = poset({"z"}, {});
    const MonotoneMap f(p, c, {{"a", "x"}, {"b", "x"}, {"c", "y"}, {"d", "y"}});
    const MonotoneMap g(c, pt, {{"x", "z"}, {"y", "z"}});
    for (Nat j : {0, 1}) {
        for (Nat prime : {2, 5}) {
            const MatrixFp lhs = induced_homology_map(induced_simplicial_map(g.compose_after(f)), j, prime);
            const MatrixFp rhs =
                induced_homology_map(induced_simplicial_map(g), j, prime) *
                induced_homology_map(induced_simplicial_map(f), j, prime);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("persistence module of a constant point") {
    const PersistenceModule m = persistence_module_of(constant_diagram(poset({"a"}, {}), 2), 0, 2);
    CHECK(m.dims == std::vector<Nat>{1, 1, 1});
    CHECK(m.step_at(0) == MatrixFp::identity(2, 1));
    CHECK(m.step_at(1) == MatrixFp::identity(2, 1));
}

TEST_CASE("persistence module of a birth") {
    const PersistencePoset x =
        PersistencePoset::create({poset({}, {}), poset({"a"}, {})}, {{}});
    const PersistenceModule m = persistence_module_of(x, 0, 2);
    CHECK(m.dims == std::vector<Nat>{0, 1});
}

TEST_CASE("persistence module of a merge") {
    // Two points at index 0; a chain at index 1 (b maps into the chain).
    const PersistencePoset x = PersistencePoset::create(
        {antichain({"a", "b"}), chain({"a", "b"})}, {{{"a", "a"}, {"b", "b"}}});
    const PersistenceModule m = persistence_module_of(x, 0, 2);
    CHECK(m.dims == std::vector<Nat>{2, 1});
    REQUIRE(m.steps.size() == 1);
    CHECK(m.steps[0].at(0, 0) == 1);
    CHECK(m.steps[0].at(0, 1) == 1);  // the merge step is [1 1]
}

TEST_CASE("modules stay deterministic across recomputation") {
    const PersistencePoset x = constant_diagram(circle_poset(), 2);
    const PersistenceModule a = persistence_module_of(x, 1, 3);
    const PersistenceModule b = persistence_module_of(x, 1, 3);
    CHECK(a.dims == b.dims);
    for (std::size_t i = 0; i < a.steps.size(); ++i) CHECK(a.steps[i] == b.steps[i]);
}
