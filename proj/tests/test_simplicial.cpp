#include <doctest.h>

#include "helpers.hpp"
#include "pqm/simplicial.hpp"

using namespace pqm;
using namespace pqm::testing;

namespace {

SimplicialComplex four_cycle() {
    // a-b-c-d-a
    return SimplicialComplex::from_simplices(
        {"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"a", "d"}});
}

}  // namespace

TEST_CASE("order complex of a chain is a full simplex") {
    for (Nat n : {1, 2, 3, 4, 5}) {
        std::vector<std::string> names;
        for (Nat i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
        const SimplicialComplex k = order_complex(chain(names));
        CHECK(k.simplex_count() == (Nat(1) << n) - 1);
        CHECK(k.dim() + 1 == n);
    }
}

TEST_CASE("order complex of an antichain is a point cloud") {
    const SimplicialComplex k = order_complex(antichain({"a", "b", "c"}));
    CHECK(k.simplex_count() == 3);
    CHECK(k.dim() == 0);
}

TEST_CASE("order complex enumerates chains") {
    // a<c, b<c gives the path a-c-b.
    const SimplicialComplex k = order_complex(poset({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}));
    CHECK(k.simplex_count() == 5);
    CHECK(k.has_simplex({0, 2}));  // {a, c}
    CHECK(k.has_simplex({1, 2}));  // {b, c}
    CHECK_FALSE(k.has_simplex({0, 1}));
}

TEST_CASE("order complex dimension matches the longest chain") {
    const FinitePoset p = diamond();
    const SimplicialComplex k = order_complex(p);
    CHECK(k.dim() + 1 == 3);  // a < b < d
}

TEST_CASE("order complex dimension cap") {
    const SimplicialComplex k = order_complex(chain({"a", "b", "c", "d", "e"}), 1);
    CHECK(k.dim() == 1);
    CHECK(static_cast<Nat>(k.simplices_of_dim(1).size()) == 10);  // all pairs of a 5-chain
}

TEST_CASE("induced simplicial maps") {
    const FinitePoset c = chain({"a", "b"});
    const SimplicialMap id = induced_simplicial_map(MonotoneMap::identity(c));
    CHECK(id == SimplicialMap::identity(order_complex(c)));

    const FinitePoset pt = poset({"z"}, {});
    const SimplicialMap collapse =
        induced_simplicial_map(MonotoneMap(c, pt, {{"a", "z"}, {"b", "z"}}));
    CHECK(collapse.image({0, 1}) == Simplex{0});  // edge to vertex
}

TEST_CASE("join of two points is an edge") {
    const SimplicialComplex pt1 = SimplicialComplex::from_simplices({"x"}, {});
    const SimplicialComplex pt2 = SimplicialComplex::from_simplices({"y"}, {});
    const SimplicialComplex e = join(pt1, pt2);
    CHECK(e.simplex_count() == 3);
    CHECK(e.dim() == 1);
}

TEST_CASE("join with a point cones off every simplex") {
    const SimplicialComplex pt = SimplicialComplex::from_simplices({"apex"}, {});
    const SimplicialComplex l = four_cycle();
    const SimplicialComplex cone = join(pt, l);
    CHECK(cone.simplex_count() == (l.simplex_count() + 1) * 2 - 1);
    CHECK(cone.has_simplex({0, 1, 2}));  // apex, a, b
}

TEST_CASE("join of two 2-point antichains is the 4-cycle") {
    const SimplicialComplex s0a = SimplicialComplex::from_simplices({"a", "c"}, {});
    const SimplicialComplex s0b = SimplicialComplex::from_simplices({"b", "d"}, {});
    const SimplicialComplex j = join(s0a, s0b);
    // Oracle: enumerate the unions by hand: 4 vertices + 4 edges.
    CHECK(j.vertex_count() == 4);
    CHECK(static_cast<Nat>(j.simplices_of_dim(1).size()) == 4);
    CHECK(j.dim() == 1);
    CHECK(graph_cycle_rank(j) == 1);
}

TEST_CASE("join simplex count identity") {
    const SimplicialComplex k = order_complex(chain({"a", "b"}));
    const SimplicialComplex l = four_cycle();
    const SimplicialComplex j = join(k, l);
    CHECK(j.simplex_count() == (k.simplex_count() + 1) * (l.simplex_count() + 1) - 1);
}

TEST_CASE("star and link in a full triangle") {
    const SimplicialComplex k = order_complex(chain({"a", "b", "c"}));
    const StarLink sl = star_link(k, "a");
    CHECK(sl.star == k);
    CHECK(sl.link == order_complex(chain({"b", "c"})));
}

TEST_CASE("star and link of an isolated vertex") {
    const SimplicialComplex k = SimplicialComplex::from_simplices({"v", "w"}, {});
    const StarLink sl = star_link(k, "v");
    CHECK(sl.star.simplex_count() == 1);
    CHECK(sl.star.has_vertex("v"));
    CHECK(sl.link.vertex_count() == 0);
    CHECK(sl.link.simplex_count() == 0);
}

TEST_CASE("star and link in the 4-cycle") {
    const StarLink sl = star_link(four_cycle(), "a");
    CHECK(sl.link.vertex_count() == 2);
    CHECK(sl.link.simplices_of_dim(1).empty());
    CHECK(sl.link.has_vertex("b"));
    CHECK(sl.link.has_vertex("d"));
    CHECK(static_cast<Nat>(sl.star.simplices_of_dim(1).size()) == 2);
}

TEST_CASE("star equals link joined with the vertex") {
    auto name_sets = [](const SimplicialComplex& k) {
        std::set<std::vector<std::string>> out;
        for (const auto& s : k.simplices()) {
            std::vector<std::string> names = k.simplex_names(s);
            std::sort(names.begin(), names.end());
            out.insert(names);
        }
        return out;
    };
    const SimplicialComplex k = four_cycle();
    for (const auto& v : k.vertices()) {
        const StarLink sl = star_link(k, v);
        const SimplicialComplex vertex = SimplicialComplex::from_simplices({v}, {});
        const SimplicialComplex joined = join(sl.link, vertex);
        CHECK(name_sets(joined) == name_sets(sl.star));
    }
    CHECK_THROWS_AS(star_link(k, "nope"), Error);
}

TEST_CASE("contiguity predicate") {
    const SimplicialComplex edge = order_complex(chain({"a", "b"}));
    const SimplicialComplex triangle = order_complex(chain({"a", "b", "c"}));
    const SimplicialMap incl(edge, triangle, {{"a", "a"}, {"b", "b"}});
    const SimplicialMap shifted(edge, triangle, {{"a", "a"}, {"b", "c"}});
    CHECK(is_contiguous(incl, incl));
    CHECK(is_contiguous(incl, shifted));

    const SimplicialComplex cycle = four_cycle();
    const SimplicialMap id = SimplicialMap::identity(cycle);
    const SimplicialMap antipodal(cycle, cycle, {{"a", "c"}, {"b", "d"}, {"c", "a"}, {"d", "b"}});
    CHECK_FALSE(is_contiguous(id, antipodal));  // {a, c} is not a simplex

    CHECK_THROWS_AS(is_contiguous(incl, id), Error);
}

TEST_CASE("order complex functoriality") {
    const FinitePoset p = diamond();
    const FinitePoset c = chain({"x", "y"});
    const FinitePoset pt = poset({"z"}, {});
    const MonotoneMap f(p, c, {{"a", "x"}, {"b", "y"}, {"c", "y"}, {"d", "y"}});
    const MonotoneMap g(c, pt, {{"x", "z"}, {"y", "z"}});
    const SimplicialMap lhs = induced_simplicial_map(g.compose_after(f));
    const SimplicialMap rhs = induced_simplicial_map(g).compose_after(induced_simplicial_map(f));
    CHECK(lhs == rhs);
}
