#include <doctest.h>

#include "helpers.hpp"
#include "pqm/barcode.hpp"

using namespace pqm;
using namespace pqm::testing;

namespace {

// Least ε accepted by the exhaustive oracle; scans 0..cap.
Nat oracle_least_eps(const PersistenceModule& m, const PersistenceModule& n, Nat cap) {
    for (Nat eps = 0; eps <= cap; ++eps)
        if (brute_force_interleaving_check(m, n, eps)) return eps;
    return kInf;
}

PersistenceModule random_module(Rng& rng, Nat p, Nat max_t, Nat max_dim) {
    const Nat big_t = rng.range(0, max_t);
    std::vector<Nat> dims;
    for (Nat i = 0; i <= big_t; ++i) dims.push_back(rng.range(0, max_dim));
    std::vector<MatrixFp> steps;
    for (Nat i = 0; i < big_t; ++i) {
        MatrixFp step(p, dims[static_cast<std::size_t>(i + 1)], dims[static_cast<std::size_t>(i)]);
        for (Nat r = 0; r < step.rows(); ++r)
            for (Nat c = 0; c < step.cols(); ++c)
                step.set(r, c, static_cast<Nat>(rng.below(static_cast<std::uint64_t>(p))));
        steps.push_back(std::move(step));
    }
    return PersistenceModule::validate(p, std::move(dims), std::move(steps));
}

}  // namespace

TEST_CASE("rank invariant basics") {
    const PersistenceModule m = bars(2, {{0, kInf}, {1, 2}});
    CHECK(rank_invariant(m, 0, 0) == 1);
    CHECK(rank_invariant(m, 1, 1) == 2);
    CHECK(rank_invariant(m, 1, 2) == 1);
    CHECK(rank_invariant(m, 0, 9) == 1);  // clamps to T
}

TEST_CASE("rank of a zero step") {
    PersistenceModule m;
    m.p = 2;
    m.dims = {1, 1};
    m.steps = {MatrixFp(2, 1, 1)};
    CHECK(rank_invariant(m, 0, 1) == 0);
    CHECK(rank_invariant(m, 0, 0) == 1);
}

TEST_CASE("rank through dims (1,2,1)") {
    // steps [1;0] then [1 1] over F_2
    MatrixFp up(2, 2, 1);
    up.set(0, 0, 1);
    MatrixFp down(2, 1, 2);
    down.set(0, 0, 1);
    down.set(0, 1, 1);
    const PersistenceModule m = PersistenceModule::validate(2, {1, 2, 1}, {up, down});
    CHECK(rank_invariant(m, 0, 2) == 1);
    // Decomposition via the rank table: {[0, inf), [1, 2)}.
    const Barcode bc = interval_decomposition(m);
    CHECK(bc == barcode_of(2, {{0, kInf}, {1, 2}}));
}

TEST_CASE("decomposition of identity and spike modules") {
    const PersistenceModule id_mod = bars(3, {{0, kInf}});
    CHECK(interval_decomposition(id_mod) == barcode_of(3, {{0, kInf}}));

    PersistenceModule spike;
    spike.p = 2;
    spike.dims = {0, 1, 0};
    spike.steps = {MatrixFp(2, 1, 0), MatrixFp(2, 0, 1)};
    CHECK(interval_decomposition(spike) == barcode_of(2, {{1, 2}}));
}

TEST_CASE("barcode reconstruction identity on random modules") {
    Rng rng(20240831);
    for (int trial = 0; trial < 120; ++trial) {
        const Nat p = (trial % 3 == 0) ? 3 : 2;
        const PersistenceModule m = random_module(rng, p, 4, 3);
        const Barcode bc = interval_decomposition(m);
        for (Nat i = 0; i <= m.stabilization(); ++i) {
            CHECK(bc.count_alive(i) == m.dim_at(i));
            for (Nat j = i; j <= m.stabilization(); ++j) {
                Nat through = 0;
                for (const auto& bar : bc.intervals)
                    if (bar.birth <= i && (is_inf(bar.death) || j < bar.death)) ++through;
                CHECK(rank_invariant(m, i, j) == through);
            }
        }
    }
}

TEST_CASE("barcode module realizes its barcode") {
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const PersistenceModule m = random_module(rng, 2, 4, 3);
        const Barcode bc = interval_decomposition(m);
        CHECK(interval_decomposition(barcode_module(bc, 2)) == bc);
    }
}

TEST_CASE("point modules") {
    const PersistenceModule p00 = point_module(0, 0, 3);
    CHECK(p00.dims == std::vector<Nat>{1, 1, 1, 1});
    CHECK(p00.step_at(1) == MatrixFp::identity(2, 1));

    const PersistenceModule p20 = point_module(2, 0, 3);
    CHECK(p20.dims == std::vector<Nat>{0, 0, 1, 1});

    const PersistenceModule p11 = point_module(1, 1, 3);
    CHECK(p11.dims == std::vector<Nat>{0, 0, 0, 0});
}

TEST_CASE("bottleneck distance of equal barcodes is zero") {
    const Barcode a = barcode_of(4, {{0, 2}, {1, kInf}});
    CHECK(bottleneck_distance(a, a) == 0);
}

TEST_CASE("bottleneck distance prefers matching over deletion") {
    // Oracle: brute force over ε ∈ {0, 1, 2} via the interleaving check.
    BruteForceCaps caps;
    caps.max_stabilization = 8;
    const PersistenceModule m = bars(7, {{0, 5}});
    const PersistenceModule n = bars(7, {{2, 7}});
    CHECK_FALSE(brute_force_interleaving_check(m, n, 0, caps));
    CHECK_FALSE(brute_force_interleaving_check(m, n, 1, caps));
    CHECK(brute_force_interleaving_check(m, n, 2, caps));
    CHECK(bottleneck_distance(barcode_of(7, {{0, 5}}), barcode_of(7, {{2, 7}})) == 2);
}

TEST_CASE("bottleneck deletion cost") {
    CHECK(bottleneck_distance(barcode_of(1, {{0, 1}}), barcode_of(1, {})) == 1);
    CHECK(bottleneck_distance(barcode_of(4, {{0, 3}}), barcode_of(4, {})) == 2);
    CHECK(is_inf(bottleneck_distance(barcode_of(4, {{0, kInf}}), barcode_of(4, {}))));
}

TEST_CASE("bottleneck matches infinite bars by birth") {
    CHECK(bottleneck_distance(barcode_of(4, {{1, kInf}}), barcode_of(4, {{3, kInf}})) == 2);
}

TEST_CASE("bottleneck is a pseudometric") {
    Rng rng(99);
    auto random_barcode = [&](Nat big_t) {
        Barcode bc;
        bc.stabilization = big_t;
        const Nat count = rng.range(0, 3);
        for (Nat k = 0; k < count; ++k) {
            const Nat b = rng.range(0, big_t);
            Nat d = rng.range(b + 1, big_t + 1);
            if (d > big_t) d = kInf;
            bc.intervals.push_back({b, d});
        }
        std::sort(bc.intervals.begin(), bc.intervals.end());
        return bc;
    };
    for (int trial = 0; trial < 60; ++trial) {
        const Barcode a = random_barcode(4), b = random_barcode(4), c = random_barcode(4);
        const Nat ab = bottleneck_distance(a, b);
        const Nat ba = bottleneck_distance(b, a);
        CHECK(ab == ba);
        CHECK(bottleneck_distance(a, a) == 0);
        const Nat ac = bottleneck_distance(a, c);
        const Nat cb = bottleneck_distance(c, b);
        if (!is_inf(ac) && !is_inf(cb)) CHECK(ab <= ac + cb);
    }
}

TEST_CASE("min interleaving eps examples") {
    CHECK(min_interleaving_eps(bars(3, {{0, kInf}}), bars(3, {{0, kInf}})) == 0);
    CHECK(min_interleaving_eps(bars(3, {{0, 3}}), bars(3, {})) == 2);
    CHECK(min_interleaving_eps(point_module(1, 0, 4), point_module(3, 0, 4)) == 2);
    // Modules with different stabilization indices extend transparently.
    CHECK(min_interleaving_eps(bars(1, {{0, kInf}}), bars(4, {{0, kInf}})) == 0);
}

TEST_CASE("brute force base cases") {
    const PersistenceModule m = bars(3, {{0, 2}, {1, kInf}});
    CHECK(brute_force_interleaving_check(m, m, 0));
    const PersistenceModule unit = bars(1, {{0, 1}});
    const PersistenceModule zero = bars(1, {});
    CHECK_FALSE(brute_force_interleaving_check(unit, zero, 0));
    CHECK(brute_force_interleaving_check(unit, zero, 1));
}

TEST_CASE("brute force respects caps") {
    const PersistenceModule big = bars(3, {{0, kInf}, {0, kInf}, {0, kInf}, {0, kInf}});
    CHECK_THROWS_AS(brute_force_interleaving_check(big, big, 0), Error);
    PersistenceModule long_mod = bars(6, {{0, 1}});
    CHECK_THROWS_AS(brute_force_interleaving_check(long_mod, long_mod, 0), Error);
}

TEST_CASE("oracle agreement on seeded random pairs") {
    Rng rng(424242);
    int checked = 0;
    while (checked < 25) {
        const PersistenceModule m = random_module(rng, 2, 3, 2);
        const PersistenceModule n = random_module(rng, 2, 3, 2);
        if (m.total_dim() > 6 || n.total_dim() > 6) continue;
        ++checked;
        const Nat claimed = min_interleaving_eps(m, n);
        const Nat cap = std::max(m.stabilization(), n.stabilization()) + 6;
        CHECK(oracle_least_eps(m, n, cap) == claimed);
    }
}

TEST_CASE("acyclicity of a bare point diagram is zero") {
    for (Nat birth : {0, 1, 2}) {
        std::vector<FinitePoset> posets;
        std::vector<std::unordered_map<std::string, std::string>> steps;
        for (Nat i = 0; i <= 2; ++i)
            posets.push_back(i >= birth ? poset({"x"}, {}) : poset({}, {}));
        for (Nat i = 0; i < 2; ++i) {
            std::unordered_map<std::string, std::string> step;
            if (i >= birth) step.emplace("x", "x");
            steps.push_back(step);
        }
        const PersistencePoset x = PersistencePoset::create(posets, steps);
        const AcyclicityResult r = acyclicity_measure(x, 2, 2);
        CHECK(r.value == 0);
        CHECK_FALSE(r.empty_input);
    }
}

TEST_CASE("acyclicity of a delayed merge is one") {
    // Two points at index 0 gain a common upper bound at index 1.
    const PersistencePoset x = PersistencePoset::create(
        {antichain({"x", "y"}),
         poset({"x", "y", "z"}, {{"x", "z"}, {"y", "z"}})},
        {{{"x", "x"}, {"y", "y"}}});
    const PersistenceModule h0 = persistence_module_of(x, 0, 2);
    CHECK(interval_decomposition(h0) == barcode_of(1, {{0, 1}, {0, kInf}}));
    const AcyclicityResult r = acyclicity_measure(x, 2, 2);
    CHECK(r.value == 1);
    // Cross-checked against the exhaustive oracle.
    CHECK_FALSE(brute_force_interleaving_check(h0, point_module(0, 0, 1), 0));
    CHECK(brute_force_interleaving_check(h0, point_module(0, 0, 1), 1));
}

TEST_CASE("acyclicity of the empty diagram is inf with a flag") {
    const PersistencePoset x = PersistencePoset::create({poset({}, {})}, {});
    const AcyclicityResult r = acyclicity_measure(x, 2, 2);
    CHECK(is_inf(r.value));
    CHECK(r.empty_input);
}

TEST_CASE("functoriality bound for shifted diagrams") {
    const PersistencePoset x = PersistencePoset::create(
        {antichain({"a"}), antichain({"a", "b"}),
         poset({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}})},
        {{{"a", "a"}}, {{"a", "a"}, {"b", "b"}}});
    for (Nat shift : {1, 2}) {
        const PersistencePoset y = x.shifted(shift);
        for (Nat j : {0, 1}) {
            const PersistenceModule mx = persistence_module_of(x, j, 2);
            const PersistenceModule my = persistence_module_of(y, j, 2);
            CHECK(min_interleaving_eps(mx, my) <= shift);
        }
    }
}
