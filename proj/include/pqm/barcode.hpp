#pragma once

#include <vector>

#include "pqm/common.hpp"
#include "pqm/homology.hpp"

namespace pqm {

// Half-open interval [b, d): alive at indices b..d-1. d == kInf means the
// class survives through the stabilization index and beyond.
struct Interval {
    Nat birth = 0;
    Nat death = kInf;

    bool alive_at(Nat i) const { return birth <= i && (is_inf(death) || i < death); }
    Nat length() const { return is_inf(death) ? kInf : death - birth; }
    bool operator==(const Interval& rhs) const { return birth == rhs.birth && death == rhs.death; }
    bool operator<(const Interval& rhs) const {
        if (birth != rhs.birth) return birth < rhs.birth;
        return death < rhs.death;  // kInf sorts last
    }
};

struct Barcode {
    Nat stabilization = 0;
    std::vector<Interval> intervals;  // kept sorted (multiset order)

    Nat count_alive(Nat i) const;
    bool operator==(const Barcode& rhs) const {
        return stabilization == rhs.stabilization && intervals == rhs.intervals;
    }
};

// Rank over F_p of the composite step matrix from index i to j (clamped to T).
Nat rank_invariant(const PersistenceModule& m, Nat i, Nat j);

// Interval decomposition by inclusion–exclusion on the rank invariant.
Barcode interval_decomposition(const PersistenceModule& m);

// Direct sum of interval modules realizing the barcode, bars in sorted order.
PersistenceModule barcode_module(const Barcode& bc, Nat p);

// The module of *^i in the given degree: [i, inf) for degree 0, zero otherwise.
PersistenceModule point_module(Nat threshold, Nat degree, Nat t_index, Nat p = 2);

// Integer bottleneck distance: min over partial matchings of the max cost,
// where a matched pair costs max(|b-b'|, |d-d'|) (inf-inf = 0, inf vs finite
// = inf) and an unmatched bar costs ceil((d-b)/2) (inf when d = inf).
Nat bottleneck_distance(const Barcode& a, const Barcode& b);

// Least ε admitting an ε-interleaving, computed as the bottleneck distance
// of the interval decompositions (validated against the brute-force oracle).
Nat min_interleaving_eps(const PersistenceModule& m, const PersistenceModule& n);

struct BruteForceCaps {
    Nat total_dim = 6;
    Nat max_stabilization = 5;
    Nat max_prime = 5;
    // Guard on the enumeration budget p^dim of the smaller morphism space.
    double max_candidates = 1 << 26;
};

// Exhaustively decides whether an ε-interleaving between M and N exists by
// enumerating one natural family and solving linearly for the other.
bool brute_force_interleaving_check(const PersistenceModule& m, const PersistenceModule& n, Nat eps,
                                    const BruteForceCaps& caps = BruteForceCaps{});

struct AcyclicityResult {
    Nat value = 0;           // kInf for empty input
    bool empty_input = false;
};

// Max over degrees j <= max_degree of the distance between H_j(X) and the
// point module at trh(X). Empty X gets kInf with the empty_input flag set.
AcyclicityResult acyclicity_measure(const PersistencePoset& x, Nat p, Nat max_degree);

}  // namespace pqm
