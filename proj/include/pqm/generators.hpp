#pragma once

#include "pqm/common.hpp"
#include "pqm/persistence.hpp"

namespace pqm {

// Desk-scale caps shared by every generator.
struct GeneratorCaps {
    Nat max_elements = 64;
    Nat max_stabilization = 8;
    Nat max_block = 8;
    Nat max_delay = 8;
};

struct RandomFiltrationParams {
    std::uint64_t seed = 0;
    Nat n = 5;            // elements of the stable poset
    Nat t_index = 3;      // stabilization index
    double edge_prob = 0.35;
};

// A random partial order on n elements, each born at a uniform index;
// structure maps are inclusions, so the result is always a finite-type
// filtration.
PersistencePoset generate_random_filtration(const RandomFiltrationParams& params,
                                            const GeneratorCaps& caps = GeneratorCaps{});

struct FiberedMapParams {
    std::uint64_t seed = 0;
    Nat target_n = 3;     // |Q|
    Nat t_index = 3;
    Nat max_block = 3;    // block size cap (apex + pendants)
    Nat delay = 0;        // pendants attach up to `delay` indices late
    double edge_prob = 0.35;
};

// Builds a random filtration Q, then replaces each point of Q by a
// cone-shaped block in P (an apex mirroring Q plus pendant elements below
// every apex above their block). With delay 0 every fiber has an index-wise
// maximum, so every ε_v is 0; pendants attached late produce transient
// components of length <= delay, so ε_v <= delay and fibers stay non-empty.
PersistencePosetMap generate_fibered_map(const FiberedMapParams& params,
                                         const GeneratorCaps& caps = GeneratorCaps{});

struct ConeCollapseParams {
    std::uint64_t seed = 0;
    Nat n = 5;
    Nat t_index = 3;
    double edge_prob = 0.35;
};

// The identity map on a random filtration: every fiber is a principal lower
// set with its point as maximum, so every point is 0-reducible.
PersistencePosetMap generate_cone_collapse(const ConeCollapseParams& params,
                                           const GeneratorCaps& caps = GeneratorCaps{});

}  // namespace pqm
