#pragma once

#include <string>
#include <vector>

#include "pqm/barcode.hpp"
#include "pqm/common.hpp"
#include "pqm/persistence.hpp"

namespace pqm {

enum class Verdict { Pass, Fail, HypothesisFailed };

const char* verdict_name(Verdict v);

struct LedgerEntry {
    std::string point;               // element id in the stable target poset
    Nat threshold = 0;               // birth index of the persistence point
    std::vector<Nat> fiber_sizes;    // per index 0..T
    Nat eps = 0;                     // acyclicity measure of the fiber (kInf = empty fiber)
};

// Ordered record of one reduction run: the removal schedule on the mapping
// cylinder with per-point ε costs, the uniform and accumulated bounds, and
// the measured per-degree distances between source and target homology.
struct ReductionLedger {
    Side side = Side::Lower;
    Nat prime = 2;
    Nat max_degree = 2;
    Nat target_cardinality = 0;
    std::vector<LedgerEntry> entries;  // a linear extension of the stable target poset
    Nat eps_max = 0;
    Nat sum2eps = 0;       // 2 * Σ ε_v
    Nat bound_main = 0;    // 2 * ε_max * |Q|
    Nat bound_prior = 0;   // 4 * ε_max * |Q|
    std::vector<Nat> measured;  // d_I(H_j(P), H_j(Q)) for j = 0..max_degree
    bool hypothesis_ok = true;  // false when some fiber is empty (ε_v = inf)
};

struct StepCheck {
    std::string point;
    Nat eps = 0;
    std::vector<Nat> distances;  // d_I(H_j(before), H_j(after)) per degree
    bool ok = true;              // all distances <= 2 ε_v
};

struct VerdictReport {
    ReductionLedger ledger;
    bool cylinder_ok = true;
    std::vector<StepCheck> steps;  // filled when verify_steps
    bool steps_checked = false;
    Verdict verdict = Verdict::Pass;
};

// Acyclicity measure of the strict principal persistence set of v in X.
Nat reducibility_measure(const PersistencePoset& x, const PersistencePoint& v, Side side,
                         Nat p, Nat max_degree);

// Builds the mapping cylinder of f, removes the target's persistence points
// along a linear extension of the stable target poset (minimal-first for the
// lower side, maximal-first for the upper side, ties by element id), scoring
// each removal by the ε-acyclicity of its fiber. The residual diagram is
// asserted equal to the source index-wise.
ReductionLedger reduction_schedule(const PersistencePosetMap& f, Side side, Nat p, Nat max_degree);

// As above, also returning the intermediate cylinders M_0 = M_f, ..., M_k = P
// (dualized diagrams when side == Upper).
ReductionLedger reduction_schedule_with_snapshots(const PersistencePosetMap& f, Side side, Nat p,
                                                  Nat max_degree,
                                                  std::vector<PersistencePoset>* snapshots);

// True iff every per-degree distance between the two diagrams is <= 2 ε_v.
// `after` must be `before` minus one persistence point.
StepCheck verify_step_bound(const PersistencePoset& before, const PersistencePoset& after, Nat eps_v,
                            Nat p, Nat max_degree);

// Barcode multiset equality H_j(M_f) = H_j(target) for every degree <= max_degree.
bool cylinder_equivalence_check(const PersistencePosetMap& f, Nat p, Nat max_degree);

// Full verdict: runs the schedule, checks measured distances against the
// uniform bound, optionally re-checks every removal step, and always checks
// cylinder equivalence.
VerdictReport verify_main_bound(const PersistencePosetMap& f, Side side, Nat p, Nat max_degree,
                                bool verify_steps);

}  // namespace pqm
