#include "pqm/reduction.hpp"

#include <algorithm>

namespace pqm {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::HypothesisFailed: return "hypothesis-failed";
    }
    return "unknown";
}

Nat reducibility_measure(const PersistencePoset& x, const PersistencePoint& v, Side side,
                         Nat p, Nat max_degree) {
    const PersistencePoset strict = principal_persistence_set(x, v, side, true);
    return acyclicity_measure(strict, p, max_degree).value;
}

namespace {

// Linear extension of the stable poset, minimal-first, ties by element id.
std::vector<std::string> minimal_first_order(const FinitePoset& p) {
    std::vector<std::string> remaining = p.elements();
    std::vector<std::string> order;
    while (!remaining.empty()) {
        std::vector<std::string> minimal;
        for (const auto& a : remaining) {
            bool is_min = true;
            for (const auto& b : remaining)
                if (b != a && p.leq(b, a)) { is_min = false; break; }
            if (is_min) minimal.push_back(a);
        }
        const std::string pick = *std::min_element(minimal.begin(), minimal.end());
        order.push_back(pick);
        remaining.erase(std::find(remaining.begin(), remaining.end(), pick));
    }
    return order;
}

Nat add_or_inf(Nat a, Nat b) {
    if (is_inf(a) || is_inf(b)) return kInf;
    return a + b;
}

Nat mul_or_inf(Nat a, Nat b) {
    if (a == 0 || b == 0) return 0;
    if (is_inf(a) || is_inf(b)) return kInf;
    return a * b;
}

}  // namespace

ReductionLedger reduction_schedule_with_snapshots(const PersistencePosetMap& f, Side side, Nat p,
                                                  Nat max_degree,
                                                  std::vector<PersistencePoset>* snapshots) {
    require_prime(p);
    if (!f.target().is_filtration())
        throw Error(ErrorKind::TargetNotFiltration, "the reduction schedule needs a filtration target");

    // The upper side is the lower-side schedule on the order-dual instance:
    // minimal points of the dual are maximal points of the original, fibers
    // swap principal sides, and order complexes (hence all ε values and
    // distances) are unchanged by dualization.
    const PersistencePosetMap work = (side == Side::Upper) ? f.dualized() : f;

    ReductionLedger ledger;
    ledger.side = side;
    ledger.prime = p;
    ledger.max_degree = max_degree;
    ledger.target_cardinality = work.target().cardinality();

    const PersistenceMappingCylinder cyl = persistence_mapping_cylinder(work);
    PersistencePoset current = cyl.cylinder;
    if (snapshots) snapshots->push_back(current);

    const FinitePoset& stable = work.target().poset_at(work.target().stabilization());
    const std::vector<std::string> order = minimal_first_order(stable);
    std::unordered_map<std::string, PersistencePoint> points;
    for (auto& pt : enumerate_persistence_points(work.target()))
        points.emplace(pt.name_at_stabilization(), std::move(pt));

    for (const auto& name : order) {
        const PersistencePoint& point_q = points.at(name);
        const PersistencePoset fiber = persistence_fiber(work, point_q, Side::Lower);

        LedgerEntry entry;
        entry.point = name;
        entry.threshold = point_q.threshold;
        for (Nat i = 0; i <= fiber.stabilization(); ++i)
            entry.fiber_sizes.push_back(fiber.poset_at(i).size());
        entry.eps = acyclicity_measure(fiber, p, max_degree).value;
        ledger.entries.push_back(entry);

        // Tagged copy of the point inside the running cylinder.
        PersistencePoint tagged;
        tagged.threshold = point_q.threshold;
        for (const auto& n : point_q.track) tagged.track.push_back(n + cyl.tag_suffix);
        // Extend the track up to the cylinder's stabilization index.
        while (static_cast<Nat>(tagged.track.size()) <
               current.stabilization() - tagged.threshold + 1)
            tagged.track.push_back(tagged.track.back());

        // At removal time the strict principal set of the tagged point in the
        // running cylinder must agree with the fiber on the source part.
        const PersistencePoset strict =
            principal_persistence_set(current, tagged, Side::Lower, true);
        if (strict != fiber)
            throw Error(ErrorKind::ValidationError,
                        "strict lower set of '" + name + "' in the cylinder does not match its fiber");

        current = remove_persistence_point(current, tagged);
        if (snapshots) snapshots->push_back(current);
    }

    if (current != work.source())
        throw Error(ErrorKind::ValidationError, "residual diagram differs from the source");

    ledger.eps_max = 0;
    Nat sum_eps = 0;
    for (const auto& entry : ledger.entries) {
        ledger.eps_max = std::max(ledger.eps_max, entry.eps);
        sum_eps = add_or_inf(sum_eps, entry.eps);
        if (is_inf(entry.eps)) ledger.hypothesis_ok = false;
    }
    ledger.sum2eps = mul_or_inf(2, sum_eps);
    ledger.bound_main = mul_or_inf(2, mul_or_inf(ledger.eps_max, ledger.target_cardinality));
    ledger.bound_prior = mul_or_inf(2, ledger.bound_main);

    const std::vector<PersistenceModule> source_modules =
        persistence_modules_upto(f.source(), max_degree, p);
    const std::vector<PersistenceModule> target_modules =
        persistence_modules_upto(f.target(), max_degree, p);
    for (Nat j = 0; j <= max_degree; ++j)
        ledger.measured.push_back(min_interleaving_eps(source_modules[static_cast<std::size_t>(j)],
                                                       target_modules[static_cast<std::size_t>(j)]));
    return ledger;
}

ReductionLedger reduction_schedule(const PersistencePosetMap& f, Side side, Nat p, Nat max_degree) {
    return reduction_schedule_with_snapshots(f, side, p, max_degree, nullptr);
}

StepCheck verify_step_bound(const PersistencePoset& before, const PersistencePoset& after, Nat eps_v,
                            Nat p, Nat max_degree) {
    // `after` must be `before` minus exactly one persistence point.
    if (before.stabilization() != after.stabilization())
        throw Error(ErrorKind::ShapeMismatch, "diagrams have different stabilization indices");
    const Nat big_t = before.stabilization();
    Nat birth = kInf;
    std::vector<std::string> missing;
    for (Nat i = 0; i <= big_t; ++i) {
        std::vector<std::string> diff;
        for (const auto& name : before.poset_at(i).elements())
            if (!after.poset_at(i).contains(name)) diff.push_back(name);
        if (diff.size() > 1)
            throw Error(ErrorKind::ShapeMismatch, "more than one element removed at index " + std::to_string(i));
        if (!diff.empty()) {
            if (is_inf(birth)) birth = i;
            missing.push_back(diff.front());
        } else if (!is_inf(birth)) {
            throw Error(ErrorKind::ShapeMismatch, "removed track has a gap at index " + std::to_string(i));
        }
    }
    if (is_inf(birth)) throw Error(ErrorKind::ShapeMismatch, "no element was removed");
    PersistencePoint v;
    v.threshold = birth;
    v.track = missing;
    if (remove_persistence_point(before, v) != after)
        throw Error(ErrorKind::ShapeMismatch, "removal residue does not match the given diagram");

    StepCheck check;
    check.point = missing.front();
    check.eps = eps_v;
    const std::vector<PersistenceModule> before_modules = persistence_modules_upto(before, max_degree, p);
    const std::vector<PersistenceModule> after_modules = persistence_modules_upto(after, max_degree, p);
    const Nat allowed = mul_or_inf(2, eps_v);
    for (Nat j = 0; j <= max_degree; ++j) {
        const Nat d = min_interleaving_eps(before_modules[static_cast<std::size_t>(j)],
                                           after_modules[static_cast<std::size_t>(j)]);
        check.distances.push_back(d);
        if (d > allowed) check.ok = false;
    }
    return check;
}

bool cylinder_equivalence_check(const PersistencePosetMap& f, Nat p, Nat max_degree) {
    const PersistenceMappingCylinder cyl = persistence_mapping_cylinder(f);
    const std::vector<PersistenceModule> cyl_modules =
        persistence_modules_upto(cyl.cylinder, max_degree, p);
    const std::vector<PersistenceModule> target_modules =
        persistence_modules_upto(f.target(), max_degree, p);
    const Nat big_t = cyl.cylinder.stabilization();
    for (Nat j = 0; j <= max_degree; ++j) {
        const Barcode a = interval_decomposition(
            cyl_modules[static_cast<std::size_t>(j)].extended_to(big_t));
        const Barcode b = interval_decomposition(
            target_modules[static_cast<std::size_t>(j)].extended_to(big_t));
        if (!(a == b)) return false;
    }
    return true;
}

VerdictReport verify_main_bound(const PersistencePosetMap& f, Side side, Nat p, Nat max_degree,
                                bool verify_steps) {
    VerdictReport report;
    std::vector<PersistencePoset> snapshots;
    report.ledger = reduction_schedule_with_snapshots(f, side, p, max_degree,
                                                      verify_steps ? &snapshots : nullptr);
    report.cylinder_ok = cylinder_equivalence_check(f, p, max_degree);

    bool steps_ok = true;
    if (verify_steps) {
        report.steps_checked = true;
        for (std::size_t k = 0; k + 1 < snapshots.size(); ++k) {
            StepCheck check = verify_step_bound(snapshots[k], snapshots[k + 1],
                                                report.ledger.entries[k].eps, p, max_degree);
            check.point = report.ledger.entries[k].point;
            steps_ok = steps_ok && check.ok;
            report.steps.push_back(std::move(check));
        }
    }

    if (!report.ledger.hypothesis_ok) {
        report.verdict = Verdict::HypothesisFailed;
        return report;
    }
    bool measured_ok = true;
    for (Nat d : report.ledger.measured)
        if (d > report.ledger.bound_main) measured_ok = false;
    report.verdict = (measured_ok && steps_ok && report.cylinder_ok) ? Verdict::Pass : Verdict::Fail;
    return report;
}

}  // namespace pqm
