#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "pqm/common.hpp"
#include "pqm/poset.hpp"

namespace pqm {

// A finite-type N-indexed diagram of finite posets: posets P_0..P_T with
// monotone steps between consecutive indices. Indices beyond T denote P_T
// with identity steps.
class PersistencePoset {
public:
    PersistencePoset() : posets_(1) {}

    static PersistencePoset create(std::vector<FinitePoset> posets,
                                   const std::vector<std::unordered_map<std::string, std::string>>& steps);
    static PersistencePoset constant(const FinitePoset& p, Nat t_index);

    Nat stabilization() const { return static_cast<Nat>(posets_.size()) - 1; }
    const FinitePoset& poset_at(Nat i) const;
    MonotoneMap step_at(Nat i) const;  // identity beyond T
    const std::vector<FinitePoset>& posets() const { return posets_; }
    const std::vector<MonotoneMap>& steps() const { return steps_; }

    bool is_filtration() const;
    Nat threshold() const;    // kInf when every index is empty
    Nat cardinality() const;  // max |P_i|

    // Image of an element of P_i at index j >= i under the composed steps.
    std::string track_forward(const std::string& name, Nat i, Nat j) const;
    // Composite structure map assignment from index i to index j (fold of steps).
    std::unordered_map<std::string, std::string> composite_assignment(Nat i, Nat j) const;

    PersistencePoset extended_to(Nat t_index) const;
    PersistencePoset dualized() const;
    // Reindexed diagram Y with Y_i = X_{i+shift}.
    PersistencePoset shifted(Nat shift) const;

    bool operator==(const PersistencePoset& rhs) const {
        return posets_ == rhs.posets_ && steps_ == rhs.steps_;
    }
    bool operator!=(const PersistencePoset& rhs) const { return !(*this == rhs); }

private:
    std::vector<FinitePoset> posets_;  // P_0..P_T
    std::vector<MonotoneMap> steps_;   // σ_0..σ_{T-1}
};

// A one-element-per-index persistence subspace: empty before `threshold`,
// a single tracked element from there on, with singleton preimages.
struct PersistencePoint {
    Nat threshold = 0;
    std::vector<std::string> track;  // element at indices threshold..T

    const std::string& at(Nat i) const { return track[static_cast<std::size_t>(i - threshold)]; }
    bool alive_at(Nat i) const { return i >= threshold; }
    const std::string& name_at_stabilization() const { return track.back(); }
};

// Builds the point through (t, element of X_t); verifies the preimage
// condition. Throws NotAPersistencePoint when the conditions fail.
PersistencePoint make_persistence_point(const PersistencePoset& x, Nat t, const std::string& name);
bool is_persistence_point(const PersistencePoset& x, const PersistencePoint& v);

// One point per element of the stable poset of a filtration, in canonical
// element order. Throws NotAFiltration otherwise.
std::vector<PersistencePoint> enumerate_persistence_points(const PersistencePoset& q);

PersistencePoset remove_persistence_point(const PersistencePoset& x, const PersistencePoint& v);

// Index-wise principal set of a persistence point, as a persistence subposet.
PersistencePoset principal_persistence_set(const PersistencePoset& x, const PersistencePoint& v,
                                           Side side, bool strict);

// A strictly commuting family of monotone maps between two persistence posets.
class PersistencePosetMap {
public:
    PersistencePosetMap() = default;

    // `components[i]` assigns source elements at index i to target elements,
    // for i = 0..max(T_source, T_target).
    static PersistencePosetMap create(PersistencePoset source, PersistencePoset target,
                                      const std::vector<std::unordered_map<std::string, std::string>>& components);
    static PersistencePosetMap identity(const PersistencePoset& x);

    const PersistencePoset& source() const { return source_; }
    const PersistencePoset& target() const { return target_; }
    Nat stabilization() const { return static_cast<Nat>(components_.size()) - 1; }
    const MonotoneMap& component_at(Nat i) const;

    PersistencePosetMap dualized() const;

private:
    PersistencePoset source_, target_;
    std::vector<MonotoneMap> components_;
};

// Index-wise preimage of the principal set of v under f, as a persistence
// subposet of the source. Empty at indices where v is not yet alive.
PersistencePoset persistence_fiber(const PersistencePosetMap& f, const PersistencePoint& v, Side side);

struct PersistenceMappingCylinder {
    PersistencePoset cylinder;
    PersistencePosetMap include_source;
    PersistencePosetMap include_target;
    PersistencePosetMap retraction;
    std::string tag_suffix;
};

// Index-wise mapping cylinders with the induced steps; the retraction is a
// strict map onto the target, restricting to the identity on the target part.
PersistenceMappingCylinder persistence_mapping_cylinder(const PersistencePosetMap& f);

}  // namespace pqm
