#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pqm/common.hpp"

namespace pqm {

enum class Side { Lower, Upper };
enum class Extremal { Minimal, Maximal };

// A finite partial order on named elements, stored reflexively and
// transitively closed so that leq queries are O(1). Element order is the
// input order and fixes every iteration order downstream.
class FinitePoset {
public:
    FinitePoset() = default;

    // Closes `relations` reflexively and transitively; rejects closures that
    // violate antisymmetry (CycleDetected).
    static FinitePoset from_relations(const std::vector<std::string>& elements,
                                      const std::vector<std::pair<std::string, std::string>>& relations);

    Nat size() const { return static_cast<Nat>(elements_.size()); }
    bool empty() const { return elements_.empty(); }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::string& element(Nat i) const { return elements_[static_cast<std::size_t>(i)]; }

    bool contains(const std::string& name) const { return index_.count(name) > 0; }
    Nat index_of(const std::string& name) const;

    bool leq(Nat a, Nat b) const { return leq_[static_cast<std::size_t>(a * size() + b)] != 0; }
    bool leq(const std::string& a, const std::string& b) const { return leq(index_of(a), index_of(b)); }

    // All ordered pairs (a, b) with a <= b, a != b, in canonical order.
    std::vector<std::pair<std::string, std::string>> strict_pairs() const;
    // Covering pairs (the Hasse diagram), in canonical order.
    std::vector<std::pair<std::string, std::string>> cover_pairs() const;

    std::vector<std::string> principal_set(const std::string& v, Side side, bool strict) const;
    std::vector<std::string> extremal_elements(Extremal which) const;
    FinitePoset induced(const std::vector<std::string>& subset) const;
    FinitePoset dual() const;

    bool operator==(const FinitePoset& rhs) const { return elements_ == rhs.elements_ && leq_ == rhs.leq_; }
    bool operator!=(const FinitePoset& rhs) const { return !(*this == rhs); }

private:
    std::vector<std::string> elements_;
    std::unordered_map<std::string, Nat> index_;
    std::vector<std::uint8_t> leq_;  // size() x size(), row-major
};

// An order-preserving assignment between two finite posets.
class MonotoneMap {
public:
    MonotoneMap() = default;
    MonotoneMap(FinitePoset dom, FinitePoset cod,
                const std::unordered_map<std::string, std::string>& assignment);

    static MonotoneMap identity(const FinitePoset& p);

    const FinitePoset& dom() const { return dom_; }
    const FinitePoset& cod() const { return cod_; }

    Nat apply_index(Nat i) const { return map_[static_cast<std::size_t>(i)]; }
    const std::string& apply(const std::string& name) const;

    bool is_injective() const;
    bool operator==(const MonotoneMap& rhs) const {
        return dom_ == rhs.dom_ && cod_ == rhs.cod_ && map_ == rhs.map_;
    }

    MonotoneMap compose_after(const MonotoneMap& first) const;  // this ∘ first
    MonotoneMap dualized() const;
    // Restriction to an induced subposet of the domain, landing in `cod`.
    MonotoneMap restricted(const FinitePoset& sub_dom, const FinitePoset& new_cod) const;

private:
    FinitePoset dom_, cod_;
    std::vector<Nat> map_;  // dom index -> cod index
};

struct MappingCylinder {
    FinitePoset cylinder;
    MonotoneMap include_dom;   // dom ↪ M_f
    MonotoneMap include_cod;   // cod ↪ M_f (elements tagged)
    MonotoneMap retraction;    // M_f → cod, x ↦ f(x) on dom, identity on cod
    std::string tag_suffix;    // suffix appended to cod element names
};

// Poset on dom ⊔ cod with x <= y across the parts iff f(x) <=_cod y.
// Cod elements are renamed with a reserved "'" suffix (repeated as needed)
// to keep the disjoint union collision-free.
MappingCylinder mapping_cylinder(const MonotoneMap& f);

// Smallest suffix of repeated '\'' marks tagging every cod name clear of dom names.
std::string cylinder_tag_suffix(const std::vector<std::string>& dom_names,
                                const std::vector<std::string>& cod_names);

}  // namespace pqm
