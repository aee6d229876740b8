#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "pqm/barcode.hpp"
#include "pqm/persistence.hpp"
#include "pqm/poset.hpp"
#include "pqm/simplicial.hpp"

namespace pqm::testing {

inline FinitePoset poset(const std::vector<std::string>& elements,
                         const std::vector<std::pair<std::string, std::string>>& relations) {
    return FinitePoset::from_relations(elements, relations);
}

inline FinitePoset chain(const std::vector<std::string>& elements) {
    std::vector<std::pair<std::string, std::string>> relations;
    for (std::size_t i = 0; i + 1 < elements.size(); ++i)
        relations.emplace_back(elements[i], elements[i + 1]);
    return poset(elements, relations);
}

inline FinitePoset antichain(const std::vector<std::string>& elements) {
    return poset(elements, {});
}

// a < b, a < c, b < d, c < d
inline FinitePoset diamond() {
    return poset({"a", "b", "c", "d"}, {{"a", "b"}, {"a", "c"}, {"b", "d"}, {"c", "d"}});
}

inline std::unordered_map<std::string, std::string> identity_on(const FinitePoset& p) {
    std::unordered_map<std::string, std::string> out;
    for (const auto& name : p.elements()) out.emplace(name, name);
    return out;
}

inline PersistencePoset constant_diagram(const FinitePoset& p, Nat t_index) {
    return PersistencePoset::constant(p, t_index);
}

// Independent component count of the 1-skeleton (union-find; no linear algebra).
inline Nat component_count(const SimplicialComplex& k) {
    std::vector<Nat> parent(static_cast<std::size_t>(k.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Nat a) {
        while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
        return a;
    };
    for (const auto& edge : k.simplices_of_dim(1))
        parent[static_cast<std::size_t>(find(edge[0]))] = find(edge[1]);
    Nat components = 0;
    for (Nat v = 0; v < k.vertex_count(); ++v)
        if (find(v) == v) ++components;
    return components;
}

// Independent first Betti number of a graph (no 2-simplices): E - V + C.
inline Nat graph_cycle_rank(const SimplicialComplex& k) {
    const Nat edges = static_cast<Nat>(k.simplices_of_dim(1).size());
    return edges - k.vertex_count() + component_count(k);
}

// Interval-sum module over F_p for hand-written barcodes.
inline PersistenceModule bars(Nat t_index, const std::vector<Interval>& intervals, Nat p = 2) {
    Barcode bc;
    bc.stabilization = t_index;
    bc.intervals = intervals;
    std::sort(bc.intervals.begin(), bc.intervals.end());
    return barcode_module(bc, p);
}

inline Barcode barcode_of(Nat t_index, const std::vector<Interval>& intervals) {
    Barcode bc;
    bc.stabilization = t_index;
    bc.intervals = intervals;
    std::sort(bc.intervals.begin(), bc.intervals.end());
    return bc;
}

}  // namespace pqm::testing
