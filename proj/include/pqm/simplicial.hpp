#pragma once

#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "pqm/common.hpp"
#include "pqm/poset.hpp"

namespace pqm {

// A simplex as a sorted set of vertex indices into the owning complex.
using Simplex = std::vector<Nat>;

// Abstract finite simplicial complex. Simplices are stored as sorted vertex
// index sets in the canonical vertex order; the empty simplex is implicit.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // `simplices` are downward-closed automatically; vertex singletons are
    // always included.
    static SimplicialComplex from_simplices(const std::vector<std::string>& vertices,
                                            const std::vector<std::vector<std::string>>& simplices);

    Nat vertex_count() const { return static_cast<Nat>(vertices_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::string& vertex(Nat i) const { return vertices_[static_cast<std::size_t>(i)]; }
    Nat vertex_index(const std::string& name) const;
    bool has_vertex(const std::string& name) const { return vertex_index_.count(name) > 0; }

    bool has_simplex(const Simplex& s) const { return simplices_.count(s) > 0; }
    Nat simplex_count() const { return static_cast<Nat>(simplices_.size()); }
    // Dimension of the complex, -1 when there are no simplices.
    Nat dim() const;

    // All simplices of the given dimension, in lexicographic order.
    std::vector<Simplex> simplices_of_dim(Nat d) const;
    const std::set<Simplex>& simplices() const { return simplices_; }

    std::vector<std::string> simplex_names(const Simplex& s) const;

    bool operator==(const SimplicialComplex& rhs) const {
        return vertices_ == rhs.vertices_ && simplices_ == rhs.simplices_;
    }
    bool operator!=(const SimplicialComplex& rhs) const { return !(*this == rhs); }

private:
    friend SimplicialComplex order_complex(const FinitePoset&, std::optional<Nat>);
    void insert_closed(const Simplex& s);

    std::vector<std::string> vertices_;
    std::unordered_map<std::string, Nat> vertex_index_;
    std::set<Simplex> simplices_;  // nonempty simplices
};

// K(P): chains of P as simplices. When `max_dim` is given, only chains with
// at most max_dim+1 elements are enumerated (homology in degrees <= d only
// needs simplices up to dimension d+1).
SimplicialComplex order_complex(const FinitePoset& p, std::optional<Nat> max_dim = std::nullopt);

// A vertex map sending simplices to simplices.
class SimplicialMap {
public:
    SimplicialMap() = default;
    SimplicialMap(SimplicialComplex dom, SimplicialComplex cod,
                  const std::unordered_map<std::string, std::string>& vertex_assignment);

    static SimplicialMap identity(const SimplicialComplex& k);

    const SimplicialComplex& dom() const { return dom_; }
    const SimplicialComplex& cod() const { return cod_; }
    Nat apply_index(Nat i) const { return map_[static_cast<std::size_t>(i)]; }

    // Image as a vertex-index set of cod (duplicates collapsed).
    Simplex image(const Simplex& s) const;

    SimplicialMap compose_after(const SimplicialMap& first) const;  // this ∘ first
    bool operator==(const SimplicialMap& rhs) const {
        return dom_ == rhs.dom_ && cod_ == rhs.cod_ && map_ == rhs.map_;
    }

private:
    SimplicialComplex dom_, cod_;
    std::vector<Nat> map_;
};

// Vertex-wise application of a monotone map between order complexes.
SimplicialMap induced_simplicial_map(const MonotoneMap& f, std::optional<Nat> max_dim = std::nullopt);

// K ⋆ L; vertex names colliding with K are tagged like cylinder cod names.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);

struct StarLink {
    SimplicialComplex star;
    SimplicialComplex link;
};

StarLink star_link(const SimplicialComplex& k, const std::string& v);

// One-step contiguity: φ(σ) ∪ ψ(σ) is a simplex of the codomain for every σ.
bool is_contiguous(const SimplicialMap& phi, const SimplicialMap& psi);

}  // namespace pqm
