#pragma once

#include <vector>

#include "pqm/common.hpp"
#include "pqm/fp_matrix.hpp"
#include "pqm/persistence.hpp"
#include "pqm/simplicial.hpp"

namespace pqm {

// Boundary matrices ∂_0..∂_{max_degree+1} of K over F_p, with alternating
// signs under the canonical vertex order. ∂_0 has zero rows (unreduced).
std::vector<MatrixFp> boundary_matrices(const SimplicialComplex& k, Nat p, Nat max_degree);

// Unreduced Betti numbers β_0..β_max_degree over F_p.
std::vector<Nat> betti_numbers(const SimplicialComplex& k, Nat p, Nat max_degree);

// Homology of one complex with fixed deterministic cycle bases, reusable for
// induced maps in degrees 0..max_degree.
class ComplexHomology {
public:
    ComplexHomology(const SimplicialComplex& k, Nat p, Nat max_degree);

    const SimplicialComplex& complex() const { return complex_; }
    Nat p() const { return p_; }
    Nat max_degree() const { return max_degree_; }
    Nat betti(Nat degree) const { return hom_basis_[static_cast<std::size_t>(degree)].cols(); }
    std::vector<Nat> betti_vector() const;

    // Cycle representatives of the homology basis, one column per class.
    const MatrixFp& homology_basis(Nat degree) const { return hom_basis_[static_cast<std::size_t>(degree)]; }
    // Basis of the boundary subspace im ∂_{degree+1}.
    const MatrixFp& boundary_basis(Nat degree) const { return img_basis_[static_cast<std::size_t>(degree)]; }
    const std::vector<Simplex>& basis_simplices(Nat degree) const {
        return simplices_[static_cast<std::size_t>(degree)];
    }

    // Coordinates of a cycle (chain vector) in the homology basis.
    MatrixFp express_cycles(Nat degree, const MatrixFp& cycles) const;

private:
    SimplicialComplex complex_;
    Nat p_;
    Nat max_degree_;
    std::vector<std::vector<Simplex>> simplices_;  // per degree 0..max_degree+1
    std::vector<MatrixFp> hom_basis_;              // per degree 0..max_degree
    std::vector<MatrixFp> img_basis_;              // per degree 0..max_degree
};

// Chain-level matrix of φ in the given degree; degenerate images map to 0.
MatrixFp chain_map_matrix(const SimplicialMap& phi, Nat degree, Nat p);

// Matrix of H_degree(φ) with respect to the deterministic homology bases.
MatrixFp induced_homology_map(const SimplicialMap& phi, Nat degree, Nat p);
MatrixFp induced_homology_map(const SimplicialMap& phi, Nat degree,
                              const ComplexHomology& dom, const ComplexHomology& cod);

// A finite-type N-indexed persistence module over F_p: dimensions d_0..d_T
// and step matrices M_i of shape d_{i+1} x d_i; identity beyond T.
struct PersistenceModule {
    Nat p = 2;
    std::vector<Nat> dims;        // size T+1
    std::vector<MatrixFp> steps;  // size T

    Nat stabilization() const { return static_cast<Nat>(dims.size()) - 1; }
    Nat dim_at(Nat i) const { return dims[static_cast<std::size_t>(std::min(i, stabilization()))]; }
    MatrixFp step_at(Nat i) const;       // identity beyond T
    MatrixFp composite(Nat i, Nat j) const;  // indices clamp to T
    Nat total_dim() const;

    PersistenceModule extended_to(Nat t_index) const;
    static PersistenceModule validate(Nat p, std::vector<Nat> dims, std::vector<MatrixFp> steps);
};

// H_degree of the order complexes of X with induced step matrices.
PersistenceModule persistence_module_of(const PersistencePoset& x, Nat degree, Nat p);

// All degrees 0..max_degree in one pass (complexes and bases shared).
std::vector<PersistenceModule> persistence_modules_upto(const PersistencePoset& x, Nat max_degree, Nat p);

}  // namespace pqm
