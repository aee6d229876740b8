#include "pqm/homology.hpp"

#include <algorithm>
#include <map>

namespace pqm {

namespace {

std::map<Simplex, Nat> index_simplices(const std::vector<Simplex>& list) {
    std::map<Simplex, Nat> out;
    for (std::size_t i = 0; i < list.size(); ++i) out.emplace(list[i], static_cast<Nat>(i));
    return out;
}

}  // namespace

std::vector<MatrixFp> boundary_matrices(const SimplicialComplex& k, Nat p, Nat max_degree) {
    require_prime(p);
    std::vector<MatrixFp> out;
    std::vector<Simplex> below;  // (-1)-simplices: none (unreduced convention)
    std::map<Simplex, Nat> below_index;
    for (Nat d = 0; d <= max_degree + 1; ++d) {
        const std::vector<Simplex> current = k.simplices_of_dim(d);
        MatrixFp bd(p, static_cast<Nat>(below.size()), static_cast<Nat>(current.size()));
        for (std::size_t c = 0; c < current.size(); ++c) {
            const Simplex& s = current[c];
            for (std::size_t skip = 0; skip < s.size() && d > 0; ++skip) {
                Simplex face;
                for (std::size_t i = 0; i < s.size(); ++i)
                    if (i != skip) face.push_back(s[i]);
                const Nat row = below_index.at(face);
                const Nat sign = (skip % 2 == 0) ? 1 : p - 1;
                bd.set(row, static_cast<Nat>(c), sign);
            }
        }
        out.push_back(std::move(bd));
        below = current;
        below_index = index_simplices(below);
    }
    return out;
}

std::vector<Nat> betti_numbers(const SimplicialComplex& k, Nat p, Nat max_degree) {
    return ComplexHomology(k, p, max_degree).betti_vector();
}

ComplexHomology::ComplexHomology(const SimplicialComplex& k, Nat p, Nat max_degree)
    : complex_(k), p_(p), max_degree_(max_degree) {
    require_prime(p);
    for (Nat d = 0; d <= max_degree + 1; ++d) simplices_.push_back(k.simplices_of_dim(d));
    const std::vector<MatrixFp> bd = boundary_matrices(k, p, max_degree);
    for (Nat d = 0; d <= max_degree; ++d) {
        const MatrixFp cycles = kernel_basis(bd[static_cast<std::size_t>(d)]);
        const MatrixFp& next = bd[static_cast<std::size_t>(d + 1)];
        const MatrixFp boundaries = select_columns(next, independent_columns(next));
        const Nat n = cycles.rows();
        SpanFp span(p, n);
        std::vector<std::uint32_t> buffer(static_cast<std::size_t>(n));
        for (Nat c = 0; c < boundaries.cols(); ++c) {
            for (Nat r = 0; r < n; ++r) buffer[static_cast<std::size_t>(r)] = boundaries.at(r, c);
            span.add_if_independent(buffer);
        }
        std::vector<Nat> kept;
        for (Nat c = 0; c < cycles.cols(); ++c) {
            for (Nat r = 0; r < n; ++r) buffer[static_cast<std::size_t>(r)] = cycles.at(r, c);
            if (span.add_if_independent(buffer)) kept.push_back(c);
        }
        hom_basis_.push_back(select_columns(cycles, kept));
        img_basis_.push_back(boundaries);
    }
}

std::vector<Nat> ComplexHomology::betti_vector() const {
    std::vector<Nat> out;
    for (Nat d = 0; d <= max_degree_; ++d) out.push_back(betti(d));
    return out;
}

MatrixFp ComplexHomology::express_cycles(Nat degree, const MatrixFp& cycles) const {
    const MatrixFp& h = homology_basis(degree);
    const MatrixFp& b = boundary_basis(degree);
    MatrixFp coords;
    if (!solve(hstack(h, b), cycles, coords))
        throw Error(ErrorKind::ValidationError, "vector is not a cycle of the codomain");
    MatrixFp out(p_, h.cols(), cycles.cols());
    for (Nat r = 0; r < h.cols(); ++r)
        for (Nat c = 0; c < cycles.cols(); ++c) out.set(r, c, coords.at(r, c));
    return out;
}

MatrixFp chain_map_matrix(const SimplicialMap& phi, Nat degree, Nat p) {
    require_prime(p);
    const std::vector<Simplex> dom_simplices = phi.dom().simplices_of_dim(degree);
    const std::vector<Simplex> cod_simplices = phi.cod().simplices_of_dim(degree);
    const std::map<Simplex, Nat> cod_index = index_simplices(cod_simplices);
    MatrixFp out(p, static_cast<Nat>(cod_simplices.size()), static_cast<Nat>(dom_simplices.size()));
    for (std::size_t c = 0; c < dom_simplices.size(); ++c) {
        const Simplex& s = dom_simplices[c];
        std::vector<Nat> image;
        for (Nat v : s) image.push_back(phi.apply_index(v));
        // Sort the image, tracking the permutation sign; repeats give 0.
        Nat sign = 1;
        for (std::size_t i = 1; i < image.size(); ++i) {
            const Nat v = image[i];
            std::size_t j = i;
            while (j > 0 && image[j - 1] > v) {
                image[j] = image[j - 1];
                --j;
                sign = -sign;
            }
            image[j] = v;
        }
        bool degenerate = false;
        for (std::size_t i = 1; i < image.size(); ++i)
            if (image[i] == image[i - 1]) { degenerate = true; break; }
        if (degenerate) continue;
        const Nat row = cod_index.at(image);
        out.set(row, static_cast<Nat>(c), sign > 0 ? 1 : p - 1);
    }
    return out;
}

MatrixFp induced_homology_map(const SimplicialMap& phi, Nat degree,
                              const ComplexHomology& dom, const ComplexHomology& cod) {
    const MatrixFp chain = chain_map_matrix(phi, degree, dom.p());
    return cod.express_cycles(degree, chain * dom.homology_basis(degree));
}

MatrixFp induced_homology_map(const SimplicialMap& phi, Nat degree, Nat p) {
    const ComplexHomology dom(phi.dom(), p, degree);
    const ComplexHomology cod(phi.cod(), p, degree);
    return induced_homology_map(phi, degree, dom, cod);
}

MatrixFp PersistenceModule::step_at(Nat i) const {
    if (i < stabilization()) return steps[static_cast<std::size_t>(i)];
    return MatrixFp::identity(p, dims.back());
}

MatrixFp PersistenceModule::composite(Nat i, Nat j) const {
    const Nat lo = std::min(i, stabilization());
    const Nat hi = std::min(j, stabilization());
    MatrixFp acc = MatrixFp::identity(p, dim_at(lo));
    for (Nat k = lo; k < hi; ++k) acc = step_at(k) * acc;
    return acc;
}

Nat PersistenceModule::total_dim() const {
    Nat total = 0;
    for (Nat d : dims) total += d;
    return total;
}

PersistenceModule PersistenceModule::extended_to(Nat t_index) const {
    PersistenceModule out = *this;
    while (out.stabilization() < t_index) {
        out.steps.push_back(MatrixFp::identity(p, out.dims.back()));
        out.dims.push_back(out.dims.back());
    }
    return out;
}

PersistenceModule PersistenceModule::validate(Nat p, std::vector<Nat> dims, std::vector<MatrixFp> steps) {
    require_prime(p);
    if (dims.empty()) throw Error(ErrorKind::ArityMismatch, "a persistence module needs at least one index");
    if (steps.size() + 1 != dims.size())
        throw Error(ErrorKind::ArityMismatch, "expected " + std::to_string(dims.size() - 1) +
                                                  " step matrices, got " + std::to_string(steps.size()));
    for (std::size_t i = 0; i < steps.size(); ++i) {
        if (steps[i].p() != p) throw Error(ErrorKind::ArityMismatch, "step matrix has a different prime");
        if (steps[i].rows() != dims[i + 1] || steps[i].cols() != dims[i])
            throw Error(ErrorKind::ArityMismatch, "step matrix " + std::to_string(i) + " has shape " +
                                                      std::to_string(steps[i].rows()) + "x" +
                                                      std::to_string(steps[i].cols()) + ", expected " +
                                                      std::to_string(dims[i + 1]) + "x" + std::to_string(dims[i]));
    }
    PersistenceModule m;
    m.p = p;
    m.dims = std::move(dims);
    m.steps = std::move(steps);
    return m;
}

std::vector<PersistenceModule> persistence_modules_upto(const PersistencePoset& x, Nat max_degree, Nat p) {
    require_prime(p);
    const Nat big_t = x.stabilization();
    std::vector<ComplexHomology> homology;
    std::vector<SimplicialComplex> complexes;
    for (Nat i = 0; i <= big_t; ++i) {
        complexes.push_back(order_complex(x.poset_at(i), max_degree + 1));
        homology.emplace_back(complexes.back(), p, max_degree);
    }
    std::vector<PersistenceModule> out(static_cast<std::size_t>(max_degree) + 1);
    for (Nat j = 0; j <= max_degree; ++j) {
        out[static_cast<std::size_t>(j)].p = p;
        for (Nat i = 0; i <= big_t; ++i)
            out[static_cast<std::size_t>(j)].dims.push_back(homology[static_cast<std::size_t>(i)].betti(j));
    }
    for (Nat i = 0; i < big_t; ++i) {
        const MonotoneMap step = x.step_at(i);
        std::unordered_map<std::string, std::string> assignment;
        for (Nat k = 0; k < step.dom().size(); ++k)
            assignment.emplace(step.dom().element(k), step.cod().element(step.apply_index(k)));
        const SimplicialMap phi(complexes[static_cast<std::size_t>(i)],
                                complexes[static_cast<std::size_t>(i + 1)], assignment);
        for (Nat j = 0; j <= max_degree; ++j)
            out[static_cast<std::size_t>(j)].steps.push_back(
                induced_homology_map(phi, j, homology[static_cast<std::size_t>(i)],
                                     homology[static_cast<std::size_t>(i + 1)]));
    }
    return out;
}

PersistenceModule persistence_module_of(const PersistencePoset& x, Nat degree, Nat p) {
    return persistence_modules_upto(x, degree, p)[static_cast<std::size_t>(degree)];
}

}  // namespace pqm
