#include "pqm/simplicial.hpp"

#include <algorithm>

namespace pqm {

SimplicialComplex SimplicialComplex::from_simplices(
    const std::vector<std::string>& vertices,
    const std::vector<std::vector<std::string>>& simplices) {
    SimplicialComplex k;
    k.vertices_ = vertices;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        auto [it, inserted] = k.vertex_index_.emplace(vertices[i], static_cast<Nat>(i));
        if (!inserted)
            throw Error(ErrorKind::DuplicateElement, "vertex '" + vertices[i] + "' listed twice");
    }
    for (Nat i = 0; i < k.vertex_count(); ++i) k.simplices_.insert(Simplex{i});
    for (const auto& names : simplices) {
        Simplex s;
        for (const auto& name : names) s.push_back(k.vertex_index(name));
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (!s.empty()) k.insert_closed(s);
    }
    return k;
}

void SimplicialComplex::insert_closed(const Simplex& s) {
    if (!simplices_.insert(s).second) return;
    if (s.size() <= 1) return;
    Simplex face;
    face.reserve(s.size() - 1);
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
        face.clear();
        for (std::size_t i = 0; i < s.size(); ++i)
            if (i != skip) face.push_back(s[i]);
        insert_closed(face);
    }
}

Nat SimplicialComplex::vertex_index(const std::string& name) const {
    auto it = vertex_index_.find(name);
    if (it == vertex_index_.end())
        throw Error(ErrorKind::UnknownVertex, "vertex '" + name + "' not in complex");
    return it->second;
}

Nat SimplicialComplex::dim() const {
    Nat d = -1;
    for (const auto& s : simplices_) d = std::max(d, static_cast<Nat>(s.size()) - 1);
    return d;
}

std::vector<Simplex> SimplicialComplex::simplices_of_dim(Nat d) const {
    std::vector<Simplex> out;
    for (const auto& s : simplices_)
        if (static_cast<Nat>(s.size()) == d + 1) out.push_back(s);
    return out;  // std::set iteration is already lexicographic
}

std::vector<std::string> SimplicialComplex::simplex_names(const Simplex& s) const {
    std::vector<std::string> out;
    for (Nat i : s) out.push_back(vertex(i));
    return out;
}

SimplicialComplex order_complex(const FinitePoset& p, std::optional<Nat> max_dim) {
    SimplicialComplex k;
    k.vertices_ = p.elements();
    for (Nat i = 0; i < p.size(); ++i) k.vertex_index_.emplace(p.element(i), i);
    const Nat cap = max_dim ? *max_dim + 1 : p.size();  // max chain size

    // Chains are cliques of the comparability relation; extend in canonical
    // vertex order.
    std::vector<Nat> chain;
    auto extend = [&](auto&& self, Nat start) -> void {
        if (!chain.empty()) k.simplices_.insert(chain);
        if (static_cast<Nat>(chain.size()) >= cap) return;
        for (Nat next = start; next < p.size(); ++next) {
            bool comparable = true;
            for (Nat v : chain)
                if (!p.leq(v, next) && !p.leq(next, v)) { comparable = false; break; }
            if (!comparable) continue;
            chain.push_back(next);
            self(self, next + 1);
            chain.pop_back();
        }
    };
    extend(extend, 0);
    return k;
}

SimplicialMap::SimplicialMap(SimplicialComplex dom, SimplicialComplex cod,
                             const std::unordered_map<std::string, std::string>& vertex_assignment)
    : dom_(std::move(dom)), cod_(std::move(cod)) {
    map_.resize(static_cast<std::size_t>(dom_.vertex_count()));
    for (Nat i = 0; i < dom_.vertex_count(); ++i) {
        auto it = vertex_assignment.find(dom_.vertex(i));
        if (it == vertex_assignment.end())
            throw Error(ErrorKind::UnknownVertex, "no image for vertex '" + dom_.vertex(i) + "'");
        map_[static_cast<std::size_t>(i)] = cod_.vertex_index(it->second);
    }
    for (const auto& s : dom_.simplices())
        if (!cod_.has_simplex(image(s)))
            throw Error(ErrorKind::ValidationError,
                        "image of a simplex is not a simplex of the codomain");
}

SimplicialMap SimplicialMap::identity(const SimplicialComplex& k) {
    std::unordered_map<std::string, std::string> assignment;
    for (const auto& v : k.vertices()) assignment.emplace(v, v);
    return SimplicialMap(k, k, assignment);
}

Simplex SimplicialMap::image(const Simplex& s) const {
    Simplex out;
    out.reserve(s.size());
    for (Nat v : s) out.push_back(apply_index(v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SimplicialMap SimplicialMap::compose_after(const SimplicialMap& first) const {
    if (first.cod() != dom_)
        throw Error(ErrorKind::DomainMismatch, "composition endpoints do not match");
    std::unordered_map<std::string, std::string> assignment;
    for (Nat i = 0; i < first.dom().vertex_count(); ++i)
        assignment.emplace(first.dom().vertex(i), cod_.vertex(apply_index(first.apply_index(i))));
    return SimplicialMap(first.dom(), cod_, assignment);
}

SimplicialMap induced_simplicial_map(const MonotoneMap& f, std::optional<Nat> max_dim) {
    std::unordered_map<std::string, std::string> assignment;
    for (Nat i = 0; i < f.dom().size(); ++i)
        assignment.emplace(f.dom().element(i), f.cod().element(f.apply_index(i)));
    return SimplicialMap(order_complex(f.dom(), max_dim), order_complex(f.cod(), max_dim), assignment);
}

SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l) {
    const std::string suffix = cylinder_tag_suffix(k.vertices(), l.vertices());
    std::vector<std::string> vertices = k.vertices();
    bool collision = false;
    for (const auto& v : l.vertices())
        if (k.has_vertex(v)) { collision = true; break; }
    auto l_name = [&](const std::string& v) { return collision ? v + suffix : v; };
    for (const auto& v : l.vertices()) vertices.push_back(l_name(v));

    std::vector<std::vector<std::string>> simplices;
    for (const auto& s : k.simplices()) simplices.push_back(k.simplex_names(s));
    for (const auto& t : l.simplices()) {
        std::vector<std::string> tn;
        for (Nat v : t) tn.push_back(l_name(l.vertex(v)));
        simplices.push_back(tn);
        for (const auto& s : k.simplices()) {
            std::vector<std::string> u = k.simplex_names(s);
            u.insert(u.end(), tn.begin(), tn.end());
            simplices.push_back(u);
        }
    }
    return SimplicialComplex::from_simplices(vertices, simplices);
}

namespace {

SimplicialComplex subcomplex_from(const SimplicialComplex& k, const std::vector<Simplex>& keep) {
    std::vector<char> used(static_cast<std::size_t>(k.vertex_count()), 0);
    for (const auto& s : keep)
        for (Nat v : s) used[static_cast<std::size_t>(v)] = 1;
    std::vector<std::string> vertices;
    for (Nat i = 0; i < k.vertex_count(); ++i)
        if (used[static_cast<std::size_t>(i)]) vertices.push_back(k.vertex(i));
    std::vector<std::vector<std::string>> simplices;
    for (const auto& s : keep) simplices.push_back(k.simplex_names(s));
    return SimplicialComplex::from_simplices(vertices, simplices);
}

}  // namespace

StarLink star_link(const SimplicialComplex& k, const std::string& v) {
    const Nat iv = k.vertex_index(v);
    std::vector<Simplex> star, link;
    for (const auto& s : k.simplices()) {
        Simplex with_v = s;
        if (!std::binary_search(with_v.begin(), with_v.end(), iv)) {
            with_v.insert(std::lower_bound(with_v.begin(), with_v.end(), iv), iv);
            if (k.has_simplex(with_v)) {
                star.push_back(s);
                link.push_back(s);
            }
        } else {
            star.push_back(s);  // σ ∪ {v} = σ is a simplex
        }
    }
    return StarLink{subcomplex_from(k, star), subcomplex_from(k, link)};
}

bool is_contiguous(const SimplicialMap& phi, const SimplicialMap& psi) {
    if (phi.dom() != psi.dom() || phi.cod() != psi.cod())
        throw Error(ErrorKind::DomainMismatch, "contiguity requires equal domains and codomains");
    for (const auto& s : phi.dom().simplices()) {
        Simplex a = phi.image(s);
        const Simplex b = psi.image(s);
        a.insert(a.end(), b.begin(), b.end());
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        if (!phi.cod().has_simplex(a)) return false;
    }
    return true;
}

}  // namespace pqm
