#include "pqm/poset.hpp"

#include <algorithm>
#include <unordered_set>

namespace pqm {

FinitePoset FinitePoset::from_relations(
    const std::vector<std::string>& elements,
    const std::vector<std::pair<std::string, std::string>>& relations) {
    FinitePoset p;
    p.elements_ = elements;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        auto [it, inserted] = p.index_.emplace(elements[i], static_cast<Nat>(i));
        if (!inserted)
            throw Error(ErrorKind::DuplicateElement, "element '" + elements[i] + "' listed twice");
    }
    const Nat n = p.size();
    p.leq_.assign(static_cast<std::size_t>(n * n), 0);
    for (Nat i = 0; i < n; ++i) p.leq_[static_cast<std::size_t>(i * n + i)] = 1;
    for (const auto& [a, b] : relations) {
        const Nat ia = p.index_of(a);
        const Nat ib = p.index_of(b);
        p.leq_[static_cast<std::size_t>(ia * n + ib)] = 1;
    }
    // Warshall closure.
    for (Nat k = 0; k < n; ++k)
        for (Nat i = 0; i < n; ++i) {
            if (!p.leq(i, k)) continue;
            for (Nat j = 0; j < n; ++j)
                if (p.leq(k, j)) p.leq_[static_cast<std::size_t>(i * n + j)] = 1;
        }
    for (Nat i = 0; i < n; ++i)
        for (Nat j = i + 1; j < n; ++j)
            if (p.leq(i, j) && p.leq(j, i))
                throw Error(ErrorKind::CycleDetected,
                            "elements '" + p.element(i) + "' and '" + p.element(j) +
                                "' are comparable both ways after closure");
    return p;
}

Nat FinitePoset::index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error(ErrorKind::UnknownElement, "element '" + name + "' not in poset");
    return it->second;
}

std::vector<std::pair<std::string, std::string>> FinitePoset::strict_pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (Nat i = 0; i < size(); ++i)
        for (Nat j = 0; j < size(); ++j)
            if (i != j && leq(i, j)) out.emplace_back(element(i), element(j));
    return out;
}

std::vector<std::pair<std::string, std::string>> FinitePoset::cover_pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (Nat i = 0; i < size(); ++i)
        for (Nat j = 0; j < size(); ++j) {
            if (i == j || !leq(i, j)) continue;
            bool covered = true;
            for (Nat k = 0; k < size(); ++k)
                if (k != i && k != j && leq(i, k) && leq(k, j)) { covered = false; break; }
            if (covered) out.emplace_back(element(i), element(j));
        }
    return out;
}

std::vector<std::string> FinitePoset::principal_set(const std::string& v, Side side, bool strict) const {
    const Nat iv = index_of(v);
    std::vector<std::string> out;
    for (Nat i = 0; i < size(); ++i) {
        const bool in = (side == Side::Lower) ? leq(i, iv) : leq(iv, i);
        if (in && (!strict || i != iv)) out.push_back(element(i));
    }
    return out;
}

std::vector<std::string> FinitePoset::extremal_elements(Extremal which) const {
    std::vector<std::string> out;
    for (Nat i = 0; i < size(); ++i) {
        bool extremal = true;
        for (Nat j = 0; j < size(); ++j) {
            if (i == j) continue;
            const bool blocks = (which == Extremal::Minimal) ? leq(j, i) : leq(i, j);
            if (blocks) { extremal = false; break; }
        }
        if (extremal) out.push_back(element(i));
    }
    return out;
}

FinitePoset FinitePoset::induced(const std::vector<std::string>& subset) const {
    std::unordered_set<std::string> wanted;
    for (const auto& name : subset) {
        index_of(name);  // validates membership
        wanted.insert(name);
    }
    FinitePoset sub;
    for (const auto& name : elements_)
        if (wanted.count(name)) {
            sub.index_.emplace(name, static_cast<Nat>(sub.elements_.size()));
            sub.elements_.push_back(name);
        }
    const Nat m = sub.size();
    sub.leq_.assign(static_cast<std::size_t>(m * m), 0);
    for (Nat i = 0; i < m; ++i)
        for (Nat j = 0; j < m; ++j)
            sub.leq_[static_cast<std::size_t>(i * m + j)] =
                leq(index_of(sub.element(i)), index_of(sub.element(j))) ? 1 : 0;
    return sub;
}

FinitePoset FinitePoset::dual() const {
    FinitePoset d;
    d.elements_ = elements_;
    d.index_ = index_;
    const Nat n = size();
    d.leq_.assign(static_cast<std::size_t>(n * n), 0);
    for (Nat i = 0; i < n; ++i)
        for (Nat j = 0; j < n; ++j)
            d.leq_[static_cast<std::size_t>(i * n + j)] = leq(j, i) ? 1 : 0;
    return d;
}

MonotoneMap::MonotoneMap(FinitePoset dom, FinitePoset cod,
                         const std::unordered_map<std::string, std::string>& assignment)
    : dom_(std::move(dom)), cod_(std::move(cod)) {
    map_.resize(static_cast<std::size_t>(dom_.size()));
    for (Nat i = 0; i < dom_.size(); ++i) {
        auto it = assignment.find(dom_.element(i));
        if (it == assignment.end())
            throw Error(ErrorKind::UnknownElement, "no image for element '" + dom_.element(i) + "'");
        map_[static_cast<std::size_t>(i)] = cod_.index_of(it->second);
    }
    for (Nat i = 0; i < dom_.size(); ++i)
        for (Nat j = 0; j < dom_.size(); ++j)
            if (dom_.leq(i, j) && !cod_.leq(apply_index(i), apply_index(j)))
                throw Error(ErrorKind::NonMonotoneStep,
                            "'" + dom_.element(i) + "' <= '" + dom_.element(j) +
                                "' but images are not ordered");
}

MonotoneMap MonotoneMap::identity(const FinitePoset& p) {
    std::unordered_map<std::string, std::string> assignment;
    for (const auto& name : p.elements()) assignment.emplace(name, name);
    return MonotoneMap(p, p, assignment);
}

const std::string& MonotoneMap::apply(const std::string& name) const {
    return cod_.element(apply_index(dom_.index_of(name)));
}

bool MonotoneMap::is_injective() const {
    std::unordered_set<Nat> seen;
    for (Nat image : map_)
        if (!seen.insert(image).second) return false;
    return true;
}

MonotoneMap MonotoneMap::compose_after(const MonotoneMap& first) const {
    if (first.cod() != dom_)
        throw Error(ErrorKind::DomainMismatch, "composition endpoints do not match");
    std::unordered_map<std::string, std::string> assignment;
    for (Nat i = 0; i < first.dom().size(); ++i)
        assignment.emplace(first.dom().element(i),
                           cod_.element(apply_index(first.apply_index(i))));
    return MonotoneMap(first.dom(), cod_, assignment);
}

MonotoneMap MonotoneMap::dualized() const {
    std::unordered_map<std::string, std::string> assignment;
    for (Nat i = 0; i < dom_.size(); ++i)
        assignment.emplace(dom_.element(i), cod_.element(apply_index(i)));
    return MonotoneMap(dom_.dual(), cod_.dual(), assignment);
}

MonotoneMap MonotoneMap::restricted(const FinitePoset& sub_dom, const FinitePoset& new_cod) const {
    std::unordered_map<std::string, std::string> assignment;
    for (const auto& name : sub_dom.elements()) assignment.emplace(name, apply(name));
    return MonotoneMap(sub_dom, new_cod, assignment);
}

std::string cylinder_tag_suffix(const std::vector<std::string>& dom_names,
                                const std::vector<std::string>& cod_names) {
    std::unordered_set<std::string> dom_set(dom_names.begin(), dom_names.end());
    std::string suffix = "'";
    for (;;) {
        bool clean = true;
        for (const auto& name : cod_names)
            if (dom_set.count(name + suffix)) { clean = false; break; }
        if (clean) return suffix;
        suffix += "'";
    }
}

MappingCylinder mapping_cylinder(const MonotoneMap& f) {
    const FinitePoset& p = f.dom();
    const FinitePoset& q = f.cod();
    const std::string suffix = cylinder_tag_suffix(p.elements(), q.elements());

    std::vector<std::string> elements = p.elements();
    for (const auto& name : q.elements()) elements.push_back(name + suffix);

    std::vector<std::pair<std::string, std::string>> relations;
    for (const auto& [a, b] : p.strict_pairs()) relations.emplace_back(a, b);
    for (const auto& [a, b] : q.strict_pairs()) relations.emplace_back(a + suffix, b + suffix);
    for (Nat i = 0; i < p.size(); ++i)
        for (Nat j = 0; j < q.size(); ++j)
            if (q.leq(f.apply_index(i), j))
                relations.emplace_back(p.element(i), q.element(j) + suffix);

    MappingCylinder out;
    out.tag_suffix = suffix;
    out.cylinder = FinitePoset::from_relations(elements, relations);

    std::unordered_map<std::string, std::string> incl_p, incl_q, retr;
    for (const auto& name : p.elements()) incl_p.emplace(name, name);
    for (const auto& name : q.elements()) incl_q.emplace(name, name + suffix);
    for (Nat i = 0; i < p.size(); ++i)
        retr.emplace(p.element(i), q.element(f.apply_index(i)));
    for (const auto& name : q.elements()) retr.emplace(name + suffix, name);

    out.include_dom = MonotoneMap(p, out.cylinder, incl_p);
    out.include_cod = MonotoneMap(q, out.cylinder, incl_q);
    out.retraction = MonotoneMap(out.cylinder, q, retr);
    return out;
}

}  // namespace pqm
