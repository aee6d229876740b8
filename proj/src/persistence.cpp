#include "pqm/persistence.hpp"

#include <algorithm>

namespace pqm {

PersistencePoset PersistencePoset::create(
    std::vector<FinitePoset> posets,
    const std::vector<std::unordered_map<std::string, std::string>>& steps) {
    if (posets.empty())
        throw Error(ErrorKind::ArityMismatch, "a persistence poset needs at least one index");
    if (steps.size() + 1 != posets.size())
        throw Error(ErrorKind::ArityMismatch,
                    "expected " + std::to_string(posets.size() - 1) + " steps, got " +
                        std::to_string(steps.size()));
    PersistencePoset x;
    x.posets_ = std::move(posets);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        try {
            x.steps_.emplace_back(x.posets_[i], x.posets_[i + 1], steps[i]);
        } catch (const Error& e) {
            throw Error(e.kind(), "step " + std::to_string(i) + ": " + e.what());
        }
    }
    return x;
}

PersistencePoset PersistencePoset::constant(const FinitePoset& p, Nat t_index) {
    std::vector<FinitePoset> posets(static_cast<std::size_t>(t_index) + 1, p);
    std::unordered_map<std::string, std::string> id;
    for (const auto& name : p.elements()) id.emplace(name, name);
    std::vector<std::unordered_map<std::string, std::string>> steps(static_cast<std::size_t>(t_index), id);
    return create(std::move(posets), steps);
}

const FinitePoset& PersistencePoset::poset_at(Nat i) const {
    if (i < 0) throw Error(ErrorKind::InvalidArgument, "negative index");
    return posets_[static_cast<std::size_t>(std::min(i, stabilization()))];
}

MonotoneMap PersistencePoset::step_at(Nat i) const {
    if (i < stabilization()) return steps_[static_cast<std::size_t>(i)];
    return MonotoneMap::identity(posets_.back());
}

bool PersistencePoset::is_filtration() const {
    return std::all_of(steps_.begin(), steps_.end(),
                       [](const MonotoneMap& s) { return s.is_injective(); });
}

Nat PersistencePoset::threshold() const {
    for (Nat i = 0; i <= stabilization(); ++i)
        if (!poset_at(i).empty()) return i;
    return kInf;
}

Nat PersistencePoset::cardinality() const {
    Nat best = 0;
    for (const auto& p : posets_) best = std::max(best, p.size());
    return best;
}

std::string PersistencePoset::track_forward(const std::string& name, Nat i, Nat j) const {
    std::string current = name;
    poset_at(i).index_of(current);
    for (Nat k = i; k < std::min(j, stabilization()); ++k) current = step_at(k).apply(current);
    return current;
}

std::unordered_map<std::string, std::string> PersistencePoset::composite_assignment(Nat i, Nat j) const {
    std::unordered_map<std::string, std::string> out;
    for (const auto& name : poset_at(i).elements()) out.emplace(name, track_forward(name, i, j));
    return out;
}

PersistencePoset PersistencePoset::extended_to(Nat t_index) const {
    if (t_index <= stabilization()) return *this;
    PersistencePoset out = *this;
    while (out.stabilization() < t_index) {
        out.steps_.push_back(MonotoneMap::identity(out.posets_.back()));
        out.posets_.push_back(out.posets_.back());
    }
    return out;
}

PersistencePoset PersistencePoset::dualized() const {
    PersistencePoset out;
    out.posets_.clear();
    for (const auto& p : posets_) out.posets_.push_back(p.dual());
    for (const auto& s : steps_) out.steps_.push_back(s.dualized());
    return out;
}

PersistencePoset PersistencePoset::shifted(Nat shift) const {
    PersistencePoset out;
    out.posets_.clear();
    const Nat new_t = std::max<Nat>(stabilization() - shift, 0);
    for (Nat i = 0; i <= new_t; ++i) out.posets_.push_back(poset_at(i + shift));
    for (Nat i = 0; i < new_t; ++i) out.steps_.push_back(step_at(i + shift));
    return out;
}

PersistencePoint make_persistence_point(const PersistencePoset& x, Nat t, const std::string& name) {
    const Nat big_t = x.stabilization();
    if (t < 0 || t > big_t)
        throw Error(ErrorKind::NotAPersistencePoint, "threshold " + std::to_string(t) + " out of range");
    PersistencePoint v;
    v.threshold = t;
    v.track.push_back(name);
    x.poset_at(t).index_of(name);
    for (Nat i = t; i < big_t; ++i) v.track.push_back(x.step_at(i).apply(v.track.back()));
    if (!is_persistence_point(x, v))
        throw Error(ErrorKind::NotAPersistencePoint,
                    "element '" + name + "' at index " + std::to_string(t) +
                        " fails the preimage condition");
    return v;
}

bool is_persistence_point(const PersistencePoset& x, const PersistencePoint& v) {
    const Nat big_t = x.stabilization();
    if (v.threshold < 0 || v.threshold > big_t) return false;
    if (static_cast<Nat>(v.track.size()) != big_t - v.threshold + 1) return false;
    for (Nat i = v.threshold; i <= big_t; ++i)
        if (!x.poset_at(i).contains(v.at(i))) return false;
    // Track consistency and exact singleton preimages from the threshold on.
    for (Nat i = v.threshold; i < big_t; ++i) {
        if (x.step_at(i).apply(v.at(i)) != v.at(i + 1)) return false;
        const MonotoneMap& step = x.step_at(i);
        Nat hits = 0;
        for (const auto& name : step.dom().elements())
            if (step.apply(name) == v.at(i + 1)) ++hits;
        if (hits != 1) return false;
    }
    // Nothing may map onto the birth element from the index before it.
    if (v.threshold > 0) {
        const MonotoneMap& step = x.step_at(v.threshold - 1);
        for (const auto& name : step.dom().elements())
            if (step.apply(name) == v.at(v.threshold)) return false;
    }
    return true;
}

std::vector<PersistencePoint> enumerate_persistence_points(const PersistencePoset& q) {
    if (!q.is_filtration())
        throw Error(ErrorKind::NotAFiltration, "persistence points require a filtration");
    const Nat big_t = q.stabilization();
    std::vector<PersistencePoint> out;
    for (const auto& name : q.poset_at(big_t).elements()) {
        // Walk the (unique, by injectivity) preimage chain back to its birth.
        std::vector<std::string> reversed{name};
        Nat birth = big_t;
        for (Nat i = big_t - 1; i >= 0; --i) {
            const MonotoneMap& step = q.step_at(i);
            std::string pre;
            bool found = false;
            for (const auto& cand : step.dom().elements())
                if (step.apply(cand) == reversed.back()) { pre = cand; found = true; break; }
            if (!found) break;
            reversed.push_back(pre);
            birth = i;
        }
        PersistencePoint v;
        v.threshold = birth;
        v.track.assign(reversed.rbegin(), reversed.rend());
        out.push_back(std::move(v));
    }
    return out;
}

PersistencePoset remove_persistence_point(const PersistencePoset& x, const PersistencePoint& v) {
    if (!is_persistence_point(x, v))
        throw Error(ErrorKind::NotAPersistencePoint, "removal requires a valid persistence point");
    const Nat big_t = x.stabilization();
    std::vector<FinitePoset> posets;
    std::vector<std::unordered_map<std::string, std::string>> steps;
    for (Nat i = 0; i <= big_t; ++i) {
        std::vector<std::string> keep;
        for (const auto& name : x.poset_at(i).elements())
            if (!(v.alive_at(i) && name == v.at(i))) keep.push_back(name);
        posets.push_back(x.poset_at(i).induced(keep));
    }
    for (Nat i = 0; i < big_t; ++i) {
        std::unordered_map<std::string, std::string> assignment;
        for (const auto& name : posets[static_cast<std::size_t>(i)].elements())
            assignment.emplace(name, x.step_at(i).apply(name));
        steps.push_back(std::move(assignment));
    }
    return PersistencePoset::create(std::move(posets), steps);
}

PersistencePoset principal_persistence_set(const PersistencePoset& x, const PersistencePoint& v,
                                           Side side, bool strict) {
    if (!is_persistence_point(x, v))
        throw Error(ErrorKind::NotAPersistencePoint, "principal set requires a valid persistence point");
    const Nat big_t = x.stabilization();
    std::vector<FinitePoset> posets;
    std::vector<std::unordered_map<std::string, std::string>> steps;
    for (Nat i = 0; i <= big_t; ++i) {
        std::vector<std::string> keep;
        if (v.alive_at(i)) keep = x.poset_at(i).principal_set(v.at(i), side, strict);
        posets.push_back(x.poset_at(i).induced(keep));
    }
    for (Nat i = 0; i < big_t; ++i) {
        std::unordered_map<std::string, std::string> assignment;
        for (const auto& name : posets[static_cast<std::size_t>(i)].elements())
            assignment.emplace(name, x.step_at(i).apply(name));
        steps.push_back(std::move(assignment));
    }
    return PersistencePoset::create(std::move(posets), steps);
}

PersistencePosetMap PersistencePosetMap::create(
    PersistencePoset source, PersistencePoset target,
    const std::vector<std::unordered_map<std::string, std::string>>& components) {
    const Nat big_t = std::max(source.stabilization(), target.stabilization());
    if (static_cast<Nat>(components.size()) != big_t + 1)
        throw Error(ErrorKind::ArityMismatch,
                    "expected " + std::to_string(big_t + 1) + " components, got " +
                        std::to_string(components.size()));
    PersistencePosetMap f;
    f.source_ = std::move(source);
    f.target_ = std::move(target);
    for (Nat i = 0; i <= big_t; ++i) {
        try {
            f.components_.emplace_back(f.source_.poset_at(i), f.target_.poset_at(i),
                                       components[static_cast<std::size_t>(i)]);
        } catch (const Error& e) {
            throw Error(e.kind(), "component " + std::to_string(i) + ": " + e.what());
        }
    }
    // Strict commutation with the structure maps, square by square.
    for (Nat i = 0; i < big_t; ++i) {
        const MonotoneMap& fi = f.components_[static_cast<std::size_t>(i)];
        const MonotoneMap& fj = f.components_[static_cast<std::size_t>(i + 1)];
        for (const auto& name : f.source_.poset_at(i).elements()) {
            const std::string via_target = f.target_.step_at(i).apply(fi.apply(name));
            const std::string via_source = fj.apply(f.source_.step_at(i).apply(name));
            if (via_target != via_source)
                throw Error(ErrorKind::ValidationError,
                            "square at index " + std::to_string(i) + " fails for element '" +
                                name + "': " + via_target + " vs " + via_source);
        }
    }
    return f;
}

PersistencePosetMap PersistencePosetMap::identity(const PersistencePoset& x) {
    std::vector<std::unordered_map<std::string, std::string>> components;
    for (Nat i = 0; i <= x.stabilization(); ++i) {
        std::unordered_map<std::string, std::string> id;
        for (const auto& name : x.poset_at(i).elements()) id.emplace(name, name);
        components.push_back(std::move(id));
    }
    return create(x, x, components);
}

const MonotoneMap& PersistencePosetMap::component_at(Nat i) const {
    return components_[static_cast<std::size_t>(std::min(i, stabilization()))];
}

PersistencePosetMap PersistencePosetMap::dualized() const {
    std::vector<std::unordered_map<std::string, std::string>> components;
    for (const auto& c : components_) {
        std::unordered_map<std::string, std::string> assignment;
        for (const auto& name : c.dom().elements()) assignment.emplace(name, c.apply(name));
        components.push_back(std::move(assignment));
    }
    return create(source_.dualized(), target_.dualized(), components);
}

PersistencePoset persistence_fiber(const PersistencePosetMap& f, const PersistencePoint& v, Side side) {
    if (!is_persistence_point(f.target(), v))
        throw Error(ErrorKind::NotAPersistencePoint, "fiber requires a persistence point of the target");
    const Nat big_t = f.stabilization();
    std::vector<FinitePoset> posets;
    std::vector<std::unordered_map<std::string, std::string>> steps;
    for (Nat i = 0; i <= big_t; ++i) {
        std::vector<std::string> keep;
        if (v.alive_at(i)) {
            const FinitePoset& qi = f.target().poset_at(i);
            const Nat vi = qi.index_of(v.at(std::min(i, f.target().stabilization())));
            const MonotoneMap& fi = f.component_at(i);
            for (Nat k = 0; k < fi.dom().size(); ++k) {
                const bool in = (side == Side::Lower) ? qi.leq(fi.apply_index(k), vi)
                                                      : qi.leq(vi, fi.apply_index(k));
                if (in) keep.push_back(fi.dom().element(k));
            }
        }
        posets.push_back(f.source().poset_at(i).induced(keep));
    }
    for (Nat i = 0; i < big_t; ++i) {
        std::unordered_map<std::string, std::string> assignment;
        for (const auto& name : posets[static_cast<std::size_t>(i)].elements())
            assignment.emplace(name, f.source().step_at(i).apply(name));
        steps.push_back(std::move(assignment));
    }
    return PersistencePoset::create(std::move(posets), steps);
}

PersistenceMappingCylinder persistence_mapping_cylinder(const PersistencePosetMap& f) {
    const Nat big_t = f.stabilization();
    // One suffix for every index, so names are stable along the diagram.
    std::vector<std::string> dom_names, cod_names;
    for (Nat i = 0; i <= big_t; ++i) {
        for (const auto& n : f.source().poset_at(i).elements()) dom_names.push_back(n);
        for (const auto& n : f.target().poset_at(i).elements()) cod_names.push_back(n);
    }
    const std::string suffix = cylinder_tag_suffix(dom_names, cod_names);

    std::vector<FinitePoset> posets;
    std::vector<std::unordered_map<std::string, std::string>> steps;
    for (Nat i = 0; i <= big_t; ++i) {
        const FinitePoset& p = f.source().poset_at(i);
        const FinitePoset& q = f.target().poset_at(i);
        const MonotoneMap& fi = f.component_at(i);
        std::vector<std::string> elements = p.elements();
        for (const auto& name : q.elements()) elements.push_back(name + suffix);
        std::vector<std::pair<std::string, std::string>> relations;
        for (const auto& [a, b] : p.strict_pairs()) relations.emplace_back(a, b);
        for (const auto& [a, b] : q.strict_pairs()) relations.emplace_back(a + suffix, b + suffix);
        for (Nat k = 0; k < p.size(); ++k)
            for (Nat j = 0; j < q.size(); ++j)
                if (q.leq(fi.apply_index(k), j)) relations.emplace_back(p.element(k), q.element(j) + suffix);
        posets.push_back(FinitePoset::from_relations(elements, relations));
    }
    for (Nat i = 0; i < big_t; ++i) {
        std::unordered_map<std::string, std::string> assignment;
        for (const auto& name : f.source().poset_at(i).elements())
            assignment.emplace(name, f.source().step_at(i).apply(name));
        for (const auto& name : f.target().poset_at(i).elements())
            assignment.emplace(name + suffix, f.target().step_at(i).apply(name) + suffix);
        steps.push_back(std::move(assignment));
    }

    PersistenceMappingCylinder out;
    out.tag_suffix = suffix;
    out.cylinder = PersistencePoset::create(std::move(posets), steps);

    std::vector<std::unordered_map<std::string, std::string>> incl_p, incl_q, retr;
    for (Nat i = 0; i <= big_t; ++i) {
        std::unordered_map<std::string, std::string> ip, iq, r;
        for (const auto& name : f.source().poset_at(i).elements()) ip.emplace(name, name);
        for (const auto& name : f.target().poset_at(i).elements()) iq.emplace(name, name + suffix);
        const MonotoneMap& fi = f.component_at(i);
        for (Nat k = 0; k < fi.dom().size(); ++k)
            r.emplace(fi.dom().element(k), fi.cod().element(fi.apply_index(k)));
        for (const auto& name : f.target().poset_at(i).elements()) r.emplace(name + suffix, name);
        incl_p.push_back(std::move(ip));
        incl_q.push_back(std::move(iq));
        retr.push_back(std::move(r));
    }
    out.include_source = PersistencePosetMap::create(f.source(), out.cylinder, incl_p);
    out.include_target = PersistencePosetMap::create(f.target(), out.cylinder, incl_q);
    out.retraction = PersistencePosetMap::create(out.cylinder, f.target(), retr);
    return out;
}

}  // namespace pqm
