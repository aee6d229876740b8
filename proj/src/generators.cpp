#include "pqm/generators.hpp"

#include <algorithm>

namespace pqm {

namespace {

void check_cap(bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::SizeCapExceeded, what);
}

struct RandomOrder {
    std::vector<std::string> names;
    std::vector<Nat> births;                              // per element
    std::vector<std::vector<char>> below;                 // strict order on all elements
};

// Random DAG order: relations follow a shuffled linear order, then close.
RandomOrder random_order(Rng& rng, const std::string& prefix, Nat n, Nat t_index, double edge_prob) {
    RandomOrder out;
    for (Nat i = 0; i < n; ++i) out.names.push_back(prefix + std::to_string(i));
    std::vector<Nat> position(static_cast<std::size_t>(n));
    for (Nat i = 0; i < n; ++i) position[static_cast<std::size_t>(i)] = i;
    for (Nat i = n - 1; i > 0; --i)
        std::swap(position[static_cast<std::size_t>(i)],
                  position[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i + 1)))]);
    out.below.assign(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (Nat i = 0; i < n; ++i)
        for (Nat j = 0; j < n; ++j)
            if (position[static_cast<std::size_t>(i)] < position[static_cast<std::size_t>(j)] &&
                rng.chance(edge_prob))
                out.below[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    for (Nat k = 0; k < n; ++k)
        for (Nat i = 0; i < n; ++i)
            for (Nat j = 0; j < n; ++j)
                if (out.below[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] &&
                    out.below[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                    out.below[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
    for (Nat i = 0; i < n; ++i) out.births.push_back(rng.range(0, t_index));
    return out;
}

PersistencePoset filtration_from_order(const RandomOrder& order, Nat t_index) {
    const Nat n = static_cast<Nat>(order.names.size());
    std::vector<FinitePoset> posets;
    std::vector<std::unordered_map<std::string, std::string>> steps;
    for (Nat t = 0; t <= t_index; ++t) {
        std::vector<std::string> elements;
        std::vector<std::pair<std::string, std::string>> relations;
        for (Nat i = 0; i < n; ++i)
            if (order.births[static_cast<std::size_t>(i)] <= t) elements.push_back(order.names[static_cast<std::size_t>(i)]);
        for (Nat i = 0; i < n; ++i)
            for (Nat j = 0; j < n; ++j)
                if (order.below[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
                    order.births[static_cast<std::size_t>(i)] <= t && order.births[static_cast<std::size_t>(j)] <= t)
                    relations.emplace_back(order.names[static_cast<std::size_t>(i)],
                                           order.names[static_cast<std::size_t>(j)]);
        posets.push_back(FinitePoset::from_relations(elements, relations));
    }
    for (Nat t = 0; t < t_index; ++t) {
        std::unordered_map<std::string, std::string> step;
        for (const auto& name : posets[static_cast<std::size_t>(t)].elements()) step.emplace(name, name);
        steps.push_back(std::move(step));
    }
    return PersistencePoset::create(std::move(posets), steps);
}

}  // namespace

PersistencePoset generate_random_filtration(const RandomFiltrationParams& params,
                                            const GeneratorCaps& caps) {
    check_cap(params.n >= 1 && params.n <= caps.max_elements, "element count out of range");
    check_cap(params.t_index >= 0 && params.t_index <= caps.max_stabilization,
              "stabilization index out of range");
    Rng rng(params.seed);
    return filtration_from_order(random_order(rng, "v", params.n, params.t_index, params.edge_prob),
                                 params.t_index);
}

PersistencePosetMap generate_fibered_map(const FiberedMapParams& params, const GeneratorCaps& caps) {
    check_cap(params.target_n >= 1 && params.target_n <= caps.max_elements, "target size out of range");
    check_cap(params.t_index >= 0 && params.t_index <= caps.max_stabilization,
              "stabilization index out of range");
    check_cap(params.max_block >= 1 && params.max_block <= caps.max_block, "block size out of range");
    check_cap(params.delay >= 0 && params.delay <= caps.max_delay, "delay out of range");
    Rng rng(params.seed);
    const Nat m = params.target_n;
    const Nat t_index = params.t_index;
    const RandomOrder q_order = random_order(rng, "q", m, t_index, params.edge_prob);
    const PersistencePoset target = filtration_from_order(q_order, t_index);

    struct Pendant {
        std::string name;
        Nat block;
        Nat birth;
        Nat attach;  // index from which the upward relations exist
    };
    std::vector<std::string> apex_names;
    for (Nat j = 0; j < m; ++j) apex_names.push_back("a" + std::to_string(j));
    std::vector<Pendant> pendants;
    check_cap(m * params.max_block <= caps.max_elements, "source size out of range");
    for (Nat j = 0; j < m; ++j) {
        const Nat block_size = rng.range(1, params.max_block);
        for (Nat k = 1; k < block_size; ++k) {
            Pendant p;
            p.name = "b" + std::to_string(j) + "x" + std::to_string(k - 1);
            p.block = j;
            p.birth = rng.range(q_order.births[static_cast<std::size_t>(j)], t_index);
            // Keep transients finite: the attachment must happen by T.
            p.attach = std::min(p.birth + rng.range(0, params.delay), t_index);
            pendants.push_back(std::move(p));
        }
    }

    auto q_leq = [&](Nat i, Nat j) {
        return i == j || q_order.below[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0;
    };

    std::vector<FinitePoset> posets;
    std::vector<std::unordered_map<std::string, std::string>> steps;
    std::vector<std::unordered_map<std::string, std::string>> components;
    for (Nat t = 0; t <= t_index; ++t) {
        std::vector<std::string> elements;
        std::vector<std::pair<std::string, std::string>> relations;
        std::unordered_map<std::string, std::string> component;
        for (Nat j = 0; j < m; ++j) {
            if (q_order.births[static_cast<std::size_t>(j)] > t) continue;
            elements.push_back(apex_names[static_cast<std::size_t>(j)]);
            component.emplace(apex_names[static_cast<std::size_t>(j)], q_order.names[static_cast<std::size_t>(j)]);
            for (Nat i = 0; i < m; ++i)
                if (i != j && q_order.below[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
                    q_order.births[static_cast<std::size_t>(i)] <= t)
                    relations.emplace_back(apex_names[static_cast<std::size_t>(i)],
                                           apex_names[static_cast<std::size_t>(j)]);
        }
        for (const auto& p : pendants) {
            if (p.birth > t) continue;
            elements.push_back(p.name);
            component.emplace(p.name, q_order.names[static_cast<std::size_t>(p.block)]);
            if (p.attach > t) continue;
            for (Nat j = 0; j < m; ++j)
                if (q_leq(p.block, j) && q_order.births[static_cast<std::size_t>(j)] <= t)
                    relations.emplace_back(p.name, apex_names[static_cast<std::size_t>(j)]);
        }
        posets.push_back(FinitePoset::from_relations(elements, relations));
        components.push_back(std::move(component));
    }
    for (Nat t = 0; t < t_index; ++t) {
        std::unordered_map<std::string, std::string> step;
        for (const auto& name : posets[static_cast<std::size_t>(t)].elements()) step.emplace(name, name);
        steps.push_back(std::move(step));
    }
    PersistencePoset source = PersistencePoset::create(std::move(posets), steps);
    return PersistencePosetMap::create(std::move(source), target, components);
}

PersistencePosetMap generate_cone_collapse(const ConeCollapseParams& params, const GeneratorCaps& caps) {
    RandomFiltrationParams base;
    base.seed = params.seed;
    base.n = params.n;
    base.t_index = params.t_index;
    base.edge_prob = params.edge_prob;
    return PersistencePosetMap::identity(generate_random_filtration(base, caps));
}

}  // namespace pqm
