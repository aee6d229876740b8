#include "pqm/barcode.hpp"

#include <algorithm>
#include <map>

namespace pqm {

Nat Barcode::count_alive(Nat i) const {
    Nat n = 0;
    for (const auto& bar : intervals)
        if (bar.alive_at(i)) ++n;
    return n;
}

Nat rank_invariant(const PersistenceModule& m, Nat i, Nat j) {
    if (i < 0 || j < i) throw Error(ErrorKind::InvalidArgument, "rank invariant needs 0 <= i <= j");
    return rank(m.composite(i, j));
}

Barcode interval_decomposition(const PersistenceModule& m) {
    const Nat big_t = m.stabilization();
    // r[i][j] for 0 <= i <= j <= T.
    std::vector<std::vector<Nat>> r(static_cast<std::size_t>(big_t) + 1);
    for (Nat i = 0; i <= big_t; ++i) {
        MatrixFp acc = MatrixFp::identity(m.p, m.dim_at(i));
        r[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(big_t) + 1, 0);
        for (Nat j = i; j <= big_t; ++j) {
            if (j > i) acc = m.step_at(j - 1) * acc;
            r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rank(acc);
        }
    }
    auto rk = [&](Nat i, Nat j) -> Nat {
        if (i < 0) return 0;
        return r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    };
    Barcode out;
    out.stabilization = big_t;
    for (Nat b = 0; b <= big_t; ++b) {
        for (Nat d = b + 1; d <= big_t; ++d) {
            const Nat mult = rk(b, d - 1) - rk(b - 1, d - 1) - rk(b, d) + rk(b - 1, d);
            if (mult < 0)
                throw Error(ErrorKind::NegativeMultiplicity,
                            "interval [" + std::to_string(b) + "," + std::to_string(d) + ")");
            for (Nat k = 0; k < mult; ++k) out.intervals.push_back(Interval{b, d});
        }
        const Nat mult_inf = rk(b, big_t) - rk(b - 1, big_t);
        if (mult_inf < 0)
            throw Error(ErrorKind::NegativeMultiplicity, "interval [" + std::to_string(b) + ",inf)");
        for (Nat k = 0; k < mult_inf; ++k) out.intervals.push_back(Interval{b, kInf});
    }
    std::sort(out.intervals.begin(), out.intervals.end());
    return out;
}

PersistenceModule barcode_module(const Barcode& bc, Nat p) {
    require_prime(p);
    std::vector<Interval> bars = bc.intervals;
    std::sort(bars.begin(), bars.end());
    const Nat big_t = bc.stabilization;
    PersistenceModule m;
    m.p = p;
    std::vector<std::vector<Nat>> position(static_cast<std::size_t>(big_t) + 1);
    for (Nat i = 0; i <= big_t; ++i) {
        Nat d = 0;
        position[static_cast<std::size_t>(i)].assign(bars.size(), -1);
        for (std::size_t k = 0; k < bars.size(); ++k)
            if (bars[k].alive_at(i)) position[static_cast<std::size_t>(i)][k] = d++;
        m.dims.push_back(d);
    }
    for (Nat i = 0; i < big_t; ++i) {
        MatrixFp step(p, m.dims[static_cast<std::size_t>(i + 1)], m.dims[static_cast<std::size_t>(i)]);
        for (std::size_t k = 0; k < bars.size(); ++k) {
            const Nat from = position[static_cast<std::size_t>(i)][k];
            const Nat to = position[static_cast<std::size_t>(i + 1)][k];
            if (from >= 0 && to >= 0) step.set(to, from, 1);
        }
        m.steps.push_back(std::move(step));
    }
    return m;
}

PersistenceModule point_module(Nat threshold, Nat degree, Nat t_index, Nat p) {
    if (threshold > t_index)
        throw Error(ErrorKind::InvalidArgument, "point module threshold exceeds stabilization index");
    Barcode bc;
    bc.stabilization = t_index;
    if (degree == 0) bc.intervals.push_back(Interval{threshold, kInf});
    return barcode_module(bc, p);
}

namespace {

Nat deletion_cost(const Interval& bar) {
    if (is_inf(bar.death)) return kInf;
    return (bar.death - bar.birth + 1) / 2;  // ceil((d-b)/2)
}

Nat match_cost(const Interval& a, const Interval& b) {
    const Nat db = a.birth > b.birth ? a.birth - b.birth : b.birth - a.birth;
    Nat dd;
    if (is_inf(a.death) && is_inf(b.death)) dd = 0;
    else if (is_inf(a.death) || is_inf(b.death)) return kInf;
    else dd = a.death > b.death ? a.death - b.death : b.death - a.death;
    return std::max(db, dd);
}

// Perfect-matching feasibility at threshold eps via the standard augmented
// bipartite graph: each side is (real bars) + (diagonal partners of the
// other side); diagonal-diagonal edges are free.
class MatchingFeasibility {
public:
    MatchingFeasibility(const std::vector<Interval>& a, const std::vector<Interval>& b)
        : a_(a), b_(b), n_(a.size() + b.size()) {}

    bool feasible(Nat eps) const {
        std::vector<Nat> match_right(n_, -1);
        std::vector<char> visited;
        Nat matched = 0;
        for (std::size_t u = 0; u < n_; ++u) {
            visited.assign(n_, 0);
            if (augment(static_cast<Nat>(u), eps, visited, match_right)) ++matched;
        }
        return matched == static_cast<Nat>(n_);
    }

private:
    Nat edge_cost(Nat left, Nat right) const {
        const bool left_real = left < static_cast<Nat>(a_.size());
        const bool right_real = right < static_cast<Nat>(b_.size());
        if (left_real && right_real) return match_cost(a_[static_cast<std::size_t>(left)],
                                                       b_[static_cast<std::size_t>(right)]);
        if (left_real && !right_real) {
            // Right diagonal nodes pair with left bars one-to-one.
            const Nat partner = right - static_cast<Nat>(b_.size());
            return partner == left ? deletion_cost(a_[static_cast<std::size_t>(left)]) : kInf;
        }
        if (!left_real && right_real) {
            const Nat partner = left - static_cast<Nat>(a_.size());
            return partner == right ? deletion_cost(b_[static_cast<std::size_t>(right)]) : kInf;
        }
        return 0;
    }

    bool augment(Nat u, Nat eps, std::vector<char>& visited, std::vector<Nat>& match_right) const {
        for (Nat v = 0; v < static_cast<Nat>(n_); ++v) {
            if (visited[static_cast<std::size_t>(v)]) continue;
            const Nat cost = edge_cost(u, v);
            if (is_inf(cost) || cost > eps) continue;
            visited[static_cast<std::size_t>(v)] = 1;
            if (match_right[static_cast<std::size_t>(v)] < 0 ||
                augment(match_right[static_cast<std::size_t>(v)], eps, visited, match_right)) {
                match_right[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        return false;
    }

    const std::vector<Interval>& a_;
    const std::vector<Interval>& b_;
    std::size_t n_;
};

}  // namespace

Nat bottleneck_distance(const Barcode& a, const Barcode& b) {
    if (a.stabilization != b.stabilization)
        throw Error(ErrorKind::ArityMismatch, "barcodes have different stabilization indices");
    const Nat big_t = a.stabilization;
    Nat max_len = 0;
    for (const auto& bars : {a.intervals, b.intervals})
        for (const auto& bar : bars)
            if (!is_inf(bar.death)) max_len = std::max(max_len, bar.length());
    const Nat hi = big_t + max_len;
    MatchingFeasibility feasibility(a.intervals, b.intervals);
    if (!feasibility.feasible(hi)) return kInf;  // mismatched inf-bars
    Nat lo = 0, high = hi;
    while (lo < high) {
        const Nat mid = lo + (high - lo) / 2;
        if (feasibility.feasible(mid)) high = mid;
        else lo = mid + 1;
    }
    return lo;
}

Nat min_interleaving_eps(const PersistenceModule& m, const PersistenceModule& n) {
    if (m.p != n.p) throw Error(ErrorKind::ArityMismatch, "modules have different primes");
    const Nat big_t = std::max(m.stabilization(), n.stabilization());
    return bottleneck_distance(interval_decomposition(m.extended_to(big_t)),
                               interval_decomposition(n.extended_to(big_t)));
}

namespace {

// Linear space of natural ε-maps f : M -> N, parametrized by a kernel basis.
// Unknowns are the entries of f_0..f_T in index order, each row-major.
struct NaturalMapSpace {
    std::vector<Nat> offsets;  // start of f_i's entries
    std::vector<Nat> rows, cols;
    Nat total = 0;
    MatrixFp basis;  // total x dim

    NaturalMapSpace(const PersistenceModule& m, const PersistenceModule& n, Nat eps) {
        const Nat big_t = m.stabilization();  // both extended to a common T
        for (Nat i = 0; i <= big_t; ++i) {
            offsets.push_back(total);
            rows.push_back(n.dim_at(i + eps));
            cols.push_back(m.dim_at(i));
            total += rows.back() * cols.back();
        }
        // Commutation: Φ^N_{i+eps,i+1+eps} f_i = f_{i+1} Φ^M_{i,i+1}.
        std::vector<std::vector<Nat>> eq_rows;
        const Nat p = m.p;
        for (Nat i = 0; i < big_t; ++i) {
            const MatrixFp phi_n = n.composite(i + eps, i + 1 + eps);
            const MatrixFp phi_m = m.composite(i, i + 1);
            const Nat r_next = rows[static_cast<std::size_t>(i + 1)];
            for (Nat a = 0; a < r_next; ++a)
                for (Nat b = 0; b < cols[static_cast<std::size_t>(i)]; ++b) {
                    std::vector<Nat> eq(static_cast<std::size_t>(total), 0);
                    for (Nat k = 0; k < rows[static_cast<std::size_t>(i)]; ++k)
                        eq[static_cast<std::size_t>(entry(i, k, b))] += phi_n.at(a, k);
                    for (Nat k = 0; k < cols[static_cast<std::size_t>(i + 1)]; ++k)
                        eq[static_cast<std::size_t>(entry(i + 1, a, k))] += p - phi_m.at(k, b);
                    eq_rows.push_back(std::move(eq));
                }
        }
        MatrixFp system(p, static_cast<Nat>(eq_rows.size()), total);
        for (std::size_t r = 0; r < eq_rows.size(); ++r)
            for (Nat c = 0; c < total; ++c) system.set(static_cast<Nat>(r), c, eq_rows[r][static_cast<std::size_t>(c)]);
        basis = kernel_basis(system);
    }

    Nat entry(Nat i, Nat r, Nat c) const {
        return offsets[static_cast<std::size_t>(i)] + r * cols[static_cast<std::size_t>(i)] + c;
    }

    MatrixFp component(const std::vector<std::uint32_t>& flat, Nat i, Nat p) const {
        MatrixFp out(p, rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(i)]);
        for (Nat r = 0; r < out.rows(); ++r)
            for (Nat c = 0; c < out.cols(); ++c)
                out.set(r, c, flat[static_cast<std::size_t>(entry(i, r, c))]);
        return out;
    }
};

}  // namespace

bool brute_force_interleaving_check(const PersistenceModule& m, const PersistenceModule& n, Nat eps,
                                    const BruteForceCaps& caps) {
    if (m.p != n.p) throw Error(ErrorKind::ArityMismatch, "modules have different primes");
    if (eps < 0) throw Error(ErrorKind::InvalidArgument, "negative epsilon");
    const Nat p = m.p;
    if (p > caps.max_prime)
        throw Error(ErrorKind::CapExceeded, "prime " + std::to_string(p) + " above brute-force cap");
    if (m.total_dim() > caps.total_dim || n.total_dim() > caps.total_dim)
        throw Error(ErrorKind::CapExceeded, "total dimension above brute-force cap");
    if (m.stabilization() > caps.max_stabilization || n.stabilization() > caps.max_stabilization)
        throw Error(ErrorKind::CapExceeded, "stabilization index above brute-force cap");

    const Nat big_t = std::max(m.stabilization(), n.stabilization());
    const PersistenceModule em = m.extended_to(big_t);
    const PersistenceModule en = n.extended_to(big_t);

    const NaturalMapSpace f_space(em, en, eps);
    const NaturalMapSpace g_space(en, em, eps);

    // Enumerate the smaller natural-map space; solve linearly for the other.
    const bool enumerate_f = f_space.basis.cols() <= g_space.basis.cols();
    const NaturalMapSpace& outer = enumerate_f ? f_space : g_space;
    const NaturalMapSpace& inner = enumerate_f ? g_space : f_space;
    const PersistenceModule& outer_src = enumerate_f ? em : en;
    const PersistenceModule& outer_dst = enumerate_f ? en : em;

    double budget = 1;
    for (Nat k = 0; k < outer.basis.cols(); ++k) {
        budget *= static_cast<double>(p);
        if (budget > caps.max_candidates)
            throw Error(ErrorKind::CapExceeded, "enumeration budget exceeded");
    }

    const Nat dim_outer = outer.basis.cols();
    std::vector<std::uint32_t> coeff(static_cast<std::size_t>(dim_outer), 0);
    std::vector<std::uint32_t> flat(static_cast<std::size_t>(outer.total), 0);

    // Composite targets: g∘f = Φ^{src} shift, f∘g = Φ^{dst} shift.
    std::vector<MatrixFp> shift_src, shift_dst;
    for (Nat i = 0; i <= big_t; ++i) {
        shift_src.push_back(outer_src.composite(i, i + 2 * eps));
        shift_dst.push_back(outer_dst.composite(i, i + 2 * eps));
    }

    for (;;) {
        // flat = outer.basis * coeff
        std::fill(flat.begin(), flat.end(), 0);
        for (Nat k = 0; k < dim_outer; ++k) {
            const std::uint64_t c = coeff[static_cast<std::size_t>(k)];
            if (c == 0) continue;
            for (Nat r = 0; r < outer.total; ++r)
                flat[static_cast<std::size_t>(r)] = static_cast<std::uint32_t>(
                    (flat[static_cast<std::size_t>(r)] + c * outer.basis.at(r, k)) % p);
        }

        // Conditions on the inner map h (in inner-basis coordinates gamma):
        //   h_{i+eps} f_i = shift_src_i   and   f_{i+eps} h_i = shift_dst_i.
        std::vector<std::vector<Nat>> lhs_rows;
        std::vector<Nat> rhs;
        const Nat dim_inner = inner.basis.cols();
        for (Nat i = 0; i <= big_t; ++i) {
            const MatrixFp f_i = outer.component(flat, i, p);
            const MatrixFp f_ie = outer.component(flat, std::min(i + eps, big_t), p);
            // h_{i+eps} f_i = shift_src_i : rows (dim src_{i+2eps}) x cols (dim src_i)
            const Nat hi_idx = std::min(i + eps, big_t);
            for (Nat a = 0; a < inner.rows[static_cast<std::size_t>(hi_idx)]; ++a)
                for (Nat b = 0; b < f_i.cols(); ++b) {
                    std::vector<Nat> eq(static_cast<std::size_t>(dim_inner), 0);
                    for (Nat g = 0; g < dim_inner; ++g) {
                        std::uint64_t acc = 0;
                        for (Nat k = 0; k < f_i.rows(); ++k)
                            acc += static_cast<std::uint64_t>(
                                       inner.basis.at(inner.entry(hi_idx, a, k), g)) *
                                   f_i.at(k, b);
                        eq[static_cast<std::size_t>(g)] = static_cast<Nat>(acc % p);
                    }
                    lhs_rows.push_back(std::move(eq));
                    rhs.push_back(shift_src[static_cast<std::size_t>(i)].at(a, b));
                }
            // f_{i+eps} h_i = shift_dst_i : rows (dim dst_{i+2eps}) x cols (dim dst_i)
            for (Nat a = 0; a < f_ie.rows(); ++a)
                for (Nat b = 0; b < inner.cols[static_cast<std::size_t>(i)]; ++b) {
                    std::vector<Nat> eq(static_cast<std::size_t>(dim_inner), 0);
                    for (Nat g = 0; g < dim_inner; ++g) {
                        std::uint64_t acc = 0;
                        for (Nat k = 0; k < f_ie.cols(); ++k)
                            acc += static_cast<std::uint64_t>(f_ie.at(a, k)) *
                                   inner.basis.at(inner.entry(i, k, b), g);
                        eq[static_cast<std::size_t>(g)] = static_cast<Nat>(acc % p);
                    }
                    lhs_rows.push_back(std::move(eq));
                    rhs.push_back(shift_dst[static_cast<std::size_t>(i)].at(a, b));
                }
        }
        MatrixFp lhs(p, static_cast<Nat>(lhs_rows.size()), dim_inner);
        MatrixFp rhs_m(p, static_cast<Nat>(lhs_rows.size()), 1);
        for (std::size_t r = 0; r < lhs_rows.size(); ++r) {
            for (Nat c = 0; c < dim_inner; ++c)
                lhs.set(static_cast<Nat>(r), c, lhs_rows[r][static_cast<std::size_t>(c)]);
            rhs_m.set(static_cast<Nat>(r), 0, rhs[r]);
        }
        MatrixFp solution;
        if (solve(lhs, rhs_m, solution)) return true;

        // Next coefficient vector (odometer).
        Nat pos = 0;
        while (pos < dim_outer) {
            coeff[static_cast<std::size_t>(pos)] =
                static_cast<std::uint32_t>((coeff[static_cast<std::size_t>(pos)] + 1) % p);
            if (coeff[static_cast<std::size_t>(pos)] != 0) break;
            ++pos;
        }
        if (pos == dim_outer) return false;
    }
}

AcyclicityResult acyclicity_measure(const PersistencePoset& x, Nat p, Nat max_degree) {
    const Nat threshold = x.threshold();
    if (is_inf(threshold)) return AcyclicityResult{kInf, true};
    const std::vector<PersistenceModule> modules = persistence_modules_upto(x, max_degree, p);
    Nat value = 0;
    for (Nat j = 0; j <= max_degree; ++j) {
        const PersistenceModule point = point_module(threshold, j, x.stabilization(), p);
        value = std::max(value, min_interleaving_eps(modules[static_cast<std::size_t>(j)], point));
    }
    return AcyclicityResult{value, false};
}

}  // namespace pqm
