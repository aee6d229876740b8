#include "pqm/fp_matrix.hpp"

#include <algorithm>
#include <cstddef>

namespace pqm {

namespace {

std::uint32_t inverse_mod(std::uint32_t a, Nat p) {
    // Fermat: a^(p-2) mod p for prime p.
    std::uint64_t base = a % p, result = 1;
    Nat e = p - 2;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

// Row-echelon working copy with deterministic pivoting. Shared by rank,
// kernel and solve so they all agree on basis conventions.
struct Echelon {
    Nat p;
    Nat rows, cols;
    std::vector<std::uint32_t> a;       // row-major
    std::vector<Nat> pivot_col_of_row;  // per used row, in processing order
    std::vector<Nat> pivot_row_of_col;  // -1 when the column is free

    explicit Echelon(const MatrixFp& m)
        : p(m.p()), rows(m.rows()), cols(m.cols()), a(static_cast<std::size_t>(rows * cols)) {
        for (Nat r = 0; r < rows; ++r)
            for (Nat c = 0; c < cols; ++c) a[static_cast<std::size_t>(r * cols + c)] = m.at(r, c);
        reduce();
    }

    std::uint32_t& at(Nat r, Nat c) { return a[static_cast<std::size_t>(r * cols + c)]; }
    std::uint32_t at(Nat r, Nat c) const { return a[static_cast<std::size_t>(r * cols + c)]; }

    void reduce() {
        pivot_row_of_col.assign(static_cast<std::size_t>(cols), -1);
        std::vector<char> row_used(static_cast<std::size_t>(rows), 0);
        for (Nat c = 0; c < cols; ++c) {
            Nat pivot = -1;
            for (Nat r = 0; r < rows; ++r) {
                if (!row_used[static_cast<std::size_t>(r)] && at(r, c) != 0) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) continue;
            row_used[static_cast<std::size_t>(pivot)] = 1;
            pivot_col_of_row.push_back(c);
            pivot_row_of_col[static_cast<std::size_t>(c)] = pivot;
            const std::uint64_t inv = inverse_mod(at(pivot, c), p);
            for (Nat j = c; j < cols; ++j)
                at(pivot, j) = static_cast<std::uint32_t>(inv * at(pivot, j) % p);
            for (Nat r = 0; r < rows; ++r) {
                if (r == pivot) continue;
                const std::uint64_t factor = at(r, c);
                if (factor == 0) continue;
                for (Nat j = c; j < cols; ++j) {
                    std::uint64_t v = at(r, j) + (p - 1) * factor % p * at(pivot, j) % p;
                    at(r, j) = static_cast<std::uint32_t>(v % p);
                }
            }
        }
    }

    Nat rank() const { return static_cast<Nat>(pivot_col_of_row.size()); }
};

}  // namespace

bool is_prime(Nat p) {
    if (p < 2) return false;
    for (Nat d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void require_prime(Nat p) {
    if (!is_prime(p)) throw Error(ErrorKind::NotPrime, "coefficient modulus " + std::to_string(p) + " is not prime");
}

MatrixFp::MatrixFp(Nat p, Nat rows, Nat cols)
    : p_(p), rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), 0) {
    require_prime(p);
    if (rows < 0 || cols < 0) throw Error(ErrorKind::InvalidArgument, "negative matrix dimension");
}

MatrixFp MatrixFp::identity(Nat p, Nat n) {
    MatrixFp m(p, n, n);
    for (Nat i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void MatrixFp::set(Nat r, Nat c, Nat value) {
    Nat v = value % p_;
    if (v < 0) v += p_;
    a_[static_cast<std::size_t>(r * cols_ + c)] = static_cast<std::uint32_t>(v);
}

MatrixFp MatrixFp::operator*(const MatrixFp& rhs) const {
    if (cols_ != rhs.rows_ || p_ != rhs.p_)
        throw Error(ErrorKind::ArityMismatch, "matrix product shape mismatch");
    MatrixFp out(p_, rows_, rhs.cols_);
    for (Nat i = 0; i < rows_; ++i) {
        for (Nat k = 0; k < cols_; ++k) {
            const std::uint64_t v = at(i, k);
            if (v == 0) continue;
            for (Nat j = 0; j < rhs.cols_; ++j) {
                std::uint64_t acc = out.at(i, j) + v * rhs.at(k, j) % p_;
                out.a_[static_cast<std::size_t>(i * rhs.cols_ + j)] = static_cast<std::uint32_t>(acc % p_);
            }
        }
    }
    return out;
}

bool MatrixFp::operator==(const MatrixFp& rhs) const {
    return p_ == rhs.p_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

bool MatrixFp::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](std::uint32_t v) { return v == 0; });
}

MatrixFp MatrixFp::column(Nat c) const {
    MatrixFp out(p_, rows_, 1);
    for (Nat r = 0; r < rows_; ++r) out.set(r, 0, at(r, c));
    return out;
}

std::vector<std::vector<Nat>> MatrixFp::to_rows() const {
    std::vector<std::vector<Nat>> out(static_cast<std::size_t>(rows_));
    for (Nat r = 0; r < rows_; ++r) {
        out[static_cast<std::size_t>(r)].resize(static_cast<std::size_t>(cols_));
        for (Nat c = 0; c < cols_; ++c) out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = at(r, c);
    }
    return out;
}

Nat rank(const MatrixFp& m) { return Echelon(m).rank(); }

MatrixFp kernel_basis(const MatrixFp& m) {
    Echelon e(m);
    std::vector<Nat> free_cols;
    for (Nat c = 0; c < m.cols(); ++c)
        if (e.pivot_row_of_col[static_cast<std::size_t>(c)] < 0) free_cols.push_back(c);
    MatrixFp out(m.p(), m.cols(), static_cast<Nat>(free_cols.size()));
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const Nat f = free_cols[k];
        out.set(f, static_cast<Nat>(k), 1);
        for (Nat c = 0; c < m.cols(); ++c) {
            const Nat r = e.pivot_row_of_col[static_cast<std::size_t>(c)];
            if (r < 0) continue;
            const std::uint32_t v = e.at(r, f);
            if (v != 0) out.set(c, static_cast<Nat>(k), m.p() - v);
        }
    }
    return out;
}

std::vector<Nat> independent_columns(const MatrixFp& m) {
    Echelon e(m);
    std::vector<Nat> cols;
    for (Nat c = 0; c < m.cols(); ++c)
        if (e.pivot_row_of_col[static_cast<std::size_t>(c)] >= 0) cols.push_back(c);
    return cols;
}

MatrixFp select_columns(const MatrixFp& m, const std::vector<Nat>& cols) {
    MatrixFp out(m.p(), m.rows(), static_cast<Nat>(cols.size()));
    for (std::size_t k = 0; k < cols.size(); ++k)
        for (Nat r = 0; r < m.rows(); ++r) out.set(r, static_cast<Nat>(k), m.at(r, cols[k]));
    return out;
}

MatrixFp hstack(const MatrixFp& a, const MatrixFp& b) {
    if (a.rows() != b.rows() || a.p() != b.p())
        throw Error(ErrorKind::ArityMismatch, "hstack shape mismatch");
    MatrixFp out(a.p(), a.rows(), a.cols() + b.cols());
    for (Nat r = 0; r < a.rows(); ++r) {
        for (Nat c = 0; c < a.cols(); ++c) out.set(r, c, a.at(r, c));
        for (Nat c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b.at(r, c));
    }
    return out;
}

bool solve(const MatrixFp& a, const MatrixFp& b, MatrixFp& x) {
    if (a.rows() != b.rows() || a.p() != b.p())
        throw Error(ErrorKind::ArityMismatch, "solve shape mismatch");
    Echelon e(hstack(a, b));
    // Inconsistent iff some pivot lands in the appended block.
    for (Nat c : e.pivot_col_of_row)
        if (c >= a.cols()) return false;
    x = MatrixFp(a.p(), a.cols(), b.cols());
    for (Nat c = 0; c < a.cols(); ++c) {
        const Nat r = e.pivot_row_of_col[static_cast<std::size_t>(c)];
        if (r < 0) continue;  // free variable: take 0
        for (Nat j = 0; j < b.cols(); ++j) x.set(c, j, e.at(r, a.cols() + j));
    }
    return true;
}

SpanFp::SpanFp(Nat p, Nat dim) : p_(p), ambient_(dim) { require_prime(p); }

bool SpanFp::reduce(std::vector<std::uint32_t>& v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
        const Nat piv = pivots_[k];
        const std::uint64_t factor = v[static_cast<std::size_t>(piv)];
        if (factor == 0) continue;
        const auto& row = rows_[k];
        for (Nat j = 0; j < ambient_; ++j) {
            std::uint64_t val = v[static_cast<std::size_t>(j)] + (p_ - 1) * factor % p_ * row[static_cast<std::size_t>(j)] % p_;
            v[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(val % p_);
        }
    }
    return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

bool SpanFp::add_if_independent(const std::vector<std::uint32_t>& v) {
    std::vector<std::uint32_t> w = v;
    if (reduce(w)) return false;
    Nat piv = 0;
    while (w[static_cast<std::size_t>(piv)] == 0) ++piv;
    const std::uint64_t inv = [&] {
        std::uint64_t base = w[static_cast<std::size_t>(piv)], result = 1;
        Nat e = p_ - 2;
        while (e > 0) {
            if (e & 1) result = result * base % p_;
            base = base * base % p_;
            e >>= 1;
        }
        return result;
    }();
    for (Nat j = 0; j < ambient_; ++j)
        w[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(inv * w[static_cast<std::size_t>(j)] % p_);
    pivots_.push_back(piv);
    rows_.push_back(std::move(w));
    return true;
}

bool SpanFp::contains(const std::vector<std::uint32_t>& v) const {
    std::vector<std::uint32_t> w = v;
    return reduce(w);
}

}  // namespace pqm
