#pragma once

#include <vector>

#include "pqm/common.hpp"

namespace pqm {

bool is_prime(Nat p);
void require_prime(Nat p);

// Dense matrix over the prime field F_p. Entries are residues in [0, p).
class MatrixFp {
public:
    MatrixFp() : p_(2), rows_(0), cols_(0) {}
    MatrixFp(Nat p, Nat rows, Nat cols);

    static MatrixFp identity(Nat p, Nat n);

    Nat p() const { return p_; }
    Nat rows() const { return rows_; }
    Nat cols() const { return cols_; }

    std::uint32_t at(Nat r, Nat c) const { return a_[static_cast<std::size_t>(r * cols_ + c)]; }
    void set(Nat r, Nat c, Nat value);

    MatrixFp operator*(const MatrixFp& rhs) const;
    bool operator==(const MatrixFp& rhs) const;
    bool operator!=(const MatrixFp& rhs) const { return !(*this == rhs); }

    bool is_zero() const;
    MatrixFp column(Nat c) const;
    std::vector<std::vector<Nat>> to_rows() const;

private:
    Nat p_;
    Nat rows_, cols_;
    std::vector<std::uint32_t> a_;
};

// Elimination suite. All routines pivot lexicographically: columns are
// processed left to right and the pivot row is the first unused row with a
// nonzero entry, so computed bases are reproducible across runs.
Nat rank(const MatrixFp& m);

// Basis of the null space, one column per free variable (ascending column order).
MatrixFp kernel_basis(const MatrixFp& m);

// Indices of the leftmost maximal independent subset of columns.
std::vector<Nat> independent_columns(const MatrixFp& m);

MatrixFp select_columns(const MatrixFp& m, const std::vector<Nat>& cols);
MatrixFp hstack(const MatrixFp& a, const MatrixFp& b);

// Solve A X = B; returns false when inconsistent. X has one column per column of B.
bool solve(const MatrixFp& a, const MatrixFp& b, MatrixFp& x);

// Incremental span tracker used to extend a basis vector by vector.
class SpanFp {
public:
    SpanFp(Nat p, Nat dim);

    // Returns true (and absorbs the vector) when it is independent of the span.
    bool add_if_independent(const std::vector<std::uint32_t>& v);
    bool contains(const std::vector<std::uint32_t>& v) const;
    Nat dim() const { return static_cast<Nat>(pivots_.size()); }

private:
    bool reduce(std::vector<std::uint32_t>& v) const;  // true when reduced to zero

    Nat p_;
    Nat ambient_;
    std::vector<Nat> pivots_;
    std::vector<std::vector<std::uint32_t>> rows_;
};

}  // namespace pqm
