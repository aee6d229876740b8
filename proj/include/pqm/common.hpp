#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>

namespace pqm {

// Index/count type used throughout. Persistence indices, dimensions and
// distances are small non-negative integers; kInf is the distinguished
// "infinity" sentinel (serialized as the literal string "inf").
using Nat = std::int64_t;
inline constexpr Nat kInf = std::numeric_limits<Nat>::max();

inline bool is_inf(Nat v) { return v == kInf; }

inline std::string nat_to_string(Nat v) {
    return is_inf(v) ? std::string("inf") : std::to_string(v);
}

enum class ErrorKind {
    DuplicateElement,
    UnknownElement,
    CycleDetected,
    NonMonotoneStep,
    ArityMismatch,
    NotAFiltration,
    NotAPersistencePoint,
    NotPrime,
    NegativeMultiplicity,
    CapExceeded,
    DomainMismatch,
    UnknownVertex,
    ShapeMismatch,
    TargetNotFiltration,
    ParseError,
    ValidationError,
    SizeCapExceeded,
    IoError,
    InvalidArgument,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message),
          kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

// Deterministic RNG for generators and tests. Bounded draws use plain
// modulo so the byte stream depends only on the seed and the call sequence.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // uniform in [0, n)
    std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : engine_() % n; }

    // uniform in [lo, hi] inclusive
    Nat range(Nat lo, Nat hi) {
        if (hi < lo) return lo;
        return lo + static_cast<Nat>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool chance(double prob) {
        return static_cast<double>(engine_()) / static_cast<double>(std::numeric_limits<std::uint64_t>::max()) < prob;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace pqm
