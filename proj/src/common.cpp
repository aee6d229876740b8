#include "pqm/common.hpp"

namespace pqm {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DuplicateElement: return "DuplicateElement";
        case ErrorKind::UnknownElement: return "UnknownElement";
        case ErrorKind::CycleDetected: return "CycleDetected";
        case ErrorKind::NonMonotoneStep: return "NonMonotoneStep";
        case ErrorKind::ArityMismatch: return "ArityMismatch";
        case ErrorKind::NotAFiltration: return "NotAFiltration";
        case ErrorKind::NotAPersistencePoint: return "NotAPersistencePoint";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::DomainMismatch: return "DomainMismatch";
        case ErrorKind::UnknownVertex: return "UnknownVertex";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::TargetNotFiltration: return "TargetNotFiltration";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ValidationError: return "ValidationError";
        case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
        case ErrorKind::IoError: return "IoError";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

}  // namespace pqm
