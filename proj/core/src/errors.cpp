#include "tnl/errors.hpp"

namespace tnl {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::UnsupportedKernel: return "unsupported-kernel";
        case ErrorKind::DegenerateRoots: return "degenerate-roots";
        case ErrorKind::DegenerateProblem: return "degenerate-problem";
        case ErrorKind::IllPosed: return "ill-posed";
        case ErrorKind::Range: return "range";
        case ErrorKind::InsufficientData: return "insufficient-data";
        case ErrorKind::InternalConsistency: return "internal-consistency";
    }
    return "unknown";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace tnl
