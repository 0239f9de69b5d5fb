#ifndef CIM_CONFIG_HPP
#define CIM_CONFIG_HPP

#include <stdexcept>
#include <string>

namespace cim {

// Resource limits for the compute engines. Exceeding a cap raises an
// error; results are never silently truncated.
struct Caps {
    int degree_cap = 12;         // max total degree of any S-pair lcm
    long pair_cap = 1'000'000;   // max S-pairs processed per Buchberger run
    long bfs_cap = 1'000'000;    // max fiber states explored per query
    long memory_cap = 200'000;   // max monomial-basis size per graded slice
    long cycle_cap = 100'000;    // max cycles enumerated per graph
    int admissible_cap = 16;     // max |V(C)| for subset enumeration
    long hilbert_cap = 2'000'000; // max recursion nodes in the Hilbert pivot
};

enum class ErrorKind {
    Parse,
    Validation,
    ResourceCap,
    MemoryCap,
    Precondition,
    ZeroPolynomial,
    NotAdmissible,
    NotCornerCollection,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

    // Stable CLI exit-code contract: 2 parse/validation, 3 resource caps,
    // 4 precondition violations.
    int exit_code() const {
        switch (kind_) {
            case ErrorKind::Parse:
            case ErrorKind::Validation: return 2;
            case ErrorKind::ResourceCap:
            case ErrorKind::MemoryCap: return 3;
            default: return 4;
        }
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace cim

#endif
