#ifndef GBC_ERRORS_HPP
#define GBC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gbc {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Graph construction.
struct LoopEdge : Error {
    explicit LoopEdge(const std::string& what) : Error(what) {}
};
struct DuplicateEdge : Error {
    explicit DuplicateEdge(const std::string& what) : Error(what) {}
};
struct VertexOutOfRange : Error {
    explicit VertexOutOfRange(const std::string& what) : Error(what) {}
};
struct EmptyGraph : Error {
    explicit EmptyGraph(const std::string& what) : Error(what) {}
};

// Colorings.
struct IncompleteColoring : Error {
    explicit IncompleteColoring(const std::string& what) : Error(what) {}
};
struct GapInColors : Error {
    explicit GapInColors(const std::string& what) : Error(what) {}
};
struct NotAPermutation : Error {
    explicit NotAPermutation(const std::string& what) : Error(what) {}
};
struct NotGrundyValid : Error {
    explicit NotGrundyValid(const std::string& what) : Error(what) {}
};

// Search engines.
struct SearchLimitExceeded : Error {
    explicit SearchLimitExceeded(const std::string& what) : Error(what) {}
};
struct NotATree : Error {
    explicit NotATree(const std::string& what) : Error(what) {}
};

// Families.
struct BadParameters : Error {
    explicit BadParameters(const std::string& what) : Error(what) {}
};

// Recoloring procedures.
struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};
// The produced certificate failed its own verification.  This is never
// swallowed: it means the procedure diverged from what it promises.
struct CertificateCheckFailed : Error {
    explicit CertificateCheckFailed(const std::string& what) : Error(what) {}
};
struct NoWitnessFound : Error {
    explicit NoWitnessFound(const std::string& what) : Error(what) {}
};

// IO / CLI.
struct ParseError : Error {
    ParseError(int line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_number(line) {}
    int line_number;
};
struct UnknownSuite : Error {
    explicit UnknownSuite(const std::string& what) : Error(what) {}
};

} // namespace gbc

#endif
