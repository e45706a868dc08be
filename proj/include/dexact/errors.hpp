#pragma once

#include <stdexcept>
#include <string>

namespace dexact {

struct FieldMismatch : std::runtime_error {
    explicit FieldMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& what) : std::runtime_error(what) {}
};

struct InfiniteDimensional : std::runtime_error {
    explicit InfiniteDimensional(const std::string& what) : std::runtime_error(what) {}
};

struct AlgebraMismatch : std::runtime_error {
    explicit AlgebraMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct SearchExhausted : std::runtime_error {
    explicit SearchExhausted(const std::string& what) : std::runtime_error(what) {}
};

struct DecompositionInconclusive : std::runtime_error {
    explicit DecompositionInconclusive(const std::string& what) : std::runtime_error(what) {}
};

struct CatalogCapExceeded : std::runtime_error {
    explicit CatalogCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ObjectOutsideSubcategory : std::runtime_error {
    explicit ObjectOutsideSubcategory(const std::string& what) : std::runtime_error(what) {}
};

struct NotInSubcategory : std::runtime_error {
    explicit NotInSubcategory(const std::string& what) : std::runtime_error(what) {}
};

struct ApproximationNotMonic : std::runtime_error {
    explicit ApproximationNotMonic(const std::string& what) : std::runtime_error(what) {}
};

struct NotAdmissible : std::runtime_error {
    explicit NotAdmissible(const std::string& what) : std::runtime_error(what) {}
};

struct ResolutionTooLong : std::runtime_error {
    explicit ResolutionTooLong(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownSummand : std::runtime_error {
    explicit UnknownSummand(const std::string& what) : std::runtime_error(what) {}
};

struct LiftFailed : std::runtime_error {
    explicit LiftFailed(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

} // namespace dexact
