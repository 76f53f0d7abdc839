#pragma once

#include <stdexcept>
#include <string>

namespace homni {

// All kernel errors derive from Error so callers can catch the whole family.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Operands built over different chart dimensions / point of wrong length.
struct DimensionError : Error {
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// Operation applied at an unsupported form degree.
struct DegreeError : Error {
    explicit DegreeError(const std::string& msg) : Error(msg) {}
};

// Variable or frame index out of range.
struct IndexError : Error {
    explicit IndexError(const std::string& msg) : Error(msg) {}
};

// Bundle rank restriction violated (line-bundle-only operations).
struct RankError : Error {
    explicit RankError(const std::string& msg) : Error(msg) {}
};

// Parameter outside the admissible range (e.g. rigidity degree window).
struct RangeError : Error {
    explicit RangeError(const std::string& msg) : Error(msg) {}
};

// Pointwise linear algebra hit dependent generators.
struct DegeneracyError : Error {
    explicit DegeneracyError(const std::string& msg) : Error(msg) {}
};

// Generic form failed the jet-form membership test; message carries the
// first violated component equation.
struct NotAJetFormError : Error {
    explicit NotAJetFormError(const std::string& msg) : Error(msg) {}
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at offset " + std::to_string(position) + ")"), pos(position) {}
    std::size_t pos;
};

}  // namespace homni
