#pragma once

#include <stdexcept>
#include <string>

namespace imprim {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// perm-core
struct ClosureExceedsCap : Error { using Error::Error; };
struct NotAPGroup : Error { using Error::Error; };
struct TrivialGroupError : Error { using Error::Error; };

// coset enumeration
struct TableOverflow : Error { using Error::Error; };
struct InvalidWord : Error { using Error::Error; };
struct UnboundGenerator : Error { using Error::Error; };

// character tables / decision engine
struct MalformedTable : Error { using Error::Error; };
struct InconsistencyDetected : Error { using Error::Error; };

// covers
struct NotGenerating : Error { using Error::Error; };
struct WrongPetalCount : Error { using Error::Error; };
struct GaschutzViolation : Error { using Error::Error; };

// parsing
struct SyntaxError : Error {
    SyntaxError(const std::string& msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " +
                std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
};
struct SemanticError : Error { using Error::Error; };

}  // namespace imprim
