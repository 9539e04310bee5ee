#pragma once

#include <stdexcept>
#include <string>

namespace malaab {

enum class ErrorCode {
    MalformedLine,
    UnknownParadigm,
    SyntaxError,
    UndefinedSubgraph,
    NoFinalState,
    RecursionLimit,
    MissingFrenchEntry,
    MissingInflection,
    UnknownMonth,
    EmptyInput,
    DocMismatch,
    ResourceError,
    IoError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

}  // namespace malaab
