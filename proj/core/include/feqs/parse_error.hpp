#pragma once

#include <stdexcept>
#include <string>

namespace feqs {

/// File-format violation carrying the 1-based line and column it names.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int col)
        : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                             std::to_string(col) + ")"),
          line_(line),
          col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

}  // namespace feqs
