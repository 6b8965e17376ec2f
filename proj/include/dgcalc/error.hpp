#ifndef DGCALC_ERROR_HPP
#define DGCALC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dgc {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct FieldMismatch : Error {
    FieldMismatch() : Error("operands live in different ground fields") {}
};

struct ParseError : Error {
    ParseError(int line, int col, const std::string& msg)
        : Error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + msg),
          line(line), col(col) {}
    int line, col;
};

}  // namespace dgc

#endif
