#ifndef FOLEX_ERRORS_HPP
#define FOLEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace folex {

class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// ambient/form-degree mismatch between operands
class shape_error : public error {
public:
    explicit shape_error(const std::string& msg) : error(msg) {}
};

// operation requested in a mode its preconditions exclude
// (non-homogeneous input to a graded computation, non-integrable input, ...)
class mode_error : public error {
public:
    explicit mode_error(const std::string& msg) : error(msg) {}
};

class domain_error : public error {
public:
    explicit domain_error(const std::string& msg) : error(msg) {}
};

// input document rejected; carries 1-based position
class parse_error : public error {
public:
    parse_error(const std::string& msg, int line, int column)
        : error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line(line),
          column(column) {}
    int line;
    int column;
};

}  // namespace folex

#endif
