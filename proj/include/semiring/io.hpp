#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "semiring/matrix.hpp"

namespace semiring {

/// Parse failure in an input file; `line` is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& path, int line, const std::string& what)
        : std::runtime_error(path + ":" + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Matrix file format: line 1 holds n, then n rows of n whitespace-separated
/// values; the literal token `inf` denotes an absent edge.
Matrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const Matrix& m);

/// Vector files are whitespace/newline-separated decimals.
std::vector<double> read_vector_file(const std::string& path);
void write_vector_file(const std::string& path, std::span<const double> values);

/// Shortest round-trip decimal form; infinities print as `inf`.
std::string format_double(double value);

/// Parses a decimal or the token `inf`; returns false on garbage.
bool parse_double(const std::string& token, double& out);

}  // namespace semiring
