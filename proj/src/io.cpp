#include "semiring/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace semiring {

std::string format_double(double value) {
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, ptr);
}

bool parse_double(const std::string& token, double& out) {
    if (token == "inf" || token == "+inf") {
        out = std::numeric_limits<double>::infinity();
        return true;
    }
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc() && ptr == end;
}

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return in;
}

}  // namespace

Matrix read_matrix_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::string line;
    int line_no = 0;

    if (!std::getline(in, line)) throw ParseError(path, 1, "missing matrix size line");
    ++line_no;
    std::size_t n = 0;
    {
        std::istringstream ss(line);
        long long v = -1;
        if (!(ss >> v) || v < 0) throw ParseError(path, line_no, "expected matrix size n");
        std::string extra;
        if (ss >> extra) throw ParseError(path, line_no, "trailing content after matrix size");
        n = static_cast<std::size_t>(v);
    }

    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::getline(in, line))
            throw ParseError(path, line_no + 1, "unexpected end of file: expected matrix row");
        ++line_no;
        std::istringstream ss(line);
        std::string token;
        for (std::size_t j = 0; j < n; ++j) {
            if (!(ss >> token))
                throw ParseError(path, line_no, "row has fewer than n values");
            double v;
            if (!parse_double(token, v))
                throw ParseError(path, line_no, "malformed value '" + token + "'");
            m(i, j) = v;
        }
        std::string extra;
        if (ss >> extra) throw ParseError(path, line_no, "row has more than n values");
    }
    return m;
}

void write_matrix_file(const std::string& path, const Matrix& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << m.rows() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << format_double(m(i, j));
        }
        out << "\n";
    }
}

std::vector<double> read_vector_file(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    std::vector<double> values;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ss(line);
        std::string token;
        while (ss >> token) {
            double v;
            if (!parse_double(token, v))
                throw ParseError(path, line_no, "malformed value '" + token + "'");
            values.push_back(v);
        }
    }
    if (values.empty()) throw ParseError(path, line_no ? line_no : 1, "empty vector file");
    return values;
}

void write_vector_file(const std::string& path, std::span<const double> values) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    for (double v : values) out << format_double(v) << "\n";
}

}  // namespace semiring
