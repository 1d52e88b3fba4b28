#include "semiring/strassen.hpp"

#include <stdexcept>
#include <vector>

#include "semiring/fft.hpp"

namespace semiring {

namespace {

// Contiguous n x n square buffer used inside the recursion.
using Square = std::vector<double>;

// c += nothing; c starts zeroed. i-k-j order keeps the inner loop contiguous.
void naive_into(const double* a, const double* b, double* c, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        double* crow = c + i * n;
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a[i * n + k];
            if (aik == 0.0) continue;
            const double* brow = b + k * n;
            for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
        }
    }
}

Square add(const Square& a, const Square& b) {
    Square out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

Square sub(const Square& a, const Square& b) {
    Square out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

Square quadrant(const Square& a, std::size_t n, std::size_t qi, std::size_t qj) {
    const std::size_t h = n / 2;
    Square out(h * h);
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) out[i * h + j] = a[(qi * h + i) * n + (qj * h + j)];
    return out;
}

void place(Square& dst, std::size_t n, std::size_t qi, std::size_t qj, const Square& src) {
    const std::size_t h = n / 2;
    for (std::size_t i = 0; i < h; ++i)
        for (std::size_t j = 0; j < h; ++j) dst[(qi * h + i) * n + (qj * h + j)] = src[i * h + j];
}

Square strassen_rec(const Square& x, const Square& y, std::size_t n, std::size_t leaf) {
    if (n <= leaf) {
        Square out(n * n, 0.0);
        naive_into(x.data(), y.data(), out.data(), n);
        return out;
    }
    const Square a = quadrant(x, n, 0, 0), b = quadrant(x, n, 0, 1);
    const Square c = quadrant(x, n, 1, 0), d = quadrant(x, n, 1, 1);
    const Square e = quadrant(y, n, 0, 0), f = quadrant(y, n, 0, 1);
    const Square g = quadrant(y, n, 1, 0), h = quadrant(y, n, 1, 1);

    const Square p1 = strassen_rec(a, sub(f, h), n / 2, leaf);
    const Square p2 = strassen_rec(add(a, b), h, n / 2, leaf);
    const Square p3 = strassen_rec(add(c, d), e, n / 2, leaf);
    const Square p4 = strassen_rec(d, sub(g, e), n / 2, leaf);
    const Square p5 = strassen_rec(add(a, d), add(e, h), n / 2, leaf);
    const Square p6 = strassen_rec(sub(b, d), add(g, h), n / 2, leaf);
    const Square p7 = strassen_rec(sub(a, c), add(e, f), n / 2, leaf);

    Square out(n * n);
    place(out, n, 0, 0, add(sub(add(p5, p4), p2), p6));
    place(out, n, 0, 1, add(p1, p2));
    place(out, n, 1, 0, add(p3, p4));
    place(out, n, 1, 1, sub(sub(add(p1, p5), p3), p7));
    return out;
}

}  // namespace

Matrix naive_standard_matmul(const Matrix& x, const Matrix& y) {
    if (x.cols() != y.rows())
        throw std::invalid_argument("naive_standard_matmul: shape mismatch");
    Matrix out(x.rows(), y.cols(), 0.0);
    for (std::size_t i = 0; i < x.rows(); ++i)
        for (std::size_t k = 0; k < x.cols(); ++k) {
            const double xik = x(i, k);
            if (xik == 0.0) continue;
            for (std::size_t j = 0; j < y.cols(); ++j) out(i, j) += xik * y(k, j);
        }
    return out;
}

Matrix strassen_matmul(const Matrix& x, const Matrix& y, std::size_t leaf_size) {
    if (!x.square() || !y.square() || x.rows() != y.rows())
        throw std::invalid_argument("strassen_matmul: inputs must be square and of equal size");
    const std::size_t n = x.rows();
    if (n == 0) return Matrix();
    if (leaf_size == 0) leaf_size = 1;
    if (n <= leaf_size) return naive_standard_matmul(x, y);

    // Pad with ring-neutral zero blocks up to the next power of two.
    const std::size_t padded = next_pow2(n);
    Square xs(padded * padded, 0.0), ys(padded * padded, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            xs[i * padded + j] = x(i, j);
            ys[i * padded + j] = y(i, j);
        }

    const Square product = strassen_rec(xs, ys, padded, leaf_size);
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = product[i * padded + j];
    return out;
}

}  // namespace semiring
