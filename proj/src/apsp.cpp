#include "semiring/apsp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "semiring/parallel.hpp"
#include "semiring/strassen.hpp"

namespace semiring {

namespace {

void require_equal_square(const Matrix& x, const Matrix& y, const char* who) {
    if (!x.square() || !y.square() || x.rows() != y.rows())
        throw std::invalid_argument(std::string(who) + ": shape mismatch");
}

}  // namespace

void validate_weight_matrix(const Matrix& weights) {
    if (!weights.square()) throw std::invalid_argument("weight matrix must be square");
    for (std::size_t i = 0; i < weights.rows(); ++i) {
        if (weights(i, i) != 0.0)
            throw std::invalid_argument("weight matrix diagonal must be zero");
        for (std::size_t j = 0; j < weights.cols(); ++j) {
            const double w = weights(i, j);
            if (std::isnan(w) || w < 0.0)
                throw std::invalid_argument("weight matrix entries must be nonnegative");
        }
    }
}

Matrix naive_minplus_matmul(const Matrix& x, const Matrix& y) {
    require_equal_square(x, y, "naive_minplus_matmul");
    const std::size_t n = x.rows();
    Matrix out(n, n, kAbsentEdge);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double xik = x(i, k);
            if (xik == kAbsentEdge) continue;
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) = std::min(out(i, j), xik + y(k, j));
        }
    return out;
}

Matrix naive_maxtimes_matmul(const Matrix& x, const Matrix& y) {
    require_equal_square(x, y, "naive_maxtimes_matmul");
    const std::size_t n = x.rows();
    Matrix out(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double xik = x(i, k);
            if (xik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j)
                out(i, j) = std::max(out(i, j), xik * y(k, j));
        }
    return out;
}

Matrix transform_weights(const Matrix& weights) {
    Matrix out(weights.rows(), weights.cols());
    for (std::size_t i = 0; i < weights.rows(); ++i)
        for (std::size_t j = 0; j < weights.cols(); ++j) {
            const double w = weights(i, j);
            if (std::isnan(w) || w < 0.0)
                throw std::invalid_argument("transform_weights: negative weight");
            out(i, j) = std::exp(-w);  // absent (inf) maps to exactly 0
        }
    return out;
}

Matrix untransform_distances(const Matrix& transformed) {
    Matrix out(transformed.rows(), transformed.cols());
    for (std::size_t i = 0; i < transformed.rows(); ++i)
        for (std::size_t j = 0; j < transformed.cols(); ++j)
            out(i, j) = -std::log(transformed(i, j));  // 0 maps to inf
    return out;
}

Matrix approx_maxtimes_matmul(const Matrix& x, const Matrix& y, const PStarSchedule& schedule,
                              const EstimateConfig& config) {
    require_equal_square(x, y, "approx_maxtimes_matmul");
    const std::size_t n = x.rows();
    if (n == 0) return Matrix();

    double x_max = 0.0, y_max = 0.0;
    for (double v : x.data()) x_max = std::max(x_max, v);
    for (double v : y.data()) y_max = std::max(y_max, v);
    if (x_max == 0.0 || y_max == 0.0) return Matrix(n, n, 0.0);
    const double rescale = x_max * y_max;

    const std::size_t num_p = schedule.exponents.size();
    std::vector<Matrix> rings(num_p);
    parallel_for(num_p, [&](std::size_t pi) {
        const int p = schedule.exponents[pi];
        Matrix xp(n, n), yp(n, n);
        for (std::size_t i = 0; i < n * n; ++i) {
            xp.data()[i] = ipow(x.data()[i] / x_max, p);
            yp.data()[i] = ipow(y.data()[i] / y_max, p);
        }
        Matrix product = strassen_matmul(xp, yp);
        // Strassen round-off can leave tiny negatives; they are pure noise.
        for (double& v : product.data()) v = std::max(0.0, v);
        rings[pi] = std::move(product);
    });

    Matrix out(n, n);
    NormPowerSequence seq(config.tau);
    EstimateConfig local = config;
    local.n_hint = n;
    for (std::size_t cell = 0; cell < n * n; ++cell) {
        seq.clear();
        for (std::size_t pi = 0; pi < num_p; ++pi)
            seq.add(schedule.exponents[pi], rings[pi].data()[cell]);
        out.data()[cell] = estimate_max(seq, local) * rescale;
    }
    return out;
}

ApspResult apsp_approx(const Matrix& weights, const PStarSchedule& schedule,
                       const EstimateConfig& config) {
    validate_weight_matrix(weights);
    const std::size_t n = weights.rows();
    if (n == 0) throw std::invalid_argument("apsp_approx: empty matrix");

    ApspResult result;
    result.schedule = schedule;
    if (n == 1) {
        result.distances = Matrix(1, 1, 0.0);
        return result;
    }

    Matrix a = transform_weights(weights);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = 1.0;  // zero-cost self-loops

    int squarings = 0;
    for (std::size_t closure = 1; closure < n - 1; closure *= 2) ++squarings;
    result.squarings = squarings;

    // Semantics throughout: true transformed value = a * exp(log_scale).
    double log_scale = 0.0;
    for (int it = 0; it < squarings; ++it) {
        a = approx_maxtimes_matmul(a, a, schedule, config);
        log_scale *= 2.0;
        double max_entry = 0.0;
        for (double v : a.data()) max_entry = std::max(max_entry, v);
        if (max_entry > 0.0) {
            for (double& v : a.data()) v /= max_entry;
            log_scale += std::log(max_entry);
        }
        for (std::size_t i = 0; i < n; ++i) a(i, i) = 1.0;
    }

    Matrix distances(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                distances(i, j) = 0.0;
                continue;
            }
            const double d = -std::log(a(i, j)) - log_scale;
            distances(i, j) = std::max(0.0, d);  // distances cannot be negative
        }
    result.distances = std::move(distances);
    return result;
}

ApspResult floyd_warshall(const Matrix& weights) {
    validate_weight_matrix(weights);
    const std::size_t n = weights.rows();
    ApspResult result;
    Matrix dist = weights;
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) {
            const double dik = dist(i, k);
            if (dik == kAbsentEdge) continue;
            for (std::size_t j = 0; j < n; ++j) {
                const double through = dik + dist(k, j);
                if (through < dist(i, j)) dist(i, j) = through;
            }
        }
    result.distances = std::move(dist);
    return result;
}

}  // namespace semiring
