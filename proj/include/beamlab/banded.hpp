#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "beamlab/errors.hpp"

namespace beamlab {

/// Square band-storage matrix. Entries with j - i > ku or i - j > kl are
/// structurally zero; writing there is an error, never silent truncation.
class BandedMatrix {
public:
    BandedMatrix(std::size_t n, std::size_t kl, std::size_t ku)
        : n_(n), kl_(kl), ku_(ku), data_(n * (kl + ku + 1), 0.0) {
        if (n == 0)
            throw std::invalid_argument("BandedMatrix: dimension must be >= 1");
    }

    std::size_t size() const noexcept { return n_; }
    std::size_t lower_bandwidth() const noexcept { return kl_; }
    std::size_t upper_bandwidth() const noexcept { return ku_; }

    double get(std::size_t i, std::size_t j) const {
        check_indices(i, j);
        if (!in_band(i, j))
            return 0.0;
        return data_[slot(i, j)];
    }

    void set(std::size_t i, std::size_t j, double v) {
        check_indices(i, j);
        if (!in_band(i, j))
            throw std::out_of_range("BandedMatrix::set: (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") outside band");
        data_[slot(i, j)] = v;
    }

    void add(std::size_t i, std::size_t j, double v) {
        check_indices(i, j);
        if (!in_band(i, j))
            throw std::out_of_range("BandedMatrix::add: (" + std::to_string(i) + ", " +
                                    std::to_string(j) + ") outside band");
        data_[slot(i, j)] += v;
    }

    /// this += factor * other. Band layouts must match.
    BandedMatrix& add_scaled(const BandedMatrix& other, double factor) {
        if (other.n_ != n_ || other.kl_ != kl_ || other.ku_ != ku_)
            throw std::invalid_argument("BandedMatrix::add_scaled: layout mismatch");
        for (std::size_t k = 0; k < data_.size(); ++k)
            data_[k] += factor * other.data_[k];
        return *this;
    }

    BandedMatrix& scale(double factor) {
        for (double& v : data_)
            v *= factor;
        return *this;
    }

    std::vector<double> multiply(const std::vector<double>& x) const {
        if (x.size() != n_)
            throw std::invalid_argument("BandedMatrix::multiply: dimension mismatch");
        std::vector<double> y(n_, 0.0);
        for (std::size_t i = 0; i < n_; ++i) {
            const std::size_t j0 = (i >= kl_) ? i - kl_ : 0;
            const std::size_t j1 = std::min(i + ku_, n_ - 1);
            double acc = 0.0;
            for (std::size_t j = j0; j <= j1; ++j)
                acc += data_[slot(i, j)] * x[j];
            y[i] = acc;
        }
        return y;
    }

    double inf_norm() const {
        double best = 0.0;
        for (std::size_t i = 0; i < n_; ++i) {
            const std::size_t j0 = (i >= kl_) ? i - kl_ : 0;
            const std::size_t j1 = std::min(i + ku_, n_ - 1);
            double row = 0.0;
            for (std::size_t j = j0; j <= j1; ++j)
                row += std::abs(data_[slot(i, j)]);
            best = std::max(best, row);
        }
        return best;
    }

    double max_abs() const {
        double best = 0.0;
        for (double v : data_)
            best = std::max(best, std::abs(v));
        return best;
    }

    /// Zero every stored entry of row i.
    void clear_row(std::size_t i) {
        check_indices(i, 0);
        const std::size_t j0 = (i >= kl_) ? i - kl_ : 0;
        const std::size_t j1 = std::min(i + ku_, n_ - 1);
        for (std::size_t j = j0; j <= j1; ++j)
            data_[slot(i, j)] = 0.0;
    }

private:
    bool in_band(std::size_t i, std::size_t j) const noexcept {
        return (j >= i ? j - i <= ku_ : i - j <= kl_);
    }
    void check_indices(std::size_t i, std::size_t j) const {
        if (i >= n_ || j >= n_)
            throw std::out_of_range("BandedMatrix: index out of range");
    }
    // row-major band layout: row i holds columns [i-kl, i+ku]
    std::size_t slot(std::size_t i, std::size_t j) const noexcept {
        return i * (kl_ + ku_ + 1) + (j + kl_ - i);
    }

    std::size_t n_, kl_, ku_;
    std::vector<double> data_;
};

/// LU factorization of a banded matrix with partial pivoting. Row pivoting
/// widens the upper bandwidth to kl + ku; the factorization owns widened
/// storage and is immutable afterwards, so concurrent solves are safe.
class BandedLU {
public:
    explicit BandedLU(const BandedMatrix& A)
        : n_(A.size()), kl_(A.lower_bandwidth()),
          kuw_(A.lower_bandwidth() + A.upper_bandwidth()),
          data_(n_ * (kl_ + kuw_ + 1), 0.0), ipiv_(n_, 0) {
        const std::size_t ku = A.upper_bandwidth();
        for (std::size_t i = 0; i < n_; ++i) {
            const std::size_t j0 = (i >= kl_) ? i - kl_ : 0;
            const std::size_t j1 = std::min(i + ku, n_ - 1);
            for (std::size_t j = j0; j <= j1; ++j)
                at(i, j) = A.get(i, j);
        }
        factor(A.max_abs());
    }

    std::size_t size() const noexcept { return n_; }

    std::vector<double> solve(std::vector<double> b) const {
        if (b.size() != n_)
            throw std::invalid_argument("BandedLU::solve: right-hand side has length " +
                                        std::to_string(b.size()) + ", expected " +
                                        std::to_string(n_));
        // forward: apply recorded permutations and multipliers
        for (std::size_t k = 0; k + 1 < n_; ++k) {
            if (ipiv_[k] != k)
                std::swap(b[k], b[ipiv_[k]]);
            const std::size_t iend = std::min(k + kl_, n_ - 1);
            for (std::size_t i = k + 1; i <= iend; ++i)
                b[i] -= at(i, k) * b[k];
        }
        // back substitution on the widened upper triangle
        for (std::size_t ip = n_; ip-- > 0;) {
            const std::size_t jend = std::min(ip + kuw_, n_ - 1);
            double acc = b[ip];
            for (std::size_t j = ip + 1; j <= jend; ++j)
                acc -= at(ip, j) * b[j];
            b[ip] = acc / at(ip, ip);
        }
        return b;
    }

private:
    void factor(double scale) {
        const double threshold = 1e-14 * scale;
        for (std::size_t k = 0; k < n_; ++k) {
            // pivot search in column k among rows k .. k+kl
            const std::size_t iend = std::min(k + kl_, n_ - 1);
            std::size_t p = k;
            double best = std::abs(at(k, k));
            for (std::size_t i = k + 1; i <= iend; ++i) {
                const double cand = std::abs(at(i, k));
                if (cand > best) {
                    best = cand;
                    p = i;
                }
            }
            if (best <= threshold)
                throw SingularMatrixError(k, best);
            ipiv_[k] = p;
            const std::size_t jend = std::min(k + kuw_, n_ - 1);
            if (p != k)
                for (std::size_t j = k; j <= jend; ++j)
                    std::swap(at(k, j), at(p, j));
            for (std::size_t i = k + 1; i <= iend; ++i) {
                const double m = at(i, k) / at(k, k);
                at(i, k) = m;
                for (std::size_t j = k + 1; j <= jend; ++j)
                    at(i, j) -= m * at(k, j);
            }
        }
    }

    double& at(std::size_t i, std::size_t j) noexcept {
        return data_[i * (kl_ + kuw_ + 1) + (j + kl_ - i)];
    }
    double at(std::size_t i, std::size_t j) const noexcept {
        return data_[i * (kl_ + kuw_ + 1) + (j + kl_ - i)];
    }

    std::size_t n_, kl_, kuw_;
    std::vector<double> data_;
    std::vector<std::size_t> ipiv_;
};

inline BandedLU lu_factor(const BandedMatrix& A) { return BandedLU(A); }

inline std::vector<double> solve(const BandedLU& fact, const std::vector<double>& b) {
    return fact.solve(b);
}

} // namespace beamlab
