#pragma once

#include <cstddef>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "freefusion/gaussian_rational.hpp"

namespace freefusion {

/// Dense matrix over Q(i). Holds the deformation matrix F, Gram matrices and
/// Haar projectors; all operations are exact.
class ExactMatrix {
  public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static ExactMatrix identity(std::size_t n) {
        ExactMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    GaussianRational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const GaussianRational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    ExactMatrix adjoint() const {
        ExactMatrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j).conj();
        return m;
    }

    ExactMatrix transpose() const {
        ExactMatrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    ExactMatrix conj() const {
        ExactMatrix m(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(i, j) = at(i, j).conj();
        return m;
    }

    GaussianRational trace() const {
        GaussianRational t;
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += at(i, i);
        return t;
    }

    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.cols_ != b.rows_) throw domain_error("matrix product: shape mismatch");
        ExactMatrix m(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const GaussianRational& av = a.at(i, k);
                if (av.is_zero()) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const GaussianRational& bv = b.at(k, j);
                    if (!bv.is_zero()) m.at(i, j) += av * bv;
                }
            }
        return m;
    }

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw domain_error("matrix sum: shape mismatch");
        ExactMatrix m(a.rows_, a.cols_);
        for (std::size_t t = 0; t < a.data_.size(); ++t) m.data_[t] = a.data_[t] + b.data_[t];
        return m;
    }

    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw domain_error("matrix difference: shape mismatch");
        ExactMatrix m(a.rows_, a.cols_);
        for (std::size_t t = 0; t < a.data_.size(); ++t) m.data_[t] = a.data_[t] - b.data_[t];
        return m;
    }

    friend ExactMatrix operator*(const GaussianRational& c, const ExactMatrix& a) {
        ExactMatrix m(a.rows_, a.cols_);
        for (std::size_t t = 0; t < a.data_.size(); ++t) m.data_[t] = c * a.data_[t];
        return m;
    }

    friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

    /// c such that *this == c * Id, if any.
    std::optional<GaussianRational> as_scalar_matrix() const {
        if (rows_ != cols_ || rows_ == 0) return std::nullopt;
        GaussianRational c = at(0, 0);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (at(i, j) != (i == j ? c : GaussianRational())) return std::nullopt;
        return c;
    }

    /// Rank by fraction-free (Bareiss) elimination; exact, no pivoting noise.
    std::size_t rank() const {
        ExactMatrix m = *this;
        GaussianRational prev = 1;
        std::size_t r = 0;
        for (std::size_t c = 0; c < m.cols_ && r < m.rows_; ++c) {
            std::size_t pivot = r;
            while (pivot < m.rows_ && m.at(pivot, c).is_zero()) ++pivot;
            if (pivot == m.rows_) continue;
            if (pivot != r)
                for (std::size_t j = 0; j < m.cols_; ++j) std::swap(m.at(pivot, j), m.at(r, j));
            for (std::size_t i = r + 1; i < m.rows_; ++i) {
                for (std::size_t j = c + 1; j < m.cols_; ++j)
                    m.at(i, j) = (m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j)) / prev;
                m.at(i, c) = GaussianRational();
            }
            prev = m.at(r, c);
            ++r;
        }
        return r;
    }

    bool invertible() const { return rows_ == cols_ && rank() == rows_; }

    /// Gauss-Jordan inverse; throws if singular.
    ExactMatrix inverse() const {
        if (rows_ != cols_) throw domain_error("inverse: matrix not square");
        std::size_t n = rows_;
        ExactMatrix m = *this;
        ExactMatrix inv = identity(n);
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t pivot = c;
            while (pivot < n && m.at(pivot, c).is_zero()) ++pivot;
            if (pivot == n) throw domain_error("inverse: singular matrix");
            if (pivot != c)
                for (std::size_t j = 0; j < n; ++j) {
                    std::swap(m.at(pivot, j), m.at(c, j));
                    std::swap(inv.at(pivot, j), inv.at(c, j));
                }
            GaussianRational d = m.at(c, c);
            for (std::size_t j = 0; j < n; ++j) {
                m.at(c, j) /= d;
                inv.at(c, j) /= d;
            }
            for (std::size_t i = 0; i < n; ++i) {
                if (i == c || m.at(i, c).is_zero()) continue;
                GaussianRational f = m.at(i, c);
                for (std::size_t j = 0; j < n; ++j) {
                    m.at(i, j) -= f * m.at(c, j);
                    inv.at(i, j) -= f * inv.at(c, j);
                }
            }
        }
        return inv;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<GaussianRational> data_;
};

inline ExactMatrix kron(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    m.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    return m;
}

/// Matrix file format: whitespace-separated tokens, first the size n, then
/// the n*n entries row-major, each entry as two rationals "re im", every
/// rational written "p/q". parse(format(M)) == M bit-exactly.
inline ExactMatrix read_square_matrix(std::istream& in) {
    std::size_t n = 0;
    if (!(in >> n)) throw parse_error("matrix file: missing size");
    if (n == 0) throw parse_error("matrix file: size must be positive");
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::string re, im;
            if (!(in >> re >> im)) throw parse_error("matrix file: truncated entry list");
            m.at(i, j) = GaussianRational(parse_rational(re), parse_rational(im));
        }
    return m;
}

inline void write_square_matrix(std::ostream& out, const ExactMatrix& m) {
    out << m.rows() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << "  ";
            out << format_rational(m.at(i, j).re) << " " << format_rational(m.at(i, j).im);
        }
        out << "\n";
    }
}

inline ExactMatrix load_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open matrix file: " + path);
    return read_square_matrix(in);
}

} // namespace freefusion
