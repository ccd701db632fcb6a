#ifndef QGDEF_LINALG_HPP
#define QGDEF_LINALG_HPP

#include <cstddef>
#include <vector>

#include <qgdef/rational.hpp>

namespace qgdef {

/// Dense rectangular matrix of exact rationals.
class RationalMatrix {
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;

public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
};

/**
 * Solves m * x = b exactly by Gaussian elimination. Pivot choice is the
 * entry of largest absolute numerator in the current column (stable for
 * intermediate sizes; the result is pivot-independent in exact arithmetic).
 * Throws SingularMatrixError when m is singular.
 */
std::vector<Rational> solve_linear_system(const RationalMatrix& m, const std::vector<Rational>& b);

/// Sylvester criterion: all leading principal minors alternate strictly,
/// starting negative. Requires a symmetric matrix.
bool is_negative_definite(const RationalMatrix& m);

} // namespace qgdef

#endif
