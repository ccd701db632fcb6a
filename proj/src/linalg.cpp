#include <qgdef/linalg.hpp>

#include <utility>

namespace qgdef {

bool RationalMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

namespace {

// |numerator| comparison used for pivot selection.
bool larger_numerator(const Rational& a, const Rational& b) {
    return mpz_cmpabs(a.num().get_mpz_t(), b.num().get_mpz_t()) > 0;
}

} // namespace

std::vector<Rational> solve_linear_system(const RationalMatrix& m, const std::vector<Rational>& b) {
    if (!m.is_square() || m.rows() != b.size())
        throw InvalidParametersError("solve_linear_system: shape mismatch");
    const std::size_t n = m.rows();

    RationalMatrix a = m;
    std::vector<Rational> rhs = b;

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t i = k; i < n; ++i) {
            if (a.at(i, k).is_zero()) continue;
            if (pivot == n || larger_numerator(a.at(i, k), a.at(pivot, k))) pivot = i;
        }
        if (pivot == n) throw SingularMatrixError("solve_linear_system: singular matrix");
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(a.at(k, j), a.at(pivot, j));
            std::swap(rhs[k], rhs[pivot]);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a.at(i, k).is_zero()) continue;
            Rational f = a.at(i, k) / a.at(k, k);
            a.at(i, k) = Rational(0);
            for (std::size_t j = k + 1; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
            rhs[i] -= f * rhs[k];
        }
    }

    std::vector<Rational> x(n);
    for (std::size_t i = n; i-- > 0;) {
        Rational s = rhs[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= a.at(i, j) * x[j];
        x[i] = s / a.at(i, i);
    }
    return x;
}

bool is_negative_definite(const RationalMatrix& m) {
    if (!m.is_square() || m.rows() == 0) return false;
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    // Elimination without row swaps: pivot k equals det_k / det_{k-1}, so the
    // matrix is negative definite iff every pivot is strictly negative.
    for (std::size_t k = 0; k < n; ++k) {
        if (a.at(k, k).sign() >= 0) return false;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a.at(i, k).is_zero()) continue;
            Rational f = a.at(i, k) / a.at(k, k);
            for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
        }
    }
    return true;
}

} // namespace qgdef
