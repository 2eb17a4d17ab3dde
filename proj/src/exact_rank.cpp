#include "hallinv/exact_rank.hpp"

#include <Eigen/Dense>

#include <stdexcept>
#include <utility>
#include <vector>

namespace hallinv {

namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

IntMatrix clear_denominators(const RationalMatrix& m)
{
    IntMatrix out(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class row_lcm = 1;
        for (std::size_t c = 0; c < m.cols(); ++c) {
            const mpz_class den = m(r, c).denominator();
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), den.get_mpz_t());
        }
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r][c] = m(r, c).numerator() * (row_lcm / m(r, c).denominator());
    }
    return out;
}

}  // namespace

std::size_t exact_rank(const RationalMatrix& m)
{
    IntMatrix a = clear_denominators(m);
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();

    mpz_class prev_pivot = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t best = rows;
        for (std::size_t r = rank; r < rows; ++r) {
            if (a[r][col] == 0) continue;
            if (best == rows || mpz_cmpabs(a[r][col].get_mpz_t(), a[best][col].get_mpz_t()) > 0) best = r;
        }
        if (best == rows) continue;
        std::swap(a[rank], a[best]);

        const mpz_class& pivot = a[rank][col];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                mpz_class v = a[r][c] * pivot - a[r][col] * a[rank][c];
                // Bareiss: the previous pivot divides every updated minor exactly.
                if (!mpz_divisible_p(v.get_mpz_t(), prev_pivot.get_mpz_t()))
                    throw std::logic_error("exact_rank: inexact fraction-free division");
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
                a[r][c] = std::move(v);
            }
            a[r][col] = 0;
        }
        prev_pivot = pivot;
        ++rank;
    }
    return rank;
}

std::size_t floating_rank(const RationalMatrix& m, double rel_tol)
{
    Eigen::MatrixXd dense(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            dense(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).to_double();

    const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(dense).singularValues();
    if (sv.size() == 0 || sv(0) == 0.0) return 0;
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > rel_tol * sv(0)) ++rank;
    return rank;
}

}  // namespace hallinv
