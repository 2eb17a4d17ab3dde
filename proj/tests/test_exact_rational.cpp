#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hallinv/exact_rank.hpp"
#include "hallinv/rational.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace hallinv;

namespace {

RationalMatrix from_ints(std::size_t rows, std::size_t cols, std::initializer_list<long> values)
{
    RationalMatrix m(rows, cols);
    auto it = values.begin();
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(*it++);
    return m;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi)
{
    std::uniform_int_distribution<long> d(lo, hi);
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(d(rng), 1 + std::abs(d(rng)));
    return m;
}

// Leibniz determinant of the square submatrix at the given rows/cols.
Rational minor_det(const RationalMatrix& m, const std::vector<std::size_t>& rows, std::vector<std::size_t> cols)
{
    Rational total(0);
    std::vector<std::size_t> perm(cols.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inversions = 0;
        for (std::size_t a = 0; a < perm.size(); ++a)
            for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b] ? 1 : 0;
        Rational p(inversions % 2 ? -1 : 1);
        for (std::size_t a = 0; a < perm.size(); ++a) p *= m(rows[a], cols[perm[a]]);
        total += p;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out)
{
    std::vector<bool> mask(n, false);
    std::fill(mask.end() - static_cast<std::ptrdiff_t>(k), mask.end(), true);
    do {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask[i]) s.push_back(i);
        out.push_back(s);
    } while (std::next_permutation(mask.begin(), mask.end()));
}

// Rank = size of the largest nonvanishing minor.
std::size_t minor_rank(const RationalMatrix& m)
{
    for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
        std::vector<std::vector<std::size_t>> rs;
        std::vector<std::vector<std::size_t>> cs;
        subsets(m.rows(), k, rs);
        subsets(m.cols(), k, cs);
        for (const auto& r : rs)
            for (const auto& c : cs)
                if (!minor_det(m, r, c).is_zero()) return k;
    }
    return 0;
}

}  // namespace

TEST_CASE("rational arithmetic")
{
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(7, 2) * Rational(2, 7) == Rational(1));
    const Rational r(-4, -6);
    CHECK(r == Rational(2, 3));
    CHECK(r.numerator() == 2);
    CHECK(r.denominator() == 3);
    CHECK(Rational(3, -9).numerator() == -1);
    CHECK(Rational(3, -9).denominator() == 3);
    CHECK(Rational(0, -5).denominator() == 1);
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK(Rational(-3, 4).inverse() == Rational(-4, 3));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 3) > Rational(-1, 2));
    CHECK(Rational(5, 6) - Rational(1, 3) == Rational(1, 2));
    CHECK(Rational(5, 6) / Rational(5, 3) == Rational(1, 2));
    CHECK(Rational(-7, 3).abs() == Rational(7, 3));
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(219, 2).to_string() == "219/2");
    CHECK(Rational(-4).to_string() == "-4");
}

TEST_CASE("rational errors")
{
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("3/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("."), std::invalid_argument);
}

TEST_CASE("rational parsing")
{
    CHECK(Rational::parse("-4/-6") == Rational(2, 3));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("+7") == Rational(7));
    CHECK(Rational::parse("0.1") == Rational(1, 10));
    CHECK(Rational::parse("-1.25") == Rational(-5, 4));
    CHECK(Rational::parse("1e-05") == Rational(1, 100000));
    CHECK(Rational::parse("2.5e+2") == Rational(250));
    CHECK(Rational::parse(".5") == Rational(1, 2));
}

TEST_CASE("exact_rank examples")
{
    CHECK(exact_rank(from_ints(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 1})) == 3);
    CHECK(exact_rank(from_ints(2, 2, {1, 2, 2, 4})) == 1);
    CHECK(exact_rank(from_ints(2, 3, {0, 0, 0, 0, 0, 0})) == 0);
    CHECK(exact_rank(from_ints(3, 4, {0, 1, 2, 3, 0, 2, 4, 6, 0, 0, 0, 1})) == 2);
    CHECK(exact_rank(from_ints(1, 1, {5})) == 1);
}

TEST_CASE("exact_rank with fractional entries")
{
    RationalMatrix m(2, 2);
    m(0, 0) = Rational(1, 2);
    m(0, 1) = Rational(1, 3);
    m(1, 0) = Rational(3, 4);
    m(1, 1) = Rational(1, 2);
    CHECK(exact_rank(m) == 1);
    m(1, 1) = Rational(1, 2) + Rational(1, 1000000007);
    CHECK(exact_rank(m) == 2);
}

TEST_CASE("exact_rank agrees with the minor-enumeration oracle")
{
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int n = 0; n < 150; ++n) {
        const std::size_t rows = static_cast<std::size_t>(dim(rng));
        const std::size_t cols = static_cast<std::size_t>(dim(rng));
        // small entry range so that singular matrices are common
        RationalMatrix m = random_matrix(rng, rows, cols, -1, 1);
        CHECK(exact_rank(m) == minor_rank(m));
    }
}

TEST_CASE("exact_rank properties")
{
    std::mt19937_64 rng(2);
    SUBCASE("rank(M) = rank(M^T)")
    {
        for (int n = 0; n < 50; ++n) {
            const RationalMatrix m = random_matrix(rng, 5, 7, -3, 3);
            CHECK(exact_rank(m) == exact_rank(m.transposed()));
        }
    }
    SUBCASE("appending a combination of rows keeps the rank")
    {
        std::uniform_int_distribution<long> coef(-4, 4);
        for (int n = 0; n < 50; ++n) {
            const RationalMatrix m = random_matrix(rng, 4, 6, -5, 5);
            std::vector<Rational> row(6);
            for (std::size_t r = 0; r < 4; ++r) {
                const Rational c(coef(rng), 3);
                for (std::size_t j = 0; j < 6; ++j) row[j] += c * m(r, j);
            }
            CHECK(exact_rank(m.with_row(row)) == exact_rank(m));
        }
    }
    SUBCASE("low-rank products")
    {
        for (std::size_t k = 1; k <= 4; ++k) {
            const RationalMatrix left = random_matrix(rng, 8, k, -9, 9);
            const RationalMatrix right = random_matrix(rng, k, 6, -9, 9);
            RationalMatrix prod(8, 6);
            for (std::size_t r = 0; r < 8; ++r)
                for (std::size_t c = 0; c < 6; ++c)
                    for (std::size_t i = 0; i < k; ++i) prod(r, c) += left(r, i) * right(i, c);
            CHECK(exact_rank(prod) <= k);
            CHECK(exact_rank(prod) == floating_rank(prod));
        }
    }
    SUBCASE("agrees with the singular-value rank on 50 random integer matrices")
    {
        std::uniform_int_distribution<long> d(-9, 9);
        std::uniform_int_distribution<int> dim(1, 8);
        for (int n = 0; n < 50; ++n) {
            RationalMatrix m(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = Rational(d(rng));
            CHECK(exact_rank(m) == floating_rank(m, 1e-8));
        }
    }
}

TEST_CASE("matrix helpers")
{
    const RationalMatrix m = from_ints(2, 3, {1, 2, 3, 4, 5, 6});
    CHECK(m.without_column(1) == from_ints(2, 2, {1, 3, 4, 6}));
    CHECK(m.transposed() == from_ints(3, 2, {1, 4, 2, 5, 3, 6}));
    CHECK_THROWS_AS(m.without_column(3), std::out_of_range);
    CHECK_THROWS_AS(m.with_row({Rational(1)}), std::invalid_argument);
    CHECK_THROWS_AS(RationalMatrix(0, 3), std::invalid_argument);
}
