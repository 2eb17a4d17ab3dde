#ifndef HALLINV_RATIONAL_HPP
#define HALLINV_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hallinv {

/// Exact fraction with arbitrary-precision numerator and denominator.
///
/// Always kept in canonical form: gcd(num, den) = 1, den > 0, zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : m_value(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : m_value(value) {}   // NOLINT(google-explicit-constructor)
    /// Throws std::domain_error if `den` is zero.
    Rational(const mpz_class& num, const mpz_class& den);
    Rational(long num, long den);

    /// Parses "p", "p/q" or a decimal literal such as "-1.25" or "3e-2".
    /// Throws std::invalid_argument on malformed text, std::domain_error on q = 0.
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return m_value.get_num(); }
    mpz_class denominator() const { return m_value.get_den(); }

    bool is_zero() const { return sgn(m_value) == 0; }
    bool is_integer() const { return m_value.get_den() == 1; }
    int sign() const { return sgn(m_value); }

    Rational operator-() const;
    Rational abs() const;
    /// Throws std::domain_error for zero.
    Rational inverse() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error when dividing by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) { return lhs.m_value == rhs.m_value; }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    double to_double() const { return m_value.get_d(); }
    /// "p" for integers, "p/q" otherwise.
    std::string to_string() const;

    const mpq_class& raw() const { return m_value; }

private:
    explicit Rational(mpq_class value);

    mpq_class m_value;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Dense row-major matrix of Rational entries.
class RationalMatrix {
public:
    /// Throws std::invalid_argument if either dimension is zero.
    RationalMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return m_rows; }
    std::size_t cols() const { return m_cols; }

    Rational& operator()(std::size_t r, std::size_t c) { return m_entries[r * m_cols + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return m_entries[r * m_cols + c]; }

    RationalMatrix transposed() const;
    /// Copy without column `col`. Throws std::out_of_range.
    RationalMatrix without_column(std::size_t col) const;
    /// Copy with one extra row appended. Throws std::invalid_argument on width mismatch.
    RationalMatrix with_row(const std::vector<Rational>& row) const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t m_rows;
    std::size_t m_cols;
    std::vector<Rational> m_entries;
};

}  // namespace hallinv

#endif  // HALLINV_RATIONAL_HPP
