#include "hallinv/rational.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>

namespace hallinv {

namespace {

bool is_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

// Optional sign followed by digits.
bool is_signed_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return is_digits(s);
}

mpz_class parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    return mpz_class(std::string(s), 10);
}

Rational parse_decimal(std::string_view text)
{
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = s.substr(e + 1);
        if (!is_signed_integer(exp_text) || exp_text.size() > 8)
            throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
        exponent = std::stol(std::string(exp_text));
        s = s.substr(0, e);
    }

    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !is_digits(whole)) ||
            (!frac.empty() && !is_digits(frac)))
            throw std::invalid_argument("malformed decimal '" + std::string(text) + "'");
        digits = std::string(whole) + std::string(frac);
        exponent -= static_cast<long>(frac.size());
    } else {
        if (!is_digits(s)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
        digits = std::string(s);
    }

    mpz_class num(digits, 10);
    if (negative) num = -num;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent >= 0) return Rational(num * scale, mpz_class(1));
    return Rational(num, scale);
}

}  // namespace

Rational::Rational(mpq_class value) : m_value(std::move(value))
{
    m_value.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    m_value = mpq_class(num, den);
    m_value.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational Rational::parse(std::string_view text)
{
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        if (!is_signed_integer(num) || !is_signed_integer(den))
            throw std::invalid_argument("malformed fraction '" + std::string(text) + "'");
        return Rational(parse_integer(num), parse_integer(den));
    }
    return parse_decimal(text);
}

Rational Rational::operator-() const
{
    return Rational(mpq_class(-m_value));
}

Rational Rational::abs() const
{
    return Rational(mpq_class(::abs(m_value)));
}

Rational Rational::inverse() const
{
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / m_value));
}

Rational& Rational::operator+=(const Rational& rhs)
{
    m_value += rhs.m_value;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    m_value -= rhs.m_value;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    m_value *= rhs.m_value;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    m_value /= rhs.m_value;
    return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs)
{
    const int c = cmp(lhs.m_value, rhs.m_value);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const
{
    return m_value.get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Rational& r)
{
    return os << r.to_string();
}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : m_rows(rows), m_cols(cols), m_entries(rows * cols)
{
    if (rows == 0 || cols == 0) throw std::invalid_argument("RationalMatrix: dimensions must be positive");
}

RationalMatrix RationalMatrix::transposed() const
{
    RationalMatrix t(m_cols, m_rows);
    for (std::size_t r = 0; r < m_rows; ++r)
        for (std::size_t c = 0; c < m_cols; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RationalMatrix RationalMatrix::without_column(std::size_t col) const
{
    if (col >= m_cols) throw std::out_of_range("RationalMatrix::without_column: column out of range");
    RationalMatrix out(m_rows, m_cols - 1);
    for (std::size_t r = 0; r < m_rows; ++r)
        for (std::size_t c = 0, k = 0; c < m_cols; ++c)
            if (c != col) out(r, k++) = (*this)(r, c);
    return out;
}

RationalMatrix RationalMatrix::with_row(const std::vector<Rational>& row) const
{
    if (row.size() != m_cols) throw std::invalid_argument("RationalMatrix::with_row: width mismatch");
    RationalMatrix out(m_rows + 1, m_cols);
    std::copy(m_entries.begin(), m_entries.end(), out.m_entries.begin());
    std::copy(row.begin(), row.end(), out.m_entries.begin() + static_cast<std::ptrdiff_t>(m_entries.size()));
    return out;
}

}  // namespace hallinv
