#ifndef HALLINV_IRREDUCIBILITY_HPP
#define HALLINV_IRREDUCIBILITY_HPP

// Polynomial irreducibility of the ten-invariant basis.
//
// At each degree d in {2, 4, 6} every product of basis invariants of total
// degree d is a candidate monomial. If the basis were reducible, some linear
// relation among those monomials would hold for every Hall tensor. Evaluating
// the monomials at sample points gives a matrix whose exact full column rank
// rules out any such relation.

#include "hallinv/invariants.hpp"
#include "hallinv/rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace hallinv {

/// Product of basis invariants, stored as exponents in Invariant order.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(const std::array<unsigned, 10>& exponents) : m_exponents(exponents) {}
    /// Product of the listed factors (repeats allowed).
    static Monomial product(std::initializer_list<Invariant> factors);

    unsigned exponent(Invariant f) const { return m_exponents[static_cast<std::size_t>(f)]; }
    const std::array<unsigned, 10>& exponents() const { return m_exponents; }
    /// Total degree in the components of K.
    int degree() const;
    /// e.g. "I2^2*J2", "L6".
    std::string to_string() const;

    template <class Scalar>
    Scalar evaluate(const TenInvariants<Scalar>& values) const
    {
        Scalar out(1);
        for (Invariant f : all_invariants)
            for (unsigned e = 0; e < exponent(f); ++e) out *= values[f];
        return out;
    }

    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    std::array<unsigned, 10> m_exponents{};
};

/// Integer 9-tuple in canonical component order, read as a Hall tensor.
using SamplePoint = std::array<long, 9>;

inline constexpr std::array<int, 3> verified_degrees{2, 4, 6};

/// Candidate monomials of the given degree, 3 / 9 / 23 of them.
///
/// Degree 2: I2, J2, K2.
/// Degree 4: I2^2, J2^2, K2^2, I2 J2, I2 K2, J2 K2, I4, J4, K4.
/// Degree 6: I2^3, J2^3, K2^3, the other seven products of three degree-2
/// invariants in lexicographic order, the nine degree-2 x degree-4 products
/// (I2 I4, I2 J4, ..., K2 K4), then I6, J6, K6, L6.
///
/// Throws std::invalid_argument for any other degree.
std::vector<Monomial> monomial_basis(int degree);

Rational evaluate_monomial(const Monomial& m, const SamplePoint& y);

/// Row i, column j = j-th monomial of monomial_basis(degree) at points[i].
/// Throws std::invalid_argument for an unsupported degree or empty point list.
RationalMatrix build_matrix(int degree, const std::vector<SamplePoint>& points);

/// The published sample points: 3, 9 and 23 points for degrees 2, 4, 6.
const std::vector<SamplePoint>& paper_points(int degree);

/// Uniform integer points in [-5, 5]^9.
std::vector<SamplePoint> random_points(std::uint64_t seed, std::size_t count);

struct PaperSource {};
struct RandomSource {
    std::uint64_t seed = 1;
    /// Rows per degree = multiplier x monomial count.
    std::size_t rows_multiplier = 2;
};
using PointSource = std::variant<PaperSource, RandomSource>;

struct RankReport {
    int degree = 0;
    std::size_t monomial_count = 0;
    std::size_t rank = 0;
    bool pass = false;
    std::vector<SamplePoint> points;
};

/// Exact rank at degrees 2, 4, 6. A rank deficit is reported, never thrown.
std::vector<RankReport> verify_minimality(const PointSource& source);

/// Rank of the matrix at `points`, with its pass flag set iff it equals the monomial count.
RankReport rank_report(int degree, std::vector<SamplePoint> points);

bool all_pass(const std::vector<RankReport>& reports);

}  // namespace hallinv

#endif  // HALLINV_IRREDUCIBILITY_HPP
