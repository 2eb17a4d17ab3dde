#include "hallinv/irreducibility.hpp"

#include "hallinv/exact_rank.hpp"

#include <random>
#include <stdexcept>

namespace hallinv {

Monomial Monomial::product(std::initializer_list<Invariant> factors)
{
    Monomial m;
    for (Invariant f : factors) ++m.m_exponents[static_cast<std::size_t>(f)];
    return m;
}

int Monomial::degree() const
{
    int d = 0;
    for (Invariant f : all_invariants) d += static_cast<int>(exponent(f)) * hallinv::degree(f);
    return d;
}

std::string Monomial::to_string() const
{
    std::string out;
    for (Invariant f : all_invariants) {
        const unsigned e = exponent(f);
        if (e == 0) continue;
        if (!out.empty()) out += '*';
        out += name(f);
        if (e > 1) out += '^' + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

std::vector<Monomial> monomial_basis(int degree)
{
    using F = Invariant;
    constexpr std::array<F, 3> deg2{F::I2, F::J2, F::K2};
    constexpr std::array<F, 3> deg4{F::I4, F::J4, F::K4};

    std::vector<Monomial> out;
    switch (degree) {
    case 2:
        for (F f : deg2) out.push_back(Monomial::product({f}));
        break;
    case 4:
        for (F f : deg2) out.push_back(Monomial::product({f, f}));
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = a + 1; b < 3; ++b) out.push_back(Monomial::product({deg2[a], deg2[b]}));
        for (F f : deg4) out.push_back(Monomial::product({f}));
        break;
    case 6:
        for (F f : deg2) out.push_back(Monomial::product({f, f, f}));
        for (std::size_t a = 0; a < 3; ++a)
            for (std::size_t b = a; b < 3; ++b)
                for (std::size_t c = b; c < 3; ++c) {
                    if (a == b && b == c) continue;
                    out.push_back(Monomial::product({deg2[a], deg2[b], deg2[c]}));
                }
        for (F f2 : deg2)
            for (F f4 : deg4) out.push_back(Monomial::product({f2, f4}));
        for (F f : {F::I6, F::J6, F::K6, F::L6}) out.push_back(Monomial::product({f}));
        break;
    default:
        throw std::invalid_argument("monomial_basis: unsupported degree " + std::to_string(degree));
    }
    return out;
}

Rational evaluate_monomial(const Monomial& m, const SamplePoint& y)
{
    return m.evaluate(hall_invariants(to_exact(y)));
}

RationalMatrix build_matrix(int degree, const std::vector<SamplePoint>& points)
{
    const std::vector<Monomial> monomials = monomial_basis(degree);
    if (points.empty()) throw std::invalid_argument("build_matrix: no sample points");

    RationalMatrix m(points.size(), monomials.size());
    for (std::size_t r = 0; r < points.size(); ++r) {
        const TenInvariants<Rational> values = hall_invariants(to_exact(points[r]));
        for (std::size_t c = 0; c < monomials.size(); ++c) m(r, c) = monomials[c].evaluate(values);
    }
    return m;
}

const std::vector<SamplePoint>& paper_points(int degree)
{
    static const std::vector<SamplePoint> degree2{
        {-2, 3, 5, 0, -5, -4, -5, 2, -2},
        {-3, 0, 1, 1, 2, -4, 3, 0, 3},
        {-2, 0, -1, 2, 1, -3, 5, 2, 3},
    };
    static const std::vector<SamplePoint> degree4{
        {4, 1, -3, 1, -4, -2, -1, 0, -5},
        {1, 5, 4, 0, -1, -5, -3, 5, -2},
        {-4, 4, -4, 1, -5, -2, 2, 3, 4},
        {-4, -5, 5, 5, -2, 3, 5, -1, 2},
        {0, 4, 3, 3, 1, -2, 3, 5, -4},
        {5, -3, 3, 3, -4, -2, 3, 5, -5},
        {-3, -2, 2, 4, -4, 1, 4, 2, 0},
        {-5, -3, 4, -1, 1, -2, -2, -3, 0},
        {0, -2, -2, 1, 5, 3, 4, 0, 0},
    };
    static const std::vector<SamplePoint> degree6{
        {3, -5, 1, 4, 2, 3, 3, 1, -3},
        {-5, -1, 2, -5, -2, 3, 3, 4, -1},
        {-4, 2, 1, -3, -2, -2, 1, 4, -1},
        {-2, 0, 3, 2, -2, -2, -5, 5, 2},
        {-2, -5, -5, -4, 3, -5, -3, 2, -3},
        {5, -4, 1, 3, -4, 1, -1, 4, 0},
        {-3, 3, 5, -3, -3, 1, 2, -2, -3},
        {2, 2, -5, 4, 4, -1, -5, 4, -5},
        {-2, -1, 2, 3, -2, -1, -2, -2, 5},
        {-4, -3, -4, -2, -5, -5, 5, -2, -3},
        {3, 2, -2, -5, 5, -3, 0, -2, -5},
        {4, -4, -1, 4, -4, 0, 1, 3, -1},
        {3, 0, -5, 0, 2, -5, -5, 4, 1},
        {-4, 5, -5, 2, -1, -4, -5, -2, -5},
        {2, -5, -5, 5, 0, 2, 2, 3, 4},
        {1, 4, 4, -1, -5, -3, 4, -5, 1},
        {-2, 5, -5, 1, -2, 1, 0, -5, 4},
        {0, -4, -5, 0, -5, -2, -2, -2, 2},
        {1, 2, 1, -1, 3, -4, -5, 4, 5},
        {3, -3, 1, -3, -5, 3, 5, 1, 1},
        {0, -1, 3, 0, -3, 5, 3, 0, 3},
        {1, -5, -4, -1, 0, -1, -5, -5, 2},
        {-4, -2, 3, 4, 5, -3, 4, 3, 3},
    };
    switch (degree) {
    case 2: return degree2;
    case 4: return degree4;
    case 6: return degree6;
    default: throw std::invalid_argument("paper_points: unsupported degree " + std::to_string(degree));
    }
}

std::vector<SamplePoint> random_points(std::uint64_t seed, std::size_t count)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> entry(-5, 5);
    std::vector<SamplePoint> out(count);
    for (auto& p : out)
        for (auto& v : p) v = entry(rng);
    return out;
}

RankReport rank_report(int degree, std::vector<SamplePoint> points)
{
    RankReport report;
    report.degree = degree;
    report.monomial_count = monomial_basis(degree).size();
    report.rank = exact_rank(build_matrix(degree, points));
    report.pass = report.rank == report.monomial_count;
    report.points = std::move(points);
    return report;
}

std::vector<RankReport> verify_minimality(const PointSource& source)
{
    std::vector<RankReport> reports;
    for (int degree : verified_degrees) {
        std::vector<SamplePoint> points;
        if (const auto* rnd = std::get_if<RandomSource>(&source)) {
            const std::size_t rows = rnd->rows_multiplier * monomial_basis(degree).size();
            // Independent stream per degree so the degree-6 block does not depend on the others.
            points = random_points(rnd->seed * 1000003ULL + static_cast<std::uint64_t>(degree), rows);
        } else {
            points = paper_points(degree);
        }
        reports.push_back(rank_report(degree, std::move(points)));
    }
    return reports;
}

bool all_pass(const std::vector<RankReport>& reports)
{
    for (const auto& r : reports)
        if (!r.pass) return false;
    return !reports.empty();
}

}  // namespace hallinv
