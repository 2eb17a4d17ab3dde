#include "hallinv/tensor.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace hallinv {

double max_abs_diff(const SecondOrderTensor& a, const SecondOrderTensor& b)
{
    double m = 0.0;
    for (std::size_t n = 0; n < 9; ++n) m = std::max(m, std::abs(a.entries()[n] - b.entries()[n]));
    return m;
}

HallTensor hall_from_components(std::span<const double> c)
{
    if (c.size() != 9)
        throw std::invalid_argument("Hall tensor needs 9 components, got " + std::to_string(c.size()));
    std::array<double, 9> k{};
    for (std::size_t n = 0; n < 9; ++n) {
        if (!std::isfinite(c[n]))
            throw InvalidComponent(n, "Hall tensor component " + std::to_string(n) + " is not finite");
        k[n] = c[n];
    }
    return HallTensor(k);
}

ExactHallTensor to_exact(std::span<const long> c)
{
    if (c.size() != 9)
        throw std::invalid_argument("Hall tensor needs 9 components, got " + std::to_string(c.size()));
    std::array<Rational, 9> k;
    for (std::size_t n = 0; n < 9; ++n) k[n] = Rational(c[n]);
    return ExactHallTensor(k);
}

HallTensor to_double(const ExactHallTensor& k)
{
    std::array<double, 9> out{};
    for (std::size_t n = 0; n < 9; ++n) out[n] = k.components()[n].to_double();
    return HallTensor(out);
}

Vector3 cross(const Vector3& a, const Vector3& b)
{
    return Vector3{{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]}};
}

OrthogonalTensor::OrthogonalTensor(const SecondOrderTensor& q) : m_q(q), m_det_sign(0)
{
    for (double v : q.entries())
        if (!std::isfinite(v)) throw NotOrthogonal("orthogonal tensor has a non-finite entry");

    const SecondOrderTensor qtq = q.transposed() * q;
    const double dev = max_abs_diff(qtq, SecondOrderTensor::identity());
    if (dev > tolerance)
        throw NotOrthogonal("Q^T Q deviates from I by " + std::to_string(dev));

    const double det = q.determinant();
    m_det_sign = det > 0.0 ? 1 : -1;
    if (std::abs(det - m_det_sign) > tolerance)
        throw NotOrthogonal("det Q = " + std::to_string(det) + " is not +/-1");
}

OrthogonalTensor OrthogonalTensor::rotation(int axis, double angle)
{
    if (axis < 0 || axis > 2) throw std::invalid_argument("rotation axis must be 0, 1 or 2");
    const int a = (axis + 1) % 3;
    const int b = (axis + 2) % 3;
    SecondOrderTensor r = SecondOrderTensor::identity();
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    r(a, a) = c;
    r(a, b) = -s;
    r(b, a) = s;
    r(b, b) = c;
    return OrthogonalTensor(r);
}

HallTensor rotate_hall(const OrthogonalTensor& q, const HallTensor& k)
{
    // Only the nine stored (i < j) outputs are needed; the skew partner follows.
    static constexpr std::array<std::pair<int, int>, 3> pairs{{{0, 1}, {0, 2}, {1, 2}}};
    std::array<double, 9> out{};
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto [i, j] = pairs[p];
        for (int kk = 0; kk < 3; ++kk) {
            double s = 0.0;
            for (int a = 0; a < 3; ++a)
                for (int b = 0; b < 3; ++b) {
                    if (a == b) continue;
                    for (int c = 0; c < 3; ++c) s += q(i, a) * q(j, b) * q(kk, c) * k.full_component(a, b, c);
                }
            out[3 * p + static_cast<std::size_t>(kk)] = s;
        }
    }
    return HallTensor(out);
}

SecondOrderTensor rotate_tensor2(const OrthogonalTensor& q, const SecondOrderTensor& a)
{
    return q.q() * a * q.q().transposed();
}

double transform_identity_check(const OrthogonalTensor& q, const HallTensor& k)
{
    const SecondOrderTensor lhs = associated_tensor(rotate_hall(q, k));
    const SecondOrderTensor rhs = static_cast<double>(q.det_sign()) * rotate_tensor2(q, associated_tensor(k));
    return max_abs_diff(lhs, rhs);
}

namespace {

// Gram-Schmidt on the rows; returns false on a (near) degenerate sample.
bool orthonormalize_rows(SecondOrderTensor& m)
{
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < i; ++j) {
            double dot = 0.0;
            for (int c = 0; c < 3; ++c) dot += m(i, c) * m(j, c);
            for (int c = 0; c < 3; ++c) m(i, c) -= dot * m(j, c);
        }
        double norm = 0.0;
        for (int c = 0; c < 3; ++c) norm += m(i, c) * m(i, c);
        norm = std::sqrt(norm);
        if (norm < 1e-8) return false;
        for (int c = 0; c < 3; ++c) m(i, c) /= norm;
    }
    return true;
}

}  // namespace

OrthogonalTensor random_orthogonal(std::uint64_t seed, int det_sign)
{
    if (det_sign != 1 && det_sign != -1) throw std::invalid_argument("det_sign must be +1 or -1");

    for (std::uint64_t attempt = 0;; ++attempt) {
        std::mt19937_64 rng(seed + attempt * 0x9E3779B97F4A7C15ULL);
        std::normal_distribution<double> gauss(0.0, 1.0);
        SecondOrderTensor m;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) m(i, j) = gauss(rng);
        if (!orthonormalize_rows(m)) continue;

        // A second pass removes the O(eps * cond) loss of orthogonality of classical GS.
        orthonormalize_rows(m);
        const int current = m.determinant() > 0.0 ? 1 : -1;
        if (current != det_sign)
            for (int c = 0; c < 3; ++c) m(2, c) = -m(2, c);
        return OrthogonalTensor(m);
    }
}

Vector3 hall_field(const HallTensor& k, const Vector3& current, const Vector3& magnetic)
{
    Vector3 e;
    for (int i = 0; i < 3; ++i) {
        double s = 0.0;
        for (int j = 0; j < 3; ++j)
            for (int kk = 0; kk < 3; ++kk) s += k.full_component(i, j, kk) * current[j] * magnetic[kk];
        e[i] = s;
    }
    return e;
}

}  // namespace hallinv
