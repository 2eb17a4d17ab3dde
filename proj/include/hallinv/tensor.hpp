#ifndef HALLINV_TENSOR_HPP
#define HALLINV_TENSOR_HPP

// Hall tensors, second-order tensors, and the Levi-Civita map between them.
//
// Conventions: right-handed orthonormal frame, eps(0,1,2) = +1, indices are
// zero-based (physical index 1 is C++ index 0).

#include "hallinv/rational.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

namespace hallinv {

/// A Hall tensor component was NaN or infinite.
class InvalidComponent : public std::invalid_argument {
public:
    InvalidComponent(std::size_t index, const std::string& what)
        : std::invalid_argument(what), m_index(index) {}
    std::size_t index() const { return m_index; }

private:
    std::size_t m_index;
};

/// A matrix failed the orthogonality tolerance.
class NotOrthogonal : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Levi-Civita symbol for zero-based indices.
constexpr int levi_civita(int i, int j, int k)
{
    if (i == j || j == k || i == k) return 0;
    // even permutations of (0,1,2)
    if ((i == 0 && j == 1) || (i == 1 && j == 2) || (i == 2 && j == 0)) return 1;
    return -1;
}

/// 3x3 tensor, row index first. Scalar is double or Rational.
template <class Scalar>
class Tensor2 {
public:
    Tensor2() : m_a{} { m_a.fill(Scalar(0)); }
    explicit Tensor2(const std::array<Scalar, 9>& row_major) : m_a(row_major) {}

    static Tensor2 identity()
    {
        Tensor2 t;
        for (int i = 0; i < 3; ++i) t(i, i) = Scalar(1);
        return t;
    }

    Scalar& operator()(int i, int j) { return m_a[static_cast<std::size_t>(3 * i + j)]; }
    const Scalar& operator()(int i, int j) const { return m_a[static_cast<std::size_t>(3 * i + j)]; }

    const std::array<Scalar, 9>& entries() const { return m_a; }

    Tensor2 transposed() const
    {
        Tensor2 t;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t(i, j) = (*this)(j, i);
        return t;
    }

    Scalar trace() const { return (*this)(0, 0) + (*this)(1, 1) + (*this)(2, 2); }

    Scalar determinant() const
    {
        const Tensor2& a = *this;
        return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
               a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
               a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    }

    Tensor2& operator+=(const Tensor2& rhs)
    {
        for (std::size_t n = 0; n < 9; ++n) m_a[n] += rhs.m_a[n];
        return *this;
    }
    Tensor2& operator-=(const Tensor2& rhs)
    {
        for (std::size_t n = 0; n < 9; ++n) m_a[n] -= rhs.m_a[n];
        return *this;
    }
    Tensor2& operator*=(const Scalar& s)
    {
        for (auto& v : m_a) v *= s;
        return *this;
    }

    friend Tensor2 operator+(Tensor2 lhs, const Tensor2& rhs) { return lhs += rhs; }
    friend Tensor2 operator-(Tensor2 lhs, const Tensor2& rhs) { return lhs -= rhs; }
    friend Tensor2 operator*(Tensor2 lhs, const Scalar& s) { return lhs *= s; }
    friend Tensor2 operator*(const Scalar& s, Tensor2 rhs) { return rhs *= s; }

    friend Tensor2 operator*(const Tensor2& a, const Tensor2& b)
    {
        Tensor2 c;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                Scalar s = a(i, 0) * b(0, j);
                s += a(i, 1) * b(1, j);
                s += a(i, 2) * b(2, j);
                c(i, j) = s;
            }
        return c;
    }

    friend bool operator==(const Tensor2&, const Tensor2&) = default;

private:
    std::array<Scalar, 9> m_a;
};

using SecondOrderTensor = Tensor2<double>;
using ExactTensor2 = Tensor2<Rational>;

/// Largest entrywise |a_ij - b_ij|.
double max_abs_diff(const SecondOrderTensor& a, const SecondOrderTensor& b);

/// Symmetric and skew parts, T + W = A.
template <class Scalar>
struct SymSkew {
    Tensor2<Scalar> sym;
    Tensor2<Scalar> skew;
};

template <class Scalar>
SymSkew<Scalar> sym_skew_split(const Tensor2<Scalar>& a)
{
    SymSkew<Scalar> out;
    const Scalar half = Scalar(1) / Scalar(2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            out.sym(i, j) = (a(i, j) + a(j, i)) * half;
            out.skew(i, j) = (a(i, j) - a(j, i)) * half;
        }
    return out;
}

/// Index into the 9-component storage, in the order
/// (k121, k122, k123, k131, k132, k133, k231, k232, k233).
enum class HallComponent : std::uint8_t { k121, k122, k123, k131, k132, k133, k231, k232, k233 };

/// Third-order tensor with k_ijk = -k_jik, stored as its nine independent
/// components. The skew symmetry is structural: full_component() derives
/// the other 18 entries on demand.
template <class Scalar>
class BasicHallTensor {
public:
    BasicHallTensor() { m_k.fill(Scalar(0)); }
    explicit BasicHallTensor(const std::array<Scalar, 9>& components) : m_k(components) {}

    const std::array<Scalar, 9>& components() const { return m_k; }
    const Scalar& operator[](HallComponent c) const { return m_k[static_cast<std::size_t>(c)]; }
    Scalar& operator[](HallComponent c) { return m_k[static_cast<std::size_t>(c)]; }

    /// k_ijk for zero-based i, j, k.
    Scalar full_component(int i, int j, int k) const
    {
        if (i == j) return Scalar(0);
        if (i > j) return -full_component(j, i, k);
        // (i, j) is one of (0,1), (0,2), (1,2) -> stored blocks 0, 1, 2
        const int block = i + j - 1;
        return m_k[static_cast<std::size_t>(3 * block + k)];
    }

    BasicHallTensor scaled(const Scalar& s) const
    {
        BasicHallTensor out(*this);
        for (auto& v : out.m_k) v *= s;
        return out;
    }

    BasicHallTensor operator-() const { return scaled(Scalar(-1)); }

    friend bool operator==(const BasicHallTensor&, const BasicHallTensor&) = default;

private:
    std::array<Scalar, 9> m_k;
};

using HallTensor = BasicHallTensor<double>;
using ExactHallTensor = BasicHallTensor<Rational>;

/// Validated construction from the canonical 9-tuple. Throws
/// InvalidComponent (naming the offending index) on NaN or infinity.
HallTensor hall_from_components(std::span<const double> c);

/// Associated second-order tensor A = 1/2 eps K, a_ij = 1/2 eps_kli k_klj.
/// Rows are (k231, k232, k233), (-k131, -k132, -k133), (k121, k122, k123).
template <class Scalar>
Tensor2<Scalar> associated_tensor(const BasicHallTensor<Scalar>& k)
{
    using C = HallComponent;
    return Tensor2<Scalar>(std::array<Scalar, 9>{
        k[C::k231], k[C::k232], k[C::k233],
        -k[C::k131], -k[C::k132], -k[C::k133],
        k[C::k121], k[C::k122], k[C::k123],
    });
}

/// Inverse of associated_tensor: k_ijk = eps_ijl a_lk.
template <class Scalar>
BasicHallTensor<Scalar> hall_from_tensor(const Tensor2<Scalar>& a)
{
    return BasicHallTensor<Scalar>(std::array<Scalar, 9>{
        a(2, 0), a(2, 1), a(2, 2),
        -a(1, 0), -a(1, 1), -a(1, 2),
        a(0, 0), a(0, 1), a(0, 2),
    });
}

/// Converts integer/rational components to an exact Hall tensor.
ExactHallTensor to_exact(std::span<const long> c);
HallTensor to_double(const ExactHallTensor& k);

struct Vector3 {
    std::array<double, 3> v{};

    double& operator[](int i) { return v[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return v[static_cast<std::size_t>(i)]; }
    friend bool operator==(const Vector3&, const Vector3&) = default;
};

Vector3 cross(const Vector3& a, const Vector3& b);

/// Orthogonal tensor whose orthogonality was checked on construction:
/// |Q^T Q - I| <= 1e-12 entrywise and |det Q - det_sign| <= 1e-12.
class OrthogonalTensor {
public:
    static constexpr double tolerance = 1e-12;

    /// Throws NotOrthogonal if the checks above fail.
    explicit OrthogonalTensor(const SecondOrderTensor& q);

    static OrthogonalTensor identity() { return OrthogonalTensor(SecondOrderTensor::identity()); }
    static OrthogonalTensor central_inversion() { return OrthogonalTensor(-1.0 * SecondOrderTensor::identity()); }
    /// Right-handed rotation by `angle` radians about coordinate axis `axis` (0, 1, 2).
    static OrthogonalTensor rotation(int axis, double angle);

    const SecondOrderTensor& q() const { return m_q; }
    double operator()(int i, int j) const { return m_q(i, j); }
    int det_sign() const { return m_det_sign; }

private:
    SecondOrderTensor m_q;
    int m_det_sign;
};

/// (<Q>K)_ijk = q_ia q_jb q_kc k_abc over the full 27-component expansion,
/// re-compressed to the nine stored components.
HallTensor rotate_hall(const OrthogonalTensor& q, const HallTensor& k);

/// Q A Q^T.
SecondOrderTensor rotate_tensor2(const OrthogonalTensor& q, const SecondOrderTensor& a);

/// Max entrywise |A(<Q>K) - det(Q) Q A(K) Q^T|; zero up to round-off because <Q>eps = det(Q) eps.
double transform_identity_check(const OrthogonalTensor& q, const HallTensor& k);

/// Haar-distributed orthogonal tensor from a seeded Gaussian sample,
/// orthonormalized by Gram-Schmidt (QR with positive diagonal R), then with
/// one row negated as needed so det Q = det_sign. Deterministic in `seed`.
/// Throws std::invalid_argument if det_sign is not +1 or -1.
OrthogonalTensor random_orthogonal(std::uint64_t seed, int det_sign);

/// Hall constitutive law E_i = k_ijk J_j H_k.
Vector3 hall_field(const HallTensor& k, const Vector3& current, const Vector3& magnetic);

}  // namespace hallinv

#endif  // HALLINV_TENSOR_HPP
