#ifndef HALLINV_INVARIANTS_HPP
#define HALLINV_INVARIANTS_HPP

#include "hallinv/tensor.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace hallinv {

/// The seven trace invariants of A = T + W, in the order I1, I2, J2, I3, J3, I4, I6.
enum class BaseInvariant : std::uint8_t { I1, I2, J2, I3, J3, I4, I6 };

/// The ten-element minimal integrity basis of the Hall tensor.
enum class Invariant : std::uint8_t { I2, J2, K2, I4, J4, K4, I6, J6, K6, L6 };

inline constexpr std::array<BaseInvariant, 7> all_base_invariants{
    BaseInvariant::I1, BaseInvariant::I2, BaseInvariant::J2, BaseInvariant::I3,
    BaseInvariant::J3, BaseInvariant::I4, BaseInvariant::I6};

inline constexpr std::array<Invariant, 10> all_invariants{
    Invariant::I2, Invariant::J2, Invariant::K2, Invariant::I4, Invariant::J4,
    Invariant::K4, Invariant::I6, Invariant::J6, Invariant::K6, Invariant::L6};

std::string_view name(BaseInvariant b);
std::string_view name(Invariant f);
std::optional<Invariant> invariant_from_name(std::string_view s);

/// Polynomial degree in the components of A (equivalently of K).
constexpr int degree(BaseInvariant b)
{
    constexpr std::array<int, 7> d{1, 2, 2, 3, 3, 4, 6};
    return d[static_cast<std::size_t>(b)];
}

/// Polynomial degree in the components of K.
constexpr int degree(Invariant f)
{
    constexpr std::array<int, 10> d{2, 2, 2, 4, 4, 4, 6, 6, 6, 6};
    return d[static_cast<std::size_t>(f)];
}

struct DegreeEntry {
    std::string_view name;
    int degree;
};

/// Name -> degree tables in the fixed field order.
std::array<DegreeEntry, 10> invariant_degrees();
std::array<DegreeEntry, 7> base_invariant_degrees();

template <class Scalar>
struct SevenInvariants {
    std::array<Scalar, 7> values;

    const Scalar& operator[](BaseInvariant b) const { return values[static_cast<std::size_t>(b)]; }
    Scalar& operator[](BaseInvariant b) { return values[static_cast<std::size_t>(b)]; }
};

template <class Scalar>
struct TenInvariants {
    std::array<Scalar, 10> values;

    const Scalar& operator[](Invariant f) const { return values[static_cast<std::size_t>(f)]; }
    Scalar& operator[](Invariant f) { return values[static_cast<std::size_t>(f)]; }
};

/// tr T, tr T^2, tr W^2, tr T^3, tr T W^2, tr T^2 W^2, tr T^2 W^2 T W.
///
/// Shared by the floating and exact paths so the two cannot drift apart.
template <class Scalar>
SevenInvariants<Scalar> base_invariants(const Tensor2<Scalar>& a)
{
    const auto [t, w] = sym_skew_split(a);
    const Tensor2<Scalar> t2 = t * t;
    const Tensor2<Scalar> w2 = w * w;
    const Tensor2<Scalar> t2w2 = t2 * w2;

    SevenInvariants<Scalar> out;
    out[BaseInvariant::I1] = t.trace();
    out[BaseInvariant::I2] = t2.trace();
    out[BaseInvariant::J2] = w2.trace();
    out[BaseInvariant::I3] = (t2 * t).trace();
    out[BaseInvariant::J3] = (t * w2).trace();
    out[BaseInvariant::I4] = t2w2.trace();
    out[BaseInvariant::I6] = (t2w2 * t * w).trace();
    return out;
}

/// Products K2 = I1^2, J4 = I1 I3, K4 = I1 J3, J6 = I3^2, K6 = J3^2, L6 = I3 J3
/// plus the four base invariants carried over unchanged.
template <class Scalar>
TenInvariants<Scalar> basis_from_base(const SevenInvariants<Scalar>& b)
{
    using B = BaseInvariant;
    using F = Invariant;
    TenInvariants<Scalar> out;
    out[F::I2] = b[B::I2];
    out[F::J2] = b[B::J2];
    out[F::K2] = b[B::I1] * b[B::I1];
    out[F::I4] = b[B::I4];
    out[F::J4] = b[B::I1] * b[B::I3];
    out[F::K4] = b[B::I1] * b[B::J3];
    out[F::I6] = b[B::I6];
    out[F::J6] = b[B::I3] * b[B::I3];
    out[F::K6] = b[B::J3] * b[B::J3];
    out[F::L6] = b[B::I3] * b[B::J3];
    return out;
}

template <class Scalar>
TenInvariants<Scalar> hall_invariants(const BasicHallTensor<Scalar>& k)
{
    return basis_from_base(base_invariants(associated_tensor(k)));
}

/// |a - b| / max(1, |reference|).
double scaled_deviation(double a, double b, double reference);

}  // namespace hallinv

#endif  // HALLINV_INVARIANTS_HPP
