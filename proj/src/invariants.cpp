#include "hallinv/invariants.hpp"

#include <algorithm>
#include <cmath>

namespace hallinv {

namespace {

constexpr std::array<std::string_view, 7> base_names{"I1", "I2", "J2", "I3", "J3", "I4", "I6"};
constexpr std::array<std::string_view, 10> basis_names{"I2", "J2", "K2", "I4", "J4",
                                                       "K4", "I6", "J6", "K6", "L6"};

}  // namespace

std::string_view name(BaseInvariant b)
{
    return base_names[static_cast<std::size_t>(b)];
}

std::string_view name(Invariant f)
{
    return basis_names[static_cast<std::size_t>(f)];
}

std::optional<Invariant> invariant_from_name(std::string_view s)
{
    for (Invariant f : all_invariants)
        if (name(f) == s) return f;
    return std::nullopt;
}

std::array<DegreeEntry, 10> invariant_degrees()
{
    std::array<DegreeEntry, 10> out{};
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = {name(all_invariants[n]), degree(all_invariants[n])};
    return out;
}

std::array<DegreeEntry, 7> base_invariant_degrees()
{
    std::array<DegreeEntry, 7> out{};
    for (std::size_t n = 0; n < out.size(); ++n)
        out[n] = {name(all_base_invariants[n]), degree(all_base_invariants[n])};
    return out;
}

double scaled_deviation(double a, double b, double reference)
{
    return std::abs(a - b) / std::max(1.0, std::abs(reference));
}

}  // namespace hallinv
