#ifndef HALLINV_WITNESSES_HPP
#define HALLINV_WITNESSES_HPP

// Functional irreducibility witnesses: for each basis invariant a pair of
// Hall tensors (V, V') on which that invariant differs while the other nine
// coincide, so it cannot be a single-valued function of the others.

#include "hallinv/invariants.hpp"
#include "hallinv/tensor.hpp"

#include <array>
#include <vector>

namespace hallinv {

inline constexpr int witness_count = 10;

struct WitnessCase {
    int id = 0;
    Invariant target = Invariant::I2;
    HallTensor v;
    HallTensor v_prime;
    /// Published values of all ten invariants at V and at V' (the unnamed
    /// ones are stated to vanish). Compared on magnitude only.
    TenInvariants<double> listed_v{};
    TenInvariants<double> listed_v_prime{};
    /// The publication states f(V) = -f(V') for the target.
    bool target_sign_flips = false;
};

/// The pair for case `id` in 1..10, targeting I2, J2, K2, I4, J4, K4, I6, J6, K6, L6
/// respectively. Radical entries are evaluated from their closed forms.
/// Throws std::out_of_range for other ids.
WitnessCase witness_pair(int id);

struct SeparationTolerances {
    double coincidence = 1e-9;
    double separation_floor = 1e-6;
};

struct SeparationReport {
    int id = 0;
    Invariant target = Invariant::I2;
    double target_v = 0.0;
    double target_v_prime = 0.0;
    /// |f(V) - f(V')| for the target.
    double target_delta = 0.0;
    /// Max over the nine others of |f(V) - f(V')| / max(1, |f(V)|).
    double max_other_mismatch = 0.0;
    Invariant worst_other = Invariant::I2;
    bool pass = false;

    /// Max over all 20 published values of ||computed| - |listed|| / max(1, |listed|).
    double max_listed_deviation = 0.0;
    /// For sign-flip cases: |f(V) + f(V')| / max(1, |f(V)|); zero otherwise.
    double sign_flip_residual = 0.0;
};

/// Throws std::invalid_argument for negative tolerances, std::out_of_range for a bad id.
SeparationReport check_separation(int id, const SeparationTolerances& tol = {});

std::vector<SeparationReport> run_all_witnesses(const SeparationTolerances& tol = {});

}  // namespace hallinv

#endif  // HALLINV_WITNESSES_HPP
