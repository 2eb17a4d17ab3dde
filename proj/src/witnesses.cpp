#include "hallinv/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hallinv {

namespace {

using C = HallComponent;
using F = Invariant;

struct Assign {
    C component;
    double value;
};

HallTensor make(std::initializer_list<Assign> entries)
{
    HallTensor k;
    for (const auto& e : entries) k[e.component] = e.value;
    return k;
}

TenInvariants<double> listed(std::initializer_list<std::pair<F, double>> nonzero)
{
    TenInvariants<double> out{};
    for (const auto& [f, v] : nonzero) out[f] = v;
    return out;
}

WitnessCase case_i2()
{
    WitnessCase w;
    w.target = F::I2;
    w.v = make({{C::k131, -1.0}, {C::k232, 1.0}});
    w.v_prime = make({{C::k131, -2.0}, {C::k232, 2.0}});
    w.listed_v = listed({{F::I2, 2.0}});
    w.listed_v_prime = listed({{F::I2, 8.0}});
    return w;
}

WitnessCase case_j2()
{
    WitnessCase w;
    w.target = F::J2;
    w.v = make({{C::k131, 1.0}, {C::k232, 1.0}});
    w.v_prime = HallTensor{};
    w.listed_v = listed({{F::J2, 2.0}});
    w.listed_v_prime = listed({});
    return w;
}

WitnessCase case_k2()
{
    const double r = std::sqrt((2.0 + std::cbrt(4.0)) / 2.0);
    WitnessCase w;
    w.target = F::K2;
    w.v = make({{C::k123, -r}, {C::k132, 0.0}, {C::k231, r}});
    w.v_prime = make({{C::k123, 1.0}, {C::k132, std::cbrt(2.0)}, {C::k231, 1.0}});
    const double i2 = 2.0 + std::cbrt(4.0);
    const double k2 = std::pow(2.0 - std::cbrt(2.0), 2);
    w.listed_v = listed({{F::I2, i2}});
    w.listed_v_prime = listed({{F::I2, i2}, {F::K2, k2}});
    return w;
}

WitnessCase case_i4()
{
    const double r2 = std::sqrt(2.0);
    const double r3 = std::sqrt(3.0);
    WitnessCase w;
    w.target = F::I4;
    w.v = make({{C::k121, -2.0}, {C::k122, 0.0}, {C::k123, 1.0}, {C::k131, 1.0}, {C::k132, 1.0},
                {C::k133, 0.0}, {C::k231, 0.0}, {C::k232, 1.0}, {C::k233, 2.0}});
    w.v_prime = make({{C::k121, -r3}, {C::k122, -r2}, {C::k123, 1.0}, {C::k131, 0.0}, {C::k132, 1.0},
                      {C::k133, -r2}, {C::k231, 0.0}, {C::k232, 0.0}, {C::k233, r3}});
    w.listed_v = listed({{F::I4, 5.0}, {F::I2, 2.0}, {F::J2, 10.0}, {F::K6, 9.0}});
    w.listed_v_prime = listed({{F::I4, 7.0}, {F::I2, 2.0}, {F::J2, 10.0}, {F::K6, 9.0}});
    return w;
}

WitnessCase case_j4()
{
    const double s = 4.0 + std::sqrt(14.0);
    const double t = 4.0 - std::sqrt(14.0);
    const double cbrt_2t = std::cbrt(2.0 * t);
    const double cbrt_2s = std::cbrt(2.0 * s);
    const double radical = std::sqrt(2.0 * std::cbrt(4.0) + 8.0 * std::cbrt(t) + std::cbrt(2.0 * t * t) +
                                     8.0 * std::cbrt(s) + std::cbrt(2.0 * s * s));
    const double sixth_root_2 = std::pow(2.0, 1.0 / 6.0);

    WitnessCase w;
    w.target = F::J4;
    w.target_sign_flips = true;
    w.v = make({{C::k123, 1.0}, {C::k132, 1.0}, {C::k231, cbrt_2t / 2.0 + std::cbrt(s / 4.0)}});
    w.v_prime = make({
        {C::k123, 2.0 - cbrt_2t / 2.0 - cbrt_2s / 2.0 - sixth_root_2 / 2.0 * radical},
        {C::k132, -1.0 + cbrt_2t / 4.0 + cbrt_2s / 4.0 - sixth_root_2 / 4.0 * radical},
        {C::k231, 0.0},
    });

    const double c = cbrt_2t + cbrt_2s;
    const double j4 = 3.0 / 8.0 * (-4.0 + c) * c;
    const double i2 = 2.0 + c * c / 4.0;
    const double k2 = (-4.0 + c) * (-4.0 + c) / 4.0;
    const double j6 = 9.0 / 16.0 * c * c;
    w.listed_v = listed({{F::J4, j4}, {F::I2, i2}, {F::K2, k2}, {F::J6, j6}});
    w.listed_v_prime = listed({{F::J4, -j4}, {F::I2, i2}, {F::K2, k2}, {F::J6, j6}});
    return w;
}

WitnessCase case_k4()
{
    const double c3 = std::cbrt(3.0);
    const double c9 = std::cbrt(9.0);
    const double den = 16.0 - 3.0 * c3 - 3.0 * c9;
    const double a = 0.5 * std::sqrt((-12.0 + 6.0 * c9) / den);
    const double b = std::pow(3.0, 1.0 / 6.0) / 2.0 * std::sqrt((9.0 + 5.0 * c3 - 6.0 * c9) / den);
    const double d = 0.5 * std::sqrt((22.0 - 12.0 * c3 - 2.0 * c9) / den);

    WitnessCase w;
    w.target = F::K4;
    w.target_sign_flips = true;
    w.v = make({{C::k121, -a}, {C::k122, 0.5}, {C::k123, -1.0}, {C::k131, 0.0}, {C::k132, -c9 / 2.0},
                {C::k133, 0.5}, {C::k231, -0.5}, {C::k232, 0.0}, {C::k233, a}});
    w.v_prime = make({{C::k121, 0.0}, {C::k122, -b}, {C::k123, 1.0}, {C::k131, -d}, {C::k132, c9 / 2.0},
                      {C::k133, -b}, {C::k231, 0.5}, {C::k232, -d}, {C::k233, 0.0}});

    const double big = -256.0 + 48.0 * c3 + 48.0 * c9;
    const double k4 = (6.0 + 21.0 * c3 - 17.0 * c9) / big;
    const double i2 = (5.0 + 3.0 * c3) / 4.0;
    const double j2 = (4.0 - 3.0 * c3 + 3.0 * c9) / (-32.0 + 6.0 * c3 + 6.0 * c9);
    const double k2 = std::pow(-3.0 + c9, 2) / 4.0;
    const double i4 = (-23.0 + 36.0 * c3 + 9.0 * c9) / big;
    const double k6 = (-47.0 + 78.0 * c3 - 31.0 * c9) / (64.0 * std::pow(-16.0 + 3.0 * c3 + 3.0 * c9, 2));
    w.listed_v = listed({{F::K4, k4}, {F::I2, i2}, {F::J2, j2}, {F::K2, k2}, {F::I4, i4}, {F::K6, k6}});
    w.listed_v_prime = listed({{F::K4, -k4}, {F::I2, i2}, {F::J2, j2}, {F::K2, k2}, {F::I4, i4}, {F::K6, k6}});
    return w;
}

WitnessCase case_i6()
{
    WitnessCase w;
    w.target = F::I6;
    w.target_sign_flips = true;
    w.v = make({{C::k121, -1.0}, {C::k122, -1.0}, {C::k123, 1.0}, {C::k131, 1.0}, {C::k132, 1.0},
                {C::k133, -1.0}, {C::k231, 0.0}, {C::k232, 1.0}, {C::k233, 1.0}});
    w.v_prime = make({{C::k121, -1.0}, {C::k122, -1.0}, {C::k123, 1.0}, {C::k131, -1.0}, {C::k132, 1.0},
                      {C::k133, -1.0}, {C::k231, 0.0}, {C::k232, -1.0}, {C::k233, 1.0}});
    w.listed_v = listed({{F::I6, 2.0}, {F::I2, 2.0}, {F::J2, 6.0}, {F::I4, 4.0}});
    w.listed_v_prime = listed({{F::I6, -2.0}, {F::I2, 2.0}, {F::J2, 6.0}, {F::I4, 4.0}});
    return w;
}

WitnessCase case_j6()
{
    const double c2 = std::cbrt(2.0);
    const double q = std::sqrt(3.0) * c2;
    WitnessCase w;
    w.target = F::J6;
    w.v = make({{C::k123, -q}, {C::k132, 0.0}, {C::k231, q}});
    w.v_prime = make({{C::k123, c2}, {C::k132, 2.0 * c2}, {C::k231, c2}});
    const double i2 = 6.0 * std::cbrt(4.0);
    w.listed_v = listed({{F::I2, i2}});
    w.listed_v_prime = listed({{F::J6, 144.0}, {F::I2, i2}});
    return w;
}

WitnessCase case_k6()
{
    const double r3 = std::sqrt(3.0);
    WitnessCase w;
    w.target = F::K6;
    w.v = make({{C::k121, 0.5}, {C::k122, 1.0}, {C::k123, 0.0}, {C::k131, 1.5}, {C::k132, 0.0},
                {C::k133, 1.0}, {C::k231, 0.0}, {C::k232, 1.5}, {C::k233, 0.5}});
    w.v_prime = make({{C::k121, -0.5}, {C::k122, 0.5}, {C::k123, 0.0}, {C::k131, r3}, {C::k132, 0.0},
                      {C::k133, 0.5}, {C::k231, 0.0}, {C::k232, r3}, {C::k233, -0.5}});
    w.listed_v = listed({{F::K6, 9.0 / 4.0}, {F::I2, 0.5}, {F::J2, -13.0 / 2.0}, {F::I4, -13.0 / 16.0}});
    w.listed_v_prime = listed({{F::K6, 3.0 / 4.0}, {F::I2, 0.5}, {F::J2, -13.0 / 2.0}, {F::I4, -13.0 / 16.0}});
    return w;
}

WitnessCase case_l6()
{
    const double h = 0.5 * std::sqrt(5.0 / 2.0);
    WitnessCase w;
    w.target = F::L6;
    w.target_sign_flips = true;
    w.v = make({{C::k121, -1.0}, {C::k122, 0.5}, {C::k123, -1.0}, {C::k131, 0.0}, {C::k132, 2.0},
                {C::k133, 0.5}, {C::k231, 3.0}, {C::k232, 0.0}, {C::k233, 1.0}});
    w.v_prime = make({{C::k121, 0.0}, {C::k122, -h}, {C::k123, 1.0}, {C::k131, -h}, {C::k132, -2.0},
                      {C::k133, -h}, {C::k231, -3.0}, {C::k232, -h}, {C::k233, 0.0}});
    const auto shared = {std::pair{F::I2, 14.0}, std::pair{F::J2, -5.0 / 2.0}, std::pair{F::I4, -45.0 / 4.0},
                         std::pair{F::J6, 324.0}, std::pair{F::K6, 25.0 / 16.0}};
    w.listed_v = listed(shared);
    w.listed_v_prime = listed(shared);
    w.listed_v[F::L6] = -45.0 / 2.0;
    w.listed_v_prime[F::L6] = 45.0 / 2.0;
    return w;
}

double listed_deviation(const TenInvariants<double>& computed, const TenInvariants<double>& published)
{
    double worst = 0.0;
    for (F f : all_invariants)
        worst = std::max(worst, scaled_deviation(std::abs(computed[f]), std::abs(published[f]), published[f]));
    return worst;
}

}  // namespace

WitnessCase witness_pair(int id)
{
    WitnessCase w;
    switch (id) {
    case 1: w = case_i2(); break;
    case 2: w = case_j2(); break;
    case 3: w = case_k2(); break;
    case 4: w = case_i4(); break;
    case 5: w = case_j4(); break;
    case 6: w = case_k4(); break;
    case 7: w = case_i6(); break;
    case 8: w = case_j6(); break;
    case 9: w = case_k6(); break;
    case 10: w = case_l6(); break;
    default: throw std::out_of_range("witness id must be in 1..10, got " + std::to_string(id));
    }
    w.id = id;
    return w;
}

SeparationReport check_separation(int id, const SeparationTolerances& tol)
{
    if (tol.coincidence < 0.0 || tol.separation_floor < 0.0)
        throw std::invalid_argument("separation tolerances must be non-negative");

    const WitnessCase w = witness_pair(id);
    const TenInvariants<double> fv = hall_invariants(w.v);
    const TenInvariants<double> fvp = hall_invariants(w.v_prime);

    SeparationReport r;
    r.id = id;
    r.target = w.target;
    r.target_v = fv[w.target];
    r.target_v_prime = fvp[w.target];
    r.target_delta = std::abs(fv[w.target] - fvp[w.target]);
    for (F f : all_invariants) {
        if (f == w.target) continue;
        const double m = scaled_deviation(fv[f], fvp[f], fv[f]);
        if (m >= r.max_other_mismatch) {
            r.max_other_mismatch = m;
            r.worst_other = f;
        }
    }
    r.pass = r.target_delta > tol.separation_floor && r.max_other_mismatch < tol.coincidence;

    r.max_listed_deviation = std::max(listed_deviation(fv, w.listed_v), listed_deviation(fvp, w.listed_v_prime));
    if (w.target_sign_flips) r.sign_flip_residual = scaled_deviation(fv[w.target], -fvp[w.target], fv[w.target]);
    return r;
}

std::vector<SeparationReport> run_all_witnesses(const SeparationTolerances& tol)
{
    std::vector<SeparationReport> out;
    for (int id = 1; id <= witness_count; ++id) out.push_back(check_separation(id, tol));
    return out;
}

}  // namespace hallinv
