#include "commands.hpp"

#include "hallinv/invariants.hpp"
#include "hallinv/irreducibility.hpp"
#include "hallinv/tensor.hpp"
#include "hallinv/tensor_io.hpp"
#include "hallinv/witnesses.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>

namespace hallinv::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

Vector3 to_vector(const std::vector<double>& v)
{
    return Vector3{{v.at(0), v.at(1), v.at(2)}};
}

}  // namespace

int cmd_invariants(const CommandConfig& cfg, std::ostream& out, std::ostream& err)
{
    ojson report = ojson::object();
    try {
        const std::string text = read_text_file(cfg.input_path);
        if (cfg.exact) {
            const auto values = hall_invariants(parse_exact_hall_json(text));
            for (Invariant f : all_invariants) report[std::string(name(f))] = values[f].to_string();
        } else {
            const auto values = hall_invariants(parse_hall_json(text));
            for (Invariant f : all_invariants) report[std::string(name(f))] = values[f];
        }
    } catch (const TensorParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const InvalidComponent& e) {
        err << "error: k[" << e.index() << "]: " << e.what() << '\n';
        return kUsageError;
    }
    out << report.dump(2) << '\n';
    return kPass;
}

int cmd_verify_integrity(const CommandConfig& cfg, std::ostream& out, std::ostream& /*err*/)
{
    PointSource source = PaperSource{};
    if (cfg.source == "random") source = RandomSource{cfg.seed, cfg.rows_multiplier};

    const std::vector<RankReport> reports = verify_minimality(source);
    const bool pass = all_pass(reports);

    ojson report = ojson::object();
    report["source"] = cfg.source;
    if (cfg.source == "random") {
        report["seed"] = cfg.seed;
        report["rows_multiplier"] = cfg.rows_multiplier;
    }
    ojson degrees = ojson::array();
    for (const auto& r : reports) {
        ojson monomials = ojson::array();
        for (const auto& m : monomial_basis(r.degree)) monomials.push_back(m.to_string());
        ojson d = ojson::object();
        d["degree"] = r.degree;
        d["monomial_count"] = r.monomial_count;
        d["point_count"] = r.points.size();
        d["rank"] = r.rank;
        d["pass"] = r.pass;
        d["monomials"] = monomials;
        d["points"] = r.points;
        degrees.push_back(d);
    }
    report["degrees"] = degrees;
    report["pass"] = pass;
    out << report.dump(2) << '\n';
    return pass ? kPass : kVerificationFailed;
}

int cmd_verify_function_basis(const CommandConfig& cfg, std::ostream& out, std::ostream& /*err*/)
{
    const SeparationTolerances tol{cfg.tolerances.coincidence, cfg.tolerances.separation_floor};
    std::vector<SeparationReport> reports;
    if (cfg.witness_case) {
        reports.push_back(check_separation(*cfg.witness_case, tol));
    } else {
        reports = run_all_witnesses(tol);
    }

    std::size_t passed = 0;
    for (const auto& r : reports) passed += r.pass ? 1 : 0;
    const bool pass = passed == reports.size();

    if (cfg.output == OutputMode::json) {
        ojson cases = ojson::array();
        for (const auto& r : reports) {
            ojson c = ojson::object();
            c["case"] = r.id;
            c["target"] = std::string(name(r.target));
            c["target_v"] = r.target_v;
            c["target_v_prime"] = r.target_v_prime;
            c["target_delta"] = r.target_delta;
            c["max_other_mismatch"] = r.max_other_mismatch;
            c["worst_other"] = std::string(name(r.worst_other));
            c["max_listed_deviation"] = r.max_listed_deviation;
            c["sign_flip_residual"] = r.sign_flip_residual;
            c["pass"] = r.pass;
            cases.push_back(c);
        }
        ojson report = ojson::object();
        report["coincidence_tol"] = tol.coincidence;
        report["separation_floor"] = tol.separation_floor;
        report["cases"] = cases;
        report["passed"] = passed;
        report["total"] = reports.size();
        report["pass"] = pass;
        out << report.dump(2) << '\n';
    } else {
        for (const auto& r : reports) {
            out << "case " << std::setw(2) << r.id << "  " << name(r.target) << "  f(V)=" << r.target_v
                << "  f(V')=" << r.target_v_prime << "  others max mismatch=" << r.max_other_mismatch << " ("
                << name(r.worst_other) << ")  " << (r.pass ? "PASS" : "FAIL") << '\n';
        }
        out << passed << "/" << reports.size() << " witness pairs separate\n";
    }
    return pass ? kPass : kVerificationFailed;
}

int cmd_isotropy_fuzz(const CommandConfig& cfg, std::ostream& out, std::ostream& /*err*/)
{
    double max_iso = 0.0;
    Invariant worst = Invariant::I2;
    double max_hemi = 0.0;
    std::size_t improper = 0;

    for (std::size_t t = 0; t < cfg.trials; ++t) {
        const std::uint64_t trial_seed = splitmix64(cfg.seed ^ splitmix64(t));
        std::mt19937_64 rng(trial_seed);
        std::uniform_int_distribution<int> entry(-5, 5);
        std::array<double, 9> c{};
        for (auto& v : c) v = entry(rng);
        const HallTensor k(c);

        const int det_sign = (t % 2 == 0) ? 1 : -1;
        improper += det_sign < 0 ? 1 : 0;
        const OrthogonalTensor q = random_orthogonal(splitmix64(trial_seed), det_sign);
        const HallTensor rotated = rotate_hall(q, k);

        const auto before = hall_invariants(k);
        const auto after = hall_invariants(rotated);
        for (Invariant f : all_invariants) {
            const double d = scaled_deviation(after[f], before[f], before[f]);
            if (d > max_iso) {
                max_iso = d;
                worst = f;
            }
        }

        const auto base_before = base_invariants(associated_tensor(k));
        const auto base_after = base_invariants(associated_tensor(rotated));
        for (BaseInvariant g : {BaseInvariant::I1, BaseInvariant::I3, BaseInvariant::J3}) {
            const double expected = std::pow(static_cast<double>(det_sign), degree(g)) * base_before[g];
            max_hemi = std::max(max_hemi, scaled_deviation(base_after[g], expected, base_before[g]));
        }
    }

    const double tol = cfg.tolerances.isotropy;
    const bool pass = max_iso <= tol && max_hemi <= tol;
    if (cfg.output == OutputMode::json) {
        ojson report = ojson::object();
        report["seed"] = cfg.seed;
        report["trials"] = cfg.trials;
        report["proper_trials"] = cfg.trials - improper;
        report["improper_trials"] = improper;
        report["tolerance"] = tol;
        report["max_isotropy_deviation"] = max_iso;
        report["worst_invariant"] = std::string(name(worst));
        report["max_hemitropy_deviation"] = max_hemi;
        report["pass"] = pass;
        out << report.dump(2) << '\n';
    } else {
        out << cfg.trials << " trials (" << cfg.trials - improper << " proper, " << improper << " improper)\n"
            << "max isotropy deviation  " << max_iso << " (" << name(worst) << ")\n"
            << "max hemitropy deviation " << max_hemi << '\n'
            << (pass ? "PASS" : "FAIL") << " at tolerance " << tol << '\n';
    }
    return pass ? kPass : kVerificationFailed;
}

int cmd_field(const CommandConfig& cfg, std::ostream& out, std::ostream& err)
{
    HallTensor k;
    try {
        k = parse_hall_json(read_text_file(cfg.input_path));
    } catch (const TensorParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const InvalidComponent& e) {
        err << "error: k[" << e.index() << "]: " << e.what() << '\n';
        return kUsageError;
    }
    const Vector3 e = hall_field(k, to_vector(cfg.current), to_vector(cfg.magnetic));
    if (cfg.output == OutputMode::json) {
        ojson report = ojson::object();
        report["E"] = e.v;
        out << report.dump() << '\n';
    } else {
        out << "E = (" << e[0] << ", " << e[1] << ", " << e[2] << ")\n";
    }
    return kPass;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Isotropic invariants of the Hall tensor: evaluation and basis verification", "hallinv"};
    app.require_subcommand(1);

    CommandConfig cfg;
    bool json_flag = false;

    auto* inv = app.add_subcommand("invariants", "Print the ten basis invariants of a tensor file as JSON");
    inv->add_option("file", cfg.input_path, "Tensor file {\"k\": [k121, ..., k233]}")->required();
    inv->add_flag("--exact", cfg.exact, "Exact rational arithmetic; values printed as fractions");

    auto* integ = app.add_subcommand("verify-integrity", "Certify polynomial irreducibility by exact rank");
    integ->add_option("--source", cfg.source, "Sample points: paper or random")
        ->check(CLI::IsMember({"paper", "random"}));
    integ->add_option("--seed", cfg.seed, "Seed for random points");
    integ->add_option("--rows-multiplier", cfg.rows_multiplier, "Rows per degree = multiplier x monomials")
        ->check(CLI::PositiveNumber);

    auto* func = app.add_subcommand("verify-function-basis", "Replay the ten functional irreducibility witnesses");
    func->add_option("--case", cfg.witness_case, "Single case 1..10")->check(CLI::Range(1, witness_count));
    func->add_option("--coincidence-tol", cfg.tolerances.coincidence, "Relative tolerance for the nine others")
        ->check(CLI::NonNegativeNumber);
    func->add_option("--separation-floor", cfg.tolerances.separation_floor, "Minimum target separation")
        ->check(CLI::PositiveNumber);
    func->add_flag("--json", json_flag, "Machine-readable report");

    auto* fuzz = app.add_subcommand("isotropy-fuzz", "Randomized isotropy and hemitropy check");
    fuzz->add_option("--seed", cfg.seed, "Base seed");
    fuzz->add_option("--trials", cfg.trials, "Number of (Q, K) trials")->check(CLI::PositiveNumber);
    fuzz->add_option("--tol", cfg.tolerances.isotropy, "Relative tolerance")->check(CLI::PositiveNumber);
    fuzz->add_flag("--json", json_flag, "Machine-readable report");

    auto* field = app.add_subcommand("field", "Electric field E_i = k_ijk J_j H_k");
    field->add_option("file", cfg.input_path, "Tensor file")->required();
    field->add_option("-J,--current", cfg.current, "Current density J (3 values)")->expected(3)->required();
    field->add_option("-H,--magnetic", cfg.magnetic, "Magnetic field H (3 values)")->expected(3)->required();
    field->add_flag("--json", json_flag, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsageError;
    }

    cfg.output = json_flag ? OutputMode::json : OutputMode::human;
    cfg.subcommand = app.get_subcommands().front()->get_name();

    if (cfg.subcommand == "invariants") return cmd_invariants(cfg, out, err);
    if (cfg.subcommand == "verify-integrity") return cmd_verify_integrity(cfg, out, err);
    if (cfg.subcommand == "verify-function-basis") return cmd_verify_function_basis(cfg, out, err);
    if (cfg.subcommand == "isotropy-fuzz") return cmd_isotropy_fuzz(cfg, out, err);
    return cmd_field(cfg, out, err);
}

}  // namespace hallinv::cli
