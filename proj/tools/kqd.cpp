// kqd — exact calculator for Kronecker-quiver pairings, reflections, pencil
// sheaf oracles, exceptional-slope arithmetic and seeded experiments.
//
// Exit codes: 0 success, 1 contract/precondition error, 2 parse error,
// 3 internal invariant violation (always a bug).

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "dualcore/document.hpp"
#include "dualcore/drezet.hpp"
#include "dualcore/dualitylab.hpp"
#include "dualcore/errors.hpp"
#include "dualcore/selftest.hpp"

namespace {

using namespace dualcore;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw contract_error("cannot open output file: " + out_path);
    out << text;
}

drezet::Dyadic parse_dyadic(const std::string& s) {
    const Rational r = parse_rational(s);
    const Int d = den(r);
    Int probe = d;
    int q = 0;
    while (probe % 2 == 0) {
        probe /= 2;
        ++q;
    }
    if (probe != 1) throw parse_error("not a dyadic rational: '" + s + "'");
    if (q > 62 || num(r) > INT64_MAX || num(r) < INT64_MIN)
        throw parse_error("dyadic out of supported range: '" + s + "'");
    return drezet::Dyadic(static_cast<long long>(num(r)), q);
}

quiver::Weight parse_weight(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw parse_error("weight must be 's1,s2'");
    try {
        return quiver::Weight{std::stol(s.substr(0, comma)), std::stol(s.substr(comma + 1))};
    } catch (const std::exception&) {
        throw parse_error("weight must be 's1,s2' with integer entries");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"exact Kronecker-quiver / plane-sheaf duality calculator"};
    app.require_subcommand(1);

    // pair
    std::string pair_v, pair_w;
    bool pair_kron = false;
    auto* pair_cmd = app.add_subcommand("pair", "pairing determinant of two reps");
    pair_cmd->add_option("V", pair_v, "rep/bundle document")->required();
    pair_cmd->add_option("W", pair_w, "rep/pencil document")->required();
    pair_cmd->add_flag("--kron", pair_kron, "also print the big block determinant");

    // reflect / unreflect
    std::string refl_in, refl_out;
    auto* refl_cmd = app.add_subcommand("reflect", "reflection of a rep");
    refl_cmd->add_option("FILE", refl_in, "rep document")->required();
    refl_cmd->add_option("--out", refl_out, "output file (default stdout)");
    std::string unrefl_in, unrefl_out;
    auto* unrefl_cmd = app.add_subcommand("unreflect", "inverse reflection of a rep");
    unrefl_cmd->add_option("FILE", unrefl_in, "rep document")->required();
    unrefl_cmd->add_option("--out", unrefl_out, "output file (default stdout)");

    // stable
    std::string stable_in, stable_weight = "1,-1";
    int stable_trials = 8, stable_probes = 3;
    long stable_bound = 3;
    std::optional<std::uint64_t> stable_seed;
    auto* stable_cmd = app.add_subcommand("stable", "stability certificate");
    stable_cmd->add_option("FILE", stable_in, "rep document")->required();
    stable_cmd->add_option("--weight", stable_weight, "weight 's1,s2' (default 1,-1)");
    stable_cmd->add_option("--trials", stable_trials, "probes per size");
    stable_cmd->add_option("--probes", stable_probes, "max probe size multiplier");
    stable_cmd->add_option("--bound", stable_bound, "probe entry bound");
    stable_cmd->add_option("--seed", stable_seed, "RNG seed (required)");

    // curve / ddual
    std::string curve_in, curve_out;
    auto* curve_cmd = app.add_subcommand("curve", "support curve of a pencil");
    curve_cmd->add_option("FILE", curve_in, "pencil document")->required();
    curve_cmd->add_option("--out", curve_out, "output file (default stdout)");
    std::string ddual_in, ddual_out;
    auto* ddual_cmd = app.add_subcommand("ddual", "dual pencil (entrywise transpose)");
    ddual_cmd->add_option("FILE", ddual_in, "pencil document")->required();
    ddual_cmd->add_option("--out", ddual_out, "output file (default stdout)");

    // strata
    std::string strata_in;
    int strata_census_n = 0, strata_samples = 20;
    std::optional<std::uint64_t> strata_seed;
    std::string strata_out;
    auto* strata_cmd = app.add_subcommand("strata", "strata index or census");
    strata_cmd->add_option("FILE", strata_in, "bundle document");
    strata_cmd->add_option("--census", strata_census_n, "run a census for this n");
    strata_cmd->add_option("--samples", strata_samples, "census sample count");
    strata_cmd->add_option("--seed", strata_seed, "census RNG seed (required)");
    strata_cmd->add_option("--out", strata_out, "output file (default stdout)");

    // coh
    std::string coh_in, coh_tensor;
    std::optional<int> coh_twist_k;
    auto* coh_cmd = app.add_subcommand("coh", "sheaf cohomology");
    coh_cmd->add_option("FILE", coh_in, "bundle document")->required();
    coh_cmd->add_option("--twist", coh_twist_k, "twist k for (h0, h1, h2)");
    coh_cmd->add_option("--tensor", coh_tensor, "pencil document for h0 of the tensor");

    // eps / delta / height / posdim
    std::string eps_arg;
    auto* eps_cmd = app.add_subcommand("eps", "exceptional slope of a dyadic");
    eps_cmd->add_option("DYADIC", eps_arg, "dyadic rational p/2^q")->required();
    std::string delta_arg;
    int delta_depth = 64;
    auto* delta_cmd = app.add_subcommand("delta", "threshold function at a slope");
    delta_cmd->add_option("MU", delta_arg, "rational slope")->required();
    delta_cmd->add_option("--depth", delta_depth, "max tree depth");
    long h_r = 1, h_c1 = 0, h_c2 = 0;
    int height_depth = 64;
    auto* height_cmd = app.add_subcommand("height", "moduli height of (r, c1, c2)");
    height_cmd->add_option("R", h_r)->required();
    height_cmd->add_option("C1", h_c1)->required();
    height_cmd->add_option("C2", h_c2)->required();
    height_cmd->add_option("--depth", height_depth, "max tree depth");
    long p_r = 1, p_c1 = 0, p_c2 = 0;
    int posdim_depth = 64;
    auto* posdim_cmd = app.add_subcommand("posdim", "positive-dimension test");
    posdim_cmd->add_option("R", p_r)->required();
    posdim_cmd->add_option("C1", p_c1)->required();
    posdim_cmd->add_option("C2", p_c2)->required();
    posdim_cmd->add_option("--depth", posdim_depth, "max tree depth");

    // experiment
    std::string exp_in, exp_out;
    bool exp_table = false;
    auto* exp_cmd = app.add_subcommand("experiment", "config-driven experiment");
    exp_cmd->add_option("CONFIG", exp_in, "config document")->required();
    exp_cmd->add_option("--out", exp_out, "output file (default stdout)");
    exp_cmd->add_flag("--table", exp_table, "plain-text table instead of a report document");

    // selftest
    auto* selftest_cmd = app.add_subcommand("selftest", "run the acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (pair_cmd->parsed()) {
        const doc::json jv = doc::load_document(pair_v);
        const doc::json jw = doc::load_document(pair_w);
        const quiver::Rep v = doc::any_rep_from_json(jv);
        const quiver::Rep w = doc::any_rep_from_json(jw);
        const bool kron_shape = v.q == 3 && w.q == 3 && v.dim.a2 == 2 * v.dim.a1 &&
                                w.dim.a1 == w.dim.a2 && v.dim.a1 >= 1 && w.dim.a1 >= 1;
        if (kron_shape) {
            const auto [big, compact] = quiver::c_pair_kron(v, w);
            std::cout << rat_to_string(compact) << "\n";
            if (pair_kron) std::cout << "big=" << rat_to_string(big) << "\n";
            const sheaf::Pencil pw = sheaf::pencil_from_rep(w);
            if (sheaf::in_chart(pw)) {
                const auto [h0, h1] = sheaf::h0_tensor(sheaf::bundle_from_rep(v), pw);
                std::cout << "h0=" << h0 << "\n";
            }
        } else {
            require(!pair_kron, "--kron requires a (r,2r) x (d,d) pair");
            std::cout << rat_to_string(quiver::c_pair(v, w)) << "\n";
        }
    } else if (refl_cmd->parsed()) {
        const quiver::Rep v = doc::any_rep_from_json(doc::load_document(refl_in));
        write_output(doc::emit(doc::rep_to_json(quiver::reflect(v))), refl_out);
    } else if (unrefl_cmd->parsed()) {
        const quiver::Rep v = doc::any_rep_from_json(doc::load_document(unrefl_in));
        write_output(doc::emit(doc::rep_to_json(quiver::reflect_inverse(v))), unrefl_out);
    } else if (stable_cmd->parsed()) {
        require(stable_seed.has_value(), "stable: --seed is required (no wall-clock default)");
        const quiver::Rep v = doc::any_rep_from_json(doc::load_document(stable_in));
        const quiver::Weight sigma = parse_weight(stable_weight);
        const auto verdict = quiver::semistable_certificate(v, sigma, stable_trials,
                                                            stable_probes, *stable_seed,
                                                            stable_bound);
        switch (verdict.status) {
            case quiver::Status::Semistable: std::cout << "Semistable\n"; break;
            case quiver::Status::Stable: std::cout << "Stable\n"; break;
            case quiver::Status::Unstable: std::cout << "Unstable\n"; break;
            case quiver::Status::Unknown: std::cout << "Unknown\n"; break;
        }
        if (verdict.probe)
            std::cout << "witness: probe with nonzero pairing, dim ("
                      << verdict.probe->dim.a1 << ", " << verdict.probe->dim.a2 << ")\n";
        if (verdict.destabilizer)
            std::cout << "witness: destabilizing subrep of dim ("
                      << verdict.destabilizer->dim.a1 << ", "
                      << verdict.destabilizer->dim.a2 << ")\n";
    } else if (curve_cmd->parsed()) {
        const sheaf::Pencil w = sheaf::pencil_from_rep(
            doc::any_rep_from_json(doc::load_document(curve_in)));
        write_output(doc::emit(doc::poly_to_json(sheaf::support_curve(w))), curve_out);
    } else if (ddual_cmd->parsed()) {
        const sheaf::Pencil w = sheaf::pencil_from_rep(
            doc::any_rep_from_json(doc::load_document(ddual_in)));
        write_output(doc::emit(doc::pencil_to_json(sheaf::ddual(w))), ddual_out);
    } else if (strata_cmd->parsed()) {
        if (strata_census_n > 0) {
            require(strata_seed.has_value(),
                    "strata --census: --seed is required (no wall-clock default)");
            const auto report =
                lab::strata_census(strata_census_n, strata_samples, *strata_seed);
            write_output(doc::emit(doc::strata_report_to_json(report)), strata_out);
        } else {
            require(!strata_in.empty(), "strata: need a bundle document or --census");
            const sheaf::BundleRep v = sheaf::bundle_from_rep(
                doc::any_rep_from_json(doc::load_document(strata_in)));
            std::cout << sheaf::strata_index(v) << "\n";
        }
    } else if (coh_cmd->parsed()) {
        const sheaf::BundleRep v = sheaf::bundle_from_rep(
            doc::any_rep_from_json(doc::load_document(coh_in)));
        require(coh_twist_k.has_value() || !coh_tensor.empty(),
                "coh: need --twist or --tensor");
        if (coh_twist_k) {
            const auto p = sheaf::coh_twist(v, *coh_twist_k);
            std::cout << "h0=" << p.h0 << " h1=" << p.h1 << " h2=" << p.h2 << "\n";
        }
        if (!coh_tensor.empty()) {
            const sheaf::Pencil w = sheaf::pencil_from_rep(
                doc::any_rep_from_json(doc::load_document(coh_tensor)));
            const auto [h0, h1] = sheaf::h0_tensor(v, w);
            std::cout << "h0=" << h0 << " h1=" << h1 << "\n";
        }
    } else if (eps_cmd->parsed()) {
        const auto a = drezet::eps(parse_dyadic(eps_arg));
        std::cout << "slope=" << rat_to_string(a.slope) << " rank=" << a.rank.str()
                  << " delta=" << rat_to_string(a.disc) << "\n";
    } else if (delta_cmd->parsed()) {
        std::cout << rat_to_string(drezet::delta(parse_rational(delta_arg), delta_depth))
                  << "\n";
    } else if (height_cmd->parsed()) {
        std::cout << rat_to_string(drezet::height(h_r, h_c1, h_c2, height_depth)) << "\n";
    } else if (posdim_cmd->parsed()) {
        std::cout << (drezet::positive_dim(p_r, p_c1, p_c2, posdim_depth) ? "true" : "false")
                  << "\n";
    } else if (exp_cmd->parsed()) {
        std::string experiment;
        const doc::json jc = doc::load_document(exp_in);
        const lab::ExperimentConfig cfg = doc::config_from_json(jc, &experiment);
        if (experiment == "pairing") {
            const auto [matrix, report] = lab::pairing_matrix(cfg);
            write_output(exp_table ? lab::pairing_report_table(report)
                                   : doc::emit(doc::pairing_report_to_json(report)),
                         exp_out);
        } else if (experiment == "vanishing") {
            const auto report = lab::vanishing_oracle_experiment(cfg);
            write_output(exp_table ? lab::pairing_report_table(report)
                                   : doc::emit(doc::pairing_report_to_json(report)),
                         exp_out);
        } else if (experiment == "strata") {
            const auto report = lab::strata_census(cfg.n, cfg.samples_V, cfg.seed,
                                                   cfg.entry_bound);
            write_output(exp_table ? lab::strata_report_table(report)
                                   : doc::emit(doc::strata_report_to_json(report)),
                         exp_out);
        } else if (experiment == "coeffspan") {
            std::cout << lab::coeff_span_dim(cfg.d, cfg.samples_W, cfg.seed,
                                             cfg.entry_bound)
                      << "\n";
        } else {
            throw parse_error("unknown experiment '" + experiment + "'");
        }
    } else if (selftest_cmd->parsed()) {
        const int failures = selftest::run_acceptance(std::cout);
        return failures == 0 ? 0 : 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const dualcore::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const dualcore::contract_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const dualcore::internal_error& e) {
        std::cerr << "internal error (bug): " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error (bug): " << e.what() << "\n";
        return 3;
    }
}
