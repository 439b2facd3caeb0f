// Copyright 2026 The wqe Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * The `wqe` command-line front end. Kept in a header so the test suite can
 * drive it in-process with its own output streams.
 *
 * Exit codes: 0 ok, 2 validation, 3 dimension, 4 channel undefined,
 * 5 parse error, 1 anything else.
 */

#pragma once

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wqe/wqe.hpp"

namespace wqe::cli {

inline int exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Validation:
        return 2;
    case ErrorKind::Dimension:
        return 3;
    case ErrorKind::ChannelUndefined:
        return 4;
    case ErrorKind::Parse:
        return 5;
    case ErrorKind::Convergence:
        return 1;
    }
    return 1;
}

inline std::string kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::Validation:
        return "validation";
    case ErrorKind::Dimension:
        return "dimension";
    case ErrorKind::ChannelUndefined:
        return "channel";
    case ErrorKind::Parse:
        return "parse";
    case ErrorKind::Convergence:
        return "convergence";
    }
    return "error";
}

/// Accepts decimal literals and simple fractions such as "1/3".
inline double parse_real(const std::string &text) {
    const auto parse_plain = [&](std::string_view s) {
        double value = 0.0;
        const auto [ptr, ec] =
            std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec != std::errc{} || ptr != s.data() + s.size()) {
            fail(ErrorKind::Parse, "not a number: '" + text + "'");
        }
        return value;
    };
    const std::string_view s(text);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) {
        return parse_plain(s);
    }
    const double den = parse_plain(s.substr(slash + 1));
    if (den == 0.0) {
        fail(ErrorKind::Parse, "zero denominator in '" + text + "'");
    }
    return parse_plain(s.substr(0, slash)) / den;
}

/// "AxB" -> (A, B).
inline std::pair<std::size_t, std::size_t> parse_dims(const std::string &text) {
    const auto x = text.find('x');
    std::size_t a = 0;
    std::size_t b = 0;
    const auto ok = [](std::string_view s, std::size_t &v) {
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        return ec == std::errc{} && ptr == s.data() + s.size();
    };
    if (x == std::string::npos ||
        !ok(std::string_view(text).substr(0, x), a) ||
        !ok(std::string_view(text).substr(x + 1), b)) {
        fail(ErrorKind::Parse, "dims must look like 2x2, got '" + text + "'");
    }
    return {a, b};
}

namespace detail {

inline void emit(std::ostream &out, const std::string &path,
                 const std::string &text) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        fail(ErrorKind::Parse, "cannot write " + path);
    }
    file << text;
}

struct WeightFlags {
    std::string phi1 = "3/4";
    std::string phi2 = "1/4";
    std::string chi1 = "1/3";
    std::string chi2 = "2/3";

    void attach(CLI::App &cmd) {
        cmd.add_option("--phi1", phi1, "phi_A = diag(phi1, phi2)")
            ->capture_default_str();
        cmd.add_option("--phi2", phi2)->capture_default_str();
        cmd.add_option("--chi1", chi1, "phi_B = diag(chi1, chi2)")
            ->capture_default_str();
        cmd.add_option("--chi2", chi2)->capture_default_str();
    }

    [[nodiscard]] QutritWeights values() const {
        return {parse_real(phi1), parse_real(phi2), parse_real(chi1),
                parse_real(chi2)};
    }
};

} // namespace detail

/**
 * Runs one command line (args[0] is the program name). Never throws.
 */
inline int run(const std::vector<std::string> &args, std::ostream &out,
               std::ostream &err) {
    CLI::App app{"Weighted quantum entropy and weighted subadditivity tools",
                 "wqe"};
    app.require_subcommand(1);

    std::string tol_text = "1e-10";
    std::string out_path;

    // entropy
    std::string state_file;
    std::string weight_file;
    auto *entropy = app.add_subcommand("entropy", "S_phi(rho) = -tr(phi rho ln rho) in nats");
    entropy->add_option("state", state_file, "density matrix file")->required();
    entropy->add_option("weight", weight_file, "weight matrix file")->required();
    entropy->add_option("--tol", tol_text, "validation tolerance");

    // check
    std::string weight_a_file;
    std::string weight_b_file;
    std::string dims_text = "2x2";
    auto *check = app.add_subcommand("check", "weighted subadditivity report (JSON)");
    check->add_option("state", state_file)->required();
    check->add_option("weight_a", weight_a_file)->required();
    check->add_option("weight_b", weight_b_file)->required();
    check->add_option("--dims", dims_text, "subsystem dims AxB")->capture_default_str();
    check->add_option("--tol", tol_text, "entropy gap tolerance")->capture_default_str();
    check->add_option("--out", out_path);

    // qutrit
    std::vector<std::string> qutrit_args;
    auto *qutrit = app.add_subcommand(
        "qutrit", "closed-form mutual information for a diagonal qutrit");
    qutrit->add_option("values", qutrit_args, "p1 p2 phi1 phi2 chi1 chi2")
        ->required()
        ->expected(6);

    // sweep
    auto *sweep = app.add_subcommand("sweep", "grids of I for plotting (CSV)");
    sweep->require_subcommand(1);
    std::size_t grid_n = 97;
    detail::WeightFlags weight_flags;
    auto *sweep_prob = sweep->add_subcommand("prob", "I(p1, p2) at fixed weights");
    sweep_prob->add_option("--n", grid_n, "cells per axis")->capture_default_str();
    weight_flags.attach(*sweep_prob);
    sweep_prob->add_option("--out", out_path);

    std::string region_text = "a";
    std::string p1_text = "1/4";
    std::string p2_text = "1/8";
    auto *sweep_weight = sweep->add_subcommand(
        "weight", "I(phi1, chi1) with phi2 = 1 - phi1, chi2 = 1 - chi1");
    sweep_weight->add_option("--region", region_text, "a or b")
        ->check(CLI::IsMember({"a", "b"}))
        ->capture_default_str();
    sweep_weight->add_option("--p1", p1_text)->capture_default_str();
    sweep_weight->add_option("--p2", p2_text)->capture_default_str();
    sweep_weight->add_option("--n", grid_n, "points per axis")->capture_default_str();
    sweep_weight->add_option("--out", out_path);

    // channel
    std::string projector_file;
    auto *channel = app.add_subcommand(
        "channel", "apply rho -> P rho P / tr(P rho P) and re-check");
    channel->add_option("state", state_file)->required();
    channel->add_option("projector", projector_file)->required();
    channel->add_option("--dims", dims_text)->capture_default_str();
    channel->add_option("--weight-a", weight_a_file, "weight file (overrides --phi1/--phi2)");
    channel->add_option("--weight-b", weight_b_file, "weight file (overrides --chi1/--chi2)");
    weight_flags.attach(*channel);
    channel->add_option("--tol", tol_text, "entropy gap tolerance")->capture_default_str();
    channel->add_option("--out", out_path);

    // audit
    std::size_t audit_n = 1000;
    std::uint64_t seed = 0;
    std::string regime_text = "diagonal-condition-satisfying";
    auto *audit = app.add_subcommand("audit", "seeded random subadditivity audit (JSON)");
    audit->add_option("--n", audit_n)->capture_default_str();
    audit->add_option("--dims", dims_text)->capture_default_str();
    audit->add_option("--seed", seed)->capture_default_str();
    audit->add_option("--regime", regime_text)
        ->check(CLI::IsMember({"diagonal-condition-satisfying",
                               "diagonal-unconstrained",
                               "general-unconstrained"}))
        ->capture_default_str();
    audit->add_option("--tol", tol_text)->capture_default_str();
    audit->add_option("--out", out_path);

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError &e) {
        err << "error: parse: " << e.what() << '\n';
        return 5;
    }

    try {
        const double tol = parse_real(tol_text);

        if (*entropy) {
            const DensityMatrix rho(io::read_matrix_file(state_file), tol);
            const WeightMatrix phi(io::read_matrix_file(weight_file),
                                   WeightMode::Strict, tol);
            out << io::format_number(weighted_entropy(phi, rho), 12) << '\n';
        } else if (*check) {
            const auto [da, db] = parse_dims(dims_text);
            const Matrix state = io::read_matrix_file(state_file);
            const BipartiteState s(DensityMatrix(state), da, db);
            const WeightMatrix wa(io::read_matrix_file(weight_a_file));
            const WeightMatrix wb(io::read_matrix_file(weight_b_file));
            const auto report = check_subadditivity(wa, wb, s, tol);
            detail::emit(out, out_path, io::report_to_json(report).dump(2) + "\n");
        } else if (*qutrit) {
            std::vector<double> v;
            for (const auto &a : qutrit_args) {
                v.push_back(parse_real(a));
            }
            const QutritWeights w{v[2], v[3], v[4], v[5]};
            const double closed = qutrit_mutual_information_closed_form(v[0], v[1], w);
            const auto cond = qutrit_weight_condition(w);
            const double gap = qutrit_condition_gap(v[0], v[1], w);

            const WeightMatrix wa = WeightMatrix::diagonal({w.phi1, w.phi2}, WeightMode::Relaxed);
            const WeightMatrix wb = WeightMatrix::diagonal({w.chi1, w.chi2}, WeightMode::Relaxed);
            if (!wa.positive_definite() || !wb.positive_definite()) {
                err << "warning: weights are only positive semidefinite\n";
            }
            const double general = weighted_mutual_information(
                wa, wb, embed_qutrit(QutritDiagonal::from_pair(v[0], v[1])));

            out << "I: " << io::format_number(closed, 12) << '\n'
                << "I_general: " << io::format_number(general, 12) << '\n'
                << "weight_condition: " << io::format_number(cond.value, 12)
                << (cond.holds ? " (holds)" : " (fails)") << '\n'
                << "condition_gap: " << io::format_number(gap, 12) << '\n';
            if (std::abs(closed - general) > 1e-9) {
                err << "warning: closed form and general path differ by "
                    << io::format_number(closed - general, 3) << '\n';
            }
        } else if (*sweep_prob) {
            const auto w = weight_flags.values();
            const auto grid = sweep_probabilities(grid_n, w);
            std::ostringstream csv;
            write_csv(csv, grid,
                      {"wqe sweep prob --n " + std::to_string(grid_n) + " --phi1 " +
                           weight_flags.phi1 + " --phi2 " + weight_flags.phi2 + " --chi1 " +
                           weight_flags.chi1 + " --chi2 " + weight_flags.chi2,
                       "cells at (k+1/2)/n; cells with p1+p2 >= 1 are masked and omitted"});
            detail::emit(out, out_path, csv.str());
        } else if (*sweep_weight) {
            const auto region = region_text == "a" ? WeightRegion::A : WeightRegion::B;
            const auto grid = sweep_weights(region, parse_real(p1_text),
                                            parse_real(p2_text), grid_n);
            std::ostringstream csv;
            write_csv(csv, grid,
                      {"wqe sweep weight --region " + region_text + " --p1 " + p1_text +
                           " --p2 " + p2_text + " --n " + std::to_string(grid_n),
                       "phi2 = 1 - phi1, chi2 = 1 - chi1; region bounds inclusive"});
            detail::emit(out, out_path, csv.str());
        } else if (*channel) {
            const auto [da, db] = parse_dims(dims_text);
            const BipartiteState s(DensityMatrix(io::read_matrix_file(state_file)), da, db);
            const Projector p(io::read_matrix_file(projector_file));
            const auto w = weight_flags.values();
            const WeightMatrix wa = weight_a_file.empty()
                                        ? WeightMatrix::diagonal({w.phi1, w.phi2})
                                        : WeightMatrix(io::read_matrix_file(weight_a_file));
            const WeightMatrix wb = weight_b_file.empty()
                                        ? WeightMatrix::diagonal({w.chi1, w.chi2})
                                        : WeightMatrix(io::read_matrix_file(weight_b_file));
            const auto result = channel_then_check(p, wa, wb, s, tol);
            const io::json doc = {{"transformed", io::matrix_to_json(result.transformed.matrix())},
                                  {"report", io::report_to_json(result.report)}};
            detail::emit(out, out_path, doc.dump(2) + "\n");
        } else if (*audit) {
            const auto [da, db] = parse_dims(dims_text);
            const auto summary = audit_random(audit_n, da, db, seed,
                                              *parse_regime(regime_text), tol);
            detail::emit(out, out_path, io::audit_to_json(summary).dump(2) + "\n");
        }
    } catch (const Error &e) {
        err << "error: " << kind_name(e.kind()) << ": " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception &e) {
        err << "error: internal: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace wqe::cli
