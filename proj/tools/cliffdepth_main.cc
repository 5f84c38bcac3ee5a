// Copyright 2026 The cliffdepth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>

#include "CLI11.hpp"
#include "json.hpp"

#include "cliffdepth/clifford_synth.h"
#include "cliffdepth/cnot_synth.h"
#include "cliffdepth/cz_synth.h"
#include "cliffdepth/depth_bounds.h"
#include "cliffdepth/random.h"
#include "cliffdepth/tableau.h"
#include "cliffdepth/text_io.h"
#include "cliffdepth/verify.h"

using namespace cliffdepth;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OutputOptions {
    std::string out;
    std::string format = "circ";
    bool json = false;
};

struct Summary {
    std::string family;
    std::size_t n = 0;
    std::size_t depth = 0;
    std::size_t bound = 0;
    std::string bound_kind;
    bool verified = false;
};

/// Closed form inside its range, recursion table value elsewhere.
std::pair<std::size_t, std::string> applicable_bound(Family f, std::size_t n) {
    auto formula = closed_form(f);
    if (n >= formula.n_lo && n <= formula.n_hi) {
        return {static_cast<std::size_t>(formula.evaluate(n)), "closed-form"};
    }
    return {recursion_bound(f, n), "recursion"};
}

void write_text(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw UsageError("cannot open output file: " + path);
    }
    f << text;
}

void emit_circuit(const OutputOptions &opt, const Circuit &c, const std::optional<Permutation> &perm) {
    std::ostringstream text;
    if (opt.format == "qasm2") {
        if (perm && !perm->is_identity()) {
            text << "// output permutation:";
            for (auto v : perm->map()) {
                text << ' ' << v;
            }
            text << '\n';
        }
        write_qasm2(text, c);
    } else {
        write_circuit(text, c, perm);
    }
    write_text(opt.out, text.str());
}

int report(const OutputOptions &opt, const Summary &s) {
    bool ok = s.verified && s.depth <= s.bound;
    std::ostream &dest = opt.out.empty() || opt.out == "-" ? std::cerr : std::cout;
    if (opt.json) {
        json j = {{"family", s.family}, {"n", s.n},        {"depth", s.depth},
                  {"bound", s.bound},   {"bound_kind", s.bound_kind}, {"verified", s.verified}};
        dest << j.dump() << '\n';
    } else {
        dest << s.family << ": n=" << s.n << " depth=" << s.depth << " bound=" << s.bound << " (" << s.bound_kind
             << ") verified=" << (s.verified ? "yes" : "no") << '\n';
    }
    if (s.depth > s.bound) {
        std::cerr << "error: measured depth exceeds the bound\n";
    }
    if (!s.verified) {
        std::cerr << "error: synthesized circuit failed verification\n";
    }
    return ok ? kExitOk : kExitFailed;
}

void add_output_options(CLI::App *cmd, OutputOptions &opt) {
    cmd->add_option("--out,-o", opt.out, "Output file for the circuit (default: stdout)");
    cmd->add_option("--format", opt.format, "Circuit format")->check(CLI::IsMember({"circ", "qasm2"}));
    cmd->add_flag("--json", opt.json, "Print the summary as JSON");
}

int run_synth_cz(const std::string &input, const std::string &strategy, const OutputOptions &opt) {
    auto spec = CzSpec::from_matrix(read_matrix_file(input));
    CzStrategy s = CzStrategy::Auto;
    if (strategy == "coloring") {
        s = CzStrategy::ColoringBase;
    } else if (strategy == "one-step") {
        s = CzStrategy::OneStep;
    } else if (strategy == "two-step") {
        s = CzStrategy::TwoStep;
    }
    auto c = synth_cz(spec, s);
    emit_circuit(opt, c, std::nullopt);
    Summary sum{"cz", spec.n(), two_qubit_depth(c), 0, "", false};
    if (spec.n() <= kMaxPhaseOracleQubits) {
        sum.verified = phase_oracle(c) == expected_cz_phases(spec);
    } else {
        sum.verified = tableau_of_circuit(c) == tableau_of_circuit(spec.literal_circuit());
    }
    if (spec.n() < 2) {
        sum.bound_kind = "trivial";
        return report(opt, sum);
    }
    std::tie(sum.bound, sum.bound_kind) = applicable_bound(Family::Cz, spec.n());
    if (s != CzStrategy::Auto) {
        sum.bound = s == CzStrategy::ColoringBase ? cz_coloring_depth(spec.n())
                    : s == CzStrategy::OneStep    ? cz_one_step_depth(spec.n())
                                                  : cz_two_step_depth(spec.n());
        sum.bound_kind = "forced-strategy";
    }
    return report(opt, sum);
}

int run_synth_cnot(const std::string &input, const std::string &mode, bool cnot_only, const OutputOptions &opt) {
    auto r = read_matrix_file(input);
    if (!r.square()) {
        throw UsageError("linear map must be a square matrix");
    }
    bool exact = mode == "exact";
    auto result = synth_linear(r, exact ? SynthMode::Exact : SynthMode::UpToReordering);
    Circuit c = cnot_only ? remove_hadamards(result.circuit) : result.circuit;
    std::optional<Permutation> perm;
    if (!exact) {
        perm = result.output_perm;
    }
    emit_circuit(opt, c, perm);
    std::size_t n = r.rows();
    Summary sum{exact ? "cnot" : "cnot-perm", n, two_qubit_depth(c), 0, "", false};
    auto action = linear_action(cnot_only ? c : remove_hadamards(c));
    sum.verified = result.output_perm.apply_to_rows(action) == r;
    if (n < 2) {
        sum.bound_kind = "trivial";
        return report(opt, sum);
    }
    std::tie(sum.bound, sum.bound_kind) = applicable_bound(exact ? Family::Cnot : Family::CnotReordering, n);
    return report(opt, sum);
}

int run_synth_clifford(const std::string &input, const OutputOptions &opt) {
    auto t = read_tableau_file(input);
    auto c = synth_clifford(t);
    emit_circuit(opt, c, std::nullopt);
    Summary sum{"clifford", t.n(), two_qubit_depth(c), 0, "", false};
    sum.verified = tableau_of_circuit(c) == t;
    if (t.n() < 2) {
        sum.bound_kind = "trivial";
        return report(opt, sum);
    }
    std::tie(sum.bound, sum.bound_kind) = applicable_bound(Family::Clifford, t.n());
    return report(opt, sum);
}

int run_verify(const std::string &circuit_path, const std::string &against, const std::string &kind,
               std::string oracle, bool as_json) {
    auto file = read_circuit_file(circuit_path);
    const Circuit &c = file.circuit;
    std::string detail;
    bool ok = false;
    if (kind == "cz") {
        auto spec = CzSpec::from_matrix(read_matrix_file(against));
        if (oracle == "auto") {
            oracle = spec.n() <= kMaxPhaseOracleQubits ? "phase" : "tableau";
        }
        if (oracle == "linear") {
            throw UsageError("the linear oracle does not apply to CZ specifications");
        }
        if (file.perm && !file.perm->is_identity()) {
            throw UsageError("CZ circuits cannot carry an output permutation");
        }
        if (spec.n() != c.qubit_count()) {
            detail = "qubit count mismatch";
        } else if (oracle == "phase") {
            try {
                ok = phase_oracle(c) == expected_cz_phases(spec);
            } catch (const OracleError &e) {
                detail = e.what();
            }
        } else {
            ok = tableau_of_circuit(c) == tableau_of_circuit(spec.literal_circuit());
        }
    } else if (kind == "linear") {
        auto r = read_matrix_file(against);
        if (oracle == "auto") {
            oracle = "linear";
        }
        if (oracle == "phase") {
            throw UsageError("the phase oracle does not apply to linear maps");
        }
        Permutation perm = file.perm.value_or(Permutation::identity(c.qubit_count()));
        if (r.rows() != c.qubit_count() || !r.square() || perm.size() != c.qubit_count()) {
            detail = "qubit count mismatch";
        } else if (oracle == "linear") {
            try {
                ok = perm.apply_to_rows(linear_action(remove_hadamards(c))) == r;
            } catch (const std::invalid_argument &e) {
                detail = e.what();
            }
        } else {
            auto expected = naive_cnot_circuit(perm.inverse().apply_to_rows(r));
            ok = tableau_of_circuit(c) == tableau_of_circuit(expected);
        }
    } else {
        auto t = read_tableau_file(against);
        if (oracle == "auto") {
            oracle = "tableau";
        }
        if (oracle != "tableau") {
            throw UsageError("tableau targets need the tableau oracle");
        }
        if (file.perm && !file.perm->is_identity()) {
            throw UsageError("tableau targets cannot carry an output permutation");
        }
        if (t.n() != c.qubit_count()) {
            detail = "qubit count mismatch";
        } else {
            ok = tableau_of_circuit(c) == t;
        }
    }
    if (as_json) {
        json j = {{"kind", kind},       {"oracle", oracle},
                  {"n", c.qubit_count()}, {"depth", two_qubit_depth(c)},
                  {"verified", ok}};
        if (!detail.empty()) {
            j["detail"] = detail;
        }
        std::cout << j.dump() << '\n';
    } else {
        std::cout << (ok ? "equivalent" : "NOT equivalent") << " (oracle " << oracle << ", n=" << c.qubit_count()
                  << ", depth " << two_qubit_depth(c) << ")";
        if (!detail.empty()) {
            std::cout << ": " << detail;
        }
        std::cout << '\n';
    }
    return ok ? kExitOk : kExitFailed;
}

int run_bounds(const std::string &family, std::size_t from, std::size_t to, const std::string &csv, bool validate,
               bool as_json) {
    if (validate) {
        json all = json::array();
        bool ok = true;
        for (auto f : {Family::Cz, Family::CzBasic, Family::Cnot, Family::Clifford}) {
            auto formula = closed_form(f);
            auto rep = validate_closed_form(f, formula);
            ok = ok && rep.ok();
            if (as_json) {
                all.push_back({{"family", family_name(f)},
                               {"n_lo", rep.n_lo},
                               {"n_hi", rep.n_hi},
                               {"checked", rep.checked},
                               {"violations", rep.violations.size()},
                               {"min_slack", rep.min_slack},
                               {"max_slack", rep.max_slack},
                               {"satisfied", rep.ok()}});
            } else {
                std::cout << family_name(f) << " [" << rep.n_lo << ".." << rep.n_hi << "]: "
                          << (rep.ok() ? "satisfied" : "VIOLATED") << " (checked " << rep.checked
                          << ", violations " << rep.violations.size() << ", slack " << rep.min_slack << ".."
                          << rep.max_slack << ")\n";
            }
        }
        if (as_json) {
            std::cout << all.dump() << '\n';
        }
        return ok ? kExitOk : kExitFailed;
    }
    auto f = parse_family(family);
    if (!f) {
        throw UsageError("unknown family: " + family);
    }
    if (from < 2 || to < from || to > kMaxTableN) {
        throw UsageError("need 2 <= from <= to <= " + std::to_string(kMaxTableN));
    }
    std::ostringstream text;
    emit_comparison_csv(*f, from, to, text);
    write_text(csv, text.str());
    return kExitOk;
}

int run_gen(const std::string &kind, std::size_t n, std::uint64_t seed, const std::string &out) {
    if (n == 0) {
        throw UsageError("--n must be positive");
    }
    Rng rng(seed);
    std::ostringstream text;
    if (kind == "cz") {
        write_matrix(text, random_cz_spec(n, rng).upper());
    } else if (kind == "linear") {
        write_matrix(text, random_invertible(n, rng));
    } else {
        write_tableau(text, random_tableau(n, rng));
    }
    write_text(out, text.str());
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Low-depth synthesis of CZ, CNOT and Clifford circuits"};
    app.require_subcommand(1);

    OutputOptions cz_opt;
    std::string cz_input;
    std::string cz_strategy = "auto";
    auto *cz = app.add_subcommand("synth-cz", "Synthesize a CZ circuit from an adjacency matrix");
    cz->add_option("--input,-i", cz_input, "Matrix file (upper triangular or symmetric)")->required();
    cz->add_option("--strategy", cz_strategy, "Top-level strategy")
        ->check(CLI::IsMember({"auto", "coloring", "one-step", "two-step"}));
    add_output_options(cz, cz_opt);

    OutputOptions cnot_opt;
    std::string cnot_input;
    std::string cnot_mode = "exact";
    bool cnot_only = false;
    auto *cnot = app.add_subcommand("synth-cnot", "Synthesize a CNOT circuit from an invertible matrix");
    cnot->add_option("--input,-i", cnot_input, "Matrix file")->required();
    cnot->add_option("--mode", cnot_mode, "exact, or perm for up to qubit reordering")
        ->check(CLI::IsMember({"exact", "perm"}));
    cnot->add_flag("--cnot-only", cnot_only, "Rewrite Hadamard-conjugated gates as plain CNOTs");
    add_output_options(cnot, cnot_opt);

    OutputOptions cl_opt;
    std::string cl_input;
    auto *cl = app.add_subcommand("synth-clifford", "Synthesize a Clifford circuit from a tableau");
    cl->add_option("--input,-i", cl_input, "Tableau file")->required();
    add_output_options(cl, cl_opt);

    std::string v_circuit;
    std::string v_against;
    std::string v_kind;
    std::string v_oracle = "auto";
    bool v_json = false;
    auto *ver = app.add_subcommand("verify", "Check a circuit against a target");
    ver->add_option("--circuit,-c", v_circuit, "Circuit file")->required();
    ver->add_option("--against,-a", v_against, "Target matrix or tableau file")->required();
    ver->add_option("--kind", v_kind, "Target kind")->required()->check(CLI::IsMember({"cz", "linear", "tableau"}));
    ver->add_option("--oracle", v_oracle, "Equivalence oracle")
        ->check(CLI::IsMember({"auto", "tableau", "phase", "linear"}));
    ver->add_flag("--json", v_json, "Print the result as JSON");

    std::string b_family = "cnot";
    std::size_t b_from = 2;
    std::size_t b_to = 100;
    std::string b_csv;
    bool b_validate = false;
    bool b_json = false;
    auto *bounds = app.add_subcommand("bounds", "Tabulate or validate depth bounds");
    bounds->add_option("--family", b_family, "cz, cz-basic, cnot, cnot-perm or clifford");
    bounds->add_option("--from", b_from, "First n");
    bounds->add_option("--to", b_to, "Last n");
    bounds->add_option("--csv", b_csv, "Write the comparison table to this file (default: stdout)");
    bounds->add_flag("--validate", b_validate, "Check every closed form over its full range");
    bounds->add_flag("--json", b_json, "Print the validation report as JSON");

    std::string g_kind;
    std::size_t g_n = 0;
    std::uint64_t g_seed = 0;
    std::string g_out;
    auto *gen = app.add_subcommand("gen", "Generate a seeded random instance");
    gen->add_option("--kind", g_kind, "Instance kind")->required()->check(CLI::IsMember({"cz", "linear", "tableau"}));
    gen->add_option("--n", g_n, "Qubit count")->required();
    gen->add_option("--seed", g_seed, "Seed for the mt19937_64 generator")->required();
    gen->add_option("--out,-o", g_out, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        std::cerr << app.help();
        return kExitUsage;
    }

    try {
        if (*cz) {
            return run_synth_cz(cz_input, cz_strategy, cz_opt);
        }
        if (*cnot) {
            return run_synth_cnot(cnot_input, cnot_mode, cnot_only, cnot_opt);
        }
        if (*cl) {
            return run_synth_clifford(cl_input, cl_opt);
        }
        if (*ver) {
            return run_verify(v_circuit, v_against, v_kind, v_oracle, v_json);
        }
        if (*bounds) {
            return run_bounds(b_family, b_from, b_to, b_csv, b_validate, b_json);
        }
        return run_gen(g_kind, g_n, g_seed, g_out);
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
