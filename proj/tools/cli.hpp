// Copyright 2026 The fermap Authors.

// Licensed under the Apache License, Version 2.0 (the License);
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

// http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an AS IS BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

// Command-line front end. run() takes the arguments after the program name and writes to the
// given streams, so tests can drive it in-process.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fermap/fermap.hpp"
#include "fermap/oracle.hpp"

namespace fermap::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInvalid = 2, kSymmetry = 3, kUnsupported = 4 };

/// Relative output paths resolve against this directory when it is set.
inline constexpr const char *kOutputDirVariable = "FERMAP_OUTPUT_DIR";

using json = nlohmann::ordered_json;

namespace detail {

inline std::string read_text(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::filesystem::path output_path(const std::string &path) {
    std::filesystem::path p(path);
    if (p.is_relative())
        if (const char *dir = std::getenv(kOutputDirVariable); dir && *dir) p = std::filesystem::path(dir) / p;
    return p;
}

inline void write_text(const std::string &path, const std::string &body) {
    auto p = output_path(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw ValidationError("cannot write '" + p.string() + "'");
    out << body;
}

inline std::string table_real(double v) { return text::format_real(v, 5); }

inline json set_json(const ModeSet &s) { return json(s); }

inline json operator_json(const QubitOperator &op) {
    json terms = json::array();
    for (const auto &[p, c] : op.terms())
        terms.push_back({{"pauli", p.str()}, {"re", c.real()}, {"im", c.imag()}});
    return terms;
}

inline json count_json(const CountReport &r) {
    return {{"mapping", r.label}, {"x", r.n_x},       {"y", r.n_y},
            {"z", r.n_z},         {"total_pauli", r.total_pauli()}, {"cnot", r.cnot},
            {"single_qubit", r.single_qubit}, {"total_gates", r.total_gates()}};
}

inline std::string count_table(const std::vector<CountReport> &rows) {
    std::size_t width = 7;
    for (const auto &r : rows) width = std::max(width, r.label.size());
    std::ostringstream os;
    os << std::left << std::setw(static_cast<int>(width)) << "mapping" << std::right;
    for (const char *h : {"X", "Y", "Z", "Pauli", "CNOT", "SQ", "gates"}) os << std::setw(7) << h;
    os << '\n';
    for (const auto &r : rows) {
        os << std::left << std::setw(static_cast<int>(width)) << r.label << std::right;
        for (auto v : {r.n_x, r.n_y, r.n_z, r.total_pauli(), r.cnot, r.single_qubit, r.total_gates()})
            os << std::setw(7) << v;
        os << '\n';
    }
    return os.str();
}

inline std::vector<std::string> split_list(const std::string &s) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

/// "1:-1,3:+1" with an optional leading "q=".
inline std::vector<std::pair<std::uint32_t, int>> parse_taper_spec(std::string s) {
    if (s.starts_with("q=")) s.erase(0, 2);
    std::vector<std::pair<std::uint32_t, int>> out;
    for (const auto &item : split_list(s)) {
        auto colon = item.find(':');
        if (colon == std::string::npos) throw ParseError(0, "taper entry '" + item + "' must be <qubit>:<+1|-1>");
        auto q = text::parse_index(std::string_view(item).substr(0, colon));
        auto v = text::parse_double(std::string_view(item).substr(colon + 1));
        if (!q || !v || (*v != 1.0 && *v != -1.0))
            throw ParseError(0, "taper entry '" + item + "' must be <qubit>:<+1|-1>");
        out.emplace_back(*q, static_cast<int>(*v));
    }
    return out;
}

/// Mapping plus either a fermion file or a qubit-operator file.
struct Source {
    std::string input;
    std::string qubit_input;
    std::string mapping = "jw";
    std::string permute;

    void attach(CLI::App *cmd, bool allow_qubit) {
        auto *in = cmd->add_option("-i,--input", input, "fermion operator file");
        cmd->add_option("-m,--mapping", mapping, "mapping descriptor")->capture_default_str();
        cmd->add_option("--permute", permute, "mode permutation applied before mapping")
            ->check(CLI::IsMember({"spin-block"}));
        if (allow_qubit) {
            auto *q = cmd->add_option("-q,--qubit-input", qubit_input, "qubit operator file (skips mapping)");
            in->excludes(q);
        }
    }

    bool fermionic() const { return qubit_input.empty(); }

    FermionOperator fermion() const {
        if (input.empty()) throw ValidationError("an --input fermion file is required");
        auto h = parse_fermion_file(read_text(input));
        if (permute == "spin-block") h = permute_modes(h, spin_block_permutation(h.n_modes()));
        return h;
    }

    /// The qubit operator and the qubit count it lives on.
    std::pair<QubitOperator, std::uint32_t> qubit() const {
        if (!fermionic()) {
            auto op = parse_qubit_operator(read_text(qubit_input));
            return {op, op.span_qubits()};
        }
        auto h = fermion();
        auto sets = derive_sets(parse_descriptor(mapping).family(h.n_modes()));
        return {map_hamiltonian(h, sets), h.n_modes()};
    }
};

inline std::string sets_table(const MappingSets &s) {
    std::ostringstream os;
    for (std::uint32_t j = 0; j < s.n_modes; ++j)
        os << j << "  S=" << format_set(s.S(j)) << "  F=" << format_set(s.F(j)) << "  P=" << format_set(s.P(j))
           << "  U=" << format_set(s.U(j)) << '\n';
    return os.str();
}

/// Assignments implied by electron counts: total parity from the total count, and parity of
/// each spin-blocked half from the per-spin counts.
inline std::vector<std::pair<std::uint32_t, int>> electron_assignment(const MappingSets &sets,
                                                                      std::optional<std::uint32_t> total,
                                                                      std::optional<std::uint32_t> up,
                                                                      std::optional<std::uint32_t> down,
                                                                      std::vector<std::string> &notes) {
    const auto m = sets.n_modes;
    if (up && down) {
        if (total && *total != *up + *down) throw ValidationError("--electrons disagrees with --electrons-up + --electrons-down");
        total = *up + *down;
    }
    std::vector<std::pair<std::uint32_t, int>> out;
    auto push = [&](std::uint32_t q, std::uint32_t n, const std::string &what) {
        for (const auto &[fq, fv] : out)
            if (fq == q) return;
        out.emplace_back(q, parity_eigenvalue(n));
        notes.push_back("q" + std::to_string(q) + "=" + (parity_eigenvalue(n) > 0 ? "+1" : "-1") + " (" + what + ", " +
                        std::to_string(n) + (n == 1 ? " electron)" : " electrons)"));
    };
    if (total)
        if (auto q = find_total_parity_qubit(sets)) push(*q, *total, "total parity");
    if ((up || down) && m % 2 != 0) throw ValidationError("per-spin electron counts need an even mode count");
    for (const auto &seg : find_segment_parity_qubits(sets)) {
        if (total && seg.first == 0 && seg.qubit == m - 1) push(seg.qubit, *total, "total parity");
        if (up && seg.first == 0 && seg.qubit == m / 2 - 1) push(seg.qubit, *up, "spin-up parity");
        if (down && seg.first == m / 2 && seg.qubit == m - 1) push(seg.qubit, *down, "spin-down parity");
    }
    return out;
}

} // namespace detail

/// Runs one subcommand. `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    using namespace detail;
    CLI::App app{"Fermion-to-qubit mappings, Trotter circuits and resource counts", "fermap"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable output");

    // map
    Source map_src;
    std::string map_output;
    std::optional<int> map_decimals;
    auto *map = app.add_subcommand("map", "map a fermion operator to a qubit operator");
    map_src.attach(map, false);
    map->add_option("-o,--output", map_output, "write the operator here instead of stdout");
    map->add_option("--decimals", map_decimals, "round coefficients in the text output")->check(CLI::Range(0, 17));
    map->add_flag("--json", as_json);

    // sets / tree / verify
    std::string set_mapping;
    std::uint32_t set_modes = 0;
    bool dot = false;
    auto *sets_cmd = app.add_subcommand("sets", "print S, F, P, U for a mapping");
    auto *tree_cmd = app.add_subcommand("tree", "print the mapping tree");
    auto *verify_cmd = app.add_subcommand("verify", "check a mapping against the dense oracle");
    for (auto *c : {sets_cmd, tree_cmd, verify_cmd}) {
        c->add_option("-m,--mapping", set_mapping, "mapping descriptor")->required();
        c->add_option("-M,--modes", set_modes, "number of modes")->required()->check(CLI::PositiveNumber);
        c->add_flag("--json", as_json);
    }
    tree_cmd->add_flag("--dot", dot, "Graphviz output");

    // count
    Source count_src;
    auto *count = app.add_subcommand("count", "Pauli and gate counts for one Trotter step");
    count_src.attach(count, true);
    count->add_flag("--json", as_json);

    // compare
    std::string cmp_input, cmp_mappings = "jw,bk";
    auto *cmp = app.add_subcommand("compare", "counts for one Hamiltonian under several mappings");
    cmp->add_option("-i,--input", cmp_input, "fermion operator file")->required();
    cmp->add_option("--mappings", cmp_mappings, "comma-separated descriptors")->capture_default_str();
    cmp->add_flag("--json", as_json);

    // circuit
    Source circ_src;
    double circ_t = 1.0;
    std::uint32_t circ_steps = 1;
    std::string qasm_path;
    auto *circ = app.add_subcommand("circuit", "first-order Trotter circuit");
    circ_src.attach(circ, true);
    circ->add_option("-t,--t", circ_t, "evolution time")->capture_default_str();
    circ->add_option("--steps", circ_steps, "Trotter steps")->capture_default_str()->check(CLI::PositiveNumber);
    circ->add_option("--qasm", qasm_path, "write OpenQASM 2.0 here ('-' for stdout)");
    circ->add_flag("--json", as_json);

    // reduce
    Source red_src;
    std::string taper_spec, red_output;
    bool compact = false;
    std::optional<std::uint32_t> electrons, electrons_up, electrons_down;
    std::optional<int> red_decimals;
    auto *red = app.add_subcommand("reduce", "taper symmetry qubits");
    red_src.attach(red, true);
    red->add_option("--taper", taper_spec, "qubit eigenvalues, e.g. q=1:-1,3:+1");
    red->add_option("--electrons", electrons, "total electron count (fixes the total-parity qubit)");
    red->add_option("--electrons-up", electrons_up, "electrons in the first half of the modes");
    red->add_option("--electrons-down", electrons_down, "electrons in the second half of the modes");
    red->add_flag("--compact", compact, "renumber remaining qubits without gaps");
    red->add_option("-o,--output", red_output, "write the operator here instead of stdout");
    red->add_option("--decimals", red_decimals, "round coefficients in the text output")->check(CLI::Range(0, 17));
    red->add_flag("--json", as_json);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    }

    auto emit = [&](const std::string &body, const std::string &path) {
        if (path.empty() || path == "-") out << body;
        else write_text(path, body);
    };

    try {
        if (map->parsed()) {
            auto h = map_src.fermion();
            auto desc = parse_descriptor(map_src.mapping);
            auto op = map_hamiltonian(h, derive_sets(desc.family(h.n_modes())));
            if (as_json) {
                json j{{"mapping", desc.text}, {"n_qubits", h.n_modes()}, {"terms", operator_json(op)}};
                emit(j.dump(2) + "\n", map_output);
            } else {
                emit(format_qubit_operator(op, map_decimals), map_output);
            }
        } else if (sets_cmd->parsed() || tree_cmd->parsed()) {
            auto desc = parse_descriptor(set_mapping);
            auto fam = desc.family(set_modes);
            auto s = derive_sets(fam);
            if (sets_cmd->parsed()) {
                if (as_json) {
                    json rows = json::array();
                    for (std::uint32_t j = 0; j < s.n_modes; ++j)
                        rows.push_back({{"j", j}, {"S", set_json(s.S(j))}, {"F", set_json(s.F(j))},
                                        {"P", set_json(s.P(j))}, {"U", set_json(s.U(j))}});
                    out << json{{"mapping", desc.text}, {"n_modes", set_modes}, {"sets", rows}}.dump(2) << '\n';
                } else {
                    out << sets_table(s);
                }
            } else {
                auto tree = build_tree(s);
                if (as_json) {
                    json edges = json::array();
                    for (auto [p, c] : tree.edges()) edges.push_back({p, c});
                    out << json{{"mapping", desc.text}, {"n_modes", set_modes}, {"roots", tree.roots()}, {"edges", edges}}
                               .dump(2)
                        << '\n';
                } else {
                    out << (dot ? tree.dot() : tree.ascii());
                }
            }
        } else if (verify_cmd->parsed()) {
            auto desc = parse_descriptor(set_mapping);
            auto r = oracle::verify_mapping(derive_sets(desc.family(set_modes)));
            if (as_json) {
                out << json{{"mapping", desc.text},
                            {"n_modes", r.n_modes},
                            {"anticommutator_residual", r.anticommutator_residual},
                            {"conjugation_residual", r.conjugation_residual},
                            {"basis_permutation_residual", r.basis_permutation_residual},
                            {"encoding_bijective", r.encoding_bijective},
                            {"parity_identity", r.parity_identity},
                            {"flip_identity", r.flip_identity},
                            {"passed", r.passed()},
                            {"failures", r.failures}}
                           .dump(2)
                    << '\n';
            } else {
                auto yes = [](bool b) { return b ? "yes" : "no"; };
                out << "mapping " << desc.text << ", M=" << r.n_modes << '\n'
                    << "anticommutator residual    " << text::format_real(r.anticommutator_residual) << '\n'
                    << "conjugation residual       " << text::format_real(r.conjugation_residual) << '\n'
                    << "basis-permutation residual " << text::format_real(r.basis_permutation_residual) << '\n'
                    << "encoding bijective         " << yes(r.encoding_bijective) << '\n'
                    << "parity identity            " << yes(r.parity_identity) << '\n'
                    << "flip identity              " << yes(r.flip_identity) << '\n'
                    << (r.passed() ? "PASS" : "FAIL") << '\n';
                for (const auto &f : r.failures) out << "  " << f << '\n';
            }
            return r.passed() ? kOk : kVerifyFailed;
        } else if (count->parsed()) {
            auto [op, n] = count_src.qubit();
            auto r = gate_counts(op, count_src.fermionic() ? parse_descriptor(count_src.mapping).text : "input");
            if (as_json) out << count_json(r).dump(2) << '\n';
            else out << count_table({r});
        } else if (cmp->parsed()) {
            auto h = parse_fermion_file(read_text(cmp_input));
            std::vector<MappingDescriptor> ds;
            if (!cmp_mappings.empty())
                for (const auto &s : split_list(cmp_mappings)) ds.push_back(parse_descriptor(s));
            auto rows = compare(h, ds);
            if (as_json) {
                json j = json::array();
                for (const auto &r : rows) j.push_back(count_json(r));
                out << j.dump(2) << '\n';
            } else {
                out << count_table(rows);
            }
        } else if (circ->parsed()) {
            auto [op, n] = circ_src.qubit();
            auto c = trotter_circuit(op, circ_t, circ_steps, n);
            auto qasm = emit_qasm(c);
            auto r = census(c);
            if (!qasm_path.empty()) emit(qasm, qasm_path);
            if (as_json) {
                json order = json::array();
                for (const auto &p : c.term_order) order.push_back(p.str());
                out << json{{"n_qubits", c.n_qubits()}, {"t", c.time},           {"steps", c.steps},
                            {"cnot", r.cnot},           {"single_qubit", r.single_qubit},
                            {"total_gates", r.total_gates()}, {"term_order", order}}
                           .dump(2)
                    << '\n';
            } else if (qasm_path != "-") {
                out << "qubits " << c.n_qubits() << "\nt " << table_real(c.time) << "\nsteps " << c.steps << "\nterms "
                    << c.term_order.size() << "\nCNOT " << r.cnot << "\nSQ " << r.single_qubit << "\ngates "
                    << r.total_gates() << '\n';
            }
        } else if (red->parsed()) {
            auto [op, n] = red_src.qubit();
            std::vector<std::pair<std::uint32_t, int>> fixed;
            std::vector<std::string> notes;
            if (!taper_spec.empty()) {
                fixed = parse_taper_spec(taper_spec);
                for (auto [q, v] : fixed)
                    notes.push_back("q" + std::to_string(q) + "=" + (v > 0 ? "+1" : "-1") + " (user)");
            }
            if (electrons || electrons_up || electrons_down) {
                if (!red_src.fermionic()) throw ValidationError("electron counts need a fermion --input and --mapping");
                auto sets = derive_sets(parse_descriptor(red_src.mapping).family(n));
                for (auto a : electron_assignment(sets, electrons, electrons_up, electrons_down, notes)) {
                    bool dup = false;
                    for (auto &[q, v] : fixed) dup = dup || q == a.first;
                    if (dup) throw ValidationError("qubit " + std::to_string(a.first) + " fixed twice");
                    fixed.push_back(a);
                }
            }
            for (auto [q, v] : fixed)
                if (q >= std::max(n, op.span_qubits()))
                    throw ValidationError("taper qubit " + std::to_string(q) + " is outside the operator");
            SymmetryAssignment assign(fixed, "cli");
            auto reduced = taper(op, assign, compact);
            for (const auto &note : notes) err << "tapered " << note << '\n';
            if (as_json) {
                json fixed_json = json::array();
                for (auto [q, v] : assign.fixed()) fixed_json.push_back({{"qubit", q}, {"eigenvalue", v}});
                json j{{"tapered", fixed_json}, {"compact", compact}, {"terms", operator_json(reduced)}};
                emit(j.dump(2) + "\n", red_output);
            } else {
                emit(format_qubit_operator(reduced, red_decimals), red_output);
            }
        }
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const SymmetryViolation &e) {
        err << "symmetry violation: " << e.what() << '\n';
        return kSymmetry;
    } catch (const UnsupportedSize &e) {
        err << "unsupported size: " << e.what() << '\n';
        return kUnsupported;
    } catch (const ValidationError &e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::filesystem::filesystem_error &e) {
        err << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return kOk;
}

} // namespace fermap::cli
