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

#include "cliffdepth/text_io.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

namespace cliffdepth {

namespace {

/// Next line that is neither blank nor a comment; false at end of input.
bool next_line(std::istream &in, std::string &line, std::size_t &line_no) {
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') {
            continue;
        }
        return true;
    }
    return false;
}

[[noreturn]] void fail(std::size_t line_no, const std::string &what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

std::size_t parse_count(std::istringstream &ss, std::size_t line_no, const char *what) {
    long long v;
    if (!(ss >> v) || v < 0) {
        fail(line_no, std::string("expected ") + what);
    }
    return static_cast<std::size_t>(v);
}

void expect_end(std::istringstream &ss, std::size_t line_no) {
    std::string extra;
    if (ss >> extra) {
        fail(line_no, "unexpected trailing token '" + extra + "'");
    }
}

std::string bit_row(std::istream &in, std::size_t &line_no, std::size_t width) {
    std::string line;
    if (!next_line(in, line, line_no)) {
        fail(line_no, "unexpected end of input");
    }
    std::istringstream ss(line);
    std::string bits;
    ss >> bits;
    expect_end(ss, line_no);
    if (bits.size() != width || bits.find_first_not_of("01") != std::string::npos) {
        fail(line_no, "expected " + std::to_string(width) + " characters from {0,1}");
    }
    return bits;
}

BitMatrix read_bits(std::istream &in, std::size_t &line_no, std::size_t rows, std::size_t cols) {
    std::vector<std::string> lines;
    for (std::size_t i = 0; i < rows; ++i) {
        lines.push_back(bit_row(in, line_no, cols));
    }
    return BitMatrix::from_strings(lines);
}

std::ifstream open(const std::string &path) {
    std::ifstream f(path);
    if (!f) {
        throw ParseError("cannot open " + path);
    }
    return f;
}

}  // namespace

BitMatrix read_matrix(std::istream &in) {
    std::string line;
    std::size_t line_no = 0;
    if (!next_line(in, line, line_no)) {
        throw ParseError("empty matrix input");
    }
    std::istringstream ss(line);
    std::size_t rows = parse_count(ss, line_no, "row count");
    std::size_t cols = parse_count(ss, line_no, "column count");
    expect_end(ss, line_no);
    if (rows == 0 || cols == 0) {
        fail(line_no, "matrix dimensions must be positive");
    }
    return read_bits(in, line_no, rows, cols);
}

void write_matrix(std::ostream &out, const BitMatrix &m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (const auto &row : m.to_strings()) {
        out << row << '\n';
    }
}

CircuitFile read_circuit(std::istream &in) {
    std::string line;
    std::size_t line_no = 0;
    if (!next_line(in, line, line_no)) {
        throw ParseError("empty circuit input");
    }
    std::istringstream header(line);
    std::string word;
    header >> word;
    if (word != "qubits") {
        fail(line_no, "expected header 'qubits n'");
    }
    std::size_t n = parse_count(header, line_no, "qubit count");
    expect_end(header, line_no);

    CircuitFile file{Circuit(n), std::nullopt};
    bool first_body_line = true;
    while (next_line(in, line, line_no)) {
        std::istringstream ss(line);
        std::string name;
        ss >> name;
        if (name == "perm") {
            if (!first_body_line) {
                fail(line_no, "'perm' must directly follow the header");
            }
            std::vector<std::uint32_t> map;
            for (std::size_t i = 0; i < n; ++i) {
                map.push_back(static_cast<std::uint32_t>(parse_count(ss, line_no, "permutation entry")));
            }
            expect_end(ss, line_no);
            try {
                file.perm = Permutation(std::move(map));
            } catch (const std::exception &e) {
                fail(line_no, e.what());
            }
            first_body_line = false;
            continue;
        }
        first_body_line = false;
        Gate g{};
        try {
            if (name == "CZ" || name == "CNOT") {
                auto a = static_cast<Qubit>(parse_count(ss, line_no, "qubit index"));
                auto b = static_cast<Qubit>(parse_count(ss, line_no, "qubit index"));
                g = name == "CZ" ? Gate::cz(a, b) : Gate::cnot(a, b);
            } else if (name == "H" || name == "P" || name == "X" || name == "Z") {
                auto q = static_cast<Qubit>(parse_count(ss, line_no, "qubit index"));
                g = name == "H" ? Gate::h(q) : name == "P" ? Gate::p(q) : name == "X" ? Gate::x(q) : Gate::z(q);
            } else {
                fail(line_no, "unknown gate '" + name + "'");
            }
            expect_end(ss, line_no);
            file.circuit.append(g);
        } catch (const ParseError &) {
            throw;
        } catch (const std::exception &e) {
            fail(line_no, e.what());
        }
    }
    return file;
}

void write_circuit(std::ostream &out, const Circuit &c, const std::optional<Permutation> &perm) {
    out << "qubits " << c.qubit_count() << '\n';
    if (perm) {
        out << "perm";
        for (auto v : perm->map()) {
            out << ' ' << v;
        }
        out << '\n';
    }
    for (const auto &g : c.gates()) {
        out << gate_name(g.kind) << ' ' << g.q0;
        if (g.two_qubit()) {
            out << ' ' << g.q1;
        }
        out << '\n';
    }
}

void write_qasm2(std::ostream &out, const Circuit &c) {
    out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
    out << "qreg q[" << c.qubit_count() << "];\n";
    for (const auto &g : c.gates()) {
        switch (g.kind) {
            case GateKind::CZ:
                out << "cz q[" << g.q0 << "],q[" << g.q1 << "];\n";
                break;
            case GateKind::CNOT:
                out << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
                break;
            case GateKind::H:
                out << "h q[" << g.q0 << "];\n";
                break;
            case GateKind::P:
                out << "s q[" << g.q0 << "];\n";
                break;
            case GateKind::X:
                out << "x q[" << g.q0 << "];\n";
                break;
            case GateKind::Z:
                out << "z q[" << g.q0 << "];\n";
                break;
        }
    }
}

CliffordTableau read_tableau(std::istream &in) {
    std::string line;
    std::size_t line_no = 0;
    if (!next_line(in, line, line_no)) {
        throw ParseError("empty tableau input");
    }
    std::istringstream ss(line);
    std::size_t n = parse_count(ss, line_no, "qubit count");
    expect_end(ss, line_no);
    if (n == 0) {
        fail(line_no, "tableau needs at least one qubit");
    }
    BitMatrix sym = read_bits(in, line_no, 2 * n, 2 * n);
    std::string phase_bits = bit_row(in, line_no, 2 * n);
    std::vector<bool> phases(2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i) {
        phases[i] = phase_bits[i] == '1';
    }
    try {
        return CliffordTableau(std::move(sym), std::move(phases));
    } catch (const std::exception &e) {
        throw ParseError(e.what());
    }
}

void write_tableau(std::ostream &out, const CliffordTableau &t) {
    out << t.n() << '\n';
    for (const auto &row : t.symplectic().to_strings()) {
        out << row << '\n';
    }
    for (bool b : t.phases()) {
        out << (b ? '1' : '0');
    }
    out << '\n';
}

BitMatrix read_matrix_file(const std::string &path) {
    auto f = open(path);
    return read_matrix(f);
}

CircuitFile read_circuit_file(const std::string &path) {
    auto f = open(path);
    return read_circuit(f);
}

CliffordTableau read_tableau_file(const std::string &path) {
    auto f = open(path);
    return read_tableau(f);
}

}  // namespace cliffdepth
