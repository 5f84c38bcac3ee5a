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

#ifndef CLIFFDEPTH_TEXT_IO_H
#define CLIFFDEPTH_TEXT_IO_H

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "cliffdepth/circuit.h"
#include "cliffdepth/gf2.h"
#include "cliffdepth/tableau.h"

namespace cliffdepth {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Matrix format: a line "rows cols", then one line of '0'/'1' per row.
BitMatrix read_matrix(std::istream &in);
void write_matrix(std::ostream &out, const BitMatrix &m);

// Circuit format: "qubits n", an optional "perm i0 ... i(n-1)" line, then one
// gate per line: "CZ i j", "CNOT c t", "H q", "P q", "X q" or "Z q". Blank
// lines and lines starting with '#' are ignored.
struct CircuitFile {
    Circuit circuit;
    std::optional<Permutation> perm;
};

CircuitFile read_circuit(std::istream &in);
void write_circuit(std::ostream &out, const Circuit &c, const std::optional<Permutation> &perm = std::nullopt);

/// OpenQASM 2.0 export (P is written as s, CNOT as cx).
void write_qasm2(std::ostream &out, const Circuit &c);

// Tableau format: a line "n", 2n lines of 2n bits (row form), one line of 2n phase bits.
CliffordTableau read_tableau(std::istream &in);
void write_tableau(std::ostream &out, const CliffordTableau &t);

BitMatrix read_matrix_file(const std::string &path);
CircuitFile read_circuit_file(const std::string &path);
CliffordTableau read_tableau_file(const std::string &path);

}  // namespace cliffdepth

#endif
