// Copyright 2026 The coherence-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coherence_lab/linalg.hpp"
#include "coherence_lab/phase_matrix.hpp"

namespace coherence_lab {

enum class MatrixKind { State, KrausSet, PhaseMatrix };

std::string_view to_string(MatrixKind kind);

/// On-disk JSON object:
///
///   {"kind": "state",     "dim": d, "entries": [[[re, im], ...], ...]}
///   {"kind": "kraus-set", "dim": d, "entries": [<d x d matrix>, ...]}
///   {"kind": "phase-matrix", "dim": d_a*d_b, "d_a": d_a, "d_b": d_b,
///    "entries": [[theta_11, ...], ...]}
///
/// An optional "comment" string is carried through. Doubles are written in
/// shortest round-trip form, so write-then-read is bit-exact.
struct MatrixFile {
  MatrixKind kind = MatrixKind::State;
  std::size_t dim = 0;
  std::vector<ComplexMatrix> matrices;  // one for a state, n for a Kraus set
  std::optional<PhaseMatrix> phases;    // phase-matrix files only
  std::string comment;

  static MatrixFile state(ComplexMatrix m, std::string comment = {});
  static MatrixFile kraus_set(std::vector<ComplexMatrix> ops, std::string comment = {});
  static MatrixFile phase_matrix(PhaseMatrix theta, std::string comment = {});
};

/// Throws ParseError on malformed JSON or a layout that does not match `kind`.
MatrixFile parse_matrix_file(std::string_view text);
MatrixFile read_matrix_file(const std::filesystem::path& path);

std::string to_json_text(const MatrixFile& file);
void write_matrix_file(const std::filesystem::path& path, const MatrixFile& file);

}  // namespace coherence_lab
