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

#include "coherence_lab/matrix_file.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "coherence_lab/errors.hpp"

namespace coherence_lab {

using nlohmann::json;

namespace {

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

ComplexMatrix matrix_from_json(const json& rows, std::size_t dim) {
  if (!rows.is_array() || rows.size() != dim) {
    throw ParseError("expected " + std::to_string(dim) + " rows");
  }
  std::vector<Complex> entries;
  entries.reserve(dim * dim);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != dim) {
      throw ParseError("expected " + std::to_string(dim) + " entries per row");
    }
    for (const auto& z : row) {
      if (!z.is_array() || z.size() != 2) throw ParseError("entries must be [re, im] pairs");
      entries.emplace_back(number(z[0], "re"), number(z[1], "im"));
    }
  }
  try {
    return ComplexMatrix(dim, dim, std::move(entries));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

std::size_t positive(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_unsigned() || doc[key].get<std::size_t>() == 0) {
    throw ParseError(std::string("\"") + key + "\" must be a positive integer");
  }
  return doc[key].get<std::size_t>();
}

}  // namespace

std::string_view to_string(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::State:
      return "state";
    case MatrixKind::KrausSet:
      return "kraus-set";
    case MatrixKind::PhaseMatrix:
      return "phase-matrix";
  }
  return "unknown";
}

MatrixFile MatrixFile::state(ComplexMatrix m, std::string comment) {
  MatrixFile f;
  f.kind = MatrixKind::State;
  f.dim = m.rows();
  f.matrices.push_back(std::move(m));
  f.comment = std::move(comment);
  return f;
}

MatrixFile MatrixFile::kraus_set(std::vector<ComplexMatrix> ops, std::string comment) {
  MatrixFile f;
  f.kind = MatrixKind::KrausSet;
  f.dim = ops.empty() ? 0 : ops.front().rows();
  f.matrices = std::move(ops);
  f.comment = std::move(comment);
  return f;
}

MatrixFile MatrixFile::phase_matrix(PhaseMatrix theta, std::string comment) {
  MatrixFile f;
  f.kind = MatrixKind::PhaseMatrix;
  f.dim = theta.d_a() * theta.d_b();
  f.phases = std::move(theta);
  f.comment = std::move(comment);
  return f;
}

MatrixFile parse_matrix_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("top level must be an object");
  if (!doc.contains("kind") || !doc["kind"].is_string()) throw ParseError("missing \"kind\"");
  if (!doc.contains("entries")) throw ParseError("missing \"entries\"");

  MatrixFile f;
  f.dim = positive(doc, "dim");
  if (doc.contains("comment")) {
    if (!doc["comment"].is_string()) throw ParseError("\"comment\" must be a string");
    f.comment = doc["comment"].get<std::string>();
  }
  const std::string kind = doc["kind"].get<std::string>();
  const json& entries = doc["entries"];
  if (kind == "state") {
    f.kind = MatrixKind::State;
    f.matrices.push_back(matrix_from_json(entries, f.dim));
  } else if (kind == "kraus-set") {
    f.kind = MatrixKind::KrausSet;
    if (!entries.is_array() || entries.empty()) {
      throw ParseError("kraus-set entries must be a nonempty array of matrices");
    }
    for (const auto& m : entries) f.matrices.push_back(matrix_from_json(m, f.dim));
  } else if (kind == "phase-matrix") {
    f.kind = MatrixKind::PhaseMatrix;
    const std::size_t d_a = positive(doc, "d_a");
    const std::size_t d_b = positive(doc, "d_b");
    if (d_a * d_b != f.dim) throw ParseError("phase-matrix requires dim = d_a * d_b");
    if (!entries.is_array() || entries.size() != d_a) {
      throw ParseError("phase-matrix needs d_a rows");
    }
    std::vector<double> theta;
    for (const auto& row : entries) {
      if (!row.is_array() || row.size() != d_b) throw ParseError("phase-matrix needs d_b columns");
      for (const auto& t : row) theta.push_back(number(t, "phase"));
    }
    try {
      f.phases = PhaseMatrix(d_a, d_b, std::move(theta));
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  } else {
    throw ParseError("unknown kind \"" + kind + "\"");
  }
  return f;
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_file(buffer.str());
}

std::string to_json_text(const MatrixFile& file) {
  // Hand-laid-out so that each matrix row sits on one line; numbers go
  // through json::dump, which emits the shortest round-trip form.
  std::ostringstream out;
  out << "{\n \"kind\": " << json(std::string(to_string(file.kind))).dump() << ",\n";
  out << " \"dim\": " << file.dim << ",\n";
  if (!file.comment.empty()) out << " \"comment\": " << json(file.comment).dump() << ",\n";
  auto write_rows = [&out](const json& rows, const std::string& indent) {
    out << "[\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
      out << indent << " " << rows[r].dump() << (r + 1 < rows.size() ? ",\n" : "\n");
    }
    out << indent << "]";
  };
  switch (file.kind) {
    case MatrixKind::State:
      out << " \"entries\": ";
      write_rows(matrix_to_json(file.matrices.at(0)), " ");
      break;
    case MatrixKind::KrausSet:
      out << " \"entries\": [\n";
      for (std::size_t n = 0; n < file.matrices.size(); ++n) {
        out << "  ";
        write_rows(matrix_to_json(file.matrices[n]), "  ");
        out << (n + 1 < file.matrices.size() ? ",\n" : "\n");
      }
      out << " ]";
      break;
    case MatrixKind::PhaseMatrix: {
      const PhaseMatrix& theta = file.phases.value();
      out << " \"d_a\": " << theta.d_a() << ",\n \"d_b\": " << theta.d_b() << ",\n";
      json rows = json::array();
      for (std::size_t i = 0; i < theta.d_a(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < theta.d_b(); ++j) row.push_back(theta(i, j));
        rows.push_back(std::move(row));
      }
      out << " \"entries\": ";
      write_rows(rows, " ");
      break;
    }
  }
  out << "\n}\n";
  return out.str();
}

void write_matrix_file(const std::filesystem::path& path, const MatrixFile& file) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << to_json_text(file);
}

}  // namespace coherence_lab
