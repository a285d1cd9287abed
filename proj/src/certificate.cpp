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

#include "coherence_lab/certificate.hpp"

#include <openssl/evp.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <memory>
#include <sstream>

#include "coherence_lab/errors.hpp"

namespace coherence_lab {

using nlohmann::ordered_json;

namespace {

ordered_json real_json(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return round15(x);
}

std::string render_value(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

}  // namespace

std::string file_sha256(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed for " + path.string());
  }
  std::string hex;
  char buf[3];
  for (unsigned int k = 0; k < length; ++k) {
    std::snprintf(buf, sizeof buf, "%02x", digest[k]);
    hex += buf;
  }
  return hex;
}

double round15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  const double r = std::strtod(buf, nullptr);
  return r == 0.0 ? 0.0 : r;  // drop negative zero
}

Certificate::Certificate(std::string command, double tol) : command_(std::move(command)), tol_(tol) {}

void Certificate::add_input(const std::filesystem::path& path) {
  inputs_.push_back({{"path", path.string()}, {"sha256", file_sha256(path)}});
}

void Certificate::set(const std::string& key, double value) { verdicts_[key] = real_json(value); }
void Certificate::set(const std::string& key, bool value) { verdicts_[key] = value; }
void Certificate::set(const std::string& key, long long value) { verdicts_[key] = value; }
void Certificate::set(const std::string& key, const std::string& value) { verdicts_[key] = value; }

void Certificate::set(const std::string& key, const std::vector<double>& values) {
  ordered_json arr = ordered_json::array();
  for (double v : values) arr.push_back(real_json(v));
  verdicts_[key] = std::move(arr);
}

void Certificate::set_raw(const std::string& key, ordered_json value) {
  verdicts_[key] = std::move(value);
}

void Certificate::add_witness(const std::string& key, const ComplexMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back({real_json(m(r, c).real()), real_json(m(r, c).imag())});
    }
    rows.push_back(std::move(row));
  }
  witnesses_[key] = std::move(rows);
}

std::string Certificate::to_json() const {
  ordered_json doc;
  doc["command"] = command_;
  doc["inputs"] = inputs_;
  doc["tol"] = real_json(tol_);
  doc["verdicts"] = verdicts_;
  if (!witnesses_.empty()) doc["witnesses"] = witnesses_;
  return doc.dump(2) + "\n";
}

std::string Certificate::to_text() const {
  std::ostringstream out;
  out << "command: " << command_ << "\n";
  for (const auto& in : inputs_) {
    out << "input: " << in["path"].get<std::string>() << " (sha256 "
        << in["sha256"].get<std::string>().substr(0, 16) << ")\n";
  }
  out << "tol: " << render_value(real_json(tol_)) << "\n";
  for (const auto& [key, value] : verdicts_.items()) {
    out << "  " << key << " = " << render_value(value) << "\n";
  }
  for (const auto& [key, value] : witnesses_.items()) {
    out << "  witness " << key << ":\n";
    for (const auto& row : value) out << "    " << row.dump() << "\n";
  }
  return out.str();
}

}  // namespace coherence_lab
