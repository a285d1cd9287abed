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

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "coherence_lab/linalg.hpp"

namespace coherence_lab {

/// SHA-256 of a file's bytes, lowercase hex.
std::string file_sha256(const std::filesystem::path& path);

/// x rounded to 15 significant digits.
double round15(double x);

/// Machine-readable record of one CLI run: inputs (with digests), verdicts
/// and optional witness matrices. Keys keep insertion order and reals carry
/// 15 significant digits, so identical runs serialise identically.
class Certificate {
 public:
  Certificate(std::string command, double tol);

  void add_input(const std::filesystem::path& path);
  void set(const std::string& key, double value);
  void set(const std::string& key, bool value);
  void set(const std::string& key, long long value);
  void set(const std::string& key, const std::string& value);
  void set(const std::string& key, const std::vector<double>& values);
  void set_raw(const std::string& key, nlohmann::ordered_json value);
  void add_witness(const std::string& key, const ComplexMatrix& m);

  const nlohmann::ordered_json& verdicts() const noexcept { return verdicts_; }
  std::string to_json() const;
  std::string to_text() const;

 private:
  std::string command_;
  double tol_;
  nlohmann::ordered_json inputs_ = nlohmann::ordered_json::array();
  nlohmann::ordered_json verdicts_ = nlohmann::ordered_json::object();
  nlohmann::ordered_json witnesses_ = nlohmann::ordered_json::object();
};

}  // namespace coherence_lab
