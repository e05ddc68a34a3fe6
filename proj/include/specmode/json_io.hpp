// Copyright 2026 The specmode Authors
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

#ifndef SPECMODE_JSON_IO_HPP
#define SPECMODE_JSON_IO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "specmode/hardness.hpp"
#include "specmode/photonic_sim.hpp"
#include "specmode/spectral.hpp"
#include "specmode/spectral_functions.hpp"

namespace specmode {

/// {"type":"pure","coeffs":[[re,im],...]} or {"type":"mixed","weights":[...]}.
nlohmann::json to_json(const PhotonSource& photon);

/// Inverse of to_json for photon sources. When `basis` is given, photons may
/// also be written as {"type":"wavepacket", ...WavepacketSpec fields} and are
/// decomposed onto it. Throws std::invalid_argument on schema errors.
PhotonSource photon_from_json(const nlohmann::json& j, const FunctionBasis* basis = nullptr);

/// {"shape":"Gaussian","center_frequency":..,"bandwidth":..,"temporal_delay":..}
nlohmann::json to_json(const WavepacketSpec& w);
WavepacketSpec wavepacket_from_json(const nlohmann::json& j);

/// {"family":"HermiteGauss","center_frequency":..,"scale":..,"size":b}
nlohmann::json to_json(const FunctionBasis& b);
FunctionBasis basis_from_json(const nlohmann::json& j);

/// {"photons":[...],"n_hard":k,"epsilon":e[,"basis":{...}]}
nlohmann::json to_json(const HardnessQuery& q);
HardnessQuery query_from_json(const nlohmann::json& j);

/// Matrix as rows of [re, im] pairs.
nlohmann::json to_json(const UnitaryMatrix& u);
UnitaryMatrix unitary_from_json(const nlohmann::json& j);

/// printf "%.17g" rendering, which round-trips every double; "null" for
/// non-finite values.
std::string format_double(double x);

/// Flat JSON object writer that emits doubles with format_double, keeping
/// key order as inserted.
class JsonObjectWriter {
 public:
  JsonObjectWriter& field(std::string_view key, double value);
  JsonObjectWriter& field(std::string_view key, std::uint64_t value);
  JsonObjectWriter& field(std::string_view key, int value);
  JsonObjectWriter& field(std::string_view key, bool value);
  JsonObjectWriter& field(std::string_view key, std::string_view value);
  JsonObjectWriter& field(std::string_view key, const char* value) {
    return field(key, std::string_view(value));
  }
  JsonObjectWriter& null_field(std::string_view key);
  /// Inserts pre-rendered JSON text.
  JsonObjectWriter& raw_field(std::string_view key, std::string_view json);

  std::string str() const { return body_.empty() ? "{}" : "{" + body_ + "}"; }

 private:
  void key(std::string_view k);
  std::string body_;
};

/// Renders a HardnessResult with the fixed disclaimer; seed and std_error
/// are null unless set.
std::string hardness_result_json(const HardnessResult& r, std::optional<double> epsilon = {});

/// Parses the object written by hardness_result_json.
HardnessResult hardness_result_from_json(const nlohmann::json& j);

}  // namespace specmode

#endif  // SPECMODE_JSON_IO_HPP
