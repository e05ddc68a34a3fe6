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

#include "specmode/json_io.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace specmode {
namespace {

using nlohmann::json;

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw std::invalid_argument(std::string(what) + " must be a number");
  return j.get<double>();
}

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("complex numbers are written as [re, im]");
  }
  return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

json complex_to_json(Complex c) { return json::array({c.real(), c.imag()}); }

std::string quote(std::string_view s) { return json(std::string(s)).dump(); }

}  // namespace

json to_json(const PhotonSource& photon) {
  if (photon.is_pure()) {
    json coeffs = json::array();
    for (const Complex& c : photon.pure().coeffs()) coeffs.push_back(complex_to_json(c));
    return {{"type", "pure"}, {"coeffs", coeffs}};
  }
  json weights = json::array();
  for (double w : photon.mixed().weights()) weights.push_back(w);
  return {{"type", "mixed"}, {"weights", weights}};
}

PhotonSource photon_from_json(const json& j, const FunctionBasis* basis) {
  const json& type = require(j, "type");
  if (!type.is_string()) throw std::invalid_argument("photon type must be a string");
  const std::string t = type.get<std::string>();
  if (t == "pure") {
    const json& coeffs = require(j, "coeffs");
    if (!coeffs.is_array()) throw std::invalid_argument("coeffs must be an array");
    Eigen::VectorXcd c(static_cast<Eigen::Index>(coeffs.size()));
    for (std::size_t i = 0; i < coeffs.size(); ++i) c[static_cast<Eigen::Index>(i)] = complex_from_json(coeffs[i]);
    return SpectralAmplitudes(std::move(c));
  }
  if (t == "mixed") {
    const json& weights = require(j, "weights");
    if (!weights.is_array()) throw std::invalid_argument("weights must be an array");
    Eigen::VectorXd w(static_cast<Eigen::Index>(weights.size()));
    for (std::size_t i = 0; i < weights.size(); ++i) w[static_cast<Eigen::Index>(i)] = number(weights[i], "weight");
    return MixtureWeights(std::move(w));
  }
  if (t == "wavepacket") {
    if (basis == nullptr) {
      throw std::invalid_argument("wavepacket photons need a \"basis\" to decompose onto");
    }
    return decompose(wavepacket_from_json(j), *basis).amplitudes;
  }
  throw std::invalid_argument("unknown photon type \"" + t + "\"");
}

json to_json(const WavepacketSpec& w) {
  return {{"shape", "Gaussian"},
          {"center_frequency", w.center_frequency()},
          {"bandwidth", w.bandwidth()},
          {"temporal_delay", w.temporal_delay()}};
}

WavepacketSpec wavepacket_from_json(const json& j) {
  if (j.contains("shape") && j.at("shape") != "Gaussian") {
    throw std::invalid_argument("only Gaussian wavepackets are supported");
  }
  const double delay = j.contains("temporal_delay") ? number(j.at("temporal_delay"), "temporal_delay") : 0.0;
  return WavepacketSpec(number(require(j, "center_frequency"), "center_frequency"),
                        number(require(j, "bandwidth"), "bandwidth"), delay);
}

json to_json(const FunctionBasis& b) {
  return {{"family", "HermiteGauss"},
          {"center_frequency", b.center_frequency()},
          {"scale", b.scale()},
          {"size", b.size()}};
}

FunctionBasis basis_from_json(const json& j) {
  if (j.contains("family") && j.at("family") != "HermiteGauss") {
    throw std::invalid_argument("only the HermiteGauss basis family is supported");
  }
  const json& size = require(j, "size");
  if (!size.is_number_integer()) throw std::invalid_argument("basis size must be an integer");
  return FunctionBasis(number(require(j, "center_frequency"), "center_frequency"),
                       number(require(j, "scale"), "scale"), size.get<int>());
}

json to_json(const HardnessQuery& q) {
  json photons = json::array();
  for (const PhotonSource& p : q.photons()) photons.push_back(to_json(p));
  return {{"photons", photons}, {"n_hard", q.n_hard()}, {"epsilon", q.epsilon()}};
}

HardnessQuery query_from_json(const json& j) {
  std::optional<FunctionBasis> basis;
  if (j.contains("basis")) basis = basis_from_json(j.at("basis"));
  const json& photons = require(j, "photons");
  if (!photons.is_array()) throw std::invalid_argument("photons must be an array");
  std::vector<PhotonSource> sources;
  for (const json& p : photons) sources.push_back(photon_from_json(p, basis ? &*basis : nullptr));
  const json& n_hard = require(j, "n_hard");
  if (!n_hard.is_number_integer()) throw std::invalid_argument("n_hard must be an integer");
  return HardnessQuery(std::move(sources), n_hard.get<int>(), number(require(j, "epsilon"), "epsilon"));
}

json to_json(const UnitaryMatrix& u) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < u.matrix().rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < u.matrix().cols(); ++k) row.push_back(complex_to_json(u.matrix()(i, k)));
    rows.push_back(row);
  }
  return rows;
}

UnitaryMatrix unitary_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("unitary must be an array of rows");
  const auto m = static_cast<Eigen::Index>(j.size());
  Eigen::MatrixXcd u(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != m) {
      throw std::invalid_argument("unitary must be square");
    }
    for (Eigen::Index k = 0; k < m; ++k) u(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
  }
  return UnitaryMatrix(std::move(u));
}

std::string format_double(double x) {
  if (!std::isfinite(x)) return "null";
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

void JsonObjectWriter::key(std::string_view k) {
  if (!body_.empty()) body_ += ',';
  body_ += quote(k);
  body_ += ':';
}

JsonObjectWriter& JsonObjectWriter::field(std::string_view k, double value) {
  key(k);
  body_ += format_double(value);
  return *this;
}

JsonObjectWriter& JsonObjectWriter::field(std::string_view k, std::uint64_t value) {
  key(k);
  body_ += std::to_string(value);
  return *this;
}

JsonObjectWriter& JsonObjectWriter::field(std::string_view k, int value) {
  key(k);
  body_ += std::to_string(value);
  return *this;
}

JsonObjectWriter& JsonObjectWriter::field(std::string_view k, bool value) {
  key(k);
  body_ += value ? "true" : "false";
  return *this;
}

JsonObjectWriter& JsonObjectWriter::field(std::string_view k, std::string_view value) {
  key(k);
  body_ += quote(value);
  return *this;
}

JsonObjectWriter& JsonObjectWriter::null_field(std::string_view k) {
  key(k);
  body_ += "null";
  return *this;
}

JsonObjectWriter& JsonObjectWriter::raw_field(std::string_view k, std::string_view text) {
  key(k);
  body_ += text;
  return *this;
}

std::string hardness_result_json(const HardnessResult& r, std::optional<double> epsilon) {
  JsonObjectWriter w;
  w.field("p_hard", r.p_hard).field("method", to_string(r.method));
  if (r.std_error) {
    w.field("std_error", *r.std_error);
  } else {
    w.null_field("std_error");
  }
  if (r.seed) {
    w.field("seed", *r.seed);
  } else {
    w.null_field("seed");
  }
  if (r.terms) w.field("terms", *r.terms);
  if (epsilon) w.field("epsilon", *epsilon).field("exceeds_epsilon", r.exceeds(*epsilon));
  w.field("disclaimer", kHardnessDisclaimer);
  return w.str();
}

HardnessResult hardness_result_from_json(const json& j) {
  HardnessResult r;
  r.p_hard = number(require(j, "p_hard"), "p_hard");
  if (!(r.p_hard >= 0.0 && r.p_hard <= 1.0)) throw std::invalid_argument("p_hard outside [0, 1]");
  r.method = hardness_method_from_string(require(j, "method").get<std::string>());
  if (!require(j, "std_error").is_null()) r.std_error = number(j.at("std_error"), "std_error");
  if (!require(j, "seed").is_null()) r.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("terms")) r.terms = j.at("terms").get<std::uint64_t>();
  if (require(j, "disclaimer") != kHardnessDisclaimer) {
    throw std::invalid_argument("hardness result is missing the fixed disclaimer");
  }
  return r;
}

}  // namespace specmode
