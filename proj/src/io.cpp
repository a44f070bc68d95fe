#include "g3tss/io.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace g3::io {
namespace {

double finite_number(const nlohmann::json& j, const char* what) {
  if (!j.is_number()) throw std::invalid_argument(std::string(what) + ": expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + ": must be finite");
  return v;
}

CenterScalard center_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument(std::string(what) + ": expected [re, ps]");
  }
  return {finite_number(j[0], what), finite_number(j[1], what)};
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  if (res.ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

std::string format_shortest(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc{}) throw std::runtime_error("format_shortest: conversion failed");
  return std::string(buf, res.ptr);
}

std::string to_text(const Multivectord& m) {
  std::string out;
  for (int i = 0; i < kNumBlades; ++i) {
    const double c = m[i];
    if (c == 0.0) continue;
    if (out.empty()) {
      out += format_shortest(c);
    } else {
      out += c < 0.0 ? " - " : " + ";
      out += format_shortest(std::abs(c));
    }
    if (i != 0) {
      out += ' ';
      out += kBladeName[i];
    }
  }
  return out.empty() ? "0" : out;
}

nlohmann::json to_json(const Multivectord& m) {
  nlohmann::json j = nlohmann::json::array();
  for (int i = 0; i < kNumBlades; ++i) j.push_back(m[i]);
  return j;
}

Multivectord multivector_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != kNumBlades) {
    throw std::invalid_argument("multivector: expected an array of 8 numbers");
  }
  Multivectord::Coeffs c;
  for (int i = 0; i < kNumBlades; ++i) c[i] = finite_number(j[i], "multivector");
  return Multivectord(c);
}

nlohmann::json to_json(const AlgebraicSpinord& psi) {
  const auto [c_plus, c_minus] = to_amplitudes(psi);
  return {{"c_plus", {c_plus.re, c_plus.ps}}, {"c_minus", {c_minus.re, c_minus.ps}}};
}

AlgebraicSpinord spinor_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("c_plus") || !j.contains("c_minus")) {
    throw std::invalid_argument("spinor: expected {\"c_plus\": [re, ps], \"c_minus\": [re, ps]}");
  }
  return from_amplitudes(center_from_json(j.at("c_plus"), "c_plus"),
                         center_from_json(j.at("c_minus"), "c_minus"));
}

}  // namespace g3::io
