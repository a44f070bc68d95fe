#pragma once

#include <string>

#include <json.hpp>

#include "g3tss/multivector.hpp"
#include "g3tss/spinor.hpp"

namespace g3::io {

/// Locale-independent, 17 significant digits.
std::string format_double(double v);

/// Shortest round-trip representation, locale-independent.
std::string format_shortest(double v);

/// "a + b e1 + ... + h e123", zero terms omitted, "0" when all vanish.
std::string to_text(const Multivectord& m);

/// Array of the 8 coefficients in blade order.
nlohmann::json to_json(const Multivectord& m);
Multivectord multivector_from_json(const nlohmann::json& j);

/// {"c_plus": [re, ps], "c_minus": [re, ps]}.
nlohmann::json to_json(const AlgebraicSpinord& psi);
AlgebraicSpinord spinor_from_json(const nlohmann::json& j);

}  // namespace g3::io
