// SPDX-License-Identifier: Apache-2.0
// JSON wire formats. Internal to the shared library; the C API hands out strings.
#pragma once

#include "json.hpp"
#include <string>

#include "apk/chars.hpp"
#include "apk/cohind.hpp"
#include "apk/langlands.hpp"
#include "apk/membership.hpp"
#include "apk/tableaux.hpp"
#include "apk/types.hpp"
#include "apk/weights.hpp"

namespace apk::json_io {

using nlohmann::json;

// Strict: unknown fields, wrong types and non-canonical order all throw Validation.
ArthurParameter parse_param(const json& j);
ArthurParameter parse_param(const std::string& text);
json to_json(const ArthurParameter& psi);

json to_json(const Block& b);
json to_json(const PacketCharacter& c);
json to_json(const HighestWeight& mu);
json to_json(const Verdict& v);
json to_json(const OrthRepLabel& l);
json to_json(const HoweSource& s);
json to_json(const StandardModule& sm);
json to_json(const SignedTableau& T);
json half_vec(const HalfVec& v);

}  // namespace apk::json_io
