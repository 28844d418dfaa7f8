#pragma once

#include <string_view>
#include <variant>

#include <json.hpp>

#include "filiform/algebra.hpp"

namespace filiform {

using Json = nlohmann::ordered_json;

struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using AlgebraRecord = std::variant<FirstClassParams, SecondClassParams>;

/// Algebra record format:
///   {"n": 4, "class": "first",  "alpha": ["1","2"], "theta": "3"}
///   {"n": 4, "class": "second", "beta":  ["1","1"], "gamma": "2"}
/// Scalars use the scalar text grammar; integers are also accepted.
AlgebraRecord record_from_json(const Json& j);
AlgebraRecord record_from_string(std::string_view text);

Json record_to_json(const AlgebraRecord& r);
Json params_to_json(const FirstClassParams& p);
Json params_to_json(const SecondClassParams& p);

int record_n(const AlgebraRecord& r);

}  // namespace filiform
