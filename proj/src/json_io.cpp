#include "filiform/json_io.hpp"

namespace filiform {

namespace {

Scalar scalar_from_json(const Json& v, const char* where) {
  try {
    if (v.is_string()) return parse_scalar(v.get<std::string>());
    if (v.is_number_integer()) return Scalar(v.get<long long>());
  } catch (const parse_error& e) {
    throw data_error(std::string(where) + ": " + e.what());
  }
  throw data_error(std::string(where) + ": scalar must be a string in the scalar grammar");
}

std::vector<Scalar> scalar_list(const Json& v, const char* where) {
  if (!v.is_array()) throw data_error(std::string(where) + ": expected an array of scalars");
  std::vector<Scalar> out;
  out.reserve(v.size());
  for (const auto& item : v) out.push_back(scalar_from_json(item, where));
  return out;
}

}  // namespace

AlgebraRecord record_from_json(const Json& j) {
  if (!j.is_object()) throw data_error("algebra record: expected a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw data_error("algebra record: missing integer field \"n\"");
  const int n = j["n"].get<int>();
  if (!j.contains("class") || !j["class"].is_string())
    throw data_error("algebra record: missing string field \"class\"");
  const std::string cls = j["class"].get<std::string>();
  try {
    if (cls == "first") {
      if (!j.contains("alpha") || !j.contains("theta"))
        throw data_error("algebra record: first class needs \"alpha\" and \"theta\"");
      return FirstClassParams(n, scalar_list(j["alpha"], "alpha"),
                              scalar_from_json(j["theta"], "theta"));
    }
    if (cls == "second") {
      if (!j.contains("beta") || !j.contains("gamma"))
        throw data_error("algebra record: second class needs \"beta\" and \"gamma\"");
      return SecondClassParams(n, scalar_list(j["beta"], "beta"),
                               scalar_from_json(j["gamma"], "gamma"));
    }
  } catch (const std::invalid_argument& e) {
    throw data_error(std::string("algebra record: ") + e.what());
  }
  throw data_error("algebra record: \"class\" must be \"first\" or \"second\"");
}

AlgebraRecord record_from_string(std::string_view text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw data_error("algebra record: invalid JSON");
  return record_from_json(j);
}

Json params_to_json(const FirstClassParams& p) {
  Json j;
  j["n"] = p.n;
  j["class"] = "first";
  Json alpha = Json::array();
  for (const auto& a : p.alpha) alpha.push_back(format_scalar(a));
  j["alpha"] = std::move(alpha);
  j["theta"] = format_scalar(p.theta);
  return j;
}

Json params_to_json(const SecondClassParams& p) {
  Json j;
  j["n"] = p.n;
  j["class"] = "second";
  Json beta = Json::array();
  for (const auto& b : p.beta) beta.push_back(format_scalar(b));
  j["beta"] = std::move(beta);
  j["gamma"] = format_scalar(p.gamma);
  return j;
}

Json record_to_json(const AlgebraRecord& r) {
  return std::visit([](const auto& p) { return params_to_json(p); }, r);
}

int record_n(const AlgebraRecord& r) {
  return std::visit([](const auto& p) { return p.n; }, r);
}

}  // namespace filiform
