#include "filiform/catalog.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "filiform/strata.hpp"

namespace filiform {

namespace {

struct ClassEntry {
  Json key;
  FirstClassParams representative;
  int members = 0;
};

}  // namespace

CatalogReport run_catalog(std::istream& in, std::ostream& out) {
  CatalogReport report;
  std::vector<ClassEntry> classes;           // in order of first appearance
  std::map<std::string, std::size_t> index;  // key string -> classes slot
  std::vector<Json> unsupported;

  std::optional<int> shared_n;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    AlgebraRecord rec = [&] {
      try {
        Json j = Json::parse(line, nullptr, false);
        if (j.is_discarded()) throw data_error("algebra record: invalid JSON");
        // orbit output wraps the record under "algebra"; accept both forms
        if (j.is_object() && j.contains("algebra")) return record_from_json(j["algebra"]);
        return record_from_json(j);
      } catch (const data_error& e) {
        throw data_error("line " + std::to_string(lineno) + ": " + e.what());
      }
    }();
    ++report.records;
    const int n = record_n(rec);
    if (!shared_n) shared_n = n;
    if (*shared_n != n)
      throw data_error("line " + std::to_string(lineno) + ": mixed n (" +
                       std::to_string(*shared_n) + " vs " + std::to_string(n) + ")");

    const auto flag_unsupported = [&](const std::string& reason) {
      Json j;
      j["unsupported"] = true;
      j["reason"] = reason;
      j["record"] = record_to_json(rec);
      unsupported.push_back(std::move(j));
      ++report.unsupported;
    };

    if (std::holds_alternative<SecondClassParams>(rec)) {
      flag_unsupported("second-class isomorphism is not decided by this tool");
      continue;
    }
    const auto& p = std::get<FirstClassParams>(rec);
    try {
      const InvariantVector iv = invariant_vector(p);
      Json key;
      key["n"] = n;
      key["stratum"] = std::string(stratum_name(iv.stratum));
      Json comps = Json::array();
      for (const auto& c : iv.components) comps.push_back(format_scalar(c));
      key["components"] = std::move(comps);
      const std::string key_str = key.dump();
      auto [it, fresh] = index.try_emplace(key_str, classes.size());
      if (fresh) classes.push_back({std::move(key), canonicalize(p), 0});
      ++classes[it->second].members;
    } catch (const unsupported_error& e) {
      flag_unsupported(e.what());
    }
  }

  for (const auto& entry : classes) {
    Json j;
    j["key"] = entry.key;
    j["representative"] = params_to_json(entry.representative);
    j["members"] = entry.members;
    out << j.dump() << "\n";
  }
  for (const auto& j : unsupported) out << j.dump() << "\n";
  report.classes = static_cast<int>(classes.size());
  return report;
}

}  // namespace filiform
