// filiform — exact classification toolkit for first-class filiform Leibniz
// algebras: multiplication tables, strata, orbit invariants, canonical
// forms, isomorphism decisions, orbit sampling, catalog deduplication and
// the self-check battery.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "filiform/catalog.hpp"
#include "filiform/json_io.hpp"
#include "filiform/oracle.hpp"
#include "filiform/selfcheck.hpp"
#include "filiform/strata.hpp"

namespace {

using namespace filiform;

constexpr int kExitUnsupported = 2;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitInternal = 70;

std::string read_all(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw data_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

AlgebraRecord load_record(const std::string& path) {
  return record_from_string(read_all(path));
}

FirstClassParams load_first(const std::string& path) {
  AlgebraRecord rec = load_record(path);
  if (std::holds_alternative<SecondClassParams>(rec))
    throw unsupported_error(
        "second-class record: only the multiplication table is supported; "
        "second-class isomorphism is not decided by this tool");
  return std::get<FirstClassParams>(std::move(rec));
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

int run_mapped(const std::function<int()>& body, int data_exit = kExitData) {
  try {
    return body();
  } catch (const unsupported_error& e) {
    Json j;
    j["error"] = "unsupported";
    j["reason"] = e.what();
    emit(j);
    return kExitUnsupported;
  } catch (const data_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return data_exit;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return data_exit;
  } catch (const shape_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return data_exit;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return data_exit;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

int cmd_table(const std::string& path) {
  const AlgebraRecord rec = load_record(path);
  const StructureTensor t =
      std::holds_alternative<FirstClassParams>(rec)
          ? build_tensor_first(std::get<FirstClassParams>(rec))
          : build_tensor_second(std::get<SecondClassParams>(rec));
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j)
      for (int k = 0; k < t.dim(); ++k)
        if (!t.at(i, j, k).is_zero())
          std::cout << i << " " << j << " " << k << " "
                    << format_scalar(t.at(i, j, k)) << "\n";
  return 0;
}

int cmd_classify(const std::string& path, const std::string& format) {
  const FirstClassParams p = load_first(path);
  const StratumInfo info = classify_stratum(p);
  const std::string tag = info.fine ? std::string(stratum_name(*info.fine))
                                    : std::string(coarse_name(info.coarse));
  if (format == "text") {
    std::cout << tag << "\n";
    return 0;
  }
  Json j;
  j["stratum"] = tag;
  j["decidable"] = info.fine && stratum_supported(*info.fine);
  if (!info.fine)
    j["note"] = "sub-split of " + std::string(coarse_name(info.coarse)) +
                " is undecidable at n=" + std::to_string(p.n);
  else if (!stratum_supported(*info.fine))
    j["note"] = "no isomorphism criterion for this stratum";
  emit(j);
  return 0;
}

int cmd_invariants(const std::string& path, const std::string& format) {
  const FirstClassParams p = load_first(path);
  const InvariantVector iv = invariant_vector(p);
  if (format == "text") {
    for (std::size_t i = 0; i < iv.components.size(); ++i)
      std::cout << "rho_" << iv.first_index() + static_cast<int>(i) << " = "
                << format_scalar(iv.components[i]) << "\n";
    return 0;
  }
  Json j;
  j["n"] = p.n;
  j["stratum"] = std::string(stratum_name(iv.stratum));
  Json indices = Json::array();
  Json comps = Json::array();
  for (std::size_t i = 0; i < iv.components.size(); ++i) {
    indices.push_back(iv.first_index() + static_cast<int>(i));
    comps.push_back(format_scalar(iv.components[i]));
  }
  j["indices"] = std::move(indices);
  j["components"] = std::move(comps);
  emit(j);
  return 0;
}

int cmd_canon(const std::string& path) {
  emit(params_to_json(canonicalize(load_first(path))));
  return 0;
}

int cmd_iso(const std::string& patha, const std::string& pathb, const std::string& format) {
  const FirstClassParams a = load_first(patha);
  const FirstClassParams b = load_first(pathb);
  const IsoDecision dec = decide_isomorphic(a, b);
  if (format == "text") {
    switch (dec.verdict) {
      case IsoVerdict::Yes:
        std::cout << "yes (A=" << format_scalar(dec.witness->A())
                  << ", B=" << format_scalar(dec.witness->B()) << ")\n";
        return 0;
      case IsoVerdict::No:
        std::cout << "no (" << dec.detail << ")\n";
        return 1;
      case IsoVerdict::Unsupported:
        std::cout << "unsupported (" << dec.detail << ")\n";
        return kExitUnsupported;
    }
  }
  Json j;
  switch (dec.verdict) {
    case IsoVerdict::Yes: {
      j["verdict"] = "yes";
      Json w;
      w["A"] = format_scalar(dec.witness->A());
      w["B"] = format_scalar(dec.witness->B());
      j["witness"] = std::move(w);
      j["detail"] = dec.detail;
      emit(j);
      return 0;
    }
    case IsoVerdict::No: {
      j["verdict"] = "no";
      if (dec.differing_index) {
        j["differing_index"] = *dec.differing_index;
        j["values"] = Json::array({format_scalar(dec.differing_values[0]),
                                   format_scalar(dec.differing_values[1])});
      }
      j["detail"] = dec.detail;
      emit(j);
      return 1;
    }
    case IsoVerdict::Unsupported:
      j["verdict"] = "unsupported";
      j["detail"] = dec.detail;
      emit(j);
      return kExitUnsupported;
  }
  return kExitInternal;
}

int cmd_solve(int n, const std::string& stratum, const std::vector<std::string>& targets) {
  const auto s = stratum_from_name(stratum);
  if (!s) throw data_error("unknown stratum '" + stratum + "'");
  std::vector<Scalar> values;
  values.reserve(targets.size());
  for (const auto& t : targets) values.push_back(parse_scalar(t));
  emit(params_to_json(realize_from_invariants(n, *s, values)));
  return 0;
}

int cmd_orbit(const std::string& path, int count, std::uint64_t seed) {
  const FirstClassParams p = load_first(path);
  RngState rng(seed);
  for (const auto& [g, moved] : orbit_samples(p, count, rng)) {
    Json j;
    j["A"] = format_scalar(g.A());
    j["B"] = format_scalar(g.B());
    j["algebra"] = params_to_json(moved);
    emit(j);
  }
  return 0;
}

int cmd_catalog(const std::string& path) {
  CatalogReport report{};
  if (path.empty() || path == "-") {
    report = run_catalog(std::cin, std::cout);
  } else {
    std::ifstream f(path);
    if (!f) throw data_error("cannot open '" + path + "'");
    report = run_catalog(f, std::cout);
  }
  Json j;
  j["classes"] = report.classes;
  j["records"] = report.records;
  j["unsupported"] = report.unsupported;
  std::cerr << j.dump() << "\n";
  return 0;
}

int cmd_verify(std::uint64_t seed, int trials, int nmax) {
  const auto results = run_selfcheck({seed, trials, nmax});
  int total = 0;
  int failed = 0;
  for (const auto& r : results) {
    Json j;
    j["suite"] = r.name;
    j["pass"] = r.pass;
    j["checks"] = r.checks;
    if (!r.pass) j["detail"] = r.detail;
    emit(j);
    total += r.checks;
    failed += r.pass ? 0 : 1;
  }
  Json summary;
  summary["suites"] = static_cast<int>(results.size());
  summary["failed"] = failed;
  summary["checks"] = total;
  summary["seed"] = seed;
  summary["trials"] = trials;
  summary["nmax"] = nmax;
  Json wrap;
  wrap["summary"] = std::move(summary);
  emit(wrap);
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for first-class filiform Leibniz algebras"};
  app.require_subcommand(1);
  int rc = 0;

  std::string table_path = "-";
  auto* table = app.add_subcommand("table", "print the nonzero structure constants");
  table->add_option("file", table_path, "algebra record (JSON file or '-')");
  // malformed table input exits 64
  table->callback([&] { rc = run_mapped([&] { return cmd_table(table_path); }, kExitUsage); });

  std::string classify_path = "-";
  std::string classify_format = "json";
  auto* classify = app.add_subcommand("classify", "stratum of a first-class algebra");
  classify->add_option("file", classify_path, "algebra record (JSON file or '-')");
  classify->add_option("--format", classify_format)->check(CLI::IsMember({"json", "text"}));
  classify->callback(
      [&] { rc = run_mapped([&] { return cmd_classify(classify_path, classify_format); }); });

  std::string inv_path = "-";
  std::string inv_format = "json";
  auto* inv = app.add_subcommand("invariants", "invariant vector of a first-class algebra");
  inv->add_option("file", inv_path, "algebra record (JSON file or '-')");
  inv->add_option("--format", inv_format)->check(CLI::IsMember({"json", "text"}));
  inv->callback([&] { rc = run_mapped([&] { return cmd_invariants(inv_path, inv_format); }); });

  std::string canon_path = "-";
  auto* canon = app.add_subcommand("canon", "canonical form of a first-class algebra");
  canon->add_option("file", canon_path, "algebra record (JSON file or '-')");
  canon->callback([&] { rc = run_mapped([&] { return cmd_canon(canon_path); }); });

  std::string iso_a, iso_b;
  std::string iso_format = "json";
  auto* iso = app.add_subcommand("iso", "decide isomorphism (exit 0 yes, 1 no, 2 unsupported)");
  iso->add_option("a", iso_a, "first algebra record")->required();
  iso->add_option("b", iso_b, "second algebra record")->required();
  iso->add_option("--format", iso_format)->check(CLI::IsMember({"json", "text"}));
  iso->callback([&] { rc = run_mapped([&] { return cmd_iso(iso_a, iso_b, iso_format); }); });

  int solve_n = 0;
  std::string solve_stratum;
  std::vector<std::string> solve_targets;
  auto* solve = app.add_subcommand("solve", "realize an algebra with prescribed invariants");
  solve->add_option("--n", solve_n, "parameter count index (dimension is n+1)")->required();
  solve->add_option("--stratum", solve_stratum, "U, U''1 or U''2")->required();
  solve->add_option("targets", solve_targets, "invariant components (scalar grammar)")
      ->required();
  solve->callback(
      [&] { rc = run_mapped([&] { return cmd_solve(solve_n, solve_stratum, solve_targets); }); });

  std::string orbit_path = "-";
  int orbit_count = 10;
  std::uint64_t orbit_seed = 0;
  auto* orbit = app.add_subcommand("orbit", "sample the isomorphism orbit");
  orbit->add_option("file", orbit_path, "algebra record (JSON file or '-')");
  orbit->add_option("--count", orbit_count, "number of samples")->check(CLI::NonNegativeNumber);
  orbit->add_option("--seed", orbit_seed, "deterministic seed");
  orbit->callback(
      [&] { rc = run_mapped([&] { return cmd_orbit(orbit_path, orbit_count, orbit_seed); }); });

  std::string catalog_path = "-";
  auto* catalog = app.add_subcommand("catalog", "deduplicate a JSONL stream by canonical key");
  catalog->add_option("file", catalog_path, "JSONL input (file or '-')");
  catalog->callback([&] { rc = run_mapped([&] { return cmd_catalog(catalog_path); }); });

  std::uint64_t verify_seed = 0;
  int verify_trials = 25;
  int verify_nmax = 8;
  auto* verify = app.add_subcommand("verify", "run the full cross-check battery");
  verify->add_option("--seed", verify_seed, "deterministic seed");
  verify->add_option("--trials", verify_trials, "samples per suite and n")
      ->check(CLI::PositiveNumber);
  verify->add_option("--nmax", verify_nmax, "largest n exercised")->check(CLI::Range(4, 16));
  verify->callback(
      [&] { rc = run_mapped([&] { return cmd_verify(verify_seed, verify_trials, verify_nmax); }); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  return rc;
}
