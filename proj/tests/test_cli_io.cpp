#include <doctest.h>

#include <sstream>

#include "filiform/catalog.hpp"
#include "filiform/json_io.hpp"
#include "filiform/oracle.hpp"

using namespace filiform;

namespace {

Scalar q(long long num, long long den = 1) { return Scalar(Rational(num, den)); }

}  // namespace

TEST_CASE("algebra records round-trip") {
  const std::string first = R"({"n": 4, "class": "first", "alpha": ["1","2"], "theta": "3"})";
  const AlgebraRecord r1 = record_from_string(first);
  REQUIRE(std::holds_alternative<FirstClassParams>(r1));
  const auto& p = std::get<FirstClassParams>(r1);
  CHECK(p.n == 4);
  CHECK(p.a(3) == q(1));
  CHECK(p.theta == q(3));
  CHECK(record_to_json(r1).dump() ==
        R"({"n":4,"class":"first","alpha":["1","2"],"theta":"3"})");

  const std::string second = R"({"n": 4, "class": "second", "beta": ["1","1"], "gamma": "2"})";
  const AlgebraRecord r2 = record_from_string(second);
  REQUIRE(std::holds_alternative<SecondClassParams>(r2));
  CHECK(std::get<SecondClassParams>(r2).gamma == q(2));

  // integer scalars are tolerated on input
  const AlgebraRecord r3 =
      record_from_string(R"({"n": 4, "class": "first", "alpha": [1, -2], "theta": 0})");
  CHECK(std::get<FirstClassParams>(r3).a(4) == q(-2));
}

TEST_CASE("record errors") {
  CHECK_THROWS_AS(record_from_string("not json"), data_error);
  CHECK_THROWS_AS(record_from_string(R"({"class":"first"})"), data_error);
  CHECK_THROWS_AS(record_from_string(R"({"n":4,"class":"third","alpha":[],"theta":"0"})"),
                  data_error);
  CHECK_THROWS_AS(record_from_string(R"({"n":4,"class":"first","alpha":["1"],"theta":"0"})"),
                  data_error);  // wrong alpha length
  CHECK_THROWS_AS(
      record_from_string(R"({"n":4,"class":"first","alpha":["1","1/0"],"theta":"0"})"),
      data_error);
  CHECK_THROWS_AS(
      record_from_string(R"({"n":4,"class":"first","alpha":["1",2.5],"theta":"0"})"),
      data_error);
}

namespace {

std::string catalog_output(const std::string& input, CatalogReport* report = nullptr) {
  std::istringstream in(input);
  std::ostringstream out;
  const CatalogReport r = run_catalog(in, out);
  if (report) *report = r;
  return out.str();
}

std::string record_line(const FirstClassParams& p) {
  return params_to_json(p).dump() + "\n";
}

}  // namespace

TEST_CASE("catalog merges orbit samples into one class") {
  const FirstClassParams p(4, {q(1), q(2)}, q(3));
  RngState rng(71);
  std::string input = record_line(p);
  for (const auto& [g, moved] : orbit_samples(p, 50, rng)) {
    if (rng.below(2) == 0) {  // both bare records and orbit-wrapped lines merge
      Json wrapped;
      wrapped["A"] = format_scalar(g.A());
      wrapped["B"] = format_scalar(g.B());
      wrapped["algebra"] = params_to_json(moved);
      input += wrapped.dump() + "\n";
    } else {
      input += record_line(moved);
    }
  }

  CatalogReport report{};
  const std::string out = catalog_output(input, &report);
  CHECK(report.classes == 1);
  CHECK(report.records == 51);
  CHECK(report.unsupported == 0);

  const Json line = Json::parse(out.substr(0, out.find('\n')));
  CHECK(line["members"] == 51);
  CHECK(line["key"]["stratum"] == "U");
  CHECK(line["key"]["components"] == Json::array({"1/4"}));
  CHECK(line["representative"]["alpha"] == Json::array({"1", "0"}));
  CHECK(line["representative"]["theta"] == "1/4");
}

TEST_CASE("catalog separates distinct invariants and flags undecided records") {
  const FirstClassParams a(4, {q(1), q(2)}, q(3));
  const FirstClassParams b(4, {q(1), q(2)}, q(4));
  const FirstClassParams residual(4, {q(0), q(0)}, q(1));
  std::string input = record_line(a) + record_line(b) + record_line(residual);
  input += R"({"n":4,"class":"second","beta":["1","1"],"gamma":"2"})" "\n";

  CatalogReport report{};
  const std::string out = catalog_output(input, &report);
  CHECK(report.classes == 2);
  CHECK(report.records == 4);
  CHECK(report.unsupported == 2);

  std::istringstream lines(out);
  std::string line;
  int unsupported_lines = 0;
  int class_lines = 0;
  while (std::getline(lines, line)) {
    const Json j = Json::parse(line);
    if (j.contains("unsupported")) {
      ++unsupported_lines;
      CHECK(j["record"].is_object());
      CHECK(j["reason"].is_string());
    } else {
      ++class_lines;
      CHECK(j["members"] == 1);
    }
  }
  CHECK(class_lines == 2);
  CHECK(unsupported_lines == 2);
}

TEST_CASE("catalog edge cases") {
  CatalogReport report{};
  CHECK(catalog_output("", &report).empty());
  CHECK(report.classes == 0);
  CHECK(report.records == 0);

  CHECK(catalog_output("\n  \n").empty());

  const std::string mixed = record_line(FirstClassParams(4, {q(1), q(2)}, q(3))) +
                            record_line(FirstClassParams(5, {q(1), q(2), q(0)}, q(3)));
  CHECK_THROWS_WITH_AS(catalog_output(mixed), doctest::Contains("mixed n"), data_error);

  CHECK_THROWS_WITH_AS(catalog_output("{broken\n"), doctest::Contains("line 1"), data_error);
}
