#include <doctest.h>

#include "filiform/algebra.hpp"
#include "filiform/oracle.hpp"

using namespace filiform;

namespace {

FirstClassParams sample_first() {
  return {4, {Scalar(1), Scalar(2)}, Scalar(3)};
}

int nonzero_count(const StructureTensor& t) {
  int count = 0;
  for (int i = 0; i < t.dim(); ++i)
    for (int j = 0; j < t.dim(); ++j)
      for (int k = 0; k < t.dim(); ++k)
        if (!t.at(i, j, k).is_zero()) ++count;
  return count;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(FirstClassParams(3, {Scalar(1)}, Scalar(0)), std::invalid_argument);
  CHECK_THROWS_AS(FirstClassParams(5, {Scalar(1)}, Scalar(0)), std::invalid_argument);
  CHECK_THROWS_AS(SecondClassParams(4, {}, Scalar(0)), std::invalid_argument);
}

TEST_CASE("first-class table at n=4") {
  const StructureTensor t = build_tensor_first(sample_first());
  CHECK(t.dim() == 5);
  CHECK(t.at(0, 0, 2) == Scalar(1));
  CHECK(t.at(1, 0, 2) == Scalar(1));
  CHECK(t.at(2, 0, 3) == Scalar(1));
  CHECK(t.at(3, 0, 4) == Scalar(1));
  CHECK(t.at(0, 1, 3) == Scalar(1));  // alpha3
  CHECK(t.at(0, 1, 4) == Scalar(3));  // theta, not alpha4
  CHECK(t.at(1, 1, 3) == Scalar(1));
  CHECK(t.at(1, 1, 4) == Scalar(2));  // alpha4
  CHECK(t.at(2, 1, 4) == Scalar(1));
  CHECK(nonzero_count(t) == 9);
}

TEST_CASE("zero-parameter first-class table") {
  const StructureTensor t = build_tensor_first({4, {Scalar(0), Scalar(0)}, Scalar(0)});
  CHECK(nonzero_count(t) == 4);  // gamma_00^2 plus the n-1 chain products
  CHECK(leibniz_defect(t).empty());
}

TEST_CASE("second-class table") {
  const StructureTensor t = build_tensor_second({4, {Scalar(1), Scalar(1)}, Scalar(2)});
  CHECK(t.at(1, 0, 2) == Scalar(0));  // no [e1,e0] product in this class
  CHECK(t.at(1, 1, 4) == Scalar(2));  // [e1,e1] = gamma e_n
  CHECK(t.at(0, 1, 3) == Scalar(1));
  CHECK(t.at(0, 1, 4) == Scalar(1));
  CHECK(leibniz_defect(t).empty());
  CHECK(is_filiform(t));

  // minimal table: only gamma_00^2 and the chain products survive
  const StructureTensor zero = build_tensor_second({4, {Scalar(0), Scalar(0)}, Scalar(0)});
  CHECK(nonzero_count(zero) == 3);
  CHECK(zero.at(0, 0, 2) == Scalar(1));
  CHECK(zero.at(2, 0, 3) == Scalar(1));
  CHECK(zero.at(3, 0, 4) == Scalar(1));
  CHECK(leibniz_defect(zero).empty());
}

TEST_CASE("leibniz_defect finds violations") {
  const StructureTensor zero(5);
  CHECK(leibniz_defect(zero).empty());

  StructureTensor broken = build_tensor_first(sample_first());
  CHECK(leibniz_defect(broken).empty());
  broken.at(0, 0, 2) = Scalar(0);
  const auto violations = leibniz_defect(broken);
  CHECK_FALSE(violations.empty());
  // the reported value is the actual defect of the quadruple
  const auto& v = violations.front();
  Scalar acc;
  for (int l = 0; l < broken.dim(); ++l) {
    acc += broken.at(v.j, v.k, l) * broken.at(v.i, l, v.m);
    acc -= broken.at(v.i, v.j, l) * broken.at(l, v.k, v.m);
    acc += broken.at(v.i, v.k, l) * broken.at(l, v.j, v.m);
  }
  CHECK(acc == v.value);
}

TEST_CASE("lower central series and filiform test") {
  const StructureTensor t = build_tensor_first(sample_first());
  CHECK(lower_central_dims(t) == std::vector<int>{5, 3, 2, 1, 0});
  CHECK(is_filiform(t));

  const StructureTensor zero(5);
  CHECK(lower_central_dims(zero) == std::vector<int>{5, 0});
  CHECK_FALSE(is_filiform(zero));

  // a non-nilpotent table stabilizes without a trailing zero: e1*e0 = e1
  StructureTensor stable(2);
  stable.at(1, 0, 1) = Scalar(1);
  CHECK(lower_central_dims(stable) == std::vector<int>{2, 1, 1});
}

TEST_CASE("random members of both classes are filiform Leibniz algebras") {
  RngState rng(3);
  for (int n = 4; n <= 10; ++n) {
    std::vector<int> expected{n + 1};
    for (int i = n - 1; i >= 0; --i) expected.push_back(i);
    for (int trial = 0; trial < 8; ++trial) {
      const StructureTensor t1 = build_tensor_first(random_first_params(rng, n));
      REQUIRE(leibniz_defect(t1).empty());
      REQUIRE(lower_central_dims(t1) == expected);
      REQUIRE(is_filiform(t1));
      const StructureTensor t2 = build_tensor_second(random_second_params(rng, n));
      REQUIRE(leibniz_defect(t2).empty());
      REQUIRE(is_filiform(t2));
    }
  }
}

TEST_CASE("params_from_tensor inverts build_tensor_first") {
  const FirstClassParams p = sample_first();
  CHECK(params_from_tensor(build_tensor_first(p)) == p);

  StructureTensor bad = build_tensor_first(p);
  bad.at(1, 0, 2) = Scalar(2);
  CHECK_THROWS_WITH_AS(params_from_tensor(bad), doctest::Contains("(1,0,2)"), shape_error);

  CHECK_THROWS_AS(params_from_tensor(StructureTensor(4)), shape_error);
  CHECK_THROWS_AS(params_from_tensor(build_tensor_second({5, {Scalar(1), Scalar(0), Scalar(0)}, Scalar(1)})),
                  shape_error);

  RngState rng(17);
  ScalarDist dist;
  dist.gaussian = true;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 4 + static_cast<int>(rng.below(7));
    const FirstClassParams q = random_first_params(rng, n, dist);
    REQUIRE(params_from_tensor(build_tensor_first(q)) == q);
  }
}
