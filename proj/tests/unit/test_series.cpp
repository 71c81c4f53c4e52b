#include "amifmds/errors.hpp"
#include "amifmds/series.hpp"

#include <doctest.h>

#include <cmath>

using namespace amifmds;

TEST_CASE("standardize three values") {
  SeriesTable t;
  t.names = {"a", "b"};
  t.values.resize(3, 2);
  t.values << 1, 10, 2, 20, 3, 60;
  const auto s = standardize(t);
  CHECK(s.values(0, 0) == doctest::Approx(-1.224744871391589).epsilon(1e-12));
  CHECK(s.values(1, 0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(s.values(2, 0) == doctest::Approx(1.224744871391589).epsilon(1e-12));
  for (Eigen::Index c = 0; c < 2; ++c) {
    const auto col = s.values.col(c);
    CHECK(std::abs(col.mean()) < 1e-12);
    CHECK((col.array() - col.mean()).square().mean() == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("standardize rejects a constant column by name") {
  SeriesTable t;
  t.names = {"flat", "ok"};
  t.values.resize(3, 2);
  t.values << 5, 1, 5, 2, 5, 3;
  try {
    standardize(t);
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("flat") != std::string::npos);
  }
}

TEST_CASE("parse_csv reads names and values") {
  const auto r = parse_csv("a,b,c\n1,2,3\n4,5,6\n", true);
  CHECK(r.table.names == std::vector<std::string>{"a", "b", "c"});
  CHECK(r.table.length() == 2);
  CHECK(r.table.values(1, 2) == 6.0);
  CHECK(r.excluded.empty());
}

TEST_CASE("parse_csv drops incomplete columns and reports them") {
  const auto r = parse_csv("a,b,c\n1,,3\n4,5,6\n7,8,9\n", true);
  CHECK(r.table.names == std::vector<std::string>{"a", "c"});
  REQUIRE(r.excluded.size() == 1);
  CHECK(r.excluded[0].name == "b");
  CHECK(format_exclusion(r.excluded[0]).rfind("excluded: b: ", 0) == 0);
}

TEST_CASE("parse_csv error cases") {
  CHECK_THROWS_AS(parse_csv("a,b\n", true), DataError);
  CHECK_THROWS_AS(parse_csv("a,b\n1,2\n3\n", true), DataError);
  CHECK_THROWS_AS(parse_csv("a,b\n1,\n3,4\n", true), DataError);  // one usable column left
  CHECK_THROWS_AS(parse_csv("a,b,c\n1,,2\n3,4,5\n", false), DataError);
  CHECK_THROWS_AS(parse_csv("a,a\n1,2\n3,4\n", true), DataError);
}

TEST_CASE("format_csv round trips exactly") {
  SeriesTable t;
  t.names = {"x1", "y1"};
  t.values.resize(3, 2);
  t.values << 0.1, 1.0 / 3.0, -2.5e-300, 7.0, 123456789.123456789, -0.0;
  const auto back = parse_csv(format_csv(t), false).table;
  CHECK(back.names == t.names);
  CHECK(back.values == t.values);
}
