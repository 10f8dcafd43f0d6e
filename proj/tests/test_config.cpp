#include <doctest.h>

#include <boltzkit/config.hpp>
#include <boltzkit/rational.hpp>

#include <array>
#include <stdexcept>
#include <string_view>

using boltzkit::Config;
using boltzkit::Rational;

TEST_CASE("config parses key value lines with comments") {
  Config cfg = Config::parse_text("# header\n"
                                  "gamma = 1/2\n"
                                  "n = 16   # grid\n"
                                  "\n"
                                  "scheme=cubic\n",
                                  "inline");
  CHECK(cfg.get_string("scheme") == "cubic");
  CHECK(cfg.get_int("n") == 16);
  CHECK(cfg.get_rational("gamma") == Rational(1, 2));
}

TEST_CASE("config rejects malformed lines with location") {
  CHECK_THROWS_WITH_AS(Config::parse_text("noequals\n", "f"),
                       doctest::Contains("f:1"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(Config::parse_text("a=1\nBad Key = 2\n", "f"),
                       doctest::Contains("f:2"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(Config::parse_text("a=1\na=2\n", "f"),
                       doctest::Contains("duplicate"), std::invalid_argument);
}

TEST_CASE("config typed getters validate their input") {
  Config cfg = Config::parse_text("x = 1.5\n"
                                  "flag = true\n"
                                  "count = 12\n"
                                  "word = abc\n"
                                  "inv = inf\n"
                                  "list = 1.0, 2.5, -3\n"
                                  "center = 0.5, 0, -1\n",
                                  "t");
  CHECK(cfg.get_double("x") == 1.5);
  CHECK(cfg.get_bool("flag"));
  CHECK(cfg.get_uint64("count") == 12);
  CHECK(cfg.get_reciprocal("inv") == Rational(0));
  CHECK(cfg.get_double_list("list") == std::vector<double>{1.0, 2.5, -3.0});
  auto c = cfg.get_vec3("center");
  CHECK(c.x == 0.5);
  CHECK(c.y == 0.0);
  CHECK(c.z == -1.0);

  CHECK_THROWS_AS(cfg.get_double("word"), std::invalid_argument);
  CHECK_THROWS_AS(cfg.get_int("x"), std::invalid_argument);
  CHECK_THROWS_AS(cfg.get_bool("count"), std::invalid_argument);
  CHECK_THROWS_AS(cfg.get_vec3("x"), std::invalid_argument);
  CHECK_THROWS_AS(cfg.get_string("missing"), std::invalid_argument);
}

TEST_CASE("config defaults apply only when key absent") {
  Config cfg = Config::parse_text("n = 24\n", "t");
  CHECK(cfg.get_int("n", 8) == 24);
  CHECK(cfg.get_int("m", 8) == 8);
  CHECK(cfg.get_double("tol", 0.5) == 0.5);
  CHECK(cfg.get_string("scheme", "linear") == "linear");
}

TEST_CASE("config validate_keys names the offender") {
  Config cfg = Config::parse_text("n = 24\nextents = 6\n", "t");
  constexpr std::array<std::string_view, 2> schema{"n", "extent"};
  CHECK_THROWS_WITH_AS(cfg.validate_keys(schema), doctest::Contains("extents"),
                       std::invalid_argument);
  Config ok = Config::parse_text("n = 24\nextent = 6\n", "t");
  CHECK_NOTHROW(ok.validate_keys(schema));
}

TEST_CASE("config hash is order independent and value sensitive") {
  Config a = Config::parse_text("a = 1\nb = 2\n", "t");
  Config b = Config::parse_text("b = 2\na = 1\n", "t");
  Config c = Config::parse_text("a = 1\nb = 3\n", "t");
  CHECK(a.hash() == b.hash());
  CHECK(a.hash() != c.hash());
  CHECK(a.hash_hex().size() == 16);
}
