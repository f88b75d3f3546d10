#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "mhorn/combinatorics.hpp"
#include "mhorn/errors.hpp"
#include "mhorn/io.hpp"

using namespace mhorn;

TEST_CASE("catalog round trip") {
  for (int n = 1; n <= 6; ++n) {
    const auto cat = enumerateCatalog(n);
    const auto text = catalogToJson(cat);
    const auto back = parseCatalog(text);
    CHECK(back.n == n);
    CHECK(back.triples == cat.triples);
    CHECK(catalogToJson(back) == text);
  }
  CHECK_THROWS_AS(parseCatalog("{"), ParseError);
  CHECK_THROWS_AS(parseCatalog(R"({"n": 2, "version": 99, "triples": []})"), ParseError);
  CHECK_THROWS(parseCatalog(R"({"n": 2, "version": 1, "triples": [{"r": 1, "I": [3], "J": [1], "K": [1]}]})"));
}

TEST_CASE("matrix round trip and accepted shapes") {
  std::mt19937_64 rng(51);
  for (int n = 1; n <= 5; ++n) {
    const auto m = testing::ginibre(n, rng);
    CHECK(parseMatrix(matrixToJson(m)) == m);
  }
  const auto flat = parseMatrix("[[1, 0], [0, 2], [3, 0], [4, -1]]");
  CHECK(flat(0, 1) == std::complex<double>(0, 2));
  CHECK(flat(1, 1) == std::complex<double>(4, -1));
  const auto real = parseMatrix("[[1, 2], [3, 4]]");
  CHECK(real(1, 0) == std::complex<double>(3, 0));
  CHECK_THROWS_AS(parseMatrix("[[1, 2], [3]]"), DimensionError);
  CHECK_THROWS_AS(parseMatrix("[[1, 0], [0, 2], [3, 0]]"), DimensionError);
  CHECK_THROWS_AS(parseMatrix("\"x\""), ParseError);
}

TEST_CASE("spectrum round trip and validation") {
  std::mt19937_64 rng(52);
  for (int n = 1; n <= 8; ++n) {
    const auto s = testing::randomSpectrum(n, rng, 0.0, 10.0, n % 3);
    CHECK(parseSpectrum(spectrumToJson(s)) == s);
  }
  CHECK_THROWS_AS(parseSpectrum("[1, 2]"), DomainError);
  CHECK_THROWS_AS(parseSpectrum("[1, -2]"), DomainError);
  CHECK_THROWS_AS(parseSpectrum("[]"), DomainError);
  CHECK_THROWS_AS(parseSpectrum("{\"a\": 1}"), ParseError);
}

TEST_CASE("step function round trip keeps exact breakpoints exact") {
  const auto f = parseStepFunction(R"({"breakpoints": ["0", "1/3", 0.75, 1], "values": [3, 2, 0]})");
  CHECK(f.breakpoints()[1].isExact());
  CHECK(*f.breakpoints()[1].exact() == Rational(1, 3));
  CHECK_FALSE(f.breakpoints()[2].isExact());
  CHECK(f.breakpoints()[3].isExact());
  const auto back = parseStepFunction(stepFunctionToJson(f));
  CHECK(stepFunctionToJson(back) == stepFunctionToJson(f));

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::randomStep(rng);
    const auto text = stepFunctionToJson(g);
    CHECK(stepFunctionToJson(parseStepFunction(text)) == text);
  }
  CHECK_THROWS_AS(parseStepFunction(R"({"breakpoints": ["0", "1"], "values": [1, 2]})"), DomainError);
  CHECK_THROWS_AS(parseStepFunction(R"({"breakpoints": ["0", "a/b"], "values": [1]})"), ParseError);
  CHECK_THROWS_AS(parseStepFunction(R"({"values": [1]})"), ParseError);
}
