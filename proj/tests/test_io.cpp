#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "swtomo/csv.hpp"
#include "swtomo/matrix_io.hpp"
#include "swtomo/random_matrices.hpp"
#include "swtomo/rng.hpp"
#include "swtomo/schur_blocks.hpp"

using namespace swt;

TEST_CASE("matrix round trip and deterministic bytes") {
  Rng rng(1001);
  CMat m = ginibre(5, rng);
  std::ostringstream os1, os2;
  write_matrix(m, os1);
  write_matrix(m, os2);
  CHECK(os1.str() == os2.str());
  CHECK(os1.str().size() == 8 + 16 + 5 * 5 * 16);

  std::istringstream is(os1.str());
  CMat back = read_matrix(is);
  CHECK((back - m).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("matrix reader rejects corrupted input") {
  std::istringstream bad_magic("XXXXXXXXgarbage");
  CHECK_THROWS_AS(read_matrix(bad_magic), std::runtime_error);

  Rng rng(1003);
  CMat m = ginibre(3, rng);
  std::ostringstream os;
  write_matrix(m, os);
  std::string truncated = os.str().substr(0, os.str().size() - 8);
  std::istringstream is(truncated);
  CHECK_THROWS_AS(read_matrix(is), std::runtime_error);
}

TEST_CASE("schur blocks survive a golden-file round trip") {
  auto cache = SchurCache::get(2, 3);
  const SchurBlock& block = cache->blocks()[1];  // (2,1)
  std::ostringstream os;
  write_matrix(block.pi.cast<Complex>(), os);
  std::istringstream is(os.str());
  CMat back = read_matrix(is);
  CHECK((back.real() - block.pi).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("csv formatting rules") {
  CHECK(CsvWriter::quote("plain") == "plain");
  CHECK(CsvWriter::quote("a,b") == "\"a,b\"");
  CHECK(CsvWriter::quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(CsvWriter::format(CsvValue(std::string("x,y"))) == "\"x,y\"");
  CHECK(CsvWriter::format(CsvValue(42ll)) == "42");
  CHECK(CsvWriter::format(CsvValue(0.75)) == "0.75");
  CHECK(CsvWriter::format(CsvValue(1.0 / 3.0)) == "0.333333333333");
}

TEST_CASE("csv rows are deterministic and parse back") {
  std::ostringstream os1, os2;
  CsvRow row = {std::string("metric,with comma"), 7ll, 0.123456789012345};
  CsvWriter(os1).write_row(row);
  CsvWriter(os2).write_row(row);
  CHECK(os1.str() == os2.str());

  std::string line = os1.str();
  line.pop_back();  // strip newline
  auto fields = parse_csv_line(line);
  REQUIRE(fields.size() == 3);
  CHECK(fields[0] == "metric,with comma");
  CHECK(fields[1] == "7");
  CHECK(std::stod(fields[2]) == doctest::Approx(0.123456789012345).epsilon(1e-11));
}
