#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "fixtures.hpp"
#include "pqgroup/cayley_io.hpp"
#include "pqgroup/error.hpp"

namespace pqgroup {
namespace {

std::string parse_error(std::string_view text) {
  try {
    parse_cayley(text);
  } catch (const GroupError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
    return e.what();
  }
  ADD_FAILURE() << "parsed: " << text;
  return {};
}

TEST(CayleyIo, ParsesWithComments) {
  const auto g = parse_cayley("# Klein\n4\n# rows follow\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n");
  EXPECT_EQ(*g, *fixtures::klein());
}

TEST(CayleyIo, WriteFormatIsExact) {
  EXPECT_EQ(to_cayley_string(*cyclic_group(3)), "3\n0 1 2\n1 2 0\n2 0 1\n");
  EXPECT_EQ(to_cayley_string(*cyclic_group(1), "trivial"), "# trivial\n1\n0\n");
}

TEST(CayleyIo, RoundTripCorpus) {
  for (const auto& [name, g] : fixtures::corpus()) {
    EXPECT_EQ(*parse_cayley(to_cayley_string(*g, name)), *g) << name;
  }
  for (std::size_t n = 1; n <= 40; ++n) {
    const auto g = cyclic_group(n);
    EXPECT_EQ(*parse_cayley(to_cayley_string(*g)), *g);
  }
}

TEST(CayleyIo, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "pqgroup_io_test.cayley";
  write_cayley_file(path, *fixtures::s3(), "S3");
  EXPECT_EQ(*read_cayley_file(path), *fixtures::s3());
  std::filesystem::remove(path);
}

TEST(CayleyIo, MissingTrailingNewline) { EXPECT_NE(parse_error("1\n0").find("newline"), std::string::npos); }

TEST(CayleyIo, ErrorsCarryLineNumbers) {
  EXPECT_NE(parse_error("2\n0 1\n1 0 1\n").find("line 3"), std::string::npos);
  EXPECT_NE(parse_error("2\n0 1\n1 2\n").find("line 3"), std::string::npos);
  EXPECT_NE(parse_error("x\n").find("line 1"), std::string::npos);
  EXPECT_NE(parse_error("# c\n2\n0 1\n").find("line"), std::string::npos);
  EXPECT_NE(parse_error("2\n0 1\n1 0\n5\n").find("line 4"), std::string::npos);
}

TEST(CayleyIo, EmptyInput) { parse_error(""); }

TEST(CayleyIo, MalformedTokens) {
  parse_error("2\n0 1\n1 -0\n");
  parse_error("2\n0  1\n1 0\n");
  parse_error("2\n0 1 \n1 0\n");
  parse_error("0\n");
}

TEST(CayleyIo, GroupAxiomFailuresKeepTheirKind) {
  try {
    parse_cayley("2\n0 1\n1 1\n");
    FAIL();
  } catch (const GroupError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotLatin);
  }
}

TEST(CayleyIo, MissingFile) {
  try {
    read_cayley_file("/nonexistent/dir/x.cayley");
    FAIL();
  } catch (const GroupError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
  }
}

}  // namespace
}  // namespace pqgroup
