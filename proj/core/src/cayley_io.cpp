#include "pqgroup/cayley_io.hpp"

#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include "pqgroup/error.hpp"

namespace pqgroup {
namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  fail(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

std::vector<std::size_t> parse_numbers(std::string_view text, std::size_t line_no) {
  // exactly one space between entries, none leading or trailing
  std::vector<std::size_t> out;
  if (text.empty()) parse_error(line_no, "empty line");
  const char* pos = text.data();
  const char* last = text.data() + text.size();
  while (true) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(pos, last, value);
    if (ptr == pos) parse_error(line_no, "expected a decimal index");
    if (ec != std::errc()) parse_error(line_no, "index out of range");
    out.push_back(value);
    if (ptr == last) break;
    if (*ptr != ' ') parse_error(line_no, std::string("unexpected character '") + *ptr + "'");
    pos = ptr + 1;
    if (pos == last) parse_error(line_no, "trailing space");
  }
  return out;
}

}  // namespace

GroupPtr parse_cayley(std::string_view text) {
  if (text.empty() || text.back() != '\n') {
    std::size_t lines = 1;
    for (char c : text) lines += c == '\n' ? 1 : 0;
    parse_error(lines, "missing trailing newline");
  }

  std::size_t order = 0;
  bool have_order = false;
  std::vector<Index> table;
  std::size_t rows = 0;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.front() == '#') continue;

    const auto numbers = parse_numbers(line, line_no);
    if (!have_order) {
      if (numbers.size() != 1) parse_error(line_no, "expected the group order");
      order = numbers.front();
      if (order == 0) parse_error(line_no, "order must be positive");
      if (order > kMaxOrder) parse_error(line_no, "order exceeds cap " + std::to_string(kMaxOrder));
      have_order = true;
      table.reserve(order * order);
      continue;
    }
    if (rows == order) parse_error(line_no, "unexpected extra row");
    if (numbers.size() != order) {
      parse_error(line_no, "expected " + std::to_string(order) + " entries, found " + std::to_string(numbers.size()));
    }
    for (std::size_t v : numbers) {
      if (v >= order) parse_error(line_no, "entry " + std::to_string(v) + " out of range");
      table.push_back(static_cast<Index>(v));
    }
    ++rows;
  }
  if (!have_order) parse_error(line_no, "missing group order");
  if (rows != order) parse_error(line_no, "expected " + std::to_string(order) + " rows, found " + std::to_string(rows));
  return FiniteGroup::from_table(order, std::move(table));
}

GroupPtr read_cayley(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_cayley(text);
}

GroupPtr read_cayley_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Parse, "cannot open " + path.string());
  return read_cayley(in);
}

void write_cayley(std::ostream& out, const FiniteGroup& g, std::string_view comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  const std::size_t n = g.order();
  out << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = g.row(static_cast<Index>(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (j > 0) out << ' ';
      out << r[j];
    }
    out << '\n';
  }
}

std::string to_cayley_string(const FiniteGroup& g, std::string_view comment) {
  std::ostringstream os;
  write_cayley(os, g, comment);
  return os.str();
}

void write_cayley_file(const std::filesystem::path& path, const FiniteGroup& g, std::string_view comment) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorKind::InvalidArgument, "cannot write " + path.string());
  write_cayley(out, g, comment);
}

}  // namespace pqgroup
