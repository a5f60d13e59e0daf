#include "cikit/truth_table.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace cikit {

namespace {

// Splits off the next line; returns false at end of input. Accepts a missing
// trailing newline on the last line.
bool next_line(std::string_view& text, std::string_view& line) {
  if (text.empty()) return false;
  const std::size_t pos = text.find('\n');
  if (pos == std::string_view::npos) {
    line = text;
    text = {};
  } else {
    line = text.substr(0, pos);
    text.remove_prefix(pos + 1);
  }
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return true;
}

}  // namespace

TruthTableError::TruthTableError(Kind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

std::string write_truth_table(const UpdateFunction& f) {
  std::ostringstream out;
  out << "N=" << f.arity() << '\n';
  for (std::uint32_t e = 0; e < f.table().size(); ++e)
    out << StateVector::from_encoding(f.arity(), f.image_encoded(e)).to_hex() << '\n';
  return out.str();
}

UpdateFunction parse_truth_table(std::string_view text) {
  std::string_view line;
  if (!next_line(text, line) || line.substr(0, 2) != "N=")
    throw TruthTableError(TruthTableError::Kind::bad_header,
                          "truth table: first line must be N=<arity>");
  int arity = 0;
  const char* begin = line.data() + 2;
  const char* end = line.data() + line.size();
  const auto [ptr, ec] = std::from_chars(begin, end, arity);
  if (ec != std::errc{} || ptr != end || arity < 1)
    throw TruthTableError(TruthTableError::Kind::bad_header,
                          "truth table: malformed arity in header");
  if (arity > UpdateFunction::kMaxArity)
    throw TruthTableError(TruthTableError::Kind::oversize_arity,
                          "truth table: arity " + std::to_string(arity) +
                              " exceeds explicit-table limit " +
                              std::to_string(UpdateFunction::kMaxArity));

  const std::size_t want = std::size_t{1} << arity;
  std::vector<std::uint32_t> table;
  table.reserve(want);
  while (next_line(text, line)) {
    if (line.empty() && text.empty() && table.size() == want) break;  // trailing newline
    if (table.size() == want)
      throw TruthTableError(TruthTableError::Kind::line_count,
                            "truth table: more than " + std::to_string(want) + " entries");
    try {
      table.push_back(
          static_cast<std::uint32_t>(StateVector::from_hex(arity, line).encoding()));
    } catch (const std::invalid_argument& e) {
      throw TruthTableError(TruthTableError::Kind::bad_hex,
                            "truth table: entry " + std::to_string(table.size()) + ": " +
                                e.what());
    }
  }
  if (table.size() != want)
    throw TruthTableError(TruthTableError::Kind::line_count,
                          "truth table: expected " + std::to_string(want) + " entries, found " +
                              std::to_string(table.size()));
  return UpdateFunction(arity, std::move(table));
}

UpdateFunction read_truth_table_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open truth table file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_truth_table(buf.str());
}

void write_truth_table_file(const std::string& path, const UpdateFunction& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open file for writing: " + path);
  out << write_truth_table(f);
  if (!out) throw std::runtime_error("failed writing truth table to " + path);
}

}  // namespace cikit
