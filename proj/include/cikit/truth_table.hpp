#ifndef CIKIT_TRUTH_TABLE_HPP
#define CIKIT_TRUTH_TABLE_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cikit/update.hpp"

namespace cikit {

/// Structured failure when reading a truth-table document.
class TruthTableError : public std::runtime_error {
 public:
  enum class Kind { bad_header, oversize_arity, line_count, bad_hex };

  TruthTableError(Kind kind, const std::string& message);
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Truth-table document: header line `N=<arity>`, then 2^N lines; line e is
/// the hex encoding of f(state(e)) under the canonical encoding (cell 1 =
/// least-significant bit). write/parse round-trips bit-exactly.
std::string write_truth_table(const UpdateFunction& f);
UpdateFunction parse_truth_table(std::string_view text);

UpdateFunction read_truth_table_file(const std::string& path);
void write_truth_table_file(const std::string& path, const UpdateFunction& f);

}  // namespace cikit

#endif
