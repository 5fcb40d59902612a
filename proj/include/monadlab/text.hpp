#pragma once

// Shared line-oriented reader for the matrix and monad text formats.

#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace monadlab::text {

/// Yields non-comment lines. Lines beginning with `#` and blank lines are skipped.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}
  std::optional<std::string> next();
  std::size_t line_number() const noexcept { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

std::vector<std::string_view> split(std::string_view line);

/// Parses `<keyword> k1=v1 k2=v2 ...` requiring exactly the keys in `keys`, in order.
std::map<std::string, std::string> parse_header(std::string_view line, std::string_view keyword,
                                                const std::vector<std::string>& keys, std::size_t line_no);

/// Strict non-negative decimal used for header counts.
long parse_count(const std::string& text, std::size_t line_no);

}  // namespace monadlab::text
