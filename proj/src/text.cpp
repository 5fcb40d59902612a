#include "monadlab/text.hpp"

#include <charconv>

#include "monadlab/field.hpp"

namespace monadlab {

namespace text {

std::optional<std::string> LineReader::next() {
  std::string line;
  while (std::getline(in_, line)) {
    ++line_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.starts_with('#')) continue;
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    return line;
  }
  return std::nullopt;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::map<std::string, std::string> parse_header(std::string_view line, std::string_view keyword,
                                                const std::vector<std::string>& keys, std::size_t line_no) {
  auto tokens = split(line);
  if (tokens.empty() || tokens[0] != keyword)
    throw ParseError("expected '" + std::string(keyword) + "' header", line_no);
  if (tokens.size() != keys.size() + 1)
    throw ParseError("'" + std::string(keyword) + "' header needs exactly " + std::to_string(keys.size()) + " fields",
                     line_no);
  std::map<std::string, std::string> values;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    auto tok = tokens[i + 1];
    auto eq = tok.find('=');
    if (eq == std::string_view::npos || tok.substr(0, eq) != keys[i])
      throw ParseError("expected '" + keys[i] + "=' in header", line_no);
    values[keys[i]] = std::string(tok.substr(eq + 1));
  }
  return values;
}

long parse_count(const std::string& text, std::size_t line_no) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || v < 0 ||
      (text.size() > 1 && text.front() == '0'))
    throw ParseError("bad count '" + text + "'", line_no);
  return v;
}

}  // namespace text

}  // namespace monadlab
