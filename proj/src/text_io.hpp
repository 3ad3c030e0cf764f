#pragma once
// Line-oriented reader shared by the relation, algebra and groupoid formats.

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "epistrict/errors.hpp"
#include "epistrict/relation.hpp"

namespace epistrict::detail {

class LineReader {
 public:
  explicit LineReader(std::istream& in) {
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
      ++no;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      lines_.emplace_back(no, line);
    }
  }

  bool done() const { return pos_ == lines_.size(); }
  const std::string& peek() const { return lines_.at(pos_).second; }
  std::string next() {
    if (done()) throw ParseError("unexpected end of input");
    return lines_[pos_++].second;
  }
  /// Line number of the most recently consumed line, for messages.
  std::size_t line_no() const { return pos_ == 0 ? 0 : lines_[pos_ - 1].first; }
  bool next_starts_with(const std::string& word) const {
    if (done()) return false;
    std::istringstream ss(peek());
    std::string w;
    ss >> w;
    return w == word;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(line_no()) + ": " + what);
  }

 private:
  std::vector<std::pair<std::size_t, std::string>> lines_;
  std::size_t pos_ = 0;
};

/// Parses `key=<unsigned>` tokens.
inline std::size_t parse_key(LineReader& r, const std::string& token, const std::string& key) {
  const std::string prefix = key + "=";
  if (token.rfind(prefix, 0) != 0) r.fail("expected " + prefix + "<n>, got '" + token + "'");
  const std::string digits = token.substr(prefix.size());
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    r.fail("bad number in '" + token + "'");
  }
  return std::stoul(digits);
}

/// Splits a line into unsigned integers; fails on anything else.
inline std::vector<std::size_t> parse_numbers(LineReader& r, const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::size_t> out;
  std::string tok;
  while (ss >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos) r.fail("expected an index, got '" + tok + "'");
    out.push_back(std::stoul(tok));
  }
  return out;
}

/// Reads a `REL` block; the pair lines run until the next keyword line.
Relation read_relation_block(LineReader& r);

}  // namespace epistrict::detail
