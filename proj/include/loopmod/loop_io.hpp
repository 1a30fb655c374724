#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "loopmod/error.hpp"
#include "loopmod/loop_table.hpp"

namespace loopmod {

namespace detail {

// Strips '#' comments and returns the next line that still has content.
inline bool next_content_line(std::istream& in, std::string& out) {
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) {
      out = line;
      return true;
    }
  }
  return false;
}

inline std::vector<int> parse_int_line(const std::string& line, const char* what) {
  std::istringstream in(line);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw Error(Errc::bad_file, std::string("bad ") + what + " token '" + tok + "'");
    }
  }
  return out;
}

} // namespace detail

/// Loop table text format: first line "n [identity]", then n lines of n
/// whitespace-separated entries. '#' starts a comment.
inline LoopTable read_loop(std::istream& in) {
  std::string line;
  if (!detail::next_content_line(in, line)) throw Error(Errc::bad_file, "empty loop file");
  const std::vector<int> header = detail::parse_int_line(line, "header");
  if (header.empty() || header.size() > 2)
    throw Error(Errc::bad_file, "header must be 'n' or 'n identity'");
  const int n = header[0];
  if (n < 1) throw Error(Errc::bad_file, "order must be positive");
  std::optional<int> identity_hint;
  if (header.size() == 2) identity_hint = header[1];

  std::vector<std::vector<int>> raw;
  raw.reserve(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    if (!detail::next_content_line(in, line))
      throw Error(Errc::bad_file, "expected " + std::to_string(n) + " table rows, got " +
                                      std::to_string(r));
    std::vector<int> row = detail::parse_int_line(line, "table");
    if (static_cast<int>(row.size()) != n)
      throw Error(Errc::bad_file, "row " + std::to_string(r) + " has " +
                                      std::to_string(row.size()) + " entries, expected " +
                                      std::to_string(n));
    raw.push_back(std::move(row));
  }
  return LoopTable::validate(raw, identity_hint);
}

inline LoopTable read_loop_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::bad_file, "cannot open loop file '" + path + "'");
  return read_loop(in);
}

/// Writer always emits the identity explicitly.
inline void write_loop(std::ostream& out, const LoopTable& loop) {
  out << loop.order() << ' ' << loop.identity() << '\n';
  for (int r = 0; r < loop.order(); ++r) {
    for (int c = 0; c < loop.order(); ++c) {
      if (c) out << ' ';
      out << loop.mul(r, c);
    }
    out << '\n';
  }
}

inline std::string to_text(const LoopTable& loop) {
  std::ostringstream out;
  write_loop(out, loop);
  return out.str();
}

} // namespace loopmod
