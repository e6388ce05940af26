#pragma once

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "monoconn/constructions.hpp"
#include "monoconn/errors.hpp"
#include "monoconn/graph.hpp"

namespace monoconn {

// A parsed .ecg (complete) or .ecb (bipartite) file. Comments are the text
// after '#' on the lines before the header, kept verbatim.
struct ColouringFile {
  std::vector<std::string> comments;
  std::optional<ColouredCompleteGraph> complete;
  std::optional<ColouredBipartiteGraph> bipartite;

  // Value of a "# key value" comment line, if present.
  std::optional<std::string> meta(std::string_view key) const {
    for (const auto& c : comments) {
      std::string_view line = c;
      while (!line.empty() && line.front() == ' ') line.remove_prefix(1);
      if (line.size() > key.size() && line.substr(0, key.size()) == key && line[key.size()] == ' ')
        return std::string(line.substr(key.size() + 1));
    }
    return std::nullopt;
  }
};

namespace detail {

inline std::vector<long long> parse_ints(std::string_view line, std::size_t count, int line_no) {
  std::vector<long long> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    long long v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
    if (ec != std::errc() || (ptr != line.data() + line.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r'))
      throw ParseError("line " + std::to_string(line_no) + ": expected integers, got '" + std::string(line) + "'");
    out.push_back(v);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  if (out.size() != count)
    throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(count) + " integers, got " +
                     std::to_string(out.size()));
  return out;
}

}  // namespace detail

inline ColouringFile parse_colouring(std::string_view text) {
  std::vector<std::string_view> lines;
  for (std::size_t start = 0; start < text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  ColouringFile file;
  std::size_t at = 0;
  while (at < lines.size() && !lines[at].empty() && lines[at].front() == '#') {
    file.comments.emplace_back(lines[at].substr(1));
    ++at;
  }
  if (at >= lines.size()) throw ParseError("missing header line");
  std::string_view header = lines[at];
  if (!header.empty() && header.back() == '\r') header.remove_suffix(1);
  const bool bip = header == "ECB 1";
  if (header != "ECG 1" && !bip)
    throw ParseError("line " + std::to_string(at + 1) + ": expected header 'ECG 1' or 'ECB 1'");
  ++at;
  if (at >= lines.size()) throw ParseError("missing size line");
  const auto sizes = detail::parse_ints(lines[at], bip ? 3 : 2, static_cast<int>(at + 1));
  ++at;

  long long left = 0, right = 0, pairs = 0;
  const long long r = sizes.back();
  if (r < 1 || r > 255) throw ParseError("colour count " + std::to_string(r) + " outside 1..255");
  if (bip) {
    left = sizes[0];
    right = sizes[1];
    if (left < 1 || right < 1 || left * right > 100000000) throw ParseError("bad part sizes");
    file.bipartite.emplace(static_cast<int>(left), static_cast<int>(right), static_cast<int>(r));
    pairs = left * right;
  } else {
    left = right = sizes[0];
    if (left < 2 || left > 20000) throw ParseError("vertex count " + std::to_string(left) + " outside 2..20000");
    file.complete.emplace(static_cast<int>(left), static_cast<int>(r));
    pairs = left * (left - 1) / 2;
  }
  std::vector<bool> seen(static_cast<std::size_t>(bip ? left * right : left * left), false);
  long long count = 0;
  for (; at < lines.size(); ++at) {
    if (lines[at].empty() && at + 1 == lines.size()) break;  // final newline
    const int line_no = static_cast<int>(at + 1);
    if (!lines[at].empty() && lines[at].front() == '#')
      throw ParseError("line " + std::to_string(line_no) + ": comments are only allowed before the header");
    const auto e = detail::parse_ints(lines[at], 3, line_no);
    const long long u = e[0], v = e[1], c = e[2];
    if (c < 1 || c > r) throw ParseError("line " + std::to_string(line_no) + ": colour outside 1..r");
    std::size_t slot = 0;
    if (bip) {
      if (u < 0 || u >= left || v < 0 || v >= right)
        throw ParseError("line " + std::to_string(line_no) + ": need 0 <= i < m and 0 <= j < n");
      slot = static_cast<std::size_t>(u * right + v);
    } else {
      if (u < 0 || v <= u || v >= left) throw ParseError("line " + std::to_string(line_no) + ": need 0 <= u < v < n");
      slot = static_cast<std::size_t>(u * left + v);
    }
    if (seen[slot])
      throw ParseError("line " + std::to_string(line_no) + ": edge " + std::to_string(u) + " " + std::to_string(v) +
                       " listed twice");
    seen[slot] = true;
    ++count;
    if (bip)
      file.bipartite->set_colour(static_cast<int>(u), static_cast<int>(v), static_cast<Colour>(c));
    else
      file.complete->set_colour(static_cast<int>(u), static_cast<int>(v), static_cast<Colour>(c));
  }
  if (count != pairs)
    throw ParseError("expected " + std::to_string(pairs) + " edges, found " + std::to_string(count));
  return file;
}

// Canonical form: comments, header, sizes, edges in lexicographic order.
inline std::string serialise(const ColouringFile& file) {
  std::string out;
  for (const auto& c : file.comments) out += "#" + c + "\n";
  if (file.complete) {
    const auto& f = *file.complete;
    out += "ECG 1\n" + std::to_string(f.order()) + " " + std::to_string(f.colours()) + "\n";
    for (int u = 0; u < f.order(); ++u)
      for (int v = u + 1; v < f.order(); ++v)
        out += std::to_string(u) + " " + std::to_string(v) + " " + std::to_string(f.colour(u, v)) + "\n";
  } else if (file.bipartite) {
    const auto& b = *file.bipartite;
    out += "ECB 1\n" + std::to_string(b.left()) + " " + std::to_string(b.right()) + " " + std::to_string(b.colours()) +
           "\n";
    for (int i = 0; i < b.left(); ++i)
      for (int j = 0; j < b.right(); ++j)
        out += std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(b.colour(i, j)) + "\n";
  } else {
    throw PreconditionError("colouring file holds no graph");
  }
  return out;
}

inline ColouringFile to_file(const ConstructionReport& rep) {
  ColouringFile file;
  file.comments.push_back(" construction " + rep.kind);
  for (const auto& [name, value] : rep.parameters) file.comments.push_back(" param " + name + " " + std::to_string(value));
  file.comments.push_back(" claimedBound " + std::to_string(rep.claimed_bound));
  file.complete = rep.colouring;
  file.bipartite = rep.bipartite;
  return file;
}

inline ColouringFile read_colouring(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_colouring(buf.str());
}

}  // namespace monoconn
