#include "shg/shg_format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

namespace shg {

ParseError::ParseError(std::size_t line, const std::string& reason)
    : Error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::optional<std::size_t> parse_count(std::string_view text) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

}  // namespace

SignedHypergraph parse_shg(std::string_view text) {
  std::optional<std::size_t> n;
  bool header = false;
  bool allow_empty = false;
  std::vector<Edge> edges;
  std::size_t line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (!header) {
      if (tokens.size() != 2 || tokens[0] != "shg") {
        throw ParseError(line_no, "expected header 'shg 1'");
      }
      if (tokens[1] != "1") throw ParseError(line_no, "unsupported format version");
      header = true;
      continue;
    }
    if (tokens[0] == "vertices") {
      if (n) throw ParseError(line_no, "duplicate vertices line");
      if (tokens.size() != 2) throw ParseError(line_no, "expected 'vertices N'");
      n = parse_count(tokens[1]);
      if (!n) throw ParseError(line_no, "bad vertex count '" + std::string(tokens[1]) + "'");
      continue;
    }
    if (tokens[0] == "edge") {
      if (!n) throw ParseError(line_no, "edge before vertices line");
      std::vector<Incidence> incs;
      std::set<Vertex> seen;
      for (std::size_t t = 1; t < tokens.size(); ++t) {
        const auto tok = tokens[t];
        const auto colon = tok.find(':');
        const auto id = colon == std::string_view::npos ? std::nullopt : parse_count(tok.substr(0, colon));
        const auto sign = colon == std::string_view::npos ? std::string_view{} : tok.substr(colon + 1);
        if (!id || (sign != "+" && sign != "-")) {
          throw ParseError(line_no, "bad incidence '" + std::string(tok) + "'");
        }
        if (*id == 0 || *id > *n) throw ParseError(line_no, "vertex id out of range");
        if (!seen.insert(*id - 1).second) throw ParseError(line_no, "duplicate vertex in edge");
        incs.push_back({*id - 1, sign == "+" ? 1 : -1});
      }
      if (incs.empty()) allow_empty = true;
      edges.emplace_back(std::move(incs));
      continue;
    }
    throw ParseError(line_no, "unknown directive '" + std::string(tokens[0]) + "'");
  }
  if (!header) throw ParseError(line_no, "expected header 'shg 1'");
  if (!n) throw ParseError(line_no, "missing vertices line");
  return SignedHypergraph(*n, std::move(edges), allow_empty);
}

std::string serialize_shg(const SignedHypergraph& h) {
  std::ostringstream out;
  out << "shg 1\nvertices " << h.num_vertices() << '\n';
  for (const Edge& e : h.edges()) {
    out << "edge";
    for (const auto& inc : e.incidences()) {
      out << ' ' << inc.vertex + 1 << ':' << (inc.sign > 0 ? '+' : '-');
    }
    out << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

SignedHypergraph read_shg_file(const std::string& path) { return parse_shg(read_text_file(path)); }

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, hash >>= 4) out[static_cast<std::size_t>(i)] = digits[hash & 0xf];
  return out;
}

}  // namespace shg
