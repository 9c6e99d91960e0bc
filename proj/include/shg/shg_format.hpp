#ifndef SHG_SHG_FORMAT_HPP
#define SHG_SHG_FORMAT_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include "shg/hypergraph.hpp"

namespace shg {

/// Text format:
///   shg 1
///   vertices N
///   edge 1:+ 2:- 3:+
/// Vertex ids are 1-based, '#' starts a comment line, blank lines are
/// ignored. A bare `edge` line is an empty edge and marks the hypergraph as
/// allowing empty edges.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& reason);
  std::size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  std::size_t line_;
  std::string reason_;
};

SignedHypergraph parse_shg(std::string_view text);
std::string serialize_shg(const SignedHypergraph& h);

std::string read_text_file(const std::string& path);
SignedHypergraph read_shg_file(const std::string& path);

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

}  // namespace shg

#endif  // SHG_SHG_FORMAT_HPP
