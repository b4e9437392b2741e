// Line-oriented text format for LTI instances.
//
//   # comment
//   dim 2
//   matrix
//     1/3 0
//     0 2/3
//   control
//     vertices
//       -2 -1
//       2 1
//     rays
//     lines
//   source
//     0 0
//   target
//     vertices
//       4 0
//
// Several `control` blocks form a union. `source` defaults to the origin.

#pragma once

#include "ltireach/preprocess/system.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ltireach {

class ParseError : public std::invalid_argument {
public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_, column_;
};

LtiSystem parse_instance(std::string_view text);
std::string emit_instance(const LtiSystem& sys);

LtiSystem read_instance_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);
/// Hash of the emitted form, so comments and spacing do not matter.
std::string instance_hash(const LtiSystem& sys);

}  // namespace ltireach
