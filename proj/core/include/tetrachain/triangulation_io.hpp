#ifndef TETRACHAIN_TRIANGULATION_IO_HPP
#define TETRACHAIN_TRIANGULATION_IO_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "tetrachain/surface_map.hpp"

namespace tetrachain {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Line format:
//   V <vertex_count>
//   F <a> <b> <c>        one line per live face, FaceId order, a < b < c
// Blank lines and lines starting with '#' are ignored when reading.
// Reading assigns dense FaceIds in file order.
std::string to_text(const Triangulation& t);
Triangulation from_text(const std::string& text);

// JSON form: {"vertex_count": V, "faces": [[a,b,c], ...]}
std::string to_json(const Triangulation& t, int indent = -1);
Triangulation from_json(const std::string& json);

/// Dispatches on the first non-blank character: '{' means JSON.
Triangulation parse_triangulation(const std::string& text);

}  // namespace tetrachain

#endif  // TETRACHAIN_TRIANGULATION_IO_HPP
