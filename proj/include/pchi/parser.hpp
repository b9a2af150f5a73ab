// Textual format for ChiSpec.
//
//   spec     := [prefix] cycle [bound]
//   prefix   := "prefix" "[" natlist "]"
//   cycle    := "periodic" "[" natlist "]"
//   bound    := "bound" "=" nat
//   natlist  := nat ("," nat)*
//
// Whitespace between tokens is free, "#" comments to end of line, naturals
// are unsigned decimal of any length (leading zeros are normalized away).

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "pchi/series.hpp"

namespace pchi {

class ParseError : public std::runtime_error {
  public:
    ParseError(int line, int column, std::string detail)
        : std::runtime_error("line " + std::to_string(line) + ", col " +
                             std::to_string(column) + ": " + detail),
          line_(line),
          column_(column),
          detail_(std::move(detail)) {}

    int line() const { return line_; }      // 1-based
    int column() const { return column_; }  // 1-based
    const std::string& detail() const { return detail_; }

  private:
    int line_;
    int column_;
    std::string detail_;
};

// Never aborts: every malformed input surfaces as ParseError with position.
ChiSpec parse_spec(std::string_view text);

// Canonical one-line form; parse_spec(render_spec(s)) == s field for field.
std::string render_spec(const ChiSpec& spec);

}  // namespace pchi
