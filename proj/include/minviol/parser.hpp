#pragma once

#include <stdexcept>
#include <string>

#include "minviol/formula.hpp"

namespace minviol {

struct ParseError : std::runtime_error {
  int line;
  int column;
  ParseError(const std::string& msg, int line_, int column_)
      : std::runtime_error(msg + " at " + std::to_string(line_) + ":" + std::to_string(column_)),
        line(line_),
        column(column_) {}
};

/// Parses the concrete formula grammar into canonical form.
///
/// Grammar: literals `true`/`false`; atoms `[A-Za-z_][A-Za-z0-9_]*`;
/// operators `!`, `&`, `|`, `->`, `X`, `U`, `F`, `G`; parentheses.
/// Precedence: unary > U > & > | > ->, with U and -> right-associative.
Formula parse_formula(const std::string& text);

}  // namespace minviol
