#pragma once

#include <string>

#include "spin7/element.hpp"

namespace spin7 {

/// Parse "expr := term (('+'|'-') term)*; term := factor (('*'|'/') factor)*;
/// factor := INT | q[^k] | d[^k] | [m] | U<i>/K<i>/H<i> | '(' expr ')'".
/// Division is only defined between scalar subexpressions. Printing an
/// element and reparsing it returns an equal element.
AlgElement parse(const std::string& text, int n);

}  // namespace spin7
