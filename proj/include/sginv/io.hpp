#pragma once

#include "sginv/diagram.hpp"

#include <map>
#include <string>

namespace sginv {

// Syntax or schema problem in a diagram document.
class ParseError : public DiagramError {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

struct DiagramDocument {
  Diagram diagram;
  std::map<std::string, long long> weights;  // keyed by derived edge name
};

// Parses and rejects any structural violation.
DiagramDocument parse_document(const std::string& text);
// Parses syntax and schema only; structure is left to validate().
DiagramDocument parse_document_unchecked(const std::string& text);
Diagram parse_diagram(const std::string& text);

std::string serialize(const DiagramDocument& doc);
std::string serialize(const Diagram& d);

std::string read_file(const std::string& path);

}  // namespace sginv
