#ifndef POLYRING_TOOLS_EXPR_HPP
#define POLYRING_TOOLS_EXPR_HPP

#include <cstddef>
#include <string>

#include "polyring/numeric.hpp"
#include "polyring/ring.hpp"

namespace polyring::cli {

class ParseError : public DomainError {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : DomainError("at offset " + std::to_string(offset) + ": " + what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Grammar:
//   sum     := ['+'|'-'] term (('+'|'-') term)*
//   term    := [INT '*'] unary | INT
//   unary   := 'C' unary | 'B' unary | primary
//   primary := atom | prod(sum, sum) | join(sum, sum) | dual(sum) | '(' sum ')'
//   atom    := empty | pt | simplex(n) | cube(n) | cross(n) | polygon(m) | cell24
//            | word(<B/C string>) | lattice{<poset json>}
// A bare integer k stands for k times the unit of the ambient ring.
ring::FormalSum parse_expression(const std::string& text, ring::Ambient a = ring::Ambient::RP);

}  // namespace polyring::cli

#endif
