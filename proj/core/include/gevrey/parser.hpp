#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gevrey/difference.hpp"
#include "gevrey/recurrence.hpp"
#include "gevrey/theta.hpp"
#include "gevrey/weyl.hpp"

namespace gevrey {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

enum class SourceKind { DiffOp, ThetaOp, DifferenceOp, Recurrence, RationalSequence };

struct SourceExpr {
  std::string text;
  SourceKind kind;
};

using ParsedOperator = std::variant<DiffOp, ThetaOp, DifferenceOp>;

// Kind is inferred: Delta or x selects the difference ring, T without D a
// theta operator, anything else an operator in z and D. Results are normalized.
ParsedOperator parse_operator(std::string_view text);
// Accepts D- or T-expressions and returns the operator in z and D.
DiffOp parse_diffop(std::string_view text);
// As written, without normalization.
DiffOp parse_diffop_exact(std::string_view text);
DifferenceOp parse_difference_op(std::string_view text);
Recurrence parse_recurrence(std::string_view text);
// Comma- or whitespace-separated rationals.
std::vector<Rat> parse_rational_sequence(std::string_view text);

SourceKind kind_of(const ParsedOperator& op);
std::string serialize(const ParsedOperator& op);

}  // namespace gevrey
