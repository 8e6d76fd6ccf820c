/*
 * Copyright 2026 The pqcalc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef PQCALC_EXPR_HPP
#define PQCALC_EXPR_HPP

#include <memory>
#include <string>
#include <vector>

#include "pqcalc/scalar.hpp"

namespace pqcalc {

/// Expression DSL over rational/decimal literals, free identifiers,
/// arithmetic (+ - * / and ^ with an integer exponent, unary minus at the
/// atom level), and the library calls listed by call_signatures().
///
/// Grammar:
///   expr    := term (("+" | "-") term)*
///   term    := factor (("*" | "/") factor)*
///   factor  := atom ["^" int]
///   atom    := "-" atom | number | name | call | "(" expr ")"
///   call    := name "(" slots ")" | name "[" slots "]"
///   number  := int ["/" int] | decimal
///   doublet := "(" expr "," expr ")"
/// Slots are ";"-separated; entries within a slot are ","-separated; list
/// slots carry their own square brackets.  Whitespace is insignificant.
/// A quotient of two integer literals is a rational literal, so "3/4"
/// parses (and evaluates) exactly.

enum class ExprKind { kNumber, kIdentifier, kNegate, kBinary, kPower, kCall };
enum class BinaryOp { kAdd, kSub, kMul, kDiv };

/// How one ";"-separated argument slot of a call is shaped.
enum class SlotKind {
  kScalar,       // a single expression
  kScalarPair,   // exactly two comma-separated expressions, e.g. "p,q"
  kDoublet,      // a parenthesized pair "(a,b)"
  kScalarList,   // "[e1,...,ek]", possibly empty
  kDoubletList,  // "[(a1,b1),...,(ak,bk)]", possibly empty
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct ExprDoublet {
  ExprPtr a;
  ExprPtr b;
};

struct SlotValue {
  SlotKind kind = SlotKind::kScalar;
  std::vector<ExprPtr> entries;       // scalar-shaped kinds
  std::vector<ExprDoublet> doublets;  // doublet-shaped kinds
};

/// Immutable AST node.  Build through the static factories, which keep the
/// representation canonical (literals are nonnegative, with unary minus as
/// an explicit node; an exact-literal quotient folds to a rational literal
/// exactly as the parser does).
class Expr {
 public:
  ExprKind kind = ExprKind::kNumber;
  Scalar value;              // kNumber, exact literals only
  bool is_decimal = false;   // kNumber: literal was written in decimal form
  std::string text;          // decimal literal text; identifier / call name
  BinaryOp op = BinaryOp::kAdd;          // kBinary
  long exponent = 0;                     // kPower
  std::vector<ExprPtr> children;         // kNegate: 1, kBinary: 2, kPower: 1
  std::vector<SlotValue> slots;          // kCall

  static ExprPtr number(const Scalar& value);          // exact rational
  static ExprPtr decimal(const std::string& literal);  // decimal literal
  static ExprPtr identifier(const std::string& name);
  static ExprPtr negate(ExprPtr operand);
  static ExprPtr binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs);
  static ExprPtr power(ExprPtr base, long exponent);
  /// Validates the slot shapes against the call's signature (DomainError on
  /// mismatch; parse-time shape errors are ParseErrors instead).
  static ExprPtr call(const std::string& name, std::vector<SlotValue> slots);
};

/// One entry of the call table: the DSL name, its delimiter, the slot
/// layout, and the single library operation the call maps to.
struct CallSignature {
  std::string name;
  bool brackets = false;  // name[...] when true, name(...) otherwise
  struct Slot {
    SlotKind kind = SlotKind::kScalar;
    long min_entries = -1;  // list kinds only; -1 = unbounded
    long max_entries = -1;
  };
  std::vector<Slot> slots;
  std::string library_op;
};

/// The fixed call table (12 calls, one library operation each).
const std::vector<CallSignature>& call_signatures();

/// Parses the DSL text; throws ParseError carrying the 1-based position of
/// the offending character and an expected-token message.
ExprPtr parse_expression(const std::string& text);

/// Canonical text form; parse_expression(print_expression(e)) equals e.
std::string print_expression(const ExprPtr& e);

/// Structural equality (decimal literals compare by text, exact by value).
bool expr_equal(const ExprPtr& a, const ExprPtr& b);

struct EvalOptions {
  unsigned precision = 0;  // decimal digits; 0 = default_precision()
  TruncationPolicy trunc;
};

/// Evaluates the expression.  Exact rational inputs stay exact wherever the
/// library computes exactly; decimal literals and truncated series evaluate
/// at the configured precision.  Free identifiers, division by zero,
/// non-integer integer slots and the degenerate base p = q = 0 of the
/// twin-basic number calls raise DomainError; series failures propagate as
/// PoleError / DivergenceError.
Scalar eval_expression(const ExprPtr& e, const EvalOptions& opts = {});

}  // namespace pqcalc

#endif  // PQCALC_EXPR_HPP
