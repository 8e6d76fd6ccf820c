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

#include "pqcalc/expr.hpp"

#include <cctype>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>

#include "pqcalc/errors.hpp"
#include "pqcalc/identities.hpp"
#include "pqcalc/pqcore.hpp"
#include "pqcalc/series.hpp"

namespace pqcalc {

namespace {

// ---------------------------------------------------------------------------
// Call table
// ---------------------------------------------------------------------------

using SlotSpec = CallSignature::Slot;

std::vector<CallSignature> build_call_table() {
  const SlotSpec scalar{SlotKind::kScalar, -1, -1};
  const SlotSpec pair{SlotKind::kScalarPair, 2, 2};
  const SlotSpec doublet{SlotKind::kDoublet, -1, -1};
  const SlotSpec scalars{SlotKind::kScalarList, 0, -1};
  const SlotSpec doublets{SlotKind::kDoubletList, 0, -1};
  const SlotSpec one_doublet{SlotKind::kDoubletList, 1, 1};
  return {
      {"qnum", false, {scalar, pair}, "twin_basic_number"},
      {"fact", false, {scalar, pair}, "pq_factorial"},
      {"binom", false, {pair, pair}, "pq_binomial"},
      {"poch", false, {doublet, doublet, scalar}, "pq_pochhammer"},
      {"pochratio", false, {doublets, doublets, doublet},
       "poch_ratio_infinite"},
      {"e", false, {doublet, scalar}, "pq_exponential(ExpKind::Small)"},
      {"E", false, {doublet, scalar}, "pq_exponential(ExpKind::Big)"},
      {"Phi", true, {doublets, doublets, doublet, scalar}, "eval_Phi"},
      {"phi", true, {scalars, scalars, scalar, scalar}, "eval_phi_classical"},
      {"Psi", true, {one_doublet, one_doublet, doublet, scalar}, "eval_Psi11"},
      {"F_bibasic", true,
       {scalars, scalars, scalars, scalars, scalar, scalar, scalar},
       "eval_bibasic"},
      {"hermite", false, {scalar, scalar, pair}, "hermite_pq"},
  };
}

const CallSignature* find_signature(const std::string& name) {
  for (const CallSignature& sig : call_signatures()) {
    if (sig.name == name) return &sig;
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

enum class Tok {
  kNumber,
  kName,
  kPlus,
  kMinus,
  kStar,
  kSlash,
  kCaret,
  kLParen,
  kRParen,
  kLBracket,
  kRBracket,
  kComma,
  kSemi,
  kEnd,
};

struct Token {
  Tok type = Tok::kEnd;
  std::string text;
  bool decimal = false;   // kNumber: literal contains '.' or an exponent
  std::size_t pos = 0;    // 1-based position in the source text
};

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool is_name_char(char c) {
  return is_name_start(c) || std::isdigit(static_cast<unsigned char>(c)) != 0;
}

bool is_digit(char c) {
  return std::isdigit(static_cast<unsigned char>(c)) != 0;
}

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = src.size();
  while (i < n) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    const std::size_t pos = i + 1;
    if (is_digit(c)) {
      std::size_t j = i;
      bool decimal = false;
      while (j < n && is_digit(src[j])) ++j;
      if (j < n && src[j] == '.') {
        if (j + 1 >= n || !is_digit(src[j + 1])) {
          throw ParseError("a digit must follow the decimal point", j + 2);
        }
        decimal = true;
        ++j;
        while (j < n && is_digit(src[j])) ++j;
      }
      // An exponent marker only counts when digits (optionally signed)
      // follow; otherwise the 'e'/'E' starts the next token, so "2*e((2,1);1)"
      // and "2e3" both lex as intended.
      if (j < n && (src[j] == 'e' || src[j] == 'E')) {
        std::size_t k = j + 1;
        if (k < n && (src[k] == '+' || src[k] == '-')) ++k;
        if (k < n && is_digit(src[k])) {
          decimal = true;
          ++k;
          while (k < n && is_digit(src[k])) ++k;
          j = k;
        }
      }
      out.push_back({Tok::kNumber, src.substr(i, j - i), decimal, pos});
      i = j;
      continue;
    }
    if (is_name_start(c)) {
      std::size_t j = i;
      while (j < n && is_name_char(src[j])) ++j;
      out.push_back({Tok::kName, src.substr(i, j - i), false, pos});
      i = j;
      continue;
    }
    Tok type;
    switch (c) {
      case '+': type = Tok::kPlus; break;
      case '-': type = Tok::kMinus; break;
      case '*': type = Tok::kStar; break;
      case '/': type = Tok::kSlash; break;
      case '^': type = Tok::kCaret; break;
      case '(': type = Tok::kLParen; break;
      case ')': type = Tok::kRParen; break;
      case '[': type = Tok::kLBracket; break;
      case ']': type = Tok::kRBracket; break;
      case ',': type = Tok::kComma; break;
      case ';': type = Tok::kSemi; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'",
                         pos);
    }
    out.push_back({type, std::string(1, c), false, pos});
    ++i;
  }
  out.push_back({Tok::kEnd, "", false, n + 1});
  return out;
}

std::string quoted(const char* symbol) {
  return std::string("\"") + symbol + "\"";
}

std::string display(Tok t) {
  switch (t) {
    case Tok::kNumber: return "a number";
    case Tok::kName: return "a name";
    case Tok::kPlus: return quoted("+");
    case Tok::kMinus: return quoted("-");
    case Tok::kStar: return quoted("*");
    case Tok::kSlash: return quoted("/");
    case Tok::kCaret: return quoted("^");
    case Tok::kLParen: return quoted("(");
    case Tok::kRParen: return quoted(")");
    case Tok::kLBracket: return quoted("[");
    case Tok::kRBracket: return quoted("]");
    case Tok::kComma: return quoted(",");
    case Tok::kSemi: return quoted(";");
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

[[noreturn]] void fail_expected(const std::vector<std::string>& expected,
                                std::size_t pos) {
  std::string msg = "expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) {
      msg += expected.size() == 2 ? " or " : ", ";
      if (expected.size() > 2 && i + 1 == expected.size()) msg += "or ";
    }
    msg += expected[i];
  }
  throw ParseError(msg, pos);
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ExprPtr run() {
    ExprPtr e = parse_expr();
    if (peek().type != Tok::kEnd) {
      fail_expected({"an operator", "end of input"}, peek().pos);
    }
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& advance() { return toks_[i_++]; }

  void expect(Tok want) {
    if (peek().type != want) fail_expected({display(want)}, peek().pos);
    advance();
  }

  ExprPtr parse_expr() {
    ExprPtr e = parse_term();
    while (peek().type == Tok::kPlus || peek().type == Tok::kMinus) {
      const BinaryOp op =
          advance().type == Tok::kPlus ? BinaryOp::kAdd : BinaryOp::kSub;
      e = Expr::binary(op, e, parse_term());
    }
    return e;
  }

  ExprPtr parse_term() {
    ExprPtr e = parse_factor();
    while (peek().type == Tok::kStar || peek().type == Tok::kSlash) {
      const BinaryOp op =
          advance().type == Tok::kStar ? BinaryOp::kMul : BinaryOp::kDiv;
      e = Expr::binary(op, e, parse_factor());
    }
    return e;
  }

  ExprPtr parse_factor() {
    ExprPtr atom = parse_atom();
    if (peek().type != Tok::kCaret) return atom;
    advance();
    bool negative = false;
    if (peek().type == Tok::kMinus) {
      negative = true;
      advance();
    }
    if (peek().type != Tok::kNumber || peek().decimal) {
      fail_expected({"an integer exponent"}, peek().pos);
    }
    const Token t = advance();
    long exp = 0;
    try {
      exp = std::stol(t.text);
    } catch (const std::out_of_range&) {
      throw ParseError("exponent out of range", t.pos);
    }
    return Expr::power(atom, negative ? -exp : exp);
  }

  ExprPtr parse_atom() {
    const Token& t = peek();
    switch (t.type) {
      case Tok::kMinus:
        advance();
        return Expr::negate(parse_atom());
      case Tok::kNumber: {
        const Token tok = advance();
        if (tok.decimal) return Expr::decimal(tok.text);
        return Expr::number(Scalar(mpq_class(tok.text)));
      }
      case Tok::kLParen: {
        advance();
        ExprPtr e = parse_expr();
        expect(Tok::kRParen);
        return e;
      }
      case Tok::kName: {
        const Token name = advance();
        const Tok next = peek().type;
        if (next != Tok::kLParen && next != Tok::kLBracket) {
          return Expr::identifier(name.text);
        }
        const CallSignature* sig = find_signature(name.text);
        if (sig == nullptr) {
          throw ParseError("unknown call name '" + name.text + "'", name.pos);
        }
        const Tok open = sig->brackets ? Tok::kLBracket : Tok::kLParen;
        if (next != open) fail_expected({display(open)}, peek().pos);
        advance();
        return parse_call(*sig);
      }
      default:
        fail_expected({"a number", "a name", quoted("("), quoted("-")},
                      t.pos);
    }
  }

  // Consumes the slot terminator: ";" between slots, the closing delimiter
  // after the last slot.
  void finish_slot(bool last, Tok close) {
    const Tok want = last ? close : Tok::kSemi;
    if (peek().type != want) fail_expected({display(want)}, peek().pos);
    advance();
  }

  ExprDoublet parse_doublet() {
    expect(Tok::kLParen);
    ExprPtr a = parse_expr();
    expect(Tok::kComma);
    ExprPtr b = parse_expr();
    expect(Tok::kRParen);
    return {a, b};
  }

  ExprPtr parse_call(const CallSignature& sig) {
    const Tok close = sig.brackets ? Tok::kRBracket : Tok::kRParen;
    std::vector<SlotValue> slots;
    slots.reserve(sig.slots.size());
    for (std::size_t s = 0; s < sig.slots.size(); ++s) {
      const SlotSpec& spec = sig.slots[s];
      const bool last = s + 1 == sig.slots.size();
      SlotValue slot;
      slot.kind = spec.kind;
      switch (spec.kind) {
        case SlotKind::kScalar:
          slot.entries.push_back(parse_expr());
          finish_slot(last, close);
          break;
        case SlotKind::kScalarPair: {
          // Parsed as a greedy comma list so the expected-token set stays
          // honest; the two-entry arity is checked at the terminator.
          const Tok want = last ? close : Tok::kSemi;
          for (;;) {
            slot.entries.push_back(parse_expr());
            if (peek().type == Tok::kComma) {
              advance();
              continue;
            }
            if (peek().type == want) break;
            fail_expected({display(Tok::kComma), display(want)}, peek().pos);
          }
          if (slot.entries.size() != 2) {
            throw ParseError("slot " + std::to_string(s + 1) + " of \"" +
                                 sig.name + "\" takes exactly 2 entries",
                             peek().pos);
          }
          advance();
          break;
        }
        case SlotKind::kDoublet:
          slot.doublets.push_back(parse_doublet());
          finish_slot(last, close);
          break;
        case SlotKind::kScalarList:
        case SlotKind::kDoubletList: {
          expect(Tok::kLBracket);
          if (peek().type == Tok::kRBracket) {
            advance();
          } else {
            for (;;) {
              if (spec.kind == SlotKind::kScalarList) {
                slot.entries.push_back(parse_expr());
              } else {
                slot.doublets.push_back(parse_doublet());
              }
              if (peek().type == Tok::kComma) {
                advance();
                continue;
              }
              if (peek().type == Tok::kRBracket) {
                advance();
                break;
              }
              fail_expected(
                  {display(Tok::kComma), display(Tok::kRBracket)},
                  peek().pos);
            }
          }
          const long count = spec.kind == SlotKind::kScalarList
                                 ? static_cast<long>(slot.entries.size())
                                 : static_cast<long>(slot.doublets.size());
          if ((spec.min_entries >= 0 && count < spec.min_entries) ||
              (spec.max_entries >= 0 && count > spec.max_entries)) {
            throw ParseError(
                "slot " + std::to_string(s + 1) + " of \"" + sig.name +
                    "\" takes exactly " + std::to_string(spec.min_entries) +
                    (spec.kind == SlotKind::kScalarList ? " entries"
                                                        : " doublet"),
                peek().pos);
          }
          finish_slot(last, close);
          break;
        }
      }
      slots.push_back(std::move(slot));
    }
    return Expr::call(sig.name, std::move(slots));
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

// ---------------------------------------------------------------------------
// Printer
// ---------------------------------------------------------------------------

// Precedence levels: 1 additive, 2 multiplicative, 3 power, 4 atom.
int node_prec(const Expr& e) {
  switch (e.kind) {
    case ExprKind::kBinary:
      return (e.op == BinaryOp::kAdd || e.op == BinaryOp::kSub) ? 1 : 2;
    case ExprKind::kPower:
      return 3;
    case ExprKind::kNumber:
      // A non-integer rational literal prints with "/", so in any context
      // tighter than a multiplication ("x*2/3", "(2/3)^2") it needs the
      // same parentheses a division node would get.
      return !e.is_decimal && !e.value.is_integer() ? 2 : 4;
    default:
      return 4;
  }
}

void print_to(std::string& out, const ExprPtr& e, int min_prec) {
  const bool wrap = node_prec(*e) < min_prec;
  if (wrap) out += '(';
  switch (e->kind) {
    case ExprKind::kNumber:
      out += e->is_decimal ? e->text : e->value.str();
      break;
    case ExprKind::kIdentifier:
      out += e->text;
      break;
    case ExprKind::kNegate:
      out += '-';
      print_to(out, e->children[0], 4);
      break;
    case ExprKind::kBinary: {
      const int prec = node_prec(*e);
      print_to(out, e->children[0], prec);
      switch (e->op) {
        case BinaryOp::kAdd: out += '+'; break;
        case BinaryOp::kSub: out += '-'; break;
        case BinaryOp::kMul: out += '*'; break;
        case BinaryOp::kDiv: out += '/'; break;
      }
      print_to(out, e->children[1], prec + 1);
      break;
    }
    case ExprKind::kPower:
      print_to(out, e->children[0], 4);
      out += '^';
      out += std::to_string(e->exponent);
      break;
    case ExprKind::kCall: {
      const CallSignature* sig = find_signature(e->text);
      out += e->text;
      out += sig->brackets ? '[' : '(';
      for (std::size_t s = 0; s < e->slots.size(); ++s) {
        if (s > 0) out += ';';
        const SlotValue& slot = e->slots[s];
        switch (slot.kind) {
          case SlotKind::kScalar:
            print_to(out, slot.entries[0], 1);
            break;
          case SlotKind::kScalarPair:
            print_to(out, slot.entries[0], 1);
            out += ',';
            print_to(out, slot.entries[1], 1);
            break;
          case SlotKind::kDoublet:
            out += '(';
            print_to(out, slot.doublets[0].a, 1);
            out += ',';
            print_to(out, slot.doublets[0].b, 1);
            out += ')';
            break;
          case SlotKind::kScalarList:
            out += '[';
            for (std::size_t k = 0; k < slot.entries.size(); ++k) {
              if (k > 0) out += ',';
              print_to(out, slot.entries[k], 1);
            }
            out += ']';
            break;
          case SlotKind::kDoubletList:
            out += '[';
            for (std::size_t k = 0; k < slot.doublets.size(); ++k) {
              if (k > 0) out += ',';
              out += '(';
              print_to(out, slot.doublets[k].a, 1);
              out += ',';
              print_to(out, slot.doublets[k].b, 1);
              out += ')';
            }
            out += ']';
            break;
        }
      }
      out += sig->brackets ? ']' : ')';
      break;
    }
  }
  if (wrap) out += ')';
}

// ---------------------------------------------------------------------------
// Evaluator
// ---------------------------------------------------------------------------

struct EvalContext {
  unsigned digits;
  TruncationPolicy trunc;
};

Scalar eval_node(const ExprPtr& e, const EvalContext& ctx);

long integer_slot(const ExprPtr& e, const EvalContext& ctx,
                  const char* what) {
  const Scalar v = eval_node(e, ctx);
  if (!v.is_exact() || !v.is_integer()) {
    throw DomainError(std::string(what) + " must be an exact integer");
  }
  return v.to_long();
}

BasePair base_from_pair(const SlotValue& slot, const EvalContext& ctx) {
  return {eval_node(slot.entries[0], ctx), eval_node(slot.entries[1], ctx)};
}

BasePair base_from_doublet(const SlotValue& slot, const EvalContext& ctx) {
  return {eval_node(slot.doublets[0].a, ctx),
          eval_node(slot.doublets[0].b, ctx)};
}

ParamDoublet doublet_value(const ExprDoublet& d, const EvalContext& ctx) {
  return {eval_node(d.a, ctx), eval_node(d.b, ctx)};
}

std::vector<ParamDoublet> doublet_list(const SlotValue& slot,
                                       const EvalContext& ctx) {
  std::vector<ParamDoublet> out;
  out.reserve(slot.doublets.size());
  for (const ExprDoublet& d : slot.doublets) {
    out.push_back(doublet_value(d, ctx));
  }
  return out;
}

std::vector<Scalar> scalar_list(const SlotValue& slot,
                                const EvalContext& ctx) {
  std::vector<Scalar> out;
  out.reserve(slot.entries.size());
  for (const ExprPtr& e : slot.entries) out.push_back(eval_node(e, ctx));
  return out;
}

// The twin-basic number [n] is a polynomial in p and q, but the base
// p = q = 0 degenerates the whole calculus ([2]! already vanishes), so the
// DSL excludes it for the number-valued calls.
void reject_degenerate_base(const BasePair& base) {
  if (base.p.is_zero() && base.q.is_zero()) {
    throw DomainError("the degenerate base p = q = 0 is excluded");
  }
}

Scalar eval_call(const Expr& e, const EvalContext& ctx) {
  const std::string& name = e.text;
  const std::vector<SlotValue>& s = e.slots;
  if (name == "qnum") {
    const BasePair base = base_from_pair(s[1], ctx);
    reject_degenerate_base(base);
    return twin_basic_number(integer_slot(s[0].entries[0], ctx, "n"), base);
  }
  if (name == "fact") {
    const BasePair base = base_from_pair(s[1], ctx);
    reject_degenerate_base(base);
    return pq_factorial(integer_slot(s[0].entries[0], ctx, "n"), base);
  }
  if (name == "binom") {
    const BasePair base = base_from_pair(s[1], ctx);
    reject_degenerate_base(base);
    return pq_binomial(integer_slot(s[0].entries[0], ctx, "n"),
                       integer_slot(s[0].entries[1], ctx, "k"), base);
  }
  if (name == "poch") {
    return pq_pochhammer(doublet_value(s[0].doublets[0], ctx),
                         base_from_doublet(s[1], ctx),
                         integer_slot(s[2].entries[0], ctx, "n"));
  }
  if (name == "pochratio") {
    return poch_ratio_infinite(doublet_list(s[0], ctx), doublet_list(s[1], ctx),
                               base_from_doublet(s[2], ctx), ctx.trunc,
                               ctx.digits);
  }
  if (name == "e" || name == "E") {
    return pq_exponential(eval_node(s[1].entries[0], ctx),
                          base_from_doublet(s[0], ctx),
                          name == "e" ? ExpKind::Small : ExpKind::Big,
                          ctx.trunc, ctx.digits);
  }
  if (name == "Phi") {
    SeriesSpec spec{doublet_list(s[0], ctx), doublet_list(s[1], ctx),
                    base_from_doublet(s[2], ctx),
                    eval_node(s[3].entries[0], ctx)};
    return eval_Phi(spec, ctx.trunc, ctx.digits).value;
  }
  if (name == "phi") {
    ClassicalSeriesSpec spec{scalar_list(s[0], ctx), scalar_list(s[1], ctx),
                             eval_node(s[2].entries[0], ctx),
                             eval_node(s[3].entries[0], ctx)};
    return eval_phi_classical(spec, ctx.trunc, ctx.digits).value;
  }
  if (name == "Psi") {
    return eval_Psi11(doublet_value(s[0].doublets[0], ctx),
                      doublet_value(s[1].doublets[0], ctx),
                      base_from_doublet(s[2], ctx),
                      eval_node(s[3].entries[0], ctx), ctx.trunc, ctx.digits)
        .value;
  }
  if (name == "F_bibasic") {
    return eval_bibasic(scalar_list(s[0], ctx), scalar_list(s[1], ctx),
                        scalar_list(s[2], ctx), scalar_list(s[3], ctx),
                        eval_node(s[4].entries[0], ctx),
                        eval_node(s[5].entries[0], ctx),
                        eval_node(s[6].entries[0], ctx), ctx.trunc, ctx.digits)
        .value;
  }
  if (name == "hermite") {
    const BasePair base = base_from_pair(s[2], ctx);
    reject_degenerate_base(base);
    return hermite_pq(integer_slot(s[0].entries[0], ctx, "n"),
                      eval_node(s[1].entries[0], ctx), base);
  }
  throw DomainError("unknown call name '" + name + "'");
}

Scalar eval_node(const ExprPtr& e, const EvalContext& ctx) {
  switch (e->kind) {
    case ExprKind::kNumber:
      if (e->is_decimal) {
        return Scalar::decimal_from_string(e->text, ctx.digits);
      }
      return e->value;
    case ExprKind::kIdentifier:
      throw DomainError("free identifier '" + e->text +
                        "' has no numeric value");
    case ExprKind::kNegate:
      return -eval_node(e->children[0], ctx);
    case ExprKind::kBinary: {
      const Scalar lhs = eval_node(e->children[0], ctx);
      const Scalar rhs = eval_node(e->children[1], ctx);
      switch (e->op) {
        case BinaryOp::kAdd: return lhs + rhs;
        case BinaryOp::kSub: return lhs - rhs;
        case BinaryOp::kMul: return lhs * rhs;
        case BinaryOp::kDiv: return lhs / rhs;
      }
      throw DomainError("unreachable operator");
    }
    case ExprKind::kPower:
      return pow_int(eval_node(e->children[0], ctx), e->exponent);
    case ExprKind::kCall:
      return eval_call(*e, ctx);
  }
  throw DomainError("unreachable expression kind");
}

// ---------------------------------------------------------------------------
// Structural equality
// ---------------------------------------------------------------------------

bool doublet_equal(const ExprDoublet& a, const ExprDoublet& b) {
  return expr_equal(a.a, b.a) && expr_equal(a.b, b.b);
}

bool slot_equal(const SlotValue& a, const SlotValue& b) {
  if (a.kind != b.kind || a.entries.size() != b.entries.size() ||
      a.doublets.size() != b.doublets.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (!expr_equal(a.entries[i], b.entries[i])) return false;
  }
  for (std::size_t i = 0; i < a.doublets.size(); ++i) {
    if (!doublet_equal(a.doublets[i], b.doublets[i])) return false;
  }
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Factories
// ---------------------------------------------------------------------------

ExprPtr Expr::number(const Scalar& value) {
  if (!value.is_exact()) return Expr::decimal(value.str());
  if (value.sign() < 0) return Expr::negate(Expr::number(-value));
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kNumber;
  e->value = value;
  return e;
}

ExprPtr Expr::decimal(const std::string& literal) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kNumber;
  e->is_decimal = true;
  e->text = literal;
  return e;
}

ExprPtr Expr::identifier(const std::string& name) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kIdentifier;
  e->text = name;
  return e;
}

ExprPtr Expr::negate(ExprPtr operand) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kNegate;
  e->children = {std::move(operand)};
  return e;
}

ExprPtr Expr::binary(BinaryOp op, ExprPtr lhs, ExprPtr rhs) {
  // "int/int" is a rational literal in the grammar, so an exact-literal
  // quotient folds; this keeps programmatic trees and parsed trees aligned.
  if (op == BinaryOp::kDiv && lhs->kind == ExprKind::kNumber &&
      !lhs->is_decimal && rhs->kind == ExprKind::kNumber && !rhs->is_decimal &&
      !rhs->value.is_zero()) {
    return Expr::number(lhs->value / rhs->value);
  }
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kBinary;
  e->op = op;
  e->children = {std::move(lhs), std::move(rhs)};
  return e;
}

ExprPtr Expr::power(ExprPtr base, long exponent) {
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kPower;
  e->exponent = exponent;
  e->children = {std::move(base)};
  return e;
}

ExprPtr Expr::call(const std::string& name, std::vector<SlotValue> slots) {
  const CallSignature* sig = find_signature(name);
  if (sig == nullptr) throw DomainError("unknown call name '" + name + "'");
  if (slots.size() != sig->slots.size()) {
    throw DomainError("\"" + name + "\" takes " +
                      std::to_string(sig->slots.size()) + " slots");
  }
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const SlotSpec& spec = sig->slots[i];
    const SlotValue& slot = slots[i];
    const bool scalar_shaped = spec.kind == SlotKind::kScalar ||
                               spec.kind == SlotKind::kScalarPair ||
                               spec.kind == SlotKind::kScalarList;
    if (slot.kind != spec.kind ||
        (scalar_shaped ? !slot.doublets.empty() : !slot.entries.empty())) {
      throw DomainError("slot " + std::to_string(i + 1) + " of \"" + name +
                        "\" has the wrong shape");
    }
    const long count = scalar_shaped ? static_cast<long>(slot.entries.size())
                                     : static_cast<long>(slot.doublets.size());
    const long want_min =
        spec.kind == SlotKind::kScalar || spec.kind == SlotKind::kDoublet
            ? 1
            : spec.min_entries;
    const long want_max =
        spec.kind == SlotKind::kScalar || spec.kind == SlotKind::kDoublet
            ? 1
            : spec.max_entries;
    if ((want_min >= 0 && count < want_min) ||
        (want_max >= 0 && count > want_max)) {
      throw DomainError("slot " + std::to_string(i + 1) + " of \"" + name +
                        "\" has the wrong arity");
    }
  }
  auto e = std::make_shared<Expr>();
  e->kind = ExprKind::kCall;
  e->text = name;
  e->slots = std::move(slots);
  return e;
}

// ---------------------------------------------------------------------------
// Public entry points
// ---------------------------------------------------------------------------

const std::vector<CallSignature>& call_signatures() {
  static const std::vector<CallSignature> table = build_call_table();
  return table;
}

ExprPtr parse_expression(const std::string& text) {
  return Parser(lex(text)).run();
}

std::string print_expression(const ExprPtr& e) {
  std::string out;
  print_to(out, e, 1);
  return out;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case ExprKind::kNumber:
      if (a->is_decimal != b->is_decimal) return false;
      return a->is_decimal ? a->text == b->text : a->value == b->value;
    case ExprKind::kIdentifier:
      return a->text == b->text;
    case ExprKind::kNegate:
      return expr_equal(a->children[0], b->children[0]);
    case ExprKind::kBinary:
      return a->op == b->op && expr_equal(a->children[0], b->children[0]) &&
             expr_equal(a->children[1], b->children[1]);
    case ExprKind::kPower:
      return a->exponent == b->exponent &&
             expr_equal(a->children[0], b->children[0]);
    case ExprKind::kCall: {
      if (a->text != b->text || a->slots.size() != b->slots.size()) {
        return false;
      }
      for (std::size_t i = 0; i < a->slots.size(); ++i) {
        if (!slot_equal(a->slots[i], b->slots[i])) return false;
      }
      return true;
    }
  }
  return false;
}

Scalar eval_expression(const ExprPtr& e, const EvalOptions& opts) {
  EvalContext ctx{opts.precision ? opts.precision : default_precision(),
                  opts.trunc};
  return eval_node(e, ctx);
}

}  // namespace pqcalc
