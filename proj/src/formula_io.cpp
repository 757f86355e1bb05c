#include "polymu/formula_io.hpp"

#include <cctype>
#include <optional>

#include "polymu/error.hpp"

namespace polymu {
namespace {

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig, std::size_t arity) : text_(text), sig_(sig), arity_(arity) {}

  Formula run() {
    Formula f = parse_or();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError(what + " at position " + std::to_string(pos_), "formula");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip_space();
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  std::string lower_ident() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::islower(static_cast<unsigned char>(text_[pos_]))) fail("expected a name");
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_' ||
          c == '@')
        ++pos_;
      else
        break;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string var_ident() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isupper(static_cast<unsigned char>(text_[pos_]))) fail("expected a variable");
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t nat() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (pos_ - start > 9) fail("number too large");
    return std::stoul(std::string(text_.substr(start, pos_ - start)));
  }

  // Splits a lowercase token into (name, index) following the arity rules.
  std::pair<std::string, std::size_t> indexed(const std::string& token, bool is_action) {
    if (arity_ == 1) {
      bool known = is_action ? sig_.find_action(token).has_value() : sig_.find_color(token).has_value();
      if (known) return {token, 0};
    }
    auto split = split_indexed_name(token);
    if (!split) fail("'" + token + "' needs a component index");
    if (split->second >= arity_)
      fail("index " + std::to_string(split->second) + " out of range for arity " + std::to_string(arity_));
    return *split;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (accept("|")) f = disj(f, parse_and());
    return f;
  }

  Formula parse_and() {
    Formula f = parse_prefix();
    while (accept("&")) f = conj(f, parse_prefix());
    return f;
  }

  Formula parse_prefix() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of formula");
    char c = text_[pos_];
    if (accept("~")) return neg(parse_prefix());
    if (accept("(")) {
      Formula f = parse_or();
      expect(")");
      return f;
    }
    if (c == '<' || c == '[') {
      ++pos_;
      auto [name, index] = indexed(lower_ident(), true);
      expect(c == '<' ? ">" : "]");
      Formula body = parse_prefix();
      return c == '<' ? diamond(name, index, body) : box(name, index, body);
    }
    if (accept("%{")) {
      std::vector<std::size_t> map{nat()};
      while (accept(",")) map.push_back(nat());
      expect("}");
      return replace(std::move(map), parse_prefix());
    }
    if (std::isupper(static_cast<unsigned char>(c))) return var(var_ident());
    std::size_t start = pos_;
    std::string token = lower_ident();
    if (token == "tt") return tt();
    if (token == "ff") return ff();
    if (token == "mu" || token == "nu") {
      std::string x = var_ident();
      expect(".");
      Formula body = parse_or();
      return token == "mu" ? mu(x, body) : nu(x, body);
    }
    pos_ = start;
    auto [name, index] = indexed(token, false);
    pos_ = start + token.size();
    return color(name, index);
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t arity_;
  std::size_t pos_ = 0;
};

class Printer {
 public:
  explicit Printer(std::size_t arity) : arity_(arity) {}

  // prec: 1 = inside |, 2 = inside &, 3 = operand of a prefix operator.
  // tail: nothing follows this subterm at its nesting level.
  void run(const Formula& f, int prec, bool tail) {
    switch (f.op()) {
      case Op::kTrue: out_ += "tt"; return;
      case Op::kFalse: out_ += "ff"; return;
      case Op::kColor: out_ += with_index(f.name(), f.index()); return;
      case Op::kVar: out_ += f.name(); return;
      case Op::kNot:
        out_ += "~";
        run(f.child(), 3, tail);
        return;
      case Op::kDiamond:
      case Op::kBox: {
        bool dia = f.op() == Op::kDiamond;
        out_ += dia ? "<" : "[";
        out_ += with_index(f.name(), f.index());
        out_ += dia ? ">" : "]";
        run(f.child(), 3, tail);
        return;
      }
      case Op::kReplace: {
        out_ += "%{";
        for (std::size_t k = 0; k < f.map().size(); ++k) {
          if (k) out_ += ",";
          out_ += std::to_string(f.map()[k]);
        }
        out_ += "}";
        run(f.child(), 3, tail);
        return;
      }
      case Op::kMu:
      case Op::kNu: {
        if (!tail) out_ += "(";
        out_ += f.op() == Op::kMu ? "mu " : "nu ";
        out_ += f.name();
        out_ += ". ";
        run(f.child(), 1, true);
        if (!tail) out_ += ")";
        return;
      }
      case Op::kAnd:
      case Op::kOr: {
        int own = f.op() == Op::kOr ? 1 : 2;
        bool parens = prec > own;
        if (parens) {
          out_ += "(";
          tail = true;
        }
        run(f.left(), own, false);
        out_ += f.op() == Op::kOr ? " | " : " & ";
        run(f.right(), own + 1, tail);
        if (parens) out_ += ")";
        return;
      }
    }
  }

  std::string take() { return std::move(out_); }

 private:
  std::string with_index(const std::string& name, std::size_t index) const {
    if (arity_ == 1 && index == 0) return name;
    return indexed_name(name, index);
  }

  std::size_t arity_;
  std::string out_;
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig, std::size_t arity) {
  if (arity == 0) throw InputError("arity must be positive", "arity");
  Formula f = Parser(text, sig, arity).run();
  validate(f, sig, arity);
  return f;
}

std::string print_formula(const Formula& f, std::size_t arity) {
  Printer p(arity);
  p.run(f, 1, true);
  return p.take();
}

}  // namespace polymu
