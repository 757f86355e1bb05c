#include "polymu/apt.hpp"

#include <map>
#include <sstream>

#include "polymu/error.hpp"
#include "polymu/formula_io.hpp"
#include "polymu/transforms.hpp"

namespace polymu {
namespace {

class Translator {
 public:
  explicit Translator(const Signature& sig) : sig_(sig) {}

  Apt run(const Formula& f) {
    apt_.signature = sig_;
    apt_.initial = build(f);
    return std::move(apt_);
  }

 private:
  StateId add(Transition t, std::string label, unsigned prio = 0) {
    apt_.delta.push_back(t);
    apt_.priority.push_back(prio);
    apt_.label.push_back(std::move(label));
    return apt_.delta.size() - 1;
  }

  StateId literal(bool positive) {
    StateId& slot = positive ? pos_lit_ : neg_lit_;
    if (slot == kNone)
      slot = add({positive ? Transition::Kind::kColor : Transition::Kind::kNotColor, 0}, (positive ? "" : "~") + sig_.colors()[0]);
    return slot;
  }

  StateId build(const Formula& f) {
    using K = Transition::Kind;
    switch (f.op()) {
      case Op::kTrue:
      case Op::kFalse: {
        StateId p = literal(true), n = literal(false);
        return add({f.op() == Op::kTrue ? K::kOr : K::kAnd, 0, p, n}, f.op() == Op::kTrue ? "tt" : "ff");
      }
      case Op::kColor:
        return add({K::kColor, *sig_.find_color(f.name())}, f.name());
      case Op::kNot:
        return add({K::kNotColor, *sig_.find_color(f.child().name())}, "~" + f.child().name());
      case Op::kVar:
        return binders_.at(f.name());
      case Op::kAnd:
      case Op::kOr: {
        StateId self = add({}, print_formula(f, 1));
        StateId l = build(f.left()), r = build(f.right());
        apt_.delta[self] = {f.op() == Op::kAnd ? K::kAnd : K::kOr, 0, l, r};
        return self;
      }
      case Op::kDiamond:
      case Op::kBox: {
        StateId self = add({}, print_formula(f, 1));
        StateId c = build(f.child());
        apt_.delta[self] = {f.op() == Op::kDiamond ? K::kDiamond : K::kBox, *sig_.find_action(f.name()), c};
        return self;
      }
      case Op::kMu:
      case Op::kNu: {
        StateId self = add({}, (f.op() == Op::kMu ? "mu " : "nu ") + f.name());
        binders_[f.name()] = self;
        unsigned saved = nested_max_;
        nested_max_ = 0;
        StateId body = build(f.child());
        unsigned m = nested_max_;
        unsigned want = f.op() == Op::kMu ? 1 : 0;
        unsigned prio = m % 2 == want ? m : m + 1;
        apt_.priority[self] = prio;
        apt_.delta[self] = {K::kOr, 0, body, body};
        nested_max_ = std::max(saved, prio);
        return self;
      }
      case Op::kReplace:
        return build(f.child());
    }
    throw InputError("unsupported formula", "formula");
  }

  static constexpr StateId kNone = static_cast<StateId>(-1);
  const Signature& sig_;
  Apt apt_;
  std::map<std::string, StateId> binders_;
  StateId pos_lit_ = kNone;
  StateId neg_lit_ = kNone;
  unsigned nested_max_ = 0;
};

}  // namespace

Apt formula_to_apt(const Formula& f, const Signature& sig) {
  validate(f, sig, 1);
  if (!is_closed(f)) throw InputError("formula has free variables", "formula");
  Formula pnf = to_nnf(erase_replace(f));
  return Translator(sig).run(pnf);
}

std::string format_apt(const Apt& apt) {
  using K = Transition::Kind;
  std::ostringstream out;
  auto line = [&](StateId q) {
    const Transition& t = apt.delta[q];
    out << "q" << q << " [" << apt.priority[q] << "] := ";
    switch (t.kind) {
      case K::kColor: out << apt.signature.colors()[t.symbol]; break;
      case K::kNotColor: out << "~" << apt.signature.colors()[t.symbol]; break;
      case K::kDiamond: out << "<" << apt.signature.actions()[t.symbol] << ">q" << t.left; break;
      case K::kBox: out << "[" << apt.signature.actions()[t.symbol] << "]q" << t.left; break;
      case K::kOr: out << "q" << t.left << " | q" << t.right; break;
      case K::kAnd: out << "q" << t.left << " & q" << t.right; break;
    }
    out << "    # " << apt.label[q] << "\n";
  };
  out << "initial q" << apt.initial << "\n";
  for (StateId q = 0; q < apt.num_states(); ++q) line(q);
  return out.str();
}

}  // namespace polymu
