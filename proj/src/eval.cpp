#include "polymu/eval.hpp"

#include <bit>
#include <limits>
#include <unordered_map>

#include "polymu/error.hpp"

namespace polymu {

TupleSet::TupleSet(std::size_t num_nodes, std::size_t arity, bool full) : n_(num_nodes), d_(arity), universe_(1) {
  for (std::size_t k = 0; k < arity; ++k) {
    if (num_nodes != 0 && universe_ > std::numeric_limits<std::size_t>::max() / num_nodes)
      throw ResourceError("tuple universe overflows");
    universe_ *= num_nodes;
  }
  words_.assign((universe_ + 63) / 64, full ? ~std::uint64_t{0} : 0);
  trim();
}

void TupleSet::trim() {
  if (universe_ % 64 != 0 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
}

std::size_t TupleSet::index_of(std::span<const NodeId> tuple) const {
  if (tuple.size() != d_) throw InputError("tuple arity mismatch");
  std::size_t index = 0;
  for (std::size_t k = d_; k-- > 0;) {
    if (tuple[k] >= n_) throw InputError("tuple member out of range");
    index = index * n_ + tuple[k];
  }
  return index;
}

std::vector<NodeId> TupleSet::tuple_at(std::size_t index) const {
  std::vector<NodeId> t(d_);
  for (std::size_t k = 0; k < d_; ++k) {
    t[k] = index % n_;
    index /= n_;
  }
  return t;
}

std::size_t TupleSet::size() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<std::vector<NodeId>> TupleSet::tuples() const {
  std::vector<std::vector<NodeId>> out;
  for (std::size_t i = 0; i < universe_; ++i)
    if (test(i)) out.push_back(tuple_at(i));
  return out;
}

TupleSet& TupleSet::operator&=(const TupleSet& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

TupleSet& TupleSet::operator|=(const TupleSet& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
  return *this;
}

TupleSet TupleSet::complement() const {
  TupleSet out = *this;
  for (auto& w : out.words_) w = ~w;
  out.trim();
  return out;
}

Relation TupleSet::to_relation() const {
  if (d_ != 2) throw InputError("only arity-2 tuple sets are relations");
  Relation r(n_, n_);
  for (std::size_t i = 0; i < universe_; ++i)
    if (test(i)) r.set(i % n_, i / n_);
  return r;
}

Environment Environment::extend(const std::string& name, TupleSet value) const {
  Environment out = *this;
  out.vars_[name] = std::make_shared<const TupleSet>(std::move(value));
  return out;
}

const TupleSet* Environment::find(const std::string& name) const {
  auto it = vars_.find(name);
  return it == vars_.end() ? nullptr : it->second.get();
}

namespace {

class Evaluator {
 public:
  Evaluator(const LabeledGraph& g, std::size_t d, EvalStats* stats) : g_(g), n_(g.num_nodes()), d_(d), stats_(stats) {
    stride_.resize(d);
    std::size_t s = 1;
    for (std::size_t k = 0; k < d; ++k) {
      stride_[k] = s;
      s *= n_;
    }
    universe_ = s;
  }

  TupleSet run(const Formula& f, const Environment& env) {
    bool closed = is_closed_cached(f);
    if (closed) {
      auto it = cache_.find(f.identity());
      if (it != cache_.end()) return it->second;
    }
    TupleSet out = compute(f, env);
    if (closed) cache_.emplace(f.identity(), out);
    return out;
  }

 private:
  bool is_closed_cached(const Formula& f) {
    auto it = closed_.find(f.identity());
    if (it != closed_.end()) return it->second;
    bool closed = is_closed(f);
    closed_.emplace(f.identity(), closed);
    return closed;
  }

  std::size_t component(std::size_t index, std::size_t i) const { return (index / stride_[i]) % n_; }

  TupleSet compute(const Formula& f, const Environment& env) {
    switch (f.op()) {
      case Op::kTrue: return TupleSet(n_, d_, true);
      case Op::kFalse: return TupleSet(n_, d_);
      case Op::kColor: {
        check_index(f.index());
        auto c = g_.signature().find_color(f.name());
        if (!c) throw InputError("unknown color '" + f.name() + "'", "formula");
        TupleSet out(n_, d_);
        for (std::size_t t = 0; t < universe_; ++t)
          if (g_.has_color(component(t, f.index()), *c)) out.set(t);
        return out;
      }
      case Op::kVar: {
        const TupleSet* s = env.find(f.name());
        if (!s) throw InputError("unbound variable " + f.name(), "formula");
        return *s;
      }
      case Op::kNot: return run(f.child(), env).complement();
      case Op::kAnd: {
        TupleSet out = run(f.left(), env);
        out &= run(f.right(), env);
        return out;
      }
      case Op::kOr: {
        TupleSet out = run(f.left(), env);
        out |= run(f.right(), env);
        return out;
      }
      case Op::kDiamond: return diamond(f, run(f.child(), env));
      case Op::kBox: return diamond(f, run(f.child(), env).complement()).complement();
      case Op::kReplace: {
        if (f.map().size() != d_) throw InputError("replacement map length differs from arity", "formula");
        for (auto k : f.map()) check_index(k);
        TupleSet inner = run(f.child(), env);
        TupleSet out(n_, d_);
        for (std::size_t t = 0; t < universe_; ++t) {
          std::size_t src = 0;
          for (std::size_t k = 0; k < d_; ++k) src += component(t, f.map()[k]) * stride_[k];
          if (inner.test(src)) out.set(t);
        }
        return out;
      }
      case Op::kMu:
      case Op::kNu: {
        TupleSet current(n_, d_, f.op() == Op::kNu);
        for (;;) {
          if (stats_) ++stats_->fixpoint_rounds;
          TupleSet next = run(f.child(), env.extend(f.name(), current));
          if (next == current) return current;
          current = std::move(next);
        }
      }
    }
    return TupleSet(n_, d_);
  }

  TupleSet diamond(const Formula& f, const TupleSet& target) {
    check_index(f.index());
    auto a = g_.signature().find_action(f.name());
    if (!a) throw InputError("unknown action '" + f.name() + "'", "formula");
    const std::size_t i = f.index();
    TupleSet out(n_, d_);
    for (std::size_t t = 0; t < universe_; ++t) {
      if (!target.test(t)) continue;
      const std::size_t w = component(t, i);
      const std::size_t base = t - w * stride_[i];
      for (NodeId u : g_.predecessors(w, *a)) out.set(base + u * stride_[i]);
    }
    return out;
  }

  void check_index(std::size_t i) const {
    if (i >= d_) throw InputError("index " + std::to_string(i) + " out of range for arity " + std::to_string(d_), "formula");
  }

  const LabeledGraph& g_;
  std::size_t n_;
  std::size_t d_;
  std::size_t universe_ = 1;
  std::vector<std::size_t> stride_;
  EvalStats* stats_;
  std::unordered_map<const void*, TupleSet> cache_;
  std::unordered_map<const void*, bool> closed_;
};

void check_size(const LabeledGraph& g, std::size_t d, const EvalOptions& options) {
  if (d == 0) throw InputError("arity must be positive", "arity");
  std::size_t total = 1;
  for (std::size_t k = 0; k < d; ++k) {
    if (total > options.max_tuples / std::max<std::size_t>(g.num_nodes(), 1))
      throw ResourceError("|V|^d exceeds the tuple cap of " + std::to_string(options.max_tuples));
    total *= g.num_nodes();
  }
}

}  // namespace

TupleSet evaluate(const LabeledGraph& g, const Formula& f, std::size_t d, const Environment& env,
                  const EvalOptions& options, EvalStats* stats) {
  check_size(g, d, options);
  return Evaluator(g, d, stats).run(f, env);
}

bool models(const LabeledGraph& g, const Formula& f, std::size_t d, const EvalOptions& options) {
  if (!is_closed(f)) throw InputError("formula has free variables", "formula");
  TupleSet s = evaluate(g, f, d, {}, options);
  std::vector<NodeId> root(d, g.root());
  return s.contains(root);
}

}  // namespace polymu
