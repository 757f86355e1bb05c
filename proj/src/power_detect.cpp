#include "polymu/dbisim.hpp"
#include "polymu/error.hpp"
#include "polymu/eval.hpp"
#include "polymu/generators.hpp"
#include "polymu/signature.hpp"

namespace polymu {
namespace {

PowerConditions by_dbisim(const LabeledGraph& g) {
  LabeledGraph r = reachable_part(g);
  DBisimFamily fam = largest_d_bisimulation(r);
  return {is_persistent(r, fam), has_reset_property(r, fam), is_power_rooted(r, fam)};
}

PowerConditions by_logic(const LabeledGraph& g, const LiftedSignature& ls) {
  return {models(g, gen_per(ls.d, ls.base), 2), models(g, gen_rst(ls.d, ls.base), 2),
          models(g, gen_pow(ls.d, ls.base), 2)};
}

}  // namespace

PowerConditions power_conditions(const LabeledGraph& g, std::size_t d, PowerMethod method) {
  LiftedSignature ls = LiftedSignature::detect(g.signature());
  if (ls.d != d)
    throw InputError("graph signature is lifted for d = " + std::to_string(ls.d) + ", not " + std::to_string(d), "d");
  switch (method) {
    case PowerMethod::kDBisim: return by_dbisim(g);
    case PowerMethod::kLogic: return by_logic(g, ls);
    case PowerMethod::kBoth: break;
  }
  PowerConditions a = by_dbisim(g);
  PowerConditions b = by_logic(g, ls);
  if (!(a == b)) {
    auto show = [](const PowerConditions& p) {
      return std::string("per=") + (p.persistent ? "1" : "0") + " rst=" + (p.reset ? "1" : "0") +
             " pow=" + (p.power_rooted ? "1" : "0");
    };
    throw ConsistencyError("power detection disagrees: dbisim " + show(a) + ", logic " + show(b));
  }
  return a;
}

bool detect_power(const LabeledGraph& g, std::size_t d, PowerMethod method) {
  return power_conditions(g, d, method).is_power();
}

}  // namespace polymu
