#include "modcomp/strata.hpp"

#include <map>
#include <stdexcept>

namespace modcomp {

std::set<std::string> component_strata(const std::vector<Stratum>& strata,
                                       const ClosureOrder& order) {
  std::map<std::string, const Stratum*> by_id;
  int generic = 0;
  for (const auto& s : strata) {
    if (!by_id.emplace(s.id, &s).second)
      throw std::invalid_argument("component_strata: duplicate stratum id " + s.id);
    if (s.rank_offset < 0 || s.codim < 0)
      throw std::invalid_argument("component_strata: negative rank offset or codim");
    if (s.rank_offset == 0 && s.codim == 0) ++generic;
  }
  if (generic != 1)
    throw std::invalid_argument("component_strata: expected exactly one generic stratum");
  std::map<std::string, std::vector<const Stratum*>> superiors;
  for (const auto& [a, b] : order.relation) {
    auto ia = by_id.find(a), ib = by_id.find(b);
    if (ia == by_id.end() || ib == by_id.end())
      throw std::invalid_argument("component_strata: relation references unknown id");
    superiors[a].push_back(ib->second);
  }
  std::set<std::string> out;
  for (const auto& s : strata) {
    bool ok = true;
    auto it = superiors.find(s.id);
    if (it != superiors.end())
      for (const Stratum* sup : it->second)
        if (d_value(s) < d_value(*sup)) { ok = false; break; }
    if (ok) out.insert(s.id);
  }
  return out;
}

std::set<std::string> maximal_cover(const std::vector<std::string>& elements,
                                    const std::set<std::pair<std::string, std::string>>& containment) {
  std::set<std::string> out(elements.begin(), elements.end());
  for (const auto& [a, b] : containment)
    if (a != b) out.erase(a);
  return out;
}

}  // namespace modcomp
