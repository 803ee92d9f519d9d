#include "idem/fuzzy.hpp"

namespace idem {

fuzzy_set<semiring> complement(const fuzzy_set<semiring>& a) {
  if (!(a.ring() == fuzzy)) {
    throw unsupported_operation("complement is only defined for the fuzzy segment, got " +
                                std::string(a.ring().name()));
  }
  finite_function<semiring> m(fuzzy);
  for (const auto& point : a.universe()) m.set(point, 1.0 - a.grade(point));
  return fuzzy_set<semiring>(a.universe(), std::move(m));
}

} // namespace idem
