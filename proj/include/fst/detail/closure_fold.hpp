#pragma once

// The single place where closure meets its closed supersets. The topology
// engine folds FuzzySoftSet objects and the auditor folds pool indices, so a
// mutation here reaches both.

namespace fst::detail {

template <class Set, class Closeds, class Leq, class Meet, class Join>
Set fold_closure(Set acc, const Closeds& closeds, const Set& g, Leq&& leq, [[maybe_unused]] Meet&& meet, [[maybe_unused]] Join&& join) {
  for (const auto& k : closeds) {
    if (!leq(g, k)) continue;
#ifdef FST_MUTATE_CLOSURE
    // Deliberately wrong variant built only for the soundness-alarm test.
    acc = join(acc, k);
#else
    acc = meet(acc, k);
#endif
  }
  return acc;
}

}  // namespace fst::detail
