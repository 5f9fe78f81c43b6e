#ifndef STRATA_CAT_ENUMERATE_HPP
#define STRATA_CAT_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "strata/cat/core.hpp"

namespace strata::cat {

// Every finite category with at most max_objects objects and
// max_morphisms morphisms, one representative per isomorphism class.
// Composition tables are generated by backtracking with incremental
// associativity pruning; duplicates are removed by a canonical form
// minimized over object permutations and morphism relabelings.
std::vector<FinCategory> enum_categories(int max_objects, int max_morphisms);

// Streaming variant.
void for_each_category(int max_objects, int max_morphisms,
                       const std::function<void(const FinCategory&)>& fn);

}  // namespace strata::cat

#endif
