#ifndef STRATA_CAT_LIMITS_HPP
#define STRATA_CAT_LIMITS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "strata/cat/core.hpp"

namespace strata::cat {

// A cone to a diagram F: apex object of the target plus one leg
// apex -> F(X) per source object, commuting with every image F(f).
struct Cone {
    int apex;
    std::vector<int> legs;
};

// All cones, by enumeration of apexes and leg tuples.
std::vector<Cone> cones_to(const Functor& f);

// Morphisms v with limit.legs[X] . v = cone.legs[X] for every X.
std::vector<int> mediators(const Functor& f, const Cone& limit, const Cone& cone);

// The universal cones: every cone admits exactly one mediator.
std::vector<Cone> limits_to(const Functor& f);

enum class FreydOutcome { Preorder, MissingProduct, TheoremViolation };

struct FreydVerdict {
    FreydOutcome outcome;
    // For MissingProduct: the object assignment of a diagram over
    // arr_category(c) that has no limit.
    std::vector<int> diagram;
};

struct FeasibilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Searches the diagrams over arr_category(c) for one with no limit
// (constant diagrams first). TheoremViolation — a non-preorder whose
// Arr-indexed products all exist — must never occur.
FreydVerdict freyd_check(const FinCategory& c, int max_morphisms = 5);

}  // namespace strata::cat

#endif
