#ifndef STRATA_CAT_SETCAT_HPP
#define STRATA_CAT_SETCAT_HPP

#include <functional>
#include <string>
#include <vector>

#include "strata/cat/core.hpp"

namespace strata::cat {

// A functor into finite sets, with elements kept concrete: F(X) is
// {0, .., size[X)-1} and F(f) is a table of element images. Optional
// labels name the elements (hom functors label them by morphism id).
struct SetFunctor {
    const FinCategory* c = nullptr;
    std::vector<int> size;
    std::vector<std::vector<int>> map;  // per morphism of c
    std::vector<std::vector<std::string>> labels;
};

std::vector<Violation> validate_set_functor(const SetFunctor& f);

// C(A, -): X |-> hom(A, X), post-composition on morphisms.
SetFunctor hom_functor(const FinCategory& c, int a);

// One table per object, natural in every morphism.
using NatFamily = std::vector<std::vector<int>>;

std::vector<NatFamily> nat_transformations(const SetFunctor& f, const SetFunctor& g);

struct YonedaReport {
    bool pass = false;
    long long fa_size = 0;
    long long nat_count = 0;
    bool images_natural = false;
    bool injective = false;
    bool surjective = false;
    std::string detail;
};

// Builds yon_A : F(A) -> Nat(C(A,-), F), x |-> (f |-> F(f)(x)), checks
// each image is natural, and checks bijectivity against the full
// enumeration of natural transformations.
YonedaReport yoneda_check(const FinCategory& c, const SetFunctor& f, int a);

// All functors from c into sets of size <= max_size, by backtracking
// over morphism tables with composition pruning.
void for_each_set_functor(const FinCategory& c, int max_size,
                          const std::function<void(const SetFunctor&)>& fn);

std::vector<SetFunctor> enum_set_functors(const FinCategory& c, int max_size);

// The category of the given element sets and all functions between
// them; morphism ids are synthesized. Element labels are retained so
// tests can name functions by where they send elements.
struct SetCategory {
    FinCategory cat;
    std::vector<std::vector<std::string>> elements;          // per object
    std::vector<std::vector<int>> tables;                    // per morphism
    int object_of(const std::vector<std::string>& elems) const;  // -1 when absent
    int function_index(int dom, int cod, const std::vector<int>& table) const;
};

SetCategory fin_set_category(const std::vector<std::vector<std::string>>& sets);

}  // namespace strata::cat

#endif
