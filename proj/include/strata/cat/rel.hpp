#ifndef STRATA_CAT_REL_HPP
#define STRATA_CAT_REL_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace strata::cat {

// Carrier for the category of relations between subsets of a finite
// universe. Tagged pairs <x, i> are reserved as extra carrier elements
// in a closure step so product apexes are themselves objects.
struct RelUniverse {
    std::vector<std::string> tokens;  // base elements first, then pair tokens
    int base = 0;
    std::map<std::pair<int, int>, int> pairs;  // (element, tag) -> token

    static RelUniverse close_over(std::vector<std::string> base_tokens,
                                  const std::vector<int>& tags);
    int size() const { return static_cast<int>(tokens.size()); }
    int pair_of(int x, int tag) const;  // -1 when not reserved
};

using Mask = std::uint64_t;

// A relation with designated dom/cod objects (subsets of the carrier).
struct Rel {
    Mask dom = 0, cod = 0;
    std::vector<Mask> adj;  // adj[u] = successors of u, within cod

    bool operator==(const Rel& o) const { return dom == o.dom && cod == o.cod && adj == o.adj; }
};

Rel rel_make(const RelUniverse& u, Mask dom, Mask cod,
             const std::vector<std::pair<int, int>>& edges);
Rel rel_identity(const RelUniverse& u, Mask a);
Rel rel_compose(const RelUniverse& u, const Rel& q, const Rel& r);  // q after r
Rel rel_dagger(const RelUniverse& u, const Rel& r);
// Total and single-valued on its dom.
bool is_function(const Rel& r);

struct RelCone {
    Mask apex;
    std::vector<std::pair<int, Rel>> legs;  // tag -> projection apex -> F(tag)
};

struct RelCocone {
    Mask apex;
    std::vector<std::pair<int, Rel>> legs;  // tag -> injection F(tag) -> apex
};

struct CarrierOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// P = { <x, i> | x in F(i) } with projections { (<x, i>, x) }.
RelCone rel_product(const RelUniverse& u, const std::vector<std::pair<int, Mask>>& diagram);

// The dagger of the product data: tagged disjoint union with
// injection relations.
RelCocone rel_coproduct(const RelUniverse& u, const std::vector<std::pair<int, Mask>>& diagram);

// Same apex; verifies the injections are functions.
RelCocone set_coproduct(const RelUniverse& u, const std::vector<std::pair<int, Mask>>& diagram);

// The canonical mediator u = { (a, <x, i>) | a R_i x } for a cone with
// the given apex and legs.
Rel product_mediator(const RelUniverse& u, const RelCone& product, Mask apex,
                     const std::vector<std::pair<int, Rel>>& legs);

// Every relation v : apex -> product.apex with legs[i] = pi_i . v, by
// literal enumeration of all 2^(|apex| * |P|) candidates (capped).
std::vector<Rel> product_mediators_brute(const RelUniverse& u, const RelCone& product, Mask apex,
                                         const std::vector<std::pair<int, Rel>>& legs,
                                         long long cap = 1 << 22);

// Dual: every v : coproduct.apex -> apex with legs[i] = v . iota_i;
// functions_only restricts the candidates to functions.
std::vector<Rel> coproduct_mediators_brute(const RelUniverse& u, const RelCocone& coproduct,
                                           Mask apex, const std::vector<std::pair<int, Rel>>& legs,
                                           bool functions_only, long long cap = 1 << 22);

}  // namespace strata::cat

#endif
