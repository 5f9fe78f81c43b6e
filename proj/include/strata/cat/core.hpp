#ifndef STRATA_CAT_CORE_HPP
#define STRATA_CAT_CORE_HPP

#include <string>
#include <vector>

namespace strata::cat {

// A finite category given by a total composition table. Identities are
// listed per object; table[g][f] is g after f, or -1 when cod(f) != dom(g).
struct FinCategory {
    struct Mor {
        std::string id;
        int dom, cod;
    };
    std::vector<std::string> objects;
    std::vector<Mor> morphisms;
    std::vector<int> identity;
    std::vector<std::vector<int>> table;

    int num_objects() const { return static_cast<int>(objects.size()); }
    int num_morphisms() const { return static_cast<int>(morphisms.size()); }
    bool composable(int g, int f) const { return morphisms[f].cod == morphisms[g].dom; }
    int compose(int g, int f) const { return table[g][f]; }
    std::vector<int> hom(int a, int b) const;
    int object_index(const std::string& id) const;    // -1 when absent
    int morphism_index(const std::string& id) const;  // -1 when absent

    std::string to_json(bool pretty = false) const;
    static FinCategory from_json(const std::string& text);
};

struct Violation {
    std::string law;
    std::string detail;
};

// Empty result iff the identity laws, associativity, totality and
// dom/cod coherence of the table all hold.
std::vector<Violation> validate_category(const FinCategory& c);

// The discrete category on the morphisms of c.
FinCategory arr_category(const FinCategory& c);

// At most one morphism between any two objects.
bool is_preorder(const FinCategory& c);

struct Functor {
    const FinCategory* src = nullptr;
    const FinCategory* dst = nullptr;
    std::vector<int> obj_map;
    std::vector<int> mor_map;
};

std::vector<Violation> validate_functor(const Functor& f);

}  // namespace strata::cat

#endif
