#include "strata/cat/setcat.hpp"

#include <algorithm>
#include <stdexcept>

namespace strata::cat {

std::vector<Violation> validate_set_functor(const SetFunctor& f) {
    std::vector<Violation> out;
    const auto& c = *f.c;
    if (static_cast<int>(f.size.size()) != c.num_objects() ||
        static_cast<int>(f.map.size()) != c.num_morphisms()) {
        out.push_back({"functor-total", "value sizes or tables do not cover the category"});
        return out;
    }
    for (int m = 0; m < c.num_morphisms(); ++m) {
        int dom = c.morphisms[m].dom, cod = c.morphisms[m].cod;
        if (static_cast<int>(f.map[m].size()) != f.size[dom]) {
            out.push_back({"functor-table", "table of " + c.morphisms[m].id + " has wrong arity"});
            continue;
        }
        for (int x : f.map[m])
            if (x < 0 || x >= f.size[cod])
                out.push_back({"functor-table", "table of " + c.morphisms[m].id + " leaves the value set"});
    }
    if (!out.empty()) return out;
    for (int i = 0; i < c.num_objects(); ++i)
        for (int x = 0; x < f.size[i]; ++x)
            if (f.map[c.identity[i]][x] != x) {
                out.push_back({"functor-identity", "identity of " + c.objects[i] + " is not preserved"});
                break;
            }
    for (int g = 0; g < c.num_morphisms(); ++g)
        for (int m = 0; m < c.num_morphisms(); ++m) {
            if (!c.composable(g, m)) continue;
            int gm = c.compose(g, m);
            for (int x = 0; x < f.size[c.morphisms[m].dom]; ++x)
                if (f.map[gm][x] != f.map[g][f.map[m][x]]) {
                    out.push_back({"functor-composition", "composite " + c.morphisms[g].id + " . " +
                                                              c.morphisms[m].id + " is not preserved"});
                    break;
                }
        }
    return out;
}

SetFunctor hom_functor(const FinCategory& c, int a) {
    SetFunctor f;
    f.c = &c;
    std::vector<std::vector<int>> homs(c.num_objects());
    f.size.resize(c.num_objects());
    f.labels.resize(c.num_objects());
    for (int x = 0; x < c.num_objects(); ++x) {
        homs[x] = c.hom(a, x);
        f.size[x] = static_cast<int>(homs[x].size());
        for (int m : homs[x]) f.labels[x].push_back(c.morphisms[m].id);
    }
    auto position = [&](int x, int m) {
        auto it = std::find(homs[x].begin(), homs[x].end(), m);
        return static_cast<int>(it - homs[x].begin());
    };
    f.map.resize(c.num_morphisms());
    for (int m = 0; m < c.num_morphisms(); ++m) {
        int x = c.morphisms[m].dom, y = c.morphisms[m].cod;
        for (int g : homs[x]) f.map[m].push_back(position(y, c.compose(m, g)));
    }
    return f;
}

std::vector<NatFamily> nat_transformations(const SetFunctor& f, const SetFunctor& g) {
    if (f.c != g.c) throw std::invalid_argument("natural transformations need parallel functors");
    const auto& c = *f.c;
    int n = c.num_objects();
    std::vector<NatFamily> out;
    NatFamily family(n);

    // component tables in object order, naturality checked as soon as
    // both endpoints of a morphism are assigned
    std::function<void(int)> assign = [&](int obj) {
        if (obj == n) {
            out.push_back(family);
            return;
        }
        long long combos = 1;
        for (int x = 0; x < f.size[obj]; ++x) combos *= g.size[obj];
        if (f.size[obj] > 0 && g.size[obj] == 0) return;
        std::vector<int> table(f.size[obj], 0);
        for (long long it = 0; it < std::max(combos, 1LL); ++it) {
            family[obj] = table;
            bool natural = true;
            for (int m = 0; m < c.num_morphisms() && natural; ++m) {
                int dom = c.morphisms[m].dom, cod = c.morphisms[m].cod;
                if (dom > obj || cod > obj) continue;
                for (int x = 0; x < f.size[dom]; ++x)
                    if (g.map[m][family[dom][x]] != family[cod][f.map[m][x]]) { natural = false; break; }
            }
            if (natural) assign(obj + 1);
            int i = 0;
            while (i < f.size[obj] && table[i] + 1 == g.size[obj]) table[i++] = 0;
            if (i == f.size[obj]) break;
            ++table[i];
        }
        family[obj].clear();
    };
    assign(0);
    return out;
}

YonedaReport yoneda_check(const FinCategory& c, const SetFunctor& f, int a) {
    YonedaReport rep;
    rep.fa_size = f.size[a];

    SetFunctor hom = hom_functor(c, a);
    std::vector<NatFamily> images;
    for (int x = 0; x < f.size[a]; ++x) {
        NatFamily fam(c.num_objects());
        for (int obj = 0; obj < c.num_objects(); ++obj) {
            const auto& hs = c.hom(a, obj);
            for (int m : hs) fam[obj].push_back(f.map[m][x]);
        }
        images.push_back(std::move(fam));
    }

    // each image natural in every morphism
    rep.images_natural = true;
    for (const auto& fam : images) {
        for (int m = 0; m < c.num_morphisms() && rep.images_natural; ++m) {
            int dom = c.morphisms[m].dom, cod = c.morphisms[m].cod;
            for (int x = 0; x < hom.size[dom]; ++x)
                if (f.map[m][fam[dom][x]] != fam[cod][hom.map[m][x]]) {
                    rep.images_natural = false;
                    rep.detail = "yon image is not natural at " + c.morphisms[m].id;
                    break;
                }
        }
    }

    rep.injective = true;
    for (size_t i = 0; i < images.size() && rep.injective; ++i)
        for (size_t j = i + 1; j < images.size(); ++j)
            if (images[i] == images[j]) {
                rep.injective = false;
                rep.detail = "yon identifies two elements of F(A)";
                break;
            }

    std::vector<NatFamily> nats = nat_transformations(hom, f);
    rep.nat_count = static_cast<long long>(nats.size());
    rep.surjective = true;
    for (const auto& nat : nats) {
        if (std::find(images.begin(), images.end(), nat) == images.end()) {
            rep.surjective = false;
            rep.detail = "a natural transformation is not a yon image";
            break;
        }
    }

    rep.pass = rep.images_natural && rep.injective && rep.surjective &&
               rep.nat_count == rep.fa_size;
    return rep;
}

void for_each_set_functor(const FinCategory& c, int max_size,
                          const std::function<void(const SetFunctor&)>& fn) {
    int n = c.num_objects(), m = c.num_morphisms();
    SetFunctor f;
    f.c = &c;
    f.size.assign(n, 0);
    f.map.assign(m, {});

    std::vector<int> order;  // non-identity morphisms
    std::vector<bool> is_id(m, false);
    for (int i = 0; i < n; ++i) is_id[c.identity[i]] = true;
    for (int i = 0; i < m; ++i)
        if (!is_id[i]) order.push_back(i);

    std::vector<bool> assigned(m, false);

    // check all fully-assigned composites against their factors
    auto consistent = [&](int just) {
        for (int g = 0; g < m; ++g)
            for (int h = 0; h < m; ++h) {
                if (!c.composable(g, h)) continue;
                int gh = c.compose(g, h);
                if (g != just && h != just && gh != just) continue;
                if (!assigned[g] || !assigned[h] || !assigned[gh]) continue;
                for (int x = 0; x < f.size[c.morphisms[h].dom]; ++x)
                    if (f.map[gh][x] != f.map[g][f.map[h][x]]) return false;
            }
        return true;
    };

    std::function<void(size_t)> tables = [&](size_t oi) {
        if (oi == order.size()) {
            fn(f);
            return;
        }
        int mor = order[oi];
        int dn = f.size[c.morphisms[mor].dom], cn = f.size[c.morphisms[mor].cod];
        if (dn > 0 && cn == 0) return;
        std::vector<int> table(dn, 0);
        long long combos = 1;
        for (int i = 0; i < dn; ++i) combos *= cn;
        for (long long it = 0; it < std::max(combos, 1LL); ++it) {
            f.map[mor] = table;
            assigned[mor] = true;
            if (consistent(mor)) tables(oi + 1);
            assigned[mor] = false;
            int i = 0;
            while (i < dn && table[i] + 1 == cn) table[i++] = 0;
            if (i == dn) break;
            ++table[i];
        }
        f.map[mor].clear();
    };

    std::function<void(int)> sizes = [&](int obj) {
        if (obj == n) {
            for (int i = 0; i < n; ++i) {
                f.map[c.identity[i]].resize(f.size[i]);
                for (int x = 0; x < f.size[i]; ++x) f.map[c.identity[i]][x] = x;
                assigned[c.identity[i]] = true;
            }
            tables(0);
            for (int i = 0; i < n; ++i) assigned[c.identity[i]] = false;
            return;
        }
        for (int s = 0; s <= max_size; ++s) {
            f.size[obj] = s;
            sizes(obj + 1);
        }
    };
    sizes(0);
}

std::vector<SetFunctor> enum_set_functors(const FinCategory& c, int max_size) {
    std::vector<SetFunctor> out;
    for_each_set_functor(c, max_size, [&](const SetFunctor& f) { out.push_back(f); });
    return out;
}

int SetCategory::object_of(const std::vector<std::string>& elems) const {
    for (size_t i = 0; i < elements.size(); ++i)
        if (elements[i] == elems) return static_cast<int>(i);
    return -1;
}

int SetCategory::function_index(int dom, int cod, const std::vector<int>& table) const {
    for (int m = 0; m < cat.num_morphisms(); ++m)
        if (cat.morphisms[m].dom == dom && cat.morphisms[m].cod == cod && tables[m] == table)
            return m;
    return -1;
}

SetCategory fin_set_category(const std::vector<std::vector<std::string>>& sets) {
    SetCategory sc;
    sc.elements = sets;
    int n = static_cast<int>(sets.size());
    for (int i = 0; i < n; ++i) sc.cat.objects.push_back("S" + std::to_string(i));

    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int dn = static_cast<int>(sets[a].size()), cn = static_cast<int>(sets[b].size());
            if (dn > 0 && cn == 0) continue;
            std::vector<int> table(dn, 0);
            long long combos = 1;
            for (int i = 0; i < dn; ++i) combos *= cn;
            for (long long it = 0; it < std::max(combos, 1LL); ++it) {
                sc.cat.morphisms.push_back(
                    {"m" + std::to_string(sc.cat.morphisms.size()), a, b});
                sc.tables.push_back(table);
                int i = 0;
                while (i < dn && table[i] + 1 == cn) table[i++] = 0;
                if (i == dn) break;
                ++table[i];
            }
        }

    int m = sc.cat.num_morphisms();
    sc.cat.identity.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        std::vector<int> idt(sets[i].size());
        for (size_t x = 0; x < sets[i].size(); ++x) idt[x] = static_cast<int>(x);
        sc.cat.identity[i] = sc.function_index(i, i, idt);
    }
    sc.cat.table.assign(m, std::vector<int>(m, -1));
    for (int g = 0; g < m; ++g)
        for (int f = 0; f < m; ++f) {
            if (!sc.cat.composable(g, f)) continue;
            std::vector<int> comp(sc.tables[f].size());
            for (size_t x = 0; x < comp.size(); ++x) comp[x] = sc.tables[g][sc.tables[f][x]];
            sc.cat.table[g][f] = sc.function_index(sc.cat.morphisms[f].dom, sc.cat.morphisms[g].cod, comp);
        }
    return sc;
}

}  // namespace strata::cat
