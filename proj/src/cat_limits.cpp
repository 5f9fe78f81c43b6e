#include "strata/cat/limits.hpp"

namespace strata::cat {

std::vector<Cone> cones_to(const Functor& f) {
    const auto& j = *f.src;
    const auto& c = *f.dst;
    std::vector<Cone> out;
    int k = j.num_objects();
    for (int apex = 0; apex < c.num_objects(); ++apex) {
        std::vector<std::vector<int>> cands(k);
        bool possible = true;
        for (int x = 0; x < k; ++x) {
            cands[x] = c.hom(apex, f.obj_map[x]);
            if (cands[x].empty()) { possible = false; break; }
        }
        if (!possible && k > 0) continue;
        std::vector<int> pick(k, 0);
        while (true) {
            Cone cone{apex, {}};
            cone.legs.resize(k);
            for (int x = 0; x < k; ++x) cone.legs[x] = cands[x][pick[x]];
            bool commutes = true;
            for (int m = 0; m < j.num_morphisms() && commutes; ++m) {
                int x = j.morphisms[m].dom, y = j.morphisms[m].cod;
                if (c.compose(f.mor_map[m], cone.legs[x]) != cone.legs[y]) commutes = false;
            }
            if (commutes) out.push_back(std::move(cone));
            int i = 0;
            while (i < k && pick[i] + 1 == static_cast<int>(cands[i].size())) pick[i++] = 0;
            if (i == k) break;
            ++pick[i];
        }
    }
    return out;
}

std::vector<int> mediators(const Functor& f, const Cone& limit, const Cone& cone) {
    const auto& c = *f.dst;
    std::vector<int> out;
    for (int v : c.hom(cone.apex, limit.apex)) {
        bool ok = true;
        for (size_t x = 0; x < limit.legs.size() && ok; ++x)
            if (c.compose(limit.legs[x], v) != cone.legs[x]) ok = false;
        if (ok) out.push_back(v);
    }
    return out;
}

std::vector<Cone> limits_to(const Functor& f) {
    std::vector<Cone> cones = cones_to(f);
    std::vector<Cone> out;
    for (const auto& candidate : cones) {
        bool universal = true;
        for (const auto& cone : cones)
            if (mediators(f, candidate, cone).size() != 1) { universal = false; break; }
        if (universal) out.push_back(candidate);
    }
    return out;
}

FreydVerdict freyd_check(const FinCategory& c, int max_morphisms) {
    if (c.num_morphisms() > max_morphisms)
        throw FeasibilityError("category has " + std::to_string(c.num_morphisms()) +
                               " morphisms; the Arr-indexed sweep is capped at " +
                               std::to_string(max_morphisms));
    if (is_preorder(c)) return {FreydOutcome::Preorder, {}};

    FinCategory arr = arr_category(c);
    int k = arr.num_objects();
    Functor diagram{&arr, &c, std::vector<int>(k, 0), std::vector<int>(k, 0)};
    auto has_limit = [&](const std::vector<int>& objs) {
        diagram.obj_map = objs;
        for (int i = 0; i < k; ++i) diagram.mor_map[i] = c.identity[objs[i]];
        return !limits_to(diagram).empty();
    };

    // Constant diagrams first: the witness in the non-preorder case is
    // expected among them.
    for (int obj = 0; obj < c.num_objects(); ++obj) {
        std::vector<int> objs(k, obj);
        if (!has_limit(objs)) return {FreydOutcome::MissingProduct, objs};
    }
    std::vector<int> objs(k, 0);
    while (true) {
        bool constant = true;
        for (int i = 1; i < k; ++i)
            if (objs[i] != objs[0]) { constant = false; break; }
        if (!constant && !has_limit(objs)) return {FreydOutcome::MissingProduct, objs};
        int i = 0;
        while (i < k && objs[i] + 1 == c.num_objects()) objs[i++] = 0;
        if (i == k) break;
        ++objs[i];
    }
    return {FreydOutcome::TheoremViolation, {}};
}

}  // namespace strata::cat
