#include "strata/cat/core.hpp"

#include <stdexcept>

#include <json.hpp>

namespace strata::cat {

std::vector<int> FinCategory::hom(int a, int b) const {
    std::vector<int> out;
    for (int m = 0; m < num_morphisms(); ++m)
        if (morphisms[m].dom == a && morphisms[m].cod == b) out.push_back(m);
    return out;
}

int FinCategory::object_index(const std::string& id) const {
    for (int i = 0; i < num_objects(); ++i)
        if (objects[i] == id) return i;
    return -1;
}

int FinCategory::morphism_index(const std::string& id) const {
    for (int i = 0; i < num_morphisms(); ++i)
        if (morphisms[i].id == id) return i;
    return -1;
}

std::string FinCategory::to_json(bool pretty) const {
    nlohmann::json j;
    j["objects"] = objects;
    auto mors = nlohmann::json::array();
    for (const auto& m : morphisms)
        mors.push_back({{"id", m.id}, {"dom", objects[m.dom]}, {"cod", objects[m.cod]}});
    j["morphisms"] = mors;
    auto ids = nlohmann::json::object();
    for (int i = 0; i < num_objects(); ++i) ids[objects[i]] = morphisms[identity[i]].id;
    j["identities"] = ids;
    auto comp = nlohmann::json::array();
    for (int g = 0; g < num_morphisms(); ++g)
        for (int f = 0; f < num_morphisms(); ++f)
            if (composable(g, f))
                comp.push_back({morphisms[g].id, morphisms[f].id, morphisms[table[g][f]].id});
    j["compose"] = comp;
    return pretty ? j.dump(2) : j.dump();
}

FinCategory FinCategory::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    FinCategory c;
    c.objects = j.at("objects").get<std::vector<std::string>>();
    for (const auto& m : j.at("morphisms")) {
        int dom = c.object_index(m.at("dom").get<std::string>());
        int cod = c.object_index(m.at("cod").get<std::string>());
        if (dom < 0 || cod < 0) throw std::invalid_argument("morphism endpoint names no object");
        c.morphisms.push_back({m.at("id").get<std::string>(), dom, cod});
    }
    c.identity.assign(c.num_objects(), -1);
    for (auto it = j.at("identities").begin(); it != j.at("identities").end(); ++it) {
        int obj = c.object_index(it.key());
        int mor = c.morphism_index(it.value().get<std::string>());
        if (obj < 0 || mor < 0) throw std::invalid_argument("identity entry names an unknown object or morphism");
        c.identity[obj] = mor;
    }
    for (int i = 0; i < c.num_objects(); ++i)
        if (c.identity[i] < 0) throw std::invalid_argument("object '" + c.objects[i] + "' lacks an identity");
    c.table.assign(c.num_morphisms(), std::vector<int>(c.num_morphisms(), -1));
    for (const auto& entry : j.at("compose")) {
        int g = c.morphism_index(entry.at(0).get<std::string>());
        int f = c.morphism_index(entry.at(1).get<std::string>());
        int r = c.morphism_index(entry.at(2).get<std::string>());
        if (g < 0 || f < 0 || r < 0) throw std::invalid_argument("compose entry names an unknown morphism");
        c.table[g][f] = r;
    }
    return c;
}

std::vector<Violation> validate_category(const FinCategory& c) {
    std::vector<Violation> out;
    int n = c.num_objects(), m = c.num_morphisms();
    auto mid = [&](int i) { return c.morphisms[i].id; };

    if (static_cast<int>(c.identity.size()) != n) {
        out.push_back({"identity-total", "identity map does not cover the objects"});
        return out;
    }
    if (static_cast<int>(c.table.size()) != m) {
        out.push_back({"compose-total", "composition table has wrong dimensions"});
        return out;
    }
    for (int i = 0; i < m; ++i)
        if (static_cast<int>(c.table[i].size()) != m) {
            out.push_back({"compose-total", "composition table has wrong dimensions"});
            return out;
        }

    for (int i = 0; i < n; ++i) {
        int e = c.identity[i];
        if (e < 0 || e >= m || c.morphisms[e].dom != i || c.morphisms[e].cod != i)
            out.push_back({"identity-endpoints",
                           "identity of " + c.objects[i] + " is not an endomorphism of it"});
    }

    for (int g = 0; g < m; ++g)
        for (int f = 0; f < m; ++f) {
            int r = c.table[g][f];
            if (!c.composable(g, f)) {
                if (r != -1)
                    out.push_back({"compose-partiality",
                                   "(" + mid(g) + ", " + mid(f) + ") is not composable but has an entry"});
                continue;
            }
            if (r < 0 || r >= m) {
                out.push_back({"compose-total", "(" + mid(g) + " . " + mid(f) + ") is undefined"});
                continue;
            }
            if (c.morphisms[r].dom != c.morphisms[f].dom || c.morphisms[r].cod != c.morphisms[g].cod)
                out.push_back({"compose-endpoints",
                               mid(g) + " . " + mid(f) + " = " + mid(r) + " has wrong dom/cod"});
        }
    if (!out.empty()) return out;  // laws below assume a total well-typed table

    for (int f = 0; f < m; ++f) {
        if (c.compose(f, c.identity[c.morphisms[f].dom]) != f)
            out.push_back({"identity-right", mid(f) + " . id != " + mid(f)});
        if (c.compose(c.identity[c.morphisms[f].cod], f) != f)
            out.push_back({"identity-left", "id . " + mid(f) + " != " + mid(f)});
    }

    for (int h = 0; h < m; ++h)
        for (int g = 0; g < m; ++g) {
            if (!c.composable(h, g)) continue;
            for (int f = 0; f < m; ++f) {
                if (!c.composable(g, f)) continue;
                if (c.compose(h, c.compose(g, f)) != c.compose(c.compose(h, g), f))
                    out.push_back({"associativity",
                                   "(" + mid(h) + ", " + mid(g) + ", " + mid(f) + ") associates badly"});
            }
        }
    return out;
}

FinCategory arr_category(const FinCategory& c) {
    FinCategory a;
    for (const auto& m : c.morphisms) a.objects.push_back(m.id);
    int n = a.num_objects();
    for (int i = 0; i < n; ++i) {
        a.morphisms.push_back({"id_" + a.objects[i], i, i});
        a.identity.push_back(i);
    }
    a.table.assign(n, std::vector<int>(n, -1));
    for (int i = 0; i < n; ++i) a.table[i][i] = i;
    return a;
}

bool is_preorder(const FinCategory& c) {
    int n = c.num_objects();
    std::vector<std::vector<int>> count(n, std::vector<int>(n, 0));
    for (const auto& m : c.morphisms)
        if (++count[m.dom][m.cod] > 1) return false;
    return true;
}

std::vector<Violation> validate_functor(const Functor& f) {
    std::vector<Violation> out;
    const auto& s = *f.src;
    const auto& d = *f.dst;
    if (static_cast<int>(f.obj_map.size()) != s.num_objects() ||
        static_cast<int>(f.mor_map.size()) != s.num_morphisms()) {
        out.push_back({"functor-total", "object or morphism map does not cover the source"});
        return out;
    }
    for (int m = 0; m < s.num_morphisms(); ++m) {
        int fm = f.mor_map[m];
        if (d.morphisms[fm].dom != f.obj_map[s.morphisms[m].dom] ||
            d.morphisms[fm].cod != f.obj_map[s.morphisms[m].cod])
            out.push_back({"functor-endpoints", "image of " + s.morphisms[m].id + " has wrong dom/cod"});
    }
    for (int i = 0; i < s.num_objects(); ++i)
        if (f.mor_map[s.identity[i]] != d.identity[f.obj_map[i]])
            out.push_back({"functor-identity", "identity of " + s.objects[i] + " is not preserved"});
    for (int g = 0; g < s.num_morphisms(); ++g)
        for (int fm = 0; fm < s.num_morphisms(); ++fm) {
            if (!s.composable(g, fm)) continue;
            if (f.mor_map[s.compose(g, fm)] != d.compose(f.mor_map[g], f.mor_map[fm]))
                out.push_back({"functor-composition",
                               "composite of " + s.morphisms[g].id + " . " + s.morphisms[fm].id +
                                   " is not preserved"});
        }
    return out;
}

}  // namespace strata::cat
