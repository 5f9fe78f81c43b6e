#include "strata/model.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "strata/transform.hpp"

namespace strata {

bool FiniteStructure::contains(int a, int b) const {
    const auto& mb = members[b];
    return std::binary_search(mb.begin(), mb.end(), a);
}

FiniteStructure FiniteStructure::make(std::vector<std::string> universe,
                                      std::vector<std::pair<std::string, std::string>> membership,
                                      std::map<std::string, std::string> constants) {
    FiniteStructure m;
    m.universe = std::move(universe);
    for (int i = 0; i < m.size(); ++i) {
        if (m.index.count(m.universe[i]))
            throw std::invalid_argument("duplicate element id '" + m.universe[i] + "'");
        m.index[m.universe[i]] = i;
    }
    m.members.resize(m.universe.size());
    for (const auto& [a, b] : membership) {
        auto ia = m.index.find(a), ib = m.index.find(b);
        if (ia == m.index.end() || ib == m.index.end())
            throw std::invalid_argument("membership pair (" + a + ", " + b + ") leaves the universe");
        m.members[ib->second].push_back(ia->second);
    }
    for (auto& mb : m.members) {
        std::sort(mb.begin(), mb.end());
        mb.erase(std::unique(mb.begin(), mb.end()), mb.end());
    }
    for (const auto& [name, id] : constants) {
        auto it = m.index.find(id);
        if (it == m.index.end())
            throw std::invalid_argument("constant '" + name + "' names no element");
        m.constants[name] = it->second;
    }
    return m;
}

std::string FiniteStructure::to_json() const {
    nlohmann::json j;
    j["universe"] = universe;
    auto pairs = nlohmann::json::array();
    for (int b = 0; b < size(); ++b)
        for (int a : members[b]) pairs.push_back({universe[a], universe[b]});
    j["membership"] = pairs;
    auto consts = nlohmann::json::object();
    for (const auto& [name, idx] : constants) consts[name] = universe[idx];
    j["constants"] = consts;
    return j.dump();
}

FiniteStructure FiniteStructure::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<std::string> universe = j.at("universe").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> membership;
    for (const auto& p : j.at("membership"))
        membership.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
    std::map<std::string, std::string> constants;
    if (j.contains("constants"))
        for (auto it = j["constants"].begin(); it != j["constants"].end(); ++it)
            constants[it.key()] = it.value().get<std::string>();
    return make(std::move(universe), std::move(membership), std::move(constants));
}

FiniteStructure build_vn(int n) {
    if (n < 0) throw std::invalid_argument("rank must be nonnegative");
    if (n > 5) throw std::invalid_argument("V_" + std::to_string(n) + " exceeds desk scale (max n = 5)");
    static const long long sizes[] = {0, 1, 2, 4, 16, 65536};
    long long count = sizes[n];
    FiniteStructure m;
    m.universe.reserve(count);
    m.members.resize(count);
    for (long long code = 0; code < count; ++code) {
        m.universe.push_back(std::to_string(code));
        m.index[m.universe.back()] = static_cast<int>(code);
        for (int bit = 0; bit < 16; ++bit)
            if (code & (1LL << bit)) m.members[code].push_back(bit);
    }
    return m;
}

namespace {

struct Evaluator {
    const FiniteStructure& m;
    const Valuation& v;
    std::map<int, int> bound;  // binder id -> element index

    int element(const TermPtr& t) {
        if (t->kind != TermKind::SetVar)
            throw std::invalid_argument("evaluation needs plain formulas");
        if (t->binder != 0) return bound.at(t->binder);
        auto it = v.find(t->name);
        if (it != v.end()) {
            auto e = m.index.find(it->second);
            if (e == m.index.end())
                throw std::invalid_argument("valuation sends '" + t->name + "' outside the universe");
            return e->second;
        }
        auto c = m.constants.find(t->name);
        if (c != m.constants.end()) return c->second;
        throw std::invalid_argument("unresolved variable or constant '" + t->name + "'");
    }

    bool go(const FormulaPtr& f) {
        switch (f->kind) {
            case Conn::Member: return m.contains(element(f->lhs), element(f->rhs));
            case Conn::Equal: return element(f->lhs) == element(f->rhs);
            case Conn::Not: return !go(f->a);
            case Conn::And: return go(f->a) && go(f->b);
            case Conn::Or: return go(f->a) || go(f->b);
            case Conn::Implies: return !go(f->a) || go(f->b);
            case Conn::Iff: return go(f->a) == go(f->b);
            case Conn::Forall:
            case Conn::Exists: {
                bool forall = f->kind == Conn::Forall;
                for (int e = 0; e < m.size(); ++e) {
                    bound[f->binder_id] = e;
                    bool val = go(f->a);
                    if (val != forall) {
                        bound.erase(f->binder_id);
                        return !forall;
                    }
                }
                bound.erase(f->binder_id);
                return forall;
            }
        }
        throw std::invalid_argument("corrupt formula");
    }
};

}  // namespace

bool eval_formula(const FormulaPtr& phi, const FiniteStructure& m, const Valuation& v) {
    Evaluator ev{m, v, {}};
    return ev.go(phi);
}

FiniteStructure substructure(const FiniteStructure& m, int s) {
    std::vector<std::string> universe;
    std::set<int> keep(m.members[s].begin(), m.members[s].end());
    for (int a : m.members[s]) universe.push_back(m.universe[a]);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int b : m.members[s])
        for (int a : m.members[b])
            if (keep.count(a)) pairs.emplace_back(m.universe[a], m.universe[b]);
    return FiniteStructure::make(std::move(universe), std::move(pairs));
}

int reflect_search(const std::vector<FormulaPtr>& phis, int n) {
    FiniteStructure ambient = build_vn(n);
    static const int sizes[] = {0, 1, 2, 4, 16, 65536};
    for (int m = 0; m < n; ++m) {
        // V_m is the element whose members are exactly the codes < |V_m|.
        long long stage_code = (1LL << sizes[m]) - 1;
        std::string stage_id = std::to_string(stage_code);
        std::string guard = "R";
        bool all_agree = true;
        for (const auto& phi : phis) {
            std::set<std::string> names = all_names(phi);
            std::string r = guard;
            for (int i = 0; names.count(r); ++i) r = "R" + std::to_string(i);
            FormulaPtr rel = relativize(phi, r, Dialect::Plain);
            FiniteStructure scoped = ambient;
            scoped.constants[r] = scoped.index.at(stage_id);

            std::set<std::string> fv = free_variables(phi);
            std::vector<std::string> params(fv.begin(), fv.end());
            int k = static_cast<int>(params.size());
            bool agree = true;
            if (k == 0 || sizes[m] > 0) {  // otherwise no parameter tuples exist
                std::vector<int> tuple(k, 0);
                while (true) {
                    Valuation val;
                    for (int i = 0; i < k; ++i) val[params[i]] = std::to_string(tuple[i]);
                    if (eval_formula(rel, scoped, val) != eval_formula(phi, ambient, val)) {
                        agree = false;
                        break;
                    }
                    int i = 0;
                    while (i < k && tuple[i] == sizes[m] - 1) tuple[i++] = 0;
                    if (i == k) break;
                    ++tuple[i];
                }
            }
            if (!agree) { all_agree = false; break; }
        }
        if (all_agree) return m;
    }
    return n;
}

std::pair<long long, long long> singleton_image_check(const FiniteStructure& m, const std::string& a) {
    auto it = m.index.find(a);
    if (it == m.index.end()) throw std::invalid_argument("element '" + a + "' is not in the universe");
    const auto& ext = m.members[it->second];
    std::set<int> ext_set(ext.begin(), ext.end());
    long long k = static_cast<long long>(ext.size());
    if (k > 20) throw std::invalid_argument("powerset too large to check");

    std::set<std::vector<int>> subsets, singletons;
    for (int b = 0; b < m.size(); ++b) {
        const auto& eb = m.members[b];
        bool inside = true;
        for (int x : eb)
            if (!ext_set.count(x)) { inside = false; break; }
        if (!inside) continue;
        subsets.insert(eb);
        if (eb.size() == 1) singletons.insert(eb);
    }
    if (static_cast<long long>(subsets.size()) < (1LL << k))
        throw std::invalid_argument("powerset of '" + a + "' is not fully contained in the structure");
    return {static_cast<long long>(singletons.size()), static_cast<long long>(subsets.size())};
}

}  // namespace strata
