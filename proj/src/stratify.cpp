#include "strata/stratify.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "strata/print.hpp"

namespace strata {

namespace {

// Identity of a typed entity: variables are (binder, name); other term
// occurrences are identified by a running counter.
struct NodeTable {
    std::vector<std::string> labels;
    std::map<std::pair<int, std::string>, int> vars;  // (binder, name) -> node

    int var_node(const TermPtr& t) {
        auto key = std::make_pair(t->binder, t->name);
        auto it = vars.find(key);
        if (it != vars.end()) return it->second;
        int id = static_cast<int>(labels.size());
        labels.push_back(t->name);
        vars.emplace(key, id);
        return id;
    }

    int binder_node(const Formula& q) {
        auto key = std::make_pair(q.binder_id, q.var);
        auto it = vars.find(key);
        if (it != vars.end()) return it->second;
        int id = static_cast<int>(labels.size());
        labels.push_back(q.var);
        vars.emplace(key, id);
        return id;
    }

    int occurrence_node(const std::string& label) {
        int id = static_cast<int>(labels.size());
        labels.push_back(label);
        return id;
    }

    void disambiguate() {
        std::map<std::string, int> total, seen;
        for (const auto& l : labels) ++total[l];
        for (auto& l : labels)
            if (total[l] > 1) l += "#" + std::to_string(++seen[l]);
    }
};

struct PlainExtractor {
    const std::set<std::string>* constant_like = nullptr;
    NodeTable nodes;
    std::vector<ConstraintGraph::Edge> edges;
    std::vector<int> occurrences;

    int term_node(const TermPtr& t) {
        int node = (constant_like && t->binder == 0 && constant_like->count(t->name))
                       ? nodes.occurrence_node(t->name)
                       : nodes.var_node(t);
        occurrences.push_back(node);
        return node;
    }

    void walk(const FormulaPtr& f) {
        if (is_atom(*f)) {
            int a = term_node(f->lhs);
            int b = term_node(f->rhs);
            edges.push_back({a, b, f->kind == Conn::Member ? 1 : 0});
            return;
        }
        if (is_quantifier(*f)) nodes.binder_node(*f);
        if (f->a) walk(f->a);
        if (f->b) walk(f->b);
    }
};

struct LstarExtractor {
    bool merge_set_vars = false;
    NodeTable nodes;
    std::vector<ConstraintGraph::Edge> edges;
    std::vector<int> occurrences;

    bool merged(const TermPtr& t) const {
        return t->kind == TermKind::ClassVar ||
               (merge_set_vars && t->kind == TermKind::SetVar);
    }

    // Creates the node for a term occurrence, its subterm nodes, and the
    // offset-0 links from each term to the class variables inside it.
    int term_node(const TermPtr& t) {
        if (merged(t)) {
            int node = nodes.var_node(t);
            occurrences.push_back(node);
            return node;
        }
        int self = nodes.occurrence_node(print(t, Dialect::Lstar));
        occurrences.push_back(self);
        if (t->kind != TermKind::Pair) return self;
        std::vector<int> class_nodes;
        collect_class_links(t, class_nodes);
        for (int c : class_nodes) edges.push_back({c, self, 0});
        term_node(t->left);
        term_node(t->right);
        return self;
    }

    void collect_class_links(const TermPtr& t, std::vector<int>& out) {
        if (t->kind == TermKind::ClassVar) out.push_back(nodes.var_node(t));
        if (t->kind == TermKind::Pair) {
            collect_class_links(t->left, out);
            collect_class_links(t->right, out);
        }
    }

    void walk(const FormulaPtr& f) {
        if (is_atom(*f)) {
            int a = term_node(f->lhs);
            int b = term_node(f->rhs);
            edges.push_back({a, b, f->kind == Conn::Member ? 1 : 0});
            return;
        }
        if (f->a) walk(f->a);
        if (f->b) walk(f->b);
    }
};

}  // namespace

ConstraintGraph extract_constraints(const FormulaPtr& f, Dialect d, const StratifyOptions& opts) {
    ConstraintGraph g;
    if (d == Dialect::Plain) {
        PlainExtractor ex;
        ex.constant_like = &opts.constant_like;
        ex.walk(f);
        ex.nodes.disambiguate();
        g.node_labels = std::move(ex.nodes.labels);
        g.edges = std::move(ex.edges);
        g.occurrence_nodes = std::move(ex.occurrences);
    } else if (d == Dialect::Lstar) {
        LstarExtractor ex;
        ex.merge_set_vars = opts.merge_set_vars;
        ex.walk(f);
        ex.nodes.disambiguate();
        g.node_labels = std::move(ex.nodes.labels);
        g.edges = std::move(ex.edges);
        g.occurrence_nodes = std::move(ex.occurrences);
    } else {
        throw DialectError("tst formulas are already typed; stratification applies to plain and lstar");
    }
    return g;
}

std::map<std::string, int> TypeAssignment::by_label(const ConstraintGraph& g) const {
    std::map<std::string, int> out;
    for (size_t i = 0; i < types.size() && i < g.node_labels.size(); ++i)
        out[g.node_labels[i]] = types[i];
    return out;
}

StratifyVerdict solve(const ConstraintGraph& g) {
    int n = static_cast<int>(g.node_labels.size());
    struct Arc {
        int to, offset, edge;
        bool forward;
    };
    std::vector<std::vector<Arc>> adj(n);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        const auto& ed = g.edges[e];
        adj[ed.from].push_back({ed.to, ed.offset, e, true});
        adj[ed.to].push_back({ed.from, -ed.offset, e, false});
    }

    std::vector<int> pot(n, 0), depth(n, 0), comp(n, -1);
    // parent step: how we reached `node` from parent[node]
    std::vector<int> parent(n, -1), parent_edge(n, -1), parent_off(n, 0);
    for (int root = 0; root < n; ++root) {
        if (comp[root] >= 0) continue;
        comp[root] = root;
        pot[root] = 0;
        std::deque<int> q{root};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (const auto& arc : adj[u]) {
                if (comp[arc.to] >= 0) continue;
                comp[arc.to] = root;
                pot[arc.to] = pot[u] + arc.offset;
                depth[arc.to] = depth[u] + 1;
                parent[arc.to] = u;
                parent_edge[arc.to] = arc.edge;
                parent_off[arc.to] = arc.offset;
                q.push_back(arc.to);
            }
        }
    }

    // Scan every edge against the potentials; collect conflicts.
    int best = -1, best_len = 0;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        const auto& ed = g.edges[e];
        if (pot[ed.to] - pot[ed.from] == ed.offset) continue;
        // cycle length: conflict edge + tree paths to the common ancestor
        int a = ed.from, b = ed.to, da = depth[a], db = depth[b];
        while (da > db) { a = parent[a]; --da; }
        while (db > da) { b = parent[b]; --db; }
        while (a != b) { a = parent[a]; b = parent[b]; --da; }
        int len = 1 + (depth[ed.from] - da) + (depth[ed.to] - da);
        if (best < 0 || len < best_len) { best = e; best_len = len; }
    }

    StratifyVerdict v;
    if (best < 0) {
        v.stratified = true;
        // normalize each component to minimum 0
        std::map<int, int> comp_min;
        for (int i = 0; i < n; ++i) {
            auto [it, fresh] = comp_min.emplace(comp[i], pot[i]);
            if (!fresh) it->second = std::min(it->second, pot[i]);
        }
        v.assignment.types.resize(n);
        for (int i = 0; i < n; ++i) v.assignment.types[i] = pot[i] - comp_min[comp[i]];
        return v;
    }

    v.stratified = false;
    const auto& ed = g.edges[best];
    // orient the conflict edge forward, then close the cycle along the
    // tree: from -> to -> ... -> lca -> ... -> from
    v.cycle.push_back({ed.from, ed.to, ed.offset, best});
    std::vector<CycleStep> up, down;
    int a = ed.to, b = ed.from;
    while (depth[a] > depth[b]) {
        up.push_back({a, parent[a], -parent_off[a], parent_edge[a]});
        a = parent[a];
    }
    while (depth[b] > depth[a]) {
        down.push_back({parent[b], b, parent_off[b], parent_edge[b]});
        b = parent[b];
    }
    while (a != b) {
        up.push_back({a, parent[a], -parent_off[a], parent_edge[a]});
        a = parent[a];
        down.push_back({parent[b], b, parent_off[b], parent_edge[b]});
        b = parent[b];
    }
    for (auto& s : up) v.cycle.push_back(s);
    std::reverse(down.begin(), down.end());
    for (auto& s : down) v.cycle.push_back(s);
    return v;
}

StratifyVerdict check_stratified(const FormulaPtr& f, Dialect d, const StratifyOptions& opts) {
    return solve(extract_constraints(f, d, opts));
}

bool brute_force_stratifiable(const ConstraintGraph& g, int bound, long long cap) {
    int n = static_cast<int>(g.node_labels.size());
    long long combos = 1;
    for (int i = 0; i < n; ++i) {
        combos *= bound + 1;
        if (combos > cap) throw CapError("enumeration of " + std::to_string(n) + " nodes with bound " +
                                         std::to_string(bound) + " exceeds the cap");
    }
    std::vector<int> t(n, 0);
    while (true) {
        bool ok = true;
        for (const auto& e : g.edges)
            if (t[e.to] - t[e.from] != e.offset) { ok = false; break; }
        if (ok) return true;
        int i = 0;
        while (i < n && t[i] == bound) t[i++] = 0;
        if (i == n) return false;
        ++t[i];
    }
}

FormulaPtr to_tst(const FormulaPtr& f, const ConstraintGraph& g, const TypeAssignment& assignment) {
    // Recompute the variable -> node map with the extractor's ordering.
    PlainExtractor ex;
    ex.walk(f);
    ex.nodes.disambiguate();
    if (ex.nodes.labels != g.node_labels)
        throw std::invalid_argument("assignment graph does not match the formula");
    if (assignment.types.size() != g.node_labels.size())
        throw std::invalid_argument("assignment does not cover the formula");
    const auto& vars = ex.nodes.vars;

    struct Builder {
        const std::map<std::pair<int, std::string>, int>& vars;
        const std::vector<int>& types;

        TermPtr term(const TermPtr& t) const {
            auto it = vars.find({t->binder, t->name});
            if (it == vars.end()) throw std::invalid_argument("assignment does not cover variable " + t->name);
            return mk_set_var(t->name, types[it->second]);
        }

        FormulaPtr go(const FormulaPtr& f) const {
            if (is_atom(*f)) {
                auto r = std::make_shared<Formula>(*f);
                r->lhs = term(f->lhs);
                r->rhs = term(f->rhs);
                return r;
            }
            auto r = std::make_shared<Formula>(*f);
            if (is_quantifier(*f)) {
                auto it = vars.find({f->binder_id, f->var});
                if (it == vars.end()) throw std::invalid_argument("assignment does not cover binder " + f->var);
                r->var_type = types[it->second];
            }
            if (f->a) r->a = go(f->a);
            if (f->b) r->b = go(f->b);
            return r;
        }
    };
    Builder b{vars, assignment.types};
    return resolve(b.go(f), Dialect::Tst);
}

}  // namespace strata
