#ifndef STRATA_STRATIFY_HPP
#define STRATA_STRATIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "strata/ast.hpp"

namespace strata {

// Difference constraints over the typed entities of a formula. In the
// plain dialect the entities are variables (binder-resolved); in lstar
// they are term occurrences, with all occurrences of a class variable
// merged into one node. An edge (a, b, offset) asserts
// type(b) - type(a) = offset, offset 0 for '=' and 1 for 'in'.
struct ConstraintGraph {
    struct Edge {
        int from, to;
        int offset;
    };
    std::vector<std::string> node_labels;
    std::vector<Edge> edges;
    // Node of each typed term occurrence, in pre-order over the formula
    // (atom left term before right, pair terms before their children).
    // Plain mode lists variable occurrences only.
    std::vector<int> occurrence_nodes;
};

struct StratifyOptions {
    // Merge set-variable occurrences in lstar into one node per variable
    // (the stronger reading; class variables are always merged).
    bool merge_set_vars = false;
    // Free variables playing the role of constants: each occurrence gets
    // its own node, like Vbar occurrences in lstar.
    std::set<std::string> constant_like;
};

struct TypeAssignment {
    // node index -> type; normalized so each connected component's
    // minimum is 0.
    std::vector<int> types;
    std::map<std::string, int> by_label(const ConstraintGraph& g) const;
};

// One traversal step of a witness cycle. `edge` indexes into the graph's
// edge list; `offset` is the offset as traversed (negated when the edge
// is walked against its stored direction).
struct CycleStep {
    int from, to;
    int offset;
    int edge;
};

struct StratifyVerdict {
    bool stratified;
    TypeAssignment assignment;     // when stratified
    std::vector<CycleStep> cycle;  // when not: offsets sum to nonzero
};

ConstraintGraph extract_constraints(const FormulaPtr& f, Dialect d,
                                    const StratifyOptions& opts = {});

// Total on valid graphs: either a normalized satisfying assignment or
// the shortest conflicting cycle among the BFS fundamental cycles.
StratifyVerdict solve(const ConstraintGraph& g);

StratifyVerdict check_stratified(const FormulaPtr& f, Dialect d,
                                 const StratifyOptions& opts = {});

struct CapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exhaustive search over assignments with types in 0..bound. Complete
// when bound >= node count - 1. Throws CapError when (bound+1)^n would
// exceed `cap` assignments.
bool brute_force_stratifiable(const ConstraintGraph& g, int bound,
                              long long cap = 50'000'000);

// Plain formula + assignment covering its variables -> tst formula with
// every occurrence typed. Throws std::invalid_argument if the
// assignment does not cover the formula.
FormulaPtr to_tst(const FormulaPtr& f, const ConstraintGraph& g,
                  const TypeAssignment& assignment);

}  // namespace strata

#endif
