#ifndef STRATA_TESTS_GEN_HPP
#define STRATA_TESTS_GEN_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "strata/ast.hpp"

// Deterministic formula generators shared by the unit and acceptance
// suites. All randomness flows from the caller's engine.

namespace gen {

using strata::FormulaPtr;
using strata::TermPtr;

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

inline std::string var_name(int i) {
    static const char* names[] = {"x", "y", "z", "w", "v", "u", "t", "s"};
    return names[i % 8];
}

// Random connective tree over the given atoms, with optional quantifier
// wrappers drawn from the same variable pool (creating bound/free and
// shadowed occurrences).
inline FormulaPtr combine(Rng& rng, std::vector<FormulaPtr> atoms, int num_vars, int quantifiers) {
    while (atoms.size() > 1) {
        int i = pick(rng, static_cast<int>(atoms.size()) - 1);
        FormulaPtr a = atoms[i], b = atoms[i + 1];
        FormulaPtr joined;
        switch (pick(rng, 5)) {
            case 0: joined = mk_and(a, b); break;
            case 1: joined = mk_or(a, b); break;
            case 2: joined = mk_implies(a, b); break;
            case 3: joined = mk_iff(a, b); break;
            default: joined = mk_and(mk_not(a), b); break;
        }
        atoms[i] = joined;
        atoms.erase(atoms.begin() + i + 1);
    }
    FormulaPtr f = atoms.empty() ? mk_equal(strata::mk_set_var("x"), strata::mk_set_var("x")) : atoms[0];
    for (int q = 0; q < quantifiers; ++q) {
        std::string v = var_name(pick(rng, num_vars));
        f = pick(rng, 2) ? mk_forall(v, f) : mk_exists(v, f);
    }
    if (pick(rng, 4) == 0) f = mk_not(f);
    return f;
}

// Arbitrary plain formula: atoms over a small variable pool, sampled
// connectives, a few quantifiers.
inline FormulaPtr plain_formula(Rng& rng, int max_vars, int max_atoms) {
    int vars = 1 + pick(rng, max_vars);
    int natoms = 1 + pick(rng, max_atoms);
    std::vector<FormulaPtr> atoms;
    for (int i = 0; i < natoms; ++i) {
        TermPtr a = strata::mk_set_var(var_name(pick(rng, vars)));
        TermPtr b = strata::mk_set_var(var_name(pick(rng, vars)));
        atoms.push_back(pick(rng, 2) ? mk_member(a, b) : mk_equal(a, b));
    }
    FormulaPtr raw = combine(rng, std::move(atoms), vars, pick(rng, 3));
    return strata::resolve(raw, strata::Dialect::Plain);
}

// Stratified by construction: fix a type per variable first, then emit
// only atoms the types allow. No shadowing, so the witness is exactly
// the chosen typing.
inline FormulaPtr stratified_plain_formula(Rng& rng, int max_vars, int max_atoms) {
    int vars = 1 + pick(rng, max_vars);
    std::vector<int> type(vars);
    for (int& t : type) t = pick(rng, 3);
    int natoms = 1 + pick(rng, max_atoms);
    std::vector<FormulaPtr> atoms;
    for (int i = 0; i < natoms && static_cast<int>(atoms.size()) < natoms; ++i) {
        int a = pick(rng, vars), b = pick(rng, vars);
        if (type[b] == type[a] + 1)
            atoms.push_back(mk_member(strata::mk_set_var(var_name(a)), strata::mk_set_var(var_name(b))));
        else if (type[a] == type[b])
            atoms.push_back(mk_equal(strata::mk_set_var(var_name(a)), strata::mk_set_var(var_name(b))));
        else
            atoms.push_back(mk_equal(strata::mk_set_var(var_name(a)), strata::mk_set_var(var_name(a))));
    }
    // quantify some suffix of the pool; every variable keeps one type
    FormulaPtr f = atoms[0];
    for (size_t i = 1; i < atoms.size(); ++i)
        f = pick(rng, 2) ? mk_and(f, atoms[i]) : mk_or(f, atoms[i]);
    for (int v = 0; v < vars; ++v)
        if (pick(rng, 2)) f = pick(rng, 2) ? mk_forall(var_name(v), f) : mk_exists(var_name(v), f);
    return strata::resolve(f, strata::Dialect::Plain);
}

// Closed plain formula with quantifier depth <= max_depth; atoms only
// mention bound variables. `fuel` bounds the node count.
inline FormulaPtr closed_formula(Rng& rng, int max_depth, int fuel = 24) {
    std::vector<std::string> bound;
    int counter = 0;
    std::function<FormulaPtr(int)> go = [&](int depth) -> FormulaPtr {
        --fuel;
        bool must_quantify = bound.empty();
        if (must_quantify || (depth < max_depth && fuel > 0 && pick(rng, 3) == 0)) {
            std::string v = "q" + std::to_string(counter++);
            bound.push_back(v);
            FormulaPtr body = go(depth + 1);
            bound.pop_back();
            return pick(rng, 2) ? mk_forall(v, body) : mk_exists(v, body);
        }
        switch (fuel <= 0 ? 5 : pick(rng, 6)) {
            case 0: return mk_not(go(depth));
            case 1: return mk_and(go(depth), go(depth));
            case 2: return mk_or(go(depth), go(depth));
            case 3: return mk_implies(go(depth), go(depth));
            default: {
                TermPtr a = strata::mk_set_var(bound[pick(rng, static_cast<int>(bound.size()))]);
                TermPtr b = strata::mk_set_var(bound[pick(rng, static_cast<int>(bound.size()))]);
                return pick(rng, 2) ? mk_member(a, b) : mk_equal(a, b);
            }
        }
    };
    return strata::resolve(go(0), strata::Dialect::Plain);
}

}  // namespace gen

#endif
