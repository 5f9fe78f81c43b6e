#ifndef STRATA_MODEL_HPP
#define STRATA_MODEL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "strata/ast.hpp"

namespace strata {

// A finite membership structure: element ids, the edges of the
// membership relation, and optional designated constants.
struct FiniteStructure {
    std::vector<std::string> universe;
    std::vector<std::vector<int>> members;  // members[b] = sorted a with a in b
    std::map<std::string, int> index;       // id -> position in universe
    std::map<std::string, int> constants;

    int size() const { return static_cast<int>(universe.size()); }
    bool contains(int a, int b) const;  // a in b
    std::vector<int> extension(int b) const { return members[b]; }

    std::string to_json() const;
    static FiniteStructure from_json(const std::string& text);
    static FiniteStructure make(std::vector<std::string> universe,
                                std::vector<std::pair<std::string, std::string>> membership,
                                std::map<std::string, std::string> constants = {});
};

// The hereditarily finite sets of rank < n under Ackermann coding:
// element ids are decimal codes, and a in b iff bit a of b is set.
// Fully materialized for n <= 5; larger ranks are rejected.
FiniteStructure build_vn(int n);

using Valuation = std::map<std::string, std::string>;

// Tarskian satisfaction for plain formulas. Free variables are looked
// up in the valuation first, then in the structure's constants.
bool eval_formula(const FormulaPtr& phi, const FiniteStructure& m, const Valuation& v);

// The induced structure on the extension of element s (constants are
// dropped; ids are preserved).
FiniteStructure substructure(const FiniteStructure& m, int s);

// Least m <= n such that every formula of phi, with parameters ranging
// over the elements of V_m, has the same value relativized to V_m as
// unrelativized over the ambient build_vn(n). Returns n when no proper
// initial stage reflects.
int reflect_search(const std::vector<FormulaPtr>& phis, int n);

// (number of singletons {y} with y in a present in m,
//  number of distinct subsets of a present in m).
// Throws if some subset of a has no representative in m.
std::pair<long long, long long> singleton_image_check(const FiniteStructure& m, const std::string& a);

}  // namespace strata

#endif
