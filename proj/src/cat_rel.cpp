#include "strata/cat/rel.hpp"

#include <bit>

namespace strata::cat {

RelUniverse RelUniverse::close_over(std::vector<std::string> base_tokens,
                                    const std::vector<int>& tags) {
    RelUniverse u;
    u.tokens = std::move(base_tokens);
    u.base = static_cast<int>(u.tokens.size());
    for (int tag : tags)
        for (int x = 0; x < u.base; ++x) {
            u.pairs[{x, tag}] = u.size();
            u.tokens.push_back("<" + u.tokens[x] + "," + std::to_string(tag) + ">");
        }
    if (u.size() > 62) throw CarrierOverflow("closed carrier exceeds 62 elements");
    return u;
}

int RelUniverse::pair_of(int x, int tag) const {
    auto it = pairs.find({x, tag});
    return it == pairs.end() ? -1 : it->second;
}

Rel rel_make(const RelUniverse& u, Mask dom, Mask cod,
             const std::vector<std::pair<int, int>>& edges) {
    Rel r;
    r.dom = dom;
    r.cod = cod;
    r.adj.assign(u.size(), 0);
    for (auto [a, b] : edges) {
        if (!((dom >> a) & 1) || !((cod >> b) & 1))
            throw std::invalid_argument("relation edge leaves its dom/cod");
        r.adj[a] |= Mask(1) << b;
    }
    return r;
}

Rel rel_identity(const RelUniverse& u, Mask a) {
    Rel r;
    r.dom = r.cod = a;
    r.adj.assign(u.size(), 0);
    for (int x = 0; x < u.size(); ++x)
        if ((a >> x) & 1) r.adj[x] = Mask(1) << x;
    return r;
}

Rel rel_compose(const RelUniverse& u, const Rel& q, const Rel& r) {
    if (r.cod != q.dom) throw std::invalid_argument("relations are not composable");
    Rel out;
    out.dom = r.dom;
    out.cod = q.cod;
    out.adj.assign(u.size(), 0);
    for (int x = 0; x < u.size(); ++x) {
        Mask mid = r.adj[x];
        while (mid) {
            int b = std::countr_zero(mid);
            mid &= mid - 1;
            out.adj[x] |= q.adj[b];
        }
    }
    return out;
}

Rel rel_dagger(const RelUniverse& u, const Rel& r) {
    Rel out;
    out.dom = r.cod;
    out.cod = r.dom;
    out.adj.assign(u.size(), 0);
    for (int x = 0; x < u.size(); ++x) {
        Mask row = r.adj[x];
        while (row) {
            int b = std::countr_zero(row);
            row &= row - 1;
            out.adj[b] |= Mask(1) << x;
        }
    }
    return out;
}

bool is_function(const Rel& r) {
    Mask d = r.dom;
    while (d) {
        int x = std::countr_zero(d);
        d &= d - 1;
        if (std::popcount(r.adj[x]) != 1) return false;
    }
    return true;
}

RelCone rel_product(const RelUniverse& u, const std::vector<std::pair<int, Mask>>& diagram) {
    RelCone cone;
    cone.apex = 0;
    for (size_t i = 0; i < diagram.size(); ++i)
        for (size_t j = i + 1; j < diagram.size(); ++j)
            if (diagram[i].first == diagram[j].first)
                throw std::invalid_argument("diagram tags must be distinct");
    for (auto [tag, value] : diagram) {
        Rel pi;
        pi.cod = value;
        pi.dom = 0;
        pi.adj.assign(u.size(), 0);
        Mask v = value;
        while (v) {
            int x = std::countr_zero(v);
            v &= v - 1;
            int p = u.pair_of(x, tag);
            if (p < 0)
                throw CarrierOverflow("pair <" + u.tokens[x] + "," + std::to_string(tag) +
                                      "> is not reserved in the carrier");
            pi.dom |= Mask(1) << p;
            pi.adj[p] = Mask(1) << x;
        }
        cone.apex |= pi.dom;
        cone.legs.emplace_back(tag, std::move(pi));
    }
    for (auto& [tag, pi] : cone.legs) pi.dom = cone.apex;
    return cone;
}

RelCocone rel_coproduct(const RelUniverse& u, const std::vector<std::pair<int, Mask>>& diagram) {
    RelCone prod = rel_product(u, diagram);
    RelCocone co;
    co.apex = prod.apex;
    for (const auto& [tag, pi] : prod.legs) co.legs.emplace_back(tag, rel_dagger(u, pi));
    return co;
}

RelCocone set_coproduct(const RelUniverse& u, const std::vector<std::pair<int, Mask>>& diagram) {
    RelCocone co = rel_coproduct(u, diagram);
    for (const auto& [tag, iota] : co.legs)
        if (!is_function(iota))
            throw std::invalid_argument("injection for tag " + std::to_string(tag) +
                                        " is not a function");
    return co;
}

Rel product_mediator(const RelUniverse& u, const RelCone& product, Mask apex,
                     const std::vector<std::pair<int, Rel>>& legs) {
    Rel med;
    med.dom = apex;
    med.cod = product.apex;
    med.adj.assign(u.size(), 0);
    for (const auto& [tag, r] : legs) {
        Mask a = apex;
        while (a) {
            int x = std::countr_zero(a);
            a &= a - 1;
            Mask row = r.adj[x];
            while (row) {
                int y = std::countr_zero(row);
                row &= row - 1;
                int p = u.pair_of(y, tag);
                if (p < 0) throw CarrierOverflow("cone leg leaves the reserved carrier");
                med.adj[x] |= Mask(1) << p;
            }
        }
    }
    return med;
}

namespace {

std::vector<int> mask_bits(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

}  // namespace

std::vector<Rel> product_mediators_brute(const RelUniverse& u, const RelCone& product, Mask apex,
                                         const std::vector<std::pair<int, Rel>>& legs,
                                         long long cap) {
    std::vector<int> rows = mask_bits(apex), cols = mask_bits(product.apex);
    long long bits = static_cast<long long>(rows.size()) * static_cast<long long>(cols.size());
    if (bits > 62 || (1LL << bits) > cap)
        throw CarrierOverflow("mediator search space exceeds the cap");
    std::vector<Rel> found;
    for (long long word = 0; word < (1LL << bits); ++word) {
        Rel v;
        v.dom = apex;
        v.cod = product.apex;
        v.adj.assign(u.size(), 0);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j)
                if ((word >> (i * cols.size() + j)) & 1) v.adj[rows[i]] |= Mask(1) << cols[j];
        bool ok = true;
        for (const auto& [tag, r] : legs) {
            const Rel* pi = nullptr;
            for (const auto& [t2, p2] : product.legs)
                if (t2 == tag) { pi = &p2; break; }
            if (!pi || !(rel_compose(u, *pi, v) == r)) { ok = false; break; }
        }
        if (ok) found.push_back(std::move(v));
    }
    return found;
}

std::vector<Rel> coproduct_mediators_brute(const RelUniverse& u, const RelCocone& coproduct,
                                           Mask apex, const std::vector<std::pair<int, Rel>>& legs,
                                           bool functions_only, long long cap) {
    std::vector<int> rows = mask_bits(coproduct.apex), cols = mask_bits(apex);
    long long bits = static_cast<long long>(rows.size()) * static_cast<long long>(cols.size());
    if (bits > 62 || (1LL << bits) > cap)
        throw CarrierOverflow("mediator search space exceeds the cap");
    std::vector<Rel> found;
    for (long long word = 0; word < (1LL << bits); ++word) {
        Rel v;
        v.dom = coproduct.apex;
        v.cod = apex;
        v.adj.assign(u.size(), 0);
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < cols.size(); ++j)
                if ((word >> (i * cols.size() + j)) & 1) v.adj[rows[i]] |= Mask(1) << cols[j];
        if (functions_only && !is_function(v)) continue;
        bool ok = true;
        for (const auto& [tag, leg] : legs) {
            const Rel* inj = nullptr;
            for (const auto& [t2, i2] : coproduct.legs)
                if (t2 == tag) { inj = &i2; break; }
            if (!inj || !(rel_compose(u, v, *inj) == leg)) { ok = false; break; }
        }
        if (ok) found.push_back(std::move(v));
    }
    return found;
}

}  // namespace strata::cat
