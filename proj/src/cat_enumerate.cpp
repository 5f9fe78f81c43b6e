#include "strata/cat/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace strata::cat {

namespace {

// Working state: k objects, identities 0..k-1, then p extra morphisms
// with fixed (dom, cod) slots. table entries index morphisms; -2 marks
// an unassigned composable cell.
struct Builder {
    int k, p;
    std::vector<std::pair<int, int>> slots;  // (dom, cod) of the extras
    std::vector<FinCategory::Mor> mors;
    std::vector<std::vector<int>> table;
    std::vector<std::pair<int, int>> cells;  // composable non-identity pairs
    const std::function<void(const FinCategory&)>* sink;
    std::set<std::vector<int>>* seen;

    int m() const { return k + p; }

    bool check_triples() const {
        int n = m();
        for (int h = 0; h < n; ++h)
            for (int g = 0; g < n; ++g) {
                if (mors[g].cod != mors[h].dom) continue;
                int hg = table[h][g];
                for (int f = 0; f < n; ++f) {
                    if (mors[f].cod != mors[g].dom) continue;
                    int gf = table[g][f];
                    if (gf >= 0 && hg >= 0) {
                        int l = table[h][gf], r = table[hg][f];
                        if (l >= 0 && r >= 0 && l != r) return false;
                    }
                }
            }
        return true;
    }

    // associativity triples that involve the just-assigned cell (g, f);
    // triples not touching it were checked when their own last cell
    // arrived, and the leaf still runs the full scan
    bool check_around(int g, int f, int r) const {
        int n = m();
        for (int h = 0; h < n; ++h) {
            if (mors[g].cod != mors[h].dom) continue;
            int hg = table[h][g];
            if (hg < 0) continue;
            int l = table[h][r], rr = table[hg][f];
            if (l >= 0 && rr >= 0 && l != rr) return false;
        }
        for (int e = 0; e < n; ++e) {
            if (mors[e].cod != mors[f].dom) continue;
            int fe = table[f][e];
            if (fe < 0) continue;
            int l = table[g][fe], rr = table[r][e];
            if (l >= 0 && rr >= 0 && l != rr) return false;
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (mors[b].cod != mors[a].dom) continue;
                int ab = table[a][b];
                if (ab < 0) continue;
                // (g, a, b) with a.b = f
                if (ab == f && mors[a].cod == mors[g].dom) {
                    int ga = table[g][a];
                    if (ga >= 0 && table[ga][b] >= 0 && table[ga][b] != r) return false;
                }
                // (a, b, f) with a.b = g
                if (ab == g && mors[f].cod == mors[b].dom) {
                    int bf = table[b][f];
                    if (bf >= 0 && table[a][bf] >= 0 && table[a][bf] != r) return false;
                }
            }
        return true;
    }

    void emit() {
        FinCategory c;
        for (int i = 0; i < k; ++i) c.objects.push_back(std::string(1, static_cast<char>('A' + i)));
        static const char* extra_names[] = {"f", "g", "h", "u", "v", "w"};
        for (int i = 0; i < m(); ++i) {
            if (i < k) c.morphisms.push_back({"id" + c.objects[i], i, i});
            else c.morphisms.push_back({extra_names[i - k], mors[i].dom, mors[i].cod});
        }
        c.identity.resize(k);
        std::iota(c.identity.begin(), c.identity.end(), 0);
        c.table = table;
        if (canonical_form_is_new() && sink) (*sink)(c);
    }

    // Returns true when this category's canonical form is new.
    bool canonical_form_is_new() {
        std::vector<int> obj_perm(k);
        std::iota(obj_perm.begin(), obj_perm.end(), 0);
        std::vector<int> best;
        do {
            // extras grouped by their relabeled slot, every ordering of
            // the extras within equal slots
            std::vector<int> extras(p);
            std::iota(extras.begin(), extras.end(), k);
            std::sort(extras.begin(), extras.end(), [&](int a, int b) {
                auto ka = std::make_pair(obj_perm[mors[a].dom], obj_perm[mors[a].cod]);
                auto kb = std::make_pair(obj_perm[mors[b].dom], obj_perm[mors[b].cod]);
                return ka < kb || (ka == kb && a < b);
            });
            std::vector<std::pair<std::pair<int, int>, std::vector<int>>> groups;
            for (int e : extras) {
                auto key = std::make_pair(obj_perm[mors[e].dom], obj_perm[mors[e].cod]);
                if (groups.empty() || groups.back().first != key) groups.push_back({key, {}});
                groups.back().second.push_back(e);
            }
            // old morphism index -> new index under (obj_perm, group orderings)
            std::vector<int> mor_perm(m());
            std::function<void(size_t)> rec = [&](size_t gi) {
                if (gi == groups.size()) {
                    for (int i = 0; i < k; ++i) mor_perm[i] = obj_perm[i];
                    int next = k;
                    for (const auto& gr : groups)
                        for (int e : gr.second) mor_perm[e] = next++;
                    std::vector<int> sig;
                    sig.push_back(k);
                    sig.push_back(p);
                    std::vector<std::pair<int, int>> new_slots(p);
                    for (int e = k; e < m(); ++e)
                        new_slots[mor_perm[e] - k] = {obj_perm[mors[e].dom], obj_perm[mors[e].cod]};
                    for (auto& s : new_slots) { sig.push_back(s.first); sig.push_back(s.second); }
                    std::vector<int> inv(m());
                    for (int i = 0; i < m(); ++i) inv[mor_perm[i]] = i;
                    for (int g = 0; g < m(); ++g)
                        for (int f = 0; f < m(); ++f) {
                            int og = inv[g], of = inv[f];
                            sig.push_back(table[og][of] < 0 ? -1 : mor_perm[table[og][of]]);
                        }
                    if (best.empty() || sig < best) best = std::move(sig);
                    return;
                }
                auto& members = groups[gi].second;
                std::sort(members.begin(), members.end());
                do {
                    rec(gi + 1);
                } while (std::next_permutation(members.begin(), members.end()));
            };
            rec(0);
        } while (std::next_permutation(obj_perm.begin(), obj_perm.end()));
        return seen->insert(best).second;
    }

    void fill(size_t cell) {
        if (cell == cells.size()) {
            if (check_triples()) emit();
            return;
        }
        auto [g, f] = cells[cell];
        for (int r = 0; r < m(); ++r) {
            if (mors[r].dom != mors[f].dom || mors[r].cod != mors[g].cod) continue;
            table[g][f] = r;
            if (check_around(g, f, r)) fill(cell + 1);
        }
        table[g][f] = -2;
    }
};

}  // namespace

void for_each_category(int max_objects, int max_morphisms,
                       const std::function<void(const FinCategory&)>& fn) {
    std::set<std::vector<int>> seen;
    for (int k = 0; k <= max_objects; ++k) {
        for (int p = 0; k + p <= max_morphisms; ++p) {
            if (k == 0 && p > 0) break;
            // nondecreasing slot sequences over the k*k (dom, cod) pairs
            std::vector<int> slot_ix(p, 0);
            while (true) {
                Builder b;
                b.k = k;
                b.p = p;
                b.sink = &fn;
                b.seen = &seen;
                bool ordered = true;
                for (int i = 0; i + 1 < p; ++i)
                    if (slot_ix[i] > slot_ix[i + 1]) { ordered = false; break; }
                if (ordered) {
                    for (int i = 0; i < k; ++i) b.mors.push_back({"", i, i});
                    for (int i = 0; i < p; ++i) {
                        int d = slot_ix[i] / std::max(k, 1), c = slot_ix[i] % std::max(k, 1);
                        b.mors.push_back({"", d, c});
                        b.slots.push_back({d, c});
                    }
                    int n = b.m();
                    b.table.assign(n, std::vector<int>(n, -1));
                    for (int g = 0; g < n; ++g)
                        for (int f = 0; f < n; ++f) {
                            if (b.mors[f].cod != b.mors[g].dom) continue;
                            if (f < k) b.table[g][f] = g;
                            else if (g < k) b.table[g][f] = f;
                            else { b.table[g][f] = -2; b.cells.push_back({g, f}); }
                        }
                    b.fill(0);
                }
                if (p == 0) break;
                int i = 0;
                while (i < p && slot_ix[i] + 1 == k * k) slot_ix[i++] = 0;
                if (i == p) break;
                ++slot_ix[i];
            }
            if (k == 0) break;
        }
    }
}

std::vector<FinCategory> enum_categories(int max_objects, int max_morphisms) {
    std::vector<FinCategory> out;
    for_each_category(max_objects, max_morphisms, [&](const FinCategory& c) { out.push_back(c); });
    return out;
}

}  // namespace strata::cat
