#include "nilpair/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

#include "nilpair/rational.hpp"

namespace nilpair {

CartanType parse_cartan_type(const std::string& s) {
    if (s.size() < 2) throw error("unknown_type", "'" + s + "'");
    char l = s[0];
    int r = std::stoi(s.substr(1));
    CartanType t{l, r};
    bool ok = (l == 'A' && r >= 1) || (l == 'B' && r >= 2) || (l == 'C' && r >= 2) ||
              (l == 'D' && r >= 3) || (l == 'E' && r >= 6 && r <= 8) || (l == 'F' && r == 4) ||
              (l == 'G' && r == 2);
    if (!ok) throw error("unknown_type", "'" + s + "'");
    return t;
}

static void cartan_entries(CartanType t, std::vector<std::vector<int>>& c,
                           std::vector<int>& d) {
    const int n = t.rank;
    c.assign(n, std::vector<int>(n, 0));
    d.assign(n, 1);
    auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    switch (t.letter) {
        case 'A':
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            break;
        case 'B':  // alpha_n short
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            c[n - 1][n - 2] = -2;  // <alpha_{n-1}, alpha_n^vee> = -2
            for (int i = 0; i + 1 < n; ++i) d[i] = 2;
            d[n - 1] = 1;
            break;
        case 'C':  // alpha_n long
            for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
            c[n - 2][n - 1] = -2;
            for (int i = 0; i + 1 < n; ++i) d[i] = 1;
            d[n - 1] = 2;
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
            link(n - 3, n - 1);
            break;
        case 'E':
            // chain 1-3-4-5-6(-7(-8)), node 2 attached to 4 (Bourbaki)
            link(0, 2);
            for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
            link(1, 3);
            break;
        case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            link(0, 1);
            link(1, 2);
            link(2, 3);
            c[2][1] = -2;  // <alpha_2, alpha_3^vee> = -2
            d = {2, 2, 1, 1};
            break;
        case 'G':  // alpha_1 short, alpha_2 long
            link(0, 1);
            c[0][1] = -3;  // <alpha_2, alpha_1^vee> = -3
            d = {1, 3};
            break;
        default:
            throw error("unknown_type", t.str());
    }
}

long RootSystem::pairing(const std::vector<int>& a, const std::vector<int>& b) const {
    long s = 0;
    const int n = rank();
    for (int i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b[j] == 0) continue;
            s += static_cast<long>(a[i]) * b[j] * dsym[i] * cartan[i][j];
        }
    }
    return s;
}

RootSystem build_root_system(CartanType t) {
    RootSystem rs;
    rs.type = t;
    cartan_entries(t, rs.cartan, rs.dsym);
    const int n = t.rank;
    // symmetrizer sanity: d_i c_ij symmetric
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            assert(rs.dsym[i] * rs.cartan[i][j] == rs.dsym[j] * rs.cartan[j][i]);

    std::set<std::vector<int>> pos;
    std::vector<std::vector<int>> frontier;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        pos.insert(e);
        frontier.push_back(e);
    }
    auto pair_with_simple = [&](const std::vector<int>& b, int i) {
        int s = 0;
        for (int j = 0; j < n; ++j) s += b[j] * rs.cartan[i][j];
        return s;
    };
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& b : frontier) {
            for (int i = 0; i < n; ++i) {
                // root string b - p alpha_i ... b + q alpha_i, q = p - <b, alpha_i^vee>
                int p = 0;
                std::vector<int> down = b;
                for (;;) {
                    down[i] -= 1;
                    bool zero = std::all_of(down.begin(), down.end(), [](int x) { return x == 0; });
                    if (zero || pos.count(down)) { ++p; continue; }
                    break;
                }
                int q = p - pair_with_simple(b, i);
                if (q > 0) {
                    std::vector<int> up = b;
                    up[i] += 1;
                    if (pos.insert(up).second) next.push_back(up);
                }
            }
        }
        frontier = std::move(next);
    }
    for (const auto& b : pos) {
        rs.roots.push_back(b);
        std::vector<int> neg(n);
        for (int i = 0; i < n; ++i) neg[i] = -b[i];
        rs.roots.push_back(neg);
    }
    return rs;
}

WeightedDiagram parse_diagram(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw error("bad_diagram", "expected '<type>:<labels>'");
    WeightedDiagram wd;
    wd.type = parse_cartan_type(s.substr(0, colon));
    for (char c : s.substr(colon + 1)) {
        if (c < '0' || c > '2') throw error("bad_diagram", "labels must be 0, 1 or 2");
        wd.labels.push_back(c - '0');
    }
    if (static_cast<int>(wd.labels.size()) != wd.type.rank)
        throw error("bad_diagram", "label count does not match rank");
    return wd;
}

// classify a connected simple-root diagram given pairwise Cartan integers and lengths
static CartanType classify_component(const std::vector<std::vector<int>>& cm,
                                     const std::vector<long>& len2) {
    const int n = static_cast<int>(cm.size());
    if (n == 1) return {'A', 1};
    int max_bond = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) max_bond = std::max(max_bond, cm[i][j] * cm[j][i]);
    if (max_bond == 3) return {'G', 2};
    if (max_bond == 2) {
        if (n == 2) return {'B', 2};
        long lmin = *std::min_element(len2.begin(), len2.end());
        int nshort = static_cast<int>(std::count(len2.begin(), len2.end(), lmin));
        if (n == 4 && nshort == 2) return {'F', 4};
        if (nshort == 1) return {'B', n};
        if (nshort == n - 1) return {'C', n};
        throw error("unknown_type", "unrecognized multiply-laced diagram");
    }
    // simply laced: count degrees
    std::vector<int> deg(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && cm[i][j] != 0) deg[i]++;
    int branch = -1;
    for (int i = 0; i < n; ++i) {
        if (deg[i] > 3) throw error("unknown_type", "vertex of degree > 3");
        if (deg[i] == 3) {
            if (branch >= 0) throw error("unknown_type", "two branch vertices");
            branch = i;
        }
    }
    if (branch < 0) return {'A', n};
    // arm lengths from the branch vertex
    std::vector<int> arms;
    for (int j = 0; j < n; ++j) {
        if (j == branch || cm[branch][j] == 0) continue;
        int len = 1, prev = branch, cur = j;
        for (;;) {
            int nxt = -1;
            for (int k = 0; k < n; ++k)
                if (k != prev && k != cur && cm[cur][k] != 0) { nxt = k; break; }
            if (nxt < 0) break;
            prev = cur;
            cur = nxt;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms.size() != 3) throw error("unknown_type", "bad branch");
    if (arms[0] == 1 && arms[1] == 1) return {'D', arms[2] + 3};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
        return {'E', arms[2] + 4};
    throw error("unknown_type", "unrecognized simply-laced diagram");
}

LeviResult zero_weight_levi(const RootSystem& rs, const std::vector<int>& labels) {
    const int n = rs.rank();
    if (static_cast<int>(labels.size()) != n) throw error("bad_diagram", "label count");
    std::vector<std::vector<int>> zero_pos;
    for (const auto& r : rs.roots) {
        long w = 0;
        bool positive = false;
        for (int i = 0; i < n; ++i) {
            w += static_cast<long>(labels[i]) * r[i];
            if (r[i] > 0) positive = true;
        }
        if (w == 0 && positive) zero_pos.push_back(r);
    }
    LeviResult out;
    out.zero_root_count = static_cast<int>(zero_pos.size()) * 2;
    if (zero_pos.empty()) {
        out.center_dim = n;
        return out;
    }
    // simple roots of the zero subsystem: positive zero roots that are not
    // sums of two positive zero roots
    std::set<std::vector<int>> zp(zero_pos.begin(), zero_pos.end());
    std::vector<std::vector<int>> simple;
    for (const auto& a : zero_pos) {
        bool decomposable = false;
        for (const auto& b : zero_pos) {
            std::vector<int> c(n);
            bool neg = false;
            for (int i = 0; i < n; ++i) {
                c[i] = a[i] - b[i];
                if (c[i] < 0) neg = true;
            }
            if (neg || c == std::vector<int>(n, 0)) continue;
            if (zp.count(c)) { decomposable = true; break; }
        }
        if (!decomposable) simple.push_back(a);
    }
    const int s = static_cast<int>(simple.size());
    // pairwise Cartan integers over the ambient form
    std::vector<std::vector<int>> cm(s, std::vector<int>(s, 0));
    std::vector<long> len2(s);
    for (int i = 0; i < s; ++i) len2[i] = rs.pairing(simple[i], simple[i]);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            long num = 2 * rs.pairing(simple[i], simple[j]);
            assert(num % len2[j] == 0);
            cm[i][j] = static_cast<int>(num / len2[j]);
        }
    // split into connected components
    std::vector<int> comp(s, -1);
    int nc = 0;
    for (int i = 0; i < s; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> stack{i};
        comp[i] = nc;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < s; ++v)
                if (comp[v] < 0 && cm[u][v] != 0) {
                    comp[v] = nc;
                    stack.push_back(v);
                }
        }
        ++nc;
    }
    for (int c = 0; c < nc; ++c) {
        std::vector<int> idx;
        for (int i = 0; i < s; ++i)
            if (comp[i] == c) idx.push_back(i);
        std::vector<std::vector<int>> sub(idx.size(), std::vector<int>(idx.size()));
        std::vector<long> sublen(idx.size());
        for (size_t i = 0; i < idx.size(); ++i) {
            sublen[i] = len2[idx[i]];
            for (size_t j = 0; j < idx.size(); ++j) sub[i][j] = cm[idx[i]][idx[j]];
        }
        CartanType t = classify_component(sub, sublen);
        if (t.letter == 'D' && t.rank == 3) t = {'A', 3};
        if ((t.letter == 'B' || t.letter == 'C') && t.rank == 1) t = {'A', 1};
        out.components.push_back(t);
    }
    std::sort(out.components.begin(), out.components.end());
    out.center_dim = n - s;
    return out;
}

std::string type_list_str(std::vector<CartanType> comps) {
    if (comps.empty()) return "0";
    std::sort(comps.begin(), comps.end(), [](const CartanType& a, const CartanType& b) {
        if (a.rank != b.rank) return a.rank > b.rank;
        return a.letter < b.letter;
    });
    std::ostringstream os;
    size_t i = 0;
    bool first = true;
    while (i < comps.size()) {
        size_t j = i;
        while (j < comps.size() && comps[j] == comps[i]) ++j;
        if (!first) os << "+";
        if (j - i > 1) os << (j - i);
        os << comps[i].str();
        first = false;
        i = j;
    }
    return os.str();
}

std::vector<CartanType> parse_type_list(const std::string& s) {
    std::vector<CartanType> out;
    if (s == "0" || s.empty()) return out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, '+')) {
        size_t k = 0;
        int mult = 0;
        while (k < item.size() && item[k] >= '0' && item[k] <= '9') {
            mult = 10 * mult + (item[k] - '0');
            ++k;
        }
        if (mult == 0) mult = 1;
        CartanType t = parse_cartan_type(item.substr(k));
        for (int c = 0; c < mult; ++c) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

long orbit_dim_from_diagram(const RootSystem& rs, const std::vector<int>& labels) {
    for (int l : labels)
        if (l % 2 != 0) throw error("not_even", "diagram has odd labels");
    LeviResult lev = zero_weight_levi(rs, labels);
    return rs.dim() - (rs.rank() + lev.zero_root_count);
}

int rank_of_type_list(const std::vector<CartanType>& comps) {
    int r = 0;
    for (const auto& c : comps) r += c.rank;
    return r;
}

}  // namespace nilpair
