#include "genred/cartan.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "genred/smith.hpp"

namespace genred {

namespace {

int bond_to_m(long prod) {
    switch (prod) {
        case 0: return 2;
        case 1: return 3;
        case 2: return 4;
        case 3: return 6;
        default: throw NotCartan("off-diagonal product c_st*c_ts = " + std::to_string(prod) + " out of range");
    }
}

// generic permutation match: find all pi with target[pi(u)][pi(v)] == pattern[u][v]
void match_rec(const IntMat& pattern, const IntMat& target, std::vector<std::size_t>& pi,
               std::vector<bool>& used, std::size_t u, std::vector<std::vector<std::size_t>>& out,
               bool first_only) {
    std::size_t n = pattern.rows();
    if (u == n) {
        out.push_back(pi);
        return;
    }
    for (std::size_t cand = 0; cand < n; ++cand) {
        if (used[cand]) continue;
        bool ok = pattern.at(u, u) == target.at(cand, cand);
        for (std::size_t v = 0; ok && v < u; ++v) {
            if (pattern.at(u, v) != target.at(cand, pi[v])) ok = false;
            if (pattern.at(v, u) != target.at(pi[v], cand)) ok = false;
        }
        if (!ok) continue;
        pi[u] = cand;
        used[cand] = true;
        match_rec(pattern, target, pi, used, u + 1, out, first_only);
        used[cand] = false;
        if (first_only && !out.empty()) return;
    }
}

std::vector<std::vector<std::size_t>> match_perms(const IntMat& pattern, const IntMat& target, bool first_only) {
    std::vector<std::vector<std::size_t>> out;
    if (pattern.rows() != target.rows()) return out;
    std::vector<std::size_t> pi(pattern.rows());
    std::vector<bool> used(pattern.rows(), false);
    match_rec(pattern, target, pi, used, 0, out, first_only);
    return out;
}

}  // namespace

CartanMatrix validate_cartan(const IntMat& M) {
    if (M.rows() != M.cols()) throw NotCartan("matrix is not square");
    std::size_t n = M.rows();
    for (std::size_t s = 0; s < n; ++s) {
        if (M.at(s, s) != 2) throw NotCartan("(C1) diagonal entry != 2");
        for (std::size_t t = 0; t < n; ++t) {
            if (s == t) continue;
            if (M.at(s, t) > 0) throw NotCartan("(C1) positive off-diagonal entry");
            if ((M.at(s, t) == 0) != (M.at(t, s) == 0)) throw NotCartan("(C1) asymmetric zero pattern");
        }
    }
    // finite type: every leading principal minor positive
    for (std::size_t k = 1; k <= n; ++k)
        if (M.leading_minor(k) <= 0) throw NotCartan("not of finite type (leading minor <= 0)");
    CartanMatrix C(M);
    classify(C);  // cross-check against the catalog shapes
    return C;
}

DynkinDiagram CartanMatrix::diagram() const {
    DynkinDiagram d;
    d.nodes = size();
    for (std::size_t s = 0; s < size(); ++s)
        for (std::size_t t = s + 1; t < size(); ++t) {
            if (c(s, t) == 0) continue;
            Int prod = c(s, t) * c(t, s);
            int m = bond_to_m(prod.get_si());
            // bond count |c_ts| where |c_ts| >= |c_st|; arrow toward the short root
            Int ast = abs(c(s, t)), ats = abs(c(t, s));
            int bond;
            long arrow = -1;
            if (ast >= ats) {
                bond = static_cast<int>(ast.get_si());
                if (bond > 1) arrow = static_cast<long>(s);  // c_st = <alpha_t, alpha_s^vee>, alpha_s short
            } else {
                bond = static_cast<int>(ats.get_si());
                if (bond > 1) arrow = static_cast<long>(t);
            }
            d.edges.push_back({s, t, bond, arrow, m});
        }
    return d;
}

std::vector<std::vector<std::size_t>> cartan_components(const CartanMatrix& C) {
    std::size_t n = C.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = s + 1; t < n; ++t)
            if (C.c(s, t) != 0) parent[find(s)] = find(t);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < n; ++i) groups[find(i)].push_back(i);
    std::vector<std::vector<std::size_t>> comps;
    for (auto& [root, nodes] : groups) comps.push_back(nodes);
    return comps;
}

CartanMatrix standard_cartan(char family, std::size_t rank) {
    auto bounds_error = [&]() { throw BadRank(std::string(1, family) + std::to_string(rank)); };
    std::size_t n = rank;
    switch (family) {
        case 'A':
            if (n < 1) bounds_error();
            break;
        case 'B':
        case 'C':
            if (n < 2) bounds_error();
            break;
        case 'D':
            if (n < 3) bounds_error();
            break;
        case 'E':
            if (n < 6 || n > 8) bounds_error();
            break;
        case 'F':
            if (n != 4) bounds_error();
            break;
        case 'G':
            if (n != 2) bounds_error();
            break;
        default:
            throw BadType(std::string(1, family));
    }
    IntMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 2;
    auto simple_edge = [&](std::size_t a, std::size_t b) {
        m.at(a, b) = -1;
        m.at(b, a) = -1;
    };
    switch (family) {
        case 'A':
            for (std::size_t i = 0; i + 1 < n; ++i) simple_edge(i, i + 1);
            break;
        case 'B':
            // first row (2, -2, 0, ...) as printed for B_n
            for (std::size_t i = 0; i + 1 < n; ++i) simple_edge(i, i + 1);
            m.at(0, 1) = -2;
            break;
        case 'C':
            for (std::size_t i = 0; i + 1 < n; ++i) simple_edge(i, i + 1);
            m.at(1, 0) = -2;
            break;
        case 'D':
            simple_edge(0, 2);
            simple_edge(1, 2);
            for (std::size_t i = 2; i + 1 < n; ++i) simple_edge(i, i + 1);
            break;
        case 'E':
            simple_edge(0, 2);
            simple_edge(1, 3);
            simple_edge(2, 3);
            for (std::size_t i = 3; i + 1 < n; ++i) simple_edge(i, i + 1);
            break;
        case 'F':
            simple_edge(0, 1);
            simple_edge(1, 2);
            simple_edge(2, 3);
            m.at(2, 1) = -2;
            break;
        case 'G':
            simple_edge(0, 1);
            m.at(1, 0) = -3;
            break;
    }
    // bypass validate_cartan (classify would recurse); catalog matrices are known good
    return CartanMatrix(std::move(m));
}

std::vector<TypeLabel> classify(const CartanMatrix& C) {
    std::vector<TypeLabel> labels;
    for (const auto& comp : cartan_components(C)) {
        std::size_t k = comp.size();
        IntMat sub = C.entries().select(comp, comp);
        // normalization order: A before D (D3 = A3), C before B (B2 = C2)
        static const char order[] = {'A', 'C', 'B', 'D', 'E', 'F', 'G'};
        bool matched = false;
        for (char fam : order) {
            bool rank_ok = (fam == 'A' && k >= 1) || (fam == 'C' && k >= 2) || (fam == 'B' && k >= 3) ||
                           (fam == 'D' && k >= 4) || (fam == 'E' && k >= 6 && k <= 8) || (fam == 'F' && k == 4) ||
                           (fam == 'G' && k == 2);
            if (!rank_ok) continue;
            IntMat std_m = standard_cartan(fam, k).entries();
            auto perms = match_perms(std_m, sub, /*first_only=*/true);
            if (perms.empty()) continue;
            TypeLabel lbl;
            lbl.family = fam;
            lbl.rank = k;
            lbl.node_of_canon.resize(k);
            for (std::size_t i = 0; i < k; ++i) lbl.node_of_canon[i] = comp[perms[0][i]];
            labels.push_back(std::move(lbl));
            matched = true;
            break;
        }
        if (!matched) throw NotCartan("component does not match any finite-type diagram");
    }
    std::sort(labels.begin(), labels.end(), [](const TypeLabel& a, const TypeLabel& b) {
        if (a.family != b.family) return a.family < b.family;
        if (a.rank != b.rank) return a.rank < b.rank;
        return *std::min_element(a.node_of_canon.begin(), a.node_of_canon.end()) <
               *std::min_element(b.node_of_canon.begin(), b.node_of_canon.end());
    });
    return labels;
}

std::vector<Int> fundamental_group(const CartanMatrix& C) {
    std::vector<Int> torsion;
    for (const Int& d : smith_normal_form(C.entries()).invariant_factors())
        if (d > 1) torsion.push_back(d);
    return torsion;
}

std::vector<std::vector<std::size_t>> diagram_automorphisms(const CartanMatrix& C) {
    return match_perms(C.entries(), C.entries(), /*first_only=*/false);
}

std::vector<std::vector<std::size_t>> cartan_isomorphisms(const CartanMatrix& C1, const CartanMatrix& C2) {
    // pi with C1[pi(u)][pi(v)] == C2[u][v]
    return match_perms(C2.entries(), C1.entries(), /*first_only=*/false);
}

}  // namespace genred
