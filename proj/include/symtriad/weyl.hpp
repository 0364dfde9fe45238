#pragma once

// Weyl groups as permutations of the root list. Full enumeration is
// capped by rank (default 4); nothing in this library enumerates the
// Weyl group of a rank > cap system.

#include "symtriad/root_system.hpp"

#include <cstdint>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace symtriad {

inline constexpr int kDefaultWeylRankCap = 4;

// A root-set symmetry recorded both as an index permutation and as the
// underlying linear map.
struct RootSymmetry {
    std::vector<int> perm;  // perm[i] = index of image of roots[i]
    LinearMap map;
};

inline std::vector<int> permutation_of(const RootSystem& rs, const LinearMap& f) {
    std::vector<int> p(rs.roots.size());
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        int j = rs.index_of(f(rs.roots[i]));
        if (j < 0) throw std::domain_error("map does not preserve the root set");
        p[i] = j;
    }
    return p;
}

// Closure of the simple reflections; every element exactly once.
inline std::vector<RootSymmetry> weyl_elements(const RootSystem& rs,
                                               int rank_cap = kDefaultWeylRankCap) {
    if (rs.rank() > rank_cap)
        throw std::invalid_argument("weyl_elements: rank " + std::to_string(rs.rank()) +
                                    " exceeds enumeration cap " + std::to_string(rank_cap));
    std::vector<RootSymmetry> gens;
    for (const auto& a : rs.simple) {
        LinearMap f = LinearMap::reflection(a);
        gens.push_back({permutation_of(rs, f), f});
    }
    std::map<std::vector<int>, int> seen;
    std::vector<RootSymmetry> out;
    RootSymmetry id{std::vector<int>(rs.roots.size()), LinearMap::identity(rs.ambient_dim)};
    for (std::size_t i = 0; i < rs.roots.size(); ++i) id.perm[i] = static_cast<int>(i);
    seen[id.perm] = 0;
    out.push_back(id);
    std::size_t head = 0;
    while (head < out.size()) {
        RootSymmetry cur = out[head++];
        for (const auto& g : gens) {
            std::vector<int> q(cur.perm.size());
            for (std::size_t i = 0; i < q.size(); ++i) q[i] = g.perm[cur.perm[i]];
            if (!seen.count(q)) {
                seen[q] = static_cast<int>(out.size());
                out.push_back({std::move(q), g.map.compose(cur.map)});
            }
        }
    }
    return out;
}

// Longest element of the Weyl group of the (parabolic) subsystem spanned
// by sub_simple, as a linear map on the whole ambient space. Identity for
// an empty subsystem.
inline LinearMap longest_element(const std::vector<RatVec>& sub_simple, std::size_t ambient_dim) {
    LinearMap w = LinearMap::identity(ambient_dim);
    if (sub_simple.empty()) return w;
    auto is_positive = [&](const RatVec& x) {
        auto sol = solve_columns(sub_simple, x);
        if (!sol) return false;
        bool any = false;
        for (const auto& c : *sol) {
            if (c < 0) return false;
            if (c > 0) any = true;
        }
        return any;
    };
    for (int guard = 0; guard < 10000; ++guard) {
        bool advanced = false;
        for (const auto& b : sub_simple) {
            if (is_positive(w(b))) {
                // length increases: w := w o w_b
                w = w.compose(LinearMap::reflection(b));
                advanced = true;
                break;
            }
        }
        if (!advanced) return w;
    }
    throw std::logic_error("longest_element did not terminate");
}

// Permutations of the fundamental system preserving all Cartan integers
// (Dynkin diagram automorphisms).
inline std::vector<std::vector<int>> diagram_automorphisms(const std::vector<RatVec>& simple) {
    std::size_t k = simple.size();
    std::vector<std::vector<Rat>> cart(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) cart[i][j] = cartan_ratio(simple[i], simple[j]);
    std::vector<std::vector<int>> out;
    std::vector<int> assign(k, -1);
    std::vector<char> used(k, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == k) {
            out.push_back(assign);
            return;
        }
        for (std::size_t c = 0; c < k; ++c) {
            if (used[c]) continue;
            if (cart[i][i] != cart[c][c]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                if (cart[i][j] != cart[c][assign[j]] || cart[j][i] != cart[assign[j]][c]) ok = false;
            }
            if (ok) {
                assign[i] = static_cast<int>(c);
                used[c] = 1;
                rec(i + 1);
                used[c] = 0;
                assign[i] = -1;
            }
        }
    };
    rec(0);
    return out;
}

// Full automorphism group Aut = W x diagram automorphisms, rank-capped.
inline std::vector<RootSymmetry> automorphisms(const RootSystem& rs,
                                               int rank_cap = kDefaultWeylRankCap) {
    auto weyl = weyl_elements(rs, rank_cap);
    std::vector<RootSymmetry> diag;
    for (const auto& p : diagram_automorphisms(rs.simple)) {
        std::vector<RatVec> images;
        for (std::size_t i = 0; i < rs.simple.size(); ++i) images.push_back(rs.simple[p[i]]);
        LinearMap f = LinearMap::from_basis_images(rs.simple, images);
        diag.push_back({permutation_of(rs, f), f});
    }
    std::map<std::vector<int>, int> seen;
    std::vector<RootSymmetry> out;
    for (const auto& w : weyl) {
        for (const auto& d : diag) {
            std::vector<int> q(w.perm.size());
            for (std::size_t i = 0; i < q.size(); ++i) q[i] = w.perm[d.perm[i]];
            if (!seen.count(q)) {
                seen[q] = static_cast<int>(out.size());
                out.push_back({std::move(q), w.map.compose(d.map)});
            }
        }
    }
    return out;
}

}  // namespace symtriad
