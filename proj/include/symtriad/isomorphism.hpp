#pragma once

// Root system isomorphisms: linear maps f with f(S) = T preserving every
// Cartan integer. Per-component positive rescaling is permitted by the
// definition (Cartan integers are scale-invariant); strict mode demands
// scale 1 on every component.

#include "symtriad/root_system.hpp"
#include "symtriad/weyl.hpp"

#include <functional>
#include <optional>

namespace symtriad {

// A linear map defined on the span of `basis` by images of the basis.
// Sufficient for root-system witnesses, which only ever act on roots.
struct SpanMap {
    std::vector<RatVec> basis;
    std::vector<RatVec> images;

    RatVec apply(const RatVec& x) const {
        auto c = solve_columns(basis, x);
        if (!c) throw std::domain_error("SpanMap: vector outside domain span");
        RatVec y = zero_vec(images.empty() ? 0 : images[0].size());
        for (std::size_t i = 0; i < images.size(); ++i) {
            if ((*c)[i] != 0) y = add(y, scale((*c)[i], images[i]));
        }
        return y;
    }
};

// Checks f(S) = T and preservation of all Cartan integers. Used on every
// returned witness.
inline bool check_root_iso(const SpanMap& f, const std::vector<RatVec>& s_roots,
                           const std::vector<RatVec>& t_roots) {
    if (s_roots.size() != t_roots.size()) return false;
    RootSet target(t_roots.begin(), t_roots.end());
    std::vector<RatVec> images;
    RootSet image_set;
    for (const auto& a : s_roots) {
        RatVec fa = f.apply(a);
        if (!target.count(fa)) return false;
        image_set.insert(fa);
        images.push_back(fa);
    }
    if (image_set.size() != target.size()) return false;
    for (std::size_t i = 0; i < s_roots.size(); ++i) {
        for (std::size_t j = 0; j < s_roots.size(); ++j) {
            if (cartan_ratio(s_roots[i], s_roots[j]) != cartan_ratio(images[i], images[j]))
                return false;
        }
    }
    return true;
}

struct RootIso {
    SpanMap map;
    std::vector<Rat> component_scales;  // |f(a)|^2 / |a|^2 per source component
};

namespace detail {

// All Cartan-matrix-preserving bijections source simples -> target simples.
inline std::vector<std::vector<int>> cartan_matchings(const std::vector<RatVec>& sa,
                                                      const std::vector<RatVec>& sb) {
    std::size_t k = sa.size();
    std::vector<std::vector<int>> out;
    if (sb.size() != k) return out;
    std::vector<std::vector<Rat>> ca(k, std::vector<Rat>(k)), cb(k, std::vector<Rat>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            ca[i][j] = cartan_ratio(sa[i], sa[j]);
            cb[i][j] = cartan_ratio(sb[i], sb[j]);
        }
    std::vector<int> assign(k, -1);
    std::vector<char> used(k, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == k) {
            out.push_back(assign);
            return;
        }
        for (std::size_t c = 0; c < k; ++c) {
            if (used[c]) continue;
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) {
                if (ca[i][j] != cb[c][assign[j]] || ca[j][i] != cb[assign[j]][c]) ok = false;
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

}  // namespace detail

// Searches over simple-root matchings extended linearly; the returned
// witness is validated by check_root_iso before being handed back.
inline std::optional<RootIso> find_isomorphism(const std::vector<RatVec>& s_roots,
                                               const std::vector<RatVec>& t_roots,
                                               bool allow_scale = true) {
    if (s_roots.size() != t_roots.size()) return std::nullopt;
    if (s_roots.empty()) return RootIso{SpanMap{{}, {}}, {}};
    auto s_comp = components_of(s_roots);
    auto t_comp = components_of(t_roots);
    if (s_comp.size() != t_comp.size()) return std::nullopt;
    std::size_t nc = s_comp.size();
    std::vector<std::vector<RatVec>> s_simple(nc), t_simple(nc);
    for (std::size_t i = 0; i < nc; ++i) s_simple[i] = recover_simple(s_comp[i]);
    for (std::size_t i = 0; i < nc; ++i) t_simple[i] = recover_simple(t_comp[i]);

    // match components by backtracking, one Cartan matching per pair;
    // a full assignment is accepted only if the assembled map verifies
    std::vector<int> pairing(nc, -1);
    std::vector<char> used(nc, 0);
    std::vector<std::vector<int>> chosen(nc);
    std::optional<RootIso> found;
    std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
        if (i == nc) {
            RootIso iso;
            for (std::size_t k = 0; k < nc; ++k) {
                int c = pairing[k];
                for (std::size_t j = 0; j < s_simple[k].size(); ++j) {
                    iso.map.basis.push_back(s_simple[k][j]);
                    iso.map.images.push_back(t_simple[c][chosen[k][j]]);
                }
                iso.component_scales.push_back(norm2(t_simple[c][chosen[k][0]]) /
                                               norm2(s_simple[k][0]));
            }
            if (!check_root_iso(iso.map, s_roots, t_roots)) return false;
            found = std::move(iso);
            return true;
        }
        for (std::size_t c = 0; c < nc; ++c) {
            if (used[c] || s_comp[i].size() != t_comp[c].size()) continue;
            auto matchings = detail::cartan_matchings(s_simple[i], t_simple[c]);
            for (const auto& mt : matchings) {
                // scale consistency within the component
                Rat sc = norm2(t_simple[c][mt[0]]) / norm2(s_simple[i][0]);
                bool ok = true;
                for (std::size_t j = 0; j < s_simple[i].size() && ok; ++j) {
                    if (norm2(t_simple[c][mt[j]]) != sc * norm2(s_simple[i][j])) ok = false;
                }
                if (!ok) continue;
                if (!allow_scale && sc != 1) continue;
                pairing[i] = static_cast<int>(c);
                chosen[i] = mt;
                used[c] = 1;
                if (rec(i + 1)) return true;
                used[c] = 0;
                pairing[i] = -1;
            }
        }
        return false;
    };
    rec(0);
    return found;
}

}  // namespace symtriad
