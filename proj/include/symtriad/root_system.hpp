#pragma once

// Finite root systems with the explicit coordinates of the classical
// families A, B, C, D, BC and the exceptional systems E6, E7, E8, F4, G2.

#include "symtriad/linalg.hpp"

#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace symtriad {

enum class Family { A, B, C, D, BC, E, F, G };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::BC: return "BC";
        case Family::E: return "E";
        case Family::F: return "F";
        case Family::G: return "G";
    }
    return "?";
}

struct TypeLabel {
    Family family;
    int rank;

    bool valid() const {
        if (rank < 1) return false;
        switch (family) {
            case Family::E: return rank == 6 || rank == 7 || rank == 8;
            case Family::F: return rank == 4;
            case Family::G: return rank == 2;
            default: return true;
        }
    }

    std::string str() const { return family_name(family) + std::to_string(rank); }

    auto operator<=>(const TypeLabel&) const = default;
};

inline std::optional<TypeLabel> parse_type_label(const std::string& s) {
    std::size_t i = 0;
    while (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) ++i;
    if (i == 0 || i == s.size()) return std::nullopt;
    std::string fam = s.substr(0, i);
    int rank = 0;
    try {
        rank = std::stoi(s.substr(i));
    } catch (...) {
        return std::nullopt;
    }
    Family f;
    if (fam == "A") f = Family::A;
    else if (fam == "B") f = Family::B;
    else if (fam == "C") f = Family::C;
    else if (fam == "D") f = Family::D;
    else if (fam == "BC") f = Family::BC;
    else if (fam == "E") f = Family::E;
    else if (fam == "F") f = Family::F;
    else if (fam == "G") f = Family::G;
    else return std::nullopt;
    TypeLabel t{f, rank};
    if (!t.valid()) return std::nullopt;
    return t;
}

// Reflection w_alpha(h); alpha must be nonzero.
inline RatVec reflect(const RatVec& alpha, const RatVec& h) {
    Rat nn = norm2(alpha);
    if (nn == 0) throw std::invalid_argument("reflect: alpha = 0");
    if (alpha.size() != h.size()) throw std::invalid_argument("reflect: dimension mismatch");
    Rat c = Rat(2) * dot(alpha, h) / nn;
    return sub(h, scale(c, alpha));
}

// Cartan integer 2<alpha,beta>/|alpha|^2 (integrality not assumed here).
inline Rat cartan_ratio(const RatVec& alpha, const RatVec& beta) {
    return Rat(2) * dot(alpha, beta) / norm2(alpha);
}

using RootSet = std::set<RatVec, LexLess>;

struct RootSystem {
    std::size_t ambient_dim = 0;
    std::vector<RatVec> roots;          // sorted lexicographically
    std::vector<RatVec> simple;         // ordered fundamental system
    std::optional<RatVec> highest;      // absent for empty/reducible systems
    std::vector<TypeLabel> label;       // irreducible components

    int rank() const { return static_cast<int>(simple.size()); }
    bool contains(const RatVec& v) const {
        return std::binary_search(roots.begin(), roots.end(), v, LexLess{});
    }
    int index_of(const RatVec& v) const {
        auto it = std::lower_bound(roots.begin(), roots.end(), v, LexLess{});
        if (it == roots.end() || *it != v) return -1;
        return static_cast<int>(it - roots.begin());
    }

    // Coordinates of v in the fundamental system; throws if v is outside
    // the span.
    RatVec simple_coords(const RatVec& v) const {
        auto sol = solve_columns(simple, v);
        if (!sol) throw std::domain_error("vector not in span of fundamental system");
        return *sol;
    }
};

namespace detail {
inline RatVec unit(std::size_t i, std::size_t n) {
    RatVec v = zero_vec(n);
    v[i] = 1;
    return v;
}

inline void finish(RootSystem& rs, std::vector<RatVec> positive) {
    RootSet all;
    for (auto& p : positive) {
        all.insert(neg(p));
        all.insert(std::move(p));
    }
    rs.roots.assign(all.begin(), all.end());
}
}  // namespace detail

// Root data exactly as tabulated: positive roots, fundamental system and
// highest root for each family.
inline RootSystem build(TypeLabel t) {
    if (!t.valid()) throw std::invalid_argument("invalid type label " + t.str());
    using detail::unit;
    RootSystem rs;
    rs.label = {t};
    int r = t.rank;
    std::vector<RatVec> pos;
    switch (t.family) {
        case Family::A: {
            std::size_t n = r + 1;
            rs.ambient_dim = n;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) pos.push_back(sub(unit(i, n), unit(j, n)));
            for (int i = 0; i < r; ++i) rs.simple.push_back(sub(unit(i, n), unit(i + 1, n)));
            rs.highest = sub(unit(0, n), unit(r, n));
            break;
        }
        case Family::B:
        case Family::C:
        case Family::D:
        case Family::BC: {
            std::size_t n = r;
            rs.ambient_dim = n;
            std::vector<RatVec> pm;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    pm.push_back(add(unit(i, n), unit(j, n)));
                    pm.push_back(sub(unit(i, n), unit(j, n)));
                }
            }
            if (t.family == Family::B || t.family == Family::BC) {
                for (std::size_t i = 0; i < n; ++i) pos.push_back(unit(i, n));
            }
            if (t.family == Family::C || t.family == Family::BC) {
                for (std::size_t i = 0; i < n; ++i) pos.push_back(scale(Rat(2), unit(i, n)));
            }
            pos.insert(pos.end(), pm.begin(), pm.end());
            if (t.family == Family::D) {
                if (r == 1) {  // D1 is the empty system
                    pos.clear();
                    rs.ambient_dim = 1;
                    break;
                }
                for (int i = 0; i + 1 < r; ++i) rs.simple.push_back(sub(unit(i, n), unit(i + 1, n)));
                rs.simple.push_back(add(unit(r - 2, n), unit(r - 1, n)));
                if (r >= 3) rs.highest = add(unit(0, n), unit(1, n));
                else rs.label = {TypeLabel{Family::A, 1}, TypeLabel{Family::A, 1}};  // D2 = A1 u A1
            } else {
                for (int i = 0; i + 1 < r; ++i) rs.simple.push_back(sub(unit(i, n), unit(i + 1, n)));
                if (t.family == Family::C) rs.simple.push_back(scale(Rat(2), unit(r - 1, n)));
                else rs.simple.push_back(unit(r - 1, n));
                if (t.family == Family::B) rs.highest = (r >= 2) ? add(unit(0, n), unit(1, n)) : unit(0, n);
                else rs.highest = scale(Rat(2), unit(0, n));
            }
            break;
        }
        case Family::E: {
            std::size_t n = 8;
            rs.ambient_dim = n;
            Rat h(1, 2);
            if (r == 6) {
                for (int i = 0; i < 5; ++i)
                    for (int j = i + 1; j < 5; ++j)
                        for (int s : {1, -1})
                            pos.push_back(add(scale(Rat(s), unit(i, n)), unit(j, n)));
                for (int mask = 0; mask < 32; ++mask) {
                    if (__builtin_popcount(mask) % 2 != 0) continue;
                    RatVec v(n);
                    for (int i = 0; i < 5; ++i) v[i] = (mask >> i & 1) ? -h : h;
                    v[5] = -h; v[6] = -h; v[7] = h;
                    pos.push_back(v);
                }
                RatVec a1(n);
                a1[0] = h; a1[7] = h;
                for (int i = 1; i <= 6; ++i) a1[i] = -h;
                rs.simple = {a1,
                             add(unit(0, n), unit(1, n)),
                             sub(unit(1, n), unit(0, n)),
                             sub(unit(2, n), unit(1, n)),
                             sub(unit(3, n), unit(2, n)),
                             sub(unit(4, n), unit(3, n))};
                RatVec hi(n, h);
                hi[5] = -h; hi[6] = -h;
                rs.highest = hi;
            } else if (r == 7) {
                for (int i = 0; i < 6; ++i)
                    for (int j = i + 1; j < 6; ++j)
                        for (int s : {1, -1})
                            pos.push_back(add(scale(Rat(s), unit(i, n)), unit(j, n)));
                pos.push_back(sub(unit(7, n), unit(6, n)));
                for (int mask = 0; mask < 64; ++mask) {
                    if (__builtin_popcount(mask) % 2 != 1) continue;
                    RatVec v(n);
                    for (int i = 0; i < 6; ++i) v[i] = (mask >> i & 1) ? -h : h;
                    v[6] = -h; v[7] = h;
                    pos.push_back(v);
                }
                rs.simple = build(TypeLabel{Family::E, 6}).simple;
                rs.simple.push_back(sub(unit(5, n), unit(4, n)));
                rs.highest = sub(unit(7, n), unit(6, n));
            } else {
                for (int i = 0; i < 8; ++i)
                    for (int j = i + 1; j < 8; ++j)
                        for (int s : {1, -1})
                            pos.push_back(add(scale(Rat(s), unit(i, n)), unit(j, n)));
                for (int mask = 0; mask < 128; ++mask) {
                    if (__builtin_popcount(mask) % 2 != 0) continue;
                    RatVec v(n);
                    for (int i = 0; i < 7; ++i) v[i] = (mask >> i & 1) ? -h : h;
                    v[7] = h;
                    pos.push_back(v);
                }
                rs.simple = build(TypeLabel{Family::E, 7}).simple;
                rs.simple.push_back(sub(unit(6, n), unit(5, n)));
                rs.highest = add(unit(6, n), unit(7, n));
            }
            break;
        }
        case Family::F: {
            std::size_t n = 4;
            rs.ambient_dim = n;
            Rat h(1, 2);
            for (int i = 0; i < 4; ++i) pos.push_back(unit(i, n));
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) {
                    pos.push_back(add(unit(i, n), unit(j, n)));
                    pos.push_back(sub(unit(i, n), unit(j, n)));
                }
            for (int mask = 0; mask < 8; ++mask) {
                RatVec v{h, (mask & 1) ? -h : h, (mask & 2) ? -h : h, (mask & 4) ? -h : h};
                pos.push_back(v);
            }
            rs.simple = {sub(unit(1, n), unit(2, n)), sub(unit(2, n), unit(3, n)), unit(3, n),
                         RatVec{h, -h, -h, -h}};
            rs.highest = add(unit(0, n), unit(1, n));
            break;
        }
        case Family::G: {
            std::size_t n = 3;
            rs.ambient_dim = n;
            auto mk = [](long a, long b, long c) { return RatVec{Rat(a), Rat(b), Rat(c)}; };
            pos = {mk(1, -1, 0), mk(-1, 0, 1), mk(0, -1, 1), mk(-2, 1, 1), mk(1, -2, 1), mk(-1, -1, 2)};
            rs.simple = {mk(1, -1, 0), mk(-2, 1, 1)};
            rs.highest = mk(-1, -1, 2);
            break;
        }
    }
    detail::finish(rs, std::move(pos));
    return rs;
}

// ---------------------------------------------------------------------
// Root system recognition
// ---------------------------------------------------------------------

struct RootSystemCheck {
    enum class Verdict { yes_reduced, yes_nonreduced, no };
    Verdict verdict = Verdict::no;
    std::string violation;  // which axiom failed, with a witness

    bool ok() const { return verdict != Verdict::no; }
};

inline RootSystemCheck is_root_system(const RootSet& s) {
    RootSystemCheck out;
    for (const auto& a : s) {
        if (is_zero(a)) {
            out.violation = "contains zero vector";
            return out;
        }
    }
    for (const auto& a : s) {
        for (const auto& b : s) {
            Rat c = cartan_ratio(a, b);
            if (!is_integer(c)) {
                out.violation = "Cartan integer 2<a,b>/|a|^2 not integral";
                return out;
            }
            if (!s.count(reflect(a, b))) {
                out.violation = "not closed under reflection w_a(b)";
                return out;
            }
        }
    }
    bool reduced = true;
    for (const auto& a : s) {
        for (const auto& b : s) {
            if (a == b || b == neg(a)) continue;
            // b = m a with m != +-1 ?
            auto sol = solve_columns({a}, b);
            if (sol && !sol->empty() && (*sol)[0] != 1 && (*sol)[0] != -1) reduced = false;
        }
    }
    out.verdict = reduced ? RootSystemCheck::Verdict::yes_reduced
                          : RootSystemCheck::Verdict::yes_nonreduced;
    return out;
}

// Irreducible components of a root set under the non-orthogonality graph.
inline std::vector<std::vector<RatVec>> components_of(const std::vector<RatVec>& roots) {
    std::size_t n = roots.size();
    std::vector<int> comp(n, -1);
    int nc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        comp[i] = nc;
        std::vector<std::size_t> stack{i};
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            for (std::size_t v = 0; v < n; ++v) {
                if (comp[v] < 0 && dot(roots[u], roots[v]) != 0) {
                    comp[v] = nc;
                    stack.push_back(v);
                }
            }
        }
        ++nc;
    }
    std::vector<std::vector<RatVec>> out(nc);
    for (std::size_t i = 0; i < n; ++i) out[comp[i]].push_back(roots[i]);
    return out;
}

// Base recovery: lex-positive roots that are not sums of two positives.
inline std::vector<RatVec> recover_simple(const std::vector<RatVec>& roots) {
    RootSet posset;
    for (const auto& a : roots)
        if (lex_positive(a)) posset.insert(a);
    std::vector<RatVec> simple;
    for (const auto& a : posset) {
        bool decomposable = false;
        for (const auto& b : posset) {
            if (decomposable) break;
            RatVec c = sub(a, b);
            if (!is_zero(c) && posset.count(c)) decomposable = true;
        }
        if (!decomposable) simple.push_back(a);
    }
    return simple;
}

struct IdentifyResult {
    std::vector<TypeLabel> labels;                 // one per component, sorted
    std::vector<std::vector<RatVec>> components;   // matching order
    std::vector<std::string> notes;                // e.g. the B2/C2 alternative
};

namespace detail {

// Identify one irreducible component. Components isomorphic to A1, A3 or
// A1 u A1 report the A-side of (root_iso); B2 vs C2 is settled by exact
// scale match against the stored coordinate models, preferring B2.
inline TypeLabel identify_component(const std::vector<RatVec>& comp, std::string* note) {
    std::vector<RatVec> vecs(comp.begin(), comp.end());
    int rank = static_cast<int>(rank_of(vecs));
    std::size_t size = comp.size();
    std::set<Rat> lens;
    for (const auto& a : comp) lens.insert(norm2(a));
    bool nonreduced = false;
    RootSet s(comp.begin(), comp.end());
    for (const auto& a : comp)
        if (s.count(scale(Rat(2), a))) nonreduced = true;
    if (nonreduced) {
        if (size != static_cast<std::size_t>(2 * rank * (rank + 1)))
            throw std::domain_error("unrecognized non-reduced component");
        return TypeLabel{Family::BC, rank};
    }
    if (rank == 1) return TypeLabel{Family::A, 1};
    if (lens.size() == 1) {
        if (size == static_cast<std::size_t>(rank * (rank + 1))) return TypeLabel{Family::A, rank};
        if (size == static_cast<std::size_t>(2 * rank * (rank - 1))) return TypeLabel{Family::D, rank};
        if (rank == 6 && size == 72) return TypeLabel{Family::E, 6};
        if (rank == 7 && size == 126) return TypeLabel{Family::E, 7};
        if (rank == 8 && size == 240) return TypeLabel{Family::E, 8};
    } else if (lens.size() == 2) {
        Rat lo = *lens.begin(), hi = *lens.rbegin();
        if (rank == 2 && size == 12 && hi == 3 * lo) return TypeLabel{Family::G, 2};
        if (rank == 4 && size == 48 && hi == 2 * lo) return TypeLabel{Family::F, 4};
        if (size == static_cast<std::size_t>(2 * rank * rank) && hi == 2 * lo) {
            std::size_t nshort = 0;
            for (const auto& a : comp)
                if (norm2(a) == lo) ++nshort;
            if (rank == 2) {
                // B2 ~ C2; pick the label whose stored coordinates match at scale 1.
                if (lo == 2) {
                    if (note) *note = "C2 (isomorphic alternative: B2)";
                    return TypeLabel{Family::C, 2};
                }
                if (note) *note = "B2 (isomorphic alternative: C2)";
                return TypeLabel{Family::B, 2};
            }
            if (nshort == static_cast<std::size_t>(2 * rank)) return TypeLabel{Family::B, rank};
            if (size - nshort == static_cast<std::size_t>(2 * rank)) return TypeLabel{Family::C, rank};
        }
    }
    throw std::domain_error("unrecognized irreducible component");
}

}  // namespace detail

// Component types of a root set, normalized per the special isomorphisms
// D3 = A3, D2 = A1 u A1, B1 = C1 = A1.
inline IdentifyResult identify(const std::vector<RatVec>& roots) {
    IdentifyResult out;
    if (roots.empty()) return out;
    RootSet s(roots.begin(), roots.end());
    auto chk = is_root_system(s);
    if (!chk.ok()) throw std::invalid_argument("identify: not a root system: " + chk.violation);
    auto comps = components_of(roots);
    std::vector<std::pair<TypeLabel, std::vector<RatVec>>> tagged;
    for (auto& c : comps) {
        std::string note;
        TypeLabel t = detail::identify_component(c, &note);
        if (!note.empty()) out.notes.push_back(note);
        tagged.emplace_back(t, std::move(c));
    }
    std::sort(tagged.begin(), tagged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [t, c] : tagged) {
        out.labels.push_back(t);
        out.components.push_back(std::move(c));
    }
    return out;
}

// Wrap a bare root set as a RootSystem (base recovered, label identified).
inline RootSystem root_system_from_set(const std::vector<RatVec>& roots) {
    RootSystem rs;
    if (!roots.empty()) rs.ambient_dim = roots[0].size();
    RootSet s(roots.begin(), roots.end());
    rs.roots.assign(s.begin(), s.end());
    rs.simple = recover_simple(rs.roots);
    if (!rs.roots.empty()) rs.label = identify(rs.roots).labels;
    return rs;
}

inline std::string labels_str(const std::vector<TypeLabel>& ls) {
    if (ls.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (i) s += "+";
        s += ls[i].str();
    }
    return s;
}

}  // namespace symtriad
