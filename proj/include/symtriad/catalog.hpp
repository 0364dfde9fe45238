#pragma once

// The catalog of symmetric triads with multiplicities: the standard
// models of every type, recognition, the equivalence relations ~ and
// =, and the classification of ~-classes into non-=-equivalent
// representatives.

#include "symtriad/isomorphism.hpp"
#include "symtriad/triad.hpp"
#include "symtriad/weyl.hpp"

#include <functional>
#include <optional>
#include <sstream>

namespace symtriad {

enum class TagKind {
    I_B, I_C, I_BC_A, I_BC_B, I_F4, II_BC,
    Ip_B, Ip_C, Ip_BC_A, Ip_F4,
    III_A, III_B, III_C, III_BC, III_D, III_E, III_F4, III_G2,
};

struct TriadTag {
    TagKind kind;
    int r = 0;
    int s = 0;  // block parameter of the primed split forms

    std::string str() const {
        auto base = [&](const char* fmt) {
            std::string f(fmt);
            std::string out;
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (f[i] == '#') out += std::to_string(r);
                else out += f[i];
            }
            return out;
        };
        switch (kind) {
            case TagKind::I_B: return base("(I-B_#)");
            case TagKind::I_C: return base("(I-C_#)");
            case TagKind::I_BC_A: return base("(I-BC_#-A_1^#)");
            case TagKind::I_BC_B: return base("(I-BC_#-B_#)");
            case TagKind::I_F4: return "(I-F_4)";
            case TagKind::II_BC: return base("(II-BC_#)");
            case TagKind::Ip_B: return base("(I'-B_#)_") + std::to_string(s);
            case TagKind::Ip_C: return base("(I'-C_#)");
            case TagKind::Ip_BC_A: return base("(I'-BC_#-A_1^#)_") + std::to_string(s);
            case TagKind::Ip_F4: return "(I'-F_4)";
            case TagKind::III_A: return base("(III-A_#)");
            case TagKind::III_B: return base("(III-B_#)");
            case TagKind::III_C: return base("(III-C_#)");
            case TagKind::III_BC: return base("(III-BC_#)");
            case TagKind::III_D: return base("(III-D_#)");
            case TagKind::III_E: return base("(III-E_#)");
            case TagKind::III_F4: return "(III-F_4)";
            case TagKind::III_G2: return "(III-G_2)";
        }
        return "?";
    }

    auto operator<=>(const TriadTag&) const = default;
};

inline std::optional<TriadTag> parse_triad_tag(const std::string& in) {
    // accepts the printed form, e.g. "(I'-B_3)_1", "(I-BC_2-B_2)", "(III-A_4)"
    auto strip = [](std::string s) {
        std::string o;
        for (char c : s)
            if (!std::isspace(static_cast<unsigned char>(c))) o += c;
        return o;
    };
    std::string s = strip(in);
    for (TagKind k : {TagKind::I_B, TagKind::I_C, TagKind::I_BC_A, TagKind::I_BC_B, TagKind::I_F4,
                      TagKind::II_BC, TagKind::Ip_B, TagKind::Ip_C, TagKind::Ip_BC_A,
                      TagKind::Ip_F4, TagKind::III_A, TagKind::III_B, TagKind::III_C,
                      TagKind::III_BC, TagKind::III_D, TagKind::III_E, TagKind::III_F4,
                      TagKind::III_G2}) {
        for (int r = 1; r <= 16; ++r) {
            TriadTag t{k, r, 0};
            if (k == TagKind::Ip_B || k == TagKind::Ip_BC_A) {
                for (int ss = 1; ss < r; ++ss) {
                    t.s = ss;
                    if (strip(t.str()) == s) return t;
                }
            } else if (strip(t.str()) == s) {
                return t;
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------
// Standard catalog triads
// ---------------------------------------------------------------------

namespace detail {

enum class Shape { Short, Mid, Long };  // |a|^2 = 1, 2, 4 in the B/C/BC models

inline Shape shape_of(const RatVec& a) {
    Rat nn = norm2(a);
    if (nn == 1) return Shape::Short;
    if (nn == 2) return Shape::Mid;
    if (nn == 4) return Shape::Long;
    throw std::logic_error("unexpected root length in classical model");
}

// largest coordinate index (1-based) carried by a classical-model root
inline int max_support(const RatVec& a) {
    int k = -1;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) k = static_cast<int>(i);
    return k + 1;
}
inline int min_support(const RatVec& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) return static_cast<int>(i) + 1;
    return 0;
}

}  // namespace detail

inline int standard_param_count(const TriadTag& t) {
    int r = t.r;
    switch (t.kind) {
        case TagKind::I_B: return r == 1 ? 2 : 3;
        case TagKind::I_C: return r == 2 ? 3 : 2;
        case TagKind::I_BC_A: return r == 1 ? 3 : 4;
        case TagKind::I_BC_B: return r == 1 ? 2 : (r == 2 ? 4 : 3);
        case TagKind::I_F4: return 2;
        case TagKind::II_BC: return r == 1 ? 2 : 3;
        case TagKind::Ip_B: return 3;
        case TagKind::Ip_C: return r == 2 ? 3 : 2;
        case TagKind::Ip_BC_A: return 4;
        case TagKind::Ip_F4: return 2;
        case TagKind::III_A: return 1;
        case TagKind::III_B: return r == 1 ? 1 : (r == 2 ? 3 : 2);
        case TagKind::III_C: return r == 1 ? 2 : 3;
        case TagKind::III_BC: return r == 1 ? 3 : (r == 2 ? 5 : 4);
        case TagKind::III_D: return 1;
        case TagKind::III_E: return 1;
        case TagKind::III_F4: return 2;
        case TagKind::III_G2: return 2;
    }
    return 0;
}

inline bool tag_rank_valid(const TriadTag& t) {
    int r = t.r;
    switch (t.kind) {
        case TagKind::I_B:
        case TagKind::I_BC_A:
        case TagKind::I_BC_B:
        case TagKind::II_BC:
        case TagKind::III_A:
        case TagKind::III_B:
        case TagKind::III_C:
        case TagKind::III_BC: return r >= 1;
        case TagKind::I_C:
        case TagKind::Ip_C: return r >= 2;
        case TagKind::Ip_B:
        case TagKind::Ip_BC_A: return r >= 2 && t.s >= 1 && t.s <= r - 1;
        case TagKind::III_D: return r >= 3;
        case TagKind::III_E: return r == 6 || r == 7 || r == 8;
        case TagKind::I_F4:
        case TagKind::Ip_F4:
        case TagKind::III_F4: return r == 4;
        case TagKind::III_G2: return r == 2;
    }
    return false;
}

// Builds the triad printed in the catalog for this tag; `params` supplies
// the free positive constants in the order of the printed equalities.
inline MultSymmetricTriad standard(const TriadTag& tag, const std::vector<Rat>& params) {
    using detail::Shape;
    using detail::shape_of;
    if (!tag_rank_valid(tag)) throw std::invalid_argument("invalid tag " + tag.str());
    if (static_cast<int>(params.size()) != standard_param_count(tag))
        throw std::invalid_argument("tag " + tag.str() + " takes " +
                                    std::to_string(standard_param_count(tag)) + " parameters, got " +
                                    std::to_string(params.size()));
    for (const auto& p : params)
        if (p <= 0) throw std::invalid_argument("multiplicity parameters must be positive");

    int r = tag.r, s = tag.s;
    TypeLabel model;
    switch (tag.kind) {
        case TagKind::I_B:
        case TagKind::Ip_B:
        case TagKind::III_B: model = {Family::B, r}; break;
        case TagKind::I_C:
        case TagKind::Ip_C:
        case TagKind::III_C: model = {Family::C, r}; break;
        case TagKind::I_BC_A:
        case TagKind::I_BC_B:
        case TagKind::II_BC:
        case TagKind::Ip_BC_A:
        case TagKind::III_BC: model = {Family::BC, r}; break;
        case TagKind::I_F4:
        case TagKind::Ip_F4:
        case TagKind::III_F4: model = {Family::F, 4}; break;
        case TagKind::III_A: model = {Family::A, r}; break;
        case TagKind::III_D: model = {Family::D, r}; break;
        case TagKind::III_E: model = {Family::E, r}; break;
        case TagKind::III_G2: model = {Family::G, 2}; break;
    }
    MultSymmetricTriad t;
    t.st = build(model);
    std::size_t N = t.st.roots.size();
    t.in_sigma.assign(N, 0);
    t.in_w.assign(N, 0);
    t.m.assign(N, Rat(0));
    t.n.assign(N, Rat(0));

    // block membership for the primed split forms: 1 = coords <= s,
    // 2 = coords > s, 0 = crossing
    auto block = [&](const RatVec& a) {
        if (detail::max_support(a) <= s) return 1;
        if (detail::min_support(a) > s) return 2;
        return 0;
    };
    // the (I'-F4) split: long roots +-e1+-e2 and +-e3+-e4 lie in Sigma
    auto f4_sigma_long = [&](const RatVec& a) {
        bool lowpair = a[0] != 0 && a[1] != 0;
        bool highpair = a[2] != 0 && a[3] != 0;
        return lowpair || highpair;
    };

    for (std::size_t i = 0; i < N; ++i) {
        const RatVec& a = t.st.roots[i];
        Rat mm(0), nn(0);
        switch (tag.kind) {
            case TagKind::I_B:
                if (r == 1) { mm = params[0]; nn = params[1]; }
                else {
                    mm = (shape_of(a) == Shape::Short) ? params[0] : params[1];
                    if (shape_of(a) == Shape::Short) nn = params[2];
                }
                break;
            case TagKind::I_C:
                if (r == 2) {
                    if (shape_of(a) == Shape::Mid) { mm = params[0]; nn = params[2]; }
                    else mm = params[1];
                } else {
                    if (shape_of(a) == Shape::Mid) { mm = params[0]; nn = params[0]; }
                    else mm = params[1];
                }
                break;
            case TagKind::I_BC_A:
                if (r == 1) {
                    if (shape_of(a) == Shape::Short) { mm = params[0]; nn = params[2]; }
                    else mm = params[1];
                } else {
                    switch (shape_of(a)) {
                        case Shape::Short: mm = params[0]; nn = params[3]; break;
                        case Shape::Mid: mm = params[1]; break;
                        case Shape::Long: mm = params[2]; break;
                    }
                }
                break;
            case TagKind::I_BC_B:
                if (r == 1) {
                    if (shape_of(a) == Shape::Short) { mm = params[0]; nn = params[0]; }
                    else mm = params[1];
                } else {
                    switch (shape_of(a)) {
                        case Shape::Short: mm = params[0]; nn = params[0]; break;
                        case Shape::Long: mm = params[1]; break;
                        case Shape::Mid:
                            mm = params[2];
                            nn = (r == 2) ? params[3] : params[2];
                            break;
                    }
                }
                break;
            case TagKind::I_F4:
                if (norm2(a) == 1) { mm = params[0]; nn = params[0]; }
                else mm = params[1];
                break;
            case TagKind::II_BC:
                if (r == 1) {
                    if (shape_of(a) == Shape::Short) { mm = params[0]; nn = params[0]; }
                    else nn = params[1];
                } else {
                    switch (shape_of(a)) {
                        case Shape::Short: mm = params[0]; nn = params[0]; break;
                        case Shape::Long: nn = params[1]; break;
                        case Shape::Mid: mm = params[2]; nn = params[2]; break;
                    }
                }
                break;
            case TagKind::Ip_B:
                if (shape_of(a) == Shape::Short) {
                    bool low = block(a) == 1;
                    mm = low ? params[0] : params[1];
                    nn = low ? params[1] : params[0];
                } else {
                    if (block(a) != 0) mm = params[2];
                    else nn = params[2];
                }
                break;
            case TagKind::Ip_C:
                if (r == 2) {
                    if (shape_of(a) == Shape::Long) nn = params[0];
                    else if (a[0] == a[1] || a[0] == -a[1]) {
                        // +-(e1+e2) when signs equal
                        bool plus = (a[0] == a[1]);
                        mm = plus ? params[1] : params[2];
                        nn = plus ? params[2] : params[1];
                    }
                } else {
                    if (shape_of(a) == Shape::Mid) { mm = params[0]; nn = params[0]; }
                    else nn = params[1];
                }
                break;
            case TagKind::Ip_BC_A:
                switch (shape_of(a)) {
                    case Shape::Long: mm = params[3]; break;
                    case Shape::Short: {
                        bool low = block(a) == 1;
                        mm = low ? params[0] : params[1];
                        nn = low ? params[1] : params[0];
                        break;
                    }
                    case Shape::Mid:
                        if (block(a) != 0) mm = params[2];
                        else nn = params[2];
                        break;
                }
                break;
            case TagKind::Ip_F4:
                if (norm2(a) == 1) { mm = params[0]; nn = params[0]; }
                else if (f4_sigma_long(a)) mm = params[1];
                else nn = params[1];
                break;
            case TagKind::III_A:
            case TagKind::III_D:
            case TagKind::III_E:
                mm = params[0]; nn = params[0];
                break;
            case TagKind::III_B:
                if (r == 1) { mm = params[0]; nn = params[0]; }
                else if (r == 2) {
                    if (shape_of(a) == Shape::Short) { mm = params[0]; nn = params[0]; }
                    else { mm = params[1]; nn = params[2]; }
                } else {
                    Rat v = (shape_of(a) == Shape::Short) ? params[0] : params[1];
                    mm = v; nn = v;
                }
                break;
            case TagKind::III_C:
                if (r == 1) { mm = params[0]; nn = params[1]; }
                else if (shape_of(a) == Shape::Mid) { mm = params[0]; nn = params[0]; }
                else { mm = params[1]; nn = params[2]; }
                break;
            case TagKind::III_BC:
                switch (shape_of(a)) {
                    case Shape::Short: mm = params[0]; nn = params[0]; break;
                    case Shape::Mid:
                        if (r == 2) { mm = params[1]; nn = params[2]; }
                        else { mm = params[1]; nn = params[1]; }
                        break;
                    case Shape::Long:
                        if (r == 1) { mm = params[1]; nn = params[2]; }
                        else if (r == 2) { mm = params[3]; nn = params[4]; }
                        else { mm = params[2]; nn = params[3]; }
                        break;
                }
                break;
            case TagKind::III_F4:
            case TagKind::III_G2: {
                Rat lo = norm2(t.st.roots[0]);
                for (const auto& b : t.st.roots) lo = std::min(lo, norm2(b));
                Rat v = (norm2(a) == lo) ? params[0] : params[1];
                mm = v; nn = v;
                break;
            }
        }
        t.m[i] = mm;
        t.n[i] = nn;
        t.in_sigma[i] = mm > 0;
        t.in_w[i] = nn > 0;
    }
    return t;
}

// ---------------------------------------------------------------------
// Transport, equivalence, twist search
// ---------------------------------------------------------------------

// Pushes triad data through a root-set symmetry of its own model.
inline MultSymmetricTriad transport(const MultSymmetricTriad& t, const std::vector<int>& perm) {
    MultSymmetricTriad out = t;
    for (std::size_t i = 0; i < t.size(); ++i) {
        int j = perm[i];
        out.in_sigma[j] = t.in_sigma[i];
        out.in_w[j] = t.in_w[i];
        out.m[j] = t.m[i];
        out.n[j] = t.n[i];
    }
    return out;
}

// Data-level equality witness under a root-system isomorphism f:
// f(Sigma)=Sigma', f(W)=W', m = m' o f, n = n' o f.
inline bool equiv_under(const RootIso& f, const MultSymmetricTriad& t,
                        const MultSymmetricTriad& u) {
    for (std::size_t i = 0; i < t.size(); ++i) {
        RatVec img = f.map.apply(t.st.roots[i]);
        int j = u.st.index_of(img);
        if (j < 0) return false;
        if (static_cast<bool>(t.in_sigma[i]) != static_cast<bool>(u.in_sigma[j])) return false;
        if (static_cast<bool>(t.in_w[i]) != static_cast<bool>(u.in_w[j])) return false;
        if (t.m[i] != u.m[j] || t.n[i] != u.n[j]) return false;
    }
    return true;
}

// Decides t = u (Definition of =): an isomorphism of the ambient root
// systems matching Sigma, W, m and n. Root-system isomorphisms may
// rescale (Cartan integers are scale-free). Exhaustive over Aut(Sigma~).
inline std::optional<RootIso> are_equiv(const MultSymmetricTriad& t, const MultSymmetricTriad& u,
                                        int rank_cap = kDefaultWeylRankCap) {
    if (t.size() != u.size()) return std::nullopt;
    // identity fast path on a shared model
    if (t.st.roots == u.st.roots && t.same_data(u)) {
        RootIso id;
        id.map.basis = t.st.simple;
        id.map.images = t.st.simple;
        id.component_scales.assign(1, Rat(1));
        return id;
    }
    auto f0 = find_isomorphism(t.st.roots, u.st.roots, true);
    if (!f0) return std::nullopt;
    if (t.st.rank() > rank_cap) {
        // only the direct witness is attempted above the enumeration cap
        if (equiv_under(*f0, t, u)) return f0;
        return std::nullopt;
    }
    auto auts = automorphisms(t.st, rank_cap);
    for (const auto& a : auts) {
        // candidate f = f0 o a
        RootIso f;
        f.map.basis = t.st.simple;
        f.component_scales = f0->component_scales;
        for (const auto& b : t.st.simple) f.map.images.push_back(f0->map.apply(a.map(b)));
        if (equiv_under(f, t, u)) {
            if (!check_root_iso(f.map, t.st.roots, u.st.roots)) continue;
            return f;
        }
    }
    return std::nullopt;
}

struct SimWitness {
    GammaElement y;
    RootIso f;
};

// Decides t ~ u; Y ranges over parity representatives {0,1}^rank, f over
// Aut (rank-capped), applied as u = f(twist_Y(t)).
inline std::optional<SimWitness> are_sim(const MultSymmetricTriad& t, const MultSymmetricTriad& u,
                                         int rank_cap = kDefaultWeylRankCap,
                                         bool strict_isometry = true) {
    if (t.size() != u.size()) return std::nullopt;
    // ~ preserves the multiset {(|a|^2, m+n)}; quick filter when the two
    // models carry the same norms (it is not scale-aware)
    auto inv = [](const MultSymmetricTriad& x) {
        std::multiset<std::pair<std::string, std::string>> s;
        for (std::size_t i = 0; i < x.size(); ++i)
            s.insert({to_string(norm2(x.st.roots[i])), to_string(x.m[i] + x.n[i])});
        return s;
    };
    auto norms = [](const MultSymmetricTriad& x) {
        std::multiset<std::string> s;
        for (std::size_t i = 0; i < x.size(); ++i) s.insert(to_string(norm2(x.st.roots[i])));
        return s;
    };
    if (norms(t) == norms(u) && inv(t) != inv(u)) return std::nullopt;
    bool same_model = (t.st.roots == u.st.roots);
    for (const auto& y : twist_representatives(t.st.rank())) {
        MultSymmetricTriad ty = twist(t, y);
        if (same_model && ty.same_data(u)) {
            RootIso id;
            id.map.basis = t.st.simple;
            id.map.images = t.st.simple;
            id.component_scales.assign(1, Rat(1));
            return SimWitness{y, id};
        }
        if (t.st.rank() <= rank_cap) {
            auto f = are_equiv(ty, u, rank_cap);
            if (f) {
                if (strict_isometry) {
                    bool unit = true;
                    for (const auto& sc : f->component_scales)
                        if (sc != 1) unit = false;
                    if (!unit) continue;
                }
                return SimWitness{y, *f};
            }
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------
// Tag recognition
// ---------------------------------------------------------------------

struct RecognizedTriad {
    TriadTag tag;
    std::vector<Rat> params;
};

// Recognizes the catalog shape of a triad on any coordinate model, using
// length-class structure. The primed split forms (I'-B_r)_s and
// (I'-BC_r-A_1^r)_s are recognized on the standard models only.
inline std::optional<RecognizedTriad> tag_recognize(const MultSymmetricTriad& t) {
    if (t.st.label.size() != 1) return std::nullopt;
    TypeLabel lbl = t.st.label[0];
    int r = lbl.rank;
    std::size_t N = t.size();

    // norm classes, ascending
    std::vector<Rat> norms;
    for (const auto& a : t.st.roots) norms.push_back(norm2(a));
    std::vector<Rat> classes(norms.begin(), norms.end());
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    auto cls = [&](std::size_t i) {
        return std::find(classes.begin(), classes.end(), norms[i]) - classes.begin();
    };
    auto class_mask = [&](std::initializer_list<int> which) {
        std::vector<char> mask(N, 0);
        for (std::size_t i = 0; i < N; ++i)
            for (int wch : which)
                if (cls(i) == wch) mask[i] = 1;
        return mask;
    };
    auto is_mask = [&](const std::vector<char>& got, const std::vector<char>& want) {
        return got == want;
    };
    auto all_mask = std::vector<char>(N, 1);
    auto rep_val = [&](int klass, const std::vector<Rat>& v) -> std::optional<Rat> {
        std::optional<Rat> out;
        for (std::size_t i = 0; i < N; ++i) {
            if (cls(i) != klass) continue;
            if (!out) out = v[i];
            else if (*out != v[i]) return std::nullopt;
        }
        return out;
    };

    auto sigma_all = is_mask(t.in_sigma, all_mask);
    auto w_all = is_mask(t.in_w, all_mask);

    switch (lbl.family) {
        case Family::A:
        case Family::D:
        case Family::E: {
            if (!(sigma_all && w_all)) break;
            auto mv = rep_val(0, t.m), nv = rep_val(0, t.n);
            if (mv && nv && *mv == *nv) {
                TagKind k = lbl.family == Family::A   ? TagKind::III_A
                            : lbl.family == Family::D ? TagKind::III_D
                                                      : TagKind::III_E;
                return RecognizedTriad{{k, r, 0}, {*mv}};
            }
            break;
        }
        case Family::G: {
            if (!(sigma_all && w_all)) break;
            auto a = rep_val(0, t.m), b = rep_val(1, t.m);
            auto an = rep_val(0, t.n), bn = rep_val(1, t.n);
            if (a && b && an && bn && *a == *an && *b == *bn)
                return RecognizedTriad{{TagKind::III_G2, 2, 0}, {*a, *b}};
            break;
        }
        case Family::F: {
            auto shorts = class_mask({0});
            if (sigma_all && w_all) {
                auto a = rep_val(0, t.m), b = rep_val(1, t.m);
                auto an = rep_val(0, t.n), bn = rep_val(1, t.n);
                if (a && b && an && bn && *a == *an && *b == *bn)
                    return RecognizedTriad{{TagKind::III_F4, 4, 0}, {*a, *b}};
            } else if (sigma_all && is_mask(t.in_w, shorts)) {
                auto a = rep_val(0, t.m), b = rep_val(1, t.m);
                auto an = rep_val(0, t.n);
                if (a && b && an && *a == *an)
                    return RecognizedTriad{{TagKind::I_F4, 4, 0}, {*a, *b}};
            } else {
                // primed shape: both Sigma and W proper, shorts shared
                std::size_t nsl = 0;
                bool shorts_shared = true;
                std::optional<Rat> bs;
                for (std::size_t i = 0; i < N; ++i) {
                    if (cls(i) == 0 && !(t.in_sigma[i] && t.in_w[i])) shorts_shared = false;
                    if (cls(i) == 1 && t.in_sigma[i]) {
                        ++nsl;
                        if (!bs) bs = t.m[i];
                        else if (*bs != t.m[i]) shorts_shared = false;
                    }
                }
                auto a = rep_val(0, t.m), an = rep_val(0, t.n);
                if (shorts_shared && nsl == 8 && a && an && *a == *an && bs)
                    return RecognizedTriad{{TagKind::Ip_F4, 4, 0}, {*a, *bs}};
            }
            break;
        }
        case Family::B: {
            auto shorts = class_mask({0});
            if (sigma_all && w_all) {
                if (r == 1) {
                    auto a = rep_val(0, t.m), an = rep_val(0, t.n);
                    if (a && an && *a == *an) return RecognizedTriad{{TagKind::III_B, 1, 0}, {*a}};
                    break;
                }
                auto a = rep_val(0, t.m), an = rep_val(0, t.n);
                auto c1 = rep_val(1, t.m), c2 = rep_val(1, t.n);
                if (!(a && an && c1 && c2) || *a != *an) break;
                if (r == 2) return RecognizedTriad{{TagKind::III_B, 2, 0}, {*a, *c1, *c2}};
                if (*c1 == *c2) return RecognizedTriad{{TagKind::III_B, r, 0}, {*a, *c1}};
                break;
            }
            if (sigma_all && is_mask(t.in_w, shorts)) {
                auto a = rep_val(0, t.m), c = rep_val(0, t.n);
                if (r == 1) {
                    if (a && c) return RecognizedTriad{{TagKind::I_B, 1, 0}, {*a, *c}};
                    break;
                }
                auto b = rep_val(1, t.m);
                if (a && b && c) return RecognizedTriad{{TagKind::I_B, r, 0}, {*a, *b, *c}};
                break;
            }
            // (I'-B_r)_s on the standard model
            if (r >= 2 && t.st.ambient_dim == static_cast<std::size_t>(r)) {
                // shorts must be in both
                bool ok = true;
                for (std::size_t i = 0; i < N; ++i)
                    if (cls(i) == 0 && !(t.in_sigma[i] && t.in_w[i])) ok = false;
                if (!ok) break;
                // blocks: indices i,j in one block iff mid e_i-e_j or e_i+e_j in Sigma
                for (int ss = 1; ss <= r - 1 && ok; ++ss) {
                    TriadTag cand{TagKind::Ip_B, r, ss};
                    // read candidate params off the data and rebuild
                    RatVec e1 = zero_vec(r);
                    e1[0] = 1;
                    RatVec er = zero_vec(r);
                    er[r - 1] = 1;
                    int i1 = t.st.index_of(e1), i2 = t.st.index_of(er);
                    std::vector<Rat> ps = {t.m[i1], t.n[i1], Rat(0)};
                    // any crossing mid
                    RatVec cross = zero_vec(r);
                    cross[0] = 1;
                    cross[r - 1] = -1;
                    int ic = t.st.index_of(cross);
                    ps[2] = t.n[ic];
                    if (ps[0] <= 0 || ps[1] <= 0 || ps[2] <= 0) continue;
                    auto rebuilt = standard(cand, ps);
                    if (rebuilt.same_data(t)) return RecognizedTriad{cand, ps};
                }
            }
            break;
        }
        case Family::C: {
            auto mids = class_mask({0});
            if (sigma_all && w_all) {
                if (r == 1) {
                    auto c1 = rep_val(0, t.m), c2 = rep_val(0, t.n);
                    if (c1 && c2) return RecognizedTriad{{TagKind::III_C, 1, 0}, {*c1, *c2}};
                    break;
                }
                auto a = rep_val(0, t.m), an = rep_val(0, t.n);
                auto c1 = rep_val(1, t.m), c2 = rep_val(1, t.n);
                if (a && an && c1 && c2 && *a == *an)
                    return RecognizedTriad{{TagKind::III_C, r, 0}, {*a, *c1, *c2}};
                break;
            }
            if (sigma_all && is_mask(t.in_w, mids)) {
                auto a = rep_val(0, t.m), b = rep_val(1, t.m), c = rep_val(0, t.n);
                if (!(a && b && c)) break;
                if (r == 2) return RecognizedTriad{{TagKind::I_C, 2, 0}, {*a, *b, *c}};
                if (*a == *c) return RecognizedTriad{{TagKind::I_C, r, 0}, {*a, *b}};
                break;
            }
            if (w_all && is_mask(t.in_sigma, mids)) {
                auto b = rep_val(1, t.n);
                if (!b) break;
                if (r >= 3) {
                    auto a = rep_val(0, t.m), an = rep_val(0, t.n);
                    if (a && an && *a == *an)
                        return RecognizedTriad{{TagKind::Ip_C, r, 0}, {*a, *b}};
                    break;
                }
                // r == 2 on the standard model: read off +-(e1+e2)
                if (t.st.ambient_dim == 2) {
                    RatVec plus{Rat(1), Rat(1)};
                    int ip = t.st.index_of(plus);
                    if (ip >= 0) {
                        std::vector<Rat> ps = {*b, t.m[ip], t.n[ip]};
                        auto rebuilt = standard({TagKind::Ip_C, 2, 0}, ps);
                        if (rebuilt.same_data(t)) return RecognizedTriad{{TagKind::Ip_C, 2, 0}, ps};
                    }
                }
                break;
            }
            break;
        }
        case Family::BC: {
            auto shorts = class_mask({0});
            auto bpart = r >= 2 ? class_mask({0, 1}) : class_mask({0});
            int longc = r >= 2 ? 2 : 1;
            int midc = 1;  // only meaningful when r >= 2
            if (sigma_all && w_all) {
                auto a = rep_val(0, t.m), an = rep_val(0, t.n);
                auto b1 = rep_val(longc, t.m), b2 = rep_val(longc, t.n);
                if (!(a && an && b1 && b2) || *a != *an) break;
                if (r == 1) return RecognizedTriad{{TagKind::III_BC, 1, 0}, {*a, *b1, *b2}};
                auto c1 = rep_val(midc, t.m), c2 = rep_val(midc, t.n);
                if (!(c1 && c2)) break;
                if (r == 2)
                    return RecognizedTriad{{TagKind::III_BC, 2, 0}, {*a, *c1, *c2, *b1, *b2}};
                if (*c1 == *c2)
                    return RecognizedTriad{{TagKind::III_BC, r, 0}, {*a, *c1, *b1, *b2}};
                break;
            }
            if (sigma_all && is_mask(t.in_w, shorts)) {
                auto a = rep_val(0, t.m), d = rep_val(0, t.n), c = rep_val(longc, t.m);
                if (!(a && d && c)) break;
                if (r == 1) return RecognizedTriad{{TagKind::I_BC_A, 1, 0}, {*a, *c, *d}};
                auto b = rep_val(midc, t.m);
                if (b) return RecognizedTriad{{TagKind::I_BC_A, r, 0}, {*a, *b, *c, *d}};
                break;
            }
            if (r >= 2 && sigma_all && is_mask(t.in_w, bpart)) {
                auto a = rep_val(0, t.m), an = rep_val(0, t.n), b = rep_val(longc, t.m);
                auto c1 = rep_val(midc, t.m), c2 = rep_val(midc, t.n);
                if (!(a && an && b && c1 && c2) || *a != *an) break;
                if (r == 2) return RecognizedTriad{{TagKind::I_BC_B, 2, 0}, {*a, *b, *c1, *c2}};
                if (*c1 == *c2) return RecognizedTriad{{TagKind::I_BC_B, r, 0}, {*a, *b, *c1}};
                break;
            }
            if (w_all && is_mask(t.in_sigma, bpart)) {
                auto a = rep_val(0, t.m), an = rep_val(0, t.n), b = rep_val(longc, t.n);
                if (!(a && an && b) || *a != *an) break;
                if (r == 1) return RecognizedTriad{{TagKind::II_BC, 1, 0}, {*a, *b}};
                auto c1 = rep_val(midc, t.m), c2 = rep_val(midc, t.n);
                if (c1 && c2 && *c1 == *c2)
                    return RecognizedTriad{{TagKind::II_BC, r, 0}, {*a, *b, *c1}};
                break;
            }
            // (I'-BC_r-A_1^r)_s on the standard model
            if (r >= 2 && t.st.ambient_dim == static_cast<std::size_t>(r)) {
                for (int ss = 1; ss <= r - 1; ++ss) {
                    TriadTag cand{TagKind::Ip_BC_A, r, ss};
                    RatVec e1 = zero_vec(r);
                    e1[0] = 1;
                    RatVec e2 = zero_vec(r);
                    e2[0] = 2;
                    RatVec cross = zero_vec(r);
                    cross[0] = 1;
                    cross[r - 1] = -1;
                    int i1 = t.st.index_of(e1), il = t.st.index_of(e2), ic = t.st.index_of(cross);
                    std::vector<Rat> ps = {t.m[i1], t.n[i1], t.n[ic], t.m[il]};
                    if (ps[0] <= 0 || ps[1] <= 0 || ps[2] <= 0 || ps[3] <= 0) continue;
                    auto rebuilt = standard(cand, ps);
                    if (rebuilt.same_data(t)) return RecognizedTriad{cand, ps};
                }
            }
            break;
        }
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------
// Classification of the ~-class into non-= representatives
// ---------------------------------------------------------------------

struct SimClassMember {
    MultSymmetricTriad triad;
    std::optional<RecognizedTriad> recognized;
};

// Canonical comparison key: larger Sigma first, then larger m-vector,
// then larger n-vector (deterministic tie-break for canonical
// representatives; the catalog's unprimed form always wins).
inline bool canonical_less(const MultSymmetricTriad& a, const MultSymmetricTriad& b) {
    std::size_t sa = 0, sb = 0;
    for (char c : a.in_sigma) sa += c;
    for (char c : b.in_sigma) sb += c;
    if (sa != sb) return sa < sb;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.m[i] != b.m[i]) return a.m[i] < b.m[i];
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.n[i] != b.n[i]) return a.n[i] < b.n[i];
    return false;
}

namespace detail {

// key for exact-data dedup
inline std::string data_key(const MultSymmetricTriad& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        s += char('0' + t.in_sigma[i]);
        s += char('0' + t.in_w[i]);
        s += to_string(t.m[i]) + "|" + to_string(t.n[i]) + ";";
    }
    return s;
}

}  // namespace detail

// Exhaustive ~-class computation (rank-capped): every (f, Y) image of t,
// grouped into Aut-orbits (= =-classes on a shared model), one canonical
// representative per orbit.
inline std::vector<SimClassMember> sim_class_exhaustive(const MultSymmetricTriad& t,
                                                        int rank_cap = kDefaultWeylRankCap) {
    auto auts = automorphisms(t.st, rank_cap);
    std::map<std::string, MultSymmetricTriad> all;
    for (const auto& y : twist_representatives(t.st.rank())) {
        MultSymmetricTriad ty = twist(t, y);
        for (const auto& a : auts) {
            auto cand = transport(ty, a.perm);
            all.emplace(detail::data_key(cand), cand);
        }
    }
    // Aut-orbit grouping
    std::set<std::string> seen;
    std::vector<SimClassMember> reps;
    for (const auto& [key, cand] : all) {
        if (seen.count(key)) continue;
        MultSymmetricTriad best = cand;
        for (const auto& a : auts) {
            auto img = transport(cand, a.perm);
            seen.insert(detail::data_key(img));
            if (canonical_less(best, img)) best = img;
        }
        reps.push_back({best, tag_recognize(best)});
    }
    std::sort(reps.begin(), reps.end(), [](const SimClassMember& x, const SimClassMember& y) {
        return canonical_less(y.triad, x.triad);
    });
    return reps;
}

namespace detail {

// coordinate reversal e_i -> e_{r+1-i} on a classical model
inline std::vector<int> reversal_perm(const RootSystem& rs) {
    std::size_t d = rs.ambient_dim;
    std::vector<int> perm(rs.roots.size());
    for (std::size_t i = 0; i < rs.roots.size(); ++i) {
        RatVec v = rs.roots[i];
        RatVec w(v.rbegin(), v.rend());
        int j = rs.index_of(w);
        if (j < 0) throw std::logic_error("reversal does not preserve model");
        perm[i] = j;
    }
    (void)d;
    return perm;
}

inline void push_unique(std::vector<MultSymmetricTriad>& members, const MultSymmetricTriad& cand,
                        bool try_reversal) {
    auto same = [&](const MultSymmetricTriad& a, const MultSymmetricTriad& b) {
        if (a.same_data(b)) return true;
        if (try_reversal) {
            auto rev = reversal_perm(a.st);
            if (transport(a, rev).same_data(b)) return true;
        }
        return false;
    };
    for (const auto& m : members)
        if (same(cand, m)) return;
    members.push_back(cand);
}

}  // namespace detail

// Classification-driven ~-class listing per the printed relations; valid
// at every rank. Cross-checked against sim_class_exhaustive at low rank
// by the test suite.
inline std::vector<SimClassMember> sim_class(const MultSymmetricTriad& t,
                                             int rank_cap = kDefaultWeylRankCap) {
    auto rec = tag_recognize(t);
    if (!rec) {
        if (t.st.rank() <= rank_cap) return sim_class_exhaustive(t, rank_cap);
        throw std::invalid_argument("sim_class: unrecognized triad above the enumeration cap");
    }
    const auto& tag = rec->tag;
    const auto& p = rec->params;
    int r = tag.r;
    std::vector<MultSymmetricTriad> members;
    auto add = [&](const TriadTag& tg, std::vector<Rat> ps, bool rev = false) {
        detail::push_unique(members, standard(tg, std::move(ps)), rev);
    };

    switch (tag.kind) {
        case TagKind::I_B:
            if (r == 1) {
                add(tag, {p[0], p[1]});
                add(tag, {p[1], p[0]});
            } else {
                add(tag, {p[0], p[1], p[2]});
                add(tag, {p[2], p[1], p[0]});
                for (int s = 1; s <= r - 1; ++s) {
                    add({TagKind::Ip_B, r, s}, {p[2], p[0], p[1]}, true);
                    add({TagKind::Ip_B, r, s}, {p[0], p[2], p[1]}, true);
                }
            }
            break;
        case TagKind::I_BC_A:
            if (r == 1) {
                add(tag, {p[0], p[1], p[2]});
                add(tag, {p[2], p[1], p[0]});
            } else {
                add(tag, {p[0], p[1], p[2], p[3]});
                add(tag, {p[3], p[1], p[2], p[0]});
                for (int s = 1; s <= r - 1; ++s) {
                    add({TagKind::Ip_BC_A, r, s}, {p[3], p[0], p[1], p[2]}, true);
                    add({TagKind::Ip_BC_A, r, s}, {p[0], p[3], p[1], p[2]}, true);
                }
            }
            break;
        case TagKind::I_C:
            if (r == 2) {
                add(tag, {p[0], p[1], p[2]});
                add(tag, {p[2], p[1], p[0]});
                add({TagKind::Ip_C, 2, 0}, {p[1], p[2], p[0]});
                add({TagKind::Ip_C, 2, 0}, {p[1], p[0], p[2]});
            } else {
                add(tag, {p[0], p[1]});
                add({TagKind::Ip_C, r, 0}, {p[0], p[1]});
            }
            break;
        case TagKind::I_BC_B:
            if (r == 2) {
                add(tag, {p[0], p[1], p[2], p[3]});
                add(tag, {p[0], p[1], p[3], p[2]});
            } else {
                add(tag, p);
            }
            break;
        case TagKind::I_F4:
            add(tag, {p[0], p[1]});
            add({TagKind::Ip_F4, 4, 0}, {p[0], p[1]});
            break;
        case TagKind::III_B:
            if (r == 2) {
                add(tag, {p[0], p[1], p[2]});
                add(tag, {p[0], p[2], p[1]});
            } else {
                add(tag, p);
            }
            break;
        case TagKind::III_C:
            if (r == 1) {
                add(tag, {p[0], p[1]});
                add(tag, {p[1], p[0]});
            } else {
                add(tag, {p[0], p[1], p[2]});
                add(tag, {p[0], p[2], p[1]});
            }
            break;
        case TagKind::III_BC:
            if (r == 2) {
                add(tag, {p[0], p[1], p[2], p[3], p[4]});
                add(tag, {p[0], p[2], p[1], p[3], p[4]});
            } else {
                add(tag, p);
            }
            break;
        case TagKind::Ip_B:
        case TagKind::Ip_C:
        case TagKind::Ip_BC_A:
        case TagKind::Ip_F4: {
            // a primed form classifies through its unprimed partner
            MultSymmetricTriad partner;
            if (tag.kind == TagKind::Ip_B)
                partner = standard({TagKind::I_B, r, 0}, {p[1], p[2], p[0]});
            else if (tag.kind == TagKind::Ip_BC_A)
                partner = standard({TagKind::I_BC_A, r, 0}, {p[1], p[2], p[3], p[0]});
            else if (tag.kind == TagKind::Ip_F4)
                partner = standard({TagKind::I_F4, 4, 0}, {p[0], p[1]});
            else if (r == 2)
                partner = standard({TagKind::I_C, 2, 0}, {p[2], p[0], p[1]});
            else
                partner = standard({TagKind::I_C, r, 0}, {p[0], p[1]});
            return sim_class(partner, rank_cap);
        }
        default:  // the singleton classes
            add(tag, p);
            break;
    }
    std::vector<SimClassMember> out;
    for (const auto& mem : members) out.push_back({mem, tag_recognize(mem)});
    std::sort(out.begin(), out.end(), [](const SimClassMember& x, const SimClassMember& y) {
        return canonical_less(y.triad, x.triad);
    });
    return out;
}

}  // namespace symtriad
