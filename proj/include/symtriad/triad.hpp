#pragma once

// Symmetric triads with multiplicities (Sigma~, Sigma, W; m, n), the
// lattice Gamma, and the parity twist that generates the ~ relation.

#include "symtriad/root_system.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace symtriad {

struct MultSymmetricTriad {
    enum class Kind { ordinary, type_iv };

    RootSystem st;                 // Sigma~ (irreducible)
    std::vector<char> in_sigma;    // per root index of st.roots
    std::vector<char> in_w;
    std::vector<Rat> m, n;
    Kind kind = Kind::ordinary;

    std::size_t size() const { return st.roots.size(); }

    std::vector<RatVec> sigma_roots() const {
        std::vector<RatVec> v;
        for (std::size_t i = 0; i < size(); ++i)
            if (in_sigma[i]) v.push_back(st.roots[i]);
        return v;
    }
    std::vector<RatVec> w_roots() const {
        std::vector<RatVec> v;
        for (std::size_t i = 0; i < size(); ++i)
            if (in_w[i]) v.push_back(st.roots[i]);
        return v;
    }
    std::vector<RatVec> sigma_cap_w_roots() const {
        std::vector<RatVec> v;
        for (std::size_t i = 0; i < size(); ++i)
            if (in_sigma[i] && in_w[i]) v.push_back(st.roots[i]);
        return v;
    }

    bool same_data(const MultSymmetricTriad& o) const {
        return st.roots == o.st.roots && in_sigma == o.in_sigma && in_w == o.in_w && m == o.m &&
               n == o.n;
    }
};

// Lattice point Y = (pi/2) sum n_i alpha^i over the dual basis of the
// fundamental system; every root pairing <alpha,2Y>/pi is then the
// integer sum n_i c_i.
struct GammaElement {
    std::vector<long> coeffs;

    bool is_zero() const {
        for (long c : coeffs)
            if (c != 0) return false;
        return true;
    }
};

// <alpha, 2Y>/pi as an integer.
inline long gamma_pairing(const RootSystem& st, const GammaElement& y, const RatVec& alpha) {
    RatVec c = st.simple_coords(alpha);
    Rat s(0);
    for (std::size_t j = 0; j < c.size(); ++j) s += Rat(y.coeffs[j]) * c[j];
    return to_long(s);
}

// ---------------------------------------------------------------------
// Axiom verification
// ---------------------------------------------------------------------

struct ConditionReport {
    std::string name;
    bool pass = false;
    std::string witness;  // first failure found, empty on pass
};

struct DiagnosticReport {
    std::vector<ConditionReport> conditions;
    bool pass() const {
        for (const auto& c : conditions)
            if (!c.pass) return false;
        return true;
    }
    std::string summary() const {
        std::string s;
        for (const auto& c : conditions) {
            s += c.name + ": " + (c.pass ? "pass" : "FAIL " + c.witness) + "\n";
        }
        return s;
    }
};

inline std::string vec_str(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += to_string(v[i]);
    }
    return s + ")";
}

// The six conditions defining a symmetric triad, each evaluated
// independently.
inline DiagnosticReport verify_triad_axioms(const RootSystem& st, const RootSet& sigma,
                                            const RootSet& w) {
    DiagnosticReport rep;
    RootSet all(st.roots.begin(), st.roots.end());

    {  // (1) Sigma~ irreducible root system
        ConditionReport c{"(1) Sigma~ irreducible root system", false, ""};
        auto chk = is_root_system(all);
        if (!chk.ok()) {
            c.witness = chk.violation;
        } else if (st.roots.empty() || components_of(st.roots).size() != 1) {
            c.witness = "not irreducible";
        } else {
            c.pass = true;
        }
        rep.conditions.push_back(c);
    }
    {  // (2) Sigma a root system of its span
        ConditionReport c{"(2) Sigma root system of span(Sigma)", false, ""};
        auto chk = is_root_system(sigma);
        if (!chk.ok()) c.witness = chk.violation;
        else c.pass = true;
        rep.conditions.push_back(c);
    }
    {  // (3) W nonempty, symmetric, Sigma u W = Sigma~
        ConditionReport c{"(3) W nonempty symmetric, Sigma u W = Sigma~", false, ""};
        if (w.empty()) {
            c.witness = "W empty";
        } else {
            bool ok = true;
            for (const auto& a : w) {
                if (!w.count(neg(a))) {
                    c.witness = "-a missing for a=" + vec_str(a);
                    ok = false;
                    break;
                }
            }
            if (ok) {
                RootSet uni = sigma;
                uni.insert(w.begin(), w.end());
                if (uni != all) {
                    c.witness = "Sigma u W != Sigma~";
                    ok = false;
                }
            }
            c.pass = ok;
        }
        rep.conditions.push_back(c);
    }
    {  // (4) Sigma n W nonempty and a full length-ball
        ConditionReport c{"(4) Sigma n W = {a : |a| <= l}", false, ""};
        RootSet inter;
        for (const auto& a : sigma)
            if (w.count(a)) inter.insert(a);
        if (inter.empty()) {
            c.witness = "Sigma n W empty";
        } else {
            Rat l(0);
            for (const auto& a : inter) l = std::max(l, norm2(a));
            bool ok = true;
            for (const auto& a : all) {
                bool small = norm2(a) <= l;
                if (small != static_cast<bool>(inter.count(a))) {
                    c.witness = "ball mismatch at " + vec_str(a);
                    ok = false;
                    break;
                }
            }
            c.pass = ok;
        }
        rep.conditions.push_back(c);
    }
    auto parity_cond = [&](const char* name, const RootSet& from, const RootSet& to) {
        // for alpha in W, lambda in `from`: 2<a,l>/|a|^2 odd <=> w_a(l) in `to`
        ConditionReport c{name, true, ""};
        for (const auto& a : w) {
            for (const auto& lam : from) {
                Rat ci = cartan_ratio(a, lam);
                if (!is_integer(ci)) {
                    c = {name, false, "non-integral Cartan number at " + vec_str(lam)};
                    return c;
                }
                bool odd = is_odd(ci);
                bool lands = to.count(reflect(a, lam)) > 0;
                if (odd != lands) {
                    c = {name, false, "alpha=" + vec_str(a) + " lambda=" + vec_str(lam)};
                    return c;
                }
            }
        }
        return c;
    };
    RootSet sigma_minus_w, w_minus_sigma;
    for (const auto& a : sigma)
        if (!w.count(a)) sigma_minus_w.insert(a);
    for (const auto& a : w)
        if (!sigma.count(a)) w_minus_sigma.insert(a);
    rep.conditions.push_back(
        parity_cond("(5) odd pairing flips Sigma-W into W-Sigma", sigma_minus_w, w_minus_sigma));
    rep.conditions.push_back(
        parity_cond("(6) odd pairing flips W-Sigma into Sigma-W", w_minus_sigma, sigma_minus_w));
    return rep;
}

// The four multiplicity conditions. Invariance under a Weyl group is
// checked on its generating reflections.
inline DiagnosticReport verify_multiplicity_axioms(const MultSymmetricTriad& t) {
    DiagnosticReport rep;
    const auto& roots = t.st.roots;
    auto idx = [&](const RatVec& v) { return t.st.index_of(v); };

    {  // (1) supports and evenness
        ConditionReport c{"(m1) support/evenness", true, ""};
        for (std::size_t i = 0; i < roots.size(); ++i) {
            int j = idx(neg(roots[i]));
            if (t.m[i] < 0 || t.n[i] < 0 || t.m[i] != t.m[j] || t.n[i] != t.n[j] ||
                (t.m[i] > 0) != static_cast<bool>(t.in_sigma[i]) ||
                (t.n[i] > 0) != static_cast<bool>(t.in_w[i])) {
                c = {c.name, false, "at " + vec_str(roots[i])};
                break;
            }
        }
        rep.conditions.push_back(c);
    }
    {  // (2) W(Sigma)-invariance of m and n
        ConditionReport c{"(m2) W(Sigma)-invariance of m and n", true, ""};
        for (std::size_t g = 0; g < roots.size() && c.pass; ++g) {
            if (!t.in_sigma[g]) continue;
            for (std::size_t i = 0; i < roots.size(); ++i) {
                int j = idx(reflect(roots[g], roots[i]));
                bool bad = false;
                if (t.in_sigma[i] && t.m[i] != t.m[j]) bad = true;
                if (t.in_w[i] && t.n[i] != t.n[j]) bad = true;
                if (bad) {
                    c = {c.name, false, "s=" + vec_str(roots[g]) + " at " + vec_str(roots[i])};
                    break;
                }
            }
        }
        rep.conditions.push_back(c);
    }
    {  // (3) W(Sigma~)-invariance of m+n
        ConditionReport c{"(m3) W(Sigma~)-invariance of m+n", true, ""};
        for (std::size_t g = 0; g < roots.size() && c.pass; ++g) {
            for (std::size_t i = 0; i < roots.size(); ++i) {
                int j = idx(reflect(roots[g], roots[i]));
                if (t.m[i] + t.n[i] != t.m[j] + t.n[j]) {
                    c = {c.name, false, "s=" + vec_str(roots[g]) + " at " + vec_str(roots[i])};
                    break;
                }
            }
        }
        rep.conditions.push_back(c);
    }
    {  // (4) even/odd transfer between m and n
        ConditionReport c{"(m4) even/odd transfer", true, ""};
        for (std::size_t a = 0; a < roots.size() && c.pass; ++a) {
            if (!t.in_w[a]) continue;
            for (std::size_t l = 0; l < roots.size(); ++l) {
                if (!(t.in_sigma[l] && t.in_w[l])) continue;
                Rat ci = cartan_ratio(roots[a], roots[l]);
                int j = idx(reflect(roots[a], roots[l]));
                const Rat& want = is_odd(ci) ? t.n[j] : t.m[j];
                if (t.m[l] != want) {
                    c = {c.name, false, "alpha=" + vec_str(roots[a]) + " lambda=" + vec_str(roots[l])};
                    break;
                }
            }
        }
        rep.conditions.push_back(c);
    }
    return rep;
}

// Full validity: triad axioms (ordinary) or the type (IV) structure, plus
// multiplicity axioms where applicable.
inline bool triad_valid(const MultSymmetricTriad& t, std::string* why = nullptr) {
    auto sig_v = t.sigma_roots();
    auto w_v = t.w_roots();
    RootSet sigma(sig_v.begin(), sig_v.end());
    RootSet w(w_v.begin(), w_v.end());
    // support consistency always
    for (std::size_t i = 0; i < t.size(); ++i) {
        if ((t.m[i] > 0) != static_cast<bool>(t.in_sigma[i]) ||
            (t.n[i] > 0) != static_cast<bool>(t.in_w[i])) {
            if (why) *why = "support mismatch";
            return false;
        }
    }
    if (t.kind == MultSymmetricTriad::Kind::type_iv) {
        for (std::size_t i = 0; i < t.size(); ++i) {
            if (t.in_sigma[i] && t.in_w[i]) {
                if (why) *why = "type (IV) requires Sigma n W empty";
                return false;
            }
            if (!t.in_sigma[i] && !t.in_w[i]) {
                if (why) *why = "Sigma u W != Sigma~";
                return false;
            }
        }
        auto chk = is_root_system(sigma);
        if (!sigma.empty() && !chk.ok()) {
            if (why) *why = "Sigma_Y not a root system: " + chk.violation;
            return false;
        }
        return true;
    }
    auto rep = verify_triad_axioms(t.st, sigma, w);
    if (!rep.pass()) {
        if (why) *why = rep.summary();
        return false;
    }
    auto mrep = verify_multiplicity_axioms(t);
    if (!mrep.pass()) {
        if (why) *why = mrep.summary();
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------
// Twist
// ---------------------------------------------------------------------

// Roots with odd pairing swap their Sigma-W / W-Sigma membership and
// their m/n values; even roots are untouched. Involutive by parity.
inline MultSymmetricTriad twist(const MultSymmetricTriad& t, const GammaElement& y) {
    if (y.coeffs.size() != t.st.simple.size())
        throw std::invalid_argument("twist: Y coefficient count != rank");
    MultSymmetricTriad out = t;
    for (std::size_t i = 0; i < t.size(); ++i) {
        long p = gamma_pairing(t.st, y, t.st.roots[i]);
        if (p % 2 != 0) {
            out.in_sigma[i] = t.in_w[i];
            out.in_w[i] = t.in_sigma[i];
            out.m[i] = t.n[i];
            out.n[i] = t.m[i];
        }
    }
    return out;
}

// All parity classes of Gamma: coefficients in {0,1}^rank.
inline std::vector<GammaElement> twist_representatives(int rank) {
    std::vector<GammaElement> out;
    for (long mask = 0; mask < (1L << rank); ++mask) {
        GammaElement y;
        y.coeffs.resize(rank);
        for (int i = 0; i < rank; ++i) y.coeffs[i] = (mask >> i) & 1;
        out.push_back(std::move(y));
    }
    return out;
}

}  // namespace symtriad
