#include "annlab/poly.hpp"

#include <algorithm>

namespace annlab {

Poly poly_zero() { return {}; }

Poly poly_const(const PolyRing& R, const Coeff& c) {
    if (c.is_zero()) return {};
    return Poly{{PTerm{mon_one(R.nvars()), c}}};
}

Poly poly_var(const PolyRing& R, int var, int32_t power) {
    if (power == 0) return poly_const(R, Coeff::one(R.field));
    return Poly{{PTerm{mon_var(R.weights, var, power), Coeff::one(R.field)}}};
}

Poly poly_normalize(const PolyRing& R, std::vector<PTerm> terms) {
    std::sort(terms.begin(), terms.end(), [&](const PTerm& a, const PTerm& b) {
        return mon_compare(R.ord, R.weights, a.m, b.m) == Ordering::Greater;
    });
    Poly out;
    for (auto& tm : terms) {
        if (!out.t.empty() && out.t.back().m == tm.m)
            out.t.back().c = c_add(R.field, out.t.back().c, tm.c);
        else
            out.t.push_back(std::move(tm));
        if (out.t.back().c.is_zero()) out.t.pop_back();
    }
    return out;
}

Poly poly_add(const PolyRing& R, const Poly& a, const Poly& b) {
    Poly out;
    out.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        Ordering o = mon_compare(R.ord, R.weights, a.t[i].m, b.t[j].m);
        if (o == Ordering::Greater) {
            out.t.push_back(a.t[i++]);
        } else if (o == Ordering::Less) {
            out.t.push_back(b.t[j++]);
        } else {
            Coeff c = c_add(R.field, a.t[i].c, b.t[j].c);
            if (!c.is_zero()) out.t.push_back(PTerm{a.t[i].m, std::move(c)});
            ++i, ++j;
        }
    }
    for (; i < a.t.size(); ++i) out.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j) out.t.push_back(b.t[j]);
    return out;
}

Poly poly_neg(const PolyRing& R, const Poly& a) {
    Poly out = a;
    for (auto& tm : out.t) tm.c = c_neg(R.field, tm.c);
    return out;
}

Poly poly_sub(const PolyRing& R, const Poly& a, const Poly& b) {
    return poly_add(R, a, poly_neg(R, b));
}

Poly poly_mul_term(const PolyRing& R, const Poly& a, const Monomial& m, const Coeff& c) {
    if (c.is_zero()) return {};
    Poly out;
    out.t.reserve(a.t.size());
    for (const auto& tm : a.t) {
        Coeff cc = c_mul(R.field, tm.c, c);
        if (!cc.is_zero()) out.t.push_back(PTerm{mon_mul(tm.m, m), std::move(cc)});
    }
    return out;  // multiplying by a monomial preserves the term order
}

Poly poly_mul(const PolyRing& R, const Poly& a, const Poly& b) {
    Poly acc;
    for (const auto& tm : b.t) acc = poly_add(R, acc, poly_mul_term(R, a, tm.m, tm.c));
    return acc;
}

Poly poly_scale(const PolyRing& R, const Poly& a, const Coeff& c) {
    return poly_mul_term(R, a, mon_one(R.nvars()), c);
}

Poly poly_monic(const PolyRing& R, const Poly& a) {
    if (a.is_zero() || a.lead().c.is_one(R.field)) return a;
    return poly_scale(R, a, c_inv(R.field, a.lead().c));
}

bool poly_equal(const Poly& a, const Poly& b) {
    if (a.t.size() != b.t.size()) return false;
    for (size_t i = 0; i < a.t.size(); ++i)
        if (!(a.t[i].m == b.t[i].m) || !c_equal(a.t[i].c, b.t[i].c)) return false;
    return true;
}

int poly_cmp(const PolyRing& R, const Poly& a, const Poly& b) {
    size_t n = std::min(a.t.size(), b.t.size());
    for (size_t i = 0; i < n; ++i) {
        Ordering o = mon_compare(R.ord, R.weights, a.t[i].m, b.t[i].m);
        if (o != Ordering::Equal) return o == Ordering::Greater ? 1 : -1;
        if (!c_equal(a.t[i].c, b.t[i].c))
            return a.t[i].c.str(R.field) < b.t[i].c.str(R.field) ? -1 : 1;
    }
    if (a.t.size() != b.t.size()) return a.t.size() < b.t.size() ? -1 : 1;
    return 0;
}

Coeff poly_constant_part(const PolyRing& R, const Poly& a) {
    for (const auto& tm : a.t)
        if (tm.m.is_one()) return tm.c;
    return Coeff::zero(R.field);
}

std::optional<int64_t> poly_degree_if_homogeneous(const Poly& a) {
    if (a.is_zero()) return std::nullopt;
    int64_t d = a.t.front().m.wdeg;
    for (const auto& tm : a.t)
        if (tm.m.wdeg != d) return std::nullopt;
    return d;
}

/* ------------------------------------------------------------------ */

ModOrder mod_order_pot() { return ModOrder{}; }

ModOrder mod_order_schreyer(std::vector<ModOrder::LeadKey> leads) {
    ModOrder mo;
    mo.kind = ModOrder::Kind::Schreyer;
    mo.leads = std::move(leads);
    return mo;
}

Ordering vterm_compare(const PolyRing& R, const ModOrder& mo, int32_t ca, const Monomial& ma,
                       int32_t cb, const Monomial& mb) {
    if (mo.kind == ModOrder::Kind::POT) {
        if (ca != cb) {
            int32_t ra = mo.priority.empty() ? ca : mo.priority[ca];
            int32_t rb = mo.priority.empty() ? cb : mo.priority[cb];
            if (ra != rb) return ra < rb ? Ordering::Greater : Ordering::Less;
            return ca < cb ? Ordering::Greater : Ordering::Less;
        }
        return mon_compare(R.ord, R.weights, ma, mb);
    }
    const auto& la = mo.leads.at(ca);
    const auto& lb = mo.leads.at(cb);
    if (la.comp != lb.comp) return la.comp < lb.comp ? Ordering::Greater : Ordering::Less;
    Ordering o = mon_compare(R.ord, R.weights, mon_mul(la.m, ma), mon_mul(lb.m, mb));
    if (o != Ordering::Equal) return o;
    if (ca != cb) return ca < cb ? Ordering::Greater : Ordering::Less;
    return Ordering::Equal;
}

namespace {
bool vterm_greater(const PolyRing& R, const ModOrder& mo, const VTerm& a, const VTerm& b) {
    return vterm_compare(R, mo, a.comp, a.m, b.comp, b.m) == Ordering::Greater;
}
}  // namespace

Vec vec_normalize(const PolyRing& R, const ModOrder& mo, std::vector<VTerm> terms) {
    std::sort(terms.begin(), terms.end(),
              [&](const VTerm& a, const VTerm& b) { return vterm_greater(R, mo, a, b); });
    Vec out;
    for (auto& tm : terms) {
        if (!out.t.empty() && out.t.back().comp == tm.comp && out.t.back().m == tm.m)
            out.t.back().c = c_add(R.field, out.t.back().c, tm.c);
        else
            out.t.push_back(std::move(tm));
        if (out.t.back().c.is_zero()) out.t.pop_back();
    }
    return out;
}

Vec vec_add(const PolyRing& R, const ModOrder& mo, const Vec& a, const Vec& b) {
    Vec out;
    out.t.reserve(a.t.size() + b.t.size());
    size_t i = 0, j = 0;
    while (i < a.t.size() && j < b.t.size()) {
        Ordering o = vterm_compare(R, mo, a.t[i].comp, a.t[i].m, b.t[j].comp, b.t[j].m);
        if (o == Ordering::Greater) {
            out.t.push_back(a.t[i++]);
        } else if (o == Ordering::Less) {
            out.t.push_back(b.t[j++]);
        } else {
            Coeff c = c_add(R.field, a.t[i].c, b.t[j].c);
            if (!c.is_zero()) out.t.push_back(VTerm{a.t[i].comp, a.t[i].m, std::move(c)});
            ++i, ++j;
        }
    }
    for (; i < a.t.size(); ++i) out.t.push_back(a.t[i]);
    for (; j < b.t.size(); ++j) out.t.push_back(b.t[j]);
    return out;
}

Vec vec_scale(const PolyRing& R, const Vec& a, const Coeff& c) {
    if (c.is_zero()) return {};
    Vec out;
    out.t.reserve(a.t.size());
    for (const auto& tm : a.t) {
        Coeff cc = c_mul(R.field, tm.c, c);
        if (!cc.is_zero()) out.t.push_back(VTerm{tm.comp, tm.m, std::move(cc)});
    }
    return out;
}

Vec vec_sub(const PolyRing& R, const ModOrder& mo, const Vec& a, const Vec& b) {
    return vec_add(R, mo, a, vec_scale(R, b, Coeff::from_int(R.field, -1)));
}

Vec vec_axpy(const PolyRing& R, const ModOrder& mo, const Vec& a, const Coeff& c,
             const Monomial& m, const Vec& b) {
    if (c.is_zero()) return a;
    Vec mb;
    mb.t.reserve(b.t.size());
    for (const auto& tm : b.t) {
        Coeff cc = c_mul(R.field, tm.c, c);
        if (!cc.is_zero()) mb.t.push_back(VTerm{tm.comp, mon_mul(tm.m, m), std::move(cc)});
    }
    return vec_add(R, mo, a, mb);  // scaling by a term preserves the order
}

Vec vec_monic(const PolyRing& R, const Vec& a) {
    if (a.is_zero() || a.lead().c.is_one(R.field)) return a;
    return vec_scale(R, a, c_inv(R.field, a.lead().c));
}

Vec vec_mul_poly(const PolyRing& R, const ModOrder& mo, const Vec& a, const Poly& p) {
    Vec acc;
    for (const auto& tm : p.t) acc = vec_axpy(R, mo, acc, tm.c, tm.m, a);
    return acc;
}

bool vec_equal(const Vec& a, const Vec& b) {
    if (a.t.size() != b.t.size()) return false;
    for (size_t i = 0; i < a.t.size(); ++i)
        if (a.t[i].comp != b.t[i].comp || !(a.t[i].m == b.t[i].m) ||
            !c_equal(a.t[i].c, b.t[i].c))
            return false;
    return true;
}

int vec_cmp(const PolyRing& R, const Vec& a, const Vec& b) {
    size_t n = std::min(a.t.size(), b.t.size());
    for (size_t i = 0; i < n; ++i) {
        if (a.t[i].comp != b.t[i].comp) return a.t[i].comp < b.t[i].comp ? -1 : 1;
        Ordering o = mon_compare(R.ord, R.weights, a.t[i].m, b.t[i].m);
        if (o != Ordering::Equal) return o == Ordering::Greater ? 1 : -1;
        if (!c_equal(a.t[i].c, b.t[i].c))
            return a.t[i].c.str(R.field) < b.t[i].c.str(R.field) ? -1 : 1;
    }
    if (a.t.size() != b.t.size()) return a.t.size() < b.t.size() ? -1 : 1;
    return 0;
}

Vec vec_from_poly(const Poly& p, int32_t comp) {
    Vec out;
    out.t.reserve(p.t.size());
    for (const auto& tm : p.t) out.t.push_back(VTerm{comp, tm.m, tm.c});
    return out;
}

Poly vec_component(const PolyRing& R, const Vec& v, int32_t comp) {
    std::vector<PTerm> terms;
    for (const auto& tm : v.t)
        if (tm.comp == comp) terms.push_back(PTerm{tm.m, tm.c});
    return poly_normalize(R, std::move(terms));
}

int32_t vec_max_comp(const Vec& v) {
    int32_t m = -1;
    for (const auto& tm : v.t) m = std::max(m, tm.comp);
    return m;
}

Vec vec_truncate_components(const Vec& v, int32_t k) {
    Vec out;
    for (const auto& tm : v.t)
        if (tm.comp < k) out.t.push_back(tm);
    return out;
}

Vec vec_shift_components(const Vec& v, int32_t delta) {
    Vec out = v;
    for (auto& tm : out.t) tm.comp += delta;
    return out;
}

Vec vec_from_components(const PolyRing& R, const ModOrder& mo, std::span<const Poly> comps) {
    std::vector<VTerm> terms;
    for (size_t j = 0; j < comps.size(); ++j)
        for (const auto& tm : comps[j].t)
            terms.push_back(VTerm{static_cast<int32_t>(j), tm.m, tm.c});
    return vec_normalize(R, mo, std::move(terms));
}

std::optional<int64_t> vec_degree_if_homogeneous(std::span<const int64_t> shifts, const Vec& v) {
    if (v.is_zero()) return std::nullopt;
    int64_t d = v.t.front().m.wdeg + shifts[v.t.front().comp];
    for (const auto& tm : v.t)
        if (tm.m.wdeg + shifts[tm.comp] != d) return std::nullopt;
    return d;
}

bool vec_is_homogeneous(std::span<const int64_t> shifts, const Vec& v) {
    return v.is_zero() || vec_degree_if_homogeneous(shifts, v).has_value();
}

}  // namespace annlab

namespace annlab {

std::string mon_str(const PolyRing& R, const Monomial& m) {
    std::string out;
    for (size_t i = 0; i < m.e.size(); ++i) {
        if (m.e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += R.vars[i];
        if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
    }
    return out;
}

std::string poly_str(const PolyRing& R, const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < p.t.size(); ++i) {
        std::string cs = p.t[i].c.str(R.field);
        bool neg = !cs.empty() && cs[0] == '-';
        std::string abs = neg ? cs.substr(1) : cs;
        if (i == 0)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        std::string ms = mon_str(R, p.t[i].m);
        if (ms.empty())
            out += abs;
        else if (abs == "1")
            out += ms;
        else
            out += abs + "*" + ms;
    }
    return out;
}

std::string vec_str(const PolyRing& R, const Vec& v) {
    int32_t rank = vec_max_comp(v) + 1;
    std::string out = "[";
    for (int32_t c = 0; c < rank; ++c) {
        if (c) out += ", ";
        out += poly_str(R, vec_component(R, v, c));
    }
    return out + "]";
}

uint64_t fnv1a(std::string_view s, uint64_t seed) {
    uint64_t h = seed;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace annlab
