#include "annlab/ideals.hpp"

#include <algorithm>

namespace annlab {

namespace {

/* dim of S/(lead-term ideal): maximal size of a variable subset touched by
 * no lead monomial's support. Returns nullopt for the unit ideal. */
std::optional<int> dim_from_leads(int n, const std::vector<Monomial>& leads) {
    std::optional<int> best;
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (const auto& m : leads) {
            bool inside = true;
            for (int i = 0; i < n && inside; ++i)
                if (m.e[i] > 0 && !(mask & (1u << i))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) {
            int pc = __builtin_popcount(mask);
            if (!best || pc > *best) best = pc;
        }
    }
    return best;
}

std::vector<Monomial> lead_monomials(const std::vector<Poly>& gb) {
    std::vector<Monomial> out;
    out.reserve(gb.size());
    for (const auto& g : gb) out.push_back(g.lead().m);
    return out;
}

std::string gens_key(const PolyRing& R, const std::vector<Poly>& gens) {
    std::string s;
    for (const auto& v : R.vars) s += v + ",";
    s += ";";
    for (auto w : R.weights) s += std::to_string(w) + ",";
    s += ";" + std::to_string(R.field.p) + ";" + R.ord.str() + ";";
    for (const auto& g : gens) s += poly_str(R, g) + ";";
    return s;
}

/* Move a polynomial into a ring with `extra` new leading variables. */
Poly extend_front(const PolyRing& src, const PolyRing& dst, const Poly& f, int extra) {
    std::vector<PTerm> terms;
    terms.reserve(f.t.size());
    for (const auto& tm : f.t) {
        std::vector<int32_t> e(dst.nvars(), 0);
        std::copy(tm.m.e.begin(), tm.m.e.end(), e.begin() + extra);
        terms.push_back(PTerm{mon_make(dst.weights, std::move(e)), tm.c});
    }
    (void)src;
    return poly_normalize(dst, std::move(terms));
}

/* Inverse of extend_front for polynomials free of the leading block. */
Poly restrict_front(const PolyRing& dst, const Poly& f, int extra) {
    std::vector<PTerm> terms;
    terms.reserve(f.t.size());
    for (const auto& tm : f.t) {
        std::vector<int32_t> e(tm.m.e.begin() + extra, tm.m.e.end());
        terms.push_back(PTerm{mon_make(dst.weights, std::move(e)), tm.c});
    }
    return poly_normalize(dst, std::move(terms));
}

bool avoids_front(const Poly& f, int extra) {
    for (const auto& tm : f.t)
        for (int i = 0; i < extra; ++i)
            if (tm.m.e[i] > 0) return false;
    return true;
}

bool gb_is_unit(const std::vector<Poly>& gb) {
    for (const auto& g : gb)
        if (!g.is_zero() && g.lead().m.is_one()) return true;
    return false;
}

}  // namespace

RingPtr make_quotient_ring(PolyRing amb, std::vector<Poly> defining) {
    auto Q = std::make_shared<QuotientRing>();
    std::vector<Poly> gens;
    for (auto& g : defining) {
        if (g.is_zero()) continue;
        if (!poly_degree_if_homogeneous(g))
            throw hypothesis_error("defining ideal generator is not homogeneous: " +
                                   poly_str(amb, g));
        gens.push_back(std::move(g));
    }
    Q->def_gb = buchberger(amb, gens);
    if (gb_is_unit(Q->def_gb)) throw hypothesis_error("defining ideal is the unit ideal");
    auto d = dim_from_leads(amb.nvars(), lead_monomials(Q->def_gb));
    ANNLAB_CHECK(d.has_value(), "proper ideal with empty spectrum");
    Q->dim = *d;
    Q->defining = std::move(gens);
    Q->content_hash = fnv1a(gens_key(amb, Q->def_gb));
    Q->amb = std::move(amb);
    return Q;
}

RingPtr ambient_ring(const PolyRing& amb) { return make_quotient_ring(amb, {}); }

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    return a && b && a->content_hash == b->content_hash && a->amb == b->amb;
}

Poly ring_nf(const QuotientRing& Q, const Poly& f) {
    return normal_form(Q.amb, f, Q.def_gb);
}

Vec ring_nf_vec(const QuotientRing& Q, const ModOrder& mo, const Vec& v) {
    int32_t rank = vec_max_comp(v) + 1;
    std::vector<Vec> reducers;
    for (int32_t c = 0; c < rank; ++c)
        for (const auto& g : Q.def_gb) reducers.push_back(vec_from_poly(g, c));
    return normal_form(Q.amb, mo, v, reducers);
}

bool is_unit_constant(const PolyRing& R, const Poly& f) {
    (void)R;
    return f.t.size() == 1 && f.t[0].m.is_one();
}

/* ------------------------------------------------------------------ */

bool Ideal::is_unit() const { return gb_is_unit(gb); }
bool Ideal::is_zero() const { return gens.empty(); }

Ideal make_ideal(RingPtr ring, std::vector<Poly> raw) {
    ANNLAB_CHECK(ring != nullptr, "ideal without a ring");
    Ideal I;
    for (auto& g : raw) {
        Poly r = ring_nf(*ring, g);
        if (!r.is_zero()) I.gens.push_back(std::move(r));
    }
    std::sort(I.gens.begin(), I.gens.end(),
              [&](const Poly& a, const Poly& b) { return poly_cmp(ring->amb, a, b) < 0; });
    I.gens.erase(std::unique(I.gens.begin(), I.gens.end(),
                             [](const Poly& a, const Poly& b) { return poly_equal(a, b); }),
                 I.gens.end());
    std::vector<Poly> all = I.gens;
    all.insert(all.end(), ring->defining.begin(), ring->defining.end());
    I.gb = buchberger(ring->amb, std::move(all));
    I.ring = std::move(ring);
    return I;
}

Ideal unit_ideal(RingPtr ring) {
    Poly one = poly_const(ring->amb, Coeff::one(ring->amb.field));
    return make_ideal(std::move(ring), {one});
}

Ideal zero_ideal(RingPtr ring) { return make_ideal(std::move(ring), {}); }

bool ideal_contains(const Ideal& I, const Poly& f) {
    return normal_form(I.ring->amb, f, I.gb).is_zero();
}

bool ideal_subset(const Ideal& I, const Ideal& J) {
    ANNLAB_CHECK(same_ring(I.ring, J.ring), "ideal operation across different rings");
    return std::all_of(I.gens.begin(), I.gens.end(),
                       [&](const Poly& g) { return ideal_contains(J, g); });
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
    ANNLAB_CHECK(same_ring(I.ring, J.ring), "ideal operation across different rings");
    auto member = [](const Ideal& K, const std::vector<Poly>& gb) {
        return std::all_of(gb.begin(), gb.end(),
                           [&](const Poly& g) { return ideal_contains(K, g); });
    };
    return member(J, I.gb) && member(I, J.gb);
}

bool ideals_equal_up_to_radical(const Ideal& I, const Ideal& J) {
    ANNLAB_CHECK(same_ring(I.ring, J.ring), "ideal operation across different rings");
    auto inside = [](const Ideal& K, const std::vector<Poly>& gens) {
        return std::all_of(gens.begin(), gens.end(),
                           [&](const Poly& g) { return radical_membership(g, K); });
    };
    return inside(J, I.gens) && inside(I, J.gens);
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
    ANNLAB_CHECK(same_ring(I.ring, J.ring), "ideal operation across different rings");
    std::vector<Poly> gens = I.gens;
    gens.insert(gens.end(), J.gens.begin(), J.gens.end());
    return make_ideal(I.ring, std::move(gens));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
    ANNLAB_CHECK(same_ring(I.ring, J.ring), "ideal operation across different rings");
    std::vector<Poly> gens;
    for (const auto& f : I.gens)
        for (const auto& g : J.gens) gens.push_back(poly_mul(I.ring->amb, f, g));
    return make_ideal(I.ring, std::move(gens));
}

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
    ANNLAB_CHECK(same_ring(I.ring, J.ring), "ideal operation across different rings");
    if (I.is_unit()) return J;
    if (J.is_unit()) return I;
    if (I.is_zero() || J.is_zero()) return zero_ideal(I.ring);

    const PolyRing& A = I.ring->amb;
    std::vector<std::string> vars = {"@t"};
    vars.insert(vars.end(), A.vars.begin(), A.vars.end());
    std::vector<int64_t> w = {1};
    w.insert(w.end(), A.weights.begin(), A.weights.end());
    PolyRing T = make_poly_ring(std::move(vars), std::move(w), A.field,
                                TermOrder{TermOrder::Kind::Elim, 1});
    Poly t = poly_var(T, 0);
    Poly one_minus_t = poly_sub(T, poly_const(T, Coeff::one(T.field)), t);
    std::vector<Poly> gens;
    for (const auto& f : I.gb) gens.push_back(poly_mul(T, t, extend_front(A, T, f, 1)));
    for (const auto& g : J.gb) gens.push_back(poly_mul(T, one_minus_t, extend_front(A, T, g, 1)));
    std::vector<Poly> gb = buchberger(T, std::move(gens));
    std::vector<Poly> result;
    for (const auto& g : gb)
        if (avoids_front(g, 1)) result.push_back(restrict_front(A, g, 1));
    return make_ideal(I.ring, std::move(result));
}

Ideal ideal_colon_poly(const Ideal& I, const Poly& f) {
    Poly fr = ring_nf(*I.ring, f);
    if (fr.is_zero() || I.is_unit()) return unit_ideal(I.ring);
    std::vector<Vec> source = {vec_from_poly(fr)};
    std::vector<Vec> aux;
    for (const auto& g : I.gb) aux.push_back(vec_from_poly(g));
    std::vector<Vec> ker = kernel_of_columns(I.ring->amb, mod_order_pot(), source, aux);
    std::vector<Poly> gens;
    for (const auto& k : ker) gens.push_back(vec_component(I.ring->amb, k, 0));
    return make_ideal(I.ring, std::move(gens));
}

Ideal ideal_colon(const Ideal& I, const Ideal& J) {
    ANNLAB_CHECK(same_ring(I.ring, J.ring), "ideal operation across different rings");
    Ideal out = unit_ideal(I.ring);
    for (const auto& f : J.gens) out = ideal_intersect(out, ideal_colon_poly(I, f));
    return out;
}

Ideal eliminate(const Ideal& I, int k) {
    const PolyRing& A = I.ring->amb;
    if (k == 0) return I;
    ANNLAB_CHECK(k <= A.nvars(), "elimination block exceeds variable count");
    PolyRing T = A;
    T.ord = TermOrder{TermOrder::Kind::Elim, k};
    std::vector<Poly> gens;
    for (const auto& g : I.gb) gens.push_back(poly_normalize(T, {g.t.begin(), g.t.end()}));
    std::vector<Poly> gb = buchberger(T, std::move(gens));
    std::vector<Poly> result;
    for (const auto& g : gb)
        if (avoids_front(g, k))
            result.push_back(poly_normalize(A, {g.t.begin(), g.t.end()}));
    return make_ideal(I.ring, std::move(result));
}

bool radical_membership(const Poly& f, const Ideal& I) {
    Poly fr = ring_nf(*I.ring, f);
    if (fr.is_zero() || I.is_unit()) return true;
    const PolyRing& A = I.ring->amb;
    std::vector<std::string> vars = {"@z"};
    vars.insert(vars.end(), A.vars.begin(), A.vars.end());
    std::vector<int64_t> w = {1};
    w.insert(w.end(), A.weights.begin(), A.weights.end());
    PolyRing T = make_poly_ring(std::move(vars), std::move(w), A.field,
                                TermOrder{TermOrder::Kind::Elim, 1});
    std::vector<Poly> gens;
    for (const auto& g : I.gb) gens.push_back(extend_front(A, T, g, 1));
    Poly zf = poly_mul(T, poly_var(T, 0), extend_front(A, T, fr, 1));
    gens.push_back(poly_sub(T, poly_const(T, Coeff::one(T.field)), zf));
    return gb_is_unit(buchberger(T, std::move(gens)));
}

std::optional<int> krull_dimension(const Ideal& I) {
    return dim_from_leads(I.ring->amb.nvars(), lead_monomials(I.gb));
}

bool is_m_primary(const Ideal& I) {
    auto d = krull_dimension(I);
    return d.has_value() && *d == 0;
}

Ideal maximal_ideal(RingPtr ring) {
    std::vector<Poly> gens;
    for (int i = 0; i < ring->amb.nvars(); ++i) gens.push_back(poly_var(ring->amb, i));
    return make_ideal(std::move(ring), std::move(gens));
}

}  // namespace annlab
