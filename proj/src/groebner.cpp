#include "annlab/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace annlab {

namespace {

struct Tagged {
    Vec v;
    Vec tag;
};

/* One full division pass of (f, tag) by the basis. The reducer is the first
 * basis element whose lead term divides the current lead term. */
Tagged divide_full(const PolyRing& R, const ModOrder& mo, Tagged f,
                   const std::vector<Tagged>& basis, const std::vector<char>& alive,
                   bool track) {
    Vec out;
    while (!f.v.is_zero()) {
        const VTerm lead = f.v.lead();
        int reducer = -1;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (!alive[k]) continue;
            const VTerm& lt = basis[k].v.lead();
            if (lt.comp == lead.comp && mon_divides(lt.m, lead.m)) {
                reducer = static_cast<int>(k);
                break;
            }
        }
        if (reducer < 0) {
            out.t.push_back(lead);
            f.v.t.erase(f.v.t.begin());
            continue;
        }
        const Tagged& g = basis[reducer];
        Coeff q = c_neg(R.field, c_div(R.field, lead.c, g.v.lead().c));
        Monomial u = mon_div(lead.m, g.v.lead().m);
        f.v = vec_axpy(R, mo, f.v, q, u, g.v);
        if (track) f.tag = vec_axpy(R, mod_order_pot(), f.tag, q, u, g.tag);
    }
    f.v = std::move(out);  // terms were popped in strictly decreasing order
    return f;
}

int64_t pair_degree(const GBOptions& opt, int64_t lcm_wdeg, int32_t comp) {
    if (opt.shifts && comp < static_cast<int32_t>(opt.shifts->size()))
        return lcm_wdeg + (*opt.shifts)[comp];
    return lcm_wdeg;
}

struct PairKey {
    int64_t deg;
    int i;
    int j;
    auto operator<=>(const PairKey&) const = default;
};

}  // namespace

GBResult buchberger_run(const PolyRing& R, const ModOrder& mo, std::vector<Vec> inputs,
                        const GBOptions& opt) {
    GBResult res;
    std::vector<Tagged> basis;
    std::vector<char> alive;
    std::set<PairKey> queue;
    std::set<std::pair<int, int>> treated;

    bool rank_one = true;
    for (const auto& v : inputs)
        for (const auto& tm : v.t)
            if (tm.comp != 0) rank_one = false;
    const bool use_criteria = !opt.track;

    auto harvest = [&](Vec tag) {
        if (!opt.track || tag.is_zero()) return;
        res.syz.push_back(vec_monic(R, vec_normalize(R, mod_order_pot(), std::move(tag.t))));
    };

    auto insert = [&](Tagged g) {
        int idx = static_cast<int>(basis.size());
        Coeff lc = g.v.lead().c;
        if (!lc.is_one(R.field)) {
            Coeff inv = c_inv(R.field, lc);
            g.v = vec_scale(R, g.v, inv);
            if (opt.track) g.tag = vec_scale(R, g.tag, inv);
        }
        for (int k = 0; k < idx; ++k) {
            if (basis[k].v.lead().comp != g.v.lead().comp) continue;
            Monomial L = mon_lcm(R.weights, basis[k].v.lead().m, g.v.lead().m);
            queue.insert(PairKey{pair_degree(opt, L.wdeg, g.v.lead().comp), k, idx});
        }
        basis.push_back(std::move(g));
        alive.push_back(1);
    };

    for (size_t c = 0; c < inputs.size(); ++c) {
        Tagged g;
        g.v = std::move(inputs[c]);
        if (opt.track && static_cast<int>(c) < opt.source_count)
            g.tag = vec_from_poly(poly_const(R, Coeff::one(R.field)), static_cast<int32_t>(c));
        if (g.v.is_zero()) {
            harvest(std::move(g.tag));
            continue;
        }
        insert(std::move(g));
    }

    while (!queue.empty()) {
        PairKey pk = *queue.begin();
        queue.erase(queue.begin());
        treated.insert({pk.i, pk.j});
        const Tagged& gi = basis[pk.i];
        const Tagged& gj = basis[pk.j];

        const VTerm& li = gi.v.lead();
        const VTerm& lj = gj.v.lead();
        Monomial L = mon_lcm(R.weights, li.m, lj.m);

        if (use_criteria) {
            if (rank_one && mon_coprime(li.m, lj.m)) continue;
            bool chained = false;
            for (size_t k = 0; k < basis.size() && !chained; ++k) {
                if (static_cast<int>(k) == pk.i || static_cast<int>(k) == pk.j || !alive[k])
                    continue;
                if (basis[k].v.lead().comp != li.comp) continue;
                if (!mon_divides(basis[k].v.lead().m, L)) continue;
                auto key1 = std::minmax(static_cast<int>(k), pk.i);
                auto key2 = std::minmax(static_cast<int>(k), pk.j);
                if (treated.count({key1.first, key1.second}) &&
                    treated.count({key2.first, key2.second}))
                    chained = true;
            }
            if (chained) continue;
        }

        Monomial ui = mon_div(L, li.m);
        Monomial uj = mon_div(L, lj.m);
        Tagged s;
        s.v = vec_axpy(R, mo, Vec{}, c_inv(R.field, li.c), ui, gi.v);
        s.v = vec_axpy(R, mo, s.v, c_neg(R.field, c_inv(R.field, lj.c)), uj, gj.v);
        if (opt.track) {
            s.tag = vec_axpy(R, mod_order_pot(), Vec{}, c_inv(R.field, li.c), ui, gi.tag);
            s.tag = vec_axpy(R, mod_order_pot(), s.tag, c_neg(R.field, c_inv(R.field, lj.c)), uj,
                             gj.tag);
        }
        s = divide_full(R, mo, std::move(s), basis, alive, opt.track);
        if (s.v.is_zero())
            harvest(std::move(s.tag));
        else
            insert(std::move(s));
    }

    if (opt.reduced) {
        /* Minimalize the lead-term set: drop k when another survivor's lead
         * strictly divides it, or equals it with a smaller index. */
        for (size_t k = 0; k < basis.size(); ++k) {
            if (!alive[k]) continue;
            for (size_t l = 0; l < basis.size(); ++l) {
                if (l == k || !alive[l]) continue;
                const VTerm& a = basis[l].v.lead();
                const VTerm& b = basis[k].v.lead();
                if (a.comp != b.comp || !mon_divides(a.m, b.m)) continue;
                if (a.m == b.m && l > k) continue;
                alive[k] = 0;
                break;
            }
        }
        /* Tail-reduce each survivor against the others. */
        std::vector<Vec> kept;
        for (size_t k = 0; k < basis.size(); ++k) {
            if (!alive[k]) continue;
            std::vector<char> others = alive;
            others[k] = 0;
            Tagged r = divide_full(R, mo, Tagged{basis[k].v, {}}, basis, others, false);
            if (!r.v.is_zero()) kept.push_back(vec_monic(R, r.v));
        }
        std::sort(kept.begin(), kept.end(), [&](const Vec& a, const Vec& b) {
            Ordering o =
                vterm_compare(R, mo, a.lead().comp, a.lead().m, b.lead().comp, b.lead().m);
            if (o != Ordering::Equal) return o == Ordering::Less;
            return vec_cmp(R, a, b) < 0;
        });
        res.gb = std::move(kept);
    } else {
        for (size_t k = 0; k < basis.size(); ++k)
            if (alive[k]) res.gb.push_back(basis[k].v);
    }
    return res;
}

Vec normal_form(const PolyRing& R, const ModOrder& mo, Vec f, std::span<const Vec> G) {
    std::vector<Tagged> basis;
    std::vector<char> alive;
    for (const auto& g : G) {
        if (g.is_zero()) continue;
        basis.push_back(Tagged{g, {}});
        alive.push_back(1);
    }
    return divide_full(R, mo, Tagged{std::move(f), {}}, basis, alive, false).v;
}

Poly normal_form(const PolyRing& R, const Poly& f, std::span<const Poly> G) {
    std::vector<Vec> vg;
    vg.reserve(G.size());
    for (const auto& g : G) vg.push_back(vec_from_poly(g));
    Vec r = normal_form(R, mod_order_pot(), vec_from_poly(f), vg);
    return vec_component(R, r, 0);
}

std::vector<Poly> buchberger(const PolyRing& R, std::vector<Poly> gens) {
    std::vector<Vec> inputs;
    inputs.reserve(gens.size());
    for (auto& g : gens) inputs.push_back(vec_from_poly(g));
    GBResult res = buchberger_run(R, mod_order_pot(), std::move(inputs));
    std::vector<Poly> out;
    out.reserve(res.gb.size());
    for (auto& v : res.gb) out.push_back(vec_component(R, v, 0));
    return out;
}

std::vector<Vec> kernel_of_columns(const PolyRing& R, const ModOrder& mo,
                                   std::span<const Vec> source, std::span<const Vec> aux) {
    std::vector<Vec> inputs(source.begin(), source.end());
    inputs.insert(inputs.end(), aux.begin(), aux.end());
    GBOptions opt;
    opt.reduced = false;
    opt.track = true;
    opt.source_count = static_cast<int>(source.size());
    GBResult res = buchberger_run(R, mo, std::move(inputs), opt);
    return std::move(res.syz);
}

Submodule syzygy_basis(const PolyRing& R, const ModOrder& mo, std::span<const Vec> G,
                       std::span<const int64_t> ambient_shifts) {
    Submodule out;
    out.rank = static_cast<int32_t>(G.size());
    std::vector<ModOrder::LeadKey> leads;
    for (const auto& g : G) {
        ANNLAB_CHECK(!g.is_zero(), "zero element in Groebner basis");
        leads.push_back(ModOrder::LeadKey{g.lead().comp, g.lead().m});
        auto d = vec_degree_if_homogeneous(ambient_shifts, g);
        out.shifts.push_back(d ? *d : g.lead().m.wdeg + ambient_shifts[g.lead().comp]);
    }
    ModOrder schreyer = mod_order_schreyer(leads);

    std::vector<Tagged> basis;
    std::vector<char> alive;
    for (const auto& g : G) {
        basis.push_back(Tagged{g, {}});
        alive.push_back(1);
    }
    for (size_t i = 0; i < G.size(); ++i) {
        for (size_t j = i + 1; j < G.size(); ++j) {
            const VTerm& li = G[i].lead();
            const VTerm& lj = G[j].lead();
            if (li.comp != lj.comp) continue;
            Monomial L = mon_lcm(R.weights, li.m, lj.m);
            Monomial ui = mon_div(L, li.m);
            Monomial uj = mon_div(L, lj.m);
            Tagged s;
            s.v = vec_axpy(R, mo, Vec{}, c_inv(R.field, li.c), ui, G[i]);
            s.v = vec_axpy(R, mo, s.v, c_neg(R.field, c_inv(R.field, lj.c)), uj, G[j]);
            s.tag = vec_normalize(
                R, schreyer,
                {VTerm{static_cast<int32_t>(i), ui, c_inv(R.field, li.c)},
                 VTerm{static_cast<int32_t>(j), uj, c_neg(R.field, c_inv(R.field, lj.c))}});
            /* Divide the S-element, accumulating quotients into the tag. */
            while (!s.v.is_zero()) {
                const VTerm lead = s.v.lead();
                int red = -1;
                for (size_t k = 0; k < basis.size(); ++k) {
                    const VTerm& lt = basis[k].v.lead();
                    if (lt.comp == lead.comp && mon_divides(lt.m, lead.m)) {
                        red = static_cast<int>(k);
                        break;
                    }
                }
                if (red < 0)
                    throw hypothesis_error("syzygy_basis: input is not a Groebner basis");
                Coeff q = c_neg(R.field, c_div(R.field, lead.c, basis[red].v.lead().c));
                Monomial u = mon_div(lead.m, basis[red].v.lead().m);
                s.v = vec_axpy(R, mo, s.v, q, u, basis[red].v);
                s.tag = vec_axpy(R, schreyer, s.tag, q, u,
                                 vec_from_poly(poly_const(R, Coeff::one(R.field)),
                                               static_cast<int32_t>(red)));
            }
            if (!s.tag.is_zero()) out.cols.push_back(std::move(s.tag));
        }
    }
    return out;
}

}  // namespace annlab
