#ifndef ANNLAB_POLY_HPP
#define ANNLAB_POLY_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "annlab/arith.hpp"

namespace annlab {

/* ------------------------------------------------------------------ */
/* Sparse polynomials: terms strictly descending in the ring order,    */
/* no zero coefficients. The zero polynomial is the empty list.        */
/* ------------------------------------------------------------------ */

struct PTerm {
    Monomial m;
    Coeff c;
};

struct Poly {
    std::vector<PTerm> t;

    bool is_zero() const { return t.empty(); }
    const PTerm& lead() const { return t.front(); }
};

Poly poly_zero();
Poly poly_const(const PolyRing& R, const Coeff& c);
Poly poly_var(const PolyRing& R, int var, int32_t power = 1);
Poly poly_normalize(const PolyRing& R, std::vector<PTerm> terms);
Poly poly_add(const PolyRing& R, const Poly& a, const Poly& b);
Poly poly_sub(const PolyRing& R, const Poly& a, const Poly& b);
Poly poly_neg(const PolyRing& R, const Poly& a);
Poly poly_mul(const PolyRing& R, const Poly& a, const Poly& b);
Poly poly_mul_term(const PolyRing& R, const Poly& a, const Monomial& m, const Coeff& c);
Poly poly_scale(const PolyRing& R, const Poly& a, const Coeff& c);
Poly poly_monic(const PolyRing& R, const Poly& a);
bool poly_equal(const Poly& a, const Poly& b);
/* Arbitrary deterministic total order, used only for canonical sorting. */
int poly_cmp(const PolyRing& R, const Poly& a, const Poly& b);
/* The degree-zero (scalar) part of a polynomial. */
Coeff poly_constant_part(const PolyRing& R, const Poly& a);
std::optional<int64_t> poly_degree_if_homogeneous(const Poly& a);  // zero -> nullopt

/* ------------------------------------------------------------------ */
/* Elements of free modules: flat term lists (component, monomial,     */
/* coefficient), strictly descending in a module order.                */
/* ------------------------------------------------------------------ */

struct VTerm {
    int32_t comp;
    Monomial m;
    Coeff c;
};

struct Vec {
    std::vector<VTerm> t;

    bool is_zero() const { return t.empty(); }
    const VTerm& lead() const { return t.front(); }
};

/* Orders on module terms: position-over-term with a component priority
 * list, or the Schreyer order induced by the lead terms of a basis. */
struct ModOrder {
    enum class Kind { POT, Schreyer } kind = Kind::POT;

    /* POT: priority[comp] = rank; smaller rank compares greater. Empty
     * priority list means rank = component index (e0 > e1 > ...). */
    std::vector<int32_t> priority;

    struct LeadKey {
        int32_t comp;  // component of lt(G_j) in the base module
        Monomial m;    // monomial of lt(G_j)
    };
    std::vector<LeadKey> leads;  // Schreyer only
};

ModOrder mod_order_pot();
ModOrder mod_order_schreyer(std::vector<ModOrder::LeadKey> leads);

Ordering vterm_compare(const PolyRing& R, const ModOrder& mo, int32_t ca, const Monomial& ma,
                       int32_t cb, const Monomial& mb);

Vec vec_normalize(const PolyRing& R, const ModOrder& mo, std::vector<VTerm> terms);
Vec vec_add(const PolyRing& R, const ModOrder& mo, const Vec& a, const Vec& b);
Vec vec_sub(const PolyRing& R, const ModOrder& mo, const Vec& a, const Vec& b);
/* a + c * m * b */
Vec vec_axpy(const PolyRing& R, const ModOrder& mo, const Vec& a, const Coeff& c,
             const Monomial& m, const Vec& b);
Vec vec_scale(const PolyRing& R, const Vec& a, const Coeff& c);
Vec vec_monic(const PolyRing& R, const Vec& a);
Vec vec_mul_poly(const PolyRing& R, const ModOrder& mo, const Vec& a, const Poly& p);
bool vec_equal(const Vec& a, const Vec& b);
int vec_cmp(const PolyRing& R, const Vec& a, const Vec& b);

Vec vec_from_poly(const Poly& p, int32_t comp = 0);
Poly vec_component(const PolyRing& R, const Vec& v, int32_t comp);
int32_t vec_max_comp(const Vec& v);  // -1 for zero
/* Restrict to components < k, reindexed identically. */
Vec vec_truncate_components(const Vec& v, int32_t k);
/* Shift all components by delta. */
Vec vec_shift_components(const Vec& v, int32_t delta);
/* Assemble from per-component polynomials. */
Vec vec_from_components(const PolyRing& R, const ModOrder& mo, std::span<const Poly> comps);

/* Degree of a homogeneous vector under generator degrees `shifts`;
 * nullopt if inhomogeneous or zero. */
std::optional<int64_t> vec_degree_if_homogeneous(std::span<const int64_t> shifts, const Vec& v);
bool vec_is_homogeneous(std::span<const int64_t> shifts, const Vec& v);  // zero counts as homogeneous

/* ------------------------------------------------------------------ */
/* A finitely generated submodule of a graded free module, given by    */
/* spanning columns.                                                   */
/* ------------------------------------------------------------------ */

struct Submodule {
    int32_t rank = 0;
    std::vector<int64_t> shifts;  // generator degrees of the ambient free module
    std::vector<Vec> cols;
};

/* Canonical text forms; the CLI grammar parses everything these print. */
std::string mon_str(const PolyRing& R, const Monomial& m);
std::string poly_str(const PolyRing& R, const Poly& p);
std::string vec_str(const PolyRing& R, const Vec& v);  // [comp0, comp1, ...]

uint64_t fnv1a(std::string_view s, uint64_t seed = 14695981039346656037ull);

}  // namespace annlab

#endif
