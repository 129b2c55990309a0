#ifndef ANNLAB_IDEALS_HPP
#define ANNLAB_IDEALS_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "annlab/groebner.hpp"

namespace annlab {

/* ------------------------------------------------------------------ */
/* The ring R = S/I: an ambient positively graded polynomial ring and  */
/* a homogeneous defining ideal with its reduced Groebner basis.       */
/* Immutable after construction; share via RingPtr.                    */
/* ------------------------------------------------------------------ */

struct QuotientRing {
    PolyRing amb;
    std::vector<Poly> defining;  // canonical generators (reduced mod each other is not required)
    std::vector<Poly> def_gb;    // reduced Groebner basis of the defining ideal
    int dim = 0;                 // Krull dimension of R
    uint64_t content_hash = 0;
};

using RingPtr = std::shared_ptr<const QuotientRing>;

RingPtr make_quotient_ring(PolyRing amb, std::vector<Poly> defining);
/* The polynomial ring itself (empty defining ideal). */
RingPtr ambient_ring(const PolyRing& amb);
bool same_ring(const RingPtr& a, const RingPtr& b);

/* Reduce a representative modulo the defining ideal. */
Poly ring_nf(const QuotientRing& Q, const Poly& f);
Vec ring_nf_vec(const QuotientRing& Q, const ModOrder& mo, const Vec& v);
bool is_unit_constant(const PolyRing& R, const Poly& f);

/* ------------------------------------------------------------------ */
/* Finitely generated ideals of R. Generators are ambient              */
/* representatives; the cached basis is the reduced Groebner basis of  */
/* (generators + defining ideal), computed eagerly.                    */
/* ------------------------------------------------------------------ */

struct Ideal {
    RingPtr ring;
    std::vector<Poly> gens;  // canonical: reduced mod defining ideal, sorted, deduplicated
    std::vector<Poly> gb;    // reduced GB of gens + defining

    bool is_unit() const;
    bool is_zero() const;  // zero ideal of R
};

Ideal make_ideal(RingPtr ring, std::vector<Poly> gens);
Ideal unit_ideal(RingPtr ring);
Ideal zero_ideal(RingPtr ring);

bool ideal_contains(const Ideal& I, const Poly& f);
bool ideal_subset(const Ideal& I, const Ideal& J);  // I subset of J
bool ideal_equal(const Ideal& I, const Ideal& J);
bool ideals_equal_up_to_radical(const Ideal& I, const Ideal& J);

Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
Ideal ideal_colon_poly(const Ideal& I, const Poly& f);
Ideal ideal_colon(const Ideal& I, const Ideal& J);

/* Generators of I ∩ k[x_{k+1},...,x_n], from a Groebner basis under an
 * order eliminating the first k variables. The result lives in the same
 * ring; its generators avoid the first k variables. */
Ideal eliminate(const Ideal& I, int k);

/* f ∈ √I, by the Rabinowitsch trick. */
bool radical_membership(const Poly& f, const Ideal& I);

/* dim S/(I + defining); nullopt when the ideal is the unit ideal. */
std::optional<int> krull_dimension(const Ideal& I);

/* √I = m, for proper homogeneous I. */
bool is_m_primary(const Ideal& I);

/* The irrelevant maximal ideal (x_1, ..., x_n). */
Ideal maximal_ideal(RingPtr ring);

}  // namespace annlab

#endif
