#ifndef ANNLAB_ARITH_HPP
#define ANNLAB_ARITH_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "annlab/errors.hpp"

namespace annlab {

/* ------------------------------------------------------------------ */
/* Coefficient fields: Q (p == 0) or Z/p for an odd prime p.           */
/* ------------------------------------------------------------------ */

struct Field {
    uint32_t p = 32003;

    bool is_rational() const { return p == 0; }
    bool operator==(const Field&) const = default;
};

Field field_rational();
Field field_prime(uint32_t p);

/* A field element. In characteristic p the residue lives in r_ and q_ is
 * null; over Q the value is *q_ (canonical: lowest terms, positive
 * denominator, maintained by GMP). Immutable after construction. */
class Coeff {
public:
    Coeff() = default;

    static Coeff zero(const Field& F);
    static Coeff one(const Field& F);
    static Coeff from_int(const Field& F, long long n);
    static Coeff from_fraction(const Field& F, long long num, long long den);

    bool is_zero() const { return !q_ && r_ == 0 ? true : (q_ && sgn(*q_) == 0); }
    bool is_one(const Field& F) const;

    friend Coeff c_add(const Field& F, const Coeff& a, const Coeff& b);
    friend Coeff c_sub(const Field& F, const Coeff& a, const Coeff& b);
    friend Coeff c_mul(const Field& F, const Coeff& a, const Coeff& b);
    friend Coeff c_div(const Field& F, const Coeff& a, const Coeff& b);
    friend Coeff c_neg(const Field& F, const Coeff& a);
    friend Coeff c_inv(const Field& F, const Coeff& a);
    friend bool c_equal(const Coeff& a, const Coeff& b);

    /* Canonical text: residues in balanced form (-p/2, p/2]; rationals as
     * num or num/den. */
    std::string str(const Field& F) const;

private:
    long long r_ = 0;
    std::shared_ptr<const mpq_class> q_;
};

/* ------------------------------------------------------------------ */
/* Monomials with cached weighted degree.                              */
/* ------------------------------------------------------------------ */

struct Monomial {
    std::vector<int32_t> e;
    int64_t wdeg = 0;

    bool is_one() const;
    bool operator==(const Monomial&) const = default;
};

Monomial mon_one(int nvars);
Monomial mon_make(std::span<const int64_t> weights, std::vector<int32_t> exponents);
Monomial mon_var(std::span<const int64_t> weights, int var, int32_t power = 1);
Monomial mon_mul(const Monomial& a, const Monomial& b);
bool mon_divides(const Monomial& a, const Monomial& b);   // a | b
Monomial mon_div(const Monomial& b, const Monomial& a);   // b / a, requires a | b
Monomial mon_lcm(std::span<const int64_t> weights, const Monomial& a, const Monomial& b);
bool mon_coprime(const Monomial& a, const Monomial& b);

/* ------------------------------------------------------------------ */
/* Term orders on ring monomials.                                      */
/* ------------------------------------------------------------------ */

struct TermOrder {
    enum class Kind { WDegRevLex, WDegLex, Elim } kind = Kind::WDegRevLex;
    /* Elim: the first `elim_block` variables form a leading block; every
     * monomial meeting the block is larger than every monomial avoiding it. */
    int elim_block = 0;

    bool operator==(const TermOrder&) const = default;
    std::string str() const;
};

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

Ordering mon_compare(const TermOrder& ord, std::span<const int64_t> weights,
                     const Monomial& a, const Monomial& b);

/* ------------------------------------------------------------------ */
/* The ambient polynomial ring: variables, weights, field, term order. */
/* ------------------------------------------------------------------ */

struct PolyRing {
    std::vector<std::string> vars;
    std::vector<int64_t> weights;  // strictly positive
    Field field;
    TermOrder ord;

    int nvars() const { return static_cast<int>(vars.size()); }
    int var_index(const std::string& name) const;  // -1 if absent

    bool operator==(const PolyRing&) const = default;
};

PolyRing make_poly_ring(std::vector<std::string> vars, std::vector<int64_t> weights,
                        Field field, TermOrder ord = {});

}  // namespace annlab

#endif
