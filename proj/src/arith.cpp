#include "annlab/arith.hpp"

#include <algorithm>

namespace annlab {

Field field_rational() { return Field{0}; }

Field field_prime(uint32_t p) {
    if (p < 3 || p % 2 == 0) throw hypothesis_error("characteristic must be 0 or an odd prime");
    for (uint32_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) throw hypothesis_error("characteristic must be 0 or an odd prime");
    return Field{p};
}

namespace {

long long mod_reduce(const Field& F, long long x) {
    long long p = F.p;
    long long r = x % p;
    return r < 0 ? r + p : r;
}

long long mod_inv(const Field& F, long long a) {
    if (a == 0) throw hypothesis_error("division by zero in prime field");
    long long t = 0, newt = 1, r = F.p, newr = a;
    while (newr != 0) {
        long long q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    ANNLAB_CHECK(r == 1, "non-invertible residue");
    return mod_reduce(F, t);
}

}  // namespace

Coeff Coeff::zero(const Field& F) {
    Coeff c;
    if (F.is_rational()) c.q_ = std::make_shared<const mpq_class>(0);
    return c;
}

Coeff Coeff::one(const Field& F) { return from_int(F, 1); }

Coeff Coeff::from_int(const Field& F, long long n) {
    Coeff c;
    if (F.is_rational()) {
        c.q_ = std::make_shared<const mpq_class>(mpq_class(static_cast<long>(n)));
    } else {
        c.r_ = mod_reduce(F, n);
    }
    return c;
}

Coeff Coeff::from_fraction(const Field& F, long long num, long long den) {
    if (den == 0) throw hypothesis_error("zero denominator");
    Coeff c;
    if (F.is_rational()) {
        mpq_class q(static_cast<long>(num), static_cast<long>(den));
        q.canonicalize();
        c.q_ = std::make_shared<const mpq_class>(std::move(q));
    } else {
        c.r_ = mod_reduce(F, mod_reduce(F, num) * mod_inv(F, mod_reduce(F, den)));
    }
    return c;
}

bool Coeff::is_one(const Field& F) const {
    if (F.is_rational()) return q_ && *q_ == 1;
    return r_ == 1;
}

Coeff c_add(const Field& F, const Coeff& a, const Coeff& b) {
    Coeff c;
    if (F.is_rational())
        c.q_ = std::make_shared<const mpq_class>(*a.q_ + *b.q_);
    else
        c.r_ = mod_reduce(F, a.r_ + b.r_);
    return c;
}

Coeff c_sub(const Field& F, const Coeff& a, const Coeff& b) {
    Coeff c;
    if (F.is_rational())
        c.q_ = std::make_shared<const mpq_class>(*a.q_ - *b.q_);
    else
        c.r_ = mod_reduce(F, a.r_ - b.r_);
    return c;
}

Coeff c_mul(const Field& F, const Coeff& a, const Coeff& b) {
    Coeff c;
    if (F.is_rational())
        c.q_ = std::make_shared<const mpq_class>(*a.q_ * *b.q_);
    else
        c.r_ = mod_reduce(F, a.r_ * b.r_);
    return c;
}

Coeff c_div(const Field& F, const Coeff& a, const Coeff& b) {
    if (b.is_zero()) throw hypothesis_error("division by zero coefficient");
    Coeff c;
    if (F.is_rational())
        c.q_ = std::make_shared<const mpq_class>(*a.q_ / *b.q_);
    else
        c.r_ = mod_reduce(F, a.r_ * mod_inv(F, b.r_));
    return c;
}

Coeff c_neg(const Field& F, const Coeff& a) {
    Coeff c;
    if (F.is_rational())
        c.q_ = std::make_shared<const mpq_class>(-*a.q_);
    else
        c.r_ = a.r_ == 0 ? 0 : F.p - a.r_;
    return c;
}

Coeff c_inv(const Field& F, const Coeff& a) { return c_div(F, Coeff::one(F), a); }

bool c_equal(const Coeff& a, const Coeff& b) {
    if (a.q_ || b.q_) {
        ANNLAB_CHECK(a.q_ && b.q_, "mixed coefficient kinds");
        return *a.q_ == *b.q_;
    }
    return a.r_ == b.r_;
}

std::string Coeff::str(const Field& F) const {
    if (F.is_rational()) return q_ ? q_->get_str() : "0";
    long long r = r_;
    if (r > F.p / 2) r -= F.p;  // balanced representative
    return std::to_string(r);
}

/* ------------------------------------------------------------------ */

bool Monomial::is_one() const {
    return std::all_of(e.begin(), e.end(), [](int32_t x) { return x == 0; });
}

Monomial mon_one(int nvars) { return Monomial{std::vector<int32_t>(nvars, 0), 0}; }

static constexpr int32_t kExpBound = 1 << 28;

Monomial mon_make(std::span<const int64_t> weights, std::vector<int32_t> exponents) {
    ANNLAB_CHECK(weights.size() == exponents.size(), "weights/exponents length mismatch");
    int64_t d = 0;
    for (size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0 || exponents[i] >= kExpBound)
            throw hypothesis_error("exponent out of range");
        d += weights[i] * exponents[i];
    }
    return Monomial{std::move(exponents), d};
}

Monomial mon_var(std::span<const int64_t> weights, int var, int32_t power) {
    std::vector<int32_t> e(weights.size(), 0);
    e[var] = power;
    return mon_make(weights, std::move(e));
}

Monomial mon_mul(const Monomial& a, const Monomial& b) {
    ANNLAB_CHECK(a.e.size() == b.e.size(), "variable count mismatch");
    Monomial r;
    r.e.resize(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) {
        r.e[i] = a.e[i] + b.e[i];
        if (r.e[i] >= kExpBound) throw hypothesis_error("exponent overflow");
    }
    r.wdeg = a.wdeg + b.wdeg;
    return r;
}

bool mon_divides(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size()) throw hypothesis_error("variable count mismatch");
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial mon_div(const Monomial& b, const Monomial& a) {
    if (!mon_divides(a, b)) throw hypothesis_error("monomial quotient not divisible");
    Monomial r;
    r.e.resize(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) r.e[i] = b.e[i] - a.e[i];
    r.wdeg = b.wdeg - a.wdeg;
    return r;
}

Monomial mon_lcm(std::span<const int64_t> weights, const Monomial& a, const Monomial& b) {
    ANNLAB_CHECK(a.e.size() == b.e.size(), "variable count mismatch");
    std::vector<int32_t> e(a.e.size());
    for (size_t i = 0; i < a.e.size(); ++i) e[i] = std::max(a.e[i], b.e[i]);
    return mon_make(weights, std::move(e));
}

bool mon_coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

/* ------------------------------------------------------------------ */

std::string TermOrder::str() const {
    switch (kind) {
        case Kind::WDegRevLex: return "wdegrevlex";
        case Kind::WDegLex: return "wdeglex";
        case Kind::Elim: return "elim(" + std::to_string(elim_block) + ")";
    }
    return "?";
}

namespace {

/* Weighted degree of a slice [lo, hi) of the exponent vector. */
int64_t slice_wdeg(std::span<const int64_t> w, const Monomial& m, size_t lo, size_t hi) {
    int64_t d = 0;
    for (size_t i = lo; i < hi; ++i) d += w[i] * m.e[i];
    return d;
}

/* degrevlex on a slice: higher degree wins; on ties the monomial with the
 * larger exponent in the last differing variable is smaller. */
Ordering revlex_slice(std::span<const int64_t> w, const Monomial& a, const Monomial& b,
                      size_t lo, size_t hi) {
    int64_t da = slice_wdeg(w, a, lo, hi), db = slice_wdeg(w, b, lo, hi);
    if (da != db) return da < db ? Ordering::Less : Ordering::Greater;
    for (size_t i = hi; i-- > lo;) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? Ordering::Less : Ordering::Greater;
    }
    return Ordering::Equal;
}

Ordering lex_slice(std::span<const int64_t> w, const Monomial& a, const Monomial& b,
                   size_t lo, size_t hi) {
    int64_t da = slice_wdeg(w, a, lo, hi), db = slice_wdeg(w, b, lo, hi);
    if (da != db) return da < db ? Ordering::Less : Ordering::Greater;
    for (size_t i = lo; i < hi; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? Ordering::Greater : Ordering::Less;
    }
    return Ordering::Equal;
}

}  // namespace

Ordering mon_compare(const TermOrder& ord, std::span<const int64_t> weights,
                     const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size() || a.e.size() != weights.size())
        throw hypothesis_error("monomial comparison across different variable sets");
    size_t n = weights.size();
    switch (ord.kind) {
        case TermOrder::Kind::WDegRevLex:
            return revlex_slice(weights, a, b, 0, n);
        case TermOrder::Kind::WDegLex:
            return lex_slice(weights, a, b, 0, n);
        case TermOrder::Kind::Elim: {
            size_t k = static_cast<size_t>(ord.elim_block);
            ANNLAB_CHECK(k <= n, "elimination block exceeds variable count");
            Ordering head = revlex_slice(weights, a, b, 0, k);
            if (head != Ordering::Equal) return head;
            return revlex_slice(weights, a, b, k, n);
        }
    }
    return Ordering::Equal;
}

/* ------------------------------------------------------------------ */

int PolyRing::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

PolyRing make_poly_ring(std::vector<std::string> vars, std::vector<int64_t> weights,
                        Field field, TermOrder ord) {
    if (vars.size() != weights.size())
        throw hypothesis_error("variable/weight count mismatch");
    for (int64_t w : weights)
        if (w <= 0) throw hypothesis_error("weights must be strictly positive");
    for (size_t i = 0; i < vars.size(); ++i)
        for (size_t j = i + 1; j < vars.size(); ++j)
            if (vars[i] == vars[j]) throw hypothesis_error("duplicate variable name: " + vars[i]);
    return PolyRing{std::move(vars), std::move(weights), field, ord};
}

}  // namespace annlab
