#include "annlab/textform.hpp"

#include <cctype>

namespace annlab {

namespace {

struct PolyLexer {
    std::string_view s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        skip_ws();
        return s[pos++];
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error("polynomial syntax: " + msg + " at '" +
                          std::string(s.substr(pos, 8)) + "'");
    }

    long long read_int() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) fail("expected integer");
        return std::stoll(std::string(s.substr(start, pos - start)));
    }

    std::string read_ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' ||
                s[pos] == '@'))
            ++pos;
        if (pos == start) fail("expected identifier");
        return std::string(s.substr(start, pos - start));
    }
};

}  // namespace

Poly parse_poly(const PolyRing& R, std::string_view text) {
    PolyLexer lx{text};
    Poly acc;
    bool first = true;
    while (!lx.eof()) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            lx.get();
            sign = c == '-' ? -1 : 1;
        } else if (!first) {
            lx.fail("expected + or - between terms");
        }
        first = false;

        Coeff coeff = Coeff::from_int(R.field, sign);
        Monomial mon = mon_one(R.nvars());
        bool any_factor = false;
        for (;;) {
            char p = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(p))) {
                long long num = lx.read_int();
                long long den = 1;
                if (lx.peek() == '/') {
                    lx.get();
                    den = lx.read_int();
                }
                coeff = c_mul(R.field, coeff, Coeff::from_fraction(R.field, num, den));
            } else if (std::isalpha(static_cast<unsigned char>(p)) || p == '_' || p == '@') {
                std::string name = lx.read_ident();
                int v = R.var_index(name);
                if (v < 0) throw parse_error("unknown variable '" + name + "'");
                int32_t e = 1;
                if (lx.peek() == '^') {
                    lx.get();
                    long long k = lx.read_int();
                    if (k < 0) throw parse_error("negative exponent");
                    e = static_cast<int32_t>(k);
                }
                mon = mon_mul(mon, mon_var(R.weights, v, e));
            } else {
                lx.fail("expected coefficient or variable");
            }
            any_factor = true;
            if (lx.peek() == '*') {
                lx.get();
                continue;
            }
            break;
        }
        if (!any_factor) lx.fail("empty term");
        acc = poly_add(R, acc, poly_normalize(R, {PTerm{std::move(mon), std::move(coeff)}}));
    }
    return acc;
}

}  // namespace annlab
