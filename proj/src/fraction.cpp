#include "fraction.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace tcb {

namespace {

Int int_gcd(Int a, Int b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// x^{-1} mod m for gcd(x, m) = 1, result in (0, m).
Int mod_inverse(const Int& x, const Int& m) {
    Int r0 = m, r1 = x % m, s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int qt = r0 / r1;
        Int r2 = r0 - qt * r1;
        Int s2 = s0 - qt * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    require_internal(r0 == 1, "mod_inverse on non-coprime input");
    Int inv = s0 % m;
    if (inv < 0) inv += m;
    return inv;
}

}  // namespace

Fraction::Fraction(Int n, Int q) : n_(std::move(n)), q_(std::move(q)) {
    check(n_ >= 2, "InvalidFraction",
          "group order must be at least 2, got n = " + n_.str());
    check(q_ > 0 && q_ < n_, "InvalidFraction",
          "weight must satisfy 0 < q < n, got " + n_.str() + "/" + q_.str());
    check(int_gcd(n_, q_) == 1, "InvalidFraction",
          "gcd(n, q) must be 1, got " + n_.str() + "/" + q_.str());
}

Fraction Fraction::from_action(const Int& n, const Int& a, const Int& b) {
    check(n >= 2, "InvalidFraction",
          "group order must be at least 2, got n = " + n.str());
    Int am = ((a % n) + n) % n;
    Int bm = ((b % n) + n) % n;
    check(int_gcd(n, am) == 1 && int_gcd(n, bm) == 1, "InvalidFraction",
          "action weights must be coprime to n");
    Int q = (bm * mod_inverse(am, n)) % n;
    return Fraction(n, q);
}

Chain::Chain(std::vector<Int> weights) : weights_(std::move(weights)) {
    check(!weights_.empty(), "InvalidChain", "chain must have at least one weight");
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        check(weights_[i] >= 2, "InvalidChain",
              "chain weights must be >= 2, got " + weights_[i].str() +
                  " at position " + std::to_string(i + 1));
    }
}

Chain Chain::reversed() const {
    std::vector<Int> w(weights_.rbegin(), weights_.rend());
    return Chain(std::move(w));
}

Chain hj_expand(const Fraction& f) {
    std::vector<Int> weights;
    Int n = f.n(), q = f.q();
    while (true) {
        Int b = (n + q - 1) / q;  // ceil(n/q), so the remainder below is in [0, q)
        Int r = b * q - n;
        weights.push_back(b);
        if (r == 0) break;
        n = q;
        q = r;
    }
    return Chain(std::move(weights));
}

Fraction hj_eval(const Chain& c) {
    // Right-to-left: [b, tail] = b - 1/tail.
    Int n = c.weights().back(), q = 1;
    for (auto it = c.weights().rbegin() + 1; it != c.weights().rend(); ++it) {
        Int n2 = *it * n - q;
        q = n;
        n = n2;
    }
    require_internal(int_gcd(n, q) == 1, "continuants are coprime");
    return Fraction(n, q);
}

Fraction conjugate(const Fraction& f) {
    return Fraction(f.n(), mod_inverse(f.q(), f.n()));
}

QuotInvariants invariants(const Fraction& f) {
    Int d = int_gcd(f.n(), f.q() + 1);
    QuotInvariants inv;
    inv.iota = f.n() / d;
    inv.beta = Rat(d * d, f.n());
    inv.gamma = (f.q() + 1) / d;
    require_internal(inv.gamma <= inv.iota && int_gcd(inv.iota, inv.gamma) == 1,
                     "gamma <= iota and gcd(iota, gamma) = 1");
    if (inv.beta.is_integer()) {
        Int beta = inv.beta.numerator();
        require_internal(beta * inv.iota * inv.iota == f.n() &&
                             beta * inv.iota * inv.gamma - 1 == f.q(),
                         "integral beta reconstructs n and q");
    }
    return inv;
}

bool is_t_fraction(const Fraction& f) {
    bool du_val = (f.q() == f.n() - 1);
    Int s = f.q() + 1;
    bool divisibility = ((s * s) % f.n() == 0) && !du_val;
    bool beta_integral = invariants(f).beta.is_integer() && !du_val;
    require_internal(divisibility == beta_integral,
                     "divisibility test and beta integrality agree");
    return divisibility;
}

bool is_du_val_chain(const Chain& c) {
    for (const Int& w : c.weights())
        if (w != 2) return false;
    return true;
}

namespace {

Int parse_int(const std::string& s, const std::string& what) {
    check(!s.empty(), "ParseError", what + ": empty number");
    for (char ch : s)
        check(ch >= '0' && ch <= '9', "ParseError",
              what + ": invalid character '" + std::string(1, ch) + "' in \"" + s + "\"");
    return Int(s);
}

}  // namespace

Fraction parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    check(slash != std::string::npos, "ParseError",
          "fraction must look like \"n/q\", got \"" + text + "\"");
    Int n = parse_int(text.substr(0, slash), "fraction numerator");
    Int q = parse_int(text.substr(slash + 1), "fraction denominator");
    return Fraction(n, q);
}

Chain parse_chain(const std::string& text) {
    std::vector<Int> weights;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        std::string part =
            comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos);
        weights.push_back(parse_int(part, "chain weight"));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return Chain(std::move(weights));
}

std::string format_fraction(const Fraction& f) {
    return f.n().str() + "/" + f.q().str();
}

std::string format_chain(const Chain& c) {
    std::string out;
    for (std::size_t i = 0; i < c.weights().size(); ++i) {
        if (i) out += ",";
        out += c.weights()[i].str();
    }
    return out;
}

}  // namespace tcb
