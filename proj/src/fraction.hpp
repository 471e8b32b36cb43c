#pragma once

#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace tcb {

/// Cyclic quotient singularity 1/n(1,q) in normalized form:
/// n >= 2, 0 < q < n, gcd(n,q) = 1.
class Fraction {
public:
    Fraction(Int n, Int q);

    /// Normalizes a raw action 1/n(a,b) with gcd(n,a) = gcd(n,b) = 1 to
    /// 1/n(1,q) via q = b * a^{-1} mod n.
    static Fraction from_action(const Int& n, const Int& a, const Int& b);

    const Int& n() const { return n_; }
    const Int& q() const { return q_; }

    friend bool operator==(const Fraction& x, const Fraction& y) {
        return x.n_ == y.n_ && x.q_ == y.q_;
    }
    friend bool operator!=(const Fraction& x, const Fraction& y) { return !(x == y); }

private:
    Int n_, q_;
};

/// Dual graph of a cyclic quotient singularity: a chain of weights b_i >= 2.
class Chain {
public:
    explicit Chain(std::vector<Int> weights);

    const std::vector<Int>& weights() const { return weights_; }
    std::size_t length() const { return weights_.size(); }
    Chain reversed() const;

    friend bool operator==(const Chain& x, const Chain& y) {
        return x.weights_ == y.weights_;
    }
    friend bool operator!=(const Chain& x, const Chain& y) { return !(x == y); }
    friend bool operator<(const Chain& x, const Chain& y) {
        return x.weights_ < y.weights_;
    }

private:
    std::vector<Int> weights_;
};

struct QuotInvariants {
    Int iota;   // n / gcd(n, q+1), the index
    Rat beta;   // gcd(n, q+1)^2 / n
    Int gamma;  // (q+1) / gcd(n, q+1)
};

/// Expansion n/q = b_1 - 1/(b_2 - 1/(... - 1/b_r)) with all b_i >= 2.
Chain hj_expand(const Fraction& f);

/// Exact value of a chain as a fraction in lowest terms; inverse of hj_expand.
Fraction hj_eval(const Chain& c);

/// (n, q') with q*q' == 1 mod n and 0 < q' < n. Describes the same
/// singularity with the two coordinates swapped.
Fraction conjugate(const Fraction& f);

QuotInvariants invariants(const Fraction& f);

/// True iff (q+1)^2 == 0 mod n and the singularity is not Du Val (q != n-1).
/// The divisibility test and the integrality of beta are checked against
/// each other on every call.
bool is_t_fraction(const Fraction& f);

/// True iff every weight equals 2 (an A_r point).
bool is_du_val_chain(const Chain& c);

// Serialized forms: fractions as "n/q", chains as "b1,b2,...".
Fraction parse_fraction(const std::string& text);
Chain parse_chain(const std::string& text);
std::string format_fraction(const Fraction& f);
std::string format_chain(const Chain& c);

}  // namespace tcb
