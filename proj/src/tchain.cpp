#include "tchain.hpp"

#include <deque>
#include <set>

#include "error.hpp"

namespace tcb {

Chain t_step_a(const Chain& c) {
    std::vector<Int> w;
    w.reserve(c.length() + 1);
    w.push_back(2);
    w.insert(w.end(), c.weights().begin(), c.weights().end());
    w.back() += 1;
    return Chain(std::move(w));
}

Chain t_step_b(const Chain& c) {
    std::vector<Int> w(c.weights());
    w.front() += 1;
    w.push_back(2);
    return Chain(std::move(w));
}

bool is_t_chain(const Chain& c) { return is_t_fraction(hj_eval(c)); }

bool is_seed_chain(const Chain& c) {
    const auto& w = c.weights();
    if (w.size() == 1) return w[0] == 4;
    if (w.front() != 3 || w.back() != 3) return false;
    for (std::size_t i = 1; i + 1 < w.size(); ++i)
        if (w[i] != 2) return false;
    return true;
}

std::optional<TChainCertificate> derive_certificate(const Chain& c) {
    if (!is_t_chain(c)) return std::nullopt;
    std::vector<Int> w(c.weights());
    std::string rword;
    while (true) {
        Chain cur{std::vector<Int>(w)};
        if (is_seed_chain(cur)) {
            std::string word(rword.rbegin(), rword.rend());
            return TChainCertificate{cur, word, c};
        }
        // A non-seed T-chain has weight 2 on exactly one end.
        bool front2 = w.front() == 2, back2 = w.back() == 2;
        require_internal(front2 != back2,
                         "non-seed T-chain carries 2 on exactly one end");
        if (front2) {
            w.erase(w.begin());
            w.back() -= 1;
            rword += 'A';
        } else {
            w.pop_back();
            w.front() -= 1;
            rword += 'B';
        }
        require_internal(w.size() >= 1 && is_t_chain(Chain{std::vector<Int>(w)}),
                         "undoing a step keeps the chain of type T");
    }
}

std::vector<Chain> enumerate_tchains(int max_len) {
    check(max_len >= 1, "InvalidChain", "max_len must be >= 1");
    std::set<std::vector<Int>> seen;
    std::deque<Chain> queue;
    auto push = [&](const Chain& c) {
        if (static_cast<int>(c.length()) > max_len) return;
        if (seen.insert(c.weights()).second) queue.push_back(c);
    };
    push(Chain{{Int(4)}});
    for (int k = 0; k + 2 <= max_len; ++k) {
        std::vector<Int> w{Int(3)};
        for (int i = 0; i < k; ++i) w.push_back(2);
        w.push_back(3);
        push(Chain{std::move(w)});
    }
    while (!queue.empty()) {
        Chain c = queue.front();
        queue.pop_front();
        if (static_cast<int>(c.length()) < max_len) {
            push(t_step_a(c));
            push(t_step_b(c));
        }
    }
    std::vector<Chain> out;
    out.reserve(seen.size());
    for (auto& w : seen) out.push_back(Chain{std::vector<Int>(w)});
    return out;
}

std::pair<Rat, Rat> endpoint_alphas(const Chain& c) {
    Fraction f = hj_eval(c);
    Fraction fc = conjugate(f);
    return {Rat(f.q() + 1, f.n()), Rat(fc.q() + 1, fc.n())};
}

}  // namespace tcb
