#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "classify.hpp"
#include "form.hpp"

using namespace tcb;

namespace {

WeightedGraph chain_g(std::initializer_list<int> w) {
    std::vector<Int> v;
    for (int x : w) v.push_back(x);
    return make_chain_graph(v);
}

WeightedGraph from_parent(const std::vector<int>& parent, const std::vector<int>& w) {
    std::vector<std::pair<std::string, Int>> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (std::size_t i = 0; i < parent.size(); ++i) {
        vs.push_back({"v" + std::to_string(i), w[i]});
        if (parent[i] >= 0) es.push_back({vs[parent[i]].first, vs[i].first});
    }
    return WeightedGraph(std::move(vs), std::move(es));
}

// all parent arrays (not up to isomorphism; fine for cross-checks)
void for_all_trees(int max_n, int max_w,
                   const std::function<void(const std::vector<int>&, const std::vector<int>&)>& f) {
    for (int n = 1; n <= max_n; ++n) {
        std::vector<int> parent(n, -1), w(n, 1);
        std::function<void(int)> pick_parents = [&](int i) {
            if (i == n) {
                std::function<void(int)> pick_weights = [&](int j) {
                    if (j == n) {
                        f(parent, w);
                        return;
                    }
                    for (int x = 1; x <= max_w; ++x) {
                        w[j] = x;
                        pick_weights(j + 1);
                    }
                };
                pick_weights(0);
                return;
            }
            for (int p = 0; p < i; ++p) {
                parent[i] = p;
                pick_parents(i + 1);
            }
        };
        pick_parents(1);
    }
}

}  // namespace

TEST_CASE("intersection matrices") {
    auto m = intersection_matrix(chain_g({2, 1, 2}));
    CHECK(m[0][0] == -2);
    CHECK(m[1][1] == -1);
    CHECK(m[2][2] == -2);
    CHECK(m[0][1] == 1);
    CHECK(m[1][2] == 1);
    CHECK(m[0][2] == 0);
    CHECK(intersection_matrix(chain_g({4}))[0][0] == -4);
    auto f = intersection_matrix(make_fork_graph(1, {{Int(1)}, {Int(1)}, {Int(1)}}));
    CHECK(f[0][0] == -1);
    CHECK(f[0][1] == 1);
    CHECK(f[0][2] == 1);
    CHECK(f[0][3] == 1);
}

TEST_CASE("signature classification") {
    CHECK(classify_form(chain_g({1, 1})).tag == FormClass::Tag::Parabolic);
    CHECK(classify_form(chain_g({4, 1, 2, 2, 2})).tag == FormClass::Tag::Parabolic);
    FormClass fork = classify_form(make_fork_graph(1, {{Int(1)}, {Int(1)}, {Int(1)}}));
    CHECK(fork.tag == FormClass::Tag::Other);
    CHECK(fork.positives >= 1);
    CHECK(classify_form(chain_g({2, 2, 2})).tag == FormClass::Tag::Elliptic);
    CHECK(classify_form(chain_g({9, 9})).tag == FormClass::Tag::Elliptic);
}

TEST_CASE("the parabolic table") {
    // chains [1,1], [1,2,...,2,1], [2,1,2]
    for (int run = 0; run <= 8; ++run) {
        std::vector<Int> w{1};
        for (int i = 0; i < run; ++i) w.push_back(2);
        w.push_back(1);
        CHECK(classify_form(make_chain_graph(w)).tag == FormClass::Tag::Parabolic);
    }
    CHECK(classify_form(chain_g({2, 1, 2})).tag == FormClass::Tag::Parabolic);
    // forks [2 | 2 | 2 | 2,...,2,1]
    for (int run = 0; run <= 8; ++run) {
        std::vector<Int> arm;
        for (int i = 0; i < run; ++i) arm.push_back(2);
        arm.push_back(1);
        WeightedGraph g = make_fork_graph(2, {{Int(2)}, {Int(2)}, arm});
        CHECK(classify_form(g).tag == FormClass::Tag::Parabolic);
    }
    // forks [1 | a | b | c] are never elliptic
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b)
            for (int c = 1; c <= 5; ++c) {
                WeightedGraph g = make_fork_graph(1, {{Int(a)}, {Int(b)}, {Int(c)}});
                CHECK(classify_form(g).tag != FormClass::Tag::Elliptic);
            }
}

TEST_CASE("tree elimination agrees with dense congruence") {
    for_all_trees(5, 3, [&](const std::vector<int>& parent, const std::vector<int>& w) {
        FormClass fast = tree_signature(parent, w);
        FormClass dense = classify_form(from_parent(parent, w));
        CHECK(fast.negatives == dense.negatives);
        CHECK(fast.zeros == dense.zeros);
        CHECK(fast.positives == dense.positives);
    });
}

namespace {

// signature from an adjacency list after a BFS relabeling
FormClass adjacency_signature(const std::vector<std::vector<int>>& adj,
                              const std::vector<int>& w) {
    int n = static_cast<int>(adj.size());
    std::vector<int> order{0}, parent(n, -1), label(n, -1);
    label[0] = 0;
    for (std::size_t h = 0; h < order.size(); ++h)
        for (int u : adj[order[h]])
            if (label[u] < 0) {
                label[u] = static_cast<int>(order.size());
                parent[label[u]] = label[order[h]];
                order.push_back(u);
            }
    std::vector<int> wp(n);
    for (int v = 0; v < n; ++v) wp[label[v]] = w[v];
    return tree_signature(parent, wp);
}

bool shifted_by_one_negative(const FormClass& base, const FormClass& after) {
    return after.negatives == base.negatives + 1 && after.zeros == base.zeros &&
           after.positives == base.positives;
}

}  // namespace

TEST_CASE("blow-ups shift the signature by one negative, exhaustively") {
    // every tree with at most 7 vertices and weights up to 5
    for (int n = 2; n <= 7; ++n) {
        for (const auto& parent : free_tree_parents(n)) {
            std::vector<std::vector<int>> adj(n);
            for (int v = 1; v < n; ++v) {
                adj[parent[v]].push_back(v);
                adj[v].push_back(parent[v]);
            }
            std::vector<int> w(n, 1);
            while (true) {
                FormClass base = tree_signature(parent, w);
                // vertex blow-ups
                for (int v = 0; v < n; ++v) {
                    auto adj2 = adj;
                    auto w2 = w;
                    adj2.push_back({v});
                    adj2[v].push_back(n);
                    w2[v] += 1;
                    w2.push_back(1);
                    CHECK(shifted_by_one_negative(base, adjacency_signature(adj2, w2)));
                }
                // edge blow-ups
                for (int v = 1; v < n; ++v) {
                    int u = parent[v];
                    auto adj2 = adj;
                    auto w2 = w;
                    adj2[u].erase(std::find(adj2[u].begin(), adj2[u].end(), v));
                    adj2[v].erase(std::find(adj2[v].begin(), adj2[v].end(), u));
                    adj2.push_back({u, v});
                    adj2[u].push_back(n);
                    adj2[v].push_back(n);
                    w2[u] += 1;
                    w2[v] += 1;
                    w2.push_back(1);
                    CHECK(shifted_by_one_negative(base, adjacency_signature(adj2, w2)));
                }
                int k = n - 1;
                while (k >= 0 && w[k] == 5) w[k--] = 1;
                if (k < 0) break;
                ++w[k];
            }
        }
    }
}

TEST_CASE("kernel vectors") {
    KernelVector k = kernel_vector(chain_g({2, 1, 2}));
    CHECK(k.entries == std::vector<Int>{1, 2, 1});
    k = kernel_vector(chain_g({4, 1, 2, 2, 2}));
    CHECK(k.entries == std::vector<Int>{1, 4, 3, 2, 1});
    k = kernel_vector(chain_g({1, 1}));
    CHECK(k.entries == std::vector<Int>{1, 1});
    CHECK_THROWS_WITH_AS(kernel_vector(chain_g({4})), doctest::Contains("parabolic"),
                         error);
}
