#include "form.hpp"

#include <algorithm>

#include "error.hpp"

namespace tcb {

const char* form_tag_name(FormClass::Tag t) {
    switch (t) {
        case FormClass::Tag::Elliptic: return "Elliptic";
        case FormClass::Tag::Parabolic: return "Parabolic";
        default: return "Other";
    }
}

std::vector<std::vector<Int>> intersection_matrix(const WeightedGraph& g) {
    int n = g.size();
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
    for (int v = 0; v < n; ++v) m[v][v] = -g.weight(v);
    for (auto& [a, b] : g.edges()) {
        m[a][b] = 1;
        m[b][a] = 1;
    }
    return m;
}

namespace {

FormClass tag_counts(int neg, int zero, int pos) {
    FormClass fc;
    fc.negatives = neg;
    fc.zeros = zero;
    fc.positives = pos;
    if (zero == 0 && pos == 0)
        fc.tag = FormClass::Tag::Elliptic;
    else if (zero == 1 && pos == 0)
        fc.tag = FormClass::Tag::Parabolic;
    else
        fc.tag = FormClass::Tag::Other;
    return fc;
}

}  // namespace

FormClass classify_matrix(std::vector<std::vector<Rat>> m) {
    int n = static_cast<int>(m.size());
    int neg = 0, zero = 0, pos = 0;
    for (int i = 0; i < n; ++i) {
        if (m[i][i].is_zero()) {
            // Prefer swapping in a later vertex with a nonzero diagonal;
            // otherwise add a coupled row to expose the indefinite pair.
            int swap_with = -1, couple_with = -1;
            for (int j = i + 1; j < n && swap_with < 0; ++j) {
                if (!m[j][j].is_zero() && !m[i][j].is_zero()) swap_with = j;
            }
            if (swap_with < 0)
                for (int j = i + 1; j < n && swap_with < 0; ++j)
                    if (!m[j][j].is_zero()) swap_with = j;
            for (int j = i + 1; j < n && couple_with < 0; ++j)
                if (!m[i][j].is_zero()) couple_with = j;
            if (swap_with >= 0) {
                std::swap(m[i], m[swap_with]);
                for (int r = 0; r < n; ++r) std::swap(m[r][i], m[r][swap_with]);
            } else if (couple_with >= 0) {
                int j = couple_with;
                // row_i += row_j, col_i += col_j; new diagonal is 2*m[i][j]
                // because every remaining diagonal is zero here.
                for (int k = 0; k < n; ++k) m[i][k] += m[j][k];
                for (int k = 0; k < n; ++k) m[k][i] += m[k][j];
            } else {
                ++zero;
                continue;
            }
        }
        const Rat pivot = m[i][i];
        if (pivot.sign() < 0)
            ++neg;
        else
            ++pos;
        // Congruence step: the trailing block becomes the Schur complement.
        for (int j = i + 1; j < n; ++j) {
            if (m[j][i].is_zero()) continue;
            Rat f = m[j][i] / pivot;
            for (int k = i + 1; k < n; ++k) {
                if (m[i][k].is_zero()) continue;
                m[j][k] -= f * m[i][k];
            }
        }
    }
    return tag_counts(neg, zero, pos);
}

FormClass classify_form(const WeightedGraph& g) {
    auto mi = intersection_matrix(g);
    int n = g.size();
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rat(mi[i][j]);
    return classify_matrix(std::move(m));
}

FormClass tree_signature(const std::vector<int>& parent, const std::vector<int>& weight) {
    int n = static_cast<int>(parent.size());
    require_internal(n > 0 && static_cast<int>(weight.size()) == n, "tree arrays agree");
    int neg = 0, zero = 0, pos = 0;
    // state: 0 normal (d valid), 1 zero pivot deferred to parent, 2 spent
    std::vector<Rat> d(n);
    std::vector<char> state(n, 0);
    std::vector<int> zero_children(n, 0);
    for (int v = n - 1; v >= 0; --v) {
        if (zero_children[v] > 0) {
            // A child with zero pivot pairs up with v: the 2x2 block has
            // determinant -1 whatever v's partially eliminated diagonal is,
            // and the Schur update toward v's parent vanishes. Extra zero
            // children each leave a genuine kernel direction.
            zero += zero_children[v] - 1;
            ++pos;
            ++neg;
            state[v] = 2;
            continue;
        }
        d[v] -= weight[v];
        if (d[v].is_zero()) {
            if (parent[v] < 0) {
                ++zero;
            } else {
                state[v] = 1;
                ++zero_children[parent[v]];
            }
            continue;
        }
        if (d[v].sign() < 0)
            ++neg;
        else
            ++pos;
        if (parent[v] >= 0) d[parent[v]] -= Rat(1) / d[v];
    }
    return tag_counts(neg, zero, pos);
}

KernelVector kernel_vector(const WeightedGraph& g) {
    FormClass fc = classify_form(g);
    check(fc.tag == FormClass::Tag::Parabolic, "NotParabolic",
          "kernel vector requires a parabolic form, got " +
              std::string(form_tag_name(fc.tag)));
    int n = g.size();
    auto mi = intersection_matrix(g);
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = Rat(mi[i][j]);

    // Gaussian elimination to row echelon form.
    std::vector<int> pivot_col(n, -1);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int r = row; r < n; ++r)
            if (!m[r][col].is_zero()) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        for (int r = 0; r < n; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rat f = m[r][col] / m[row][col];
            for (int k = col; k < n; ++k) m[r][k] -= f * m[row][k];
        }
        pivot_col[row] = col;
        ++row;
    }
    require_internal(row == n - 1, "parabolic form has a one-dimensional kernel");
    std::vector<char> is_pivot(n, 0);
    for (int r = 0; r < row; ++r) is_pivot[pivot_col[r]] = 1;
    int free_col = -1;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[c]) free_col = c;
    std::vector<Rat> x(n, Rat(0));
    x[free_col] = Rat(1);
    for (int r = row - 1; r >= 0; --r) {
        int c = pivot_col[r];
        Rat s(0);
        for (int k = c + 1; k < n; ++k)
            if (!m[r][k].is_zero()) s += m[r][k] * x[k];
        x[c] = -s / m[r][c];
    }

    // Scale to a primitive integer vector.
    Int lcm = 1;
    for (auto& xi : x) {
        Int dnm = xi.denominator();
        Int gg = boost::multiprecision::gcd(lcm, dnm);
        lcm = lcm / gg * dnm;
    }
    std::vector<Int> v(n);
    for (int i = 0; i < n; ++i) v[i] = x[i].numerator() * (lcm / x[i].denominator());
    Int gg = 0;
    for (auto& vi : v) gg = boost::multiprecision::gcd(gg, vi);
    require_internal(gg != 0, "kernel generator is nonzero");
    for (auto& vi : v) vi /= gg;
    int sign = 0;
    for (auto& vi : v)
        if (vi != 0) {
            sign = vi > 0 ? 1 : -1;
            break;
        }
    if (sign < 0)
        for (auto& vi : v) vi = -vi;
    for (auto& vi : v)
        check(vi > 0, "NonPositiveKernel",
              "primitive kernel generator is not strictly positive");

    // Exact orthogonality check on every call.
    for (int i = 0; i < n; ++i) {
        Int s = 0;
        for (int j = 0; j < n; ++j)
            if (mi[i][j] != 0) s += mi[i][j] * v[j];
        require_internal(s == 0, "kernel vector annihilates the intersection matrix");
    }
    return KernelVector{std::move(v)};
}

}  // namespace tcb
