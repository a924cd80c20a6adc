#pragma once

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "degloci/partition.hpp"

namespace degloci {

// Element of the infinite hyperoctahedral group, stored as a finite window
// w(1..N) of signed values whose absolute values permute 1..N; beyond the
// window the map is the identity.
class SignedPerm {
  public:
    SignedPerm() = default;

    explicit SignedPerm(std::vector<int> oneline) : w_(std::move(oneline)) { validate(); }

    static SignedPerm identity(int n) {
        std::vector<int> v(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
        return SignedPerm(std::move(v));
    }

    int window() const { return static_cast<int>(w_.size()); }

    const std::vector<int>& oneline() const { return w_; }

    int of(int i) const {
        if (i < 1) throw std::domain_error("positions are 1-based");
        return i <= window() ? w_[static_cast<size_t>(i) - 1] : i;
    }

    // Image of a signed index: w(-i) = -w(i).
    int of_signed(int i) const { return i >= 0 ? of(i) : -of(-i); }

    SignedPerm widened(int n) const {
        std::vector<int> v = w_;
        for (int i = window() + 1; i <= n; ++i) v.push_back(i);
        return SignedPerm(std::move(v));
    }

    // Trim trailing fixed points to make windows comparable.
    SignedPerm trimmed() const {
        std::vector<int> v = w_;
        while (!v.empty() && v.back() == static_cast<int>(v.size())) v.pop_back();
        return SignedPerm(std::move(v));
    }

    friend bool operator==(const SignedPerm& l, const SignedPerm& r) {
        return l.trimmed().w_ == r.trimmed().w_;
    }

    // (l * r)(i) = l(r(i)).
    friend SignedPerm operator*(const SignedPerm& l, const SignedPerm& r) {
        int n = std::max(l.window(), r.window());
        std::vector<int> v(static_cast<size_t>(n));
        for (int i = 1; i <= n; ++i) v[static_cast<size_t>(i) - 1] = l.of_signed(r.of(i));
        return SignedPerm(std::move(v));
    }

    // Right multiplication by the simple reflection s_i: s_0 negates the
    // first entry, s_i for i >= 1 swaps entries i and i+1.
    SignedPerm times_simple(int i) const {
        if (i < 0) throw std::domain_error("simple index must be >= 0");
        int need = std::max(window(), i == 0 ? 1 : i + 1);
        std::vector<int> v = widened(need).w_;
        if (i == 0)
            v[0] = -v[0];
        else
            std::swap(v[static_cast<size_t>(i) - 1], v[static_cast<size_t>(i)]);
        return SignedPerm(std::move(v));
    }

    // Coxeter length in the hyperoctahedral group:
    // inversions + negative entries + pairs i < j with w(i) + w(j) < 0.
    long length() const {
        long len = 0;
        int n = window();
        for (int i = 1; i <= n; ++i) {
            if (of(i) < 0) ++len;
            for (int j = i + 1; j <= n; ++j) {
                if (of(i) > of(j)) ++len;
                if (of(i) + of(j) < 0) ++len;
            }
        }
        return len;
    }

  private:
    void validate() const {
        std::vector<char> seen(w_.size() + 1, 0);
        for (int x : w_) {
            int a = std::abs(x);
            if (a < 1 || a > static_cast<int>(w_.size()) || seen[static_cast<size_t>(a)])
                throw std::domain_error("not a signed permutation window");
            seen[static_cast<size_t>(a)] = 1;
        }
    }

    std::vector<int> w_;
};

// Minimal length representative of w * W_(k), where W_(k) omits the k-th
// simple generator. For k >= 1 that subgroup rearranges the first k entries
// with free signs and permutes the rest without signs; for k = 0 it permutes
// everything without signs.
inline SignedPerm min_coset_rep(const SignedPerm& w, int k) {
    if (k < 0) throw std::domain_error("negative k");
    int n = std::max(w.window(), k);
    std::vector<int> v = w.widened(n).oneline();
    if (k > 0) {
        for (int i = 0; i < k; ++i) v[static_cast<size_t>(i)] = std::abs(v[static_cast<size_t>(i)]);
        std::sort(v.begin(), v.begin() + k);
    }
    std::sort(v.begin() + k, v.end());
    return SignedPerm(std::move(v)).trimmed();
}

// The Grassmannian element w_lambda attached to a k-strict partition inside
// SP^k(n): one-line (v_1 .. v_k | -zeta_1 .. -zeta_s, u_1, u_2, ..) with
// zeta_i = lambda_i - k for the parts above k and #{p : v_p > u_i} =
// lambda_{s+i} for the rest.
inline SignedPerm partition_to_perm(const KStrictPartition& lam, int n) {
    int k = lam.k();
    if (!lam.fits(n)) throw std::domain_error("partition outside SP^k(n)");
    int s = 0;
    while (s < lam.length() && lam.part(s + 1) > k) ++s;
    std::vector<char> used(static_cast<size_t>(n) + 1, 0);
    std::vector<int> zeta(static_cast<size_t>(s));
    for (int i = 1; i <= s; ++i) {
        int z = lam.part(i) - k;
        if (z > n) throw std::domain_error("part too large for window");
        zeta[static_cast<size_t>(i) - 1] = z;
        used[static_cast<size_t>(z)] = 1;
    }
    int m = n - s - k;  // number of in-window u values
    std::vector<int> vs, us;
    int next_req_index = s + m;  // requirements are consumed from the tail up
    int t = 0;
    for (int x = n; x >= 1; --x) {
        if (used[static_cast<size_t>(x)]) continue;
        // Scanning values downward, a u placed now acquires exactly t larger
        // v's; requirements are consumed tail-first, and the choice is forced.
        if (next_req_index > s && lam.part(next_req_index) == t) {
            us.push_back(x);
            --next_req_index;
        } else {
            if (static_cast<int>(vs.size()) == k)
                throw std::domain_error("partition does not match any coset element");
            vs.push_back(x);
            ++t;
        }
    }
    if (static_cast<int>(vs.size()) != k || next_req_index != s)
        throw std::domain_error("partition does not match any coset element");
    std::vector<int> line;
    line.reserve(static_cast<size_t>(n));
    std::sort(vs.begin(), vs.end());
    for (int x : vs) line.push_back(x);
    for (int i = 0; i < s; ++i) line.push_back(-zeta[static_cast<size_t>(i)]);
    std::sort(us.begin(), us.end());
    for (int x : us) line.push_back(x);
    return SignedPerm(std::move(line));
}

// Inverse of partition_to_perm on minimal coset representatives.
inline KStrictPartition perm_to_partition(const SignedPerm& w, int k, int n) {
    SignedPerm ww = w.widened(n);
    std::vector<int> vs, tail;
    for (int i = 1; i <= k; ++i) {
        int x = ww.of(i);
        if (x < 0) throw std::domain_error("not a minimal coset representative");
        vs.push_back(x);
    }
    for (int i = k + 1; i <= n; ++i) tail.push_back(ww.of(i));
    if (!std::is_sorted(vs.begin(), vs.end()) || !std::is_sorted(tail.begin(), tail.end()))
        throw std::domain_error("not a minimal coset representative");
    std::vector<int> parts;
    std::vector<int> us;
    for (int x : tail)
        if (x > 0) us.push_back(x);
    for (int x : tail) {
        if (x < 0)
            parts.push_back(-x + k);  // zeta block, most negative first
        else
            break;
    }
    for (int u : us) {
        int nu = 0;
        for (int v : vs)
            if (v > u) ++nu;
        parts.push_back(nu);
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    return KStrictPartition(std::move(parts), k);
}

// Positive roots that can index a reflection in types B and C. The short
// root e_i of type B and the long root 2e_i of type C share one reflection,
// so a single kind covers both.
struct Root {
    enum class Kind { EjMinusEi, EjPlusEi, Ei };
    Kind kind;
    int i = 0;  // for the two-index kinds, 1 <= i < j
    int j = 0;

    static Root diff(int i, int j) {
        if (!(1 <= i && i < j)) throw std::domain_error("diff root wants i < j");
        return Root{Kind::EjMinusEi, i, j};
    }
    static Root sum(int i, int j) {
        if (!(1 <= i && i < j)) throw std::domain_error("sum root wants i < j");
        return Root{Kind::EjPlusEi, i, j};
    }
    static Root single(int i) {
        if (i < 1) throw std::domain_error("single root wants i >= 1");
        return Root{Kind::Ei, i, 0};
    }
};

// All positive roots of rank n (types B and C have the same reflections).
inline std::vector<Root> positive_roots(int n) {
    std::vector<Root> out;
    for (int i = 1; i <= n; ++i) out.push_back(Root::single(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            out.push_back(Root::diff(i, j));
            out.push_back(Root::sum(i, j));
        }
    return out;
}

// Left multiplication by the reflection s_alpha, acting on values:
// s_{e_j - e_i} swaps i and j; s_{e_j + e_i} sends i to -j and j to -i;
// s_{e_i} negates i.
inline SignedPerm reflect_values(const Root& alpha, const SignedPerm& w) {
    int need = w.window();
    if (alpha.kind == Root::Kind::Ei)
        need = std::max(need, alpha.i);
    else
        need = std::max(need, alpha.j);
    std::vector<int> v = w.widened(need).oneline();
    auto map_value = [&alpha](int x) {
        int a = std::abs(x), sgn = x >= 0 ? 1 : -1;
        switch (alpha.kind) {
            case Root::Kind::EjMinusEi:
                if (a == alpha.i) return sgn * alpha.j;
                if (a == alpha.j) return sgn * alpha.i;
                return x;
            case Root::Kind::EjPlusEi:
                if (a == alpha.i) return -sgn * alpha.j;
                if (a == alpha.j) return -sgn * alpha.i;
                return x;
            case Root::Kind::Ei:
                if (a == alpha.i) return -x;
                return x;
        }
        return x;
    };
    for (int& x : v) x = map_value(x);
    return SignedPerm(std::move(v));
}

}  // namespace degloci
