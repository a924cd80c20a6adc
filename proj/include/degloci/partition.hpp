#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace degloci {

using PairSet = std::vector<std::pair<int, int>>;  // 1-based (i, j) with i < j

// Partition that is k-strict: parts greater than k are strictly decreasing.
// k = 0 gives strict partitions, large k gives arbitrary partitions.
class KStrictPartition {
  public:
    KStrictPartition(std::vector<int> parts, int k) : parts_(std::move(parts)), k_(k) {
        if (k_ < 0) throw std::domain_error("negative k");
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::domain_error("parts must be positive");
            if (i + 1 < parts_.size()) {
                if (parts_[i] < parts_[i + 1]) throw std::domain_error("parts must decrease");
                if (parts_[i] > k_ && parts_[i] == parts_[i + 1])
                    throw std::domain_error("parts above k must be strict");
            }
        }
    }

    int k() const { return k_; }
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }

    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // 1-based part access, 0 beyond the length.
    int part(int i) const {
        if (i < 1) throw std::domain_error("part index is 1-based");
        return i <= length() ? parts_[static_cast<size_t>(i) - 1] : 0;
    }

    // (i, j) lies in the pair set C(lambda) when the parts interlock:
    // lambda_i + lambda_j > 2k + j - i. Defined for 1 <= i < j.
    bool in_C(int i, int j) const {
        if (!(1 <= i && i < j)) throw std::domain_error("in_C wants i < j");
        return part(i) + part(j) > 2 * k_ + j - i;
    }

    // gamma_j = #{i < j : (i, j) in C(lambda)}.
    int gamma(int j) const {
        int g = 0;
        for (int i = 1; i < j; ++i)
            if (in_C(i, j)) ++g;
        return g;
    }

    // Characteristic index chi_j = #{i < j : (i,j) in C} + lambda_j - k - j.
    int chi(int j) const { return gamma(j) + part(j) - k_ - j; }

    PairSet c_pairs(int r) const {
        PairSet s;
        for (int i = 1; i < r; ++i)
            for (int j = i + 1; j <= r; ++j)
                if (in_C(i, j)) s.emplace_back(i, j);
        return s;
    }

    PairSet d_pairs(int r) const {
        PairSet s;
        for (int i = 1; i < r; ++i)
            for (int j = i + 1; j <= r; ++j)
                if (!in_C(i, j)) s.emplace_back(i, j);
        return s;
    }

    // Membership in SP^k(n): at most n - k parts, each at most n + k.
    bool fits(int n) const {
        return length() <= n - k_ && (parts_.empty() || parts_[0] <= n + k_);
    }

    friend bool operator==(const KStrictPartition& l, const KStrictPartition& r) {
        return l.k_ == r.k_ && l.parts_ == r.parts_;
    }

  private:
    std::vector<int> parts_;
    int k_;
};

namespace detail {

inline void gen_kstrict(int k, int max_part, int max_len, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
    out.push_back(cur);
    if (static_cast<int>(cur.size()) >= max_len) return;
    int hi = cur.empty() ? max_part : cur.back();
    for (int p = hi; p >= 1; --p) {
        if (!cur.empty() && cur.back() > k && p == cur.back()) continue;
        cur.push_back(p);
        gen_kstrict(k, max_part, max_len, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

// All of SP^k(n), largest-weight last; includes the empty partition.
inline std::vector<KStrictPartition> enumerate_spk(int n, int k) {
    if (k > n) throw std::domain_error("need k <= n");
    std::vector<std::vector<int>> raw;
    std::vector<int> cur;
    detail::gen_kstrict(k, n + k, n - k, cur, raw);
    std::vector<KStrictPartition> out;
    out.reserve(raw.size());
    for (auto& p : raw) out.emplace_back(std::move(p), k);
    std::sort(out.begin(), out.end(), [](const KStrictPartition& l, const KStrictPartition& r) {
        if (l.weight() != r.weight()) return l.weight() < r.weight();
        return l.parts() < r.parts();
    });
    return out;
}

// Ordinary partitions contained in a rows x cols box, empty one included.
inline std::vector<std::vector<int>> enumerate_partitions_in_box(int rows, int cols) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    struct Rec {
        int rows, cols;
        std::vector<std::vector<int>>& out;
        void go(std::vector<int>& c) {
            out.push_back(c);
            if (static_cast<int>(c.size()) >= rows) return;
            int hi = c.empty() ? cols : c.back();
            for (int p = hi; p >= 1; --p) {
                c.push_back(p);
                go(c);
                c.pop_back();
            }
        }
    } rec{rows, cols, out};
    rec.go(cur);
    std::sort(out.begin(), out.end(), [](const std::vector<int>& l, const std::vector<int>& r) {
        int wl = std::accumulate(l.begin(), l.end(), 0);
        int wr = std::accumulate(r.begin(), r.end(), 0);
        if (wl != wr) return wl < wr;
        return l < r;
    });
    return out;
}

// Row/column counts of a pair subset: a_i = #{j : (i,j) in I},
// c_i = #{j : (j,i) in I}, d_i = a_i - c_i.
struct SubsetData {
    std::vector<int> a, c, d;  // 1-based via index i-1, size r

    SubsetData(const PairSet& I, int r)
        : a(static_cast<size_t>(r), 0), c(static_cast<size_t>(r), 0), d(static_cast<size_t>(r), 0) {
        for (auto [i, j] : I) {
            if (!(1 <= i && i < j && j <= r)) throw std::domain_error("pair outside range");
            ++a[static_cast<size_t>(i) - 1];
            ++c[static_cast<size_t>(j) - 1];
        }
        for (int i = 0; i < r; ++i) d[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] - c[static_cast<size_t>(i)];
    }

    int a_of(int i) const { return a[static_cast<size_t>(i) - 1]; }
    int c_of(int i) const { return c[static_cast<size_t>(i) - 1]; }
    int d_of(int i) const { return d[static_cast<size_t>(i) - 1]; }
};

// Every subset of `base`, the empty set first, then in binary counter order.
inline std::vector<PairSet> enumerate_subsets(const PairSet& base) {
    if (base.size() > 20) throw std::domain_error("subset base too large");
    std::vector<PairSet> out;
    size_t n = base.size();
    out.reserve(size_t(1) << n);
    for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
        PairSet s;
        for (size_t b = 0; b < n; ++b)
            if (mask & (size_t(1) << b)) s.push_back(base[b]);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace degloci
