#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <limits>
#include <map>
#include <stdexcept>
#include <vector>

#include "degloci/rational.hpp"
#include "degloci/variables.hpp"

namespace degloci {

inline constexpr int kNoCap = std::numeric_limits<int>::max() / 4;

// Exponent vector: slot 0 is the beta exponent, slots 1.. are registry slots.
struct Monomial {
    std::array<uint8_t, kMonomialSlots> e{};

    static Monomial one() { return Monomial{}; }

    static Monomial beta(unsigned k = 1) {
        Monomial m;
        m.e[0] = static_cast<uint8_t>(k);
        return m;
    }

    static Monomial of(const Var& v, unsigned k = 1) {
        Monomial m;
        m.e[var_slot(v)] = static_cast<uint8_t>(k);
        return m;
    }

    unsigned beta_exp() const { return e[0]; }

    unsigned exp_of(const Var& v) const { return e[var_slot(v)]; }

    int nonbeta_degree() const {
        int d = 0;
        for (size_t i = 1; i < kMonomialSlots; ++i) d += e[i];
        return d;
    }

    // Grading of the coefficient ring: beta has degree -1.
    int graded_degree() const { return nonbeta_degree() - static_cast<int>(e[0]); }

    Monomial times(const Monomial& o) const {
        Monomial r;
        for (size_t i = 0; i < kMonomialSlots; ++i) {
            unsigned s = unsigned(e[i]) + unsigned(o.e[i]);
            if (s > 255) throw std::overflow_error("monomial exponent overflow");
            r.e[i] = static_cast<uint8_t>(s);
        }
        return r;
    }

    bool divisible_by(const Monomial& o) const {
        for (size_t i = 0; i < kMonomialSlots; ++i)
            if (e[i] < o.e[i]) return false;
        return true;
    }

    Monomial divided_by(const Monomial& o) const {
        Monomial r;
        for (size_t i = 0; i < kMonomialSlots; ++i) r.e[i] = static_cast<uint8_t>(e[i] - o.e[i]);
        return r;
    }

    friend bool operator==(const Monomial& l, const Monomial& r) {
        return std::memcmp(l.e.data(), r.e.data(), kMonomialSlots) == 0;
    }

    uint64_t hash() const {
        uint64_t w[4];
        std::memcpy(w, e.data(), sizeof w);
        uint64_t h = 0x9e3779b97f4a7c15ull;
        for (uint64_t x : w) {
            x *= 0xbf58476d1ce4e5b9ull;
            x ^= x >> 31;
            h = (h ^ x) * 0x94d049bb133111ebull;
        }
        return h ^ (h >> 29);
    }
};

// Graded-lex style total order: non-beta degree first, then raw exponent
// bytes (beta slot included). Multiplicative, with 1 minimal.
inline int mono_cmp(const Monomial& l, const Monomial& r) {
    int dl = l.nonbeta_degree(), dr = r.nonbeta_degree();
    if (dl != dr) return dl < dr ? -1 : 1;
    return std::memcmp(l.e.data(), r.e.data(), kMonomialSlots);
}

struct Term {
    Monomial m;
    Rat c;
};

namespace detail {

// Open-addressing accumulator for polynomial products.
class MonoAccum {
  public:
    explicit MonoAccum(size_t expect) {
        size_t cap = 64;
        while (cap < expect * 2) cap <<= 1;
        buckets_.resize(cap);
    }

    void add(const Monomial& m, const Rat& c) {
        if (size_ * 10 >= buckets_.size() * 7) grow();
        size_t mask = buckets_.size() - 1;
        size_t i = m.hash() & mask;
        while (true) {
            Bucket& b = buckets_[i];
            if (!b.used) {
                b.used = true;
                b.m = m;
                b.c = c;
                ++size_;
                return;
            }
            if (b.m == m) {
                b.c += c;
                return;
            }
            i = (i + 1) & mask;
        }
    }

    std::vector<Term> take_sorted() {
        std::vector<Term> out;
        out.reserve(size_);
        for (Bucket& b : buckets_)
            if (b.used && !is_zero(b.c)) out.push_back({b.m, std::move(b.c)});
        std::sort(out.begin(), out.end(),
                  [](const Term& l, const Term& r) { return mono_cmp(l.m, r.m) < 0; });
        return out;
    }

  private:
    struct Bucket {
        Monomial m;
        Rat c;
        bool used = false;
    };

    void grow() {
        std::vector<Bucket> old = std::move(buckets_);
        buckets_.assign(old.size() * 2, Bucket{});
        size_t mask = buckets_.size() - 1;
        for (Bucket& b : old) {
            if (!b.used) continue;
            size_t i = b.m.hash() & mask;
            while (buckets_[i].used) i = (i + 1) & mask;
            buckets_[i] = std::move(b);
        }
    }

    std::vector<Bucket> buckets_;
    size_t size_ = 0;
};

}  // namespace detail

// Exact multivariate polynomial over Q in beta and the registered variables.
// Terms are kept sorted by (non-beta degree, exponent bytes), coefficients
// nonzero. Beta carries degree -1, every other variable degree +1.
class GradedPoly {
  public:
    GradedPoly() = default;

    static GradedPoly zero() { return GradedPoly(); }

    static GradedPoly constant(Rat c) {
        GradedPoly p;
        if (!is_zero(c)) p.terms_.push_back({Monomial::one(), std::move(c)});
        return p;
    }

    static GradedPoly one() { return constant(Rat(1)); }

    static GradedPoly monomial(const Monomial& m, Rat c) {
        GradedPoly p;
        if (!is_zero(c)) p.terms_.push_back({m, std::move(c)});
        return p;
    }

    static GradedPoly variable(const Var& v) { return monomial(Monomial::of(v), Rat(1)); }

    static GradedPoly beta(unsigned k = 1, Rat c = Rat(1)) {
        return monomial(Monomial::beta(k), std::move(c));
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].m == Monomial::one());
    }

    Rat constant_term() const {
        for (const Term& t : terms_)
            if (t.m == Monomial::one()) return t.c;
        return Rat(0);
    }

    Rat coeff_of(const Monomial& m) const {
        for (const Term& t : terms_)
            if (t.m == m) return t.c;
        return Rat(0);
    }

    int min_nonbeta_degree() const {
        return terms_.empty() ? 0 : terms_.front().m.nonbeta_degree();
    }

    int max_nonbeta_degree() const {
        return terms_.empty() ? 0 : terms_.back().m.nonbeta_degree();
    }

    bool is_homogeneous(int* degree_out = nullptr) const {
        if (terms_.empty()) return true;
        int g = terms_[0].m.graded_degree();
        for (const Term& t : terms_)
            if (t.m.graded_degree() != g) return false;
        if (degree_out) *degree_out = g;
        return true;
    }

    GradedPoly homogeneous_part(int graded_degree) const {
        GradedPoly p;
        for (const Term& t : terms_)
            if (t.m.graded_degree() == graded_degree) p.terms_.push_back(t);
        return p;
    }

    GradedPoly truncated(int cap) const {
        if (cap >= kNoCap || terms_.empty() || terms_.back().m.nonbeta_degree() <= cap)
            return *this;
        GradedPoly p;
        for (const Term& t : terms_) {
            if (t.m.nonbeta_degree() > cap) break;
            p.terms_.push_back(t);
        }
        return p;
    }

    friend bool operator==(const GradedPoly& l, const GradedPoly& r) {
        if (l.terms_.size() != r.terms_.size()) return false;
        for (size_t i = 0; i < l.terms_.size(); ++i)
            if (!(l.terms_[i].m == r.terms_[i].m) || l.terms_[i].c != r.terms_[i].c)
                return false;
        return true;
    }

    GradedPoly& operator+=(const GradedPoly& o) {
        *this = add(*this, o, Rat(1));
        return *this;
    }

    GradedPoly& operator-=(const GradedPoly& o) {
        *this = add(*this, o, Rat(-1));
        return *this;
    }

    friend GradedPoly operator+(const GradedPoly& l, const GradedPoly& r) {
        return add(l, r, Rat(1));
    }

    friend GradedPoly operator-(const GradedPoly& l, const GradedPoly& r) {
        return add(l, r, Rat(-1));
    }

    GradedPoly operator-() const {
        GradedPoly p = *this;
        for (Term& t : p.terms_) t.c = -t.c;
        return p;
    }

    GradedPoly scaled(const Rat& s) const {
        if (is_zero(s)) return GradedPoly();
        GradedPoly p = *this;
        for (Term& t : p.terms_) t.c *= s;
        return p;
    }

    GradedPoly times_monomial(const Monomial& m, const Rat& c) const {
        if (is_zero(c)) return GradedPoly();
        GradedPoly p;
        p.terms_.reserve(terms_.size());
        // Multiplying by a fixed monomial preserves the term order.
        for (const Term& t : terms_) p.terms_.push_back({t.m.times(m), t.c * c});
        return p;
    }

    // Truncated product: exact modulo non-beta degree > cap. Degree-sorted
    // storage makes the inner loop break as soon as the cap is exceeded.
    static GradedPoly mul(const GradedPoly& a, const GradedPoly& b, int cap = kNoCap) {
        if (a.empty() || b.empty()) return GradedPoly();
        if (a.size() == 1) return b.times_monomial(a.terms_[0].m, a.terms_[0].c).truncated(cap);
        if (b.size() == 1) return a.times_monomial(b.terms_[0].m, b.terms_[0].c).truncated(cap);
        const GradedPoly& small = a.size() <= b.size() ? a : b;
        const GradedPoly& big = a.size() <= b.size() ? b : a;
        detail::MonoAccum acc(big.size() * 2);
        int big_min = big.min_nonbeta_degree();
        for (const Term& ta : small.terms_) {
            int da = ta.m.nonbeta_degree();
            if (da + big_min > cap) break;
            for (const Term& tb : big.terms_) {
                if (da + tb.m.nonbeta_degree() > cap) break;
                acc.add(ta.m.times(tb.m), ta.c * tb.c);
            }
        }
        GradedPoly p;
        p.terms_ = acc.take_sorted();
        return p;
    }

    friend GradedPoly operator*(const GradedPoly& l, const GradedPoly& r) {
        return mul(l, r);
    }

    static GradedPoly pow(const GradedPoly& base, unsigned k, int cap = kNoCap) {
        GradedPoly acc = one();
        GradedPoly sq = base;
        while (k > 0) {
            if (k & 1) acc = mul(acc, sq, cap);
            k >>= 1;
            if (k > 0) sq = mul(sq, sq, cap);
        }
        return acc;
    }

    // beta := 0 slice (the Chow-ring specialization).
    GradedPoly beta_zero() const {
        GradedPoly p;
        for (const Term& t : terms_)
            if (t.m.beta_exp() == 0) p.terms_.push_back(t);
        return p;
    }

    // beta := -1 slice (the K-theory specialization).
    GradedPoly beta_minus_one() const {
        detail::MonoAccum acc(terms_.size());
        for (const Term& t : terms_) {
            Monomial m = t.m;
            unsigned e = m.e[0];
            m.e[0] = 0;
            acc.add(m, (e % 2 == 0) ? t.c : -t.c);
        }
        GradedPoly p;
        p.terms_ = acc.take_sorted();
        return p;
    }

    template <typename Fn>  // Fn: const Var& -> const GradedPoly* (null = keep)
    GradedPoly substituted(Fn&& value_of, int cap = kNoCap) const {
        std::map<std::pair<uint8_t, unsigned>, GradedPoly> powers;
        GradedPoly out;
        for (const Term& t : terms_) {
            Monomial residual = Monomial::beta(t.m.beta_exp());
            GradedPoly factor = GradedPoly::one();
            bool dead = false;
            for (size_t slot = 1; slot < kMonomialSlots && !dead; ++slot) {
                unsigned e = t.m.e[slot];
                if (e == 0) continue;
                Var v = slot_var(static_cast<uint8_t>(slot));
                const GradedPoly* val = value_of(v);
                if (val == nullptr) {
                    residual.e[slot] = static_cast<uint8_t>(e);
                    continue;
                }
                if (val->empty()) {
                    dead = true;
                    break;
                }
                auto key = std::make_pair(static_cast<uint8_t>(slot), e);
                auto it = powers.find(key);
                if (it == powers.end())
                    it = powers.emplace(key, pow(*val, e, cap)).first;
                factor = mul(factor, it->second, cap);
            }
            if (dead) continue;
            out += factor.times_monomial(residual, t.c).truncated(cap);
        }
        return out;
    }

    static GradedPoly from_terms(std::vector<Term> terms) {
        detail::MonoAccum acc(terms.size());
        for (Term& t : terms) acc.add(t.m, std::move(t.c));
        GradedPoly p;
        p.terms_ = acc.take_sorted();
        return p;
    }

  private:
    static GradedPoly add(const GradedPoly& l, const GradedPoly& r, const Rat& rs) {
        GradedPoly p;
        p.terms_.reserve(l.terms_.size() + r.terms_.size());
        size_t i = 0, j = 0;
        while (i < l.terms_.size() && j < r.terms_.size()) {
            int c = mono_cmp(l.terms_[i].m, r.terms_[j].m);
            if (c < 0) {
                p.terms_.push_back(l.terms_[i++]);
            } else if (c > 0) {
                Term t = r.terms_[j++];
                t.c *= rs;
                if (!is_zero(t.c)) p.terms_.push_back(std::move(t));
            } else {
                Rat c2 = l.terms_[i].c + r.terms_[j].c * rs;
                if (!is_zero(c2)) p.terms_.push_back({l.terms_[i].m, std::move(c2)});
                ++i;
                ++j;
            }
        }
        for (; i < l.terms_.size(); ++i) p.terms_.push_back(l.terms_[i]);
        for (; j < r.terms_.size(); ++j) {
            Term t = r.terms_[j];
            t.c *= rs;
            if (!is_zero(t.c)) p.terms_.push_back(std::move(t));
        }
        return p;
    }

    std::vector<Term> terms_;
};

// Exact division in the polynomial ring; throws if the division is inexact
// (which in this codebase always signals a formula bug upstream).
inline GradedPoly exact_divide(const GradedPoly& num, const GradedPoly& den) {
    if (den.empty()) throw std::domain_error("division by zero polynomial");
    if (num.empty()) return GradedPoly();
    struct Desc {
        bool operator()(const Monomial& l, const Monomial& r) const {
            return mono_cmp(l, r) > 0;
        }
    };
    std::map<Monomial, Rat, Desc> rem;
    for (const Term& t : num.terms()) rem.emplace(t.m, t.c);
    const Term& lead = den.terms().back();
    std::vector<Term> quot;
    while (!rem.empty()) {
        auto it = rem.begin();
        if (!it->first.divisible_by(lead.m))
            throw std::domain_error("inexact polynomial division");
        Monomial qm = it->first.divided_by(lead.m);
        Rat qc = it->second / lead.c;
        quot.push_back({qm, qc});
        for (const Term& dt : den.terms()) {
            Monomial m = dt.m.times(qm);
            Rat delta = dt.c * qc;
            auto jt = rem.find(m);
            if (jt == rem.end()) {
                rem.emplace(m, -delta);
            } else {
                jt->second -= delta;
                if (is_zero(jt->second)) rem.erase(jt);
            }
        }
    }
    return GradedPoly::from_terms(std::move(quot));
}

}  // namespace degloci
