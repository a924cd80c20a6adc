#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "degloci/poly.hpp"

namespace degloci {

// 1/p for a unit p = c0 + q where every term of q has non-beta degree >= 1,
// so the geometric series terminates under the cap. A unit whose remainder
// has a degree-0 term (like 1 + beta alone) is rejected: its inverse is not
// polynomial even after truncation.
inline GradedPoly inverse_unit(const GradedPoly& p, int cap) {
    if (cap >= kNoCap) throw std::domain_error("inverse_unit requires a finite cap");
    Rat c0 = p.constant_term();
    if (is_zero(c0)) throw std::domain_error("inverse of non-unit");
    GradedPoly q = (p - GradedPoly::constant(c0)).scaled(Rat(1) / c0);
    if (!q.empty() && q.min_nonbeta_degree() < 1)
        throw std::domain_error("unit remainder has a degree-0 term");
    q = q.truncated(cap);
    GradedPoly acc = GradedPoly::one();
    if (!q.empty()) {
        int step = q.min_nonbeta_degree();
        GradedPoly pw = GradedPoly::one();
        for (int s = 1; s * step <= cap; ++s) {
            pw = GradedPoly::mul(pw, q, cap);
            if (pw.empty()) break;
            acc += (s % 2 == 0) ? pw : -pw;
        }
    }
    return acc.scaled(Rat(1) / c0);
}

// (1 + q)^m for integer m of either sign, q with min non-beta degree >= 1.
inline GradedPoly unit_binom_pow(const GradedPoly& q, long m, int cap) {
    if (cap >= kNoCap) throw std::domain_error("unit_binom_pow requires a finite cap");
    if (!q.empty() && q.min_nonbeta_degree() < 1)
        throw std::domain_error("binomial power base must have positive degree");
    GradedPoly qc = q.truncated(cap);
    GradedPoly acc = GradedPoly::one();
    if (qc.empty()) return acc;
    int step = qc.min_nonbeta_degree();
    GradedPoly pw = GradedPoly::one();
    for (long s = 1; s * step <= cap; ++s) {
        pw = GradedPoly::mul(pw, qc, cap);
        if (pw.empty()) break;
        Rat b = binom(Rat(m), s);
        if (!is_zero(b)) acc += pw.scaled(b);
    }
    return acc;
}

// Formal group law of connective K-theory: u (+) v = u + v + beta u v.
inline GradedPoly ck_oplus(const GradedPoly& a, const GradedPoly& b, int cap = kNoCap) {
    GradedPoly s = (a + b).truncated(cap);
    return s + GradedPoly::mul(GradedPoly::mul(a, b, cap), GradedPoly::beta(), cap);
}

// Formal inverse: bar u = -u / (1 + beta u).
inline GradedPoly ck_bar(const GradedPoly& a, int cap) {
    if (a.empty()) return a;
    if (a.min_nonbeta_degree() < 1)
        throw std::domain_error("ck_bar needs a positive-degree argument");
    GradedPoly den = GradedPoly::one() + GradedPoly::mul(GradedPoly::beta(), a, cap);
    return GradedPoly::mul(-a, inverse_unit(den, cap), cap);
}

// u (-) v = (u - v) / (1 + beta v); equals u (+) bar v.
inline GradedPoly ck_ominus(const GradedPoly& a, const GradedPoly& b, int cap) {
    if (!b.empty() && b.min_nonbeta_degree() < 1)
        throw std::domain_error("ck_ominus needs a positive-degree subtrahend");
    GradedPoly den = GradedPoly::one() + GradedPoly::mul(GradedPoly::beta(), b, cap);
    return GradedPoly::mul((a - b).truncated(cap), inverse_unit(den, cap), cap);
}

// Power series in one distinguished formal variable u, truncated at u^ucap,
// with every coefficient an exact GradedPoly truncated at non-beta degree
// poly_cap. The series variable is not registered; it exists only as the
// index of the coefficient vector.
class TruncSeries {
  public:
    TruncSeries(int ucap, int poly_cap)
        : c_(static_cast<size_t>(ucap) + 1), poly_cap_(poly_cap) {
        if (ucap < 0) throw std::domain_error("negative series order");
    }

    static TruncSeries zero(int ucap, int poly_cap) { return TruncSeries(ucap, poly_cap); }

    static TruncSeries one(int ucap, int poly_cap) {
        TruncSeries s(ucap, poly_cap);
        s.c_[0] = GradedPoly::one();
        return s;
    }

    static TruncSeries from_coeffs(std::vector<GradedPoly> coeffs, int ucap, int poly_cap) {
        TruncSeries s(ucap, poly_cap);
        for (size_t j = 0; j < coeffs.size() && j <= static_cast<size_t>(ucap); ++j)
            s.c_[j] = coeffs[j].truncated(poly_cap);
        return s;
    }

    // 1 + p u.
    static TruncSeries linear(const GradedPoly& p, int ucap, int poly_cap) {
        TruncSeries s = one(ucap, poly_cap);
        if (ucap >= 1) s.c_[1] = p.truncated(poly_cap);
        return s;
    }

    // 1 / (1 - p u) = sum_j p^j u^j.
    static TruncSeries geometric(const GradedPoly& p, int ucap, int poly_cap) {
        TruncSeries s(ucap, poly_cap);
        GradedPoly pw = GradedPoly::one();
        for (int j = 0; j <= ucap; ++j) {
            s.c_[j] = pw;
            if (j < ucap) {
                pw = GradedPoly::mul(pw, p, poly_cap);
                if (pw.empty()) break;
            }
        }
        return s;
    }

    int ucap() const { return static_cast<int>(c_.size()) - 1; }
    int poly_cap() const { return poly_cap_; }

    const GradedPoly& coeff(int j) const {
        static const GradedPoly kZero;
        if (j < 0 || j > ucap()) return kZero;
        return c_[static_cast<size_t>(j)];
    }

    void set_coeff(int j, GradedPoly p) {
        if (j < 0 || j > ucap()) throw std::domain_error("series index out of range");
        c_[static_cast<size_t>(j)] = p.truncated(poly_cap_);
    }

    bool is_zero_series() const {
        for (const GradedPoly& p : c_)
            if (!p.empty()) return false;
        return true;
    }

    friend TruncSeries operator+(const TruncSeries& l, const TruncSeries& r) {
        TruncSeries s(std::min(l.ucap(), r.ucap()), std::min(l.poly_cap_, r.poly_cap_));
        for (int j = 0; j <= s.ucap(); ++j) s.c_[j] = (l.coeff(j) + r.coeff(j)).truncated(s.poly_cap_);
        return s;
    }

    friend TruncSeries operator-(const TruncSeries& l, const TruncSeries& r) {
        TruncSeries s(std::min(l.ucap(), r.ucap()), std::min(l.poly_cap_, r.poly_cap_));
        for (int j = 0; j <= s.ucap(); ++j) s.c_[j] = (l.coeff(j) - r.coeff(j)).truncated(s.poly_cap_);
        return s;
    }

    friend TruncSeries operator*(const TruncSeries& l, const TruncSeries& r) {
        TruncSeries s(std::min(l.ucap(), r.ucap()), std::min(l.poly_cap_, r.poly_cap_));
        for (int j = 0; j <= s.ucap(); ++j) {
            GradedPoly acc;
            for (int i = 0; i <= j; ++i) {
                if (l.coeff(i).empty() || r.coeff(j - i).empty()) continue;
                acc += GradedPoly::mul(l.coeff(i), r.coeff(j - i), s.poly_cap_);
            }
            s.c_[j] = std::move(acc);
        }
        return s;
    }

    TruncSeries scaled(const GradedPoly& p) const {
        TruncSeries s(ucap(), poly_cap_);
        for (int j = 0; j <= ucap(); ++j) s.c_[j] = GradedPoly::mul(c_[j], p, poly_cap_);
        return s;
    }

    // Multiplicative inverse; the constant coefficient must itself be an
    // invertible unit in the truncated polynomial ring.
    TruncSeries inverse() const {
        TruncSeries s(ucap(), poly_cap_);
        GradedPoly b0 = inverse_unit(c_[0], poly_cap_);
        s.c_[0] = b0;
        for (int j = 1; j <= ucap(); ++j) {
            GradedPoly acc;
            for (int i = 1; i <= j; ++i) {
                if (c_[i].empty() || s.c_[j - i].empty()) continue;
                acc += GradedPoly::mul(c_[i], s.c_[j - i], poly_cap_);
            }
            s.c_[j] = GradedPoly::mul(-acc, b0, poly_cap_);
        }
        return s;
    }

  private:
    std::vector<GradedPoly> c_;
    int poly_cap_;
};

// prod_i (1 + r_i u) as a truncated series (total Chern class of a bundle
// with the given roots).
inline TruncSeries chern_series(const std::vector<GradedPoly>& roots, int ucap, int poly_cap) {
    TruncSeries s = TruncSeries::one(ucap, poly_cap);
    for (const GradedPoly& r : roots) s = s * TruncSeries::linear(r, ucap, poly_cap);
    return s;
}

}  // namespace degloci
