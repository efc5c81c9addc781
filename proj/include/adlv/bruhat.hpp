#pragma once

#include <numeric>

#include "adlv/weyl.hpp"

namespace adlv {

// ---------------------------------------------------------------------------
// Bruhat order on W~. Elements compare only within a common W_a tau^k coset;
// on W_a-parts this is the Coxeter Bruhat order, computed by the lifting
// property: for s a left descent of w', w <= w' iff min(w, sw) <= sw'.
// ---------------------------------------------------------------------------

inline bool bruhat_leq(const AffElt& w, const AffElt& wp) {
    if (w.n() != wp.n())
        throw std::invalid_argument("bruhat_leq: size mismatch");
    if (kappa(w) != kappa(wp))
        return false;
    int n = w.n();
    auto& cache = cache_for(n);

    std::function<bool(const AffElt&, const AffElt&, int, int)> rec =
        [&](const AffElt& a, const AffElt& b, int la, int lb) -> bool {
        if (la > lb)
            return false;
        if (lb == 0)
            return a == b;  // both are the same length-0 element of the coset
        if (la == lb)
            return a == b;
        EltKey key(a, b);
        {
            std::shared_lock<std::shared_mutex> lock(cache.bruhat_mtx);
            auto it = cache.bruhat.find(key);
            if (it != cache.bruhat.end())
                return it->second;
        }
        // pick a left descent s of b
        int s = -1;
        AffElt sb = AffElt::identity(n);
        int lsb = 0;
        for (int i = 0; i < n; ++i) {
            AffElt cand = simple(n, i) * b;
            int lc = length(cand);
            if (lc < lb) {
                s = i;
                sb = std::move(cand);
                lsb = lc;
                break;
            }
        }
        if (s < 0)
            throw std::logic_error("bruhat_leq: positive-length element with no descent");
        AffElt sa = simple(n, s) * a;
        int lsa = length(sa);
        bool res = (lsa < la) ? rec(sa, sb, lsa, lsb) : rec(a, sb, la, lsb);
        {
            std::unique_lock<std::shared_mutex> lock(cache.bruhat_mtx);
            cache.bruhat.emplace(key, res);
        }
        return res;
    };
    return rec(w, wp, length(w), length(wp));
}

// ---------------------------------------------------------------------------
// Minimal coset representatives for W_0 \ W~. The coset of t^lam has the
// unique minimal element y t^lam where y sorts lam weakly decreasing, ties
// kept in position order (equivalently <alpha, y lam> >= delta^+(-y^{-1}alpha)
// for all alpha > 0).
// ---------------------------------------------------------------------------

inline Perm sorting_perm(const Coch& lam) {
    int n = static_cast<int>(lam.size());
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return lam[a] > lam[b]; });
    // idx = y^{-1} in one-line notation; return y
    std::vector<int> y(n);
    for (int a = 0; a < n; ++a)
        y[idx[a]] = a;
    return Perm(std::move(y));
}

inline AffElt min_coset_rep(const Coch& lam) {
    AffElt w(sorting_perm(lam), lam);
#ifndef NDEBUG
    int lw = length(w);
    for (int i = 1; i < w.n(); ++i)
        assert(length(simple(w.n(), i) * w) > lw);
#endif
    return w;
}

inline bool is_min_coset_rep(const AffElt& w) {
    int lw = length(w);
    for (int i = 1; i < w.n(); ++i)
        if (length(simple(w.n(), i) * w) < lw)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Admissible sets.
// ---------------------------------------------------------------------------

struct AdmissibleSet {
    enum class Flavor { full, minimal_rep };
    int n = 0;
    Coch mu;
    Flavor flavor = Flavor::minimal_rep;
    std::vector<AffElt> elements;  // sorted by (length, word, kappa)
};

inline void sort_elements(std::vector<AffElt>& v) {
    std::sort(v.begin(), v.end(), [](const AffElt& a, const AffElt& b) {
        int la = length(a), lb = length(b);
        if (la != lb)
            return la < lb;
        auto wa = reduced_word(a), wb = reduced_word(b);
        if (wa != wb)
            return wa < wb;
        return kappa(a) < kappa(b);
    });
}

// all lam with dominize(lam) <= mu, grouped by orbit
template <typename F>
inline void for_each_candidate_lam(const Coch& mu, F&& f) {
    for (const Coch& nu : dominant_below(mu)) {
        Coch lam = nu;
        std::sort(lam.begin(), lam.end());  // ascending start for next_permutation
        do {
            f(lam);
        } while (std::next_permutation(lam.begin(), lam.end()));
    }
}

// translations t^{w_0 mu} over the W_0-orbit of mu (the maximal elements)
inline std::vector<AffElt> adm_maximal_elements(const Coch& mu) {
    std::vector<AffElt> out;
    Coch lam = mu;
    std::sort(lam.begin(), lam.end());
    do {
        out.push_back(AffElt::translation(lam));
    } while (std::next_permutation(lam.begin(), lam.end()));
    return out;
}

inline bool adm_contains(const AffElt& w, const Coch& mu) {
    if (kappa(w) != coord_sum(mu))
        return false;
    if (!dominance_leq(dominize(w.lam), mu))
        return false;
    for (const AffElt& m : adm_maximal_elements(mu))
        if (bruhat_leq(w, m))
            return true;
    return false;
}

// SAdm(mu) = Adm(mu) /\ minimal coset representatives. A candidate rep w with
// dominize(lam) <= mu satisfies w <= t^lam, and Adm(dominize lam) sits inside
// Adm(mu), so the Bruhat filter never rejects; the literal filter stays
// available behind a flag.
inline AdmissibleSet sadm(const Coch& mu, bool literal_filter = false) {
    if (!is_dominant(mu))
        throw std::invalid_argument("sadm: mu must be dominant");
    AdmissibleSet out;
    out.n = static_cast<int>(mu.size());
    out.mu = mu;
    out.flavor = AdmissibleSet::Flavor::minimal_rep;
    for_each_candidate_lam(mu, [&](const Coch& lam) {
        AffElt w = min_coset_rep(lam);
        if (literal_filter && !adm_contains(w, mu))
            return;
        out.elements.push_back(std::move(w));
    });
    sort_elements(out.elements);
    return out;
}

// full Adm(mu): downward Bruhat closure of the maximal elements, computed by
// filtering candidates (u, lam) with dominize(lam) <= mu
inline AdmissibleSet adm(const Coch& mu) {
    if (!is_dominant(mu))
        throw std::invalid_argument("adm: mu must be dominant");
    int n = static_cast<int>(mu.size());
    AdmissibleSet out;
    out.n = n;
    out.mu = mu;
    out.flavor = AdmissibleSet::Flavor::full;
    auto maximals = adm_maximal_elements(mu);
    std::vector<Perm> w0;
    {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 0);
        do {
            w0.push_back(Perm(img));
        } while (std::next_permutation(img.begin(), img.end()));
    }
    for_each_candidate_lam(mu, [&](const Coch& lam) {
        for (const Perm& u : w0) {
            AffElt w(u, lam);
            for (const AffElt& m : maximals) {
                if (bruhat_leq(w, m)) {
                    out.elements.push_back(w);
                    break;
                }
            }
        }
    });
    sort_elements(out.elements);
    return out;
}

}  // namespace adlv
