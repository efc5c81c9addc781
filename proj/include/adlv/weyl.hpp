#pragma once

#include <cassert>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "adlv/roots.hpp"

namespace adlv {

// ---------------------------------------------------------------------------
// Finite Weyl group W_0 = S_n, one-line notation, 0-based images.
// ---------------------------------------------------------------------------

struct Perm {
    std::vector<int> img;  // img[i] = image of i

    Perm() = default;
    explicit Perm(std::vector<int> v) : img(std::move(v)) {}

    static Perm identity(int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i)
            v[i] = i;
        return Perm(std::move(v));
    }

    // transposition of positions a, b (0-based)
    static Perm transposition(int n, int a, int b) {
        Perm p = identity(n);
        std::swap(p.img[a], p.img[b]);
        return p;
    }

    int n() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[i]; }

    bool is_identity() const {
        for (int i = 0; i < n(); ++i)
            if (img[i] != i)
                return false;
        return true;
    }

    Perm inverse() const {
        std::vector<int> v(img.size());
        for (int i = 0; i < n(); ++i)
            v[img[i]] = i;
        return Perm(std::move(v));
    }

    // (a*b)(i) = a(b(i))
    friend Perm operator*(const Perm& a, const Perm& b) {
        std::vector<int> v(a.img.size());
        for (size_t i = 0; i < v.size(); ++i)
            v[i] = a.img[b.img[i]];
        return Perm(std::move(v));
    }

    // action on cocharacters: (u.lam)_{u(i)} = lam_i
    Coch act(const Coch& lam) const {
        Coch out(lam.size());
        for (int i = 0; i < n(); ++i)
            out[img[i]] = lam[i];
        return out;
    }

    Root act(const Root& a) const { return Root{img[a.i], img[a.j]}; }

    int length() const {  // inversion count
        int c = 0;
        for (int i = 0; i < n(); ++i)
            for (int j = i + 1; j < n(); ++j)
                if (img[i] > img[j])
                    ++c;
        return c;
    }

    // finite support: s_k (k = 1..n-1) occurs in a reduced word of u
    // iff u does not stabilize {0,...,k-1}
    std::set<int> support() const {
        std::set<int> out;
        int maxseen = -1;
        for (int i = 0; i + 1 < n(); ++i) {
            maxseen = std::max(maxseen, img[i]);
            if (maxseen > i)
                out.insert(i + 1);
        }
        return out;
    }

    // cycles as sorted index lists, for invariant-subset enumeration
    std::vector<std::vector<int>> cycles() const {
        std::vector<char> seen(img.size(), 0);
        std::vector<std::vector<int>> out;
        for (int i = 0; i < n(); ++i) {
            if (seen[i])
                continue;
            std::vector<int> cyc;
            for (int j = i; !seen[j]; j = img[j]) {
                seen[j] = 1;
                cyc.push_back(j);
            }
            std::sort(cyc.begin(), cyc.end());
            out.push_back(std::move(cyc));
        }
        return out;
    }

    int order() const {
        Perm p = *this;
        int d = 1;
        while (!p.is_identity()) {
            p = p * (*this);
            ++d;
        }
        return d;
    }

    friend bool operator==(const Perm& a, const Perm& b) { return a.img == b.img; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
    friend bool operator<(const Perm& a, const Perm& b) { return a.img < b.img; }
};

// ---------------------------------------------------------------------------
// Extended affine Weyl group W~ = W_0 x Z^n, elements w = u . t^lam.
// Multiplication: (u t^lam)(u' t^lam') = (u u') t^{u'^{-1} lam + lam'}.
// ---------------------------------------------------------------------------

struct AffElt {
    Perm u;
    Coch lam;

    AffElt() = default;
    AffElt(Perm u_, Coch lam_) : u(std::move(u_)), lam(std::move(lam_)) {
        if (u.n() != static_cast<int>(lam.size()))
            throw std::invalid_argument("AffElt: size mismatch");
    }

    int n() const { return u.n(); }

    static AffElt identity(int n) { return AffElt(Perm::identity(n), Coch(n, 0)); }
    static AffElt translation(const Coch& lam) { return AffElt(Perm::identity(static_cast<int>(lam.size())), lam); }

    friend AffElt operator*(const AffElt& a, const AffElt& b) {
        if (a.n() != b.n())
            throw std::invalid_argument("AffElt: size mismatch");
        Coch lam = b.u.inverse().act(a.lam);
        for (int i = 0; i < a.n(); ++i)
            lam[i] += b.lam[i];
        return AffElt(a.u * b.u, std::move(lam));
    }

    AffElt inverse() const {
        Coch l = u.act(lam);
        for (auto& x : l)
            x = -x;
        return AffElt(u.inverse(), std::move(l));
    }

    friend bool operator==(const AffElt& a, const AffElt& b) { return a.u == b.u && a.lam == b.lam; }
    friend bool operator!=(const AffElt& a, const AffElt& b) { return !(a == b); }
    friend bool operator<(const AffElt& a, const AffElt& b) {
        if (a.u != b.u)
            return a.u < b.u;
        return a.lam < b.lam;
    }
};

// kappa: W~ -> Z, group homomorphism; W_a = ker kappa
inline int kappa(const AffElt& w) { return coord_sum(w.lam); }

// length of u t^lam over the affine simple reflections:
//   sum over alpha>0 of |<alpha,lam>+1| (u alpha < 0) or |<alpha,lam>| (u alpha > 0)
inline int length(const AffElt& w) {
    int n = w.n(), len = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            int d = w.lam[i] - w.lam[j];
            if (w.u.img[i] > w.u.img[j])
                d += 1;
            len += d < 0 ? -d : d;
        }
    return len;
}

// simple affine reflections: index 1..n-1 finite, index 0 is t^{chi_{1n}^vee}(1 n)
inline AffElt simple(int n, int i) {
    if (i < 0 || i >= n)
        throw std::invalid_argument("simple: index out of range");
    if (i == 0) {
        if (n < 2)
            throw std::invalid_argument("simple: n too small");
        Coch lam(n, 0);
        lam[0] = -1;
        lam[n - 1] = 1;  // (1 n) t^{e_n - e_1}
        return AffElt(Perm::transposition(n, 0, n - 1), std::move(lam));
    }
    return AffElt(Perm::transposition(n, i - 1, i), Coch(n, 0));
}

// tau = u_tau t^{e_n}, u_tau the n-cycle i -> i+1; generates Omega, kappa(tau)=1
inline AffElt tau(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = (i + 1) % n;
    Coch lam(n, 0);
    lam[n - 1] = 1;
    return AffElt(Perm(std::move(v)), std::move(lam));
}

inline AffElt tau_pow(int n, int k) {
    // tau^n = t^{(1,...,1)}; reduce k and handle the central part directly
    int q = k >= 0 ? k / n : -((-k + n - 1) / n);
    int r = k - q * n;
    AffElt w = AffElt::translation(Coch(n, q));
    AffElt t = tau(n);
    for (int i = 0; i < r; ++i)
        w = w * t;
    return w;
}

// Ad(tau^k) on affine simple indices
inline int ad_tau(int n, int i, int k) {
    int r = ((i + k) % n + n) % n;
    return r;
}

inline AffElt omega_part(const AffElt& w) { return tau_pow(w.n(), kappa(w)); }
inline AffElt wa_part(const AffElt& w) { return w * tau_pow(w.n(), -kappa(w)); }

// ---------------------------------------------------------------------------
// Reduced words. Greedy leftmost-descent extraction gives a canonical word;
// results are memoized per rank.
// ---------------------------------------------------------------------------

struct EltKey {
    std::vector<int> data;
    explicit EltKey(const AffElt& w) {
        data.reserve(2 * w.n());
        data.insert(data.end(), w.u.img.begin(), w.u.img.end());
        data.insert(data.end(), w.lam.begin(), w.lam.end());
    }
    EltKey(const AffElt& a, const AffElt& b) {
        data.reserve(4 * a.n());
        data.insert(data.end(), a.u.img.begin(), a.u.img.end());
        data.insert(data.end(), a.lam.begin(), a.lam.end());
        data.insert(data.end(), b.u.img.begin(), b.u.img.end());
        data.insert(data.end(), b.lam.begin(), b.lam.end());
    }
    friend bool operator==(const EltKey& a, const EltKey& b) { return a.data == b.data; }
};

struct EltKeyHash {
    size_t operator()(const EltKey& k) const {
        uint64_t h = 1469598103934665603ull;
        for (int x : k.data) {
            h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

// memo caches shared per rank; insertion of an equal value is a no-op
struct WeylCache {
    std::unordered_map<EltKey, std::vector<int>, EltKeyHash> words;
    std::unordered_map<EltKey, bool, EltKeyHash> bruhat;
    std::shared_mutex words_mtx;
    std::shared_mutex bruhat_mtx;
};

inline WeylCache& cache_for(int n) {
    static std::mutex reg_mtx;
    static std::map<int, std::unique_ptr<WeylCache>> registry;
    std::lock_guard<std::mutex> lock(reg_mtx);
    auto it = registry.find(n);
    if (it == registry.end())
        it = registry.emplace(n, std::make_unique<WeylCache>()).first;
    return *it->second;
}

// canonical reduced word of the W_a-part: w = s_{i_1} ... s_{i_l} tau^{kappa(w)}
inline std::vector<int> reduced_word(const AffElt& w) {
    int n = w.n();
    auto& cache = cache_for(n);
    EltKey key(w);
    {
        std::shared_lock<std::shared_mutex> lock(cache.words_mtx);
        auto it = cache.words.find(key);
        if (it != cache.words.end())
            return it->second;
    }
    std::vector<int> word;
    AffElt cur = w;
    int len = length(cur);
    word.reserve(len);
    while (len > 0) {
        bool found = false;
        for (int i = 0; i < n; ++i) {
            AffElt next = simple(n, i) * cur;
            int nl = length(next);
            if (nl < len) {
                word.push_back(i);
                cur = std::move(next);
                len = nl;
                found = true;
                break;
            }
        }
        if (!found)
            throw std::logic_error("reduced_word: no descent on a positive-length element");
    }
    {
        std::unique_lock<std::shared_mutex> lock(cache.words_mtx);
        cache.words.emplace(key, word);
    }
    return word;
}

inline AffElt from_word(int n, const std::vector<int>& word, int omega_pow) {
    AffElt w = AffElt::identity(n);
    for (int i : word)
        w = w * simple(n, i);
    return w * tau_pow(n, omega_pow);
}

inline std::string word_str(const AffElt& w) {
    std::string s;
    for (int i : reduced_word(w)) {
        if (!s.empty())
            s += " ";
        s += "s" + std::to_string(i);
    }
    if (!s.empty())
        s += " ";
    s += "t^" + std::to_string(kappa(w));
    return s;
}

// ---------------------------------------------------------------------------
// Supports.
// ---------------------------------------------------------------------------

using SimpleSet = std::set<int>;  // subset of {0,...,n-1}

inline SimpleSet supp(const AffElt& w_a) {
    if (kappa(w_a) != 0)
        throw std::invalid_argument("supp: element not in W_a");
    SimpleSet out;
    for (int i : reduced_word(w_a))
        out.insert(i);
    return out;
}

// smallest Ad(tau^{kappa(w)})-stable subset of the affine simples containing
// the support of the W_a-part (sigma acts trivially: split GL_n)
inline SimpleSet supp_sigma(const AffElt& w) {
    int n = w.n();
    int k = kappa(w);
    SimpleSet base = supp(wa_part(w));
    SimpleSet out;
    for (int i : base) {
        int j = i;
        do {
            out.insert(j);
            j = ad_tau(n, j, k);
        } while (j != i);
    }
    return out;
}

inline bool is_proper(const SimpleSet& J, int n) { return static_cast<int>(J.size()) < n; }

// longest element of the finite parabolic W_J, J a proper subset of the
// affine simples; greedy ascent inside W_J
inline AffElt longest_parabolic(int n, const SimpleSet& J) {
    if (!is_proper(J, n))
        throw std::invalid_argument("longest_parabolic: W_J is infinite for J = full affine simples");
    AffElt x = AffElt::identity(n);
    int len = 0;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int j : J) {
            AffElt next = simple(n, j) * x;
            int nl = length(next);
            if (nl > len) {
                x = std::move(next);
                len = nl;
                progress = true;
                break;
            }
        }
    }
    return x;
}

}  // namespace adlv
