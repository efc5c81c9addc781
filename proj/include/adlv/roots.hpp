#pragma once

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <vector>

#include "adlv/rational.hpp"

namespace adlv {

// Root datum of GL_n in coordinates: X_*(T) = Z^n, roots chi_{ij} (i != j)
// with <chi_{ij}, lambda> = lambda_i - lambda_j. Indices are 0-based in code;
// printing uses the usual 1-based convention.

using Coch = std::vector<int>;  // cocharacter, length n

struct Root {
    int i;  // 0-based
    int j;
    bool positive() const { return i < j; }
    Root negated() const { return Root{j, i}; }
};

inline int pairing(const Root& a, const Coch& lam) { return lam[a.i] - lam[a.j]; }
inline Rat pairing(const Root& a, const RatVec& lam) { return lam[a.i] - lam[a.j]; }

inline std::vector<Root> positive_roots(int n) {
    std::vector<Root> out;
    out.reserve(n * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            out.push_back(Root{i, j});
    return out;
}

// coroot chi_{ij}^vee = e_i - e_j
inline Coch coroot(const Root& a, int n) {
    Coch c(n, 0);
    c[a.i] += 1;
    c[a.j] -= 1;
    return c;
}

inline bool is_dominant(const Coch& mu) {
    for (size_t i = 0; i + 1 < mu.size(); ++i)
        if (mu[i] < mu[i + 1])
            return false;
    return true;
}

// unique dominant vector in the W_0-orbit
inline Coch dominize(Coch lam) {
    std::sort(lam.begin(), lam.end(), std::greater<int>());
    return lam;
}

inline RatVec dominize(RatVec lam) {
    std::sort(lam.begin(), lam.end(), [](const Rat& a, const Rat& b) { return b < a; });
    return lam;
}

inline int coord_sum(const Coch& lam) {
    int s = 0;
    for (int x : lam)
        s += x;
    return s;
}

// mu' <= mu in the dominance order: mu - mu' is a nonnegative integral
// combination of positive coroots, i.e. equal coordinate sums and all
// prefix sums of the difference are >= 0.
inline bool dominance_leq(const Coch& mup, const Coch& mu) {
    if (mup.size() != mu.size())
        throw std::invalid_argument("dominance_leq: length mismatch");
    int prefix = 0;
    for (size_t i = 0; i < mu.size(); ++i) {
        prefix += mu[i] - mup[i];
        if (prefix < 0)
            return false;
    }
    return prefix == 0;
}

// omega_k = (1,...,1,0,...,0) with k ones; omega_n is central
inline Coch omega(int n, int k) {
    if (k < 0 || k > n)
        throw std::invalid_argument("omega: k out of range");
    Coch c(n, 0);
    for (int i = 0; i < k; ++i)
        c[i] = 1;
    return c;
}

// rho = half sum of positive roots = ((n-1)/2, (n-3)/2, ..., -(n-1)/2)
inline RatVec rho(int n) {
    RatVec r(n);
    for (int i = 0; i < n; ++i)
        r[i] = Rat(n - 1 - 2 * i, 2);
    return r;
}

inline Coch two_rho(int n) {
    Coch r(n);
    for (int i = 0; i < n; ++i)
        r[i] = n - 1 - 2 * i;
    return r;
}

inline Rat dot(const RatVec& a, const Coch& b) {
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i)
        s = s + a[i] * Rat(b[i]);
    return s;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
    Rat s(0);
    for (size_t i = 0; i < a.size(); ++i)
        s = s + a[i] * b[i];
    return s;
}

inline int dot(const Coch& a, const Coch& b) {
    int s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

// all dominant nu with nu <= mu in dominance order (same coordinate sum)
inline std::vector<Coch> dominant_below(const Coch& mu) {
    int n = static_cast<int>(mu.size());
    int total = coord_sum(mu);
    int lo = mu[n - 1];
    std::vector<Coch> out;
    Coch cur(n);
    std::vector<int> mu_prefix(n + 1, 0);
    for (int i = 0; i < n; ++i)
        mu_prefix[i + 1] = mu_prefix[i] + mu[i];
    std::function<void(int, int, int)> rec = [&](int pos, int sum, int prev) {
        if (pos == n) {
            if (sum == total)
                out.push_back(cur);
            return;
        }
        int rest = n - pos - 1;
        for (int v = std::min(prev, mu_prefix[pos + 1] - sum); v >= lo; --v) {
            // remaining entries are <= v and >= lo; prune infeasible sums
            if (sum + v + rest * v < total)
                break;
            if (sum + v + rest * lo > total)
                continue;
            cur[pos] = v;
            rec(pos + 1, sum + v, v);
        }
    };
    rec(0, 0, mu[0]);
    return out;
}

}  // namespace adlv
