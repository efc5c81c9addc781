#pragma once

#include <bit>
#include <optional>

#include "adlv/bruhat.hpp"

namespace adlv {

// ---------------------------------------------------------------------------
// The unique decomposition w = x t^mu y with mu dominant and t^mu y a minimal
// coset representative. p(w) = x y and l(w) = l(x) + <mu, 2rho> - l(y).
// ---------------------------------------------------------------------------

struct DomDecomposition {
    Perm x;
    Coch mu_dom;
    Perm y;
};

inline DomDecomposition dom_decompose(const AffElt& w) {
    Perm y = sorting_perm(w.lam);
    return DomDecomposition{w.u * y.inverse(), y.act(w.lam), y};
}

inline Perm finite_part(const AffElt& w) { return w.u; }  // the projection p

inline int delta_plus(const Root& a) { return a.i < a.j ? 1 : 0; }
inline int delta_minus(const Root& a) { return a.i > a.j ? 1 : 0; }

// ---------------------------------------------------------------------------
// Length positive sets.
//   LP(w) = { v : <v a, lam> + delta^+(v a) - delta^+(p(w) v a) >= 0, a > 0 }
// with lam the translation part of w. Two independent routes are provided:
// the definition, and the Phi_w description
//   y LP(w) = { r^{-1} : r(Phi_+ \ Phi_w) subset Phi_+ }.
// ---------------------------------------------------------------------------

enum class LPAlgorithm { definition, lpr };

inline bool lp_contains(const AffElt& w, const Perm& v) {
    int n = w.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j)
                continue;
            if (i > j)
                continue;  // alpha runs over positive roots
            Root va = v.act(Root{i, j});
            int val = pairing(va, w.lam) + delta_plus(va) - delta_plus(w.u.act(va));
            if (val < 0)
                return false;
        }
    return true;
}

// Phi_w = { alpha > 0 : <alpha, mu> - delta^-(y^{-1} alpha) + delta^-(x alpha) = 0 }
inline std::vector<Root> phi_w(const AffElt& w) {
    DomDecomposition d = dom_decompose(w);
    Perm yinv = d.y.inverse();
    std::vector<Root> out;
    for (const Root& a : positive_roots(w.n())) {
        int val = pairing(a, d.mu_dom) - delta_minus(yinv.act(a)) + delta_minus(d.x.act(a));
        if (val == 0)
            out.push_back(a);
    }
    return out;
}

// positive roots outside Phi_w: the constraint set for the conjugator route
inline std::vector<Root> lp_constraints(const AffElt& w) {
    auto pw = phi_w(w);
    auto in_pw = [&](const Root& a) {
        for (const Root& b : pw)
            if (a.i == b.i && a.j == b.j)
                return true;
        return false;
    };
    std::vector<Root> out;
    for (const Root& a : positive_roots(w.n()))
        if (!in_pw(a))
            out.push_back(a);
    return out;
}

inline bool respects_constraints(const Perm& r, const std::vector<Root>& cons) {
    for (const Root& a : cons)
        if (r.img[a.i] > r.img[a.j])
            return false;
    return true;
}

template <typename F>
inline void for_each_perm(int n, F&& f) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    do {
        f(Perm(img));
    } while (std::next_permutation(img.begin(), img.end()));
}

struct LPSet {
    AffElt w;
    std::vector<Perm> members;  // sorted lexicographically
};

// |LP(w)| = number of linear extensions of the Phi_w constraint poset,
// counted by a prefix-subset recursion (no enumeration of W_0)
inline uint64_t lp_size(const AffElt& w) {
    int n = w.n();
    if (n > 24)
        throw std::invalid_argument("lp_size: rank too large");
    std::vector<uint32_t> preds(n, 0);
    for (const Root& a : lp_constraints(w))
        preds[a.j] |= 1u << a.i;
    std::vector<uint64_t> count(size_t(1) << n, 0);
    count[0] = 1;
    for (uint32_t mask = 1; mask < (1u << n); ++mask) {
        uint64_t total = 0;
        for (uint32_t rest = mask; rest;) {
            int x = std::countr_zero(rest);
            rest &= rest - 1;
            if ((preds[x] & ~(mask & ~(1u << x))) == 0)
                total += count[mask & ~(1u << x)];
        }
        count[mask] = total;
    }
    return count[(1u << n) - 1];
}

inline LPSet lp_set(const AffElt& w, LPAlgorithm algo = LPAlgorithm::definition) {
    LPSet out;
    out.w = w;
    if (algo == LPAlgorithm::definition) {
        for_each_perm(w.n(), [&](const Perm& v) {
            if (lp_contains(w, v))
                out.members.push_back(v);
        });
    } else {
        DomDecomposition d = dom_decompose(w);
        Perm yinv = d.y.inverse();
        auto cons = lp_constraints(w);
        for_each_perm(w.n(), [&](const Perm& r) {
            if (respects_constraints(r, cons))
                out.members.push_back(yinv * r.inverse());
        });
        std::sort(out.members.begin(), out.members.end());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Coxeter elements of W_0: length n-1 and full support, i.e. products of all
// simple reflections in some order. An element is a Coxeter element of the
// parabolic generated by its support iff its length equals its support size
// (some reduced word has pairwise distinct letters); the identity qualifies.
// ---------------------------------------------------------------------------

inline bool is_coxeter(const Perm& u) {
    int n = u.n();
    if (u.length() != n - 1)
        return false;
    return static_cast<int>(u.support().size()) == n - 1;
}

inline bool is_support_coxeter(const Perm& u) {
    return u.length() == static_cast<int>(u.support().size());
}

// the 2^{n-2} Coxeter elements, via orientations of the A_{n-1} path: bit i
// (0-based, i < n-2) set means s_{i+1} comes before s_{i+2}
inline const std::vector<Perm>& coxeter_elements(int n) {
    static std::mutex mtx;
    static std::map<int, std::vector<Perm>> memo;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = memo.find(n);
    if (it != memo.end())
        return it->second;
    std::vector<Perm> out;
    if (n == 1) {
        out.push_back(Perm::identity(1));
    } else if (n == 2) {
        out.push_back(Perm::transposition(2, 0, 1));
    } else {
        int bits = n - 2;
        for (int mask = 0; mask < (1 << bits); ++mask) {
            // lexicographically smallest topological order of the oriented path;
            // constraint per adjacent pair (k, k+1): bit (k-1) set => s_k first
            std::vector<char> placed(n, 0);
            std::vector<int> order;
            for (int step = 0; step < n - 1; ++step) {
                for (int k = 1; k <= n - 1; ++k) {
                    if (placed[k])
                        continue;
                    bool ok = true;
                    if (k >= 2 && ((mask >> (k - 2)) & 1) && !placed[k - 1])
                        ok = false;  // s_{k-1} must come first
                    if (k <= n - 2 && !((mask >> (k - 1)) & 1) && !placed[k + 1])
                        ok = false;  // s_{k+1} must come first
                    if (ok) {
                        placed[k] = 1;
                        order.push_back(k);
                        break;
                    }
                }
            }
            Perm c = Perm::identity(n);
            for (int k : order)
                c = c * Perm::transposition(n, k - 1, k);
            out.push_back(c);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end(), [](const Perm& a, const Perm& b) { return a == b; }),
                  out.end());
    }
    return memo.emplace(n, std::move(out)).first->second;
}

// ---------------------------------------------------------------------------
// Positive Coxeter part: some v in LP(w) with v^{-1} p(w) v a Coxeter element
// (of the parabolic its support generates; forced by the central and even-
// kappa cases of the classification, where p(w) is never an n-cycle).
//
// Via the Phi_w description the witnesses are exactly v = y^{-1} r^{-1} with r respecting
// the Phi_w constraints and r z r^{-1} support-Coxeter, z = y p(w) y^{-1}.
// r z r^{-1} is support-Coxeter iff each nontrivial z-cycle occupies a slot
// interval on which it induces a unimodal (Coxeter) cycle and the intervals
// are disjoint. The existence search places whole blocks at a time over a
// bitmask of placed points.
// ---------------------------------------------------------------------------

namespace detail_poscox {

// unimodal slot sequences of length c starting at slot 0: ascent subset A,
// then peak c-1, then the rest descending. These are exactly the cycle orders
// of Coxeter elements of S_c on an interval.
inline std::vector<std::vector<int>> unimodal_sequences(int c) {
    std::vector<std::vector<int>> out;
    if (c == 1) {
        out.push_back({0});
        return out;
    }
    int mid = c - 2;  // slots 1..c-2 are free to sit on either side
    for (int mask = 0; mask < (1 << mid); ++mask) {
        std::vector<int> seq;
        seq.push_back(0);
        for (int s = 1; s <= c - 2; ++s)
            if ((mask >> (s - 1)) & 1)
                seq.push_back(s);
        seq.push_back(c - 1);
        for (int s = c - 2; s >= 1; --s)
            if (!((mask >> (s - 1)) & 1))
                seq.push_back(s);
        out.push_back(std::move(seq));
    }
    return out;
}

struct Search {
    int n = 0;
    std::vector<uint32_t> preds;              // preds[b] = mask of a with constraint a before b
    std::vector<std::vector<int>> cycles;     // nontrivial z-cycles in cycle order
    std::vector<int> fixed;                   // z-fixed points
    std::vector<char> visited;                // per placed-mask memo
    bool found = false;

    void run(uint32_t placed, int filled) {
        if (found)
            return;
        if (filled == n) {
            found = true;
            return;
        }
        if (visited[placed])
            return;
        visited[placed] = 1;
        for (int x : fixed) {
            if ((placed >> x) & 1)
                continue;
            if ((preds[x] & ~placed) == 0)
                run(placed | (1u << x), filled + 1);
            if (found)
                return;
        }
        for (const auto& cyc : cycles) {
            int c = static_cast<int>(cyc.size());
            if ((placed >> cyc[0]) & 1)
                continue;
            uint32_t cmask = 0;
            for (int x : cyc)
                cmask |= 1u << x;
            // every external predecessor of a block member must sit earlier
            bool ok = true;
            for (int x : cyc)
                if ((preds[x] & ~placed & ~cmask) != 0) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            for (const auto& seq : unimodal_sequences(c)) {
                for (int shift = 0; shift < c; ++shift) {
                    // slot of cyc[(i+shift) mod c] inside the block is seq[i]
                    std::vector<int> slot(n, -1);
                    for (int i = 0; i < c; ++i)
                        slot[cyc[(i + shift) % c]] = seq[i];
                    bool fits = true;
                    for (int x : cyc) {
                        uint32_t internal = preds[x] & cmask;
                        while (internal && fits) {
                            int a = std::countr_zero(internal);
                            internal &= internal - 1;
                            if (slot[a] >= slot[x])
                                fits = false;
                        }
                        if (!fits)
                            break;
                    }
                    if (fits) {
                        run(placed | cmask, filled + c);
                        if (found)
                            return;
                    }
                }
            }
        }
    }
};

}  // namespace detail_poscox

inline bool has_positive_coxeter_part_exists(const AffElt& w) {
    int n = w.n();
    if (n > 24)
        throw std::invalid_argument("has_positive_coxeter_part: rank too large");
    DomDecomposition d = dom_decompose(w);
    Perm z = d.y * w.u * d.y.inverse();
    detail_poscox::Search search;
    search.n = n;
    search.preds.assign(n, 0);
    for (const Root& a : lp_constraints(w))
        search.preds[a.j] |= 1u << a.i;
    for (auto& cyc : z.cycles()) {
        if (cyc.size() == 1) {
            search.fixed.push_back(cyc[0]);
        } else {
            // rebuild in cycle order starting from the least member
            std::vector<int> order;
            for (int x = cyc[0];;) {
                order.push_back(x);
                x = z(x);
                if (x == cyc[0])
                    break;
            }
            search.cycles.push_back(std::move(order));
        }
    }
    search.visited.assign(1u << n, 0);
    search.run(0, 0);
    return search.found;
}

// lexicographically least witness; existence is decided by the block search,
// the witness itself by a lex scan over W_0
inline std::optional<Perm> has_positive_coxeter_part(const AffElt& w) {
    if (!has_positive_coxeter_part_exists(w))
        return std::nullopt;
    std::optional<Perm> best;
    for_each_perm(w.n(), [&](const Perm& v) {
        if (best)
            return;
        if (lp_contains(w, v) && is_support_coxeter(v.inverse() * w.u * v))
            best = v;  // for_each_perm runs in lex order
    });
    if (!best)
        throw std::logic_error("has_positive_coxeter_part: existence search disagrees with scan");
    return best;
}

// brute-force route used as the oracle in tests
inline std::optional<Perm> has_positive_coxeter_part_brute(const AffElt& w) {
    std::optional<Perm> best;
    for_each_perm(w.n(), [&](const Perm& v) {
        if (best)
            return;
        if (lp_contains(w, v) && is_support_coxeter(v.inverse() * w.u * v))
            best = v;
    });
    return best;
}

// ---------------------------------------------------------------------------
// Non-emptiness of X_w(tau^m), basic b = tau^m. Empty iff
//   (i) supp_sigma(w) is the full set of affine simples, and
//  (ii) some v in LP(w) has supp(v^{-1} p(w) v) a proper subset of the
//       finite simples.
// (ii) holds iff some proper nonempty union I of z-cycles (z = y p(w) y^{-1})
// is downward closed for the Phi_w constraint relation: then a conjugator r
// with r(I) = {1..|I|} exists among the constraint-respecting permutations.
// ---------------------------------------------------------------------------

inline bool lp_cond_finite_support(const AffElt& w) {
    int n = w.n();
    DomDecomposition d = dom_decompose(w);
    Perm z = d.y * w.u * d.y.inverse();
    auto cons = lp_constraints(w);
    auto cycles = z.cycles();
    int c = static_cast<int>(cycles.size());
    for (int mask = 1; mask + 1 < (1 << c); ++mask) {
        std::vector<char> in(n, 0);
        for (int b = 0; b < c; ++b)
            if ((mask >> b) & 1)
                for (int i : cycles[b])
                    in[i] = 1;
        bool ideal = true;
        for (const Root& a : cons)
            if (in[a.j] && !in[a.i]) {
                ideal = false;
                break;
            }
        if (ideal)
            return true;
    }
    return false;
}

inline bool lp_cond_finite_support_brute(const AffElt& w) {
    bool found = false;
    for_each_perm(w.n(), [&](const Perm& v) {
        if (found)
            return;
        if (lp_contains(w, v) && static_cast<int>((v.inverse() * w.u * v).support().size()) < w.n() - 1)
            found = true;
    });
    return found;
}

inline bool is_nonempty(const AffElt& w, int m) {
    if (kappa(w) != m)
        return false;
    if (is_proper(supp_sigma(w), w.n()))
        return true;  // condition (i) fails
    return !lp_cond_finite_support(w);
}

inline bool is_nonempty_brute(const AffElt& w, int m) {
    if (kappa(w) != m)
        return false;
    if (is_proper(supp_sigma(w), w.n()))
        return true;
    return !lp_cond_finite_support_brute(w);
}

// SAdm(mu)_0: the nonempty-stratum index set for b = tau^m
inline AdmissibleSet sadm0(const Coch& mu, int m) {
    if (m != coord_sum(mu))
        throw std::invalid_argument("sadm0: m must equal the coordinate sum of mu");
    AdmissibleSet out = sadm(mu);
    std::vector<AffElt> kept;
    for (AffElt& w : out.elements)
        if (is_nonempty(w, m))
            kept.push_back(std::move(w));
    out.elements = std::move(kept);
    return out;
}

inline AdmissibleSet sadm0(const Coch& mu) { return sadm0(mu, coord_sum(mu)); }

// ---------------------------------------------------------------------------
// Class invariants of sigma-conjugacy classes of GL_n: Newton point and
// Kottwitz point. defect(tau^m) = n - gcd(n, m).
// ---------------------------------------------------------------------------

struct ClassInvariant {
    RatVec newton;  // dominant
    int kottwitz = 0;

    friend bool operator==(const ClassInvariant& a, const ClassInvariant& b) {
        return a.kottwitz == b.kottwitz && a.newton == b.newton;
    }
    friend bool operator!=(const ClassInvariant& a, const ClassInvariant& b) { return !(a == b); }
};

inline ClassInvariant newton_kappa(const AffElt& w) {
    int d = w.u.order();
    AffElt p = w;
    for (int i = 1; i < d; ++i)
        p = p * w;
    if (!p.u.is_identity())
        throw std::logic_error("newton_kappa: w^ord(p(w)) is not a translation");
    RatVec nu(w.n());
    for (int i = 0; i < w.n(); ++i)
        nu[i] = Rat(p.lam[i], d);
    return ClassInvariant{dominize(std::move(nu)), kappa(w)};
}

inline ClassInvariant basic_class(int n, int m) {
    return ClassInvariant{RatVec(n, Rat(m, n)), m};
}

inline int defect(int n, int m) { return n - std::gcd(n, m < 0 ? -m : m); }

// dim X_{<=mu}(tau^m) = <rho, mu - (m/n,...,m/n)> - defect(n,m)/2,
// defined only for m = sum(mu) (else [tau^m] is not in B(G,mu))
inline int dim_closed_adlv(const Coch& mu, int m) {
    int n = static_cast<int>(mu.size());
    if (!is_dominant(mu))
        throw std::invalid_argument("dim_closed_adlv: mu must be dominant");
    if (m != coord_sum(mu))
        throw std::invalid_argument("dim_closed_adlv: [tau^m] lies in B(G,mu) only for m = sum of mu");
    Rat value = dot(rho(n), mu) - Rat(defect(n, m), 2);
    if (!value.is_integer() || value.num < 0)
        throw std::logic_error("dim_closed_adlv: non-integral or negative dimension (invariant violation)");
    return static_cast<int>(value.num);
}

}  // namespace adlv
