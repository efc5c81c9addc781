#pragma once

#include <atomic>
#include <thread>

#include "adlv/reduction.hpp"

namespace adlv {

// ---------------------------------------------------------------------------
// sigma-Coxeter elements: supp_sigma(w) proper, and the reduced word of the
// W_a-part has exactly one letter in each Ad(tau^kappa)-orbit it meets.
// ---------------------------------------------------------------------------

inline bool is_sigma_coxeter(const AffElt& w) {
    int n = w.n();
    int k = kappa(w);
    SimpleSet ss = supp_sigma(w);
    if (!is_proper(ss, n))
        return false;
    std::vector<int> orbit_id(n, -1);
    int orbits = 0;
    for (int i = 0; i < n; ++i) {
        if (orbit_id[i] >= 0)
            continue;
        int j = i;
        do {
            orbit_id[j] = orbits;
            j = ad_tau(n, j, k);
        } while (j != i);
        ++orbits;
    }
    std::vector<int> count(orbits, 0);
    for (int letter : reduced_word(wa_part(w)))
        ++count[orbit_id[letter]];
    for (int i : ss)
        if (count[orbit_id[i]] != 1)
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Per-coset verdicts. A minimal coset representative is determined by its
// translation part lam, so all classification data is aggregated per
// dominant orbit and shared across every mu dominating it.
// ---------------------------------------------------------------------------

struct ElementFlags {
    bool nonempty = false;
    bool proper_supp = false;
    bool sigma_coxeter = false;
    bool positive_coxeter = false;
};

inline ElementFlags element_flags(const AffElt& w) {
    ElementFlags f;
    f.proper_supp = is_proper(supp_sigma(w), w.n());
    f.nonempty = f.proper_supp ? true : !lp_cond_finite_support(w);
    f.sigma_coxeter = is_sigma_coxeter(w);
    // only nonempty strata enter the positive-Coxeter condition
    f.positive_coxeter = f.nonempty ? has_positive_coxeter_part_exists(w) : false;
    return f;
}

struct OrbitSummary {
    int coset_count = 0;
    int nonempty_count = 0;
    // failure witnesses, lexicographically least by (length, word); empty lam = none
    Coch pos_witness;    // nonempty but no positive Coxeter part
    Coch coxA_witness;   // nonempty but not (proper supp and sigma-Coxeter)
    Coch coxB_witness;   // empty stratum that is proper-supp sigma-Coxeter
};

inline OrbitSummary summarize_orbit(const Coch& nu) {
    OrbitSummary s;
    Coch lam = nu;
    std::sort(lam.begin(), lam.end());
    auto better = [](const Coch& cand, const Coch& cur) {
        if (cur.empty())
            return true;
        AffElt a = min_coset_rep(cand), b = min_coset_rep(cur);
        int la = length(a), lb = length(b);
        if (la != lb)
            return la < lb;
        return reduced_word(a) < reduced_word(b);
    };
    do {
        AffElt w = min_coset_rep(lam);
        ElementFlags f = element_flags(w);
        ++s.coset_count;
        if (f.nonempty)
            ++s.nonempty_count;
        if (f.nonempty && !f.positive_coxeter && better(lam, s.pos_witness))
            s.pos_witness = lam;
        bool cox_set = f.proper_supp && f.sigma_coxeter;
        if (f.nonempty && !cox_set && better(lam, s.coxA_witness))
            s.coxA_witness = lam;
        if (!f.nonempty && cox_set && better(lam, s.coxB_witness))
            s.coxB_witness = lam;
    } while (std::next_permutation(lam.begin(), lam.end()));
    return s;
}

// shared per-rank summary cache
inline OrbitSummary orbit_summary(const Coch& nu) {
    struct Cache {
        std::unordered_map<EltKey, OrbitSummary, EltKeyHash> map;
        std::shared_mutex mtx;
    };
    static std::mutex reg_mtx;
    static std::map<int, std::unique_ptr<Cache>> registry;
    Cache* cache;
    {
        std::lock_guard<std::mutex> lock(reg_mtx);
        auto it = registry.find(static_cast<int>(nu.size()));
        if (it == registry.end())
            it = registry.emplace(static_cast<int>(nu.size()), std::make_unique<Cache>()).first;
        cache = it->second.get();
    }
    EltKey key(AffElt::translation(nu));
    {
        std::shared_lock<std::shared_mutex> lock(cache->mtx);
        auto it = cache->map.find(key);
        if (it != cache->map.end())
            return it->second;
    }
    OrbitSummary s = summarize_orbit(nu);
    {
        std::unique_lock<std::shared_mutex> lock(cache->mtx);
        cache->map.emplace(key, s);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Classification verdicts.
// ---------------------------------------------------------------------------

// both classification theorems are stated modulo Z omega_n
inline Coch normalize_mu(const Coch& mu) {
    Coch out = mu;
    int last = out.back();
    for (auto& x : out)
        x -= last;
    return out;
}

// -w_max mu, renormalized so the last entry is 0
inline Coch dualize(const Coch& mu) {
    Coch out(mu.rbegin(), mu.rend());
    for (auto& x : out)
        x = -x;
    return normalize_mu(out);
}

struct Verdict {
    int n = 0;
    Coch mu;  // normalized
    int sadm_size = 0;
    int sadm0_size = 0;
    bool coxeter_type = false;
    bool positive_coxeter_type = false;
    std::optional<AffElt> witness;  // failing element, when a flag is false
    std::string witness_reason;
};

inline Verdict classify_pair(int n, const Coch& mu_in) {
    if (static_cast<int>(mu_in.size()) != n)
        throw std::invalid_argument("classify_pair: mu has wrong length");
    if (!is_dominant(mu_in))
        throw std::invalid_argument("classify_pair: mu must be dominant");
    Verdict v;
    v.n = n;
    v.mu = normalize_mu(mu_in);
    v.positive_coxeter_type = true;
    v.coxeter_type = true;
    Coch best_pos, best_cox;
    for (const Coch& nu : dominant_below(v.mu)) {
        OrbitSummary s = orbit_summary(nu);
        v.sadm_size += s.coset_count;
        v.sadm0_size += s.nonempty_count;
        auto keep_min = [](Coch& cur, const Coch& cand) {
            if (cand.empty())
                return;
            if (cur.empty()) {
                cur = cand;
                return;
            }
            AffElt a = min_coset_rep(cand), b = min_coset_rep(cur);
            int la = length(a), lb = length(b);
            if (la < lb || (la == lb && reduced_word(a) < reduced_word(b)))
                cur = cand;
        };
        if (!s.pos_witness.empty()) {
            v.positive_coxeter_type = false;
            keep_min(best_pos, s.pos_witness);
        }
        if (!s.coxA_witness.empty() || !s.coxB_witness.empty()) {
            v.coxeter_type = false;
            keep_min(best_cox, s.coxA_witness);
            keep_min(best_cox, s.coxB_witness);
        }
    }
    if (!v.positive_coxeter_type && !best_pos.empty()) {
        v.witness = min_coset_rep(best_pos);
        v.witness_reason = "nonempty stratum without positive Coxeter part";
    } else if (!v.coxeter_type && !best_cox.empty()) {
        v.witness = min_coset_rep(best_cox);
        v.witness_reason = "SAdm(mu)_0 differs from the sigma-Coxeter locus";
    }
    return v;
}

// ---------------------------------------------------------------------------
// The explicit classification lists.
// ---------------------------------------------------------------------------

inline bool is_central(const Coch& mu) {
    for (size_t i = 1; i < mu.size(); ++i)
        if (mu[i] != mu[0])
            return false;
    return true;
}

namespace detail {
inline Coch combo(int n, std::initializer_list<std::pair<int, int>> terms) {
    Coch out(n, 0);
    for (auto [coeff, k] : terms)
        for (int i = 0; i < k; ++i)
            out[i] += coeff;
    return normalize_mu(out);
}
}  // namespace detail

// positive Coxeter type list (modulo Z omega_n)
inline bool expected_verdict(int n, const Coch& mu_in) {
    Coch mu = normalize_mu(mu_in);
    if (is_central(mu))
        return true;
    if (n == 2)
        return true;  // m omega_1 for every m > 0
    if (n < 2)
        return true;
    using detail::combo;
    std::vector<Coch> list;
    auto add = [&](std::initializer_list<std::pair<int, int>> terms) { list.push_back(combo(n, terms)); };
    add({{1, 1}});           // omega_1
    add({{1, n - 1}});       // omega_{n-1}
    if (n >= 3) {
        add({{1, 1}, {1, n - 1}});  // omega_1 + omega_{n-1}
        add({{1, 2}});              // omega_2
        add({{2, 1}});              // 2 omega_1
        add({{1, n - 2}});          // omega_{n-2}
        add({{2, n - 1}});          // 2 omega_{n-1}
        add({{1, 2}, {1, n - 1}});  // omega_2 + omega_{n-1}
        add({{2, 1}, {1, n - 1}});  // 2 omega_1 + omega_{n-1}
        add({{1, 1}, {1, n - 2}});  // omega_1 + omega_{n-2}
        add({{1, 1}, {2, n - 1}});  // omega_1 + 2 omega_{n-1}
    }
    if (n >= 6 && n <= 8) {
        add({{1, 3}});       // omega_3
        add({{1, n - 3}});   // omega_{n-3}
    }
    if (n >= 3 && n <= 5) {
        add({{3, 1}});       // 3 omega_1
        add({{3, n - 1}});   // 3 omega_{n-1}
    }
    if (n == 5) {
        add({{1, 1}, {1, 2}});  // omega_1 + omega_2
        add({{1, 3}, {1, 4}});  // omega_3 + omega_4
    }
    if (n == 3) {
        add({{4, 1}});          // 4 omega_1
        add({{1, 1}, {3, 2}});  // omega_1 + 3 omega_2
        add({{4, 2}});          // 4 omega_2
        add({{3, 1}, {1, 2}});  // 3 omega_1 + omega_2
    }
    for (const Coch& c : list)
        if (mu == c)
            return true;
    return false;
}

// Coxeter type list: central, omega_1, omega_{n-1},
// omega_1 + omega_{n-1} (n >= 2), omega_2 (n = 4)
inline bool expected_coxeter(int n, const Coch& mu_in) {
    Coch mu = normalize_mu(mu_in);
    if (is_central(mu))
        return true;
    using detail::combo;
    if (mu == combo(n, {{1, 1}}) || mu == combo(n, {{1, n - 1}}))
        return true;
    if (n >= 2 && mu == combo(n, {{1, 1}, {1, n - 1}}))
        return true;
    if (n == 4 && mu == combo(n, {{1, 2}}))
        return true;
    return false;
}

// ---------------------------------------------------------------------------
// Classification sweep.
// ---------------------------------------------------------------------------

struct SweepRow {
    Verdict verdict;
    bool expected = false;
    bool expected_cox = false;
    bool match = false;
};

struct SweepReport {
    std::vector<SweepRow> rows;
    int disagreements = 0;
};

// all dominant mu with mu(1) - mu(n) <= spread and mu(n) = 0, nonzero excluded... includes central 0
inline std::vector<Coch> sweep_mus(int n, int spread) {
    std::vector<Coch> out;
    Coch cur(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int prev) {
        if (pos == n - 1) {
            cur[pos] = 0;
            out.push_back(cur);
            return;
        }
        for (int v = prev; v >= 0; --v) {
            cur[pos] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, spread);
    // drop duplicates of the zero vector path (none arise: enumeration is unique)
    return out;
}

inline SweepReport verify_range(int n_max, int spread_max, int threads = 0, int n2_spread = 8) {
    SweepReport report;
    std::vector<std::pair<int, Coch>> tasks;
    for (int n = 2; n <= n_max; ++n) {
        int spread = n == 2 ? std::max(spread_max, n2_spread) : spread_max;
        for (const Coch& mu : sweep_mus(n, spread))
            tasks.emplace_back(n, mu);
    }
    std::vector<SweepRow> rows(tasks.size());
    if (threads <= 0)
        threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1)
        threads = 1;
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size())
                return;
            auto& [n, mu] = tasks[i];
            SweepRow row;
            row.verdict = classify_pair(n, mu);
            row.expected = expected_verdict(n, mu);
            row.expected_cox = expected_coxeter(n, mu);
            row.match = (row.verdict.positive_coxeter_type == row.expected) &&
                        (row.verdict.coxeter_type == row.expected_cox);
            rows[i] = std::move(row);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
        pool.emplace_back(worker);
    for (auto& t : pool)
        t.join();
    report.rows = std::move(rows);
    for (const SweepRow& r : report.rows)
        if (!r.match)
            ++report.disagreements;
    return report;
}

}  // namespace adlv
