// adlv: combinatorics of affine Deligne-Lusztig varieties for GL_n.
// Subcommands compute admissible sets, length-positive data, nonemptiness,
// reduction trees, dimensions and the positive-Coxeter classification.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "adlv/adlv.hpp"
#include "adlv/verification.hpp"

using namespace adlv;

namespace {

struct Config {
    int n = 0;
    std::string mu_text;
    std::string w_text;
    std::string output = "tsv";
    std::string cache_dir;
    std::string data_dir = ADLV_DEFAULT_DATA_DIR;
    int threads = 0;
    std::optional<uint64_t> seed;
};

Coch config_mu(const Config& cfg, bool require_dominant = true) {
    Coch mu = parse_mu(cfg.mu_text, cfg.n);
    if (require_dominant && !is_dominant(mu))
        throw std::invalid_argument("mu must be dominant (weakly decreasing)");
    return mu;
}

void print_admset(const AdmissibleSet& s, const std::string& output, int m) {
    if (output == "json") {
        std::cout << admset_to_json(s).dump(2) << "\n";
        return;
    }
    for (const AffElt& w : s.elements) {
        if (output == "tsv")
            std::cout << element_report_row(w, m) << "\n";
        else
            std::cout << word_str(w) << "\n";
    }
}

void maybe_load_caches(const Config& cfg) {
    if (cfg.cache_dir.empty() || cfg.n == 0)
        return;
    load_caches(cfg.cache_dir, cfg.n);
}

void maybe_save_caches(const Config& cfg) {
    if (cfg.cache_dir.empty() || cfg.n == 0)
        return;
    save_caches(cfg.cache_dir, cfg.n);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"affine Deligne-Lusztig combinatorics for GL_n"};
    app.require_subcommand(1);
    Config cfg;
    if (const char* env = std::getenv("ADLV_CACHE_DIR"))
        cfg.cache_dir = env;
    if (const char* env = std::getenv("ADLV_DATA_DIR"))
        cfg.data_dir = env;

    app.add_option("--cache-dir", cfg.cache_dir, "directory for persistent Bruhat/word caches");
    app.add_option("--threads", cfg.threads, "worker threads (0 = hardware)");
    app.add_option("--output", cfg.output, "output format: tsv | plain | json | dot");

    // allow the global options (--output, --cache-dir, --threads) after the
    // subcommand name as well
    app.parse_complete_callback([] {});
    auto add_n = [&](CLI::App* cmd, bool required = true) {
        cmd->fallthrough();
        auto* opt = cmd->add_option("--n", cfg.n, "rank of GL_n")->check(CLI::Range(2, 24));
        if (required)
            opt->required();
    };
    auto add_mu = [&](CLI::App* cmd) {
        cmd->add_option("--mu", cfg.mu_text, "cocharacter: 1,1,0 or w2 or 2w1+w3")->required();
    };
    auto add_w = [&](CLI::App* cmd) {
        cmd->add_option("--w", cfg.w_text, "element: word form 's0 s5 s4 t^2' or JSON")->required();
    };

    auto* c_sadm = app.add_subcommand("sadm", "minimal-representative admissible set SAdm(mu)");
    add_n(c_sadm);
    add_mu(c_sadm);

    auto* c_sadm0 = app.add_subcommand("sadm0", "nonempty-stratum index set SAdm(mu)_0 for b = tau^m");
    add_n(c_sadm0);
    add_mu(c_sadm0);

    auto* c_adm = app.add_subcommand("adm", "full admissible set Adm(mu)");
    add_n(c_adm);
    add_mu(c_adm);

    auto* c_lp = app.add_subcommand("lp", "length-positive set and report row for an element");
    add_n(c_lp);
    add_w(c_lp);

    auto* c_ne = app.add_subcommand("nonempty", "is X_w(tau^m) nonempty?");
    add_n(c_ne);
    add_w(c_ne);
    int ne_m = INT32_MIN;
    c_ne->add_option("--m", ne_m, "tau power (default: kappa(w))");

    auto* c_classify = app.add_subcommand("classify", "positive-Coxeter verdict for (GL_n, mu)");
    add_n(c_classify);
    add_mu(c_classify);

    auto* c_verify = app.add_subcommand("verify", "run the full verification report");
    c_verify->fallthrough();
    int nmax = 8, spread = 4, n2max = 8;
    bool verbose = false, report = false;
    c_verify->add_option("--nmax", nmax, "largest rank in the sweep");
    c_verify->add_option("--spread", spread, "largest mu(1) - mu(n) in the sweep");
    c_verify->add_option("--n2max", n2max, "largest m for the rank-2 sweep");
    c_verify->add_option("--data", cfg.data_dir, "fixture directory");
    c_verify->add_flag("--verbose", verbose, "log per-check progress to stderr");
    c_verify->add_flag("--report", report, "print the sweep as a TSV table first");

    auto* c_reduce = app.add_subcommand("reduce", "reduction tree of an element");
    add_n(c_reduce);
    add_w(c_reduce);
    bool emit_dot = false;
    uint64_t seed_val = 0;
    c_reduce->add_flag("--dot", emit_dot, "emit DOT instead of path JSON");
    auto* seed_opt = c_reduce->add_option("--seed", seed_val, "randomized reduction strategy seed");

    auto* c_dim = app.add_subcommand("dim", "dimension of the closed stratum sum for b = tau^m");
    add_n(c_dim);
    add_mu(c_dim);

    auto* c_elem = app.add_subcommand("element", "inspect an element");
    add_n(c_elem);
    add_w(c_elem);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        maybe_load_caches(cfg);
        if (c_sadm->parsed()) {
            Coch mu = config_mu(cfg);
            print_admset(sadm(mu), cfg.output, coord_sum(mu));
        } else if (c_sadm0->parsed()) {
            Coch mu = config_mu(cfg);
            print_admset(sadm0(mu), cfg.output, coord_sum(mu));
        } else if (c_adm->parsed()) {
            Coch mu = config_mu(cfg);
            print_admset(adm(mu), cfg.output, coord_sum(mu));
        } else if (c_lp->parsed()) {
            AffElt w = parse_element(cfg.w_text, cfg.n);
            if (cfg.output == "json") {
                if (cfg.n > 9)
                    throw std::invalid_argument("lp --output json enumerates W_0; use n <= 9");
                json j;
                j["element"] = word_to_json(w);
                j["lp"] = json::array();
                for (const Perm& v : lp_set(w).members) {
                    std::vector<int> one_line(v.img.size());
                    for (size_t i = 0; i < v.img.size(); ++i)
                        one_line[i] = v.img[i] + 1;
                    j["lp"].push_back(one_line);
                }
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << element_report_row(w, kappa(w)) << "\n";
            }
        } else if (c_ne->parsed()) {
            AffElt w = parse_element(cfg.w_text, cfg.n);
            int m = ne_m == INT32_MIN ? kappa(w) : ne_m;
            std::cout << (is_nonempty(w, m) ? "true" : "false") << "\n";
        } else if (c_classify->parsed()) {
            Coch mu = config_mu(cfg);
            Verdict v = classify_pair(cfg.n, mu);
            bool expected = expected_verdict(cfg.n, mu);
            if (cfg.output == "json") {
                json j;
                j["n"] = v.n;
                j["mu"] = v.mu;
                j["sadm_size"] = v.sadm_size;
                j["sadm0_size"] = v.sadm0_size;
                j["coxeter_type"] = v.coxeter_type;
                j["positive_coxeter_type"] = v.positive_coxeter_type;
                j["witness"] = v.witness ? json(word_str(*v.witness)) : json(nullptr);
                j["expected"] = expected;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "n\tmu\t|SAdm|\t|SAdm0|\tcoxeter\tpositive_coxeter\twitness\texpected\tmatch\n";
                std::cout << v.n << "\t" << coch_str(v.mu) << "\t" << v.sadm_size << "\t" << v.sadm0_size
                          << "\t" << (v.coxeter_type ? "yes" : "no") << "\t"
                          << (v.positive_coxeter_type ? "yes" : "no") << "\t" << verdict_witness_str(v)
                          << "\t" << (expected ? "yes" : "no") << "\t"
                          << (v.positive_coxeter_type == expected ? "yes" : "no") << "\n";
            }
        } else if (c_verify->parsed()) {
            VerifyOptions opt;
            opt.data_dir = cfg.data_dir;
            opt.nmax = nmax;
            opt.spread = spread;
            opt.n2max = n2max;
            opt.threads = cfg.threads;
            opt.verbose = verbose;
            if (report)
                sweep_report_tsv(verify_range(nmax, spread, cfg.threads, n2max), std::cout);
            return run_verification(opt, std::cout);
        } else if (c_reduce->parsed()) {
            AffElt w = parse_element(cfg.w_text, cfg.n);
            ReductionStrategy strat;
            if (seed_opt->count())
                strat.seed = seed_val;
            ReductionTree tree = build_tree(w, strat);
            if (emit_dot || cfg.output == "dot") {
                std::cout << to_dot(tree);
            } else {
                json j = json::array();
                for (const ReductionPath& p : enumerate_paths(tree)) {
                    json row;
                    row["lI"] = p.lI;
                    row["lII"] = p.lII;
                    row["end"] = word_to_json(p.end);
                    row["basic"] = psi_class(p.end) == basic_class(w.n(), kappa(w));
                    j.push_back(row);
                }
                std::cout << j.dump(2) << "\n";
            }
        } else if (c_dim->parsed()) {
            Coch mu = config_mu(cfg);
            std::cout << dim_closed_adlv(mu, coord_sum(mu)) << "\n";
        } else if (c_elem->parsed()) {
            AffElt w = parse_element(cfg.w_text, cfg.n);
            DomDecomposition d = dom_decompose(w);
            ClassInvariant ci = newton_kappa(w);
            json j;
            j["element"] = element_to_json(w);
            j["word"] = word_to_json(w);
            j["text"] = word_str(w);
            j["length"] = length(w);
            j["kappa"] = kappa(w);
            j["min_coset_rep"] = is_min_coset_rep(w);
            j["supp_sigma"] = supp_sigma(w);
            j["mu_dom"] = d.mu_dom;
            j["newton"] = json::array();
            for (const Rat& r : ci.newton)
                j["newton"].push_back(r.str());
            j["kottwitz"] = ci.kottwitz;
            j["sigma_coxeter"] = is_sigma_coxeter(w);
            std::cout << j.dump(2) << "\n";
        }
        maybe_save_caches(cfg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
