#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "adlv/classifier.hpp"

namespace adlv {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// JSON encodings.
//   element: {"n": int, "perm": [u(1),...,u(n)] (1-based), "lambda": [int]}
//   word:    {"word": [int], "omega": int}
// ---------------------------------------------------------------------------

inline json element_to_json(const AffElt& w) {
    json j;
    j["n"] = w.n();
    std::vector<int> perm(w.n());
    for (int i = 0; i < w.n(); ++i)
        perm[i] = w.u.img[i] + 1;
    j["perm"] = perm;
    j["lambda"] = w.lam;
    return j;
}

inline json word_to_json(const AffElt& w) {
    json j;
    j["word"] = reduced_word(w);
    j["omega"] = kappa(w);
    return j;
}

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

inline AffElt element_from_json(const json& j, int n_hint = 0) {
    if (j.contains("word")) {
        int n = j.value("n", n_hint);
        if (n < 2)
            throw std::invalid_argument("element_from_json: word form needs n (pass --n or an \"n\" field)");
        std::vector<int> word = j.at("word").get<std::vector<int>>();
        for (int i : word)
            if (i < 0 || i >= n)
                throw std::invalid_argument("element_from_json: letter out of range");
        return from_word(n, word, j.value("omega", 0));
    }
    int n = j.at("n").get<int>();
    std::vector<int> perm = j.at("perm").get<std::vector<int>>();
    Coch lam = j.at("lambda").get<Coch>();
    if (static_cast<int>(perm.size()) != n || static_cast<int>(lam.size()) != n)
        throw std::invalid_argument("element_from_json: inconsistent sizes");
    std::vector<int> img(n);
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
        int v = perm[i] - 1;
        if (v < 0 || v >= n || seen[v])
            throw std::invalid_argument("element_from_json: perm is not a permutation");
        seen[v] = 1;
        img[i] = v;
    }
    return AffElt(Perm(std::move(img)), std::move(lam));
}

// word text form: "s0 s5 s4 t^2" (words are evaluated, not required reduced);
// also accepts "tau^2" and a bare "t^k" for length-zero elements
inline AffElt parse_element_text(const std::string& text, int n) {
    if (n < 2)
        throw std::invalid_argument("parse_element_text: rank n >= 2 required");
    std::vector<int> word;
    int omega_pow = 0;
    bool saw_tau = false;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    auto parse_int = [&](const char* what) {
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+'))
            ++pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(text[start]))))
            throw ParseError(std::string("expected ") + what, start);
        return std::stoi(text.substr(start, pos - start));
    };
    skip_ws();
    while (pos < text.size()) {
        if (saw_tau)
            throw ParseError("tokens after the tau power", pos);
        char c = text[pos];
        if (c == 's' || c == 'S') {
            ++pos;
            int i = parse_int("simple reflection index");
            if (i < 0 || i >= n)
                throw ParseError("simple reflection index out of range", pos - 1);
            word.push_back(i);
        } else if (c == 't' || c == 'T') {
            size_t start = pos;
            if (text.compare(pos, 4, "tau^") == 0)
                pos += 4;
            else if (text.compare(pos, 2, "t^") == 0)
                pos += 2;
            else
                throw ParseError("expected t^<k> or tau^<k>", start);
            omega_pow = parse_int("tau power");
            saw_tau = true;
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", pos);
        }
        skip_ws();
    }
    return from_word(n, word, omega_pow);
}

// accepts JSON or the word text form
inline AffElt parse_element(const std::string& text, int n_hint = 0) {
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return element_from_json(json::parse(text), n_hint);
    return parse_element_text(text, n_hint);
}

inline std::string serialize_element(const AffElt& w) { return word_str(w); }

// ---------------------------------------------------------------------------
// Cocharacter input: "1,1,0,0" or combinations like "w2", "2w1+w3",
// "omega2"; omega_k here is (1,...,1,0,...,0) with k ones.
// ---------------------------------------------------------------------------

inline Coch parse_mu(const std::string& text, int n) {
    if (text.find(',') != std::string::npos) {
        Coch mu;
        size_t pos = 0;
        while (pos <= text.size()) {
            size_t next = text.find(',', pos);
            std::string tok = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
            if (tok.empty())
                throw ParseError("empty cocharacter entry", pos);
            mu.push_back(std::stoi(tok));
            if (next == std::string::npos)
                break;
            pos = next + 1;
        }
        if (n > 0 && static_cast<int>(mu.size()) != n)
            throw std::invalid_argument("parse_mu: entry count does not match n");
        return mu;
    }
    if (n < 1)
        throw std::invalid_argument("parse_mu: symbolic form needs --n");
    if (text == "0")
        return Coch(n, 0);
    Coch mu(n, 0);
    size_t pos = 0;
    while (pos < text.size()) {
        int coeff = 1;
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos > start)
            coeff = std::stoi(text.substr(start, pos - start));
        if (pos < text.size() && text[pos] == '*')
            ++pos;
        if (text.compare(pos, 5, "omega") == 0)
            pos += 5;
        else if (pos < text.size() && (text[pos] == 'w' || text[pos] == 'o'))
            pos += 1;
        else
            throw ParseError("expected omega term like 2w1 or omega3", pos);
        start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            ++pos;
        if (pos == start)
            throw ParseError("expected fundamental cocharacter index", pos);
        int k = std::stoi(text.substr(start, pos - start));
        if (k < 0 || k > n)
            throw std::invalid_argument("parse_mu: omega index out of range");
        for (int i = 0; i < k; ++i)
            mu[i] += coeff;
        if (pos < text.size()) {
            if (text[pos] != '+')
                throw ParseError("expected '+' between terms", pos);
            ++pos;
        }
    }
    return mu;
}

inline std::string coch_str(const Coch& mu) {
    std::string s = "(";
    for (size_t i = 0; i < mu.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(mu[i]);
    }
    return s + ")";
}

// ---------------------------------------------------------------------------
// Admissible set and report serialization.
// ---------------------------------------------------------------------------

inline json admset_to_json(const AdmissibleSet& s) {
    json j;
    j["n"] = s.n;
    j["mu"] = s.mu;
    j["flavor"] = s.flavor == AdmissibleSet::Flavor::full ? "full" : "minimal-rep";
    j["elements"] = json::array();
    for (const AffElt& w : s.elements)
        j["elements"].push_back(word_to_json(w));
    return j;
}

// report row: element word, length, nonempty?, LP size, positive-Coxeter witness or "-"
inline std::string element_report_row(const AffElt& w, int m) {
    std::string row = word_str(w);
    row += "\t" + std::to_string(length(w));
    row += "\t" + std::string(is_nonempty(w, m) ? "yes" : "no");
    row += "\t" + std::to_string(lp_size(w));
    if (w.n() > 9) {  // witness retrieval scans W_0; report existence only
        row += has_positive_coxeter_part_exists(w) ? "\texists" : "\t-";
        return row;
    }
    auto wit = has_positive_coxeter_part(w);
    if (wit) {
        std::string ws = "[";
        for (int i = 0; i < wit->n(); ++i) {
            if (i)
                ws += ",";
            ws += std::to_string(wit->img[i] + 1);
        }
        row += "\t" + ws + "]";
    } else {
        row += "\t-";
    }
    return row;
}

inline std::string verdict_witness_str(const Verdict& v) {
    return v.witness ? word_str(*v.witness) : "-";
}

inline void sweep_report_tsv(const SweepReport& rep, std::ostream& os) {
    os << "n\tmu\t|SAdm|\t|SAdm0|\tcoxeter\tpositive_coxeter\twitness\texpected\tmatch\n";
    for (const SweepRow& r : rep.rows) {
        os << r.verdict.n << "\t" << coch_str(r.verdict.mu) << "\t" << r.verdict.sadm_size << "\t"
           << r.verdict.sadm0_size << "\t" << (r.verdict.coxeter_type ? "yes" : "no") << "\t"
           << (r.verdict.positive_coxeter_type ? "yes" : "no") << "\t" << verdict_witness_str(r.verdict)
           << "\t" << (r.expected ? "yes" : "no") << "\t" << (r.match ? "yes" : "no") << "\n";
    }
}

// ---------------------------------------------------------------------------
// Disk persistence for the Bruhat and reduced-word caches. Format: a log of
// length-prefixed records; partially written trailing records are ignored and
// re-insertion of existing entries is a no-op, so concurrent appenders and
// repeated loads are safe. Deleting the files only costs recomputation.
// ---------------------------------------------------------------------------

namespace cachefile {

inline void put_u32(std::string& buf, uint32_t v) {
    for (int i = 0; i < 4; ++i)
        buf.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

inline uint32_t get_u32(const char* p) {
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i)
        v |= static_cast<uint32_t>(static_cast<unsigned char>(p[i])) << (8 * i);
    return v;
}

inline void put_i32(std::string& buf, int32_t v) { put_u32(buf, static_cast<uint32_t>(v)); }

inline void put_elt(std::string& buf, const AffElt& w) {
    for (int x : w.u.img)
        put_i32(buf, x);
    for (int x : w.lam)
        put_i32(buf, x);
}

inline AffElt get_elt(const char* p, int n) {
    std::vector<int> img(n);
    Coch lam(n);
    for (int i = 0; i < n; ++i)
        img[i] = static_cast<int32_t>(get_u32(p + 4 * i));
    for (int i = 0; i < n; ++i)
        lam[i] = static_cast<int32_t>(get_u32(p + 4 * (n + i)));
    return AffElt(Perm(std::move(img)), std::move(lam));
}

constexpr uint8_t kTagBruhat = 1;
constexpr uint8_t kTagWord = 2;

}  // namespace cachefile

inline std::string cache_file_path(const std::string& dir, int n) {
    return dir + "/adlv-cache-n" + std::to_string(n) + ".bin";
}

inline void save_caches(const std::string& dir, int n) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(dir, ec);
    auto& cache = cache_for(n);
    std::string buf;
    {
        std::shared_lock<std::shared_mutex> lock(cache.bruhat_mtx);
        for (const auto& [key, value] : cache.bruhat) {
            std::string rec;
            rec.push_back(static_cast<char>(cachefile::kTagBruhat));
            rec.push_back(static_cast<char>(n));
            for (int x : key.data)
                cachefile::put_i32(rec, x);
            rec.push_back(value ? 1 : 0);
            cachefile::put_u32(buf, static_cast<uint32_t>(rec.size()));
            buf += rec;
        }
    }
    {
        std::shared_lock<std::shared_mutex> lock(cache.words_mtx);
        for (const auto& [key, word] : cache.words) {
            std::string rec;
            rec.push_back(static_cast<char>(cachefile::kTagWord));
            rec.push_back(static_cast<char>(n));
            for (int x : key.data)
                cachefile::put_i32(rec, x);
            cachefile::put_u32(rec, static_cast<uint32_t>(word.size()));
            for (int x : word)
                cachefile::put_i32(rec, x);
            cachefile::put_u32(buf, static_cast<uint32_t>(rec.size()));
            buf += rec;
        }
    }
    // one append per save; records may repeat across saves, loads dedupe
    std::ofstream out(cache_file_path(dir, n), std::ios::binary | std::ios::app);
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

inline void load_caches(const std::string& dir, int n) {
    std::ifstream in(cache_file_path(dir, n), std::ios::binary);
    if (!in)
        return;
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto& cache = cache_for(n);
    size_t pos = 0;
    while (pos + 4 <= data.size()) {
        uint32_t len = cachefile::get_u32(data.data() + pos);
        pos += 4;
        if (pos + len > data.size())
            break;  // truncated trailing record
        const char* rec = data.data() + pos;
        pos += len;
        if (len < 2 || rec[1] != static_cast<char>(n))
            continue;
        uint8_t tag = static_cast<uint8_t>(rec[0]);
        size_t elt_bytes = static_cast<size_t>(8) * n;
        if (tag == cachefile::kTagBruhat && len == 2 + 2 * elt_bytes + 1) {
            AffElt a = cachefile::get_elt(rec + 2, n);
            AffElt b = cachefile::get_elt(rec + 2 + elt_bytes, n);
            bool value = rec[2 + 2 * elt_bytes] != 0;
            std::unique_lock<std::shared_mutex> lock(cache.bruhat_mtx);
            cache.bruhat.emplace(EltKey(a, b), value);
        } else if (tag == cachefile::kTagWord && len >= 2 + elt_bytes + 4) {
            AffElt a = cachefile::get_elt(rec + 2, n);
            uint32_t wl = cachefile::get_u32(rec + 2 + elt_bytes);
            if (len != 2 + elt_bytes + 4 + 4 * static_cast<size_t>(wl))
                continue;
            std::vector<int> word(wl);
            for (uint32_t i = 0; i < wl; ++i)
                word[i] = static_cast<int32_t>(cachefile::get_u32(rec + 2 + elt_bytes + 4 + 4 * i));
            std::unique_lock<std::shared_mutex> lock(cache.words_mtx);
            cache.words.emplace(EltKey(a), std::move(word));
        }
    }
}

}  // namespace adlv
