#pragma once

#include <deque>
#include <random>
#include <sstream>

#include "adlv/length_positive.hpp"

namespace adlv {

// ---------------------------------------------------------------------------
// sigma-conjugation moves (sigma = id): w -> s w s. Length changes by -2, 0
// or +2; equal-length moves are always two-way, so the length level of the
// approx_sigma class is explored by plain BFS over them.
// ---------------------------------------------------------------------------

inline std::pair<AffElt, int> sigma_conj_step(const AffElt& w, int s) {
    AffElt ss = simple(w.n(), s);
    AffElt next = ss * w * ss;
    return {next, length(next) - length(w)};
}

// BFS over the length-preserving conjugation class of w; parent links record
// the conjugating simples so any class member carries a witness path from w.
struct PlateauClass {
    std::vector<AffElt> elems;          // elems[0] = w, BFS order
    std::vector<int> parent;            // index of BFS parent (-1 for root)
    std::vector<int> parent_move;       // conjugating simple from parent
    // all pairs (class index, s) with l(s x s) = l(x) - 2, in discovery order
    std::vector<std::pair<int, int>> drops;
};

inline PlateauClass plateau_class(const AffElt& w, bool stop_at_first_drop = true) {
    int n = w.n();
    int lw = length(w);
    PlateauClass out;
    std::unordered_map<EltKey, int, EltKeyHash> seen;
    out.elems.push_back(w);
    out.parent.push_back(-1);
    out.parent_move.push_back(-1);
    seen.emplace(EltKey(w), 0);
    for (size_t head = 0; head < out.elems.size(); ++head) {
        AffElt cur = out.elems[head];
        for (int s = 0; s < n; ++s) {
            auto [next, dl] = sigma_conj_step(cur, s);
            if (dl == -2) {
                out.drops.emplace_back(static_cast<int>(head), s);
                if (stop_at_first_drop)
                    return out;
            } else if (dl == 0) {
                EltKey key(next);
                if (seen.emplace(key, static_cast<int>(out.elems.size())).second) {
                    out.elems.push_back(next);
                    out.parent.push_back(static_cast<int>(head));
                    out.parent_move.push_back(s);
                }
            }
        }
    }
    return out;
}

inline std::vector<int> witness_path(const PlateauClass& cls, int idx) {
    std::vector<int> moves;
    for (int i = idx; cls.parent[i] >= 0; i = cls.parent[i])
        moves.push_back(cls.parent_move[i]);
    std::reverse(moves.begin(), moves.end());
    return moves;
}

// ---------------------------------------------------------------------------
// Minimal length elements: w is minimal in its sigma-conjugacy class iff no
// member of its plateau class admits a length-dropping simple conjugation.
// find_minimal follows ->_sigma moves and returns the move sequence.
// ---------------------------------------------------------------------------

struct MinimalResult {
    AffElt element;
    std::vector<int> moves;  // conjugating simples from the input to element
};

inline MinimalResult find_minimal(const AffElt& w) {
    MinimalResult res{w, {}};
    for (;;) {
        PlateauClass cls = plateau_class(res.element);
        if (cls.drops.empty())
            return res;
        auto [idx, s] = cls.drops.front();
        std::vector<int> path = witness_path(cls, idx);
        res.moves.insert(res.moves.end(), path.begin(), path.end());
        res.moves.push_back(s);
        res.element = simple(w.n(), s) * cls.elems[idx] * simple(w.n(), s);
    }
}

inline bool is_minimal_length(const AffElt& w) { return plateau_class(w).drops.empty(); }

// ---------------------------------------------------------------------------
// Reduction trees. Deterministic strategy: at each non-minimal node, BFS the
// plateau class and take the first (class element w', s) in (BFS order,
// ascending s) with l(s w' s) = l(w') - 2; children are s w' (type I) and
// s w' s (type II). A seeded strategy draws the drop pair uniformly instead.
// Identical subtrees are shared, so the "tree" is a rooted DAG.
// ---------------------------------------------------------------------------

struct ReductionEdge {
    int from = 0;
    int to = 0;
    char type = 'I';             // 'I' = length -1, '2' = type II, length -2
    std::vector<int> witness;    // conjugating simples realizing w ~ w'
    int split = 0;               // the splitting simple reflection s
};

struct ReductionTree {
    int root = 0;
    std::vector<AffElt> nodes;
    std::vector<ReductionEdge> edges;
    std::vector<std::vector<int>> out_edges;  // node -> edge ids
};

struct ReductionStrategy {
    std::optional<uint64_t> seed;  // nullopt = deterministic first-drop
};

inline ReductionTree build_tree(const AffElt& w, ReductionStrategy strat = {}) {
    ReductionTree tree;
    std::unordered_map<EltKey, int, EltKeyHash> index;
    std::function<int(const AffElt&)> visit = [&](const AffElt& x) -> int {
        EltKey key(x);
        auto it = index.find(key);
        if (it != index.end())
            return it->second;
        int id = static_cast<int>(tree.nodes.size());
        index.emplace(key, id);
        tree.nodes.push_back(x);
        tree.out_edges.emplace_back();
        PlateauClass cls = plateau_class(x, !strat.seed.has_value());
        if (cls.drops.empty())
            return id;  // minimal: leaf
        std::pair<int, int> chosen = cls.drops.front();
        if (strat.seed) {
            std::mt19937_64 rng(*strat.seed ^ (EltKeyHash{}(key) * 0x9e3779b97f4a7c15ull));
            chosen = cls.drops[rng() % cls.drops.size()];
        }
        auto [idx, s] = chosen;
        std::vector<int> wit = witness_path(cls, idx);
        AffElt ss = simple(x.n(), s);
        AffElt child1 = ss * cls.elems[idx];        // type I, length - 1
        AffElt child2 = child1 * ss;                // type II, length - 2
        int id1 = visit(child1);
        int id2 = visit(child2);
        int e1 = static_cast<int>(tree.edges.size());
        tree.edges.push_back(ReductionEdge{id, id1, 'I', wit, s});
        int e2 = static_cast<int>(tree.edges.size());
        tree.edges.push_back(ReductionEdge{id, id2, '2', wit, s});
        tree.out_edges[id].push_back(e1);
        tree.out_edges[id].push_back(e2);
        return id;
    };
    tree.root = visit(w);
    return tree;
}

struct ReductionPath {
    std::vector<int> edge_ids;
    int lI = 0;
    int lII = 0;
    AffElt end;
};

inline std::vector<ReductionPath> enumerate_paths(const ReductionTree& tree) {
    std::vector<ReductionPath> out;
    std::vector<int> stack;
    std::function<void(int)> rec = [&](int node) {
        if (tree.out_edges[node].empty()) {
            ReductionPath p;
            p.edge_ids = stack;
            for (int e : stack) {
                if (tree.edges[e].type == 'I')
                    ++p.lI;
                else
                    ++p.lII;
            }
            p.end = tree.nodes[node];
            out.push_back(std::move(p));
            return;
        }
        for (int e : tree.out_edges[node]) {
            stack.push_back(e);
            rec(tree.edges[e].to);
            stack.pop_back();
        }
    };
    rec(tree.root);
    return out;
}

// Psi: B(W~, sigma) -> B(G); for GL_n the class of a lift is determined by
// the Newton and Kottwitz points
inline ClassInvariant psi_class(const AffElt& w) { return newton_kappa(w); }

// ---------------------------------------------------------------------------
// Dimension via reduction trees:
//   dim X_w(tau^m) = max over paths p with Psi(end(p)) basic-m of
//                    lI(p) + lII(p) + l(end(p)).
// Leaf dimension l(end) is only valid for leaves with proper sigma-support
// (finite parabolic); a matching leaf with full support is a hard error.
// No matching path means X_w(tau^m) is empty.
// ---------------------------------------------------------------------------

inline std::optional<int> dim_via_tree(const AffElt& w, int m, ReductionStrategy strat = {}) {
    if (kappa(w) != m)
        return std::nullopt;
    ReductionTree tree = build_tree(w, strat);
    ClassInvariant target = basic_class(w.n(), m);
    std::optional<int> best;
    for (const ReductionPath& p : enumerate_paths(tree)) {
        if (psi_class(p.end) != target)
            continue;
        if (!is_proper(supp_sigma(p.end), w.n()))
            throw std::logic_error("dim_via_tree: matching leaf has full affine sigma-support");
        int dim = p.lI + p.lII + length(p.end);
        if (!best || dim > *best)
            best = dim;
    }
    return best;
}

// ---------------------------------------------------------------------------
// Output: DOT emission and path dumps.
// ---------------------------------------------------------------------------

inline std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out;
}

inline std::string to_dot(const ReductionTree& tree) {
    std::ostringstream os;
    os << "digraph reduction {\n";
    os << "  node [shape=box];\n";
    for (size_t i = 0; i < tree.nodes.size(); ++i) {
        os << "  n" << i << " [label=\"" << dot_escape(word_str(tree.nodes[i])) << "\\nlen "
           << length(tree.nodes[i]) << "\"];\n";
    }
    for (const ReductionEdge& e : tree.edges) {
        std::string wit;
        for (int s : e.witness)
            wit += "s" + std::to_string(s) + " ";
        wit += "| s" + std::to_string(e.split);
        os << "  n" << e.from << " -> n" << e.to << " [label=\"" << (e.type == 'I' ? "I" : "II")
           << "\", witness=\"" << dot_escape(wit) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace adlv
