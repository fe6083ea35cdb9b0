#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chibound/exact.hpp"
#include "chibound/graph.hpp"
#include "chibound/willow.hpp"

namespace chibound {

namespace detail {

// Bounded exhaustive search for a willow certificate.
//
// Only reduced trees are enumerated: every Steiner node is a branch point
// (degree >= 3) or a direction break (both arcs enter it or both leave it).
// Anything else is redundant -- a Steiner leaf lies on no path between
// embedded vertices, and a straight-through Steiner node can be contracted,
// summing its weights.  Weights live in {1..n} because only path-sum
// residues mod n matter; n stands for residue 0.
//
// Graph vertices are placed in a fixed order.  Comparing the reduced spanned
// subtree of the first i images with that of the first i-1 shows the i-th
// image lands in exactly one of four spots, which become the four moves:
//
//   - on an existing Steiner node (convert it);
//   - inside an existing arc (subdivide, splitting the weight mod n);
//   - at the end of a fresh path attached to an existing node;
//   - at the end of a fresh path attached inside an existing arc.
//
// Fresh paths flip direction at every intermediate node: a straight-through
// intermediate would be contractible now, and if a later vertex needs that
// spot, subdividing recreates it then.  The partial tree therefore always
// equals the reduced span of the placed images, and each finished tree is
// generated by exactly one move sequence.
//
// A broken path transmits no consistent orientation, so a vertex with an
// already placed neighbor can only attach by a single arc; only vertices
// with no placed neighbor grow intermediates.  Reversing every arc of a tree
// certifies the same graph, so the first arc's direction is fixed, halving
// the space.  Relations between placed vertices never change as the tree
// grows, so each placement only has to satisfy its own: a leaf hanging off a
// position sees the old tree one-way through that position, which turns the
// requirements into residue constraints on the new weights.  Those are
// solved per position (one reachability pass instead of one per weight) and
// only feasible weights recurse.
//
// max_steiner bounds the unlabeled nodes of the finished tree; while
// searching, the count may exceed it by at most the number of vertices still
// to place, since each of those can convert at most one Steiner node.
class WillowSearcher {
public:
    WillowSearcher(const Graph& g, int n, int max_steiner)
        : g_(g), n_(n), k_(g.n), max_steiner_(max_steiner) {
        order_ = placement_order(g);
        img_.assign(k_, -1);
    }

    std::optional<WillowCertificate> run() {
        if (k_ == 0) {
            WillowCertificate cert;
            cert.tree = WeightedOrientedTree(1);
            cert.modulus = n_;
            return cert;
        }
        push_node(order_[0]);
        img_[order_[0]] = 0;
        place(1);
        return found_;
    }

private:
    // Most-constrained-first: highest degree root, then greedily the vertex
    // with the most already ordered neighbors.  Placements then meet their
    // adjacency constraints as early as possible.
    static std::vector<int> placement_order(const Graph& g) {
        std::vector<int> order;
        std::vector<char> done(g.n, 0);
        for (int step = 0; step < g.n; ++step) {
            int best = -1, best_anchored = -1, best_deg = -1;
            for (int v = 0; v < g.n; ++v) {
                if (done[v]) continue;
                int anchored = 0;
                for (int u : order) anchored += g.has_edge(u, v) ? 1 : 0;
                int deg = g.degree(v);
                if (anchored > best_anchored || (anchored == best_anchored && deg > best_deg)) {
                    best = v;
                    best_anchored = anchored;
                    best_deg = deg;
                }
            }
            done[best] = 1;
            order.push_back(best);
        }
        return order;
    }

    int nodes() const { return static_cast<int>(label_.size()); }

    // mark: how a Steiner branch point may meet a later vertex.  slide-pinned
    // nodes sit at the canonical offset and must never be converted; owed
    // nodes carry a free offset that is only observable by converting them,
    // so a conversion must eventually come.
    enum : signed char { open_mark = 0, pinned_mark = 1, owed_mark = 2 };

    int push_node(int lab, signed char mark = open_mark) {
        label_.push_back(lab);
        mark_.push_back(mark);
        out_.emplace_back();
        in_.emplace_back();
        if (lab < 0) ++steiner_;
        if (mark == owed_mark) ++owed_;
        return nodes() - 1;
    }

    void pop_node() {
        if (label_.back() < 0) --steiner_;
        if (mark_.back() == owed_mark) --owed_;
        label_.pop_back();
        mark_.pop_back();
        out_.pop_back();
        in_.pop_back();
    }

    void add_arc(int a, int b, int w, bool fwd) {
        int t = fwd ? a : b, h = fwd ? b : a;
        out_[t].push_back({h, w});
        in_[h].push_back({t, w});
    }

    void remove_last_arc(int a, int b, bool fwd) {
        int t = fwd ? a : b, h = fwd ? b : a;
        out_[t].pop_back();
        in_[h].pop_back();
    }

    // d[x] = weight of the directed path b -> x, or -1.
    void fwd_table(int b, std::vector<long long>& d) {
        d.assign(nodes(), -1);
        d[b] = 0;
        stack_.assign(1, b);
        while (!stack_.empty()) {
            int u = stack_.back();
            stack_.pop_back();
            for (auto [v, w] : out_[u])
                if (d[v] < 0) {
                    d[v] = d[u] + w;
                    stack_.push_back(v);
                }
        }
    }

    // d[x] = weight of the directed path x -> b, or -1.
    void bwd_table(int b, std::vector<long long>& d) {
        d.assign(nodes(), -1);
        d[b] = 0;
        stack_.assign(1, b);
        while (!stack_.empty()) {
            int u = stack_.back();
            stack_.pop_back();
            for (auto [v, w] : in_[u])
                if (d[v] < 0) {
                    d[v] = d[u] + w;
                    stack_.push_back(v);
                }
        }
    }

    // Full check of the new vertex's relations against everything placed,
    // used where the position does not reduce to one residue constraint.
    bool relations_ok(int vi, int b, int placed) {
        fwd_table(b, dist_fwd_);
        bwd_table(b, dist_bwd_);
        for (int t = 0; t < placed; ++t) {
            int u = order_[t];
            long long f = dist_fwd_[img_[u]];   // b -> img(u)
            long long r = dist_bwd_[img_[u]];   // img(u) -> b
            bool declared = (f > 0 && f % n_ != 0) || (r > 0 && r % n_ != 0);
            if (declared != g_.has_edge(vi, u)) return false;
        }
        return true;
    }

    // The new vertex sees placed vertex u at distance T[img(u)] + shift + w
    // when T[img(u)] >= 0, and not at all otherwise.  Marks the residues of w
    // (index w mod n) that realize every required relation; false when none.
    bool constrain(int vi, int placed, const std::vector<long long>& T, long long shift,
                   std::vector<char>& feas) {
        feas.assign(n_, 1);
        for (int t = 0; t < placed; ++t) {
            int u = order_[t];
            long long rho = T[img_[u]];
            bool edge = g_.has_edge(vi, u);
            if (rho < 0) {
                if (edge) return false;
                continue;
            }
            int r0 = static_cast<int>((n_ - (rho + shift) % n_) % n_);  // w making the sum divisible
            if (edge) {
                feas[r0] = 0;
            } else {
                for (int r = 0; r < n_; ++r)
                    if (r != r0) feas[r] = 0;
            }
        }
        return std::find(feas.begin(), feas.end(), char(1)) != feas.end();
    }

    bool budgets_ok(int after) const {
        if (steiner_ > max_steiner_ + after) return false;
        if (owed_ > after) return false;  // each later vertex converts at most one node
        return nodes() + std::max(0, after - steiner_) <= k_ + max_steiner_;
    }

    void emit() {
        if (owed_ > 0) return;
        WillowCertificate cert;
        cert.modulus = n_;
        cert.tree = WeightedOrientedTree(nodes());
        for (int z = 0; z < nodes(); ++z)
            for (auto [v, w] : out_[z]) cert.tree.add_arc(z, v, w);
        cert.embedding = img_;
        if (verify_certificate(g_, cert).first) found_ = std::move(cert);
    }

    void place(int i) {
        if (found_) return;
        if (i == k_) {
            emit();
            return;
        }
        int vi = order_[i];
        bool anchored = false;
        for (int t = 0; t < i && !anchored; ++t) anchored = g_.has_edge(vi, order_[t]);
        int after = k_ - i - 1;
        int frozen = nodes();

        // Convert an existing Steiner node.
        for (int z = 0; z < frozen && !found_; ++z) {
            if (label_[z] >= 0 || mark_[z] == pinned_mark) continue;
            bool settles = mark_[z] == owed_mark;
            label_[z] = vi;
            img_[vi] = z;
            --steiner_;
            if (settles) --owed_;
            if (relations_ok(vi, z, i) && budgets_ok(after)) place(i + 1);
            if (settles) ++owed_;
            ++steiner_;
            label_[z] = -1;
            img_[vi] = -1;
        }

        // Moves inside an existing arc t -> h: a labeled subdivision point,
        // or a Steiner branch point carrying the new vertex on a fresh arc.
        for (int t = 0; t < frozen && !found_; ++t) {
            int arcs_here = static_cast<int>(out_[t].size());
            for (int io = 0; io < arcs_here && !found_; ++io) {
                auto [h, warc] = out_[t][io];
                int ii = 0;
                while (in_[h][ii].first != t) ++ii;
                bwd_table(t, rt_);  // x -> t
                fwd_table(h, fh_);  // h -> x
                auto split2 = [&](int w1) { return ((warc - w1 - 1) % n_ + n_) % n_ + 1; };

                // Feasibility is settled from the two tables before anything
                // recurses, because deeper placements reuse the scratch.
                std::vector<int> label_splits;
                for (int w1 = 1; w1 <= n_; ++w1) {
                    int w2 = split2(w1);
                    bool ok = true;
                    for (int tt = 0; tt < i && ok; ++tt) {
                        int u = order_[tt];
                        long long rr = rt_[img_[u]], ff = fh_[img_[u]];
                        bool adj = (rr >= 0 && (rr + w1) % n_ != 0) || (ff >= 0 && (ff + w2) % n_ != 0);
                        ok = adj == g_.has_edge(vi, u);
                    }
                    if (ok) label_splits.push_back(w1);
                }
                // A branch point's offset inside the arc is invisible until
                // something converts it: sliding it along the arc is absorbed
                // by the free weight of every later attachment, since path
                // sums through it telescope.  So the offset is pinned at the
                // canonical n (residue 0) and the node barred from
                // conversion; offsets stay free only under the obligation
                // that some later vertex converts the node.
                std::vector<std::array<int, 3>> branches;  // (w1, fwd, w); w1 = 0 means pinned
                if (steiner_ < max_steiner_ + after) {
                    if (constrain(vi, i, rt_, 0, feas_))  // m -> v, v seen through t
                        for (int w = 1; w <= n_; ++w)
                            if (feas_[w % n_]) branches.push_back({0, 1, w});
                    if (constrain(vi, i, fh_, warc, feas_))  // v -> m, v sees through h
                        for (int w = 1; w <= n_; ++w)
                            if (feas_[w % n_]) branches.push_back({0, 0, w});
                    if (owed_ < after) {
                        for (int w1 = 1; w1 <= n_; ++w1) {
                            int w2 = split2(w1);
                            for (int w = 1; w <= n_; ++w) {
                                bool ok = true;  // m -> v: v is seen through t
                                for (int tt = 0; tt < i && ok; ++tt) {
                                    int u = order_[tt];
                                    long long rr = rt_[img_[u]];
                                    ok = ((rr >= 0 && (rr + w1 + w) % n_ != 0)) == g_.has_edge(vi, u);
                                }
                                if (ok) branches.push_back({w1, 1, w});
                                ok = true;  // v -> m: v sees through h
                                for (int tt = 0; tt < i && ok; ++tt) {
                                    int u = order_[tt];
                                    long long ff = fh_[img_[u]];
                                    ok = ((ff >= 0 && (ff + w2 + w) % n_ != 0)) == g_.has_edge(vi, u);
                                }
                                if (ok) branches.push_back({w1, 0, w});
                            }
                        }
                    }
                }

                auto surgery = [&](int w1, int lab, signed char mark) {
                    int m = push_node(lab, mark);
                    int w2 = split2(w1);
                    out_[t][io] = {m, w1};
                    in_[h][ii] = {m, w2};
                    out_[m].push_back({h, w2});
                    in_[m].push_back({t, w1});
                    return m;
                };
                auto unsurgery = [&]() {
                    pop_node();
                    out_[t][io] = {h, warc};
                    in_[h][ii] = {t, warc};
                };

                for (int w1 : label_splits) {
                    if (found_) break;
                    int m = surgery(w1, vi, open_mark);
                    img_[vi] = m;
                    if (budgets_ok(after)) place(i + 1);
                    img_[vi] = -1;
                    unsurgery();
                }
                for (auto [w1, fwd, w] : branches) {
                    if (found_) break;
                    int m = w1 == 0 ? surgery(n_, -1, pinned_mark) : surgery(w1, -1, owed_mark);
                    int b = push_node(vi);
                    add_arc(m, b, w, fwd == 1);
                    img_[vi] = b;
                    if (budgets_ok(after)) place(i + 1);
                    img_[vi] = -1;
                    remove_last_arc(m, b, fwd == 1);
                    pop_node();
                    unsurgery();
                }
                // Zigzag path off a branch point inside the arc; the broken
                // path isolates the new vertex, so only vertices without a
                // placed neighbor qualify, and intermediates are free.
                if (!anchored && steiner_ + 1 < max_steiner_ + after) {
                    for (int w1 = 1; w1 <= n_ && !found_; ++w1) {
                        int m = surgery(w1, -1, open_mark);
                        for (int fwd = 0; fwd < 2 && !found_; ++fwd)
                            for (int w = 1; w <= n_ && !found_; ++w) {
                                int q = push_node(-1);
                                add_arc(m, q, w, fwd == 1);
                                grow_zigzag(i, vi, q, fwd != 1, after);
                                remove_last_arc(m, q, fwd == 1);
                                pop_node();
                            }
                        unsurgery();
                    }
                }
            }
        }

        // Attach a fresh arc (or zigzag path) at an existing node.
        for (int a = 0; a < frozen && !found_; ++a) {
            bwd_table(a, rt_);
            fwd_table(a, fh_);
            std::vector<std::pair<bool, int>> singles;  // (fwd, w)
            if (constrain(vi, i, rt_, 0, feas_))
                for (int w = 1; w <= n_; ++w)
                    if (feas_[w % n_]) singles.push_back({true, w});
            if (i > 1 && constrain(vi, i, fh_, 0, feas_))
                for (int w = 1; w <= n_; ++w)
                    if (feas_[w % n_]) singles.push_back({false, w});
            for (auto [fwd, w] : singles) {
                if (found_) break;
                int b = push_node(vi);
                add_arc(a, b, w, fwd);
                img_[vi] = b;
                if (budgets_ok(after)) place(i + 1);
                img_[vi] = -1;
                remove_last_arc(a, b, fwd);
                pop_node();
            }
            if (!anchored && steiner_ < max_steiner_ + after) {
                for (int fwd = 0; fwd < 2 && !found_; ++fwd) {
                    if (i == 1 && fwd == 0) continue;  // first arc direction is fixed
                    for (int w = 1; w <= n_ && !found_; ++w) {
                        int q = push_node(-1);
                        add_arc(a, q, w, fwd == 1);
                        grow_zigzag(i, vi, q, fwd != 1, after);
                        remove_last_arc(a, q, fwd == 1);
                        pop_node();
                    }
                }
            }
        }
    }

    // Continue a broken path: either finish it with the new vertex or insert
    // one more direction break.  Relations are checked the direct way; these
    // paths only serve vertices with no placed neighbor.
    void grow_zigzag(int i, int vi, int from, bool fwd, int after) {
        for (int w = 1; w <= n_ && !found_; ++w) {
            int b = push_node(vi);
            add_arc(from, b, w, fwd);
            img_[vi] = b;
            if (relations_ok(vi, b, i) && budgets_ok(after)) place(i + 1);
            img_[vi] = -1;
            remove_last_arc(from, b, fwd);
            pop_node();
            if (found_ || steiner_ >= max_steiner_ + after) continue;
            int q = push_node(-1);
            add_arc(from, q, w, fwd);
            grow_zigzag(i, vi, q, !fwd, after);
            remove_last_arc(from, q, fwd);
            pop_node();
        }
    }

    const Graph& g_;
    int n_, k_, max_steiner_;
    int steiner_ = 0;
    int owed_ = 0;  // Steiner nodes whose offset obliges a later conversion
    std::vector<int> order_;
    std::vector<int> label_;  // node -> graph vertex, -1 for Steiner
    std::vector<signed char> mark_;
    std::vector<std::vector<std::pair<int, int>>> out_, in_;
    std::vector<int> img_;    // graph vertex -> node
    std::vector<long long> dist_fwd_, dist_bwd_, rt_, fh_;
    std::vector<char> feas_;
    std::vector<int> stack_;
    std::optional<WillowCertificate> found_;
};

}  // namespace detail

// Exhausts all weighted oriented trees with weights in {1..n} and at most
// max_steiner unlabeled nodes, up to the reductions documented on the
// searcher.  Returns the first certificate that verifies, or absent once the
// bounded space is exhausted — absence is not a proof that G is no n-willow.
//
// One exit is unconditional: a clique embeds along a single directed path
// (tree adjacency forces comparability), and n+1 embedded vertices there
// have n+1 pairwise distinct prefix sums mod n, which cannot exist.  A
// clique larger than n therefore rules out every tree at once.
inline std::optional<WillowCertificate> search_certificate(const Graph& g, int n, int max_steiner) {
    if (g.n > 12) throw std::invalid_argument("search is capped at 12 vertices");
    if (max_steiner < 0 || max_steiner > 6)
        throw std::invalid_argument("search allows at most 6 Steiner nodes");
    if (n < 1) throw std::invalid_argument("modulus must be at least 1");
    if (static_cast<int>(max_clique(g).size()) > n) return std::nullopt;
    detail::WillowSearcher searcher(g, n, max_steiner);
    return searcher.run();
}

}  // namespace chibound
