#include "wturan/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "wturan/detect.hpp"
#include "wturan/errors.hpp"

namespace wturan {

namespace {

Int widen(const Int& v) { return v; }

Int widen(__int128 v) {
    const bool negative = v < 0;
    unsigned __int128 mag =
        negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    Int result = Int(static_cast<std::uint64_t>(mag >> 64));
    result <<= 64;
    result += Int(static_cast<std::uint64_t>(mag));
    return negative ? -result : result;
}

// Placement plan for one oriented pattern edge: the remaining pattern
// vertices in a connectivity-greedy order, with their already-placed
// pattern neighbors (seed endpoints included).
struct SeedPlan {
    int a = 0;
    int b = 0;
    std::vector<int> order;
    std::vector<std::vector<int>> prior;
};

std::vector<SeedPlan> build_seed_plans(const SimpleGraph& h) {
    std::vector<SeedPlan> plans;
    for (auto [x, y] : h.edges()) {
        for (auto [a, b] : {std::pair{x, y}, std::pair{y, x}}) {
            SeedPlan plan;
            plan.a = a;
            plan.b = b;
            std::uint64_t placed = (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
            const int hn = h.vertex_count();
            for (int step = 2; step < hn; ++step) {
                int best = -1, best_attached = -1, best_degree = -1;
                for (int v = 0; v < hn; ++v) {
                    if (placed & (std::uint64_t{1} << v)) continue;
                    const int attached = popcount64(h.neighbors(v) & placed);
                    const int degree = h.degree(v);
                    if (attached > best_attached ||
                        (attached == best_attached && degree > best_degree)) {
                        best = v;
                        best_attached = attached;
                        best_degree = degree;
                    }
                }
                std::vector<int> prior;
                std::uint64_t nbrs = h.neighbors(best) & placed;
                while (nbrs) {
                    prior.push_back(lowest_bit(nbrs));
                    nbrs &= nbrs - 1;
                }
                plan.order.push_back(best);
                plan.prior.push_back(std::move(prior));
                placed |= std::uint64_t{1} << best;
            }
            plans.push_back(std::move(plan));
        }
    }
    return plans;
}

template <class V>
struct SearchConfig {
    int n = 0;
    std::uint64_t full = 0;
    std::vector<std::pair<int, int>> cand; // lexicographic edge order
    std::vector<V> edge_val;
    std::vector<V> suffix; // suffix[e] = total value of candidates e..end
    bool is_clique = true;
    int clique_l = 0;
    SimpleGraph h;
    std::vector<SeedPlan> seeds;
};

// One independent DFS over a subtree. Keeps its own incumbent; the shared
// bound (when present) is only ever used for strictly-worse pruning, so a
// stale read costs time, never correctness or determinism.
template <class V>
class TaskSearch {
public:
    TaskSearch(const SearchConfig<V>& cfg, const std::atomic<long long>* shared)
        : cfg_(cfg), shared_(shared), sel_(cfg.cand.size(), 0),
          image_(cfg.is_clique ? 0 : static_cast<std::size_t>(cfg.h.vertex_count()), -1) {
        adj_.fill(0);
    }

    // Applies the first `prefix_bits` include/exclude decisions encoded in
    // task_id (highest bit = first edge). False when an include completes the
    // pattern, i.e. the whole subtree is infeasible.
    bool apply_prefix(int prefix_bits, unsigned task_id) {
        cur_ = V(0);
        for (int i = 0; i < prefix_bits; ++i) {
            if ((task_id >> (prefix_bits - 1 - i)) & 1u) {
                auto [u, v] = cfg_.cand[static_cast<std::size_t>(i)];
                link(u, v);
                if (completes_pattern(u, v)) return false;
                sel_[static_cast<std::size_t>(i)] = 1;
                cur_ += cfg_.edge_val[static_cast<std::size_t>(i)];
            }
        }
        return true;
    }

    void run(int from_edge) { descend(from_edge, cur_); }

    bool have_best() const { return have_best_; }
    const V& best_value() const { return best_val_; }
    const std::vector<char>& best_selection() const { return best_sel_; }
    std::uint64_t explored() const { return explored_; }

private:
    void link(int u, int v) {
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
    void unlink(int u, int v) {
        adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
        adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
    }

    bool clique_in(std::uint64_t cand, int need) const {
        if (need == 0) return true;
        if (popcount64(cand) < need) return false;
        while (cand) {
            const int v = lowest_bit(cand);
            cand &= cand - 1;
            if (clique_in(cand & adj_[static_cast<std::size_t>(v)], need - 1)) return true;
        }
        return false;
    }

    bool extend_seed(const SeedPlan& plan, std::size_t step, std::uint64_t used) {
        if (step == plan.order.size()) return true;
        const int hv = plan.order[step];
        std::uint64_t cand = cfg_.full & ~used;
        for (int ph : plan.prior[step])
            cand &= adj_[static_cast<std::size_t>(image_[static_cast<std::size_t>(ph)])];
        const int hdeg = cfg_.h.degree(hv);
        while (cand) {
            const int gv = lowest_bit(cand);
            cand &= cand - 1;
            if (popcount64(adj_[static_cast<std::size_t>(gv)]) < hdeg) continue;
            image_[static_cast<std::size_t>(hv)] = gv;
            if (extend_seed(plan, step + 1, used | (std::uint64_t{1} << gv))) return true;
        }
        return false;
    }

    // Containment test restricted to copies through the edge (u, v), which is
    // already linked. Sound because containment is monotone under inclusion:
    // any copy in a leaf graph is detected when its last edge arrives.
    bool completes_pattern(int u, int v) {
        if (cfg_.is_clique) {
            if (cfg_.clique_l == 2) return true;
            return clique_in(adj_[static_cast<std::size_t>(u)] &
                                 adj_[static_cast<std::size_t>(v)],
                             cfg_.clique_l - 2);
        }
        for (const SeedPlan& plan : cfg_.seeds) {
            if (popcount64(adj_[static_cast<std::size_t>(u)]) < cfg_.h.degree(plan.a) ||
                popcount64(adj_[static_cast<std::size_t>(v)]) < cfg_.h.degree(plan.b))
                continue;
            image_[static_cast<std::size_t>(plan.a)] = u;
            image_[static_cast<std::size_t>(plan.b)] = v;
            if (extend_seed(plan, 0, (std::uint64_t{1} << u) | (std::uint64_t{1} << v)))
                return true;
        }
        return false;
    }

    void descend(int e, V cur) {
        ++explored_;
        if (e == static_cast<int>(cfg_.cand.size())) {
            // first-found wins ties: include-first order makes that the
            // lexicographically largest optimal indicator
            if (!have_best_ || cur > best_val_) {
                have_best_ = true;
                best_val_ = cur;
                best_sel_ = sel_;
            }
            return;
        }
        const V potential = cur + cfg_.suffix[static_cast<std::size_t>(e)];
        if (have_best_ && potential <= best_val_) return;
        if (shared_ && potential < V(shared_->load(std::memory_order_relaxed))) return;

        auto [u, v] = cfg_.cand[static_cast<std::size_t>(e)];
        link(u, v);
        if (!completes_pattern(u, v)) {
            sel_[static_cast<std::size_t>(e)] = 1;
            descend(e + 1, cur + cfg_.edge_val[static_cast<std::size_t>(e)]);
            sel_[static_cast<std::size_t>(e)] = 0;
        }
        unlink(u, v);
        descend(e + 1, cur);
    }

    const SearchConfig<V>& cfg_;
    const std::atomic<long long>* shared_;
    std::array<std::uint64_t, 64> adj_{};
    std::vector<char> sel_;
    std::vector<int> image_;
    std::vector<char> best_sel_;
    V best_val_{};
    V cur_{};
    bool have_best_ = false;
    std::uint64_t explored_ = 0;
};

// (value, then lexicographically larger indicator) — a total order on
// outcomes, so merging is independent of scheduling.
template <class V>
bool better_outcome(const V& value_a, const std::vector<char>& sel_a, const V& value_b,
                    const std::vector<char>& sel_b) {
    if (value_a != value_b) return value_a > value_b;
    return std::lexicographical_compare(sel_b.begin(), sel_b.end(), sel_a.begin(),
                                        sel_a.end());
}

long long saturate64(__int128 v) {
    const __int128 cap = std::numeric_limits<long long>::max();
    return static_cast<long long>(v > cap ? cap : v);
}

long long saturate64(const Int& v) {
    const Int cap = std::numeric_limits<long long>::max();
    return (v > cap ? cap : v).convert_to<long long>();
}

template <class V>
struct SearchOutcome {
    V value{};
    std::vector<char> selection;
    std::uint64_t explored = 0;
};

template <class V>
SearchOutcome<V> run_search(const SearchConfig<V>& cfg, int threads) {
    const int m = static_cast<int>(cfg.cand.size());
    if (threads <= 1 || m == 0) {
        TaskSearch<V> task(cfg, nullptr);
        task.run(0);
        return {task.best_value(), task.best_selection(), task.explored()};
    }

    // split on the first few edge decisions; each prefix is one root task
    const int prefix_bits = std::min(8, m);
    const unsigned task_count = 1u << prefix_bits;
    std::atomic<unsigned> next_task{0};
    std::atomic<long long> shared_bound{std::numeric_limits<long long>::min()};
    std::mutex merge_mutex;
    SearchOutcome<V> merged;
    bool have_merged = false;
    std::uint64_t explored_total = 0;

    auto worker = [&] {
        for (;;) {
            const unsigned id = next_task.fetch_add(1);
            if (id >= task_count) return;
            TaskSearch<V> task(cfg, &shared_bound);
            if (!task.apply_prefix(prefix_bits, id)) continue;
            task.run(prefix_bits);
            std::lock_guard<std::mutex> lock(merge_mutex);
            explored_total += task.explored();
            if (!task.have_best()) continue;
            if (!have_merged || better_outcome(task.best_value(), task.best_selection(),
                                               merged.value, merged.selection)) {
                have_merged = true;
                merged.value = task.best_value();
                merged.selection = task.best_selection();
                long long seen = shared_bound.load();
                const long long mine = saturate64(task.best_value());
                while (seen < mine && !shared_bound.compare_exchange_weak(seen, mine)) {
                }
            }
        }
    };

    std::vector<std::thread> pool;
    const int workers = std::min<int>(threads, static_cast<int>(task_count));
    pool.reserve(static_cast<std::size_t>(workers));
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    merged.explored = explored_total;
    if (!have_merged) {
        // every include prefix was infeasible except none selected; the
        // all-exclude prefix (id with zero bits) is always feasible, so this
        // cannot happen, but stay defensive against future edits
        merged.value = V(0);
        merged.selection.assign(cfg.cand.size(), 0);
    }
    return merged;
}

template <class V, class MakeValue>
OracleResult finish_search(const WeightVector& w, const ForbiddenPattern& pattern,
                           ObjectiveKind objective, int threads, const SimpleGraph& hgraph,
                           MakeValue&& make_edge_value, const Int& value_denominator) {
    const int n = w.size();
    SearchConfig<V> cfg;
    cfg.n = n;
    cfg.full = n == 0 ? 0 : (n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) cfg.cand.emplace_back(u, v);
    cfg.edge_val.reserve(cfg.cand.size());
    for (auto [u, v] : cfg.cand) cfg.edge_val.push_back(make_edge_value(u, v));
    cfg.suffix.assign(cfg.cand.size() + 1, V(0));
    for (int e = static_cast<int>(cfg.cand.size()) - 1; e >= 0; --e)
        cfg.suffix[static_cast<std::size_t>(e)] =
            cfg.suffix[static_cast<std::size_t>(e) + 1] +
            cfg.edge_val[static_cast<std::size_t>(e)];
    cfg.is_clique = pattern.is_clique();
    if (cfg.is_clique) {
        cfg.clique_l = pattern.clique_size();
    } else {
        cfg.h = hgraph;
        cfg.seeds = build_seed_plans(cfg.h);
    }

    SearchOutcome<V> outcome = run_search(cfg, threads);

    std::vector<std::pair<int, int>> chosen;
    for (std::size_t e = 0; e < cfg.cand.size(); ++e)
        if (outcome.selection[e]) chosen.push_back(cfg.cand[e]);
    return OracleResult{Rational(widen(outcome.value), value_denominator),
                        SimpleGraph::from_edges(n, chosen), outcome.explored, pattern,
                        objective};
}

} // namespace

OracleResult brute_force_ex(const WeightVector& w, const ForbiddenPattern& pattern,
                            ObjectiveKind objective, const OracleOptions& options) {
    const int n = w.size();
    const int cap = options.max_n_override > 0 ? options.max_n_override
                                               : (pattern.is_clique() ? 8 : 7);
    if (n > cap)
        throw TooLargeError("exhaustive search capped at n=" + std::to_string(cap) +
                            ", got n=" + std::to_string(n));

    const ScaledWeights scaled = scale_weights(w);
    const SimpleGraph hgraph = pattern.is_clique() ? SimpleGraph() : pattern.graph();
    const Int denom = objective == ObjectiveKind::Sum ? scaled.denom
                                                      : scaled.denom * scaled.denom;
    if (scaled.fits64) {
        auto edge_value = [&](int u, int v) -> __int128 {
            const auto su = scaled.small[static_cast<std::size_t>(u)];
            const auto sv = scaled.small[static_cast<std::size_t>(v)];
            return objective == ObjectiveKind::Sum
                       ? static_cast<__int128>(su) + sv
                       : static_cast<__int128>(su) * sv;
        };
        return finish_search<__int128>(w, pattern, objective, options.threads, hgraph,
                                       edge_value, denom);
    }
    auto edge_value = [&](int u, int v) -> Int {
        const Int& su = scaled.scaled[static_cast<std::size_t>(u)];
        const Int& sv = scaled.scaled[static_cast<std::size_t>(v)];
        return objective == ObjectiveKind::Sum ? Int(su + sv) : Int(su * sv);
    };
    // bignum values: keep it single-threaded, the shared bound is int64-based
    return finish_search<Int>(w, pattern, objective, 1, hgraph, edge_value, denom);
}

CertifyReport certify(const WeightVector& w, const ForbiddenPattern& pattern,
                      const OracleOptions& options) {
    OracleResult sum_oracle = brute_force_ex(w, pattern, ObjectiveKind::Sum, options);
    OracleResult product_oracle = brute_force_ex(w, pattern, ObjectiveKind::Product, options);
    const ExtremalResult sum_formula = ex_sum(w, pattern);
    const ExtremalResult product_formula = ex_product(w, pattern);

    CertifyReport report{std::move(sum_oracle),
                         std::move(product_oracle),
                         sum_formula.objective_value,
                         product_formula.objective_value,
                         sum_formula.leading_term_only,
                         false,
                         false};
    if (report.leading_term) {
        report.sum_pass = report.sum_oracle.best_value >= report.sum_formula;
        report.product_pass = report.product_oracle.best_value >= report.product_formula;
    } else {
        report.sum_pass = report.sum_oracle.best_value == report.sum_formula;
        report.product_pass = report.product_oracle.best_value == report.product_formula;
    }
    return report;
}

} // namespace wturan
