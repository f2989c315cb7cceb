#include "tss/instance.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <thread>

#include "tss/errors.hpp"

namespace tss {

TSSInstance::TSSInstance(Graph g, std::vector<int> t, int k)
    : graph(std::move(g)), thresholds(std::move(t)), budget(k) {
    if (static_cast<int>(thresholds.size()) != graph.vertex_count())
        throw input_error("thresholds must be defined on exactly the graph vertices");
    for (int x : thresholds)
        if (x < 0) throw input_error("negative threshold");
    if (budget < 0) throw input_error("negative budget");
}

std::vector<std::string> ThresholdClasses::tags() const {
    std::vector<std::string> out;
    if (unanimous) out.push_back("unanimous");
    if (majority) out.push_back("majority");
    if (exact) out.push_back("exact(" + std::to_string(*exact) + ")");
    out.push_back("constant_bounded(" + std::to_string(constant_bound) + ")");
    out.push_back("general");
    return out;
}

namespace {

std::vector<int> checked_seed(const TSSInstance& inst, const std::vector<int>& seed) {
    std::vector<int> s(seed);
    for (int v : s)
        if (v < 0 || v >= inst.graph.vertex_count())
            throw input_error("seed vertex out of range: " + std::to_string(v));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

} // namespace

ActivationTrace simulate(const TSSInstance& inst, const std::vector<int>& seed) {
    const int n = inst.graph.vertex_count();
    std::vector<int> cur = checked_seed(inst, seed);

    std::vector<char> active(n, 0);
    std::vector<int> cnt(n, 0);
    for (int v : cur) active[v] = 1;
    for (int v : cur)
        for (int w : inst.graph.neighbors(v)) ++cnt[w];

    ActivationTrace trace;
    trace.rounds.push_back(cur);
    for (;;) {
        std::vector<int> fresh;
        for (int v = 0; v < n; ++v)
            if (!active[v] && cnt[v] >= inst.thresholds[v]) fresh.push_back(v);
        if (fresh.empty()) break;
        for (int v : fresh) {
            active[v] = 1;
            for (int w : inst.graph.neighbors(v)) ++cnt[w];
        }
        std::vector<int> next;
        next.reserve(cur.size() + fresh.size());
        std::merge(cur.begin(), cur.end(), fresh.begin(), fresh.end(), std::back_inserter(next));
        trace.rounds.push_back(next);
        cur = std::move(next);
    }
    return trace;
}

namespace {

// Queue-based activation closure with reusable buffers; the hot path of the
// brute-force oracle.
struct ClosureScratch {
    std::vector<char> active;
    std::vector<int> cnt;
    std::vector<int> queue;

    // Returns the number of eventually-active vertices.
    int run(const TSSInstance& inst, const int* seed, int k) {
        const int n = inst.graph.vertex_count();
        active.assign(n, 0);
        cnt.assign(n, 0);
        queue.clear();
        for (int i = 0; i < k; ++i) {
            int v = seed[i];
            if (!active[v]) {
                active[v] = 1;
                queue.push_back(v);
            }
        }
        int reached = static_cast<int>(queue.size());
        for (int v = 0; v < n; ++v)
            if (!active[v] && inst.thresholds[v] == 0) {
                active[v] = 1;
                queue.push_back(v);
                ++reached;
            }
        for (size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (int w : inst.graph.neighbors(v)) {
                if (active[w]) continue;
                if (++cnt[w] >= inst.thresholds[w]) {
                    active[w] = 1;
                    queue.push_back(w);
                    ++reached;
                }
            }
        }
        return reached;
    }
};

} // namespace

bool is_target_set(const TSSInstance& inst, const std::vector<int>& seed) {
    std::vector<int> s = checked_seed(inst, seed);
    ClosureScratch scratch;
    return scratch.run(inst, s.data(), static_cast<int>(s.size())) == inst.graph.vertex_count();
}

ThresholdClasses classify_thresholds(const TSSInstance& inst) {
    const int n = inst.graph.vertex_count();
    ThresholdClasses c;
    c.unanimous = true;
    c.majority = true;
    bool all_equal = n > 0;
    for (int v = 0; v < n; ++v) {
        const int t = inst.thresholds[v];
        const int deg = inst.graph.degree(v);
        if (t != deg) c.unanimous = false;
        if (t != (deg + 1) / 2) c.majority = false;
        c.constant_bound = std::max(c.constant_bound, t);
        if (t != inst.thresholds[0]) all_equal = false;
    }
    if (all_equal) c.exact = inst.thresholds[0];
    return c;
}

PreprocessResult preprocess_cap_thresholds(const TSSInstance& inst) {
    const int n = inst.graph.vertex_count();
    std::vector<char> alive(n, 1);
    std::vector<int> t(inst.thresholds);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = inst.graph.degree(v);

    PreprocessResult res;
    for (;;) {
        int victim = -1;
        for (int v = 0; v < n; ++v)
            if (alive[v] && t[v] > deg[v]) {
                victim = v;
                break;
            }
        if (victim < 0) break;
        alive[victim] = 0;
        res.removed.push_back(victim);
        ++res.budget_spent;
        for (int w : inst.graph.neighbors(victim)) {
            if (!alive[w]) continue;
            --deg[w];
            if (t[w] > 0) --t[w];
        }
    }

    std::vector<int> remap(n, -1);
    for (int v = 0; v < n; ++v)
        if (alive[v]) {
            remap[v] = static_cast<int>(res.survivor_to_original.size());
            res.survivor_to_original.push_back(v);
        }
    std::vector<Edge> edges;
    for (const auto& [u, v] : inst.graph.edges())
        if (alive[u] && alive[v]) edges.push_back({remap[u], remap[v]});
    std::vector<int> nt;
    nt.reserve(res.survivor_to_original.size());
    for (int v : res.survivor_to_original) nt.push_back(t[v]);

    res.feasible = res.budget_spent <= inst.budget;
    const int k = res.feasible ? inst.budget - res.budget_spent : 0;
    res.instance = TSSInstance(Graph(static_cast<int>(res.survivor_to_original.size()),
                                     std::move(edges)),
                               std::move(nt), k);
    return res;
}

std::vector<int> normalize_seed(const TSSInstance& inst, const std::vector<int>& seed) {
    std::vector<int> s = checked_seed(inst, seed);
    if (!is_target_set(inst, s))
        throw contract_error("normalize_seed: input is not a target set");

    const int n = inst.graph.vertex_count();
    std::vector<char> in(n, 0), settled(n, 0);
    for (int v : s) in[v] = 1;

    bool moved = true;
    while (moved) {
        moved = false;
        for (int v = 0; v < n && !moved; ++v) {
            if (!in[v] || settled[v]) continue;
            if (inst.thresholds[v] > 1 || inst.graph.degree(v) < 1) continue;
            for (int u : inst.graph.neighbors(v)) {
                if (in[u]) continue;
                in[v] = 0;
                in[u] = 1;
                settled[u] = 1;
                moved = true;
                break;
            }
        }
    }

    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (in[v]) out.push_back(v);
    if (!is_target_set(inst, out))
        throw contract_error("normalize_seed: replacement broke target set");
    return out;
}

namespace {

bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

struct WorkerHit {
    long long rank = LLONG_MAX;
    std::vector<int> witness;
};

} // namespace

BruteForceResult min_target_set_bruteforce(const TSSInstance& inst, int k_max,
                                           const BruteForceOptions& opts) {
    const int n = inst.graph.vertex_count();
    k_max = std::min(k_max, n);
    BruteForceResult result;

    const int workers = std::max(1, opts.workers);
    std::atomic<bool> timed_out{false};

    for (int k = 0; k <= k_max; ++k) {
        std::atomic<long long> best_rank{LLONG_MAX};
        std::vector<WorkerHit> hits(workers);

        auto work = [&](int wid) {
            ClosureScratch scratch;
            std::vector<int> comb(k);
            for (int i = 0; i < k; ++i) comb[i] = i;
            long long rank = 0;
            int tick = 0;
            do {
                if (rank % workers == wid) {
                    if (rank >= best_rank.load(std::memory_order_relaxed)) break;
                    if (opts.deadline && ++tick % 256 == 0 &&
                        std::chrono::steady_clock::now() > *opts.deadline) {
                        timed_out.store(true);
                        break;
                    }
                    if (scratch.run(inst, comb.data(), k) == n) {
                        hits[wid].rank = rank;
                        hits[wid].witness = comb;
                        long long cur = best_rank.load();
                        while (rank < cur && !best_rank.compare_exchange_weak(cur, rank)) {
                        }
                        break;
                    }
                }
                ++rank;
            } while (next_combination(comb, n));
        };

        if (workers == 1 || k == 0) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
            for (auto& th : pool) th.join();
        }

        const WorkerHit* best = nullptr;
        for (const auto& h : hits)
            if (h.rank != LLONG_MAX && (!best || h.rank < best->rank)) best = &h;
        if (best) {
            result.best = {k, best->witness};
            return result;
        }
        if (timed_out.load()) {
            result.timed_out = true;
            return result;
        }
    }
    return result;
}

} // namespace tss
