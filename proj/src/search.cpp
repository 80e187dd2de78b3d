#include <berge/containment.hpp>
#include <berge/error.hpp>
#include <berge/search.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace berge {

namespace {

using Clock = std::chrono::steady_clock;

void check_inputs(int n, int r, const SearchOptions& opts)
{
    if (r < 2)
        throw Error(ErrorCode::bad_parameters, "search needs r >= 2");
    if (n < r)
        throw Error(ErrorCode::bad_parameters, "search needs n >= r");
    if (n > max_vertices)
        throw Error(ErrorCode::bad_parameters, "n exceeds the vertex limit " + std::to_string(max_vertices));
    if (opts.workers < 1)
        throw Error(ErrorCode::bad_parameters, "worker count must be at least 1");
    if (opts.split_depth < 1)
        throw Error(ErrorCode::bad_parameters, "split depth must be at least 1");
    if (opts.seed && (opts.seed->vertex_count() != n || opts.seed->uniformity() != r))
        throw Error(ErrorCode::bad_parameters, "seed construction has the wrong shape");
}

std::vector<VertexSet> all_candidates(int n, int r)
{
    std::vector<VertexSet> out;
    for_each_subset(VertexSet::range(0, n), r, [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

bool lex_less(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b)
{
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<VertexSet> image_of(std::span<const VertexSet> edges, const std::vector<Vertex>& perm)
{
    std::vector<VertexSet> out;
    out.reserve(edges.size());
    for (const auto& e : edges) {
        VertexSet img;
        e.for_each([&](Vertex v) { img.insert(perm[v]); });
        out.push_back(img);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool has_smaller_relabeling(const Hypergraph& h)
{
    const int n = h.vertex_count();
    const std::vector<VertexSet> edges(h.edges().begin(), h.edges().end());
    const auto degree = h.degrees();

    std::vector<Vertex> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(), [&](Vertex a, Vertex b) { return degree[a] > degree[b]; });
    std::vector<Vertex> perm(n);
    for (int i = 0; i < n; ++i)
        perm[by_degree[i]] = i;
    if (lex_less(image_of(edges, perm), edges))
        return true;

    std::iota(perm.begin(), perm.end(), 0);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (degree[u] == 0 && degree[v] == 0)
                continue;
            std::swap(perm[u], perm[v]);
            const bool smaller = lex_less(image_of(edges, perm), edges);
            std::swap(perm[u], perm[v]);
            if (smaller)
                return true;
        }
    }
    return false;
}

struct Shared {
    std::atomic<std::int64_t> best{-1};
    std::atomic<bool> stop{false};
    std::atomic<bool> timed_out{false};
    std::optional<Clock::time_point> deadline;

    std::mutex witness_mutex;
    std::optional<Hypergraph> witness;
    std::int64_t witness_value = -1;

    void offer(const Hypergraph& h)
    {
        const auto value = static_cast<std::int64_t>(h.edge_count());
        auto current = best.load();
        bool raised = false;
        while (value > current && !raised)
            raised = best.compare_exchange_weak(current, value);
        if (!raised)
            return;
        std::lock_guard lock(witness_mutex);
        if (value > witness_value) {
            witness_value = value;
            witness = h;
        }
    }
};

struct Task {
    std::vector<int> chosen; // candidate indices, increasing
};

class Explorer {
public:
    Explorer(const std::vector<VertexSet>& candidates, const BergeMatcher& matcher, Shared& shared, int n, int r,
        const SearchOptions& opts, bool connected_only)
        : candidates_(candidates), matcher_(matcher), shared_(shared), n_(n), r_(r), opts_(opts),
          connected_only_(connected_only)
    {
    }

    // Explores the subtree below `h`, whose largest edge is candidate `last`.
    // Nodes at depth `split_at` are collected into `frontier` instead.
    void explore(const Hypergraph& h, int last, int split_at = -1, std::vector<Task>* frontier = nullptr,
        std::vector<int>* path = nullptr)
    {
        if (shared_.stop.load(std::memory_order_relaxed))
            return;
        const int depth = static_cast<int>(h.edge_count());
        if (frontier && depth == split_at) {
            frontier->push_back({*path});
            return;
        }
        if ((++stats.nodes & 255U) == 0 && shared_.deadline && Clock::now() > *shared_.deadline) {
            shared_.timed_out = true;
            shared_.stop = true;
            return;
        }
        if (!connected_only_ || is_connected(h))
            shared_.offer(h);
        if (opts_.isomorphism_pruning && depth >= 2 && has_smaller_relabeling(h)) {
            ++stats.isomorphism_prunes;
            return;
        }

        const int total = static_cast<int>(candidates_.size());
        int end = total;
        if (depth == 0 && opts_.symmetry_fixing)
            end = std::min(total, 1);
        for (int i = last + 1; i < end; ++i) {
            if (depth + (total - i) <= shared_.best.load(std::memory_order_relaxed)) {
                ++stats.bound_prunes;
                break;
            }
            Hypergraph next = h.with_edge(candidates_[i]);
            if (matcher_.find_using(next, next.edge_count() - 1)) {
                ++stats.containment_prunes;
                continue;
            }
            if (path)
                path->push_back(i);
            explore(next, i, split_at, frontier, path);
            if (path)
                path->pop_back();
            if (shared_.stop.load(std::memory_order_relaxed))
                return;
        }
    }

    void run_task(const Task& task)
    {
        std::vector<VertexSet> edges;
        for (int i : task.chosen)
            edges.push_back(candidates_[i]);
        explore(Hypergraph::create(n_, r_, std::move(edges)), task.chosen.back());
    }

    SearchStats stats;

private:
    const std::vector<VertexSet>& candidates_;
    const BergeMatcher& matcher_;
    Shared& shared_;
    int n_;
    int r_;
    const SearchOptions& opts_;
    bool connected_only_;
};

SearchOutcome run_search(int n, int r, const FamilySpec& f, const SearchOptions& opts, bool connected_only)
{
    check_inputs(n, r, opts);
    const auto started = Clock::now();
    const BergeMatcher matcher(f);
    const auto candidates = all_candidates(n, r);

    Shared shared;
    if (opts.time_limit_seconds)
        shared.deadline = started + std::chrono::duration_cast<Clock::duration>(
                                        std::chrono::duration<double>(*opts.time_limit_seconds));
    if (opts.seed) {
        if (matcher.find(*opts.seed))
            throw Error(ErrorCode::bad_parameters, "seed construction contains Berge-" + f.to_string());
        if (!connected_only || is_connected(*opts.seed))
            shared.offer(*opts.seed);
    }

    SearchStats stats;
    const Hypergraph root = Hypergraph::empty(n, r);
    if (opts.workers == 1) {
        Explorer explorer(candidates, matcher, shared, n, r, opts, connected_only);
        explorer.explore(root, -1);
        stats = explorer.stats;
    } else {
        Explorer splitter(candidates, matcher, shared, n, r, opts, connected_only);
        std::vector<Task> frontier;
        std::vector<int> path;
        splitter.explore(root, -1, opts.split_depth, &frontier, &path);
        stats = splitter.stats;

        std::atomic<std::size_t> next{0};
        std::mutex stats_mutex;
        std::vector<std::thread> pool;
        for (int w = 0; w < opts.workers; ++w) {
            pool.emplace_back([&] {
                Explorer explorer(candidates, matcher, shared, n, r, opts, connected_only);
                for (std::size_t t = next++; t < frontier.size(); t = next++)
                    explorer.run_task(frontier[t]);
                std::lock_guard lock(stats_mutex);
                stats.nodes += explorer.stats.nodes;
                stats.containment_prunes += explorer.stats.containment_prunes;
                stats.bound_prunes += explorer.stats.bound_prunes;
                stats.isomorphism_prunes += explorer.stats.isomorphism_prunes;
            });
        }
        for (auto& t : pool)
            t.join();
    }
    stats.wall_seconds = std::chrono::duration<double>(Clock::now() - started).count();

    SearchOutcome out;
    out.connected = connected_only;
    out.stats = stats;
    out.witness = shared.witness;
    const auto best = shared.best.load();
    out.value = std::max<std::int64_t>(best, 0);
    if (shared.timed_out)
        out.status = best >= 0 ? SearchStatus::lower_bound_only : SearchStatus::timeout;
    else
        out.status = SearchStatus::exact;
    out.infeasible = connected_only && best < 0 && !shared.timed_out;
    if (out.witness && matcher.find(*out.witness))
        throw std::logic_error("search witness contains the forbidden family");
    return out;
}

} // namespace

std::string_view to_string(SearchStatus s)
{
    switch (s) {
    case SearchStatus::exact: return "exact";
    case SearchStatus::lower_bound_only: return "lower_bound_only";
    case SearchStatus::timeout: return "timeout";
    }
    return "exact";
}

SearchStatus parse_search_status(std::string_view text)
{
    for (auto s : {SearchStatus::exact, SearchStatus::lower_bound_only, SearchStatus::timeout})
        if (to_string(s) == text)
            return s;
    throw Error(ErrorCode::malformed_input, "unknown search status '" + std::string(text) + "'");
}

SearchOutcome turan_exact(int n, int r, const FamilySpec& f, const SearchOptions& opts)
{
    return run_search(n, r, f, opts, false);
}

SearchOutcome turan_connected(int n, int r, const FamilySpec& f, const SearchOptions& opts)
{
    return run_search(n, r, f, opts, true);
}

SearchOutcome local_lower_bound(int n, int r, const FamilySpec& f, const SearchOptions& opts)
{
    check_inputs(n, r, opts);
    if (opts.iterations < 0)
        throw Error(ErrorCode::bad_parameters, "iteration count must be non-negative");
    const auto started = Clock::now();
    const BergeMatcher matcher(f);
    const auto candidates = all_candidates(n, r);
    std::mt19937_64 rng(opts.rng_seed);

    auto refill = [&](Hypergraph h) {
        std::vector<int> order(candidates.size());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        for (int i : order) {
            if (h.has_edge(candidates[i]))
                continue;
            Hypergraph next = h.with_edge(candidates[i]);
            if (!matcher.find_using(next, static_cast<std::size_t>(next.find_edge(candidates[i]))))
                h = std::move(next);
        }
        return h;
    };

    SearchOutcome out;
    out.status = SearchStatus::lower_bound_only;
    Hypergraph start = Hypergraph::empty(n, r);
    if (opts.seed) {
        if (matcher.find(*opts.seed))
            throw Error(ErrorCode::bad_parameters, "seed construction contains Berge-" + f.to_string());
        start = *opts.seed;
    }
    Hypergraph best = refill(start);
    if (opts.seed && opts.seed->edge_count() > best.edge_count())
        best = *opts.seed;
    Hypergraph current = best;
    std::uint64_t nodes = 0;

    for (int it = 0; it < opts.iterations; ++it) {
        if (opts.time_limit_seconds
            && std::chrono::duration<double>(Clock::now() - started).count() > *opts.time_limit_seconds)
            break;
        Hypergraph trial = current;
        const int drops = std::min<int>(static_cast<int>(trial.edge_count()), 1 + static_cast<int>(rng() % 2));
        for (int d = 0; d < drops; ++d)
            trial = trial.without_edge(rng() % trial.edge_count());
        trial = refill(trial);
        ++nodes;
        if (trial.edge_count() >= current.edge_count())
            current = trial;
        if (current.edge_count() > best.edge_count())
            best = current;
        out.history.push_back(static_cast<std::int64_t>(best.edge_count()));
    }

    out.value = static_cast<std::int64_t>(best.edge_count());
    out.witness = best;
    out.stats.nodes = nodes;
    out.stats.wall_seconds = std::chrono::duration<double>(Clock::now() - started).count();
    if (matcher.find(best))
        throw std::logic_error("local search produced a hypergraph containing the forbidden family");
    return out;
}

} // namespace berge
