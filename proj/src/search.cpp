#include "critideal/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_set>

namespace critideal {

namespace {

// Index-addressed parallel map; results land in input order so every run
// is deterministic regardless of worker count.
template <typename In, typename Out>
std::vector<Out> parallel_map(const std::vector<In>& items, int jobs,
                              const std::function<Out(const In&)>& fn) {
    std::vector<Out> results(items.size());
    if (jobs <= 1 || items.size() <= 1) {
        for (size_t i = 0; i < items.size(); ++i) results[i] = fn(items[i]);
        return results;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= items.size()) return;
            try {
                results[i] = fn(items[i]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int count = std::min<int>(jobs, static_cast<int>(items.size()));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return results;
}

struct Checkpoint {
    std::unordered_set<std::string> seen;
    std::ofstream out;
    bool active = false;

    explicit Checkpoint(const std::string& path) {
        if (path.empty()) return;
        active = true;
        std::ifstream in(path);
        for (std::string line; std::getline(in, line);)
            if (!line.empty()) seen.insert(line);
        out.open(path, std::ios::app);
        if (!out) throw std::runtime_error("cannot open checkpoint file " + path);
    }
    bool contains(const std::string& hex) const { return active && seen.count(hex) > 0; }
    void record(const std::string& hex) {
        if (active) out << hex << "\n" << std::flush;
    }
};

}  // namespace

SearchReport find_minimal_forbidden(const std::vector<Graph>& stream, int k,
                                    const SearchOptions& options) {
    if (k < 1) throw std::invalid_argument("forbidden-family level k must be at least 1");
    SearchReport report;
    Checkpoint checkpoint(options.checkpoint_path);

    // Ascending order so hits found on small graphs prune the larger ones.
    std::vector<Graph> graphs = stream;
    std::stable_sort(graphs.begin(), graphs.end(),
                     [](const Graph& a, const Graph& b) { return a.order() < b.order(); });

    std::vector<Graph> hit_graphs;
    size_t pos = 0;
    while (pos < graphs.size()) {
        size_t end = pos;
        while (end < graphs.size() && graphs[end].order() == graphs[pos].order()) ++end;

        std::vector<Graph> batch;
        std::vector<std::string> batch_hex;
        for (size_t i = pos; i < end; ++i) {
            std::string hex = canonical_hex(graphs[i]);
            if (checkpoint.contains(hex)) {
                ++report.skipped_by_checkpoint;
                continue;
            }
            ++report.processed;
            if (options.prune) {
                bool contains_hit = false;
                for (const auto& h : hit_graphs)
                    if (h.order() < graphs[i].order() && contains_induced(h, graphs[i])) {
                        contains_hit = true;
                        break;
                    }
                if (contains_hit) {
                    ++report.skipped_by_pruning;
                    checkpoint.record(hex);
                    continue;
                }
            }
            batch.push_back(graphs[i]);
            batch_hex.push_back(std::move(hex));
        }

        GbBudget budget = options.budget;
        std::function<std::optional<SearchHit>(const Graph&)> examine =
            [k, budget](const Graph& g) -> std::optional<SearchHit> {
            int gg;
            try {
                gg = gamma(g, budget).gamma;
            } catch (const BudgetExhausted& e) {
                throw BudgetExhausted(std::string(e.what()) + " on graph " + write_graph6(g));
            }
            if (gg < k + 1) return std::nullopt;
            for (int v = 0; v < g.order(); ++v)
                if (gamma(delete_vertex(g, v), budget).gamma > k) return std::nullopt;
            return SearchHit{write_graph6(g), gg, true};
        };
        auto results = parallel_map(batch, options.jobs, examine);
        for (size_t i = 0; i < results.size(); ++i) {
            if (results[i]) {
                report.hits.push_back(*results[i]);
                hit_graphs.push_back(batch[i]);
            }
            checkpoint.record(batch_hex[i]);
        }
        pos = end;
    }
    return report;
}

namespace {

VerifyReport verify_over_connected(int n_max, const SearchOptions& options,
                                   const std::function<bool(const Graph&)>& relevant,
                                   const std::function<bool(const Graph&)>& consistent) {
    if (n_max < 1 || n_max > kEnumerateCap)
        throw std::invalid_argument("verification cap must be between 1 and 7");
    VerifyReport report;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Graph> all = enumerate_connected(n);
        std::vector<Graph> wanted;
        for (const auto& g : all)
            if (relevant(g)) wanted.push_back(g);
        report.checked += static_cast<long>(wanted.size());
        // char, not bool: vector<bool> bit-packing is not safe to write
        // from multiple workers.
        std::function<char(const Graph&)> check = [&consistent](const Graph& g) {
            return static_cast<char>(consistent(g) ? 1 : 0);
        };
        auto oks = parallel_map(wanted, options.jobs, check);
        for (size_t i = 0; i < oks.size(); ++i)
            if (!oks[i]) report.counterexamples.push_back(write_graph6(wanted[i]));
    }
    return report;
}

}  // namespace

VerifyReport verify_omega_classification(int n_max, int omega, const SearchOptions& options) {
    if (omega != 2 && omega != 3)
        throw std::invalid_argument("classification is available for clique number 2 or 3");
    const auto& templates = omega == 2 ? f2_templates() : f1_templates();
    return verify_over_connected(
        n_max, options, [omega](const Graph& g) { return clique_number(g) == omega; },
        [&templates](const Graph& g) {
            bool free = !f3_free(g).has_value();
            bool member = family_member(g, templates).has_value();
            return free == member;
        });
}

VerifyReport verify_gamma_equals_f3_free(int n_max, const SearchOptions& options) {
    GbBudget budget = options.budget;
    return verify_over_connected(
        n_max, options, [](const Graph&) { return true; },
        [budget](const Graph& g) {
            bool low_corank = gamma(g, budget).gamma <= 3;
            bool free = !f3_free(g).has_value();
            return low_corank == free;
        });
}

std::vector<Graph> read_graph6_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file " + path);
    std::vector<Graph> out;
    long lineno = 0;
    for (std::string line; std::getline(in, line);) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const std::exception& e) {
            throw std::invalid_argument(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

}  // namespace critideal
