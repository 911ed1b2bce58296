#include "starforest/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "starforest/bounds.hpp"
#include "starforest/verify.hpp"

namespace starforest {

std::string to_string(SearchStatus s) {
    switch (s) {
        case SearchStatus::found: return "Found";
        case SearchStatus::exhausted_not_found: return "ExhaustedNotFound";
        case SearchStatus::budget_exceeded: return "BudgetExceeded";
    }
    return "?";
}

namespace {

// Role of a vertex inside one forest. A lone edge is a PAIR until a third
// vertex attaches and fixes its center.
enum State : std::uint8_t { FREE, CENTER, LEAF, PAIR };

using Clock = std::chrono::steady_clock;

struct Shared {
    std::int64_t max_nodes;
    Clock::time_point deadline;
    std::atomic<std::int64_t> nodes{0};
    std::atomic<bool> out_of_budget{false};
    std::atomic<int> best_task{1 << 30};  // lowest task index that found a solution
};

class Solver {
public:
    Solver(int n, int k, int m, Shared& shared) : n_(n), k_(k), m_(m), shared_(shared) {
        edges_ = complete_graph_edges(n);
        state_.assign(static_cast<std::size_t>(m) * n, FREE);
        partner_.assign(static_cast<std::size_t>(m) * n, -1);
        comps_.assign(m, 0);
        free_.assign(m, n);
        rem_.assign(n, n - 1);
        assign_.assign(edges_.size(), -1);
    }

    // Which forest each edge went to, for the current path.
    const std::vector<int>& assignment() const { return assign_; }

    // Replays a prefix of forest choices (used to seed parallel tasks).
    bool replay(const std::vector<int>& prefix) {
        for (int f : prefix) {
            if (!apply(pos_, f)) return false;
        }
        return true;
    }

    std::size_t depth() const { return pos_; }
    int max_used() const { return max_used_; }

    // Every legal forest choice for the next edge, in try order.
    std::vector<int> choices() {
        std::vector<int> out;
        if (pos_ >= edges_.size() || !feasible()) return out;
        int limit = std::min(max_used_ + 1, m_ - 1);
        for (int f = 0; f <= limit; ++f) {
            if (legal(edges_[pos_], f)) out.push_back(f);
        }
        return out;
    }

    bool apply(std::size_t e, int f) {
        if (e != pos_ || !legal(edges_[e], f)) return false;
        push(f);
        return true;
    }

    void undo() { pop(); }

    // Depth-first search from the current node. task >= 0 lets the search
    // give up once a lower-indexed task already succeeded.
    enum class Outcome { found, exhausted, aborted };
    Outcome run(int task = -1) {
        if (pos_ == edges_.size()) return Outcome::found;
        if (!tick()) return Outcome::aborted;
        if (task >= 0 && shared_.best_task.load(std::memory_order_relaxed) < task) return Outcome::aborted;
        if (!feasible()) return Outcome::exhausted;
        int limit = std::min(max_used_ + 1, m_ - 1);
        const Edge e = edges_[pos_];
        for (int f = 0; f <= limit; ++f) {
            if (!legal(e, f)) continue;
            push(f);
            Outcome r = run(task);
            if (r == Outcome::found) return r;
            pop();
            if (r == Outcome::aborted) return r;
        }
        return Outcome::exhausted;
    }

    Decomposition certificate() const {
        Decomposition d;
        d.n = n_;
        d.k = k_;
        int used = 0;
        for (int f : assign_) used = std::max(used, f + 1);
        d.forests.resize(used);
        // Center of each edge: whichever endpoint is a CENTER in the final
        // state; a PAIR is centered at its smaller vertex.
        for (int f = 0; f < used; ++f) {
            std::vector<std::vector<Vertex>> leaves(n_);
            for (std::size_t i = 0; i < edges_.size(); ++i) {
                if (assign_[i] != f) continue;
                auto [u, v] = edges_[i];
                State su = at(f, u);
                Vertex c = (su == CENTER || (su == PAIR && u < v)) ? u : v;
                leaves[c].push_back(c == u ? v : u);
            }
            for (Vertex c = 0; c < n_; ++c) {
                if (!leaves[c].empty()) d.forests[f].stars.push_back({c, leaves[c]});
            }
        }
        return d;
    }

private:
    State at(int f, Vertex v) const { return static_cast<State>(state_[idx(f, v)]); }
    std::size_t idx(int f, Vertex v) const { return static_cast<std::size_t>(f) * n_ + v; }

    bool legal(const Edge& e, int f) const {
        State a = at(f, e.u), b = at(f, e.v);
        if (a == FREE && b == FREE) return comps_[f] < k_;
        if (a == FREE) return b == CENTER || b == PAIR;
        if (b == FREE) return a == CENTER || a == PAIR;
        return false;
    }

    // Undo record: which vertices changed state in the step.
    struct Step {
        int f;
        int kind;  // 0 new pair, 1 attach to center, 2 pair becomes star
        Vertex hub, leaf, other;
        int prev_max_used;
    };

    void set(int f, Vertex v, State s) { state_[idx(f, v)] = s; }

    void push(int f) {
        auto [u, v] = edges_[pos_];
        State a = at(f, u), b = at(f, v);
        Step st{f, 0, -1, -1, -1, max_used_};
        if (a == FREE && b == FREE) {
            set(f, u, PAIR);
            set(f, v, PAIR);
            partner_[idx(f, u)] = v;
            partner_[idx(f, v)] = u;
            ++comps_[f];
            free_[f] -= 2;
            st.kind = 0;
            st.hub = u;
            st.leaf = v;
        } else {
            Vertex hub = a == FREE ? v : u;
            Vertex leaf = a == FREE ? u : v;
            st.hub = hub;
            st.leaf = leaf;
            if (at(f, hub) == CENTER) {
                st.kind = 1;
            } else {
                st.kind = 2;
                st.other = partner_[idx(f, hub)];
                set(f, hub, CENTER);
                set(f, st.other, LEAF);
            }
            set(f, leaf, LEAF);
            --free_[f];
        }
        --rem_[u];
        --rem_[v];
        max_used_ = std::max(max_used_, f);
        assign_[pos_] = f;
        steps_.push_back(st);
        ++pos_;
    }

    void pop() {
        --pos_;
        Step st = steps_.back();
        steps_.pop_back();
        auto [u, v] = edges_[pos_];
        int f = st.f;
        if (st.kind == 0) {
            set(f, u, FREE);
            set(f, v, FREE);
            partner_[idx(f, u)] = -1;
            partner_[idx(f, v)] = -1;
            --comps_[f];
            free_[f] += 2;
        } else {
            if (st.kind == 2) {
                set(f, st.hub, PAIR);
                set(f, st.other, PAIR);
            }
            set(f, st.leaf, FREE);
            ++free_[f];
        }
        ++rem_[u];
        ++rem_[v];
        max_used_ = st.prev_max_used;
        assign_[pos_] = -1;
    }

    // Capacity bounds: a forest can still gain one edge per free vertex (one
    // fewer if it has no component yet), and a vertex can only gain edges in
    // forests where it is not already a leaf.
    bool feasible() const {
        const auto remaining = static_cast<int>(edges_.size() - pos_);
        int unopened = m_ - 1 - max_used_;
        long total = 0;
        for (int f = 0; f <= max_used_; ++f) total += free_[f] - (comps_[f] == 0 ? 1 : 0);
        total += static_cast<long>(unopened) * (n_ - 1);
        if (total < remaining) return false;
        for (Vertex x = 0; x < n_; ++x) {
            if (rem_[x] == 0) continue;
            long cap = static_cast<long>(unopened) * (n_ - 1);
            for (int f = 0; f <= max_used_; ++f) {
                switch (at(f, x)) {
                    case LEAF: break;
                    case CENTER:
                    case PAIR: cap += free_[f]; break;
                    case FREE: cap += comps_[f] < k_ ? free_[f] - 1 : 1; break;
                }
            }
            if (cap < rem_[x]) return false;
        }
        return true;
    }

    bool tick() {
        auto c = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
        if (shared_.out_of_budget.load(std::memory_order_relaxed)) return false;
        if (c > shared_.max_nodes || ((c & 0xfff) == 0 && Clock::now() > shared_.deadline)) {
            shared_.out_of_budget.store(true);
            return false;
        }
        return true;
    }

    int n_, k_, m_;
    Shared& shared_;
    std::vector<Edge> edges_;
    std::vector<std::uint8_t> state_;
    std::vector<Vertex> partner_;
    std::vector<int> comps_, free_, rem_, assign_;
    std::vector<Step> steps_;
    std::size_t pos_ = 0;
    int max_used_ = -1;
};

void check_budget(const SearchBudget& b) {
    if (b.max_nodes <= 0 || b.wall_time.count() <= 0 || b.parallelism_hint <= 0) {
        throw PreconditionError("search budget fields must be positive");
    }
}

// Splits the tree into prefixes in depth-first order until there are enough
// tasks to keep the workers busy.
std::vector<std::vector<int>> frontier(Solver& s, std::size_t want) {
    std::vector<std::vector<int>> tasks{{}};
    for (std::size_t depth = 0; tasks.size() < want && depth < 24; ++depth) {
        std::vector<std::vector<int>> next;
        bool grew = false;
        for (const auto& t : tasks) {
            bool ok = s.replay(t);
            auto opts = ok ? s.choices() : std::vector<int>{};
            if (opts.empty()) {
                next.push_back(t);  // leaf or dead end; the worker settles it
            } else {
                grew = true;
                for (int f : opts) {
                    auto c = t;
                    c.push_back(f);
                    next.push_back(std::move(c));
                }
            }
            while (s.depth() > 0) s.undo();
        }
        tasks = std::move(next);
        if (!grew) break;
    }
    return tasks;
}

}  // namespace

SearchResult exists_decomposition(int n, int k, int m, const SearchBudget& budget) {
    if (n < 1 || k < 1 || m < 1) throw PreconditionError("exists_decomposition needs n, k, m >= 1");
    check_budget(budget);
    Shared shared;
    shared.max_nodes = budget.max_nodes;
    shared.deadline = Clock::now() + budget.wall_time;

    SearchResult result;
    if (budget.parallelism_hint == 1) {
        Solver s(n, k, m, shared);
        auto r = s.run();
        result.nodes_explored = shared.nodes.load();
        if (r == Solver::Outcome::found) {
            result.status = SearchStatus::found;
            result.certificate = s.certificate();
        } else {
            result.status = r == Solver::Outcome::exhausted ? SearchStatus::exhausted_not_found
                                                            : SearchStatus::budget_exceeded;
        }
        return result;
    }

    const int workers = budget.parallelism_hint;
    std::vector<std::vector<int>> tasks;
    {
        Solver seed(n, k, m, shared);
        tasks = frontier(seed, static_cast<std::size_t>(workers) * 64);
    }
    std::vector<std::optional<Decomposition>> found(tasks.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> aborted{false};
    auto work = [&] {
        for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
            if (shared.best_task.load() < static_cast<int>(t)) break;
            Solver s(n, k, m, shared);
            if (!s.replay(tasks[t])) continue;
            auto r = s.run(static_cast<int>(t));
            if (r == Solver::Outcome::found) {
                found[t] = s.certificate();
                int cur = shared.best_task.load();
                while (static_cast<int>(t) < cur && !shared.best_task.compare_exchange_weak(cur, static_cast<int>(t))) {
                }
                break;
            }
            if (r == Solver::Outcome::aborted && shared.out_of_budget.load()) aborted = true;
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();

    result.nodes_explored = shared.nodes.load();
    int best = shared.best_task.load();
    if (best < static_cast<int>(tasks.size())) {
        // Tasks below `best` may have been cut short only by budget; if so the
        // solution is still valid but no longer the first one.
        result.status = SearchStatus::found;
        result.certificate = found[best];
    } else {
        result.status = aborted || shared.out_of_budget.load() ? SearchStatus::budget_exceeded
                                                               : SearchStatus::exhausted_not_found;
    }
    return result;
}

FExactResult f_exact(int n, int k, const SearchBudget& budget, bool use_known_bounds) {
    if (n < 1 || k < 1) throw PreconditionError("f_exact needs n, k >= 1");
    check_budget(budget);
    FExactResult out;
    out.upper = std::max(n - 1, 0);
    if (n == 1) {
        out.complete = true;
        out.value = 0;
        out.certificate = Decomposition{1, k, {}, std::nullopt};
        return out;
    }
    out.start = use_known_bounds ? lower_bound(n, k).value : (n + 1) / 2;
    out.lower = out.start;
    auto deadline = Clock::now() + budget.wall_time;
    for (int m = out.start; m <= n - 1; ++m) {
        SearchBudget b = budget;
        b.max_nodes = budget.max_nodes - out.nodes_explored;
        b.wall_time = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - Clock::now());
        if (b.max_nodes <= 0 || b.wall_time.count() <= 0) return out;
        auto r = exists_decomposition(n, k, m, b);
        out.nodes_explored += r.nodes_explored;
        if (r.status == SearchStatus::budget_exceeded) return out;
        if (r.status == SearchStatus::found) {
            out.complete = true;
            out.value = m;
            out.upper = m;
            out.certificate = std::move(r.certificate);
            return out;
        }
        out.exhausted.push_back({m, r.nodes_explored});
        out.lower = m + 1;
    }
    throw Error("search found no decomposition up to n - 1 forests");
}

}  // namespace starforest
