#include "geoclique/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <string>

#include "geoclique/errors.hpp"

namespace geoclique {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

std::vector<Mask> neighbor_masks(const Graph& g) {
    std::vector<Mask> rows(g.n(), 0);
    for (Vertex v = 0; v < g.n(); ++v)
        for (Vertex u : g.neighbors(v)) rows[v] |= bit(u);
    return rows;
}

VertexSet mask_to_set(Mask m) {
    VertexSet out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

void require_cap(const Graph& g, int cap, const char* oracle) {
    if (g.n() > cap || g.n() > 64)
        throw Refusal(std::string(oracle) + ": n = " + std::to_string(g.n()) + " exceeds cap " +
                      std::to_string(std::min(cap, 64)));
}

class Clock {
public:
    explicit Clock(double cap_seconds) : cap_(cap_seconds), start_(std::chrono::steady_clock::now()) {}

    void tick(const char* oracle) {
        if (cap_ <= 0 || (++calls_ & 1023) != 0) return;
        std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start_;
        if (spent.count() > cap_) throw Refusal(std::string(oracle) + ": time cap exceeded");
    }

private:
    double cap_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t calls_ = 0;
};

struct WeightTable {
    std::vector<double> w;
    double of(Mask m) const {
        double total = 0;
        while (m) {
            total += w[std::countr_zero(m)];
            m &= m - 1;
        }
        return total;
    }
};

class CliqueSearch {
public:
    CliqueSearch(const Graph& g, double time_cap) : rows_(neighbor_masks(g)), clock_(time_cap) {
        weights_.w.resize(g.n());
        for (Vertex v = 0; v < g.n(); ++v) weights_.w[v] = g.weight(v);
    }

    Mask run(int n) {
        const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
        expand(0, 0.0, all, 0);
        return best_;
    }

private:
    void expand(Mask r, double r_weight, Mask p, Mask x) {
        clock_.tick("brute_force_max_clique");
        if (p == 0) {
            if (x == 0 && better(r, r_weight)) {
                best_ = r;
                best_weight_ = r_weight;
            }
            return;
        }
        if (r_weight + weights_.of(p) < best_weight_) return;
        // Pivot maximizing |P ∩ N(u)| over P ∪ X.
        Mask px = p | x;
        int pivot = std::countr_zero(px);
        int most = -1;
        for (Mask it = px; it; it &= it - 1) {
            int u = std::countr_zero(it);
            int c = std::popcount(p & rows_[u]);
            if (c > most) {
                most = c;
                pivot = u;
            }
        }
        for (Mask it = p & ~rows_[pivot]; it; it &= it - 1) {
            int v = std::countr_zero(it);
            expand(r | bit(v), r_weight + weights_.w[v], p & rows_[v], x & rows_[v]);
            p &= ~bit(v);
            x |= bit(v);
        }
    }

    bool better(Mask r, double w) const {
        if (w != best_weight_) return w > best_weight_;
        // Equal weight: prefer the lexicographically smaller vertex list.
        return best_ == 0 || mask_to_set(r) < mask_to_set(best_);
    }

    std::vector<Mask> rows_;
    WeightTable weights_;
    Clock clock_;
    Mask best_ = 0;
    double best_weight_ = -1.0;
};

class MisSearch {
public:
    MisSearch(const Graph& g, bool weighted, double time_cap) : rows_(neighbor_masks(g)), clock_(time_cap) {
        weights_.w.resize(g.n());
        for (Vertex v = 0; v < g.n(); ++v) weights_.w[v] = weighted ? g.weight(v) : 1.0;
    }

    Mask run(int n) {
        const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
        branch(all, 0, 0.0);
        return best_;
    }

private:
    void branch(Mask remaining, Mask chosen, double weight) {
        clock_.tick("brute_force_mis");
        if (remaining == 0) {
            if (weight > best_weight_ || (weight == best_weight_ && mask_to_set(chosen) < mask_to_set(best_))) {
                best_ = chosen;
                best_weight_ = weight;
            }
            return;
        }
        if (weight + weights_.of(remaining) < best_weight_) return;
        int pick = -1;
        int pick_degree = 65;
        for (Mask it = remaining; it; it &= it - 1) {
            int v = std::countr_zero(it);
            int d = std::popcount(rows_[v] & remaining);
            if (d < pick_degree) {
                pick_degree = d;
                pick = v;
            }
        }
        // Some maximum independent set is maximal, hence meets N[pick].
        for (Mask it = (rows_[pick] | bit(pick)) & remaining; it; it &= it - 1) {
            int u = std::countr_zero(it);
            branch(remaining & ~(rows_[u] | bit(u)), chosen | bit(u), weight + weights_.w[u]);
        }
    }

    std::vector<Mask> rows_;
    WeightTable weights_;
    Clock clock_;
    Mask best_ = 0;
    double best_weight_ = -1.0;
};

OddCycle order_cycle(Mask m, const std::vector<Mask>& rows) {
    OddCycle cycle;
    int start = std::countr_zero(m);
    int prev = -1;
    int cur = start;
    do {
        cycle.vertices.push_back(cur);
        Mask next = rows[cur] & m;
        if (prev >= 0) next &= ~bit(prev);
        prev = cur;
        cur = std::countr_zero(next);
    } while (cur != start && cycle.vertices.size() <= 64);
    return cycle;
}

IocpCheck pair_check(const std::vector<Mask>& cycles, const std::vector<Mask>& rows) {
    IocpCheck out;
    out.induced_odd_cycles = cycles.size();
    std::vector<Mask> reach(cycles.size());
    for (std::size_t i = 0; i < cycles.size(); ++i) {
        Mask nb = cycles[i];
        for (Mask it = cycles[i]; it; it &= it - 1) nb |= rows[std::countr_zero(it)];
        reach[i] = nb;
    }
    for (std::size_t i = 0; i < cycles.size(); ++i)
        for (std::size_t j = i + 1; j < cycles.size(); ++j)
            if ((reach[i] & cycles[j]) == 0) {
                out.holds = false;
                out.witness = std::make_pair(order_cycle(cycles[i], rows), order_cycle(cycles[j], rows));
                return out;
            }
    return out;
}

void enumerate_induced_odd_cycles(const Graph& g, const std::vector<Mask>& rows, Clock& clock,
                                  const std::function<void(const std::vector<Vertex>&, Mask)>& emit) {
    const int n = g.n();
    std::vector<Vertex> path;
    std::function<void(Mask)> extend = [&](Mask on_path) {
        clock.tick("induced odd cycle enumeration");
        const Vertex s = path.front();
        const Vertex last = path.back();
        Mask interior = on_path & ~bit(s) & ~bit(last);
        for (Vertex x : g.neighbors(last)) {
            if (x <= s || (on_path & bit(x))) continue;
            if (rows[x] & interior) continue;
            if (path.size() >= 2 && (rows[x] & bit(s))) {
                // x closes an induced cycle s, path..., x.
                const std::size_t len = path.size() + 1;
                if (len % 2 == 1 && path[1] < x) {
                    path.push_back(x);
                    emit(path, on_path | bit(x));
                    path.pop_back();
                }
                continue;
            }
            path.push_back(x);
            extend(on_path | bit(x));
            path.pop_back();
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        path.assign(1, s);
        extend(bit(s));
    }
}

} // namespace

VertexSet exact_mis_capped(const Graph& g, bool weighted, int max_n) {
    require_cap(g, max_n, "exact MIS");
    return mask_to_set(MisSearch(g, weighted, 0.0).run(g.n()));
}

VertexSet brute_force_max_clique(const Graph& g, const OracleBudget& budget) {
    require_cap(g, budget.clique_mis_max_n, "brute_force_max_clique");
    if (g.n() == 0) return {};
    return mask_to_set(CliqueSearch(g, budget.time_cap_seconds).run(g.n()));
}

VertexSet brute_force_mis(const Graph& g, bool weighted, const OracleBudget& budget) {
    require_cap(g, budget.clique_mis_max_n, "brute_force_mis");
    return mask_to_set(MisSearch(g, weighted, budget.time_cap_seconds).run(g.n()));
}

std::optional<int> brute_force_odd_girth(const Graph& g, const OracleBudget& budget) {
    require_cap(g, budget.clique_mis_max_n, "brute_force_odd_girth");
    const int n = g.n();
    Clock clock(budget.time_cap_seconds);
    int best = n + 1;
    std::vector<bool> on_path(n, false);
    // Simple cycles through their smallest vertex s; paths stay above s.
    std::function<void(Vertex, Vertex, int)> walk = [&](Vertex s, Vertex last, int len) {
        clock.tick("brute_force_odd_girth");
        for (Vertex x : g.neighbors(last)) {
            if (x == s && len >= 3 && len % 2 == 1) best = std::min(best, len);
            if (x <= s || on_path[x] || len + 1 >= best) continue;
            on_path[x] = true;
            walk(s, x, len + 1);
            on_path[x] = false;
        }
    };
    for (Vertex s = 0; s < n; ++s) {
        on_path[s] = true;
        walk(s, s, 1);
        on_path[s] = false;
    }
    if (best > n) return std::nullopt;
    return best;
}

std::vector<OddCycle> induced_odd_cycles(const Graph& g, const OracleBudget& budget) {
    require_cap(g, budget.iocp_max_n, "induced_odd_cycles");
    const auto rows = neighbor_masks(g);
    Clock clock(budget.time_cap_seconds);
    std::vector<OddCycle> out;
    enumerate_induced_odd_cycles(g, rows, clock,
                                 [&](const std::vector<Vertex>& cycle, Mask) { out.push_back(OddCycle{cycle}); });
    return out;
}

IocpCheck check_iocp_le_one(const Graph& g, const OracleBudget& budget) {
    require_cap(g, budget.iocp_max_n, "check_iocp_le_one");
    const auto rows = neighbor_masks(g);
    Clock clock(budget.time_cap_seconds);
    std::vector<Mask> cycles;
    enumerate_induced_odd_cycles(g, rows, clock, [&](const std::vector<Vertex>&, Mask m) { cycles.push_back(m); });
    return pair_check(cycles, rows);
}

IocpCheck check_iocp_le_one_by_subsets(const Graph& g, int max_n) {
    require_cap(g, std::min(max_n, 30), "check_iocp_le_one_by_subsets");
    const int n = g.n();
    const auto rows = neighbor_masks(g);
    std::vector<Mask> cycles;
    for (Mask m = 1; m < bit(n); ++m) {
        const int size = std::popcount(m);
        if (size < 3 || size % 2 == 0) continue;
        bool two_regular = true;
        for (Mask it = m; it && two_regular; it &= it - 1)
            two_regular = std::popcount(rows[std::countr_zero(it)] & m) == 2;
        if (!two_regular) continue;
        // Connected: flood from the lowest vertex.
        Mask seen = m & (~m + 1);
        for (Mask frontier = seen; frontier;) {
            Mask next = 0;
            for (Mask it = frontier; it; it &= it - 1) next |= rows[std::countr_zero(it)] & m;
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen == m) cycles.push_back(m);
    }
    return pair_check(cycles, rows);
}

int vc_dimension_neighborhood(const Graph& g, const OracleBudget& budget) {
    require_cap(g, budget.vcdim_max_n, "vc_dimension_neighborhood");
    const int n = g.n();
    if (n == 0) return 0;
    const auto rows = neighbor_masks(g);
    Clock clock(budget.time_cap_seconds);

    // Shattering is hereditary, so the first size with no shattered set ends the search.
    int best = 0;
    for (int k = 1; (1 << k) <= n && k <= n; ++k) {
        bool found = false;
        std::vector<int> pick(k);
        for (int i = 0; i < k; ++i) pick[i] = i;
        std::vector<char> seen(static_cast<std::size_t>(1) << k);
        while (!found) {
            clock.tick("vc_dimension_neighborhood");
            std::fill(seen.begin(), seen.end(), 0);
            int distinct = 0;
            for (Vertex v = 0; v < n && distinct < (1 << k); ++v) {
                unsigned trace = 0;
                for (int i = 0; i < k; ++i)
                    if (rows[v] & bit(pick[i])) trace |= 1U << i;
                if (!seen[trace]) {
                    seen[trace] = 1;
                    ++distinct;
                }
            }
            if (distinct == (1 << k)) {
                found = true;
                break;
            }
            int i = k - 1;
            while (i >= 0 && pick[i] == n - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
        if (!found) break;
        best = k;
    }
    return best;
}

} // namespace geoclique
