#include "extremal/dicolouring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace extremal {

namespace {

// Does colour class `c` of `colour` gain a dicycle when v joins it?
// Assumes the class was acyclic before; any new dicycle passes through v.
bool closes_monochromatic_cycle(const Digraph& d, const std::vector<int>& colour, int v, int c) {
    std::vector<char> seen(d.order(), 0);
    std::vector<int> stack;
    for (int w : d.out(v))
        if (colour[w] == c && !seen[w]) seen[w] = 1, stack.push_back(w);
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x == v) return true;
        for (int w : d.out(x)) {
            if (w == v) return true;
            if (colour[w] == c && !seen[w]) seen[w] = 1, stack.push_back(w);
        }
    }
    return false;
}

} // namespace

bool is_acyclic_subset(const Digraph& d, const std::vector<int>& S) {
    return is_acyclic(induced(d, S).d);
}

bool is_valid_dicolouring(const Digraph& d, const Dicolouring& phi) {
    if (static_cast<int>(phi.colour.size()) != d.order()) return false;
    for (int v = 0; v < d.order(); ++v)
        if (phi.colour[v] < 1 || phi.colour[v] > phi.k) return false;
    for (int c = 1; c <= phi.k; ++c) {
        std::vector<int> cls;
        for (int v = 0; v < d.order(); ++v)
            if (phi.colour[v] == c) cls.push_back(v);
        if (!is_acyclic_subset(d, cls)) return false;
    }
    return true;
}

std::optional<Dicolouring> find_dicolouring(const Digraph& d, int k) {
    if (k < 1) fail(Errc::BadParameter, "colour budget must be positive");
    const int n = d.order();
    if (n == 0) return Dicolouring{{}, k};

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return d.out_degree(a) + d.in_degree(a) > d.out_degree(b) + d.in_degree(b);
    });

    std::vector<int> colour(n, 0);
    // Symmetry breaking: a vertex may only open the smallest unused colour.
    std::function<bool(int, int)> go = [&](int idx, int used) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        int limit = std::min(k, used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (closes_monochromatic_cycle(d, colour, v, c)) continue;
            colour[v] = c;
            if (go(idx + 1, std::max(used, c))) return true;
            colour[v] = 0;
        }
        return false;
    };
    if (!go(0, 0)) return std::nullopt;
    return Dicolouring{std::move(colour), k};
}

int dichromatic_number(const Digraph& d) {
    if (d.order() == 0) return 0;
    if (is_acyclic(d)) return 1;
    for (int k = 2; k <= d.order(); ++k)
        if (find_dicolouring(d, k)) return k;
    return d.order(); // unreachable: singleton classes are always acyclic
}

bool is_dicritical(const Digraph& d, int k) {
    if (k < 2) fail(Errc::BadParameter, "dicriticality needs k >= 2");
    if (dichromatic_number(d) != k) return false;
    for (auto [u, v] : d.arcs())
        if (!find_dicolouring(d.without_arc(u, v), k - 1)) return false;
    return true;
}

bool is_vertex_dicritical(const Digraph& d, int k) {
    if (k < 2) fail(Errc::BadParameter, "dicriticality needs k >= 2");
    if (dichromatic_number(d) != k) return false;
    for (int v = 0; v < d.order(); ++v) {
        std::vector<int> rest;
        for (int w = 0; w < d.order(); ++w)
            if (w != v) rest.push_back(w);
        if (dichromatic_number(induced(d, rest).d) > k - 1) return false;
    }
    return true;
}

void enumerate_dicolourings(const Digraph& d, int k,
                            const std::function<bool(const Dicolouring&)>& fn) {
    if (k < 1) fail(Errc::BadParameter, "colour budget must be positive");
    const int n = d.order();
    if (n > 0 && std::pow(static_cast<double>(k), n) > 1e8)
        fail(Errc::BudgetExceeded, "k^n exceeds the enumeration guard");

    std::vector<int> colour(n, 0);
    std::function<bool(int)> go = [&](int v) -> bool {
        if (v == n) return fn(Dicolouring{colour, k});
        for (int c = 1; c <= k; ++c) {
            if (closes_monochromatic_cycle(d, colour, v, c)) continue;
            colour[v] = c;
            bool keep_going = go(v + 1);
            colour[v] = 0;
            if (!keep_going) return false;
        }
        return true;
    };
    go(0);
}

long long count_dicolourings(const Digraph& d, int k) {
    long long count = 0;
    enumerate_dicolourings(d, k, [&](const Dicolouring&) {
        ++count;
        return true;
    });
    return count;
}

std::variant<Dicolouring, CutStructureReport>
merge_across_dicut(const Digraph& d, const Dicut& cut, const Dicolouring& phi1,
                   const Dicolouring& phi2, int k) {
    const int n = d.order();
    if (static_cast<int>(cut.crossing_arcs.size()) > k)
        fail(Errc::CutTooBig, "dicut has more than k crossing arcs");

    std::vector<char> in_x1(n, 0);
    for (int v : cut.source_side) in_x1[v] = 1;
    std::vector<int> side1, side2;
    for (int v = 0; v < n; ++v) (in_x1[v] ? side1 : side2).push_back(v);
    if (side1.empty() || side2.empty()) fail(Errc::InvalidInput, "dicut side is empty");

    auto check_side = [&](const std::vector<int>& side, const Dicolouring& phi) {
        auto sub = induced(d, side);
        Dicolouring local{{}, k};
        for (int v : sub.vertices) {
            int c = phi.colour.size() > static_cast<std::size_t>(v) ? phi.colour[v] : 0;
            local.colour.push_back(c);
        }
        if (!is_valid_dicolouring(sub.d, local))
            fail(Errc::InvalidInput, "side colouring is not a valid k-dicolouring");
    };
    check_side(side1, phi1);
    check_side(side2, phi2);

    auto colour_of = [&](int v) { return in_x1[v] ? phi1.colour[v] : phi2.colour[v]; };

    // B(i,j): an arc in each direction between class i of side 1 and class j
    // of side 2. Forward arcs are exactly the crossing arcs of the dicut.
    std::vector<std::vector<char>> fwd(k + 1, std::vector<char>(k + 1, 0));
    std::vector<std::vector<char>> bwd(k + 1, std::vector<char>(k + 1, 0));
    for (auto [u, v] : cut.crossing_arcs) fwd[colour_of(u)][colour_of(v)] = 1;
    for (auto [u, v] : d.arcs())
        if (!in_x1[u] && in_x1[v]) bwd[colour_of(v)][colour_of(u)] = 1;

    auto in_b = [&](int i, int j) { return fwd[i][j] && bwd[i][j]; };

    // Perfect matching in H = complement of B (Kuhn's algorithm, k <= ~6).
    std::vector<int> match_of_j(k + 1, 0); // side-2 colour j -> side-1 colour i
    std::vector<char> used(k + 1, 0);
    std::function<bool(int)> try_match = [&](int i) -> bool {
        for (int j = 1; j <= k; ++j) {
            if (in_b(i, j) || used[j]) continue;
            used[j] = 1;
            if (match_of_j[j] == 0 || try_match(match_of_j[j])) {
                match_of_j[j] = i;
                return true;
            }
        }
        return false;
    };
    bool perfect = true;
    for (int i = 1; i <= k && perfect; ++i) {
        std::fill(used.begin(), used.end(), 0);
        perfect = try_match(i);
    }

    if (perfect) {
        Dicolouring merged{std::vector<int>(n, 0), k};
        std::vector<int> to1(k + 1, 0);
        for (int j = 1; j <= k; ++j) to1[j] = match_of_j[j];
        for (int v = 0; v < n; ++v)
            merged.colour[v] = in_x1[v] ? phi1.colour[v] : to1[phi2.colour[v]];
        return merged;
    }

    // No permutation works: one of the two structural outcomes must hold.
    auto build_report = [&](int side) -> std::optional<CutStructureReport> {
        // side 1: a unique colour i whose class has out-neighbours in X2.
        // side 2: a unique colour j whose class has in-neighbours in X1.
        std::vector<char> incident(k + 1, 0);
        for (auto [u, v] : cut.crossing_arcs)
            incident[side == 1 ? colour_of(u) : colour_of(v)] = 1;
        int unique = 0;
        for (int c = 1; c <= k; ++c)
            if (incident[c]) {
                if (unique) return std::nullopt;
                unique = c;
            }
        if (!unique) return std::nullopt;
        CutStructureReport report;
        report.side = side;
        report.colour = unique;
        for (int opp = 1; opp <= k; ++opp) {
            CutStructureReport::ColourArcs entry;
            entry.opposite_colour = opp;
            int fwd_count = 0;
            for (auto [u, v] : cut.crossing_arcs) {
                int mine = side == 1 ? colour_of(u) : colour_of(v);
                int theirs = side == 1 ? colour_of(v) : colour_of(u);
                if (mine == unique && theirs == opp) {
                    ++fwd_count;
                    entry.forward = {u, v};
                }
            }
            for (auto [u, v] : d.arcs()) {
                if (in_x1[u] || !in_x1[v]) continue; // backward arcs X2 -> X1
                int mine = side == 1 ? colour_of(v) : colour_of(u);
                int theirs = side == 1 ? colour_of(u) : colour_of(v);
                if (mine == unique && theirs == opp) entry.backward.emplace_back(u, v);
            }
            if (fwd_count != 1 || entry.backward.empty()) return std::nullopt;
            report.per_colour_arcs.push_back(std::move(entry));
        }
        return report;
    };

    if (auto r = build_report(1)) return *r;
    if (auto r = build_report(2)) return *r;
    fail(Errc::InvalidInput, "no merge and no structural outcome; cut violates the preconditions");
}

BrooksVerdict brooks_membership(const Digraph& d) {
    BrooksVerdict verdict;
    verdict.k = delta_max(d);
    for (const auto& comp : connected_components(d)) {
        auto sub = induced(d, comp);
        bool hit = false;
        switch (verdict.k) {
        case 0: hit = sub.d.order() == 1; break;
        case 1: hit = is_directed_cycle_graph(sub.d); break;
        case 2: hit = is_symmetric_odd_cycle(sub.d); break;
        default:
            hit = sub.d.order() == verdict.k + 1 && is_bidirected_complete(sub.d);
            break;
        }
        if (hit) {
            verdict.extremal_for_brooks = true;
            verdict.witness_component = comp;
            break;
        }
    }
    return verdict;
}

} // namespace extremal
