// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit when any
// criterion fails. argv[1] is the path of the command-line binary (used by
// the performance criterion).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>

#include "extremal/certificate.hpp"
#include "extremal/connectivity.hpp"
#include "extremal/dicolouring.hpp"
#include "extremal/hypergraph.hpp"
#include "extremal/instances.hpp"
#include "extremal/io.hpp"
#include "extremal/recognition.hpp"
#include "helpers.hpp"

using namespace extremal;
using extremal::testing::random_digraph;
using extremal::testing::shortest_dipath;

namespace {

struct SuiteInstance {
    Digraph d;
    int k;
};

std::vector<SuiteInstance> build_suite() {
    std::vector<SuiteInstance> suite;
    for (int k : {3, 4})
        for (std::uint64_t seed = 1; seed <= 50; ++seed) {
            auto gen = random_member(k, 1 + static_cast<int>(seed % 3), seed * 31 + k);
            suite.push_back({gen.d, k});
        }
    return suite;
}

// ---- criterion 1: base families --------------------------------------------

bool base_families() {
    for (int k : {3, 4, 5})
        if (!is_k_extremal_oracle(bidirected_complete(k + 1), k)) return false;
    for (int l : {1, 2, 3})
        if (!is_k_extremal_oracle(symmetric_odd_wheel(l), 3)) return false;
    for (int n = 3; n <= 8; ++n)
        if (!is_k_extremal_oracle(directed_cycle(n), 1)) return false;
    for (int l : {1, 2, 3})
        if (!is_k_extremal_oracle(symmetric_cycle(2 * l + 1), 2)) return false;
    return true;
}

// ---- criterion 2: closure suite ---------------------------------------------

bool closure_suite(const std::vector<SuiteInstance>& suite) {
    for (const auto& inst : suite) {
        const auto& d = inst.d;
        if (d.order() > 16) return false;
        if (!is_k_extremal_oracle(d, inst.k)) return false;
        if (!is_eulerian(d)) return false;
        if (!is_dicritical(d, inst.k + 1)) return false;
        for (int x = 0; x < d.order(); ++x)
            for (int y = 0; y < d.order(); ++y)
                if (x != y && lambda_pair(d, x, y) != inst.k) return false;
    }
    return true;
}

// ---- criterion 3: recognition <=> oracle ------------------------------------

bool recognition_vs_oracle(const std::vector<SuiteInstance>& suite) {
    for (const auto& inst : suite) {
        auto cert = recognize_extremal(inst.d, inst.k);
        if (!cert || !certifies(*cert, inst.d)) return false;
    }
    std::mt19937_64 rng(4242);
    int done = 0;
    while (done < 200) {
        const auto& inst = suite[rng() % suite.size()];
        auto d = inst.d;
        int u = static_cast<int>(rng() % d.order());
        int v = static_cast<int>(rng() % d.order());
        if (u == v) continue;
        switch (rng() % 4) {
        case 0: if (d.has_arc(u, v)) continue; d = d.with_arc(u, v); break;
        case 1: if (!d.has_arc(u, v)) continue; d = d.without_arc(u, v); break;
        case 2: if (d.adjacent(u, v)) continue; d = d.with_digon(u, v); break;
        default: if (!d.has_digon(u, v)) continue; d = d.without_digon(u, v); break;
        }
        if (!is_strong(d) || !is_biconnected(d)) continue;
        auto cert = recognize_extremal(d, inst.k);
        if (static_cast<bool>(cert) != is_k_extremal_oracle(d, inst.k)) return false;
        if (cert && !certifies(*cert, d)) return false;
        ++done;
    }
    return true;
}

// ---- criteria 4 and 5: registered reproductions -----------------------------

bool repro(const std::string& a, const std::string& b = "") {
    if (!run_repro(a).pass) return false;
    return b.empty() || run_repro(b).pass;
}

// ---- criterion 6: shortcut arcs never raise lambda --------------------------

bool shortcut_property() {
    std::mt19937_64 rng(606);
    int done = 0;
    while (done < 500) {
        int n = 3 + static_cast<int>(rng() % 8);
        auto d = random_digraph(rng, n, 0.3);
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u == v || d.has_arc(u, v)) continue;
        auto path = shortest_dipath(d, u, v);
        if (path.empty()) continue;
        auto h = d.with_arc(u, v);
        for (auto [a, b] : path) h = h.without_arc(a, b);
        if (lambda_max(h) > lambda_max(d)) return false;
        ++done;
    }
    return true;
}

// ---- criterion 7: merging across dicuts --------------------------------------

Dicolouring side_colouring(const Digraph& d, const std::vector<int>& side, int k) {
    auto sub = induced(d, side);
    auto local = find_dicolouring(sub.d, k);
    Dicolouring phi{std::vector<int>(d.order(), 0), k};
    for (std::size_t i = 0; i < sub.vertices.size(); ++i)
        phi.colour[sub.vertices[i]] = local->colour[i];
    return phi;
}

bool no_permutation_merges(const Digraph& d, const std::vector<char>& in_x1,
                           const Dicolouring& phi1, const Dicolouring& phi2, int k) {
    std::vector<int> sigma(k);
    for (int i = 0; i < k; ++i) sigma[i] = i + 1;
    do {
        Dicolouring merged{std::vector<int>(d.order(), 0), k};
        for (int v = 0; v < d.order(); ++v)
            merged.colour[v] = in_x1[v] ? phi1.colour[v] : sigma[phi2.colour[v] - 1];
        if (is_valid_dicolouring(d, merged)) return false;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return true;
}

bool report_holds(const Digraph& d, const Dicut& cut, const Dicolouring& phi1,
                  const Dicolouring& phi2, int k, const CutStructureReport& report) {
    std::vector<char> in_x1(d.order(), 0);
    for (int v : cut.source_side) in_x1[v] = 1;
    auto own = [&](int u, int v) { return report.side == 1 ? u : v; };
    auto opp = [&](int u, int v) { return report.side == 1 ? v : u; };
    const auto& own_phi = report.side == 1 ? phi1 : phi2;
    const auto& opp_phi = report.side == 1 ? phi2 : phi1;
    // Unique incident colour on the reported side.
    for (auto [u, v] : cut.crossing_arcs)
        if (own_phi.colour[own(u, v)] != report.colour) return false;
    // Exactly one forward crossing arc per opposite colour, plus a backward arc.
    if (static_cast<int>(report.per_colour_arcs.size()) != k) return false;
    for (const auto& entry : report.per_colour_arcs) {
        int fwd = 0;
        for (auto [u, v] : cut.crossing_arcs)
            if (own_phi.colour[own(u, v)] == report.colour &&
                opp_phi.colour[opp(u, v)] == entry.opposite_colour)
                ++fwd;
        if (fwd != 1) return false;
        if (entry.backward.empty()) return false;
        for (auto [u, v] : entry.backward) {
            if (in_x1[u] || !in_x1[v]) return false; // backward means X2 -> X1
            if (own_phi.colour[own(v, u)] != report.colour) return false;
            if (opp_phi.colour[opp(v, u)] != entry.opposite_colour) return false;
        }
    }
    return true;
}

bool dicut_merging() {
    // 200 random cuts below the colour budget: the merge must succeed.
    std::mt19937_64 rng(707);
    int done = 0;
    while (done < 200) {
        int n = 4 + static_cast<int>(rng() % 4);
        auto d = random_digraph(rng, n, 0.35);
        int mask = 1 + static_cast<int>(rng() % ((1 << n) - 2));
        std::vector<int> side1, side2;
        for (int v = 0; v < n; ++v) ((mask >> v) & 1 ? side1 : side2).push_back(v);
        Dicut cut{side1, crossing_arcs(d, side1)};
        int k = std::max({dichromatic_number(induced(d, side1).d),
                          dichromatic_number(induced(d, side2).d),
                          static_cast<int>(cut.crossing_arcs.size()) + 1});
        auto res = merge_across_dicut(d, cut, side_colouring(d, side1, k),
                                      side_colouring(d, side2, k), k);
        if (res.index() != 0) return false;
        if (!is_valid_dicolouring(d, std::get<Dicolouring>(res))) return false;
        ++done;
    }

    // Engineered size-k cuts where no permutation merge exists: the
    // structural report must hold, checked by direct arc counting.
    struct Engineered {
        Digraph d;
        Dicut cut;
        Dicolouring phi1, phi2;
        int k;
    };
    std::vector<Engineered> cases;
    auto c3 = directed_cycle(3);
    cases.push_back({c3, {{0}, crossing_arcs(c3, {0})}, {{1, 0, 0}, 1}, {{0, 1, 1}, 1}, 1});
    auto bk3 = bidirected_complete(3);
    cases.push_back(
        {bk3, {{0}, crossing_arcs(bk3, {0})}, {{1, 0, 0}, 2}, {{0, 1, 2}, 2}, 2});
    for (const auto& e : cases) {
        std::vector<char> in_x1(e.d.order(), 0);
        for (int v : e.cut.source_side) in_x1[v] = 1;
        if (!no_permutation_merges(e.d, in_x1, e.phi1, e.phi2, e.k)) return false;
        auto res = merge_across_dicut(e.d, e.cut, e.phi1, e.phi2, e.k);
        if (res.index() != 1) return false;
        if (!report_holds(e.d, e.cut, e.phi1, e.phi2, e.k,
                          std::get<CutStructureReport>(res)))
            return false;
    }
    return true;
}

// ---- criterion 8: digon endpoints stay path-separated ------------------------

bool monochromatic_dipath(const Digraph& d, const std::vector<int>& colour, int from, int to) {
    if (colour[from] != colour[to]) return false;
    std::vector<char> seen(d.order(), 0);
    std::vector<int> queue{from};
    seen[from] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        if (queue[i] == to) return true;
        for (int w : d.out(queue[i]))
            if (!seen[w] && colour[w] == colour[from]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    return false;
}

bool digon_separation() {
    int done = 0;
    std::uint64_t seed = 0;
    while (done < 20 && seed < 400) {
        auto gen = random_member(3, 1 + static_cast<int>(seed % 3), ++seed, 12);
        const auto& d = gen.d;
        int u = -1, v = -1;
        for (auto [a, b] : d.arcs())
            if (a < b && d.has_arc(b, a)) {
                u = a;
                v = b;
                break;
            }
        if (u < 0) continue;
        auto h = d.without_digon(u, v);
        bool bad = false;
        enumerate_dicolourings(h, 3, [&](const Dicolouring& phi) {
            if (phi.colour[u] == phi.colour[v] &&
                (monochromatic_dipath(h, phi.colour, u, v) ||
                 monochromatic_dipath(h, phi.colour, v, u)))
                bad = true;
            return !bad;
        });
        if (bad) return false;
        ++done;
    }
    return done == 20;
}

// ---- criterion 9: brooks-style verdict ---------------------------------------

bool brooks_consistency() {
    std::mt19937_64 rng(909);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7);
        auto d = random_digraph(rng, n, 0.4);
        if (brooks_membership(d).extremal_for_brooks !=
            (dichromatic_number(d) == delta_max(d) + 1))
            return false;
    }
    return true;
}

// ---- criterion 10: hypergraph bridge -----------------------------------------

bool hypergraph_bridge() {
    std::mt19937_64 rng(1010);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 7);
        auto d = random_digraph(rng, n, 0.35);
        auto h = dicycle_hypergraph(d);
        if (dichromatic_number(d) != hyper_chromatic_number(h)) return false;
        if (h.size() >= 1 && h.size() <= 8)
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (hyper_lambda(h, u, v) != hyper_lambda_exhaustive(h, u, v))
                        return false;
    }
    return run_repro("fig10-hyper").pass;
}

// ---- criterion 11: two-tree joins (findings, not failures) -------------------

bool two_tree_support() {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        auto d = random_two_tree_join(seed, 12);
        if (!is_k_extremal_oracle(d, 2)) {
            std::cout << "  finding: seed " << seed
                      << " is not 2-extremal; instance:\n"
                      << write_digraph(d);
        }
    }
    return true; // failures above are reportable findings by design
}

// ---- criterion 12: recognition through the CLI stays in budget ---------------

bool cli_performance(const std::string& cli, const std::vector<SuiteInstance>& suite) {
    const std::string path = "acceptance_instance.dg";
    for (std::size_t i = 0; i < suite.size(); ++i) {
        write_file(path, write_digraph(suite[i].d));
        std::ostringstream cmd;
        cmd << cli << " recognize " << path << " --k " << suite[i].k
            << " --timeout 300 > /dev/null";
        auto start = std::chrono::steady_clock::now();
        int rc = std::system(cmd.str().c_str());
        auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start);
        if (rc != 0 || secs.count() > 300.0) {
            std::cout << "  instance " << i << ": rc=" << rc << " time=" << secs.count()
                      << "s\n";
            return false;
        }
    }
    std::remove(path.c_str());
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <cli-binary>\n";
        return 2;
    }
    const std::string cli = argv[1];
    auto suite = build_suite();

    int failures = 0;
    auto report = [&](const char* name, bool ok) {
        std::cout << (ok ? "PASS" : "FAIL") << "  " << name << std::endl;
        if (!ok) ++failures;
    };

    try {
        report("01 base families are k-extremal", base_families());
        report("02 closure suite: oracle + eulerian + dicritical + uniform lambda",
               closure_suite(suite));
        report("03 recognition agrees with the oracle, certificates replay",
               recognition_vs_oracle(suite));
        report("04 tree-join ordering reproduction (fig2-valid, fig2-invalid)",
               repro("fig2-valid", "fig2-invalid"));
        report("05 bijoin non-closure reproduction (fig4-bijoin)", repro("fig4-bijoin"));
        report("06 shortcut arcs never raise lambda (500 triples)", shortcut_property());
        report("07 dicut merging: 200 merges + engineered structural reports",
               dicut_merging());
        report("08 digon endpoints stay separated in reduced colourings",
               digon_separation());
        report("09 brooks-style verdict matches the chromatic computation (1000)",
               brooks_consistency());
        report("10 hypergraph bridge: chromatic + hyperpath packing + fig10-hyper",
               hypergraph_bridge());
        report("11 two-tree joins: 20 seeded instances (failures are findings)",
               two_tree_support());
        report("12 cli recognition completes within 5 minutes per suite instance",
               cli_performance(cli, suite));
    } catch (const Error& e) {
        std::cout << "FAIL  unexpected error: " << e.what() << std::endl;
        ++failures;
    }

    std::cout << (failures ? "ACCEPTANCE FAILED" : "ACCEPTANCE PASSED") << " (" << failures
              << " failing criteria)" << std::endl;
    return failures ? 1 : 0;
}
