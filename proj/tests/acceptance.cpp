// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line derived from the same values the assertions check. Criteria touching
// enumeration are re-run with several workers by criterion 9.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <set>

#include "hexsaw/bridge.hpp"
#include "hexsaw/strip.hpp"
#include "oracle.hpp"

using namespace hexsaw;

namespace {

const double kMu = 1.8477590650225735;  // sqrt(2 + sqrt 2)

const std::vector<std::pair<int, int>> kGrid{{1, 1}, {1, 2}, {2, 1}, {2, 2}};

void report(int n, bool ok, const std::string& detail) {
    std::printf("criterion %d: %s  [%s]\n", n, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

using oracle::for_each_walk_from_a;

}  // namespace

TEST_CASE("criterion 1") {
    // vertex relation exactness: every vertex residual exactly zero in
    // Q(zeta_48),
    // below 1e-12 in double, on the whole grid
    bool exact_zero = true, double_small = true, value_pairing = true;
    for (auto [T, L] : kGrid) {
        Domain d = Domain::build_strip(T, L);
        ObservableField f(d, mid_edge_a(), Sigma{5, 8}, Weight::critical());
        REQUIRE(f.exact_mode());
        for (Vertex v : d.vertices()) {
            ObservableValue r = f.vertex_residual(v);
            if (!r.exact->is_zero()) exact_zero = false;
            if (std::abs(r.approx) >= 1e-12) double_small = false;
            if (std::abs(r.exact->to_complex() - r.approx) > 1e-9) value_pairing = false;
        }
    }
    bool ok = exact_zero && double_small && value_pairing;
    report(1, ok, "vertex relation zero on (1,1),(1,2),(2,1),(2,2)");
    CHECK(exact_zero);
    CHECK(double_small);
    CHECK(value_pairing);
}

TEST_CASE("criterion 2") {
    // strip identity exactness: 1 - (c_alpha A + B + c_eps E) = 0 exactly
    bool exact_zero = true, double_small = true, value_pairing = true;
    for (auto [T, L] : kGrid) {
        PartitionReport r = partition_ABE(T, L, Weight::critical());
        if (!r.identity_residual.exact->is_zero()) exact_zero = false;
        if (std::abs(r.identity_residual.approx) >= 1e-10) double_small = false;
        for (const ObservableValue* v : {&r.A, &r.B, &r.E})
            if (std::abs(v->exact->to_complex() - v->approx) > 1e-9) value_pairing = false;
    }
    bool ok = exact_zero && double_small && value_pairing;
    report(2, ok, "strip identity zero on the grid");
    CHECK(exact_zero);
    CHECK(double_small);
    CHECK(value_pairing);
}

TEST_CASE("criterion 3") {
    // criticality necessary: x = 0.9 x_c on S_1,1 breaks both residuals
    Domain d = Domain::build_strip(1, 1);
    ObservableField f(d, mid_edge_a(), Sigma{5, 8}, Weight::multiple_of_xc(9, 10));
    double max_vertex = f.max_vertex_residual();
    PartitionReport r = partition_ABE(1, 1, Weight::multiple_of_xc(9, 10));
    double identity = std::abs(r.identity_residual.approx);
    bool ok = max_vertex > 1e-6 && identity > 1e-6;
    char buf[128];
    std::snprintf(buf, sizeof buf, "max vertex residual %.3e, identity residual %.3e",
                  max_vertex, identity);
    report(3, ok, buf);
    CHECK(max_vertex > 1e-6);
    CHECK(identity > 1e-6);
}

TEST_CASE("criterion 4") {
    auto c = count_cn(20);
    bool girth = c[0] == 3 && c[1] == 6 && c[2] == 12 && c[3] == 24 && c[4] == 48;
    auto ref = oracle::count_cn(6);
    bool c6 = c[5] == 90 && ref[5] == 90;
    bool bounds = true;
    for (size_t i = 0; i < c.size(); ++i) {
        double n = static_cast<double>(i + 1);
        if (static_cast<double>(c[i]) < std::pow(std::sqrt(2.0), n) - 1e-9) bounds = false;
        if (static_cast<double>(c[i]) > 3.0 * std::pow(2.0, n - 1) + 1e-9) bounds = false;
    }
    bool submult = true;
    for (size_t n = 1; n <= c.size(); ++n)
        for (size_t m = 1; n + m <= c.size(); ++m)
            if (c[n + m - 1] > c[n - 1] * c[m - 1]) submult = false;
    bool ok = girth && c6 && bounds && submult;
    report(4, ok, "c_1..c_5 forced, c_6 = 90 vs oracle, bounds and submultiplicativity to n = 20");
    CHECK(girth);
    CHECK(c6);
    CHECK(bounds);
    CHECK(submult);
}

TEST_CASE("criterion 5") {
    // ratio estimator c_n/c_{n-1}: within 3% of sqrt(2+sqrt2) at n = 24 and
    // monotone decreasing for n >= 8
    auto c = count_cn(24);
    auto ratio = estimate_mu(c, MuMethod::Ratio);  // ratio[n-2] = c_n / c_{n-1}
    double r24 = ratio[22];
    double rel = std::abs(r24 / kMu - 1.0);
    bool within = rel <= 0.03;
    bool monotone = true;
    int first_rise = 0;
    for (int n = 9; n <= 24; ++n) {
        if (ratio[static_cast<size_t>(n) - 2] > ratio[static_cast<size_t>(n) - 3]) {
            monotone = false;
            if (first_rise == 0) first_rise = n;
        }
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "r_24 = %.7f (rel err %.2f%%); monotone for n >= 8: %s (first rise n = %d)",
                  r24, rel * 100.0, monotone ? "yes" : "no", first_rise);
    report(5, within && monotone, buf);
    CHECK(within);
    CHECK(monotone);  // known defect of this criterion: the ratio sequence
                      // oscillates with parity (c_11/c_10 > c_10/c_9)
}

TEST_CASE("criterion 6") {
    bool mono_A = true, mono_B = true, mono_E = true, b_bound = true;
    for (int T : {1, 2}) {
        auto rows = scan_monotonicity(T, 3, Weight::critical());
        for (size_t i = 0; i + 1 < rows.size(); ++i) {
            if (rows[i].A.approx.real() > rows[i + 1].A.approx.real() + 1e-12) mono_A = false;
            if (rows[i].B.approx.real() > rows[i + 1].B.approx.real() + 1e-12) mono_B = false;
            if (rows[i].E.approx.real() < rows[i + 1].E.approx.real() - 1e-12) mono_E = false;
        }
        for (const auto& r : rows)
            if (r.B.approx.real() > 1.0 + 1e-12) b_bound = false;
    }
    bool ok = mono_A && mono_B && mono_E && b_bound;
    report(6, ok, "A,B nondecreasing, E nonincreasing in L; B <= 1 at x_c");
    CHECK(mono_A);
    CHECK(mono_B);
    CHECK(mono_E);
    CHECK(b_bound);
}

TEST_CASE("criterion 7") {
    uint64_t corpus = 0, round_trips = 0;
    for_each_walk_from_a(12, [&](const Walk& w) {
        ++corpus;
        BridgeDecomposition dec = decompose(w);
        Walk back = reconstruct(dec.anchor_mid, dec.first_vertex, dec.pieces);
        if (back == w) ++round_trips;
    });
    bool all = corpus > 0 && round_trips == corpus;

    Walk fig = [] {
        std::vector<Vertex> vs;
        for (int m = 0; m <= 8; ++m) {
            vs.push_back({3 * m + 1, m});
            vs.push_back({3 * m + 2, m + 1});
        }
        for (int k = 8; k >= 6; --k) {
            vs.push_back({3 * k + 1, 18 - k});
            vs.push_back({3 * (k - 1) + 2, 18 - k});
        }
        vs.push_back({16, 13});
        vs.push_back({17, 14});
        vs.push_back({19, 14});
        vs.push_back({20, 15});
        vs.push_back({19, 16});
        return Walk{mid_edge_a(), vs, MidEdge(Vertex{19, 16}, Vertex{17, 16})};
    }();
    auto widths = decompose(fig).nonnegative_widths();
    bool fig_ok = widths == std::vector<int>{8, 3, 1, 0};

    char buf[128];
    std::snprintf(buf, sizeof buf, "%llu/%llu walks round-trip; fixture widths 8>3>1>0: %s",
                  static_cast<unsigned long long>(round_trips),
                  static_cast<unsigned long long>(corpus), fig_ok ? "yes" : "no");
    report(7, all && fig_ok, buf);
    CHECK(all);
    CHECK(fig_ok);
}

TEST_CASE("criterion 8") {
    // cut map on S_2, exhaustively over A-type walks with <= 12 vertices;
    // L = 6 makes the truncated strip a superset of everything a 12-vertex
    // walk can reach, so the corpus is the full one
    Domain d = Domain::build_strip(2, 6);
    EnumOptions opts;
    opts.max_vertices = 12;
    std::set<std::pair<std::string, std::string>> images;
    uint64_t atype = 0, cut = 0;
    bool lengths = true, injective = true;
    enumerate_walks(d, mid_edge_a(), opts, [&](const Walk& w) {
        if (w.is_trivial()) return;
        if (d.try_label(w.end) != BoundaryLabel::Alpha) return;
        ++atype;
        auto res = cut_map(w, 1);
        if (!res) return;
        ++cut;
        const auto& [g1, g2] = *res;
        if (g1.length() + g2.length() != w.length() + 1) lengths = false;
        if (!images.insert({g1.to_json(), g2.to_json()}).second) injective = false;
    });
    bool ok = atype > 0 && cut > 0 && lengths && injective;
    char buf[128];
    std::snprintf(buf, sizeof buf,
                  "%llu A-type walks, %llu cut; lengths l1+l2 = l+1: %s; injective: %s",
                  static_cast<unsigned long long>(atype),
                  static_cast<unsigned long long>(cut), lengths ? "yes" : "no",
                  injective ? "yes" : "no");
    report(8, ok, buf);
    CHECK(atype > 0);
    CHECK(cut > 0);
    CHECK(lengths);
    CHECK(injective);
}

TEST_CASE("criterion 9") {
    // determinism: the exact and double outputs of the identity pipeline are
    // identical for 1 and N workers (merged histograms are exact sums)
    bool same = true;
    for (auto [T, L] : kGrid) {
        EnumOptions serial;
        serial.workers = 1;
        EnumOptions par;
        par.workers = 4;
        PartitionReport a = partition_ABE(T, L, Weight::critical(), serial);
        PartitionReport b = partition_ABE(T, L, Weight::critical(), par);
        if (!(*a.A.exact == *b.A.exact) || !(*a.B.exact == *b.B.exact) ||
            !(*a.E.exact == *b.E.exact))
            same = false;
        if (a.A.approx != b.A.approx || a.B.approx != b.B.approx ||
            a.E.approx != b.E.approx || a.walk_count != b.walk_count)
            same = false;

        Domain d = Domain::build_strip(T, L);
        ObservableField fs(d, mid_edge_a(), Sigma{5, 8}, Weight::critical(), serial);
        ObservableField fp(d, mid_edge_a(), Sigma{5, 8}, Weight::critical(), par);
        for (const MidEdge& z : d.mid_edges()) {
            auto va = fs.value_at(z), vb = fp.value_at(z);
            if (!(*va.exact == *vb.exact) || va.approx != vb.approx) same = false;
        }
    }
    report(9, same, "1 vs 4 workers: identical exact values and bitwise doubles");
    CHECK(same);
}
