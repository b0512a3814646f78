// hexsaw: exact honeycomb self-avoiding-walk toolbox.
//
// Subcommands: count, verify, scan, bridges, observable.
// Exit codes: 0 success, 1 verification failure, 2 resource cap, 64 usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>

#include "hexsaw/bridge.hpp"
#include "hexsaw/strip.hpp"

using json = nlohmann::ordered_json;
using namespace hexsaw;

namespace {

constexpr double kMu = 1.8477590650225735;

struct Common {
    std::string out;
    bool no_timestamp = false;
    int workers = 1;
    uint64_t cap = 0;  // resolved against HEXSAW_CAP / default later
};

uint64_t resolve_cap(uint64_t flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("HEXSAW_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 1000000000ULL;
}

EnumOptions enum_options(const Common& c) {
    EnumOptions o;
    o.cap = resolve_cap(c.cap);
    o.workers = c.workers;
    return o;
}

void emit(const Common& c, json& doc) {
    if (!c.no_timestamp) {
        auto now = std::chrono::system_clock::now().time_since_epoch();
        doc["timestamp"] =
            std::chrono::duration_cast<std::chrono::seconds>(now).count();
    }
    if (c.out.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        std::ofstream f(c.out);
        f << doc.dump(2) << "\n";
    }
}

bool parse_frac(const std::string& s, long& num, long& den) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            num = std::stol(s);
            den = 1;
        } else {
            num = std::stol(s.substr(0, slash));
            den = std::stol(s.substr(slash + 1));
        }
    } catch (...) {
        return false;
    }
    return den != 0;
}

json value_json(const ObservableValue& v) {
    json out;
    out["re"] = v.approx.real();
    out["im"] = v.approx.imag();
    if (v.exact) out["exact"] = v.exact->coeff_strings();
    return out;
}

json config_json(const Common& c) {
    json cfg;
    cfg["workers"] = c.workers;
    cfg["cap"] = resolve_cap(c.cap);
    return cfg;
}

int cmd_count(const Common& c, int n_max, const std::string& format) {
    auto counts = count_cn(n_max, resolve_cap(c.cap));
    auto root = estimate_mu(counts, MuMethod::Root);
    auto ratio = counts.size() > 1 ? estimate_mu(counts, MuMethod::Ratio)
                                   : std::vector<double>{};
    if (format == "csv") {
        std::ostream* os = &std::cout;
        std::ofstream f;
        if (!c.out.empty()) {
            f.open(c.out);
            os = &f;
        }
        *os << "n,count\n";
        for (size_t i = 0; i < counts.size(); ++i)
            *os << (i + 1) << "," << counts[i] << "\n";
        return 0;
    }
    json doc;
    doc["command"] = "count";
    doc["config"] = config_json(c);
    doc["config"]["n_max"] = n_max;
    doc["target_mu"] = kMu;
    json rows = json::array();
    for (size_t i = 0; i < counts.size(); ++i) {
        json row;
        row["n"] = i + 1;
        row["count"] = counts[i];
        row["root"] = root[i];
        if (i >= 1) row["ratio"] = ratio[i - 1];
        rows.push_back(row);
    }
    doc["c_n"] = rows;
    emit(c, doc);
    return 0;
}

int cmd_verify(const Common& c, int T, int L, const std::string& mode,
               const std::string& x_frac, const std::string& sigma_frac) {
    long xn, xd, sn, sd;
    if (!parse_frac(x_frac, xn, xd) || !parse_frac(sigma_frac, sn, sd))
        throw CLI::ValidationError("--x-frac/--sigma-frac must be NUM/DEN");
    Weight x = Weight::multiple_of_xc(xn, xd);
    Sigma sigma{sn, sd};
    bool exact_mode = mode == "exact";
    if (exact_mode && !sigma.is_critical())
        throw CLI::ValidationError("exact mode requires sigma = 5/8");

    Domain d = Domain::build_strip(T, L);
    WalkStats stats = collect_stats(d, mid_edge_a(), enum_options(c));
    ObservableField f(d, stats, sigma, x);
    std::vector<ObservableValue> per_vertex;
    double max_res = f.max_vertex_residual(&per_vertex);
    ContourSums cs = f.contour_sums();
    PartitionReport pr = partition_ABE(d, stats, x);

    bool pass;
    if (exact_mode) {
        bool vertex_zero = true;
        for (const auto& r : per_vertex)
            if (!r.exact || !r.exact->is_zero()) vertex_zero = false;
        pass = vertex_zero && cs.residual.exact && cs.residual.exact->is_zero() &&
               pr.identity_residual.exact && pr.identity_residual.exact->is_zero();
    } else {
        pass = max_res < 1e-12 && std::abs(cs.residual.approx) < 1e-10 &&
               std::abs(pr.identity_residual.approx) < 1e-10;
    }

    json doc;
    doc["command"] = "verify";
    doc["config"] = config_json(c);
    doc["config"]["T"] = T;
    doc["config"]["L"] = L;
    doc["config"]["mode"] = mode;
    doc["config"]["x_frac"] = x_frac;
    doc["config"]["sigma_frac"] = sigma_frac;
    doc["walk_count"] = f.walk_count();
    doc["max_vertex_residual"] = max_res;
    doc["contour_residual"] = value_json(cs.residual);
    doc["identity_residual"] = value_json(pr.identity_residual);
    doc["A"] = value_json(pr.A);
    doc["B"] = value_json(pr.B);
    doc["E"] = value_json(pr.E);
    doc["pass"] = pass;
    emit(c, doc);
    return pass ? 0 : 1;
}

int cmd_scan(const Common& c, int T_max, int L_max, const std::string& x_frac) {
    long xn, xd;
    if (!parse_frac(x_frac, xn, xd))
        throw CLI::ValidationError("--x-frac must be NUM/DEN");
    // scans are surveys: float mode (exact checks belong to `verify`)
    Weight x = Weight::decimal(Weight::multiple_of_xc(xn, xd).dvalue);
    std::ostream* os = &std::cout;
    std::ofstream f;
    if (!c.out.empty()) {
        f.open(c.out);
        os = &f;
    }
    os->precision(15);
    *os << "T,L,A,B,E,residual\n";
    int violations = 0;
    const bool at_most_critical = static_cast<double>(xn) / static_cast<double>(xd) <= 1.0;
    const bool critical = xn == xd;
    for (int T = 1; T <= T_max; ++T) {
        double prevA = -1, prevB = -1, prevE = 1e300;
        for (int L = 1; L <= L_max; ++L) {
            PartitionReport r = partition_ABE(T, L, x, enum_options(c));
            double A = r.A.approx.real(), B = r.B.approx.real(), E = r.E.approx.real();
            *os << T << "," << L << "," << A << "," << B << "," << E << ","
                << r.identity_residual.approx.real() << "\n";
            // A and B are nondecreasing in L for x <= x_c; at x_c also
            // E nonincreasing and B <= 1
            if (at_most_critical && (A + 1e-12 < prevA || B + 1e-12 < prevB)) ++violations;
            if (critical) {
                if (E - 1e-12 > prevE) ++violations;
                if (B > 1.0 + 1e-12) ++violations;
            }
            prevA = A;
            prevB = B;
            prevE = E;
        }
    }
    return violations == 0 ? 0 : 1;
}

int cmd_bridges(const Common& c, int n_max) {
    MidEdge a = mid_edge_a();
    uint64_t corpus = 0, ok = 0;
    uint64_t cap = resolve_cap(c.cap);
    std::function<void(const Walk&)> check = [&](const Walk& w) {
        if (++corpus > cap) throw WalkCapExceeded(cap);
        BridgeDecomposition dec = decompose(w);
        Walk back = reconstruct(dec.anchor_mid, dec.first_vertex, dec.pieces);
        if (back == w) ++ok;
    };
    for (Vertex first : {Vertex{1, 0}, Vertex{-1, 0}}) {
        std::vector<Vertex> path{first};
        std::set<Vertex> visited{first};
        std::function<void(Vertex, MidEdge)> rec = [&](Vertex v, MidEdge entry) {
            for (Vertex w : neighbors(v)) {
                MidEdge m(v, w);
                if (m == entry || m == a) continue;
                check(Walk{a, path, m});
                if (static_cast<int>(path.size()) < n_max && !visited.count(w)) {
                    visited.insert(w);
                    path.push_back(w);
                    rec(w, m);
                    path.pop_back();
                    visited.erase(w);
                }
            }
        };
        rec(first, a);
    }
    json doc;
    doc["command"] = "bridges";
    doc["config"] = config_json(c);
    doc["config"]["n_max"] = n_max;
    doc["corpus"] = corpus;
    doc["round_trips"] = ok;
    doc["pass"] = corpus == ok;
    emit(c, doc);
    return corpus == ok ? 0 : 1;
}

int cmd_observable(const Common& c, int T, int L, const std::string& mode,
                   const std::string& x_frac, const std::string& sigma_frac) {
    long xn, xd, sn, sd;
    if (!parse_frac(x_frac, xn, xd) || !parse_frac(sigma_frac, sn, sd))
        throw CLI::ValidationError("--x-frac/--sigma-frac must be NUM/DEN");
    Weight x = Weight::multiple_of_xc(xn, xd);
    Sigma sigma{sn, sd};
    Domain d = Domain::build_strip(T, L);
    ObservableField f(d, mid_edge_a(), sigma, x, enum_options(c));

    std::vector<ObservableValue> per_vertex;
    double max_res = f.max_vertex_residual(&per_vertex);
    ContourSums cs = f.contour_sums();

    json doc;
    doc["command"] = "observable";
    doc["config"] = config_json(c);
    doc["domain"]["T"] = T;
    doc["domain"]["L"] = L;
    doc["x"] = (mode == "exact" && f.exact_mode()) ? "exact" : "float";
    doc["sigma"] = sigma_frac;
    doc["residuals"]["max_abs"] = max_res;
    json pv = json::array();
    for (size_t i = 0; i < per_vertex.size(); ++i) {
        json row;
        row["vertex"] = {d.vertices()[i].p, d.vertices()[i].q};
        row["residual"] = value_json(per_vertex[i]);
        pv.push_back(row);
    }
    doc["residuals"]["per_vertex"] = pv;
    doc["boundary_sums"]["alpha"] = value_json(cs.alpha);
    doc["boundary_sums"]["beta"] = value_json(cs.beta);
    doc["boundary_sums"]["eps"] = value_json(cs.eps);
    doc["boundary_sums"]["epsbar"] = value_json(cs.epsbar);
    emit(c, doc);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact honeycomb self-avoiding-walk toolbox"};
    app.require_subcommand(1);

    Common common;
    app.add_option("--workers", common.workers, "enumeration worker threads")
        ->capture_default_str();
    app.add_option("--cap", common.cap, "walk cap (0 = HEXSAW_CAP env or 1e9)");
    app.add_option("--out", common.out, "write output to file instead of stdout");
    app.add_flag("--no-timestamp", common.no_timestamp, "omit the timestamp field");

    int n_max = 6, T = 1, L = 1, T_max = 2, L_max = 3;
    std::string mode = "exact", x_frac = "1/1", sigma_frac = "5/8", format = "json";

    auto* count = app.add_subcommand("count", "self-avoiding walk counts c_n and mu estimates");
    count->add_option("--n-max", n_max, "largest n")->required()->check(CLI::Range(1, 32));
    count->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    auto* verify = app.add_subcommand("verify", "vertex relation and strip identity checks");
    verify->add_option("--T", T)->check(CLI::Range(1, 64));
    verify->add_option("--L", L)->check(CLI::Range(1, 64));
    verify->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));
    verify->add_option("--x-frac", x_frac, "x as NUM/DEN multiple of x_c");
    verify->add_option("--sigma-frac", sigma_frac, "sigma as NUM/DEN");

    auto* scan = app.add_subcommand("scan", "A,B,E monotonicity tables (CSV)");
    scan->add_option("--T-max", T_max)->check(CLI::Range(1, 64));
    scan->add_option("--L-max", L_max)->check(CLI::Range(1, 64));
    scan->add_option("--x-frac", x_frac, "x as NUM/DEN multiple of x_c");

    auto* bridges = app.add_subcommand("bridges", "bridge decomposition round-trip report");
    bridges->add_option("--n-max", n_max, "corpus walk length bound")
        ->check(CLI::Range(1, 14));

    auto* observable = app.add_subcommand("observable", "parafermionic observable report");
    observable->add_option("--T", T)->check(CLI::Range(1, 64));
    observable->add_option("--L", L)->check(CLI::Range(1, 64));
    observable->add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));
    observable->add_option("--x-frac", x_frac, "x as NUM/DEN multiple of x_c");
    observable->add_option("--sigma-frac", sigma_frac, "sigma as NUM/DEN");

    for (CLI::App* sub : {count, verify, scan, bridges, observable}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (count->parsed()) return cmd_count(common, n_max, format);
        if (verify->parsed()) return cmd_verify(common, T, L, mode, x_frac, sigma_frac);
        if (scan->parsed()) return cmd_scan(common, T_max, L_max, x_frac);
        if (bridges->parsed()) return cmd_bridges(common, n_max);
        if (observable->parsed())
            return cmd_observable(common, T, L, mode, x_frac, sigma_frac);
    } catch (const WalkCapExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 64;
}
