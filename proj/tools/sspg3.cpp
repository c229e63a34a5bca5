// Command-line driver: enumeration runs, one-off curve search, curve
// verification, and coset-table export. All artifacts are JSON / JSON-lines.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ssp3/enumerate.hpp"
#include "ssp3/errors.hpp"
#include "ssp3/invariants.hpp"
#include "ssp3/serialize.hpp"
#include "ssp3/symplectic.hpp"
#include "ssp3/verify.hpp"

using namespace ssp;
using nlohmann::json;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint64_t binom3(uint64_t n) { return n * (n - 1) * (n - 2) / 6; }

json run_header(const Fq& F, uint64_t seed, unsigned sign_mask) {
    return json{{"p", F.p()},
                {"nonresidue", F.nonresidue()},
                {"prng", "mt19937_64"},
                {"seed", seed},
                {"sign_mask", sign_mask}};
}

json invariant_json(const Fq& F, const std::vector<Fe>& vals) {
    json a = json::array();
    for (const Fe& v : vals) a.push_back(fe_to_json(v));
    return a;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

struct CommonArgs {
    uint64_t p = 0;
    int threads = 1;
    std::string checkpoint;
    uint64_t seed = 0;
    uint64_t stop_at_count = 0;
    bool emit_invariants = false;
    std::string out_dir = ".";
    unsigned sign_mask = 0;
};

void add_common(CLI::App* cmd, CommonArgs& a, bool needs_p) {
    auto* p = cmd->add_option("--p", a.p, "characteristic (prime > 7)")->envname("SSPG3_P");
    if (needs_p) p->required();
    cmd->add_option("--threads", a.threads, "worker threads")
        ->check(CLI::PositiveNumber)
        ->envname("SSPG3_THREADS");
    cmd->add_option("--checkpoint", a.checkpoint, "checkpoint file for resumable runs")
        ->envname("SSPG3_CHECKPOINT");
    cmd->add_option("--seed", a.seed, "PRNG seed for randomized searches")->envname("SSPG3_SEED");
    cmd->add_option("--stop-at-count", a.stop_at_count,
                    "stop after this many classes (0 = run to closure)")
        ->envname("SSPG3_STOP_AT_COUNT");
    cmd->add_flag("--emit-invariants", a.emit_invariants, "include raw invariant tuples in records")
        ->envname("SSPG3_EMIT_INVARIANTS");
    cmd->add_option("--out-dir", a.out_dir, "artifact directory")->envname("SSPG3_OUT_DIR");
    cmd->add_option("--sign-mask", a.sign_mask, "square-root sign convention (0..255)")
        ->envname("SSPG3_SIGN_MASK");
}

void check_p(const CommonArgs& a) {
    if (!is_prime(a.p) || a.p <= 7)
        throw CLI::ValidationError("--p", "p must be a prime greater than 7");
}

EnumOptions make_options(const CommonArgs& a) {
    EnumOptions o;
    o.threads = a.threads;
    o.stop_at_count = a.stop_at_count;
    o.checkpoint_path = a.checkpoint;
    o.sign_mask = a.sign_mask;
    return o;
}

int cmd_enumerate2(const CommonArgs& a) {
    check_p(a);
    Fq F(a.p);
    Dim2Result r = enumerate_dim2(F, make_options(a));

    std::filesystem::create_directories(a.out_dir);
    std::string lines = run_header(F, a.seed, a.sign_mask).dump() + "\n";
    for (const auto& c : r.classes) {
        json rec{{"kind", "genus2"},
                 {"fingerprint", c.fp},
                 {"model", hyperelliptic_to_json(c.model)},
                 {"node", theta_to_json(c.node)}};
        if (a.emit_invariants) rec["invariants"] = invariant_json(F, igusa(F, c.model));
        lines += rec.dump() + "\n";
    }
    write_text(std::filesystem::path(a.out_dir) / "curves.jsonl", lines);

    json summary{{"p", a.p},
                 {"classes", r.classes.size()},
                 {"nodes", r.nodes},
                 {"edges", r.edges}};
    write_text(std::filesystem::path(a.out_dir) / "summary.json", summary.dump(2) + "\n");
    std::cout << summary.dump() << "\n";
    return 0;
}

int cmd_enumerate3(const CommonArgs& a) {
    check_p(a);
    Fq F(a.p);
    Dim3Result r = enumerate_dim3(F, make_options(a));

    uint64_t L1 = r.quartics.size(), L2 = r.hyper.size();
    uint64_t L3 = r.lambda1 * r.lambda2;
    uint64_t L4 = binom3(r.lambda1 + 2);
    uint64_t total = L1 + L2 + L3 + L4;

    std::filesystem::create_directories(a.out_dir);
    std::string lines = run_header(F, a.seed, a.sign_mask).dump() + "\n";
    for (const auto& c : r.quartics) {
        json rec{{"kind", "quartic"},
                 {"fingerprint", c.fp},
                 {"model", quartic_to_json(c.model)},
                 {"node", theta_to_json(c.node)}};
        if (a.emit_invariants) rec["invariants"] = invariant_json(F, dixmier_ohno(F, c.model));
        lines += rec.dump() + "\n";
    }
    for (const auto& c : r.hyper) {
        json rec{{"kind", "hyperelliptic"},
                 {"fingerprint", c.fp},
                 {"model", hyperelliptic_to_json(c.model)},
                 {"node", theta_to_json(c.node)}};
        if (a.emit_invariants) rec["invariants"] = invariant_json(F, shioda(F, c.model));
        lines += rec.dump() + "\n";
    }
    write_text(std::filesystem::path(a.out_dir) / "curves.jsonl", lines);

    json summary{{"p", a.p},     {"L1", L1},       {"L2", L2},
                 {"L3", L3},     {"L4", L4},       {"total", total},
                 {"nodes", r.nodes}, {"edges", r.edges}, {"seconds", r.seconds}};
    write_text(std::filesystem::path(a.out_dir) / "summary.json", summary.dump(2) + "\n");

    char csv[128];
    std::snprintf(csv, sizeof(csv), "p,L1,L2,L3,L4,total\n%llu,%llu,%llu,%llu,%llu,%llu\n",
                  (unsigned long long)a.p, (unsigned long long)L1, (unsigned long long)L2,
                  (unsigned long long)L3, (unsigned long long)L4, (unsigned long long)total);
    write_text(std::filesystem::path(a.out_dir) / "counts.csv", csv);

    std::cout << summary.dump() << "\n";
    return 0;
}

int cmd_find_hyp(const CommonArgs& a) {
    check_p(a);
    Fq F(a.p);
    HyperellipticModel m = find_hyperelliptic(F, a.seed);
    json out{{"header", run_header(F, a.seed, a.sign_mask)},
             {"model", hyperelliptic_to_json(m)},
             {"fingerprint", fingerprint(F, shioda(F, m), shioda_weights())}};
    if (a.emit_invariants) out["invariants"] = invariant_json(F, shioda(F, m));
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_verify(const CommonArgs& a, const std::string& curve) {
    check_p(a);
    Fq F(a.p);
    json j = json::parse(curve);
    CartierManinMatrix M;
    if (j.contains("coeffs")) {
        M = hasse_witt_quartic(F, quartic_from_json(F, j));
    } else if (j.contains("lambdas")) {
        M = cartier_manin_hyperelliptic(F, hyperelliptic_rhs(F, hyperelliptic_from_json(F, j)));
    } else {
        throw CLI::ValidationError("--curve", "expected a quartic or hyperelliptic model");
    }
    bool ok = cm_is_zero(F, M);
    json mat = json::array();
    for (const Fe& e : M.entries) mat.push_back(fe_to_json(e));
    std::cout << "superspecial: " << (ok ? "true" : "false") << "\n";
    std::cout << json{{"p", a.p}, {"matrix", mat}}.dump() << "\n";
    return 0;
}

int cmd_export_cosets(const CommonArgs& a, int g) {
    const auto& reps = coset_reps(g);
    json out = json::array();
    for (const auto& M : reps) {
        json rows = json::array();
        for (int r = 0; r < 2 * g; ++r) {
            json row = json::array();
            for (int c = 0; c < 2 * g; ++c) row.push_back(M.at(r, c));
            rows.push_back(row);
        }
        out.push_back(rows);
    }
    std::filesystem::create_directories(a.out_dir);
    std::filesystem::path path =
        std::filesystem::path(a.out_dir) / ("cosets_g" + std::to_string(g) + ".json");
    write_text(path, json{{"g", g}, {"count", reps.size()}, {"reps", out}}.dump(2) + "\n");
    std::cout << "wrote " << path.string() << " (" << reps.size() << " representatives)\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"superspecial genus-3 curve enumeration over F_{p^2}"};
    app.require_subcommand(1);
    app.set_config("--config")->envname("SSPG3_CONFIG");

    CommonArgs a2, a3, af, av, ac;
    std::string curve_json;
    int coset_g = 3;

    auto* e2 = app.add_subcommand("enumerate2", "enumerate superspecial genus-2 Jacobians");
    add_common(e2, a2, true);
    auto* e3 = app.add_subcommand("enumerate3", "enumerate superspecial genus-3 curves");
    add_common(e3, a3, true);
    auto* fh = app.add_subcommand("find-hyp", "find one superspecial genus-3 hyperelliptic curve");
    add_common(fh, af, true);
    auto* vf = app.add_subcommand("verify", "check a curve model for superspeciality");
    add_common(vf, av, true);
    vf->add_option("--curve", curve_json, "curve model as JSON")->required();
    auto* xc = app.add_subcommand("export-cosets", "dump the isogeny-kernel coset table");
    add_common(xc, ac, false);
    xc->add_option("--g", coset_g, "genus (2 or 3)")->check(CLI::Range(2, 3));

    try {
        app.parse(argc, argv);
        if (e2->parsed()) return cmd_enumerate2(a2);
        if (e3->parsed()) return cmd_enumerate3(a3);
        if (fh->parsed()) return cmd_find_hyp(af);
        if (vf->parsed()) return cmd_verify(av, curve_json);
        if (xc->parsed()) return cmd_export_cosets(ac, coset_g);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);   // --help, --version
        app.exit(e);
        return kExitUsage;
    } catch (const json::exception& e) {
        std::cerr << "error: bad JSON input: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
