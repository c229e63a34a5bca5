#include "ssp3/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <random>
#include <thread>

#include "ssp3/errors.hpp"
#include "ssp3/invariants.hpp"
#include "ssp3/poly.hpp"
#include "ssp3/reconstruct.hpp"
#include "ssp3/seeds.hpp"
#include "ssp3/serialize.hpp"
#include "ssp3/symplectic.hpp"

namespace ssp {

namespace {

// Run fn(i) for i in [0, count) across up to nthreads workers. The work is
// pure; commit order is handled by the caller.
void parallel_for(int nthreads, size_t count, const std::function<void(size_t)>& fn) {
    if (nthreads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    size_t workers = std::min<size_t>(nthreads, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (size_t i = w; i < count; i += workers) fn(i);
        });
    for (auto& t : pool) t.join();
}

// Per-edge codomain data, computed in parallel, committed in edge order.
struct EdgeOut {
    ThetaNull node;
    int n_van = -1;
    std::string fp;
    QuarticModel quartic;
    HyperellipticModel hyper;
};

EdgeOut process_edge_g3(const Fq& F, const ThetaNull& T, const SymplecticRep& M, unsigned sign_mask) {
    EdgeOut out;
    out.node = isogeny_step(F, act(F, M, T), sign_mask);
    VarietyType vt = vanishing_count(F, out.node);
    out.n_van = vt.n_van;
    if (vt.n_van == 0) {
        out.quartic = weber_quartic(F, out.node);
        out.fp = fingerprint(F, dixmier_ohno(F, out.quartic), dixmier_ohno_weights());
    } else if (vt.n_van == 1) {
        out.hyper = rosenhain_g3(F, out.node);
        out.fp = fingerprint(F, shioda(F, out.hyper), shioda_weights());
    }
    return out;
}

void save_checkpoint(const std::string& path, const Fq& F, size_t cursor,
                     const std::vector<ThetaNull>& S,
                     const std::map<std::string, QuarticClass>& quartics,
                     const std::map<std::string, HyperClass>& hyper,
                     uint64_t nodes, uint64_t edges) {
    json j;
    j["version"] = 1;
    j["p"] = F.p();
    j["cursor"] = cursor;
    j["nodes"] = nodes;
    j["edges"] = edges;
    json s = json::array();
    for (const auto& T : S) s.push_back(theta_to_json(T));
    j["S"] = s;
    json q = json::array();
    for (const auto& [fp, c] : quartics)
        q.push_back({{"fp", fp}, {"model", quartic_to_json(c.model)}, {"node", theta_to_json(c.node)}});
    j["quartics"] = q;
    json h = json::array();
    for (const auto& [fp, c] : hyper)
        h.push_back({{"fp", fp}, {"model", hyperelliptic_to_json(c.model)}, {"node", theta_to_json(c.node)}});
    j["hyper"] = h;
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp);
        os << j.dump();
    }
    std::rename(tmp.c_str(), path.c_str());
}

bool load_checkpoint(const std::string& path, const Fq& F, size_t& cursor,
                     std::vector<ThetaNull>& S,
                     std::map<std::string, QuarticClass>& quartics,
                     std::map<std::string, HyperClass>& hyper,
                     uint64_t& nodes, uint64_t& edges) {
    std::ifstream is(path);
    if (!is) return false;
    json j;
    try {
        is >> j;
    } catch (...) {
        return false;
    }
    if (j.value("version", 0) != 1 || j.value("p", (uint64_t)0) != F.p()) return false;
    cursor = j.at("cursor").get<size_t>();
    nodes = j.at("nodes").get<uint64_t>();
    edges = j.at("edges").get<uint64_t>();
    S.clear();
    for (const json& t : j.at("S")) S.push_back(theta_from_json(F, t));
    quartics.clear();
    for (const json& e : j.at("quartics"))
        quartics.emplace(e.at("fp").get<std::string>(),
                         QuarticClass{e.at("fp").get<std::string>(),
                                      quartic_from_json(F, e.at("model")),
                                      theta_from_json(F, e.at("node"))});
    hyper.clear();
    for (const json& e : j.at("hyper"))
        hyper.emplace(e.at("fp").get<std::string>(),
                      HyperClass{e.at("fp").get<std::string>(),
                                 hyperelliptic_from_json(F, e.at("model")),
                                 theta_from_json(F, e.at("node"))});
    return true;
}

} // namespace

Dim2Result enumerate_dim2(const Fq& F, const EnumOptions& opt) {
    auto seeds = supersingular_lambdas(F);
    std::vector<ThetaNull> S;
    for (size_t i = 0; i < seeds.size(); ++i)
        for (size_t j = i; j < seeds.size(); ++j)
            S.push_back(product_theta(F, seeds[i].theta, seeds[j].theta));
    // Enqueue on new exact vectors: one representative per class is not enough
    // to cover the whole graph, and the g=2 graph is small enough to visit fully.
    auto vec_key = [](const ThetaNull& T) {
        std::string s;
        for (const Fe& x : T.v) {
            s += std::to_string(x.c0);
            s += ',';
            s += std::to_string(x.c1);
            s += ';';
        }
        return s;
    };
    std::set<std::string> visited;
    for (const auto& T : S) visited.insert(vec_key(T));
    std::map<std::string, HyperClass> found;
    const auto& reps = kernel_transforms(2);
    Dim2Result res;
    for (size_t k = 0; k < S.size(); ++k) {
        std::vector<EdgeOut> outs(reps.size());
        parallel_for(opt.threads, reps.size(), [&](size_t e) {
            EdgeOut& o = outs[e];
            o.node = isogeny_step(F, act(F, reps[e], S[k]), opt.sign_mask);
            VarietyType vt = vanishing_count(F, o.node);
            o.n_van = vt.n_van;
            if (vt.n_van == 0) {
                o.hyper = rosenhain_g2(F, o.node);
                o.fp = fingerprint(F, igusa(F, o.hyper), igusa_weights());
            }
        });
        for (EdgeOut& o : outs) {
            ++res.edges;
            if (o.n_van != 0) continue;   // products are all seeded up front
            if (!visited.insert(vec_key(o.node)).second) continue;
            S.push_back(o.node);
            found.emplace(o.fp, HyperClass{o.fp, o.hyper, o.node});
        }
        ++res.nodes;
    }
    if (found.empty()) throw SingularOrCorrupt("genus-2 walk found no Jacobian nodes");
    for (auto& [fp, c] : found) res.classes.push_back(std::move(c));
    return res;
}

Dim3Result enumerate_dim3(const Fq& F, const EnumOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    auto seeds = supersingular_lambdas(F);
    Dim2Result g2 = enumerate_dim2(F, opt);

    Dim3Result res;
    res.lambda1 = seeds.size();
    res.lambda2 = g2.classes.size();

    std::vector<ThetaNull> S;
    std::map<std::string, QuarticClass> quartics;
    std::map<std::string, HyperClass> hyper;
    size_t cursor = 0;
    uint64_t nodes = 0, edges = 0;

    bool resumed = false;
    if (!opt.checkpoint_path.empty())
        resumed = load_checkpoint(opt.checkpoint_path, F, cursor, S, quartics, hyper, nodes, edges);
    if (!resumed) {
        // Type-4 seeds: unordered elliptic triples.
        for (size_t i = 0; i < seeds.size(); ++i)
            for (size_t j = i; j < seeds.size(); ++j)
                for (size_t k = j; k < seeds.size(); ++k)
                    S.push_back(product_theta(
                        F, seeds[i].theta, product_theta(F, seeds[j].theta, seeds[k].theta)));
        // Type-3 seeds: elliptic times genus-2 Jacobian.
        for (const auto& s : seeds)
            for (const auto& c : g2.classes) S.push_back(product_theta(F, s.theta, c.node));
    }

    const auto& reps = kernel_transforms(3);
    for (; cursor < S.size(); ++cursor) {
        std::vector<EdgeOut> outs(reps.size());
        parallel_for(opt.threads, reps.size(), [&](size_t e) {
            outs[e] = process_edge_g3(F, S[cursor], reps[e], opt.sign_mask);
        });
        for (EdgeOut& o : outs) {
            ++edges;
            if (o.n_van == 6 || o.n_van == 9) continue;   // product types, seeded up front
            if (o.n_van == 0) {
                if (quartics.emplace(o.fp, QuarticClass{o.fp, o.quartic, o.node}).second)
                    S.push_back(o.node);
            } else {
                if (hyper.emplace(o.fp, HyperClass{o.fp, o.hyper, o.node}).second)
                    S.push_back(o.node);
            }
        }
        ++nodes;
        if (!opt.checkpoint_path.empty() && opt.checkpoint_every && nodes % opt.checkpoint_every == 0)
            save_checkpoint(opt.checkpoint_path, F, cursor + 1, S, quartics, hyper, nodes, edges);
        if (opt.stop_at_count && quartics.size() + hyper.size() >= opt.stop_at_count) break;
    }

    for (auto& [fp, c] : quartics) res.quartics.push_back(std::move(c));
    for (auto& [fp, c] : hyper) res.hyper.push_back(std::move(c));
    res.nodes = nodes;
    res.edges = edges;
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

namespace {

// Rosenhain form of a curve with known branch points: Moebius map r0 -> 0,
// r1 -> 1, rinf -> infinity (rinf may itself be infinity).
HyperellipticModel rosenhain_from_branch_points(const Fq& F, const std::vector<Fe>& finite_roots,
                                                bool infinity_is_branch) {
    std::vector<Fe> roots = finite_roots;
    HyperellipticModel m;
    m.g = 3;
    if (infinity_is_branch) {
        // keep infinity fixed: x -> (x - r0)/(r1 - r0)
        Fe r0 = roots[0], r1 = roots[1];
        Fe d = F.inv(F.sub(r1, r0));
        for (size_t i = 2; i < roots.size(); ++i)
            m.lambdas.push_back(F.mul(F.sub(roots[i], r0), d));
    } else {
        // 8 finite roots: send r0 -> 0, r1 -> 1, r2 -> infinity
        Fe r0 = roots[0], r1 = roots[1], r2 = roots[2];
        Fe c = F.div(F.sub(r1, r2), F.sub(r1, r0));
        for (size_t i = 3; i < roots.size(); ++i)
            m.lambdas.push_back(F.mul(F.div(F.sub(roots[i], r0), F.sub(roots[i], r2)), c));
    }
    return m;
}

} // namespace

HyperellipticModel find_hyperelliptic(const Fq& F, uint64_t rng_seed, uint64_t step_cap) {
    uint64_t p = F.p();
    if (p % 7 == 6) {
        // y^2 = x^7 - 1: roots are the 7th roots of unity
        Poly f(8, F.zero());
        f[7] = F.one();
        f[0] = F.from_int(-1);
        auto r = poly::roots(F, f);
        return rosenhain_from_branch_points(F, r, true);
    }
    if (p % 4 == 3) {
        // y^2 = x^7 - x: roots 0 and the 6th roots of unity
        Poly f(7, F.zero());
        f[6] = F.one();
        f[0] = F.from_int(-1);
        auto r = poly::roots(F, f);
        std::vector<Fe> all{F.zero(), F.one()};
        for (const Fe& x : r)
            if (!(x == F.one())) all.push_back(x);
        return rosenhain_from_branch_points(F, all, true);
    }
    if (p % 8 == 7) {
        // y^2 = x^8 - 1: roots are the 8th roots of unity, infinity not a branch point
        Poly f(9, F.zero());
        f[8] = F.one();
        f[0] = F.from_int(-1);
        auto r = poly::roots(F, f);
        return rosenhain_from_branch_points(F, r, false);
    }
    // replayable random walk from an E^3 seed
    auto seeds = supersingular_lambdas(F);
    ThetaNull cur = product_theta(
        F, seeds[0].theta, product_theta(F, seeds[0].theta, seeds[0].theta));
    std::mt19937_64 rng(rng_seed);
    const auto& reps = kernel_transforms(3);
    for (uint64_t step = 0; step < step_cap; ++step) {
        cur = isogeny_step(F, act(F, reps[rng() % reps.size()], cur));
        if (vanishing_count(F, cur).n_van == 1) return rosenhain_g3(F, cur);
    }
    throw GaveUp("random walk exceeded the step cap without finding a hyperelliptic node");
}

} // namespace ssp
