// Command-line toolkit around the fairclust library: fairify clusterings,
// measure pair distances, check fairness / p-divisibility, run the small-n
// exact oracles, fair correlation and consensus clustering, instance
// generators (random and 3-Partition hardness), and a benchmark harness.
//
// Exit codes: 0 success, 1 validation error (including failed checks),
// 2 I/O error.

#include <charconv>
#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fairclust/consensus.hpp"
#include "fairclust/core.hpp"
#include "fairclust/correlation.hpp"
#include "fairclust/equi.hpp"
#include "fairclust/fairness.hpp"
#include "fairclust/gen.hpp"
#include "fairclust/general.hpp"
#include "fairclust/io.hpp"
#include "fairclust/oracle.hpp"

namespace fc = fairclust;

namespace {

bool equal_classes(const fc::ColorAssignment& colors) {
    const auto counts = fc::color_counts(colors);
    for (std::uint64_t c : counts)
        if (c != counts[0]) return false;
    return true;
}

fc::Clustering run_fairify(const std::string& mode, const fc::Clustering& d, const fc::ColorAssignment& colors) {
    if (mode == "equi") return fc::fair_equi(d, colors);
    if (mode == "general") return fc::fair_general(d, colors);
    return equal_classes(colors) ? fc::fair_equi(d, colors) : fc::fair_general(d, colors);
}

std::uint64_t parse_u64(const std::string& field) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
        throw std::invalid_argument("not a non-negative integer: '" + field + "'");
    return value;
}

std::vector<std::uint64_t> parse_ratio(const std::string& text) {
    std::vector<std::uint64_t> p;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, ':')) p.push_back(parse_u64(field));
    if (p.empty()) throw std::invalid_argument("empty ratio");
    return p;
}

std::vector<std::uint64_t> parse_u64_list(const std::string& text, char sep) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    std::string field;
    while (std::getline(ss, field, sep))
        if (!field.empty()) out.push_back(parse_u64(field));
    return out;
}

std::uint32_t parse_norm(const std::string& text) {
    if (text == "center") return fc::kCenterNorm;
    const std::uint64_t ell = parse_u64(text);
    if (ell == 0) throw std::invalid_argument("norm must be a positive integer or 'center'");
    return static_cast<std::uint32_t>(ell);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct BenchOptions {
    std::vector<std::uint64_t> sizes;
    std::uint32_t k = 4;
    std::string mode = "both";
    std::string law = "geometric";
    std::string profile = "";
    std::uint64_t seed = 1;
    bool oracle = false;
    std::string emit = "csv";
};

int run_bench(const BenchOptions& opt) {
    if (opt.emit != "csv") throw std::invalid_argument("bench: only --emit csv is supported");
    std::cout << "algo,n,k,profile,seed,millis,dist,fair,opt,ratio\n";
    for (std::uint64_t n : opt.sizes) {
        for (const std::string& algo : {std::string("equi"), std::string("general")}) {
            if (opt.mode != "both" && opt.mode != algo) continue;
            fc::RandomSpec spec;
            spec.k = opt.k;
            spec.seed = opt.seed;
            spec.law = opt.law == "uniform" ? fc::ClusterLaw::Uniform : fc::ClusterLaw::Geometric;
            std::string profile_text = "equi";
            if (algo == "general" && !opt.profile.empty()) {
                spec.profile = parse_ratio(opt.profile);
                profile_text = opt.profile;
            }
            // Nominal sizes round down to a feasible multiple of the
            // profile weight.
            std::uint64_t weight = opt.k;
            if (!spec.profile.empty()) {
                weight = 0;
                for (std::uint64_t p : spec.profile) weight += p;
            }
            spec.n = static_cast<std::uint32_t>(n - n % weight);
            if (spec.n == 0) throw std::invalid_argument("bench: size smaller than the profile weight");
            const auto inst = fc::gen_random(spec);
            const auto t0 = std::chrono::steady_clock::now();
            const fc::Clustering f =
                algo == "equi" ? fc::fair_equi(inst.clustering, inst.colors) : fc::fair_general(inst.clustering, inst.colors);
            const double ms = seconds_since(t0) * 1e3;
            const std::uint64_t dist = fc::pair_distance(inst.clustering, f);
            const bool fair = fc::is_fair(f, inst.colors);
            std::string opt_text = "", ratio_text = "";
            if (opt.oracle && n <= fc::oracle_limit()) {
                const auto best = fc::exact_closest_fair(inst.clustering, inst.colors);
                opt_text = std::to_string(best.value);
                ratio_text = best.value == 0 ? (dist == 0 ? "1" : "inf")
                                             : std::to_string(double(dist) / double(best.value));
            }
            std::cout << algo << ',' << n << ',' << opt.k << ',' << profile_text << ',' << opt.seed << ',' << ms
                      << ',' << dist << ',' << (fair ? 1 : 0) << ',' << opt_text << ',' << ratio_text << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fair clustering post-processing toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    // fairify
    std::string fr_mode = "auto", fr_in, fr_out;
    auto* fairify = app.add_subcommand("fairify", "post-process a clustering into a fair one");
    fairify->add_option("--mode", fr_mode, "equi|general|auto")->check(CLI::IsMember({"equi", "general", "auto"}));
    fairify->add_option("IN", fr_in, "input clustering csv")->required();
    fairify->add_option("OUT", fr_out, "output clustering csv")->required();
    fairify->callback([&] {
        const auto in = fc::read_clustering(fr_in);
        const fc::Clustering f = run_fairify(fr_mode, in.clustering, in.colors);
        fc::write_clustering(fr_out, f, in.colors);
        std::cout << fc::pair_distance(in.clustering, f) << '\n';
    });

    // dist
    std::string d_a, d_b;
    auto* dist = app.add_subcommand("dist", "pair-counting distance between two clustering files");
    dist->add_option("A", d_a)->required();
    dist->add_option("B", d_b)->required();
    dist->callback([&] {
        const auto a = fc::read_clustering(d_a);
        const auto b = fc::read_clustering(d_b);
        std::cout << fc::pair_distance(a.clustering, b.clustering) << '\n';
    });

    // check
    std::string ch_file;
    bool ch_fair = false, ch_pdc = false;
    auto* check = app.add_subcommand("check", "check fairness or p-divisibility of a clustering file");
    check->add_flag("--fair", ch_fair, "check exact fairness");
    check->add_flag("--pdc", ch_pdc, "check p-divisibility w.r.t. the reduced profile");
    check->add_option("FILE", ch_file)->required();
    check->callback([&] {
        if (ch_fair == ch_pdc) throw std::invalid_argument("check: pass exactly one of --fair / --pdc");
        const auto in = fc::read_clustering(ch_file);
        bool ok;
        std::string name;
        if (ch_fair) {
            ok = fc::is_fair(in.clustering, in.colors);
            name = "fair";
        } else {
            ok = fc::is_p_divisible(in.clustering, in.colors, fc::reduced_profile(in.colors));
            name = "p-divisible";
        }
        std::cout << (ok ? name : "not " + name) << '\n';
        if (!ok) exit_code = 1;
    });

    // oracle
    auto* oracle = app.add_subcommand("oracle", "exact solvers by exhaustive enumeration (small n)");
    oracle->require_subcommand(1);
    std::string or_file, or_out, or_graph, or_points, or_norm = "1";
    auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", or_out, "write the optimal clustering here"); };

    auto* or_cf = oracle->add_subcommand("closest-fair", "closest fair clustering");
    or_cf->add_option("FILE", or_file)->required();
    add_out(or_cf);
    or_cf->callback([&] {
        const auto in = fc::read_clustering(or_file);
        const auto res = fc::exact_closest_fair(in.clustering, in.colors);
        if (!or_out.empty()) fc::write_clustering(or_out, res.best, in.colors);
        std::cout << res.value << '\n';
    });

    auto* or_cp = oracle->add_subcommand("closest-pdc", "closest p-divisible clustering");
    or_cp->add_option("FILE", or_file)->required();
    add_out(or_cp);
    or_cp->callback([&] {
        const auto in = fc::read_clustering(or_file);
        const auto res = fc::exact_closest_pdc(in.clustering, in.colors, fc::reduced_profile(in.colors));
        if (!or_out.empty()) fc::write_clustering(or_out, res.best, in.colors);
        std::cout << res.value << '\n';
    });

    auto* or_cc = oracle->add_subcommand("fair-cc", "optimal fair correlation clustering");
    or_cc->add_option("GRAPH", or_graph, "correlation instance file")->required();
    or_cc->add_option("POINTS", or_points, "clustering csv providing the colors")->required();
    add_out(or_cc);
    or_cc->callback([&] {
        const auto inst = fc::read_correlation(or_graph);
        const auto pts = fc::read_clustering(or_points);
        const auto res = fc::exact_fair_cc(inst, pts.colors);
        if (!or_out.empty()) fc::write_clustering(or_out, res.best, pts.colors);
        std::cout << res.value << '\n';
    });

    auto* or_fc = oracle->add_subcommand("fair-consensus", "optimal fair consensus clustering");
    or_fc->add_option("FILE", or_file, "consensus csv")->required();
    or_fc->add_option("--norm", or_norm, "positive integer ell or 'center'");
    add_out(or_fc);
    or_fc->callback([&] {
        auto in = fc::read_consensus(or_file);
        in.instance.norm_ell = parse_norm(or_norm);
        const auto res = fc::exact_fair_consensus(in.instance, in.colors);
        if (!or_out.empty()) fc::write_clustering(or_out, res.best, in.colors);
        std::cout << res.objective << '\n';
    });

    // cc fairify
    auto* cc = app.add_subcommand("cc", "fair correlation clustering");
    cc->require_subcommand(1);
    auto* ccf = cc->add_subcommand("fairify", "baseline correlation clustering, then closest-fair post-processing");
    std::string ccf_baseline = "pivot", ccf_graph, ccf_points, ccf_out;
    std::uint64_t ccf_seed = 0;
    ccf->add_option("--baseline", ccf_baseline, "pivot|exact|provided")
        ->check(CLI::IsMember({"pivot", "exact", "provided"}));
    ccf->add_option("--seed", ccf_seed, "pivot seed");
    ccf->add_option("GRAPH", ccf_graph, "correlation instance file")->required();
    ccf->add_option("POINTS", ccf_points, "clustering csv: colors; cluster column = provided baseline")->required();
    ccf->add_option("OUT", ccf_out, "output clustering csv")->required();
    ccf->callback([&] {
        const auto inst0 = fc::read_correlation(ccf_graph);
        auto inst = inst0;
        const auto pts = fc::read_clustering(ccf_points);
        if (pts.colors.size() != inst.n) throw std::invalid_argument("cc fairify: POINTS does not match GRAPH size");
        fc::CcBaseline baseline = fc::CcBaseline::pivot(ccf_seed);
        if (ccf_baseline == "exact") baseline = fc::CcBaseline::exact_oracle();
        if (ccf_baseline == "provided") baseline = fc::CcBaseline::clustering(pts.clustering);
        const fc::Clustering f = fc::fairify_cc(inst, pts.colors, baseline);
        fc::write_clustering(ccf_out, f, pts.colors);
        std::cout << fc::cc_cost(inst, f) << '\n';
    });

    // consensus
    std::string cs_norm = "1", cs_in, cs_out;
    auto* consensus = app.add_subcommand("consensus", "fair consensus clustering (best input + fairify)");
    consensus->add_option("--norm", cs_norm, "positive integer ell or 'center'");
    consensus->add_option("IN", cs_in, "consensus csv")->required();
    consensus->add_option("OUT", cs_out, "output clustering csv")->required();
    consensus->callback([&] {
        auto in = fc::read_consensus(cs_in);
        in.instance.norm_ell = parse_norm(cs_norm);
        const fc::Clustering f = fc::fair_consensus(in.instance, in.colors);
        fc::write_clustering(cs_out, f, in.colors);
        std::cout << fc::consensus_objective(in.instance, f) << '\n';
    });

    // gen
    auto* gen = app.add_subcommand("gen", "instance generators");
    gen->require_subcommand(1);

    auto* gr = gen->add_subcommand("random", "random colored clustering with an exact color profile");
    std::uint64_t gr_n = 0, gr_seed = 0;
    std::uint32_t gr_k = 1;
    std::string gr_ratio = "equi", gr_law = "uniform", gr_out;
    gr->add_option("--n", gr_n, "point count")->required();
    gr->add_option("--k", gr_k, "color count")->required();
    gr->add_option("--ratio", gr_ratio, "equi or p1:p2:...:pk");
    gr->add_option("--law", gr_law, "uniform|geometric")->check(CLI::IsMember({"uniform", "geometric"}));
    gr->add_option("--seed", gr_seed, "rng seed");
    gr->add_option("OUT", gr_out, "output clustering csv")->required();
    gr->callback([&] {
        fc::RandomSpec spec;
        spec.n = static_cast<std::uint32_t>(gr_n);
        spec.k = gr_k;
        spec.seed = gr_seed;
        spec.law = gr_law == "uniform" ? fc::ClusterLaw::Uniform : fc::ClusterLaw::Geometric;
        if (gr_ratio != "equi") spec.profile = parse_ratio(gr_ratio);
        const auto inst = fc::gen_random(spec);
        fc::write_clustering(gr_out, inst.clustering, inst.colors);
    });

    auto* gh = gen->add_subcommand("hardness", "3-Partition reduction instance (+ YES certificate)");
    std::string gh_s, gh_partition, gh_out, gh_cert;
    std::uint32_t gh_k = 3;
    gh->add_option("--s", gh_s, "comma-separated multiset, e.g. 5,6,7,5,6,7")->required();
    gh->add_option("--k", gh_k, "color count (>= 3)");
    gh->add_option("--partition", gh_partition, "semicolon-separated index triples, e.g. 0,1,2;3,4,5");
    gh->add_option("OUT", gh_out, "instance clustering csv")->required();
    gh->add_option("--cert", gh_cert, "write the YES-certificate clustering here");
    gh->callback([&] {
        const auto s = parse_u64_list(gh_s, ',');
        std::optional<std::vector<std::array<std::size_t, 3>>> partition;
        if (!gh_partition.empty()) {
            partition.emplace();
            std::stringstream ss(gh_partition);
            std::string triple;
            while (std::getline(ss, triple, ';')) {
                const auto idx = parse_u64_list(triple, ',');
                if (idx.size() != 3) throw std::invalid_argument("gen hardness: each partition entry needs 3 indices");
                partition->push_back({static_cast<std::size_t>(idx[0]), static_cast<std::size_t>(idx[1]),
                                      static_cast<std::size_t>(idx[2])});
            }
        }
        const auto hard = fc::gen_hardness(s, gh_k, partition);
        fc::write_clustering(gh_out, hard.h, hard.colors);
        for (std::size_t i : hard.out_of_range)
            std::cerr << "warning: x_" << i << " = " << s[i] << " outside (T/4, T/2) with T = " << hard.t << '\n';
        if (!gh_cert.empty()) {
            if (!hard.certificate) throw std::invalid_argument("gen hardness: no YES partition known for S");
            fc::write_clustering(gh_cert, *hard.certificate, hard.colors);
        }
        std::cout << hard.tau << '\n';
    });

    // bench
    BenchOptions bo;
    std::string bench_sizes;
    auto* bench = app.add_subcommand("bench", "runtime / ratio table as CSV on stdout");
    bench->add_option("--sizes", bench_sizes, "comma-separated point counts")->required();
    bench->add_option("--k", bo.k, "color count");
    bench->add_option("--mode", bo.mode, "equi|general|both")->check(CLI::IsMember({"equi", "general", "both"}));
    bench->add_option("--law", bo.law, "uniform|geometric")->check(CLI::IsMember({"uniform", "geometric"}));
    bench->add_option("--profile", bo.profile, "ratio for general mode, e.g. 9:3:1");
    bench->add_option("--seed", bo.seed, "rng seed");
    bench->add_flag("--oracle", bo.oracle, "add exact optimum and ratio when n is within the oracle guard");
    bench->add_option("--emit", bo.emit, "output format (csv)");
    bench->callback([&] {
        bo.sizes = parse_u64_list(bench_sizes, ',');
        exit_code = run_bench(bo);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const fc::IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
