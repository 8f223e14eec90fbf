#include "hopes/cli.hpp"

#include "hopes/io.hpp"
#include "hopes/oracle.hpp"
#include "hopes/skeleton.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

namespace hopes {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitBudget = 3;

int log_level()
{
    const char* env = std::getenv("HOPES_LOG");
    if (!env)
        return 0;
    std::string v(env);
    if (v == "debug")
        return 2;
    if (v == "info")
        return 1;
    return 0;
}

void log_info(const std::string& msg)
{
    if (log_level() >= 1)
        std::cerr << "[info] " << msg << "\n";
}

struct RunConfig {
    std::string input;
    std::string filtration = "rips";
    int d = 1;
    std::string field = "2";
    double epsilon = kDefaultEpsilon;
    unsigned long seed = 0;
    std::string out_skeleton;
    std::string out_diagram;
    std::size_t budget = 22;
    bool distances = false;
    std::string recheck;
};

Field parse_field(const std::string& s)
{
    if (s == "q" || s == "rational" || s == "rationals")
        return Field::rationals();
    long p = 0;
    try {
        std::size_t pos = 0;
        p = std::stol(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("field must be a prime or 'q'");
    }
    return Field::prime(p);
}

bool ends_with(const std::string& s, const std::string& suffix)
{
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

WeightedComplex load_instance(const RunConfig& cfg)
{
    std::ifstream in(cfg.input);
    if (!in)
        throw std::invalid_argument("cannot open input file: " + cfg.input);

    if (ends_with(cfg.input, ".json")) {
        WeightedComplex W = load_weighted_complex_json(in, cfg.epsilon);
        // Spanning trees need the full simplex through dimension d, and
        // death times look one dimension higher.
        return complete_to_simplex(W, cfg.d + 1);
    }

    PointCloud cloud = cfg.distances ? load_distance_matrix_csv(in)
                                     : load_point_cloud_csv(in);
    log_info("loaded " + std::to_string(cloud.size()) + " points");
    int max_dim = std::max(1, cfg.d + 1);
    if (cfg.filtration == "cech")
        return cech_weights(cloud, max_dim, cfg.epsilon);
    if (cfg.filtration == "rips")
        return vr_weights(cloud, max_dim, cfg.epsilon);
    throw std::invalid_argument("unknown filtration: " + cfg.filtration);
}

// Deterministic tie order: seed 0 keeps the lexicographic order, any other
// seed shuffles the d-faces reproducibly.
std::optional<std::vector<Face>> tie_order_from_seed(const WeightedComplex& W,
                                                     int d, unsigned long seed)
{
    if (seed == 0 || W.complex().dim() < d)
        return std::nullopt;
    std::vector<Face> order = W.complex().faces(d);
    std::mt19937_64 rng(seed);
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

std::string fmt(double v)
{
    if (v == kInfinity)
        return "inf";
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

void write_or_stdout(const std::string& path,
                     const std::function<void(std::ostream&)>& writer)
{
    if (path.empty()) {
        writer(std::cout);
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::invalid_argument("cannot open output file: " + path);
    writer(out);
}

int cmd_hopes(const RunConfig& cfg, bool diagram_only)
{
    WeightedComplex W = load_instance(cfg);
    Field F = parse_field(cfg.field);
    auto order = tie_order_from_seed(W, cfg.d, cfg.seed);

    PersistenceDiagram D = persistence_diagram(W, cfg.d, F);
    if (diagram_only) {
        write_or_stdout(cfg.out_diagram,
                        [&](std::ostream& out) { save_diagram_csv(out, D); });
        return kExitOk;
    }

    LabeledSkeleton H = build_hopes(W, cfg.d, F, order ? &*order : nullptr);
    log_info("skeleton has " + std::to_string(H.faces().size()) + " faces");
    write_or_stdout(cfg.out_skeleton,
                    [&](std::ostream& out) { save_skeleton_json(out, H); });
    if (!cfg.out_diagram.empty()) {
        std::ofstream out(cfg.out_diagram);
        if (!out)
            throw std::invalid_argument("cannot open output file: " +
                                        cfg.out_diagram);
        save_diagram_csv(out, D);
    }
    return kExitOk;
}

int cmd_mst(const RunConfig& cfg)
{
    WeightedComplex W = load_instance(cfg);
    Field F = parse_field(cfg.field);
    auto order = tie_order_from_seed(W, cfg.d, cfg.seed);
    SpanningTree T = minimal_spanning_tree(W, cfg.d, F,
                                           order ? &*order : nullptr);
    log_info("tree weight " + fmt(T.total_weight()));
    write_or_stdout(cfg.out_skeleton, [&](std::ostream& out) {
        save_tree_json(out, T, cfg.seed);
    });
    return kExitOk;
}

int recheck_skeleton(const RunConfig& cfg, const LabeledSkeleton& computed)
{
    std::ifstream in(cfg.recheck);
    if (!in)
        throw std::invalid_argument("cannot open skeleton file: " + cfg.recheck);
    LabeledSkeleton loaded = load_skeleton_json(in);

    auto key = [](const LabeledSkeleton& H) {
        std::vector<std::tuple<Face, double, double, int>> k;
        for (const auto& lf : H.faces())
            k.emplace_back(lf.face, lf.label.l, lf.label.r,
                           static_cast<int>(lf.kind));
        std::sort(k.begin(), k.end());
        return k;
    };
    if (loaded.d() != computed.d() || key(loaded) != key(computed)) {
        std::cout << "recheck: skeleton file does not match recomputation\n";
        return kExitMismatch;
    }
    std::cout << "recheck: skeleton file matches recomputation\n";
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg)
{
    WeightedComplex W = load_instance(cfg);
    Field F = parse_field(cfg.field);
    auto order = tie_order_from_seed(W, cfg.d, cfg.seed);
    SearchBudget budget{cfg.budget};

    SpanningTree T = minimal_spanning_tree(W, cfg.d, F,
                                           order ? &*order : nullptr);
    LabeledSkeleton H = build_hopes(W, cfg.d, F, order ? &*order : nullptr);

    if (!cfg.recheck.empty())
        return recheck_skeleton(cfg, H);

    std::cout << "alpha,mst_weight,oracle_forest_weight,hopes_weight,"
                 "oracle_subcomplex_weight,status\n";
    bool ok = true;
    for (double alpha : W.critical_values()) {
        double mst_w = T.reduced_weight(alpha);
        double hopes_w = H.reduced_weight(alpha);
        OracleResult forest = min_fitting_forest(W, alpha, cfg.d, F, budget);
        OracleResult sub = min_fitting_subcomplex(W, alpha, cfg.d, F, budget);
        bool row_ok = forest.feasible && sub.feasible &&
                      std::abs(mst_w - forest.weight) <= 1e-9 &&
                      std::abs(hopes_w - sub.weight) <= 1e-9;
        ok = ok && row_ok;
        std::cout << fmt(alpha) << "," << fmt(mst_w) << ","
                  << fmt(forest.weight) << "," << fmt(hopes_w) << ","
                  << fmt(sub.weight) << "," << (row_ok ? "ok" : "MISMATCH")
                  << "\n";
    }
    return ok ? kExitOk : kExitMismatch;
}

int cmd_selftest(const RunConfig& cfg)
{
    std::mt19937_64 rng(cfg.seed ? cfg.seed : 1);
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    const std::vector<std::string> fields = {"2", "3", "q"};

    bool ok = true;
    for (int round = 0; round < 3; ++round) {
        int n = 4 + round % 2;
        std::vector<std::vector<double>> pts(n, std::vector<double>(2));
        for (auto& p : pts)
            for (auto& c : p)
                c = coord(rng);
        WeightedComplex W = vr_weights(PointCloud::from_points(pts), 2,
                                       cfg.epsilon);
        for (const auto& fs : fields) {
            Field F = parse_field(fs);
            int d = 1;
            SpanningTree T = minimal_spanning_tree(W, d, F);
            LabeledSkeleton H = build_hopes(W, d, F);
            PersistenceDiagram D = persistence_diagram(W, d, F);
            bool round_ok = true;

            std::size_t expect = static_cast<std::size_t>(n - 1);
            round_ok = round_ok && T.complex().face_count(d) == expect;

            round_ok = round_ok && diagram_correspondence(H, D).matched;

            for (double alpha : W.critical_values()) {
                OracleResult forest =
                    min_fitting_forest(W, alpha, d, F, SearchBudget{cfg.budget});
                OracleResult sub = min_fitting_subcomplex(
                    W, alpha, d, F, SearchBudget{cfg.budget});
                round_ok = round_ok && forest.feasible && sub.feasible &&
                           std::abs(T.reduced_weight(alpha) - forest.weight) <=
                               1e-9 &&
                           std::abs(H.reduced_weight(alpha) - sub.weight) <=
                               1e-9;
            }
            std::cout << "selftest round " << round << " field " << fs << ": "
                      << (round_ok ? "ok" : "FAIL") << "\n";
            ok = ok && round_ok;
        }
    }
    return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int cli_main(std::vector<std::string> args)
{
    CLI::App app{"Minimal spanning trees and persistent skeletons of "
                 "weighted simplicial complexes"};
    app.require_subcommand(1);

    RunConfig cfg;
    auto add_common = [&](CLI::App* sub, bool needs_input) {
        CLI::Option* input =
            sub->add_option("--input", cfg.input, "point cloud CSV, distance "
                                                  "matrix CSV, or weighted "
                                                  "complex JSON");
        if (needs_input)
            input->required();
        sub->add_option("--filtration", cfg.filtration,
                        "weighting for CSV input")
            ->check(CLI::IsMember({"rips", "cech"}));
        sub->add_option("--dim", cfg.d, "skeleton dimension d")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--field", cfg.field, "coefficient field: a prime or 'q'");
        sub->add_option("--epsilon", cfg.epsilon, "weight snapping tolerance")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", cfg.seed, "tie-order / self-test seed");
        sub->add_option("--out-skeleton", cfg.out_skeleton, "skeleton JSON path");
        sub->add_option("--out-diagram", cfg.out_diagram, "diagram CSV path");
        sub->add_option("--budget", cfg.budget,
                        "max candidate d-faces for exhaustive search");
        sub->add_flag("--distances", cfg.distances,
                      "treat CSV input as a distance matrix");
    };

    CLI::App* hopes = app.add_subcommand("hopes", "compute the skeleton");
    add_common(hopes, true);
    CLI::App* mst = app.add_subcommand("mst", "compute the spanning tree");
    add_common(mst, true);
    CLI::App* diagram = app.add_subcommand("diagram",
                                           "compute the persistence diagram");
    add_common(diagram, true);
    CLI::App* verify = app.add_subcommand(
        "verify", "check optimality against exhaustive search");
    add_common(verify, true);
    verify->add_option("--recheck-skeleton", cfg.recheck,
                       "compare a saved skeleton against recomputation");
    CLI::App* selftest = app.add_subcommand("selftest",
                                            "run seeded end-to-end checks");
    add_common(selftest, false);

    // CLI11 parses back to front.
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (hopes->parsed())
            return cmd_hopes(cfg, /*diagram_only=*/false);
        if (mst->parsed())
            return cmd_mst(cfg);
        if (diagram->parsed())
            return cmd_hopes(cfg, /*diagram_only=*/true);
        if (verify->parsed())
            return cmd_verify(cfg);
        if (selftest->parsed())
            return cmd_selftest(cfg);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}

}  // namespace hopes
