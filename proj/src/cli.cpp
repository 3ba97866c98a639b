#include "majority/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "majority/construct.hpp"
#include "majority/exact.hpp"
#include "majority/fractional.hpp"
#include "majority/generate.hpp"
#include "majority/hardness.hpp"
#include "majority/io.hpp"

namespace majority {

namespace {

enum Exit { ok = 0, invalid = 1, usage = 2, precondition = 3 };

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::parse_error:
    case ErrorKind::malformed_edge:
        return usage;
    case ErrorKind::partial_coloring:
        return invalid;
    default:
        return precondition;
    }
}

class Inputs {
public:
    explicit Inputs(std::istream& in) : in_(in) {}

    template <class Parse>
    auto read(const std::string& path, Parse parse)
    {
        if (path == "-") {
            if (stdin_used_)
                throw Error(ErrorKind::parse_error, "standard input can be read only once");
            stdin_used_ = true;
            return parse(in_);
        }
        std::ifstream file(path);
        if (!file)
            throw Error(ErrorKind::parse_error, "cannot open " + path);
        return parse(file);
    }

    Digraph graph(const std::string& path) { return read(path, [](std::istream& s) { return parse_digraph(s); }); }

private:
    std::istream& in_;
    bool stdin_used_ = false;
};

std::string fixed(double x, int digits = 6)
{
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << x;
    return s.str();
}

std::string join(const std::vector<Vertex>& vs)
{
    std::string s;
    for (Vertex v : vs)
        s += (s.empty() ? "" : " ") + std::to_string(v);
    return s;
}

ListAssignment uniform_lists(int n, int k)
{
    std::vector<Color> l(k);
    for (int i = 0; i < k; ++i)
        l[i] = i + 1;
    return ListAssignment(n, l);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Majority colourings of digraphs", "majcol"};
    app.require_subcommand(1);
    bool strict = false;
    app.add_flag("--strict", strict, "Require an explicit --seed for randomized commands");

    Inputs inputs(in);
    std::function<int()> action;

    // verify
    std::string graph_path, coloring_path, alpha_text = "1/2";
    bool fractional_doc = false;
    auto* verify = app.add_subcommand("verify", "Check a coloring (exit 0 iff valid)");
    verify->add_option("graph", graph_path, "Edge list, - for stdin")->required();
    verify->add_option("coloring", coloring_path, "Coloring, or fractional coloring with --fractional")->required();
    verify->add_option("--alpha", alpha_text, "Threshold a/b");
    verify->add_flag("--fractional", fractional_doc, "Treat the coloring as a fractional coloring");
    verify->callback([&] {
        action = [&] {
            const Digraph d = inputs.graph(graph_path);
            if (fractional_doc) {
                const auto f = inputs.read(coloring_path, [](std::istream& s) { return parse_fractional(s); });
                const auto check = verify_fractional(d, f);
                if (!check.ok) {
                    err << "invalid: " << check.reason << "\n";
                    return int(invalid);
                }
                out << "valid weight " << format_double(total_weight(f)) << "\n";
                return int(ok);
            }
            const auto alpha = MajorityParam::parse(alpha_text);
            const auto c = inputs.read(coloring_path, [&](std::istream& s) { return parse_coloring(s, d.size()); });
            const auto bad = verify_majority(d, c, alpha);
            for (Vertex v : bad) {
                int same = 0;
                for (Vertex w : d.out(v))
                    same += c[w] == c[v];
                err << "violation " << v << " color " << c[v] << " same " << same << " of " << d.out_degree(v) << "\n";
            }
            if (!bad.empty())
                return int(invalid);
            out << "valid\n";
            return int(ok);
        };
    });

    // solve-exact
    int colors = 0;
    std::string lists_path;
    auto* solve = app.add_subcommand("solve-exact", "Exhaustive search for a coloring");
    solve->add_option("graph", graph_path)->required();
    solve->add_option("--colors", colors, "Number of colors")->required()->check(CLI::PositiveNumber);
    solve->add_option("--alpha", alpha_text, "Threshold a/b");
    solve->add_option("--lists", lists_path, "List assignment; restricts each vertex to its list");
    solve->callback([&] {
        action = [&] {
            const Digraph d = inputs.graph(graph_path);
            const auto alpha = MajorityParam::parse(alpha_text);
            std::optional<Coloring> c;
            if (lists_path.empty()) {
                c = exact_majority_colorable(d, colors, alpha);
            } else {
                auto lists = inputs.read(lists_path, [&](std::istream& s) { return parse_lists(s, d.size()); });
                for (auto& l : lists)
                    if (static_cast<int>(l.size()) > colors)
                        l.resize(colors);
                c = exact_list_majority(d, lists, alpha);
            }
            if (!c) {
                out << "UNSAT\n";
                return int(invalid);
            }
            out << format_coloring(*c);
            return int(ok);
        };
    });

    // color
    std::string strategy, partition_path;
    int k = 2;
    auto* color = app.add_subcommand("color", "Run a constructive coloring procedure");
    color->add_option("graph", graph_path)->required();
    color->add_option("--strategy", strategy, "Procedure")
        ->required()
        ->check(CLI::IsMember({"odd-partition", "chromatic6", "dichromatic3", "degenerate", "bounded-degree", "alpha-k",
                               "no-odd-cycles", "acyclic"}));
    color->add_option("--lists", lists_path, "List assignment (default: 1 2 3 everywhere)");
    color->add_option("--partition", partition_path, "Vertex partition");
    color->add_option("--k", k, "Palette parameter for alpha-k and acyclic")->check(CLI::PositiveNumber);
    color->callback([&] {
        action = [&] {
            const Digraph d = inputs.graph(graph_path);
            const int n = d.size();
            auto lists = [&](int default_size) {
                if (lists_path.empty())
                    return uniform_lists(n, default_size);
                return inputs.read(lists_path, [&](std::istream& s) { return parse_lists(s, n); });
            };
            auto partition = [&]() -> std::optional<VertexPartition> {
                if (partition_path.empty())
                    return std::nullopt;
                return inputs.read(partition_path, [&](std::istream& s) { return parse_partition(s, n); });
            };
            auto padded = [](VertexPartition p, std::size_t parts) {
                p.parts.resize(std::max(parts, p.parts.size()));
                return p;
            };

            Coloring c;
            if (strategy == "odd-partition") {
                auto p = partition();
                if (!p)
                    throw Error(ErrorKind::precondition_violated, "odd-partition needs --partition");
                c = majority3_from_odd_partition(d, padded(*p, 3));
            } else if (strategy == "chromatic6") {
                c = majority3_from_odd_partition(d, partition_chromatic6(d));
            } else if (strategy == "dichromatic3") {
                auto p = partition();
                if (!p)
                    p = partition_dichromatic(d, 3);
                if (!p)
                    throw Error(ErrorKind::precondition_violated, "no partition into 3 acyclic parts");
                c = majority3_from_odd_partition(d, padded(*p, 3));
            } else if (strategy == "degenerate") {
                c = majority3_via_pair_choice(d, lists(3));
            } else if (strategy == "bounded-degree") {
                c = majority3_choose(d, lists(3));
            } else if (strategy == "alpha-k") {
                if (k < 2)
                    throw Error(ErrorKind::param_out_of_range, "alpha-k needs --k >= 2");
                auto p = partition();
                if (!p)
                    p = partition_dichromatic(d, 2);
                if (!p)
                    throw Error(ErrorKind::precondition_violated, "no partition into 2 acyclic parts");
                c = alpha_majority_dichrom2(d, padded(*p, 2), k);
            } else if (strategy == "no-odd-cycles") {
                c = lists_path.empty() ? majority2_no_odd_cycles(d) : list_majority2(d, lists(2));
            } else {
                c = color_acyclic_alpha(d, k);
            }
            out << format_coloring(c);
            return int(ok);
        };
    });

    // fractional
    std::string mode;
    long long trials = 1000;
    std::optional<std::uint64_t> seed;
    SamplerParams params;
    std::optional<int> min_degree;
    int threads = 0;
    int kmax = 41;
    auto* frac = app.add_subcommand("fractional", "Fractional colorings, sampling and constants");
    frac->add_option("graph", graph_path, "Edge list (not needed for constants and binom)");
    frac->add_option("--mode", mode)
        ->required()
        ->check(CLI::IsMember({"lp", "sample-4c", "sample-highdeg", "estimate", "constants", "binom"}));
    frac->add_option("--trials", trials, "Samples or Monte-Carlo trials")->check(CLI::PositiveNumber);
    frac->add_option("--seed", seed);
    frac->add_option("--p1", params.p1);
    frac->add_option("--p2", params.p2);
    frac->add_option("--N", min_degree, "Minimum out-degree parameter (selects the high-degree sampler)");
    frac->add_option("--threads", threads, "Workers for estimate (0: hardware)");
    frac->add_option("--kmax", kmax, "Largest k for binom");
    frac->callback([&] {
        action = [&] {
            if (mode == "constants") {
                const auto b = case_lower_bounds(params);
                for (const auto& c : b.cases)
                    out << c.name << " " << fixed(c.value) << "\n";
                out << "min " << fixed(b.minimum) << " " << b.attained_by << "\n";
                out << "reciprocal " << fixed(1 / b.minimum) << "\n";
                out << "bound 3.9602 " << (1 / b.minimum < 3.9602 ? "holds" : "fails") << "\n";
                return int(ok);
            }
            if (mode == "binom") {
                const auto t = binomial_tail_check(params.p1, kmax);
                for (std::size_t i = 0; i < t.tail.size(); ++i)
                    out << i << " " << std::setprecision(12) << static_cast<double>(t.tail[i]) << "\n";
                out << "holds " << (t.holds ? "true" : "false") << "\n";
                return int(t.holds ? ok : invalid);
            }
            if (graph_path.empty())
                throw CLI::RequiredError("graph");
            const bool randomized = mode != "lp";
            if (randomized && strict && !seed)
                throw CLI::RequiredError("--seed (required by --strict)");
            const Digraph d = inputs.graph(graph_path);
            if (mode == "lp") {
                const auto opt = exact_fractional_weight(d);
                out << "# weight " << format_double(opt.primal_value) << "\n";
                if (opt.certified)
                    out << "# exact " << opt.exact_value << "\n";
                out << "# dual " << format_double(opt.dual_value) << "\n";
                out << format_fractional(opt.primal);
                return int(ok);
            }
            SamplerChoice sampler;
            sampler.params = params;
            if (mode == "sample-highdeg" || (mode == "estimate" && min_degree)) {
                sampler.kind = SamplerKind::high_degree;
                sampler.min_degree = min_degree ? *min_degree : d.min_out_degree();
            }
            if (mode == "estimate") {
                const auto est = estimate_nonpopular_inclusion(d, sampler, trials, seed.value_or(0), threads);
                for (Vertex v = 0; v < d.size(); ++v)
                    out << v << " " << fixed(est.frequency[v]) << " " << fixed(est.standard_error[v]) << "\n";
                return int(ok);
            }
            const auto res = fractional_from_samples(d, sampler, trials, seed.value_or(0));
            out << "# weight " << format_double(res.weight) << "\n";
            out << "# samples " << res.samples << " distinct " << res.family_size << "\n";
            out << format_fractional(res.coloring);
            return int(ok);
        };
    });

    // reduce hyp2col
    std::string hyper_path, layout_path;
    auto* reduce = app.add_subcommand("reduce", "Hardness reductions");
    reduce->require_subcommand(1);
    auto* hyp2col = reduce->add_subcommand("hyp2col", "3-uniform hypergraph 2-coloring to majority 2-coloring");
    hyp2col->add_option("hypergraph", hyper_path)->required();
    hyp2col->add_option("--layout", layout_path, "Write the gadget layout here (default: comment lines on stdout)");
    hyp2col->callback([&] {
        action = [&] {
            const auto h = inputs.read(hyper_path, [](std::istream& s) { return parse_hypergraph(s); });
            const auto r = reduce_hypergraph(h);
            out << format_digraph(r.digraph);
            const auto layout = format_layout(r.layout);
            if (layout_path.empty()) {
                std::istringstream lines(layout);
                for (std::string line; std::getline(lines, line);)
                    out << "# layout " << line << "\n";
            } else {
                std::ofstream(layout_path) << layout;
            }
            return int(ok);
        };
    });

    // gadget d9
    bool check = false;
    auto* gadget = app.add_subcommand("gadget", "Fixed gadgets");
    gadget->require_subcommand(1);
    auto* d9 = gadget->add_subcommand("d9", "The 9-vertex gadget");
    d9->add_flag("--check", check, "Decide every sink precoloring instead of printing the digraph");
    d9->callback([&] {
        action = [&] {
            if (!check) {
                out << format_digraph(build_d9());
                return int(ok);
            }
            const auto report = d9_report();
            for (int mask = 0; mask < 8; ++mask)
                out << (mask & 1 ? 2 : 1) << " " << (mask & 2 ? 2 : 1) << " " << (mask & 4 ? 2 : 1) << " "
                    << (report.extendable[mask] ? "extendable" : "not-extendable") << "\n";
            out << "observation " << (report.matches ? "holds" : "fails") << "\n";
            return int(report.matches ? ok : invalid);
        };
    });

    // gen
    int gn = 0, gk = 0;
    double gp = 0;
    std::uint64_t gseed = 0;
    auto* gen = app.add_subcommand("gen", "Instance generators");
    gen->require_subcommand(1);
    auto* circ = gen->add_subcommand("circulant", "Arc (i,j) iff (j-i) mod n in 1..k-1");
    circ->add_option("n", gn)->required();
    circ->add_option("k", gk)->required();
    circ->callback([&] { action = [&] { out << format_digraph(gen_circulant(gn, gk)); return int(ok); }; });
    auto* tour = gen->add_subcommand("tournament", "Random tournament");
    tour->add_option("n", gn)->required();
    tour->add_option("seed", gseed)->required();
    tour->callback([&] { action = [&] { out << format_digraph(gen_tournament(gn, gseed)); return int(ok); }; });
    auto* reg = gen->add_subcommand("regular", "Random r-in/r-out regular digraph");
    reg->add_option("n", gn)->required();
    reg->add_option("r", gk)->required();
    reg->add_option("seed", gseed)->required();
    reg->callback([&] { action = [&] { out << format_digraph(gen_regular(gn, gk, gseed)); return int(ok); }; });
    auto* gnp = gen->add_subcommand("gnp", "Each ordered pair with probability p");
    gnp->add_option("n", gn)->required();
    gnp->add_option("p", gp)->required();
    gnp->add_option("seed", gseed)->required();
    gnp->callback([&] { action = [&] { out << format_digraph(gen_gnp(gn, gp, gseed)); return int(ok); }; });

    // stable-sets
    auto* stable = app.add_subcommand("stable-sets", "List every stable set");
    stable->add_option("graph", graph_path)->required();
    stable->callback([&] {
        action = [&] {
            const auto sets = enumerate_stable_sets(inputs.graph(graph_path));
            out << "# " << sets.size() << " stable sets\n";
            for (const auto& s : sets)
                out << (s.empty() ? "-" : join(s)) << "\n";
            return int(ok);
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        return action();
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? int(ok) : int(usage);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        if (!e.witness().empty())
            err << "witness: " << join(e.witness()) << "\n";
        return exit_code(e.kind());
    }
}

} // namespace majority
