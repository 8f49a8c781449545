#include <cstdlib>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "brauer/abacus.hpp"
#include "brauer/blocks.hpp"
#include "brauer/diagrams.hpp"
#include "brauer/weights.hpp"
#include "brauer/weyl.hpp"

using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
    int n = 0;
    int delta = 0;
    int p = 0;
    int b = -1;
    int plane_i = 1;
    int plane_j = 2;
    int max_n = 60;
    bool json = false;
    bool strict = false;
    std::string labels = "geometric";
    std::string pairs_file;
    std::string out_file;
    std::vector<std::string> args;
    bool n_set = false;
    bool delta_set = false;
};

ordered_json context_json(const brauer::Context& ctx) {
    ordered_json j;
    j["n"] = ctx.rank();
    j["delta"] = ctx.delta();
    j["p"] = ctx.characteristic();
    return j;
}

ordered_json witness_json(const std::optional<brauer::OrbitWitness>& w) {
    if (!w) return nullptr;
    ordered_json j;
    j["pi"] = w->pi;
    j["sigma"] = w->sigma;
    return j;
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

brauer::Partition input_partition(const std::string& text, const Options& opt) {
    brauer::Partition p = brauer::parse_partition(text);
    return opt.labels == "transpose" ? brauer::conjugate(p) : p;
}

brauer::Partition output_partition(const brauer::Partition& p, const Options& opt) {
    return opt.labels == "transpose" ? brauer::conjugate(p) : p;
}

int default_rank(const Options& opt, std::initializer_list<int> least) {
    if (opt.n_set) return opt.n;
    int n = 1;
    for (int v : least) n = std::max(n, v);
    return n;
}

std::vector<std::pair<std::string, std::string>> read_pairs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open pairs file " + path);
    std::vector<std::pair<std::string, std::string>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto semi = line.find(';');
        if (semi == std::string::npos)
            throw std::invalid_argument("pairs file line needs 'lambda;mu': " + line);
        out.emplace_back(line.substr(0, semi), line.substr(semi + 1));
    }
    return out;
}

// decide() answers one query and reports the context it actually used
using PairDecider = std::function<bool(const std::string&, const std::string&,
                                       std::optional<brauer::OrbitWitness>*, brauer::Context*)>;

int run_pair_query(const std::string& name, const Options& opt, const PairDecider& decide) {
    std::vector<std::pair<std::string, std::string>> queries;
    if (!opt.pairs_file.empty()) {
        queries = read_pairs(opt.pairs_file);
    } else {
        if (opt.args.size() != 2)
            throw std::invalid_argument(name + ": expected two weight arguments");
        queries.emplace_back(opt.args[0], opt.args[1]);
    }

    bool all_true = true;
    brauer::Context used(default_rank(opt, {1}), opt.delta, opt.p);
    if (queries.size() == 1) {
        std::optional<brauer::OrbitWitness> witness;
        const bool value = decide(queries[0].first, queries[0].second, &witness, &used);
        all_true = value;
        if (opt.json) {
            ordered_json j;
            j["query"] = name;
            j["context"] = context_json(used);
            j["result"] = value;
            j["witness"] = witness_json(witness);
            emit(j);
        } else {
            std::cout << (value ? "true" : "false") << "\n";
            if (witness) {
                std::cout << "pi:";
                for (int v : witness->pi) std::cout << ' ' << v;
                std::cout << "\nsigma:";
                for (int v : witness->sigma) std::cout << ' ' << v;
                std::cout << "\n";
            }
        }
    } else {
        ordered_json results = ordered_json::array();
        for (const auto& [ls, ms] : queries) {
            std::optional<brauer::OrbitWitness> witness;
            const bool value = decide(ls, ms, &witness, &used);
            all_true = all_true && value;
            if (opt.json) {
                ordered_json row;
                row["lambda"] = ls;
                row["mu"] = ms;
                row["value"] = value;
                results.push_back(row);
            } else {
                std::cout << ls << ';' << ms << "  " << (value ? "true" : "false") << "\n";
            }
        }
        if (opt.json) {
            ordered_json j;
            j["query"] = name;
            j["context"] = context_json(used);
            j["result"] = results;
            j["witness"] = nullptr;
            emit(j);
        }
    }
    return opt.strict && !all_true ? 1 : 0;
}

int cmd_orbit(const Options& opt) {
    return run_pair_query("orbit", opt, [&](const std::string& ls, const std::string& ms,
                                            std::optional<brauer::OrbitWitness>* witness,
                                            brauer::Context* used) {
        brauer::Weight lambda = brauer::parse_weight(ls);
        brauer::Weight mu = brauer::parse_weight(ms);
        if (opt.labels == "transpose") {
            lambda = brauer::conjugate(brauer::Partition(lambda.entries())).to_weight();
            mu = brauer::conjugate(brauer::Partition(mu.entries())).to_weight();
        }
        const brauer::Context ctx(default_rank(opt, {lambda.length(), mu.length()}), opt.delta,
                                  opt.p);
        *used = ctx;
        auto w = ctx.char_zero() ? brauer::orbit_member_finite(lambda, mu, ctx)
                                 : brauer::orbit_member_affine(lambda, mu, ctx);
        *witness = w;
        return w.has_value();
    });
}

int cmd_balanced(const Options& opt) {
    return run_pair_query("balanced", opt, [&](const std::string& ls, const std::string& ms,
                                               std::optional<brauer::OrbitWitness>*,
                                               brauer::Context* used) {
        const brauer::Partition lambda = input_partition(ls, opt);
        const brauer::Partition mu = input_partition(ms, opt);
        const brauer::Context ctx(default_rank(opt, {lambda.rows(), mu.rows()}), opt.delta, 0);
        *used = ctx;
        return brauer::is_balanced(lambda, mu, ctx);
    });
}

int cmd_block(const Options& opt) {
    if (!opt.n_set) throw std::invalid_argument("block: --n is required");
    return run_pair_query("block", opt, [&](const std::string& ls, const std::string& ms,
                                            std::optional<brauer::OrbitWitness>*,
                                            brauer::Context* used) {
        const brauer::Partition lambda = input_partition(ls, opt);
        const brauer::Partition mu = input_partition(ms, opt);
        const brauer::Context ctx(opt.n, opt.delta, opt.p);
        *used = ctx;
        if (ctx.char_zero()) return brauer::same_block_char0(lambda, mu, ctx);
        // characteristic p: same affine orbit, an upper bound for same block
        return brauer::orbit_equiv_abacus(lambda, mu, ctx);
    });
}

int cmd_blocks(const Options& opt) {
    if (!opt.n_set) throw std::invalid_argument("blocks: --n is required");
    const brauer::Context ctx(opt.n, opt.delta, opt.p);
    const brauer::BlockDecomposition d = ctx.char_zero()
                                             ? brauer::block_decomposition_char0(ctx)
                                             : brauer::orbit_decomposition_affine(ctx);
    if (opt.json) {
        ordered_json classes = ordered_json::array();
        for (const auto& cls : d.classes) {
            ordered_json row = ordered_json::array();
            for (const auto& label : cls)
                row.push_back(brauer::format_partition(output_partition(label, opt)));
            classes.push_back(row);
        }
        ordered_json result;
        result["kind"] = d.kind == brauer::DecompositionKind::exact_blocks ? "exact-blocks"
                                                                           : "orbit-upper-bound";
        result["classes"] = classes;
        ordered_json j;
        j["query"] = "blocks";
        j["context"] = context_json(ctx);
        j["result"] = result;
        j["witness"] = nullptr;
        emit(j);
    } else {
        if (opt.labels == "transpose") {
            brauer::BlockDecomposition t = d;
            for (auto& cls : t.classes)
                for (auto& label : cls) label = brauer::conjugate(label);
            std::cout << brauer::format_decomposition(t);
        } else {
            std::cout << brauer::format_decomposition(d);
        }
    }
    return 0;
}

int cmd_chain(const Options& opt) {
    if (opt.args.size() != 2) throw std::invalid_argument("chain: expected lambda and mu");
    const brauer::Partition lambda = input_partition(opt.args[0], opt);
    const brauer::Partition mu = input_partition(opt.args[1], opt);
    const brauer::Context ctx(default_rank(opt, {lambda.rows(), mu.rows()}), opt.delta, 0);
    const brauer::LinkingChain chain = brauer::linking_chain(lambda, mu, ctx);
    if (opt.json) {
        ordered_json inters = ordered_json::array();
        for (const auto& w : chain.intermediates) inters.push_back(brauer::format_weight(w));
        ordered_json result;
        result["word"] = brauer::format_word(chain.word);
        result["intermediates"] = inters;
        ordered_json j;
        j["query"] = "chain";
        j["context"] = context_json(ctx);
        j["result"] = result;
        j["witness"] = nullptr;
        emit(j);
    } else {
        std::cout << brauer::format_word(chain.word) << "\n";
        for (const auto& w : chain.intermediates)
            std::cout << "-> " << brauer::format_weight(w) << "\n";
    }
    return 0;
}

int cmd_abacus(const Options& opt) {
    if (opt.args.size() != 1) throw std::invalid_argument("abacus: expected one partition");
    const brauer::Partition lambda = input_partition(opt.args[0], opt);
    if (opt.p < 3) throw std::invalid_argument("abacus: --p must be an odd prime");
    int b = opt.b;
    const int n = opt.n_set ? opt.n : std::max(lambda.rows(), b > 0 ? b : lambda.rows());
    const brauer::Context ctx(std::max(n, 1), opt.delta, opt.p);
    if (b < 0) {
        b = std::max(ctx.rank(), lambda.rows());
        if (opt.delta_set)
            while ((2 * b - (2 - ctx.delta())) % opt.p != 0) ++b;
    } else if (opt.delta_set && (2 * b - (2 - ctx.delta())) % opt.p != 0) {
        throw std::invalid_argument("abacus: --b violates 2b = 2 - delta mod p");
    }
    const brauer::Abacus a = brauer::encode(lambda, b, ctx);
    const auto counts = brauer::runner_counts(a);
    if (opt.json) {
        ordered_json result;
        result["compact"] = brauer::compact(a);
        result["render"] = brauer::render(a);
        result["runners"] = counts;
        ordered_json pairs = ordered_json::array();
        for (int l = 1; l <= (opt.p - 1) / 2; ++l) pairs.push_back(counts[l] + counts[opt.p - l]);
        result["pair_totals"] = pairs;
        ordered_json j;
        j["query"] = "abacus";
        j["context"] = context_json(ctx);
        j["result"] = result;
        j["witness"] = nullptr;
        emit(j);
    } else {
        std::cout << brauer::render(a) << "\n";
        std::cout << "runners:";
        for (int c : counts) std::cout << ' ' << c;
        std::cout << "\npairs:";
        for (int l = 1; l <= (opt.p - 1) / 2; ++l)
            std::cout << " {" << l << ',' << opt.p - l << "}=" << counts[l] + counts[opt.p - l];
        std::cout << "\n";
    }
    return 0;
}

int cmd_pcore(const Options& opt) {
    if (opt.args.size() != 1) throw std::invalid_argument("pcore: expected one partition");
    if (opt.p < 2) throw std::invalid_argument("pcore: --p must be at least 2");
    const brauer::Partition lambda = input_partition(opt.args[0], opt);
    const brauer::Partition core = brauer::p_core(lambda, opt.p);
    const bool is_core = core == lambda;
    if (opt.json) {
        ordered_json result;
        result["core"] = brauer::format_partition(output_partition(core, opt));
        result["is_core"] = is_core;
        ordered_json j;
        j["query"] = "pcore";
        j["context"] = context_json(brauer::Context(std::max(1, lambda.rows()), opt.delta,
                                                    brauer::is_odd_prime(opt.p) ? opt.p : 0));
        j["result"] = result;
        j["witness"] = nullptr;
        emit(j);
    } else {
        std::cout << brauer::format_partition(output_partition(core, opt)) << "\n";
    }
    return opt.strict && !is_core ? 1 : 0;
}

int cmd_obstruction(const Options& opt) {
    return run_pair_query("obstruction", opt, [&](const std::string& ls, const std::string& ms,
                                                  std::optional<brauer::OrbitWitness>*,
                                                  brauer::Context* used) {
        const brauer::Partition lambda = input_partition(ls, opt);
        const brauer::Partition mu = input_partition(ms, opt);
        const brauer::Context ctx(default_rank(opt, {lambda.rows(), mu.rows()}), opt.delta, opt.p);
        *used = ctx;
        return brauer::content_obstruction(lambda, mu, ctx);
    });
}

int cmd_certify(const Options& opt) {
    if (opt.p < 3) throw std::invalid_argument("certify: --p must be an odd prime");
    const brauer::Context ctx(1, opt.delta, opt.p);
    const auto certs = brauer::search_split_certificates(ctx, opt.max_n);
    if (opt.json) {
        ordered_json rows = ordered_json::array();
        for (const auto& c : certs) {
            ordered_json row;
            row["n"] = c.lambda.degree();
            row["lambda"] = brauer::format_partition(output_partition(c.lambda, opt));
            row["mu"] = brauer::format_partition(output_partition(c.mu, opt));
            row["removed_row"] = c.removed_row;
            rows.push_back(row);
        }
        ordered_json j;
        j["query"] = "certify";
        j["context"] = context_json(ctx);
        j["result"] = rows;
        j["witness"] = nullptr;
        emit(j);
    } else {
        for (const auto& c : certs)
            std::cout << "n=" << c.lambda.degree() << "  lambda="
                      << brauer::format_partition(output_partition(c.lambda, opt))
                      << "  mu=" << brauer::format_partition(output_partition(c.mu, opt))
                      << "  row=" << c.removed_row << "\n";
        std::cout << "# " << certs.size() << " certificate(s) up to n=" << opt.max_n << "\n";
    }
    return opt.strict && certs.empty() ? 1 : 0;
}

template <class S>
ordered_json element_rows(const brauer::AlgebraElement<S>& x) {
    ordered_json rows = ordered_json::array();
    for (const auto& [d, c] : x.terms()) {
        ordered_json row;
        row["coeff"] = c.text();
        row["diagram"] = d.text();
        rows.push_back(row);
    }
    return rows;
}

template <class S>
void print_element(const brauer::AlgebraElement<S>& x) {
    for (const auto& [d, c] : x.terms()) std::cout << c.text() << "  " << d.text() << "\n";
    if (x.is_zero()) std::cout << "0\n";
}

int cmd_diagram(const Options& opt) {
    if (opt.args.empty()) throw std::invalid_argument("diagram: expected en|tn|prod");
    if (!opt.n_set) throw std::invalid_argument("diagram: --n is required");
    const std::string op = opt.args[0];
    const brauer::Context ctx(opt.n, opt.delta, opt.p);
    ordered_json result;
    const bool char0 = ctx.char_zero();

    auto run = [&](auto make_one, auto make_delta) -> ordered_json {
        using S = decltype(make_one());
        brauer::AlgebraElement<S> x;
        if (op == "en") {
            x = brauer::e_n<S>(opt.n, make_delta());
        } else if (op == "tn") {
            x = brauer::build_Tn<S>(opt.n, make_one());
        } else if (op == "prod") {
            if (opt.args.size() != 3) throw std::invalid_argument("diagram prod: expected D1 D2");
            const auto d1 = brauer::BrauerDiagram::parse(opt.n, opt.args[1]);
            const auto d2 = brauer::BrauerDiagram::parse(opt.n, opt.args[2]);
            x = brauer::multiply(brauer::diagram_unit(d1, make_one()),
                                 brauer::diagram_unit(d2, make_one()), make_delta());
        } else {
            throw std::invalid_argument("diagram: unknown operation " + op);
        }
        if (!opt.json) print_element(x);
        return element_rows(x);
    };

    if (char0)
        result = run([] { return brauer::Rational(1); },
                     [&] { return brauer::Rational(ctx.delta()); });
    else
        result = run([&] { return brauer::ModInt(1, ctx.characteristic()); },
                     [&] { return brauer::ModInt(ctx.delta(), ctx.characteristic()); });

    if (opt.json) {
        ordered_json j;
        j["query"] = "diagram";
        j["context"] = context_json(ctx);
        j["result"] = result;
        j["witness"] = nullptr;
        emit(j);
    }
    return 0;
}

int cmd_project(const Options& opt) {
    const int i = opt.plane_i, j = opt.plane_j;
    if (i < 1 || j <= i) throw std::invalid_argument("project: need 1 <= i < j");
    const int R = 12;
    const double scale = 24.0;
    auto X = [&](double u) { return (u + R + 1) * scale; };
    auto Y = [&](double v) { return (R + 1 - v) * scale; };
    std::ostringstream svg;
    const double wpx = (2 * R + 2) * scale;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << wpx << "\" height=\"" << wpx
        << "\" viewBox=\"0 0 " << wpx << ' ' << wpx << "\">\n";
    // dominant region lambda_i >= lambda_j >= 0
    svg << "<polygon points=\"" << X(0) << ',' << Y(0) << ' ' << X(R) << ',' << Y(0) << ' '
        << X(R) << ',' << Y(R) << "\" fill=\"#dddddd\"/>\n";
    // lattice
    for (int u = -R; u <= R; ++u)
        for (int v = -R; v <= R; ++v)
            svg << "<circle cx=\"" << X(u) << "\" cy=\"" << Y(v)
                << "\" r=\"1\" fill=\"#999999\"/>\n";
    auto line = [&](double x1, double y1, double x2, double y2, const char* dash,
                    const char* color) {
        svg << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
            << "\" stroke=\"" << color << "\" stroke-dasharray=\"" << dash << "\"/>\n";
    };
    const int shifts = opt.p >= 3 ? 2 : 0;
    const int p = opt.p >= 3 ? opt.p : 0;
    for (int r = -shifts; r <= shifts; ++r) {
        if (r != 0 && p == 0) continue;
        // (ij): v = u + (j - i) + rp     (barij): u + v = delta + i + j - 2 + rp
        const double d = j - i + r * p;
        line(X(-R), Y(-R + d), X(R), Y(R + d), "6,3", "#cc3333");
        const double s = opt.delta + i + j - 2 + r * p;
        line(X(s + R), Y(-R), X(s - R), Y(R), "2,3", "#3333cc");
    }
    for (const auto& arg : opt.args) {
        const brauer::Weight w = brauer::parse_weight(arg);
        svg << "<circle cx=\"" << X(w.at(i)) << "\" cy=\"" << Y(w.at(j))
            << "\" r=\"4\" fill=\"#111111\"/>\n";
    }
    svg << "</svg>\n";
    if (opt.out_file.empty()) {
        std::cout << svg.str();
    } else {
        std::ofstream out(opt.out_file);
        if (!out) throw std::invalid_argument("project: cannot open " + opt.out_file);
        out << svg.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Blocks of the Brauer algebra via type-D Weyl group geometry"};
    app.require_subcommand(1);

    Options opt;
    const std::vector<std::pair<std::string, std::string>> names = {
        {"orbit", "dot-action orbit membership with a witness"},
        {"balanced", "balanced-pair test (characteristic 0 blocks)"},
        {"block", "same-block query for two labels"},
        {"blocks", "decompose the whole label set"},
        {"chain", "constructive reflection word between balanced partitions"},
        {"abacus", "bead encoding, render and runner counts"},
        {"pcore", "p-core by bead sliding"},
        {"obstruction", "content scalar obstruction"},
        {"certify", "scan for same-orbit different-block certificates"},
        {"diagram", "diagram algebra products, e_n and T_n"},
        {"project", "SVG projection of an i-j coordinate plane"}};
    std::map<std::string, CLI::App*> subs;
    for (const auto& [name, blurb] : names) {
        CLI::App* s = app.add_subcommand(name, blurb);
        s->add_option("--n", opt.n, "rank of the weight lattice");
        s->add_option("--delta", opt.delta, "algebra parameter (integer; non-integer values "
                                            "leave the algebra semisimple and are not handled)");
        s->add_option("--p", opt.p, "characteristic, 0 or an odd prime");
        s->add_option("--b", opt.b, "bead count override");
        s->add_flag("--json", opt.json, "machine-readable output");
        s->add_flag("--strict", opt.strict, "exit 1 when a query answers false");
        s->add_option("--labels", opt.labels, "geometric|transpose input convention")
            ->check(CLI::IsMember({"geometric", "transpose"}));
        s->add_option("--pairs", opt.pairs_file, "batch file, one lambda;mu per line");
        s->add_option("--out", opt.out_file, "output file (project)");
        s->add_option("--i", opt.plane_i, "projection row i");
        s->add_option("--j", opt.plane_j, "projection row j");
        s->add_option("--max-n", opt.max_n, "certificate scan bound");
        s->add_option("args", opt.args, "positional weight/partition/diagram arguments");
        subs[name] = s;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        for (const auto& [name, sub] : subs) {
            if (!sub->parsed()) continue;
            opt.n_set = sub->count("--n") > 0;
            opt.delta_set = sub->count("--delta") > 0;
            if (opt.p != 0 && !brauer::is_odd_prime(opt.p) && name != "pcore")
                throw std::invalid_argument("--p must be 0 or an odd prime");
            if (name == "orbit") return cmd_orbit(opt);
            if (name == "balanced") return cmd_balanced(opt);
            if (name == "block") return cmd_block(opt);
            if (name == "blocks") return cmd_blocks(opt);
            if (name == "chain") return cmd_chain(opt);
            if (name == "abacus") return cmd_abacus(opt);
            if (name == "pcore") return cmd_pcore(opt);
            if (name == "obstruction") return cmd_obstruction(opt);
            if (name == "certify") return cmd_certify(opt);
            if (name == "diagram") return cmd_diagram(opt);
            if (name == "project") return cmd_project(opt);
        }
        std::cerr << "no subcommand\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
