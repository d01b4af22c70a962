#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "debruijn/binary2.hpp"
#include "debruijn/construct.hpp"
#include "debruijn/core.hpp"
#include "debruijn/homo.hpp"
#include "debruijn/oracle.hpp"

using debruijn::Alphabet;
using debruijn::Cycle;
using debruijn::Symbol;
using debruijn::Word;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitBadInput = 2;

std::string read_input(const std::string& arg) {
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(arg);
    if (f) {
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
    return arg;  // literal sequence text
}

std::string join_decimal(const std::vector<Symbol>& v) {
    std::string out;
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (t) out.push_back(',');
        out += std::to_string(v[t]);
    }
    return out;
}

json report_json(const debruijn::oracle::VerificationReport& rep) {
    json j{{"ok", rep.ok},
           {"order", rep.order},
           {"alphabet", rep.alphabet},
           {"missing_windows", rep.missing_windows},
           {"duplicate_windows", rep.duplicate_windows}};
    if (rep.first_violation) {
        j["first_violation"] = {{"position", rep.first_violation->first},
                                {"window", debruijn::render(rep.first_violation->second,
                                                            Alphabet(rep.alphabet))}};
    }
    return j;
}

void print_report(const debruijn::oracle::VerificationReport& rep, const Alphabet& a) {
    std::cout << "ok=" << (rep.ok ? "true" : "false") << "\n"
              << "order=" << rep.order << "\n"
              << "alphabet=" << rep.alphabet << "\n"
              << "missing_windows=" << rep.missing_windows << "\n"
              << "duplicate_windows=" << rep.duplicate_windows << "\n";
    if (rep.first_violation)
        std::cout << "first_violation=" << rep.first_violation->first << ":"
                  << debruijn::render(rep.first_violation->second, a) << "\n";
}

struct GenerateArgs {
    unsigned q = 0;
    unsigned n = 0;
    std::string b, l, i, base_file;
};

debruijn::ConstructionPlan make_plan(const GenerateArgs& g) {
    Alphabet a(g.q);
    debruijn::ConstructionPlan plan{a, g.n, {}, {}, {}, std::nullopt};
    if (g.n >= 2) {
        plan.betas = debruijn::parse_word(g.b, a);
        plan.lambdas = debruijn::parse_word(g.l, a);
        plan.starts = debruijn::parse_word(g.i, a);
    }
    if (!g.base_file.empty()) {
        std::string text = read_input(g.base_file);
        plan.base = Cycle(debruijn::parse_word(text, a));
    }
    return plan;
}

int cmd_generate(const GenerateArgs& g, bool as_json) {
    debruijn::ConstructionPlan plan = make_plan(g);
    Cycle out = debruijn::algorithm_AA(plan);
    std::string seq = debruijn::render(out, plan.alphabet);
    if (as_json) {
        json j{{"params",
                {{"q", g.q}, {"n", g.n}, {"B", join_decimal(plan.betas)},
                 {"L", join_decimal(plan.lambdas)}, {"I", join_decimal(plan.starts)}}},
               {"sequence", seq}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << seq << "\n";
    }
    return kExitOk;
}

int cmd_enumerate(unsigned q, unsigned n, std::optional<std::uint64_t> limit, bool verify,
                  bool as_json) {
    Alphabet a(q);
    bool all_ok = true;
    debruijn::enumerate_family(a, n, limit,
                               [&](const debruijn::ConstructionPlan& plan, const Cycle& c) {
        std::string seq = debruijn::render(c, a);
        std::optional<debruijn::oracle::VerificationReport> rep;
        if (verify) {
            rep = debruijn::oracle::is_de_bruijn(c, a, n);
            if (!rep->ok) all_ok = false;
        }
        if (as_json) {
            json j{{"params",
                    {{"q", q}, {"n", n}, {"B", join_decimal(plan.betas)},
                     {"L", join_decimal(plan.lambdas)}, {"I", join_decimal(plan.starts)}}},
                   {"sequence", seq}};
            if (rep) j["report"] = report_json(*rep);
            std::cout << j.dump() << "\n";
        } else {
            std::cout << join_decimal(plan.betas) << ";" << join_decimal(plan.lambdas) << ";"
                      << join_decimal(plan.starts) << "\t" << seq;
            if (rep) std::cout << "\t" << (rep->ok ? "OK" : "FAIL");
            std::cout << "\n";
        }
        return true;
    });
    return all_ok ? kExitOk : kExitFailed;
}

int cmd_verify(unsigned q, unsigned n, const std::string& input, bool as_json) {
    Alphabet a(q);
    Cycle c(debruijn::parse_word(read_input(input), a));
    auto rep = debruijn::oracle::is_de_bruijn(c, a, n);
    if (as_json)
        std::cout << report_json(rep).dump() << "\n";
    else
        print_report(rep, a);
    return rep.ok ? kExitOk : kExitFailed;
}

int cmd_binary2(const std::string& base_arg, const std::string& emit, bool as_json) {
    Alphabet a(2);
    Cycle base(debruijn::parse_word(read_input(base_arg), a));

    debruijn::binary2::FixedSeedReport rep;
    try {
        rep = debruijn::binary2::fixed_seed(base);
    } catch (const debruijn::DomainError& e) {
        std::cerr << "debruijn: " << e.what() << "\n";
        return kExitFailed;
    }

    if (emit == "report") {
        if (as_json) {
            json j{{"order", rep.order},
                   {"n_mod2", rep.n_mod2},
                   {"a", {rep.a[0], rep.a[1], rep.a[2]}},
                   {"seed", std::to_string(rep.seed[0]) + std::to_string(rep.seed[1])},
                   {"cycle_lengths", {rep.cycle_lengths[0], rep.cycle_lengths[1]}}};
            std::cout << j.dump() << "\n";
        } else {
            std::cout << "order=" << rep.order << "\n"
                      << "n_mod2=" << rep.n_mod2 << "\n"
                      << "a=" << rep.a[0] << rep.a[1] << rep.a[2] << "\n"
                      << "seed=" << rep.seed[0] << rep.seed[1] << "\n"
                      << "short_length=" << rep.cycle_lengths[0] << "\n"
                      << "long_length=" << rep.cycle_lengths[1] << "\n";
        }
        return kExitOk;
    }

    auto [short_c, long_c] = debruijn::binary2::decompose_d2(base);
    Cycle out;
    if (emit == "short")
        out = short_c;
    else if (emit == "long")
        out = long_c;
    else {  // joined
        unsigned n_out = rep.order + 2;
        auto pair = debruijn::binary2::find_cross_join(short_c, long_c, n_out);
        out = debruijn::binary2::join(short_c, long_c, pair);
    }
    std::string seq = debruijn::render(out, a);
    if (as_json)
        std::cout << json{{"emit", emit}, {"sequence", seq}}.dump() << "\n";
    else
        std::cout << seq << "\n";
    return kExitOk;
}

struct KernelArgs {
    std::string action;
    std::string linear_spec;
    std::string file;
    unsigned q = 0;
    unsigned k = 0;
    std::string base;
    std::string seed;
    std::optional<unsigned> order;
};

std::optional<debruijn::Kernel> load_kernel(const KernelArgs& ka) {
    if (!ka.linear_spec.empty()) return debruijn::parse_kernel_spec(ka.linear_spec);
    if (!ka.file.empty()) {
        if (ka.file == "-") return debruijn::read_kernel(std::cin);
        std::ifstream f(ka.file);
        if (!f) throw debruijn::DomainError("cannot open kernel file " + ka.file);
        return debruijn::read_kernel(f);
    }
    return std::nullopt;
}

unsigned default_base_order(const Cycle& c, const Alphabet& a) {
    for (unsigned n = 1; n <= c.length(); ++n)
        if (debruijn::oracle::is_vertex_disjoint(c, a, n)) return n;
    throw debruijn::DomainError("NotVertexDisjoint: the base repeats every window size");
}

int cmd_kernel(const KernelArgs& ka, bool as_json) {
    std::optional<debruijn::Kernel> d = load_kernel(ka);

    if (ka.action == "count") {
        Alphabet a(d ? d->q() : ka.q);
        unsigned k = d ? d->k() : ka.k;
        unsigned long long count = debruijn::count_property_D(a, k);
        if (as_json)
            std::cout << json{{"q", a.q()}, {"k", k}, {"count", count}}.dump() << "\n";
        else
            std::cout << count << "\n";
        return kExitOk;
    }

    if (!d) throw debruijn::DomainError("the " + ka.action + " action needs --linear or --file");

    if (ka.action == "check") {
        bool ok = d->is_property_D();
        if (as_json)
            std::cout << json{{"q", d->q()}, {"k", d->k()}, {"property_D", ok}}.dump() << "\n";
        else
            std::cout << "property_D=" << (ok ? "true" : "false") << "\n";
        return ok ? kExitOk : kExitFailed;
    }

    if (ka.action == "lift") {
        if (ka.base.empty()) throw debruijn::DomainError("lift needs --base");
        const Alphabet& a = d->alphabet();
        Cycle base(debruijn::parse_word(read_input(ka.base), a));
        unsigned order = ka.order ? *ka.order : default_base_order(base, a);
        auto dec = debruijn::lift_cycle_decomposition(*d, base, order);
        std::optional<Word> lifted;
        if (!ka.seed.empty()) {
            Word seed = debruijn::parse_word(ka.seed, a);
            lifted = d->lift_sequence(base.symbols(), seed);
        }
        if (as_json) {
            json cycles = json::array();
            for (const Cycle& c : dec.cycles)
                cycles.push_back({{"length", c.length()}, {"sequence", debruijn::render(c, a)}});
            json j{{"q", d->q()}, {"k", d->k()}, {"base_order", order}, {"cycles", cycles}};
            if (lifted) j["lift"] = debruijn::render(*lifted, a);
            std::cout << j.dump() << "\n";
        } else {
            if (lifted) std::cout << "lift=" << debruijn::render(*lifted, a) << "\n";
            for (const Cycle& c : dec.cycles)
                std::cout << "cycle length=" << c.length() << " " << debruijn::render(c, a)
                          << "\n";
        }
        return kExitOk;
    }

    throw debruijn::DomainError("unknown kernel action '" + ka.action + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"recursive De Bruijn sequence toolkit"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit one JSON object per record");

    GenerateArgs gen;
    auto* sg = app.add_subcommand("generate", "construct one De Bruijn sequence");
    sg->add_option("--q", gen.q, "alphabet size")->required();
    sg->add_option("--n", gen.n, "target order")->required();
    sg->add_option("--B", gen.b, "beta_2..beta_n, comma separated");
    sg->add_option("--L", gen.l, "lambda_2..lambda_n, comma separated");
    sg->add_option("--I", gen.i, "i_2..i_n, comma separated");
    sg->add_option("--base-file", gen.base_file, "order-2 base cycle (file, '-' or literal)");

    unsigned en_q = 0, en_n = 0;
    std::uint64_t en_limit = 0;
    bool en_verify = false;
    auto* se = app.add_subcommand("enumerate", "walk the full construction family");
    se->add_option("--q", en_q, "alphabet size (odd)")->required();
    se->add_option("--n", en_n, "target order")->required();
    auto* limit_opt = se->add_option("--limit", en_limit, "stop after this many plans");
    se->add_flag("--verify", en_verify, "oracle-check every output");

    unsigned v_q = 0, v_n = 0;
    std::string v_input;
    auto* sv = app.add_subcommand("verify", "brute-force De Bruijn check");
    sv->add_option("--q", v_q, "alphabet size")->required();
    sv->add_option("--n", v_n, "order")->required();
    sv->add_option("sequence", v_input, "sequence, file, or '-' for stdin")->required();

    std::string b2_base, b2_emit = "report";
    auto* sb = app.add_subcommand("binary2", "binary span-3 decomposition and join");
    sb->add_option("--base", b2_base, "binary De Bruijn base (sequence, file or '-')")->required();
    sb->add_option("--emit", b2_emit, "short|long|joined|report")
        ->check(CLI::IsMember({"short", "long", "joined", "report"}));

    KernelArgs ka;
    auto* sk = app.add_subcommand("kernel", "kernel tooling: check, count, lift");
    sk->add_option("action", ka.action, "check|count|lift")
        ->required()
        ->check(CLI::IsMember({"check", "count", "lift"}));
    sk->add_option("--linear", ka.linear_spec, "inline spec, e.g. \"q=3 beta=1\" or \"q=2 d=x1+x3\"");
    sk->add_option("--file", ka.file, "kernel file ('-' for stdin)");
    sk->add_option("--q", ka.q, "alphabet size (count without a kernel)");
    sk->add_option("--k", ka.k, "kernel span minus one (count without a kernel)");
    sk->add_option("--base", ka.base, "base cycle for lift");
    sk->add_option("--seed", ka.seed, "length-k seed for lift");
    sk->add_option("--order", ka.order, "base cycle window size (default: smallest disjoint)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sg) return cmd_generate(gen, as_json);
        if (*se)
            return cmd_enumerate(en_q, en_n,
                                 limit_opt->count() ? std::optional<std::uint64_t>(en_limit)
                                                    : std::nullopt,
                                 en_verify, as_json);
        if (*sv) return cmd_verify(v_q, v_n, v_input, as_json);
        if (*sb) return cmd_binary2(b2_base, b2_emit, as_json);
        if (*sk) return cmd_kernel(ka, as_json);
    } catch (const std::exception& e) {
        std::cerr << "debruijn: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
