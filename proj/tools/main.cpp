#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "charnet/codes.hpp"
#include "charnet/json_io.hpp"
#include "charnet/solver.hpp"

namespace {

using namespace charnet;

// Exit codes, kept disjoint and stable:
//   0 success / solution verified / search found / inequality holds
//   1 verify ran but the code is not a solution
//   2 malformed input, bad parameters, unreadable file
//   3 search exhausted the space without a solution
//   4 inequality violated (negative slack)
//   5 search ran out of budget
constexpr int kExitOk = 0;
constexpr int kExitNotSolution = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitExhausted = 3;
constexpr int kExitViolated = 4;
constexpr int kExitBudget = 5;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

struct GenArgs {
    std::string family;
    std::uint64_t q = 2;
    std::size_t n = 1;
    std::size_t k = 1;
    std::uint32_t p = 0;
    std::string out;
    std::string code_out;
};

int run_gen(const GenArgs& a) {
    NetworkSpec spec;
    if (a.family == "butterfly") {
        spec = gen_butterfly();
    } else if (a.family == "n1p") {
        spec = gen_n1_prime(a.q, a.n);
    } else if (a.family == "n2p") {
        spec = gen_n2_prime(a.q, a.n);
    } else if (a.family == "n1") {
        spec = join_copies(gen_n1_prime(a.q, a.n), a.k);
    } else if (a.family == "n2") {
        spec = join_copies(gen_n2_prime(a.q, a.n), a.k);
    } else {
        throw std::runtime_error("unknown family " + a.family);
    }
    write_output(a.out, to_json(spec));
    if (!a.code_out.empty()) {
        if (a.p == 0) throw std::runtime_error("--code-out needs --p");
        FractionalCode code = [&] {
            if (a.family == "n1p") return explicit_n1_code(a.q, a.n, a.p);
            if (a.family == "n2p") return explicit_n2_code(a.q, a.n, a.p);
            if (a.family == "n1")
                return lift_joined_code(gen_n1_prime(a.q, a.n), explicit_n1_code(a.q, a.n, a.p),
                                        a.k);
            if (a.family == "n2")
                return lift_joined_code(gen_n2_prime(a.q, a.n), explicit_n2_code(a.q, a.n, a.p),
                                        a.k);
            throw std::runtime_error("no explicit construction for family " + a.family);
        }();
        write_output(a.code_out, to_json(code));
    }
    return kExitOk;
}

int run_verify(const std::string& spec_path, const std::string& code_path) {
    NetworkSpec spec = spec_from_json(read_file(spec_path));
    FractionalCode code = code_from_json(read_file(code_path));
    std::vector<Violation> violations = validate(spec);
    if (!violations.empty()) {
        for (const Violation& v : violations)
            std::cerr << "invalid network: " << to_string(v.kind) << " " << v.detail << "\n";
        return kExitBadInput;
    }
    DecodeReport report = decode_check(spec, code);
    std::cout << to_json(report);
    return report.all_satisfied() ? kExitOk : kExitNotSolution;
}

int run_search(const std::string& spec_path, std::uint32_t p, std::uint64_t budget_max,
               bool count_all, unsigned threads, bool no_prune, bool progress) {
    NetworkSpec spec = spec_from_json(read_file(spec_path));
    if (!validate(spec).empty()) throw std::runtime_error("network fails validation");
    SearchBudget budget{budget_max, count_all ? SearchMode::CountAll : SearchMode::FirstSolution};
    SearchOptions options;
    options.threads = threads;
    options.prune = !no_prune;
    if (progress) options.progress = &std::cerr;
    SearchOutcome outcome = search_scalar(spec, PrimeField(p), budget, options);
    std::cout << to_json(outcome);
    switch (outcome.status) {
        case SearchStatus::Found: return kExitOk;
        case SearchStatus::ExhaustedNone: return kExitExhausted;
        case SearchStatus::BudgetExceeded: return kExitBudget;
    }
    return kExitBadInput;
}

RankInequality build_family(const std::string& family, std::uint64_t q) {
    if (family == "eq0") return build_eq0(q);
    if (family == "thmeq1") return build_thmeq1(q);
    throw std::runtime_error("unknown inequality family " + family);
}

int run_ineq_eval(const std::string& family, std::uint64_t q, const std::string& assignment_path) {
    RankInequality ineq = build_family(family, q);
    SubspaceAssignment asg = assignment_from_json(read_file(assignment_path));
    std::vector<TermBreakdown> rows = eval_breakdown(ineq, asg);
    std::int64_t slack = 0;
    std::printf("side   coef  %-44s %4s %7s\n", "term", "H", "value");
    for (const TermBreakdown& row : rows) {
        std::ostringstream term;
        term << "H(";
        for (std::size_t i = 0; i < row.term.vars.size(); ++i)
            term << (i ? "," : "") << row.term.vars[i];
        if (!row.term.given.empty()) {
            term << "|";
            for (std::size_t i = 0; i < row.term.given.size(); ++i)
                term << (i ? "," : "") << row.term.given[i];
        }
        term << ")";
        std::printf("%s  %5lld  %-44s %4lld %7lld\n", row.rhs ? "rhs " : "lhs ",
                    static_cast<long long>(row.term.coef), term.str().c_str(),
                    static_cast<long long>(row.h_value), static_cast<long long>(row.value));
        slack += row.rhs ? row.value : -row.value;
    }
    std::printf("slack: %lld\n", static_cast<long long>(slack));
    return slack >= 0 ? kExitOk : kExitViolated;
}

int run_witness(const std::string& family, std::uint64_t q, std::uint32_t p,
                const std::string& out) {
    if (family != "eq0" && family != "thmeq1")
        throw std::runtime_error("unknown inequality family " + family);
    SubspaceAssignment asg = family == "eq0" ? witness_eq0(q, p) : witness_thmeq1(q, p);
    write_output(out, to_json(asg));
    return kExitOk;
}

int run_bound(const std::string& network, std::uint64_t q, std::uint64_t k, std::uint64_t n) {
    Rational r = [&] {
        if (network == "n1") return bound_n1(q, k, n);
        if (network == "n2") return bound_n2(q, k, n);
        if (network == "n2alt") return bound_n2_alt(q, k, n);
        throw std::runtime_error("unknown network " + network);
    }();
    std::cout << r.str() << "\n";
    return kExitOk;
}

int run_export_dot(const std::string& spec_path, const std::string& out) {
    NetworkSpec spec = spec_from_json(read_file(spec_path));
    write_output(out, to_dot(spec));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "charnet: characteristic-dependent network coding constructions, solution\n"
        "verification, exhaustive scalar search, and linear rank inequalities"};
    app.require_subcommand(1);

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "generate a network (and optionally its code)");
    gen->add_option("--family", gen_args.family, "n1p|n2p|n1|n2|butterfly")->required();
    gen->add_option("--q", gen_args.q, "product of the target primes");
    gen->add_option("--n", gen_args.n, "edge block length");
    gen->add_option("--k", gen_args.k, "copy count for the joined families");
    gen->add_option("--out", gen_args.out, "network JSON destination (default stdout)");
    gen->add_option("--p", gen_args.p, "field characteristic for --code-out");
    gen->add_option("--code-out", gen_args.code_out, "also write the explicit code here");

    std::string spec_path, code_path, out_path, family, network;
    std::uint32_t p = 2;
    std::uint64_t q = 2, bk = 1, bn = 1;
    std::uint64_t budget = 1ull << 24;
    unsigned threads = 1;
    bool count_all = false, no_prune = false, progress = false;

    CLI::App* verify = app.add_subcommand("verify", "check a code against a network");
    verify->add_option("--spec", spec_path, "network JSON")->required();
    verify->add_option("--code", code_path, "code JSON")->required();

    CLI::App* search = app.add_subcommand("search", "exhaustive scalar solution search");
    search->add_option("--spec", spec_path, "network JSON")->required();
    search->add_option("--p", p, "field characteristic")->required();
    search->add_option("--budget", budget, "assignment-visit cap (default 2^24)");
    search->add_option("--threads", threads, "parallel workers (default 1)");
    search->add_flag("--count-all", count_all, "count every solution instead of stopping");
    search->add_flag("--no-prune", no_prune, "disable terminal pruning");
    search->add_flag("--progress", progress, "report progress on standard error");

    CLI::App* ineq = app.add_subcommand("ineq-eval", "evaluate an inequality on an assignment");
    ineq->add_option("--family", family, "eq0|thmeq1")->required();
    ineq->add_option("--q", q, "product of the target primes")->required();
    ineq->add_option("--assignment", code_path, "assignment JSON")->required();

    CLI::App* witness = app.add_subcommand("witness", "emit a violating subspace assignment");
    witness->add_option("--family", family, "eq0|thmeq1")->required();
    witness->add_option("--q", q, "product of the target primes")->required();
    witness->add_option("--p", p, "field characteristic")->required();
    witness->add_option("--out", out_path, "assignment JSON destination (default stdout)");

    CLI::App* bound = app.add_subcommand("bound", "print a linear-capacity upper bound");
    bound->add_option("--network", network, "n1|n2|n2alt")->required();
    bound->add_option("--q", q, "product of the target primes")->required();
    bound->add_option("--k", bk, "message block length")->required();
    bound->add_option("--n", bn, "edge block length")->required();

    CLI::App* dot = app.add_subcommand("export-dot", "write the network as Graphviz DOT");
    dot->add_option("--spec", spec_path, "network JSON")->required();
    dot->add_option("--out", out_path, "DOT destination (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (gen->parsed()) return run_gen(gen_args);
        if (verify->parsed()) return run_verify(spec_path, code_path);
        if (search->parsed())
            return run_search(spec_path, p, budget, count_all, threads, no_prune, progress);
        if (ineq->parsed()) return run_ineq_eval(family, q, code_path);
        if (witness->parsed()) return run_witness(family, q, p, out_path);
        if (bound->parsed()) return run_bound(network, q, bk, bn);
        if (dot->parsed()) return run_export_dot(spec_path, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
