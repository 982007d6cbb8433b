#include "charnet/solver.hpp"

#include <random>

#include "charnet/codes.hpp"
#include "charnet/json_io.hpp"
#include "doctest.h"

using namespace charnet;

namespace {

// dumb oracle: enumerate the same mixing coefficients the search owns, plus
// every terminal-edge coefficient, and ask decode_check directly; reports
// for how many mixing assignments some terminal-edge completion decodes
std::size_t oracle_solvable_interiors(const NetworkSpec& spec, const PrimeField& f) {
    std::vector<LocalKey> interior, terminal, fixed;
    for (const Edge& e : spec.edges()) {
        bool into_terminal =
            spec.nodes()[*spec.node_index(e.head)].kind == NodeKind::Terminal;
        std::size_t fanin = spec.messages_at(e.tail).size() + spec.in_edges(e.tail).size();
        for (std::size_t mi : spec.messages_at(e.tail)) {
            LocalKey key{e.id, InputKind::Message, spec.messages()[mi].id};
            (into_terminal ? terminal : (fanin >= 2 ? interior : fixed)).push_back(key);
        }
        for (std::size_t ei : spec.in_edges(e.tail)) {
            LocalKey key{e.id, InputKind::Edge, spec.edges()[ei].id};
            (into_terminal ? terminal : (fanin >= 2 ? interior : fixed)).push_back(key);
        }
    }
    const std::uint32_t p = f.modulus();
    std::size_t solvable = 0;
    std::vector<std::uint32_t> iv(interior.size(), 0);
    while (true) {
        FractionalCode base(1, 1, f);
        for (const LocalKey& key : fixed) {
            Matrix m(f, 1, 1);
            m.set_residue(0, 0, 1);
            base.set_local(key, std::move(m));
        }
        for (std::size_t i = 0; i < interior.size(); ++i) {
            Matrix m(f, 1, 1);
            m.set_residue(0, 0, iv[i]);
            base.set_local(interior[i], std::move(m));
        }
        std::vector<std::uint32_t> tv(terminal.size(), 0);
        bool any = false;
        while (!any) {
            FractionalCode code = base;
            for (std::size_t i = 0; i < terminal.size(); ++i) {
                Matrix m(f, 1, 1);
                m.set_residue(0, 0, tv[i]);
                code.set_local(terminal[i], std::move(m));
            }
            if (decode_check(spec, code).all_satisfied()) any = true;
            std::size_t i = 0;
            for (; i < tv.size(); ++i) {
                if (++tv[i] < p) break;
                tv[i] = 0;
            }
            if (i == tv.size()) break;
        }
        if (any) ++solvable;
        std::size_t i = 0;
        for (; i < iv.size(); ++i) {
            if (++iv[i] < p) break;
            iv[i] = 0;
        }
        if (i == iv.size()) break;
    }
    return solvable;
}

}  // namespace

TEST_CASE("free coefficient counts") {
    CHECK(count_free_coefficients(gen_butterfly(), 1, 1) == 9);
    CHECK(count_free_coefficients(gen_n2_prime(2, 1), 1, 1) == 18);
    // definition: one entry per enumerated (input, edge) pair at k = n = 1;
    // single-input edges fold into their consumers and are not free
    NetworkSpec s = gen_n1_prime(2, 1);
    std::size_t pairs = 0;
    for (const Edge& e : s.edges()) {
        if (s.nodes()[*s.node_index(e.head)].kind == NodeKind::Terminal) continue;
        std::size_t fanin = s.messages_at(e.tail).size() + s.in_edges(e.tail).size();
        if (fanin >= 2) pairs += fanin;
    }
    CHECK(count_free_coefficients(s, 1, 1) == pairs);
    CHECK(count_free_coefficients(s, 1, 1) == 16);  // eight 2-input mixing edges
    // block sizes scale the per-pair counts: the butterfly's mixing edges
    // take edge inputs only (3 edges of fan-in 2, one of fan-in 3)
    CHECK(count_free_coefficients(gen_butterfly(), 2, 3) == 9 * 3 * 3);
}

TEST_CASE("butterfly search finds a verified witness and counts all solutions") {
    NetworkSpec spec = gen_butterfly();
    PrimeField f(2);

    SearchOutcome first = search_scalar(spec, f, {1 << 12, SearchMode::FirstSolution});
    REQUIRE(first.status == SearchStatus::Found);
    REQUIRE(first.witness.has_value());
    CHECK(verify_solution(spec, *first.witness));
    CHECK(first.enumerated > 0);

    SearchOutcome all = search_scalar(spec, f, {1 << 12, SearchMode::CountAll});
    CHECK(all.status == SearchStatus::Found);
    CHECK(all.solutions > 0);
    CHECK(all.solutions == oracle_solvable_interiors(spec, f));
}

TEST_CASE("search is deterministic and thread-count independent") {
    NetworkSpec spec = gen_butterfly();
    PrimeField f(2);
    SearchBudget budget{1 << 12, SearchMode::FirstSolution};

    SearchOutcome a = search_scalar(spec, f, budget);
    SearchOutcome b = search_scalar(spec, f, budget);
    REQUIRE(a.witness.has_value());
    REQUIRE(b.witness.has_value());
    CHECK(a.enumerated == b.enumerated);
    CHECK(to_json(*a.witness) == to_json(*b.witness));

    for (unsigned threads : {2u, 4u}) {
        SearchOptions opts;
        opts.threads = threads;
        SearchOutcome c = search_scalar(spec, f, budget, opts);
        CHECK(c.status == a.status);
        CHECK(c.enumerated == a.enumerated);
        REQUIRE(c.witness.has_value());
        CHECK(to_json(*c.witness) == to_json(*a.witness));
    }

    // count-all parity across threads
    SearchBudget call{1 << 12, SearchMode::CountAll};
    SearchOutcome s1 = search_scalar(spec, f, call);
    SearchOptions opts;
    opts.threads = 4;
    SearchOutcome s4 = search_scalar(spec, f, call, opts);
    CHECK(s1.solutions == s4.solutions);
    CHECK(s1.enumerated == s4.enumerated);
    CHECK(s1.status == s4.status);
}

TEST_CASE("disabling pruning changes the visit count, not the outcome") {
    NetworkSpec spec = gen_butterfly();
    PrimeField f(2);
    SearchBudget budget{1 << 14, SearchMode::FirstSolution};
    SearchOptions no_prune;
    no_prune.prune = false;

    SearchOutcome with = search_scalar(spec, f, budget);
    SearchOutcome without = search_scalar(spec, f, budget, no_prune);
    CHECK(with.status == without.status);
    REQUIRE(with.witness.has_value());
    REQUIRE(without.witness.has_value());
    CHECK(to_json(*with.witness) == to_json(*without.witness));
    CHECK(without.enumerated >= with.enumerated);

    // and on an unsolvable instance both exhaust to none
    PrimeField f2(2);
    NetworkSpec n2 = gen_n2_prime(2, 1);
    // 2^18 with pruning off is still fine here because the first checks kill
    // whole subtrees only when pruning is on; cap generously
    SearchOutcome pruned = search_scalar(n2, f2, {1 << 20, SearchMode::FirstSolution});
    CHECK(pruned.status == SearchStatus::ExhaustedNone);
    SearchOutcome bare = search_scalar(n2, f2, {1 << 20, SearchMode::FirstSolution}, no_prune);
    CHECK(bare.status == SearchStatus::ExhaustedNone);
    CHECK(bare.enumerated >= pruned.enumerated);
}

TEST_CASE("n2'(2,1) over F_2 exhausts to none; over F_3 a witness appears") {
    NetworkSpec spec = gen_n2_prime(2, 1);
    SearchOutcome none = search_scalar(spec, PrimeField(2), {1 << 20, SearchMode::FirstSolution});
    CHECK(none.status == SearchStatus::ExhaustedNone);
    CHECK(none.witness == std::nullopt);
    // pruning leaves far fewer visits than the 2^18-point space
    CHECK(none.enumerated < (1u << 18));

    SearchOutcome found = search_scalar(spec, PrimeField(3), {1 << 22, SearchMode::FirstSolution});
    REQUIRE(found.status == SearchStatus::Found);
    CHECK(verify_solution(spec, *found.witness));
}

TEST_CASE("budget exhaustion surfaces as a status") {
    NetworkSpec spec = gen_n2_prime(2, 1);
    SearchOutcome out = search_scalar(spec, PrimeField(2), {64, SearchMode::FirstSolution});
    CHECK(out.status == SearchStatus::BudgetExceeded);
    CHECK(out.enumerated == 64);

    // an interrupted count is reported as exceeded, not found, and stays
    // thread-count independent
    NetworkSpec bfly = gen_butterfly();
    SearchOutcome c1 = search_scalar(bfly, PrimeField(2), {200, SearchMode::CountAll});
    CHECK(c1.status == SearchStatus::BudgetExceeded);
    CHECK(c1.enumerated == 200);
    SearchOutcome full = search_scalar(bfly, PrimeField(2), {1 << 12, SearchMode::CountAll});
    CHECK(c1.solutions <= full.solutions);
    for (unsigned threads : {2u, 4u}) {
        SearchOptions opts;
        opts.threads = threads;
        SearchOutcome cm = search_scalar(bfly, PrimeField(2), {200, SearchMode::CountAll}, opts);
        CHECK(cm.status == c1.status);
        CHECK(cm.enumerated == c1.enumerated);
        CHECK(cm.solutions == c1.solutions);
        CHECK(cm.witness.has_value() == c1.witness.has_value());
    }
}

TEST_CASE("search agrees with itself across threads, budgets and pruning on random nets") {
    std::mt19937 rng(991);
    int ran = 0;
    for (int trial = 0; trial < 60 || ran < 30; ++trial) {
        std::vector<Node> nodes{{"s1", NodeKind::Source},       {"s2", NodeKind::Source},
                                {"v1", NodeKind::Intermediate}, {"v2", NodeKind::Intermediate},
                                {"w1", NodeKind::Intermediate}, {"w2", NodeKind::Intermediate},
                                {"t1", NodeKind::Terminal},     {"t2", NodeKind::Terminal}};
        std::vector<Message> msgs{{"m1", "s1"}, {"m2", "s2"}};
        std::vector<Edge> edges;
        auto maybe = [&](std::string a, std::string b) {
            if (rng() % 100 < 65) edges.push_back({a + ">" + b, a, b});
        };
        for (auto s : {"s1", "s2"})
            for (auto v : {"v1", "v2"}) maybe(s, v);
        for (auto v : {"v1", "v2"})
            for (auto w : {"w1", "w2"}) maybe(v, w);
        for (auto s : {"s1", "s2"})
            for (auto w : {"w1", "w2"}) maybe(s, w);
        for (auto w : {"w1", "w2"})
            for (auto t : {"t1", "t2"}) maybe(w, t);
        std::vector<Demand> demands;
        for (auto t : {"t1", "t2"}) {
            if (rng() % 2) demands.push_back({t, "m1"});
            if (rng() % 2) demands.push_back({t, "m2"});
        }
        NetworkSpec spec(nodes, msgs, edges, demands);
        if (!validate(spec).empty()) continue;
        ++ran;
        PrimeField f(trial % 3 == 0 ? 3 : 2);
        std::uint64_t budget = 1 + rng() % 3000;
        SearchMode mode = (trial % 2) ? SearchMode::CountAll : SearchMode::FirstSolution;
        SearchOutcome a = search_scalar(spec, f, {budget, mode});
        SearchOptions o;
        o.threads = 3;
        SearchOutcome b = search_scalar(spec, f, {budget, mode}, o);
        CHECK(a.status == b.status);
        CHECK(a.enumerated == b.enumerated);
        CHECK(a.solutions == b.solutions);
        REQUIRE(a.witness.has_value() == b.witness.has_value());
        if (a.witness) CHECK(to_json(*a.witness) == to_json(*b.witness));
        if (a.witness) CHECK(verify_solution(spec, *a.witness));

        if (count_free_coefficients(spec, 1, 1) <= 12) {
            SearchOptions np;
            np.prune = false;
            SearchOutcome c = search_scalar(spec, f, {1u << 20, mode}, np);
            SearchOutcome d = search_scalar(spec, f, {1u << 20, mode});
            CHECK(c.status == d.status);
            CHECK(c.solutions == d.solutions);
            REQUIRE(c.witness.has_value() == d.witness.has_value());
            if (c.witness) CHECK(to_json(*c.witness) == to_json(*d.witness));
        }
    }
}

TEST_CASE("unsolvable demand structure exhausts immediately") {
    // terminal demands a message whose source cannot reach it
    NetworkSpec spec({{"s1", NodeKind::Source},
                      {"s2", NodeKind::Source},
                      {"v", NodeKind::Intermediate},
                      {"t", NodeKind::Terminal}},
                     {{"m1", "s1"}, {"m2", "s2"}}, {{"e1", "s1", "v"}, {"v->t", "v", "t"}},
                     {{"t", "m2"}});
    CHECK(validate(spec).empty());
    SearchOutcome out = search_scalar(spec, PrimeField(2), {1 << 10, SearchMode::FirstSolution});
    CHECK(out.status == SearchStatus::ExhaustedNone);
    // probe: a hand-built "solution" cannot verify either
    FractionalCode probe(1, 1, PrimeField(2));
    Matrix one(PrimeField(2), 1, 1);
    one.set_residue(0, 0, 1);
    probe.set_local({"e1", InputKind::Message, "m1"}, one);
    probe.set_local({"v->t", InputKind::Edge, "e1"}, one);
    CHECK_FALSE(verify_solution(spec, probe));
}
