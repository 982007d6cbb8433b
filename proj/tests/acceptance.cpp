// Acceptance suite: reproduces the headline results end to end and prints
// one PASS/FAIL line per criterion. Exit status 0 iff everything passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "charnet/codes.hpp"
#include "charnet/json_io.hpp"
#include "charnet/solver.hpp"

using namespace charnet;

namespace {

struct Criterion {
    int number;
    const char* label;
    double time_limit_s;
    std::function<bool(std::string&)> run;
};

bool check(bool ok, std::string& why, const std::string& detail) {
    if (!ok && why.empty()) why = detail;
    return ok;
}

// ---- criterion 1: explicit n1' solutions across the (q, n, p) grid --------
bool criterion1(std::string& why) {
    bool ok = true;
    for (std::uint64_t q : {2, 3, 6})
        for (std::size_t n : {1, 2, 3})
            for (std::uint32_t p : {2, 3, 5, 7}) {
                bool expected = q % p == 0;
                bool got = verify_solution(gen_n1_prime(q, n), explicit_n1_code(q, n, p));
                ok &= check(got == expected, why,
                            "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                                " p=" + std::to_string(p) + " expected " +
                                (expected ? "solution" : "failure"));
            }
    return ok;
}

// ---- criterion 2: explicit n2' solutions / refusals ------------------------
bool criterion2(std::string& why) {
    bool ok = true;
    for (std::uint64_t q : {2, 3, 6})
        for (std::size_t n : {1, 2, 3})
            for (std::uint32_t p : {2, 3, 5, 7}) {
                if (q % p == 0) {
                    bool refused = false;
                    try {
                        explicit_n2_code(q, n, p);
                    } catch (const CharDividesQ&) {
                        refused = true;
                    }
                    ok &= check(refused, why,
                                "q=" + std::to_string(q) + " p=" + std::to_string(p) +
                                    " should refuse");
                } else {
                    ok &= check(verify_solution(gen_n2_prime(q, n), explicit_n2_code(q, n, p)),
                                why,
                                "q=" + std::to_string(q) + " n=" + std::to_string(n) +
                                    " p=" + std::to_string(p) + " should verify");
                }
            }
    return ok;
}

// ---- criterion 3: join lift ------------------------------------------------
bool criterion3(std::string& why) {
    bool ok = true;
    for (std::size_t k : {2, 3}) {
        NetworkSpec b1 = gen_n1_prime(2, 1);
        ok &= check(verify_solution(join_copies(b1, k),
                                    lift_joined_code(b1, explicit_n1_code(2, 1, 2), k)),
                    why, "n1 k=" + std::to_string(k));
        NetworkSpec b2 = gen_n2_prime(2, 1);
        ok &= check(verify_solution(join_copies(b2, k),
                                    lift_joined_code(b2, explicit_n2_code(2, 1, 3), k)),
                    why, "n2 k=" + std::to_string(k));
    }
    return ok;
}

// ---- criterion 4: search confirms non-existence ----------------------------
bool criterion4(std::string& why) {
    NetworkSpec spec = gen_n2_prime(2, 1);
    if (!check(count_free_coefficients(spec, 1, 1) == 18, why, "free coefficient count"))
        return false;
    SearchOutcome out = search_scalar(spec, PrimeField(2), {1ull << 24,
                                                            SearchMode::FirstSolution});
    bool ok = check(out.status == SearchStatus::ExhaustedNone, why,
                    std::string("status ") + to_string(out.status));
    ok &= check(out.enumerated < (1u << 18), why,
                "visited " + std::to_string(out.enumerated) + " of the 2^18 space");
    return ok;
}

// ---- criterion 5: search confirms existence --------------------------------
bool criterion5(std::string& why) {
    NetworkSpec spec = gen_n1_prime(2, 1);
    SearchOutcome out = search_scalar(spec, PrimeField(2), {1ull << 24,
                                                            SearchMode::FirstSolution});
    bool ok = check(out.status == SearchStatus::Found, why,
                    std::string("status ") + to_string(out.status));
    if (ok)
        ok &= check(out.witness && verify_solution(spec, *out.witness), why,
                    "witness fails verify_solution");
    return ok;
}

// ---- criterion 6: witness slacks are exactly -1 -----------------------------
bool criterion6(std::string& why) {
    bool ok = true;
    for (auto [q, p] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
             {2, 2}, {3, 3}, {6, 2}, {6, 3}}) {
        RankInequality ineq = build_eq0(q);
        SubspaceAssignment w = witness_eq0(q, p);
        for (const RankTerm& t : ineq.rhs)
            if (!t.given.empty())
                ok &= check(eval_term(t, w) == 0, why,
                            "eq0 q=" + std::to_string(q) + " conditional H(" + t.vars.front() +
                                "|...) nonzero");
        ok &= check(eval(ineq, w) == -1, why,
                    "eq0 slack(q=" + std::to_string(q) + ",p=" + std::to_string(p) +
                        ") = " + std::to_string(eval(ineq, w)));
    }
    for (auto [q, p] : std::vector<std::pair<std::uint64_t, std::uint32_t>>{
             {2, 3}, {3, 2}, {6, 5}}) {
        RankInequality ineq = build_thmeq1(q);
        SubspaceAssignment w = witness_thmeq1(q, p);
        for (const RankTerm& t : ineq.rhs)
            if (!t.given.empty())
                ok &= check(eval_term(t, w) == 0, why,
                            "thmeq1 q=" + std::to_string(q) + " conditional H(" +
                                t.vars.front() + "|...) nonzero");
        ok &= check(eval(ineq, w) == -1, why,
                    "thmeq1 slack(q=" + std::to_string(q) + ",p=" + std::to_string(p) +
                        ") = " + std::to_string(eval(ineq, w)));
    }
    return ok;
}

// ---- criterion 7: validity on 1000 random assignments per case -------------
bool criterion7(std::string& why) {
    bool ok = true;
    auto trial = [&](const RankInequality& ineq, const PrimeField& f, std::uint32_t seed,
                     const std::string& label) {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<std::uint32_t> val(0, f.modulus() - 1);
        for (int t = 0; t < 1000 && ok; ++t) {
            std::size_t ambient = 1 + rng() % 4;
            SubspaceAssignment asg(f, ambient);
            for (const std::string& name : ineq.variables) {
                std::size_t nvecs = rng() % (ambient + 1);
                Matrix m(f, nvecs, ambient);
                for (std::size_t r = 0; r < nvecs; ++r)
                    for (std::size_t c = 0; c < ambient; ++c) m.set_residue(r, c, val(rng));
                asg.set(name, Subspace::span(m));
            }
            ok &= check(eval(ineq, asg) >= 0, why, label + " violated at trial " +
                                                       std::to_string(t));
        }
    };
    trial(build_eq0(2), PrimeField(3), 101, "eq0 q=2 over F_3");
    trial(build_eq0(3), PrimeField(2), 102, "eq0 q=3 over F_2");
    trial(build_thmeq1(2), PrimeField(2), 103, "thmeq1 q=2 over F_2");
    trial(build_thmeq1(3), PrimeField(3), 104, "thmeq1 q=3 over F_3");
    return ok;
}

// ---- criterion 8: bound constants ------------------------------------------
bool criterion8(std::string& why) {
    bool ok = check(bound_n1(2, 1, 1).str() == "6/7", why, "bound_n1(2,1,1)");
    ok &= check(bound_n2(2, 1, 1).str() == "6/7", why, "bound_n2(2,1,1)");
    ok &= check(bound_n2_alt(2, 1, 1).str() == "9/10", why, "bound_n2_alt(2,1,1)");
    for (std::uint64_t q = 2; q <= 10; ++q)
        ok &= check(bound_n2_alt(q, 1, 1) > bound_n2(q, 1, 1), why,
                    "alt bound not looser at q=" + std::to_string(q));
    return ok;
}

// ---- criterion 9: linear-algebra oracle suite -------------------------------
bool criterion9(std::string& why) {
    bool ok = true;
    std::mt19937 rng(4242);
    auto random_matrix = [&](const PrimeField& f, std::size_t r, std::size_t c) {
        std::uniform_int_distribution<std::uint32_t> val(0, f.modulus() - 1);
        Matrix m(f, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.set_residue(i, j, val(rng));
        return m;
    };
    auto random_invertible = [&](const PrimeField& f, std::size_t nn) {
        while (true) {
            Matrix m = random_matrix(f, nn, nn);
            if (rref(m).second == nn) return m;
        }
    };
    const PrimeField fields[] = {PrimeField(2), PrimeField(3), PrimeField(5)};
    for (int t = 0; t < 10000 && ok; ++t) {
        const PrimeField& f = fields[t % 3];
        switch (t % 4) {
            case 0: {  // block-inverse property
                std::size_t d = 1 + rng() % 2, nn = 2 + rng() % 2;
                Matrix a = random_invertible(f, d * nn);
                auto sol = solve_left(a.transpose(), Matrix::identity(f, d * nn));
                ok &= check(sol.has_value(), why, "inverse solve failed");
                if (!ok) break;
                Matrix b = sol->transpose();
                for (std::size_t i = 0; i < nn && ok; ++i)
                    for (std::size_t j = 0; j < nn && ok; ++j) {
                        Matrix ai(f, d, d * nn), bj(f, d * nn, d);
                        for (std::size_t r = 0; r < d; ++r)
                            for (std::size_t c = 0; c < d * nn; ++c)
                                ai.set_residue(r, c, a.at(i * d + r, c));
                        for (std::size_t r = 0; r < d * nn; ++r)
                            for (std::size_t c = 0; c < d; ++c)
                                bj.set_residue(r, c, b.at(r, j * d + c));
                        Matrix want = i == j ? Matrix::identity(f, d) : Matrix(f, d, d);
                        ok &= check(ai * bj == want, why, "block product mismatch");
                    }
                ok &= check(a * b == Matrix::identity(f, d * nn), why, "assembled product");
                break;
            }
            case 1: {  // rref canonicity
                Matrix m = random_matrix(f, 1 + rng() % 5, 1 + rng() % 5);
                auto [r1, k1] = rref(m);
                auto [r2, k2] = rref(r1);
                ok &= check(r1 == r2 && k1 == k2, why, "rref not idempotent");
                Matrix e = random_invertible(f, m.rows());
                ok &= check(rref(e * m).first == r1, why, "rref not canonical");
                break;
            }
            case 2: {  // modularity
                std::size_t ambient = 1 + rng() % 4;
                Subspace a = Subspace::span(random_matrix(f, rng() % 4, ambient));
                Subspace b = Subspace::span(random_matrix(f, rng() % 4, ambient));
                ok &= check(a.dim() + b.dim() == sum(a, b).dim() + intersect(a, b).dim(), why,
                            "modularity identity");
                break;
            }
            case 3: {  // solve_left soundness
                Matrix s = random_matrix(f, 1 + rng() % 4, 1 + rng() % 4);
                Matrix t2 = random_matrix(f, 1 + rng() % 4, s.cols());
                auto r = solve_left(s, t2);
                bool contained = rref(vstack(s, t2)).second == rref(s).second;
                ok &= check(r.has_value() == contained, why, "solve_left existence");
                if (r) ok &= check(*r * s == t2, why, "solve_left product");
                break;
            }
        }
    }
    return ok;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "explicit n1' solution grid matches characteristic-divides-q", 5.0, criterion1},
        {2, "explicit n2' mirror grid verifies or refuses by characteristic", 5.0, criterion2},
        {3, "joined networks verify through the lifted (k,n) codes", 5.0, criterion3},
        {4, "scalar search exhausts n2'(2,1) over F_2 with no solution", 60.0, criterion4},
        {5, "scalar search finds a verified solution of n1'(2,1) over F_2", 120.0, criterion5},
        {6, "both witness families give slack exactly -1, conditionals 0", 1.0, criterion6},
        {7, "1000-trial validity sweeps stay non-negative per case", 30.0, criterion7},
        {8, "capacity bound constants 6/7, 6/7, 9/10 and alt-bound ordering", 1.0, criterion8},
        {9, "linear-algebra oracle suite, 10^4 randomized instances", 30.0, criterion9},
    };

    int failures = 0;
    for (Criterion& c : criteria) {
        std::string why;
        auto start = std::chrono::steady_clock::now();
        bool ok = c.run(why);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                          .count();
        if (secs > c.time_limit_s) {
            ok = false;
            if (why.empty())
                why = "exceeded " + std::to_string(c.time_limit_s) + "s time limit";
        }
        std::printf("%s criterion %d: %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", c.number,
                    c.label, secs, why.empty() ? "" : " — ", why.c_str());
        if (!ok) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
