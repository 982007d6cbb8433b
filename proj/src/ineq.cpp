#include "charnet/ineq.hpp"

#include <algorithm>

#include "charnet/families.hpp"

namespace charnet {

void SubspaceAssignment::set(const std::string& name, Subspace s) {
    if (s.ambient() != ambient_ || !(s.field() == field_))
        throw AmbientMismatch("subspace for " + name + " lives in a different space");
    vars_.insert_or_assign(name, std::move(s));
}

const Subspace& SubspaceAssignment::at(const std::string& name) const {
    auto it = vars_.find(name);
    if (it == vars_.end()) throw MissingVariable(name);
    return it->second;
}

namespace {

std::vector<Subspace> gather(const SubspaceAssignment& asg, const std::vector<std::string>& names) {
    std::vector<Subspace> out;
    out.reserve(names.size());
    for (const std::string& n : names) out.push_back(asg.at(n));
    return out;
}

}  // namespace

std::int64_t eval_term(const RankTerm& term, const SubspaceAssignment& asg) {
    std::int64_t h = h_cond(gather(asg, term.vars), gather(asg, term.given));
    return term.coef * h;
}

std::int64_t eval(const RankInequality& ineq, const SubspaceAssignment& asg) {
    std::int64_t slack = 0;
    for (const RankTerm& t : ineq.rhs) slack += eval_term(t, asg);
    for (const RankTerm& t : ineq.lhs) slack -= eval_term(t, asg);
    return slack;
}

std::vector<TermBreakdown> eval_breakdown(const RankInequality& ineq,
                                          const SubspaceAssignment& asg) {
    std::vector<TermBreakdown> out;
    for (const RankTerm& t : ineq.lhs) {
        std::int64_t h = h_cond(gather(asg, t.vars), gather(asg, t.given));
        out.push_back({false, t, h, t.coef * h});
    }
    for (const RankTerm& t : ineq.rhs) {
        std::int64_t h = h_cond(gather(asg, t.vars), gather(asg, t.given));
        out.push_back({true, t, h, t.coef * h});
    }
    return out;
}

namespace {

void require_q(std::uint64_t q) {
    if (q < 2) throw BadParams("q must be at least 2");
}

std::string var_b(std::size_t i) { return "B" + std::to_string(i); }
std::string var_v(std::size_t i) { return "V" + std::to_string(i); }
std::string var_y(std::size_t i) { return "Y" + std::to_string(i); }

std::vector<std::string> b_range(std::size_t from, std::size_t to, std::size_t skip = 0) {
    std::vector<std::string> out;
    for (std::size_t i = from; i <= to; ++i)
        if (i != skip) out.push_back(var_b(i));
    return out;
}

}  // namespace

RankInequality build_eq0(std::uint64_t q) {
    require_q(q);
    const std::int64_t Q = static_cast<std::int64_t>(q);
    const std::size_t nb = static_cast<std::size_t>(q - 1);  // count of B_i and V_i
    RankInequality ineq;

    ineq.variables = {"A"};
    for (std::size_t i = 1; i <= nb; ++i) ineq.variables.push_back(var_b(i));
    ineq.variables.push_back("C");
    for (const char* v : {"U", "Y", "W", "X", "Z"}) ineq.variables.push_back(v);
    for (std::size_t i = 1; i <= nb; ++i) ineq.variables.push_back(var_v(i));

    // (2q-1)H(A) + (2q-2)H(C) + sum 2H(B_i)
    ineq.lhs.push_back({2 * Q - 1, {"A"}, {}});
    ineq.lhs.push_back({2 * Q - 2, {"C"}, {}});
    for (std::size_t i = 1; i <= nb; ++i) ineq.lhs.push_back({2, {var_b(i)}, {}});

    auto& rhs = ineq.rhs;
    // (q-1)(H(U) + H(Y) + H(W) + 2H(X)) + sum H(V_i)
    rhs.push_back({Q - 1, {"U"}, {}});
    rhs.push_back({Q - 1, {"Y"}, {}});
    rhs.push_back({Q - 1, {"W"}, {}});
    rhs.push_back({2 * (Q - 1), {"X"}, {}});
    for (std::size_t i = 1; i <= nb; ++i) rhs.push_back({1, {var_v(i)}, {}});

    // conditional block
    {
        std::vector<std::string> given = {"A"};
        for (const std::string& b : b_range(1, nb)) given.push_back(b);
        rhs.push_back({7 * Q - 6, {"U"}, given});
    }
    {
        std::vector<std::string> given = b_range(1, nb);
        given.push_back("C");
        rhs.push_back({6 * Q - 5, {"Y"}, given});
    }
    for (std::size_t i = 1; i <= nb; ++i) {
        std::vector<std::string> given = {"Y"};
        for (const std::string& b : b_range(1, nb, i)) given.push_back(b);
        rhs.push_back({2 * Q, {var_v(i)}, given});
    }
    rhs.push_back({3 * Q - 3, {"W"}, {"U", "Y"}});
    rhs.push_back({4 * Q - 3, {"X"}, {"U", "C"}});
    rhs.push_back({2 * Q - 2, {"Z"}, {"W", "X"}});
    {
        std::vector<std::string> given = {"X"};
        for (std::size_t i = 1; i <= nb; ++i) given.push_back(var_v(i));
        rhs.push_back({2 * Q - 1, {"A"}, given});
    }
    rhs.push_back({Q - 1, {"C"}, {"A", "W"}});
    for (std::size_t i = 1; i <= nb; ++i) {
        std::vector<std::string> given = {"Z"};
        for (const std::string& b : b_range(1, nb, i)) given.push_back(b);
        rhs.push_back({2, {var_b(i)}, given});
    }
    for (std::size_t i = 1; i <= nb; ++i) rhs.push_back({1, {"C"}, {var_v(i), var_b(i)}});

    // (5q-4)(H(A) - H(A,B_1..B_{q-1},C))
    rhs.push_back({5 * Q - 4, {"A"}, {}});
    {
        std::vector<std::string> joint = {"A"};
        for (const std::string& b : b_range(1, nb)) joint.push_back(b);
        joint.push_back("C");
        rhs.push_back({-(5 * Q - 4), joint, {}});
    }
    // (6q-5)(sum H(B_i) + H(C)) - (q-1)H(B_1..B_{q-1},C)
    for (std::size_t i = 1; i <= nb; ++i) rhs.push_back({6 * Q - 5, {var_b(i)}, {}});
    rhs.push_back({6 * Q - 5, {"C"}, {}});
    {
        std::vector<std::string> joint = b_range(1, nb);
        joint.push_back("C");
        rhs.push_back({-(Q - 1), joint, {}});
    }
    return ineq;
}

RankInequality build_thmeq1(std::uint64_t q) {
    require_q(q);
    const std::int64_t Q = static_cast<std::int64_t>(q);
    const std::size_t nb = static_cast<std::size_t>(q);
    RankInequality ineq;

    ineq.variables = {"A"};
    for (std::size_t i = 1; i <= nb; ++i) ineq.variables.push_back(var_b(i));
    ineq.variables.push_back("X");
    for (std::size_t i = 1; i <= nb; ++i) ineq.variables.push_back(var_y(i));
    ineq.variables.push_back("Z");

    // 2H(A) + (q+1)H(B_1) + sum_{i>=2} 2H(B_i)
    ineq.lhs.push_back({2, {"A"}, {}});
    ineq.lhs.push_back({Q + 1, {var_b(1)}, {}});
    for (std::size_t i = 2; i <= nb; ++i) ineq.lhs.push_back({2, {var_b(i)}, {}});

    auto& rhs = ineq.rhs;
    rhs.push_back({2 * Q - 1, {"X"}, {}});
    for (std::size_t i = 1; i <= nb; ++i) rhs.push_back({1, {var_y(i)}, {}});
    rhs.push_back({1, {"Z"}, {}});
    {
        std::vector<std::string> given = {"A"};
        for (const std::string& b : b_range(1, nb)) given.push_back(b);
        rhs.push_back({3 * Q, {"X"}, given});
    }
    for (std::size_t i = 1; i <= nb; ++i) {
        std::vector<std::string> given = {"A"};
        for (const std::string& b : b_range(1, nb, i)) given.push_back(b);
        rhs.push_back({i == 1 ? Q + 2 : 3, {var_y(i)}, given});
    }
    rhs.push_back({2, {"Z"}, b_range(1, nb)});
    {
        std::vector<std::string> given;
        for (std::size_t i = 1; i <= nb; ++i) given.push_back(var_y(i));
        given.push_back("Z");
        rhs.push_back({1, {"A"}, given});
    }
    rhs.push_back({1, {"A"}, {"X", "Z"}});
    for (std::size_t i = 1; i <= nb; ++i)
        rhs.push_back({i == 1 ? Q + 1 : 2, {var_b(i)}, {"X", var_y(i)}});

    // (3q+1)(H(A) + sum H(B_i) - H(A,B_1..B_q))
    rhs.push_back({3 * Q + 1, {"A"}, {}});
    for (std::size_t i = 1; i <= nb; ++i) rhs.push_back({3 * Q + 1, {var_b(i)}, {}});
    {
        std::vector<std::string> joint = {"A"};
        for (const std::string& b : b_range(1, nb)) joint.push_back(b);
        rhs.push_back({-(3 * Q + 1), joint, {}});
    }
    return ineq;
}

namespace {

// Single-vector span: the 1-dimensional (or zero) subspace spanned by
// sum_{i in plus} e_i - sum_{i in minus} e_i in F_p^ambient (1-based).
Subspace unit_combo(const PrimeField& f, std::size_t ambient, const std::vector<std::size_t>& plus,
                    const std::vector<std::size_t>& minus = {}) {
    Matrix v(f, 1, ambient);
    for (std::size_t i : plus) v.set(0, i - 1, v.at(0, i - 1) + 1);
    for (std::size_t i : minus) v.set(0, i - 1, static_cast<std::int64_t>(v.at(0, i - 1)) - 1);
    return Subspace::span(v);
}

std::vector<std::size_t> range_1(std::size_t from, std::size_t to, std::size_t skip = 0) {
    std::vector<std::size_t> out;
    for (std::size_t i = from; i <= to; ++i)
        if (i != skip) out.push_back(i);
    return out;
}

}  // namespace

SubspaceAssignment witness_eq0(std::uint64_t q, std::uint32_t p) {
    require_q(q);
    PrimeField field(p);
    if (!char_divides(field, q))
        throw BadParams("witness_eq0 needs the characteristic to divide q");
    const std::size_t m = static_cast<std::size_t>(q + 1);
    SubspaceAssignment asg(field, m);

    asg.set("A", unit_combo(field, m, {1}));
    for (std::size_t i = 1; i < q; ++i) asg.set(var_b(i), unit_combo(field, m, {i + 1}));
    asg.set("C", unit_combo(field, m, {m}));
    asg.set("U", unit_combo(field, m, range_1(1, q)));
    asg.set("Y", unit_combo(field, m, range_1(2, m)));
    asg.set("W", unit_combo(field, m, {1}, {m}));
    asg.set("X", unit_combo(field, m, range_1(1, q), {m}));
    asg.set("Z", unit_combo(field, m, range_1(2, q)));
    for (std::size_t i = 1; i < q; ++i) asg.set(var_v(i), unit_combo(field, m, {i + 1, m}));
    return asg;
}

SubspaceAssignment witness_thmeq1(std::uint64_t q, std::uint32_t p) {
    require_q(q);
    PrimeField field(p);
    if (char_divides(field, q))
        throw BadParams("witness_thmeq1 needs the characteristic to not divide q");
    const std::size_t m = static_cast<std::size_t>(q + 1);
    SubspaceAssignment asg(field, m);

    asg.set("A", unit_combo(field, m, {1}));
    for (std::size_t i = 1; i <= q; ++i) asg.set(var_b(i), unit_combo(field, m, {i + 1}));
    asg.set("X", unit_combo(field, m, range_1(1, m)));
    for (std::size_t i = 1; i <= q; ++i)
        asg.set(var_y(i), unit_combo(field, m, range_1(1, m, i + 1)));
    asg.set("Z", unit_combo(field, m, range_1(2, m)));
    return asg;
}

Rational bound_n1(std::uint64_t q, std::uint64_t k, std::uint64_t n) {
    require_q(q);
    const std::int64_t Q = static_cast<std::int64_t>(q);
    return Rational((6 * Q - 6) * static_cast<std::int64_t>(k),
                    (6 * Q - 5) * static_cast<std::int64_t>(n));
}

Rational bound_n2(std::uint64_t q, std::uint64_t k, std::uint64_t n) {
    require_q(q);
    const std::int64_t Q = static_cast<std::int64_t>(q);
    return Rational(3 * Q * static_cast<std::int64_t>(k),
                    (3 * Q + 1) * static_cast<std::int64_t>(n));
}

Rational bound_n2_alt(std::uint64_t q, std::uint64_t k, std::uint64_t n) {
    require_q(q);
    const std::int64_t Q = static_cast<std::int64_t>(q);
    return Rational((4 * Q + 1) * static_cast<std::int64_t>(k),
                    (4 * Q + 2) * static_cast<std::int64_t>(n));
}

}  // namespace charnet
