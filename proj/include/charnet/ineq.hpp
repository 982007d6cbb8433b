#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "charnet/linalg.hpp"
#include "charnet/rational.hpp"

namespace charnet {

struct MissingVariable : std::invalid_argument {
    explicit MissingVariable(const std::string& name)
        : std::invalid_argument("assignment is missing variable " + name) {}
};

/// One signed term coef * H(vars | given); `given` empty for joint terms.
struct RankTerm {
    std::int64_t coef = 0;
    std::vector<std::string> vars;
    std::vector<std::string> given;
    bool operator==(const RankTerm&) const = default;
};

/// lhs <= rhs over the declared variables; slack = rhs - lhs on an assignment.
struct RankInequality {
    std::vector<RankTerm> lhs;
    std::vector<RankTerm> rhs;
    std::vector<std::string> variables;
};

/// Maps every declared variable to a subspace of one common ambient space.
class SubspaceAssignment {
  public:
    SubspaceAssignment(const PrimeField& field, std::size_t ambient)
        : field_(field), ambient_(ambient) {}

    void set(const std::string& name, Subspace s);
    const Subspace& at(const std::string& name) const;
    bool has(const std::string& name) const { return vars_.count(name) > 0; }
    const std::map<std::string, Subspace>& vars() const { return vars_; }
    const PrimeField& field() const { return field_; }
    std::size_t ambient() const { return ambient_; }

  private:
    PrimeField field_;
    std::size_t ambient_;
    std::map<std::string, Subspace> vars_;
};

/// slack = sum(rhs) - sum(lhs); >= 0 means the inequality holds here.
std::int64_t eval(const RankInequality& ineq, const SubspaceAssignment& asg);

/// Value of a single term (coef included) on an assignment.
std::int64_t eval_term(const RankTerm& term, const SubspaceAssignment& asg);

struct TermBreakdown {
    bool rhs;  // which side the term sits on
    RankTerm term;
    std::int64_t h_value;  // H(vars|given), before the coefficient
    std::int64_t value;    // coef * h_value
};

/// Per-term values in a fixed printable order (lhs first, then rhs).
std::vector<TermBreakdown> eval_breakdown(const RankInequality& ineq,
                                          const SubspaceAssignment& asg);

/// The inequality family produced from the finite-set network: holds over
/// fields whose characteristic does not divide q, may fail otherwise.
/// Variables A, B1..B(q-1), C, U, Y, W, X, Z, V1..V(q-1).
RankInequality build_eq0(std::uint64_t q);

/// The inequality family produced from the co-finite-set network: holds when
/// the characteristic divides q. Variables A, B1..Bq, X, Y1..Yq, Z.
RankInequality build_thmeq1(std::uint64_t q);

/// Violating assignment for build_eq0(q) over F_p^(q+1); requires p | q.
/// Every conditional term vanishes and the slack is exactly -1.
SubspaceAssignment witness_eq0(std::uint64_t q, std::uint32_t p);

/// Violating assignment for build_thmeq1(q) over F_p^(q+1); requires p not
/// dividing q (the construction uses 1/q). Slack is exactly -1.
SubspaceAssignment witness_thmeq1(std::uint64_t q, std::uint32_t p);

/// Linear-capacity upper bounds the two inequalities give on the joined
/// networks, as exact rationals.
Rational bound_n1(std::uint64_t q, std::uint64_t k, std::uint64_t n);
Rational bound_n2(std::uint64_t q, std::uint64_t k, std::uint64_t n);
Rational bound_n2_alt(std::uint64_t q, std::uint64_t k, std::uint64_t n);

}  // namespace charnet
