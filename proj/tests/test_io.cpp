#include "charnet/json_io.hpp"

#include "charnet/codes.hpp"
#include "doctest.h"

using namespace charnet;

TEST_CASE("network specs round-trip byte-identically") {
    for (const NetworkSpec& spec :
         {gen_butterfly(), gen_n1_prime(2, 1), gen_n2_prime(3, 2),
          join_copies(gen_n2_prime(2, 1), 2)}) {
        std::string first = to_json(spec);
        NetworkSpec parsed = spec_from_json(first);
        CHECK(to_json(parsed) == first);
        CHECK(parsed.nodes().size() == spec.nodes().size());
        CHECK(parsed.edges() == spec.edges());
        CHECK(parsed.demands() == spec.demands());
    }
}

TEST_CASE("codes round-trip with locals and decoders intact") {
    FractionalCode code = explicit_n2_code(3, 2, 5);
    std::string first = to_json(code);
    FractionalCode parsed = code_from_json(first);
    CHECK(to_json(parsed) == first);
    CHECK(parsed.k() == 1);
    CHECK(parsed.n() == 2);
    CHECK(parsed.locals().size() == code.locals().size());
    CHECK(parsed.decoders().size() == code.decoders().size());
    CHECK(verify_solution(gen_n2_prime(3, 2), parsed));
}

TEST_CASE("matrices round-trip and reject bad shapes") {
    PrimeField f(7);
    Matrix m = Matrix::from_rows(f, {{1, 2, 3}, {4, 5, 6}});
    Matrix back = matrix_from_json(to_json(m));
    CHECK(back == m);
    CHECK_THROWS(matrix_from_json(R"({"p":7,"rows":2,"cols":2,"entries":[1,2,3]})"));
    CHECK_THROWS(matrix_from_json(R"({"p":6,"rows":1,"cols":1,"entries":[1]})"));
}

TEST_CASE("assignments round-trip and re-canonicalize") {
    SubspaceAssignment w = witness_eq0(2, 2);
    std::string first = to_json(w);
    SubspaceAssignment parsed = assignment_from_json(first);
    CHECK(to_json(parsed) == first);
    CHECK(eval(build_eq0(2), parsed) == -1);
}

TEST_CASE("search outcomes serialize with or without a witness") {
    SearchOutcome none{SearchStatus::ExhaustedNone, std::nullopt, 42, 0};
    std::string text = to_json(none);
    CHECK(text.find("\"exhausted-none\"") != std::string::npos);
    CHECK(text.find("\"witness\": null") != std::string::npos);

    SearchOutcome found = search_scalar(gen_butterfly(), PrimeField(2),
                                        {1 << 12, SearchMode::FirstSolution});
    REQUIRE(found.witness.has_value());
    std::string jf = to_json(found);
    CHECK(jf.find("\"found\"") != std::string::npos);
    // witness embedded as a full code object
    FractionalCode back = code_from_json(to_json(*found.witness));
    CHECK(verify_solution(gen_butterfly(), back));
}

TEST_CASE("inequalities serialize deterministically with signed terms") {
    std::string text = to_json(build_eq0(2));
    CHECK(text == to_json(build_eq0(2)));
    CHECK(text.find("\"lhs\"") != std::string::npos);
    CHECK(text.find("\"rhs\"") != std::string::npos);
    CHECK(text.find("\"coef\": -6") != std::string::npos);  // the grouped joint term
    CHECK(text.find("\"given\"") != std::string::npos);
    CHECK(to_json(build_thmeq1(3)).find("\"coef\": 10") != std::string::npos);
}

TEST_CASE("dot export shapes nodes by kind") {
    std::string dot = to_dot(gen_butterfly());
    CHECK(dot.find("\"s[1]\" [shape=box]") != std::string::npos);
    CHECK(dot.find("\"t[1]\" [shape=diamond]") != std::string::npos);
    CHECK(dot.find("\"hub\" [shape=ellipse]") != std::string::npos);
    CHECK(dot.find("[label=\"ctr->fan\"]") != std::string::npos);
}
