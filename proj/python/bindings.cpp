#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "charnet/codes.hpp"
#include "charnet/json_io.hpp"
#include "charnet/solver.hpp"

namespace py = pybind11;
using namespace charnet;

namespace {

Matrix matrix_from_lists(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows) {
    PrimeField field(p);
    std::size_t r = rows.size();
    std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

std::vector<std::vector<std::uint32_t>> matrix_to_lists(const Matrix& m) {
    std::vector<std::vector<std::uint32_t>> out(m.rows(), std::vector<std::uint32_t>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.at(r, c);
    return out;
}

SearchOutcome run_search(const NetworkSpec& spec, std::uint32_t p, std::uint64_t budget,
                         const std::string& mode, bool prune, unsigned threads) {
    SearchBudget b{budget,
                   mode == "count-all" ? SearchMode::CountAll : SearchMode::FirstSolution};
    SearchOptions o;
    o.prune = prune;
    o.threads = threads;
    return search_scalar(spec, PrimeField(p), b, o);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "characteristic-dependent network coding: constructions, verification, "
              "exhaustive scalar search, and linear rank inequalities";

    py::register_exception<ZeroInverse>(m, "ZeroInverse");
    py::register_exception<CharDividesQ>(m, "CharDividesQError");
    py::register_exception<BadParams>(m, "BadParamsError");

    py::class_<PrimeField>(m, "PrimeField")
        .def(py::init<std::uint32_t>(), py::arg("p"))
        .def_property_readonly("p", &PrimeField::modulus)
        .def("add", &PrimeField::add)
        .def("sub", &PrimeField::sub)
        .def("mul", &PrimeField::mul)
        .def("neg", &PrimeField::neg)
        .def("inv", &PrimeField::inv)
        .def("reduce", &PrimeField::reduce)
        .def("divides", &PrimeField::divides)
        .def("__eq__", [](const PrimeField& a, const PrimeField& b) { return a == b; })
        .def("__repr__",
             [](const PrimeField& f) { return "PrimeField(" + std::to_string(f.modulus()) + ")"; });

    m.def("char_divides", &char_divides, py::arg("field"), py::arg("q"),
          "True iff q maps to zero in F_p");

    py::class_<Matrix>(m, "Matrix")
        .def(py::init(&matrix_from_lists), py::arg("p"), py::arg("rows"))
        .def_static("identity",
                    [](std::uint32_t p, std::size_t n) {
                        return Matrix::identity(PrimeField(p), n);
                    })
        .def_property_readonly("rows", &Matrix::rows)
        .def_property_readonly("cols", &Matrix::cols)
        .def_property_readonly("p", [](const Matrix& m2) { return m2.field().modulus(); })
        .def("at", &Matrix::at)
        .def("tolist", &matrix_to_lists)
        .def("to_json", [](const Matrix& m2) { return to_json(m2); })
        .def_static("from_json", &matrix_from_json)
        .def("__eq__", [](const Matrix& a, const Matrix& b) { return a == b; })
        .def("__matmul__", [](const Matrix& a, const Matrix& b) { return a * b; })
        .def("__add__", [](const Matrix& a, const Matrix& b) { return a + b; })
        .def("__sub__", [](const Matrix& a, const Matrix& b) { return a - b; });

    m.def(
        "rref",
        [](const Matrix& m2) {
            auto [r, rank] = rref(m2);
            return py::make_tuple(r, rank);
        },
        "canonical reduced row-echelon form and rank");
    m.def("solve_left", &solve_left, py::arg("s"), py::arg("t"),
          "some R with R*S == T, or None");

    py::class_<Subspace>(m, "Subspace")
        .def_static("span", &Subspace::span)
        .def_static("zero",
                    [](std::uint32_t p, std::size_t ambient) {
                        return Subspace::zero(PrimeField(p), ambient);
                    })
        .def_property_readonly("dim", &Subspace::dim)
        .def_property_readonly("ambient", &Subspace::ambient)
        .def_property_readonly("basis", &Subspace::basis)
        .def("contains", py::overload_cast<const Subspace&>(&Subspace::contains, py::const_))
        .def("__eq__", [](const Subspace& a, const Subspace& b) { return a == b; });

    m.def("sum_spaces", &sum);
    m.def("intersect", &intersect);
    m.def("h_joint", &h_joint);
    m.def("h_cond", &h_cond);

    py::class_<NetworkSpec>(m, "NetworkSpec")
        .def_static("from_json", &spec_from_json)
        .def("to_json", [](const NetworkSpec& s) { return to_json(s); })
        .def("to_dot", &to_dot)
        .def_property_readonly("num_nodes", [](const NetworkSpec& s) { return s.nodes().size(); })
        .def_property_readonly("num_edges", [](const NetworkSpec& s) { return s.edges().size(); })
        .def_property_readonly("num_sources",
                               [](const NetworkSpec& s) { return s.count_kind(NodeKind::Source); })
        .def_property_readonly(
            "num_terminals",
            [](const NetworkSpec& s) { return s.count_kind(NodeKind::Terminal); })
        .def_property_readonly("num_demands",
                               [](const NetworkSpec& s) { return s.demands().size(); });

    m.def("validate", [](const NetworkSpec& s) {
        std::vector<std::string> out;
        for (const Violation& v : validate(s))
            out.push_back(std::string(to_string(v.kind)) + ": " + v.detail);
        return out;
    });

    m.def("gen_n1_prime", &gen_n1_prime, py::arg("q"), py::arg("n"));
    m.def("gen_n2_prime", &gen_n2_prime, py::arg("q"), py::arg("n"));
    m.def("join_copies", &join_copies, py::arg("base"), py::arg("k"));
    m.def("gen_butterfly", &gen_butterfly);

    py::class_<FractionalCode>(m, "FractionalCode")
        .def_static("from_json", &code_from_json)
        .def("to_json", [](const FractionalCode& c) { return to_json(c); })
        .def_property_readonly("k", &FractionalCode::k)
        .def_property_readonly("n", &FractionalCode::n)
        .def_property_readonly("p",
                               [](const FractionalCode& c) { return c.field().modulus(); });

    m.def("explicit_n1_code", &explicit_n1_code, py::arg("q"), py::arg("n"), py::arg("p"));
    m.def("explicit_n2_code", &explicit_n2_code, py::arg("q"), py::arg("n"), py::arg("p"));
    m.def("lift_joined_code", &lift_joined_code, py::arg("base_spec"), py::arg("base_code"),
          py::arg("k"));

    m.def("verify_solution", &verify_solution, py::arg("spec"), py::arg("code"));
    m.def("decode_check", [](const NetworkSpec& spec, const FractionalCode& code) {
        DecodeReport report = decode_check(spec, code);
        py::list demands;
        for (const DemandReport& d : report.demands)
            demands.append(py::make_tuple(d.terminal, d.message, d.satisfied));
        py::dict out;
        out["demands"] = demands;
        out["errors"] = report.errors;
        out["all_satisfied"] = report.all_satisfied();
        return out;
    });
    m.def("global_transfer", [](const NetworkSpec& spec, const FractionalCode& code) {
        return global_transfer(spec, code);
    });

    m.def("count_free_coefficients", &count_free_coefficients, py::arg("spec"), py::arg("k"),
          py::arg("n"));

    py::class_<SearchOutcome>(m, "SearchOutcome")
        .def_property_readonly("status",
                               [](const SearchOutcome& o) { return to_string(o.status); })
        .def_readonly("enumerated", &SearchOutcome::enumerated)
        .def_readonly("solutions", &SearchOutcome::solutions)
        .def_property_readonly("witness", [](const SearchOutcome& o) { return o.witness; })
        .def("to_json", [](const SearchOutcome& o) { return to_json(o); });

    m.def("search_scalar", &run_search, py::arg("spec"), py::arg("p"),
          py::arg("budget") = (1ull << 24), py::arg("mode") = "first", py::arg("prune") = true,
          py::arg("threads") = 1);

    py::class_<RankInequality>(m, "RankInequality")
        .def("to_json", [](const RankInequality& i) { return to_json(i); })
        .def_property_readonly("variables",
                               [](const RankInequality& i) { return i.variables; })
        .def_property_readonly("num_terms", [](const RankInequality& i) {
            return i.lhs.size() + i.rhs.size();
        });

    py::class_<SubspaceAssignment>(m, "SubspaceAssignment")
        .def_static("from_json", &assignment_from_json)
        .def("to_json", [](const SubspaceAssignment& a) { return to_json(a); })
        .def_property_readonly("ambient", &SubspaceAssignment::ambient)
        .def("subspace", [](const SubspaceAssignment& a, const std::string& name) {
            return a.at(name);
        });

    m.def("build_eq0", &build_eq0, py::arg("q"));
    m.def("build_thmeq1", &build_thmeq1, py::arg("q"));
    m.def("eval_inequality", &eval, py::arg("inequality"), py::arg("assignment"),
          "slack = rhs - lhs; negative means violated");
    m.def("witness_eq0", &witness_eq0, py::arg("q"), py::arg("p"));
    m.def("witness_thmeq1", &witness_thmeq1, py::arg("q"), py::arg("p"));

    m.def("bound_n1", [](std::uint64_t q, std::uint64_t k, std::uint64_t n) {
        return bound_n1(q, k, n).str();
    });
    m.def("bound_n2", [](std::uint64_t q, std::uint64_t k, std::uint64_t n) {
        return bound_n2(q, k, n).str();
    });
    m.def("bound_n2_alt", [](std::uint64_t q, std::uint64_t k, std::uint64_t n) {
        return bound_n2_alt(q, k, n).str();
    });
}
