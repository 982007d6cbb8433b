#pragma once

#include <string>

#include "charnet/ineq.hpp"
#include "charnet/netmodel.hpp"
#include "charnet/solver.hpp"

namespace charnet {

/// JSON interchange. Layouts:
///   Matrix          {"p", "rows", "cols", "entries"} (row-major)
///   NetworkSpec     {"nodes":[{"id","kind"}], "messages":[{"id","source"}],
///                    "edges":[{"id","tail","head"}],
///                    "demands":[{"terminal","message"}]}
///   FractionalCode  {"k","n","p","locals":[{"edge","input_kind","input_id",
///                    "matrix"}]} plus "decoders" when present
/// Emission is deterministic: object keys sorted, arrays in spec order.
std::string to_json(const Matrix& m);
std::string to_json(const NetworkSpec& spec);
std::string to_json(const FractionalCode& code);
std::string to_json(const RankInequality& ineq);
std::string to_json(const SubspaceAssignment& asg);
std::string to_json(const SearchOutcome& outcome);
std::string to_json(const DecodeReport& report);

Matrix matrix_from_json(const std::string& text);
NetworkSpec spec_from_json(const std::string& text);
FractionalCode code_from_json(const std::string& text);
SubspaceAssignment assignment_from_json(const std::string& text);

/// Graphviz DOT: one node per network node (shape by kind), edge labels are
/// edge ids. Stable across runs.
std::string to_dot(const NetworkSpec& spec);

}  // namespace charnet
