#include "charnet/json_io.hpp"

#include <sstream>

#include "json.hpp"

namespace charnet {

namespace {

using nlohmann::json;

json matrix_to_obj(const Matrix& m) {
    json entries = json::array();
    for (std::uint32_t v : m.entries()) entries.push_back(v);
    return json{{"p", m.field().modulus()},
                {"rows", m.rows()},
                {"cols", m.cols()},
                {"entries", std::move(entries)}};
}

Matrix matrix_from_obj(const json& j) {
    PrimeField field(j.at("p").get<std::uint32_t>());
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    const json& entries = j.at("entries");
    if (entries.size() != rows * cols)
        throw std::invalid_argument("matrix entries length mismatch");
    Matrix m(field, rows, cols);
    for (std::size_t i = 0; i < entries.size(); ++i)
        m.set(i / cols, i % cols, entries[i].get<std::int64_t>());
    return m;
}

const char* kind_string(NodeKind kind) {
    switch (kind) {
        case NodeKind::Source: return "source";
        case NodeKind::Intermediate: return "intermediate";
        case NodeKind::Terminal: return "terminal";
    }
    return "intermediate";
}

NodeKind kind_from_string(const std::string& s) {
    if (s == "source") return NodeKind::Source;
    if (s == "intermediate") return NodeKind::Intermediate;
    if (s == "terminal") return NodeKind::Terminal;
    throw std::invalid_argument("unknown node kind: " + s);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(const Matrix& m) { return dump(matrix_to_obj(m)); }

Matrix matrix_from_json(const std::string& text) { return matrix_from_obj(json::parse(text)); }

std::string to_json(const NetworkSpec& spec) {
    json nodes = json::array();
    for (const Node& n : spec.nodes()) nodes.push_back({{"id", n.id}, {"kind", kind_string(n.kind)}});
    json messages = json::array();
    for (const Message& m : spec.messages())
        messages.push_back({{"id", m.id}, {"source", m.source}});
    json edges = json::array();
    for (const Edge& e : spec.edges())
        edges.push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
    json demands = json::array();
    for (const Demand& d : spec.demands())
        demands.push_back({{"terminal", d.terminal}, {"message", d.message}});
    return dump(json{{"nodes", std::move(nodes)},
                     {"messages", std::move(messages)},
                     {"edges", std::move(edges)},
                     {"demands", std::move(demands)}});
}

NetworkSpec spec_from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<Node> nodes;
    for (const json& n : j.at("nodes"))
        nodes.push_back({n.at("id").get<std::string>(),
                         kind_from_string(n.at("kind").get<std::string>())});
    std::vector<Message> messages;
    for (const json& m : j.at("messages"))
        messages.push_back({m.at("id").get<std::string>(), m.at("source").get<std::string>()});
    std::vector<Edge> edges;
    for (const json& e : j.at("edges"))
        edges.push_back({e.at("id").get<std::string>(), e.at("tail").get<std::string>(),
                         e.at("head").get<std::string>()});
    std::vector<Demand> demands;
    for (const json& d : j.at("demands"))
        demands.push_back({d.at("terminal").get<std::string>(), d.at("message").get<std::string>()});
    return NetworkSpec(std::move(nodes), std::move(messages), std::move(edges), std::move(demands));
}

std::string to_json(const FractionalCode& code) {
    json locals = json::array();
    for (const auto& [key, m] : code.locals())
        locals.push_back({{"edge", key.edge},
                          {"input_kind", key.kind == InputKind::Message ? "message" : "edge"},
                          {"input_id", key.input},
                          {"matrix", matrix_to_obj(m)}});
    json j{{"k", code.k()},
           {"n", code.n()},
           {"p", code.field().modulus()},
           {"locals", std::move(locals)}};
    if (!code.decoders().empty()) {
        json decoders = json::array();
        for (const auto& [te, m] : code.decoders())
            decoders.push_back(
                {{"terminal", te.first}, {"edge", te.second}, {"matrix", matrix_to_obj(m)}});
        j["decoders"] = std::move(decoders);
    }
    return dump(j);
}

FractionalCode code_from_json(const std::string& text) {
    json j = json::parse(text);
    PrimeField field(j.at("p").get<std::uint32_t>());
    FractionalCode code(j.at("k").get<unsigned>(), j.at("n").get<unsigned>(), field);
    for (const json& l : j.at("locals")) {
        std::string kind_text = l.at("input_kind").get<std::string>();
        if (kind_text != "message" && kind_text != "edge")
            throw std::invalid_argument("unknown input_kind: " + kind_text);
        InputKind kind = kind_text == "message" ? InputKind::Message : InputKind::Edge;
        code.set_local({l.at("edge").get<std::string>(), kind, l.at("input_id").get<std::string>()},
                       matrix_from_obj(l.at("matrix")));
    }
    if (j.contains("decoders"))
        for (const json& d : j.at("decoders"))
            code.set_decoder(d.at("terminal").get<std::string>(), d.at("edge").get<std::string>(),
                             matrix_from_obj(d.at("matrix")));
    return code;
}

std::string to_json(const RankInequality& ineq) {
    auto terms_to_arr = [](const std::vector<RankTerm>& terms) {
        json arr = json::array();
        for (const RankTerm& t : terms)
            arr.push_back({{"coef", t.coef}, {"vars", t.vars}, {"given", t.given}});
        return arr;
    };
    return dump(json{{"lhs", terms_to_arr(ineq.lhs)},
                     {"rhs", terms_to_arr(ineq.rhs)},
                     {"variables", ineq.variables}});
}

std::string to_json(const SubspaceAssignment& asg) {
    json subspaces = json::object();
    for (const auto& [name, sub] : asg.vars()) subspaces[name] = matrix_to_obj(sub.basis());
    return dump(json{{"p", asg.field().modulus()},
                     {"ambient", asg.ambient()},
                     {"subspaces", std::move(subspaces)}});
}

SubspaceAssignment assignment_from_json(const std::string& text) {
    json j = json::parse(text);
    PrimeField field(j.at("p").get<std::uint32_t>());
    SubspaceAssignment asg(field, j.at("ambient").get<std::size_t>());
    for (const auto& [name, mj] : j.at("subspaces").items())
        asg.set(name, Subspace::span(matrix_from_obj(mj)));
    return asg;
}

std::string to_json(const SearchOutcome& outcome) {
    json j{{"status", to_string(outcome.status)},
           {"enumerated", outcome.enumerated},
           {"solutions", outcome.solutions}};
    if (outcome.witness)
        j["witness"] = json::parse(to_json(*outcome.witness));
    else
        j["witness"] = nullptr;
    return dump(j);
}

std::string to_json(const DecodeReport& report) {
    json demands = json::array();
    for (const DemandReport& d : report.demands) {
        json decoder = json::object();
        for (const auto& [edge, m] : d.decoder) decoder[edge] = matrix_to_obj(m);
        demands.push_back({{"terminal", d.terminal},
                           {"message", d.message},
                           {"satisfied", d.satisfied},
                           {"decoder", std::move(decoder)}});
    }
    return dump(json{{"demands", std::move(demands)},
                     {"errors", report.errors},
                     {"all_satisfied", report.all_satisfied()}});
}

std::string to_dot(const NetworkSpec& spec) {
    std::ostringstream out;
    out << "digraph network {\n";
    for (const Node& n : spec.nodes()) {
        const char* shape = n.kind == NodeKind::Source
                                ? "box"
                                : (n.kind == NodeKind::Terminal ? "diamond" : "ellipse");
        out << "  \"" << n.id << "\" [shape=" << shape << "];\n";
    }
    for (const Edge& e : spec.edges())
        out << "  \"" << e.tail << "\" -> \"" << e.head << "\" [label=\"" << e.id << "\"];\n";
    out << "}\n";
    return out.str();
}

}  // namespace charnet
