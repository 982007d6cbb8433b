#include "charnet/netmodel.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace charnet {

NetworkSpec::NetworkSpec(std::vector<Node> nodes, std::vector<Message> messages,
                         std::vector<Edge> edges, std::vector<Demand> demands)
    : nodes_(std::move(nodes)),
      messages_(std::move(messages)),
      edges_(std::move(edges)),
      demands_(std::move(demands)) {
    for (std::size_t i = 0; i < nodes_.size(); ++i) node_by_id_.emplace(nodes_[i].id, i);
    for (std::size_t i = 0; i < edges_.size(); ++i) edge_by_id_.emplace(edges_[i].id, i);
    for (std::size_t i = 0; i < messages_.size(); ++i) message_by_id_.emplace(messages_[i].id, i);
}

std::optional<std::size_t> NetworkSpec::node_index(const std::string& id) const {
    auto it = node_by_id_.find(id);
    if (it == node_by_id_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> NetworkSpec::edge_index(const std::string& id) const {
    auto it = edge_by_id_.find(id);
    if (it == edge_by_id_.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> NetworkSpec::message_index(const std::string& id) const {
    auto it = message_by_id_.find(id);
    if (it == message_by_id_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::size_t> NetworkSpec::in_edges(const std::string& node_id) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].head == node_id) out.push_back(i);
    return out;
}

std::vector<std::size_t> NetworkSpec::out_edges(const std::string& node_id) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].tail == node_id) out.push_back(i);
    return out;
}

std::vector<std::size_t> NetworkSpec::messages_at(const std::string& source_id) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < messages_.size(); ++i)
        if (messages_[i].source == source_id) out.push_back(i);
    return out;
}

std::size_t NetworkSpec::count_kind(NodeKind kind) const {
    return static_cast<std::size_t>(
        std::count_if(nodes_.begin(), nodes_.end(), [&](const Node& n) { return n.kind == kind; }));
}

const char* to_string(ViolationKind kind) {
    switch (kind) {
        case ViolationKind::DuplicateNodeId: return "DuplicateNodeId";
        case ViolationKind::DuplicateEdgeId: return "DuplicateEdgeId";
        case ViolationKind::DuplicateMessageId: return "DuplicateMessageId";
        case ViolationKind::UnknownNode: return "UnknownNode";
        case ViolationKind::SourceHasInEdge: return "SourceHasInEdge";
        case ViolationKind::TerminalHasOutEdge: return "TerminalHasOutEdge";
        case ViolationKind::BadMessageSource: return "BadMessageSource";
        case ViolationKind::BadDemand: return "BadDemand";
        case ViolationKind::CycleDetected: return "CycleDetected";
    }
    return "Unknown";
}

std::vector<Violation> validate(const NetworkSpec& spec) {
    std::vector<Violation> out;
    auto add = [&](ViolationKind k, const std::string& d) { out.push_back({k, d}); };

    std::set<std::string> seen;
    for (const Node& n : spec.nodes())
        if (!seen.insert(n.id).second) add(ViolationKind::DuplicateNodeId, n.id);
    seen.clear();
    for (const Edge& e : spec.edges())
        if (!seen.insert(e.id).second) add(ViolationKind::DuplicateEdgeId, e.id);
    seen.clear();
    for (const Message& m : spec.messages())
        if (!seen.insert(m.id).second) add(ViolationKind::DuplicateMessageId, m.id);

    auto kind_of = [&](const std::string& id) -> std::optional<NodeKind> {
        auto idx = spec.node_index(id);
        if (!idx) return std::nullopt;
        return spec.nodes()[*idx].kind;
    };

    for (const Edge& e : spec.edges()) {
        auto tail = kind_of(e.tail);
        auto head = kind_of(e.head);
        if (!tail) add(ViolationKind::UnknownNode, e.id + ": tail " + e.tail);
        if (!head) add(ViolationKind::UnknownNode, e.id + ": head " + e.head);
        if (head && *head == NodeKind::Source) add(ViolationKind::SourceHasInEdge, e.id);
        if (tail && *tail == NodeKind::Terminal) add(ViolationKind::TerminalHasOutEdge, e.id);
    }

    for (const Message& m : spec.messages()) {
        auto k = kind_of(m.source);
        if (!k || *k != NodeKind::Source) add(ViolationKind::BadMessageSource, m.id);
    }

    for (const Demand& d : spec.demands()) {
        auto k = kind_of(d.terminal);
        if (!k || *k != NodeKind::Terminal)
            add(ViolationKind::BadDemand, d.terminal + " demands " + d.message);
        else if (!spec.message_index(d.message))
            add(ViolationKind::BadDemand, d.terminal + " demands unknown " + d.message);
    }

    // Kahn's algorithm over nodes; leftovers witness a cycle.
    std::map<std::string, std::size_t> indegree;
    for (const Node& n : spec.nodes()) indegree[n.id] = 0;
    for (const Edge& e : spec.edges())
        if (indegree.count(e.head) && indegree.count(e.tail)) ++indegree[e.head];
    std::deque<std::string> ready;
    for (const Node& n : spec.nodes())
        if (indegree[n.id] == 0) ready.push_back(n.id);
    std::size_t processed = 0;
    while (!ready.empty()) {
        std::string id = ready.front();
        ready.pop_front();
        ++processed;
        for (std::size_t ei : spec.out_edges(id)) {
            const std::string& head = spec.edges()[ei].head;
            auto it = indegree.find(head);
            if (it != indegree.end() && --it->second == 0) ready.push_back(head);
        }
    }
    if (processed != spec.nodes().size()) add(ViolationKind::CycleDetected, "edge relation is cyclic");

    return out;
}

void FractionalCode::set_local(const LocalKey& key, Matrix m) {
    locals_.insert_or_assign(key, std::move(m));
}

const Matrix* FractionalCode::local(const LocalKey& key) const {
    auto it = locals_.find(key);
    return it == locals_.end() ? nullptr : &it->second;
}

void FractionalCode::set_decoder(const std::string& terminal, const std::string& edge, Matrix m) {
    decoders_.insert_or_assign({terminal, edge}, std::move(m));
}

namespace {

// Node ids in topological order (spec order among ready nodes).
std::vector<std::string> topo_nodes(const NetworkSpec& spec) {
    std::map<std::string, std::size_t> indegree;
    for (const Node& n : spec.nodes()) indegree[n.id] = 0;
    for (const Edge& e : spec.edges()) ++indegree[e.head];
    std::vector<std::string> order;
    std::deque<std::string> ready;
    for (const Node& n : spec.nodes())
        if (indegree[n.id] == 0) ready.push_back(n.id);
    while (!ready.empty()) {
        std::string id = ready.front();
        ready.pop_front();
        order.push_back(id);
        for (std::size_t ei : spec.out_edges(id))
            if (--indegree[spec.edges()[ei].head] == 0) ready.push_back(spec.edges()[ei].head);
    }
    return order;
}

}  // namespace

std::map<std::string, Matrix> global_transfer(const NetworkSpec& spec, const FractionalCode& code) {
    const PrimeField& f = code.field();
    const std::size_t k = code.k(), n = code.n();
    const std::size_t width = k * spec.messages().size();

    auto check_local = [&](const Matrix& m, std::size_t rows, std::size_t cols,
                           const LocalKey& key) {
        if (!(m.field() == f))
            throw ShapeMismatch("local on edge " + key.edge + " is over a different field");
        if (m.rows() != rows || m.cols() != cols)
            throw ShapeMismatch("local on edge " + key.edge + " for input " + key.input +
                                " has wrong shape");
    };

    std::map<std::string, Matrix> transfer;
    for (const std::string& node_id : topo_nodes(spec)) {
        for (std::size_t ei : spec.out_edges(node_id)) {
            const Edge& e = spec.edges()[ei];
            Matrix g(f, n, width);
            for (std::size_t mi : spec.messages_at(node_id)) {
                LocalKey key{e.id, InputKind::Message, spec.messages()[mi].id};
                if (const Matrix* local = code.local(key)) {
                    check_local(*local, n, k, key);
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t c = 0; c < k; ++c)
                            g.set_residue(r, mi * k + c,
                                          f.add(g.at(r, mi * k + c), local->at(r, c)));
                }
            }
            for (std::size_t pe : spec.in_edges(node_id)) {
                const Edge& prev = spec.edges()[pe];
                LocalKey key{e.id, InputKind::Edge, prev.id};
                if (const Matrix* local = code.local(key)) {
                    check_local(*local, n, n, key);
                    auto it = transfer.find(prev.id);
                    if (it == transfer.end())
                        throw ShapeMismatch("edge " + prev.id + " has no transfer yet");
                    Matrix contrib = (*local) * it->second;
                    g = g + contrib;
                }
            }
            transfer.emplace(e.id, std::move(g));
        }
    }
    return transfer;
}

bool DecodeReport::all_satisfied() const {
    if (!errors.empty()) return false;
    if (demands.empty()) return true;
    return std::all_of(demands.begin(), demands.end(),
                       [](const DemandReport& d) { return d.satisfied; });
}

DecodeReport decode_check(const NetworkSpec& spec, const FractionalCode& code) {
    DecodeReport report;
    std::map<std::string, Matrix> transfer;
    try {
        transfer = global_transfer(spec, code);
    } catch (const ShapeMismatch& e) {
        report.errors.push_back(e.what());
        for (const Demand& d : spec.demands())
            report.demands.push_back({d.terminal, d.message, false, {}});
        return report;
    }

    const PrimeField& f = code.field();
    const std::size_t k = code.k(), n = code.n();
    const std::size_t width = k * spec.messages().size();

    for (const Demand& d : spec.demands()) {
        DemandReport dr{d.terminal, d.message, false, {}};
        auto mi = spec.message_index(d.message);
        std::vector<std::size_t> ins = spec.in_edges(d.terminal);
        bool transfers_known = std::all_of(ins.begin(), ins.end(), [&](std::size_t ei) {
            return transfer.count(spec.edges()[ei].id) > 0;
        });
        if (!transfers_known)
            report.errors.push_back("no transfer for an in-edge of " + d.terminal);
        if (mi && !ins.empty() && transfers_known) {
            Matrix stacked(f, 0, width);
            for (std::size_t ei : ins) stacked = vstack(stacked, transfer.at(spec.edges()[ei].id));
            Matrix selector(f, k, width);
            for (std::size_t c = 0; c < k; ++c) selector.set_residue(c, *mi * k + c, 1);
            if (auto solved = solve_left(stacked, selector)) {
                dr.satisfied = true;
                for (std::size_t i = 0; i < ins.size(); ++i)
                    dr.decoder.emplace(spec.edges()[ins[i]].id,
                                       solved->submatrix_cols(i * n, n));
            }
        }
        report.demands.push_back(std::move(dr));
    }
    return report;
}

bool verify_solution(const NetworkSpec& spec, const FractionalCode& code) {
    if (!validate(spec).empty()) return false;
    return decode_check(spec, code).all_satisfied();
}

}  // namespace charnet
