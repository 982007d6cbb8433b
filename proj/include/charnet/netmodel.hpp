#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "charnet/linalg.hpp"

namespace charnet {

struct ShapeMismatch : std::invalid_argument {
    explicit ShapeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

enum class NodeKind { Source, Intermediate, Terminal };

struct Node {
    std::string id;
    NodeKind kind;
    bool operator==(const Node&) const = default;
};

struct Message {
    std::string id;
    std::string source;  // generating source node
    bool operator==(const Message&) const = default;
};

struct Edge {
    std::string id;
    std::string tail;
    std::string head;
    bool operator==(const Edge&) const = default;
};

struct Demand {
    std::string terminal;
    std::string message;
    bool operator==(const Demand&) const = default;
};

/// Directed acyclic coding network: sources emit messages, terminals demand
/// them. Message order fixes the column-block order of transfer matrices.
class NetworkSpec {
  public:
    NetworkSpec() = default;
    NetworkSpec(std::vector<Node> nodes, std::vector<Message> messages, std::vector<Edge> edges,
                std::vector<Demand> demands);

    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Message>& messages() const { return messages_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Demand>& demands() const { return demands_; }

    std::optional<std::size_t> node_index(const std::string& id) const;
    std::optional<std::size_t> edge_index(const std::string& id) const;
    std::optional<std::size_t> message_index(const std::string& id) const;

    /// Edge indices with the given head/tail, in spec order.
    std::vector<std::size_t> in_edges(const std::string& node_id) const;
    std::vector<std::size_t> out_edges(const std::string& node_id) const;
    /// Message indices generated at the given source, in spec order.
    std::vector<std::size_t> messages_at(const std::string& source_id) const;

    std::size_t count_kind(NodeKind kind) const;

  private:
    std::vector<Node> nodes_;
    std::vector<Message> messages_;
    std::vector<Edge> edges_;
    std::vector<Demand> demands_;
    std::map<std::string, std::size_t> node_by_id_;
    std::map<std::string, std::size_t> edge_by_id_;
    std::map<std::string, std::size_t> message_by_id_;
};

enum class ViolationKind {
    DuplicateNodeId,
    DuplicateEdgeId,
    DuplicateMessageId,
    UnknownNode,
    SourceHasInEdge,
    TerminalHasOutEdge,
    BadMessageSource,
    BadDemand,
    CycleDetected,
};

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string detail;  // names the offending node/edge/message
};

/// Empty iff all NetworkSpec invariants hold. Violations are data, not errors.
std::vector<Violation> validate(const NetworkSpec& spec);

enum class InputKind { Message, Edge };

/// Key of one local coding matrix: the map applied to `input` when forming
/// the symbol on `edge`. Inputs are either messages generated at tail(edge)
/// (matrix n x k) or in-edges of tail(edge) (matrix n x n).
struct LocalKey {
    std::string edge;
    InputKind kind;
    std::string input;
    auto operator<=>(const LocalKey&) const = default;
};

/// (k,n) fractional linear code: local coding matrices plus optional terminal
/// decoders. Missing locals act as zero.
class FractionalCode {
  public:
    FractionalCode(unsigned k, unsigned n, const PrimeField& field)
        : k_(k), n_(n), field_(field) {}

    unsigned k() const { return k_; }
    unsigned n() const { return n_; }
    const PrimeField& field() const { return field_; }

    void set_local(const LocalKey& key, Matrix m);
    const Matrix* local(const LocalKey& key) const;
    const std::map<LocalKey, Matrix>& locals() const { return locals_; }

    void set_decoder(const std::string& terminal, const std::string& edge, Matrix m);
    const std::map<std::pair<std::string, std::string>, Matrix>& decoders() const {
        return decoders_;
    }

  private:
    unsigned k_, n_;
    PrimeField field_;
    std::map<LocalKey, Matrix> locals_;
    std::map<std::pair<std::string, std::string>, Matrix> decoders_;
};

/// Global transfer matrices: for every edge e an n x (k*M) matrix mapping the
/// concatenated source blocks (column blocks in message order) to the symbol
/// carried by e. Throws ShapeMismatch on malformed codes.
std::map<std::string, Matrix> global_transfer(const NetworkSpec& spec, const FractionalCode& code);

struct DemandReport {
    std::string terminal;
    std::string message;
    bool satisfied = false;
    /// Solved decoder, one k x n block per in-edge of the terminal.
    std::map<std::string, Matrix> decoder;
};

struct DecodeReport {
    std::vector<DemandReport> demands;
    std::vector<std::string> errors;  // shape problems etc., recorded not thrown
    bool all_satisfied() const;
};

/// Checks every demand by solving for terminal decoders against the stacked
/// in-edge transfers. Failures are data.
DecodeReport decode_check(const NetworkSpec& spec, const FractionalCode& code);

/// True iff validate(spec) is empty and every demand decodes.
bool verify_solution(const NetworkSpec& spec, const FractionalCode& code);

}  // namespace charnet
