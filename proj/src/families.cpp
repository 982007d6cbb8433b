#include "charnet/families.hpp"

#include <set>

namespace charnet {

namespace {

void require_family_params(std::uint64_t q, std::size_t n) {
    if (q < 2) throw BadParams("q must be at least 2");
    if (n < 1) throw BadParams("n must be at least 1");
}

struct SpecBuilder {
    std::vector<Node> nodes;
    std::vector<Message> messages;
    std::vector<Edge> edges;
    std::vector<Demand> demands;

    void source(const std::string& id) {
        nodes.push_back({id, NodeKind::Source});
        messages.push_back({id, id});  // source node named by the message it generates
    }
    void inner(const std::string& id) { nodes.push_back({id, NodeKind::Intermediate}); }
    void terminal(const std::string& id) { nodes.push_back({id, NodeKind::Terminal}); }
    void edge(const std::string& tail, const std::string& head) {
        edges.push_back({ids::edge(tail, head), tail, head});
    }
    void named_edge(const std::string& id) {
        edges.push_back({id, ids::tail_of(id), ids::head_of(id)});
    }
    void demand(const std::string& terminal, const std::string& message) {
        demands.push_back({terminal, message});
    }
    NetworkSpec build() {
        return NetworkSpec(std::move(nodes), std::move(messages), std::move(edges),
                           std::move(demands));
    }
};

}  // namespace

NetworkSpec gen_n1_prime(std::uint64_t q, std::size_t n) {
    require_family_params(q, n);
    SpecBuilder b;

    // q+1 source groups of size n
    for (std::size_t i = 1; i <= n; ++i) b.source(ids::a(i));
    for (std::size_t i = 1; i < q; ++i)
        for (std::size_t j = 1; j <= n; ++j) b.source(ids::b(i, j));
    for (std::size_t i = 1; i <= n; ++i) b.source(ids::c(i));

    for (std::size_t i = 1; i <= 14; ++i) b.inner(ids::u(i));
    for (std::size_t i = 1; i < q; ++i) {
        b.inner(ids::tail_of(ids::e(i)));
        b.inner(ids::head_of(ids::e(i)));
    }
    for (std::size_t i = 1; i < q; ++i) {
        b.inner("v[" + std::to_string(i) + "]");
        b.inner("vp[" + std::to_string(i) + "]");
    }
    for (std::size_t i = 1; i < q; ++i) {
        b.inner("w[" + std::to_string(i) + "]");
        b.inner("wp[" + std::to_string(i) + "]");
    }

    // 2q terminal groups of size n
    for (std::size_t i = 1; i <= n; ++i) b.terminal("Tc[" + std::to_string(i) + "]");
    for (std::size_t i = 1; i < q; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            b.terminal("Tb[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    for (std::size_t i = 1; i <= n; ++i) b.terminal("Ta[" + std::to_string(i) + "]");
    for (std::size_t i = 1; i < q; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            b.terminal("Tci[" + std::to_string(i) + "][" + std::to_string(j) + "]");

    // edges out of sources
    for (std::size_t i = 1; i <= n; ++i) b.edge(ids::a(i), ids::u(1));
    for (std::size_t i = 1; i < q; ++i)
        for (std::size_t j = 1; j <= n; ++j) b.edge(ids::b(i, j), ids::u(1));
    for (std::size_t i = 1; i < q; ++i)
        for (std::size_t j = 1; j <= n; ++j) b.edge(ids::b(i, j), ids::u(2));
    for (std::size_t i = 1; i <= n; ++i) b.edge(ids::c(i), ids::u(2));
    for (std::size_t i = 1; i <= n; ++i) b.edge(ids::a(i), ids::u(11));
    for (std::size_t i = 1; i <= n; ++i) b.edge(ids::c(i), ids::u(6));
    for (std::size_t i = 1; i < q; ++i)
        for (std::size_t k = 1; k < q; ++k) {
            if (i == k) continue;
            for (std::size_t j = 1; j <= n; ++j) b.edge(ids::b(i, j), ids::tail_of(ids::e(k)));
        }
    for (std::size_t i = 1; i < q; ++i)
        for (std::size_t k = 1; k < q; ++k) {
            if (i == k) continue;
            for (std::size_t j = 1; j <= n; ++j) b.edge(ids::b(i, j), "v[" + std::to_string(k) + "]");
        }
    for (std::size_t i = 1; i < q; ++i)
        for (std::size_t j = 1; j <= n; ++j) b.edge(ids::b(i, j), "w[" + std::to_string(i) + "]");

    // edges between intermediate nodes
    for (std::size_t i : {1, 2, 3, 5, 6, 7}) b.edge(ids::u(i), ids::u(i + 2));
    for (std::size_t i : {4, 8, 9, 11, 13}) b.edge(ids::u(i), ids::u(i + 1));
    b.edge(ids::u(3), ids::u(6));
    b.edge(ids::u(7), ids::u(11));
    b.edge(ids::u(8), ids::u(13));
    for (std::size_t i = 1; i < q; ++i) b.named_edge(ids::e(i));
    for (std::size_t i = 1; i < q; ++i) b.edge(ids::u(4), ids::tail_of(ids::e(i)));
    for (std::size_t i = 1; i < q; ++i) {
        b.edge(ids::head_of(ids::e(i)), ids::u(13));
        b.edge(ids::head_of(ids::e(i)), "w[" + std::to_string(i) + "]");
    }
    for (std::size_t i = 1; i < q; ++i) {
        b.edge(ids::u(10), "v[" + std::to_string(i) + "]");
        b.edge("v[" + std::to_string(i) + "]", "vp[" + std::to_string(i) + "]");
    }
    for (std::size_t i = 1; i < q; ++i)
        b.edge("w[" + std::to_string(i) + "]", "wp[" + std::to_string(i) + "]");

    // terminal edges and demands
    for (std::size_t i = 1; i <= n; ++i) {
        std::string t = "Tc[" + std::to_string(i) + "]";
        b.edge(ids::u(12), t);
        b.demand(t, ids::c(i));
    }
    for (std::size_t i = 1; i < q; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            std::string t = "Tb[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            b.edge("vp[" + std::to_string(i) + "]", t);
            b.demand(t, ids::b(i, j));
        }
    for (std::size_t i = 1; i <= n; ++i) {
        std::string t = "Ta[" + std::to_string(i) + "]";
        b.edge(ids::u(14), t);
        b.demand(t, ids::a(i));
    }
    for (std::size_t i = 1; i < q; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            std::string t = "Tci[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            b.edge("wp[" + std::to_string(i) + "]", t);
            b.demand(t, ids::c(j));
        }

    return b.build();
}

NetworkSpec gen_n2_prime(std::uint64_t q, std::size_t n) {
    require_family_params(q, n);
    SpecBuilder b;

    for (std::size_t i = 1; i <= n; ++i) b.source(ids::a(i));
    for (std::size_t i = 1; i <= q; ++i)
        for (std::size_t j = 1; j <= n; ++j) b.source(ids::b(i, j));

    const std::string ea = "e_a", eb = "e_b", epa = "ep_a", epb = "ep_b";
    for (const std::string& e : {ea, eb, epa, epb}) {
        b.inner(ids::tail_of(e));
        b.inner(ids::head_of(e));
    }
    for (std::size_t i = 1; i <= q; ++i) {
        b.inner(ids::tail_of(ids::e(i)));
        b.inner(ids::head_of(ids::e(i)));
    }
    for (std::size_t i = 1; i <= q; ++i) {
        b.inner(ids::tail_of(ids::ep(i)));
        b.inner(ids::head_of(ids::ep(i)));
    }

    for (std::size_t i = 1; i <= n; ++i) b.terminal("Ta1[" + std::to_string(i) + "]");
    for (std::size_t i = 1; i <= n; ++i) b.terminal("Ta2[" + std::to_string(i) + "]");
    for (std::size_t i = 1; i <= q; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            b.terminal("Tb[" + std::to_string(i) + "][" + std::to_string(j) + "]");

    // the eight+2q named bottleneck edges
    b.named_edge(ea);
    b.named_edge(eb);
    b.named_edge(epa);
    b.named_edge(epb);
    for (std::size_t i = 1; i <= q; ++i) b.named_edge(ids::e(i));
    for (std::size_t i = 1; i <= q; ++i) b.named_edge(ids::ep(i));

    // sources into tail(e_a): all of them
    for (std::size_t i = 1; i <= n; ++i) b.edge(ids::a(i), ids::tail_of(ea));
    for (std::size_t i = 1; i <= q; ++i)
        for (std::size_t j = 1; j <= n; ++j) b.edge(ids::b(i, j), ids::tail_of(ea));
    // sources into tail(e_i): everything except the S_b_i group
    for (std::size_t i = 1; i <= q; ++i) {
        for (std::size_t j = 1; j <= n; ++j) b.edge(ids::a(j), ids::tail_of(ids::e(i)));
        for (std::size_t k = 1; k <= q; ++k) {
            if (k == i) continue;
            for (std::size_t j = 1; j <= n; ++j) b.edge(ids::b(k, j), ids::tail_of(ids::e(i)));
        }
    }
    // sources into tail(e_b): all b groups
    for (std::size_t i = 1; i <= q; ++i)
        for (std::size_t j = 1; j <= n; ++j) b.edge(ids::b(i, j), ids::tail_of(eb));

    b.edge(ids::head_of(ea), ids::tail_of(epa));
    b.edge(ids::head_of(eb), ids::tail_of(epa));
    b.edge(ids::head_of(eb), ids::tail_of(epb));
    for (std::size_t i = 1; i <= q; ++i) b.edge(ids::head_of(ids::e(i)), ids::tail_of(ids::ep(i)));
    for (std::size_t i = 1; i <= q; ++i) b.edge(ids::head_of(ea), ids::tail_of(ids::ep(i)));
    for (std::size_t i = 1; i <= q; ++i) b.edge(ids::head_of(ids::e(i)), ids::tail_of(epb));

    for (std::size_t i = 1; i <= n; ++i) {
        std::string t = "Ta1[" + std::to_string(i) + "]";
        b.edge(ids::head_of(epa), t);
        b.demand(t, ids::a(i));
    }
    for (std::size_t i = 1; i <= n; ++i) {
        std::string t = "Ta2[" + std::to_string(i) + "]";
        b.edge(ids::head_of(epb), t);
        b.demand(t, ids::a(i));
    }
    for (std::size_t i = 1; i <= q; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            std::string t = "Tb[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            b.edge(ids::head_of(ids::ep(i)), t);
            b.demand(t, ids::b(i, j));
        }

    return b.build();
}

NetworkSpec join_copies(const NetworkSpec& base, std::size_t k) {
    if (k < 1) throw BadParams("k must be at least 1");

    std::vector<Node> nodes;
    for (const Node& n : base.nodes()) {
        if (n.kind == NodeKind::Intermediate)
            for (std::size_t i = 0; i < k; ++i) nodes.push_back({ids::copy(n.id, i), n.kind});
        else
            nodes.push_back(n);
    }

    auto mapped = [&](const std::string& node_id, std::size_t i) {
        auto idx = base.node_index(node_id);
        if (idx && base.nodes()[*idx].kind == NodeKind::Intermediate)
            return ids::copy(node_id, i);
        return node_id;
    };

    std::vector<Edge> edges;
    for (const Edge& e : base.edges())
        for (std::size_t i = 0; i < k; ++i)
            edges.push_back({ids::copy(e.id, i), mapped(e.tail, i), mapped(e.head, i)});

    std::vector<Demand> demands = base.demands();
    std::set<std::pair<std::string, std::string>> seen;
    std::vector<Demand> unique;
    for (const Demand& d : demands)
        if (seen.insert({d.terminal, d.message}).second) unique.push_back(d);

    return NetworkSpec(std::move(nodes), base.messages(), std::move(edges), std::move(unique));
}

NetworkSpec gen_butterfly() {
    SpecBuilder b;
    b.nodes.push_back({"s[1]", NodeKind::Source});
    b.nodes.push_back({"s[2]", NodeKind::Source});
    b.messages.push_back({"m[1]", "s[1]"});
    b.messages.push_back({"m[2]", "s[2]"});
    for (const char* id : {"hub", "side[1]", "side[2]", "ctr", "fan"}) b.inner(id);
    b.terminal("t[1]");
    b.terminal("t[2]");

    b.edge("s[1]", "hub");
    b.edge("s[2]", "hub");
    b.edge("hub", "side[1]");
    b.edge("hub", "side[2]");
    b.edge("hub", "ctr");
    b.edge("s[1]", "ctr");
    b.edge("s[2]", "ctr");
    b.edge("ctr", "fan");  // the bottleneck: the one edge shared by both terminals
    b.edge("side[1]", "t[1]");
    b.edge("fan", "t[1]");
    b.edge("side[2]", "t[2]");
    b.edge("fan", "t[2]");

    b.demand("t[1]", "m[1]");
    b.demand("t[1]", "m[2]");
    b.demand("t[2]", "m[1]");
    b.demand("t[2]", "m[2]");
    return b.build();
}

}  // namespace charnet
