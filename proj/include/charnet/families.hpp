#pragma once

#include <cstdint>
#include <string>

#include "charnet/netmodel.hpp"

namespace charnet {

struct BadParams : std::invalid_argument {
    explicit BadParams(const std::string& what) : std::invalid_argument(what) {}
};

/// Deterministic id scheme shared by the generators and the explicit-code
/// builders. Indices are 1-based, matching the construction write-up.
namespace ids {
inline std::string a(std::size_t i) { return "a[" + std::to_string(i) + "]"; }
inline std::string b(std::size_t i, std::size_t j) {
    return "b[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}
inline std::string c(std::size_t i) { return "c[" + std::to_string(i) + "]"; }
inline std::string u(std::size_t i) { return "u[" + std::to_string(i) + "]"; }
inline std::string e(std::size_t i) { return "e[" + std::to_string(i) + "]"; }
inline std::string ep(std::size_t i) { return "ep[" + std::to_string(i) + "]"; }
inline std::string tail_of(const std::string& edge) { return edge + ".tail"; }
inline std::string head_of(const std::string& edge) { return edge + ".head"; }
inline std::string edge(const std::string& tail, const std::string& head) {
    return tail + "->" + head;
}
inline std::string copy(const std::string& base, std::size_t i) {
    return base + "#copy" + std::to_string(i);
}
}  // namespace ids

/// The finite-set network: rate-1/n solvable iff the field characteristic
/// divides q. Sources a[1..n], b[i][1..n] (i < q), c[1..n]; 2q terminal
/// groups of size n.
NetworkSpec gen_n1_prime(std::uint64_t q, std::size_t n);

/// The co-finite-set network: rate-1/n solvable iff the characteristic does
/// not divide q. Sources a[1..n], b[i][1..n] (i <= q); q+2 terminal groups.
NetworkSpec gen_n2_prime(std::uint64_t q, std::size_t n);

/// k disjoint copies with corresponding sources and terminals merged.
/// Interior node and edge ids gain a "#copy<i>" suffix; messages and demands
/// stay those of the base.
NetworkSpec join_copies(const NetworkSpec& base, std::size_t k);

/// Two-source, two-terminal butterfly fixture: a hub fans both messages to
/// per-terminal side relays and a center mixer, whose single out-edge
/// ctr->fan is the bottleneck shared by both terminals. Both terminals
/// demand both messages.
NetworkSpec gen_butterfly();

}  // namespace charnet
