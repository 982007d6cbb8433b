#pragma once

#include "charnet/families.hpp"
#include "charnet/netmodel.hpp"

namespace charnet {

struct CharDividesQ : std::invalid_argument {
    explicit CharDividesQ(std::uint32_t p, std::uint64_t q)
        : std::invalid_argument("characteristic " + std::to_string(p) + " divides q = " +
                                std::to_string(q) + "; q has no inverse") {}
};

/// The explicit (1,n) code for gen_n1_prime(q,n) over F_p: source matrices
/// embed message j at component j, intermediate locals are +-identity, and
/// decoders are unit selectors. Verifies as a solution exactly when the
/// characteristic divides q (the residual q*c term cancels).
FractionalCode explicit_n1_code(std::uint64_t q, std::size_t n, std::uint32_t p);

/// The explicit (1,n) code for gen_n2_prime(q,n) over F_p. Needs 1/q, so it
/// refuses fields whose characteristic divides q.
FractionalCode explicit_n2_code(std::uint64_t q, std::size_t n, std::uint32_t p);

/// Lifts a (1,n) code of `base_spec` to a (k,n) code of
/// join_copies(base_spec, k): copy i routes component i of every source
/// through its own copy, interior locals are reused verbatim, and decoders
/// reassemble the k components.
FractionalCode lift_joined_code(const NetworkSpec& base_spec, const FractionalCode& base_code,
                                std::size_t k);

}  // namespace charnet
