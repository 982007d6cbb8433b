#include "charnet/codes.hpp"

namespace charnet {

namespace {

// n x 1 embedding of a unit message at component `idx` (1-based).
Matrix embed_column(const PrimeField& f, std::size_t n, std::size_t idx) {
    Matrix m(f, n, 1);
    m.set_residue(idx - 1, 0, 1);
    return m;
}

// 1 x n unit selector row at component `idx` (1-based).
Matrix selector_row(const PrimeField& f, std::size_t n, std::size_t idx) {
    Matrix m(f, 1, n);
    m.set_residue(0, idx - 1, 1);
    return m;
}

struct CodeBuilder {
    FractionalCode code;
    std::size_t n;

    CodeBuilder(const PrimeField& f, std::size_t n_) : code(1, static_cast<unsigned>(n_), f), n(n_) {}

    void source_local(const std::string& source, const std::string& head, std::size_t component) {
        code.set_local({ids::edge(source, head), InputKind::Message, source},
                       embed_column(code.field(), n, component));
    }
    void edge_local(const std::string& edge, const std::string& in_edge, std::int64_t scale) {
        Matrix m = Matrix::identity(code.field(), n).scaled(code.field().reduce(scale));
        code.set_local({edge, InputKind::Edge, in_edge}, std::move(m));
    }
    void decoder(const std::string& terminal, const std::string& in_edge, std::size_t component) {
        code.set_decoder(terminal, in_edge, selector_row(code.field(), n, component));
    }
};

void require_code_params(std::uint64_t q, std::size_t n) {
    if (q < 2) throw BadParams("q must be at least 2");
    if (n < 1) throw BadParams("n must be at least 1");
}

}  // namespace

FractionalCode explicit_n1_code(std::uint64_t q, std::size_t n, std::uint32_t p) {
    require_code_params(q, n);
    PrimeField field(p);
    CodeBuilder cb(field, n);

    // source embeddings: message component j lands at block position j
    for (std::size_t i = 1; i <= n; ++i) {
        cb.source_local(ids::a(i), ids::u(1), i);
        cb.source_local(ids::a(i), ids::u(11), i);
        cb.source_local(ids::c(i), ids::u(2), i);
        cb.source_local(ids::c(i), ids::u(6), i);
    }
    for (std::size_t i = 1; i < q; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            cb.source_local(ids::b(i, j), ids::u(1), j);
            cb.source_local(ids::b(i, j), ids::u(2), j);
            cb.source_local(ids::b(i, j), "w[" + std::to_string(i) + "]", j);
            for (std::size_t k = 1; k < q; ++k) {
                if (k == i) continue;
                cb.source_local(ids::b(i, j), ids::tail_of(ids::e(k)), j);
                cb.source_local(ids::b(i, j), "v[" + std::to_string(k) + "]", j);
            }
        }

    // Y(u1,u3) = sum a + sum b ; Y(u2,u4) = sum b + sum c
    for (std::size_t i = 1; i <= n; ++i)
        cb.edge_local(ids::edge(ids::u(1), ids::u(3)), ids::edge(ids::a(i), ids::u(1)), 1);
    for (std::size_t i = 1; i < q; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            cb.edge_local(ids::edge(ids::u(1), ids::u(3)), ids::edge(ids::b(i, j), ids::u(1)), 1);
            cb.edge_local(ids::edge(ids::u(2), ids::u(4)), ids::edge(ids::b(i, j), ids::u(2)), 1);
        }
    for (std::size_t i = 1; i <= n; ++i)
        cb.edge_local(ids::edge(ids::u(2), ids::u(4)), ids::edge(ids::c(i), ids::u(2)), 1);

    const std::string u13 = ids::edge(ids::u(1), ids::u(3));
    const std::string u24 = ids::edge(ids::u(2), ids::u(4));
    const std::string u35 = ids::edge(ids::u(3), ids::u(5));
    const std::string u36 = ids::edge(ids::u(3), ids::u(6));
    const std::string u45 = ids::edge(ids::u(4), ids::u(5));
    const std::string u57 = ids::edge(ids::u(5), ids::u(7));
    const std::string u68 = ids::edge(ids::u(6), ids::u(8));
    const std::string u79 = ids::edge(ids::u(7), ids::u(9));
    const std::string u7_11 = ids::edge(ids::u(7), ids::u(11));
    const std::string u89 = ids::edge(ids::u(8), ids::u(9));
    const std::string u8_13 = ids::edge(ids::u(8), ids::u(13));
    const std::string u9_10 = ids::edge(ids::u(9), ids::u(10));
    const std::string u11_12 = ids::edge(ids::u(11), ids::u(12));
    const std::string u13_14 = ids::edge(ids::u(13), ids::u(14));

    cb.edge_local(u35, u13, 1);
    cb.edge_local(u36, u13, 1);
    cb.edge_local(u45, u24, 1);
    // Y(u5,u7) = Y(u1,u3) - Y(u2,u4) = sum a - sum c
    cb.edge_local(u57, u35, 1);
    cb.edge_local(u57, u45, -1);
    // Y(u6,u8) = Y(u1,u3) - sum c
    cb.edge_local(u68, u36, 1);
    for (std::size_t i = 1; i <= n; ++i)
        cb.edge_local(u68, ids::edge(ids::c(i), ids::u(6)), -1);
    cb.edge_local(u79, u57, 1);
    cb.edge_local(u7_11, u57, 1);
    cb.edge_local(u89, u68, 1);
    cb.edge_local(u8_13, u68, 1);
    // Y(u9,u10) = Y(u6,u8) - Y(u5,u7) = sum b
    cb.edge_local(u9_10, u89, 1);
    cb.edge_local(u9_10, u79, -1);
    // Y(e_i) = Y(u2,u4) - sum_{j != i} b_j = b_i + sum c
    for (std::size_t i = 1; i < q; ++i) {
        cb.edge_local(ids::e(i), ids::edge(ids::u(4), ids::tail_of(ids::e(i))), 1);
        cb.edge_local(ids::edge(ids::u(4), ids::tail_of(ids::e(i))), u24, 1);
        for (std::size_t j = 1; j < q; ++j) {
            if (j == i) continue;
            for (std::size_t l = 1; l <= n; ++l)
                cb.edge_local(ids::e(i), ids::edge(ids::b(j, l), ids::tail_of(ids::e(i))), -1);
        }
    }
    // Y(u11,u12) = sum a - Y(u5,u7) = sum c
    for (std::size_t i = 1; i <= n; ++i)
        cb.edge_local(u11_12, ids::edge(ids::a(i), ids::u(11)), 1);
    cb.edge_local(u11_12, u7_11, -1);
    // Y(u13,u14) = Y(u6,u8) - sum_i Y(e_i) = sum a - q * sum c
    cb.edge_local(u13_14, u8_13, 1);
    for (std::size_t i = 1; i < q; ++i) {
        cb.edge_local(ids::edge(ids::head_of(ids::e(i)), ids::u(13)), ids::e(i), 1);
        cb.edge_local(u13_14, ids::edge(ids::head_of(ids::e(i)), ids::u(13)), -1);
    }
    // Y(v_i,vp_i) = Y(u9,u10) - sum_{k != i} b_k = b_i
    for (std::size_t i = 1; i < q; ++i) {
        std::string v = "v[" + std::to_string(i) + "]";
        std::string vp = "vp[" + std::to_string(i) + "]";
        cb.edge_local(ids::edge(ids::u(10), v), u9_10, 1);
        cb.edge_local(ids::edge(v, vp), ids::edge(ids::u(10), v), 1);
        for (std::size_t k = 1; k < q; ++k) {
            if (k == i) continue;
            for (std::size_t j = 1; j <= n; ++j)
                cb.edge_local(ids::edge(v, vp), ids::edge(ids::b(k, j), v), -1);
        }
    }
    // Y(w_i,wp_i) = Y(e_i) - b_i = sum c
    for (std::size_t i = 1; i < q; ++i) {
        std::string w = "w[" + std::to_string(i) + "]";
        std::string wp = "wp[" + std::to_string(i) + "]";
        cb.edge_local(ids::edge(ids::head_of(ids::e(i)), w), ids::e(i), 1);
        cb.edge_local(ids::edge(w, wp), ids::edge(ids::head_of(ids::e(i)), w), 1);
        for (std::size_t j = 1; j <= n; ++j)
            cb.edge_local(ids::edge(w, wp), ids::edge(ids::b(i, j), w), -1);
    }

    // terminal pass-through edges and unit-selector decoders
    for (std::size_t i = 1; i <= n; ++i) {
        std::string t = "Tc[" + std::to_string(i) + "]";
        cb.edge_local(ids::edge(ids::u(12), t), u11_12, 1);
        cb.decoder(t, ids::edge(ids::u(12), t), i);
    }
    for (std::size_t i = 1; i <= n; ++i) {
        std::string t = "Ta[" + std::to_string(i) + "]";
        cb.edge_local(ids::edge(ids::u(14), t), u13_14, 1);
        cb.decoder(t, ids::edge(ids::u(14), t), i);
    }
    for (std::size_t i = 1; i < q; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            std::string vp = "vp[" + std::to_string(i) + "]";
            std::string t = "Tb[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            cb.edge_local(ids::edge(vp, t), ids::edge("v[" + std::to_string(i) + "]", vp), 1);
            cb.decoder(t, ids::edge(vp, t), j);
        }
    for (std::size_t i = 1; i < q; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            std::string wp = "wp[" + std::to_string(i) + "]";
            std::string t = "Tci[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            cb.edge_local(ids::edge(wp, t), ids::edge("w[" + std::to_string(i) + "]", wp), 1);
            cb.decoder(t, ids::edge(wp, t), j);
        }

    return cb.code;
}

FractionalCode explicit_n2_code(std::uint64_t q, std::size_t n, std::uint32_t p) {
    require_code_params(q, n);
    PrimeField field(p);
    if (char_divides(field, q)) throw CharDividesQ(p, q);
    const std::int64_t q_inv = field.inv(field.reduce(static_cast<std::int64_t>(q % p)));

    CodeBuilder cb(field, n);
    const std::string ea = "e_a", eb = "e_b", epa = "ep_a", epb = "ep_b";

    for (std::size_t j = 1; j <= n; ++j) cb.source_local(ids::a(j), ids::tail_of(ea), j);
    for (std::size_t i = 1; i <= q; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            cb.source_local(ids::b(i, j), ids::tail_of(ea), j);
            cb.source_local(ids::b(i, j), ids::tail_of(eb), j);
        }
    for (std::size_t i = 1; i <= q; ++i) {
        for (std::size_t j = 1; j <= n; ++j) cb.source_local(ids::a(j), ids::tail_of(ids::e(i)), j);
        for (std::size_t kk = 1; kk <= q; ++kk) {
            if (kk == i) continue;
            for (std::size_t j = 1; j <= n; ++j)
                cb.source_local(ids::b(kk, j), ids::tail_of(ids::e(i)), j);
        }
    }

    // bottleneck sums: Y(e_a) = sum a + sum b, Y(e_i) = sum a + sum_{k != i} b_k,
    // Y(e_b) = sum b
    for (std::size_t j = 1; j <= n; ++j)
        cb.edge_local(ea, ids::edge(ids::a(j), ids::tail_of(ea)), 1);
    for (std::size_t i = 1; i <= q; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            cb.edge_local(ea, ids::edge(ids::b(i, j), ids::tail_of(ea)), 1);
            cb.edge_local(eb, ids::edge(ids::b(i, j), ids::tail_of(eb)), 1);
        }
    for (std::size_t i = 1; i <= q; ++i) {
        for (std::size_t j = 1; j <= n; ++j)
            cb.edge_local(ids::e(i), ids::edge(ids::a(j), ids::tail_of(ids::e(i))), 1);
        for (std::size_t kk = 1; kk <= q; ++kk) {
            if (kk == i) continue;
            for (std::size_t j = 1; j <= n; ++j)
                cb.edge_local(ids::e(i), ids::edge(ids::b(kk, j), ids::tail_of(ids::e(i))), 1);
        }
    }

    // pass-throughs between bottleneck stages
    cb.edge_local(ids::edge(ids::head_of(ea), ids::tail_of(epa)), ea, 1);
    cb.edge_local(ids::edge(ids::head_of(eb), ids::tail_of(epa)), eb, 1);
    cb.edge_local(ids::edge(ids::head_of(eb), ids::tail_of(epb)), eb, 1);
    for (std::size_t i = 1; i <= q; ++i) {
        cb.edge_local(ids::edge(ids::head_of(ids::e(i)), ids::tail_of(ids::ep(i))), ids::e(i), 1);
        cb.edge_local(ids::edge(ids::head_of(ea), ids::tail_of(ids::ep(i))), ea, 1);
        cb.edge_local(ids::edge(ids::head_of(ids::e(i)), ids::tail_of(epb)), ids::e(i), 1);
    }

    // Y(ep_a) = Y(e_a) - Y(e_b) = sum a
    cb.edge_local(epa, ids::edge(ids::head_of(ea), ids::tail_of(epa)), 1);
    cb.edge_local(epa, ids::edge(ids::head_of(eb), ids::tail_of(epa)), -1);
    // Y(ep_i) = Y(e_a) - Y(e_i) = b_i
    for (std::size_t i = 1; i <= q; ++i) {
        cb.edge_local(ids::ep(i), ids::edge(ids::head_of(ea), ids::tail_of(ids::ep(i))), 1);
        cb.edge_local(ids::ep(i), ids::edge(ids::head_of(ids::e(i)), ids::tail_of(ids::ep(i))), -1);
    }
    // Y(ep_b) = (1/q) * { sum_i Y(e_i) - (q-1) Y(e_b) } = sum a
    for (std::size_t i = 1; i <= q; ++i)
        cb.edge_local(epb, ids::edge(ids::head_of(ids::e(i)), ids::tail_of(epb)), q_inv);
    cb.edge_local(epb, ids::edge(ids::head_of(eb), ids::tail_of(epb)),
                  -static_cast<std::int64_t>(field.reduce(static_cast<std::int64_t>((q - 1) % p))) *
                      q_inv);

    for (std::size_t i = 1; i <= n; ++i) {
        std::string t = "Ta1[" + std::to_string(i) + "]";
        cb.edge_local(ids::edge(ids::head_of(epa), t), epa, 1);
        cb.decoder(t, ids::edge(ids::head_of(epa), t), i);
    }
    for (std::size_t i = 1; i <= n; ++i) {
        std::string t = "Ta2[" + std::to_string(i) + "]";
        cb.edge_local(ids::edge(ids::head_of(epb), t), epb, 1);
        cb.decoder(t, ids::edge(ids::head_of(epb), t), i);
    }
    for (std::size_t i = 1; i <= q; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            std::string t = "Tb[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            cb.edge_local(ids::edge(ids::head_of(ids::ep(i)), t), ids::ep(i), 1);
            cb.decoder(t, ids::edge(ids::head_of(ids::ep(i)), t), j);
        }

    return cb.code;
}

FractionalCode lift_joined_code(const NetworkSpec& base_spec, const FractionalCode& base_code,
                                std::size_t k) {
    if (k < 1) throw BadParams("k must be at least 1");
    if (base_code.k() != 1)
        throw ShapeMismatch("lift_joined_code expects a (1,n) base code, got k = " +
                            std::to_string(base_code.k()));
    const PrimeField& f = base_code.field();
    const std::size_t n = base_code.n();
    FractionalCode lifted(static_cast<unsigned>(k), static_cast<unsigned>(n), f);

    for (const auto& [key, local] : base_code.locals()) {
        if (!base_spec.edge_index(key.edge))
            throw ShapeMismatch("base code uses unknown edge " + key.edge);
        for (std::size_t i = 0; i < k; ++i) {
            LocalKey lk{ids::copy(key.edge, i), key.kind, key.input};
            if (key.kind == InputKind::Message) {
                if (local.rows() != n || local.cols() != 1)
                    throw ShapeMismatch("base source local on " + key.edge + " is not n x 1");
                // n x k: base column placed at component i
                Matrix m(f, n, k);
                for (std::size_t r = 0; r < n; ++r) m.set_residue(r, i, local.at(r, 0));
                lifted.set_local(lk, std::move(m));
            } else {
                lk.input = ids::copy(key.input, i);
                lifted.set_local(lk, local);
            }
        }
    }

    for (const auto& [te, dec] : base_code.decoders()) {
        if (dec.rows() != 1 || dec.cols() != n)
            throw ShapeMismatch("base decoder at " + te.first + " is not 1 x n");
        for (std::size_t i = 0; i < k; ++i) {
            Matrix m(f, k, n);
            for (std::size_t c = 0; c < n; ++c) m.set_residue(i, c, dec.at(0, c));
            lifted.set_decoder(te.first, ids::copy(te.second, i), std::move(m));
        }
    }

    return lifted;
}

}  // namespace charnet
