#include "charnet/solver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <deque>
#include <functional>
#include <ostream>
#include <set>
#include <thread>

namespace charnet {

const char* to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::Found: return "found";
        case SearchStatus::ExhaustedNone: return "exhausted-none";
        case SearchStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "unknown";
}

std::size_t count_free_coefficients(const NetworkSpec& spec, unsigned k, unsigned n) {
    // Edges with a single available input are normalized away: their local
    // can be folded into every consumer (or the solved decoder) without
    // changing solvability, so only edges whose tail mixes two or more
    // inputs carry free coefficients.
    std::size_t total = 0;
    for (const Edge& e : spec.edges()) {
        auto head = spec.node_index(e.head);
        if (head && spec.nodes()[*head].kind == NodeKind::Terminal) continue;
        std::size_t msgs = spec.messages_at(e.tail).size();
        std::size_t ins = spec.in_edges(e.tail).size();
        if (msgs + ins < 2) continue;
        total += msgs * (std::size_t)n * k + ins * (std::size_t)n * n;
    }
    return total;
}

namespace {

using Row = std::vector<std::uint32_t>;  // length M transfer row, k = n = 1

constexpr std::size_t npos = static_cast<std::size_t>(-1);

// Where a free edge's transfer row comes from after folding: a mutable row of
// its own (mixing edges), a fixed unit row (single message input), another
// edge's row (pass-through chain), or constant zero (no inputs).
struct RowRef {
    enum class Kind { Own, Unit, Zero } kind = Kind::Zero;
    std::size_t index = 0;  // own-row index or message index
};

// One enumerated coefficient: the scalar applied to `src` when accumulating
// the mixing edge's own row. Naming fields reconstruct the witness locals.
struct Slot {
    std::size_t own_row;
    RowRef src;
    std::size_t edge_index;  // spec edge this local sits on
    bool from_message;
    std::size_t input_id;    // message index or spec edge index
};

struct GroupEntry {
    RowRef src;
    bool from_message;
    std::size_t input_id;
};

// Decodability data for one terminal: each in-edge of the terminal carries
// one freely chosen combination of its group's rows (the terminal-incident
// local and the decoder are solved, never enumerated).
struct TerminalCheck {
    std::string terminal;
    std::vector<std::vector<GroupEntry>> groups;
    std::vector<std::size_t> demanded;  // message indices
};

struct SearchProblem {
    const NetworkSpec* spec = nullptr;
    PrimeField field{2};
    std::size_t width = 0;  // number of messages
    std::size_t num_own_rows = 0;
    std::vector<Slot> slots;
    std::vector<std::vector<std::size_t>> checks_at;  // slot depth -> check ids
    std::vector<std::size_t> prechecks;               // checks with empty cones
    std::vector<TerminalCheck> checks;
    // folded single-input non-terminal edges, for witness assembly
    struct FoldedLocal {
        std::size_t edge_index;
        bool from_message;
        std::size_t input_id;
    };
    std::vector<FoldedLocal> folded;
};

struct WorkerState {
    explicit WorkerState(const SearchProblem& p)
        : rows(p.num_own_rows, Row(p.width, 0)), values(p.slots.size(), 0) {}
    std::vector<Row> rows;
    std::vector<std::uint32_t> values;
};

void add_scaled_ref(const SearchProblem& p, const WorkerState& st, Row& target, const RowRef& src,
                    std::uint32_t c) {
    if (c == 0) return;
    switch (src.kind) {
        case RowRef::Kind::Zero: return;
        case RowRef::Kind::Unit:
            target[src.index] = p.field.add(target[src.index], c);
            return;
        case RowRef::Kind::Own: {
            const Row& r = st.rows[src.index];
            for (std::size_t i = 0; i < p.width; ++i)
                target[i] = p.field.add(target[i], p.field.mul(c, r[i]));
            return;
        }
    }
}

void apply_slot(const SearchProblem& p, WorkerState& st, std::size_t depth, std::uint32_t val,
                bool undo) {
    const Slot& s = p.slots[depth];
    add_scaled_ref(p, st, st.rows[s.own_row], s.src, undo ? p.field.neg(val) : val);
}

Row ref_row(const SearchProblem& p, const WorkerState& st, const RowRef& src) {
    Row r(p.width, 0);
    add_scaled_ref(p, st, r, src, 1);
    return r;
}

// Tiny incremental row-space over F_p.
class RowSpan {
  public:
    RowSpan(const PrimeField& f, std::size_t width) : f_(f), width_(width) {}

    void add(Row r) {
        reduce_(r);
        if (leading_(r) == npos) return;
        normalize_(r);
        basis_.push_back(std::move(r));
    }
    bool contains(Row r) const {
        reduce_(r);
        return leading_(r) == npos;
    }
    std::size_t rank() const { return basis_.size(); }

  private:
    void reduce_(Row& r) const {
        for (const Row& b : basis_) {
            std::size_t lead = leading_(b);
            std::uint32_t c = r[lead];
            if (c == 0) continue;
            for (std::size_t i = 0; i < width_; ++i) r[i] = f_.sub(r[i], f_.mul(c, b[i]));
        }
    }
    std::size_t leading_(const Row& r) const {
        for (std::size_t i = 0; i < width_; ++i)
            if (r[i] != 0) return i;
        return npos;
    }
    void normalize_(Row& r) const {
        std::uint32_t inv = f_.inv(r[leading_(r)]);
        if (inv == 1) return;
        for (auto& v : r) v = f_.mul(v, inv);
    }

    PrimeField f_;
    std::size_t width_;
    std::vector<Row> basis_;
};

SearchProblem build_problem(const NetworkSpec& spec, const PrimeField& field) {
    SearchProblem p;
    p.spec = &spec;
    p.field = field;
    p.width = spec.messages().size();

    auto node_kind = [&](const std::string& id) {
        return spec.nodes()[*spec.node_index(id)].kind;
    };

    // edges in topological order (node topological order, spec order within)
    std::map<std::string, std::size_t> indegree;
    for (const Node& n : spec.nodes()) indegree[n.id] = 0;
    for (const Edge& e : spec.edges()) ++indegree[e.head];
    std::deque<std::string> ready;
    std::vector<std::size_t> topo_edges;
    for (const Node& n : spec.nodes())
        if (indegree[n.id] == 0) ready.push_back(n.id);
    while (!ready.empty()) {
        std::string id = ready.front();
        ready.pop_front();
        for (std::size_t ei : spec.out_edges(id)) topo_edges.push_back(ei);
        for (std::size_t ei : spec.out_edges(id))
            if (--indegree[spec.edges()[ei].head] == 0) ready.push_back(spec.edges()[ei].head);
    }

    // fold single-input edges; give mixing edges a mutable row each
    std::vector<RowRef> row_of_edge(spec.edges().size());
    std::vector<bool> is_mixing(spec.edges().size(), false);
    std::vector<std::vector<Slot>> edge_slots(spec.edges().size());
    for (std::size_t ei : topo_edges) {
        const Edge& e = spec.edges()[ei];
        if (node_kind(e.head) == NodeKind::Terminal) continue;
        std::vector<std::size_t> msgs = spec.messages_at(e.tail);
        std::vector<std::size_t> ins = spec.in_edges(e.tail);
        std::size_t total = msgs.size() + ins.size();
        if (total == 0) {
            row_of_edge[ei] = {RowRef::Kind::Zero, 0};
        } else if (total == 1) {
            if (!msgs.empty()) {
                row_of_edge[ei] = {RowRef::Kind::Unit, msgs.front()};
                p.folded.push_back({ei, true, msgs.front()});
            } else {
                row_of_edge[ei] = row_of_edge[ins.front()];
                p.folded.push_back({ei, false, ins.front()});
            }
        } else {
            std::size_t own = p.num_own_rows++;
            row_of_edge[ei] = {RowRef::Kind::Own, own};
            is_mixing[ei] = true;
            for (std::size_t mi : msgs)
                edge_slots[ei].push_back({own, {RowRef::Kind::Unit, mi}, ei, true, mi});
            for (std::size_t in : ins)
                edge_slots[ei].push_back({own, row_of_edge[in], ei, false, in});
        }
    }

    // terminal cones over mixing edges only
    std::vector<std::string> terminals;
    std::vector<std::set<std::size_t>> cones;  // mixing spec-edge indices
    for (const Node& n : spec.nodes()) {
        if (n.kind != NodeKind::Terminal) continue;
        bool has_demand = std::any_of(spec.demands().begin(), spec.demands().end(),
                                      [&](const Demand& d) { return d.terminal == n.id; });
        if (!has_demand) continue;
        terminals.push_back(n.id);
        std::set<std::string> reach{n.id};
        std::deque<std::string> work{n.id};
        while (!work.empty()) {
            std::string cur = work.front();
            work.pop_front();
            for (std::size_t ei : spec.in_edges(cur))
                if (reach.insert(spec.edges()[ei].tail).second)
                    work.push_back(spec.edges()[ei].tail);
        }
        std::set<std::size_t> cone;
        for (std::size_t ei : topo_edges)
            if (is_mixing[ei] && reach.count(spec.edges()[ei].head)) cone.insert(ei);
        cones.push_back(std::move(cone));
    }

    // cheap terminals first, so their prune point sits shallow in the tree
    std::vector<std::size_t> term_order(terminals.size());
    for (std::size_t i = 0; i < term_order.size(); ++i) term_order[i] = i;
    auto cone_weight = [&](std::size_t t) {
        std::size_t w = 0;
        for (std::size_t ei : cones[t]) w += edge_slots[ei].size();
        return w;
    };
    std::stable_sort(term_order.begin(), term_order.end(),
                     [&](std::size_t a, std::size_t b) { return cone_weight(a) < cone_weight(b); });

    std::vector<std::size_t> topo_pos(spec.edges().size(), 0);
    for (std::size_t i = 0; i < topo_edges.size(); ++i) topo_pos[topo_edges[i]] = i;

    std::vector<bool> placed(spec.edges().size(), false);
    std::vector<std::size_t> last_slot_of_edge(spec.edges().size(), npos);
    auto place_cone = [&](const std::set<std::size_t>& cone) {
        std::vector<std::size_t> order(cone.begin(), cone.end());
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return topo_pos[a] < topo_pos[b]; });
        for (std::size_t ei : order) {
            if (placed[ei]) continue;
            placed[ei] = true;
            for (const Slot& s : edge_slots[ei]) p.slots.push_back(s);
            last_slot_of_edge[ei] = p.slots.size() - 1;
        }
    };
    for (std::size_t t : term_order) place_cone(cones[t]);
    {
        // mixing edges feeding no terminal still get enumerated, last
        std::set<std::size_t> rest;
        for (std::size_t ei : topo_edges)
            if (is_mixing[ei] && !placed[ei]) rest.insert(ei);
        place_cone(rest);
    }
    // the check point of a terminal is the last slot of its cone
    std::vector<std::size_t> completion_depth(terminals.size(), npos);
    for (std::size_t t = 0; t < terminals.size(); ++t)
        for (std::size_t ei : cones[t]) {
            if (completion_depth[t] == npos || last_slot_of_edge[ei] > completion_depth[t])
                completion_depth[t] = last_slot_of_edge[ei];
        }

    p.checks_at.assign(p.slots.size(), {});
    for (std::size_t t = 0; t < terminals.size(); ++t) {
        TerminalCheck check;
        check.terminal = terminals[t];
        for (const Demand& d : spec.demands())
            if (d.terminal == terminals[t])
                check.demanded.push_back(*spec.message_index(d.message));
        for (std::size_t tei : spec.in_edges(terminals[t])) {
            const Edge& te = spec.edges()[tei];
            std::vector<GroupEntry> group;
            for (std::size_t mi : spec.messages_at(te.tail))
                group.push_back({{RowRef::Kind::Unit, mi}, true, mi});
            for (std::size_t in : spec.in_edges(te.tail))
                group.push_back({row_of_edge[in], false, in});
            check.groups.push_back(std::move(group));
        }
        std::size_t id = p.checks.size();
        p.checks.push_back(std::move(check));
        if (completion_depth[t] == npos)
            p.prechecks.push_back(id);
        else
            p.checks_at[completion_depth[t]].push_back(id);
    }
    return p;
}

// Exact decodability of one terminal once the rows feeding it are final.
// Necessary rank filter first; single-in-edge terminals are decided by it,
// multi-in-edge terminals get an exact transversal search (one row chosen
// per in-edge, all demanded selectors inside the joint span).
bool terminal_feasible(const SearchProblem& p, const WorkerState& st, const TerminalCheck& check,
                       std::vector<Row>* chosen_out = nullptr) {
    const PrimeField& f = p.field;
    RowSpan all(f, p.width);
    for (const auto& group : check.groups)
        for (const GroupEntry& g : group) all.add(ref_row(p, st, g.src));
    for (std::size_t mi : check.demanded) {
        Row sel(p.width, 0);
        sel[mi] = 1;
        if (!all.contains(sel)) return false;
    }

    RowSpan demand_span(f, p.width);
    for (std::size_t mi : check.demanded) {
        Row sel(p.width, 0);
        sel[mi] = 1;
        demand_span.add(std::move(sel));
    }
    std::size_t need = demand_span.rank();

    if (check.groups.size() == 1) {
        if (need > 1) return false;  // one in-edge carries one dimension
        if (chosen_out) {
            Row pick(p.width, 0);
            if (!check.demanded.empty()) pick[check.demanded.front()] = 1;
            chosen_out->push_back(std::move(pick));
        }
        return true;
    }

    // independent basis per group
    std::vector<std::vector<Row>> bases;
    for (const auto& group : check.groups) {
        RowSpan span(f, p.width);
        std::vector<Row> basis;
        for (const GroupEntry& g : group) {
            Row r = ref_row(p, st, g.src);
            std::size_t before = span.rank();
            span.add(r);
            if (span.rank() > before) basis.push_back(std::move(r));
        }
        bases.push_back(std::move(basis));
    }

    std::uint64_t combos = 1;
    for (const auto& basis : bases) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            combos *= f.modulus();
            if (combos > (1u << 16))
                throw std::runtime_error("terminal " + check.terminal +
                                         " is too wide for exact decode feasibility");
        }
    }

    std::vector<Row> picks(check.groups.size(), Row(p.width, 0));
    std::vector<std::vector<std::uint32_t>> coeffs(check.groups.size());
    for (std::size_t g = 0; g < bases.size(); ++g) coeffs[g].assign(bases[g].size(), 0);
    auto rebuild = [&](std::size_t g) {
        std::fill(picks[g].begin(), picks[g].end(), 0);
        for (std::size_t i = 0; i < bases[g].size(); ++i)
            for (std::size_t c = 0; c < p.width; ++c)
                picks[g][c] = f.add(picks[g][c], f.mul(coeffs[g][i], bases[g][i][c]));
    };
    while (true) {
        RowSpan span(f, p.width);
        for (const Row& r : picks) span.add(r);
        bool ok = span.rank() >= need;
        if (ok)
            for (std::size_t mi : check.demanded) {
                Row sel(p.width, 0);
                sel[mi] = 1;
                if (!span.contains(sel)) {
                    ok = false;
                    break;
                }
            }
        if (ok) {
            if (chosen_out) *chosen_out = picks;
            return true;
        }
        std::size_t g = 0;
        while (g < bases.size()) {
            bool carried = true;
            for (std::size_t i = 0; i < coeffs[g].size(); ++i) {
                if (++coeffs[g][i] < f.modulus()) {
                    carried = false;
                    break;
                }
                coeffs[g][i] = 0;
            }
            rebuild(g);
            if (!carried) break;
            ++g;
        }
        if (g == bases.size()) return false;
    }
}

// Full FractionalCode for a complete assignment: enumerated locals, identity
// locals on the folded pass-throughs, solved terminal-edge locals, solved
// decoders.
FractionalCode build_witness(const SearchProblem& p, const WorkerState& st) {
    const NetworkSpec& spec = *p.spec;
    const PrimeField& f = p.field;
    FractionalCode code(1, 1, f);

    auto local_key = [&](std::size_t edge_index, bool from_message, std::size_t input_id) {
        const Edge& e = spec.edges()[edge_index];
        return from_message ? LocalKey{e.id, InputKind::Message, spec.messages()[input_id].id}
                            : LocalKey{e.id, InputKind::Edge, spec.edges()[input_id].id};
    };
    auto scalar = [&](std::uint32_t v) {
        Matrix m(f, 1, 1);
        m.set_residue(0, 0, v);
        return m;
    };

    for (std::size_t d = 0; d < p.slots.size(); ++d) {
        const Slot& s = p.slots[d];
        code.set_local(local_key(s.edge_index, s.from_message, s.input_id), scalar(st.values[d]));
    }
    for (const SearchProblem::FoldedLocal& fl : p.folded)
        code.set_local(local_key(fl.edge_index, fl.from_message, fl.input_id), scalar(1));

    for (const TerminalCheck& check : p.checks) {
        std::vector<Row> chosen;
        if (!terminal_feasible(p, st, check, &chosen)) continue;  // unreachable for solutions
        std::vector<std::size_t> tes = spec.in_edges(check.terminal);
        for (std::size_t j = 0; j < tes.size() && j < chosen.size(); ++j) {
            const auto& group = check.groups[j];
            Matrix stacked(f, group.size(), p.width);
            for (std::size_t gi = 0; gi < group.size(); ++gi) {
                Row r = ref_row(p, st, group[gi].src);
                for (std::size_t c = 0; c < p.width; ++c) stacked.set_residue(gi, c, r[c]);
            }
            Matrix target(f, 1, p.width);
            for (std::size_t c = 0; c < p.width; ++c) target.set_residue(0, c, chosen[j][c]);
            auto solved = solve_left(stacked, target);
            if (!solved) continue;  // unreachable: the row was picked inside the span
            for (std::size_t gi = 0; gi < group.size(); ++gi)
                code.set_local(local_key(tes[j], group[gi].from_message, group[gi].input_id),
                               scalar(solved->at(0, gi)));
        }
    }

    DecodeReport report = decode_check(spec, code);
    for (const DemandReport& dr : report.demands)
        for (const auto& [edge, dec] : dr.decoder) code.set_decoder(dr.terminal, edge, dec);
    return code;
}

struct DfsResult {
    std::uint64_t nodes = 0;
    std::uint64_t nodes_at_witness = 0;
    std::optional<FractionalCode> witness;
    std::vector<std::uint64_t> solution_positions;
    bool budget_hit = false;
    std::uint64_t prunes = 0;
};

struct ProgressMeter {
    std::ostream* out = nullptr;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();
    std::chrono::steady_clock::time_point last = started;
    void tick(std::uint64_t nodes, std::uint64_t prunes, std::uint64_t checks) {
        if (!out) return;
        auto now = std::chrono::steady_clock::now();
        if (now - last < std::chrono::seconds(1)) return;
        last = now;
        double secs = std::chrono::duration<double>(now - started).count();
        double rate = secs > 0 ? static_cast<double>(nodes) / secs : 0.0;
        double pruned =
            checks > 0 ? static_cast<double>(prunes) / static_cast<double>(checks) : 0.0;
        (*out) << "search: " << nodes << " assignments, " << static_cast<std::uint64_t>(rate)
               << "/s, pruned fraction " << pruned << "\n";
    }
};

class Dfs {
  public:
    Dfs(const SearchProblem& p, const SearchBudget& budget, const SearchOptions& opts,
        std::atomic<std::size_t>* abort_above, std::size_t my_rank)
        : p_(p),
          budget_(budget),
          opts_(opts),
          state_(p),
          abort_above_(abort_above),
          my_rank_(my_rank) {}

    // Explores the subtree below `depth`; the prefix is already applied to
    // state_. Returns false when the caller should unwind (first witness
    // found, budget gone, or externally aborted).
    bool run(std::size_t depth) {
        if (depth == p_.slots.size()) {
            handle_leaf();
            return !(budget_.mode == SearchMode::FirstSolution && result_.witness);
        }
        for (std::uint32_t val = 0; val < p_.field.modulus(); ++val) {
            if (aborted()) return false;
            ++result_.nodes;
            if (result_.nodes > budget_.max_assignments) {
                result_.budget_hit = true;
                return false;
            }
            meter_.tick(result_.nodes, result_.prunes, checks_run_);
            apply_slot(p_, state_, depth, val, false);
            state_.values[depth] = val;
            bool feasible = true;
            if (opts_.prune) {
                for (std::size_t ci : p_.checks_at[depth]) {
                    ++checks_run_;
                    if (!terminal_feasible(p_, state_, p_.checks[ci])) {
                        feasible = false;
                        ++result_.prunes;
                        break;
                    }
                }
            }
            bool keep_going = true;
            if (feasible) keep_going = run(depth + 1);
            apply_slot(p_, state_, depth, val, true);
            if (!keep_going) return false;
        }
        return true;
    }

    WorkerState& state() { return state_; }
    DfsResult& result() { return result_; }
    ProgressMeter& meter() { return meter_; }

  private:
    bool aborted() const {
        return abort_above_ && abort_above_->load(std::memory_order_relaxed) < my_rank_;
    }

    void handle_leaf() {
        if (!opts_.prune) {
            for (const TerminalCheck& c : p_.checks)
                if (!terminal_feasible(p_, state_, c)) return;
        }
        // with pruning on, every terminal was validated at its completion depth
        result_.solution_positions.push_back(result_.nodes);
        if (!result_.witness) {
            FractionalCode witness = build_witness(p_, state_);
            if (!verify_solution(*p_.spec, witness))
                throw std::logic_error("search produced a witness that fails verification");
            result_.witness = std::move(witness);
            result_.nodes_at_witness = result_.nodes;
        }
    }

    const SearchProblem& p_;
    SearchBudget budget_;
    SearchOptions opts_;
    WorkerState state_;
    DfsResult result_;
    ProgressMeter meter_;
    std::uint64_t checks_run_ = 0;
    std::atomic<std::size_t>* abort_above_;
    std::size_t my_rank_;
};

// CountAll runs that hit the budget report BudgetExceeded: the count is only
// a lower bound then, though a witness found before the line is still
// attached. FirstSolution stops at its witness, so the two flags never
// compete there.
SearchOutcome merge_sequential(DfsResult&& r, const SearchBudget& budget) {
    SearchOutcome out;
    out.enumerated = std::min<std::uint64_t>(r.nodes, budget.max_assignments);
    out.solutions = r.solution_positions.size();
    out.witness = std::move(r.witness);
    if (r.budget_hit) {
        out.status = SearchStatus::BudgetExceeded;
    } else if (out.witness) {
        out.status = SearchStatus::Found;
        if (budget.mode == SearchMode::FirstSolution) out.enumerated = r.nodes_at_witness;
    } else {
        out.status = SearchStatus::ExhaustedNone;
    }
    return out;
}

}  // namespace

SearchOutcome search_scalar(const NetworkSpec& spec, const PrimeField& field,
                            const SearchBudget& budget, const SearchOptions& options) {
    if (!validate(spec).empty())
        throw std::invalid_argument("search_scalar requires a well-formed network");

    SearchProblem p = build_problem(spec, field);

    // terminals whose feasibility depends on no coefficient at all
    for (std::size_t ci : p.prechecks) {
        WorkerState empty(p);
        if (!terminal_feasible(p, empty, p.checks[ci]))
            return {SearchStatus::ExhaustedNone, std::nullopt, 0, 0};
    }

    unsigned threads = std::max(1u, options.threads);
    std::size_t nslots = p.slots.size();

    if (threads == 1 || nslots == 0) {
        Dfs dfs(p, budget, options, nullptr, 0);
        dfs.meter().out = options.progress;
        dfs.run(0);
        return merge_sequential(std::move(dfs.result()), budget);
    }

    // Parallel mode: walk a short shared prefix sequentially (checks and
    // counting exactly as a single-threaded run), hand surviving prefixes to
    // workers, then merge in lexicographic order. Outcome, witness and
    // enumerated count match threads == 1 bit for bit.
    std::size_t prefix_depth = 0;
    std::uint64_t fanout = 1;
    while (prefix_depth < nslots && fanout < 4ull * threads) {
        fanout *= field.modulus();
        ++prefix_depth;
    }

    struct PrefixTask {
        std::vector<std::uint32_t> values;
        std::uint64_t nodes_before = 0;  // prefix-tree nodes counted before entering
    };
    std::vector<PrefixTask> tasks;
    std::uint64_t walked = 0;
    bool walk_budget_hit = false;
    std::uint64_t walk_prunes = 0, walk_checks = 0;

    WorkerState walk_state(p);
    std::vector<std::uint32_t> prefix(prefix_depth, 0);
    std::function<void(std::size_t)> walk = [&](std::size_t depth) {
        if (walk_budget_hit) return;
        if (depth == prefix_depth) {
            tasks.push_back({prefix, walked});
            return;
        }
        for (std::uint32_t val = 0; val < field.modulus() && !walk_budget_hit; ++val) {
            ++walked;
            if (walked > budget.max_assignments) {
                walk_budget_hit = true;
                return;
            }
            apply_slot(p, walk_state, depth, val, false);
            walk_state.values[depth] = val;
            prefix[depth] = val;
            bool feasible = true;
            if (options.prune) {
                for (std::size_t ci : p.checks_at[depth]) {
                    ++walk_checks;
                    if (!terminal_feasible(p, walk_state, p.checks[ci])) {
                        feasible = false;
                        ++walk_prunes;
                        break;
                    }
                }
            }
            if (feasible) walk(depth + 1);
            apply_slot(p, walk_state, depth, val, true);
        }
    };
    walk(0);

    if (tasks.empty()) {
        SearchOutcome out;
        out.status = walk_budget_hit ? SearchStatus::BudgetExceeded : SearchStatus::ExhaustedNone;
        out.enumerated = std::min<std::uint64_t>(walked, budget.max_assignments);
        return out;
    }

    std::vector<DfsResult> results(tasks.size());
    std::atomic<std::size_t> next_task{0};
    std::atomic<std::size_t> abort_above{tasks.size()};

    auto worker = [&]() {
        while (true) {
            std::size_t ti = next_task.fetch_add(1);
            if (ti >= tasks.size()) return;
            if (abort_above.load() < ti) continue;
            Dfs dfs(p, budget, options, &abort_above, ti);
            for (std::size_t d = 0; d < prefix_depth; ++d) {
                apply_slot(p, dfs.state(), d, tasks[ti].values[d], false);
                dfs.state().values[d] = tasks[ti].values[d];
            }
            dfs.run(prefix_depth);
            if (budget.mode == SearchMode::FirstSolution && dfs.result().witness) {
                std::size_t cur = abort_above.load();
                while (cur > ti && !abort_above.compare_exchange_weak(cur, ti)) {
                }
            }
            results[ti] = std::move(dfs.result());
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    // A single-threaded run enters subtree ti with nodes_before plus the
    // sizes of all earlier subtrees on its counter; replay that accounting.
    SearchOutcome out;
    std::uint64_t subtree_sum = 0;
    for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
        DfsResult& r = results[ti];
        std::uint64_t entering = tasks[ti].nodes_before + subtree_sum;
        std::uint64_t room =
            budget.max_assignments > entering ? budget.max_assignments - entering : 0;
        std::uint64_t visible = 0;
        for (std::uint64_t pos : r.solution_positions)
            if (pos <= room) ++visible;
        out.solutions += visible;
        if (budget.mode == SearchMode::FirstSolution && r.witness && r.nodes_at_witness <= room) {
            out.status = SearchStatus::Found;
            out.witness = std::move(r.witness);
            out.enumerated = entering + r.nodes_at_witness;
            return out;
        }
        if (budget.mode == SearchMode::CountAll && visible > 0 && !out.witness)
            out.witness = std::move(r.witness);
        if (r.nodes > room || r.budget_hit) {
            out.status = SearchStatus::BudgetExceeded;
            out.enumerated = budget.max_assignments;
            return out;
        }
        subtree_sum += r.nodes;
    }
    if (walk_budget_hit) {
        out.status = SearchStatus::BudgetExceeded;
        out.enumerated = budget.max_assignments;
        return out;
    }
    out.enumerated = walked + subtree_sum;
    out.status = out.witness ? SearchStatus::Found : SearchStatus::ExhaustedNone;
    return out;
}

}  // namespace charnet
