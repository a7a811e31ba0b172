#include "sigma/cli.hpp"

#include "sigma/algebra.hpp"
#include "sigma/equations.hpp"
#include "sigma/errors.hpp"
#include "sigma/spaces.hpp"
#include "sigma/textio.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

namespace sigma::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::size_t table_base_guard = 5;
constexpr int loop_max_n_guard = 8;

/// Everything the output envelope needs besides the result payload.
struct Invocation {
    std::string command;
    ordered_json inputs = ordered_json::object();
    bool json = false;
    std::vector<std::string> diagnostics;
};

void emit_json(const Invocation& ctx, const ordered_json& result, std::ostream& out) {
    ordered_json envelope;
    envelope["command"] = ctx.command;
    envelope["inputs"] = ctx.inputs;
    envelope["result"] = result;
    envelope["diagnostics"] = ctx.diagnostics;
    out << envelope.dump(2) << "\n";
}

void flush_text_diagnostics(const Invocation& ctx, std::ostream& err) {
    for (const std::string& note : ctx.diagnostics) err << "note: " << note << "\n";
}

int exit_code_for(const Error& e) {
    if (dynamic_cast<const ParseError*>(&e)) return 1;
    if (dynamic_cast<const SizeLimitError*>(&e)) return 3;
    return 2;  // proper class, not entire, domain, not fusionable, other
}

std::string join_counts(const std::vector<int>& values) {
    if (values.empty()) return "none";
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(values[i]);
    }
    return out;
}

// ---------------------------------------------------------------- eval ----

int cmd_eval(const std::string& expr_text, bool show_annihilation, Invocation& ctx,
             std::ostream& out, std::ostream& err) {
    EvalTrace trace;
    SigmaSet value = eval_expr(*parse_expr(expr_text), &trace);
    if (ctx.json) {
        ordered_json result;
        result["value"] = format_set(value);
        if (show_annihilation) result["annihilations"] = trace.fusion_annihilations;
        emit_json(ctx, result, out);
    } else {
        out << format_set(value) << "\n";
        if (show_annihilation) {
            out << "annihilations: " << join_counts(trace.fusion_annihilations) << "\n";
        }
        flush_text_diagnostics(ctx, err);
    }
    return 0;
}

// --------------------------------------------------------------- table ----

std::string cell_text(const FusionOutcome& cell,
                      const std::pair<int, int>* decoration) {
    if (!decoration) return format_set(cell.result);
    return "{}^" + std::to_string(decoration->first) + "_" +
           std::to_string(decoration->second);
}

void render_table_text(const FusionTable& table, std::ostream& out) {
    const std::size_t rows = table.row_labels.size();
    const std::size_t cols = table.column_labels.size();
    std::unordered_map<std::size_t, std::pair<int, int>> decorations;
    for (const FusionTable::Decoration& d : table.empty_cell_decorations) {
        decorations[d.row * cols + d.col] = {d.position, d.annihilation};
    }

    // One string grid with the header first, then padded columns.
    std::vector<std::vector<std::string>> grid(rows + 1,
                                               std::vector<std::string>(cols + 1));
    grid[0][0] = "(+)";
    for (std::size_t c = 0; c < cols; ++c) {
        grid[0][c + 1] = format_set(table.column_labels[c]);
    }
    for (std::size_t r = 0; r < rows; ++r) {
        grid[r + 1][0] = format_set(table.row_labels[r]);
        for (std::size_t c = 0; c < cols; ++c) {
            auto deco = decorations.find(r * cols + c);
            grid[r + 1][c + 1] = cell_text(
                table.cells[r][c],
                deco == decorations.end() ? nullptr : &deco->second);
        }
    }
    std::vector<std::size_t> width(cols + 1, 0);
    for (const auto& line : grid) {
        for (std::size_t c = 0; c <= cols; ++c) {
            width[c] = std::max(width[c], line[c].size());
        }
    }
    auto emit_row = [&](const std::vector<std::string>& line) {
        std::string text;
        for (std::size_t c = 0; c <= cols; ++c) {
            if (c > 0) text += " | ";
            text += line[c];
            text.append(width[c] - line[c].size(), ' ');
        }
        while (!text.empty() && text.back() == ' ') text.pop_back();
        out << text << "\n";
    };
    emit_row(grid[0]);
    std::string rule;
    for (std::size_t c = 0; c <= cols; ++c) {
        if (c > 0) rule += "-+-";
        rule.append(width[c], '-');
    }
    out << rule << "\n";
    for (std::size_t r = 0; r < rows; ++r) emit_row(grid[r + 1]);
}

int cmd_table(const std::string& set_text, Invocation& ctx, std::ostream& out,
              std::ostream& err) {
    SigmaSet base = parse_set(set_text);
    std::optional<SigmaSet> anti = anti_set(base);
    if (!anti) {
        throw NotEntireError("table base must be entire, got " + format_set(base));
    }
    if (base.size() > table_base_guard) {
        throw SizeLimitError("table rendering is capped at " +
                             std::to_string(table_base_guard) + " atoms, got " +
                             std::to_string(base.size()));
    }
    FusionTable table = fusion_table(power_set(*anti), power_set(base));
    if (ctx.json) {
        ordered_json result;
        ordered_json rows = ordered_json::array();
        for (const SigmaSet& r : table.row_labels) rows.push_back(format_set(r));
        ordered_json cols = ordered_json::array();
        for (const SigmaSet& c : table.column_labels) cols.push_back(format_set(c));
        ordered_json cells = ordered_json::array();
        for (const auto& row : table.cells) {
            ordered_json line = ordered_json::array();
            for (const FusionOutcome& cell : row) {
                line.push_back(ordered_json{{"result", format_set(cell.result)},
                                            {"annihilation", cell.annihilation_count}});
            }
            cells.push_back(std::move(line));
        }
        result["rows"] = std::move(rows);
        result["cols"] = std::move(cols);
        result["cells"] = std::move(cells);
        emit_json(ctx, result, out);
    } else {
        render_table_text(table, out);
        flush_text_diagnostics(ctx, err);
    }
    return 0;
}

// --------------------------------------------------------------- space ----

int cmd_space(const std::string& set_text, const std::optional<std::string>& zero_text,
              bool cardinality_only, Invocation& ctx, std::ostream& out,
              std::ostream& err) {
    SigmaSet base = parse_set(set_text);
    GeneratedSpace space =
        zero_text ? meta_space(parse_set(*zero_text), base) : integer_space(base);
    if (ctx.json) {
        ordered_json result;
        result["base"] = format_set(space.left_base);
        result["cardinality"] = space.cardinality();
        if (!cardinality_only) {
            ordered_json members = ordered_json::array();
            for (const SigmaSet& member : space.members) {
                members.push_back(format_set(member));
            }
            result["members"] = std::move(members);
        }
        emit_json(ctx, result, out);
    } else {
        if (cardinality_only) {
            out << space.cardinality() << "\n";
        } else {
            out << "base: " << format_set(space.left_base) << "\n";
            out << "cardinality: " << space.cardinality() << "\n";
            out << "members:\n";
            for (const SigmaSet& member : space.members) {
                out << format_set(member) << "\n";
            }
        }
        flush_text_diagnostics(ctx, err);
    }
    return 0;
}

// ---------------------------------------------------------- conjecture ----

std::string params_text(const ConjectureCase& c) {
    std::string text;
    for (std::size_t i = 0; i < c.params.size(); ++i) {
        if (i > 0) text += " ";
        text += c.params[i].first + "=" + std::to_string(c.params[i].second);
    }
    return text;
}

ordered_json params_json(const ConjectureCase& c) {
    ordered_json obj;
    for (const auto& [name, value] : c.params) obj[name] = value;
    return obj;
}

int finish_conjecture(const Invocation& ctx, bool all_match, const ordered_json& result,
                      std::ostream& out, std::ostream& err) {
    if (ctx.json) {
        emit_json(ctx, result, out);
    } else {
        flush_text_diagnostics(ctx, err);
    }
    return all_match ? 0 : 4;
}

int cmd_conjecture_cardinality(const CardinalityReport& report, Invocation& ctx,
                               std::ostream& out, std::ostream& err) {
    ordered_json cases = ordered_json::array();
    for (const ConjectureCase& c : report.cases) {
        if (!ctx.json) {
            out << params_text(c) << ": observed " << c.observed << ", predicted "
                << c.predicted << ", " << (c.match ? "match" : "MISMATCH") << "\n";
        }
        cases.push_back(ordered_json{{"params", params_json(c)},
                                     {"observed", c.observed},
                                     {"predicted", c.predicted},
                                     {"match", c.match}});
    }
    if (!ctx.json) out << (report.all_match ? "all match" : "MISMATCH FOUND") << "\n";
    ordered_json result{{"cases", std::move(cases)}, {"all_match", report.all_match}};
    return finish_conjecture(ctx, report.all_match, result, out, err);
}

int cmd_conjecture_loop(int max_n, std::size_t witness_limit, Invocation& ctx,
                        std::ostream& out, std::ostream& err) {
    if (max_n < 0 || max_n > loop_max_n_guard) {
        throw SizeLimitError("loop conjecture guard is 0 <= max_n <= " +
                             std::to_string(loop_max_n_guard) + ", got " +
                             std::to_string(max_n));
    }
    bool all_match = true;
    ordered_json cases = ordered_json::array();
    for (int n = 0; n <= max_n; ++n) {
        std::uint64_t naturals = (n == 0) ? 0 : (~std::uint64_t{0} >> (64 - n));
        GeneratedSpace space = integer_space(SigmaSet::from_masks(naturals, 0, 0));
        LoopReport rep = verify_loop_axioms(space, witness_limit);
        bool match = rep.closure_holds && rep.identity.has_value() &&
                     rep.identity_unique && *rep.identity == SigmaSet{} &&
                     rep.inverses_unique && rep.inverses_match_anti_set &&
                     rep.commutative;
        all_match = all_match && match;
        if (rep.associativity_sampled) {
            ctx.diagnostics.push_back(
                "associativity at n=" + std::to_string(n) + " sampled " +
                std::to_string(rep.triples_checked) + " triples (fixed seed)");
        }
        if (!ctx.json) {
            std::string identity_text =
                !rep.identity ? "identity none"
                              : "identity " + format_set(*rep.identity) +
                                    (rep.identity_unique ? " unique" : " NOT unique");
            std::string inverse_text =
                !rep.inverses_unique
                    ? "inverses NOT unique"
                    : (rep.inverses_match_anti_set ? "inverses unique (anti-set)"
                                                   : "inverses unique (NOT anti-set)");
            out << "n=" << n << ": closure " << (rep.closure_holds ? "yes" : "no")
                << ", " << identity_text << ", " << inverse_text << ", commutative "
                << (rep.commutative ? "yes" : "no") << ", associative "
                << (rep.associative ? "yes" : "no")
                << (rep.associativity_sampled ? " (sampled)" : "") << " -> "
                << (match ? "match" : "MISMATCH") << "\n";
            for (const auto& w : rep.nonassociative_witnesses) {
                SigmaSet lhs = fuse(fuse(w[0], w[1]).result, w[2]).result;
                SigmaSet rhs = fuse(w[0], fuse(w[1], w[2]).result).result;
                out << "  witness: (" << format_set(w[0]) << " + " << format_set(w[1])
                    << ") + " << format_set(w[2]) << " = " << format_set(lhs)
                    << " but " << format_set(w[0]) << " + (" << format_set(w[1])
                    << " + " << format_set(w[2]) << ") = " << format_set(rhs) << "\n";
            }
        }
        ordered_json detail;
        detail["closure"] = rep.closure_holds;
        detail["identity"] =
            rep.identity ? ordered_json(format_set(*rep.identity)) : ordered_json();
        detail["identity_unique"] = rep.identity_unique;
        detail["inverses_unique"] = rep.inverses_unique;
        detail["inverses_match_anti_set"] = rep.inverses_match_anti_set;
        detail["commutative"] = rep.commutative;
        detail["associative"] = rep.associative;
        detail["associativity_sampled"] = rep.associativity_sampled;
        if (rep.nonassociative_witnesses.empty()) {
            detail["witness"] = ordered_json();
        } else {
            const auto& w = rep.nonassociative_witnesses.front();
            detail["witness"] =
                ordered_json::array({format_set(w[0]), format_set(w[1]),
                                     format_set(w[2])});
        }
        cases.push_back(ordered_json{{"params", ordered_json{{"n", n}}},
                                     {"observed", match},
                                     {"predicted", true},
                                     {"match", match},
                                     {"detail", std::move(detail)}});
    }
    if (!ctx.json) out << (all_match ? "all match" : "MISMATCH FOUND") << "\n";
    ordered_json result{{"cases", std::move(cases)}, {"all_match", all_match}};
    return finish_conjecture(ctx, all_match, result, out, err);
}

// --------------------------------------------------------------- solve ----

int cmd_solve(const std::string& universe_text, const std::string& m_text,
              const std::string& n_text, bool exhaustive, Invocation& ctx,
              std::ostream& out, std::ostream& err) {
    Equation eq(parse_set(universe_text), parse_set(m_text), parse_set(n_text));
    bool fusionable = is_fusionable(eq.m(), eq.n());

    std::optional<ClosedForm> closed;
    std::vector<SigmaSet> solutions;
    if (fusionable) {
        closed = solve_closed_form(eq);
        if (!closed) {
            ctx.diagnostics.push_back(
                "closed-form candidates failed re-verification; "
                "falling back to the solution list only");
        }
        if (exhaustive) {
            solutions = solve_exhaustive(eq).solutions;
        } else if (closed) {
            solutions = {closed->s2, closed->s1};
            std::sort(solutions.begin(), solutions.end(), size_lex_less);
            solutions.erase(std::unique(solutions.begin(), solutions.end()),
                            solutions.end());
        }
    } else {
        // The theory asserts non-fusionable equations are unsolvable; confirm
        // by scan whenever the guard allows.
        if (eq.universe().size() <= 8) {
            solutions = solve_exhaustive(eq).solutions;
            if (!solutions.empty()) {
                ctx.diagnostics.push_back(
                    "FINDING: non-fusionable equation has solutions");
            }
        } else {
            ctx.diagnostics.push_back(
                "unsolvability asserted without exhaustive confirmation "
                "(universe exceeds 8 atoms)");
        }
    }

    if (ctx.json) {
        ordered_json result;
        result["fusionable"] = fusionable;
        result["closed_form"] =
            closed ? ordered_json{{"s1", format_set(closed->s1)},
                                  {"s2", format_set(closed->s2)}}
                   : ordered_json();
        ordered_json list = ordered_json::array();
        for (const SigmaSet& s : solutions) list.push_back(format_set(s));
        result["solutions"] = std::move(list);
        emit_json(ctx, result, out);
    } else {
        out << "fusionable: " << (fusionable ? "yes" : "no") << "\n";
        if (closed) {
            out << "S1 = " << format_set(closed->s1) << "\n";
            out << "S2 = " << format_set(closed->s2) << "\n";
        }
        if (exhaustive || !fusionable) {
            if (solutions.empty()) {
                out << "no solutions\n";
            } else {
                out << "solutions: " << solutions.size() << "\n";
                for (const SigmaSet& s : solutions) out << format_set(s) << "\n";
            }
        }
        flush_text_diagnostics(ctx, err);
    }
    return (!fusionable && solutions.empty()) ? 5 : 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"sigma-set algebra: fusion, generated spaces, loop checks, equations",
                 "sigmaset"};
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.require_subcommand(1);

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate a set expression");
    std::string expr_text;
    bool show_annihilation = false;
    eval_cmd->add_option("expr", expr_text, "expression, e.g. \"{1,2,3*} + {3}\"")
        ->required();
    eval_cmd->add_flag("--show-annihilation", show_annihilation,
                       "also print the annihilation count of every fusion");

    CLI::App* table_cmd =
        app.add_subcommand("table", "render the fusion table of 2^(A-) x 2^A");
    std::string table_set;
    table_cmd->add_option("--set", table_set, "entire base set A")->required();

    CLI::App* space_cmd =
        app.add_subcommand("space", "enumerate an integer space or meta-space");
    std::string space_set;
    std::string zero_part;
    bool cardinality_only = false;
    space_cmd->add_option("--set", space_set, "entire base set")->required();
    space_cmd->add_option("--zero-part", zero_part,
                          "zero-natural part; makes the space a meta-space");
    space_cmd->add_flag("--cardinality-only", cardinality_only,
                        "print only the cardinality");

    CLI::App* conj_cmd =
        app.add_subcommand("conjecture", "check a conjecture at desk scale");
    std::string which;
    int max_n = 5;
    int max_a = 2;
    int max_b = 2;
    std::size_t witnesses = 1;
    conj_cmd->add_option("which", which, "cardinality | meta | loop")
        ->required()
        ->check(CLI::IsMember({"cardinality", "meta", "loop"}));
    conj_cmd->add_option("--max-n", max_n, "largest n (cardinality, loop)")
        ->capture_default_str();
    conj_cmd->add_option("--max-a", max_a, "largest zero-part size (meta)")
        ->capture_default_str();
    conj_cmd->add_option("--max-b", max_b, "largest entire-part size (meta)")
        ->capture_default_str();
    conj_cmd->add_option("--witnesses", witnesses,
                         "non-associativity witnesses to collect per space (loop)")
        ->capture_default_str();

    CLI::App* solve_cmd = app.add_subcommand("solve", "solve X + M = N over 3^A");
    std::string universe_text;
    std::string m_text;
    std::string n_text;
    bool exhaustive = false;
    solve_cmd->add_option("--universe", universe_text, "entire base set A")->required();
    solve_cmd->add_option("--m", m_text, "M, a member of 3^A")->required();
    solve_cmd->add_option("--n", n_text, "N, a member of 3^A")->required();
    solve_cmd->add_flag("--exhaustive", exhaustive,
                        "enumerate the complete solution set");

    for (CLI::App* sub : {eval_cmd, table_cmd, space_cmd, conj_cmd, solve_cmd}) {
        sub->fallthrough();
    }

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("sigmaset");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    Invocation ctx;
    ctx.json = format == "json";
    try {
        if (app.got_subcommand(eval_cmd)) {
            ctx.command = "eval";
            ctx.inputs["expr"] = expr_text;
            ctx.inputs["show_annihilation"] = show_annihilation;
            return cmd_eval(expr_text, show_annihilation, ctx, out, err);
        }
        if (app.got_subcommand(table_cmd)) {
            ctx.command = "table";
            ctx.inputs["set"] = table_set;
            return cmd_table(table_set, ctx, out, err);
        }
        if (app.got_subcommand(space_cmd)) {
            ctx.command = "space";
            std::optional<std::string> zero_text;
            if (space_cmd->count("--zero-part") > 0) zero_text = zero_part;
            ctx.inputs["set"] = space_set;
            ctx.inputs["zero_part"] =
                zero_text ? ordered_json(*zero_text) : ordered_json();
            ctx.inputs["cardinality_only"] = cardinality_only;
            return cmd_space(space_set, zero_text, cardinality_only, ctx, out, err);
        }
        if (app.got_subcommand(conj_cmd)) {
            ctx.command = "conjecture";
            ctx.inputs["which"] = which;
            if (which == "cardinality") {
                ctx.inputs["max_n"] = max_n;
                return cmd_conjecture_cardinality(check_cardinality_conjecture(max_n),
                                                  ctx, out, err);
            }
            if (which == "meta") {
                ctx.inputs["max_a"] = max_a;
                ctx.inputs["max_b"] = max_b;
                return cmd_conjecture_cardinality(check_meta_conjecture(max_a, max_b),
                                                  ctx, out, err);
            }
            ctx.inputs["max_n"] = max_n;
            return cmd_conjecture_loop(max_n, witnesses, ctx, out, err);
        }
        ctx.command = "solve";
        ctx.inputs["universe"] = universe_text;
        ctx.inputs["m"] = m_text;
        ctx.inputs["n"] = n_text;
        ctx.inputs["exhaustive"] = exhaustive;
        return cmd_solve(universe_text, m_text, n_text, exhaustive, ctx, out, err);
    } catch (const Error& e) {
        if (ctx.json) {
            ctx.diagnostics.push_back(e.what());
            emit_json(ctx, ordered_json(), out);
        }
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace sigma::cli
