// Command-line front end: solving, closed forms, equivalence, kernelization,
// formula reductions, board generation and an interactive play loop.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "incidence/error.hpp"
#include "incidence/formulas.hpp"
#include "incidence/io.hpp"
#include "incidence/kernelizer.hpp"
#include "incidence/reductions.hpp"
#include "incidence/solver.hpp"

namespace {

using namespace incidence;

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Player parse_player(const std::string& name) {
    if (name == "left") return Player::Left;
    if (name == "right") return Player::Right;
    throw CLI::ValidationError("--first", "expected left or right");
}

struct SolveArgs {
    std::string file = "-";
    std::string first = "both";
    SolveOptions options;
    bool dot = false;
};

int run_solve(const SolveArgs& a) {
    Position p = parse_board(slurp(a.file));
    if (a.dot) {
        std::cout << to_dot(p);
        return 0;
    }
    Solver solver(a.options);
    std::optional<SolveResult> left, right;
    if (a.first == "left" || a.first == "both") left = solver.solve(p, Player::Left);
    if (a.first == "right" || a.first == "both") right = solver.solve(p, Player::Right);
    std::cout << result_record(p, a.options, left, right).dump(2) << '\n';
    return 0;
}

void print_pair(ScorePair sp) { std::cout << "ls " << sp.ls << "\nrs " << sp.rs << '\n'; }

int run_formula(const std::string& family, const std::vector<int>& numbers,
                const std::string& file) {
    auto need = [&](std::size_t count) {
        if (numbers.size() != count)
            throw CLI::ValidationError("formula", "family '" + family + "' takes " +
                                                      std::to_string(count) + " number(s)");
    };
    auto board = [&] { return parse_board(slurp(file)); };
    if (family == "path") {
        need(1);
        print_pair(mb_path_score(numbers[0]));
    } else if (family == "claimed-path") {
        need(1);
        print_pair(mb_claimed_path_score(numbers[0]));
    } else if (family == "union-paths") {
        print_pair(mb_union_paths_score(numbers));
    } else if (family == "cycle") {
        need(1);
        print_pair(mb_cycle_score(numbers[0]));
    } else if (family == "tree") {
        need(1);
        print_pair(binary_tree_score(numbers[0]));
    } else if (family == "mm") {
        need(0);
        std::cout << "value " << mm_score(board().graph()) << '\n';
    } else if (family == "mm-move") {
        need(0);
        std::cout << "move " << mm_optimal_move(board()) << '\n';
    } else if (family == "delta-bounds") {
        need(0);
        auto [lo, hi] = mm_delta_bounds(board().graph());
        std::cout << "lower " << lo << "\nupper " << hi << '\n';
    } else if (family == "potential") {
        need(0);
        std::cout << "potential " << potential(board()).to_string() << '\n';
    } else if (family == "greedy") {
        need(0);
        std::cout << "move " << potential_greedy_move(board()) << '\n';
    } else if (family == "es") {
        need(0);
        auto [lo, hi] = es_bounds(board().graph());
        std::cout << "ls-lower " << lo.to_string() << "\nrs-upper " << hi.to_string()
                  << '\n';
    } else {
        throw CLI::ValidationError("formula", "unknown family '" + family + "'");
    }
    return 0;
}

int run_equiv(const std::string& file_a, const std::string& file_b, int budget) {
    Solver solver;
    bool same = solver.milnor_equivalent(parse_board(slurp(file_a)),
                                         parse_board(slurp(file_b)), budget);
    std::cout << (same ? "equivalent" : "not equivalent") << '\n';
    return 0;
}

int run_kernelize(const std::string& file, int k, const std::string& first,
                  bool literal_share) {
    KernelInstance inst{parse_board(slurp(file)), k, parse_player(first)};
    auto [kernel, transcript] = kernelize(inst, {literal_share});
    std::cout << serialize_board(kernel.position);
    std::cout << "# k " << kernel.k << '\n';
    std::cout << "# first " << (kernel.first == Player::Left ? "left" : "right") << '\n';
    std::istringstream lines(transcript.to_text());
    std::string line;
    while (std::getline(lines, line)) std::cout << "# " << line << '\n';
    return 0;
}

int run_reduce(const std::string& file, const std::string& target, int k) {
    QBFormula f = parse_qbf(slurp(file));
    if (target == "2sat") {
        auto [out, threshold] = qbf3_to_qmax2sat(f);
        std::cout << serialize_qbf(out);
        std::cout << "# k " << threshold << '\n';
        return 0;
    }
    if (target == "board") {
        // Pipeline: width-3 input is lowered to width 2 first, which fixes
        // the threshold at seven per source clause.
        if (f.width() > 2) std::tie(f, k) = qbf3_to_qmax2sat(f);
        auto [g, cert] = qmax2sat_to_incidence(f, k);
        std::cout << serialize_board(Position{std::move(g)});
        std::cout << "# k' " << cert.k_prime << '\n'
                  << "# n' " << cert.n_prime << '\n'
                  << "# vertices " << cert.total_vertices << '\n'
                  << "# edges " << cert.total_edges << '\n'
                  << "# padded-variables " << cert.padded_variables << '\n';
        return 0;
    }
    throw CLI::ValidationError("--to", "expected 2sat or board");
}

Hypergraph generate(const std::string& family, const std::vector<int>& numbers,
                    EdgeColor color) {
    auto need = [&](std::size_t count) {
        if (numbers.size() != count)
            throw CLI::ValidationError("gen", "family '" + family + "' takes " +
                                                  std::to_string(count) + " number(s)");
    };
    if (family == "path-l") { need(1); return make_path(numbers[0], color); }
    if (family == "cycle-l") { need(1); return make_cycle(numbers[0], color); }
    if (family == "union-l") { return make_union_paths(numbers, color); }
    if (family == "complete") { need(1); return make_complete(numbers[0], color); }
    if (family == "tree") { need(1); return make_binary_tree(numbers[0], color); }
    if (family == "star") { need(1); return make_star(numbers[0]); }
    if (family == "singleton-star") { need(1); return make_singleton_star(numbers[0]); }
    if (family == "demo") { need(0); return make_demo_graph(color); }
    if (family == "unique-move") { need(0); return make_unique_move_board(); }
    if (family == "claimed-path") { need(1); return make_path(numbers[0], color); }
    throw CLI::ValidationError("gen", "unknown family '" + family + "'");
}

int run_gen(const std::string& family, const std::vector<int>& numbers,
            const std::string& color_name, bool dot) {
    EdgeColor color = color_name == "R"   ? EdgeColor::Red
                      : color_name == "G" ? EdgeColor::Green
                                          : EdgeColor::Blue;
    Hypergraph g = generate(family, numbers, color);
    Position p = family == "claimed-path" ? Position{std::move(g), {0}, {}}
                                          : Position{std::move(g)};
    std::cout << (dot ? to_dot(p) : serialize_board(p));
    return 0;
}

void print_state(const Position& p) {
    std::cout << "free " << p.free_count();
    if (p.graph().all_blue()) std::cout << ", potential " << potential(p).to_string();
    if (p.terminal()) std::cout << ", final score " << p.terminal_score();
    std::cout << '\n';
}

int run_play(const std::string& file, const std::string& side, int exact_limit) {
    Position current = parse_board(slurp(file));
    Player human = parse_player(side);
    std::vector<Position> history;
    Solver solver;

    auto engine_move = [&](Player mover) {
        if (current.free_count() <= exact_limit) {
            auto result = solver.solve(current, mover);
            std::cout << "engine plays " << result.optimal_moves.front() << " (optimal, value "
                      << result.value << ")\n";
            return result.optimal_moves.front();
        }
        VertexId v = current.graph().all_blue() ? potential_greedy_move(current)
                     : current.graph().is_graph() ? mm_optimal_move(current)
                                                  : current.free_vertices().front();
        std::cout << "engine plays " << v << " (heuristic)\n";
        return v;
    };

    std::cout << "You play " << (human == Player::Left ? "Left" : "Right")
              << ". Enter a vertex id, 'hint', 'undo' or 'quit'.\n";
    if (human == Player::Right && !current.terminal()) {
        history.push_back(current);
        current = current.claim(Player::Left, engine_move(Player::Left));
        print_state(current);
    }
    std::string token;
    while (!current.terminal() && std::cin >> token) {
        if (token == "quit") break;
        if (token == "undo") {
            if (history.empty()) {
                std::cout << "nothing to undo\n";
            } else {
                current = history.back();
                history.pop_back();
                print_state(current);
            }
            continue;
        }
        if (token == "hint") {
            if (current.free_count() <= exact_limit)
                std::cout << "hint (optimal): "
                          << solver.solve(current, human).optimal_moves.front() << '\n';
            else if (current.graph().all_blue())
                std::cout << "hint (heuristic): " << potential_greedy_move(current) << '\n';
            else
                std::cout << "hint (heuristic): " << current.free_vertices().front() << '\n';
            continue;
        }
        int v = -1;
        try {
            v = std::stoi(token);
        } catch (const std::exception&) {
            std::cout << "unrecognized input '" << token << "'\n";
            continue;
        }
        if (v < 0 || v >= current.vertex_count() || current.cell(v) != CellState::Free) {
            std::cout << "illegal move; free vertices:";
            for (VertexId u : current.free_vertices()) std::cout << ' ' << u;
            std::cout << '\n';
            continue;
        }
        // One history entry per round, so 'undo' reverts the human move
        // together with the engine's reply.
        history.push_back(current);
        current = current.claim(human, v);
        print_state(current);
        if (current.terminal()) break;
        current = current.claim(opponent(human), engine_move(opponent(human)));
        print_state(current);
    }
    if (current.terminal()) std::cout << "game over, score " << current.terminal_score() << '\n';
    return 0;
}

bool check(const char* name, bool ok) {
    std::cout << (ok ? "ok   " : "FAIL ") << name << '\n';
    return ok;
}

int run_selftest() {
    bool all = true;
    Solver solver;
    {
        static constexpr int ls[10] = {0, 0, 1, 1, 1, 1, 1, 2, 2, 2};
        static constexpr int rs[10] = {0, 0, 0, 0, 0, 1, 1, 1, 1, 1};
        bool ok = true;
        for (int n = 1; n <= 10; ++n) {
            ScorePair sp = solver.score_pair(Position{make_path(n)});
            ok = ok && sp == ScorePair{ls[n - 1], rs[n - 1]} && sp == mb_path_score(n);
        }
        all &= check("short path scores", ok);
    }
    {
        bool ok = true;
        for (int n = 1; n <= 10; ++n) {
            ScorePair sp = solver.score_pair(Position{make_path(n), {0}, {}});
            ok = ok && sp == mb_claimed_path_score(n);
        }
        all &= check("claimed path scores", ok);
    }
    {
        SolveOptions o;
        o.twin_reduction = true;
        Solver twin(o);
        bool ok = true;
        for (int k = 1; k <= 3; ++k)
            ok = ok && twin.score_pair(Position{make_binary_tree(k)}) == binary_tree_score(k);
        all &= check("binary tree scores", ok);
    }
    {
        Hypergraph demo = make_demo_graph(EdgeColor::Green);
        bool ok = mm_score(demo) == solver.solve(Position{demo}, Player::Left).value;
        all &= check("degree formula on the demo graph", ok);
    }
    {
        auto left = solver.solve(Position{make_unique_move_board()}, Player::Left);
        auto right = solver.solve(Position{make_unique_move_board()}, Player::Right);
        bool ok = left.value == 4 && left.optimal_moves == std::vector<VertexId>{0} &&
                  right.value == 2 && right.optimal_moves == std::vector<VertexId>{8};
        all &= check("unique optimal moves board", ok);
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver and toolkit for scoring positional games on colored boards"};
    app.require_subcommand(1);

    SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Solve a board exactly");
    solve->add_option("file", solve_args.file, "board file ('-' = stdin)");
    solve->add_option("--first", solve_args.first, "left, right or both")
        ->check(CLI::IsMember({"left", "right", "both"}));
    solve->add_flag("--twin", solve_args.options.twin_reduction, "twin reduction");
    solve->add_flag("--ab", solve_args.options.alpha_beta, "alpha-beta windows");
    solve->add_flag("--domination", solve_args.options.domination_pruning,
                    "domination pruning");
    solve->add_flag("!--no-symmetry", solve_args.options.symmetry_pruning,
                    "disable symmetry pruning");
    solve->add_option("--workers", solve_args.options.workers, "parallel root workers");
    solve->add_option("--budget", solve_args.options.node_budget, "node budget");
    solve->add_flag("--dot", solve_args.dot, "emit Graphviz instead of solving");

    std::string formula_family, formula_file = "-";
    std::vector<int> formula_numbers;
    auto* formula = app.add_subcommand("formula", "Closed-form scores and bounds");
    formula->add_option("family", formula_family,
                        "path|claimed-path|union-paths|cycle|tree|mm|mm-move|"
                        "delta-bounds|potential|greedy|es")
        ->required();
    formula->add_option("numbers", formula_numbers, "numeric arguments");
    formula->add_option("--board", formula_file, "board file for board families");

    std::string equiv_a, equiv_b;
    int equiv_budget = 36;
    auto* equiv = app.add_subcommand("equiv", "Test two boards for equivalence");
    equiv->add_option("a", equiv_a)->required();
    equiv->add_option("b", equiv_b)->required();
    equiv->add_option("--budget", equiv_budget, "free-vertex budget");

    std::string kern_file = "-", kern_first = "left";
    int kern_k = 1;
    bool kern_literal = false;
    auto* kern = app.add_subcommand("kernelize", "Cubic kernel of a decision instance");
    kern->add_option("file", kern_file);
    kern->add_option("--k", kern_k, "score threshold")->required();
    kern->add_option("--first", kern_first)->check(CLI::IsMember({"left", "right"}));
    kern->add_flag("--literal-share", kern_literal, "mover-blind balancing charge");

    std::string reduce_file = "-", reduce_target = "2sat";
    int reduce_k = 1;
    auto* reduce = app.add_subcommand("reduce", "Formula reductions");
    reduce->add_option("file", reduce_file, "QBF file");
    reduce->add_option("--to", reduce_target, "2sat or board");
    reduce->add_option("--k", reduce_k, "threshold for the board reduction");

    std::string gen_family, gen_color = "B";
    std::vector<int> gen_numbers;
    bool gen_dot = false;
    auto* gen = app.add_subcommand("gen", "Generate a named board family");
    gen->add_option("family", gen_family,
                    "path-l|claimed-path|cycle-l|union-l|complete|tree|star|"
                    "singleton-star|demo|unique-move")
        ->required();
    gen->add_option("numbers", gen_numbers, "family parameters");
    gen->add_option("--color", gen_color)->check(CLI::IsMember({"B", "R", "G"}));
    gen->add_flag("--dot", gen_dot, "emit Graphviz");

    std::string play_file = "-", play_side = "left";
    int play_exact = 20;
    auto* play = app.add_subcommand("play", "Interactive game against the engine");
    play->add_option("file", play_file);
    play->add_option("--as", play_side, "left or right");
    play->add_option("--exact-limit", play_exact,
                     "free-vertex bound for exact engine replies");

    auto* selftest = app.add_subcommand("selftest", "Quick built-in checks");

    CLI11_PARSE(app, argc, argv);
    try {
        if (solve->parsed()) return run_solve(solve_args);
        if (formula->parsed()) return run_formula(formula_family, formula_numbers, formula_file);
        if (equiv->parsed()) return run_equiv(equiv_a, equiv_b, equiv_budget);
        if (kern->parsed()) return run_kernelize(kern_file, kern_k, kern_first, kern_literal);
        if (reduce->parsed()) return run_reduce(reduce_file, reduce_target, reduce_k);
        if (gen->parsed()) return run_gen(gen_family, gen_numbers, gen_color, gen_dot);
        if (play->parsed()) return run_play(play_file, play_side, play_exact);
        if (selftest->parsed()) return run_selftest();
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const incidence::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const incidence::ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return 3;
    }
    return 1;
}
