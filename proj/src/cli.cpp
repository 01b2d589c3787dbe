#include "cagames/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cagames/analysis.hpp"
#include "cagames/errors.hpp"
#include "cagames/render.hpp"
#include "cagames/service.hpp"
#include "cagames/spec_document.hpp"

namespace cagames {

namespace {

struct SpecFlags {
  std::string file;
  std::int64_t gamma = 0;
  std::int64_t Gamma = 0;
  std::string L = "0";
  std::string C;
  std::string R = "1";
  std::int64_t xi = 0;
  std::int64_t budget = kDefaultCellBudget;
};

void add_spec_flags(CLI::App* cmd, SpecFlags& flags) {
  cmd->add_option("--spec", flags.file, "JSON spec document");
  cmd->add_option("--gamma", flags.gamma, "right reach (inline spec)");
  cmd->add_option("--Gamma", flags.Gamma, "left reach (inline spec)");
  cmd->add_option("--L", flags.L, "left periodic word");
  cmd->add_option("--C", flags.C, "centre word");
  cmd->add_option("--R", flags.R, "right periodic word");
  cmd->add_option("--xi", flags.xi, "coloring shift");
  cmd->add_option("--budget", flags.budget, "cell/state budget for resource guards");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("io-error", "cannot read '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

SpecDocument load_document(const SpecFlags& flags) {
  if (!flags.file.empty()) return parse_spec_document(read_file(flags.file));
  nlohmann::json inline_doc{{"gamma", flags.gamma}, {"Gamma", flags.Gamma}, {"L", flags.L},
                            {"C", flags.C},         {"R", flags.R},         {"xi", flags.xi}};
  return spec_from_json(inline_doc);
}

std::string format_move(const Move& move) {
  return "t=" + std::to_string(move.tokens) + ",m=" + std::to_string(move.matches);
}

std::vector<Move> parse_path(const std::string& text) {
  std::vector<Move> path;
  std::stringstream items(text);
  std::string item;
  while (std::getline(items, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    Move move;
    char comma = 0;
    std::istringstream parse(item);
    if (!(parse >> move.tokens >> comma >> move.matches) || comma != ',') {
      throw DomainError("malformed-path", "path items look like 't,m', got '" + item + "'");
    }
    path.push_back(move);
  }
  return path;
}

void guard_game_search(const GamePosition& pos, std::int64_t budget) {
  const double states = static_cast<double>(pos.tokens + 1) * static_cast<double>(pos.matches + 1) *
                        static_cast<double>(std::max(pos.matches, pos.previous) + 1);
  if (states > static_cast<double>(budget)) {
    throw ResourceError("search-too-large", "position would need up to " +
                                                std::to_string(static_cast<long long>(states)) +
                                                " solver states; raise --budget to allow");
  }
}

int play_session(const GameSpec& spec, GamePosition pos, bool human_first, std::istream& in, std::ostream& out) {
  TakeawaySolver solver(spec);
  std::vector<Move> transcript;
  bool human_to_move = human_first;
  for (;;) {
    const auto moves = legal_moves(spec, pos);
    out << "position X=" << pos.tokens << " Y=" << pos.matches << " mp=" << pos.previous << " ("
        << to_string(solver.outcome(pos)) << ")\n";
    if (moves.empty()) {
      out << (human_to_move ? "no legal moves - you lose\n" : "no legal moves for the engine - you win\n");
      break;
    }
    Move chosen;
    if (human_to_move) {
      out << "legal:";
      for (const Move& m : moves) out << ' ' << format_move(m);
      out << "\n> " << std::flush;
      std::string line;
      if (!std::getline(in, line) || line == "quit") {
        out << "session abandoned\n";
        break;
      }
      std::replace(line.begin(), line.end(), ',', ' ');
      std::istringstream parse(line);
      if (!(parse >> chosen.tokens >> chosen.matches)) {
        out << "enter a move as 't m'\n";
        continue;
      }
      if (auto clause = check_move(spec, pos, chosen)) {
        out << "illegal move (" << to_string(*clause) << ")\n";
        continue;
      }
    } else {
      chosen = solver.best_move(pos).value_or(moves.front());
      out << "engine plays " << format_move(chosen) << "\n";
    }
    transcript.push_back(chosen);
    pos = apply_move(spec, pos, chosen);
    human_to_move = !human_to_move;
  }
  out << "path:";
  for (std::size_t i = 0; i < transcript.size(); ++i) {
    out << (i ? ";" : " ") << transcript[i].tokens << ',' << transcript[i].matches;
  }
  out << "\n";
  return 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cellular automata and the take-away games that emulate them"};
  app.require_subcommand(1);

  SpecFlags spec_flags;
  SpecFlags spec2_flags;
  std::int64_t x0 = 0, x1 = 0, rows = 0;
  std::string format = "text", out_file;
  std::int64_t tokens = 0, matches = 0, previous = 0;
  bool want_best = false;
  std::int64_t tri_x = 0, tri_y = 0, tri_h = 0;
  std::int64_t max_tokens = 0, max_matches = 0, max_previous = 0;
  std::int64_t min_x = 0, max_height = 0;
  std::int64_t max_drift = 0, max_period = 1, burn_in = 0, window = 32, last_row = 64;
  std::string spec2_file;
  std::int64_t y_from = 0, y_to = 0, y_min = 0;
  std::string pattern, path_text, human = "first", host = "127.0.0.1";
  bool no_reverse = false;
  int port = 8080;

  auto* evolve = app.add_subcommand("evolve", "evolve a spacetime window and render it");
  add_spec_flags(evolve, spec_flags);
  evolve->add_option("--x0", x0)->required();
  evolve->add_option("--x1", x1)->required();
  evolve->add_option("--rows", rows)->required();
  evolve->add_option("--format", format)->check(CLI::IsMember({"text", "pbm"}));
  evolve->add_option("--out", out_file);

  auto* solve = app.add_subcommand("solve", "outcome of a take-away position");
  add_spec_flags(solve, spec_flags);
  solve->add_option("--X", tokens)->required();
  solve->add_option("--Y", matches)->required();
  solve->add_option("--mp", previous)->required();
  solve->add_flag("--best-move", want_best);

  auto* tri = app.add_subcommand("tri-solve", "outcome of a triangle position");
  tri->set_help_flag("--help", "print this help message and exit");
  add_spec_flags(tri, spec_flags);
  tri->add_option("--x", tri_x)->required();
  tri->add_option("--y", tri_y)->required();
  tri->add_option("--h", tri_h)->required();

  auto* thm2 = app.add_subcommand("verify-thm2", "compare solver and automaton characterisation");
  add_spec_flags(thm2, spec_flags);
  thm2->add_option("--xmax", max_tokens)->required();
  thm2->add_option("--ymax", max_matches)->required();
  thm2->add_option("--mpmax", max_previous)->required();

  auto* thm3 = app.add_subcommand("verify-thm3", "compare triangle solver and automaton characterisation");
  add_spec_flags(thm3, spec_flags);
  thm3->add_option("--xmin", min_x)->required();
  thm3->add_option("--xmax", max_tokens)->required();
  thm3->add_option("--ymax", max_matches)->required();
  thm3->add_option("--hmax", max_height)->required();

  auto* period = app.add_subcommand("periodicity", "bounded search for an eventual period");
  add_spec_flags(period, spec_flags);
  period->add_option("--dmax", max_drift)->required();
  period->add_option("--rmax", max_period)->required();
  period->add_option("--burnin", burn_in);
  period->add_option("--window", window, "extra columns beyond the centre's influence cone");
  period->add_option("--rows", last_row, "last row evaluated");

  auto* converge = app.add_subcommand("converge", "bounded comparison of two backgrounds");
  add_spec_flags(converge, spec_flags);
  converge->add_option("--spec2", spec2_file)->required();
  converge->add_option("--yfrom", y_from)->required();
  converge->add_option("--yto", y_to)->required();
  converge->add_option("--window", window, "columns [-W, W]");

  auto* search = app.add_subcommand("search", "find a bit pattern in evolved rows");
  add_spec_flags(search, spec_flags);
  search->add_option("--pattern", pattern)->required();
  search->add_flag("--no-reverse", no_reverse);
  search->add_option("--ymax", y_to)->required();
  search->add_option("--ymin", y_min);
  search->add_option("--window", window, "columns [-W, W]");

  auto* path_check = app.add_subcommand("path-check", "check an alternating move path for optimality");
  add_spec_flags(path_check, spec_flags);
  path_check->add_option("--X", tokens)->required();
  path_check->add_option("--Y", matches)->required();
  path_check->add_option("--mp", previous)->required();
  path_check->add_option("--path", path_text)->required();

  auto* play = app.add_subcommand("play", "play a take-away game against the engine");
  add_spec_flags(play, spec_flags);
  play->add_option("--X", tokens)->required();
  play->add_option("--Y", matches)->required();
  play->add_option("--mp", previous)->required();
  play->add_option("--human", human)->check(CLI::IsMember({"first", "second"}));

  auto* serve = app.add_subcommand("serve", "run the JSON-over-HTTP service");
  serve->add_option("--port", port);
  serve->add_option("--host", host);
  serve->add_option("--budget", spec_flags.budget);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (serve->parsed()) {
      service::HttpServer server(service::Options{spec_flags.budget});
      const int bound = server.bind(host, port);
      if (bound < 0) {
        err << "cannot bind " << host << ":" << port << "\n";
        return 1;
      }
      err << "listening on " << host << ":" << bound << std::endl;
      return server.run() ? 0 : 1;
    }

    const SpecDocument doc = load_document(spec_flags);
    const GameSpec spec = doc.to_game_spec();

    if (evolve->parsed()) {
      const SpacetimeWindow win = evolve_window(spec.params, spec.background, x0, x1, rows, spec_flags.budget);
      const std::string image = render(win, format == "pbm" ? RenderFormat::Pbm : RenderFormat::Text);
      if (out_file.empty()) {
        out << image;
      } else {
        std::ofstream file(out_file, std::ios::binary);
        if (!file) throw DomainError("io-error", "cannot write '" + out_file + "'");
        file << image;
      }
      return 0;
    }

    if (solve->parsed()) {
      const GamePosition pos{tokens, matches, previous};
      validate(pos);
      guard_game_search(pos, spec_flags.budget);
      const auto result = service::game_outcome({{"spec", to_json(doc)}, {"position", to_json(pos)}});
      out << result["outcome"].get<std::string>() << "\n";
      if (want_best) {
        if (result["bestMove"].is_null()) {
          out << "none\n";
        } else {
          out << format_move(move_from_json(result["bestMove"])) << "\n";
        }
      }
      return 0;
    }

    if (tri->parsed()) {
      const TrianglePosition pos{tri_x, tri_y, tri_h};
      const auto result = service::triangle_outcome({{"spec", to_json(doc)}, {"position", to_json(pos)}});
      out << result["outcome"].get<std::string>() << "\n";
      out << "predicate " << result["predicate"].get<std::string>() << "\n";
      return 0;
    }

    if (thm2->parsed()) {
      guard_game_search({max_tokens, max_matches, max_previous}, spec_flags.budget);
      const auto report = verify_theorem2(spec, {max_tokens, max_matches, max_previous});
      for (const auto& m : report.mismatches) {
        out << "mismatch X=" << m.position.tokens << " Y=" << m.position.matches
            << " mp=" << m.position.previous << " solver=" << to_string(m.solver)
            << " predicate=" << to_string(m.predicate) << "\n";
      }
      out << report.checked << " positions checked, " << report.mismatches.size() << " mismatches\n";
      return report.empty() ? 0 : 1;
    }

    if (thm3->parsed()) {
      const auto report = verify_theorem3(spec, {min_x, max_tokens, max_matches, max_height});
      for (const auto& m : report.mismatches) {
        out << "mismatch x=" << m.position.x << " y=" << m.position.y << " h=" << m.position.h
            << " solver=" << to_string(m.solver) << " predicate=" << to_string(m.predicate) << "\n";
      }
      out << report.checked << " positions checked, " << report.mismatches.size() << " mismatches\n";
      return report.empty() ? 0 : 1;
    }

    if (period->parsed()) {
      CASystem system(spec.params, spec.background);
      const auto [lo, hi] = required_columns(spec.params, spec.background, last_row);
      PeriodSearch s{max_drift, max_period, burn_in, lo - window, hi + window, last_row, spec_flags.budget};
      const auto verdict = detect_periodicity(system, s);
      if (verdict.periodic) {
        out << "periodic delta=" << verdict.drift << " rho=" << verdict.period << " onset=" << verdict.onset
            << "\n";
        out << "game period delta'=" << transfer_period(verdict.drift, verdict.period, spec.params.right_reach)
            << " rho'=" << verdict.period << "\n";
      } else {
        out << "unknown within bounds: delta<=" << max_drift << " rho<=" << max_period << " rows "
            << burn_in << ".." << last_row << " columns " << s.x0 << ".." << s.x1 << "\n";
      }
      return 0;
    }

    if (converge->parsed()) {
      const GameSpec other = parse_spec_document(read_file(spec2_file)).to_game_spec();
      const CASystem a(spec.params, spec.background);
      const CASystem b(other.params, other.background);
      const auto verdict = check_convergence(a, b, y_from, y_to, -window, window, spec_flags.budget);
      if (verdict.diverges) {
        out << "diverges at x=" << verdict.x << " y=" << verdict.y << "\n";
      } else {
        out << "agree on rows " << y_from << ".." << y_to << " columns " << -window << ".." << window << "\n";
      }
      return 0;
    }

    if (search->parsed()) {
      const CASystem system(spec.params, spec.background);
      const auto hits = find_pattern(system, parse_bits(pattern), !no_reverse, -window, window, y_min, y_to,
                                     spec_flags.budget);
      for (const auto& hit : hits) {
        out << "y=" << hit.y << " x=" << hit.x << (hit.reversed ? " reversed" : "") << "\n";
      }
      out << hits.size() << " hits\n";
      return 0;
    }

    if (path_check->parsed()) {
      const GamePosition start{tokens, matches, previous};
      guard_game_search(start, spec_flags.budget);
      const auto verdict = verify_path(spec, start, parse_path(path_text));
      if (verdict.optimal) {
        out << "optimal\n";
        return 0;
      }
      out << "failure at move " << verdict.index << ": " << to_string(verdict.reason) << "\n";
      return 1;
    }

    if (play->parsed()) {
      const GamePosition start{tokens, matches, previous};
      validate(start);
      guard_game_search(start, spec_flags.budget);
      return play_session(spec, start, human == "first", in, out);
    }
  } catch (const ResourceError& e) {
    err << "error [" << e.code() << "]: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error [" << e.code() << "]: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace cagames
