#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "platknot/canonical.hpp"
#include "platknot/hilden.hpp"
#include "platknot/invariants.hpp"
#include "platknot/spheres.hpp"
#include "platknot/twobridge.hpp"

namespace platknot::cli {

using nlohmann::json;

json matrix_to_json(const TwistMatrix& M) {
  return json{{"plat-format", 1}, {"m", M.m}, {"n", M.n}, {"rows", M.rows}};
}

TwistMatrix matrix_from_json(const json& j) {
  try {
    if (j.contains("plat-format") && j.at("plat-format").get<int>() != 1) {
      throw Error(ErrorCode::ParseError, "unsupported plat-format version");
    }
    TwistMatrix M;
    M.m = j.at("m").get<int>();
    M.n = j.at("n").get<int>();
    M.rows = j.at("rows").get<std::vector<std::vector<std::int64_t>>>();
    return M;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad matrix JSON: ") + e.what());
  }
}

TwistMatrix parse_matrix_document(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorCode::ParseError, "malformed JSON");
    return matrix_from_json(j);
  }
  return parse_twist_matrix(text);
}

TwistMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_matrix_document(buffer.str());
}

namespace {

// Signals a negative decision (exit 1) after output has been written.
struct Negative {};

std::vector<std::int64_t> parse_coefficient_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorCode::ParseError, "bad coefficient '" + item + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::ParseError, "empty coefficient list");
  return out;
}

std::string join_terms(const std::vector<std::int64_t>& terms) {
  std::string s;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(terms[i]);
  }
  return s;
}

std::string format_cf(const CFExpansion& e) {
  std::string s = "[" + std::to_string(e.front());
  for (std::size_t i = 1; i < e.size(); ++i) s += (i == 1 ? "; " : ", ") + std::to_string(e[i]);
  return s + "]";
}

json pd_json(const PlanarDiagram& d) {
  json crossings = json::array();
  json signs = json::array();
  for (const auto& x : d.crossings()) {
    crossings.push_back(x.arcs);
    signs.push_back(x.sign);
  }
  return json{{"pd", crossings}, {"signs", signs}, {"free_loops", d.free_loops()},
              {"components", d.component_count()}};
}

struct InvariantSummary {
  int components = 0;
  int writhe = 0;
  BigInt determinant;
  std::optional<LaurentPoly> jones;
  int crossings = 0;
};

InvariantSummary summarize(const PlanarDiagram& d, int jones_cap) {
  InvariantSummary s;
  s.components = d.component_count();
  s.writhe = d.writhe();
  s.determinant = determinant(d);
  s.crossings = d.crossing_count();
  if (d.crossing_count() <= jones_cap) s.jones = jones(d, {.cap = jones_cap});
  return s;
}

void print_summary(std::ostream& out, const InvariantSummary& s, int jones_cap, bool as_json,
                   json extra = json::object()) {
  if (as_json) {
    json j = std::move(extra);
    j["crossings"] = s.crossings;
    j["components"] = s.components;
    j["writhe"] = s.writhe;
    j["determinant"] = s.determinant.str();
    if (s.jones) {
      j["jones"] = s.jones->str("t", 2);
    } else {
      j["jones"] = nullptr;
      j["jones_cap"] = jones_cap;
    }
    out << j.dump() << '\n';
    return;
  }
  out << "crossings: " << s.crossings << '\n'
      << "components: " << s.components << '\n'
      << "writhe: " << s.writhe << '\n'
      << "determinant: " << s.determinant << '\n';
  if (s.jones) {
    out << "jones: " << s.jones->str("t", 2) << '\n';
  } else {
    out << "jones: skipped (" << s.crossings << " crossings exceed cap " << jones_cap << ")\n";
  }
}

void print_matrix(std::ostream& out, const TwistMatrix& M, bool as_json) {
  if (as_json) {
    out << matrix_to_json(M).dump() << '\n';
  } else {
    out << format_twist_matrix(M);
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical forms and invariants of highly twisted plat diagrams", "plat"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON lines");

  std::function<void()> action;
  std::string file, file2, style_name = "standard";
  bool force = false;
  int jones_cap = kDefaultBracketCap;

  auto add_file = [&](CLI::App* sub) { sub->add_option("FILE", file, "Twist matrix file")->required(); };
  auto add_style = [&](CLI::App* sub) {
    sub->add_option("--style", style_name, "standard | even | doubly-even")
        ->check(CLI::IsMember({"standard", "even", "doubly-even"}));
  };

  auto* validate_cmd = app.add_subcommand("validate", "Check the shape of a twist matrix");
  add_file(validate_cmd);
  validate_cmd->callback([&] {
    action = [&] {
      const auto M = read_matrix_file(file);
      require_valid(M);
      std::int64_t min_twist = std::numeric_limits<std::int64_t>::max();
      for (const auto& row : M.rows) {
        for (auto a : row) min_twist = std::min<std::int64_t>(min_twist, std::llabs(a));
      }
      if (as_json) {
        out << json{{"ok", true}, {"m", M.m}, {"n", M.n}, {"crossings", crossing_total(M)},
                    {"min_twist", min_twist}}
                   .dump()
            << '\n';
      } else {
        out << "ok: m=" << M.m << " n=" << M.n << " crossings=" << crossing_total(M)
            << " min|a|=" << min_twist << '\n';
      }
    };
  });

  auto* canon_cmd = app.add_subcommand("canon", "Print the canonical representative");
  add_file(canon_cmd);
  canon_cmd->add_flag("--force", force, "Allow inputs outside the uniqueness range");
  canon_cmd->callback([&] {
    action = [&] { print_matrix(out, canonical_form(read_matrix_file(file), {force}), as_json); };
  });

  auto* equiv_cmd = app.add_subcommand("equiv", "Decide whether two plats are equivalent");
  equiv_cmd->add_option("FILE1", file, "First twist matrix")->required();
  equiv_cmd->add_option("FILE2", file2, "Second twist matrix")->required();
  equiv_cmd->add_flag("--force", force, "Allow inputs outside the uniqueness range");
  equiv_cmd->callback([&] {
    action = [&] {
      const auto a = canonical_form(read_matrix_file(file), {force});
      const auto b = canonical_form(read_matrix_file(file2), {force});
      const bool same = a == b;
      if (as_json) {
        out << json{{"equivalent", same}, {"canonical", {matrix_to_json(a), matrix_to_json(b)}}}
                   .dump()
            << '\n';
      } else {
        out << (same ? "equivalent" : "not equivalent") << '\n';
      }
      if (!same) throw Negative{};
    };
  });

  auto* sym_cmd = app.add_subcommand("symmetries", "List the rotations fixing the matrix");
  add_file(sym_cmd);
  sym_cmd->callback([&] {
    action = [&] {
      json names = json::array();
      for (auto g : symmetry_group(read_matrix_file(file))) names.push_back(std::string(to_string(g)));
      if (as_json) {
        out << json{{"symmetries", names}}.dump() << '\n';
      } else {
        for (std::size_t i = 0; i < names.size(); ++i) {
          out << (i ? " " : "") << names[i].get<std::string>();
        }
        out << '\n';
      }
    };
  });

  auto* braid_cmd = app.add_subcommand("braid", "Expand to a braid word");
  add_file(braid_cmd);
  braid_cmd->callback([&] {
    action = [&] {
      const auto w = to_braid_word(read_matrix_file(file));
      if (as_json) {
        out << json{{"strands", w.strands()}, {"length", w.size()}, {"word", format_braid_word(w)}}
                   .dump()
            << '\n';
      } else {
        out << format_braid_word(w) << '\n';
      }
    };
  });

  auto* pd_cmd = app.add_subcommand("pd", "Planar diagram code of a closure");
  add_file(pd_cmd);
  add_style(pd_cmd);
  pd_cmd->callback([&] {
    action = [&] {
      const auto d = closure(read_matrix_file(file), parse_closure_style(style_name));
      if (as_json) {
        out << pd_json(d).dump() << '\n';
      } else {
        out << format_pd(d);
        if (d.free_loops()) out << "# free loops: " << d.free_loops() << '\n';
      }
    };
  });

  auto* gauss_cmd = app.add_subcommand("gauss", "Signed Gauss code of a closure");
  add_file(gauss_cmd);
  add_style(gauss_cmd);
  gauss_cmd->callback([&] {
    action = [&] {
      const auto d = closure(read_matrix_file(file), parse_closure_style(style_name));
      if (as_json) {
        json comps = json::array();
        for (const auto& comp : gauss_code(d)) {
          json tokens = json::array();
          for (const auto& g : comp) {
            tokens.push_back(std::string(g.over ? "O" : "U") + std::to_string(g.crossing) +
                             (g.sign > 0 ? "+" : "-"));
          }
          comps.push_back(tokens);
        }
        out << json{{"gauss", comps}}.dump() << '\n';
      } else {
        out << format_gauss(d);
      }
    };
  });

  auto* inv_cmd = app.add_subcommand("invariants", "Components, writhe, determinant, Jones");
  add_file(inv_cmd);
  add_style(inv_cmd);
  inv_cmd->add_option("--jones-cap", jones_cap, "Largest crossing count for the state sum")
      ->check(CLI::Range(0, 40));
  inv_cmd->callback([&] {
    action = [&] {
      const auto d = closure(read_matrix_file(file), parse_closure_style(style_name));
      print_summary(out, summarize(d, jones_cap), jones_cap, as_json);
    };
  });

  std::string coeffs_text, rational_text;
  auto* tb_cmd = app.add_subcommand("twobridge", "Schubert pairs and continued fractions");
  auto* coeffs_opt = tb_cmd->add_option("--coeffs", coeffs_text, "Comma-separated a_1,...,a_n");
  auto* rational_opt = tb_cmd->add_option("--rational", rational_text, "p/q to expand");
  coeffs_opt->excludes(rational_opt);
  tb_cmd->callback([&] {
    action = [&] {
      if (!coeffs_text.empty()) {
        const auto c = parse_coefficient_list(coeffs_text);
        const auto pair = schubert_pair(c);
        if (as_json) {
          out << json{{"coeffs", c}, {"pair", {pair.first().str(), pair.second().str()}}}.dump()
              << '\n';
        } else {
          out << pair.first() << ' ' << pair.second() << '\n';
        }
      } else if (!rational_text.empty()) {
        const auto r = parse_rational(rational_text);
        const auto e = cf_reconstruct(r);
        if (as_json) {
          out << json{{"rational", r.str()}, {"expansion", e}}.dump() << '\n';
        } else {
          out << format_cf(e) << '\n';
        }
      } else {
        throw CLI::RequiredError("--coeffs or --rational");
      }
    };
  });

  std::string left_text, right_text;
  int strands = 8, length = 4, samples = 16;
  std::uint64_t seed = 1;
  auto* hilden_cmd = app.add_subcommand("hilden", "Hilden moves on plat braid words");
  hilden_cmd->require_subcommand(1);
  auto* apply_cmd = hilden_cmd->add_subcommand("apply", "Multiply by Hilden moves");
  add_file(apply_cmd);
  add_style(apply_cmd);
  apply_cmd->add_option("--left", left_text, "Moves multiplied on the left, e.g. h2@1,h1@3");
  apply_cmd->add_option("--right", right_text, "Moves multiplied on the right");
  apply_cmd->add_option("--jones-cap", jones_cap, "Largest crossing count for the state sum")
      ->check(CLI::Range(0, 40));
  apply_cmd->callback([&] {
    action = [&] {
      const auto M = read_matrix_file(file);
      const auto word = apply_moves(to_braid_word(M), parse_hilden_moves(left_text),
                                    parse_hilden_moves(right_text));
      const auto d = closure(word, parse_closure_style(style_name));
      const auto summary = summarize(d, jones_cap);
      if (as_json) {
        print_summary(out, summary, jones_cap, true,
                      json{{"strands", word.strands()}, {"word", format_braid_word(word)}});
      } else {
        out << "word: " << format_braid_word(word) << '\n';
        print_summary(out, summary, jones_cap, false);
      }
    };
  });
  auto* random_cmd = hilden_cmd->add_subcommand("random", "Sample a Hilden subgroup element");
  random_cmd->add_option("--strands", strands, "Even strand count")->check(CLI::Range(2, 1000));
  random_cmd->add_option("--length", length, "Number of generators")->check(CLI::Range(0, 100000));
  random_cmd->add_option("--seed", seed, "Sampler seed");
  random_cmd->callback([&] {
    action = [&] {
      const auto w = random_hilden_element(strands, length, seed);
      if (as_json) {
        out << json{{"strands", strands}, {"seed", seed}, {"word", format_braid_word(w)}}.dump()
            << '\n';
      } else {
        out << format_braid_word(w) << '\n';
      }
    };
  });
  auto* coset_cmd = hilden_cmd->add_subcommand("coset", "Double-coset consistency report");
  coset_cmd->add_option("FILE1", file, "First twist matrix")->required();
  coset_cmd->add_option("FILE2", file2, "Second twist matrix")->required();
  coset_cmd->add_option("--samples", samples, "Hilden translates to try")->check(CLI::Range(0, 10000));
  coset_cmd->add_option("--length", length, "Generators per side")->check(CLI::Range(0, 1000));
  coset_cmd->add_option("--seed", seed, "Sampler seed");
  coset_cmd->callback([&] {
    action = [&] {
      const auto report = coset_consistency(read_matrix_file(file), read_matrix_file(file2),
                                            {samples, length, seed});
      if (as_json) {
        out << json{{"verdict", std::string(to_string(report.verdict))},
                    {"same_canonical_form", report.same_canonical_form},
                    {"identical_words", report.identical_words},
                    {"samples", report.samples},
                    {"determinants", {report.first_determinant, report.second_determinant}},
                    {"components", {report.first_components, report.second_components}},
                    {"notes", report.notes}}
                   .dump()
            << '\n';
      } else {
        out << "verdict: " << to_string(report.verdict) << '\n'
            << "same canonical form: " << (report.same_canonical_form ? "yes" : "no") << '\n'
            << "determinants: " << report.first_determinant << ' ' << report.second_determinant
            << '\n'
            << "components: " << report.first_components << ' ' << report.second_components
            << '\n'
            << "samples: " << report.samples << '\n';
        for (const auto& note : report.notes) out << "note: " << note << '\n';
      }
      if (report.verdict == CosetVerdict::Inconsistent) throw Negative{};
    };
  });

  int m = 0, n = 0;
  auto* spheres_cmd = app.add_subcommand("spheres", "Canonical maximal collection of vertical spheres");
  spheres_cmd->add_option("--m", m, "Plat width")->required();
  spheres_cmd->add_option("--n", n, "Plat height")->required();
  spheres_cmd->callback([&] {
    action = [&] {
      const auto chain = maximal_collection(m, n);
      if (as_json) {
        json list = json::array();
        for (const auto& s : chain) list.push_back(s.c);
        out << json{{"m", m}, {"n", n}, {"r", chain.size()}, {"spheres", list}}.dump() << '\n';
      } else {
        out << "r = " << chain.size() << '\n';
        for (const auto& s : chain) out << to_string(s) << '\n';
      }
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const Negative&) {
    return kExitNegative;
  } catch (const Error& e) {
    if (as_json) {
      err << json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << '\n';
    } else {
      err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    }
    return kExitUsage;
  } catch (const CLI::Error& e) {
    err << "error: Usage: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace platknot::cli
