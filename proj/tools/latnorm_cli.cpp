#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "latnorm/construct.hpp"
#include "latnorm/fixtures.hpp"
#include "latnorm/io.hpp"
#include "latnorm/search.hpp"

using namespace latnorm;
using nlohmann::json;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;

bool g_json = false;

// "@name" reads a bundled lattice, table ("@table3") or example
// decomposition ("@ex4.1"); anything else is a path.
std::string read_source(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    const std::string name = arg.substr(1);
    if (name.rfind("table", 0) == 0) return std::string(fixtures::table_source(std::stoi(name.substr(5))));
    if (name == "ex4.1") return std::string(fixtures::example41_source());
    if (name == "ex4.2") return std::string(fixtures::example42_source());
    return std::string(fixtures::lattice_source(name));
  }
  std::ifstream in(arg);
  if (!in) throw Error(ErrorCode::ValidationError, "cannot read '" + arg + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Target {
  Lattice host;
  std::optional<Sublattice> sub;
  const Lattice& lattice() const { return sub ? sub->lattice : host; }
};

Target load_target(const std::string& path, const std::vector<std::string>& interval, bool order_matrix) {
  Target t{parse_lattice(read_source(path), ParseOptions{order_matrix}), std::nullopt};
  if (!interval.empty()) {
    auto a = t.host.find(interval[0]);
    auto b = t.host.find(interval[1]);
    if (!a || !b) throw Error(ErrorCode::UnknownElement, "interval endpoint is not an element");
    t.sub = interval_sublattice(t.host, *a, *b);
  }
  return t;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string tuple(const Lattice& l, const std::vector<Elem>& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "," : "") + l.name(w[i]);
  return out + ")";
}

void print_check(const Lattice& l, const std::string& name, const Check& c) {
  std::cout << "  " << name << std::string(name.size() < 22 ? 22 - name.size() : 1, ' ') << yes_no(c.holds);
  if (!c.holds && !c.witness.empty()) std::cout << "  witness " << tuple(l, c.witness);
  std::cout << '\n';
}

void print_axioms(const Lattice& l, const AxiomReport& r) {
  print_check(l, "neutral_top", r.neutral_top);
  print_check(l, "monotone", r.monotone);
  print_check(l, "commutative", r.commutative);
  print_check(l, "associative", r.associative);
  print_check(l, "bounded_by_meet", r.bounded_by_meet);
  print_check(l, "annihilating", r.annihilating);
  print_check(l, "strong", r.strong);
  print_check(l, "left_continuous", r.left_continuous);
  std::cout << "  t-norm: " << yes_no(r.is_tnorm()) << ", t-subnorm: " << yes_no(r.is_tsubnorm())
            << ", left-continuous t-norm: " << yes_no(r.is_left_continuous_tnorm())
            << ", left-continuous t-subnorm: " << yes_no(r.is_left_continuous_tsubnorm()) << '\n';
}

void print_fmap(const Lattice& l, const FMapReport& r) {
  print_check(l, "top_preserving", r.top_preserving);
  print_check(l, "contractive", r.contractive);
  print_check(l, "idempotent", r.idempotent);
  print_check(l, "join_preserving", r.join_preserving);
  print_check(l, "image_is_lattice", r.image_is_lattice);
  print_check(l, "image_distributive", r.image_distributive);
  print_check(l, "order_preserving", r.order_preserving);
}

bool verdict_for(const AxiomReport& r, const std::string& as) {
  if (as == "tnorm") return r.is_tnorm();
  if (as == "tsubnorm") return r.is_tsubnorm();
  if (as == "strong-tsubnorm") return r.is_strong_tsubnorm();
  if (as == "lc-tsubnorm") return r.is_left_continuous_tsubnorm();
  if (as == "lc-strong-tsubnorm") return r.is_left_continuous_strong_tsubnorm();
  return r.is_left_continuous_tnorm();
}

int emit_operator(const Lattice& l, const BinaryOp& op, const std::string& expect, const std::string& out_path) {
  const auto report = check_operator(l, op);
  const bool ok = verdict_for(report, expect);
  if (!out_path.empty()) {
    std::ofstream(out_path) << serialize_op(l, op);
  }
  if (g_json) {
    std::cout << json{{"operator", to_json(l, op)}, {"report", to_json(l, report)}, {"expected", expect},
                      {"verdict", ok}}
                     .dump(2)
              << '\n';
  } else {
    std::cout << serialize_op(l, op);
    print_axioms(l, report);
  }
  return ok ? kTrue : kFalse;
}

std::string cji_set(const Lattice& l) {
  std::string out;
  for (Elem x : completely_join_irreducibles(l)) out += (out.empty() ? "" : " ") + l.name(x);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Left-continuous t-norms on finite lattices"};
  app.require_subcommand(1);
  app.add_flag("--json", g_json, "Machine-readable output");
  bool order_matrix = false;
  app.add_flag("--order-matrix", order_matrix, "Accept lattice files with a full 'order' matrix");

  std::string lattice_path, map_path, op_path, decomp_path, out_path, fixture;
  std::vector<std::string> interval, chain_labels;
  bool weak = false, brute = false, formula_only = false;
  std::size_t max_results = kUnlimited;
  unsigned workers = 1;
  std::string expect = "lc-tnorm";

  auto* validate = app.add_subcommand("validate", "Parse and validate a lattice file");
  validate->add_option("lattice", lattice_path)->required();

  auto* analyze = app.add_subcommand("analyze", "Distributivity and irreducible elements");
  analyze->add_option("lattice", lattice_path)->required();

  auto* check_map = app.add_subcommand("check-map", "Test the f-mapping conditions");
  check_map->add_option("lattice", lattice_path)->required();
  check_map->add_option("map", map_path)->required();
  check_map->add_flag("--weak", weak, "Ask for a weak f-mapping");
  check_map->add_option("--interval", interval, "Map acts on the interval [a, b]")->expected(2);

  auto* check_op = app.add_subcommand("check-op", "Evaluate the t-norm axioms");
  check_op->add_option("lattice", lattice_path)->required();
  check_op->add_option("op", op_path)->required();
  check_op->add_option("--interval", interval, "Operator acts on the interval [a, b]")->expected(2);
  check_op->add_option("--as", expect, "Verdict to report")
      ->check(CLI::IsMember({"tnorm", "tsubnorm", "strong-tsubnorm", "lc-tnorm", "lc-tsubnorm", "lc-strong-tsubnorm"}));

  auto* construct = app.add_subcommand("construct", "Build an operator");
  construct->require_subcommand(1);
  construct->add_option("-o,--output", out_path, "Also write the operator file here");
  auto* thm31 = construct->add_subcommand("thm31", "f(x) ^ f(y) in the image of a weak f-mapping");
  auto* thm32 = construct->add_subcommand("thm32", "meet on the top, f(x) ^ f(y) elsewhere");
  for (auto* c : {thm31, thm32}) {
    c->add_option("lattice", lattice_path)->required();
    c->add_option("map", map_path)->required();
  }
  auto* thm41 = construct->add_subcommand("thm41", "ordinal sum over a chain");
  auto* thm42 = construct->add_subcommand("thm42", "ordinal sum over a semi-linear family");
  auto* cor41 = construct->add_subcommand("cor41", "chain sum with weak f-mapping blocks");
  auto* saminger = construct->add_subcommand("saminger", "ordinal sum on closed squares");
  for (auto* c : {thm41, thm42, cor41, saminger}) {
    c->add_option("lattice", lattice_path)->required();
    c->add_option("decomposition", decomp_path)->required();
  }
  thm42->add_flag("--formula-only", formula_only, "Skip the weak f-mapping requirement on gap maps");

  auto* extract = app.add_subcommand("extract", "Recover chain summands from an operator");
  extract->add_option("lattice", lattice_path)->required();
  extract->add_option("op", op_path)->required();
  extract->add_option("--chain", chain_labels, "Chain points from bottom to top")->required();

  auto* search = app.add_subcommand("search", "Find every left-continuous t-norm");
  search->add_option("lattice", lattice_path)->required();
  search->add_option("--max", max_results, "Keep at most N results (0 counts only)");
  search->add_flag("--brute", brute, "Use the brute-force enumeration (at most 4 elements)");
  search->add_option("--workers", workers, "Parallel workers")->check(CLI::PositiveNumber);

  auto* enum_fmaps = app.add_subcommand("enum-fmaps", "Enumerate f-mappings");
  enum_fmaps->add_option("lattice", lattice_path)->required();
  enum_fmaps->add_flag("--weak", weak, "Enumerate weak f-mappings");
  enum_fmaps->add_option("--max", max_results, "Keep at most N results (0 counts only)");

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram in DOT");
  dot->add_option("lattice", lattice_path)->required();

  auto* reproduce = app.add_subcommand("reproduce", "Run a bundled fixture, or 'all'");
  reproduce->add_option("fixture", fixture)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kTrue : kInputError;
  }

  try {
    if (*reproduce) {
      std::vector<std::string> ids = fixture == "all" ? fixtures::fixture_ids() : std::vector<std::string>{fixture};
      bool all = true;
      json reports = json::array();
      for (const auto& id : ids) {
        const auto start = std::chrono::steady_clock::now();
        const auto r = fixtures::run_fixture(id);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && r.passed();
        if (g_json) {
          auto j = r.to_json();
          j["seconds"] = secs;
          reports.push_back(j);
        } else {
          std::cout << r.to_text();
        }
      }
      if (g_json) std::cout << (ids.size() == 1 ? reports[0] : reports).dump(2) << '\n';
      return all ? kTrue : kFalse;
    }

    const auto target = load_target(lattice_path, interval, order_matrix);
    const Lattice& l = target.lattice();

    if (*validate) {
      if (g_json)
        std::cout << json{{"valid", true}, {"elements", l.names()}, {"covers", l.covers().size()}}.dump(2) << '\n';
      else
        std::cout << "valid lattice: " << l.size() << " elements, " << l.covers().size() << " covers, bottom "
                  << l.name(l.bottom()) << ", top " << l.name(l.top()) << '\n';
      return kTrue;
    }

    if (*analyze) {
      const auto d = is_distributive(l);
      std::vector<Elem> ji;
      for (Elem x = 0; x < l.size(); ++x)
        if (l.lower_covers(x).size() <= 1) ji.push_back(x);
      const bool top_cji = is_completely_join_irreducible(l, l.top());
      if (g_json) {
        std::cout << json{{"distributive", to_json(l, d)},
                          {"completely_join_irreducible", labels(l, completely_join_irreducibles(l))},
                          {"join_irreducible", labels(l, ji)},
                          {"top_completely_join_irreducible", top_cji}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << "distributive: " << yes_no(d.holds);
        if (!d.holds) std::cout << "  witness " << tuple(l, d.witness);
        std::cout << "\ncompletely join-irreducible: {" << cji_set(l) << "}\njoin-irreducible: {";
        for (std::size_t i = 0; i < ji.size(); ++i) std::cout << (i ? " " : "") << l.name(ji[i]);
        std::cout << "}\ntop completely join-irreducible: " << yes_no(top_cji) << '\n';
      }
      return kTrue;
    }

    if (*check_map) {
      const auto f = parse_map(l, read_source(map_path));
      const auto r = weak ? check_weak_fmapping(l, f) : check_fmapping(l, f);
      const bool ok = weak ? r.is_weak_fmapping() : r.is_fmapping();
      if (g_json) {
        std::cout << to_json(l, r).dump(2) << '\n';
      } else {
        print_fmap(l, r);
        std::cout << "  " << (weak ? "weak f-mapping: " : "f-mapping: ") << yes_no(ok) << '\n';
      }
      return ok ? kTrue : kFalse;
    }

    if (*check_op) {
      const auto op = parse_op(l, read_source(op_path));
      const auto r = check_operator(l, op);
      const bool ok = verdict_for(r, expect);
      if (g_json) {
        auto j = to_json(l, r);
        j["verdict"] = ok;
        std::cout << j.dump(2) << '\n';
      } else {
        print_axioms(l, r);
      }
      return ok ? kTrue : kFalse;
    }

    if (*construct) {
      if (*thm31) {
        const auto f = parse_map(l, read_source(map_path));
        return emit_operator(l, subnorm_from_weak_fmap(l, f), "lc-tsubnorm", out_path);
      }
      if (*thm32) {
        const auto f = parse_map(l, read_source(map_path));
        return emit_operator(l, tnorm_from_fmap(l, f), "lc-tnorm", out_path);
      }
      const auto file = parse_decomposition(l, read_source(decomp_path));
      if (*thm41) return emit_operator(l, ordinal_sum_chain(l, to_chain_decomposition(l, file)), "lc-tnorm", out_path);
      if (*thm42) {
        const auto d = to_semilinear_decomposition(l, file);
        const auto policy = formula_only ? GapMapPolicy::FormulaOnly : GapMapPolicy::RequireWeakFMapping;
        return emit_operator(l, ordinal_sum_semilinear(l, d, policy), "lc-tnorm", out_path);
      }
      if (*cor41) {
        if (!file.chain) throw Error(ErrorCode::InvalidDecomposition, "cor41 needs a chain");
        const std::size_t n = file.chain->size();
        std::vector<UnaryMap> gaps;
        for (std::size_t k = 1; k + 1 < n; ++k) {
          auto it = file.gaps.find(k);
          if (it == file.gaps.end()) throw Error(ErrorCode::MissingGapMap, "missing gap " + std::to_string(k));
          gaps.push_back(it->second);
        }
        std::optional<BinaryOp> top = file.top;
        if (!top)
          if (auto it = file.summands.find(n - 1); it != file.summands.end()) top = it->second;
        if (!top) throw Error(ErrorCode::MissingTopOp, "cor41 needs an operator on the last interval");
        return emit_operator(l, corollary41_construct(l, make_chain(l, *file.chain), gaps, *top), "lc-tnorm",
                             out_path);
      }
      if (*saminger) {
        std::vector<BinaryOp> ops;
        for (std::size_t k = 1; k <= file.intervals.size(); ++k) {
          auto it = file.summands.find(k);
          if (it == file.summands.end())
            throw Error(ErrorCode::InvalidIntervals, "missing summand " + std::to_string(k));
          ops.push_back(it->second);
        }
        return emit_operator(l, saminger_sum(l, file.intervals, ops), "tnorm", out_path);
      }
    }

    if (*extract) {
      const auto op = parse_op(l, read_source(op_path));
      std::vector<Elem> pts;
      for (const auto& s : chain_labels) {
        auto e = l.find(s);
        if (!e) throw Error(ErrorCode::UnknownElement, "unknown element '" + s + "'");
        pts.push_back(*e);
      }
      const auto chain = make_chain(l, pts);
      const ChainDecomposition d{chain, extract_summands(l, op, chain)};
      const auto cls = classify_chain_summands(l, d);
      const bool rebuilt = ordinal_sum_chain(l, d) == op;
      json j = {{"summands", json::array()}, {"predicts_lc_tnorm", cls.predicts_lc_tnorm}, {"round_trip", rebuilt}};
      for (std::size_t i = 0; i < d.summands.size(); ++i) {
        const auto sub = interval_sublattice(l, pts[i], pts[i + 1]);
        const auto& v = cls.summands[i];
        if (g_json) {
          j["summands"].push_back({{"interval", {l.name(pts[i]), l.name(pts[i + 1])}},
                                   {"operator", to_json(sub.lattice, d.summands[i])},
                                   {"requires_tnorm", v.requires_tnorm},
                                   {"satisfied", v.satisfied}});
        } else {
          std::cout << "summand " << i + 1 << " on [" << l.name(pts[i]) << "," << l.name(pts[i + 1]) << "]: "
                    << (v.requires_tnorm ? "left-continuous t-norm " : "left-continuous t-subnorm ")
                    << (v.satisfied ? "yes" : "no") << '\n'
                    << serialize_op(sub.lattice, d.summands[i]);
        }
      }
      if (g_json)
        std::cout << j.dump(2) << '\n';
      else
        std::cout << "round trip exact: " << yes_no(rebuilt)
                  << "\nleft-continuous t-norm: " << yes_no(cls.predicts_lc_tnorm) << '\n';
      return cls.predicts_lc_tnorm ? kTrue : kFalse;
    }

    if (*search) {
      const auto r = brute ? brute_force_lc_tnorms(l) : search_lc_tnorms(l, SearchOptions{max_results, workers});
      if (g_json) {
        std::cout << to_json(l, r).dump(2) << '\n';
      } else {
        for (const auto& op : r.found) std::cout << serialize_op(l, op) << '\n';
        std::cout << "found " << r.count << (r.exhausted ? " (exhaustive)" : " (truncated)") << ", "
                  << r.stats.nodes << " nodes\n";
      }
      return r.count > 0 ? kTrue : kFalse;
    }

    if (*enum_fmaps) {
      const auto r = enumerate_weak_fmappings(l, !weak, max_results);
      if (g_json) {
        json maps = json::array();
        for (const auto& f : r.maps) maps.push_back(labels(l, f.table));
        std::cout << json{{"elements", l.names()}, {"maps", maps}, {"count", r.count}, {"exhausted", r.exhausted}}
                         .dump(2)
                  << '\n';
      } else {
        for (const auto& f : r.maps) std::cout << serialize_map(l, f) << '\n';
        std::cout << "found " << r.count << (r.exhausted ? " (exhaustive)" : " (truncated)") << '\n';
      }
      return r.count > 0 ? kTrue : kFalse;
    }

    if (*dot) {
      std::cout << export_dot(l);
      return kTrue;
    }
  } catch (const MapConditionError& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
