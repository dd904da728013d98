#include "latnorm/io.hpp"

#include <charconv>
#include <set>
#include <sstream>

namespace latnorm {

namespace {

struct Line {
  std::size_t no;
  std::vector<std::string> tok;
};

std::vector<Line> lex(std::string_view text) {
  std::vector<Line> out;
  std::size_t no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view raw = text.substr(pos, end - pos);
    ++no;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{no, {}};
    for (std::string t; in >> t;) line.tok.push_back(std::move(t));
    if (!line.tok.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void syntax(std::size_t line, const std::string& msg) {
  throw ParseError(ErrorCode::SyntaxError, line, msg, ErrorCode::SyntaxError);
}

[[noreturn]] void invalid(std::size_t line, const Error& e) {
  throw ParseError(ErrorCode::ValidationError, line, std::string(to_string(e.code())) + ": " + e.what(), e.code(),
                   e.witness());
}

Elem lookup(const Lattice& l, const Line& line, const std::string& label) {
  if (auto e = l.find(label)) return *e;
  throw ParseError(ErrorCode::UnknownElement, line.no, "unknown element '" + label + "'", ErrorCode::UnknownElement);
}

std::size_t number(const Line& line, const std::string& s) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) syntax(line.no, "expected a number, got '" + s + "'");
  return v;
}

std::size_t last_line(const std::vector<Line>& ls) { return ls.empty() ? 0 : ls.back().no; }

// Reads `op m` and m rows starting at ls[i]; leaves i after the last row.
BinaryOp read_op(const Lattice& l, const std::vector<Line>& ls, std::size_t& i) {
  if (i >= ls.size()) syntax(last_line(ls), "expected 'op <n>'");
  const Line& head = ls[i];
  if (head.tok.size() != 2 || head.tok[0] != "op") syntax(head.no, "expected 'op <n>'");
  const std::size_t n = number(head, head.tok[1]);
  if (n != l.size())
    throw ParseError(ErrorCode::ValidationError, head.no,
                     "operator has " + std::to_string(n) + " rows, lattice has " + std::to_string(l.size()) +
                         " elements",
                     ErrorCode::SizeMismatch);
  ++i;
  std::vector<Elem> cells;
  for (std::size_t r = 0; r < n; ++r, ++i) {
    if (i >= ls.size()) syntax(last_line(ls), "operator table has too few rows");
    if (ls[i].tok.size() != n) syntax(ls[i].no, "row must have " + std::to_string(n) + " entries");
    for (const auto& t : ls[i].tok) cells.push_back(lookup(l, ls[i], t));
  }
  return BinaryOp(n, std::move(cells));
}

// Reads `x -> y` lines until `end` (when terminated) or the end of input.
UnaryMap read_map(const Lattice& l, const std::vector<Line>& ls, std::size_t& i, bool terminated) {
  const std::size_t n = l.size();
  std::vector<std::optional<Elem>> table(n);
  std::size_t start = i < ls.size() ? ls[i].no : last_line(ls);
  bool closed = false;
  for (; i < ls.size(); ++i) {
    const Line& line = ls[i];
    if (terminated && line.tok.size() == 1 && line.tok[0] == "end") {
      ++i;
      closed = true;
      break;
    }
    if (line.tok.size() != 3 || line.tok[1] != "->") syntax(line.no, "expected '<x> -> <y>'");
    const Elem x = lookup(l, line, line.tok[0]);
    const Elem y = lookup(l, line, line.tok[2]);
    if (table[x])
      throw ParseError(ErrorCode::DuplicateEntry, line.no, "element '" + line.tok[0] + "' mapped twice",
                       ErrorCode::DuplicateEntry, {x});
    table[x] = y;
  }
  if (terminated && !closed) syntax(last_line(ls), "map block is missing 'end'");
  UnaryMap f{std::vector<Elem>(n)};
  for (Elem x = 0; x < n; ++x) {
    if (!table[x])
      throw ParseError(ErrorCode::ValidationError, start, "map is not total: no value for '" + l.name(x) + "'",
                       ErrorCode::SizeMismatch, {x});
    f.table[x] = *table[x];
  }
  return f;
}

Sublattice sub_or_throw(const Lattice& l, std::size_t line, Elem a, Elem b) {
  try {
    return interval_sublattice(l, a, b);
  } catch (const Error& e) {
    invalid(line, e);
  }
}

BinaryOp read_spec(const Lattice& sub, const std::vector<Line>& ls, std::size_t& i, std::size_t at) {
  const Line& line = ls[i];
  if (line.tok.size() <= at) syntax(line.no, "missing operator specification");
  const std::string& kind = line.tok[at];
  if (kind == "op") {
    if (line.tok.size() != at + 2) syntax(line.no, "expected 'op <n>'");
    Line head{line.no, {"op", line.tok[at + 1]}};
    std::vector<Line> rest{head};
    rest.insert(rest.end(), ls.begin() + static_cast<std::ptrdiff_t>(i) + 1, ls.end());
    std::size_t j = 0;
    BinaryOp op = read_op(sub, rest, j);
    i += j;
    return op;
  }
  if (line.tok.size() != at + 1) syntax(line.no, "unexpected tokens after '" + kind + "'");
  ++i;
  if (kind == "meet") return meet_op(sub);
  if (kind == "drastic") return drastic_op(sub);
  if (kind == "bottom") return constant_op(sub, sub.bottom());
  syntax(line.no, "unknown operator '" + kind + "'");
}

std::string join_labels(const Lattice& l, const std::vector<Elem>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += ' ';
    out += l.name(xs[k]);
  }
  return out;
}

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

Lattice parse_lattice(std::string_view text, const ParseOptions& options) {
  const auto ls = lex(text);
  if (ls.empty() || ls[0].tok[0] != "elements") syntax(ls.empty() ? 0 : ls[0].no, "expected 'elements'");
  const Line& head = ls[0];
  if (head.tok.size() < 2) syntax(head.no, "'elements' needs at least one label");
  std::vector<std::string> names(head.tok.begin() + 1, head.tok.end());
  {
    std::set<std::string> seen;
    for (const auto& s : names)
      if (!seen.insert(s).second)
        throw ParseError(ErrorCode::DuplicateEntry, head.no, "element '" + s + "' declared twice",
                         ErrorCode::DuplicateEntry);
  }
  auto index = [&](const Line& line, const std::string& label) -> Elem {
    for (Elem x = 0; x < names.size(); ++x)
      if (names[x] == label) return x;
    throw ParseError(ErrorCode::UnknownElement, line.no, "unknown element '" + label + "'",
                     ErrorCode::UnknownElement);
  };

  if (ls.size() < 2) syntax(last_line(ls), "expected 'covers'");
  const Line& mode = ls[1];
  const bool order = mode.tok.size() == 1 && mode.tok[0] == "order" && options.allow_order_matrix;
  if (!order && (mode.tok.size() != 1 || mode.tok[0] != "covers")) syntax(mode.no, "expected 'covers'");

  std::size_t i = 2;
  const std::size_t n = names.size();
  std::vector<CoverPair> covers;
  std::vector<bool> leq;
  if (order) {
    for (std::size_t r = 0; r < n; ++r, ++i) {
      if (i >= ls.size()) syntax(last_line(ls), "order matrix has too few rows");
      if (ls[i].tok.size() != n) syntax(ls[i].no, "row must have " + std::to_string(n) + " entries");
      for (const auto& t : ls[i].tok) {
        if (t != "0" && t != "1") syntax(ls[i].no, "order entries must be 0 or 1");
        leq.push_back(t == "1");
      }
    }
    if (i >= ls.size() || ls[i].tok != std::vector<std::string>{"end"}) syntax(last_line(ls), "expected 'end'");
  } else {
    std::set<CoverPair> seen;
    for (;; ++i) {
      if (i >= ls.size()) syntax(last_line(ls), "expected 'end'");
      const Line& line = ls[i];
      if (line.tok.size() == 1 && line.tok[0] == "end") break;
      if (line.tok.size() != 2) syntax(line.no, "expected '<lower> <upper>'");
      CoverPair p{index(line, line.tok[0]), index(line, line.tok[1])};
      if (!seen.insert(p).second)
        throw ParseError(ErrorCode::DuplicateEntry, line.no, "cover listed twice", ErrorCode::DuplicateEntry,
                         {p.first, p.second});
      covers.push_back(p);
    }
  }
  if (i + 1 < ls.size()) syntax(ls[i + 1].no, "unexpected content after 'end'");
  try {
    return order ? Lattice::from_order(std::move(names), leq) : Lattice::from_covers(std::move(names), covers);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    invalid(0, e);
  }
}

UnaryMap parse_map(const Lattice& lattice, std::string_view text) {
  const auto ls = lex(text);
  std::size_t i = 0;
  return read_map(lattice, ls, i, false);
}

BinaryOp parse_op(const Lattice& lattice, std::string_view text) {
  const auto ls = lex(text);
  std::size_t i = 0;
  BinaryOp op = read_op(lattice, ls, i);
  if (i < ls.size()) syntax(ls[i].no, "unexpected content after the table");
  return op;
}

std::string serialize_lattice(const Lattice& l) {
  std::string out = "elements " + join_labels(l, [&] {
                      std::vector<Elem> all(l.size());
                      for (Elem x = 0; x < l.size(); ++x) all[x] = x;
                      return all;
                    }()) + "\ncovers\n";
  for (auto [a, b] : l.covers()) out += l.name(a) + ' ' + l.name(b) + '\n';
  return out + "end\n";
}

std::string serialize_map(const Lattice& l, const UnaryMap& f) {
  std::string out;
  for (Elem x = 0; x < l.size(); ++x) out += l.name(x) + " -> " + l.name(f(x)) + '\n';
  return out;
}

std::string serialize_op(const Lattice& l, const BinaryOp& op) {
  const std::size_t n = op.size();
  std::string out = "op " + std::to_string(n) + '\n';
  for (Elem x = 0; x < n; ++x) {
    std::vector<Elem> row(n);
    for (Elem y = 0; y < n; ++y) row[y] = op(x, y);
    out += join_labels(l, row) + '\n';
  }
  return out;
}

std::string export_dot(const Lattice& l) {
  std::string out = "digraph lattice {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (Elem x = 0; x < l.size(); ++x) out += "  n" + std::to_string(x) + " [label=" + dot_quote(l.name(x)) + "];\n";
  for (auto [a, b] : l.covers()) out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  return out + "}\n";
}

DecompositionFile parse_decomposition(const Lattice& l, std::string_view text) {
  const auto ls = lex(text);
  DecompositionFile file;

  auto summand_interval = [&](const Line& line, std::size_t k) -> ClosedInterval {
    if (file.chain) {
      const auto& c = *file.chain;
      if (k == 0 || k >= c.size())
        throw ParseError(ErrorCode::ValidationError, line.no, "summand index out of range", ErrorCode::IndexOutOfRange);
      return {c[k - 1], c[k]};
    }
    if (k == 0 || k > file.intervals.size())
      throw ParseError(ErrorCode::ValidationError, line.no, "summand index out of range", ErrorCode::IndexOutOfRange);
    return file.intervals[k - 1];
  };
  auto top_interval = [&](const Line& line) -> ClosedInterval {
    if (file.chain && file.chain->size() >= 2) return {(*file.chain)[file.chain->size() - 2], file.chain->back()};
    if (!file.chain && !file.intervals.empty()) return {file.intervals.back().upper, l.top()};
    syntax(line.no, "'top' must follow the chain or the intervals");
  };
  auto gap_interval = [&](const Line& line, std::size_t k) -> ClosedInterval {
    auto out_of_range = [&] {
      throw ParseError(ErrorCode::ValidationError, line.no, "gap index out of range", ErrorCode::IndexOutOfRange);
    };
    if (file.chain) {
      const auto& c = *file.chain;
      if (k == 0 || k + 1 >= c.size()) out_of_range();
      return {c[k - 1], c[k]};
    }
    const auto& iv = file.intervals;
    if (iv.empty()) syntax(line.no, "'gap' must follow the intervals");
    if (k == 0) return {l.bottom(), iv.front().lower};
    if (k >= iv.size()) out_of_range();
    return {iv[k - 1].upper, iv[k].lower};
  };

  std::size_t i = 0;
  while (i < ls.size()) {
    const Line& line = ls[i];
    const std::string& kw = line.tok[0];
    if (kw == "chain") {
      if (file.chain) throw ParseError(ErrorCode::DuplicateEntry, line.no, "chain given twice", ErrorCode::DuplicateEntry);
      if (!file.intervals.empty()) syntax(line.no, "'chain' and 'interval' cannot be mixed");
      std::vector<Elem> pts;
      for (std::size_t k = 1; k < line.tok.size(); ++k) pts.push_back(lookup(l, line, line.tok[k]));
      try {
        file.chain = make_chain(l, pts).points;
      } catch (const Error& e) {
        invalid(line.no, e);
      }
      ++i;
    } else if (kw == "interval") {
      if (file.chain) syntax(line.no, "'chain' and 'interval' cannot be mixed");
      if (line.tok.size() != 3) syntax(line.no, "expected 'interval <a> <b>'");
      file.intervals.push_back({lookup(l, line, line.tok[1]), lookup(l, line, line.tok[2])});
      ++i;
    } else if (kw == "summand") {
      if (line.tok.size() < 3) syntax(line.no, "expected 'summand <i> <spec>'");
      const std::size_t k = number(line, line.tok[1]);
      const auto iv = summand_interval(line, k);
      if (file.summands.count(k))
        throw ParseError(ErrorCode::DuplicateEntry, line.no, "summand given twice", ErrorCode::DuplicateEntry);
      const auto sub = sub_or_throw(l, line.no, iv.lower, iv.upper);
      file.summands.emplace(k, read_spec(sub.lattice, ls, i, 2));
    } else if (kw == "top") {
      if (file.top) throw ParseError(ErrorCode::DuplicateEntry, line.no, "top given twice", ErrorCode::DuplicateEntry);
      const auto iv = top_interval(line);
      const auto sub = sub_or_throw(l, line.no, iv.lower, iv.upper);
      file.top = read_spec(sub.lattice, ls, i, 1);
    } else if (kw == "gap") {
      if (line.tok.size() != 2 && !(line.tok.size() == 3 && line.tok[2] == "map"))
        syntax(line.no, "expected 'gap <i> map'");
      const std::size_t k = number(line, line.tok[1]);
      const auto iv = gap_interval(line, k);
      if (file.gaps.count(k))
        throw ParseError(ErrorCode::DuplicateEntry, line.no, "gap map given twice", ErrorCode::DuplicateEntry);
      const auto sub = sub_or_throw(l, line.no, iv.lower, iv.upper);
      ++i;
      file.gaps.emplace(k, read_map(sub.lattice, ls, i, true));
    } else {
      syntax(line.no, "unknown keyword '" + kw + "'");
    }
  }
  return file;
}

ChainDecomposition to_chain_decomposition(const Lattice& l, const DecompositionFile& file) {
  if (!file.chain) throw Error(ErrorCode::InvalidDecomposition, "decomposition has no chain");
  ChainDecomposition d{make_chain(l, *file.chain), {}};
  for (std::size_t k = 1; k < file.chain->size(); ++k) {
    auto it = file.summands.find(k);
    if (it == file.summands.end())
      throw Error(ErrorCode::InvalidDecomposition, "missing summand " + std::to_string(k));
    d.summands.push_back(it->second);
  }
  return d;
}

SemiLinearDecomposition to_semilinear_decomposition(const Lattice& l, const DecompositionFile& file) {
  (void)l;
  if (file.chain) throw Error(ErrorCode::InvalidDecomposition, "semi-linear decomposition takes intervals, not a chain");
  SemiLinearDecomposition d;
  d.family.intervals = file.intervals;
  const std::size_t n = file.intervals.size();
  for (std::size_t k = 1; k <= n; ++k) {
    auto it = file.summands.find(k);
    if (it == file.summands.end())
      throw Error(ErrorCode::InvalidDecomposition, "missing summand " + std::to_string(k));
    d.summands.push_back(it->second);
  }
  d.top_op = file.top;
  if (auto it = file.gaps.find(0); it != file.gaps.end()) d.lower_gap_map = it->second;
  d.gap_maps.assign(n ? n - 1 : 0, std::nullopt);
  for (const auto& [k, f] : file.gaps)
    if (k >= 1) d.gap_maps[k - 1] = f;
  return d;
}

nlohmann::json labels(const Lattice& l, const std::vector<Elem>& elems) {
  auto out = nlohmann::json::array();
  for (Elem x : elems) out.push_back(l.name(x));
  return out;
}

nlohmann::json to_json(const Lattice& l, const Check& check) {
  return {{"holds", check.holds}, {"witness", labels(l, check.witness)}};
}

nlohmann::json to_json(const Lattice& l, const AxiomReport& r) {
  return {
      {"axioms",
       {{"neutral_top", to_json(l, r.neutral_top)},
        {"monotone", to_json(l, r.monotone)},
        {"commutative", to_json(l, r.commutative)},
        {"associative", to_json(l, r.associative)},
        {"bounded_by_meet", to_json(l, r.bounded_by_meet)},
        {"annihilating", to_json(l, r.annihilating)},
        {"strong", to_json(l, r.strong)},
        {"left_continuous", to_json(l, r.left_continuous)}}},
      {"classification",
       {{"tnorm", r.is_tnorm()},
        {"tsubnorm", r.is_tsubnorm()},
        {"strong_tsubnorm", r.is_strong_tsubnorm()},
        {"left_continuous_tnorm", r.is_left_continuous_tnorm()},
        {"left_continuous_tsubnorm", r.is_left_continuous_tsubnorm()},
        {"left_continuous_strong_tsubnorm", r.is_left_continuous_strong_tsubnorm()}}},
  };
}

nlohmann::json to_json(const Lattice& l, const FMapReport& r) {
  return {
      {"conditions",
       {{"top_preserving", to_json(l, r.top_preserving)},
        {"contractive", to_json(l, r.contractive)},
        {"idempotent", to_json(l, r.idempotent)},
        {"join_preserving", to_json(l, r.join_preserving)},
        {"image_is_lattice", to_json(l, r.image_is_lattice)},
        {"image_distributive", to_json(l, r.image_distributive)},
        {"order_preserving", to_json(l, r.order_preserving)}}},
      {"weak_fmapping", r.is_weak_fmapping()},
      {"fmapping", r.is_fmapping()},
  };
}

nlohmann::json to_json(const Lattice& l, const SemiLinearReport& r) {
  // Interval positions are reported 1-based, elements by label.
  auto positions = [](const Check& c, std::size_t count) {
    auto out = nlohmann::json::array();
    for (std::size_t k = 0; k < count && k < c.witness.size(); ++k) out.push_back(c.witness[k] + 1);
    return out;
  };
  nlohmann::json disjoint = {{"holds", r.disjoint.holds}, {"witness", positions(r.disjoint, 2)}};
  if (r.disjoint.witness.size() == 3) disjoint["element"] = l.name(r.disjoint.witness[2]);
  return {
      {"nonempty", {{"holds", r.nonempty.holds}, {"witness", positions(r.nonempty, 1)}}},
      {"ordered", {{"holds", r.ordered.holds}, {"witness", positions(r.ordered, 2)}}},
      {"disjoint", disjoint},
      {"comparable", to_json(l, r.comparable)},
      {"holds", r.holds()},
  };
}

nlohmann::json to_json(const Lattice& l, const BinaryOp& op) {
  auto rows = nlohmann::json::array();
  for (Elem x = 0; x < op.size(); ++x) {
    std::vector<Elem> row(op.size());
    for (Elem y = 0; y < op.size(); ++y) row[y] = op(x, y);
    rows.push_back(labels(l, row));
  }
  return {{"elements", l.names()}, {"rows", rows}};
}

nlohmann::json to_json(const Lattice& l, const UnaryMap& f) {
  return {{"elements", l.names()}, {"values", labels(l, f.table)}};
}

nlohmann::json to_json(const Lattice& l, const SearchResult& r) {
  auto found = nlohmann::json::array();
  for (const auto& op : r.found) found.push_back(to_json(l, op)["rows"]);
  return {
      {"count", r.count},
      {"exhausted", r.exhausted},
      {"found", found},
      {"stats",
       {{"nodes", r.stats.nodes},
        {"pruned_bound", r.stats.pruned_bound},
        {"pruned_monotone", r.stats.pruned_monotone},
        {"pruned_left_continuity", r.stats.pruned_left_continuity},
        {"pruned_associativity", r.stats.pruned_associativity},
        {"leaf_rejections", r.stats.leaf_rejections}}},
  };
}

}  // namespace latnorm
