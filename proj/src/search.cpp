#include "latnorm/search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace latnorm {

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  nodes += o.nodes;
  pruned_bound += o.pruned_bound;
  pruned_monotone += o.pruned_monotone;
  pruned_left_continuity += o.pruned_left_continuity;
  pruned_associativity += o.pruned_associativity;
  leaf_rejections += o.leaf_rejections;
  return *this;
}

namespace {

constexpr Elem kUnset = std::numeric_limits<Elem>::max();

/// Collects operators up to a stop threshold.
struct Sink {
  std::size_t stop_at = kUnlimited;  // stop once this many are counted
  bool retain = true;
  std::size_t count = 0;
  std::vector<BinaryOp> found;
  SearchStats stats;

  bool full() const { return count >= stop_at; }
  void add(BinaryOp op) {
    ++count;
    if (retain) found.push_back(std::move(op));
  }
};

struct Cell {
  Elem x;
  Elem y;
  std::vector<Elem> domain;
};

class Searcher {
 public:
  explicit Searcher(const Lattice& l) : l_(l), n_(l.size()) {
    for (Elem x = 0; x < n_; ++x)
      if (x != l.top() && x != l.bottom()) internal_.push_back(x);
    for (std::size_t i = 0; i < internal_.size(); ++i)
      for (std::size_t j = i; j < internal_.size(); ++j) {
        Cell c{internal_[i], internal_[j], {}};
        const Elem m = l.meet(c.x, c.y);
        for (Elem v = 0; v < n_; ++v)
          if (l.leq(v, m)) c.domain.push_back(v);
        cells_.push_back(std::move(c));
      }
    std::stable_sort(cells_.begin(), cells_.end(), [&](const Cell& a, const Cell& b) {
      return l.rank(l.join(a.x, a.y)) > l.rank(l.join(b.x, b.y));
    });
  }

  std::size_t first_branches() const { return cells_.empty() ? 1 : cells_.front().domain.size(); }

  /// Explores the subtree where the first cell takes its branch-th value.
  void run_branch(std::size_t branch, Sink& sink) const {
    std::vector<Elem> t(n_ * n_, kUnset);
    const Elem top = l_.top();
    const Elem bot = l_.bottom();
    for (Elem x = 0; x < n_; ++x) {
      t[top * n_ + x] = t[x * n_ + top] = x;
    }
    for (Elem x = 0; x < n_; ++x) t[bot * n_ + x] = t[x * n_ + bot] = bot;
    if (cells_.empty()) {
      ++sink.stats.nodes;
      leaf(t, sink);
      return;
    }
    descend(t, 0, branch, sink);
  }

 private:
  Elem at(const std::vector<Elem>& t, Elem x, Elem y) const { return t[x * n_ + y]; }

  void descend(std::vector<Elem>& t, std::size_t depth, std::size_t only, Sink& sink) const {
    if (sink.full()) return;
    ++sink.stats.nodes;
    if (depth == cells_.size()) {
      leaf(t, sink);
      return;
    }
    const Cell& c = cells_[depth];
    sink.stats.pruned_bound += n_ - c.domain.size();
    for (std::size_t k = 0; k < c.domain.size() && !sink.full(); ++k) {
      if (depth == 0 && k != only) continue;
      const Elem v = c.domain[k];
      t[c.x * n_ + c.y] = t[c.y * n_ + c.x] = v;
      if (!monotone_ok(t, c.x, c.y, v)) {
        ++sink.stats.pruned_monotone;
      } else if (!left_continuity_ok(t, c.x) || !left_continuity_ok(t, c.y)) {
        ++sink.stats.pruned_left_continuity;
      } else if (!associativity_ok(t)) {
        ++sink.stats.pruned_associativity;
      } else {
        descend(t, depth + 1, only, sink);
      }
      t[c.x * n_ + c.y] = t[c.y * n_ + c.x] = kUnset;
    }
  }

  bool monotone_ok(const std::vector<Elem>& t, Elem x, Elem y, Elem v) const {
    for (Elem p = 0; p < n_; ++p)
      for (Elem q = 0; q < n_; ++q) {
        const Elem w = at(t, p, q);
        if (w == kUnset) continue;
        if (l_.leq(p, x) && l_.leq(q, y) && !l_.leq(w, v)) return false;
        if (l_.leq(x, p) && l_.leq(y, q) && !l_.leq(v, w)) return false;
      }
    return true;
  }

  bool left_continuity_ok(const std::vector<Elem>& t, Elem a) const {
    for (Elem u = 0; u < n_; ++u) {
      const Elem tu = at(t, a, u);
      if (tu == kUnset) continue;
      for (Elem w = u + 1; w < n_; ++w) {
        const Elem tw = at(t, a, w);
        const Elem tj = at(t, a, l_.join(u, w));
        if (tw == kUnset || tj == kUnset) continue;
        if (tj != l_.join(tu, tw)) return false;
      }
    }
    return true;
  }

  // Triples touching the top or bottom are associative given the fixed rows,
  // and by commutativity (p, q, r) and (r, q, p) give the same equation.
  bool associativity_ok(const std::vector<Elem>& t) const {
    for (std::size_t i = 0; i < internal_.size(); ++i)
      for (Elem q : internal_)
        for (std::size_t k = i; k < internal_.size(); ++k) {
          const Elem p = internal_[i];
          const Elem r = internal_[k];
          const Elem pq = at(t, p, q);
          const Elem qr = at(t, q, r);
          if (pq == kUnset || qr == kUnset) continue;
          const Elem lhs = at(t, pq, r);
          const Elem rhs = at(t, p, qr);
          if (lhs != kUnset && rhs != kUnset && lhs != rhs) return false;
        }
    return true;
  }

  void leaf(const std::vector<Elem>& t, Sink& sink) const {
    BinaryOp op(n_, t);
    if (!check_operator(l_, op).is_left_continuous_tnorm()) {
      ++sink.stats.leaf_rejections;
      return;
    }
    sink.add(std::move(op));
  }

  const Lattice& l_;
  std::size_t n_;
  std::vector<Elem> internal_;
  std::vector<Cell> cells_;
};

Sink make_sink(std::size_t max_results) {
  Sink s;
  s.retain = max_results != 0;
  s.stop_at = (max_results == 0 || max_results == kUnlimited) ? kUnlimited : max_results + 1;
  return s;
}

SearchResult finish(Sink sink, std::size_t max_results) {
  SearchResult r;
  r.stats = sink.stats;
  r.count = sink.count;
  if (max_results != 0 && max_results != kUnlimited && sink.count > max_results) {
    r.exhausted = false;
    r.count = max_results;
    sink.found.resize(max_results);
  }
  r.found = std::move(sink.found);
  std::sort(r.found.begin(), r.found.end());
  return r;
}

}  // namespace

SearchResult search_lc_tnorms(const Lattice& lattice, const SearchOptions& options) {
  const Searcher searcher(lattice);
  const std::size_t branches = searcher.first_branches();
  Sink total = make_sink(options.max_results);

  if (options.workers <= 1 || branches <= 1) {
    for (std::size_t b = 0; b < branches && !total.full(); ++b) searcher.run_branch(b, total);
    return finish(std::move(total), options.max_results);
  }

  std::vector<Sink> sinks(branches, make_sink(options.max_results));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const unsigned workers = std::min<std::size_t>(options.workers, branches);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t b = next++; b < branches; b = next++) searcher.run_branch(b, sinks[b]);
    });
  for (auto& th : pool) th.join();

  // Concatenating branch prefixes in branch order reproduces the sequential
  // discovery order.
  for (auto& s : sinks) {
    total.stats += s.stats;
    for (auto& op : s.found) {
      if (total.full()) break;
      total.add(std::move(op));
    }
    if (!total.retain) total.count = std::min(total.stop_at, total.count + s.count);
    if (total.full()) break;
  }
  return finish(std::move(total), options.max_results);
}

SearchResult brute_force_lc_tnorms(const Lattice& l) {
  const std::size_t n = l.size();
  if (n > 4) throw Error(ErrorCode::TooLarge, "brute force is limited to four elements");
  std::vector<std::pair<Elem, Elem>> cells;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x; y < n; ++y)
      if (x != l.top() && y != l.top()) cells.emplace_back(x, y);

  SearchResult r;
  std::vector<Elem> digits(cells.size(), 0);
  std::vector<Elem> t(n * n, 0);
  for (Elem x = 0; x < n; ++x) t[l.top() * n + x] = t[x * n + l.top()] = x;
  while (true) {
    ++r.stats.nodes;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto [x, y] = cells[i];
      t[x * n + y] = t[y * n + x] = digits[i];
    }
    BinaryOp op(n, t);
    if (check_operator(l, op).is_left_continuous_tnorm()) {
      ++r.count;
      r.found.push_back(std::move(op));
    } else {
      ++r.stats.leaf_rejections;
    }
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == n) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  std::sort(r.found.begin(), r.found.end());
  return r;
}

}  // namespace latnorm
