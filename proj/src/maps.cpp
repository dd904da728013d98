#include "latnorm/maps.hpp"

#include <algorithm>
#include <functional>

namespace latnorm {

namespace {

void require_map_on(const Lattice& lattice, const UnaryMap& f) {
  if (f.size() != lattice.size()) throw Error(ErrorCode::SizeMismatch, "map size differs from lattice size");
  for (Elem v : f.table)
    if (v >= lattice.size()) throw Error(ErrorCode::UnknownElement, "map value out of range");
}

std::vector<Elem> value_set(const UnaryMap& f) {
  std::vector<Elem> out = f.table;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FMapReport evaluate(const Lattice& l, const UnaryMap& f) {
  require_map_on(l, f);
  const std::size_t n = l.size();
  FMapReport r;
  if (f(l.top()) != l.top()) r.top_preserving = Check::fail({l.top()});
  for (Elem x = 0; x < n && r.contractive.holds; ++x)
    if (!l.leq(f(x), x)) r.contractive = Check::fail({x});
  for (Elem x = 0; x < n && r.idempotent.holds; ++x)
    if (f(f(x)) != f(x)) r.idempotent = Check::fail({x});
  for (Elem x = 0; x < n && r.join_preserving.holds; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (f(l.join(x, y)) != l.join(f(x), f(y))) {
        r.join_preserving = Check::fail({x, y});
        break;
      }
  for (Elem x = 0; x < n && r.order_preserving.holds; ++x)
    for (Elem y = 0; y < n; ++y)
      if (l.leq(x, y) && !l.leq(f(x), f(y))) {
        r.order_preserving = Check::fail({x, y});
        break;
      }

  const auto image = value_set(f);
  auto induced = induced_poset(l, image);
  if (!induced.lattice) {
    r.image_is_lattice = Check::fail(induced.witness);
    r.image_distributive = Check::fail(induced.witness);
  } else if (auto d = is_distributive(*induced.lattice); !d.holds) {
    for (auto& w : d.witness) w = image[w];
    r.image_distributive = std::move(d);
  }
  return r;
}

}  // namespace

UnaryMap UnaryMap::identity(std::size_t n) {
  UnaryMap f{std::vector<Elem>(n)};
  for (Elem x = 0; x < n; ++x) f.table[x] = x;
  return f;
}

UnaryMap UnaryMap::constant(std::size_t n, Elem value) { return UnaryMap{std::vector<Elem>(n, value)}; }

FMapReport check_weak_fmapping(const Lattice& lattice, const UnaryMap& f) { return evaluate(lattice, f); }
FMapReport check_fmapping(const Lattice& lattice, const UnaryMap& f) { return evaluate(lattice, f); }

InducedPoset induced_poset(const Lattice& host, const std::vector<Elem>& subset) {
  const std::size_t m = subset.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const Elem u = subset[i];
      const Elem v = subset[j];
      bool has_lub = false;
      bool has_glb = false;
      for (Elem c : subset) {
        if (!has_lub && host.leq(u, c) && host.leq(v, c))
          has_lub = std::all_of(subset.begin(), subset.end(), [&](Elem d) {
            return !(host.leq(u, d) && host.leq(v, d)) || host.leq(c, d);
          });
        if (!has_glb && host.leq(c, u) && host.leq(c, v))
          has_glb = std::all_of(subset.begin(), subset.end(), [&](Elem d) {
            return !(host.leq(d, u) && host.leq(d, v)) || host.leq(d, c);
          });
      }
      if (!has_lub || !has_glb) return {std::nullopt, {u, v}};
    }
  }
  std::vector<std::string> names;
  std::vector<bool> leq(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    names.push_back(host.name(subset[i]));
    for (std::size_t j = 0; j < m; ++j) leq[i * m + j] = host.leq(subset[i], subset[j]);
  }
  return {Lattice::from_order(std::move(names), leq), {}};
}

ImageLattice::ImageLattice(const Lattice& host, std::vector<Elem> subset, Lattice induced)
    : subset_(std::move(subset)), local_(host.size()), induced_(std::move(induced)) {
  for (std::size_t i = 0; i < subset_.size(); ++i) local_[subset_[i]] = i;
  distributive_ = latnorm::is_distributive(induced_).holds;
  sublattice_ = true;
  for (Elem u : subset_)
    for (Elem v : subset_)
      if (!contains(host.meet(u, v)) || !contains(host.join(u, v))) sublattice_ = false;
}

Elem ImageLattice::local_or_throw(Elem host_elem) const {
  if (host_elem >= local_.size() || !local_[host_elem])
    throw Error(ErrorCode::NotInImage, "element is not in the image", {host_elem});
  return *local_[host_elem];
}

Elem ImageLattice::meet(Elem u, Elem v) const {
  return subset_[induced_.meet(local_or_throw(u), local_or_throw(v))];
}

Elem ImageLattice::join(Elem u, Elem v) const {
  return subset_[induced_.join(local_or_throw(u), local_or_throw(v))];
}

ImageLattice image_lattice(const Lattice& lattice, const UnaryMap& f) {
  require_map_on(lattice, f);
  for (Elem x = 0; x < lattice.size(); ++x)
    if (f(f(x)) != f(x))
      throw Error(ErrorCode::NotIdempotent, "map is not idempotent at '" + lattice.name(x) + "'", {x});
  auto image = value_set(f);
  auto induced = induced_poset(lattice, image);
  if (!induced.lattice)
    throw Error(ErrorCode::NotALatticeInducedPoset,
                "image elements '" + lattice.name(induced.witness[0]) + "' and '" +
                    lattice.name(induced.witness[1]) + "' lack a bound inside the image",
                induced.witness);
  return ImageLattice(lattice, std::move(image), std::move(*induced.lattice));
}

Elem image_meet(const ImageLattice& image, Elem u, Elem v) { return image.meet(u, v); }

std::vector<Elem> fixed_points(const Lattice& lattice, const UnaryMap& f) {
  require_map_on(lattice, f);
  std::vector<Elem> out;
  for (Elem x = 0; x < lattice.size(); ++x)
    if (f(x) == x) out.push_back(x);
  return out;
}

UnaryMap canonical_fmapping(const Lattice& lattice) {
  const Elem top = lattice.top();
  for (Elem x = 0; x < lattice.size(); ++x)
    for (Elem y = x + 1; y < lattice.size(); ++y)
      if (x != top && y != top && lattice.join(x, y) == top)
        throw Error(ErrorCode::TopNotCJI,
                    "top is the join of '" + lattice.name(x) + "' and '" + lattice.name(y) + "'", {x, y});
  UnaryMap f = UnaryMap::constant(lattice.size(), lattice.bottom());
  f.table[top] = top;
  return f;
}

MapEnumeration enumerate_weak_fmappings(const Lattice& l, bool require_top, std::size_t max_results) {
  const std::size_t n = l.size();
  constexpr Elem kUnset = std::numeric_limits<Elem>::max();
  std::vector<Elem> f(n, kUnset);
  MapEnumeration result;
  bool stop = false;

  auto set = [&](Elem x) { return f[x] != kUnset; };

  // Checks every constraint whose participants are all assigned and that
  // involves x.
  auto consistent = [&](Elem x) {
    for (Elem z = 0; z < n; ++z) {
      if (!set(z) || z == x) continue;
      if (l.leq(z, x) && !l.leq(f[z], f[x])) return false;
      if (l.leq(x, z) && !l.leq(f[x], f[z])) return false;
      if (f[z] == x && f[x] != x) return false;
    }
    if (set(f[x]) && f[f[x]] != f[x]) return false;
    for (Elem p = 0; p < n; ++p) {
      if (!set(p)) continue;
      for (Elem q = p; q < n; ++q) {
        if (!set(q)) continue;
        const Elem j = l.join(p, q);
        if (!set(j) || (p != x && q != x && j != x)) continue;
        if (f[j] != l.join(f[p], f[q])) return false;
      }
    }
    return true;
  };

  std::function<void(Elem)> descend = [&](Elem x) {
    if (stop) return;
    if (x == n) {
      UnaryMap candidate{f};
      const auto report = evaluate(l, candidate);
      if (!report.is_weak_fmapping() || (require_top && !report.top_preserving.holds)) return;
      const bool limited = max_results != 0 && max_results != kUnlimited;
      if (limited && result.count == max_results) {
        result.exhausted = false;
        stop = true;
        return;
      }
      ++result.count;
      if (max_results != 0) result.maps.push_back(std::move(candidate));
      return;
    }
    for (Elem v = 0; v < n && !stop; ++v) {
      if (!l.leq(v, x)) continue;
      if (require_top && x == l.top() && v != x) continue;
      f[x] = v;
      if (consistent(x)) descend(x + 1);
      f[x] = kUnset;
    }
  };
  descend(0);
  return result;
}

}  // namespace latnorm
