#include "zdg/invariants.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "zdg/automorphism.hpp"
#include "zdg/zero_divisor.hpp"

namespace zdg {

std::uint64_t default_exhaustive_limit() {
  if (const char* env = std::getenv("ZDG_EXHAUSTIVE_LIMIT")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultExhaustiveLimit;
}

std::string to_string(InvariantKind kind) { return kind == InvariantKind::Det ? "Det" : "MetricDim"; }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

MetricVector metric_vector(const DistanceMatrix& dist, Vertex v, std::span<const Vertex> reference) {
  MetricVector out;
  out.reserve(reference.size());
  for (Vertex w : reference) out.push_back(dist(v, w));
  return out;
}

bool is_resolving_set(const DistanceMatrix& dist, std::span<const Vertex> set) {
  const std::size_t n = dist.size();
  std::vector<MetricVector> vectors(n);
  for (Vertex v = 0; v < n; ++v) vectors[v] = metric_vector(dist, v, set);
  std::sort(vectors.begin(), vectors.end());
  return std::adjacent_find(vectors.begin(), vectors.end()) == vectors.end();
}

std::size_t twin_lower_bound(const Graph& g) {
  std::size_t sum = 0;
  for (const auto& c : twin_classes(g).classes) sum += c.size() - 1;
  return sum;
}

std::size_t diameter_lower_bound(const Graph& g, const DistanceMatrix& dist) {
  const std::size_t n = g.vertex_count();
  if (n <= 1 || !is_connected(g)) return 0;
  const std::uint64_t diameter = dist.max_finite();
  for (std::size_t m = 1;; ++m) {
    unsigned __int128 power = 1;
    for (std::size_t i = 0; i < m && power < n; ++i) power *= diameter;
    if (power + m >= n) return m;
  }
}

namespace {

using Predicate = std::function<bool(std::span<const Vertex>)>;

// Removes members back to front while the predicate keeps holding.
VertexSet prune(VertexSet set, const Predicate& holds) {
  for (std::size_t i = set.size(); i-- > 0;) {
    VertexSet trial = set;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (holds(trial)) set = std::move(trial);
  }
  return set;
}

// Every twin class loses at most one vertex outside the set.
class TwinFilter {
 public:
  explicit TwinFilter(const Graph& g) : class_of_(g.vertex_count()) {
    const auto classes = twin_classes(g).classes;
    sizes_.resize(classes.size());
    for (std::size_t c = 0; c < classes.size(); ++c) {
      sizes_[c] = classes[c].size();
      for (Vertex v : classes[c]) class_of_[v] = c;
    }
    hits_.assign(classes.size(), 0);
  }

  bool admits(std::span<const Vertex> set) {
    std::fill(hits_.begin(), hits_.end(), 0);
    for (Vertex v : set) ++hits_[class_of_[v]];
    for (std::size_t c = 0; c < sizes_.size(); ++c)
      if (sizes_[c] - hits_[c] > 1) return false;
    return true;
  }

 private:
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> hits_;
};

// Lexicographic k-subsets of 0..n-1; stops at the first accepted subset.
std::optional<VertexSet> first_subset(std::size_t n, std::size_t k, const Predicate& accept) {
  VertexSet idx(k);
  std::iota(idx.begin(), idx.end(), Vertex{0});
  if (k > n) return std::nullopt;
  while (true) {
    if (accept(idx)) return idx;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return std::nullopt;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Resolving-set search sharing prefix work: each depth keeps the mixed-radix
// code of every vertex's partial metric vector.
class ResolvingSearch {
 public:
  ResolvingSearch(const DistanceMatrix& dist, TwinFilter& filter) : dist_(dist), filter_(filter) {
    std::uint64_t most = 0;
    for (Vertex u = 0; u < dist.size(); ++u)
      for (auto d : dist.row(u))
        if (d != DistanceMatrix::kInf) most = std::max<std::uint64_t>(most, d);
    radix_ = most + 2;  // one slot for unreachable
  }

  std::optional<VertexSet> search(std::size_t k) {
    const std::size_t n = dist_.size();
    unsigned __int128 capacity = 1;
    for (std::size_t i = 0; i < k; ++i) capacity *= radix_;
    if (capacity > std::numeric_limits<std::uint64_t>::max()) {
      return first_subset(n, k, [&](std::span<const Vertex> s) {
        return filter_.admits(s) && is_resolving_set(dist_, s);
      });
    }
    codes_.assign(k + 1, std::vector<std::uint64_t>(n, 0));
    chosen_.assign(k, 0);
    scratch_.resize(n);
    if (recurse(0, 0, k)) return chosen_;
    return std::nullopt;
  }

 private:
  bool recurse(std::size_t depth, Vertex from, std::size_t k) {
    const std::size_t n = dist_.size();
    if (depth == k) {
      if (!filter_.admits(chosen_)) return false;
      scratch_ = codes_[k];
      std::sort(scratch_.begin(), scratch_.end());
      return std::adjacent_find(scratch_.begin(), scratch_.end()) == scratch_.end();
    }
    for (Vertex w = from; w + (k - depth) <= n; ++w) {
      chosen_[depth] = w;
      const auto& prev = codes_[depth];
      auto& next = codes_[depth + 1];
      for (Vertex v = 0; v < n; ++v) {
        const std::uint32_t d = dist_(v, w);
        next[v] = prev[v] * radix_ + (d == DistanceMatrix::kInf ? radix_ - 1 : d);
      }
      if (recurse(depth + 1, w + 1, k)) return true;
    }
    return false;
  }

  const DistanceMatrix& dist_;
  TwinFilter& filter_;
  std::uint64_t radix_ = 2;
  std::vector<std::vector<std::uint64_t>> codes_;
  VertexSet chosen_;
  std::vector<std::uint64_t> scratch_;
};

struct Candidate {
  VertexSet set;
  std::string name;
};

void take_best(InvariantResult& result, std::vector<Candidate> candidates) {
  const Candidate* best = nullptr;
  for (const auto& c : candidates)
    if (!best || c.set.size() < best->set.size()) best = &c;
  if (!best) return;
  result.upper = best->set.size();
  result.certificate = best->set;
  std::sort(result.certificate.begin(), result.certificate.end());
  result.method = best->name;
}

}  // namespace

std::optional<VertexSet> exhaustive_determining_set(const Graph& g, std::uint64_t exhaustive_limit) {
  const std::size_t n = g.vertex_count();
  for (std::size_t s = 0; s <= n; ++s) {
    if (binomial(n, s) > exhaustive_limit) return std::nullopt;
    if (auto found = first_subset(n, s, [&](std::span<const Vertex> set) { return is_fixing_set(g, set); })) return found;
  }
  return std::nullopt;
}

std::optional<VertexSet> exhaustive_resolving_set(const Graph& g, std::uint64_t exhaustive_limit) {
  const std::size_t n = g.vertex_count();
  const DistanceMatrix dist = all_pairs_distances(g);
  for (std::size_t s = 0; s <= n; ++s) {
    if (binomial(n, s) > exhaustive_limit) return std::nullopt;
    if (auto found = first_subset(n, s, [&](std::span<const Vertex> set) { return is_resolving_set(dist, set); })) return found;
  }
  return std::nullopt;
}

std::optional<VertexSet> orbit_union_set(const Graph& g) {
  const AutGroup group = automorphism_group(g);
  VertexSet out;
  for (const auto& orbit : group.orbits) {
    if (orbit.size() == 1) continue;
    const Graph induced = g.induced_subgraph(orbit);
    VertexSet local = prune(search_base(induced), [&](std::span<const Vertex> s) { return is_fixing_set(induced, s); });
    for (Vertex v : local) out.push_back(orbit[v]);
  }
  std::sort(out.begin(), out.end());
  if (!is_fixing_set(g, out)) return std::nullopt;
  return out;
}

VertexSet greedy_resolving_set(const DistanceMatrix& dist) {
  const std::size_t n = dist.size();
  std::vector<std::uint32_t> cls(n, 0);
  VertexSet chosen;
  std::vector<bool> used(n, false);
  auto split_pairs = [&](Vertex w) {
    // Pairs in a common class that w separates.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> keys(n);
    for (Vertex v = 0; v < n; ++v) keys[v] = {cls[v], dist(v, w)};
    std::sort(keys.begin(), keys.end());
    std::uint64_t same_class = 0, same_key = 0;
    std::size_t i = 0;
    while (i < n) {
      std::size_t j = i;
      while (j < n && keys[j].first == keys[i].first) ++j;
      same_class += (j - i) * (j - i - 1) / 2;
      std::size_t a = i;
      while (a < j) {
        std::size_t b = a;
        while (b < j && keys[b] == keys[a]) ++b;
        same_key += (b - a) * (b - a - 1) / 2;
        a = b;
      }
      i = j;
    }
    return same_class - same_key;
  };
  while (!is_resolving_set(dist, chosen)) {
    Vertex best = 0;
    std::uint64_t best_gain = 0;
    bool found = false;
    for (Vertex w = 0; w < n; ++w) {
      if (used[w]) continue;
      const std::uint64_t gain = split_pairs(w);
      if (!found || gain > best_gain) {
        best = w;
        best_gain = gain;
        found = true;
      }
    }
    if (!found) break;
    used[best] = true;
    chosen.push_back(best);
    std::vector<std::pair<std::pair<std::uint32_t, std::uint32_t>, Vertex>> keyed(n);
    for (Vertex v = 0; v < n; ++v) keyed[v] = {{cls[v], dist(v, best)}, v};
    std::sort(keyed.begin(), keyed.end());
    std::uint32_t id = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0 && keyed[i].first != keyed[i - 1].first) ++id;
      cls[keyed[i].second] = id;
    }
  }
  return prune(chosen, [&](std::span<const Vertex> s) { return is_resolving_set(dist, s); });
}

InvariantResult determining_number(const Graph& g, const SearchOptions& options) {
  InvariantResult result;
  result.kind = InvariantKind::Det;
  const std::size_t n = g.vertex_count();
  if (n <= 1) {
    result.exact = true;
    result.method = "trivial";
    return result;
  }
  result.lower = twin_lower_bound(g);
  std::string lower_source = "twin";
  auto fixing = [&](std::span<const Vertex> s) { return is_fixing_set(g, s); };

  std::vector<Candidate> candidates;
  for (const auto& hint : options.hints)
    if (fixing(hint)) candidates.push_back({hint, "hint"});
  if (n <= kMaxSearchVertices) {
    if (auto ou = orbit_union_set(g)) candidates.push_back({*ou, "orbit-union"});
    candidates.push_back({prune(search_base(g), fixing), "search-base"});
  }
  take_best(result, std::move(candidates));

  if (result.lower < result.upper) {
    TwinFilter filter(g);
    for (std::size_t s = result.lower; s < result.upper; ++s) {
      if (binomial(n, s) > options.exhaustive_limit) break;
      auto found = first_subset(n, s, [&](std::span<const Vertex> set) { return filter.admits(set) && fixing(set); });
      if (found) {
        result.upper = s;
        result.certificate = *found;
        result.method = "exhaustive";
        lower_source = "exhaustive";
        break;
      }
      result.lower = s + 1;
      lower_source = "exhaustive";
    }
  }
  if (result.lower > result.upper) throw std::logic_error("determining_number: bounds crossed");
  result.exact = result.lower == result.upper;
  result.method = "upper:" + result.method + ";lower:" + lower_source;
  return result;
}

InvariantResult determining_number(const Graph& g, std::uint64_t exhaustive_limit) {
  SearchOptions options;
  options.exhaustive_limit = exhaustive_limit;
  return determining_number(g, options);
}

InvariantResult metric_dimension(const Graph& g, const SearchOptions& options) {
  InvariantResult result;
  result.kind = InvariantKind::MetricDim;
  const std::size_t n = g.vertex_count();
  if (n <= 1) {
    result.exact = true;
    result.method = "trivial";
    return result;
  }
  const DistanceMatrix dist = all_pairs_distances(g);
  const std::size_t twin = twin_lower_bound(g);
  const std::size_t by_diameter = diameter_lower_bound(g, dist);
  result.lower = std::max(twin, by_diameter);
  std::string lower_source = twin >= by_diameter ? "twin" : "diameter";
  auto resolving = [&](std::span<const Vertex> s) { return is_resolving_set(dist, s); };

  std::vector<Candidate> candidates;
  for (const auto& hint : options.hints)
    if (resolving(hint)) candidates.push_back({hint, "hint"});
  candidates.push_back({greedy_resolving_set(dist), "greedy"});
  take_best(result, std::move(candidates));

  if (result.lower < result.upper) {
    TwinFilter filter(g);
    ResolvingSearch search(dist, filter);
    for (std::size_t s = result.lower; s < result.upper; ++s) {
      if (binomial(n, s) > options.exhaustive_limit) break;
      if (auto found = search.search(s)) {
        result.upper = s;
        result.certificate = *found;
        result.method = "exhaustive";
        lower_source = "exhaustive";
        break;
      }
      result.lower = s + 1;
      lower_source = "exhaustive";
    }
  }
  if (result.lower > result.upper) throw std::logic_error("metric_dimension: bounds crossed");
  result.exact = result.lower == result.upper;
  result.method = "upper:" + result.method + ";lower:" + lower_source;
  return result;
}

InvariantResult metric_dimension(const Graph& g, std::uint64_t exhaustive_limit) {
  SearchOptions options;
  options.exhaustive_limit = exhaustive_limit;
  return metric_dimension(g, options);
}

std::uint32_t det_dim_zn(std::uint32_t n) {
  if (n < 4 || is_prime(n)) throw std::invalid_argument("det_dim_zn: n must be composite");
  const auto ctx = zn_context(n);
  return n - ctx.phi - ctx.tau - 1;
}

std::vector<Element> zn_canonical_set(std::uint32_t n) {
  if (n < 4 || is_prime(n)) throw std::invalid_argument("zn_canonical_set: n must be composite");
  std::vector<Element> out;
  for (const auto& cls : omega_partition(n).classes) out.insert(out.end(), cls.begin() + 1, cls.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_non_boolean_semisimple(const Ring& ring) {
  if (!ring.is_field_product()) throw std::invalid_argument("not a product of fields");
  if (ring.components().size() < 2) throw std::invalid_argument("need at least two field components");
  if (ring.is_boolean()) throw std::invalid_argument("all components are F_2 (Boolean case)");
}

}  // namespace

std::uint32_t det_dim_semisimple(const Ring& ring) {
  require_non_boolean_semisimple(ring);
  const auto k = static_cast<std::uint32_t>(ring.components().size());
  return static_cast<std::uint32_t>(zero_divisors(ring).size()) - (1u << k) + 2;
}

std::vector<Element> semisimple_canonical_set(const Ring& ring) {
  require_non_boolean_semisimple(ring);
  std::vector<Element> out;
  for (const auto& core : ideal_cores(ring)) out.insert(out.end(), core.core.begin() + 1, core.core.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> boolean_canonical_set(std::uint32_t n) {
  if (n < 5) throw std::invalid_argument("boolean_canonical_set: n must be >= 5");
  if (n > 20) throw std::invalid_argument("ring order bound exceeded");
  const Element all = (1u << n) - 1;
  std::vector<Element> out;
  for (std::uint32_t i = 1; i <= n / 2; ++i) {
    Element u = all;
    for (std::uint32_t c : {2 * i - 1, 2 * i, 2 * i + 1}) {
      const std::uint32_t coord = (c - 1) % n + 1;
      u &= ~(1u << (n - coord));  // coordinate 1 is the most significant digit
    }
    out.push_back(u);
  }
  return out;
}

std::size_t join_det_distinct_degrees(std::span<const std::size_t> part_sizes) {
  if (part_sizes.empty()) throw std::invalid_argument("join_det_distinct_degrees: no parts");
  return std::accumulate(part_sizes.begin(), part_sizes.end(), std::size_t{0}) - part_sizes.size();
}

std::size_t join_det_vertex_transitive(std::span<const std::size_t> part_dets) {
  if (part_dets.empty()) throw std::invalid_argument("join_det_vertex_transitive: no parts");
  return std::accumulate(part_dets.begin(), part_dets.end(), std::size_t{0});
}

}  // namespace zdg
