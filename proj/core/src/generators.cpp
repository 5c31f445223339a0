#include "scorpion/generators.hpp"

#include <charconv>
#include <random>
#include <string_view>

#include "scorpion/errors.hpp"

namespace scorpion {

namespace {

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw parameter_error(std::string("EdgeProbability: malformed ") + what + " '" +
                          std::string(text) + "'");
  return value;
}

void check_probability(const EdgeProbability& p) {
  if (p.den == 0) throw parameter_error("EdgeProbability: zero denominator");
  if (p.num > p.den) throw parameter_error("EdgeProbability: value above 1");
}

}  // namespace

EdgeProbability EdgeProbability::parse(const std::string& text) {
  EdgeProbability p;
  if (auto slash = text.find('/'); slash != std::string::npos) {
    p.num = parse_u64(std::string_view(text).substr(0, slash), "numerator");
    p.den = parse_u64(std::string_view(text).substr(slash + 1), "denominator");
  } else if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string_view whole = std::string_view(text).substr(0, dot);
    std::string_view frac = std::string_view(text).substr(dot + 1);
    if (frac.empty() || frac.size() > 18)
      throw parameter_error("EdgeProbability: unsupported decimal '" + text + "'");
    std::uint64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::uint64_t integral = whole.empty() ? 0 : parse_u64(whole, "integral part");
    if (integral > 1)
      throw parameter_error("EdgeProbability: value above 1");
    p.num = integral * scale + parse_u64(frac, "fractional part");
    p.den = scale;
  } else {
    p.num = parse_u64(text, "value");
    p.den = 1;
  }
  check_probability(p);
  return p;
}

std::pair<UndirectedGraph, ScorpionAnatomy> gen_skeleton(int ell, int k) {
  if (ell < 1) throw parameter_error("gen_skeleton: ell must be >= 1");
  if (k < ell + 4) throw parameter_error("gen_skeleton: k must be >= ell + 4");

  ScorpionAnatomy anatomy;
  anatomy.body = 0;
  for (int i = 1; i <= ell; ++i) anatomy.tail.push_back(i);
  anatomy.sting = ell + 1;
  for (int v = ell + 2; v < k; ++v) anatomy.legs.push_back(v);

  std::vector<Edge> edges;
  for (int i = 0; i <= ell; ++i) edges.emplace_back(i, i + 1);
  for (int leg : anatomy.legs) edges.emplace_back(anatomy.body, leg);
  return {UndirectedGraph::from_edges(k, edges), std::move(anatomy)};
}

UndirectedGraph gen_augmented_biclique(int a, int b) {
  if (a < 1 || b < 1)
    throw parameter_error("gen_augmented_biclique: both sides must be nonempty");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = u + 1; v < a; ++v) edges.emplace_back(u, v);
  for (int u = 0; u < a; ++u)
    for (int v = a; v < a + b; ++v) edges.emplace_back(u, v);
  return UndirectedGraph::from_edges(a + b, edges);
}

UndirectedGraph random_graph(int n, EdgeProbability p, std::uint64_t seed) {
  if (n < 0) throw parameter_error("random_graph: n must be nonnegative");
  check_probability(p);
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      // keep the edge iff draw/2^64 < num/den, evaluated exactly
      const std::uint64_t draw = rng();
      const bool keep = static_cast<unsigned __int128>(draw) * p.den <
                        (static_cast<unsigned __int128>(p.num) << 64);
      if (keep) edges.emplace_back(u, v);
    }
  }
  return UndirectedGraph::from_edges(n, edges);
}

}  // namespace scorpion
