#include "gemkit/genus.hpp"

#include <algorithm>
#include <future>
#include <numeric>

#include "gemkit/errors.hpp"

namespace gemkit {

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// ----------------------------------------------------- CyclicPermutation

CyclicPermutation::CyclicPermutation(std::vector<Color> order) {
  const int n = static_cast<int>(order.size());
  std::vector<Color> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (sorted[i] != i) throw Error(ErrorCode::ColorOutOfRange, "cyclic order must be a permutation of 0..d");
  if (n < 3) {
    order_ = std::move(sorted);
    return;
  }
  const int start = static_cast<int>(std::find(order.begin(), order.end(), 0) - order.begin());
  std::vector<Color> out(n);
  for (int i = 0; i < n; ++i) out[i] = order[(start + i) % n];
  if (out[1] > out[n - 1]) std::reverse(out.begin() + 1, out.end());
  order_ = std::move(out);
}

CyclicPermutation CyclicPermutation::identity(int dimension) {
  std::vector<Color> order(dimension + 1);
  std::iota(order.begin(), order.end(), 0);
  return CyclicPermutation(std::move(order));
}

Color CyclicPermutation::at(int i) const {
  const int n = static_cast<int>(order_.size());
  return order_[((i % n) + n) % n];
}

CyclicPermutation CyclicPermutation::without(Color c) const {
  std::vector<Color> rest;
  for (Color x : order_)
    if (x != c) rest.push_back(x > c ? x - 1 : x);
  return CyclicPermutation(std::move(rest));
}

std::string CyclicPermutation::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(order_[i]);
  }
  return out + ")";
}

std::vector<CyclicPermutation> cyclic_permutations(int dimension) {
  if (dimension < 2) throw Error(ErrorCode::DimensionOutOfRange, "cyclic permutations need d >= 2");
  std::vector<Color> tail(dimension);
  std::iota(tail.begin(), tail.end(), 1);
  std::vector<CyclicPermutation> out;
  // Fixing 0 first kills rotations; keeping tail.front() < tail.back() kills reversal.
  do {
    if (tail.front() < tail.back()) {
      std::vector<Color> order{0};
      order.insert(order.end(), tail.begin(), tail.end());
      out.emplace_back(std::move(order));
    }
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

// ------------------------------------------------------------------ chi

namespace {

void require_genus_input(const ColoredGraph& g) {
  if (regularity_class(g).kind != RegularityClass::Kind::FullyRegular)
    throw Error(ErrorCode::NotFullyRegular, "regular genus is defined here for fully regular graphs only");
  if (g.vertex_count() % 2 != 0) throw Error(ErrorCode::OddVertexCount, "vertex count must be even");
  if (g.dimension() < 2) throw Error(ErrorCode::DimensionOutOfRange, "regular genus needs d >= 2");
}

void require_matching_dimension(int dimension, const CyclicPermutation& eps) {
  if (eps.dimension() != dimension)
    throw Error(ErrorCode::DimensionOutOfRange, "cyclic permutation dimension does not match graph");
}

}  // namespace

long long chi_epsilon(const GProfile& profile, int vertex_count, const CyclicPermutation& eps) {
  require_matching_dimension(profile.dimension(), eps);
  if (vertex_count % 2 != 0) throw Error(ErrorCode::OddVertexCount, "vertex count must be even");
  const int d = profile.dimension();
  const long long p = vertex_count / 2;
  long long sum = 0;
  for (int i = 0; i <= d; ++i) sum += profile.count(ColorSet{eps.at(i), eps.at(i + 1)});
  return sum + (1 - d) * p;
}

long long chi_epsilon(const ColoredGraph& g, const CyclicPermutation& eps) {
  require_genus_input(g);
  require_matching_dimension(g.dimension(), eps);
  const int d = g.dimension();
  const long long p = g.vertex_count() / 2;
  long long sum = 0;
  for (int i = 0; i <= d; ++i) sum += residue(g, ColorSet{eps.at(i), eps.at(i + 1)}).count();
  return sum + (1 - d) * p;
}

Rational rho_epsilon(const ColoredGraph& g, const CyclicPermutation& eps) {
  return Rational(1) - Rational(chi_epsilon(g, eps), 2);
}

Rational GenusReport::rho_at(const CyclicPermutation& eps) const {
  for (const auto& row : table)
    if (row.eps == eps) return row.rho;
  throw Error(ErrorCode::DimensionOutOfRange, "cyclic permutation not in genus table");
}

namespace {

GenusReport summarize(std::vector<GenusRow> rows) {
  GenusReport report;
  report.table = std::move(rows);
  report.minimum = report.table.front().rho;
  for (const auto& row : report.table) report.minimum = std::min(report.minimum, row.rho);
  for (const auto& row : report.table)
    if (row.rho == report.minimum) report.argmin.push_back(row.eps);
  return report;
}

}  // namespace

GenusReport regular_genus(const GProfile& profile, int vertex_count) {
  std::vector<GenusRow> rows;
  for (auto& eps : cyclic_permutations(profile.dimension())) {
    const long long chi = chi_epsilon(profile, vertex_count, eps);
    rows.push_back({eps, chi, Rational(1) - Rational(chi, 2)});
  }
  return summarize(std::move(rows));
}

GenusReport regular_genus(const ColoredGraph& g, int workers) {
  require_genus_input(g);
  auto perms = cyclic_permutations(g.dimension());
  std::vector<GenusRow> rows(perms.size(), GenusRow{perms.front(), 0, Rational(0)});
  auto fill = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < perms.size(); i += stride) {
      const long long chi = chi_epsilon(g, perms[i]);
      rows[i] = {perms[i], chi, Rational(1) - Rational(chi, 2)};
    }
  };
  if (workers <= 1) {
    fill(0, 1);
  } else {
    // Each worker owns a disjoint stride of rows; the table keeps canonical order.
    std::vector<std::future<void>> jobs;
    const auto stride = static_cast<std::size_t>(workers);
    for (std::size_t w = 0; w < stride; ++w) jobs.push_back(std::async(std::launch::async, fill, w, stride));
    for (auto& job : jobs) job.get();
  }
  return summarize(std::move(rows));
}

Rational residue_genus(const ColoredGraph& g, Color c) {
  return regular_genus(residue_graph(g, c)).minimum;
}

// ---------------------------------------------------------- face tracing

long long face_trace_oracle(const ColoredGraph& g, const CyclicPermutation& eps) {
  require_genus_input(g);
  require_matching_dimension(g.dimension(), eps);
  const int d = g.dimension();
  const int n = g.vertex_count();
  long long faces = 0;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  for (int i = 0; i <= d; ++i) {
    const Color a = eps.at(i);
    const Color b = eps.at(i + 1);
    std::fill(used.begin(), used.end(), 0);
    // Each face is a cycle alternating a and b; walk it once from its first vertex.
    for (VertexId start = 0; start < n; ++start) {
      if (used[start]) continue;
      ++faces;
      VertexId v = start;
      bool take_a = true;
      do {
        used[v] = 1;
        v = *g.neighbor(v, take_a ? a : b);
        take_a = !take_a;
      } while (!(v == start && take_a));
    }
  }
  const long long vertices = n;
  const long long edges = static_cast<long long>(g.edges().size());
  return vertices - edges + faces;
}

}  // namespace gemkit
