#include "subcrit/predictor.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "subcrit/errors.hpp"

namespace subcrit {

namespace {

// (n)_t / n^t
double falling_ratio(std::uint32_t n, std::uint32_t t) {
  double v = 1.0;
  for (std::uint32_t i = 0; i < t; ++i) v *= static_cast<double>(n - i) / n;
  return v;
}

Rational falling_ratio_exact(std::uint32_t n, std::uint32_t t) {
  Rational v = 1;
  for (std::uint32_t i = 0; i < t; ++i) v *= Rational(n - i, n);
  return v;
}

Rational power_of_n(std::uint32_t n, std::int64_t exponent) {
  Rational base = exponent >= 0 ? Rational(n) : Rational(1, n);
  return pow(base, static_cast<std::uint32_t>(exponent >= 0 ? exponent : -exponent));
}

template <class Entry>
CoreTypeDistribution distribution(std::span<const Entry> entries, const Rational& alpha,
                                  bool signed_points) {
  if (entries.empty()) throw std::invalid_argument("core type distribution needs entries");
  if (alpha <= 0) throw std::invalid_argument("alpha must be positive");
  CoreTypeDistribution out;
  Rational total = 0;
  for (const Entry& e : entries) {
    if (e.excess != entries.front().excess)
      throw std::invalid_argument("core type entries must share one excess");
    Rational w = pow(alpha, static_cast<std::uint32_t>(e.size())) / Rational(e.aut);
    if (signed_points) w *= pow(Rational(2), e.order());
    out.weights.emplace_back(e.key, w);
    total += w;
  }
  for (auto& [key, w] : out.weights) w /= total;
  return out;
}

// Coefficient of the union-generated indicator: sum over clause subsets T of
// C of (-1)^{|C|-|T|} [T contains a member copy].
std::int64_t configuration_weight(std::size_t size, const std::vector<std::uint64_t>& copies) {
  if (size > 30) throw BudgetExceeded("configuration too large for inclusion-exclusion");
  const std::uint64_t all = (1ull << size);
  std::int64_t g = 0;
  for (std::uint64_t t = 0; t < all; ++t) {
    bool hit = false;
    for (std::uint64_t c : copies)
      if ((c & t) == c) { hit = true; break; }
    if (!hit) continue;
    const bool odd = (size - std::popcount(t)) % 2 == 1;
    g += odd ? -1 : 1;
  }
  return g;
}

void check_event(EventKind event, bool formula_catalog) {
  if (is_formula_event(event) != formula_catalog)
    throw std::invalid_argument("event " + to_string(event) + " does not match catalog kind");
}

template <class Entry>
ExpansionPolynomial expansion(const Catalog<Entry>& catalog, EventKind event,
                              std::uint32_t s_max, bool signed_points) {
  if (s_max < 1) throw std::invalid_argument("s_max must be at least 1");
  if (!catalog.complete)
    throw IncompleteCatalog("failure expansion refused: catalog is not certified complete");
  if (static_cast<std::int64_t>(s_max) > catalog.max_excess)
    throw IncompleteCatalog("failure expansion refused: s_max " + std::to_string(s_max) +
                            " exceeds catalog excess bound " +
                            std::to_string(catalog.max_excess));
  const EntryClass members = member_class(event);
  ExpansionPolynomial out;
  out.s_max = s_max;
  for (std::uint32_t s = 1; s <= s_max; ++s) out.terms[s];
  out.validity = "complete catalog, r=" + std::to_string(catalog.r) +
                 (catalog.k ? ", k=" + std::to_string(catalog.k) : std::string()) +
                 ", max excess " + std::to_string(catalog.max_excess) + ", event " +
                 to_string(event);
  for (const Entry& c : catalog.entries) {
    if (c.excess > static_cast<std::int64_t>(s_max)) continue;
    std::vector<std::uint64_t> copies;
    for (const Entry& m : catalog.entries) {
      if (m.excess > c.excess || !in_class(m, members)) continue;
      for (const Copy& cp : enumerate_copies(m.structure, c.structure)) {
        std::uint64_t mask = 0;
        for (std::size_t i : cp.members) mask |= 1ull << i;
        copies.push_back(mask);
      }
    }
    if (copies.empty()) continue;
    const std::int64_t g = configuration_weight(c.size(), copies);
    if (g == 0) continue;
    Rational base = Rational(g) / Rational(c.aut);
    if (signed_points) base *= pow(Rational(2), c.order());
    const std::vector<BigInt> falling = falling_ratio_coefficients(c.order());
    for (std::uint32_t s = static_cast<std::uint32_t>(c.excess); s <= s_max; ++s) {
      const std::size_t j = s - static_cast<std::uint32_t>(c.excess);
      if (j >= falling.size()) break;
      out.terms[s].add(base * Rational(falling[j]), static_cast<std::uint32_t>(c.size()));
    }
  }
  return out;
}

template <class Entry>
std::uint32_t leading(const Catalog<Entry>& catalog, EventKind event) {
  const EntryClass members = member_class(event);
  for (const Entry& e : catalog.entries)  // sorted by excess
    if (in_class(e, members)) return static_cast<std::uint32_t>(e.excess);
  return 0;
}

}  // namespace

std::string to_string(EventKind kind) {
  switch (kind) {
    case EventKind::kPureLiteralFailure: return "pl-fail";
    case EventKind::kKCore: return "kcore";
    case EventKind::kUnsat: return "unsat";
    case EventKind::kNonColorable: return "noncolorable";
  }
  return "?";
}

EventKind parse_event(const std::string& name) {
  if (name == "pl-fail") return EventKind::kPureLiteralFailure;
  if (name == "kcore") return EventKind::kKCore;
  if (name == "unsat") return EventKind::kUnsat;
  if (name == "noncolorable") return EventKind::kNonColorable;
  throw std::invalid_argument("unknown event '" + name + "'");
}

EntryClass member_class(EventKind kind) {
  return kind == EventKind::kPureLiteralFailure || kind == EventKind::kKCore
             ? EntryClass::kMinimal
             : EntryClass::kObstruction;
}

double expected_copies_exact(const Formula& h, std::uint32_t n, double alpha) {
  const std::uint32_t t = h.order();
  if (n < t) return 0.0;
  const double ex = static_cast<double>(excess(h));
  return falling_ratio(n, t) * std::ldexp(1.0, static_cast<int>(t)) /
         static_cast<double>(automorphism_count(h)) *
         std::pow(alpha, static_cast<double>(h.size())) * std::pow(static_cast<double>(n), -ex);
}

double expected_copies_exact(const Hypergraph& h, std::uint32_t n, double alpha) {
  const std::uint32_t t = h.order();
  if (n < t) return 0.0;
  const double ex = static_cast<double>(excess(h));
  return falling_ratio(n, t) / static_cast<double>(automorphism_count(h)) *
         std::pow(alpha, static_cast<double>(h.size())) * std::pow(static_cast<double>(n), -ex);
}

Rational expected_copies_exact(const Formula& h, std::uint32_t n, const Rational& alpha) {
  const std::uint32_t t = h.order();
  if (n < t) return 0;
  return falling_ratio_exact(n, t) * pow(Rational(2), t) / Rational(automorphism_count(h)) *
         pow(alpha, static_cast<std::uint32_t>(h.size())) * power_of_n(n, -excess(h));
}

Rational expected_copies_exact(const Hypergraph& h, std::uint32_t n, const Rational& alpha) {
  const std::uint32_t t = h.order();
  if (n < t) return 0;
  return falling_ratio_exact(n, t) / Rational(automorphism_count(h)) *
         pow(alpha, static_cast<std::uint32_t>(h.size())) * power_of_n(n, -excess(h));
}

double FirstOrderTerm::evaluate(double n, double alpha) const {
  return to_double(coefficient) * std::pow(alpha, static_cast<double>(alpha_power)) *
         std::pow(n, -static_cast<double>(exponent));
}

FirstOrderTerm first_order_containment(const Formula& h) {
  if (!is_full(h)) throw std::invalid_argument("first-order containment needs a full formula");
  return {pow(Rational(2), h.order()) / Rational(automorphism_count(h)),
          static_cast<std::uint32_t>(h.size()), excess(h)};
}

FirstOrderTerm first_order_containment(const Hypergraph& h, std::uint32_t k) {
  if (!is_k_dense(h, k))
    throw std::invalid_argument("first-order containment needs a k-dense hypergraph");
  return {Rational(1) / Rational(automorphism_count(h)), static_cast<std::uint32_t>(h.size()),
          excess(h)};
}

CoreTypeDistribution core_type_distribution(std::span<const FormulaEntry> entries,
                                            const Rational& alpha) {
  return distribution(entries, alpha, true);
}

CoreTypeDistribution core_type_distribution(std::span<const HypergraphEntry> entries,
                                            const Rational& alpha) {
  return distribution(entries, alpha, false);
}

double ExpansionPolynomial::evaluate(double n, double alpha) const {
  double sum = 0.0;
  for (const auto& [s, poly] : terms) sum += poly.evaluate(alpha) * std::pow(n, -double(s));
  return sum;
}

ExpansionPolynomial failure_expansion(const FormulaCatalog& catalog, EventKind event,
                                      std::uint32_t s_max) {
  check_event(event, true);
  return expansion(catalog, event, s_max, true);
}

ExpansionPolynomial failure_expansion(const HypergraphCatalog& catalog, EventKind event,
                                      std::uint32_t s_max) {
  check_event(event, false);
  return expansion(catalog, event, s_max, false);
}

std::uint32_t leading_excess(const FormulaCatalog& catalog, EventKind event) {
  check_event(event, true);
  return leading(catalog, event);
}

std::uint32_t leading_excess(const HypergraphCatalog& catalog, EventKind event) {
  check_event(event, false);
  return leading(catalog, event);
}

double tail_bound(std::uint32_t r, double alpha, double n, double t) {
  if (r < 3) throw std::invalid_argument("tail bound needs r >= 3");
  if (alpha <= 0 || n <= 0) throw std::invalid_argument("alpha and n must be positive");
  const double rr = r;
  if (t < 1 || t > n / (2.0 * std::pow(alpha, 1.0 / (rr - 1))))
    throw std::invalid_argument("t outside [1, n / (2 alpha^{1/(r-1)})]");
  const double base = std::pow(4.0, (rr - 1) / rr) * std::exp(1.0) * std::pow(alpha, 2 / rr) *
                      std::pow(t / n, 1 - 2 / rr);
  return std::pow(base, t);
}

double tail_bound_hypergraph(std::uint32_t r, std::uint32_t k, double alpha, double n,
                             double t) {
  if (r < 2 || k < 2 || r + k <= 4)
    throw std::invalid_argument("tail bound needs r, k >= 2 and r + k > 4");
  if (alpha <= 0 || n <= 0) throw std::invalid_argument("alpha and n must be positive");
  const double rr = r, kk = k;
  if (t < 1 || t > n / std::pow(alpha, 1.0 / (rr - 1)))
    throw std::invalid_argument("t outside [1, n / alpha^{1/(r-1)}]");
  const double base = std::exp(1.0) * std::pow(alpha, kk / rr) * std::pow(t / n, kk - 1 - 1 / rr);
  return std::pow(base, t);
}

}  // namespace subcrit
