#pragma once

// Every bound on k-forcing numbers and the invariants they are compared with,
// as exact rational formulas behind literal hypothesis gates.

#include "kforce/errors.hpp"
#include "kforce/graph.hpp"
#include "kforce/record.hpp"

#include <boost/rational.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace kforce {

using Rational = boost::rational<std::int64_t>;

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

enum class BoundId {
  LOWER_DEG,    // F_k >= delta - k + 1
  MAIN,         // F_k <= (Delta-k+1) n / (Delta-k+1+min(delta,k))
  KCOR,         // F_k <= (Delta-k+1) n / (Delta+1), delta >= k
  RATIO,        // F_1 <= Delta n / (Delta+1)
  CONN_KDOM,    // F_k <= n - gamma_{k,c}, k-connected
  CONN_DOM,     // F_1 <= n - gamma_c, connected
  MAIN2,        // F_k <= ((Delta-2) n + 2) / (Delta+k-2), k-connected
  COR3,         // F_1 <= ((Delta-2) n + 2) / (Delta-1), connected
  CHAIN,        // n - gamma_c <= ((Delta-2) n + 2) / (Delta-1)
  GAMMA_LOWER,  // gamma_c >= (n-2) / (Delta-1)
  HAM_CHORDS,   // F_1 <= t + 1, Hamiltonian with t chords
  HAM_CUBIC,    // F_1 <= n_3/2 + 1, Hamiltonian with Delta = 3
  CYCLE_TREE,   // F_1 <= 2q
  TREE_LEAF,    // ceil(n_1/2) <= F_1(T) <= n_1 - 1
  TREE_COR,     // F_1(T) <= ((Delta-2) n + 2) / (Delta-1) - 1
  K1R,          // F_{k(r-1)} <= n - alpha_k, K_{1,r}-free
  K1R_ALPHA,    // F_{r-1} <= n - alpha, K_{1,r}-free
  CLAWFREE,     // F_{2k} <= n - alpha_k, claw-free
};

inline constexpr std::array<std::pair<BoundId, std::string_view>, 18> kBoundNames{{
    {BoundId::LOWER_DEG, "LOWER_DEG"},   {BoundId::MAIN, "MAIN"},
    {BoundId::KCOR, "KCOR"},             {BoundId::RATIO, "RATIO"},
    {BoundId::CONN_KDOM, "CONN_KDOM"},   {BoundId::CONN_DOM, "CONN_DOM"},
    {BoundId::MAIN2, "MAIN2"},           {BoundId::COR3, "COR3"},
    {BoundId::CHAIN, "CHAIN"},           {BoundId::GAMMA_LOWER, "GAMMA_LOWER"},
    {BoundId::HAM_CHORDS, "HAM_CHORDS"}, {BoundId::HAM_CUBIC, "HAM_CUBIC"},
    {BoundId::CYCLE_TREE, "CYCLE_TREE"}, {BoundId::TREE_LEAF, "TREE_LEAF"},
    {BoundId::TREE_COR, "TREE_COR"},     {BoundId::K1R, "K1R"},
    {BoundId::K1R_ALPHA, "K1R_ALPHA"},   {BoundId::CLAWFREE, "CLAWFREE"},
}};

inline std::string_view bound_name(BoundId id) {
  for (auto [b, name] : kBoundNames)
    if (b == id) return name;
  return "?";
}

inline std::optional<BoundId> bound_from_name(std::string_view name) {
  for (auto [b, name_] : kBoundNames)
    if (name_ == name) return b;
  return std::nullopt;
}

inline std::vector<BoundId> all_bounds() {
  std::vector<BoundId> out;
  for (auto [b, name] : kBoundNames) out.push_back(b);
  return out;
}

enum class Applicability { applicable, not_applicable, not_established };

/// Evaluated bound: a lower end, an upper end, or both (TREE_LEAF).
struct BoundValue {
  Applicability applicability = Applicability::not_applicable;
  std::optional<Rational> lower;
  std::optional<Rational> upper;

  bool applicable() const { return applicability == Applicability::applicable; }
};

namespace detail {

inline Rational q(std::int64_t v) { return Rational(v); }
inline std::int64_t i64(std::size_t v) { return static_cast<std::int64_t>(v); }

inline BoundValue upper(Rational v) { return {Applicability::applicable, std::nullopt, v}; }
inline BoundValue lower(Rational v) { return {Applicability::applicable, v, std::nullopt}; }
inline BoundValue skip() { return {}; }

}  // namespace detail

/// Bound value for `id` at index k, or not-applicable when a hypothesis fails.
/// Throws MissingInvariant when `aux` lacks a needed value.
inline BoundValue bound_value(BoundId id, std::size_t k, const InvariantRecord& aux) {
  using detail::i64;
  using detail::q;
  if (k == 0) throw PreconditionError("k must be a positive integer");
  const std::int64_t n = i64(aux.n);
  const std::int64_t kk = i64(k);
  const std::int64_t big = i64(aux.degrees.max_degree);
  const std::int64_t small = i64(aux.degrees.min_degree);
  const bool k_is_one = k == 1;

  switch (id) {
    case BoundId::LOWER_DEG:
      return detail::lower(q(small - kk + 1));

    case BoundId::MAIN:
      if (n < 2 || big < kk || small < 1) return detail::skip();
      return detail::upper(Rational((big - kk + 1) * n, big - kk + 1 + std::min(small, kk)));

    case BoundId::KCOR:
      if (n < 2 || small < kk) return detail::skip();
      return detail::upper(Rational((big - kk + 1) * n, big + 1));

    case BoundId::RATIO:
      if (!k_is_one || small < 1) return detail::skip();
      return detail::upper(Rational(big * n, big + 1));

    case BoundId::CONN_KDOM: {
      if (!aux.is_k_connected(k)) return detail::skip();
      const auto gamma = aux.connected_k_domination(k);
      if (!gamma) throw MissingInvariant("k-connected graph without connected k-domination number");
      return detail::upper(q(n - i64(*gamma)));
    }

    case BoundId::CONN_DOM: {
      if (!k_is_one || !aux.connected || n < 2) return detail::skip();
      return detail::upper(q(n - i64(aux.connected_k_domination(1).value())));
    }

    case BoundId::MAIN2:
      if (big < 2 || !aux.is_k_connected(k)) return detail::skip();
      return detail::upper(Rational((big - 2) * n + 2, big + kk - 2));

    case BoundId::COR3:
    case BoundId::CHAIN:
      if (!k_is_one || !aux.connected || big < 2) return detail::skip();
      return detail::upper(Rational((big - 2) * n + 2, big - 1));

    case BoundId::GAMMA_LOWER:
      if (!k_is_one || !aux.connected || big < 2) return detail::skip();
      return detail::lower(Rational(n - 2, big - 1));

    case BoundId::HAM_CHORDS:
      if (!k_is_one || n < 4) return detail::skip();
      if (!aux.hamiltonian) return {Applicability::not_established, std::nullopt, std::nullopt};
      if (!aux.hamiltonian->hamiltonian || aux.hamiltonian->chords < 1) return detail::skip();
      return detail::upper(q(i64(aux.hamiltonian->chords) + 1));

    case BoundId::HAM_CUBIC: {
      if (!k_is_one || big != 3) return detail::skip();
      const auto it = aux.degrees.histogram.find(3);
      const std::int64_t cubic = it == aux.degrees.histogram.end() ? 0 : i64(it->second);
      if (cubic < 2) return detail::skip();
      if (!aux.hamiltonian) return {Applicability::not_established, std::nullopt, std::nullopt};
      if (!aux.hamiltonian->hamiltonian) return detail::skip();
      return detail::upper(Rational(cubic, 2) + 1);
    }

    case BoundId::CYCLE_TREE:
      if (!k_is_one || !aux.cycle_tree.is_cycle_tree) return detail::skip();
      return detail::upper(q(2 * i64(aux.cycle_tree.cycles)));

    case BoundId::TREE_LEAF: {
      if (!k_is_one || !aux.tree || n < 2) return detail::skip();
      const std::int64_t leaves = i64(aux.degrees.leaves);
      return {Applicability::applicable, q((leaves + 1) / 2), q(leaves - 1)};
    }

    case BoundId::TREE_COR:
      if (!k_is_one || !aux.tree || big < 2) return detail::skip();
      return detail::upper(Rational((big - 2) * n + 2, big - 1) - 1);

    case BoundId::K1R:
      if (small < 1) return detail::skip();
      return detail::upper(q(n - i64(aux.k_independence(k))));

    case BoundId::K1R_ALPHA:
      if (!k_is_one || small < 1) return detail::skip();
      return detail::upper(q(n - i64(aux.k_independence(1))));

    case BoundId::CLAWFREE:
      if (small < 1 || aux.free_star != 3) return detail::skip();
      return detail::upper(q(n - i64(aux.k_independence(k))));
  }
  return detail::skip();
}

/// The exact quantity a bound constrains, with a short label.
struct BoundedQuantity {
  std::string label;
  std::size_t value = 0;
};

inline BoundedQuantity bounded_quantity(BoundId id, std::size_t k, const InvariantRecord& aux) {
  const std::size_t r = aux.free_star;
  switch (id) {
    case BoundId::LOWER_DEG:
    case BoundId::MAIN:
    case BoundId::KCOR:
    case BoundId::CONN_KDOM:
    case BoundId::MAIN2:
      return {"F_k", aux.forcing_number(k)};
    case BoundId::RATIO:
    case BoundId::CONN_DOM:
    case BoundId::COR3:
    case BoundId::HAM_CHORDS:
    case BoundId::HAM_CUBIC:
    case BoundId::CYCLE_TREE:
    case BoundId::TREE_LEAF:
    case BoundId::TREE_COR:
      return {"F_1", aux.forcing_number(1)};
    case BoundId::CHAIN:
      return {"n-gamma_c", aux.n - aux.connected_k_domination(1).value()};
    case BoundId::GAMMA_LOWER:
      return {"gamma_c", aux.connected_k_domination(1).value()};
    case BoundId::K1R:
      return {"F_{k(r-1)}", aux.forcing_number(k * (r - 1))};
    case BoundId::K1R_ALPHA:
      return {"F_{r-1}", aux.forcing_number(r - 1)};
    case BoundId::CLAWFREE:
      return {"F_{2k}", aux.forcing_number(2 * k)};
  }
  throw PreconditionError("unknown bound id");
}

enum class BoundStatus { satisfied, violated, not_applicable, not_established };

inline std::string_view status_name(BoundStatus s) {
  switch (s) {
    case BoundStatus::satisfied: return "satisfied";
    case BoundStatus::violated: return "violated";
    case BoundStatus::not_applicable: return "not_applicable";
    case BoundStatus::not_established: return "not_established";
  }
  return "?";
}

struct BoundReport {
  std::size_t graph = 0;
  std::size_t k = 1;
  BoundId id = BoundId::LOWER_DEG;
  BoundStatus status = BoundStatus::not_applicable;
  std::optional<Rational> lower;
  std::optional<Rational> upper;
  std::string quantity;
  std::size_t exact = 0;
  std::optional<Rational> slack;  // distance to the nearer end when applicable
  bool equality = false;

  bool applicable() const {
    return status == BoundStatus::satisfied || status == BoundStatus::violated;
  }
};

inline BoundReport evaluate_bound(BoundId id, std::size_t k, const InvariantRecord& aux, std::size_t graph = 0) {
  BoundReport rep;
  rep.graph = graph;
  rep.k = k;
  rep.id = id;
  const BoundValue value = bound_value(id, k, aux);
  if (value.applicability == Applicability::not_applicable) return rep;
  if (value.applicability == Applicability::not_established) {
    rep.status = BoundStatus::not_established;
    return rep;
  }
  const auto quantity = bounded_quantity(id, k, aux);
  rep.quantity = quantity.label;
  rep.exact = quantity.value;
  rep.lower = value.lower;
  rep.upper = value.upper;
  const Rational exact(static_cast<std::int64_t>(quantity.value));
  std::optional<Rational> slack;
  if (value.lower) slack = exact - *value.lower;
  if (value.upper) slack = slack ? std::min(*slack, *value.upper - exact) : *value.upper - exact;
  rep.slack = slack;
  // Mixed rational/int comparisons recurse under C++20 rewritten operators in
  // some Boost releases, so both sides stay rational.
  rep.status = *slack < Rational(0) ? BoundStatus::violated : BoundStatus::satisfied;
  rep.equality = *slack == Rational(0);
  return rep;
}

/// One report per (k, id), k-major then in BoundId order.
inline std::vector<BoundReport> evaluate_bounds(const InvariantRecord& aux, const std::vector<std::size_t>& ks,
                                                const std::vector<BoundId>& ids, std::size_t graph = 0) {
  std::vector<BoundReport> out;
  out.reserve(ks.size() * ids.size());
  for (std::size_t k : ks)
    for (BoundId id : ids) out.push_back(evaluate_bound(id, k, aux, graph));
  return out;
}

inline std::vector<BoundReport> evaluate_bounds(const Graph& g, const std::vector<std::size_t>& ks,
                                                const std::vector<BoundId>& ids) {
  InvariantOptions opt;
  for (std::size_t k : ks) opt.max_k = std::max(opt.max_k, k);
  opt.max_k = std::max(opt.max_k, std::max<std::size_t>(g.max_degree(), 1));
  return evaluate_bounds(compute_invariants(g, opt), ks, ids);
}

enum class Tighter { main, main2, tie };

struct BoundComparison {
  Rational main;
  Rational main2;
  Tighter tighter = Tighter::tie;
  bool direction_asserted = false;  // k-connected, delta >= k, k <= 2
  bool direction_holds = true;      // main2 <= main whenever asserted
};

/// Compares the connectivity-based bound with the degree-based one.
inline BoundComparison compare_main2_with_main(std::size_t k, const InvariantRecord& aux) {
  const auto main = bound_value(BoundId::MAIN, k, aux);
  const auto main2 = bound_value(BoundId::MAIN2, k, aux);
  if (!main.applicable() || !main2.applicable())
    throw PreconditionError("both bounds must apply to compare them");
  BoundComparison c;
  c.main = *main.upper;
  c.main2 = *main2.upper;
  c.tighter = c.main2 < c.main ? Tighter::main2 : (c.main < c.main2 ? Tighter::main : Tighter::tie);
  c.direction_asserted = aux.is_k_connected(k) && aux.degrees.min_degree >= k && k <= 2;
  if (c.direction_asserted) c.direction_holds = c.main2 <= c.main;
  return c;
}

}  // namespace kforce
