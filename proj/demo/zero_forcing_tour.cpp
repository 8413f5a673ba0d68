// Small tour of the library: forcing numbers of a few named graphs and the
// bounds that apply to them.

#include "kforce/bounds.hpp"
#include "kforce/forcing.hpp"
#include "kforce/generators.hpp"
#include "kforce/io.hpp"

#include <iostream>

int main() {
  using namespace kforce;

  const Graph cube = circulant_graph(8, {1, 4});  // Wagner graph
  for (const Graph& g : {cycle_graph(6), complete_bipartite_graph(3, 3), pendant_path_graph(4), cube}) {
    std::cout << write_graph6(g) << "  n=" << g.order() << " Delta=" << g.max_degree() << '\n';
    for (std::size_t k = 1; k <= g.max_degree(); ++k) {
      const auto f = k_forcing_number(g, k);
      std::cout << "  F_" << k << " = " << f.value << "  witness " << f.witness << '\n';
    }
    const auto rec = compute_invariants(g);
    for (const auto& rep : evaluate_bounds(rec, {1}, all_bounds())) {
      if (!rep.applicable()) continue;
      std::cout << "  " << bound_name(rep.id) << ": " << rep.quantity << " = " << rep.exact;
      if (rep.lower) std::cout << " >= " << to_string(*rep.lower);
      if (rep.upper) std::cout << " <= " << to_string(*rep.upper);
      std::cout << (rep.equality ? "  (tight)" : "") << '\n';
    }
  }
}
