#include "egcert/check.hpp"

#include "egcert/connectivity.hpp"

namespace egcert {

CheckOutput run_check(const Graph& g, const CheckOptions& options) {
  CheckOutput out;
  out.n = g.order();
  out.m = g.size();
  const DegreeStats deg = degree_stats(g);
  out.min_degree = deg.min_degree;
  out.max_degree = deg.max_degree;
  out.complete = is_complete(g);
  out.connectivity = vertex_connectivity(g);
  if (options.witnesses) {
    out.p5_certificate = p5_witness(g);
    out.p8_certificate = eg_witness(g);
  }
  out.p5_free = g.order() == 0 || is_pk_free(g, 5);
  out.p8_free = g.order() == 0 || is_pk_free(g, 8);
  out.spectrum_bound = options.max_cycle;
  out.cycle_spectrum = cycle_spectrum(g, options.max_cycle);
  out.power_of_two = power_of_two_cycle(g);
  return out;
}

}  // namespace egcert
