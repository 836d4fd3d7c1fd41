#include "homalg/identity_suite.hpp"

#include "homalg/random.hpp"

namespace homalg {

bool IdentitySuiteResult::all_hold() const {
  for (const auto& t : tallies)
    if (t.failed != 0) return false;
  return true;
}

HomCoalgebra identity_suite_instance(std::size_t dim, std::uint64_t seed, std::size_t i) {
  RationalSampler rng(seed * 1000003u + i);
  ComulTensor d = rng.comul(dim);
  if (i % 2 == 1) {
    for (std::size_t k = 0; k < dim; ++k)
      for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = a + 1; b < dim; ++b) d(k, b, a) = d(k, a, b);
  }
  return HomCoalgebra(d, rng.map(dim));
}

IdentitySuiteResult run_identity_suite(std::size_t dim, std::size_t samples, std::uint64_t seed) {
  IdentitySuiteResult out;
  out.dim = dim;
  out.samples = samples;
  out.seed = seed;
  out.tallies = {
      {"c(D^op) = -Phi_(13) c(D)"},
      {"(beta (x) D^op) D = Phi_(13) (D (x) beta) D^op"},
      {"(beta (x) D) D^op = Phi_(13) (D^op (x) beta) D"},
      {"(D (x) beta) D^op = Phi_(213) (beta (x) D) D"},
      {"(D^op (x) beta) D = Phi_(12) (D (x) beta) D"},
      {"c(D_L) expanded through D and D^op"},
      {"c(D_L) expanded through D alone"},
      {"cyclic sum of c(D_L) = 2 * alternating S3 sum of c(D)"},
      {"cyclic and alternating admissibility checkers agree"},
  };
  const auto tally = [&](std::size_t idx, bool ok) { ok ? ++out.tallies[idx].passed : ++out.tallies[idx].failed; };
  for (std::size_t i = 0; i < samples; ++i) {
    const HomCoalgebra c = identity_suite_instance(dim, seed, i);
    const auto flip = flip_identities_check(c);
    for (std::size_t k = 0; k < flip.size(); ++k) tally(k, flip[k]);
    const auto expansion = coassociator_expansion_check(c);
    tally(5, expansion[0]);
    tally(6, expansion[1]);
    const AdmissibilityReport adm = check_hom_lie_admissible(c);
    TriMap twice = adm.alternating_sum;
    twice += adm.alternating_sum;
    tally(7, adm.cyclic_sum == twice);
    tally(8, adm.methods_agree());
    if (adm.cyclic.holds() && adm.alternating.holds()) ++out.admissible_instances;
  }
  return out;
}

}  // namespace homalg
