#pragma once

#include <gmpxx.h>

#include <json.hpp>

#include <string>
#include <vector>

#include "fibertor/automorphism.hpp"
#include "fibertor/coset_table.hpp"
#include "fibertor/int_matrix.hpp"
#include "fibertor/lift.hpp"
#include "fibertor/mahler.hpp"
#include "fibertor/mapping_torus.hpp"
#include "fibertor/polynomial.hpp"
#include "fibertor/search.hpp"
#include "fibertor/smith.hpp"
#include "fibertor/spectrum.hpp"
#include "fibertor/witness.hpp"

// JSON and CSV forms of the library's values. Big integers are written as
// decimal strings; on input both strings and JSON integers are accepted.
// Coset indices and generator indices are 1-based in every external format.
namespace fibertor::io {

  using json = nlohmann::json;

  json      to_json(mpz_class const& x);
  mpz_class integer_from_json(json const& j);

  json      to_json(IntMatrix const& m);
  IntMatrix matrix_from_json(json const& j);

  // Coefficient list, constant term first. Coefficients that fit in 64 bits
  // are JSON integers, larger ones decimal strings.
  json          to_json(IntPolynomial const& p);
  IntPolynomial polynomial_from_json(json const& j);

  json             to_json(FreeAutomorphism const& phi);
  FreeAutomorphism automorphism_from_json(json const& j);

  // {"rank": r, "index": m, "perms": [[...], ...]} with 1-based images.
  json       to_json(CosetTable const& t);
  CosetTable table_from_json(json const& j);

  json to_json(SnfResult const& snf);
  json to_json(Cokernel const& c);
  json to_json(LiftResult const& lift, bool include_restricted);
  json to_json(MappingTorusH1 const& h1);
  json to_json(MahlerMeasure const& m);
  json to_json(SpectralClass const& s);
  json to_json(std::vector<GrowthSample> const& samples);
  json to_json(UnipotentWitness const& w);
  json to_json(SearchStats const& s);

  json               to_json(TorsionCertificate const& c);
  TorsionCertificate certificate_from_json(json const& j);

  // "n,torsion_order,log_over_n,target" with one row per sample.
  std::string growth_csv(std::vector<GrowthSample> const& samples);

}  // namespace fibertor::io
