#include "fibertor/search.hpp"

#include "fibertor/error.hpp"
#include "fibertor/lift.hpp"
#include "fibertor/smith.hpp"
#include "fibertor/spectrum.hpp"
#include "fibertor/subgroups.hpp"
#include "fibertor/witness.hpp"

namespace fibertor {

  std::string to_string(Route route) {
    return route == Route::unipotent ? "unipotent" : "mahler_growth";
  }

  Route route_from_string(std::string const& name) {
    if (name == "unipotent") {
      return Route::unipotent;
    }
    if (name == "mahler_growth") {
      return Route::mahler_growth;
    }
    throw InvalidInput("unknown route \"" + name + "\"");
  }

  namespace {

    // Tries to certify torsion for one H_1 action; nullopt if blocked.
    std::optional<TorsionCertificate> certify(IntMatrix const&    h1,
                                              SearchConfig const& config,
                                              SearchStats&        stats) {
      SpectralClass const spectrum = classify_spectrum(h1);
      TorsionCertificate  cert;
      cert.h1_matrix = h1;
      cert.bound     = config.torsion_bound;
      switch (spectrum.kind) {
        case SpectralKind::finite_order:
          ++stats.finite_order;
          return std::nullopt;

        case SpectralKind::has_large_eigenvalue: {
          ++stats.large_eigenvalue;
          // |det(A^n - I)| need not be monotone in n, so scan linearly.
          IntMatrix an = IntMatrix::identity(h1.rows());
          for (unsigned long n = 1; n <= config.max_power; ++n) {
            an               = an * h1;
            Cokernel const c = cokernel(minus_identity(an));
            if (c.torsion_order() > config.torsion_bound) {
              cert.route             = Route::mahler_growth;
              cert.torus_power       = n;
              cert.free_rank         = c.free_rank;
              cert.invariant_factors = c.torsion;
              cert.torsion_order     = c.torsion_order();
              return cert;
            }
          }
          ++stats.growth_exhausted;
          return std::nullopt;
        }

        case SpectralKind::quasi_unipotent_infinite: {
          ++stats.quasi_unipotent;
          mpz_class const        m = config.torsion_bound + 1;
          UnipotentWitness const w = unipotent_witness(h1, m);
          if (!w.verified()) {
            throw InternalError("unipotent witness failed its own checks");
          }
          Cokernel const c = cokernel(w.torsion_matrix);
          cert.route             = Route::unipotent;
          cert.torus_power       = w.total_power;
          cert.free_rank         = c.free_rank;
          cert.invariant_factors = c.torsion;
          cert.torsion_order     = c.torsion_order();
          cert.witness_order     = m;
          cert.root_power        = w.root_power;
          return cert;
        }
      }
      return std::nullopt;
    }

  }  // namespace

  SearchOutcome search(SearchConfig const& config) {
    if (config.torsion_bound < 1) {
      throw InvalidInput("torsion bound must be at least 1");
    }
    if (config.max_index < 1 || config.max_power < 1) {
      throw InvalidInput("search caps must be positive");
    }
    SearchOutcome out;

    if (auto const* a = std::get_if<IntMatrix>(&config.monodromy)) {
      if (!a->is_unimodular()) {
        throw InvalidInput("monodromy matrix must be invertible over Z");
      }
      out.stats.covers_tried      = 1;
      out.stats.max_index_reached = 1;
      out.certificate             = certify(*a, config, out.stats);
      return out;
    }

    auto const& phi = std::get<FreeAutomorphism>(config.monodromy);
    EnumerationLimits limits{config.max_index, config.max_tables};

    for (int m = 1; m <= config.max_index && !out.certificate; ++m) {
      out.stats.max_index_reached = m;
      for_each_subgroup(
          phi.rank(),
          m,
          [&](CosetTable const& table) {
            ++out.stats.covers_tried;
            LiftResult const lift = lift_h1(phi, table);
            auto cert = certify(lift.h1_action, config, out.stats);
            if (!cert) {
              return true;
            }
            cert->automorphism = phi;
            cert->cover        = table;
            cert->lift_power   = lift.power;
            out.certificate    = std::move(cert);
            return false;
          },
          limits);
    }
    return out;
  }

  Verification verify(TorsionCertificate const& c) {
    auto fail = [](std::string reason) {
      return Verification{false, std::move(reason)};
    };
    if (!c.h1_matrix.is_square() || c.h1_matrix.rows() == 0) {
      return fail("h1_matrix must be a non-empty square matrix");
    }
    if (!c.h1_matrix.is_unimodular()) {
      return fail("h1_matrix is not invertible over Z");
    }
    if (c.torus_power < 1) {
      return fail("torus_power must be positive");
    }

    Cokernel const coker
        = cokernel(minus_identity(power(c.h1_matrix, c.torus_power)));
    if (coker.torsion != c.invariant_factors) {
      return fail("invariant factors do not match the Smith normal form");
    }
    if (coker.free_rank != c.free_rank) {
      return fail("free rank does not match the Smith normal form");
    }
    if (coker.torsion_order() != c.torsion_order) {
      return fail("torsion order is not the product of invariant factors");
    }
    if (!(c.torsion_order > c.bound)) {
      return fail("torsion order does not exceed the bound");
    }
    if (c.route == Route::unipotent && c.witness_order
        && !coker.has_element_of_order(*c.witness_order)) {
      return fail("cokernel has no element of the claimed order");
    }

    if (c.cover.has_value() != c.automorphism.has_value()) {
      return fail("cover and automorphism must be given together");
    }
    if (c.cover) {
      auto const& phi   = *c.automorphism;
      auto const& table = *c.cover;
      if (phi.rank() != table.rank()) {
        return fail("automorphism and cover have different ranks");
      }
      if (c.lift_power < 1) {
        return fail("lift_power must be positive");
      }
      try {
        // phi^k preserves H iff the orbit of H returns after k steps.
        CosetTable image = table;
        for (std::uint64_t i = 0; i < c.lift_power; ++i) {
          image = image_subgroup(phi, image);
        }
        if (!(image == table)) {
          return fail("automorphism power does not preserve the cover");
        }
        if (h1_action_along_orbit(phi, table, c.lift_power) != c.h1_matrix) {
          return fail("h1_matrix is not the lifted action on the cover");
        }
      } catch (Error const& e) {
        return fail(std::string("lift recomputation failed: ") + e.what());
      }
    }
    return Verification{true, "ok"};
  }

}  // namespace fibertor
