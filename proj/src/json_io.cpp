#include "fibertor/json_io.hpp"

#include <cstdio>
#include <limits>
#include <sstream>

#include "fibertor/error.hpp"

namespace fibertor::io {

  namespace {
    json const& field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw InvalidInput(std::string("missing field \"") + key + "\"");
      }
      return j.at(key);
    }

    int small_int(json const& j, char const* what) {
      if (!j.is_number_integer()) {
        throw InvalidInput(std::string(what) + " must be an integer");
      }
      return j.get<int>();
    }

    std::string format_double(double x) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12f", x);
      return buf;
    }

    std::vector<std::string> strings(std::vector<mpz_class> const& xs) {
      std::vector<std::string> out;
      for (auto const& x : xs) {
        out.push_back(x.get_str());
      }
      return out;
    }

    std::vector<Word> words_from_json(json const& j, int rank) {
      if (!j.is_array()) {
        throw InvalidInput("expected an array of words");
      }
      std::vector<Word> out;
      for (auto const& w : j) {
        if (!w.is_string()) {
          throw InvalidInput("words must be strings");
        }
        out.push_back(Word::parse(w.get<std::string>(), rank));
      }
      return out;
    }
  }  // namespace

  json to_json(mpz_class const& x) {
    return x.get_str();
  }

  mpz_class integer_from_json(json const& j) {
    if (j.is_number_integer()) {
      return mpz_class(j.dump());
    }
    if (j.is_string()) {
      mpz_class   x;
      std::string s = j.get<std::string>();
      if (s.empty() || x.set_str(s, 10) != 0) {
        throw InvalidInput("\"" + s + "\" is not a decimal integer");
      }
      return x;
    }
    throw InvalidInput("expected an integer or a decimal string, got "
                       + j.dump());
  }

  json to_json(IntMatrix const& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) {
        row.push_back(m(i, j).get_str());
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

  IntMatrix matrix_from_json(json const& j) {
    if (!j.is_array() || j.empty()) {
      throw InvalidInput("matrix must be a non-empty array of rows");
    }
    std::size_t const cols = j[0].is_array() ? j[0].size() : 0;
    if (cols == 0) {
      throw InvalidInput("matrix rows must be non-empty arrays");
    }
    IntMatrix m(j.size(), cols);
    for (std::size_t r = 0; r < j.size(); ++r) {
      if (!j[r].is_array() || j[r].size() != cols) {
        throw InvalidInput("matrix rows must all have the same length");
      }
      for (std::size_t c = 0; c < cols; ++c) {
        m(r, c) = integer_from_json(j[r][c]);
      }
    }
    return m;
  }

  json to_json(IntPolynomial const& p) {
    json out = json::array();
    for (auto const& c : p.coefficients()) {
      if (c.fits_slong_p()) {
        out.push_back(c.get_si());
      } else {
        out.push_back(c.get_str());
      }
    }
    return out;
  }

  IntPolynomial polynomial_from_json(json const& j) {
    if (!j.is_array()) {
      throw InvalidInput("polynomial must be a coefficient array");
    }
    std::vector<mpz_class> coeffs;
    for (auto const& c : j) {
      coeffs.push_back(integer_from_json(c));
    }
    return IntPolynomial(std::move(coeffs));
  }

  json to_json(FreeAutomorphism const& phi) {
    json images = json::array(), inverses = json::array();
    for (auto const& w : phi.images()) {
      images.push_back(w.to_string());
    }
    for (auto const& w : phi.inverse_images()) {
      inverses.push_back(w.to_string());
    }
    return {{"rank", phi.rank()},
            {"images", images},
            {"inverse_images", inverses}};
  }

  FreeAutomorphism automorphism_from_json(json const& j) {
    json const& images = field(j, "images");
    if (!images.is_array() || images.empty()) {
      throw InvalidInput("automorphism images must be a non-empty array");
    }
    int const rank = j.contains("rank") ? small_int(j.at("rank"), "rank")
                                        : static_cast<int>(images.size());
    if (rank != static_cast<int>(images.size())) {
      throw InvalidInput("automorphism rank does not match its images");
    }
    return FreeAutomorphism(words_from_json(images, rank),
                            words_from_json(field(j, "inverse_images"), rank));
  }

  json to_json(CosetTable const& t) {
    json perms = json::array();
    for (auto const& p : t.perms()) {
      json row = json::array();
      for (int image : p) {
        row.push_back(image + 1);
      }
      perms.push_back(std::move(row));
    }
    return {{"rank", t.rank()}, {"index", t.index()}, {"perms", perms}};
  }

  CosetTable table_from_json(json const& j) {
    json const& perms = field(j, "perms");
    if (!perms.is_array() || perms.empty()) {
      throw InvalidInput("perms must be a non-empty array");
    }
    std::vector<std::vector<int>> p;
    for (auto const& row : perms) {
      if (!row.is_array()) {
        throw InvalidInput("each permutation must be an array");
      }
      std::vector<int> images;
      for (auto const& x : row) {
        images.push_back(small_int(x, "coset") - 1);
      }
      p.push_back(std::move(images));
    }
    CosetTable t = CosetTable::from_perms(std::move(p));
    if (j.contains("rank") && small_int(j.at("rank"), "rank") != t.rank()) {
      throw InvalidInput("table rank does not match perms");
    }
    if (j.contains("index") && small_int(j.at("index"), "index") != t.index()) {
      throw InvalidInput("table index does not match perms");
    }
    return t;
  }

  json to_json(SnfResult const& snf) {
    return {{"invariant_factors", strings(snf.invariant_factors)},
            {"free_rank", snf.free_rank},
            {"U", to_json(snf.u)},
            {"V", to_json(snf.v)}};
  }

  json to_json(Cokernel const& c) {
    return {{"free_rank", c.free_rank},
            {"torsion", strings(c.torsion)},
            {"torsion_order", c.torsion_order().get_str()}};
  }

  json to_json(LiftResult const& lift, bool include_restricted) {
    json out = {{"table", to_json(lift.base_table)},
                {"power", lift.power},
                {"h1", to_json(lift.h1_action)}};
    if (include_restricted && lift.restricted) {
      out["restricted"] = to_json(*lift.restricted);
    }
    return out;
  }

  json to_json(MappingTorusH1 const& h1) {
    return {{"betti", h1.betti},
            {"invariant_factors", strings(h1.invariant_factors)},
            {"torsion_order", h1.torsion_order.get_str()}};
  }

  json to_json(MahlerMeasure const& m) {
    return {{"value", m.digits},
            {"log", format_double(m.log_value)},
            {"error_bound", m.error_bound},
            {"precision", m.precision}};
  }

  json to_json(SpectralClass const& s) {
    json cyclo = json::array();
    for (auto const& f : s.cyclotomic_part) {
      cyclo.push_back({{"order", f.order}, {"multiplicity", f.multiplicity}});
    }
    return {{"kind", to_string(s.kind)},
            {"char_poly", to_json(s.char_poly)},
            {"cyclotomic_part", cyclo},
            {"non_cyclotomic_part", to_json(s.non_cyclotomic_part)},
            {"root_order", s.root_order},
            {"mahler", to_json(s.mahler)}};
  }

  json to_json(std::vector<GrowthSample> const& samples) {
    json out = json::array();
    for (auto const& s : samples) {
      out.push_back({{"n", s.n},
                     {"torsion_order", s.torsion_order.get_str()},
                     {"log_over_n", format_double(s.log_torsion_over_n)},
                     {"target", format_double(s.target)}});
    }
    return out;
  }

  std::string growth_csv(std::vector<GrowthSample> const& samples) {
    std::ostringstream os;
    os << "n,torsion_order,log_over_n,target\n";
    for (auto const& s : samples) {
      os << s.n << ',' << s.torsion_order.get_str() << ','
         << format_double(s.log_torsion_over_n) << ','
         << format_double(s.target) << '\n';
    }
    return os.str();
  }

  json to_json(UnipotentWitness const& w) {
    return {{"order", w.order.get_str()},
            {"root_power", w.root_power},
            {"power", w.power.get_str()},
            {"total_power", w.total_power.get_str()},
            {"unipotent", to_json(w.unipotent)},
            {"nilpotent_power", to_json(w.nilpotent_power)},
            {"torsion_matrix", to_json(w.torsion_matrix)},
            {"invariant_factors", strings(w.invariant_factors)},
            {"free_rank", w.free_rank},
            {"witness_factor", w.witness_factor.get_str()},
            {"checks",
             {{"nilpotent", w.nilpotent},
              {"divisible", w.divisible},
              {"has_order_m", w.has_order_m}}},
            {"verified", w.verified()}};
  }

  json to_json(SearchStats const& s) {
    return {{"covers_tried", s.covers_tried},
            {"finite_order", s.finite_order},
            {"quasi_unipotent", s.quasi_unipotent},
            {"large_eigenvalue", s.large_eigenvalue},
            {"growth_exhausted", s.growth_exhausted},
            {"max_index_reached", s.max_index_reached}};
  }

  json to_json(TorsionCertificate const& c) {
    json out = {{"route", to_string(c.route)},
                {"bound", c.bound.get_str()},
                {"lift_power", c.lift_power},
                {"h1_matrix", to_json(c.h1_matrix)},
                {"torus_power", c.torus_power.get_str()},
                {"free_rank", c.free_rank},
                {"invariant_factors", strings(c.invariant_factors)},
                {"torsion_order", c.torsion_order.get_str()},
                {"automorphism", nullptr},
                {"cover", nullptr}};
    if (c.automorphism) {
      out["automorphism"] = to_json(*c.automorphism);
    }
    if (c.cover) {
      out["cover"] = to_json(*c.cover);
    }
    if (c.witness_order) {
      out["witness_order"] = c.witness_order->get_str();
    }
    if (c.root_power) {
      out["root_power"] = *c.root_power;
    }
    return out;
  }

  TorsionCertificate certificate_from_json(json const& j) {
    try {
      TorsionCertificate c;
      json const&        route = field(j, "route");
      if (!route.is_string()) {
        throw InvalidInput("route must be a string");
      }
      c.route = route_from_string(route.get<std::string>());
      c.bound = integer_from_json(field(j, "bound"));
      mpz_class const lift_power
          = j.contains("lift_power") ? integer_from_json(j.at("lift_power"))
                                     : mpz_class(1);
      if (lift_power < 1 || !lift_power.fits_ulong_p()) {
        throw InvalidInput("lift_power out of range");
      }
      c.lift_power  = lift_power.get_ui();
      c.h1_matrix   = matrix_from_json(field(j, "h1_matrix"));
      c.torus_power = integer_from_json(field(j, "torus_power"));
      mpz_class const free_rank = integer_from_json(field(j, "free_rank"));
      if (free_rank < 0 || !free_rank.fits_ulong_p()) {
        throw InvalidInput("free_rank out of range");
      }
      c.free_rank = free_rank.get_ui();
      json const& factors = field(j, "invariant_factors");
      if (!factors.is_array()) {
        throw InvalidInput("invariant_factors must be an array");
      }
      for (auto const& d : factors) {
        c.invariant_factors.push_back(integer_from_json(d));
      }
      c.torsion_order = integer_from_json(field(j, "torsion_order"));
      if (j.contains("automorphism") && !j.at("automorphism").is_null()) {
        c.automorphism = automorphism_from_json(j.at("automorphism"));
      }
      if (j.contains("cover") && !j.at("cover").is_null()) {
        c.cover = table_from_json(j.at("cover"));
      }
      if (j.contains("witness_order")) {
        c.witness_order = integer_from_json(j.at("witness_order"));
      }
      if (j.contains("root_power")) {
        mpz_class const e = integer_from_json(j.at("root_power"));
        if (e < 1 || !e.fits_ulong_p()) {
          throw InvalidInput("root_power out of range");
        }
        c.root_power = e.get_ui();
      }
      return c;
    } catch (json::exception const& e) {
      throw InvalidInput(std::string("malformed certificate: ") + e.what());
    }
  }

}  // namespace fibertor::io
