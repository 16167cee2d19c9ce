// fibertor command-line driver. Exit codes: 0 success / verified,
// 1 not found / not verified, 2 usage or input error, 3 resource cap.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fibertor/automorphism.hpp"
#include "fibertor/error.hpp"
#include "fibertor/json_io.hpp"
#include "fibertor/lift.hpp"
#include "fibertor/mapping_torus.hpp"
#include "fibertor/schreier.hpp"
#include "fibertor/search.hpp"
#include "fibertor/smith.hpp"
#include "fibertor/spectrum.hpp"
#include "fibertor/subgroups.hpp"
#include "fibertor/witness.hpp"

namespace {

  using fibertor::io::json;

  enum ExitCode : int {
    success      = 0,
    not_found    = 1,
    usage_error  = 2,
    resource_cap = 3
  };

  // Options shared by the subcommands that take a monodromy.
  struct MonodromyInput {
    std::string input_file;
    std::string matrix;
    std::string images;
    std::string inverse_images;
    std::string table;
  };

  void add_monodromy_options(CLI::App* cmd, MonodromyInput& in) {
    cmd->add_option("--input", in.input_file,
                    "JSON file with \"matrix\", \"automorphism\" and/or "
                    "\"table\" keys");
    cmd->add_option("--matrix", in.matrix,
                    "integer matrix as JSON, e.g. [[2,1],[1,1]]");
    cmd->add_option("--images", in.images,
                    "comma-separated generator images, e.g. b,ab");
    cmd->add_option("--inverse-images", in.inverse_images,
                    "comma-separated images under the inverse, e.g. bA,a");
  }

  json read_json_file(std::string const& path) {
    std::ifstream file(path);
    if (!file) {
      throw fibertor::InvalidInput("cannot open " + path);
    }
    try {
      return json::parse(file);
    } catch (json::exception const& e) {
      throw fibertor::InvalidInput(path + ": " + e.what());
    }
  }

  json parse_inline(std::string const& text, char const* what) {
    try {
      return json::parse(text);
    } catch (json::exception const& e) {
      throw fibertor::InvalidInput(std::string("invalid ") + what + ": "
                                   + e.what());
    }
  }

  std::vector<std::string> split_words(std::string const& text) {
    std::vector<std::string> out;
    std::string              current;
    for (char c : text) {
      if (c == ',') {
        out.push_back(current);
        current.clear();
      } else if (c != ' ') {
        current += c;
      }
    }
    out.push_back(current);
    return out;
  }

  json input_json(MonodromyInput const& in) {
    return in.input_file.empty() ? json::object()
                                 : read_json_file(in.input_file);
  }

  std::optional<fibertor::FreeAutomorphism>
  automorphism_of(MonodromyInput const& in, json const& file) {
    if (!in.images.empty()) {
      if (in.inverse_images.empty()) {
        throw fibertor::InvalidInput("--images needs --inverse-images");
      }
      json aut = {{"images", split_words(in.images)},
                  {"inverse_images", split_words(in.inverse_images)}};
      return fibertor::io::automorphism_from_json(aut);
    }
    if (file.contains("automorphism")) {
      return fibertor::io::automorphism_from_json(file.at("automorphism"));
    }
    return std::nullopt;
  }

  fibertor::Monodromy monodromy_of(MonodromyInput const& in) {
    json const file = input_json(in);
    if (!in.matrix.empty()) {
      return fibertor::io::matrix_from_json(parse_inline(in.matrix, "matrix"));
    }
    if (auto phi = automorphism_of(in, file)) {
      return *phi;
    }
    if (file.contains("matrix")) {
      return fibertor::io::matrix_from_json(file.at("matrix"));
    }
    throw fibertor::InvalidInput(
        "no monodromy given (use --matrix, --images or --input)");
  }

  // The H_1 action of a monodromy on the fibre.
  fibertor::IntMatrix h1_matrix_of(MonodromyInput const& in) {
    auto m = monodromy_of(in);
    if (auto* phi = std::get_if<fibertor::FreeAutomorphism>(&m)) {
      return phi->abelianization();
    }
    auto const& a = std::get<fibertor::IntMatrix>(m);
    if (!a.is_square()) {
      throw fibertor::InvalidInput("monodromy matrix must be square");
    }
    return a;
  }

  void print(json const& j) {
    std::cout << j.dump(2) << '\n';
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite covers and torsion in H_1 of mapping tori"};
  app.require_subcommand(1);

  std::string format = "json";

  // covers
  int         rank = 2, index = 1, max_index = 7;
  std::size_t max_count  = 1'000'000;
  bool        count_only = false;
  auto*       covers = app.add_subcommand("covers", "enumerate index-m subgroups");
  covers->add_option("--rank", rank, "rank of the free group")->required();
  covers->add_option("--index", index, "subgroup index")->required();
  covers->add_option("--max-index", max_index, "index cap");
  covers->add_option("--max-count", max_count, "table count cap");
  covers->add_flag("--count", count_only, "print counts only");

  // lift
  MonodromyInput lift_in;
  bool           with_restricted = false;
  std::size_t    max_word_length = 1'000'000;
  auto*          lift = app.add_subcommand("lift", "lift an automorphism power to a cover");
  add_monodromy_options(lift, lift_in);
  lift->add_option("--table", lift_in.table,
                   "coset table JSON {\"perms\": [[...], ...]} (1-based)");
  lift->add_flag("--restricted", with_restricted,
                 "include the restricted automorphism");
  lift->add_option("--max-word-length", max_word_length, "word length cap");

  // snf
  MonodromyInput snf_in;
  auto*          snf = app.add_subcommand("snf", "Smith normal form and cokernel");
  snf->add_option("--input", snf_in.input_file, "JSON file with \"matrix\"");
  snf->add_option("--matrix", snf_in.matrix, "integer matrix as JSON");

  // h1
  MonodromyInput h1_in;
  auto* h1 = app.add_subcommand("h1", "first homology of the mapping torus");
  add_monodromy_options(h1, h1_in);

  // spectrum
  MonodromyInput spec_in;
  int            precision = 12;
  auto*          spectrum = app.add_subcommand(
      "spectrum", "characteristic polynomial, Kronecker class, Mahler measure");
  add_monodromy_options(spectrum, spec_in);
  spectrum->add_option("--precision", precision, "Mahler measure digits");

  // growth
  MonodromyInput growth_in;
  unsigned long  growth_max = 20;
  auto*          growth = app.add_subcommand("growth", "torsion growth of powers");
  add_monodromy_options(growth, growth_in);
  growth->add_option("--max-power", growth_max, "largest power n");
  growth->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  // witness
  MonodromyInput witness_in;
  std::string    order_text;
  unsigned long  n_cap = 0;
  auto*          witness = app.add_subcommand(
      "witness", "unipotent torsion witness and brute-force oracle");
  add_monodromy_options(witness, witness_in);
  witness->add_option("--order", order_text, "target element order m")
      ->required();
  witness->add_option("--n-cap", n_cap,
                      "oracle search cap (default: the certified power)");

  // search
  MonodromyInput search_in;
  std::string    bound_text;
  unsigned long  max_power = 1000;
  std::uint64_t  seed      = 0;
  int            search_max_index = 7;
  std::size_t    search_max_count = 1'000'000;
  auto*          search = app.add_subcommand(
      "search", "find a cover and power with torsion above a bound");
  add_monodromy_options(search, search_in);
  search->add_option("--bound", bound_text, "torsion bound k")->required();
  search->add_option("--max-index", search_max_index, "cover index cap");
  search->add_option("--max-power", max_power, "torus power cap");
  search->add_option("--max-count", search_max_count, "table count cap");
  search->add_option("--seed", seed, "recorded in the output");

  // verify
  std::string cert_file;
  auto*       verify = app.add_subcommand("verify", "re-verify a certificate");
  verify->add_option("--certificate,--input", cert_file,
                     "certificate JSON (or search output)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? success : usage_error;
  }

  try {
    if (covers->parsed()) {
      fibertor::EnumerationLimits limits{max_index, max_count};
      json out = {{"rank", rank},
                  {"index", index},
                  {"hall_count",
                   fibertor::subgroup_count(rank, index).get_str()}};
      if (count_only) {
        out["count"] = fibertor::for_each_subgroup(
            rank, index, [](auto const&) { return true; }, limits);
      } else {
        auto tables   = fibertor::enumerate_subgroups(rank, index, limits);
        out["count"]  = tables.size();
        json list     = json::array();
        for (auto const& t : tables) {
          list.push_back(fibertor::io::to_json(t));
        }
        out["tables"] = std::move(list);
      }
      print(out);
      return success;
    }

    if (lift->parsed()) {
      json const file = input_json(lift_in);
      auto       phi  = automorphism_of(lift_in, file);
      if (!phi) {
        throw fibertor::InvalidInput("lift needs an automorphism");
      }
      json table_json;
      if (!lift_in.table.empty()) {
        table_json = parse_inline(lift_in.table, "table");
      } else if (file.contains("table")) {
        table_json = file.at("table");
      } else {
        throw fibertor::InvalidInput("lift needs a coset table (--table)");
      }
      fibertor::LiftOptions options;
      options.max_word_length = max_word_length;
      options.with_restricted = with_restricted;
      auto result = fibertor::lift_h1(
          *phi, fibertor::io::table_from_json(table_json), options);
      print(fibertor::io::to_json(result, with_restricted));
      return success;
    }

    if (snf->parsed()) {
      json const file = input_json(snf_in);
      json       mj;
      if (!snf_in.matrix.empty()) {
        mj = parse_inline(snf_in.matrix, "matrix");
      } else if (file.contains("matrix")) {
        mj = file.at("matrix");
      } else {
        throw fibertor::InvalidInput("snf needs --matrix or --input");
      }
      auto const m      = fibertor::io::matrix_from_json(mj);
      auto const result = fibertor::smith_normal_form(m);
      json       out    = fibertor::io::to_json(result);
      out["cokernel"]   = fibertor::io::to_json(fibertor::cokernel(result));
      print(out);
      return success;
    }

    if (h1->parsed()) {
      print(fibertor::io::to_json(
          fibertor::mapping_torus_h1(h1_matrix_of(h1_in))));
      return success;
    }

    if (spectrum->parsed()) {
      print(fibertor::io::to_json(
          fibertor::classify_spectrum(h1_matrix_of(spec_in), precision)));
      return success;
    }

    if (growth->parsed()) {
      auto samples
          = fibertor::growth_sequence(h1_matrix_of(growth_in), growth_max);
      if (format == "csv") {
        std::cout << fibertor::io::growth_csv(samples);
      } else {
        print(fibertor::io::to_json(samples));
      }
      return success;
    }

    if (witness->parsed()) {
      auto const      a = h1_matrix_of(witness_in);
      mpz_class const m = fibertor::io::integer_from_json(json(order_text));
      auto const      w = fibertor::unipotent_witness(a, m);
      unsigned long   cap = n_cap;
      if (cap == 0) {
        if (!w.total_power.fits_ulong_p()) {
          throw fibertor::ResourceLimit("certified power too large for the "
                                        "oracle; pass --n-cap");
        }
        cap = w.total_power.get_ui();
      }
      auto const minimal = fibertor::minimal_witness_oracle(a, m, cap);
      json       oracle  = {{"n_cap", cap}, {"minimal_n", nullptr}};
      if (minimal) {
        oracle["minimal_n"] = *minimal;
      }
      oracle["within_certified_power"]
          = minimal.has_value() && mpz_class(*minimal) <= w.total_power;
      print({{"witness", fibertor::io::to_json(w)}, {"oracle", oracle}});
      return w.verified() ? success : not_found;
    }

    if (search->parsed()) {
      fibertor::SearchConfig config;
      config.monodromy       = monodromy_of(search_in);
      config.torsion_bound   = fibertor::io::integer_from_json(json(bound_text));
      config.max_index       = search_max_index;
      config.max_power       = max_power;
      config.max_tables      = search_max_count;
      config.seed            = seed;
      auto const outcome     = fibertor::search(config);
      json out = {{"seed", seed},
                  {"bound", config.torsion_bound.get_str()},
                  {"stats", fibertor::io::to_json(outcome.stats)}};
      if (outcome.certificate) {
        out["status"]      = "found";
        out["certificate"] = fibertor::io::to_json(*outcome.certificate);
      } else {
        out["status"]      = "not_found_within_bounds";
        out["certificate"] = nullptr;
      }
      print(out);
      return outcome.certificate ? success : not_found;
    }

    if (verify->parsed()) {
      json doc = read_json_file(cert_file);
      if (doc.contains("certificate") && doc.at("certificate").is_object()) {
        doc = doc.at("certificate");
      }
      fibertor::Verification v;
      try {
        v = fibertor::verify(fibertor::io::certificate_from_json(doc));
      } catch (fibertor::InvalidInput const& e) {
        v = {false, e.what()};
      }
      print({{"verified", v.ok}, {"reason", v.reason}});
      return v.ok ? success : not_found;
    }
  } catch (fibertor::ResourceLimit const& e) {
    std::cerr << "resource cap: " << e.what() << '\n';
    return resource_cap;
  } catch (fibertor::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}
