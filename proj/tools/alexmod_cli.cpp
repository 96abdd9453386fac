#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "alexmod/coverings.hpp"
#include "alexmod/io.hpp"
#include "json.hpp"

using namespace alexmod;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return in;
}

GroupPresentation load_presentation(const std::string& path) {
  auto in = open_file(path);
  return parse_presentation(in);
}

AbelianHom load_hom(const std::string& path, const GroupPresentation& p) {
  auto in = open_file(path);
  return parse_hom(in, p);
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, ',')) out.push_back(cur);
  return out;
}

json matrix_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

json group_json(const AbelianGroup& g) {
  json torsion = json::array();
  for (const auto& d : g.torsion) torsion.push_back(d.get_str());
  return json{{"display", g.str()},
              {"free_rank", g.free_rank},
              {"torsion", torsion}};
}

void emit(const json& j, bool as_json) {
  if (as_json) std::cout << j.dump(2) << "\n";
}

int cmd_fox(const std::string& word, const std::string& gen,
            const std::string& gens) {
  std::vector<std::string> names = split_csv(gens);
  for (auto& n : names) {
    size_t a = n.find_first_not_of(" \t");
    size_t b = n.find_last_not_of(" \t");
    n = a == std::string::npos ? "" : n.substr(a, b - a + 1);
  }
  int j = 0;
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == gen) j = static_cast<int>(i + 1);
  if (j == 0) throw ParseError("--gen must name one of the generators");
  Word w = parse_word(word, names);
  FreeAlgebraElement d = fox_derivative(w, j);
  std::cout << (d.is_zero() ? "0" : d.str(names)) << "\n";
  return kExitPass;
}

int cmd_alexander(const std::string& pres_path, const std::string& hom_path,
                  const std::string& output, bool as_json) {
  GroupPresentation p = load_presentation(pres_path);
  AbelianHom psi = load_hom(hom_path, p);
  AlexanderPresentation ap = alexander_matrix(p, psi);

  json report{{"command", "alexander"}, {"output", output}};
  if (output == "matrix") {
    json rows = json::array();
    for (int i = 0; i < ap.matrix.rows; ++i) {
      json row = json::array();
      for (int j = 0; j < ap.matrix.cols; ++j)
        row.push_back(ap.matrix.at(i, j).str());
      rows.push_back(row);
    }
    report["matrix"] = rows;
    if (!as_json) {
      std::cout << ap.matrix.rows << " x " << ap.matrix.cols << "\n";
      for (int i = 0; i < ap.matrix.rows; ++i)
        for (int j = 0; j < ap.matrix.cols; ++j)
          std::cout << "[" << i << "," << j << "] "
                    << ap.matrix.at(i, j).str() << "\n";
    }
  } else if (output == "invariants") {
    AbelianGroup g = alexander_invariants(ap);
    report["invariants"] = group_json(g);
    if (!as_json) std::cout << g.str() << "\n";
  } else if (output == "poly") {
    GroupAlgebraElement poly = alexander_polynomial(p, psi);
    report["poly"] = poly.str();
    if (!as_json) std::cout << poly.str() << "\n";
  } else {
    throw ParseError("--output must be matrix, invariants or poly");
  }
  emit(report, as_json);
  return kExitPass;
}

int cmd_crowell(const std::string& pres_path, const std::string& hom_path,
                bool as_json) {
  GroupPresentation p = load_presentation(pres_path);
  AbelianHom psi = load_hom(hom_path, p);
  ExactnessReport rep = check_crowell_exactness(crowell_sequence(p, psi));

  json report{{"command", "crowell-check"},
              {"pass", rep.pass()},
              {"theta2_well_defined", rep.theta2_well_defined},
              {"im_theta2_equals_ker_eps", rep.im_theta2_equals_ker_eps},
              {"eps_surjective", rep.eps_surjective},
              {"rab_matches_rewriting", rep.rab_matches_rs_oracle},
              {"rab_crowell", group_json(rep.rab_crowell)},
              {"rab_rewriting", group_json(rep.rab_schreier)},
              {"witness", rep.witness}};
  if (!as_json) {
    std::cout << (rep.pass() ? "pass" : "FAIL") << "\n"
              << "R^ab (derived module): " << rep.rab_crowell.str() << "\n"
              << "R^ab (subgroup rewriting): " << rep.rab_schreier.str()
              << "\n";
    if (!rep.witness.empty()) std::cout << "witness: " << rep.witness << "\n";
  }
  emit(report, as_json);
  return rep.pass() ? kExitPass : kExitFail;
}

int cmd_cover(const std::string& indices_csv, const std::string& subgroup_path,
              bool kernel_check, long modulus, int samples, uint64_t seed,
              bool negative, bool as_json) {
  std::vector<long> indices;
  for (const auto& t : split_csv(indices_csv)) indices.push_back(std::stol(t));

  std::optional<IntMatrix> extra;
  if (!subgroup_path.empty()) {
    auto in = open_file(subgroup_path);
    extra = parse_matrix(in);
  }
  BranchedCover cover = make_cover(indices, extra ? &*extra : nullptr);
  auto warnings = validate_ramification(cover);
  CoverReport rep = cover_homology(cover);

  json report{{"command", "cover"},
              {"deck_group", group_json(rep.deck_group)},
              {"homology", group_json(rep.homology)},
              {"genus", rep.genus},
              {"warnings", warnings}};
  json actions = json::array();
  for (const auto& m : rep.h_action) actions.push_back(matrix_json(m));
  report["h_action"] = actions;

  bool pass = true;
  if (kernel_check) {
    SampledKernelReport k = phi3_kernel_check(
        indices, modulus, extra ? &*extra : nullptr, samples, seed, negative);
    pass = k.pass();
    report["kernel_check"] = json{
        {"pass", k.pass()},
        {"killed_direction_pass", k.killed_direction_pass},
        {"membership_direction_pass", k.membership_direction_pass},
        {"surjective", k.surjective},
        {"samples", k.samples},
        {"witness", k.witness}};
  }

  if (!as_json) {
    std::cout << "deck group: " << rep.deck_group.str() << "\n"
              << "genus: " << rep.genus << "\n"
              << "homology: " << rep.homology.str() << "\n";
    for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
    for (size_t i = 0; i < rep.h_action.size(); ++i)
      std::cout << "action of generator " << i + 1 << ":\n"
                << rep.h_action[i].str();
    if (kernel_check)
      std::cout << "kernel check: " << (pass ? "pass" : "FAIL") << "\n";
  }
  emit(report, as_json);
  return pass ? kExitPass : kExitFail;
}

int cmd_snf(const std::string& matrix_path, bool as_json) {
  auto in = open_file(matrix_path);
  IntMatrix a = parse_matrix(in);
  SnfResult f = smith_normal_form(a);

  json report{{"command", "snf"},
              {"rank", f.rank},
              {"u", matrix_json(f.u)},
              {"d", matrix_json(f.d)},
              {"v", matrix_json(f.v)}};
  if (!as_json) {
    std::cout << "U:\n" << f.u.str() << "D:\n" << f.d.str() << "V:\n"
              << f.v.str() << "rank: " << f.rank << "\n";
  }
  emit(report, as_json);
  return kExitPass;
}

int cmd_c2(const std::string& pres_path, const std::string& hom_path,
           const std::string& chain_path, bool as_json) {
  GroupPresentation p = load_presentation(pres_path);
  AbelianHom psi = load_hom(hom_path, p);
  auto in = open_file(chain_path);
  C2Chain chain = parse_chain(in);
  C2Report rep = c2_exactness_check(p, psi, chain);

  json report{{"command", "c2-check"},
              {"pass", rep.pass()},
              {"chain_valid", rep.chain.valid()},
              {"exact_at_b", rep.exact_at_b},
              {"exact_at_c", rep.exact_at_c},
              {"witness", rep.witness}};
  if (!as_json) {
    std::cout << (rep.pass() ? "pass" : "FAIL") << "\n";
    if (!rep.witness.empty()) std::cout << "witness: " << rep.witness << "\n";
  }
  emit(report, as_json);
  return rep.pass() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derived (Alexander) modules of finitely presented groups"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  auto* fox = app.add_subcommand("fox", "free derivative of a word");
  fox->fallthrough();
  std::string fox_word, fox_gen, fox_gens;
  fox->add_option("--word", fox_word, "word, e.g. x*y^-1*x")->required();
  fox->add_option("--gen", fox_gen, "generator to differentiate by")
      ->required();
  fox->add_option("--gens", fox_gens, "comma-separated generator names")
      ->required();

  auto* alex = app.add_subcommand("alexander", "Alexander module data");
  alex->fallthrough();
  std::string alex_pres, alex_hom, alex_out = "invariants";
  alex->add_option("--pres", alex_pres, "presentation file")->required();
  alex->add_option("--hom", alex_hom, "homomorphism file")->required();
  alex->add_option("--output", alex_out, "matrix | invariants | poly");

  auto* crow = app.add_subcommand("crowell-check",
                                  "verify the exact sequence of the cover");
  crow->fallthrough();
  std::string crow_pres, crow_hom;
  crow->add_option("--pres", crow_pres, "presentation file")->required();
  crow->add_option("--hom", crow_hom, "homomorphism file")->required();

  auto* cover = app.add_subcommand("cover", "branched cover homology");
  cover->fallthrough();
  std::string cover_indices, cover_subgroup;
  bool cover_kernel = false, cover_negative = false;
  long cover_modulus = 0;
  int cover_samples = 50;
  uint64_t cover_seed = 0;
  cover->add_option("--indices", cover_indices, "e.g. 2,2,2,2")->required();
  cover->add_option("--subgroup", cover_subgroup,
                    "extra deck-group relation columns (matrix file)");
  cover->add_flag("--kernel-check", cover_kernel,
                  "also run the sampled kernel-formula check");
  cover->add_option("--modulus", cover_modulus,
                    "exponent for the unramified comparison row (0 = lcm)");
  cover->add_option("--samples", cover_samples, "sample count");
  cover->add_option("--seed", cover_seed, "sampling seed");
  cover->add_flag("--negative", cover_negative,
                  "corrupt the image lattice (control; expected to fail)");

  auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix");
  snf->fallthrough();
  std::string snf_matrix;
  snf->add_option("--matrix", snf_matrix, "matrix file")->required();

  auto* c2 = app.add_subcommand("c2-check",
                                "exactness along a coefficient chain");
  c2->fallthrough();
  std::string c2_pres, c2_hom, c2_chain;
  c2->add_option("--pres", c2_pres, "presentation file")->required();
  c2->add_option("--hom", c2_hom, "homomorphism file (onto the first group)")
      ->required();
  c2->add_option("--chain", c2_chain, "chain file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (fox->parsed()) return cmd_fox(fox_word, fox_gen, fox_gens);
    if (alex->parsed())
      return cmd_alexander(alex_pres, alex_hom, alex_out, as_json);
    if (crow->parsed()) return cmd_crowell(crow_pres, crow_hom, as_json);
    if (cover->parsed())
      return cmd_cover(cover_indices, cover_subgroup, cover_kernel,
                       cover_modulus, cover_samples, cover_seed,
                       cover_negative, as_json);
    if (snf->parsed()) return cmd_snf(snf_matrix, as_json);
    if (c2->parsed()) return cmd_c2(c2_pres, c2_hom, c2_chain, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
