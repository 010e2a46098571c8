#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "rootdatum/algebraicity.hpp"
#include "rootdatum/cgroup.hpp"
#include "rootdatum/fp.hpp"
#include "rootdatum/json_io.hpp"
#include "rootdatum/root_datum.hpp"
#include "rootdatum/satake.hpp"
#include "rootdatum/unitary.hpp"
#include "rootdatum/verify.hpp"

namespace {

using namespace rootdatum;

std::string canonical_name(const std::string& raw) {
  std::string low;
  for (char c : raw) low += char(std::tolower(static_cast<unsigned char>(c)));
  if (low == "gl") return "GL";
  if (low == "sl") return "SL";
  if (low == "pgl") return "PGL";
  if (low == "sp") return "Sp";
  if (low == "torus") return "Torus";
  if (low == "u" || low == "unitaryquasisplit") return "UnitaryQuasiSplit";
  return raw;
}

GroupData load_group(const std::string& name, int n, const std::string& file) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw Error("io_error", "cannot open '" + file + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return group_from_json(parse_json_text(buf.str()));
  }
  if (name.empty()) throw Error("usage", "need a catalog name or --file");
  return standard_group(canonical_name(name), n);
}

// Weyl enumeration is exponential in the rank; skip it for big user inputs.
Json weyl_order_json(const BasedRootDatum& d) {
  if (positive_root_indices(d).size() > 60) return nullptr;
  return Json(weyl_group(d).size());
}

Json describe_json(const GroupData& g) {
  Json out;
  out["group"] = to_json(g);
  out["rank"] = g.datum.rank;
  out["positive_roots"] = positive_root_indices(g.datum).size();
  out["delta"] = to_json(half_sum_positive_roots(g.datum));
  out["e_class"] = to_json(element_e(g));
  out["weyl_order"] = weyl_order_json(g.datum);
  ValidationReport rep = check(g);
  out["valid"] = rep.valid;
  out["diagnostic"] = rep.diagnostic;
  return out;
}

Json matrix_or_null(const std::optional<IMat>& m) {
  if (!m) return nullptr;
  return to_json(*m);
}

Json cgroup_json(const GroupData& g) {
  ExtensionPackage pkg = build_g_tilde(g);
  Json out;
  out["package"] = to_json(pkg);
  out["quotient"] = to_json(c_group_via_quotient(g));
  out["agreement"] = matrix_or_null(c_group_agreement(pkg));
  out["chi_to_2theta"] = verify_chi_maps_to_2theta(pkg);

  Json probes = Json::array();
  auto probe = [&](const std::string& label, const BasedRootDatum& target) {
    auto m = based_isomorphism(pkg.c_group.datum, target);
    if (!m) return;
    Json item;
    item["name"] = label;
    item["matrix"] = to_json(*m);
    probes.push_back(item);
  };
  for (const auto& [name, n] : catalog_entries())
    probe(name + "(" + std::to_string(n) + ")", standard_group(name, n).datum);
  for (int n = 1; n <= 4; ++n)
    probe("GL(" + std::to_string(n) + ") x GL(1)",
          direct_sum(standard_group("GL", n), standard_group("GL", 1)).datum);
  out["isomorphic_to"] = probes;
  return out;
}

Json fp_json(const FpElt& x) { return x.v; }

Json cu_json(const CUElement<FpElt>& x) {
  Json g = Json::array();
  for (int r = 0; r < x.g.nr; ++r) {
    Json row = Json::array();
    for (int c = 0; c < x.g.nc; ++c) row.push_back(fp_json(x.g.at(r, c)));
    g.push_back(row);
  }
  Json out;
  out["g"] = g;
  out["mu"] = fp_json(x.mu);
  out["gamma"] = x.gamma;
  return out;
}

Json unitary_json(int n, long long p) {
  auto kernel = kernel_of_j(n, p);
  Json elems = Json::array();
  for (const auto& e : kernel) elems.push_back(cu_json(e));

  FpField F(p);
  CUElement<FpElt> twist = make_cu(Mat<FpElt>::identity(n), F(1), 1);
  bool mult_ok = multiplier(j_map(twist)) == ((n - 1) % 2 == 0 ? F(1) : F(p - 1));

  Json out;
  out["n"] = n;
  out["p"] = p;
  out["kernel"] = elems;
  out["kernel_size"] = kernel.size();
  out["multiplier_check"] = mult_ok;
  return out;
}

GL2FamilySpec family_from_flags(const std::string& kind, int k, const std::string& s,
                                long long p, const std::string& ap) {
  GL2FamilySpec f;
  if (kind == "holomorphic") {
    f.kind = GL2Kind::holomorphic;
  } else if (kind == "maass" || kind == "maass_langlands_tunnell") {
    f.kind = GL2Kind::maass_langlands_tunnell;
  } else {
    throw Error("usage", "unknown kind '" + kind + "'");
  }
  f.k = k;
  f.s = parse_rat(s);
  if (!ap.empty()) f.hecke.emplace_back(p, parse_rat(ap));
  validate(f);
  return f;
}

Json classify_json(const GL2FamilySpec& f) {
  Json out = to_json(classify_gl2_family(f));
  InfinitesimalParameter pr = family_parameter(f);
  out["lambda_sigma"] = to_json(pr.lambda_sigma);
  out["lambda_tau"] = to_json(pr.lambda_tau);
  return out;
}

Json satake_json(const GL2FamilySpec& f, long long p, const std::string& twist) {
  auto [tp, sp] = hecke_eigenvalues_gl2(f, p);
  SatakeParamGL cls = satake_charpoly_gl2(f, p);
  Json out;
  Json hecke;
  hecke["T"] = to_json(tp);
  hecke["S"] = to_json(sp);
  out["hecke"] = hecke;
  out["charpoly"] = to_json(cls);
  out["trace"] = to_json(satake_trace(cls));
  RationalityWitness wit = defined_over_equivalence_gln(cls);
  Json w;
  w["defined_over_q"] = wit.defined_over_q;
  w["companion"] = wit.companion ? to_json(*wit.companion) : Json(nullptr);
  out["witness"] = w;
  if (!twist.empty()) {
    IVec det(2, Int(1));
    out["twisted_charpoly"] = to_json(unramified_twist(cls, det, parse_rat(twist)));
  }
  return out;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with based root data, dual groups and their extensions"};
  app.require_subcommand(1);

  std::string name, file, kind = "holomorphic", s = "0", ap, twist_s;
  int n = 1, k = 2, un = 2;
  long long p = 2, box = 3, up = 101;
  unsigned long long seed = 0;
  bool seed_set = false;

  auto add_group_args = [&](CLI::App* cmd) {
    cmd->add_option("name", name, "catalog name (case-insensitive)");
    cmd->add_option("n", n, "catalog parameter");
    cmd->add_option("--file", file, "JSON file with a serialized group");
  };

  CLI::App* describe = app.add_subcommand("describe", "validate and summarize a group");
  add_group_args(describe);
  CLI::App* dualc = app.add_subcommand("dual", "dual group with the dual action");
  add_group_args(dualc);
  CLI::App* cgroupc = app.add_subcommand("cgroup", "both c-group constructions and isomorphism probes");
  add_group_args(cgroupc);
  CLI::App* twisting = app.add_subcommand("twisting", "twisting-element existence and box search");
  add_group_args(twisting);
  twisting->add_option("--box", box, "coordinate box for the search");
  CLI::App* gtilde = app.add_subcommand("gtilde", "the central Gm extension package");
  add_group_args(gtilde);

  CLI::App* classify = app.add_subcommand("classify", "algebraicity flags of a GL(2) family");
  classify->add_option("--kind", kind, "holomorphic or maass");
  classify->add_option("--k", k, "weight (holomorphic)");
  classify->add_option("--s", s, "twist exponent, a rational like 1/2");

  CLI::App* satake = app.add_subcommand("satake", "Hecke eigenvalues and the Satake class");
  satake->add_option("--kind", kind, "holomorphic or maass");
  satake->add_option("--k", k, "weight (holomorphic)");
  satake->add_option("--s", s, "twist exponent");
  satake->add_option("--p", p, "prime");
  satake->add_option("--ap", ap, "Hecke eigenvalue a_p, a rational")->required();
  satake->add_option("--twist", twist_s, "extra unramified twist exponent");

  CLI::App* unitary = app.add_subcommand("unitary-check", "kernel and multiplier identities");
  unitary->add_option("--n", un, "matrix size");
  unitary->add_option("--p", up, "odd prime, 1 mod 2(n-1)");

  CLI::App* verify = app.add_subcommand("verify-all", "run the acceptance suite");
  verify->add_option("--seed", seed, "RNG seed (default: ROOTDATUM_SEED or built-in)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  seed_set = verify->count("--seed") > 0;

  try {
    if (describe->parsed()) {
      emit(describe_json(load_group(name, n, file)));
    } else if (dualc->parsed()) {
      GroupData g = load_group(name, n, file);
      Json out;
      out["group"] = to_json(g);
      out["dual"] = to_json(l_group(g));
      emit(out);
    } else if (cgroupc->parsed()) {
      emit(cgroup_json(load_group(name, n, file)));
    } else if (twisting->parsed()) {
      TwistingSearch ts = enumerate_twisting_elements(load_group(name, n, file), box);
      Json elems = Json::array();
      for (const IVec& t : ts.in_box) elems.push_back(to_json(t));
      Json out;
      out["existence"] = ts.exists;
      out["elements"] = elems;
      emit(out);
    } else if (gtilde->parsed()) {
      emit(to_json(build_g_tilde(load_group(name, n, file))));
    } else if (classify->parsed()) {
      emit(classify_json(family_from_flags(kind, k, s, 2, "")));
    } else if (satake->parsed()) {
      emit(satake_json(family_from_flags(kind, k, s, p, ap), p, twist_s));
    } else if (unitary->parsed()) {
      emit(unitary_json(un, up));
    } else if (verify->parsed()) {
      unsigned long long use = seed_set ? seed : seed_from_env();
      auto results = run_acceptance_suite(use);
      bool all = true;
      for (const auto& r : results) {
        std::cerr << "criterion " << r.number << " (" << r.name << "): "
                  << (r.pass ? "pass" : "FAIL") << ", " << r.ms << " ms\n";
        all = all && r.pass;
      }
      std::cout << render_report(results, use);
      return all ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cout << error_json(e).dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cout << error_json(Error("internal", e.what())).dump(2) << "\n";
    return 1;
  }
  return 0;
}
