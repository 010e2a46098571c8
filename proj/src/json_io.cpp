#include "rootdatum/json_io.hpp"

#include <limits>

namespace rootdatum {

namespace {

long long to_i64(const Int& x) {
  if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
    throw Error("overflow", "integer too large for JSON");
  return x.convert_to<long long>();
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error("bad_json", e.what());
  }
}

Rat rat_from_jval(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  return Rat(j.get<long long>());
}

}  // namespace

Json to_json(const IVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_i64(x));
  return a;
}

Json to_json(const QVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rat_str(x));
  return a;
}

Json to_json(const IMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.nr; ++i) {
    Json r = Json::array();
    for (int j = 0; j < m.nc; ++j) r.push_back(to_i64(m.at(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json to_json(const QMat& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.nr; ++i) {
    Json r = Json::array();
    for (int j = 0; j < m.nc; ++j) r.push_back(rat_str(m.at(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json to_json(const LatticeMap& m) {
  return Json{{"src", m.src}, {"dst", m.dst}, {"matrix", to_json(m.m)}};
}

Json to_json(const GroupData& g) {
  Json roots = Json::array(), coroots = Json::array(), mats = Json::array();
  for (const auto& r : g.datum.roots) roots.push_back(to_json(r));
  for (const auto& c : g.datum.coroots) coroots.push_back(to_json(c));
  for (const auto& m : g.galois.mats) mats.push_back(to_json(m));
  return Json{{"rank", g.datum.rank},
              {"roots", std::move(roots)},
              {"coroots", std::move(coroots)},
              {"simple", g.datum.simple},
              {"galois", Json{{"order", g.galois.order()},
                              {"table", g.galois.table},
                              {"matrices", std::move(mats)}}}};
}

Json to_json(const InfinitesimalParameter& p) {
  return Json{{"lambda_sigma", to_json(p.lambda_sigma)},
              {"lambda_tau", to_json(p.lambda_tau)},
              {"place", p.place == Place::real ? "real" : "complex"}};
}

Json to_json(const GL2FamilySpec& f) {
  Json hecke = Json::array();
  for (const auto& [p, ap] : f.hecke) hecke.push_back(Json::array({p, rat_str(ap)}));
  Json out{{"kind", f.kind == GL2Kind::holomorphic ? "holomorphic" : "maass_langlands_tunnell"},
           {"s", rat_str(f.s)},
           {"hecke", std::move(hecke)}};
  if (f.kind == GL2Kind::holomorphic) out["k"] = f.k;
  return out;
}

Json to_json(const SqrtPScalar& s) {
  return Json{{"p", s.p}, {"coeff", rat_str(s.c)}, {"halfexp", s.e}};
}

Json to_json(const SatakeParamGL& s) {
  Json coeffs = Json::array();
  for (const auto& c : s.coeffs)
    coeffs.push_back(Json{{"coeff", rat_str(c.c)}, {"halfexp", c.e}});
  return Json{{"p", s.p}, {"n", s.n}, {"coeffs", std::move(coeffs)}};
}

Json to_json(const AlgebraicityFlags& f) {
  Json out{{"L_algebraic", f.l_algebraic},
           {"C_algebraic", f.c_algebraic},
           {"L_arithmetic", f.l_arithmetic},
           {"C_arithmetic", f.c_arithmetic}};
  if (!f.note.empty()) out["note"] = f.note;
  return out;
}

Json to_json(const ExtensionPackage& pkg) {
  return Json{{"group", to_json(pkg.group)},
              {"g_tilde", to_json(pkg.g_tilde)},
              {"projection", to_json(pkg.projection)},
              {"theta", to_json(pkg.theta)},
              {"xi", to_json(pkg.xi)},
              {"gm_cochar", to_json(pkg.gm_cochar)},
              {"e_class", to_json(pkg.e_class)},
              {"c_group", to_json(pkg.c_group)}};
}

IVec ivec_from_json(const Json& j) {
  return guarded([&] {
    IVec v;
    for (const auto& x : j) v.push_back(Int(x.get<long long>()));
    return v;
  });
}

QVec qvec_from_json(const Json& j) {
  return guarded([&] {
    QVec v;
    for (const auto& x : j) v.push_back(rat_from_jval(x));
    return v;
  });
}

IMat imat_from_json(const Json& j) {
  return guarded([&] {
    int nr = int(j.size());
    int nc = nr ? int(j.at(0).size()) : 0;
    IMat m(nr, nc);
    for (int i = 0; i < nr; ++i) {
      if (int(j.at(i).size()) != nc) throw Error("bad_json", "ragged matrix");
      for (int k = 0; k < nc; ++k) m.at(i, k) = Int(j.at(i).at(k).get<long long>());
    }
    return m;
  });
}

GroupData group_from_json(const Json& j) {
  GroupData g = guarded([&] {
    GroupData out;
    out.datum.rank = j.at("rank").get<int>();
    for (const auto& r : j.at("roots")) out.datum.roots.push_back(ivec_from_json(r));
    for (const auto& c : j.at("coroots")) out.datum.coroots.push_back(ivec_from_json(c));
    out.datum.simple = j.at("simple").get<std::vector<int>>();
    if (j.contains("galois")) {
      const Json& ga = j.at("galois");
      out.galois.table = ga.at("table").get<std::vector<std::vector<int>>>();
      for (const auto& m : ga.at("matrices")) out.galois.mats.push_back(imat_from_json(m));
    } else {
      out.galois = GaloisAction::trivial(out.datum.rank);
    }
    return out;
  });
  validate(g);
  return g;
}

InfinitesimalParameter parameter_from_json(const Json& j) {
  return guarded([&] {
    InfinitesimalParameter p;
    p.lambda_sigma = qvec_from_json(j.at("lambda_sigma"));
    p.lambda_tau = qvec_from_json(j.at("lambda_tau"));
    std::string place = j.at("place").get<std::string>();
    if (place == "real")
      p.place = Place::real;
    else if (place == "complex")
      p.place = Place::complex_pair;
    else
      throw Error("bad_json", "place must be 'real' or 'complex'");
    return p;
  });
}

GL2FamilySpec family_from_json(const Json& j) {
  GL2FamilySpec f = guarded([&] {
    GL2FamilySpec out;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "holomorphic")
      out.kind = GL2Kind::holomorphic;
    else if (kind == "maass" || kind == "maass_langlands_tunnell")
      out.kind = GL2Kind::maass_langlands_tunnell;
    else
      throw Error("bad_json", "kind must be 'holomorphic' or 'maass_langlands_tunnell'");
    if (out.kind == GL2Kind::holomorphic) out.k = j.at("k").get<int>();
    out.s = rat_from_jval(j.at("s"));
    if (j.contains("hecke"))
      for (const auto& entry : j.at("hecke"))
        out.hecke.emplace_back(entry.at(0).get<long long>(), rat_from_jval(entry.at(1)));
    return out;
  });
  validate(f);
  return f;
}

SqrtPScalar sqrtp_from_json(const Json& j, long long p) {
  return guarded([&] {
    return SqrtPScalar(p, rat_from_jval(j.at("coeff")), j.at("halfexp").get<long long>());
  });
}

SatakeParamGL satake_from_json(const Json& j) {
  SatakeParamGL s = guarded([&] {
    SatakeParamGL out;
    out.p = j.at("p").get<long long>();
    out.n = j.at("n").get<int>();
    for (const auto& c : j.at("coeffs")) out.coeffs.push_back(sqrtp_from_json(c, out.p));
    return out;
  });
  validate(s);
  return s;
}

Json error_json(const Error& e) {
  return Json{{"error", Json{{"code", e.code}, {"message", e.what()}}}};
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error("bad_json", e.what());
  }
}

}  // namespace rootdatum
