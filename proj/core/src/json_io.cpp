#include "mfcalc/json_io.hpp"


#include "mfcalc/error.hpp"
#include "mfcalc/suspension.hpp"

namespace mfcalc {

json to_json(const Integer& value) {
  if (value.fits_slong_p() && sizeof(long) >= 8) return static_cast<std::int64_t>(value.get_si());
  return value.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Integer v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw ParseError("malformed integer string", 0);
    return v;
  }
  throw ParseError("expected an integer", 0);
}

json to_json(const FgAbGroup& g) {
  json torsion = json::array();
  for (const auto& d : g.torsion()) torsion.push_back(to_json(d));
  return {{"rank", g.free_rank()}, {"torsion", torsion}};
}

FgAbGroup group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rank")) throw ParseError("group needs a rank", 0);
  std::vector<Integer> torsion;
  if (j.contains("torsion")) {
    for (const auto& d : j.at("torsion")) torsion.push_back(integer_from_json(d));
  }
  return FgAbGroup(j.at("rank").get<std::uint64_t>(), std::move(torsion));
}

json to_json(const GradedGroup& g) {
  json out = json::object();
  for (const auto& [degree, group] : g.groups()) out[std::to_string(degree)] = to_json(group);
  return out;
}

json to_json(const IntPolynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

namespace {

const char* kind_name(const Atom& a) {
  switch (a.kind()) {
    case AtomKind::Sphere: return "S";
    case AtomKind::SphereProduct: return "SxS";
    case AtomKind::TwistedProduct: return "TwS";
    case AtomKind::ProjectiveSpace: return a.params()[0] == 0 ? "CP" : "HP";
    case AtomKind::WuManifold: return "W";
    case AtomKind::M: return "M";
    case AtomKind::X: return "X";
    case AtomKind::Surface: return "Surf";
    case AtomKind::Suspension: return "Sig";
  }
  return "?";
}

std::vector<int> int_params(const json& atom, std::size_t expected, const std::string& kind) {
  const json& p = atom.contains("params") ? atom.at("params") : json::array();
  if (!p.is_array() || p.size() != expected) {
    throw ParseError(kind + " expects " + std::to_string(expected) + " parameter(s)", 0);
  }
  std::vector<int> out;
  for (const auto& v : p) {
    if (!v.is_number_integer()) throw ParseError("atom parameters must be integers", 0);
    out.push_back(v.get<int>());
  }
  return out;
}

ManifoldExpr atom_from_json(const json& a) {
  if (!a.is_object() || !a.contains("kind")) throw ParseError("atom needs a kind", 0);
  const std::string kind = a.at("kind").get<std::string>();
  if (kind == "S") return ManifoldExpr::sphere(int_params(a, 1, kind)[0]);
  if (kind == "SxS") {
    auto p = int_params(a, 2, kind);
    return ManifoldExpr(Atom::sphere_product(p[0], p[1]));
  }
  if (kind == "TwS") return ManifoldExpr(Atom::twisted_product(int_params(a, 1, kind)[0]));
  if (kind == "CP") return ManifoldExpr(Atom::projective_space(Field::Complex, int_params(a, 1, kind)[0]));
  if (kind == "HP") return ManifoldExpr(Atom::projective_space(Field::Quaternion, int_params(a, 1, kind)[0]));
  if (kind == "W") {
    int_params(a, 0, kind);
    return ManifoldExpr(Atom::wu());
  }
  if (kind == "M") return ManifoldExpr(Atom::m(int_params(a, 1, kind)[0]));
  if (kind == "X") return ManifoldExpr(Atom::x(int_params(a, 1, kind)[0]));
  if (kind == "Surf") return ManifoldExpr(Atom::surface(int_params(a, 1, kind)[0]));
  if (kind == "Sig") {
    if (!a.contains("inner")) throw ParseError("Sig atom needs an inner expression", 0);
    return suspend(manifold_from_json(a.at("inner")), framing_index(int_params(a, 1, kind)[0]));
  }
  throw ParseError("unknown atom kind '" + kind + "'", 0);
}

}  // namespace

json to_json(const Atom& a) {
  json out = {{"kind", kind_name(a)}};
  if (a.kind() == AtomKind::ProjectiveSpace) {
    out["params"] = json::array({a.params()[1]});
  } else {
    out["params"] = a.params();
  }
  if (a.kind() == AtomKind::Suspension) out["inner"] = to_json(a.suspension_inner());
  return out;
}

json to_json(const ManifoldExpr& m) {
  json atoms = json::array();
  for (const auto& [atom, count] : m.terms()) {
    json a = to_json(atom);
    a["count"] = count;
    atoms.push_back(std::move(a));
  }
  return {{"dim", m.dim()}, {"atoms", atoms}};
}

ManifoldExpr manifold_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("atoms")) {
    throw ParseError("manifold needs dim and atoms", 0);
  }
  const int n = j.at("dim").get<int>();
  ManifoldExpr out = ManifoldExpr::sphere(n);
  for (const auto& a : j.at("atoms")) {
    const std::uint64_t count = a.contains("count") ? a.at("count").get<std::uint64_t>() : 1;
    ManifoldExpr summand = atom_from_json(a);
    if (summand.dim() != n) {
      throw ParseError("dimension mismatch " + std::to_string(n) + " vs " +
                           std::to_string(summand.dim()), 0);
    }
    out = connected_sum(out, connected_sum_power(summand, count));
  }
  return out;
}

json to_json(const GroupPresentation& p) {
  json relators = json::array();
  for (const auto& w : p.relators()) relators.push_back(p.word_to_string(w));
  return {{"generators", p.generators()}, {"relators", relators}};
}

}  // namespace mfcalc
