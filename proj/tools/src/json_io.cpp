#include "supint_io/json_io.hpp"

#include "supint/errors.hpp"

namespace supint::io {

json to_json(const GaussRat& x) {
  if (x.is_real()) return x.re().get_str();
  return {{"re", x.re().get_str()}, {"im", x.im().get_str()}};
}

GaussRat rat_from_json(const json& j) {
  if (j.is_string()) return GaussRat::parse(j.get<std::string>());
  if (j.is_number_integer()) return GaussRat(j.get<long>());
  if (j.is_object() && j.contains("re")) {
    const GaussRat re = rat_from_json(j.at("re"));
    const GaussRat im = j.contains("im") ? rat_from_json(j.at("im")) : GaussRat(0);
    if (!re.is_real() || !im.is_real()) throw ParseError("nested complex value");
    return re + im * GaussRat::i();
  }
  throw ParseError("expected a rational string, an integer or {\"re\", \"im\"}: " + j.dump());
}

json to_json(std::complex<double> x) { return {{"re", x.real()}, {"im", x.imag()}}; }

json to_json(const Sckt& t) {
  return {{"A_zz", to_json(t.A_zz)}, {"b_z", to_json(t.b_z)}, {"c", to_json(t.c)}, {"b_w", to_json(t.b_w)},
          {"A_ww", to_json(t.A_ww)}};
}

Sckt tensor_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("tensor must be a JSON object");
  auto get = [&](const char* key) {
    if (!j.contains(key)) throw ParseError(std::string("tensor is missing '") + key + "'");
    return rat_from_json(j.at(key));
  };
  return {get("A_zz"), get("b_z"), get("c"), get("b_w"), get("A_ww")};
}

json to_json(const PlueckerPoint& p) {
  json a = json::array();
  for (const auto& x : p.coords()) a.push_back(to_json(x));
  return a;
}

PlueckerPoint point_from_json(const json& j) {
  if (!j.is_array() || j.size() != 10) throw ParseError("a point is an array of ten coordinates");
  PlueckerPoint::Coords a;
  for (int k = 0; k < 10; ++k) a[k] = rat_from_json(j[k]);
  return PlueckerPoint(std::move(a));
}

json to_json(const BiPoly& p) {
  json o = json::object();
  for (const auto& [e, c] : p.terms()) o[std::to_string(e.first) + "," + std::to_string(e.second)] = to_json(c);
  return o;
}

BiPoly poly_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("polynomial must be a {\"i,j\": coeff} object");
  BiPoly p;
  for (const auto& [key, val] : j.items()) {
    const auto comma = key.find(',');
    if (comma == std::string::npos) throw ParseError("bad monomial key '" + key + "'");
    try {
      p += BiPoly::monomial(rat_from_json(val), std::stoi(key.substr(0, comma)), std::stoi(key.substr(comma + 1)));
    } catch (const std::logic_error&) {
      throw ParseError("bad monomial key '" + key + "'");
    }
  }
  return p;
}

json to_json(const SicReport& r) {
  return {{"on_variety", r.on_variety},
          {"degenerate", r.degenerate},
          {"cubic", {to_json(r.cubic_residuals[0]), to_json(r.cubic_residuals[1])}},
          {"quartic", to_json(r.quartic_residual)},
          {"ab3", {to_json(r.ab3_residuals[0]), to_json(r.ab3_residuals[1])}},
          {"d3", to_json(r.d3_residual)}};
}

json to_json(const PlanarIsometry& g) {
  return {{"c", to_json(g.c)}, {"d", to_json(g.d)}, {"lambda", to_json(g.lambda)}};
}

json to_json(const FloatIsometry& g) {
  return {{"c", to_json(g.c)}, {"d", to_json(g.d)}, {"lambda", to_json(g.lambda)}};
}

PlanarIsometry isometry_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("isometry must be a JSON object");
  PlanarIsometry g{rat_from_json(j.value("c", json("0"))), rat_from_json(j.value("d", json("0"))),
                   rat_from_json(j.value("lambda", json("1")))};
  if (g.lambda.is_zero()) throw ParseError("isometry with lambda = 0");
  return g;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace supint::io
