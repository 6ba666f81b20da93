#pragma once

#include <json.hpp>

#include "schur/rewrite.hpp"
#include "schur/tensor.hpp"
#include "schur/torus.hpp"
#include "schur/weights.hpp"

namespace schur::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const weights::Weight& w) { return Json(w); }

inline Json to_json(const weights::WeightSet& ws) {
  Json arr = Json::array();
  for (const auto& w : ws.members) arr.push_back(w);
  return arr;
}

inline Json to_json(const torus::GeneratorSpec& g) {
  Json j;
  switch (g.kind) {
    case torus::GeneratorSpec::Kind::linear:
      j["kind"] = "linear";
      j["coeffs"] = g.coeffs;
      j["c"] = g.c;
      break;
    case torus::GeneratorSpec::Kind::product_range:
      j["kind"] = "product";
      j["coeffs"] = g.coeffs;
      j["c"] = g.c;
      j["klo"] = g.klo;
      j["khi"] = g.khi;
      break;
    case torus::GeneratorSpec::Kind::binomial:
      j["kind"] = "binomial";
      j["coeffs"] = g.coeffs;
      j["c"] = g.c;
      j["lower"] = g.lower;
      break;
  }
  j["text"] = g.str();
  return j;
}

inline Json to_json(const torus::IdealDescriptor& ideal) {
  Json j;
  switch (ideal.kind) {
    case torus::IdealKind::char0_rs: j["kind"] = "char0_rs"; break;
    case torus::IdealKind::charp_d: j["kind"] = "charp_d"; break;
    case torus::IdealKind::charp_rs: j["kind"] = "charp_rs"; break;
  }
  j["n"] = ideal.ctx.n();
  j["characteristic"] = ideal.ctx.characteristic();
  j["grid"] = Json{{"lo", ideal.ctx.lo()}, {"hi", ideal.ctx.hi()}};
  Json gens = Json::array();
  for (const auto& g : ideal.generators) gens.push_back(to_json(g));
  j["generators"] = gens;
  Json locus = Json::array();
  for (const auto& pt : ideal.vanishing_locus) locus.push_back(pt);
  j["vanishing_locus"] = locus;
  return j;
}

inline Json to_json(const tensor::SparseMat& m) {
  Json j;
  j["dim"] = m.dim();
  Json entries = Json::array();
  for (long i = 0; i < m.dim(); ++i)
    for (const auto& [col, v] : m.row(i)) entries.push_back(Json::array({i, col, v.str()}));
  j["entries"] = entries;
  return j;
}

inline Json to_json(const tensor::KernelReport& rep) {
  Json arr = Json::array();
  for (const auto& item : rep.items)
    arr.push_back(Json{{"generator", item.generator}, {"vanishes", item.vanishes}});
  return arr;
}

inline Json to_json(const rewrite::GeneratorWord& w) {
  Json arr = Json::array();
  for (const auto& g : w) {
    Json t;
    switch (g.kind) {
      case tensor::GeneratorSymbol::Kind::divided_power:
        t["type"] = "divided_power";
        t["root"] = Json::array({g.root.i + 1, g.root.j + 1});
        t["exp"] = g.exp;
        break;
      case tensor::GeneratorSymbol::Kind::binomial_h:
        t["type"] = "binomial";
        t["axis"] = g.axis + 1;
        t["exp"] = g.exp;
        break;
      case tensor::GeneratorSymbol::Kind::binomial_linear_form:
        t["type"] = "binomial_linear_form";
        t["coeffs"] = g.coeffs;
        t["c"] = g.c;
        t["exp"] = g.exp;
        break;
    }
    arr.push_back(t);
  }
  return arr;
}

inline Json to_json(const rewrite::NormalFormElement& nf, const rewrite::Context& ctx) {
  Json arr = Json::array();
  for (const auto& [m, c] : nf.terms) {
    Json t;
    t["coefficient"] = c.str();
    t["positive_exps"] = m.positive_exps;
    t["torus_exps"] = m.torus_exps;
    t["negative_exps"] = m.negative_exps;
    t["word"] = to_json(rewrite::to_word(m, ctx));
    arr.push_back(t);
  }
  return arr;
}

}  // namespace schur::io
