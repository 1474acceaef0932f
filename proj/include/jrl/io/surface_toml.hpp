#pragma once

// Surface definition files.
//
//   [surface]   name = "legendre"
//   [base]      kind = "p1" | "elliptic", a1 .. a6 for an elliptic base
//   [fiber]     a1 .. a6 in t (or in x, y over an elliptic base),
//               or genus = g and f = [c0, c1, ..., c_{2g+2}]
//   [trace]     dim_b = 0 | 1
//   [trace.constant_part]  a1 .. a6
//   [[conductor.place]]    place, degree, epsilon, kodaira, v_delta,
//                          toric_rank, unipotent_rank
//
// Missing a-invariants default to 0. Values may be strings or integers.

#include <filesystem>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <toml.hpp>

#include "jrl/fibration/surface.hpp"

namespace jrl::io {

class SurfaceFileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::optional<std::string> scalar_text(const toml::node* node, const std::string& where) {
  if (node == nullptr) return std::nullopt;
  if (auto s = node->value<std::string>()) return *s;
  if (auto i = node->value<std::int64_t>()) return std::to_string(*i);
  throw SurfaceFileError(where + " must be a string or an integer");
}

inline fibration::BaseFunction parse_function(const std::string& text, const std::string& where,
                                              std::shared_ptr<const fibration::EllipticRelation> rel) {
  try {
    return fibration::parse_base_function(text, std::move(rel));
  } catch (const arith::ParseError& e) {
    throw SurfaceFileError(where + ": " + e.what());
  }
}

inline curves::WeierstrassCoefficients<arith::Rational> rational_invariants(const toml::table& t,
                                                                           const std::string& section) {
  std::array<arith::Rational, 5> a;
  const char* names[] = {"a1", "a2", "a3", "a4", "a6"};
  for (int i = 0; i < 5; ++i) {
    auto text = scalar_text(t.get(names[i]), section + "." + names[i]);
    if (!text) continue;
    try {
      a[static_cast<std::size_t>(i)] = fibration::parse_rational(*text);
    } catch (const arith::ParseError& e) {
      throw SurfaceFileError(section + "." + names[i] + ": " + e.what());
    }
  }
  return curves::WeierstrassCoefficients<arith::Rational>::from_array(a);
}

inline const toml::table* subtable(const toml::table& t, const char* key) {
  const toml::node* n = t.get(key);
  if (n == nullptr) return nullptr;
  if (!n->is_table()) throw SurfaceFileError(std::string("[") + key + "] must be a table");
  return n->as_table();
}

}  // namespace detail

inline fibration::SurfaceSpec surface_from_toml(const toml::table& root) {
  using fibration::BaseFunction;
  fibration::SurfaceSpec spec;

  if (const auto* s = detail::subtable(root, "surface")) spec.name = (*s)["name"].value_or(std::string());
  if (spec.name.empty()) throw SurfaceFileError("[surface] name is required");

  std::shared_ptr<const fibration::EllipticRelation> rel;
  const auto* base = detail::subtable(root, "base");
  std::string kind = base ? (*base)["kind"].value_or(std::string("p1")) : "p1";
  if (kind == "elliptic") {
    auto a = detail::rational_invariants(*base, "base");
    try {
      spec.base = curves::EllipticBase(a);
    } catch (const std::invalid_argument& e) {
      throw SurfaceFileError(e.what());
    }
    rel = fibration::EllipticRelation::from(a);
  } else if (kind != "p1") {
    throw SurfaceFileError("[base] kind must be \"p1\" or \"elliptic\", got \"" + kind + "\"");
  }

  const auto* fiber = detail::subtable(root, "fiber");
  if (fiber == nullptr) throw SurfaceFileError("[fiber] section is required");
  if (const toml::node* f = fiber->get("f")) {
    const toml::array* arr = f->as_array();
    if (arr == nullptr) throw SurfaceFileError("fiber.f must be an array of coefficients");
    spec.kind = fibration::FiberKind::Hyperelliptic;
    spec.genus_fiber = static_cast<int>((*fiber)["genus"].value_or<std::int64_t>(0));
    for (std::size_t i = 0; i < arr->size(); ++i) {
      std::string where = "fiber.f[" + std::to_string(i) + "]";
      auto text = detail::scalar_text(arr->get(i), where);
      spec.coefficients.push_back(detail::parse_function(*text, where, rel));
    }
    if (spec.genus_fiber == 0) spec.genus_fiber = (static_cast<int>(spec.coefficients.size()) - 3) / 2;
  } else {
    spec.kind = fibration::FiberKind::Weierstrass;
    spec.genus_fiber = 1;
    for (const char* name : {"a1", "a2", "a3", "a4", "a6"}) {
      std::string where = std::string("fiber.") + name;
      auto text = detail::scalar_text(fiber->get(name), where);
      spec.coefficients.push_back(text ? detail::parse_function(*text, where, rel) : BaseFunction(0L));
    }
  }

  if (const auto* trace = detail::subtable(root, "trace")) {
    spec.dim_trace = static_cast<int>((*trace)["dim_b"].value_or<std::int64_t>(0));
    if (const auto* cp = detail::subtable(*trace, "constant_part")) {
      spec.constant_part = detail::rational_invariants(*cp, "trace.constant_part");
      if (!trace->get("dim_b")) spec.dim_trace = 1;
    }
  }

  if (const auto* cond = detail::subtable(root, "conductor")) {
    if (const toml::array* places = (*cond)["place"].as_array()) {
      for (const auto& node : *places) {
        const toml::table* t = node.as_table();
        if (t == nullptr) throw SurfaceFileError("[[conductor.place]] entries must be tables");
        fibration::SuppliedLocalDatum d;
        d.place = (*t)["place"].value_or(std::string());
        if (d.place.empty()) throw SurfaceFileError("[[conductor.place]] needs a place");
        d.degree = static_cast<int>((*t)["degree"].value_or<std::int64_t>(1));
        d.epsilon = static_cast<int>((*t)["epsilon"].value_or<std::int64_t>(-1));
        if (d.epsilon < 0) throw SurfaceFileError("[[conductor.place]] needs epsilon");
        if (auto k = (*t)["kodaira"].value<std::string>()) d.kodaira = *k;
        if (auto v = (*t)["v_delta"].value<std::int64_t>()) d.v_delta = static_cast<int>(*v);
        if (auto v = (*t)["toric_rank"].value<std::int64_t>()) d.toric_rank = static_cast<int>(*v);
        if (auto v = (*t)["unipotent_rank"].value<std::int64_t>()) d.unipotent_rank = static_cast<int>(*v);
        spec.supplied_conductor.push_back(std::move(d));
      }
    }
  }

  try {
    spec.validate();
  } catch (const std::invalid_argument& e) {
    throw SurfaceFileError(e.what());
  }
  return spec;
}

inline fibration::SurfaceSpec load_surface_string(const std::string& text, const std::string& source = "<string>") {
  try {
    return surface_from_toml(toml::parse(text, source));
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << source << ": " << e.description() << " (line " << e.source().begin.line << ")";
    throw SurfaceFileError(msg.str());
  }
}

inline fibration::SurfaceSpec load_surface(const std::filesystem::path& path) {
  try {
    return surface_from_toml(toml::parse_file(path.string()));
  } catch (const toml::parse_error& e) {
    std::ostringstream msg;
    msg << path.string() << ": " << e.description() << " (line " << e.source().begin.line << ")";
    throw SurfaceFileError(msg.str());
  }
}

}  // namespace jrl::io
