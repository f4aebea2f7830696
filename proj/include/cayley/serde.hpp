#pragma once

#include "cayley/embedding.hpp"
#include "cayley/jordan.hpp"

#include "json.hpp"

#include <string>

namespace cayley::serde {

using json = nlohmann::json;

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

/// Octonion as 16 decimal strings (re/im per coefficient); rational mode
/// uses exact "p/q" strings.
inline json to_json(const Octonion<CD>& o) {
  json a = json::array();
  for (int i = 0; i < 8; ++i) {
    a.push_back(num(o.c[i].re));
    a.push_back(num(o.c[i].im));
  }
  return a;
}

inline json to_json(const Octonion<CQ>& o) {
  json a = json::array();
  for (int i = 0; i < 8; ++i) {
    a.push_back(to_string(o.c[i].re));
    a.push_back(to_string(o.c[i].im));
  }
  return a;
}

/// JordanElement as its Vec27 array plus the scalar-mode flag.
inline json to_json(const JordanElement<CD>& j, bool real_mode) {
  json v = json::array();
  for (const auto& c : to_vec27(j)) {
    v.push_back(num(c.re));
    v.push_back(num(c.im));
  }
  return json{{"mode", real_mode ? "real" : "complex"}, {"vec27", v}};
}

/// Cotangent point as chart coordinates (b then c) plus the 16 tangent
/// coefficients in the chart frame.
inline json to_json(const CotangentPoint& p) {
  auto x = darboux_coords(p);
  json base = json::array(), mom = json::array();
  for (int i = 0; i < 16; ++i) base.push_back(num(x[i]));
  for (int i = 0; i < 16; ++i) mom.push_back(num(x[16 + i]));
  return json{{"chart_bc", base}, {"tangent", mom}};
}

}  // namespace cayley::serde
