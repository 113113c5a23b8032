#pragma once

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "d4rep/analysis.hpp"
#include "d4rep/graphrep.hpp"

namespace d4rep {

// Verification summary stored alongside a representation. Recomputable from
// the projectors and gamma columns alone, which is how read-back integrity
// is checked.
struct StoredResiduals {
  double hermiticity{};
  double idempotence{};
  double trace{};
  double sum{};
  double relations{};
  double scalarity_a0{};
  double scalarity_leaf_max{};
};

struct RepresentationFile {
  Character character;
  Branch branch{Branch::generic};
  double lambda{};
  double chi{};
  std::array<Mat2, 4> projectors{};
  GraphRepresentation graph;
  StoredResiduals residuals;
};

inline StoredResiduals compute_residuals(const ProjectorQuadruple& q,
                                         const GraphRepresentation& g) {
  StoredResiduals r;
  const QuadrupleResiduals qr = quadruple_residuals(q);
  r.hermiticity = qr.hermiticity;
  r.idempotence = qr.idempotence;
  r.trace = qr.trace;
  r.sum = qr.sum;
  r.relations = relation_residual(xyz_from_projectors(q), q.character);
  const ScalarityReport sr = verify_locally_scalar(g);
  r.scalarity_a0 = sr.a0_residual;
  r.scalarity_leaf_max = 0.0;
  for (double v : sr.leaf_residuals) r.scalarity_leaf_max = std::max(r.scalarity_leaf_max, v);
  return r;
}

namespace detail {

// 17 significant digits: lossless decimal round trip for IEEE doubles.
inline std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

inline std::string json_complex(const Complex& z) {
  return "[" + fmt17(z.real()) + ", " + fmt17(z.imag()) + "]";
}

inline std::string json_mat2(const Mat2& m, const std::string& ind) {
  return "[[" + json_complex(m.a11) + ", " + json_complex(m.a12) + "],\n" + ind + " [" +
         json_complex(m.a21) + ", " + json_complex(m.a22) + "]]";
}

inline std::string json_vec2(const Vec2& v) {
  return "[" + json_complex(v.v1) + ", " + json_complex(v.v2) + "]";
}

}  // namespace detail

// Writes the representation as JSON. Numbers carry 17 significant digits so
// the file round-trips bit-exactly through write -> read.
inline std::string write_representation_json(const RepresentationFile& f) {
  using detail::fmt17;
  std::string s;
  s += "{\n";
  s += "  \"character\": {\"alpha\": [" + fmt17(f.character[0]) + ", " + fmt17(f.character[1]) +
       ", " + fmt17(f.character[2]) + ", " + fmt17(f.character[3]) + "]},\n";
  s += "  \"branch\": \"" + std::string(branch_name(f.branch)) + "\",\n";
  s += "  \"parameters\": {\"lambda\": " + fmt17(f.lambda) + ", \"chi\": " + fmt17(f.chi) + "},\n";
  s += "  \"projectors\": [\n";
  for (int i = 0; i < 4; ++i) {
    s += "    " + detail::json_mat2(f.projectors[static_cast<std::size_t>(i)], "    ");
    s += i < 3 ? ",\n" : "\n";
  }
  s += "  ],\n";
  s += "  \"graph\": {\n    \"dim\": [2, 1, 1, 1, 1],\n    \"gamma\": [\n";
  for (int i = 0; i < 4; ++i) {
    s += "      " + detail::json_vec2(f.graph.gamma[static_cast<std::size_t>(i)]);
    s += i < 3 ? ",\n" : "\n";
  }
  s += "    ]\n  },\n";
  s += "  \"residuals\": {\n";
  s += "    \"hermiticity\": " + fmt17(f.residuals.hermiticity) + ",\n";
  s += "    \"idempotence\": " + fmt17(f.residuals.idempotence) + ",\n";
  s += "    \"trace\": " + fmt17(f.residuals.trace) + ",\n";
  s += "    \"sum\": " + fmt17(f.residuals.sum) + ",\n";
  s += "    \"relations\": " + fmt17(f.residuals.relations) + ",\n";
  s += "    \"scalarity_a0\": " + fmt17(f.residuals.scalarity_a0) + ",\n";
  s += "    \"scalarity_leaf_max\": " + fmt17(f.residuals.scalarity_leaf_max) + "\n";
  s += "  }\n";
  s += "}\n";
  return s;
}

namespace detail {

inline Complex complex_from_json(const nlohmann::json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

inline Mat2 mat2_from_json(const nlohmann::json& j) {
  return {complex_from_json(j.at(0).at(0)), complex_from_json(j.at(0).at(1)),
          complex_from_json(j.at(1).at(0)), complex_from_json(j.at(1).at(1))};
}

}  // namespace detail

// Parses a representation file. Throws nlohmann::json::exception on malformed
// input (the CLI maps that to the I/O exit code) and d4rep::Error when the
// character is invalid.
inline RepresentationFile read_representation_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  RepresentationFile f;
  const nlohmann::json& jc = j.at("character");
  if (jc.contains("alpha_raw")) {
    std::array<double, 5> raw{};
    for (int i = 0; i < 5; ++i)
      raw[static_cast<std::size_t>(i)] = jc.at("alpha_raw").at(i).get<double>();
    f.character = character_from_raw(raw);
  } else {
    std::array<double, 4> a{};
    for (int i = 0; i < 4; ++i)
      a[static_cast<std::size_t>(i)] = jc.at("alpha").at(i).get<double>();
    f.character = validate_character(a);
  }
  f.branch = j.at("branch").get<std::string>() == "equal" ? Branch::equal : Branch::generic;
  f.lambda = j.at("parameters").at("lambda").get<double>();
  f.chi = j.at("parameters").at("chi").get<double>();
  for (int i = 0; i < 4; ++i)
    f.projectors[static_cast<std::size_t>(i)] = detail::mat2_from_json(j.at("projectors").at(i));
  f.graph.character = f.character;
  for (int i = 0; i < 4; ++i) {
    const nlohmann::json& jg = j.at("graph").at("gamma").at(i);
    f.graph.gamma[static_cast<std::size_t>(i)] = {detail::complex_from_json(jg.at(0)),
                                                  detail::complex_from_json(jg.at(1))};
  }
  const nlohmann::json& jr = j.at("residuals");
  f.residuals.hermiticity = jr.at("hermiticity").get<double>();
  f.residuals.idempotence = jr.at("idempotence").get<double>();
  f.residuals.trace = jr.at("trace").get<double>();
  f.residuals.sum = jr.at("sum").get<double>();
  f.residuals.relations = jr.at("relations").get<double>();
  f.residuals.scalarity_a0 = jr.at("scalarity_a0").get<double>();
  f.residuals.scalarity_leaf_max = jr.at("scalarity_leaf_max").get<double>();
  return f;
}

inline ProjectorQuadruple quadruple_from_file(const RepresentationFile& f) {
  return ProjectorQuadruple{f.projectors, f.character};
}

}  // namespace d4rep
