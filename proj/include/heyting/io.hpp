#pragma once

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "heyting/algebra.hpp"
#include "heyting/enumeration.hpp"
#include "heyting/error.hpp"
#include "heyting/rational.hpp"
#include "heyting/topology.hpp"

namespace heyting {

using Json = nlohmann::ordered_json;

inline Json rational_json(const Rational& r) {
  return Json{{"num", numerator_string(r)}, {"den", denominator_string(r)}};
}

inline Rational rational_from_json(const Json& j) {
  try {
    return make_rational(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
  } catch (const std::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("bad rational: ") + e.what());
  }
}

/// {"size": n, "leq": row-major 0/1 matrix}.
inline Json algebra_json(const HeytingAlgebra& h) {
  Json leq = Json::array();
  for (auto v : h.poset().matrix()) leq.push_back(static_cast<int>(v));
  return Json{{"size", h.size()}, {"leq", std::move(leq)}};
}

/// Accepts the flat row-major matrix or a list of rows; entries may be
/// 0/1 or booleans.
inline HeytingAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("size") || !j.contains("leq"))
    throw Error(ErrorKind::InvalidArgument, "algebra JSON needs \"size\" and \"leq\"");
  const auto n = j.at("size").get<std::size_t>();
  std::vector<std::uint8_t> m;
  auto bit = [](const Json& v) -> std::uint8_t {
    if (v.is_boolean()) return v.get<bool>() ? 1 : 0;
    if (v.is_number_integer() && (v.get<int>() == 0 || v.get<int>() == 1)) return static_cast<std::uint8_t>(v.get<int>());
    throw Error(ErrorKind::InvalidArgument, "leq entries must be 0/1 or booleans");
  };
  for (const auto& row : j.at("leq")) {
    if (row.is_array())
      for (const auto& v : row) m.push_back(bit(v));
    else
      m.push_back(bit(row));
  }
  if (m.size() != n * n) throw Error(ErrorKind::NotAPoset, "leq matrix does not have size*size entries");
  return heyting_from_leq(Poset(n, std::move(m)));
}

inline HeytingAlgebra load_algebra(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidArgument, path + ": " + e.what());
  }
  return algebra_from_json(j);
}

/// One JSON line per algebra, then {"summary": {"total", "by_size"}}.
inline void write_enumeration_jsonl(std::ostream& out, const std::vector<EnumeratedAlgebra>& algebras) {
  std::map<std::size_t, std::size_t> by_size;
  for (const auto& e : algebras) {
    Json line = algebra_json(e.algebra);
    line["code"] = e.code;
    out << line.dump() << '\n';
    ++by_size[e.algebra.size()];
  }
  Json counts = Json::object();
  for (auto [size, count] : by_size) counts[std::to_string(size)] = count;
  out << Json{{"summary", {{"total", algebras.size()}, {"by_size", counts}}}}.dump() << '\n';
}

/// {"points": n, "opens": [bitmask, ...]}.
inline Json topology_json(const FiniteTopology& t) { return Json{{"points", t.points}, {"opens", t.opens}}; }

inline FiniteTopology topology_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("opens"))
    throw Error(ErrorKind::InvalidArgument, "topology JSON needs \"points\" and \"opens\"");
  try {
    return make_topology(j.at("points").get<std::size_t>(), j.at("opens").get<std::vector<std::uint32_t>>());
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::InvalidArgument, std::string("bad topology: ") + e.what());
  }
}

}  // namespace heyting
