#include "crystbraid/io.hpp"

#include <limits>

#include "crystbraid/errors.hpp"

namespace cryst::io {

namespace {

// Exact when it fits in 64 bits, a decimal string otherwise.
json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

}  // namespace

json to_json(const PairVector& v) {
  json out = json::object();
  const auto pairs = all_pairs(v.strands());
  for (std::size_t k = 0; k < pairs.size(); ++k)
    if (v.coeffs()[k] != 0) out[pairs[k].key()] = v.coeffs()[k];
  return out;
}

PairVector pair_vector_from_json(int n, const json& j) {
  if (!j.is_object()) throw ParseError("pair vector must be a JSON object");
  PairVector v(n);
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer()) throw ParseError("coefficient of " + key + " is not an integer");
    v[Pair::from_key(key)] += value.get<std::int64_t>();
  }
  return v;
}

json to_json(const Element& g) {
  return {{"n", g.strands()}, {"perm", g.perm().images()}, {"vec", to_json(g.vec())}};
}

Element element_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    auto images = j.at("perm").get<std::vector<int>>();
    if (static_cast<int>(images.size()) != n) throw ParseError("perm has " + std::to_string(images.size()) +
                                                               " entries, expected " + std::to_string(n));
    PairVector v = j.contains("vec") ? pair_vector_from_json(n, j.at("vec")) : PairVector(n);
    return Element(Permutation::from_images(std::move(images)), std::move(v));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad element JSON: ") + e.what());
  }
}

json to_json(const OrbitTable& t) {
  json out = json::array();
  for (const auto& o : t.orbits) {
    json row = json::array();
    for (const Pair& p : o) row.push_back(p.key());
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(big(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const Abelianization& a) {
  json out = json::array({a.free_rank});
  for (const auto& t : a.torsion) out.push_back(big(t));
  return out;
}

Element parse_element(int n, std::string_view text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string_view::npos && text[first] == '{') {
    json j;
    try {
      j = json::parse(text);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad element JSON: ") + e.what());
    }
    Element g = element_from_json(j);
    if (g.strands() != n) throw DegreeMismatch(g.strands(), n);
    return g;
  }
  return normalize(BraidWord::parse(n, text));
}

}  // namespace cryst::io
