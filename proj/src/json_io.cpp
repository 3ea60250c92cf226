#include "quonlab/json_io.hpp"

#include <fstream>

namespace quonlab {

namespace {

std::pair<std::string, std::string> split_pair_key(const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("q key must be 'i,j': got '" + key + "'");
  }
  return {key.substr(0, comma), key.substr(comma + 1)};
}

Cplx parse_complex(const Json& v) {
  if (!v.is_array() || v.size() != 2) throw std::invalid_argument("complex values must be [re, im]");
  return {v[0].get<double>(), v[1].get<double>()};
}

}  // namespace

QMatrix<Cplx> load_qmatrix(const Json& j) {
  if (!j.contains("alphabet") || !j["alphabet"].is_array()) {
    throw std::invalid_argument("q file needs an \"alphabet\" array");
  }
  std::vector<std::string> alphabet;
  for (const auto& l : j["alphabet"]) alphabet.push_back(l.get<std::string>());
  QMatrix<Cplx> q(alphabet);
  std::vector<bool> given(alphabet.size() * alphabet.size(), false);
  if (j.contains("q")) {
    for (const auto& [key, val] : j["q"].items()) {
      auto [a, b] = split_pair_key(key);
      int i = q.index_of(a), jj = q.index_of(b);
      Cplx v = parse_complex(val);
      if (given[i * q.size() + jj]) {
        throw std::invalid_argument("duplicate q entry for '" + key + "'");
      }
      if (i == jj) {
        if (v.imag() != 0.0) {
          throw std::invalid_argument("diagonal entry '" + key + "' must be real");
        }
        given[i * q.size() + i] = true;
        q.set(i, i, v);
        continue;
      }
      if (given[jj * q.size() + i] && q(jj, i) != std::conj(v)) {
        throw std::invalid_argument("conflicting explicit pair for '" + key +
                                    "': not the conjugate of its mirror");
      }
      given[i * q.size() + jj] = true;
      q.set(i, jj, v);
      if (!given[jj * q.size() + i]) q.set(jj, i, std::conj(v));
    }
  }
  ValidationReport rep = validate(q, /*strict=*/false);
  if (!rep.hermitian_ok) {
    throw std::invalid_argument("q matrix is not a hermitian family (q_ji must equal conj(q_ij))");
  }
  return q;
}

QMatrix<Cplx> load_qmatrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open q file: " + path);
  Json j;
  in >> j;
  return load_qmatrix(j);
}

Json qmatrix_to_json(const QMatrix<Cplx>& q) {
  Json j;
  j["alphabet"] = q.alphabet();
  Json entries = Json::object();
  for (int a = 0; a < q.size(); ++a) {
    for (int b = a; b < q.size(); ++b) {
      entries[q.label(a) + "," + q.label(b)] = complex_to_json(q(a, b));
    }
  }
  j["q"] = std::move(entries);
  return j;
}

Json element_to_json(const TwistedElement& x) {
  Json out = Json::array();
  for (const auto& [p, poly] : x.terms()) {
    Json monos = Json::array();
    for (const auto& [m, c] : poly.terms()) {
      Json pairs = Json::object();
      for (const auto& [kl, e] : m.factors()) {
        pairs[std::to_string(kl.first + 1) + "," + std::to_string(kl.second + 1)] = e;
      }
      monos.push_back(Json{{"pairs", std::move(pairs)},
                           {"scalar", Json::array({static_cast<double>(c), 0.0})}});
    }
    out.push_back(Json{{"perm", p.one_line()}, {"monomials", std::move(monos)}});
  }
  return out;
}

}  // namespace quonlab
