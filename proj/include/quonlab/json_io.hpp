#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "quonlab/fock.hpp"
#include "quonlab/gram.hpp"
#include "quonlab/numberop.hpp"
#include "quonlab/params.hpp"
#include "quonlab/twisted.hpp"

namespace quonlab {

using Json = nlohmann::ordered_json;

/// Parses {"alphabet": ["1","2",...], "q": {"i,j": [re,im], ...}}.
/// Unlisted conjugate pairs are filled from hermiticity; listing both (i,j)
/// and (j,i) with non-conjugate values is an error, as is a non-real
/// diagonal entry.
QMatrix<Cplx> load_qmatrix(const Json& j);
QMatrix<Cplx> load_qmatrix_file(const std::string& path);

Json qmatrix_to_json(const QMatrix<Cplx>& q);

inline Json complex_to_json(const Cplx& z) { return Json::array({z.real(), z.imag()}); }

template <class S>
Json word_to_json(const Word& w, const QMatrix<S>& q) {
  Json arr = Json::array();
  for (int l : w.letters()) arr.push_back(q.label(l));
  return arr;
}

/// {"weight": [...], "labels": [[...],...], "matrix": [[[re,im],...],...]}
template <class S>
Json block_to_json(const GramBlock<S>& block, const QMatrix<S>& q) {
  Json j;
  j["weight"] = word_to_json(block.weight.word(), q);
  Json labels = Json::array();
  for (const Word& w : block.labels) labels.push_back(word_to_json(w, q));
  j["labels"] = std::move(labels);
  Json rows = Json::array();
  for (int r = 0; r < block.matrix.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < block.matrix.cols(); ++c) row.push_back(complex_to_json(qto_complex(block.matrix(r, c))));
    rows.push_back(std::move(row));
  }
  j["matrix"] = std::move(rows);
  return j;
}

/// Symbolic element dump: list of {perm, monomials: [{pairs: {"k,l": exp},
/// scalar: [re,im]}]} with 1-based indeterminate subscripts.
Json element_to_json(const TwistedElement& x);

/// Specialized element dump: same shape, empty pairs maps.
template <class S>
Json specialized_to_json(const std::map<Permutation, S>& coeffs) {
  Json out = Json::array();
  for (const auto& [p, c] : coeffs) {
    Json term;
    term["perm"] = p.one_line();
    term["monomials"] =
        Json::array({Json{{"pairs", Json::object()}, {"scalar", complex_to_json(qto_complex(c))}}});
    out.push_back(std::move(term));
  }
  return out;
}

template <class S>
Json operator_poly_to_json(const OperatorPolynomial<S>& poly, const QMatrix<S>& q) {
  Json out = Json::array();
  for (const auto& [mono, c] : poly.terms()) {
    Json factors = Json::array();
    for (const OpFactor& f : mono.factors()) {
      factors.push_back(Json::array({f.kind == OpKind::Create ? "a+" : "a", q.label(f.letter)}));
    }
    out.push_back(Json{{"factors", std::move(factors)}, {"scalar", complex_to_json(qto_complex(c))}});
  }
  return out;
}

/// list of {word, coset, coefficient, Y}
template <class S>
Json expansion_to_json(const NumberOperatorExpansion<S>& exp, const QMatrix<S>& q) {
  Json out = Json::array();
  for (const ExpansionTerm<S>& t : exp.terms) {
    Json term;
    term["word"] = word_to_json(t.word, q);
    term["coset"] = word_to_json(t.coset_word, q);
    term["coefficient"] = complex_to_json(qto_complex(t.coefficient));
    term["Y"] = operator_poly_to_json(exp.y_table.at(t.word).body, q);
    out.push_back(std::move(term));
  }
  return out;
}

}  // namespace quonlab
