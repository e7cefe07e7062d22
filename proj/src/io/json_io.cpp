#include "liecoh/io/json_io.hpp"

#include <map>

#include "liecoh/error.hpp"

namespace liecoh {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw Error(ErrorKind::ParseError, "expected a rational as \"p/q\" or an integer, got " + j.dump());
}

Json scalar_to_json(const Scalar& s) { return to_string(s); }

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t index_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 1) {
    throw Error(ErrorKind::ParseError, std::string("field '") + key + "' must be a positive integer");
  }
  return static_cast<std::size_t>(v.get<long long>());
}

}  // namespace

Json algebra_to_json(const LieAlgebra& g) {
  Json brackets = Json::array();
  const auto& terms = g.terms();
  for (std::size_t t = 0; t < terms.size();) {
    Json entry{{"i", terms[t].i + 1}, {"j", terms[t].j + 1}, {"terms", Json::array()}};
    const std::size_t i = terms[t].i;
    const std::size_t jj = terms[t].j;
    for (; t < terms.size() && terms[t].i == i && terms[t].j == jj; ++t) {
      entry["terms"].push_back({{"k", terms[t].k + 1}, {"c", to_string(terms[t].c)}});
    }
    brackets.push_back(std::move(entry));
  }
  return Json{{"dim", g.dim()}, {"label", g.label()}, {"brackets", std::move(brackets)}};
}

LieAlgebra algebra_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "algebra document must be a JSON object");
  const Json& dim_field = field(j, "dim");
  if (!dim_field.is_number_integer() || dim_field.get<long long>() < 0 || dim_field.get<long long>() > 256) {
    throw Error(ErrorKind::ParseError, "'dim' must be an integer in [0, 256]");
  }
  const auto n = static_cast<std::size_t>(dim_field.get<long long>());
  std::string label;
  if (j.contains("label")) {
    if (!j.at("label").is_string()) throw Error(ErrorKind::ParseError, "'label' must be a string");
    label = j.at("label").get<std::string>();
  }
  std::vector<BracketTerm> terms;
  if (j.contains("brackets")) {
    const Json& br = j.at("brackets");
    if (!br.is_array()) throw Error(ErrorKind::ParseError, "'brackets' must be an array");
    for (const auto& b : br) {
      const std::size_t i = index_field(b, "i");
      const std::size_t jj = index_field(b, "j");
      if (i >= jj) throw Error(ErrorKind::BadIndex, "bracket (" + std::to_string(i) + "," + std::to_string(jj) + ") needs i < j");
      if (jj > n) throw Error(ErrorKind::BadIndex, "bracket index " + std::to_string(jj) + " exceeds dim");
      const Json& ts = field(b, "terms");
      if (!ts.is_array()) throw Error(ErrorKind::ParseError, "'terms' must be an array");
      for (const auto& t : ts) {
        const std::size_t k = index_field(t, "k");
        if (k > n) throw Error(ErrorKind::BadIndex, "term index " + std::to_string(k) + " exceeds dim");
        terms.push_back({i - 1, jj - 1, k - 1, scalar_from_json(field(t, "c"))});
      }
    }
  }
  return LieAlgebra::from_terms(n, terms, label);
}

Json params_to_json(const FiliformParams& p) {
  Json alpha = Json::object();
  for (const auto& [idx, v] : p.alpha()) alpha[to_string(idx)] = to_string(v);
  return Json{{"n", p.n()}, {"alpha", std::move(alpha)}};
}

FiliformParams params_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "params document must be a JSON object");
  const Json& nf = field(j, "n");
  if (!nf.is_number_integer()) throw Error(ErrorKind::ParseError, "'n' must be an integer");
  const long long n = nf.get<long long>();
  if (n < 4 || n > 64) throw Error(ErrorKind::RangeError, "'n' must lie in [4, 64]");
  FiliformParams p(static_cast<int>(n));
  if (!j.contains("alpha")) return p;
  const Json& alpha = j.at("alpha");
  if (!alpha.is_object()) throw Error(ErrorKind::ParseError, "'alpha' must be an object");
  for (const auto& [key, value] : alpha.items()) {
    const auto comma = key.find(',');
    int k = 0;
    int s = 0;
    try {
      std::size_t used_k = 0;
      std::size_t used_s = 0;
      if (comma == std::string::npos) throw std::invalid_argument(key);
      k = std::stoi(key.substr(0, comma), &used_k);
      s = std::stoi(key.substr(comma + 1), &used_s);
      if (used_k != comma || used_s != key.size() - comma - 1) throw std::invalid_argument(key);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::ParseError, "alpha key '" + key + "' must look like \"k,s\"");
    }
    p.set(k, s, scalar_from_json(value));
  }
  return p;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row_vector(r)));
  return out;
}

Json form_entries_to_json(const TwoForm& w) {
  Json out = Json::array();
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = i + 1; j < w.dim(); ++j) {
      if (sgn(w(i, j)) != 0) out.push_back({std::to_string(i + 1) + "," + std::to_string(j + 1), to_string(w(i, j))});
    }
  return out;
}

Json cohomology_to_json(const CohomologyResult& r, std::size_t n) {
  Json reps = Json::array();
  for (const auto& v : r.h_reps) reps.push_back(form_entries_to_json(TwoForm::from_coordinates(n, v)));
  return Json{{"dim_Z2", r.dim_z()}, {"dim_B2", r.dim_b()}, {"dim_H2", r.dim_h()}, {"h_reps", std::move(reps)}};
}

Json series_to_json(const SeriesReport& r) {
  return Json{{"lower_central_dims", r.lower_central_dims},
              {"derived_dims", r.derived_dims},
              {"center_dim", r.center_dim},
              {"nilindex", r.nilindex ? Json(*r.nilindex) : Json(nullptr)},
              {"is_nilpotent", r.is_nilpotent},
              {"is_filiform", r.is_filiform}};
}

Json jacobi_to_json(const std::vector<JacobiViolation>& violations) {
  Json list = Json::array();
  for (const auto& v : violations) {
    list.push_back({{"i", v.i}, {"j", v.j}, {"k", v.k}, {"l", v.l}, {"residual", to_string(v.residual)}});
  }
  return Json{{"is_lie_algebra", violations.empty()}, {"violations", std::move(list)}};
}

namespace {

Json certificate_to_json(const std::optional<Certificate>& c) {
  if (!c) return nullptr;
  Json out{{"kind", std::string(to_string(c->kind))}};
  if (!c->vector.empty()) out["vector"] = vector_to_json(c->vector);
  if (c->kind == CertificateKind::VanishingPfaffian) out["forms"] = c->forms;
  if (c->kind == CertificateKind::IsotropicPair) {
    // 1-based first basis index of each tail span.
    out["u_from"] = c->u_from + 1;
    out["v_from"] = c->v_from + 1;
  }
  return out;
}

Json sampling_to_json(const std::optional<Sampling>& s) {
  if (!s) return nullptr;
  return Json{{"seed", s->seed},
              {"trials", s->trials},
              {"sample_set_size", s->sample_set_size},
              {"failure_bound", to_string(s->failure_bound)}};
}

}  // namespace

Json verdict_to_json(const SymplecticVerdict& v) {
  Json out{{"status", std::string(to_string(v.status))}};
  out["witness"] = v.witness ? Json{{"form", form_entries_to_json(*v.witness)}, {"det", to_string(v.witness_det)}}
                             : Json(nullptr);
  out["certificate"] = certificate_to_json(v.certificate);
  out["sampling"] = sampling_to_json(v.sampling);
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

Json verdict_to_json(const FrobeniusVerdict& v) {
  Json out{{"status", std::string(to_string(v.status))}};
  out["witness"] = v.witness ? Json{{"functional", vector_to_json(*v.functional)},
                                    {"form", form_entries_to_json(*v.witness)},
                                    {"det", to_string(v.witness_det)}}
                             : Json(nullptr);
  out["certificate"] = certificate_to_json(v.certificate);
  out["sampling"] = sampling_to_json(v.sampling);
  return out;
}

Json verdict_to_json(const CnlaVerdict& v) {
  Json out{{"is_cnla", v.is_cnla}};
  if (v.is_cnla) {
    Json flag = Json::array();
    for (const auto& s : v.flag) {
      Json basis = Json::array();
      for (std::size_t b = 0; b < s.dim(); ++b) basis.push_back(vector_to_json(s.basis_vector(b)));
      flag.push_back(std::move(basis));
    }
    out["flag"] = std::move(flag);
    out["counterexample"] = nullptr;
  } else {
    out["flag"] = nullptr;
    out["counterexample"] = v.counterexample ? matrix_to_json(*v.counterexample) : Json(nullptr);
  }
  return out;
}

Json verdict_to_json(const AffineWitness& w) {
  return Json{{"kind", std::string(to_string(w.kind))},
              {"payload", w.kind == AffineKind::NoneFound ? Json(nullptr) : matrix_to_json(w.payload)},
              {"note", w.note}};
}

}  // namespace liecoh
