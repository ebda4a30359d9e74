#include "commands.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>

#include "gelfand/certificate.hpp"
#include "gelfand/hecke_model.hpp"
#include "gelfand/involutions.hpp"
#include "gelfand/linalg.hpp"
#include "gelfand/partitions.hpp"
#include "gelfand/qrook_model.hpp"
#include "gelfand/relations.hpp"
#include "gelfand/semigroup.hpp"
#include "gelfand/sn_model.hpp"
#include "gelfand/tableaux.hpp"

namespace gelfand::cli {

Caps caps_for(std::string const& model) {
  if (model == "sn" || model == "hecke") {
    return {6, 7, 5, 6};
  }
  if (model == "isn" || model == "fstar") {
    return {4, 4, 3, 4};
  }
  if (model == "qrook") {
    return {4, 5, 3, 4};
  }
  // tables: the limits apply to the model dimension instead of n
  return {0, 0, 40, 80};
}

namespace {

bool is_table(std::string const& model) { return model.rfind("table:", 0) == 0; }

void check_config(RunConfig const& c) {
  static std::set<std::string> const known{"sn", "isn", "fstar", "hecke",
                                           "qrook"};
  if (!known.contains(c.model) && !is_table(c.model)) {
    throw CapacityError("unknown model '" + c.model + "'");
  }
  if (is_table(c.model)) {
    return;
  }
  if (c.n < 1) {
    throw CapacityError("n must be at least 1");
  }
  Caps caps = caps_for(c.model);
  if (c.n > (c.deep ? caps.build_deep : caps.build)) {
    throw CapacityError("n = " + std::to_string(c.n) + " exceeds the "
                        + c.model + " build limit "
                        + std::to_string(c.deep ? caps.build_deep : caps.build)
                        + (c.deep ? "" : " (--deep raises it)"));
  }
  if ((c.model == "hecke" || c.model == "qrook") && c.q0.is_zero()) {
    throw CapacityError("q0 must be nonzero");
  }
}

bool commutant_allowed(RunConfig const& c, std::size_t size) {
  Caps caps = caps_for(c.model);
  return size <= (c.deep ? caps.commutant_deep : caps.commutant);
}

// ------------------------------------------------------------- reporting

class Report {
 public:
  explicit Report(RunConfig const& c) : _config(c) {
    _json["command"] = c.command;
    _json["model"]   = c.model;
    if (!is_table(c.model)) {
      _json["n"] = c.n;
    }
    _json["checks"] = Json::array();
  }

  // Runs one named check; fn returns (passed, detail).
  void check(std::string const& name,
             std::function<std::pair<bool, Json>()> const& fn) {
    auto t0               = std::chrono::steady_clock::now();
    auto [passed, detail] = fn();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now()
                                                - t0)
                      .count();
    std::cerr << name << ": " << (passed ? "pass" : "FAIL") << " (" << secs
              << "s)\n";
    Json entry;
    entry["name"]   = name;
    entry["passed"] = passed;
    entry["detail"] = std::move(detail);
    if (_config.timing) {
      entry["seconds"] = secs;
    }
    _json["checks"].push_back(std::move(entry));
    _all_passed = _all_passed && passed;
  }

  void skip(std::string const& name, std::string const& why) {
    std::cerr << name << ": skipped (" << why << ")\n";
    _json["skipped"].push_back({{"name", name}, {"reason", why}});
  }

  Json& json() { return _json; }

  Outcome finish() {
    _json["verdict"] = _all_passed ? "pass" : "fail";
    return {_json, "", _all_passed ? kPass : kVerificationFailure};
  }

 private:
  RunConfig _config;
  Json      _json;
  bool      _all_passed = true;
};

Json certificate_json(GelfandCertificate const& c) {
  Json j;
  j["model"]                 = c.model;
  j["dimension"]             = c.dimension;
  j["commutant_dimension"]   = c.commutant_dimension;
  j["expected_simple_count"] = c.expected_simple_count;
  if (c.expected_dimension) {
    j["expected_dimension"] = *c.expected_dimension;
  }
  if (!c.inner_products.empty()) {
    Json ip = Json::object();
    for (auto const& [lambda, v] : c.inner_products) {
      ip[lambda.to_string()] = v.to_string();
    }
    j["inner_products"] = ip;
  }
  j["verdict"] = c.verdict();
  return j;
}

Json mismatch_json(Mismatch<QPoly> const& m) {
  return {{"row", m.row},
          {"col", m.col},
          {"lhs", to_json(m.lhs)},
          {"rhs", to_json(m.rhs)}};
}

std::pair<bool, Json> run_relations(GeneratorSet const&                  gens,
                                    std::vector<RelationInstance> const& rels) {
  std::size_t passed = 0;
  Json        failures = Json::array();
  for (auto const& r : rels) {
    auto res = check_relation(gens, r.lhs, r.rhs);
    if (res.passed) {
      ++passed;
    } else {
      failures.push_back({{"relation", r.label},
                          {"lhs", r.lhs},
                          {"rhs", r.rhs},
                          {"witness", mismatch_json(*res.witness)}});
    }
  }
  Json detail{{"instances", rels.size()}, {"passed", passed}};
  if (!failures.empty()) {
    detail["failures"] = failures;
  }
  return {failures.empty(), detail};
}

std::pair<bool, Json> run_module_check(ModuleCheck const& c) {
  Json detail{{"instances", c.instances}, {"applicable", c.applicable},
              {"failures", c.failures.size()}};
  if (!c.failures.empty()) {
    detail["first_failure"] = c.failures.front();
  }
  return {c.passed(), detail};
}

std::size_t sum_partition_counts(std::size_t n) {
  std::size_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    total += partition_count(k);
  }
  return total;
}

std::size_t isn_dimension_formula(std::size_t n) {
  std::size_t total = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    total += binomial(n, k) * involution_count(k);
  }
  return total;
}

// No generators (n = 1) still acts: by the identity of size dim.
template <typename M>
std::vector<RatMatrix> specialized(std::vector<M> const& mats,
                                   Rational const& q0, std::size_t dim) {
  std::vector<RatMatrix> out;
  if (mats.empty()) {
    out.push_back(RatMatrix::identity(dim));
  }
  for (auto const& m : mats) {
    if constexpr (std::is_same_v<M, QPolyMatrix>) {
      out.push_back(specialize(m, q0));
    } else {
      out.push_back(to_rational(m));
    }
  }
  return out;
}

std::unique_ptr<SemigroupAdapter> make_adapter(RunConfig const& c) {
  if (c.model == "isn") {
    return std::make_unique<IsnAdapter>(c.n);
  }
  if (c.model == "fstar") {
    return std::make_unique<FStarAdapter>(c.n);
  }
  try {
    return std::make_unique<TableAdapter>(
        TableAdapter::from_file(c.model.substr(6)));
  } catch (std::invalid_argument const& ex) {
    throw CapacityError(ex.what());
  }
}

Outcome hypothesis_outcome(RunConfig const& c, HypothesisError const& ex) {
  Json j;
  j["command"]    = c.command;
  j["model"]      = c.model;
  j["status"]     = "hypothesis failure";
  j["hypothesis"] = to_string(ex.kind());
  j["d_class"]    = ex.d_class();
  j["detail"]     = ex.detail();
  j["verdict"]    = "fail";
  return {j, "", kHypothesisFailure};
}

// --------------------------------------------------------------- build

std::string csv_quote(std::string const& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char ch : s) {
    out += ch == '"' ? "\"\"" : std::string(1, ch);
  }
  return out + "\"";
}

class Export {
 public:
  void basis(Json element) { _basis.push_back(std::move(element)); }

  template <typename T>
  void matrix(std::string const& name, Matrix<T> const& m) {
    _matrices.push_back({{"name", name}, {"matrix", to_json(m)}});
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!is_zero(m(r, c))) {
          _csv << "entry," << csv_quote(name) << "," << r << "," << c << ","
               << csv_quote(csv_cell(m(r, c))) << "\n";
        }
      }
    }
  }

  Outcome finish(RunConfig const& c, Json extra = Json::object()) {
    Json j;
    j["command"] = c.command;
    j["model"]   = c.model;
    if (!is_table(c.model)) {
      j["n"] = c.n;
    }
    for (auto& [k, v] : extra.items()) {
      j[k] = v;
    }
    j["dimension"] = _basis.size();
    j["basis"]     = _basis;
    j["matrices"]  = _matrices;
    std::ostringstream csv;
    csv << "kind,name,row,col,value\n";
    for (std::size_t k = 0; k < _basis.size(); ++k) {
      csv << "basis,," << k << ",," << csv_quote(_basis[k].dump()) << "\n";
    }
    csv << _csv.str();
    return {j, csv.str(), kPass};
  }

 private:
  Json               _basis    = Json::array();
  Json               _matrices = Json::array();
  std::ostringstream _csv;
};

}  // namespace

Outcome cmd_build(RunConfig const& c) {
  check_config(c);
  Export ex;
  if (c.model == "sn") {
    SnModelRep rep({c.n});
    for (auto const& w : rep.basis()) {
      ex.basis(to_json(w));
    }
    for (std::size_t i = 1; i < c.n; ++i) {
      ex.matrix("s" + std::to_string(i),
                rep.matrix(Permutation::simple(c.n, static_cast<int>(i))));
    }
    return ex.finish(c);
  }
  if (c.model == "hecke") {
    HeckeModelRep rep(c.n);
    for (auto const& w : rep.basis()) {
      ex.basis(to_json(w));
    }
    auto gens = rep.generator_set();
    for (std::size_t k = 0; k < gens.names.size(); ++k) {
      ex.matrix(gens.names[k], gens.matrices[k]);
    }
    return ex.finish(c);
  }
  if (c.model == "qrook") {
    QRookModelRep rep(c.n);
    for (auto const& w : rep.basis()) {
      ex.basis(to_json(w));
    }
    auto gens = rep.generator_set();
    for (std::size_t k = 0; k < gens.names.size(); ++k) {
      ex.matrix(gens.names[k], gens.matrices[k]);
    }
    return ex.finish(c);
  }
  auto adapter = make_adapter(c);
  try {
    SemigroupModel model(*adapter);
    auto const&    s = model.semigroup();
    for (auto w : model.basis()) {
      ex.basis(s.label(w));
    }
    for (std::size_t x = 0; x < s.size(); ++x) {
      ex.matrix(s.label(x), model.matrix(x));
    }
    Json classes = Json::array();
    for (auto const& dc : model.certificate().classes) {
      classes.push_back({{"idempotent", s.label(dc.group.idempotent)},
                         {"m", dc.m},
                         {"block_sizes", dc.group.block_sizes}});
    }
    return ex.finish(c, {{"semigroup_size", s.size()},
                         {"d_classes", classes}});
  } catch (HypothesisError const& err) {
    return hypothesis_outcome(c, err);
  }
}

// -------------------------------------------------------------- verify

namespace {

void verify_sn(RunConfig const& c, Report& rep) {
  std::size_t const n   = c.n;
  auto const        all = all_permutations(n);
  rep.check("homomorphism", [&] {
    std::vector<Permutation> left;
    if (n <= 4) {
      left = all;
    } else {
      for (std::size_t i = 1; i < n; ++i) {
        left.push_back(Permutation::simple(n, static_cast<int>(i)));
      }
    }
    std::map<Permutation, IntMatrix> cache;
    for (auto const& p : all) {
      cache.emplace(p, sn_matrix(p));
    }
    std::size_t pairs = 0;
    for (auto const& p : left) {
      for (auto const& s : all) {
        ++pairs;
        if (!(cache.at(p * s) == cache.at(p) * cache.at(s))) {
          return std::pair{false, Json{{"pairs", pairs},
                                       {"failure", p.to_string() + " "
                                                       + s.to_string()}}};
        }
      }
    }
    return std::pair{true, Json{{"pairs", pairs}}};
  });
  GelfandCertificate cert;
  cert.model                 = "sn";
  cert.dimension             = involution_count(n);
  cert.expected_simple_count = partition_count(n);
  std::size_t fsum           = 0;
  for (auto const& lambda : integer_partitions(n)) {
    fsum += syt_count(lambda);
  }
  cert.expected_dimension = fsum;
  cert.inner_products     = character_inner_products(sn_character(n), n);
  rep.check("character inner products", [&] {
    bool ok = true;
    Json ip = Json::object();
    for (auto const& [lambda, v] : cert.inner_products) {
      ip[lambda.to_string()] = v.to_string();
      ok                     = ok && v == Rational(1);
    }
    return std::pair{ok, ip};
  });
  rep.check("dimension", [&] {
    return std::pair{cert.dimension == fsum,
                     Json{{"dimension", cert.dimension}, {"sum_f_lambda", fsum}}};
  });
  rep.check("sectors", [&] {
    bool ok     = true;
    Json detail = Json::array();
    for (std::size_t k = 0; 2 * k <= n; ++k) {
      std::set<IntegerPartition> shapes;
      for (auto const& w : enumerate_involutions_sn(n)) {
        if (two_cycle_count(w) == k) {
          shapes.insert(shape(rs_insert(w).insertion));
        }
      }
      bool match = true;
      for (auto const& [lambda, v] :
           character_inner_products(sn_sector_character(n, k), n)) {
        match = match && v == Rational(shapes.contains(lambda) ? 1 : 0);
      }
      ok = ok && match;
      detail.push_back({{"k", k}, {"matches_rs_shapes", match}});
    }
    return std::pair{ok, detail};
  });
  if (commutant_allowed(c, n)) {
    SnModelRep model({n});
    cert.commutant_dimension =
        commutant_dim(specialized(model.generator_matrices(), c.q0, model.dimension()));
    rep.check("gelfand certificate", [&] {
      return std::pair{cert.is_gelfand(), certificate_json(cert)};
    });
  } else {
    rep.skip("gelfand certificate", "commutant above the size limit");
  }
}

void verify_hecke(RunConfig const& c, Report& rep) {
  std::size_t const n = c.n;
  HeckeModelRep     model(n);
  auto const        gens = model.generator_set();
  rep.check("relations", [&] { return run_relations(gens, hecke_relations(n)); });
  rep.check("block types", [&] {
    for (std::size_t i = 1; i < n; ++i) {
      if (auto bad = find_block_type_violation(model, i)) {
        return std::pair{false, Json{{"i", i},
                                     {"basis", model.basis()[*bad].to_string()}}};
      }
    }
    return std::pair{true, Json{{"generators", n - 1}}};
  });
  rep.check("q=1 specialization equals sn-model", [&] {
    for (std::size_t i = 1; i < n; ++i) {
      auto s = sn_matrix(Permutation::simple(n, static_cast<int>(i)));
      if (!(specialize(model.T(i), Rational(1)) == to_rational(s))) {
        return std::pair{false, Json{{"generator", i}}};
      }
    }
    return std::pair{true, Json{{"generators", n - 1}}};
  });
  if (commutant_allowed(c, n)) {
    auto cert = certify("hecke", specialized(model.generators(), c.q0, model.dimension()),
                        partition_count(n), involution_count(n));
    rep.check("gelfand certificate at q0=" + c.q0.to_string(), [&] {
      return std::pair{cert.is_gelfand(), certificate_json(cert)};
    });
  } else {
    rep.skip("gelfand certificate", "commutant above the size limit");
  }
}

void verify_qrook(RunConfig const& c, Report& rep) {
  std::size_t const n = c.n;
  QRookModelRep     model(n);
  auto const        gens = model.generator_set();
  rep.check("relations", [&] {
    auto rels  = hecke_relations(n);
    auto extra = qrook_extra_relations(n);
    rels.insert(rels.end(), extra.begin(), extra.end());
    return run_relations(gens, rels);
  });
  rep.check("grading", [&] {
    for (std::size_t g = 0; g < gens.matrices.size(); ++g) {
      auto const& m = gens.matrices[g];
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t col = 0; col < m.cols(); ++col) {
          if (!m(r, col).is_zero() && model.grade(r) != model.grade(col)) {
            return std::pair{false, Json{{"generator", gens.names[g]},
                                         {"row", r},
                                         {"col", col}}};
          }
        }
      }
    }
    return std::pair{true, Json{{"generators", gens.names.size()}}};
  });
  rep.check("sector dimensions", [&] {
    bool ok     = true;
    Json detail = Json::array();
    for (std::size_t k = 0; k <= n; ++k) {
      std::size_t full = model.sector(k).size();
      std::size_t std_ = model.standard_sector(k).size();
      bool        good = full == binomial(n, k) * std_
                  && std_ == involution_count(n - k);
      ok = ok && good;
      detail.push_back({{"k", k}, {"dim", full}, {"standard_dim", std_}});
    }
    return std::pair{ok, detail};
  });
  rep.check("standard sectors equal hecke-model", [&] {
    for (std::size_t k = 0; k + 2 <= n; ++k) {
      std::size_t const m   = n - k;
      HeckeModelRep     h(m);
      auto const        idx = model.standard_sector(k);
      for (std::size_t i = 1; i < m; ++i) {
        auto const sub = model.T(i).submatrix(idx);
        for (std::size_t r = 0; r < idx.size(); ++r) {
          for (std::size_t col = 0; col < idx.size(); ++col) {
            auto to_sm = [&](std::size_t b) {
              auto const& im = model.basis()[idx[b]].images();
              return h.index_of(
                  Permutation(std::vector<int>(im.begin(), im.begin() + m)));
            };
            if (!(sub(r, col) == h.T(i)(to_sm(r), to_sm(col)))) {
              return std::pair{false, Json{{"k", k}, {"generator", i}}};
            }
          }
        }
      }
    }
    return std::pair{true, Json::object()};
  });
  rep.check("proof case coverage", [&] {
    auto cov = proof_case_coverage(model);
    bool ok  = cov.failures.empty();
    for (int k = 1; k <= 8 && n >= 3; ++k) {
      ok = ok && cov.braid_hits[k] > 0;
    }
    for (int k = 1; k <= 6 && n >= 4; ++k) {
      ok = ok && cov.commuting_hits[k] > 0;
    }
    Json braid(std::vector<std::size_t>(cov.braid_hits.begin() + 1,
                                        cov.braid_hits.end()));
    Json comm(std::vector<std::size_t>(cov.commuting_hits.begin(),
                                       cov.commuting_hits.end()));
    return std::pair{ok, Json{{"braid_cases_1_to_8", braid},
                              {"commuting_cases_0_to_6", comm},
                              {"failures", cov.failures.size()}}};
  });
  rep.check("conjugation equivariance, literal Hecke rule", [&] {
    auto r = conj_equivariance_check(n, HeckeRule::literal);
    return std::pair{r.passed(), Json{{"part_a", r.part_a_instances},
                                      {"part_b", r.part_b_instances},
                                      {"failures", r.failures.size()}}};
  });
  if (n <= 4) {
    rep.check("q=1 specialization equals IS_n model", [&] {
      IsnAdapter     adapter(n);
      SemigroupModel sg(adapter);
      std::vector<std::size_t> to_sg;
      for (auto const& w : model.basis()) {
        to_sg.push_back(*sg.basis_index(adapter.index_of(w)));
      }
      auto compare = [&](QPolyMatrix const& m, std::size_t x) {
        auto const t = sg.matrix(x);
        for (std::size_t r = 0; r < m.rows(); ++r) {
          for (std::size_t col = 0; col < m.cols(); ++col) {
            if (!(m(r, col).specialize(Rational(1))
                  == Rational(t(to_sg[r], to_sg[col])))) {
              return false;
            }
          }
        }
        return true;
      };
      for (std::size_t i = 1; i < n; ++i) {
        auto s = PartialInjection::from_permutation(
            Permutation::simple(n, static_cast<int>(i)));
        if (!compare(model.T(i), adapter.index_of(s))) {
          return std::pair{false, Json{{"generator", "T" + std::to_string(i)}}};
        }
      }
      for (std::size_t i = 1; i <= n; ++i) {
        std::vector<int> tail;
        for (std::size_t x = i + 1; x <= n; ++x) {
          tail.push_back(static_cast<int>(x));
        }
        auto e = PartialInjection::identity_on(n, tail);
        if (!compare(model.P(i), adapter.index_of(e))) {
          return std::pair{false, Json{{"generator", "P" + std::to_string(i)}}};
        }
      }
      return std::pair{true, Json{{"generators", gens.names.size()}}};
    });
  }
  if (commutant_allowed(c, n)) {
    auto cert = certify("qrook", specialized(gens.matrices, c.q0, model.dimension()),
                        sum_partition_counts(n), isn_dimension_formula(n));
    rep.check("gelfand certificate at q0=" + c.q0.to_string(), [&] {
      return std::pair{cert.is_gelfand(), certificate_json(cert)};
    });
  } else {
    rep.skip("gelfand certificate", "commutant above the size limit");
  }
}

void verify_semigroup(RunConfig const& c, Report& rep,
                      SemigroupAdapter const& adapter,
                      SemigroupModel const&   model) {
  TripleSampling sampling{2'000'000, c.seed};
  rep.json()["semigroup_size"] = model.semigroup().size();
  rep.check("module axiom", [&] {
    return run_module_check(module_axiom_check(model, sampling));
  });
  rep.check("sign cocycle", [&] {
    return run_module_check(sign_cocycle_check(model, sampling));
  });
  rep.check("zero propagation", [&] {
    return run_module_check(zero_propagation_check(model, sampling));
  });
  rep.check("dimension", [&] {
    Json detail{{"dimension", model.dimension()},
                {"sum_m_i_involutions", model.expected_dimension()}};
    bool ok = model.dimension() == model.expected_dimension();
    if (c.model == "isn") {
      detail["sum_binomial_t_k"] = isn_dimension_formula(c.n);
      ok = ok && model.dimension() == isn_dimension_formula(c.n);
    }
    return std::pair{ok, detail};
  });
  if (auto const* isn = dynamic_cast<IsnAdapter const*>(&adapter)) {
    rep.check("top D-class equals sn-model", [&] {
      std::size_t compared = 0;
      for (auto const& pi : all_permutations(c.n)) {
        auto const x = isn->index_of(PartialInjection::from_permutation(pi));
        for (auto const& w : enumerate_involutions_sn(c.n)) {
          auto const iw  = isn->index_of(PartialInjection::from_permutation(w));
          auto const got = model.act(x, iw);
          auto const want = sn_act(pi, w);
          ++compared;
          if (!got || got->sign != want.sign
              || got->element
                     != isn->index_of(
                         PartialInjection::from_permutation(want.element))) {
            return std::pair{false, Json{{"pi", pi.to_string()},
                                         {"w", w.to_string()}}};
          }
        }
      }
      return std::pair{true, Json{{"compared", compared}}};
    });
  }
  bool small = is_table(c.model) ? commutant_allowed(c, model.dimension())
                                 : commutant_allowed(c, c.n);
  if (small) {
    std::size_t expected = model.expected_simple_count();
    auto        cert = certify(c.model, specialized(model.matrices(), c.q0, model.dimension()),
                               expected, model.expected_dimension());
    rep.check("gelfand certificate", [&] {
      bool ok = cert.is_gelfand();
      if (c.model == "isn") {
        ok = ok && expected == sum_partition_counts(c.n);
      }
      return std::pair{ok, certificate_json(cert)};
    });
  } else {
    rep.skip("gelfand certificate", "commutant above the size limit");
  }
}

}  // namespace

Outcome cmd_verify(RunConfig const& c) {
  check_config(c);
  Report rep(c);
  if (c.model == "sn") {
    verify_sn(c, rep);
  } else if (c.model == "hecke") {
    verify_hecke(c, rep);
  } else if (c.model == "qrook") {
    verify_qrook(c, rep);
  } else {
    auto adapter = make_adapter(c);
    try {
      SemigroupModel model(*adapter);
      verify_semigroup(c, rep, *adapter, model);
    } catch (HypothesisError const& err) {
      return hypothesis_outcome(c, err);
    }
  }
  return rep.finish();
}

Outcome cmd_decompose(RunConfig const& c) {
  check_config(c);
  if (c.model != "sn") {
    throw CapacityError("decompose supports --model sn only");
  }
  std::size_t const n = c.n;
  Json              j;
  j["command"]  = c.command;
  j["model"]    = c.model;
  j["n"]        = n;
  j["sectors"]  = Json::array();
  bool all_good = true;
  for (std::size_t k = 0; 2 * k <= n; ++k) {
    std::set<IntegerPartition> shapes;
    std::size_t                dim = 0;
    for (auto const& w : enumerate_involutions_sn(n)) {
      if (two_cycle_count(w) == k) {
        ++dim;
        shapes.insert(shape(rs_insert(w).insertion));
      }
    }
    auto chi = sn_sector_character(n, k);
    Json character = Json::object();
    for (auto const& [mu, v] : chi) {
      character[mu.to_string()] = v;
    }
    Json        constituents = Json::object();
    bool        match        = true;
    for (auto const& [lambda, v] : character_inner_products(chi, n)) {
      if (!v.is_zero()) {
        constituents[lambda.to_string()] = v.to_string();
      }
      match = match && v == Rational(shapes.contains(lambda) ? 1 : 0);
    }
    Json rs = Json::array();
    for (auto const& lambda : shapes) {
      rs.push_back(lambda.to_string());
    }
    j["sectors"].push_back({{"k", k},
                            {"dimension", dim},
                            {"character", character},
                            {"constituents", constituents},
                            {"rs_shapes", rs},
                            {"matches_rs_shapes", match}});
    all_good = all_good && match;
  }
  j["verdict"] = all_good ? "pass" : "fail";
  return {j, "", all_good ? kPass : kVerificationFailure};
}

}  // namespace gelfand::cli
