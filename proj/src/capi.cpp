#include "ainf/ainf.h"

#include <cstring>
#include <exception>
#include <stdexcept>
#include <string>
#include <vector>

#include "ainf/checker.hpp"
#include "ainf/combinatorics.hpp"
#include "ainf/hopf.hpp"
#include "ainf/polytope.hpp"
#include "ainf/report_json.hpp"

struct ainf_structure {
  ainf::StructureParams params;
  std::vector<ainf::Corruption> corruptions;
};

struct ainf_report {
  bool passed;
  std::string json_text;
  std::string text;
};

namespace {

thread_local std::string last_error;

ainf_status fail_with(ainf_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <typename Fn>
ainf_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const std::invalid_argument& e) {
    return fail_with(AINF_EINVAL, e.what());
  } catch (const std::overflow_error& e) {
    return fail_with(AINF_ERANGE, e.what());
  } catch (const std::out_of_range& e) {
    return fail_with(AINF_ERANGE, e.what());
  } catch (const std::exception& e) {
    return fail_with(AINF_EINTERNAL, e.what());
  } catch (...) {
    return fail_with(AINF_EINTERNAL, "unknown error");
  }
}

ainf_status emit(const ainf::json& doc, ainf_report** out) {
  auto* r = new ainf_report{doc.value("pass", false), doc.dump(2) + "\n", ainf::render_text(doc)};
  *out = r;
  return r->passed ? AINF_OK : AINF_FAIL;
}

ainf::Prime odd_prime(std::uint32_t p) { return ainf::Prime(p); }

ainf::Certificate run_certificate(const ainf::StructureParams& params,
                                  std::vector<ainf::Corruption> corruptions, std::uint32_t max_j,
                                  std::uint32_t threads) {
  ainf::HopfStructure s(params, std::move(corruptions));
  ainf::SweepOptions opts;
  opts.max_j = max_j ? max_j : ainf::default_max_j(params.p);
  opts.threads = threads;
  return ainf::certify_hopf_ainf(s, opts);
}

}  // namespace

extern "C" {

AINF_API ainf_status ainf_structure_create(uint32_t p, uint32_t m, ainf_structure** out) {
  if (!out) return fail_with(AINF_EINVAL, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    *out = new ainf_structure{ainf::StructureParams(odd_prime(p), m), {}};
    return AINF_OK;
  });
}

AINF_API void ainf_structure_destroy(ainf_structure* s) { delete s; }

AINF_API ainf_status ainf_structure_corrupt(ainf_structure* s, ainf_target target, uint32_t in_i,
                                            uint32_t in_j, const uint32_t* word, size_t word_len,
                                            uint32_t shift) {
  if (!s || (!word && word_len)) return fail_with(AINF_EINVAL, "null argument");
  return guarded([&] {
    if (target != AINF_DELTA2 && target != AINF_DELTA_P)
      throw std::invalid_argument("unknown corruption target");
    if (in_i > 1) throw std::invalid_argument("v exponent must be 0 or 1");
    ainf::TensorWord w;
    for (size_t t = 0; t < word_len; ++t) {
      if (word[2 * t] > 1) throw std::invalid_argument("v exponent must be 0 or 1");
      w.push_back({static_cast<std::uint8_t>(word[2 * t]), word[2 * t + 1]});
    }
    const auto tgt = target == AINF_DELTA2 ? ainf::Corruption::Target::delta2
                                           : ainf::Corruption::Target::delta_p;
    const std::size_t expected = target == AINF_DELTA2 ? 2 : s->params.p.value();
    if (w.size() != expected) throw std::invalid_argument("corruption word has the wrong length");
    s->corruptions.push_back({tgt, {static_cast<std::uint8_t>(in_i), in_j}, std::move(w), shift});
    return AINF_OK;
  });
}

AINF_API ainf_status ainf_certify(const ainf_structure* s, uint32_t max_j, uint32_t threads,
                                  ainf_report** out) {
  if (!s || !out) return fail_with(AINF_EINVAL, "null argument");
  *out = nullptr;
  return guarded([&] {
    return emit(ainf::certificate_json(run_certificate(s->params, s->corruptions, max_j, threads)),
                out);
  });
}

AINF_API ainf_status ainf_diagonal(const char* polytope, int n, ainf_report** out) {
  if (!polytope || !out) return fail_with(AINF_EINVAL, "null argument");
  *out = nullptr;
  return guarded([&] {
    if (n < 1 || n > ainf::kMaxPermutahedron)
      throw std::invalid_argument("n must lie in [1, " + std::to_string(ainf::kMaxPermutahedron) +
                                  "], got " + std::to_string(n));
    const auto top = ainf::OrderedPartition::top(n);
    const std::string kind = polytope;
    if (kind == "perm") {
      const auto d = ainf::diagonal_P(top);
      return emit(ainf::perm_diagonal_json(n, d, ainf::diagonal_P_commutes_with_boundary(top)), out);
    }
    if (kind == "assoc") {
      const auto d = ainf::diagonal_P(top);
      std::size_t degenerate = 0;
      for (const auto& [a, b] : d)
        if (!ainf::tonks_projection(a) || !ainf::tonks_projection(b)) ++degenerate;
      return emit(ainf::assoc_diagonal_json(n, ainf::project(d), degenerate,
                                            ainf::diagonal_K_commutes_with_boundary(n)),
                  out);
    }
    throw std::invalid_argument("polytope must be 'perm' or 'assoc', got '" + kind + "'");
  });
}

AINF_API ainf_status ainf_factors(uint32_t p, uint32_t count, int certify, uint32_t max_j,
                                  uint32_t threads, ainf_report** out) {
  if (!out) return fail_with(AINF_EINVAL, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    const auto prime = odd_prime(p);
    const auto factors = ainf::em_factors_n3(prime, count);
    std::vector<std::optional<ainf::Certificate>> certs(factors.size());
    if (certify)
      for (std::size_t i = 0; i < factors.size(); ++i)
        certs[i] = run_certificate(factors[i], {}, max_j, threads);
    auto doc = ainf::factors_json(prime, factors, certs);
    return emit(doc, out);
  });
}

AINF_API ainf_status ainf_lemma(uint32_t p, uint64_t trials, uint64_t seed, ainf_report** out) {
  if (!out) return fail_with(AINF_EINVAL, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    if (trials == 0) throw std::invalid_argument("trials must be >= 1");
    return emit(ainf::lemma_json(ainf::lemma_sweep(odd_prime(p), trials, seed)), out);
  });
}

AINF_API int ainf_report_passed(const ainf_report* r) { return r && r->passed ? 1 : 0; }

AINF_API const char* ainf_report_json(const ainf_report* r) { return r ? r->json_text.c_str() : ""; }

AINF_API const char* ainf_report_text(const ainf_report* r) { return r ? r->text.c_str() : ""; }

AINF_API void ainf_report_destroy(ainf_report* r) { delete r; }

AINF_API const char* ainf_last_error(void) { return last_error.c_str(); }

AINF_API const char* ainf_version(void) { return "1.0.0"; }

}  // extern "C"
