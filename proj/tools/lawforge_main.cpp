// lawforge: construct, verify and bound short identities of the finite
// special linear and projective special linear groups, plus the bound atlas
// for the other families of finite simple groups of Lie type.
//
// Exit codes: 0 success, 2 mathematical failure (counterexample found, bound
// refuted), 1 tool failure (bad flags, budget, malformed input).

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <thread>

#include "lawforge/json_io.hpp"

using namespace lawforge;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTool = 1;
constexpr int kExitMath = 2;

void emit(const json& report, const std::string& mode, const std::string& text_summary) {
  if (mode == "text")
    std::cout << text_summary << "\n";
  else
    std::cout << report.dump(2) << "\n";
}

Word load_word(const std::string& inline_word, const std::string& word_file) {
  if (!inline_word.empty() && !word_file.empty())
    throw CLI::ValidationError("give either --word or --word-file, not both");
  if (!inline_word.empty()) return parse_word_flexible(inline_word);
  if (!word_file.empty()) {
    std::ifstream in(word_file);
    if (!in) throw std::runtime_error("cannot open word file: " + word_file);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_word_flexible(content);
  }
  throw CLI::ValidationError("a word is required (--word or --word-file)");
}

unsigned effective_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

int run_exponent(const std::string& group, const std::string& mode) {
  GroupHandle h = GroupHandle::parse(group);
  if (h.kind() != GroupKind::SL)
    throw std::runtime_error("exponent: the closed formula covers SL descriptors only");
  ExponentDecomposition d = sl_exponent(h.n(), h.ctx());
  std::optional<uint64_t> brute;
  GroupHandle sl(GroupKind::SL, h.n(), h.ctx());
  if (sl.enumerable()) brute = brute_exponent(sl);
  json rep = exponent_report_json(d, sl.describe(), brute);
  bool agree = !brute || d.total == (unsigned __int128)*brute;
  emit(rep, mode,
       sl.describe() + ": exponent " + u128_to_string(d.total) +
           (brute ? (agree ? " (brute force agrees)" : " (BRUTE FORCE DISAGREES)") : ""));
  return agree ? kExitOk : kExitMath;
}

int run_build_law(const std::string& group, const std::string& mode, const std::string& verify,
                  uint64_t samples, uint64_t seed, unsigned jobs) {
  GroupHandle h = GroupHandle::parse(group);
  if (h.kind() == GroupKind::GL)
    throw std::runtime_error("build-law: identities are constructed for SL/PSL descriptors");
  LawRecipe r = build_sl_identity(h.n(), h.ctx());
  json rep = recipe_json(r, h.describe());
  int exit_code = r.bounds_hold ? kExitOk : kExitMath;
  if (verify != "none") {
    VerificationReport vr = verify == "exhaustive"
                                ? verify_exhaustive(r.word, h, default_budget(), jobs)
                                : verify_randomized(r.word, h, samples, seed, jobs);
    rep["verification"] = verification_json(vr, h.describe(), r.word);
    if (vr.verdict == Verdict::Counterexample) exit_code = kExitMath;
  }
  emit(rep, mode,
       h.describe() + ": identity of reduced length " + std::to_string(r.reduced_length) +
           " (formal " + std::to_string(r.formal_length) + ", bound " +
           std::to_string(r.group_bound ? *r.group_bound : r.tree_bound) + ")");
  return exit_code;
}

int run_verify(const std::string& group, const std::string& inline_word,
               const std::string& word_file, const std::string& vmode, uint64_t samples,
               uint64_t seed, unsigned jobs, const std::string& mode) {
  GroupHandle h = GroupHandle::parse(group);
  Word w = load_word(inline_word, word_file);
  VerificationReport r =
      verify_with_parity(w, h, vmode == "exhaustive", samples, seed, default_budget(), jobs);
  emit(verification_json(r, h.describe(), w), mode,
       h.describe() + ": " + verdict_name(r.verdict) + " after " +
           std::to_string(r.tuples_checked) + " tuples" +
           (r.parity_note ? " (parity filter)" : ""));
  return r.verdict == Verdict::Counterexample ? kExitMath : kExitOk;
}

int run_search(const std::string& group, int32_t max_len, int32_t max_gens, uint64_t seed,
               unsigned jobs, const std::string& mode) {
  GroupHandle h = GroupHandle::parse(group);
  SearchConfig cfg;
  cfg.max_length = max_len;
  cfg.max_generators = max_gens;
  cfg.prune_sample_seed = seed;
  cfg.jobs = jobs;
  SearchResult r = shortest_law(h, cfg);
  json rep = search_json(r, h.describe());
  int exit_code = kExitOk;
  if (h.kind() == GroupKind::SL || h.kind() == GroupKind::PSL) {
    ConsistencyReport c = lower_bound_consistency(h, r);
    rep["lower_bound_consistency"] = consistency_json(c);
    if (!c.consistent) exit_code = kExitMath;
  }
  emit(rep, mode,
       h.describe() + ": alpha " + (r.alpha ? std::to_string(*r.alpha) : "> " + std::to_string(r.searched_to)) +
           ", " + std::to_string(r.witnesses.size()) + " witness(es)");
  return exit_code;
}

int run_bounds(const std::string& family, uint32_t rank, uint64_t q, const std::string& mode) {
  GroupSpec spec{parse_family(family), rank, q};
  BoundsReport r = alpha_bounds(spec);
  emit(bounds_json(r), mode,
       spec.describe() + ": lower " + r.lower.closed_form + " ~ " + std::to_string(r.lower.approx) +
           ", upper " + r.upper.closed_form + " = " + r.upper.decimal);
  bool checks = r.lower_below_upper && r.upper_chain.dim_within_31r &&
                (!r.lower_chain || r.lower_chain->implies_generic_lower);
  return checks ? kExitOk : kExitMath;
}

int run_certify(uint64_t q, const std::string& inline_word, const std::string& word_file,
                bool psl, const std::string& mode) {
  uint32_t p = 0;
  uint64_t t = q;
  for (uint64_t d = 2; d * d <= t; ++d)
    if (t % d == 0) {
      p = uint32_t(d);
      break;
    }
  uint32_t m = 0;
  if (p == 0) {
    p = uint32_t(q);
    m = 1;
  } else {
    m = 0;
    while (t % p == 0) {
      t /= p;
      ++m;
    }
    if (t != 1) throw std::runtime_error("certify: q must be a prime power");
  }
  auto ctx = FieldCtx::make(p, m);
  Word w = load_word(inline_word, word_file);
  CertificateResult r = certify_lower_bound(w, ctx, psl);
  emit(certificate_json(r), mode,
       "q=" + std::to_string(q) + ": " +
           (r.case_i ? "all substitutions formally zero (investigate: generic law)"
                     : "nonzero T found; implied lower bound " +
                           std::to_string(r.implied_lower.num) + "/" +
                           std::to_string(r.implied_lower.den)) +
           (r.length_consistent ? "" : " -- REFUTES the identity claim"));
  return r.length_consistent ? kExitOk : kExitMath;
}

int run_embed(uint64_t base_q, uint64_t samples, uint64_t seed, bool exhaustive,
              const std::string& mode) {
  if (!is_prime(base_q)) throw std::runtime_error("embed: base field must be prime for the blow-up");
  auto base = FieldCtx::make(uint32_t(base_q), 1);
  auto ext = FieldCtx::make(uint32_t(base_q), 2);
  GroupHandle h(GroupKind::SL, 2, ext);

  uint64_t pairs = 0, det_ok = 0, hom_ok = 0;
  auto check_pair = [&](const SquareMatrix& x, const SquareMatrix& y) {
    ++pairs;
    SquareMatrix bx = blow_up(x, base), by = blow_up(y, base);
    if (bx.det() == base->one() && by.det() == base->one()) ++det_ok;
    if (blow_up(x.mul(y), base) == bx.mul(by)) ++hom_ok;
  };
  if (exhaustive) {
    const auto& els = h.elements();
    for (const auto& x : els)
      for (const auto& y : els) check_pair(x, y);
  } else {
    std::mt19937_64 rng(seed);
    for (uint64_t i = 0; i < samples; ++i) check_pair(h.sample_with(rng), h.sample_with(rng));
  }
  bool ok = det_ok == pairs && hom_ok == pairs;
  json rep{{"schema_version", kSchemaVersion},
           {"from", h.describe()},
           {"to", "SL(" + std::to_string(2 * ext->m()) + "," + std::to_string(base_q) + ")"},
           {"pairs_checked", pairs},
           {"determinant_ok", det_ok == pairs},
           {"homomorphism_ok", hom_ok == pairs},
           {"mode", exhaustive ? "exhaustive" : "random"},
           {"seed", seed}};
  emit(rep, mode,
       h.describe() + " -> SL(4," + std::to_string(base_q) + "): " +
           (ok ? "embedding checks pass" : "EMBEDDING CHECKS FAIL") + " on " +
           std::to_string(pairs) + " pairs");
  return ok ? kExitOk : kExitMath;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"short identities in finite simple groups of Lie type"};
  app.require_subcommand(1);

  std::string group, word, word_file, family;
  std::string emit_mode = "json";
  std::string verify_mode = "exhaustive";
  std::string build_verify = "none";
  uint64_t samples = 100000, seed = 0, q = 2;
  uint32_t rank = 1;
  int32_t max_len = 0, max_gens = 0;
  unsigned jobs = 0;
  bool psl = false, exhaustive = false, json_flag = false;

  auto add_emit = [&](CLI::App* cmd) {
    cmd->add_option("--emit", emit_mode, "output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd->add_flag("--json", json_flag, "force JSON output");
  };

  auto* c_exp = app.add_subcommand("exponent", "group exponent: formula vs brute force");
  c_exp->add_option("--group", group, "group descriptor, e.g. SL(3,2)")->required();
  add_emit(c_exp);

  auto* c_build = app.add_subcommand("build-law", "construct the explicit identity");
  c_build->add_option("--group", group)->required();
  c_build->add_option("--verify", build_verify, "none|exhaustive|random")
      ->check(CLI::IsMember({"none", "exhaustive", "random"}));
  c_build->add_option("--samples", samples);
  c_build->add_option("--seed", seed);
  c_build->add_option("--jobs", jobs);
  add_emit(c_build);

  auto* c_verify = app.add_subcommand("verify", "test whether a word is an identity");
  c_verify->add_option("--group", group)->required();
  c_verify->add_option("--word", word);
  c_verify->add_option("--word-file", word_file);
  c_verify->add_option("--mode", verify_mode, "exhaustive|random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  c_verify->add_option("--samples", samples);
  c_verify->add_option("--seed", seed);
  c_verify->add_option("--jobs", jobs);
  add_emit(c_verify);

  auto* c_search = app.add_subcommand("search", "shortest-law search for tiny groups");
  c_search->add_option("--group", group)->required();
  c_search->add_option("--max-len", max_len);
  c_search->add_option("--max-gens", max_gens);
  c_search->add_option("--seed", seed);
  c_search->add_option("--jobs", jobs);
  c_search->add_option("--report", emit_mode, "json|text")
      ->check(CLI::IsMember({"json", "text"}));
  add_emit(c_search);

  auto* c_bounds = app.add_subcommand("bounds", "two-sided bounds and embedding chains");
  c_bounds->add_option("--family", family, "A,B,C,D,E6,E7,E8,F4,G2,2A,2D,3D4,2E6,2F4,2G2,2B2")
      ->required();
  c_bounds->add_option("--rank", rank)->required();
  c_bounds->add_option("--q", q)->required();
  add_emit(c_bounds);

  auto* c_cert = app.add_subcommand("certify", "Bruhat degree certificate for SL2(q)/PSL2(q)");
  c_cert->add_option("--q", q)->required();
  c_cert->add_option("--word", word);
  c_cert->add_option("--word-file", word_file);
  c_cert->add_flag("--psl", psl, "certify an alpha(PSL2(q)) claim via the squared word");
  add_emit(c_cert);

  auto* c_embed = app.add_subcommand("embed", "field blow-up SL2(p^2) -> SL4(p)");
  c_embed->add_option("--q", q, "prime base field");
  c_embed->add_option("--samples", samples);
  c_embed->add_option("--seed", seed);
  c_embed->add_flag("--exhaustive", exhaustive);
  add_emit(c_embed);

  CLI11_PARSE(app, argc, argv);

  try {
    std::string mode = json_flag ? "json" : emit_mode;
    if (*c_exp) return run_exponent(group, mode);
    if (*c_build)
      return run_build_law(group, mode, build_verify, samples, seed, effective_jobs(jobs));
    if (*c_verify)
      return run_verify(group, word, word_file, verify_mode, samples, seed, effective_jobs(jobs),
                        mode);
    if (*c_search) return run_search(group, max_len, max_gens, seed, effective_jobs(jobs), mode);
    if (*c_bounds) return run_bounds(family, rank, q, mode);
    if (*c_cert) return run_certify(q, word, word_file, psl, mode);
    if (*c_embed) return run_embed(q, samples, seed, exhaustive, mode);
  } catch (const std::exception& e) {
    std::cerr << "lawforge: " << e.what() << "\n";
    return kExitTool;
  }
  return kExitTool;
}
