#include "lawforge/json_io.hpp"

#include <algorithm>

namespace lawforge {

using nlohmann::json;

std::string u128_to_string(unsigned __int128 v) {
  if (v == 0) return "0";
  std::string out;
  while (v) {
    out.push_back(char('0' + int(v % 10)));
    v /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

json field_ctx_json(const FieldPtr& ctx) {
  return json{{"p", ctx->p()}, {"m", ctx->m()}, {"modulus", ctx->modulus()}};
}

json field_elem_json(const FieldPtr& ctx, uint32_t code) { return json(ctx->decode(code)); }

json matrix_json(const SquareMatrix& m) {
  json rows = json::array();
  for (uint32_t i = 0; i < m.n(); ++i) {
    json row = json::array();
    for (uint32_t j = 0; j < m.n(); ++j) row.push_back(field_elem_json(m.ctx(), m.at(i, j)));
    rows.push_back(row);
  }
  return json{{"n", m.n()}, {"field", field_ctx_json(m.ctx())}, {"rows", rows}};
}

json word_json(const Word& w) {
  json out = json::array();
  for (const Syllable& s : w.syllables()) out.push_back(json::array({s.gen, s.exp}));
  return out;
}

Word word_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("word JSON must be an array of [gen, exp] pairs");
  std::vector<Syllable> syl;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("word JSON entries must be [gen, exp] pairs");
    syl.push_back({pair[0].get<int32_t>(), pair[1].get<int64_t>()});
  }
  return Word::from_syllables(syl);
}

Word parse_word_flexible(const std::string& input) {
  size_t i = 0;
  while (i < input.size() && std::isspace(uint8_t(input[i]))) ++i;
  if (i < input.size() && input[i] == '[') return word_from_json(json::parse(input));
  return Word::parse_text(input);
}

json exponent_report_json(const ExponentDecomposition& d, const std::string& group,
                          std::optional<uint64_t> brute) {
  json out{{"schema_version", kSchemaVersion},
           {"group", group},
           {"n", d.n},
           {"q", d.q},
           {"p", d.p},
           {"e", d.e},
           {"p_part", d.p_part},
           {"lcm_part", u128_to_string(d.lcm_part)},
           {"formula_str", u128_to_string(d.total)}};
  if (auto v = d.total_u64()) out["formula"] = *v;
  if (brute) {
    out["brute_force"] = *brute;
    out["agree"] = d.total == (unsigned __int128)*brute;
  }
  return out;
}

json recipe_json(const LawRecipe& r, const std::string& group) {
  json blocks = json::array();
  for (const Word& b : r.blocks) blocks.push_back(b.to_text());
  json out{{"schema_version", kSchemaVersion},
           {"group", group},
           {"schedule", r.schedule},
           {"m", r.m},
           {"k", r.k},
           {"blocks", blocks},
           {"tree", r.tree_shape},
           {"word", r.word.to_text()},
           {"word_json", word_json(r.word)},
           {"formal_length", r.formal_length},
           {"reduced_length", r.reduced_length},
           {"tree_bound", r.tree_bound},
           {"bounds_hold", r.bounds_hold}};
  if (r.group_bound) out["group_bound"] = *r.group_bound;
  return out;
}

json verification_json(const VerificationReport& r, const std::string& group, const Word& w) {
  json out{{"schema_version", kSchemaVersion},
           {"group", group},
           {"word", w.to_text()},
           {"mode", r.mode},
           {"verdict", verdict_name(r.verdict)},
           {"tuples_checked", r.tuples_checked},
           {"word_length", r.word_length},
           {"multiplications", r.multiplications},
           {"parity_note", r.parity_note},
           {"support", r.support}};
  if (r.seed) out["seed"] = *r.seed;
  if (r.counterexample_index) out["counterexample_index"] = *r.counterexample_index;
  if (!r.counterexample.empty()) {
    json tuple = json::array();
    for (const auto& m : r.counterexample) tuple.push_back(matrix_json(m));
    out["counterexample"] = tuple;
  }
  return out;
}

json search_json(const SearchResult& r, const std::string& group) {
  json witnesses = json::array();
  for (const Word& w : r.witnesses) witnesses.push_back(w.to_text());
  json pruned = json::array();
  for (const Word& w : r.pruned_sample) pruned.push_back(w.to_text());
  json out{{"schema_version", kSchemaVersion},
           {"group", group},
           {"searched_to", r.searched_to},
           {"witnesses", witnesses},
           {"words_tested", r.words_tested},
           {"candidates_enumerated", r.candidates_enumerated},
           {"pruned_by_parity", r.pruned_by_parity},
           {"pruned_by_exponent_sum", r.pruned_by_exponent_sum},
           {"pruned_sample", pruned},
           {"exponent", r.exponent}};
  if (r.alpha)
    out["alpha"] = *r.alpha;
  else
    out["alpha"] = nullptr;
  return out;
}

json consistency_json(const ConsistencyReport& r) {
  return json{{"schema_version", kSchemaVersion},
              {"group", r.group},
              {"alpha_or_floor", r.alpha_or_floor},
              {"alpha_exact", r.alpha_exact},
              {"bound", json{{"num", r.bound_numerator}, {"den", r.bound_denominator}}},
              {"bound_ceiling", r.bound_ceiling},
              {"consistent", r.consistent}};
}

namespace {

json bound_side_json(const BoundSide& b) {
  json out{{"closed_form", b.closed_form},
           {"approx", b.approx},
           {"log10", std::isfinite(b.log10) ? json(b.log10) : json(nullptr)},
           {"source", b.source}};
  if (b.exact) out["exact"] = json{{"num", b.exact->num}, {"den", b.exact->den}};
  if (b.ceiling) out["ceiling"] = *b.ceiling;
  if (b.strict_floor) out["min_if_strict"] = *b.strict_floor;
  return out;
}

}  // namespace

json bounds_json(const BoundsReport& r) {
  json out{{"schema_version", kSchemaVersion},
           {"family", family_name(r.spec.family)},
           {"rank", r.spec.rank},
           {"q", r.spec.q},
           {"q_star", r.q_star},
           {"untwisted_rank", r.spec.untwisted_rank()},
           {"lie_algebra_dim", r.spec.lie_algebra_dim()},
           {"lower", bound_side_json(r.lower)},
           {"upper", json{{"closed_form", r.upper.closed_form},
                          {"decimal", r.upper.decimal},
                          {"log10", r.upper.log10},
                          {"source", r.upper.source}}},
           {"lower_below_upper", r.lower_below_upper}};
  if (r.lower_chain) {
    out["lower_chain"] = json{{"stages", r.lower_chain->stages},
                              {"terminal_rank", r.lower_chain->terminal_rank},
                              {"terminal_field_power", r.lower_chain->terminal_field_power},
                              {"implies_generic_lower", r.lower_chain->implies_generic_lower},
                              {"characteristic_note", r.lower_chain->characteristic_note}};
  } else {
    out["lower_chain"] = nullptr;
  }
  out["upper_chain"] = json{{"stages", r.upper_chain.stages},
                            {"carrier_dim", r.upper_chain.carrier_dim},
                            {"carrier_field_power", r.upper_chain.carrier_field_power},
                            {"final_dim", r.upper_chain.final_dim},
                            {"dim_within_31r", r.upper_chain.dim_within_31r},
                            {"constructed_log10", r.upper_chain.constructed_log10},
                            {"within_headline_bound", r.upper_chain.within_headline_bound}};
  return out;
}

json certificate_json(const CertificateResult& r) {
  json table = json::array();
  for (const auto& o : r.table) {
    json row{{"choice", o.choice},
             {"t_formally_zero", o.t_formally_zero},
             {"degree", o.degree},
             {"variable_count", o.variable_count}};
    if (o.entry) row["entry"] = json::array({o.entry->first, o.entry->second});
    if (o.root_bound) row["root_bound"] = *o.root_bound;
    table.push_back(row);
  }
  json out{{"schema_version", kSchemaVersion},
           {"q", r.q},
           {"word", r.input_word.to_text()},
           {"certified_word", r.certified_word.to_text()},
           {"psl_mode", r.psl_mode},
           {"certified_length", r.certified_length},
           {"degree_bound", r.degree_bound},
           {"substitutions", table},
           {"case_i", r.case_i},
           {"implied_lower", json{{"num", r.implied_lower.num}, {"den", r.implied_lower.den}}},
           {"length_consistent", r.length_consistent}};
  if (r.witness) out["witness_substitution"] = *r.witness;
  return out;
}

}  // namespace lawforge
