#ifndef LAWFORGE_JSON_IO_HPP
#define LAWFORGE_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "lawforge/atlas.hpp"
#include "lawforge/bruhat.hpp"
#include "lawforge/law.hpp"
#include "lawforge/matrix.hpp"
#include "lawforge/search.hpp"
#include "lawforge/verify.hpp"

namespace lawforge {

// All reports carry schema_version and serialize with sorted keys, so two
// runs with the same inputs and seeds emit byte-identical JSON.
inline constexpr int kSchemaVersion = 1;

std::string u128_to_string(unsigned __int128 v);

nlohmann::json field_ctx_json(const FieldPtr& ctx);
nlohmann::json field_elem_json(const FieldPtr& ctx, uint32_t code);
nlohmann::json matrix_json(const SquareMatrix& m);

nlohmann::json word_json(const Word& w);
Word word_from_json(const nlohmann::json& j);
/// Accepts either the JSON syllable list or the x1^2*x2 text form.
Word parse_word_flexible(const std::string& input);

nlohmann::json exponent_report_json(const ExponentDecomposition& d,
                                    const std::string& group,
                                    std::optional<uint64_t> brute);
nlohmann::json recipe_json(const LawRecipe& r, const std::string& group);
nlohmann::json verification_json(const VerificationReport& r, const std::string& group,
                                 const Word& w);
nlohmann::json search_json(const SearchResult& r, const std::string& group);
nlohmann::json consistency_json(const ConsistencyReport& r);
nlohmann::json bounds_json(const BoundsReport& r);
nlohmann::json certificate_json(const CertificateResult& r);

}  // namespace lawforge

#endif
