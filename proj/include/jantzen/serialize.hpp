#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "jantzen/example_an.hpp"
#include "jantzen/formulas.hpp"
#include "jantzen/verify.hpp"

namespace jantzen {

using Json = nlohmann::ordered_json;

// -- text helpers ----------------------------------------------------------

/// "0,1" for [0,1]; "e" for the empty word.
std::string word_text(std::span<const int> word);

/// "1,1" for (1,1).
std::string weight_text(const IntVec& coords);

/// Signed combination of basis vectors, e.g. "+1*N(0,1) -1*N(e)"; "0" when empty.
std::string asph_text(const Session& sess, const AsphElement& v);

/// Signed combination of characters, e.g. "+1*chi(0,0)"; "0" when empty.
std::string charvec_text(const CharacterVector& c);

/// Parses "1,-2,0" (or "" / "e" as the empty list). Throws on junk.
IntVec parse_int_list(const std::string& s);
std::vector<int> parse_word(const std::string& s);

// -- JSON ------------------------------------------------------------------

/// [{word, weight, coeff}] sorted by word length, then lexicographically.
Json asph_to_json(const Session& sess, const AsphElement& v);
AsphElement asph_from_json(const Session& sess, const Json& j);

Json charvec_to_json(const CharacterVector& c);
CharacterVector charvec_from_json(const Json& j);

Json jsf_result_to_json(const Session& sess, const JsfResult& r);
JsfResult jsf_result_from_json(const Session& sess, const Json& j);

Json bound_report_to_json(const BoundReport& r);
BoundReport bound_report_from_json(const Json& j);

Json verify_report_to_json(const VerifyReport& r);
Json example_an_to_json(const ExampleAnReport& r);

}  // namespace jantzen
