#include "jantzen/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace jantzen {

std::string word_text(std::span<const int> word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(word[i]);
  }
  return out;
}

std::string weight_text(const IntVec& coords) {
  std::string out;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords[i]);
  }
  return out;
}

namespace {

// terms ordered by word length, then lexicographically by word
std::vector<std::pair<std::vector<int>, const AsphElement::Term*>> sorted_terms(
    const Session& sess, const AsphElement& v) {
  std::vector<std::pair<std::vector<int>, const AsphElement::Term*>> rows;
  for (const auto& [key, term] : v.terms())
    rows.push_back({reduced_word(sess, term.rep), &term});
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return rows;
}

std::string signed_coeff(Int c) {
  return (c >= 0 ? "+" : "-") + std::to_string(c >= 0 ? c : -c);
}

}  // namespace

std::string asph_text(const Session& sess, const AsphElement& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& [word, term] : sorted_terms(sess, v)) {
    if (!out.empty()) out += " ";
    out += signed_coeff(term->coeff) + "*N(" + word_text(word) + ")";
  }
  return out;
}

std::string charvec_text(const CharacterVector& c) {
  if (c.is_zero()) return "0";
  std::string out;
  for (const auto& [w, coeff] : c.terms()) {
    if (!out.empty()) out += " ";
    out += signed_coeff(coeff) + "*chi(" + weight_text(w) + ")";
  }
  return out;
}

IntVec parse_int_list(const std::string& s) {
  IntVec out;
  if (s.empty() || s == "e") return out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    const std::string item = s.substr(pos, next - pos);
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse integer list entry '" + item + "'");
    }
    pos = next + 1;
  }
  return out;
}

std::vector<int> parse_word(const std::string& s) {
  std::vector<int> out;
  for (Int v : parse_int_list(s)) {
    if (v < 0 || v > 1000) throw std::invalid_argument("generator index out of range");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

Json asph_to_json(const Session& sess, const AsphElement& v) {
  Json arr = Json::array();
  for (const auto& [word, term] : sorted_terms(sess, v)) {
    Json entry;
    entry["word"] = word;
    entry["weight"] = p_dot(sess, term->rep, Weight::zero(sess.rank())).fw;
    entry["coeff"] = term->coeff;
    arr.push_back(std::move(entry));
  }
  return arr;
}

AsphElement asph_from_json(const Session& sess, const Json& j) {
  AsphElement out;
  for (const auto& entry : j) {
    std::vector<int> word = entry.at("word").get<std::vector<int>>();
    AffineElement rep = element_from_word(sess, word);
    if (!is_min_rep(sess, rep))
      throw std::invalid_argument("word does not denote a minimal coset representative");
    Weight key = p_dot(sess, rep, Weight::zero(sess.rank()));
    if (entry.contains("weight") && key.fw != entry.at("weight").get<IntVec>())
      throw std::invalid_argument("weight does not match the word");
    out.add(key, entry.at("coeff").get<Int>(), rep);
  }
  return out;
}

Json charvec_to_json(const CharacterVector& c) {
  Json arr = Json::array();
  for (const auto& [w, coeff] : c.terms()) {
    Json entry;
    entry["weight"] = w;
    entry["coeff"] = coeff;
    arr.push_back(std::move(entry));
  }
  return arr;
}

CharacterVector charvec_from_json(const Json& j) {
  CharacterVector out;
  for (const auto& entry : j)
    out.add(Weight{entry.at("weight").get<IntVec>()}, entry.at("coeff").get<Int>());
  return out;
}

Json jsf_result_to_json(const Session& sess, const JsfResult& r) {
  Json j;
  j["lambda"] = r.lambda;
  j["p"] = r.p;
  j["method"] = r.method;
  j["character"] = charvec_to_json(r.character);
  if (r.asph) j["asph"] = asph_to_json(sess, *r.asph);
  if (r.verdict) j["verdict"] = *r.verdict;
  return j;
}

JsfResult jsf_result_from_json(const Session& sess, const Json& j) {
  JsfResult r;
  r.lambda = j.at("lambda").get<IntVec>();
  r.p = j.at("p").get<Int>();
  r.method = j.at("method").get<std::string>();
  r.character = charvec_from_json(j.at("character"));
  if (j.contains("asph")) r.asph = asph_from_json(sess, j.at("asph"));
  if (j.contains("verdict")) r.verdict = j.at("verdict").get<std::string>();
  return r;
}

Json bound_report_to_json(const BoundReport& r) {
  Json j;
  j["length_bound_sum"] = r.length_bound_sum;
  j["length_bound_exp"] = r.length_bound_exp;
  Json steps = Json::array();
  for (const BoundStep& s : r.per_step) {
    Json entry;
    entry["prefix"] = s.prefix;
    entry["contribution"] = s.contribution;
    entry["running"] = s.running;
    steps.push_back(std::move(entry));
  }
  j["per_step"] = std::move(steps);
  return j;
}

BoundReport bound_report_from_json(const Json& j) {
  BoundReport r;
  r.length_bound_sum = j.at("length_bound_sum").get<Int>();
  r.length_bound_exp = j.at("length_bound_exp").get<Int>();
  for (const auto& entry : j.at("per_step")) {
    BoundStep s;
    s.prefix = entry.at("prefix").get<std::vector<int>>();
    s.contribution = entry.at("contribution").get<Int>();
    s.running = entry.at("running").get<Int>();
    r.per_step.push_back(std::move(s));
  }
  return r;
}

Json verify_report_to_json(const VerifyReport& r) {
  Json j;
  Json suites = Json::array();
  for (const SuiteResult& s : r.suites) {
    Json entry;
    entry["name"] = s.name;
    entry["checked"] = s.checked;
    entry["failures"] = s.failures;
    if (!s.first_counterexample.empty()) entry["counterexample"] = s.first_counterexample;
    suites.push_back(std::move(entry));
  }
  j["suites"] = std::move(suites);
  j["all_pass"] = r.all_pass();
  return j;
}

Json example_an_to_json(const ExampleAnReport& r) {
  Json j;
  j["n"] = r.n;
  j["p"] = r.p;
  j["lambda"] = r.lambda;
  Json rows = Json::array();
  for (const ExampleAnRow& row : r.rows) {
    Json entry;
    entry["i"] = row.i;
    entry["weight"] = row.weight;
    entry["weight_ok"] = row.weight_ok;
    entry["lambda_i_ok"] = row.lambda_i_ok;
    entry["reflection_ok"] = row.reflection_ok;
    entry["jsf_ok"] = row.jsf_ok;
    entry["chain_bound"] = row.chain_bound;
    entry["bound_ok"] = row.bound_ok;
    rows.push_back(std::move(entry));
  }
  j["rows"] = std::move(rows);
  j["pass"] = r.pass;
  return j;
}

}  // namespace jantzen
