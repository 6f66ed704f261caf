#include "monoidlab/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace monoidlab {

namespace {

nlohmann::json read_json_source(const std::string& spec) {
  if (spec.empty()) throw std::runtime_error("empty spec string");
  std::string text = spec;
  if (spec.front() != '{') {
    std::ifstream in(spec);
    if (!in) throw std::runtime_error("cannot open spec file: " + spec);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  nlohmann::json j = nlohmann::json::parse(text);  // throws parse_error
  if (!j.is_object()) throw std::runtime_error("spec JSON must be an object");
  return j;
}

std::optional<std::pair<std::string, std::uint32_t>> split_shorthand(const std::string& s) {
  const auto pos = s.find(':');
  if (pos == std::string::npos) return std::nullopt;
  const std::string head = s.substr(0, pos);
  const std::string tail = s.substr(pos + 1);
  if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
    return std::nullopt;
  return std::make_pair(head, static_cast<std::uint32_t>(std::stoul(tail)));
}

}  // namespace

PreorderChoice parse_preorder_choice(const std::string& s) {
  if (s == "divisibility") return PreorderChoice::divisibility;
  if (s == "left") return PreorderChoice::left;
  if (s == "right") return PreorderChoice::right;
  if (s == "custom") return PreorderChoice::custom;
  throw std::runtime_error("unknown preorder: " + s +
                           " (expected divisibility|left|right|custom)");
}

namespace {

LoadedMonoid loaded_from(FiniteMonoid monoid, std::string source) {
  return LoadedMonoid{std::move(monoid), std::nullopt, std::move(source)};
}

}  // namespace

LoadedMonoid monoid_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  LoadedMonoid out = loaded_from(trivial_monoid(), kind);
  if (kind == "cayley") {
    auto table = j.at("table").get<std::vector<std::vector<Element>>>();
    const auto identity = j.at("identity").get<Element>();
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
    out.monoid = FiniteMonoid::from_cayley_table(std::move(table), identity, std::move(labels));
    out.source = "cayley";
  } else if (kind == "mul_mod") {
    const auto n = j.at("modulus").get<std::uint32_t>();
    out.monoid = mul_mod(n);
    out.source = "mul_mod:" + std::to_string(n);
  } else if (kind == "power_monoid") {
    const auto n = j.at("modulus").get<std::uint32_t>();
    out.monoid = reduced_power_monoid(n);
    out.source = "power:" + std::to_string(n);
  } else {
    throw std::runtime_error("unknown monoid spec kind: " + kind);
  }
  if (j.contains("preorder")) {
    std::vector<std::pair<Element, Element>> pairs;
    for (const auto& p : j.at("preorder")) {
      if (!p.is_array() || p.size() != 2)
        throw std::runtime_error("preorder entries must be [x, y] pairs");
      pairs.emplace_back(p[0].get<Element>(), p[1].get<Element>());
    }
    out.custom_preorder = std::move(pairs);
  }
  return out;
}

LoadedMonoid load_monoid_spec(const std::string& spec) {
  if (auto sh = split_shorthand(spec)) {
    const auto& [head, value] = *sh;
    if (head == "mul_mod") return loaded_from(mul_mod(value), spec);
    if (head == "power" || head == "power_monoid")
      return loaded_from(reduced_power_monoid(value), spec);
    if (head == "trivial") return loaded_from(trivial_monoid(), spec);
  }
  LoadedMonoid out = monoid_from_json(read_json_source(spec));
  if (!spec.empty() && spec.front() != '{') out.source = spec;
  return out;
}

Premon build_premon(const LoadedMonoid& loaded, PreorderChoice choice,
                    std::uint32_t* closure_added) {
  if (closure_added) *closure_added = 0;
  switch (choice) {
    case PreorderChoice::divisibility:
      return divisibility_premon(loaded.monoid);
    case PreorderChoice::left:
      return left_divisibility_premon(loaded.monoid);
    case PreorderChoice::right:
      return right_divisibility_premon(loaded.monoid);
    case PreorderChoice::custom:
      if (!loaded.custom_preorder)
        throw std::runtime_error(
            "custom preorder requested but the monoid spec has no \"preorder\" list");
      return premon_from_pairs(loaded.monoid, *loaded.custom_preorder, closure_added);
  }
  throw std::logic_error("unreachable preorder choice");
}

Presentation presentation_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "guba") return guba_example(j.at("N").get<std::uint32_t>());
  if (kind != "presentation")
    throw std::runtime_error("unknown presentation spec kind: " + kind);

  Alphabet gens;
  gens.labels = j.at("generators").get<std::vector<std::string>>();
  auto letter_of = [&](const std::string& label) -> LetterId {
    for (LetterId i = 0; i < gens.size(); ++i)
      if (gens.labels[i] == label) return i;
    throw std::runtime_error("relation uses unknown generator: " + label);
  };

  std::vector<std::pair<Word, Word>> rels;
  for (const auto& rel : j.at("relations")) {
    if (!rel.is_array() || rel.size() != 2)
      throw std::runtime_error("each relation must be a pair of words");
    std::pair<Word, Word> pr;
    auto to_word = [&](const nlohmann::json& arr) {
      std::vector<LetterId> letters;
      for (const auto& lab : arr) letters.push_back(letter_of(lab.get<std::string>()));
      return Word{std::move(letters), gens.size()};
    };
    pr.first = to_word(rel[0]);
    pr.second = to_word(rel[1]);
    rels.push_back(std::move(pr));
  }
  return make_presentation(std::move(gens), std::move(rels));
}

Presentation load_presentation_spec(const std::string& spec) {
  if (auto sh = split_shorthand(spec)) {
    if (sh->first == "guba") return guba_example(sh->second);
  }
  return presentation_from_json(read_json_source(spec));
}

Word parse_word(const std::string& text, const Alphabet& alphabet) {
  // s_N / t_N shorthands for the guba family words.
  if (text.size() > 2 && (text[0] == 's' || text[0] == 't') && text[1] == '_' &&
      alphabet.size() == 3 && alphabet.labels == std::vector<std::string>{"a", "b", "c"}) {
    const auto n = static_cast<std::uint32_t>(std::stoul(text.substr(2)));
    return text[0] == 's' ? guba_s_word(n) : guba_t_word(n);
  }
  std::vector<LetterId> letters;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    bool found = false;
    for (LetterId i = 0; i < alphabet.size(); ++i)
      if (alphabet.labels[i] == tok) {
        letters.push_back(i);
        found = true;
        break;
      }
    if (!found) throw std::runtime_error("unknown letter label: " + tok);
  }
  return Word{std::move(letters), alphabet.size()};
}

}  // namespace monoidlab
