// json_io.hpp -- loaders for monoid-spec and presentation JSON, and shorthand
// spec strings like mul_mod:8, power:4, guba:5

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "monoidlab/monoid.hpp"
#include "monoidlab/premon.hpp"
#include "monoidlab/presentation.hpp"

namespace monoidlab {

enum class PreorderChoice { divisibility, left, right, custom };

PreorderChoice parse_preorder_choice(const std::string& s);

struct LoadedMonoid {
  FiniteMonoid monoid;
  /// Present when the spec carries an explicit preorder relation list.
  std::optional<std::vector<std::pair<Element, Element>>> custom_preorder;
  std::string source;  // echo of where it came from
};

/// Parses a monoid-spec JSON object:
///   {"kind":"cayley","table":[[...]],"identity":i,"labels":[...]}
///   {"kind":"mul_mod","modulus":n}
///   {"kind":"power_monoid","modulus":n}
/// Tables are row-major with 0-based indices. An optional "preorder" key
/// holds an explicit relation pair list for --preorder custom.
LoadedMonoid monoid_from_json(const nlohmann::json& j);

/// Accepts a shorthand (mul_mod:8, power:4), a path to a JSON file, or an
/// inline JSON object string.
LoadedMonoid load_monoid_spec(const std::string& spec);

/// Builds the premon chosen by the flag; for custom, the relation list from
/// the spec is closed reflexively/transitively and the number of added pairs
/// is reported through closure_added (when non-null).
Premon build_premon(const LoadedMonoid& loaded, PreorderChoice choice,
                    std::uint32_t* closure_added = nullptr);

/// Parses a presentation JSON object:
///   {"kind":"presentation","generators":["a","b"],"relations":[[["a","b"],["b","a"]],...]}
///   {"kind":"guba","N":n}
Presentation presentation_from_json(const nlohmann::json& j);

/// Accepts guba:N, a path to a JSON file, or an inline JSON object string.
Presentation load_presentation_spec(const std::string& spec);

/// Parses a word over an alphabet from a comma-separated label list; also
/// accepts s_N / t_N shorthands when the alphabet is the guba one.
Word parse_word(const std::string& text, const Alphabet& alphabet);

}  // namespace monoidlab
