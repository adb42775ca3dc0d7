#pragma once

// Text and JSON formats: canonical Laurent strings, presentation files,
// complexes, HNN data, cut graphs. JSON uses ordered maps throughout so that
// identical inputs give byte-identical outputs.

#include <string>
#include <vector>

#include <json.hpp>

#include "novikit/hnn.hpp"
#include "novikit/laurent.hpp"
#include "novikit/novikov.hpp"
#include "novikit/polycyclic.hpp"
#include "novikit/presentation.hpp"
#include "novikit/surfaces.hpp"

namespace novikit::io {

using Json = nlohmann::ordered_json;

struct VarNames {
  std::vector<std::string> names;

  static VarNames defaults(int vars);  // t / t,u / t,u,v / t1..tn
  int index_of(const std::string& name) const;  // -1 when absent
};

// canonical form like "2*t^-1 - 3 + 2*t", terms in ascending exponent order
std::string to_string(const laurent::Laurent& p, const VarNames& vars);
std::string to_string(const laurent::Laurent& p);  // default names
laurent::Laurent parse_laurent(const std::string& text, const VarNames& vars);

// series with explicit precision marker "... + O(level >= h)"
std::string to_string(const novikov::Series& s, const VarNames& vars);

// "p / q" with both sides in canonical form
std::string to_string(const laurent::Fraction& f, const VarNames& vars);
std::string to_string(const laurent::TorsionValue& t, const VarNames& vars);

Json laurent_to_json(const laurent::Laurent& p);
laurent::Laurent laurent_from_json(const Json& j, int vars);

// rationals as canonical strings ("3", "-5/2")
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

// --- presentations -------------------------------------------------------------
//
// text format, one item per line:
//   gens: a b
//   rel: abAB
// single-letter generator names; capital letter = inverse.

groups::Presentation presentation_from_text(const std::string& text);
std::string presentation_to_text(const groups::Presentation& p);
groups::Presentation presentation_from_json(const Json& j);
Json presentation_to_json(const groups::Presentation& p);

groups::Word word_from_string(const std::string& s, const std::vector<std::string>& gens);
std::string word_to_string(const groups::Word& w, const std::vector<std::string>& gens);

std::vector<int> parse_braid(const std::string& s);

// phi as "a=1,b=0" against generator (or variable) names, or "1,0" positional
std::vector<Rat> parse_covector(const std::string& s, const std::vector<std::string>& names);

// --- complexes -------------------------------------------------------------------
// {"vars": ["t"], "d1": [...], "d2": [[...]], "d3": [...]} with entries in
// canonical Laurent form; d3 present only for the closed shape

novikov::BasedComplex complex_from_json(const Json& j, VarNames* names_out = nullptr);
Json complex_to_json(const novikov::BasedComplex& c, const VarNames& vars);

// --- HNN -------------------------------------------------------------------------
// {"base": {"gens": [...], "rels": [...]}, "assoc": [...], "images": [...]}

hnn::HnnData hnn_from_json(const Json& j);

// --- cut graphs --------------------------------------------------------------------
// {"regions": n, "edges": [{"from": 0, "to": 1, "chi": 1, "class": [1, 0]}]}

surfaces::CutGraph cutgraph_from_json(const Json& j);
Json weight_report_to_json(const surfaces::CutGraph& g, const surfaces::WeightReport& r);

// --- pc elements ----------------------------------------------------------------
// [[exponent tuple], coefficient] pairs

Json pc_element_to_json(const pc::Element& e);
pc::Element pc_element_from_json(const Json& j, int rank);

}  // namespace novikit::io
