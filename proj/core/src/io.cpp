#include "novikit/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace novikit::io {

using laurent::Exp;
using laurent::Laurent;

VarNames VarNames::defaults(int vars) {
  static const char* few[] = {"t", "u", "v", "w"};
  VarNames out;
  if (vars <= 4) {
    for (int i = 0; i < vars; ++i) out.names.emplace_back(few[i]);
  } else {
    for (int i = 0; i < vars; ++i) out.names.push_back("t" + std::to_string(i + 1));
  }
  return out;
}

int VarNames::index_of(const std::string& name) const {
  auto it = std::find(names.begin(), names.end(), name);
  return it == names.end() ? -1 : static_cast<int>(it - names.begin());
}

namespace {

std::string monomial_string(const Exp& e, const VarNames& vars) {
  std::string out;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.names[i];
    if (e[i] != 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const Laurent& p, const VarNames& vars) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms) {
    Int a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::string mono = monomial_string(e, vars);
    if (mono.empty()) {
      out += a.get_str();
    } else if (a == 1) {
      out += mono;
    } else {
      out += a.get_str() + "*" + mono;
    }
    first = false;
  }
  return out;
}

std::string to_string(const Laurent& p) { return to_string(p, VarNames::defaults(p.vars)); }

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw Error(errc::parse, what + " at position " + std::to_string(pos));
  }
  std::string integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
      fail("expected an integer");
    return s.substr(start, pos - start);
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() &&
           (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (pos == start) fail("expected a name");
    return s.substr(start, pos - start);
  }
};

}  // namespace

Laurent parse_laurent(const std::string& text, const VarNames& vars) {
  const int n = static_cast<int>(vars.names.size());
  Laurent out(n);
  Lexer lx{text};
  bool first = true;
  while (!lx.done()) {
    int sign = 1;
    char c = lx.peek();
    if (c == '+' || c == '-') {
      sign = c == '-' ? -1 : 1;
      ++lx.pos;
    } else if (!first) {
      lx.fail("expected '+' or '-' between terms");
    }
    // term: [integer] ('*'? varpow)*
    Int coef = 1;
    Exp e(static_cast<size_t>(n), 0);
    bool saw_factor = false;
    if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
      coef = Int(lx.integer());
      saw_factor = true;
    }
    while (true) {
      char nxt = lx.peek();
      if (nxt == '*') {
        ++lx.pos;
        nxt = lx.peek();
      }
      if (!std::isalpha(static_cast<unsigned char>(nxt)) && nxt != '_') break;
      std::string name = lx.ident();
      int idx = vars.index_of(name);
      if (idx < 0) lx.fail("unknown variable '" + name + "'");
      std::int64_t power = 1;
      if (lx.peek() == '^') {
        ++lx.pos;
        power = std::stoll(lx.integer());
      }
      e[static_cast<size_t>(idx)] += power;
      saw_factor = true;
    }
    if (!saw_factor) lx.fail("empty term");
    out += laurent::monomial(n, e, coef * sign);
    first = false;
  }
  return out;
}

std::string to_string(const novikov::Series& s, const VarNames& vars) {
  std::string body = s.known.is_zero() ? "0" : to_string(s.known, vars);
  return body + " + O(level >= " + rat_to_string(s.horizon) + ")";
}

std::string to_string(const laurent::Fraction& f, const VarNames& vars) {
  std::string num = to_string(f.num, vars);
  if (f.den.is_constant() && !f.den.is_zero() && f.den.terms.begin()->second == 1) return num;
  std::string den = to_string(f.den, vars);
  auto wrap = [](const std::string& x) {
    return x.find_first_of("+- ") == std::string::npos ? x : "(" + x + ")";
  };
  return wrap(num) + " / " + wrap(den);
}

std::string to_string(const laurent::TorsionValue& t, const VarNames& vars) {
  if (t.is_zero()) return "0";
  return to_string(*t.value, vars);
}

Json laurent_to_json(const Laurent& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms) {
    Json t;
    t["e"] = e;
    t["c"] = c.get_str();
    terms.push_back(std::move(t));
  }
  Json out;
  out["vars"] = p.vars;
  out["terms"] = std::move(terms);
  return out;
}

Laurent laurent_from_json(const Json& j, int vars) {
  if (j.is_string()) return parse_laurent(j.get<std::string>(), VarNames::defaults(vars));
  Laurent out(j.contains("vars") ? j["vars"].get<int>() : vars);
  for (const auto& t : j.at("terms")) {
    Exp e = t.at("e").get<Exp>();
    Int c = t.at("c").is_string() ? Int(t.at("c").get<std::string>())
                                  : Int(t.at("c").get<long>());
    out += laurent::monomial(out.vars, e, c);
  }
  return out;
}

std::string rat_to_string(const Rat& r) { return r.get_str(); }

Rat rat_from_string(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

// --- presentations ------------------------------------------------------------

groups::Word word_from_string(const std::string& s, const std::vector<std::string>& gens) {
  std::vector<std::pair<int, int>> letters;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    int sign = std::isupper(static_cast<unsigned char>(ch)) ? -1 : 1;
    auto it = std::find(gens.begin(), gens.end(), std::string(1, lower));
    if (it == gens.end())
      throw Error(errc::parse, std::string("unknown generator letter '") + ch + "'");
    letters.emplace_back(static_cast<int>(it - gens.begin()), sign);
  }
  return groups::Word::from_letters(letters);
}

std::string word_to_string(const groups::Word& w, const std::vector<std::string>& gens) {
  std::string out;
  for (auto [g, e] : w.letters()) {
    const std::string& name = gens[static_cast<size_t>(g)];
    if (name.size() != 1)
      throw Error(errc::invalid, "letter format needs single-character generator names");
    char c = name[0];
    out += e == 1 ? c : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  }
  return out;
}

groups::Presentation presentation_from_text(const std::string& text) {
  std::vector<std::string> gens;
  std::vector<std::string> rel_strings;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "gens:") {
      std::string g;
      while (ls >> g) {
        if (g.size() != 1 || !std::islower(static_cast<unsigned char>(g[0])))
          throw Error(errc::parse, "generators are single lowercase letters, got '" + g + "'");
        gens.push_back(g);
      }
    } else if (head == "rel:") {
      std::string w, chunk;
      while (ls >> chunk) w += chunk;
      rel_strings.push_back(w);
    } else {
      throw Error(errc::parse, "unknown line '" + head + "' (want 'gens:' or 'rel:')");
    }
  }
  if (gens.empty()) throw Error(errc::parse, "no generators declared");
  std::vector<groups::Word> rels;
  for (const auto& s : rel_strings) rels.push_back(word_from_string(s, gens));
  return groups::Presentation::make(std::move(gens), std::move(rels));
}

std::string presentation_to_text(const groups::Presentation& p) {
  std::string out = "gens:";
  for (const auto& g : p.gens) out += " " + g;
  out += "\n";
  for (const auto& r : p.relators) out += "rel: " + word_to_string(r, p.gens) + "\n";
  return out;
}

groups::Presentation presentation_from_json(const Json& j) {
  std::vector<std::string> gens = j.at("gens").get<std::vector<std::string>>();
  std::vector<groups::Word> rels;
  for (const auto& r : j.at("rels")) {
    if (r.is_string()) {
      rels.push_back(word_from_string(r.get<std::string>(), gens));
    } else {
      std::vector<std::pair<int, int>> letters;
      for (const auto& pair : r) {
        int g = pair.at(0).get<int>();
        std::int64_t e = pair.at(1).get<std::int64_t>();
        std::int64_t step = e > 0 ? 1 : -1;
        for (std::int64_t k = 0; k != e; k += step) letters.emplace_back(g, static_cast<int>(step));
      }
      rels.push_back(groups::Word::from_letters(letters));
    }
  }
  return groups::Presentation::make(std::move(gens), std::move(rels));
}

Json presentation_to_json(const groups::Presentation& p) {
  Json out;
  out["gens"] = p.gens;
  Json rels = Json::array();
  for (const auto& r : p.relators) {
    Json word = Json::array();
    for (const auto& s : r.syls) word.push_back(Json::array({s.gen, s.exp}));
    rels.push_back(std::move(word));
  }
  out["rels"] = std::move(rels);
  return out;
}

std::vector<int> parse_braid(const std::string& s) {
  std::vector<int> out;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    out.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char c : s) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+') {
      cur += c;
    } else {
      throw Error(errc::parse, std::string("bad character in braid word: '") + c + "'");
    }
  }
  flush();
  if (out.empty()) throw Error(errc::parse, "empty braid word");
  return out;
}

std::vector<Rat> parse_covector(const std::string& s, const std::vector<std::string>& names) {
  std::vector<Rat> out(names.size(), Rat(0));
  std::vector<bool> seen(names.size(), false);
  std::istringstream in(s);
  std::string item;
  size_t positional = 0;
  bool named = s.find('=') != std::string::npos;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (named) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw Error(errc::parse, "mixed named and positional values");
      std::string key = item.substr(0, eq);
      key.erase(std::remove_if(key.begin(), key.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                key.end());
      auto it = std::find(names.begin(), names.end(), key);
      if (it == names.end()) throw Error(errc::parse, "unknown name '" + key + "' in covector");
      size_t idx = static_cast<size_t>(it - names.begin());
      out[idx] = rat_from_string(item.substr(eq + 1));
      seen[idx] = true;
    } else {
      if (positional >= names.size()) throw Error(errc::parse, "too many covector entries");
      out[positional] = rat_from_string(item);
      seen[positional] = true;
      ++positional;
    }
  }
  if (!named && positional != names.size())
    throw Error(errc::parse, "expected " + std::to_string(names.size()) + " covector entries");
  return out;
}

// --- complexes -----------------------------------------------------------------

novikov::BasedComplex complex_from_json(const Json& j, VarNames* names_out) {
  VarNames vars;
  if (j.contains("vars"))
    vars.names = j["vars"].get<std::vector<std::string>>();
  else
    vars = VarNames::defaults(1);
  const int n = static_cast<int>(vars.names.size());

  novikov::BasedComplex c;
  c.vars = n;
  for (const auto& entry : j.at("d1")) c.d1.push_back(laurent_from_json(entry, n));
  for (const auto& row : j.at("d2")) {
    std::vector<Laurent> r;
    for (const auto& entry : row) r.push_back(laurent_from_json(entry, n));
    c.d2.push_back(std::move(r));
  }
  if (j.contains("d3")) {
    novikov::Matrix d3;
    for (const auto& entry : j["d3"]) d3.push_back({laurent_from_json(entry, n)});
    c.d3 = std::move(d3);
  }
  if (names_out) *names_out = vars;
  return c;
}

Json complex_to_json(const novikov::BasedComplex& c, const VarNames& vars) {
  Json out;
  out["vars"] = vars.names;
  Json d1 = Json::array();
  for (const auto& e : c.d1) d1.push_back(to_string(e, vars));
  out["d1"] = std::move(d1);
  Json d2 = Json::array();
  for (const auto& row : c.d2) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(to_string(e, vars));
    d2.push_back(std::move(r));
  }
  out["d2"] = std::move(d2);
  if (c.closed()) {
    Json d3 = Json::array();
    for (const auto& row : *c.d3) d3.push_back(to_string(row[0], vars));
    out["d3"] = std::move(d3);
  }
  return out;
}

// --- HNN -----------------------------------------------------------------------

hnn::HnnData hnn_from_json(const Json& j) {
  hnn::HnnData h;
  h.base = presentation_from_json(j.at("base"));
  for (const auto& w : j.at("assoc"))
    h.assoc.push_back(word_from_string(w.get<std::string>(), h.base.gens));
  for (const auto& w : j.at("images"))
    h.images.push_back(word_from_string(w.get<std::string>(), h.base.gens));
  if (j.contains("stable")) h.stable_letter = j["stable"].get<std::string>();
  hnn::validate(h);
  return h;
}

// --- cut graphs -------------------------------------------------------------------

surfaces::CutGraph cutgraph_from_json(const Json& j) {
  surfaces::CutGraph g;
  g.regions = j.at("regions").get<int>();
  for (const auto& e : j.at("edges")) {
    surfaces::Edge edge;
    edge.from = e.at("from").get<int>();
    edge.to = e.at("to").get<int>();
    edge.chi = e.value("chi", 0);
    edge.h2 = e.at("class").get<std::vector<std::int64_t>>();
    g.edges.push_back(std::move(edge));
  }
  g.h2rank = g.edges.empty() ? 0 : static_cast<int>(g.edges[0].h2.size());
  surfaces::validate(g);
  return g;
}

Json weight_report_to_json(const surfaces::CutGraph& g, const surfaces::WeightReport& r) {
  Json out;
  out["final_weight"] = r.final_weight.w;
  out["total"] = r.final_weight.total();
  out["support"] = r.final_weight.support_size();
  out["class"] = surfaces::weighted_class(g, r.final_weight);
  out["class_preserved"] = r.class_preserved;
  out["chi_preserved"] = r.chi_preserved;
  out["complement_connected"] = r.complement_connected;
  out["total_ge_two"] = r.total_ge_two;
  out["iterations"] = r.iterations;
  return out;
}

// --- pc elements --------------------------------------------------------------

Json pc_element_to_json(const pc::Element& e) {
  Json out = Json::array();
  for (const auto& [t, c] : e.terms) out.push_back(Json::array({t, c.get_str()}));
  return out;
}

pc::Element pc_element_from_json(const Json& j, int rank) {
  pc::Element out;
  for (const auto& term : j) {
    pc::ExpTuple t = term.at(0).get<pc::ExpTuple>();
    if (static_cast<int>(t.size()) != rank)
      throw Error(errc::parse, "pc exponent tuple has the wrong length");
    Int c = term.at(1).is_string() ? Int(term.at(1).get<std::string>())
                                   : Int(term.at(1).get<long>());
    out.add(t, c);
  }
  return out;
}

}  // namespace novikit::io
