#include "testutil/fox_oracle.hpp"

#include <cctype>
#include <stdexcept>

namespace fox_oracle {

Letters parse(const std::string& word) {
  Letters out;
  for (char c : word) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (!std::isalpha(static_cast<unsigned char>(c))) throw std::runtime_error("bad letter");
    bool upper = std::isupper(static_cast<unsigned char>(c)) != 0;
    int gen = std::tolower(static_cast<unsigned char>(c)) - 'a';
    out.emplace_back(gen, upper ? -1 : 1);
  }
  return out;
}

namespace {

void accumulate(Poly& p, std::int64_t e, std::int64_t c) {
  auto it = p.find(e);
  if (it == p.end()) {
    if (c != 0) p.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

Poly mul(const Poly& a, const Poly& b) {
  Poly out;
  for (auto [ea, ca] : a)
    for (auto [eb, cb] : b) accumulate(out, ea + eb, ca * cb);
  return out;
}

Poly sub(Poly a, const Poly& b) {
  for (auto [e, c] : b) accumulate(a, e, -c);
  return a;
}

// d(word)/d(x_gen) after sending every generator to t: walk the letters,
// tracking the exponent of the prefix
Poly fox_t(const Letters& word, int gen) {
  Poly out;
  std::int64_t prefix = 0;
  for (auto [g, e] : word) {
    if (g == gen) {
      if (e == 1)
        accumulate(out, prefix, 1);
      else
        accumulate(out, prefix - 1, -1);
    }
    prefix += e;
  }
  return out;
}

Poly det(std::vector<std::vector<Poly>> m) {
  const size_t n = m.size();
  if (n == 0) return Poly{{0, 1}};
  if (n == 1) return m[0][0];
  Poly out;
  for (size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Poly>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      for (size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    Poly term = mul(m[0][j], det(std::move(minor)));
    if (j % 2 == 1)
      out = sub(std::move(out), term);
    else
      for (auto [e, c] : term) accumulate(out, e, c);
  }
  return out;
}

}  // namespace

Poly alexander(int ngens, const std::vector<Letters>& relators) {
  std::vector<std::vector<Poly>> jac;
  for (const auto& r : relators) {
    std::vector<Poly> row;
    for (int j = 1; j < ngens; ++j) row.push_back(fox_t(r, j));  // drop column 0
    jac.push_back(std::move(row));
  }
  Poly d = det(std::move(jac));
  if (d.empty()) return d;
  std::int64_t lo = d.begin()->first;
  Poly out;
  for (auto [e, c] : d) out.emplace(e - lo, c);
  if (out.begin()->second < 0) {
    for (auto& [e, c] : out) c = -c;
  }
  return out;
}

std::string to_string(const Poly& p) {
  if (p.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto [e, c] : p) {
    std::int64_t a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::string mono = e == 0 ? "" : (e == 1 ? "t" : "t^" + std::to_string(e));
    if (mono.empty())
      out += std::to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += std::to_string(a) + "*" + mono;
    first = false;
  }
  return out;
}

}  // namespace fox_oracle
