#pragma once

// Text and JSON formats.
//
//   permutation   "42153" when n <= 9, otherwise "1,2,4,8,9,11,3,5,6,7,10";
//                 the identity prints as "1"
//   int lists     "3,1,0,1"; a partition may also be "" or "0" (empty)
//   reduced word  "(4,2,1,2,3)"
//   chain         "(5,8)(4,5)(5,6)(2,5)", left to right in application order
//   polynomial    "x1^3*x2*x4 + 2*x1^2*x2", terms by decreasing exponent vector
//   expansion     one "perm: coeff" line per term, increasing permutation word

#include <cctype>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "schubert/compositions.hpp"
#include "schubert/core.hpp"
#include "schubert/perm.hpp"
#include "schubert/poly.hpp"
#include "schubert/schubert.hpp"
#include "schubert/words.hpp"

namespace schubert::io {

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline int parse_nonnegative(std::string_view s, std::string_view what) {
  s = trim(s);
  if (s.empty() || s.size() > 9) throw ParseError("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  int v = 0;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw ParseError("malformed " + std::string(what) + ": '" + std::string(s) + "'");
    }
    v = v * 10 + (ch - '0');
  }
  return v;
}

}  // namespace detail

/// Comma-separated nonnegative integers. The empty string is the empty list.
inline std::vector<int> parse_int_list(std::string_view text, std::string_view what = "integer list") {
  text = detail::trim(text);
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    out.push_back(detail::parse_nonnegative(text.substr(start, comma - start), what));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline int parse_positive(std::string_view text, std::string_view what) {
  const int v = detail::parse_nonnegative(text, what);
  if (v < 1) throw ParseError(std::string(what) + " must be positive");
  return v;
}

inline Permutation parse_permutation(std::string_view text) {
  text = detail::trim(text);
  std::vector<int> word;
  if (text.find(',') != std::string_view::npos) {
    word = parse_int_list(text, "permutation");
  } else {
    if (text.empty()) throw ParseError("empty permutation");
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) throw ParseError("malformed permutation: '" + std::string(text) + "'");
      word.push_back(ch - '0');
    }
  }
  try {
    return Permutation(std::move(word));
  } catch (const PreconditionError&) {
    throw ParseError("not a permutation: '" + std::string(text) + "'");
  }
}

inline std::string format_permutation(const Permutation& w) {
  if (w.is_identity()) return "1";
  std::string out;
  const bool compact = w.size() <= 9;
  for (std::size_t i = 0; i < w.word().size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(w.word()[i]);
  }
  return out;
}

inline Partition parse_partition(std::string_view text) {
  auto parts = parse_int_list(text, "partition");
  if (parts.size() == 1 && parts.front() == 0) parts.clear();
  try {
    return Partition(std::move(parts));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

inline WeakComposition parse_weak_composition(std::string_view text) {
  return WeakComposition(parse_int_list(text, "weak composition"));
}

inline StrongComposition parse_strong_composition(std::string_view text) {
  try {
    return StrongComposition(parse_int_list(text, "strong composition"));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

inline std::string format_int_list(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

inline std::string format_word(const ReducedWord& rho) { return "(" + format_int_list(rho.letters) + ")"; }

inline ReducedWord parse_word(std::string_view text) {
  text = detail::trim(text);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') throw ParseError("reduced words are written (i,j,...)");
  return ReducedWord{parse_int_list(text.substr(1, text.size() - 2), "reduced word")};
}

inline std::vector<Transposition> parse_chain(std::string_view text) {
  text = detail::trim(text);
  std::vector<Transposition> out;
  while (!text.empty()) {
    if (text.front() != '(') throw ParseError("chains are written (a,b)(c,d)...");
    const std::size_t close = text.find(')');
    if (close == std::string_view::npos) throw ParseError("unterminated transposition in chain");
    const auto pair = parse_int_list(text.substr(1, close - 1), "transposition");
    if (pair.size() != 2 || pair[0] == pair[1] || pair[0] < 1 || pair[1] < 1) {
      throw ParseError("a transposition needs two distinct positive positions");
    }
    out.emplace_back(pair[0], pair[1]);
    text = detail::trim(text.substr(close + 1));
  }
  return out;
}

inline std::string format_chain(const std::vector<Transposition>& steps) {
  std::string out;
  for (const auto& t : steps) out += "(" + std::to_string(t.a) + "," + std::to_string(t.b) + ")";
  return out;
}

/// Terms from the largest exponent vector down.
inline std::string format_polynomial(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Coeff mag = c < 0 ? checked_sub(0, c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += std::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += std::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

inline nlohmann::json polynomial_to_json(const Polynomial& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    terms.push_back({{"coeff", it->second}, {"exponents", it->first}});
  }
  return terms;
}

inline std::string format_expansion(const SchubertExpansion& e) {
  if (e.empty()) return "0\n";
  std::string out;
  for (const auto& [w, c] : e.terms()) out += format_permutation(w) + ": " + std::to_string(c) + "\n";
  return out;
}

inline nlohmann::json expansion_to_json(const SchubertExpansion& e) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [w, c] : e.terms()) terms.push_back({{"perm", format_permutation(w)}, {"coeff", c}});
  return {{"terms", terms}};
}

inline SchubertExpansion expansion_from_json(const nlohmann::json& j) {
  SchubertExpansion e;
  for (const auto& t : j.at("terms")) e.add(parse_permutation(t.at("perm").get<std::string>()), t.at("coeff").get<Coeff>());
  return e;
}

}  // namespace schubert::io
