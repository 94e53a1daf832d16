#pragma once

// Space definition files and report output.
//
//   space L
//   finite a1 a2
//   omega N chain
//   rel N < a1          # a1 above every member of N
//   rel N[2] < b        # b above the first two members
//   rel c < N           # c below every member
//   rel a1 < a3         # between finite points
//   topology alexandroff
//   open {a1}           # extra open (subbasic open for `explicit`)
//   subspace {a2, N}
//
// Set expressions are brace lists of: a point name, a family name (all its
// members), fam[i], fam[i..] (members from i on), or fam\{i,j} (all but i, j).

#include "sobriety/classify.hpp"

#include "json.hpp"

#include <fstream>

namespace sobriety {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line(line), column(column) {}
  std::size_t line;
  std::size_t column;
};

namespace detail {

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

inline std::vector<std::string> split_top_level(std::string_view s) {
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char ch : s) {
    if (ch == '{') ++depth;
    if (ch == '}') --depth;
    if (ch == ',' && depth == 0) {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!trim(cur).empty() || !parts.empty()) parts.push_back(trim(cur));
  return parts;
}

inline std::size_t parse_index(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("expected an index, got '" + s + "'");
  const auto v = std::stoul(s);
  if (v == 0) throw std::invalid_argument("family indices start at 1");
  return v;
}

}  // namespace detail

/// Parses one set expression against a carrier.  Throws invalid_argument.
inline FPSet parse_set(const OmegaPoset& p, std::string_view text) {
  const std::string t = detail::trim(text);
  if (t.size() < 2 || t.front() != '{' || t.back() != '}') throw std::invalid_argument("set must be written {...}");
  FPSet s = p.empty_set();
  for (const auto& item : detail::split_top_level(std::string_view(t).substr(1, t.size() - 2))) {
    if (item.empty()) throw std::invalid_argument("empty item in set");
    if (auto pt = p.find(item)) {
      s = s | p.singleton(*pt);
      continue;
    }
    if (auto f = p.find_family(item)) {
      s = s | p.family_set(*f);
      continue;
    }
    const auto bs = item.find("\\{");
    if (bs != std::string::npos && item.back() == '}') {
      auto f = p.find_family(item.substr(0, bs));
      if (!f) throw std::invalid_argument("unknown family in '" + item + "'");
      std::set<std::size_t> excluded;
      for (const auto& idx : detail::split_top_level(item.substr(bs + 2, item.size() - bs - 3)))
        if (!idx.empty()) excluded.insert(detail::parse_index(idx));
      FPSet part = p.empty_set();
      part.families[*f] = IndexSet::cofinite(excluded);
      s = s | part;
      continue;
    }
    const auto lb = item.find('[');
    if (lb != std::string::npos && item.size() > lb + 4 && item.substr(item.size() - 3) == "..]") {
      auto f = p.find_family(item.substr(0, lb));
      if (!f) throw std::invalid_argument("unknown family in '" + item + "'");
      const std::size_t from = detail::parse_index(item.substr(lb + 1, item.size() - lb - 4));
      std::set<std::size_t> excluded;
      for (std::size_t i = 1; i < from; ++i) excluded.insert(i);
      FPSet part = p.empty_set();
      part.families[*f] = IndexSet::cofinite(excluded);
      s = s | part;
      continue;
    }
    throw std::invalid_argument("unknown point or family '" + item + "'");
  }
  return s;
}

/// Parses a space definition.  Errors carry the 1-based line and column.
inline Space parse_space(std::string_view text) {
  std::string name = "X";
  std::vector<std::string> finite_names;
  std::vector<Family> families;
  struct Rel {
    std::string lhs, rhs;
    std::size_t line;
  };
  std::vector<Rel> rels;
  std::string topology = "alexandroff";
  std::size_t topology_line = 1;
  std::vector<std::pair<std::string, std::size_t>> opens;
  std::optional<std::pair<std::string, std::size_t>> subspace_expr;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto hash = raw.find('#');
    const std::string line = detail::trim(raw.substr(0, hash));
    if (line.empty()) continue;
    const std::size_t col = raw.find_first_not_of(" \t") + 1;
    std::istringstream in(line);
    std::string kw;
    in >> kw;
    std::string rest;
    std::getline(in, rest);
    rest = detail::trim(rest);
    auto fail = [&](const std::string& msg) { throw ParseError(msg, line_no, col); };
    if (kw == "space") {
      if (rest.empty()) fail("space needs a name");
      name = rest;
    } else if (kw == "finite") {
      std::istringstream ns(rest);
      for (std::string w; ns >> w;) finite_names.push_back(w);
    } else if (kw == "omega") {
      std::istringstream ns(rest);
      std::string fam, kind;
      ns >> fam >> kind;
      if (fam.empty() || (kind != "chain" && kind != "antichain")) fail("expected: omega <name> chain|antichain");
      families.push_back({fam, kind == "chain" ? FamilyKind::chain : FamilyKind::antichain});
    } else if (kw == "rel") {
      std::istringstream ns(rest);
      std::string a, lt, b, extra;
      ns >> a >> lt >> b >> extra;
      if (a.empty() || lt != "<" || b.empty() || !extra.empty()) fail("expected: rel <a> < <b>");
      rels.push_back({a, b, line_no});
    } else if (kw == "topology") {
      static const std::set<std::string> kinds{"alexandroff", "upper", "lower", "weakscott", "explicit"};
      if (!kinds.count(rest)) fail("unknown topology '" + rest + "'");
      topology = rest;
      topology_line = line_no;
    } else if (kw == "open") {
      opens.emplace_back(rest, line_no);
    } else if (kw == "subspace") {
      subspace_expr.emplace(rest, line_no);
    } else {
      fail("unknown keyword '" + kw + "'");
    }
  }
  if (finite_names.empty() && families.empty()) throw ParseError("carrier must be nonempty", 1, 1);

  std::map<std::string, std::size_t> finite_index;
  for (std::size_t i = 0; i < finite_names.size(); ++i)
    if (!finite_index.emplace(finite_names[i], i).second) throw ParseError("duplicate point " + finite_names[i], 1, 1);
  std::map<std::string, std::size_t> family_index;
  for (std::size_t i = 0; i < families.size(); ++i) family_index.emplace(families[i].name, i);

  std::vector<std::pair<std::size_t, std::size_t>> gens;
  std::map<std::pair<std::size_t, std::size_t>, CrossRelation> cross;
  for (const auto& r : rels) {
    auto member_prefix = [&](const std::string& s) -> std::optional<std::pair<std::size_t, std::size_t>> {
      const auto lb = s.find('[');
      if (lb == std::string::npos || s.back() != ']') return std::nullopt;
      auto it = family_index.find(s.substr(0, lb));
      if (it == family_index.end()) return std::nullopt;
      return std::pair{it->second, detail::parse_index(s.substr(lb + 1, s.size() - lb - 2))};
    };
    const bool lf = finite_index.count(r.lhs), rf = finite_index.count(r.rhs);
    try {
      if (lf && rf) {
        gens.emplace_back(finite_index[r.lhs], finite_index[r.rhs]);
      } else if (family_index.count(r.lhs) && rf) {
        cross[{finite_index[r.rhs], family_index[r.lhs]}] = {CrossKind::above_all};
      } else if (lf && family_index.count(r.rhs)) {
        cross[{finite_index[r.lhs], family_index[r.rhs]}] = {CrossKind::below_all};
      } else if (auto mp = member_prefix(r.lhs); mp && rf) {
        cross[{finite_index[r.rhs], mp->first}] = {CrossKind::above_prefix, mp->second};
      } else {
        throw ParseError("unsupported relation " + r.lhs + " < " + r.rhs, r.line, 1);
      }
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), r.line, 1);
    }
  }

  OmegaPoset carrier;
  try {
    carrier = OmegaPoset(FinitePoset(finite_names, gens), families, cross);
  } catch (const OrderError& e) {
    // Blame the last rel line that mentions either point of the pair.
    std::size_t line = 1;
    for (const auto& r : rels)
      if (r.lhs == e.first || r.rhs == e.first || r.lhs == e.second || r.rhs == e.second) line = r.line;
    throw ParseError(std::string(e.what()) + " (" + e.first + ", " + e.second + ")", line, 1);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1, 1);
  }

  auto parse_at = [&](const std::string& expr, std::size_t line) {
    try {
      return parse_set(carrier, expr);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line, 1);
    }
  };

  Space space;
  try {
    if (topology == "explicit") {
      std::vector<Subset> subbasis;
      for (const auto& [expr, line] : opens) subbasis.push_back(parse_at(expr, line).finite);
      space = Space::explicit_finite(carrier, subbasis, name);
    } else if (topology == "alexandroff") {
      space = Space::alexandroff(carrier, name);
    } else if (topology == "upper") {
      space = Space::upper(carrier, name);
    } else if (topology == "lower") {
      space = Space::lower(carrier, name);
    } else {
      space = Space::weak_scott(carrier, name);
    }
  } catch (const UnsupportedTopology& e) {
    throw ParseError(e.what(), topology_line, 1);
  }
  if (topology != "explicit")
    for (const auto& [expr, line] : opens) {
      try {
        space = space.with_extra_opens({parse_at(expr, line)});
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line, 1);
      }
    }
  if (subspace_expr) {
    try {
      space = space.restricted_to(parse_at(subspace_expr->first, subspace_expr->second), name);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), subspace_expr->second, 1);
    }
  }
  return space;
}

inline Space load_space(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_space(buf.str());
}

inline nlohmann::ordered_json to_json(const PredicateResult& r) {
  nlohmann::ordered_json j;
  j["holds"] = r.holds;
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (r.sound_only) j["sound_only"] = true;
  return j;
}

inline nlohmann::ordered_json to_json(const ClassificationReport& r) {
  nlohmann::ordered_json j;
  j["space"] = r.space;
  j["t0"] = r.t0;
  j["cut_space"] = to_json(r.cut_space);
  j["weakly_sober"] = to_json(r.weakly_sober);
  j["quasisober"] = to_json(r.quasisober);
  j["sober"] = to_json(r.sober);
  j["dcpo_specialization"] = to_string(r.dcpo_specialization);
  if (!r.dcpo_witness.empty()) j["dcpo_witness"] = r.dcpo_witness;
  j["well_filtered"] = to_string(r.well_filtered);
  if (!r.well_filtered_note.empty()) j["well_filtered_note"] = r.well_filtered_note;
  j["irreducible_closed_sets"] = r.irreducible_count;
  j["directed_representatives"] = r.representative_count;
  return j;
}

/// Line-oriented `key = value` rendering with the JSON field names.
inline std::string to_text(const ClassificationReport& r) {
  std::ostringstream out;
  auto b = [](bool v) { return v ? "true" : "false"; };
  auto pred = [&](const char* key, const PredicateResult& p) {
    out << key << " = " << b(p.holds) << (p.sound_only ? " (sound-only)" : "") << "\n";
    if (!p.witness.empty()) out << key << ".witness = " << p.witness << "\n";
  };
  out << "space = " << r.space << "\n";
  out << "t0 = " << b(r.t0) << "\n";
  pred("cut_space", r.cut_space);
  pred("weakly_sober", r.weakly_sober);
  pred("quasisober", r.quasisober);
  pred("sober", r.sober);
  out << "dcpo_specialization = " << to_string(r.dcpo_specialization) << "\n";
  if (!r.dcpo_witness.empty()) out << "dcpo_specialization.witness = " << r.dcpo_witness << "\n";
  out << "well_filtered = " << to_string(r.well_filtered) << "\n";
  if (!r.well_filtered_note.empty()) out << "well_filtered.note = " << r.well_filtered_note << "\n";
  out << "irreducible_closed_sets = " << r.irreducible_count << "\n";
  out << "directed_representatives = " << r.representative_count << "\n";
  return out.str();
}

enum class Format { text, json };

inline std::string emit_report(const ClassificationReport& r, Format f) {
  return f == Format::json ? to_json(r).dump(2) + "\n" : to_text(r);
}

}  // namespace sobriety
