// Command-line front end: classify space files, build derived spaces,
// replay the replication corpus and run the proposition checks.
//
// Exit status: 0 when every claim holds, 1 on a mismatch, 2 on usage or
// parse errors.

#include "sobriety/io.hpp"
#include "sobriety/propcheck.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

using namespace sobriety;
using json = nlohmann::ordered_json;

Format parse_format(const std::string& s) { return s == "json" ? Format::json : Format::text; }

/// "a1->T, a2->T" on the finite part; unlisted points are fixed.
ContinuousMap parse_map(const Space& x, const std::string& spec) {
  std::vector<std::pair<Point, Point>> table;
  for (const auto& item : detail::split_top_level(spec)) {
    const auto arrow = item.find("->");
    if (arrow == std::string::npos) throw std::invalid_argument("map entries look like a->b, got '" + item + "'");
    auto from = x.carrier().find(detail::trim(item.substr(0, arrow)));
    auto to = x.carrier().find(detail::trim(item.substr(arrow + 2)));
    if (!from || !to) throw std::invalid_argument("unknown point in map entry '" + item + "'");
    table.emplace_back(*from, *to);
  }
  return make_map(x, x, [table](const Point& a) {
    for (const auto& [from, to] : table)
      if (from == a) return to;
    return a;
  }, "p");
}

int print_report(const ClassificationReport& r, Format f) {
  std::cout << emit_report(r, f);
  return 0;
}

int run_replicate(const std::string& id, Format f) {
  const auto results = run_replication(id);
  bool ok = true;
  json all = json::array();
  for (const auto& r : results) {
    ok = ok && r.ok();
    if (f == Format::json) {
      json j{{"id", r.id}, {"status", r.ok() ? r.status : "mismatch"}};
      j["claims"] = json::array();
      for (const auto& c : r.claims)
        j["claims"].push_back({{"subject", c.subject}, {"predicate", c.predicate}, {"expected", c.expected},
                               {"computed", c.computed}, {"witness", c.witness}});
      j["reports"] = json::array();
      for (const auto& rep : r.reports) j["reports"].push_back(to_json(rep));
      all.push_back(j);
      continue;
    }
    std::cout << r.id << ": " << (r.ok() ? r.status : "MISMATCH") << "\n";
    for (const auto& c : r.claims) {
      std::cout << "  " << (c.matches() ? "ok  " : "FAIL") << " " << c.subject << " " << c.predicate
                << " = " << (c.computed ? "true" : "false");
      if (!c.matches()) std::cout << " (expected " << (c.expected ? "true" : "false") << ")";
      if (!c.witness.empty()) std::cout << "  [" << c.witness << "]";
      std::cout << "\n";
    }
  }
  if (f == Format::json) std::cout << all.dump(2) << "\n";
  return ok ? 0 : 1;
}

int run_propcheck(const std::string& id, std::uint64_t seed, std::size_t max_size, std::size_t count, Format f) {
  auto instances = corpus_instances();
  auto finite = random_finite_instances(count, seed, max_size);
  auto omega = random_omega_instances(count / 4, seed);
  instances.insert(instances.end(), finite.begin(), finite.end());
  instances.insert(instances.end(), omega.begin(), omega.end());
  bool ok = true;
  json all = json::array();
  for (const auto& spec : propositions()) {
    if (!id.empty() && spec.id != id) continue;
    const auto r = run_proposition(spec, instances);
    ok = ok && r.ok();
    if (f == Format::json) {
      all.push_back({{"id", r.id}, {"statement", r.statement}, {"seed", seed}, {"instances", r.instances},
                     {"hypothesis_held", r.hypothesis_held}, {"skipped", r.skipped},
                     {"counterexample", r.counterexample ? json(*r.counterexample) : json(nullptr)},
                     {"expect_counterexample", r.expect_counterexample}, {"ok", r.ok()}});
      continue;
    }
    std::cout << r.id << ": " << (r.ok() ? "ok" : "FAIL") << "  " << r.statement << "\n  seed " << seed << ", "
              << r.instances << " spaces, " << r.hypothesis_held << " derived instances met the hypothesis";
    if (r.skipped) std::cout << ", " << r.skipped << " skipped";
    std::cout << "\n  " << (r.counterexample ? "counterexample: " + *r.counterexample : std::string("no counterexample")) << "\n";
  }
  if (!id.empty() && all.empty() && f == Format::json) throw std::out_of_range("unknown proposition id: " + id);
  if (f == Format::json) std::cout << all.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sobriety spectrum classifier for finite and finitely presented spaces"};
  app.require_subcommand(1);
  std::string format = "text";
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_size = 5;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "Seed for generated instances");
  app.add_option("--max-size", max_size, "Largest generated finite space")->check(CLI::Range(1, 6));

  std::string file;
  auto* cls = app.add_subcommand("classify", "Classify a space definition file");
  cls->add_option("file", file)->required();

  std::string op, set_expr, map_expr, other_file;
  auto* con = app.add_subcommand("construct", "Build a derived space and classify it");
  con->add_option("--op", op, "subspace | product | smyth | image")->required()->check(CLI::IsMember({"subspace", "product", "smyth", "image"}));
  con->add_option("--set", set_expr, "Subspace set, e.g. {a2, N}");
  con->add_option("--map", map_expr, "Endomap on points, e.g. a1->T, a2->T");
  con->add_option("--with", other_file, "Second factor for product");
  con->add_option("file", file)->required();

  std::string example;
  auto* rep = app.add_subcommand("replicate", "Check the replication corpus");
  rep->add_option("--example", example, "Example id, e.g. ex3.1");

  std::string prop;
  std::size_t count = 120;
  auto* pc = app.add_subcommand("propcheck", "Search for counterexamples to the positive results");
  pc->add_option("--id", prop, "Proposition id, e.g. prop3.2");
  pc->add_option("--count", count, "Number of generated finite spaces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  const Format f = parse_format(format);
  try {
    if (*cls) return print_report(classify(load_space(file)), f);
    if (*con) {
      const Space x = load_space(file);
      if (op == "subspace") {
        if (set_expr.empty()) throw std::invalid_argument("--set is required for subspace");
        return print_report(classify(subspace(x, parse_set(x.carrier(), set_expr))), f);
      }
      if (op == "image") {
        if (map_expr.empty()) throw std::invalid_argument("--map is required for image");
        const auto p = parse_map(x, map_expr);
        if (f == Format::text) std::cout << "operator_kind = " << to_string(operator_kind(p).kind) << "\n";
        return print_report(classify(image_subspace(p)), f);
      }
      if (op == "smyth") return print_report(classify(smyth_power_space(x).space), f);
      if (other_file.empty()) throw std::invalid_argument("--with is required for product");
      const Space y = load_space(other_file);
      if (x.is_finite() && y.is_finite()) return print_report(classify(product(x, y)), f);
      return print_report(classify(chain_product(x, y)), f);
    }
    if (*rep) return run_replicate(example, f);
    if (*pc) return run_propcheck(prop, seed, max_size, count, f);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
