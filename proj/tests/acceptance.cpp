// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "omega_reference.hpp"
#include "smyth_reference.hpp"

#include <chrono>
#include <filesystem>
#include <iostream>
#include <sstream>

namespace {

using namespace sobriety;
using oracle::Mask;

// Pinned sizes and seeds.
constexpr std::uint64_t kSeed = 1729;
constexpr std::size_t kFiniteInstances = 120;
constexpr std::size_t kOmegaInstances = 30;
constexpr std::size_t kRandomSpaces = 100;
constexpr std::size_t kClosurePairs = 1000;
constexpr std::size_t kRandomPosets = 100;
constexpr std::size_t kTruncationPoints = 12;

// Every report classified during the run, for the implication chain.
std::vector<ClassificationReport> seen;

const ClassificationReport& record(const Space& x) {
  seen.push_back(classify(x));
  return seen.back();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

Outcome replication() {
  const auto results = run_replication();
  std::size_t claims = 0, mismatches = 0;
  std::string first;
  for (const auto& r : results) {
    for (const auto& c : r.claims) {
      ++claims;
      if (!c.matches()) {
        ++mismatches;
        if (first.empty()) first = r.id + " " + c.subject + " " + c.predicate;
      }
    }
    for (const auto& rep : r.reports) seen.push_back(rep);
  }
  std::ostringstream out;
  out << results.size() << " examples, " << claims << " claims, " << mismatches << " mismatches";
  if (!first.empty()) out << " (first: " << first << ")";
  return {results.size() == 10 && mismatches == 0, out.str()};
}

Outcome positive_theorems() {
  auto pool = corpus_instances();
  const std::size_t corpus = pool.size();
  for (auto& i : random_finite_instances(kFiniteInstances, kSeed)) pool.push_back(std::move(i));
  for (auto& i : random_omega_instances(kOmegaInstances, kSeed)) pool.push_back(std::move(i));
  for (const auto& i : pool) record(i.space);
  std::size_t checked = 0, held = 0;
  bool wf = false, sup = false;
  std::string bad;
  for (const auto& spec : propositions()) {
    const auto r = run_proposition(spec, pool);
    if (spec.expect_counterexample) {
      if (!r.ok() && bad.empty()) bad = r.id + " found no counterexample";
      continue;
    }
    ++checked;
    held += r.hypothesis_held;
    wf |= r.id == "thm3.17wf";
    sup |= r.id == "thm3.17sup";
    if (r.counterexample && bad.empty()) bad = r.id + " fails on " + *r.counterexample;
    if (r.hypothesis_held == 0 && bad.empty()) bad = r.id + " never met its hypothesis";
  }
  if (!wf || !sup) bad = "a variant of the quasisober power space theorem is missing";
  std::ostringstream out;
  out << checked << " theorems over " << corpus << " corpus + " << kFiniteInstances << " finite + " << kOmegaInstances
      << " omega instances, " << held << " hypothesis hits";
  if (!bad.empty()) return fail(out.str() + "; " + bad);
  return {true, out.str()};
}

std::optional<std::string> oracle_mismatch(const oracle::Topo& t) {
  const auto x = oracle::to_space(t);
  const auto& r = record(x);
  std::ostringstream where;
  where << "n=" << t.n << " opens=" << t.opens.size();
  if (r.t0 != t.t0() || r.cut_space.holds != t.cut_space() || (r.dcpo_specialization == Verdict::yes) != t.dcpo())
    return where.str();
  if (r.weakly_sober.holds != t.weakly_sober() || r.quasisober.holds != t.quasisober() || r.sober.holds != t.sober())
    return where.str();
  if (!t.sober()) return where.str() + " not sober";
  return std::nullopt;
}

Outcome oracle_equivalence() {
  std::size_t exhaustive = 0;
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : oracle::all_topologies(n)) {
      if (!t.t0()) continue;
      ++exhaustive;
      if (auto m = oracle_mismatch(t)) return fail("exhaustive " + *m);
    }
  std::mt19937_64 rng(kSeed);
  for (std::size_t k = 0; k < kRandomSpaces; ++k)
    if (auto m = oracle_mismatch(oracle::random_t0(1 + static_cast<int>(k % 6), rng))) return fail("random " + *m);
  std::ostringstream out;
  out << exhaustive << " exhaustive T0 spaces (<= 4 points) + " << kRandomSpaces << " random (<= 6 points), all sober";
  return {exhaustive == 1 + 3 + 19 + 219, out.str()};
}

// Random finitely presented subset of a space: sampled points plus, per
// family, sometimes a cofinite tail.
FPSet random_set(const Space& x, std::mt19937_64& rng) {
  const auto& p = x.carrier();
  std::bernoulli_distribution coin(0.4);
  std::vector<Point> pts;
  for (const auto& q : p.sample_points(p.prefix_bound() + 4))
    if (coin(rng)) pts.push_back(q);
  FPSet s = p.from_points(pts);
  for (std::size_t f = 0; f < p.family_count(); ++f)
    if (coin(rng)) s.families[f] = s.families[f].unite(IndexSet::cofinite({1, 2, 3}));
  return s & x.support();
}

bool closure_laws(const Space& x, const FPSet& a, const FPSet& b) {
  const FPSet ab = a | b;
  const auto cl = x.closure(a), ct = x.cut_closure(a);
  const bool topological = subset_of(a, cl) && x.closure(cl) == cl && subset_of(cl, x.closure(ab)) &&
                          x.closure(ab) == (cl | x.closure(b)) && x.closure(x.carrier().empty_set()).empty();
  return topological && subset_of(a, ct) && x.cut_closure(ct) == ct && subset_of(ct, x.cut_closure(ab));
}

Outcome closure_and_completion() {
  std::mt19937_64 rng(kSeed);
  std::vector<Space> omega;
  for (const auto& i : corpus_instances())
    if (!i.space.is_finite()) omega.push_back(i.space);
  for (std::size_t k = 0; k < kClosurePairs; ++k) {
    if (k % 4 == 3 && !omega.empty()) {
      const auto& x = omega[k % omega.size()];
      if (!closure_laws(x, random_set(x, rng), random_set(x, rng))) return fail("closure laws fail on " + x.name());
      continue;
    }
    const auto t = oracle::random_t0(1 + static_cast<int>(k % 6), rng);
    const auto x = oracle::to_space(t);
    std::uniform_int_distribution<Mask> pick(0, t.full());
    const Mask a = pick(rng), b = pick(rng);
    const FPSet sa{oracle::to_subset(a, t.n), {}}, sb{oracle::to_subset(b, t.n), {}};
    if (!closure_laws(x, sa, sb)) return fail("closure laws fail on a random finite space");
    if (oracle::to_mask(x.closure(sa).finite) != t.closure(a) || oracle::to_mask(x.cut_closure(sa).finite) != t.cut(a))
      return fail("closure differs from brute force");
  }
  for (std::size_t k = 0; k < kRandomPosets; ++k) {
    const int n = 1 + static_cast<int>(k % 7);
    const auto o = oracle::random_order(n, rng);
    const auto c = dm_completion(oracle::to_poset(o));
    if (!is_complete_lattice(c.lattice)) return fail("completion is not a complete lattice");
    std::set<Mask> cuts;
    for (Mask a = 0; a < oracle::bit(n); ++a) cuts.insert(o.cut(a));
    if (c.cuts.size() != cuts.size()) return fail("completion has the wrong number of cuts");
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (c.lattice.leq(c.embedding[i], c.embedding[j]) != static_cast<bool>(o.le[i][j]))
          return fail("the input does not embed into its completion");
  }
  std::ostringstream out;
  out << kClosurePairs << " (set, space) pairs, " << kRandomPosets << " completions (<= 7 points)";
  return {true, out.str()};
}

Outcome omega_truncations() {
  std::size_t truncations = 0, sets = 0;
  const auto refs = oracle::references();
  for (const auto& ref : refs) {
    const auto r = oracle::check_truncations(ref, kTruncationPoints);
    if (r.mismatch) return fail(*r.mismatch);
    if (r.truncations == 0) return fail(ref.label + " has no admissible truncation");
    truncations += r.truncations;
    sets += r.sets;
  }
  std::ostringstream out;
  out << refs.size() << " posets, " << truncations << " truncations (<= " << kTruncationPoints << " points), " << sets
      << " input sets";
  return {true, out.str()};
}

Outcome smyth_sanity() {
  std::vector<Space> finite;
  for (const auto& entry : std::filesystem::directory_iterator(SOBRIETY_SPACES_DIR))
    if (entry.path().extension() == ".space") {
      auto x = load_space(entry.path().string());
      if (x.is_finite()) finite.push_back(std::move(x));
    }
  for (const auto& i : corpus_instances())
    if (i.space.is_finite()) finite.push_back(i.space);
  for (const auto& x : finite) {
    if (auto m = oracle::smyth_mismatch(x)) return fail(*m);
    record(smyth_power_space(x).space);
  }
  // The ω example: ◊A against the closure of the embedding for each sampled closed set.
  const auto l = spaces::two_tops();
  const auto s = smyth_power_space(l);
  record(s.space);
  std::size_t sampled = 0;
  for (const auto& a : l.closed_sets().members) {
    if (a.empty()) continue;
    ++sampled;
    if (s.diamond(a) != s.space.closure(s.embed(a))) return fail("Ps(L) diamond differs at " + l.describe(a));
  }
  std::ostringstream out;
  out << finite.size() << " finite corpus spaces, " << sampled << " closed sets of L";
  return {true, out.str()};
}

// Runs last: covers every report recorded by the criteria above.
Outcome implication_chain() {
  std::size_t violations = 0;
  std::string first;
  for (const auto& r : seen)
    for (const auto& v : report_violations(r)) {
      if (first.empty()) first = r.space + ": " + v;
      ++violations;
    }
  std::ostringstream out;
  out << seen.size() << " classified spaces, " << violations << " violations";
  if (!first.empty()) out << " (first: " << first << ")";
  return {violations == 0, out.str()};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    Outcome (*run)();
  };
  const Criterion order[] = {
      {1, "replication", replication},
      {2, "positive theorems", positive_theorems},
      {4, "oracle equivalence", oracle_equivalence},
      {5, "closure laws and completion", closure_and_completion},
      {6, "omega vs truncation", omega_truncations},
      {7, "smyth sanity", smyth_sanity},
      {3, "implication chain", implication_chain},
  };
  std::map<int, std::string> lines;
  bool all = true;
  for (const auto& c : order) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail(std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::ostringstream line;
    line << "criterion " << c.id << " " << c.name << ": " << (o.pass ? "PASS" : "FAIL") << " (" << o.detail << ", " << ms
         << " ms)";
    lines[c.id] = line.str();
  }
  for (const auto& [id, line] : lines) std::cout << line << "\n";
  std::cout << (all ? "acceptance: PASS" : "acceptance: FAIL") << "\n";
  return all ? 0 : 1;
}
