#pragma once

// Hand-encoded fragments for the two spaces that are not finitely
// presentable: the pointwise function space [L → L] over the chain with two
// tops, and the Smyth power space of an infinite cofinite space.  Each runs
// finitely many checks and reports what it found; neither proves the
// statement over the whole uncountable space.

#include "sobriety/catalog.hpp"
#include "sobriety/classify.hpp"

namespace sobriety::witness {

struct Check {
  std::string name;
  bool holds = false;
  std::string detail;
};

struct FragmentReport {
  std::vector<Check> checks;
  bool all() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.holds; });
  }
  const Check* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

// Monotone maps L → L on L = {a1, a2} ∪ N, seen through their values at 1,
// a1 and a2.  Every triple (v1, va1, va2) with v1 ≤ va1 and v1 ≤ va2 comes
// from a monotone map (send every n ≥ 2 to v1), and every question below
// only depends on these three values.
struct Profile {
  Point at1, at_a1, at_a2;
  friend bool operator==(const Profile&, const Profile&) = default;
};

class PointwiseFragment {
 public:
  explicit PointwiseFragment(std::size_t bound = 3)
      : l_(catalog::chain_with_two_tops()), bound_(bound), a1_(*l_.find("a1")), a2_(*l_.find("a2")) {
    for (const auto& v1 : values())
      for (const auto& va1 : values())
        for (const auto& va2 : values())
          if (l_.leq(v1, va1) && l_.leq(v1, va2)) profiles_.push_back({v1, va1, va2});
  }

  const OmegaPoset& carrier() const { return l_; }
  const std::vector<Profile>& profiles() const { return profiles_; }

  /// Values of L up to the bound plus one generic member of N.
  std::vector<Point> values() const { return l_.sample_points(bound_ + 1); }

  /// f_i: 1 ↦ i, everything else ↦ a2.
  Profile f(std::size_t i) const { return {Point::member(0, i), a2_, a2_}; }
  Profile g() const { return {a2_, a2_, a2_}; }

  bool leq(const Profile& p, const Profile& q) const {
    return l_.leq(p.at1, q.at1) && l_.leq(p.at_a1, q.at_a1) && l_.leq(p.at_a2, q.at_a2);
  }

  /// h ∈ ↓D iff h ≤ f_i for some i.  Since n ≤ a2 for every n, h(n) ≤ h(a2),
  /// so the evaluation points decide this.
  bool in_down_d(const Profile& p) const {
    return !p.at1.is_finite() && l_.leq(p.at_a1, a2_) && l_.leq(p.at_a2, a2_);
  }

  /// Upper sets of L used for subbasic opens S(x, U).
  std::vector<FPSet> upper_sets() const {
    std::vector<FPSet> ups;
    for (const auto& v : values()) ups.push_back(fp_up_closure(l_, l_.singleton(v)));
    ups.push_back(l_.from_points({a1_, a2_}));
    return ups;
  }

  FragmentReport run() const {
    FragmentReport r;
    const std::size_t generic = bound_ + 2;

    bool directed = true;
    for (std::size_t i = 1; i <= generic; ++i)
      for (std::size_t j = i; j <= generic; ++j) directed = directed && leq(f(i), f(j));
    r.checks.push_back({"D directed", directed, "f_i <= f_j for i <= j"});

    // Upper bounds of D among profiles: v1 must dominate the generic f_i(1).
    std::vector<Profile> ub;
    for (const auto& p : profiles_)
      if (leq(f(generic), p) && l_.leq(Point::member(0, generic), p.at1)) ub.push_back(p);
    const auto least = fp_least(l_, l_.full_set());
    const bool forced = least && *least == Point::member(0, 1) && fp_up_closure(l_, l_.singleton(a2_)) == l_.singleton(a2_);
    r.checks.push_back({"sup D = g", ub.size() == 1 && ub.front() == g() && forced,
                        std::to_string(ub.size()) + " upper-bound profile(s); 1 is least and a2 maximal, so g' = g"});

    // ↓D is closed: every profile outside it has a basic neighbourhood
    // (one or two subbasic opens) missing ↓D.
    const auto ups = upper_sets();
    struct Sub {
      int at;
      const FPSet* u;
    };
    std::vector<Sub> subs;
    for (int at = 0; at < 3; ++at)
      for (const auto& u : ups) subs.push_back({at, &u});
    auto value = [](const Profile& p, int at) { return at == 0 ? p.at1 : at == 1 ? p.at_a1 : p.at_a2; };
    auto in = [&](const Profile& p, const Sub& s) { return s.u->contains(value(p, s.at)); };
    std::vector<Profile> down_d;
    for (const auto& p : profiles_)
      if (in_down_d(p)) down_d.push_back(p);
    bool closed = true;
    std::string first_open;
    std::size_t outside = 0;
    for (const auto& p : profiles_) {
      if (in_down_d(p)) continue;
      ++outside;
      bool separated = false;
      for (std::size_t i = 0; i < subs.size() && !separated; ++i)
        for (std::size_t j = i; j < subs.size() && !separated; ++j) {
          if (!in(p, subs[i]) || !in(p, subs[j])) continue;
          separated = std::none_of(down_d.begin(), down_d.end(), [&](const Profile& q) { return in(q, subs[i]) && in(q, subs[j]); });
        }
      if (!separated && closed) {
        closed = false;
        first_open = l_.name(p.at1) + "," + l_.name(p.at_a1) + "," + l_.name(p.at_a2);
      }
    }
    r.checks.push_back({"down D closed", closed,
                        closed ? std::to_string(outside) + " profiles outside down D, each separated" : "not separated: " + first_open});
    r.checks.push_back({"not a cut space", closed && !in_down_d(g()), "cl D within down D, but g lies in the cut closure of D"});
    return r;
  }

 private:
  OmegaPoset l_;
  std::size_t bound_;
  Point a1_, a2_;
  std::vector<Profile> profiles_;
};

// K(N) for the cofinite topology on an infinite antichain N is every
// nonempty subset of N.  Subsets are sampled as finite or cofinite sets with
// listed indices up to a bound.
class CofiniteSmythFragment {
 public:
  explicit CofiniteSmythFragment(std::size_t bound = 4) : n_(catalog::omega_antichain()), bound_(bound) {
    for (const auto& s : bounded_universe(n_, n_.full_set(), bound_))
      if (!s.empty()) samples_.push_back(s);
  }

  const std::vector<FPSet>& samples() const { return samples_; }

  FPSet tail_from(std::size_t n) const {
    std::set<std::size_t> head;
    for (std::size_t i = 1; i <= n; ++i) head.insert(i);
    FPSet s = n_.empty_set();
    s.families[0] = IndexSet::cofinite(head);
    return s;
  }
  FPSet point(std::size_t i) const { return n_.singleton(Point::member(0, i)); }

  FragmentReport run() const {
    FragmentReport r;
    const auto base = Space::upper(n_, "N");
    const auto qs = is_quasisober(base);
    r.checks.push_back({"base not quasisober", !qs.holds, "irreducible without directed cut closure: " + qs.witness});

    // D = {N \ {1..n}} is a chain in reverse inclusion with empty meet.
    const std::size_t generic = bound_ + 2;
    bool directed = true;
    for (std::size_t i = 1; i <= generic; ++i) directed = directed && subset_of(tail_from(i + 1), tail_from(i));
    r.checks.push_back({"D directed", directed, "N\\{1..n+1} is inside N\\{1..n}"});

    // An upper bound Q of D in K(N) lies inside every member, so inside the
    // empty meet; no nonempty sample does.
    bool no_upper = true;
    for (const auto& q : samples_)
      if (subset_of(q, tail_from(std::max(generic, q.max_index() + 1)))) no_upper = false;
    r.checks.push_back({"D has no upper bound", no_upper, "so the cut closure of D is all of K(N)"});

    // cl j(N) = K(N): every nonempty basic open □U (U cofinite) holds some {x}.
    bool dense = true;
    for (const auto& u : samples_)
      if (u.families[0].is_cofinite() && !u.families[0].contains(u.max_index() + 1)) dense = false;
    r.checks.push_back({"j(N) dense", dense, "every nonempty cofinite U contains a singleton"});

    r.checks.push_back(reduction());
    return r;
  }

 private:
  // For every family {B_i} of nonempty subsets of {1..3} (up to three
  // members), with H = ∩◊B_i and G = {b : {b} is some B_i}:
  //   b ∉ G iff N\{b} ∈ H, □(N\B_i) misses ◊B_i, and when each B_i meets G,
  //   H = ∩_{a∈G} ◊{a} = {C : G ⊆ C} on every sampled C.
  Check reduction() const {
    std::vector<std::set<std::size_t>> finite_sets;
    for (unsigned mask = 1; mask < 8; ++mask) {
      std::set<std::size_t> s;
      for (std::size_t i = 0; i < 3; ++i)
        if (mask & (1u << i)) s.insert(i + 1);
      finite_sets.push_back(s);
    }
    auto meets = [](const FPSet& c, const std::set<std::size_t>& b) {
      return std::any_of(b.begin(), b.end(), [&](std::size_t i) { return c.families[0].contains(i); });
    };
    std::size_t families = 0;
    const std::size_t k = finite_sets.size();
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a; b < k; ++b)
        for (std::size_t c = b; c < k; ++c) {
          const std::vector<std::set<std::size_t>> fam{finite_sets[a], finite_sets[b], finite_sets[c]};
          ++families;
          std::set<std::size_t> g;
          for (const auto& bi : fam)
            if (bi.size() == 1) g.insert(*bi.begin());
          auto in_h = [&](const FPSet& q) {
            return std::all_of(fam.begin(), fam.end(), [&](const auto& bi) { return meets(q, bi); });
          };
          for (std::size_t x = 1; x <= 4; ++x) {
            FPSet co = n_.empty_set();
            co.families[0] = IndexSet::cofinite({x});
            if ((g.count(x) == 0) != in_h(co))
              return {"B_i/G reduction", false, "b not in G iff N\\{b} in H fails at " + std::to_string(x)};
          }
          for (const auto& bi : fam) {
            FPSet rest = n_.empty_set();
            rest.families[0] = IndexSet::cofinite(bi);
            for (const auto& q : samples_)
              if (subset_of(q, rest) && meets(q, bi)) return {"B_i/G reduction", false, "box meets diamond"};
          }
          const bool each_meets_g = std::all_of(fam.begin(), fam.end(), [&](const auto& bi) {
            return std::any_of(bi.begin(), bi.end(), [&](std::size_t x) { return g.count(x) > 0; });
          });
          if (!each_meets_g) continue;
          for (const auto& q : samples_) {
            const bool contains_g = std::all_of(g.begin(), g.end(), [&](std::size_t x) { return q.families[0].contains(x); });
            if (in_h(q) != contains_g) return {"B_i/G reduction", false, "H differs from down G at " + n_.format(q)};
          }
        }
    return {"B_i/G reduction", true, "consistent on " + std::to_string(families) + " sampled families"};
  }

  OmegaPoset n_;
  std::size_t bound_;
  std::vector<FPSet> samples_;
};

}  // namespace sobriety::witness
