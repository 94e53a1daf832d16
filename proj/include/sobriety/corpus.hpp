#pragma once

// The replication corpus: each example builds its spaces, computes the
// expected verdicts, and records claimed against computed values.

#include "sobriety/constructions.hpp"
#include "sobriety/catalog.hpp"
#include "sobriety/witnesses.hpp"

namespace sobriety {

struct Claim {
  std::string subject;
  std::string predicate;
  bool expected = true;
  bool computed = false;
  std::string witness;

  bool matches() const { return expected == computed; }
};

struct ExampleResult {
  std::string id;
  std::string status = "verified";  // or "consistent with paper" for sampled fragments
  std::vector<Claim> claims;
  std::vector<ClassificationReport> reports;

  bool ok() const {
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.matches(); });
  }
};

struct ExampleRecord {
  std::string id;
  std::string title;
  std::function<ExampleResult()> run;
};

namespace corpus_detail {

class Recorder {
 public:
  explicit Recorder(std::string id) { r_.id = std::move(id); }

  void claim(std::string subject, std::string predicate, bool expected, bool computed, std::string witness = {}) {
    r_.claims.push_back({std::move(subject), std::move(predicate), expected, computed, std::move(witness)});
  }
  void claim(std::string subject, std::string predicate, bool expected, const PredicateResult& p) {
    claim(std::move(subject), std::move(predicate), expected, p.holds, p.witness);
  }
  template <class X>
  ClassificationReport classify_into(const X& x) {
    auto rep = classify(x);
    r_.reports.push_back(rep);
    return rep;
  }
  void fragment(const std::string& subject, const witness::FragmentReport& f) {
    for (const auto& c : f.checks) claim(subject, c.name, true, c.holds, c.detail);
    r_.status = "consistent with paper";
  }
  ExampleResult done() { return std::move(r_); }

 private:
  ExampleResult r_;
};

inline Point pt(const OmegaPoset& p, std::string_view name) {
  auto x = p.find(name);
  if (!x) throw std::invalid_argument("no point " + std::string(name));
  return *x;
}

}  // namespace corpus_detail

namespace spaces {

/// (L, υ(L) ∪ {{top}}) for L an antichain with bottom and top.
inline Space example_2_4() {
  const auto l = catalog::antichain_with_bounds();
  return Space::upper(l, "L").with_extra_opens({l.singleton(corpus_detail::pt(l, "top"))}).renamed("L");
}
inline Space cofinite() { return Space::upper(catalog::omega_antichain(), "X"); }
inline Space two_tops() { return Space::alexandroff(catalog::chain_with_two_tops(), "L"); }
inline Space one_top() { return Space::alexandroff(catalog::chain_with_one_top(), "L'"); }
inline Space chain_beside_antichain() { return Space::upper(catalog::chain_beside_antichain(), "L"); }
inline Space omega_chain() { return Space::alexandroff(catalog::omega_chain(), "N"); }
inline Space two_tops_and_top() { return Space::alexandroff(catalog::chain_with_two_tops_and_top(), "L"); }

}  // namespace spaces

inline ExampleResult example_2_4() {
  corpus_detail::Recorder rec("ex2.4");
  const auto x = spaces::example_2_4();
  const auto& l = x.carrier();
  const auto rep = rec.classify_into(x);
  rec.claim("L", "cut_space", true, rep.cut_space);
  rec.claim("L", "weakly_sober", false, rep.weakly_sober);
  const FPSet witness = difference(l.full_set(), l.singleton(corpus_detail::pt(l, "top")));
  rec.claim("L", "witness is L\\{top}", true, rep.weakly_sober.witness == l.format(witness), rep.weakly_sober.witness);
  const auto irr = irreducible_closed_sets(x);
  rec.claim("L\\{top}", "irreducible closed", true,
            std::find(irr.members.begin(), irr.members.end(), witness) != irr.members.end());
  rec.claim("L", "dcpo_specialization", true, rep.dcpo_specialization == Verdict::yes);
  rec.claim("L", "n <= top for antichain points", true,
            x.specialization_leq(Point::member(0, 1), corpus_detail::pt(l, "top")) &&
                x.specialization_leq(Point::member(0, 7), corpus_detail::pt(l, "top")));
  return rec.done();
}

inline ExampleResult example_2_6() {
  corpus_detail::Recorder rec("ex2.6");
  const auto x = spaces::cofinite();
  const auto rep = rec.classify_into(x);
  rec.claim("X", "weakly_sober", true, rep.weakly_sober);
  rec.claim("X", "quasisober", false, rep.quasisober);
  rec.claim("X", "sober", false, rep.sober);
  rec.claim("X", "quasisober witness is X", true, rep.quasisober.witness == x.describe(x.support()), rep.quasisober.witness);
  const auto irr = irreducible_closed_sets(x);
  const bool shape = std::all_of(irr.members.begin(), irr.members.end(), [&](const FPSet& c) {
    return c == x.support() || (c.is_finite() && c.families[0].listed().size() == 1);
  });
  rec.claim("X", "Irr = singletons and X", true, shape && !irr.members.empty());
  return rec.done();
}

inline ExampleResult example_3_1() {
  corpus_detail::Recorder rec("ex3.1");
  const auto l = spaces::two_tops();
  const auto& c = l.carrier();
  const auto rep = rec.classify_into(l);
  rec.claim("L", "quasisober", true, rep.quasisober);
  rec.claim("L", "dcpo_specialization", false, rep.dcpo_specialization == Verdict::yes, rep.dcpo_witness);
  const FPSet n = c.family_set(0);
  const auto irr = irreducible_closed_sets(l);
  const bool ideals = std::all_of(irr.members.begin(), irr.members.end(), [&](const FPSet& s) {
    if (s == n) return true;
    const auto ms = l.members(s);
    return std::any_of(ms.begin(), ms.end(), [&](const Point& a) { return l.point_closure(a) == s; });
  });
  rec.claim("L", "Irr = principal ideals and N", true,
            ideals && std::find(irr.members.begin(), irr.members.end(), n) != irr.members.end());
  rec.claim("N", "cut in L", true, l.cut_closure(n) == n);

  const FPSet lp = difference(c.full_set(), c.singleton(corpus_detail::pt(c, "a1")));
  rec.claim("L'", "closed in L", true, l.is_closed(lp));
  const auto sub = subspace(l, lp, "L'");
  const auto srep = rec.classify_into(sub);
  rec.claim("L'", "cut_space", false, srep.cut_space);
  rec.claim("L'", "witness is N", true, srep.cut_space.witness == c.format(n), srep.cut_space.witness);
  const auto standalone = rec.classify_into(spaces::one_top());
  rec.claim("(L', up(L'))", "cut_space", false, standalone.cut_space);
  return rec.done();
}

inline ExampleResult example_3_4() {
  corpus_detail::Recorder rec("ex3.4");
  const auto l = spaces::chain_beside_antichain();
  const auto& c = l.carrier();
  const auto rep = rec.classify_into(l);
  rec.claim("L", "quasisober", true, rep.quasisober);
  const FPSet n = c.family_set(1);
  rec.claim("N", "closure is L", true, l.closure(n) == c.full_set());
  rec.claim("N", "cut closure is L", true, l.cut_closure(n) == c.full_set());
  const auto irr = irreducible_closed_sets(l);
  const bool shape = std::all_of(irr.members.begin(), irr.members.end(), [&](const FPSet& s) {
    if (s == c.full_set()) return true;
    const auto ms = l.members(s);
    return std::any_of(ms.begin(), ms.end(), [&](const Point& a) { return l.point_closure(a) == s; });
  });
  rec.claim("L", "Irr = principal ideals and L", true, shape);
  const FPSet bs = c.family_set(0);
  rec.claim("L\\N", "saturated", true, l.is_saturated(bs));
  const auto sub = subspace(l, bs, "L\\N");
  const auto srep = rec.classify_into(sub);
  rec.claim("L\\N", "quasisober", false, srep.quasisober);
  const auto direct = rec.classify_into(Space::upper(catalog::omega_antichain("b"), "upper(L\\N)"));
  rec.claim("upper(L\\N)", "quasisober", false, direct.quasisober);
  return rec.done();
}

inline ExampleResult example_3_6() {
  corpus_detail::Recorder rec("ex3.6");
  const auto n = spaces::omega_chain();
  const auto rep = rec.classify_into(n);
  rec.claim("N", "quasisober", true, rep.quasisober);
  const auto nn = chain_product(n, n);
  const auto prep = rec.classify_into(nn);
  rec.claim("NxN", "cut_space", false, prep.cut_space);
  const Staircase row({}, 1);
  rec.claim("NxN", "witness is Nx{1}", true, prep.cut_space.witness == nn.describe(row), prep.cut_space.witness);
  rec.claim("Nx{1}", "cut closure is NxN", true, nn.cut_closure(row) == Staircase::all());
  return rec.done();
}

inline ExampleResult example_3_7() {
  corpus_detail::Recorder rec("ex3.7");
  const auto l = spaces::two_tops();
  const auto lp = spaces::one_top();
  const Point a2_in_lp = corpus_detail::pt(lp.carrier(), "a2"), a2_in_l = corpus_detail::pt(l.carrier(), "a2");
  const ContinuousMap f{l, lp, [=](const Point& x) { return x.is_finite() ? a2_in_lp : x; }, "f"};
  const ContinuousMap j{lp, l, [=](const Point& x) { return x.is_finite() ? a2_in_l : x; }, "j"};
  rec.claim("f", "continuous", true, is_continuous(f));
  rec.claim("j", "continuous", true, is_continuous(j));
  rec.claim("(f, j)", "retraction", true, is_retraction(f, j));
  rec.claim("L", "quasisober", true, rec.classify_into(l).quasisober);
  rec.claim("L'", "cut_space", false, rec.classify_into(lp).cut_space);
  return rec.done();
}

inline ExampleResult example_3_8() {
  corpus_detail::Recorder rec("ex3.8");
  const auto l = spaces::two_tops_and_top();
  const auto& c = l.carrier();
  const Point top = corpus_detail::pt(c, "T");
  const ContinuousMap p{l, l, [=](const Point& x) { return x.is_finite() ? top : x; }, "p"};
  rec.claim("p", "continuous", true, is_continuous(p));
  rec.claim("p", "closure operator", true, operator_kind(p).kind == OperatorKind::closure);
  rec.claim("L", "quasisober", true, rec.classify_into(l).quasisober);
  const FPSet image = p.image();
  rec.claim("p(L)", "= {T} u N", true, image == (c.singleton(top) | c.family_set(0)), c.format(image));
  const auto sub = image_subspace(p, "p(L)");
  const auto srep = rec.classify_into(sub);
  rec.claim("p(L)", "cut_space", false, srep.cut_space);
  rec.claim("N", "cut closure in p(L) is N u {T}", true, sub.cut_closure(c.family_set(0)) == image);
  return rec.done();
}

inline ExampleResult example_3_12() {
  corpus_detail::Recorder rec("ex3.12");
  rec.claim("L", "quasisober", true, rec.classify_into(spaces::two_tops()).quasisober);
  rec.fragment("[L->L]", witness::PointwiseFragment().run());
  return rec.done();
}

inline ExampleResult example_3_13() {
  corpus_detail::Recorder rec("ex3.13");
  const auto l = spaces::two_tops();
  rec.claim("L", "quasisober", true, rec.classify_into(l).quasisober);
  const auto ps = smyth_power_space(l);
  const auto& k = ps.space.carrier();
  std::vector<std::string> names = k.finite_part().names();
  rec.claim("K(L)", "= {^a : a in L} u {{a1,a2}}", true,
            names == std::vector<std::string>{"^a1", "^a2", "^{a1,a2}"} && k.family_count() == 1 &&
                k.family(0).kind == FamilyKind::chain,
            k.format(k.full_set()));
  const FPSet pair = ps.element(*k.find("^{a1,a2}"));
  rec.claim("^{a1,a2}", "= {a1,a2}", true, pair == l.carrier().from_points({*l.carrier().find("a1"), *l.carrier().find("a2")}));
  const auto rep = rec.classify_into(ps.space);
  rec.claim("Ps(L)", "cut_space", false, rep.cut_space);
  rec.claim("Ps(L)", "witness is {^n}", true, rep.cut_space.witness == k.format(k.family_set(0)), rep.cut_space.witness);
  const FPSet d = k.family_set(0);
  rec.claim("D", "cut closure = D u {{a1,a2}}", true, ps.space.cut_closure(d) == (d | k.singleton(*k.find("^{a1,a2}"))));
  return rec.done();
}

inline ExampleResult example_3_16() {
  corpus_detail::Recorder rec("ex3.16");
  const auto rep = rec.classify_into(spaces::cofinite().renamed("N"));
  rec.claim("N", "quasisober", false, rep.quasisober);
  rec.fragment("Ps(N)", witness::CofiniteSmythFragment().run());
  return rec.done();
}

inline const std::vector<ExampleRecord>& corpus() {
  static const std::vector<ExampleRecord> records{
      {"ex2.4", "antichain with bounds, upper topology plus {top}", example_2_4},
      {"ex2.6", "cofinite topology on an infinite set", example_2_6},
      {"ex3.1", "closed subspace of a quasisober space", example_3_1},
      {"ex3.4", "saturated subspace of a quasisober space", example_3_4},
      {"ex3.6", "product of two Alexandroff chains", example_3_6},
      {"ex3.7", "retract of a quasisober space", example_3_7},
      {"ex3.8", "image of a closure operator", example_3_8},
      {"ex3.12", "pointwise function space [L -> L]", example_3_12},
      {"ex3.13", "Smyth power space of a quasisober space", example_3_13},
      {"ex3.16", "Smyth power space of a cofinite space", example_3_16},
  };
  return records;
}

/// Runs one example, or all when `id` is empty.  Unknown ids throw.
inline std::vector<ExampleResult> run_replication(const std::string& id = {}) {
  std::vector<ExampleResult> out;
  for (const auto& rec : corpus())
    if (id.empty() || rec.id == id) out.push_back(rec.run());
  if (out.empty()) throw std::out_of_range("unknown example id: " + id);
  return out;
}

}  // namespace sobriety
