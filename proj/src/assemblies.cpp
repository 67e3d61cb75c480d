#include "lcr/assemblies.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "lcr/abstraction.hpp"

namespace lcr {

std::string_view flavor_name(Flavor f) {
  return f == Flavor::Cartesian ? "cartesian" : "linear";
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Ok: return "ok";
    case Verdict::Fail: return "fail";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

void Assembly::validate() const {
  std::set<std::string> seen;
  for (const auto& x : carrier) {
    if (!seen.insert(x).second) throw AssemblyError(name + ": duplicate element " + x);
    auto it = realizers.find(x);
    if (it == realizers.end() || it->second.empty())
      throw AssemblyError(name + ": element " + x + " has no realizer");
    for (const auto& r : it->second)
      if (!r.closed()) throw AssemblyError(name + ": realizer " + r.str() + " is not closed");
  }
  for (const auto& [x, rs] : realizers)
    if (!seen.count(x)) throw AssemblyError(name + ": realizers for non-element " + x);
}

std::size_t Assembly::index_of(const std::string& label) const {
  auto it = std::find(carrier.begin(), carrier.end(), label);
  if (it == carrier.end()) throw AssemblyError(name + ": no element " + label);
  return static_cast<std::size_t>(it - carrier.begin());
}

const std::vector<Comb>& Assembly::realizers_of(const std::string& label) const {
  auto it = realizers.find(label);
  if (it == realizers.end()) throw AssemblyError(name + ": no element " + label);
  return it->second;
}

Join realizes(const Comb& term, const std::vector<Comb>& targets, std::size_t fuel) {
  ReductionResult r = reduce(term, fuel);
  if (r.status != ReductionStatus::NormalForm) return Join::Unknown;
  bool unknown = false;
  for (const auto& t : targets) {
    ReductionResult rt = reduce(t, fuel);
    if (rt.status != ReductionStatus::NormalForm) {
      unknown = true;
      continue;
    }
    if (rt.term == r.term) return Join::Yes;
  }
  return unknown ? Join::Unknown : Join::No;
}

Comb apply_tracker(const Comb& tracker, const Comb& realizer, Flavor flavor) {
  return flavor == Flavor::Cartesian ? app_bang(tracker, realizer)
                                     : Comb::app(tracker, realizer);
}

CheckResult verify_morphism(const AsmMorphism& m, std::size_t fuel) {
  CheckResult out;
  for (const auto& x : m.source.carrier) {
    auto it = m.map.find(x);
    if (it == m.map.end()) throw AssemblyError("morphism is not total: no image for " + x);
    const auto& targets = m.target.realizers_of(it->second);
    for (const auto& a : m.source.realizers_of(x)) {
      Comb applied = apply_tracker(m.tracker, a, m.source.flavor);
      switch (realizes(applied, targets, fuel)) {
        case Join::Yes: break;
        case Join::Unknown: out.verdict = Verdict::Unknown; break;
        case Join::No:
          return {Verdict::Fail, m.tracker.str() + " on " + a.str() + " (realizing " + x +
                                     ") does not realize " + it->second};
      }
    }
  }
  return out;
}

AsmMorphism compose(const AsmMorphism& f, const AsmMorphism& g) {
  AsmMorphism out{f.source, g.target, {}, {}};
  for (const auto& [x, y] : f.map) out.map[x] = g.map.at(y);
  if (f.source.flavor == Flavor::Linear) {
    out.tracker = Comb::apps(Comb::comb(Combinator::B), {g.tracker, f.tracker});
  } else {
    Comb x = Comb::var("x");
    out.tracker = lam_bang("x", app_bang(g.tracker, app_bang(f.tracker, x)));
  }
  return out;
}

AsmMorphism identity_morphism(const Assembly& x) {
  AsmMorphism out{x, x, {}, {}};
  for (const auto& e : x.carrier) out.map[e] = e;
  out.tracker = Comb::comb(x.flavor == Flavor::Linear ? Combinator::I : Combinator::D);
  return out;
}

Assembly asm_unit() {
  Assembly a;
  a.name = "I";
  a.flavor = Flavor::Linear;
  a.carrier = {"*"};
  a.realizers["*"] = {Comb::comb(Combinator::I)};
  return a;
}

std::string pair_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

namespace {

Comb tensor_realizer(const Comb& b, const Comb& b2) {
  return lam_linear("z", Comb::apps(Comb::var("z"), {b, b2}));
}

void require_flavor(const Assembly& a, Flavor f, const char* op) {
  if (a.flavor != f)
    throw AssemblyError(std::string(op) + " expects a " + std::string(flavor_name(f)) +
                        " assembly, got " + a.name);
}

}  // namespace

Assembly asm_tensor(const Assembly& y, const Assembly& y2) {
  require_flavor(y, Flavor::Linear, "tensor");
  require_flavor(y2, Flavor::Linear, "tensor");
  Assembly out;
  out.name = y.name + " (x) " + y2.name;
  out.flavor = Flavor::Linear;
  for (const auto& a : y.carrier)
    for (const auto& b : y2.carrier) {
      std::string label = pair_label(a, b);
      out.carrier.push_back(label);
      auto& rs = out.realizers[label];
      for (const auto& ra : y.realizers_of(a))
        for (const auto& rb : y2.realizers_of(b)) rs.push_back(tensor_realizer(ra, rb));
    }
  return out;
}

AsmMorphism tensor_morphism(const AsmMorphism& f, const AsmMorphism& g) {
  AsmMorphism out{asm_tensor(f.source, g.source), asm_tensor(f.target, g.target), {}, {}};
  for (const auto& [a, fa] : f.map)
    for (const auto& [b, gb] : g.map) out.map[pair_label(a, b)] = pair_label(fa, gb);
  Comb body = Comb::apps(Comb::var("z"), {Comb::app(f.tracker, Comb::var("u")),
                                          Comb::app(g.tracker, Comb::var("v"))});
  Comb m = lam_linear("u", lam_linear("v", lam_linear("z", body)));
  out.tracker = lam_linear("p", Comb::app(Comb::var("p"), m));
  return out;
}

Assembly asm_L(const Assembly& x) {
  require_flavor(x, Flavor::Cartesian, "L");
  Assembly out;
  out.name = "L " + x.name;
  out.flavor = Flavor::Linear;
  out.carrier = x.carrier;
  for (const auto& [e, rs] : x.realizers)
    for (const auto& r : rs) out.realizers[e].push_back(Comb::bang(r));
  return out;
}

Assembly asm_M(const Assembly& y) {
  require_flavor(y, Flavor::Linear, "M");
  Assembly out = y;
  out.name = "M " + y.name;
  out.flavor = Flavor::Cartesian;
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Comb> tracker_pool(const std::vector<Comb>& leaves, Flavor flavor, int depth,
                               std::size_t max_leaves) {
  std::vector<Comb> level;
  std::set<std::string> seen;
  auto add = [&](std::vector<Comb>& into, Comb t) {
    if (seen.insert(t.str()).second) into.push_back(std::move(t));
  };
  std::vector<Comb> atoms{Comb::var("x")};
  std::set<std::string> atom_seen{"?x"};
  for (const auto& l : leaves) {
    if (atoms.size() > max_leaves) break;
    if (atom_seen.insert(l.str()).second) atoms.push_back(l);
  }
  // banged atoms count as depth 1
  for (const auto& a : atoms) add(level, a);
  for (const auto& a : atoms) add(level, Comb::bang(a));
  for (int d = 1; d < depth; ++d) {
    std::vector<Comb> next = level;
    for (const auto& t : level)
      if (t.is(Comb::Kind::App)) add(next, Comb::bang(t));
    for (const auto& t : level)
      for (const auto& u : level) add(next, Comb::app(t, u));
    level = std::move(next);
  }
  std::vector<Comb> pool;
  std::set<std::string> out_seen;
  for (const auto& t : level) {
    Comb a;
    if (flavor == Flavor::Cartesian) {
      a = lam_bang("x", t);
    } else {
      if (!analyze(t).linvars.count("x")) continue;
      a = lam_linear("x", t);
    }
    if (out_seen.insert(a.str()).second) pool.push_back(std::move(a));
  }
  std::stable_sort(pool.begin(), pool.end(), [](const Comb& a, const Comb& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.str() < b.str();
  });
  return pool;
}

std::vector<Comb> default_pool(const Assembly& target, Flavor flavor, int depth) {
  std::vector<Comb> leaves;
  for (const auto& e : target.carrier)
    for (const auto& r : target.realizers_of(e)) leaves.push_back(r);
  return tracker_pool(leaves, flavor, depth);
}

namespace {

// Normal forms of designated realizers, keyed by rendering.
struct NfIndex {
  std::unordered_map<std::string, std::vector<std::size_t>> elements;

  NfIndex(const Assembly& a, std::size_t fuel) {
    for (std::size_t i = 0; i < a.carrier.size(); ++i)
      for (const auto& r : a.realizers_of(a.carrier[i])) {
        auto res = reduce(r, fuel);
        if (res.status == ReductionStatus::NormalForm) {
          auto& v = elements[res.term.str()];
          if (std::find(v.begin(), v.end(), i) == v.end()) v.push_back(i);
        }
      }
  }

  std::vector<std::size_t> lookup(const Comb& t, std::size_t fuel) const {
    auto res = reduce(t, fuel);
    if (res.status != ReductionStatus::NormalForm) return {};
    auto it = elements.find(res.term.str());
    return it == elements.end() ? std::vector<std::size_t>{} : it->second;
  }
};

// Elements y reached by every realizer of a source element.
std::vector<std::size_t> images(const Comb& tracker, const std::vector<Comb>& source_realizers,
                                Flavor flavor, const NfIndex& index, std::size_t fuel) {
  std::vector<std::size_t> common;
  bool first = true;
  for (const auto& b : source_realizers) {
    auto ys = index.lookup(apply_tracker(tracker, b, flavor), fuel);
    if (first) {
      common = ys;
      first = false;
    } else {
      std::vector<std::size_t> keep;
      for (auto y : common)
        if (std::find(ys.begin(), ys.end(), y) != ys.end()) keep.push_back(y);
      common = std::move(keep);
    }
    if (common.empty()) break;
  }
  return common;
}

// Cartesian product of per-position option lists.
std::vector<std::vector<std::size_t>> product(const std::vector<std::vector<std::size_t>>& opts) {
  std::vector<std::vector<std::size_t>> out{{}};
  for (const auto& o : opts) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& prefix : out)
      for (auto v : o) {
        auto p = prefix;
        p.push_back(v);
        next.push_back(std::move(p));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<AsmMorphism> trackable_morphisms(const Assembly& source, const Assembly& target,
                                             const std::vector<Comb>& pool, std::size_t fuel) {
  NfIndex index(target, fuel);
  std::vector<std::vector<std::vector<std::size_t>>> per_term(pool.size());
  const long long n = static_cast<long long>(pool.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < n; ++i) {
    std::vector<std::vector<std::size_t>> opts;
    for (const auto& x : source.carrier) {
      opts.push_back(images(pool[i], source.realizers_of(x), source.flavor, index, fuel));
      if (opts.back().empty()) break;
    }
    if (opts.size() == source.carrier.size()) per_term[i] = product(opts);
  }
  std::vector<AsmMorphism> out;
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (const auto& choice : per_term[i]) {
      if (!seen.insert(choice).second) continue;
      AsmMorphism m{source, target, {}, pool[i]};
      for (std::size_t k = 0; k < choice.size(); ++k)
        m.map[source.carrier[k]] = target.carrier[choice[k]];
      out.push_back(std::move(m));
    }
  return out;
}

// ---------------------------------------------------------------------------

void FamAssembly::validate() const {
  base.validate();
  if (base.flavor != Flavor::Cartesian) throw AssemblyError(name + ": base must be cartesian");
  if (fibers.size() != base.carrier.size())
    throw AssemblyError(name + ": fibers must be given exactly on the base carrier");
  std::optional<Flavor> flavor;
  for (const auto& x : base.carrier) {
    auto it = fibers.find(x);
    if (it == fibers.end()) throw AssemblyError(name + ": no fiber over " + x);
    it->second.validate();
    if (flavor && *flavor != it->second.flavor)
      throw AssemblyError(name + ": fibers mix cartesian and linear assemblies");
    flavor = it->second.flavor;
  }
}

std::string choice_label(const std::vector<std::string>& base,
                         const std::vector<std::string>& choice) {
  std::string s = "{";
  for (std::size_t i = 0; i < base.size(); ++i) {
    if (i) s += ",";
    s += base[i] + ":" + choice[i];
  }
  return s + "}";
}

namespace {

std::vector<std::vector<std::string>> all_choices(const FamAssembly& fam) {
  std::vector<std::vector<std::size_t>> opts;
  for (const auto& x : fam.base.carrier) {
    std::vector<std::size_t> o(fam.fibers.at(x).carrier.size());
    for (std::size_t i = 0; i < o.size(); ++i) o[i] = i;
    opts.push_back(std::move(o));
  }
  std::vector<std::vector<std::string>> out;
  for (const auto& idx : product(opts)) {
    std::vector<std::string> c;
    for (std::size_t k = 0; k < idx.size(); ++k)
      c.push_back(fam.fibers.at(fam.base.carrier[k]).carrier[idx[k]]);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

LpiResult fam_lpi(const FamAssembly& fam, const std::optional<std::vector<Comb>>& pool_opt,
                  std::size_t fuel, std::size_t trackers_per_element) {
  fam.validate();
  for (const auto& [x, fib] : fam.fibers) require_flavor(fib, Flavor::Linear, "fam_lpi fiber");
  LpiResult out;
  out.assembly.name = "Lpi " + fam.name;
  out.assembly.flavor = Flavor::Linear;
  const auto& base = fam.base.carrier;
  if (base.empty()) {
    std::string label = choice_label({}, {});
    out.assembly.carrier = {label};
    out.assembly.realizers[label] = {Comb::comb(Combinator::I)};
    return out;
  }
  std::vector<Comb> pool;
  if (pool_opt) {
    pool = *pool_opt;
  } else {
    std::vector<Comb> leaves;
    for (const auto& x : base)
      for (const auto& y : fam.fibers.at(x).carrier)
        for (const auto& r : fam.fibers.at(x).realizers_of(y)) leaves.push_back(r);
    pool = tracker_pool(leaves, Flavor::Cartesian);
  }
  std::vector<NfIndex> indices;
  for (const auto& x : base) indices.emplace_back(fam.fibers.at(x), fuel);

  std::vector<std::vector<std::vector<std::size_t>>> per_term(pool.size());
  const long long n = static_cast<long long>(pool.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < n; ++i) {
    std::vector<std::vector<std::size_t>> opts;
    for (std::size_t k = 0; k < base.size(); ++k) {
      opts.push_back(images(pool[i], fam.base.realizers_of(base[k]), Flavor::Cartesian,
                            indices[k], fuel));
      if (opts.back().empty()) break;
    }
    if (opts.size() == base.size()) per_term[i] = product(opts);
  }
  std::map<std::string, std::vector<Comb>> found;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (const auto& idx : per_term[i]) {
      std::vector<std::string> c;
      for (std::size_t k = 0; k < idx.size(); ++k)
        c.push_back(fam.fibers.at(base[k]).carrier[idx[k]]);
      auto& rs = found[choice_label(base, c)];
      if (rs.size() < trackers_per_element) rs.push_back(pool[i]);
    }
  for (const auto& c : all_choices(fam)) {
    std::string label = choice_label(base, c);
    auto it = found.find(label);
    if (it == found.end()) {
      out.excluded.push_back(label);
      continue;
    }
    out.assembly.carrier.push_back(label);
    out.assembly.realizers[label] = it->second;
  }
  return out;
}

CheckResult verify_lpi(const FamAssembly& fam, const Assembly& lpi, std::size_t fuel) {
  std::map<std::string, std::vector<std::string>> by_label;
  for (const auto& c : all_choices(fam)) by_label[choice_label(fam.base.carrier, c)] = c;
  if (fam.base.carrier.empty()) by_label[choice_label({}, {})] = {};
  CheckResult out;
  for (const auto& f : lpi.carrier) {
    auto it = by_label.find(f);
    if (it == by_label.end()) return {Verdict::Fail, "not a choice function: " + f};
    for (const auto& a : lpi.realizers_of(f))
      for (std::size_t k = 0; k < fam.base.carrier.size(); ++k) {
        const auto& x = fam.base.carrier[k];
        const auto& targets = fam.fibers.at(x).realizers_of(it->second[k]);
        for (const auto& b : fam.base.realizers_of(x)) {
          Join j = realizes(app_bang(a, b), targets, fuel);
          if (j == Join::No)
            return {Verdict::Fail, a.str() + " does not track " + f + " at " + x};
          if (j == Join::Unknown) out.verdict = Verdict::Unknown;
        }
      }
  }
  return out;
}

Equalizer fam_equalizer(const AsmMorphism& f, const AsmMorphism& g) {
  if (f.source.name != g.source.name || f.source.carrier != g.source.carrier ||
      f.target.carrier != g.target.carrier)
    throw AssemblyError("equalizer of non-parallel morphisms");
  Assembly e;
  e.name = "Eq(" + f.tracker.str() + ", " + g.tracker.str() + ")";
  e.flavor = f.source.flavor;
  for (const auto& x : f.source.carrier)
    if (f.map.at(x) == g.map.at(x)) {
      e.carrier.push_back(x);
      e.realizers[x] = f.source.realizers_of(x);
    }
  AsmMorphism incl = identity_morphism(e);
  incl.target = f.source;
  return {std::move(e), std::move(incl)};
}

CheckResult check_factorization(const Equalizer& eq, const AsmMorphism& h, std::size_t fuel) {
  AsmMorphism factor{h.source, eq.object, h.map, h.tracker};
  for (const auto& [z, x] : h.map)
    if (std::find(eq.object.carrier.begin(), eq.object.carrier.end(), x) ==
        eq.object.carrier.end())
      return {Verdict::Fail, "image of " + z + " lies outside the equalizer"};
  CheckResult r = verify_morphism(factor, fuel);
  if (!r.ok()) return r;
  CheckResult through = verify_morphism(compose(factor, eq.inclusion), fuel);
  if (!through.ok()) return through;
  // carrier-level uniqueness: exactly one map k with inclusion after k = h
  std::vector<std::vector<std::size_t>> opts(
      h.source.carrier.size(), std::vector<std::size_t>(eq.object.carrier.size()));
  for (auto& o : opts)
    for (std::size_t i = 0; i < o.size(); ++i) o[i] = i;
  std::size_t matching = 0;
  for (const auto& k : product(opts)) {
    bool same = true;
    for (std::size_t i = 0; i < k.size() && same; ++i)
      same = eq.inclusion.map.at(eq.object.carrier[k[i]]) == h.map.at(h.source.carrier[i]);
    matching += same;
  }
  if (matching != 1)
    return {Verdict::Fail, "factorization through the equalizer is not unique (" +
                               std::to_string(matching) + " candidates)"};
  return {};
}

// ---------------------------------------------------------------------------

ModestResult is_modest(const Assembly& x, std::size_t fuel) {
  ModestResult out;
  for (std::size_t i = 0; i < x.carrier.size(); ++i)
    for (std::size_t j = i + 1; j < x.carrier.size(); ++j)
      for (const auto& a : x.realizers_of(x.carrier[i]))
        for (const auto& b : x.realizers_of(x.carrier[j])) {
          Join r = joinable(a, b, fuel);
          if (r == Join::Yes)
            return {Join::No, a.str() + " realizes both " + x.carrier[i] + " and " +
                                  x.carrier[j] + " (via " + b.str() + ")"};
          if (r == Join::Unknown) out.verdict = Join::Unknown;
        }
  return out;
}

void Per::validate() const {
  std::set<std::string> seen;
  for (const auto& c : classes) {
    if (c.empty()) throw AssemblyError("PER has an empty class");
    for (const auto& t : c)
      if (!seen.insert(t.str()).second)
        throw AssemblyError("PER classes share representative " + t.str());
  }
}

std::optional<std::size_t> per_class_of(const Per& r, const Comb& a, std::size_t fuel) {
  auto ra = reduce(a, fuel);
  if (ra.status != ReductionStatus::NormalForm) return std::nullopt;
  for (std::size_t i = 0; i < r.classes.size(); ++i)
    for (const auto& m : r.classes[i]) {
      auto rm = reduce(m, fuel);
      if (rm.status == ReductionStatus::NormalForm && rm.term == ra.term) return i;
    }
  return std::nullopt;
}

Join per_related(const Per& r, const Comb& a, const Comb& b, std::size_t fuel) {
  if (reduce(a, fuel).status != ReductionStatus::NormalForm ||
      reduce(b, fuel).status != ReductionStatus::NormalForm)
    return Join::Unknown;
  auto ca = per_class_of(r, a, fuel);
  auto cb = per_class_of(r, b, fuel);
  return ca && cb && *ca == *cb ? Join::Yes : Join::No;
}

Per modest_to_per(const Assembly& x, std::size_t fuel) {
  ModestResult m = is_modest(x, fuel);
  if (m.verdict != Join::Yes)
    throw NotModest(x.name + " is not modest" + (m.witness ? ": " + *m.witness : ""));
  Per out;
  for (const auto& e : x.carrier) out.classes.push_back(x.realizers_of(e));
  return out;
}

Assembly per_to_modest(const Per& r, Flavor flavor, std::string name) {
  r.validate();
  Assembly out;
  out.name = std::move(name);
  out.flavor = flavor;
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    std::string label = "class" + std::to_string(i);
    out.carrier.push_back(label);
    out.realizers[label] = r.classes[i];
  }
  return out;
}

RoundTrip hyland_round_trip(const Assembly& x, std::size_t fuel) {
  Assembly y = per_to_modest(modest_to_per(x, fuel), x.flavor, x.name + " (round trip)");
  RoundTrip rt{identity_morphism(x), identity_morphism(y)};
  rt.forward.target = y;
  rt.forward.map.clear();
  rt.backward.target = x;
  rt.backward.map.clear();
  for (std::size_t i = 0; i < x.carrier.size(); ++i) {
    rt.forward.map[x.carrier[i]] = y.carrier[i];
    rt.backward.map[y.carrier[i]] = x.carrier[i];
  }
  return rt;
}

PerPiResult per_pi(const Assembly& base, const std::map<std::string, Per>& codes, Flavor,
                   const std::vector<Comb>& pool, std::size_t fuel) {
  require_flavor(base, Flavor::Cartesian, "per_pi base");
  PerPiResult out;
  if (base.carrier.empty()) {
    if (!pool.empty()) out.per.classes.push_back(pool);
    return out;
  }
  std::vector<Assembly> as_assemblies;
  std::vector<NfIndex> indices;
  for (const auto& x : base.carrier) {
    as_assemblies.push_back(per_to_modest(codes.at(x), Flavor::Linear, x));
  }
  for (const auto& a : as_assemblies) indices.emplace_back(a, fuel);

  std::vector<std::optional<std::vector<std::size_t>>> signature(pool.size());
  const long long n = static_cast<long long>(pool.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < n; ++i) {
    std::vector<std::size_t> sig;
    for (std::size_t k = 0; k < base.carrier.size(); ++k) {
      auto ys = images(pool[i], base.realizers_of(base.carrier[k]), Flavor::Cartesian,
                       indices[k], fuel);
      if (ys.size() != 1) break;
      sig.push_back(ys.front());
    }
    if (sig.size() == base.carrier.size()) signature[i] = std::move(sig);
  }
  std::map<std::vector<std::size_t>, std::size_t> class_of;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if (!signature[i]) continue;
    auto [it, fresh] = class_of.emplace(*signature[i], out.per.classes.size());
    if (fresh) out.per.classes.emplace_back();
    out.per.classes[it->second].push_back(pool[i]);
  }
  std::vector<std::vector<std::size_t>> opts;
  for (const auto& x : base.carrier) {
    std::vector<std::size_t> o(codes.at(x).classes.size());
    for (std::size_t i = 0; i < o.size(); ++i) o[i] = i;
    opts.push_back(std::move(o));
  }
  for (const auto& choice : product(opts))
    if (!class_of.count(choice)) {
      std::vector<std::string> names;
      for (auto c : choice) names.push_back("class" + std::to_string(c));
      out.missing.push_back(choice_label(base.carrier, names));
    }
  return out;
}

}  // namespace lcr
