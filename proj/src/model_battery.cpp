#include "lcr/model_battery.hpp"

#include <map>

#include "lcr/abstraction.hpp"

namespace lcr {

bool BatteryReport::failed() const {
  for (const auto& l : lines)
    if (l.verdict == Verdict::Fail) return true;
  return false;
}

bool BatteryReport::inconclusive() const {
  for (const auto& l : lines)
    if (l.verdict == Verdict::Unknown) return true;
  return false;
}

namespace {

class Battery {
public:
  Battery(const std::vector<Assembly>& assemblies, const BatteryOptions& options)
      : assemblies_(assemblies), opt_(options) {}

  void record(std::string check, const CheckResult& r) {
    report_.lines.push_back({std::move(check), r.verdict, r.witness.value_or("")});
  }
  void record(std::string check, bool ok, std::string detail = "") {
    report_.lines.push_back({std::move(check), ok ? Verdict::Ok : Verdict::Fail,
                             ok ? "" : std::move(detail)});
  }

  // Verified morphisms between two shipped assemblies, cached.
  const std::vector<AsmMorphism>& morphisms(std::size_t i, std::size_t j) {
    auto key = std::make_pair(i, j);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const Assembly& x = assemblies_[i];
    const Assembly& y = assemblies_[j];
    std::vector<AsmMorphism> found =
        trackable_morphisms(x, y, default_pool(y, x.flavor), opt_.search_fuel);
    std::vector<AsmMorphism> verified;
    std::size_t rejected = 0;
    for (auto& m : found) {
      CheckResult r = verify_morphism(m, opt_.fuel);
      if (r.ok())
        verified.push_back(std::move(m));
      else
        ++rejected;
    }
    report_.morphisms += verified.size();
    record("morphism search " + x.name + " -> " + y.name + ": " +
               std::to_string(verified.size()) + " verified",
           rejected == 0, std::to_string(rejected) + " candidates failed full verification");
    return cache_.emplace(key, std::move(verified)).first->second;
  }

  void per_assembly() {
    for (const auto& x : assemblies_) {
      record("identity on " + x.name, verify_morphism(identity_morphism(x), opt_.fuel));
      ModestResult m = is_modest(x, opt_.fuel);
      if (m.verdict == Join::No) {
        report_.lines.push_back({"is_modest " + x.name + ": no", Verdict::Ok,
                                 m.witness.value_or("")});
        continue;
      }
      if (m.verdict == Join::Unknown) {
        report_.lines.push_back({"is_modest " + x.name, Verdict::Unknown, ""});
        continue;
      }
      report_.lines.push_back({"is_modest " + x.name + ": yes", Verdict::Ok, ""});
      RoundTrip rt = hyland_round_trip(x, opt_.fuel);
      CheckResult f = verify_morphism(rt.forward, opt_.fuel);
      CheckResult b = verify_morphism(rt.backward, opt_.fuel);
      bool modest_back = is_modest(rt.forward.target, opt_.fuel).verdict == Join::Yes;
      record("Hyland round trip " + x.name + " forward", f);
      record("Hyland round trip " + x.name + " backward", b);
      record("round-trip image of " + x.name + " is modest", modest_back);
      if (f.ok() && b.ok() && modest_back) ++report_.round_trips;
    }
  }

  void l_and_m() {
    for (const auto& x : assemblies_) {
      if (x.flavor == Flavor::Cartesian) {
        Assembly lx = asm_L(x);
        lx.validate();
        record("M L " + x.name + " preserves the carrier", asm_M(lx).carrier == x.carrier);
        Comb promote = lam_bang("x", Comb::bang(Comb::var("x")));
        AsmMorphism id{lx, lx, identity_morphism(lx).map, promote};
        record("identity on L " + x.name + " tracked by promotion",
               verify_morphism(id, opt_.fuel));
      } else {
        Assembly llm = asm_L(asm_M(asm_L(asm_M(x))));
        bool doubled = true;
        for (const auto& e : x.carrier)
          for (std::size_t k = 0; k < x.realizers_of(e).size(); ++k)
            doubled = doubled && llm.realizers_of(e)[k] ==
                                     Comb::bang(Comb::bang(x.realizers_of(e)[k]));
        record("L M L M " + x.name + " bangs realizers twice", doubled);
      }
    }
  }

  void composition() {
    std::size_t n = assemblies_.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          if (!same_flavor(i, j) || !same_flavor(j, k)) continue;
          std::size_t checked = 0;
          CheckResult worst;
          for (const auto& f : morphisms(i, j))
            for (const auto& g : morphisms(j, k)) {
              CheckResult r = verify_morphism(compose(f, g), opt_.fuel);
              ++checked;
              if (r.verdict == Verdict::Fail || worst.verdict == Verdict::Ok) worst = r;
              if (r.verdict == Verdict::Fail) break;
            }
          if (checked)
            record("composition " + assemblies_[i].name + " -> " + assemblies_[j].name +
                       " -> " + assemblies_[k].name + " (" + std::to_string(checked) + ")",
                   worst);
        }
  }

  void tensor() {
    std::size_t n = assemblies_.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const Assembly& x = assemblies_[i];
        const Assembly& y = assemblies_[j];
        if (x.flavor != Flavor::Linear || y.flavor != Flavor::Linear) continue;
        if (x.carrier.size() > opt_.max_carrier || y.carrier.size() > opt_.max_carrier) continue;
        Assembly t = asm_tensor(x, y);
        bool shape = t.carrier.size() == x.carrier.size() * y.carrier.size();
        // a designated realizer applied to p joins p b b'
        Comb p = Comb::constant("p");
        for (const auto& a : x.carrier)
          for (const auto& b : y.carrier) {
            Comb r = t.realizers_of(pair_label(a, b)).front();
            Comb expect = Comb::apps(p, {x.realizers_of(a).front(), y.realizers_of(b).front()});
            shape = shape && joinable(Comb::app(r, p), expect, opt_.fuel) == Join::Yes;
          }
        record("tensor " + x.name + " (x) " + y.name + " realizers", shape);
        std::size_t checked = 0;
        CheckResult worst;
        bool componentwise = true;
        for (const auto& f : morphisms(i, i))
          for (const auto& g : morphisms(j, j)) {
            AsmMorphism fg = tensor_morphism(f, g);
            for (const auto& a : x.carrier)
              for (const auto& b : y.carrier)
                componentwise = componentwise && fg.map.at(pair_label(a, b)) ==
                                                     pair_label(f.map.at(a), g.map.at(b));
            CheckResult r = verify_morphism(fg, opt_.fuel);
            ++checked;
            if (r.verdict != Verdict::Ok && worst.verdict != Verdict::Fail) worst = r;
          }
        record("tensor of morphisms on " + x.name + " (x) " + y.name + " (" +
                   std::to_string(checked) + ")",
               worst);
        record("tensor of morphisms on " + x.name + " (x) " + y.name + " is componentwise",
               componentwise);
      }
  }

  void equalizers() {
    std::size_t n = assemblies_.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (!same_flavor(i, j) || !small(i) || !small(j)) continue;
        const auto& ms = morphisms(i, j);
        std::size_t pairs = 0, instances = 0;
        CheckResult worst;
        for (const auto& f : ms)
          for (const auto& g : ms) {
            Equalizer eq = fam_equalizer(f, g);
            ++pairs;
            merge(worst, verify_morphism(eq.inclusion, opt_.fuel));
            for (std::size_t z = 0; z < n; ++z) {
              if (!same_flavor(z, i) || !small(z)) continue;
              for (const auto& h : morphisms(z, i)) {
                bool agrees = true;
                for (const auto& e : h.source.carrier)
                  agrees = agrees && f.map.at(h.map.at(e)) == g.map.at(h.map.at(e));
                if (!agrees) continue;
                ++instances;
                merge(worst, check_factorization(eq, h, opt_.fuel));
              }
            }
          }
        report_.equalizer_pairs += pairs;
        report_.factorizations += instances;
        if (pairs)
          record("equalizers " + assemblies_[i].name + " => " + assemblies_[j].name + " (" +
                     std::to_string(pairs) + " pairs, " + std::to_string(instances) +
                     " factorizations)",
                 worst);
      }
  }

  BatteryReport take() { return std::move(report_); }
  BatteryReport& report() { return report_; }

private:
  bool same_flavor(std::size_t i, std::size_t j) const {
    return assemblies_[i].flavor == assemblies_[j].flavor;
  }
  bool small(std::size_t i) const { return assemblies_[i].carrier.size() <= opt_.max_carrier; }
  static void merge(CheckResult& worst, const CheckResult& r) {
    if (worst.verdict == Verdict::Fail) return;
    if (r.verdict != Verdict::Ok) worst = r;
  }

  const std::vector<Assembly>& assemblies_;
  BatteryOptions opt_;
  BatteryReport report_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<AsmMorphism>> cache_;
};

void families(BatteryReport& report, const std::vector<FamAssembly>& fams,
              const BatteryOptions& opt) {
  for (const auto& fam : fams) {
    LpiResult lpi = fam_lpi(fam, std::nullopt, opt.search_fuel);
    report.lpi_elements += lpi.assembly.carrier.size();
    CheckResult r = verify_lpi(fam, lpi.assembly, opt.fuel);
    report.lines.push_back({"fam_lpi " + fam.name + ": " +
                                std::to_string(lpi.assembly.carrier.size()) + " elements, " +
                                std::to_string(lpi.excluded.size()) + " excluded",
                            r.verdict, r.witness.value_or("")});
    bool all_modest = true;
    std::map<std::string, Per> codes;
    std::vector<Comb> leaves;
    for (const auto& x : fam.base.carrier) {
      const Assembly& fib = fam.fibers.at(x);
      if (is_modest(fib, opt.fuel).verdict != Join::Yes) {
        all_modest = false;
        break;
      }
      codes.emplace(x, modest_to_per(fib, opt.fuel));
      for (const auto& y : fib.carrier)
        for (const auto& t : fib.realizers_of(y)) leaves.push_back(t);
    }
    if (!all_modest) continue;
    PerPiResult pi = per_pi(fam.base, codes, Flavor::Linear,
                            tracker_pool(leaves, Flavor::Cartesian), opt.search_fuel);
    report.per_pi_classes += pi.per.classes.size();
    // members of a class agree at every base realizer; representatives of
    // distinct classes disagree somewhere
    Verdict v = Verdict::Ok;
    std::string detail;
    auto related_everywhere = [&](const Comb& a, const Comb& b) {
      Join all = Join::Yes;
      for (const auto& x : fam.base.carrier)
        for (const auto& r : fam.base.realizers_of(x)) {
          Join j = per_related(codes.at(x), app_bang(a, r), app_bang(b, r), opt.fuel);
          if (j == Join::No) return Join::No;
          if (j == Join::Unknown) all = Join::Unknown;
        }
      return all;
    };
    for (std::size_t c = 0; c < pi.per.classes.size() && v != Verdict::Fail; ++c) {
      const auto& cls = pi.per.classes[c];
      for (const auto& m : cls) {
        Join j = related_everywhere(cls.front(), m);
        if (j == Join::No) {
          v = Verdict::Fail;
          detail = m.str() + " is not related to " + cls.front().str();
          break;
        }
        if (j == Join::Unknown) v = Verdict::Unknown;
      }
      for (std::size_t d = c + 1; d < pi.per.classes.size(); ++d)
        if (related_everywhere(cls.front(), pi.per.classes[d].front()) == Join::Yes) {
          v = Verdict::Fail;
          detail = "classes " + std::to_string(c) + " and " + std::to_string(d) + " overlap";
        }
    }
    report.lines.push_back({"per_pi " + fam.name + ": " + std::to_string(pi.per.classes.size()) +
                                " classes, " + std::to_string(pi.missing.size()) + " missing",
                            v, detail});
  }
}

}  // namespace

BatteryReport run_model_battery(const std::vector<Assembly>& assemblies,
                                const std::vector<FamAssembly>& fams,
                                const BatteryOptions& options) {
  Battery b(assemblies, options);
  b.per_assembly();
  b.l_and_m();
  b.composition();
  b.tensor();
  b.equalizers();
  BatteryReport report = b.take();
  families(report, fams, options);
  return report;
}

}  // namespace lcr
