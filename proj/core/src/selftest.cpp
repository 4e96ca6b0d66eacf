#include "mfcalc/selftest.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "mfcalc/bundle.hpp"
#include "mfcalc/error.hpp"
#include "mfcalc/smith.hpp"
#include "mfcalc/spectral.hpp"
#include "mfcalc/suspension.hpp"
#include "mfcalc/torus.hpp"

namespace mfcalc {

namespace {

// Collects failures; a criterion passes when none were recorded.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool passed() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream out;
    out << (checks_ - failed_) << "/" << checks_ << " checks";
    for (const auto& f : failures_) out << "; " << f;
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

CriterionResult run(int id, std::string title, const std::function<void(Checker&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Checker checker;
  CriterionResult result;
  result.id = id;
  result.title = std::move(title);
  try {
    body(checker);
    result.passed = checker.passed();
    result.detail = checker.summary();
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = checker.summary() + "; unexpected error: " + e.what();
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

// Spectral reports are shared between criteria 1 and 9.
const SpectralReport& cached_report(int k) {
  static std::mutex mutex;
  static std::map<int, SpectralReport> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, spectral_e3_report(k)).first;
  return it->second;
}

ManifoldExpr one(const Atom& a) { return ManifoldExpr(a); }

ManifoldExpr sxs(int p, int q) { return one(Atom::sphere_product(p, q)); }

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// A random simply connected atom of dimension n (4 <= n <= 8).
Atom random_simply_connected_atom(std::mt19937_64& rng, int n) {
  std::vector<std::function<Atom()>> choices;
  choices.push_back([&] {
    const int p = uniform(rng, 2, n / 2);
    return Atom::sphere_product(p, n - p);
  });
  choices.push_back([&] { return Atom::twisted_product(n - 2); });
  if (n % 2 == 0) choices.push_back([&] { return Atom::projective_space(Field::Complex, n / 2); });
  if (n == 8) choices.push_back([] { return Atom::projective_space(Field::Quaternion, 2); });
  if (n == 5) {
    choices.push_back([] { return Atom::wu(); });
    choices.push_back([&] { return Atom::m(uniform(rng, 2, 9)); });
    choices.push_back([&] { return Atom::x(uniform(rng, 1, 3)); });
  }
  if (n == 6) {
    choices.push_back([&] {
      return Atom::suspension(framing_index(uniform(rng, 0, 1)), one(Atom::m(uniform(rng, 2, 9))));
    });
  }
  return choices[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(choices.size()) - 1))]();
}

ManifoldExpr random_simply_connected_sum(std::mt19937_64& rng, int n, int max_atoms) {
  ManifoldExpr out = ManifoldExpr::sphere(n);
  const int count = uniform(rng, 1, max_atoms);
  for (int j = 0; j < count; ++j) out = connected_sum(out, one(random_simply_connected_atom(rng, n)));
  return out;
}

// A random summand N of dimension n for tunnel sums, not necessarily
// simply connected.
ManifoldExpr random_summand(std::mt19937_64& rng, int n) {
  ManifoldExpr out = random_simply_connected_sum(rng, n, 3);
  if (uniform(rng, 0, 2) == 0) out = connected_sum(out, sxs(1, n - 1));
  return out;
}

}  // namespace

CriterionResult check_oracle_equality(const SelfTestOptions& options) {
  return run(1, "oracle equality: E3 Poincare polynomial = P_t(Q_k)", [&](Checker& c) {
    for (int k = 2; k <= options.max_k; ++k) {
      const IntPolynomial oracle = cached_report(k).e3_poincare;
      const IntPolynomial closed = poincare_poly(q_manifold(k));
      c.expect(oracle == closed, "k=" + std::to_string(k) + ": oracle " + oracle.to_string() +
                                     " vs " + closed.to_string());
    }
  });
}

CriterionResult check_tower_equality(const SelfTestOptions& options) {
  return run(2, "tower equality: iterated circle bundles = Q_k", [&](Checker& c) {
    for (int k = 1; k <= options.tower_max_k; ++k) {
      const ManifoldExpr tower = canonicalize(torus_tower(k));
      const ManifoldExpr q = canonicalize(q_manifold(k));
      c.expect(tower == q, "k=" + std::to_string(k) + ": " + tower.to_string() + " vs " +
                               q.to_string());
    }
  });
}

CriterionResult check_spot_values(const SelfTestOptions& options) {
  return run(3, "spot values Q_1..Q_4, chi = 0, palindromic P_t", [&](Checker& c) {
    c.expect(q_manifold(1) == ManifoldExpr::sphere(5), "Q_1 = S^5");
    c.expect(q_manifold(2) == sxs(3, 3), "Q_2 = S^3xS^3");
    c.expect(q_manifold(3) == connected_sum_power(sxs(3, 4), 5), "Q_3 = 5 S^3xS^4");
    c.expect(q_manifold(4) == connected_sum(connected_sum_power(sxs(3, 5), 9),
                                            connected_sum_power(sxs(4, 4), 8)),
             "Q_4 = 9 S^3xS^5 # 8 S^4xS^4");
    for (int k = 1; k <= options.max_k; ++k) {
      const ManifoldExpr q = q_manifold(k);
      c.expect(euler_characteristic(q) == 0, "chi(Q_" + std::to_string(k) + ") = 0");
      c.expect(poincare_poly(q).is_palindromic(), "P_t(Q_" + std::to_string(k) + ") palindromic");
    }
  });
}

CriterionResult check_suspension_identities(const SelfTestOptions& options) {
  return run(4, "suspension identities and distributivity", [&](Checker& c) {
    for (int p = 1; p <= 6; ++p) {
      for (int q = std::max(p, 3); q <= 6; ++q) {
        for (int i = 0; i <= 1; ++i) {
          const FramingIndex fi = framing_index(i);
          const std::string label = "Sig" + std::to_string(i) + "(SxS(" + std::to_string(p) +
                                    "," + std::to_string(q) + "))";
          const ManifoldExpr expected = connected_sum(sxs(p, q + 1), sxs(p + 1, q));
          const ManifoldExpr got = suspend(sxs(p, q), fi);
          c.expect(got == expected, label + " = " + got.to_string());
          c.expect(suspension_homology(sxs(p, q), fi) == homology(expected),
                   label + " homology");
        }
      }
    }
    std::mt19937_64 rng(options.seed);
    for (int t = 0; t < options.distributivity_cases; ++t) {
      const int n = uniform(rng, 4, 8);
      const FramingIndex fi = framing_index(uniform(rng, 0, 1));
      const ManifoldExpr sum = random_simply_connected_sum(rng, n, 5);
      ManifoldExpr termwise = ManifoldExpr::sphere(n + 1);
      for (const auto& [atom, count] : sum.terms()) {
        for (std::uint64_t j = 0; j < count; ++j) termwise = connected_sum(termwise, suspend(one(atom), fi));
      }
      c.expect(suspend(sum, fi) == termwise, "distributivity on " + sum.to_string());
    }
  });
}

CriterionResult check_pullback_branches(const SelfTestOptions&) {
  return run(5, "pullback branch table", [&](Checker& c) {
    auto sig = [](int i, const ManifoldExpr& n) { return one(Atom::suspension(framing_index(i), n)); };
    const ManifoldExpr s3s3 = sxs(3, 3);
    for (int k = 2; k <= 6; ++k) {
      const ManifoldExpr mk = one(Atom::m(k));
      const std::string tag = " with N = M(" + std::to_string(k) + ")";
      // w2(B) != 0: S^3xS^3 over S^2~xS^3.
      c.expect(pullback_total(s3s3, one(Atom::twisted_product(3)), mk) ==
                   connected_sum(s3s3, sig(0, mk)),
               "S^3xS^3 over S^2~xS^3" + tag);
      // w2(B) = 0, w2(E) = 0: S^3xS^3 over S^2xS^3.
      c.expect(pullback_total(s3s3, sxs(2, 3), mk) == connected_sum(s3s3, sig(1, mk)),
               "S^3xS^3 over S^2xS^3" + tag);
      // w2(B) = 0, w2(E) != 0: both indices agree, normalized to 0.
      const ManifoldExpr tws4 = one(Atom::twisted_product(4));
      c.expect(pullback_total(tws4, sxs(2, 3), mk) == connected_sum(tws4, sig(0, mk)),
               "S^2~xS^4 over S^2xS^3" + tag);
    }
    // Hopf bundles S^(2n+1) -> CP^n.
    for (int n = 2; n <= 4; ++n) {
      const ManifoldExpr e = ManifoldExpr::sphere(2 * n + 1);
      const ManifoldExpr b = one(Atom::projective_space(Field::Complex, n));
      const ManifoldExpr surf = one(Atom::sphere_product(2, 2 * n - 2));
      const ManifoldExpr expected = suspend(surf, framing_index(n % 2));
      c.expect(pullback_total(e, b, surf) == expected,
               "Hopf over CP(" + std::to_string(n) + ") with N = " + surf.to_string());
    }
    c.expect(pullback_total(ManifoldExpr::sphere(7), one(Atom::projective_space(Field::Complex, 3)),
                            connected_sum_power(s3s3, 2)) == connected_sum_power(sxs(3, 4), 4),
             "Hopf over CP(3) with N = 2 S^3xS^3");
    // S^3 x S^(n-2) over S^2 x S^(n-2) and S^2 ~x S^(n-2), n = 6, N = CP^3.
    const ManifoldExpr cp3 = one(Atom::projective_space(Field::Complex, 3));
    c.expect(pullback_total(sxs(3, 4), one(Atom::twisted_product(4)), cp3) ==
                 connected_sum(sxs(3, 4), sig(0, cp3)),
             "S^3xS^4 over S^2~xS^4 with N = CP(3)");
    c.expect(pullback_total(sxs(3, 4), sxs(2, 4), cp3) == connected_sum(sxs(3, 4), sig(1, cp3)),
             "S^3xS^4 over S^2xS^4 with N = CP(3)");
    for (const auto& out : {pullback_total(s3s3, sxs(2, 3), one(Atom::m(3))),
                            pullback_total(s3s3, one(Atom::twisted_product(3)), one(Atom::wu()))}) {
      c.expect(euler_characteristic(out) == 0, "chi = 0 for " + out.to_string());
    }
  });
}

CriterionResult check_framing_calculus(const SelfTestOptions& options) {
  return run(6, "framing bit calculus", [&](Checker& c) {
    using B = FramingBit;
    c.expect(flip(B::One, false) == B::Zero && flip(B::One, true) == B::Zero, "1 -> 0");
    c.expect(flip(B::Zero, false) == B::One, "0 -> 1 when w2 = 0");
    c.expect(flip(B::Zero, true) == B::Zero, "0 -> 0 when w2 != 0");
    std::mt19937_64 rng(options.seed + 6);
    for (int t = 0; t < options.tunnel_cases; ++t) {
      const int n = uniform(rng, 5, 8);
      const ManifoldExpr m = random_simply_connected_sum(rng, n, 3);
      const ManifoldExpr nn = random_summand(rng, n - 1);
      const B e = framing_bit(uniform(rng, 0, 1));
      const B d = framing_bit(uniform(rng, 0, 1));
      const bool w2m = w2_nonzero(m);
      const ManifoldExpr base = tunnel_sum(m, e, nn, d);
      c.expect(base == tunnel_sum(m, flip(e, w2m), nn, flip(d, w2m)),
               "double flip on " + m.to_string() + " and " + nn.to_string());
      const int index = w2m || e == d ? 0 : 1;
      c.expect(base == connected_sum(m, suspend(nn, framing_index(index))),
               "index rule on " + m.to_string());
    }
  });
}

CriterionResult check_six_manifold_grammar(const SelfTestOptions& options) {
  return run(7, "six-manifold classification grammar", [&](Checker& c) {
    std::mt19937_64 rng(options.seed + 7);
    for (int t = 0; t < options.classify_cases; ++t) {
      std::uint64_t rank = static_cast<std::uint64_t>(uniform(rng, 1, 4));
      std::vector<Integer> torsion;
      for (int j = uniform(rng, 0, 3); j > 0; --j) {
        const int k = uniform(rng, 2, 12);
        torsion.insert(torsion.end(), 2, Integer(k));
      }
      const bool w2 = uniform(rng, 0, 1) == 1;
      bool euler_eq = false;
      if (w2) {
        switch (uniform(rng, 0, 2)) {
          case 0: ++rank; euler_eq = uniform(rng, 0, 1) == 1; break;
          case 1: torsion.emplace_back(2); break;
          default: {
            const Integer order = Integer(1) << uniform(rng, 1, 3);
            torsion.insert(torsion.end(), 2, order);
            euler_eq = uniform(rng, 0, 1) == 1;
          }
        }
      }
      const FgAbGroup h2(rank, torsion);
      const std::string label = h2.to_string() + (w2 ? ", w2" : "") + (euler_eq ? ", e=w2" : "");
      const Classification6 r = classify_6mfd_detailed(h2, w2, euler_eq);
      c.expect(in_six_manifold_grammar(r.total), "grammar for " + label + ": " + r.total.to_string());
      c.expect(homology(r.quotient).at(2) == h2 && w2_nonzero(r.quotient) == w2,
               "quotient invariants for " + label);
      const FgAbGroup h2_total = homology(r.total).at(2);
      c.expect(h2_total.free_rank() + 1 == h2.free_rank() && h2_total.torsion() == h2.torsion(),
               "Gysin rank check for " + label);
      c.expect(euler_characteristic(r.total) == 0, "chi = 0 for " + label);
    }
  });
}

CriterionResult check_homology_formulas(const SelfTestOptions& options) {
  return run(8, "suspension homology formulas", [&](Checker& c) {
    std::vector<ManifoldExpr> atoms;
    for (int n = 4; n <= 8; ++n) {
      for (int p = 1; 2 * p <= n; ++p) atoms.push_back(sxs(p, n - p));
      atoms.push_back(one(Atom::twisted_product(n - 2)));
    }
    for (int n = 2; n <= 4; ++n) atoms.push_back(one(Atom::projective_space(Field::Complex, n)));
    atoms.push_back(one(Atom::projective_space(Field::Quaternion, 2)));
    atoms.push_back(one(Atom::wu()));
    for (int k = 2; k <= 7; ++k) atoms.push_back(one(Atom::m(k)));
    for (int i = 1; i <= 3; ++i) atoms.push_back(one(Atom::x(i)));
    atoms.push_back(one(Atom::suspension(FramingIndex::One, one(Atom::m(3)))));
    for (const auto& a : atoms) {
      c.expect(suspension_homology(a, FramingIndex::Zero) == suspension_homology(a, FramingIndex::One),
               "index independence for " + a.to_string());
    }

    std::mt19937_64 rng(options.seed + 8);
    for (int t = 0; t < 200; ++t) {
      const int n = uniform(rng, 2, 10);
      GradedGroup h = GradedGroup::sphere(n);
      const bool sphere = uniform(rng, 0, 1) == 0;
      if (!sphere && n >= 2) {
        const int degree = uniform(rng, 1, n - 1);
        h.set(degree, uniform(rng, 0, 1) ? FgAbGroup::free(static_cast<std::uint64_t>(uniform(rng, 1, 3)))
                                         : FgAbGroup::cyclic(uniform(rng, 2, 9)));
      }
      c.expect(is_homology_sphere(suspension_homology(h, n), n + 1) == is_homology_sphere(h, n),
               "homology sphere preservation for " + h.to_string("H"));
    }

    for (int g = 0; g <= 5; ++g) {
      c.expect(abelianization(surface_pi1(g, FramingIndex::One)) ==
                   FgAbGroup::free(2 * static_cast<std::uint64_t>(g)),
               "abelianized pi_1 for g=" + std::to_string(g));
    }
  });
}

CriterionResult check_algebra_kernel(const SelfTestOptions& options) {
  return run(9, "algebra kernel: SNF reconstruction, d2^2 = 0, torsion-free E3", [&](Checker& c) {
    std::mt19937_64 rng(options.seed + 9);
    for (int t = 0; t < options.snf_cases; ++t) {
      const auto rows = static_cast<std::size_t>(uniform(rng, 1, options.snf_max_dim));
      const auto cols = static_cast<std::size_t>(uniform(rng, 1, options.snf_max_dim));
      const int density = uniform(rng, 1, 10);
      IntMatrix a(rows, cols);
      for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
          if (uniform(rng, 1, 10) <= density) a(i, j) = uniform(rng, -9, 9);
        }
      }
      const SmithForm s = smith_normal_form(a);
      bool chain = s.d.is_diagonal();
      for (std::size_t i = 0; chain && i < std::min(rows, cols); ++i) {
        const Integer& di = s.d(i, i);
        if (di < 0) chain = false;
        if (i + 1 < std::min(rows, cols)) {
          const Integer& next = s.d(i + 1, i + 1);
          if (di == 0 ? next != 0 : next % di != 0) chain = false;
        }
      }
      const std::string label = "case " + std::to_string(t) + " (" + std::to_string(rows) + "x" +
                                std::to_string(cols) + ")";
      c.expect(s.u * a * s.v == s.d, label + ": U A V = D");
      c.expect(chain, label + ": divisibility chain");
      c.expect(is_unimodular(s.u) && is_unimodular(s.v), label + ": unimodular transforms");
    }
    for (int k = 2; k <= options.max_k; ++k) {
      const SpectralReport& r = cached_report(k);
      c.expect(r.d2_squared_zero, "d2^2 = 0 for k=" + std::to_string(k));
      c.expect(r.torsion_free, "E3 torsion-free for k=" + std::to_string(k));
    }
  });
}

std::vector<CriterionResult> run_selftest(const SelfTestOptions& options) {
  return {check_oracle_equality(options),      check_tower_equality(options),
          check_spot_values(options),          check_suspension_identities(options),
          check_pullback_branches(options),    check_framing_calculus(options),
          check_six_manifold_grammar(options), check_homology_formulas(options),
          check_algebra_kernel(options)};
}

}  // namespace mfcalc
