// Release gate: every load-bearing capability exercised end to end, one line
// per criterion, exit code = number of failures.  Runtime budgets count as
// failures so a slow build cannot slip through green.

#include <chrono>
#include <complex>
#include <cstdio>
#include <string>
#include <vector>

#include "exint/auxops.hpp"
#include "exint/bethe.hpp"
#include "exint/charges.hpp"
#include "exint/hgen.hpp"
#include "exint/mpa.hpp"
#include "exint/ness.hpp"
#include "exint/rmat.hpp"
#include "exint/sampling.hpp"

using namespace exint;
using Clock = std::chrono::steady_clock;
using Cx = std::complex<double>;

namespace {

constexpr double kFormsBudget = 10.0;    // seconds
constexpr double kRllBudget = 30.0;      // seconds
constexpr double kLemmasBudget = 60.0;   // seconds
constexpr double kNessSixBudget = 120.0; // seconds, exact fixed point at n = 6
constexpr double kRootTol = 1e-10;       // rapidity equation residual
constexpr double kEigenTol = 1e-8;       // one-particle eigenvector residual

double secs(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

bool require(const CheckResult& r, std::string& note) {
  if (r.passed()) return true;
  note = r.check + " " + r.params.dump() + " -> " + r.witness.dump();
  return false;
}

struct Gate {
  int failures = 0;
  int index = 0;

  template <typename Fn>
  void criterion(const char* what, double budget, Fn&& fn) {
    ++index;
    const auto t0 = Clock::now();
    bool ok = false;
    std::string note;
    try {
      ok = fn(note);
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("threw: ") + e.what();
    }
    const double dt = secs(t0);
    if (ok && budget > 0 && dt > budget) {
      ok = false;
      note = "runtime budget exceeded (" + std::to_string(budget) + "s)";
    }
    std::printf("[%s] %2d. %s (%.1fs)%s%s\n", ok ? "PASS" : "FAIL", index,
                what, dt, note.empty() ? "" : " -- ", note.c_str());
    if (!ok) ++failures;
  }
};

}  // namespace

int main() {
  Gate gate;

  gate.criterion(
      "four generator constructions agree, alpha <= 15, 5 seeded points",
      kFormsBudget, [](std::string& note) {
        Sampler sampler(40001);
        for (int point = 0; point < 5; ++point) {
          const Scalar x = sampler.off_locus(24);
          for (int alpha = 1; alpha <= 15; ++alpha) {
            if (!require(check_h_forms(alpha, x), note)) return false;
          }
        }
        return true;
      });

  gate.criterion("exchange relation with the Lax pair, alpha <= 10, 3 pairs",
                 kRllBudget, [](std::string& note) {
                   Sampler sampler(40002);
                   for (int pair = 0; pair < 3; ++pair) {
                     const auto [lambda, mu] = sampler.argument_pair(24);
                     if (!require(check_rll(lambda, mu, 10), note)) {
                       return false;
                     }
                   }
                   return true;
                 });

  gate.criterion("both block lemmas, alpha <= 12", kLemmasBudget,
                 [](std::string& note) {
                   Sampler sampler(40003);
                   for (int point = 0; point < 2; ++point) {
                     const Scalar x = sampler.off_locus(24);
                     if (!require(check_lemma1(x, 12), note)) return false;
                     if (!require(check_lemma2(x, 12), note)) return false;
                   }
                   return true;
                 });

  gate.criterion("inverse, unitarity and transposal, alpha <= 10, 3 pairs", 0,
                 [](std::string& note) {
                   Sampler sampler(40004);
                   for (int pair = 0; pair < 3; ++pair) {
                     const auto [lambda, mu] = sampler.argument_pair(24);
                     if (!require(check_r_properties(lambda, mu, 10), note)) {
                       return false;
                     }
                   }
                   return true;
                 });

  gate.criterion("residue-tensor nilpotency, alpha <= 15", 0,
                 [](std::string& note) {
                   Sampler sampler(40005);
                   const Scalar x = sampler.off_locus(24);
                   for (int alpha = 1; alpha <= 15; ++alpha) {
                     if (!require(check_nilpotency(alpha, x), note)) {
                       return false;
                     }
                   }
                   return true;
                 });

  gate.criterion("transfer operator structure, n <= 8", 0,
                 [](std::string& note) {
                   Sampler sampler(40006);
                   const Scalar lambda = sampler.rational(24);
                   for (int n = 1; n <= 8; ++n) {
                     if (!require(check_transfer_structure(n, lambda), note)) {
                       return false;
                     }
                   }
                   return true;
                 });

  gate.criterion(
      "commuting transfer family, n <= 8; weighted family, n <= 6", 0,
      [](std::string& note) {
        Sampler sampler(40007);
        for (int pair = 0; pair < 3; ++pair) {
          const auto [lambda, mu] = sampler.argument_pair(24);
          for (int n = 2; n <= 8; ++n) {
            if (!require(check_commute(n, lambda, mu), note)) return false;
          }
          for (int n = 2; n <= 6; ++n) {
            if (!require(check_tilde_commute(n, lambda, mu), note)) {
              return false;
            }
          }
        }
        return true;
      });

  gate.criterion(
      "exact steady state, n <= 6, three couplings; float oracle, n <= 5",
      kNessSixBudget, [](std::string& note) {
        const std::vector<Rational> eps = {make_rational(1, 2), Rational(1),
                                           make_rational(3, 5)};
        for (int n = 1; n <= 6; ++n) {
          for (const auto& e : eps) {
            if (!require(check_stationarity(n, e), note)) return false;
          }
        }
        for (int n = 1; n <= 5; ++n) {
          if (!require(check_ness_oracle(n, make_rational(1, 2)), note)) {
            return false;
          }
        }
        return true;
      });

  gate.criterion("conserved charge tower, n <= 8, k <= 4", 0,
                 [](std::string& note) {
                   Sampler sampler(40009);
                   const std::vector<Rational> eps = {
                       make_rational(1, 2), Rational(1), make_rational(3, 5)};
                   const std::vector<Scalar> lambdas = {sampler.off_locus(24),
                                                        sampler.off_locus(24)};
                   for (int n = 1; n <= 8; ++n) {
                     if (!require(check_charge_identities(n, 4, eps, lambdas),
                                  note)) {
                       return false;
                     }
                   }
                   return true;
                 });

  gate.criterion(
      "action identity exactly, n <= 5; rapidity spectra, n <= 4", 0,
      [](std::string& note) {
        Sampler sampler(40010);
        for (int n = 2; n <= 5; ++n) {
          const auto [lambda, mu] = sampler.argument_pair(24);
          if (!require(check_uwt(n, lambda, mu), note)) return false;
        }
        for (const Cx lambda : {Cx(0, 2), Cx(2.5, 0)}) {
          for (int n = 2; n <= 4; ++n) {
            for (const BetheRoot& root : solve_bethe(n, lambda)) {
              if (root.equation_residual >= kRootTol) {
                note = "rapidity equation residual " +
                       std::to_string(root.equation_residual);
                return false;
              }
              try {
                const OneParticleState st =
                    build_one_particle(n, lambda, root.xi);
                if (st.residual >= kEigenTol) {
                  note = "eigenvector residual " + std::to_string(st.residual);
                  return false;
                }
              } catch (const DegeneratePair&) {
                // self-paired rapidities carry no independent second vector
              }
            }
            if (!require(check_bethe_spectrum(n, lambda), note)) return false;
          }
        }
        return true;
      });

  gate.criterion("three-copy exchange consistency, beta <= 6, 3 triples", 0,
                 [](std::string& note) {
                   Sampler sampler(40011);
                   for (int triple = 0; triple < 3; ++triple) {
                     const auto args = sampler.argument_triple(24);
                     const CheckResult r =
                         check_ybe(args[0], args[1], args[2], 6);
                     if (!require(r, note)) return false;
                     if (r.label != kLabelEmpirical) {
                       note = "exchange consistency must stay EMPIRICAL";
                       return false;
                     }
                   }
                   return true;
                 });

  gate.criterion(
      "walk matches the transition-string expansion bit-exactly, n <= 4", 0,
      [](std::string& note) {
        Sampler sampler(40012);
        for (int n = 1; n <= 4; ++n) {
          const Scalar lambda = sampler.rational(24);
          for (long k_out = 0; k_out <= n; ++k_out) {
            for (long k_in = 0; k_in <= n; ++k_in) {
              if (std::labs(k_out - k_in) > 2) continue;
              if (monodromy_element(n, k_out, k_in, lambda) !=
                  monodromy_brute_force(n, k_out, k_in, lambda)) {
                note = "mismatch at n=" + std::to_string(n) +
                       " k_out=" + std::to_string(k_out) +
                       " k_in=" + std::to_string(k_in);
                return false;
              }
            }
          }
        }
        return true;
      });

  std::printf("%d/%d criteria passed\n", gate.index - gate.failures,
              gate.index);
  return gate.failures;
}
