#include "scl/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <random>
#include <sstream>

#include "scl/cayley.hpp"
#include "scl/families.hpp"
#include "scl/group.hpp"
#include "scl/oracles.hpp"
#include "scl/shortcut_free.hpp"
#include "scl/shortcut_product.hpp"
#include "scl/words.hpp"

namespace scl::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

Word random_word(const Alphabet& alphabet, std::size_t length, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, 2 * alphabet.size() - 1);
  Word w(alphabet);
  for (std::size_t i = 0; i < length; ++i) {
    const std::size_t x = pick(rng);
    w.push_back(Letter{static_cast<std::uint8_t>(x / 2), static_cast<std::int8_t>(x % 2 ? -1 : 1)});
  }
  return w;
}

// Letters of a word over {a, b} inside std_symbols(), re-read over ab_symbols().
Word as_ab_word(const Word& w) {
  std::vector<Letter> letters(w.begin(), w.end());
  return Word(ab_symbols(), std::move(letters));
}

Outcome presentation_check() {
  const auto relators = twisted_presentation_relators();
  const auto ok = check_relators(MarkedAlphabet::twisted(), relators);
  std::string detail;
  for (std::size_t i = 0; i < relators.size(); ++i) {
    detail += format_word(relators[i]) + (ok[i] ? "=1 " : "!=1 ");
  }
  return {std::all_of(ok.begin(), ok.end(), [](bool b) { return b; }), detail};
}

Outcome null_family() {
  const MarkedAlphabet& twisted = MarkedAlphabet::twisted();
  for (std::size_t n = 0; n <= 10; ++n) {
    const Word w = w_n(n);
    if (w.size() != 4 * n + 4) return {false, "wrong length at n=" + std::to_string(n)};
    if (!eval(w, twisted).is_identity()) return {false, "twisted evaluation fails at n=" + std::to_string(n)};
    if (!std_element(w_n_over_std(n)).is_identity()) {
      return {false, "d^n c d^-n route fails at n=" + std::to_string(n)};
    }
  }
  return {true, "n = 0..10, both routes"};
}

Outcome free_split_bound(std::size_t samples, std::uint64_t seed, double& sharpness_seconds) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> half_length(1, 200);
  for (std::size_t s = 0; s < samples; ++s) {
    const Word u = as_ab_word(random_null_word(2 * half_length(rng), 1.0, rng()));
    const FreeSplit split = split_null_word(u);
    const Word rotated = cyclic_conjugate(u, split.rotation);
    if (split.u1 + split.u2 != rotated) return {false, "rotation arithmetic fails for " + format_word(u)};
    if (!free_reduce(split.u1).empty() || !free_reduce(split.u2).empty()) {
      return {false, "non-null part for " + format_word(u)};
    }
    if (std::min(split.u1.size(), split.u2.size()) < u.size() / 3) {
      return {false, "min below floor(|u|/3) for " + format_word(u)};
    }
  }
  const auto start = Clock::now();
  for (long m = 1; m <= 3; ++m) {
    const Alphabet& ab = ab_symbols();
    const Word u = power(ab, 'a', m) + power(ab, 'a', -m) + power(ab, 'a', -m) + power(ab, 'a', m) +
                   power(ab, 'b', m) + power(ab, 'b', -m);
    const std::size_t optimum = oracle::best_cyclic_split(u);
    const FreeSplit split = split_null_word(u);
    if (optimum != static_cast<std::size_t>(2 * m) ||
        std::min(split.u1.size(), split.u2.size()) != static_cast<std::size_t>(2 * m)) {
      return {false, "sharpness fails at m=" + std::to_string(m) + ": optimum " + std::to_string(optimum)};
    }
  }
  sharpness_seconds = seconds_since(start);
  return {true, std::to_string(samples) + " random words; sharpness optimum 2m for m = 1, 2, 3"};
}

Outcome product_shortcut(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> half_length(12, 120);
  std::size_t lambda_form = 0;
  for (std::size_t s = 0; s < samples; ++s) {
    const Word w = random_null_word(2 * half_length(rng), 0.5, rng());
    const ShortcutCertificate cert = shortcut(w);
    const VerifyResult verdict = verify_certificate(w, cert);
    if (!verdict) {
      return {false, std::string(to_string(verdict.reason)) + " for " + format_word(w)};
    }
    const std::size_t bound = w.size() - w.size() / 6;
    if (cert.loop1_length > bound || cert.loop2_length > bound) return {false, "loop bound for " + format_word(w)};
    if (w.size() >= kLambdaFormThreshold) {
      ++lambda_form;
      const std::size_t w1 = cert.w1.size();
      if (w.size() > 7 * w1 || w1 > cert.w2.size() || 7 * cert.mu.size() > 6 * w1) {
        return {false, "lambda = 6/7 form fails for " + format_word(w)};
      }
    }
  }
  return {true, std::to_string(samples) + " certificates, " + std::to_string(lambda_form) + " with |w| >= 42"};
}

Outcome geodesic_family(std::size_t max_n) {
  DistanceOracle oracle(MarkedAlphabet::twisted(), 8);
  std::size_t checked = 0;
  for (std::size_t n = 0; n <= max_n; ++n) {
    for (std::size_t k = 0; k <= n; ++k) {
      for (Variant v : kAllVariants) {
        const Word u = u_family({n, k, v});
        if (u.size() != 2 * n + 2 || !oracle.is_geodesic(u)) {
          return {false, format_word(u) + " is not a geodesic of length 2n+2"};
        }
        ++checked;
      }
    }
  }
  return {true, std::to_string(checked) + " words, n <= " + std::to_string(max_n)};
}

Outcome isometric_cycles(std::size_t first_n, std::size_t last_n, int radius_cap) {
  DistanceOracle oracle(MarkedAlphabet::twisted(), radius_cap);
  for (std::size_t n = first_n; n <= last_n; ++n) {
    const CycleReport report = is_isometric_cycle(oracle, w_n(n));
    if (!report.is_isometric) {
      const Violation& v = *report.violation;
      return {false, "w_" + std::to_string(n) + " violates (" + std::to_string(v.i) + "," + std::to_string(v.j) +
                         ")"};
    }
  }
  return {true, "w_n isometric for n = " + std::to_string(first_n) + ".." + std::to_string(last_n)};
}

Outcome z2_isometry() {
  DistanceOracle oracle(MarkedAlphabet::twisted(), 8);
  const auto rows = z2_distance_table(4, oracle);
  for (const Z2Row& row : rows) {
    if (!row.ok()) {
      return {false, "d(b^" + std::to_string(row.m) + " t^" + std::to_string(row.l) +
                         ") = " + std::to_string(row.actual)};
    }
  }
  return {true, std::to_string(rows.size()) + " entries match |m| + |l|"};
}

Outcome cycle_contrast(std::size_t std_max_length) {
  DistanceOracle std_oracle(MarkedAlphabet::standard(), 8);
  const auto std_cycles = enumerate_isometric_cycles(std_oracle, std_max_length, 16);
  if (std_cycles.empty()) return {false, "no isometric cycles found over std"};
  for (const Word& w : std_cycles) {
    if (w.size() != 4) return {false, "std has an isometric cycle of length " + std::to_string(w.size())};
  }
  DistanceOracle twisted_oracle(MarkedAlphabet::twisted(), 8);
  const auto twisted_cycles = enumerate_isometric_cycles(twisted_oracle, 8, 16);
  const Word target = canonical_cycle(w_n(1));
  if (std::find(twisted_cycles.begin(), twisted_cycles.end(), target) == twisted_cycles.end()) {
    return {false, "canonical w_1 missing from twisted enumeration"};
  }

  // Cross-validation against unpruned enumeration with reference distances.
  for (const MarkedAlphabet* alphabet : {&MarkedAlphabet::standard(), &MarkedAlphabet::twisted()}) {
    DistanceOracle oracle(*alphabet, 8);
    const auto pruned = enumerate_isometric_cycles(oracle, 6, 16);
    const auto brute = oracle::brute_force_isometric_cycles(*alphabet, 6, oracle::reference_ball(*alphabet, 3));
    if (pruned != brute) return {false, "pruned and brute-force enumerations differ over " + alphabet->name()};
  }
  return {true, "std <= " + std::to_string(std_max_length) + ": " + std::to_string(std_cycles.size()) +
                    " cycles, all length 4; twisted <= 8: " + std::to_string(twisted_cycles.size()) +
                    " cycles incl. " + format_word(target)};
}

Outcome metric_sanity(std::size_t samples, std::size_t ball_radius, std::size_t automorphism_samples,
                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);

  DistanceOracle std_oracle(MarkedAlphabet::standard(), 8);
  std::uniform_int_distribution<std::size_t> length(0, 8);
  for (std::size_t s = 0; s < samples; ++s) {
    const NormalForm g = std_element(random_word(std_symbols(), length(rng), rng));
    if (std_oracle.distance_from_identity(g) != g.reduced_length()) {
      return {false, "l1 closed form fails at " + to_string(g)};
    }
  }

  // A radius cap of half the ball radius forces every query through a meet.
  for (const MarkedAlphabet* alphabet : {&MarkedAlphabet::standard(), &MarkedAlphabet::twisted()}) {
    const auto ball = oracle::reference_ball(*alphabet, ball_radius);
    DistanceOracle oracle(*alphabet, static_cast<int>((ball_radius + 1) / 2));
    for (const auto& sphere : ball.spheres) {
      for (const NormalForm& g : sphere) {
        if (oracle.distance_from_identity(g) != ball.lookup(g)) {
          return {false, "bidirectional and unidirectional disagree at " + to_string(g)};
        }
      }
    }
  }

  DistanceOracle twisted_oracle(MarkedAlphabet::twisted(), 8);
  const MarkedAlphabet& twisted = MarkedAlphabet::twisted();
  std::uniform_int_distribution<std::size_t> word_length(0, 12);
  for (std::size_t s = 0; s < automorphism_samples; ++s) {
    const Word w = random_word(twisted.symbols(), word_length(rng), rng);
    const std::size_t d = twisted_oracle.distance_from_identity(eval(w, twisted));
    for (Automorphism a : {Automorphism::kPhi, Automorphism::kPsi}) {
      if (twisted_oracle.distance_from_identity(eval(apply_automorphism(a, w), twisted)) != d) {
        return {false, "automorphism changes the length of " + format_word(w)};
      }
    }
  }
  return {true, std::to_string(samples) + " l1 samples; radius-" + std::to_string(ball_radius) + " balls; " +
                    std::to_string(automorphism_samples) + " phi/psi samples"};
}

Outcome variant_identities() {
  for (std::size_t n = 0; n <= 10; ++n) {
    if (!verify_variant_identities(n)) return {false, "identities fail at n=" + std::to_string(n)};
  }
  return {true, "n = 0..10"};
}

}  // namespace

std::vector<CriterionResult> run(Level level, std::uint64_t seed, const Reporter& report) {
  const bool full = level == Level::kFull;
  std::vector<CriterionResult> results;

  auto record = [&](std::string id, std::string title, double limit, bool gating, auto&& body) {
    CriterionResult r;
    r.id = std::move(id);
    r.title = std::move(title);
    r.time_limit = limit;
    r.gating = gating;
    const auto start = Clock::now();
    try {
      Outcome o = body();
      r.passed = o.passed;
      r.detail = std::move(o.detail);
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = seconds_since(start);
    if (r.passed && r.seconds > limit) {
      r.passed = false;
      r.detail += "; exceeded time budget";
    }
    if (report) report(r);
    results.push_back(std::move(r));
  };

  record("1", "presentation relators are trivial", 1.0, true, [] { return presentation_check(); });
  record("2", "w_n is null by both routes", 1.0, true, [] { return null_family(); });
  record("3", "free split bound and sharpness", 15.0, true, [&] {
    double sharpness_seconds = 0.0;
    const auto start = Clock::now();
    Outcome o = free_split_bound(full ? 1000 : 200, seed, sharpness_seconds);
    const double random_seconds = seconds_since(start) - sharpness_seconds;
    if (o.passed && (random_seconds > 10.0 || sharpness_seconds > 5.0)) {
      o.passed = false;
      o.detail += "; sub-budget exceeded (10 s random, 5 s sharpness)";
    }
    return o;
  });
  record("4", "product shortcut certificates", 30.0, true,
         [&] { return product_shortcut(full ? 1000 : 200, seed + 1); });
  record("5", "u-family words are geodesic", 300.0, true, [&] { return geodesic_family(full ? 5 : 3); });
  record("6", "w_n defines an isometric cycle", 300.0, true,
         [&] { return isometric_cycles(0, full ? 4 : 2, DistanceOracle::kDefaultRadiusCap); });
  if (full) {
    record("6s", "stretch: w_5, w_6 isometric (radius cap 10)", 600.0, false,
           [] { return isometric_cycles(5, 6, 10); });
  }
  record("7", "<b, t> is an isometric Z^2", 60.0, true, [] { return z2_isometry(); });
  record("8", "isometric cycle contrast at fixed horizon", 600.0, true,
         [&] { return cycle_contrast(full ? 12 : 8); });
  record("9", "metric sanity", 120.0, true, [&] {
    return full ? metric_sanity(1000, 6, 200, seed + 2) : metric_sanity(200, 4, 50, seed + 2);
  });
  record("10", "automorphism identities", 1.0, true, [] { return variant_identities(); });
  return results;
}

std::string format_line(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof(timing), "(%.2f s / %.0f s)", r.seconds, r.time_limit);
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << (r.id.size() < 2 ? "  " : " ") << r.title << " " << timing;
  if (!r.gating) os << " [not gating]";
  if (!r.detail.empty()) os << " " << r.detail;
  return os.str();
}

bool all_passed(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CriterionResult& r) { return r.passed || !r.gating; });
}

}  // namespace scl::acceptance
