#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "scl/acceptance.hpp"
#include "scl/cayley.hpp"
#include "scl/error.hpp"
#include "scl/families.hpp"
#include "scl/group.hpp"
#include "scl/shortcut_free.hpp"
#include "scl/shortcut_product.hpp"
#include "scl/words.hpp"

namespace scl::cli {

namespace {

struct RunConfig {
  std::string alphabet = "std";
  std::string generators;  // --gen; overrides --alphabet when set
  int radius_cap = DistanceOracle::kDefaultRadiusCap;
  std::size_t enumeration_cap = 16;
  std::uint64_t seed = acceptance::kDefaultSeed;

  MarkedAlphabet marked_alphabet() const {
    if (!generators.empty()) return MarkedAlphabet::from_generators(generators);
    return MarkedAlphabet::from_spec(alphabet);
  }
};

int default_radius_cap() {
  if (const char* env = std::getenv("SCL_RADIUS_CAP")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      // fall through to the built-in default
    }
  }
  return DistanceOracle::kDefaultRadiusCap;
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << contents;
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  config.radius_cap = default_radius_cap();

  CLI::App app{"scl: shortcut certificates and isometric cycles in F2 x F2", "scl"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--alphabet", config.alphabet, "std, twisted, or sym=word,... over std")->capture_default_str();
  app.add_option("--gen", config.generators, "custom generators, e.g. \"a=a,b=b,c=c,t=dB\"");
  app.add_option("--radius-cap", config.radius_cap, "maximum meet radius of the distance oracle")
      ->capture_default_str();
  app.add_option("--enum-cap", config.enumeration_cap, "maximum cycle length for enumeration")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "random seed")->capture_default_str();

  std::string word_text;
  std::string word2_text;
  std::string csv_path;
  std::string dot_path;
  std::string cert_path;
  std::optional<std::size_t> wn;
  std::size_t max_len = 0;
  int radius = 0;
  std::size_t fam_n = 0;
  std::size_t fam_k = 0;
  std::size_t z2_bound = 0;
  std::string variant = "plain";
  std::string level = "quick";

  auto* reduce = app.add_subcommand("reduce", "freely reduce a word");
  reduce->add_option("word", word_text)->required();

  auto* eval_cmd = app.add_subcommand("eval", "normal form of a word, printed in std letters");
  eval_cmd->add_option("word", word_text)->required();

  auto* dist = app.add_subcommand("dist", "word-metric distance from 1 (or between two words)");
  dist->add_option("word", word_text)->required();
  dist->add_option("word2", word2_text);

  auto* geodesic = app.add_subcommand("geodesic", "test a word for geodesy and print a geodesic witness");
  geodesic->add_option("word", word_text)->required();

  auto* cycle = app.add_subcommand("cycle", "isometric cycles");
  cycle->require_subcommand(1);
  auto* cycle_check = cycle->add_subcommand("check", "check that a null word is an isometric cycle");
  cycle_check->add_option("word", word_text);
  cycle_check->add_option("--wn", wn, "check w_n = [t^n c t^-n, a] instead of a word");
  auto* cycle_enum = cycle->add_subcommand("enumerate", "enumerate isometric cycles through 1");
  cycle_enum->add_option("--max-len", max_len)->required();
  cycle_enum->add_option("--csv", csv_path);

  auto* shortcut_cmd = app.add_subcommand("shortcut", "shortcut certificates");
  shortcut_cmd->require_subcommand(1);
  auto* shortcut_free = shortcut_cmd->add_subcommand("free", "split a null word of a free group");
  shortcut_free->add_option("word", word_text)->required();
  shortcut_free->add_option("--dot", dot_path, "write the cancellation tree as Graphviz");
  auto* shortcut_product = shortcut_cmd->add_subcommand("product", "certificate for a null word over std");
  shortcut_product->add_option("word", word_text)->required();
  shortcut_product->add_option("--cert", cert_path, "write the certificate as JSON");

  auto* family = app.add_subcommand("family", "the word families w_n and u_k");
  family->require_subcommand(1);
  auto* family_wn = family->add_subcommand("wn", "print w_n");
  family_wn->add_option("n", fam_n)->required();
  auto* family_uk = family->add_subcommand("uk", "print u_k and its companions");
  family_uk->add_option("n", fam_n)->required();
  family_uk->add_option("k", fam_k)->required();
  family_uk->add_option("--variant", variant, "plain, prime, dprime or tprime")->capture_default_str();
  auto* family_z2 = family->add_subcommand("z2", "distance table for b^m t^l, |m|, |l| <= bound");
  family_z2->add_option("bound", z2_bound)->required();
  family_z2->add_option("--csv", csv_path);

  auto* ball = app.add_subcommand("ball", "sphere and ball sizes");
  ball->add_option("--radius", radius)->required();
  ball->add_option("--csv", csv_path);

  auto* verify = app.add_subcommand("verify", "reproduction entry points");
  verify->require_subcommand(1);
  auto* verify_acceptance = verify->add_subcommand("acceptance", "run the acceptance suite");
  verify_acceptance->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}))->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (reduce->parsed()) {
      out << format_word(free_reduce(parse_word(word_text, Alphabet::from_text(word_text)))) << "\n";
      return kOk;
    }
    if (eval_cmd->parsed()) {
      const MarkedAlphabet a = config.marked_alphabet();
      out << to_string(eval(a.parse(word_text), a)) << "\n";
      return kOk;
    }
    if (dist->parsed()) {
      const MarkedAlphabet a = config.marked_alphabet();
      DistanceOracle oracle(a, config.radius_cap);
      const NormalForm g = eval(a.parse(word_text), a);
      if (word2_text.empty()) {
        out << oracle.distance_from_identity(g) << "\n";
      } else {
        out << oracle.distance(g, eval(a.parse(word2_text), a)) << "\n";
      }
      return kOk;
    }
    if (geodesic->parsed()) {
      const MarkedAlphabet a = config.marked_alphabet();
      DistanceOracle oracle(a, config.radius_cap);
      const Word w = a.parse(word_text);
      const Word witness = oracle.geodesic_witness(eval(w, a));
      const bool is_geo = witness.size() == w.size();
      out << (is_geo ? "geodesic" : "not geodesic") << " (length " << w.size() << ", distance " << witness.size()
          << ")\nwitness: " << format_word(witness) << "\n";
      return is_geo ? kOk : kPropertyViolated;
    }
    if (cycle_check->parsed()) {
      const MarkedAlphabet a = config.marked_alphabet();
      Word w;
      if (wn) {
        if (a.symbols() != MarkedAlphabet::twisted().symbols()) {
          throw UsageError("--wn requires an alphabet over the symbols a, b, c, t");
        }
        const Word base = w_n(*wn);
        w = Word(a.symbols(), std::vector<Letter>(base.begin(), base.end()));
      } else if (!word_text.empty()) {
        w = a.parse(word_text);
      } else {
        throw UsageError("cycle check needs a word or --wn N");
      }
      DistanceOracle oracle(a, config.radius_cap);
      const CycleReport report = is_isometric_cycle(oracle, w);
      if (report.is_isometric) {
        out << "isometric\n";
        return kOk;
      }
      const Violation& v = *report.violation;
      out << "not isometric: d(g_" << v.i << ", g_" << v.j << ") = " << v.actual << ", expected " << v.expected
          << "\n";
      return kPropertyViolated;
    }
    if (cycle_enum->parsed()) {
      const MarkedAlphabet a = config.marked_alphabet();
      DistanceOracle oracle(a, config.radius_cap);
      const auto cycles = enumerate_isometric_cycles(oracle, max_len, config.enumeration_cap);
      std::string csv = "length,word\n";
      for (const Word& w : cycles) csv += std::to_string(w.size()) + "," + format_word(w) + "\n";
      out << cycles.size() << " isometric cycles of length <= " << max_len << " over " << a.name() << "\n";
      for (const Word& w : cycles) out << "  " << w.size() << "  " << format_word(w) << "\n";
      if (!csv_path.empty()) write_file(csv_path, csv);
      return kOk;
    }
    if (shortcut_free->parsed()) {
      const Word u = parse_word(word_text, Alphabet::from_text(word_text));
      const FreeSplit split = split_null_word(u);
      out << "rotation " << split.rotation << "\nu1 " << format_word(split.u1) << "\nu2 " << format_word(split.u2)
          << "\nmin " << std::min(split.u1.size(), split.u2.size()) << " (floor(|u|/3) = " << u.size() / 3
          << ")\n";
      if (!dot_path.empty()) {
        const CancellationTree tree(u);
        write_file(dot_path, tree.to_dot(centroid(tree)));
      }
      return kOk;
    }
    if (shortcut_product->parsed()) {
      if (!config.generators.empty() || config.alphabet != "std") {
        throw UsageError(
            "shortcut certificates exist only over the std alphabet {a,b,c,d}; "
            "for other generating sets use `scl cycle check`");
      }
      const Word w = parse_word(word_text, std_symbols());
      const ShortcutCertificate cert = shortcut(w);
      const VerifyResult verdict = verify_certificate(w, cert);
      const std::string json = to_json(cert);
      out << json << "\n" << "verify: " << to_string(verdict.reason) << "\n";
      if (!cert_path.empty()) write_file(cert_path, json + "\n");
      return verdict ? kOk : kPropertyViolated;
    }
    if (family_wn->parsed()) {
      out << format_word(w_n(fam_n)) << "\n";
      return kOk;
    }
    if (family_uk->parsed()) {
      out << format_word(u_family({fam_n, fam_k, parse_variant(variant)})) << "\n";
      return kOk;
    }
    if (family_z2->parsed()) {
      DistanceOracle oracle(MarkedAlphabet::twisted(), config.radius_cap);
      const auto rows = z2_distance_table(z2_bound, oracle);
      std::string csv = "m,l,expected,actual,ok\n";
      bool all_ok = true;
      for (const Z2Row& r : rows) {
        csv += std::to_string(r.m) + "," + std::to_string(r.l) + "," + std::to_string(r.expected) + "," +
               std::to_string(r.actual) + "," + (r.ok() ? "1" : "0") + "\n";
        all_ok = all_ok && r.ok();
      }
      out << csv;
      if (!csv_path.empty()) write_file(csv_path, csv);
      return all_ok ? kOk : kPropertyViolated;
    }
    if (ball->parsed()) {
      DistanceOracle oracle(config.marked_alphabet(), config.radius_cap);
      const auto rows = oracle.ball_profile(radius);
      std::string csv = "r,sphere,ball\n";
      for (const SphereRow& r : rows) {
        csv += std::to_string(r.radius) + "," + std::to_string(r.sphere) + "," + std::to_string(r.ball) + "\n";
      }
      out << csv;
      if (!csv_path.empty()) write_file(csv_path, csv);
      return kOk;
    }
    if (verify_acceptance->parsed()) {
      const auto results =
          acceptance::run(level == "full" ? acceptance::Level::kFull : acceptance::Level::kQuick, config.seed,
                          [&](const acceptance::CriterionResult& r) { out << acceptance::format_line(r) << std::endl; });
      const bool ok = acceptance::all_passed(results);
      out << (ok ? "all criteria passed" : "some criteria FAILED") << "\n";
      return ok ? kOk : kPropertyViolated;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.is_resource_limit() ? kResourceCap : kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace scl::cli
