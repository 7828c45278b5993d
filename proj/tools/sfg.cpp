#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sfg/angle.hpp"
#include "sfg/classify.hpp"
#include "sfg/distribution.hpp"
#include "sfg/enumerate.hpp"
#include "sfg/error.hpp"
#include "sfg/factor.hpp"
#include "sfg/newton.hpp"
#include "sfg/report.hpp"
#include "sfg/weil.hpp"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kInputError = 1, kPartial = 2, kInternal = 3 };

struct RunConfig {
  std::vector<std::string> labels;
  std::string file;
  std::string coeffs;
  std::string q;
  long precision = 256;
  std::uint64_t samples = sfg::kDefaultSamples;
  int buckets = sfg::kDefaultBuckets;
  int max_order = 8;
  std::string format = "json";
  unsigned jobs = 1;
  bool full_scale = false;
  unsigned degree = 2;
  int g = 1;
};

long default_precision() {
  if (const char* env = std::getenv("SFG_PRECISION")) return std::atol(env);
  return 256;
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(b, e - b + 1));
  }
  return out;
}

// One input is either a label or the literal coefficient list given by --coeffs.
struct Input {
  std::string name;
  std::optional<sfg::WeilPolynomial> P;
  std::string error;
};

std::vector<Input> collect_inputs(const RunConfig& cfg) {
  const int sources = (!cfg.labels.empty()) + (!cfg.file.empty()) + (!cfg.coeffs.empty());
  if (sources != 1) throw sfg::Error(sfg::ErrorKind::InvalidArgument, "give exactly one of: labels, --file, --coeffs");
  std::vector<Input> out;
  if (!cfg.coeffs.empty()) {
    if (cfg.q.empty()) throw sfg::Error(sfg::ErrorKind::InvalidArgument, "--coeffs needs --q");
    Input in;
    in.name = cfg.coeffs;
    try {
      std::vector<mpz_class> c;
      std::stringstream ss(cfg.coeffs);
      std::string tok;
      while (std::getline(ss, tok, ',')) c.emplace_back(tok);
      in.P = sfg::validate(c, mpz_class(cfg.q));
    } catch (const std::exception& e) {
      in.error = e.what();
    }
    out.push_back(std::move(in));
    return out;
  }
  std::vector<std::string> labels = cfg.labels;
  if (!cfg.file.empty()) {
    if (cfg.file == "-") {
      labels = read_lines(std::cin);
    } else {
      std::ifstream f(cfg.file);
      if (!f) throw sfg::Error(sfg::ErrorKind::InvalidArgument, "cannot read " + cfg.file);
      labels = read_lines(f);
    }
  }
  for (const auto& l : labels) {
    Input in;
    in.name = l;
    try {
      in.P = sfg::parse_label(l);
    } catch (const std::exception& e) {
      in.error = e.what();
    }
    out.push_back(std::move(in));
  }
  return out;
}

struct Outcome {
  json value;
  std::string text;
  int code = kOk;
};

int code_for(const sfg::Error& e) { return sfg::is_input_error(e.kind()) ? kInputError : kInternal; }

// Runs fn on every input with a worker pool; output keeps input order.
template <class F>
int run_batch(const RunConfig& cfg, F fn) {
  const auto inputs = collect_inputs(cfg);
  std::vector<Outcome> results(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      const Input& in = inputs[i];
      Outcome& o = results[i];
      if (!in.P) {
        o.code = kInputError;
        o.value = json{{"input", in.name}, {"error", in.error}};
        continue;
      }
      try {
        o = fn(*in.P);
      } catch (const sfg::Error& e) {
        o.code = code_for(e);
        o.value = json{{"input", in.name}, {"error", e.what()}, {"kind", sfg::to_string(e.kind())}};
      } catch (const std::exception& e) {
        o.code = kInternal;
        o.value = json{{"input", in.name}, {"error", e.what()}};
      }
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(cfg.jobs, static_cast<unsigned>(inputs.size())));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  int code = kOk;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const Outcome& o = results[i];
    if (o.code == kInputError || o.code == kInternal) {
      std::cerr << "sfg: " << inputs[i].name << ": " << o.value.value("error", std::string()) << '\n';
    }
    if (!o.text.empty())
      std::cout << o.text;
    else
      std::cout << o.value.dump() << '\n';
    code = std::max(code, o.code);
  }
  return code;
}

Outcome json_outcome(json j) {
  Outcome o;
  j["schema_version"] = sfg::kSchemaVersion;
  o.value = std::move(j);
  return o;
}

sfg::DistributionOptions dist_options(const RunConfig& cfg) {
  return {static_cast<mpfr_prec_t>(cfg.precision), cfg.jobs};
}

int cmd_enumerate(const RunConfig& cfg) {
  const auto list = sfg::enumerate_weil(cfg.g, mpz_class(cfg.q));
  for (const auto& P : list) {
    if (cfg.format == "json")
      std::cout << json{{"schema_version", sfg::kSchemaVersion}, {"label", sfg::format_label(P)}}.dump() << '\n';
    else
      std::cout << sfg::format_label(P) << '\n';
  }
  return kOk;
}

// Structural classification against the numeric oracle, plus the allowed tables.
Outcome verify_one(const sfg::WeilPolynomial& P, mpfr_prec_t precision) {
  const sfg::SerreFrobeniusGroup G = sfg::classify(P, precision);
  const sfg::RelationLattice L = sfg::angle_rank_numeric(P, precision);
  json j{{"label", sfg::format_label(P)},
         {"structural", json::array({G.delta, G.m})},
         {"numeric", json::array({L.delta(), L.torsion_order})},
         {"provenance", G.provenance}};
  std::vector<std::string> issues;
  if (G.delta != L.delta() || G.m != L.torsion_order) issues.push_back("structural and numeric groups differ");
  if (P.g <= 3 && !sfg::allowed_pair(P.g, G.delta, G.m)) issues.push_back("pair outside the allowed table");
  const bool ss = sfg::is_supersingular(sfg::newton_polygon(P));
  if (ss != (G.delta == 0)) issues.push_back("supersingular iff delta = 0 fails");
  j["issues"] = issues;
  Outcome o;
  o.value = std::move(j);
  o.code = issues.empty() ? kOk : kInputError;
  return o;
}

int cmd_verify(RunConfig cfg) {
  if (cfg.labels.empty() && cfg.file.empty() && cfg.coeffs.empty()) {
    for (const auto& P : sfg::enumerate_weil(cfg.g, mpz_class(cfg.q))) cfg.labels.push_back(sfg::format_label(P));
  }
  const auto prec = static_cast<mpfr_prec_t>(cfg.precision);
  std::atomic<long> checked{0}, failed{0};
  int code = run_batch(cfg, [&](const sfg::WeilPolynomial& P) {
    Outcome o = verify_one(P, prec);
    ++checked;
    if (o.code != kOk) ++failed;
    return o;
  });
  std::cout << json{{"schema_version", sfg::kSchemaVersion}, {"checked", checked.load()}, {"mismatches", failed.load()}}.dump()
            << '\n';
  return failed > 0 ? kInputError : code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serre-Frobenius groups of abelian varieties over finite fields"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.precision = default_precision();

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("labels", cfg.labels, "isogeny class labels such as 2.5.a_ab");
    sub->add_option("--file", cfg.file, "file of labels, one per line ('-' for stdin)");
    sub->add_option("--coeffs", cfg.coeffs, "comma separated coefficients 1,a1,...,a2g");
    sub->add_option("--q", cfg.q, "field size for --coeffs");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--precision", cfg.precision, "working precision in bits")->check(CLI::Range(64L, 1L << 20));
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  };

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub per_input[] = {{"parse", "decode and validate"},
                           {"classify", "Serre-Frobenius group"},
                           {"factor", "isogeny factorization"},
                           {"newton", "Newton polygon and stratum"},
                           {"base-change", "Weil polynomial over a degree r extension"},
                           {"angle-rank", "numeric relation lattice of the Frobenius angles"},
                           {"histogram", "normalized trace histogram"},
                           {"moments", "empirical and exact trace moments"}};
  for (const auto& s : per_input) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    add_input(sub);
    add_common(sub);
  }
  app.get_subcommand("base-change")->add_option("--degree", cfg.degree, "extension degree r")->check(CLI::Range(1u, 4096u));
  for (const char* name : {"histogram", "moments"}) {
    CLI::App* sub = app.get_subcommand(name);
    sub->add_option("--samples", cfg.samples, "number of Frobenius powers N");
    sub->add_flag("--paper-scale", cfg.full_scale, "use 16^6 samples and 4^6 buckets");
  }
  app.get_subcommand("histogram")->add_option("--buckets", cfg.buckets, "bucket count B")->check(CLI::Range(1, 1 << 24));
  app.get_subcommand("moments")->add_option("--max-order", cfg.max_order, "highest moment K")->check(CLI::Range(1, 32));

  CLI::App* en = app.add_subcommand("enumerate", "all Weil polynomials for (g, q)");
  en->add_option("--g", cfg.g, "dimension")->required()->check(CLI::Range(1, 3));
  en->add_option("--q", cfg.q, "field size")->required();
  en->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "text"}));

  CLI::App* ver = app.add_subcommand("verify", "structural vs numeric cross-check over a corpus");
  add_input(ver);
  add_common(ver);
  ver->add_option("--g", cfg.g, "dimension when enumerating")->check(CLI::Range(1, 3));

  CLI11_PARSE(app, argc, argv);

  try {
    if (cfg.full_scale) {
      cfg.samples = sfg::kFullSamples;
      cfg.buckets = sfg::kFullBuckets;
    }
    const auto prec = static_cast<mpfr_prec_t>(cfg.precision);
    if (*en) return cmd_enumerate(cfg);
    if (*ver) return cmd_verify(cfg);
    const std::string name = app.get_subcommands().front()->get_name();

    if (name == "parse")
      return run_batch(cfg, [&](const sfg::WeilPolynomial& P) {
        Outcome o = json_outcome(sfg::polynomial_json(P));
        if (cfg.format == "text") o.text = sfg::format_label(P) + "\t" + sfg::to_string(P.poly()) + "\n";
        return o;
      });
    if (name == "classify")
      return run_batch(cfg, [&](const sfg::WeilPolynomial& P) {
        const auto G = sfg::classify(P, prec);
        Outcome o;
        o.value = sfg::classification_report(P, G);
        o.code = G.partial ? kPartial : kOk;
        if (cfg.format == "text") o.text = sfg::format_label(P) + "\t" + G.group() + "\t" + G.provenance + "\n";
        return o;
      });
    if (name == "factor")
      return run_batch(cfg, [](const sfg::WeilPolynomial& P) {
        return json_outcome(json{{"label", sfg::format_label(P)}, {"factors", sfg::factors_json(sfg::factor(P), P)}});
      });
    if (name == "newton")
      return run_batch(cfg, [](const sfg::WeilPolynomial& P) {
        json j = sfg::newton_json(sfg::newton_polygon(P), P.g);
        j["label"] = sfg::format_label(P);
        return json_outcome(j);
      });
    if (name == "base-change")
      return run_batch(cfg, [&](const sfg::WeilPolynomial& P) {
        const auto B = sfg::base_change(P, cfg.degree);
        json j = sfg::polynomial_json(B);
        j["degree"] = cfg.degree;
        j["source"] = sfg::format_label(P);
        Outcome o = json_outcome(j);
        if (cfg.format == "text") o.text = sfg::format_label(B) + "\n";
        return o;
      });
    if (name == "angle-rank")
      return run_batch(cfg, [&](const sfg::WeilPolynomial& P) {
        json j = sfg::lattice_json(sfg::angle_rank_numeric(P, prec));
        j["label"] = sfg::format_label(P);
        return json_outcome(j);
      });
    if (name == "histogram")
      return run_batch(cfg, [&](const sfg::WeilPolynomial& P) {
        const auto h = sfg::histogram(P, cfg.samples, cfg.buckets, dist_options(cfg));
        Outcome o;
        o.value = sfg::histogram_json(h);
        o.value["label"] = sfg::format_label(P);
        if (cfg.format == "csv") o.text = sfg::histogram_csv(h);
        return o;
      });
    if (name == "moments")
      return run_batch(cfg, [&](const sfg::WeilPolynomial& P) {
        sfg::SerreFrobeniusGroup G = sfg::classify(P, prec);
        if (!G.embedding && G.delta < P.g) G.embedding = sfg::angle_rank_numeric(P, prec);
        const auto emp = sfg::empirical_moments(P, cfg.samples, cfg.max_order, dist_options(cfg));
        const auto report = sfg::moment_report(emp, sfg::exact_moments(P, G, cfg.max_order));
        Outcome o;
        o.value = json{{"schema_version", sfg::kSchemaVersion},
                       {"label", sfg::format_label(P)},
                       {"samples", cfg.samples},
                       {"group", G.group()},
                       {"moments", sfg::moments_json(report)}};
        if (cfg.format == "csv") o.text = sfg::moments_csv(report);
        o.code = G.partial ? kPartial : kOk;
        return o;
      });
  } catch (const sfg::Error& e) {
    std::cerr << "sfg: " << e.what() << '\n';
    return code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "sfg: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}
