#include "sidi/cli.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "sidi/closed_form.hpp"
#include "sidi/io.hpp"
#include "sidi/orderings.hpp"
#include "sidi/spectra.hpp"
#include "sidi/verify.hpp"

namespace sidi::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Sign parse_sign(const std::string& s) {
  if (s == "+" || s == "+1" || s == "1" || s == "pos") return Sign::Positive;
  if (s == "-" || s == "-1" || s == "neg") return Sign::Negative;
  throw UsageError("sign must be + or -, got '" + s + "'");
}

// Six decimals, with -0.000000 printed as 0.000000.
std::string clean6(double v) {
  std::string s = fixed6(v);
  if (s == "-0.000000") s.erase(0, 1);
  return s;
}

int emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    return kExitOk;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    err << "error: cannot write " << path << '\n';
    return kExitIo;
  }
  f << text;
  f.close();
  if (!f) {
    err << "error: failed writing " << path << '\n';
    return kExitIo;
  }
  return kExitOk;
}

std::string signed_cycle_label(const SignedCycle& c) {
  return "C" + std::to_string(c.length) + sign_char(c.sign);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Energy and iota energy of signed digraphs; orderings of bicyclic pairs of even cycles"};
  app.name(args.empty() ? "sidi" : args.front());
  app.require_subcommand(1);

  double tolerance = kTieTolerance;
  auto add_tolerance = [&tolerance](CLI::App* sub) {
    sub->add_option("--tolerance", tolerance, "tie-grouping tolerance")
        ->check(CLI::PositiveNumber);
  };

  // cycle
  int cycle_n = 0;
  std::string cycle_sign_text;
  bool want_energy = false, want_iota = false;
  auto* cycle = app.add_subcommand("cycle", "closed-form energy or iota energy of a signed cycle");
  cycle->add_option("n", cycle_n, "cycle length (>= 2)")->required();
  cycle->add_option("sign", cycle_sign_text, "+ or -")->required();
  auto* iota_flag = cycle->add_flag("--iota", want_iota, "iota energy (default)");
  cycle->add_flag("--energy", want_energy, "energy")->excludes(iota_flag);

  // ordering
  int ordering_n = 0;
  bool same_sign = false, mixed_sign = false, include_floating = false;
  std::string format = "csv", out_path;
  auto* ordering = app.add_subcommand("ordering", "descending iota-energy ordering of cycle pairs");
  ordering->add_option("n", ordering_n, "vertex budget (>= 4)")->required();
  auto* same_flag = ordering->add_flag("--same-sign", same_sign, "pairs with equal signs (default)");
  ordering->add_flag("--mixed", mixed_sign, "pairs with one positive and one negative cycle")
      ->excludes(same_flag);
  ordering->add_flag("--include-floating", include_floating,
                     "with --mixed, keep the pairs (C_m-, C2+), m >= 4");
  ordering->add_option("--format", format, "csv, svg or text")
      ->check(CLI::IsMember({"csv", "svg", "text"}));
  ordering->add_option("--out", out_path, "output file (default stdout)");
  add_tolerance(ordering);

  // extremal
  int extremal_n = 0;
  auto* extremal = app.add_subcommand("extremal", "maximal and minimal iota energy pairs");
  extremal->add_option("n", extremal_n, "vertex budget (>= 4)")->required();
  add_tolerance(extremal);

  // verify
  int n_max = 30;
  auto* verify = app.add_subcommand("verify", "numerically verify the stated orderings and inequalities");
  verify->add_option("--n-max", n_max, "largest vertex budget")->check(CLI::Range(4, 512));
  add_tolerance(verify);

  // spectrum
  std::string graph_path;
  auto* spectrum = app.add_subcommand("spectrum", "eigenvalues and energies of an edge-list file");
  spectrum->add_option("path", graph_path, "edge-list file")->required();

  // floating-pair
  int floating_n = 0;
  auto* floating = app.add_subcommand("floating-pair", "position of (C_{n-2}-, C2+) in the mixed ordering");
  floating->add_option("n", floating_n, "even vertex budget (>= 10)")->required();
  add_tolerance(floating);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*cycle) {
      const Sign s = parse_sign(cycle_sign_text);
      if (want_energy) {
        out << fixed6(energy_cycle(cycle_n, s)) << "  " << energy_cycle_formula(cycle_n, s) << '\n';
      } else {
        out << fixed6(iota_energy_cycle(cycle_n, s)) << "  " << iota_energy_cycle_formula(cycle_n, s)
            << '\n';
      }
      return kExitOk;
    }

    if (*ordering) {
      const SignClass cls = mixed_sign ? SignClass::MixedSign : SignClass::SameSign;
      const auto seq = ordered_sequence(ordering_n, cls, !include_floating, tolerance);
      std::ostringstream text;
      if (format == "csv") write_ordering_csv(text, seq);
      else if (format == "svg") write_ordering_svg(text, seq);
      else write_ordering_text(text, seq);
      return emit(text.str(), out_path, out, err);
    }

    if (*extremal) {
      const auto r = extremal_pairs(extremal_n, tolerance);
      out << "max " << r.max.pair.label() << ' ' << fixed6(r.max.value) << '\n';
      out << "min " << r.min.pair.label() << ' ' << fixed6(r.min.value) << '\n';
      if (!r.agrees_with_stated) {
        err << "warning: extremal pairs differ from " << r.stated_max.label() << " / "
            << r.stated_min.label() << '\n';
        return kExitVerifyFailed;
      }
      return kExitOk;
    }

    if (*verify) {
      VerifyOptions opt;
      opt.n_max = n_max;
      opt.tie_tolerance = tolerance;
      const auto summary = run_verification(opt);
      for (const auto& c : summary.checks) {
        const char* tag = c.status == CheckStatus::Pass ? "PASS"
                          : c.status == CheckStatus::Fail ? "FAIL" : "SKIP";
        out << tag << "  " << c.name << ": " << c.detail << '\n';
      }
      if (const auto* f = summary.first_failure()) {
        err << "verification failed: " << f->name << ": " << f->detail << '\n';
        return kExitVerifyFailed;
      }
      out << "all checks passed\n";
      return kExitOk;
    }

    if (*spectrum) {
      SignedDigraph g;
      try {
        g = read_edge_list(graph_path);
      } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
      } catch (const ParseError& e) {
        err << graph_path << ':' << e.what() << '\n';
        return kExitUsage;
      }
      const auto z = eigenvalues(g);
      out << "vertices " << g.n_vertices() << '\n';
      out << "arcs " << g.n_arcs() << '\n';
      out << "eigenvalues\n";
      for (const auto& v : z) out << "  " << clean6(v.real()) << ' ' << clean6(v.imag()) << '\n';
      out << "energy " << clean6(energy(z)) << '\n';
      out << "iota_energy " << clean6(iota_energy(z)) << '\n';
      const auto comps = strong_component_vertices(g);
      std::size_t nontrivial = 0;
      for (const auto& c : comps) nontrivial += c.size() > 1 ? 1 : 0;
      out << "strong_components " << comps.size() << " (" << nontrivial << " nontrivial)\n";
      return kExitOk;
    }

    if (*floating) {
      const auto r = locate_floating_pair(floating_n, tolerance);
      out << "floating " << r.floating.pair.label() << ' ' << fixed6(r.floating.value) << " rank "
          << r.floating.rank << '\n';
      out << "above " << (r.above ? r.above->pair.label() + " " + fixed6(r.above->value) : "-") << '\n';
      out << "below " << (r.below ? r.below->pair.label() + " " + fixed6(r.below->value) : "-") << '\n';
      if (r.stated) {
        const int a = r.stated->above_negative_length, b = r.stated->below_negative_length;
        const SignedCycle ca{a, Sign::Negative}, cb{b, Sign::Negative};
        const SignedCycle pa{floating_n - 2 - a, Sign::Positive}, pb{floating_n - 2 - b, Sign::Positive};
        out << "stated between (" << signed_cycle_label(ca) << ',' << signed_cycle_label(pa) << ") and ("
            << signed_cycle_label(cb) << ',' << signed_cycle_label(pb) << "): "
            << (*r.agrees_with_stated ? "agrees" : "DISAGREES") << '\n';
        return *r.agrees_with_stated ? kExitOk : kExitVerifyFailed;
      }
      out << "no stated bracket for this n\n";
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const NumericFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}

}  // namespace sidi::cli
