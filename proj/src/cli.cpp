#include "crystbraid/cli.hpp"

#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "crystbraid/conjugacy.hpp"
#include "crystbraid/errors.hpp"
#include "crystbraid/frobenius.hpp"
#include "crystbraid/io.hpp"
#include "crystbraid/parallel.hpp"
#include "crystbraid/subgroups.hpp"
#include "crystbraid/torsion.hpp"

namespace cryst::cli {

namespace {

using io::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<int> n;
  bool json = false;
  bool text = false;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> element_json;
  std::vector<std::string> inputs;  // positional element words / JSON
};

class Session {
 public:
  Session(Options& opt, std::ostream& out) : opt_(opt), out_(out) {}

  int strands() const {
    if (!opt_.n) throw UsageError("--n is required");
    return *opt_.n;
  }

  // Elements from --element-json first, then positionals.
  std::vector<Element> elements(std::size_t expected) const {
    std::vector<std::string> sources = opt_.element_json;
    sources.insert(sources.end(), opt_.inputs.begin(), opt_.inputs.end());
    if (sources.size() != expected)
      throw UsageError("expected " + std::to_string(expected) + " element argument(s), got " +
                       std::to_string(sources.size()));
    std::vector<Element> out;
    for (const auto& s : sources) {
      const auto first = s.find_first_not_of(" \t\n");
      if (first != std::string::npos && s[first] == '{' && !opt_.n) {
        out.push_back(io::element_from_json(parse_json(s)));
      } else {
        out.push_back(io::parse_element(strands(), s));
      }
    }
    for (const auto& g : out)
      if (g.strands() != out.front().strands()) throw DegreeMismatch(out.front().strands(), g.strands());
    return out;
  }

  Element element() const { return elements(1).front(); }

  void emit(const Element& g) const {
    if (opt_.text)
      out_ << g.to_string() << '\n';
    else
      out_ << io::to_json(g).dump() << '\n';
  }

  // Text by default, JSON with --json.
  void emit(const json& j, const std::string& text) const {
    if (opt_.json)
      out_ << j.dump() << '\n';
    else
      out_ << text << (text.empty() || text.back() == '\n' ? "" : "\n");
  }

  const Options& opt() const { return opt_; }

 private:
  static json parse_json(const std::string& s) {
    try {
      return json::parse(s);
    } catch (const json::exception& e) {
      throw ParseError(std::string("bad element JSON: ") + e.what());
    }
  }

  Options& opt_;
  std::ostream& out_;
};

json report_json(const SubgroupReport& r) {
  return {{"holonomy_order", r.holonomy_order},
          {"bieberbach", r.bieberbach},
          {"det_spectrum", r.det_spectrum},
          {"abelianization", io::to_json(r.abelianization)}};
}

std::string report_text(const SubgroupReport& r) {
  std::ostringstream os;
  os << "holonomy order: " << r.holonomy_order << "\nbieberbach: " << (r.bieberbach ? "yes" : "no")
     << "\ndeterminants:";
  for (int d : r.det_spectrum) os << ' ' << d;
  os << "\nabelianization: " << r.abelianization.to_string() << '\n';
  return os.str();
}

json certificate_json(const frobenius::Witness& w) {
  json rel = json::array();
  for (const auto& r : w.certificate)
    rel.push_back({{"relation", r.name}, {"lhs", io::to_json(r.lhs)}, {"rhs", io::to_json(r.rhs)}, {"holds", r.holds}});
  return {{"x", io::to_json(w.x)}, {"v", io::to_json(w.v)}, {"relations", rel}, {"valid", w.valid()}};
}

std::string certificate_text(const frobenius::Witness& w) {
  std::string s;
  for (const auto& r : w.certificate) s += r.name + ": " + (r.holds ? "holds" : "FAILS") + '\n';
  s += w.valid() ? "certified\n" : "not certified\n";
  return s;
}

frobenius::Params parse_params(const std::string& text) {
  frobenius::Params r{};
  std::stringstream ss(text);
  std::string item;
  std::size_t k = 0;
  while (std::getline(ss, item, ',')) {
    if (k == r.size()) throw UsageError("--r takes exactly 6 comma-separated integers");
    try {
      std::size_t used = 0;
      r[k++] = std::stoll(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("--r: '" + item + "' is not an integer");
    }
  }
  if (k != r.size()) throw UsageError("--r takes exactly 6 comma-separated integers");
  return r;
}

std::string orbit_lengths(const OrbitTable& t) {
  std::string s;
  for (auto len : t.lengths()) s += (s.empty() ? "" : " ") + std::to_string(len);
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  Session s(opt, out);

  CLI::App app{"Arithmetic in crystallographic braid quotients B_n/[P_n,P_n]", "crystbraid"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--n", opt.n, "number of strands")->check(CLI::Range(1, 64));
  app.add_flag("--json", opt.json, "JSON output");
  app.add_flag("--text", opt.text, "human-readable element output");
  app.add_option("--seed", opt.seed, "seed for sampling commands");
  app.add_option("--element-json", opt.element_json, "element given as JSON (repeatable)");

  std::function<void()> action;
  auto command = [&](const std::string& name, const std::string& help, std::size_t max_inputs) {
    CLI::App* sub = app.add_subcommand(name, help);
    if (max_inputs > 0) sub->add_option("elements", opt.inputs, "braid words or element JSON")->expected(0, max_inputs);
    return sub;
  };

  command("nf", "normal form of a word", 1)->callback([&] { action = [&] { s.emit(s.element()); }; });

  command("mul", "product of two elements", 2)->callback([&] {
    action = [&] {
      const auto g = s.elements(2);
      s.emit(mul(g[0], g[1]));
    };
  });

  command("inv", "inverse", 1)->callback([&] { action = [&] { s.emit(inv(s.element())); }; });

  std::int64_t exponent = 0;
  auto* pow_cmd = command("pow", "power", 1);
  pow_cmd->add_option("--exp", exponent, "exponent")->required();
  pow_cmd->callback([&] { action = [&] { s.emit(pow(s.element(), exponent)); }; });

  command("order", "element order", 1)->callback([&] {
    action = [&] {
      const Order o = element_order(s.element());
      s.emit(o ? json(*o) : json(nullptr), to_string(o));
    };
  });

  std::string blocks;
  bool emit_word = false;
  auto* delta_cmd = command("delta", "standard torsion element for a block spec", 0);
  delta_cmd->add_option("--blocks", blocks, "odd block sizes, e.g. 3,3,5")->required();
  delta_cmd->add_flag("--emit-word", emit_word, "print the braid word instead of the element");
  delta_cmd->callback([&] {
    action = [&] {
      const BlockSpec spec = BlockSpec::parse(s.strands(), blocks);
      if (emit_word)
        out << delta_composite_word(spec).to_string() << '\n';
      else
        s.emit(delta_composite(spec));
    };
  });

  int block_r = 0, block_k = 0;
  auto* alpha_cmd = command("alpha", "the element alpha_{r,k}", 0);
  alpha_cmd->add_option("--r", block_r, "offset")->required();
  alpha_cmd->add_option("--k", block_k, "block length")->required();
  alpha_cmd->add_flag("--emit-word", emit_word, "print the braid word instead of the element");
  alpha_cmd->callback([&] {
    action = [&] {
      if (emit_word)
        out << alpha_word(block_r, block_k, s.strands()).to_string() << '\n';
      else
        s.emit(alpha(block_r, block_k, s.strands()));
    };
  });

  auto* orbits_cmd = command("orbits", "orbits of an element on the pair basis", 1);
  orbits_cmd->add_option("--blocks", blocks, "use the closed form for this block spec");
  orbits_cmd->callback([&] {
    action = [&] {
      OrbitTable t;
      if (!blocks.empty()) {
        if (!opt.inputs.empty() || !opt.element_json.empty()) throw UsageError("--blocks takes no element");
        t = closed_form_orbits(BlockSpec::parse(s.strands(), blocks));
      } else {
        t = enumerate_orbits(s.element());
      }
      s.emit(io::to_json(t), t.to_string() + "lengths: " + orbit_lengths(t));
    };
  });

  command("conjugate-test", "decide whether g and h are conjugate", 2)->callback([&] {
    action = [&] {
      const auto g = s.elements(2);
      const ConjugacyResult r = are_conjugate(g[0], g[1]);
      json j = {{"verdict", to_string(r.verdict)}, {"witness", nullptr}};
      if (r.witness) j["witness"] = io::to_json(*r.witness);
      std::string text = to_string(r.verdict);
      if (r.witness) text += '\n' + io::to_json(*r.witness).dump();
      s.emit(j, text);
    };
  });

  command("conjugator", "element conjugating g onto its standard form", 1)->callback([&] {
    action = [&] { s.emit(conjugator_to_delta(s.element())); };
  });

  std::vector<std::string> perms;
  auto* witness_cmd = command("torsion-witness", "lattice correction making a lift of p torsion", 0);
  witness_cmd->add_option("--perm", perms, "permutation in cycle notation")->required()->expected(1);
  witness_cmd->callback([&] {
    action = [&] {
      const Permutation p = Permutation::parse(s.strands(), perms.front());
      const auto w = torsion_witness(p);
      if (!w) {
        s.emit(json(nullptr), "none: " + p.to_string() + " has even order");
        return;
      }
      const Element g = lift_with_correction(p, *w);
      s.emit({{"correction", io::to_json(*w)}, {"element", io::to_json(g)}, {"order", order(p)}},
             io::to_json(*w).dump() + "\n" + io::to_json(g).dump());
    };
  });

  std::int64_t class_order = 0;
  auto* count_cmd = command("count-classes", "conjugacy classes of elements of order k", 0);
  count_cmd->add_option("--k", class_order, "element order")->required()->check(CLI::PositiveNumber);
  count_cmd->callback([&] {
    action = [&] {
      const auto c = count_classes(s.strands(), class_order);
      s.emit(json(c), std::to_string(c));
    };
  });

  auto* holonomy_cmd = command("holonomy", "holonomy matrix of a permutation on the pair basis", 0);
  holonomy_cmd->add_option("--perm", perms, "permutation in cycle notation")->required()->expected(1);
  holonomy_cmd->callback([&] {
    action = [&] {
      const IntMatrix m = holonomy_matrix(Permutation::parse(s.strands(), perms.front()));
      const BigInt det = m.determinant();
      s.emit({{"matrix", io::to_json(m)}, {"det", static_cast<int>(det)}}, m.to_string() + "det: " + det.str());
    };
  });

  auto* bieberbach_cmd = command("bieberbach", "report on the preimage of a permutation subgroup", 0);
  bieberbach_cmd->add_option("--perm", perms, "generator in cycle notation (repeatable)")->required();
  bieberbach_cmd->callback([&] {
    action = [&] {
      std::vector<Permutation> gens;
      for (const auto& p : perms) gens.push_back(Permutation::parse(s.strands(), p));
      const SubgroupReport r = subgroup_report(HolonomySubgroup(s.strands(), gens));
      s.emit(report_json(r), report_text(r));
    };
  });

  command("b3-catalog", "the four crystallographic subgroups of B_3/[P_3,P_3]", 0)->callback([&] {
    action = [&] {
      json j = json::array();
      std::ostringstream text;
      for (const auto& e : b3_catalog()) {
        json rel = json::array();
        bool all = true;
        for (std::size_t k = 0; k < e.presentation.relators.size(); ++k) {
          rel.push_back({{"relator", e.presentation.relator_to_string(e.presentation.relators[k])},
                         {"holds", static_cast<bool>(e.relators_hold[k])}});
          all = all && e.relators_hold[k];
        }
        json gens = json::object();
        for (std::size_t k = 0; k < e.presentation.names.size(); ++k)
          gens[e.presentation.names[k]] = io::to_json(e.presentation.values[k]);
        j.push_back({{"label", e.label},
                     {"holonomy_order", e.holonomy.order()},
                     {"generators", gens},
                     {"relators", rel},
                     {"abelianization", io::to_json(e.abelianization)},
                     {"bieberbach", e.bieberbach},
                     {"det_spectrum", e.det_spectrum}});
        text << "(" << e.label << ") holonomy order " << e.holonomy.order() << ", relators "
             << (all ? "hold" : "FAIL") << ", abelianization " << e.abelianization.to_string() << ", "
             << (e.bieberbach ? "torsion-free" : "has torsion") << '\n';
      }
      s.emit(j, text.str());
    };
  });

  auto* frob = command("frobenius", "the Frobenius subgroup of order 21 in B_7/[P_7,P_7]", 0);
  frob->require_subcommand(1);
  std::string params = "0,0,0,0,0,0";
  auto* verify = frob->add_subcommand("verify", "certify x^3 = 1, v^7 = 1, x v x^-1 = v^2");
  verify->add_option("--r", params, "family parameters r1..r6");
  verify->callback([&] {
    action = [&] {
      namespace fr = frobenius;
      const auto xy = fr::build_xy();
      const PairVector d = fr::defect(xy.x, xy.y);
      const bool defect_ok = d == fr::expected_defect();
      const auto r = parse_params(params);
      const fr::Witness w = fr::build_frobenius(r == fr::Params{} ? fr::n0() : fr::solution_n(r));
      const std::size_t order = generated_subgroup({w.x, w.v}).size();
      json j = certificate_json(w);
      j["defect"] = io::to_json(d);
      j["defect_matches"] = defect_ok;
      j["subgroup_order"] = order;
      s.emit(j, "defect: " + d.to_string() + (defect_ok ? " (matches)" : " (MISMATCH)") + "\n" +
                    certificate_text(w) + "subgroup order: " + std::to_string(order));
      if (!defect_ok || !w.valid() || order != 21) throw DomainError("Frobenius certification failed");
    };
  });

  std::uint64_t samples = 100;
  auto* family = frob->add_subcommand("family", "solve the defining system and sample its members");
  family->add_option("--samples", samples, "number of random members to standardize");
  family->callback([&] {
    action = [&] {
      namespace fr = frobenius;
      const fr::Family f = fr::solve_family();
      const auto tally = bulk::frobenius_sampling_parallel(samples, opt.seed);
      json kernel = json::array();
      for (const auto& k : f.kernel) kernel.push_back(io::to_json(k));
      json j = {{"particular", io::to_json(f.particular)},
                {"kernel_rank", f.kernel.size()},
                {"kernel", kernel},
                {"seed", opt.seed},
                {"samples", tally.samples},
                {"certified", tally.certified},
                {"standardized", tally.standardized},
                {"failures", tally.failures}};
      s.emit(j, "particular: " + f.particular.to_string() + "\nkernel rank: " + std::to_string(f.kernel.size()) +
                    "\nsamples: " + std::to_string(tally.samples) + " (seed " + std::to_string(opt.seed) +
                    ")\ncertified: " + std::to_string(tally.certified) +
                    "\nstandardized: " + std::to_string(tally.standardized));
      if (tally.failures) throw DomainError(std::to_string(tally.failures) + " samples failed");
    };
  });

  auto* fconj = frob->add_subcommand("conjugator", "pure conjugator taking N y to v0");
  fconj->add_option("--r", params, "family parameters r1..r6")->required();
  fconj->callback([&] {
    action = [&] {
      namespace fr = frobenius;
      const PairVector n = fr::solution_n(parse_params(params));
      const PairVector theta = fr::conjugator_between(n);
      s.emit({{"n", io::to_json(n)}, {"conjugator", io::to_json(theta)}},
             "N: " + n.to_string() + "\nconjugator: " + theta.to_string());
    };
  });

  auto* realization = command("abelian-realization", "commuting torsion elements for a block spec", 0);
  realization->add_option("--blocks", blocks, "odd block sizes, e.g. 3,3,5")->required();
  realization->callback([&] {
    action = [&] {
      json j = json::array();
      std::string text;
      for (const auto& g : abelian_realization(BlockSpec::parse(s.strands(), blocks))) {
        j.push_back(io::to_json(g));
        text += io::to_json(g).dump() + '\n';
      }
      s.emit(j, text);
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what();
    const auto extra = app.remaining();
    if (!extra.empty()) err << " (unexpected '" << extra.front() << "')";
    err << '\n';
    return 2;
  }
  if (opt.json && opt.text) {
    err << "usage error: --json and --text are exclusive\n";
    return 2;
  }

  try {
    if (action) action();
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cryst::cli
