#include "cartan/cyclic.hpp"
#include "cartan/der_complex.hpp"
#include "cartan/dsl.hpp"
#include "cartan/hochschild.hpp"
#include "cartan/loop_model.hpp"
#include "cartan/report.hpp"
#include "cartan/reproduce.hpp"
#include "cartan/suite.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

using namespace cartan;

namespace {

struct Args {
  std::string input;
  int max_degree = 10;
  int k = 1;
  int trials = 25;
  std::uint64_t seed = 1;
  bool heavy = false;
  std::string format = "table";
};

std::string show_terms(const PresentationPtr& p, const Combination<Monomial>& c) {
  return Element(p, Terms(c.begin(), c.end())).to_string();
}

nlohmann::json base_request(const std::string& command, const Args& a) {
  return {{"command", command}, {"input", a.input}, {"max_degree", a.max_degree}};
}

void add_checks(ReportSection& sec, const IdentityReport& rep, const std::string& prefix = "") {
  for (const auto& [name, count] : rep.checks) {
    std::string detail;
    for (const auto& f : rep.failures)
      if (f.identity == name) {
        detail = f.witness;
        break;
      }
    sec.checks.push_back({prefix + name + " (" + std::to_string(count) + " evaluations)", detail.empty(), detail});
  }
}

std::vector<Derivation> der_representatives(const PresentationPtr& p) {
  std::vector<Derivation> out;
  for (const DerHomology& h : der_homology_all(p))
    for (const Derivation& t : h.representatives) out.push_back(t);
  return out;
}

Report cmd_cohomology(const SourceDocument& doc, const Args& a) {
  Report r;
  r.request = base_request("cohomology", a);
  const LoopModel model = LoopModel::build(doc.algebra);
  ReportSection& sec = r.section("H(AV)");
  const auto show = [&](const Combination<Monomial>& c) { return show_terms(model.extended(), c); };
  for (const auto& h : cohomology_range(model.base_complex(), 0, a.max_degree)) sec.cohomology.push_back(record_of<Monomial>(h, show));
  return r;
}

Report cmd_loop(const SourceDocument& doc, const Args& a) {
  Report r;
  r.request = base_request("loop", a);
  const LoopModel model = LoopModel::build(doc.algebra);
  ReportSection& sec = r.section("H(L)");
  const auto show = [&](const Combination<Monomial>& c) { return show_terms(model.extended(), c); };
  for (const auto& h : cohomology_range(model.complex(), 0, a.max_degree)) sec.cohomology.push_back(record_of<Monomial>(h, show));
  return r;
}

Report cmd_hodge(const SourceDocument& doc, const Args& a) {
  Report r;
  r.request = base_request("hodge", a);
  r.request["k"] = a.k;
  const LoopModel model = LoopModel::build(doc.algebra);
  ReportSection& sec = r.section("H(L_(" + std::to_string(a.k) + "))");
  const auto show = [&](const Combination<Monomial>& c) { return show_terms(model.extended(), c); };
  for (const auto& h : cohomology_range(model.hodge_complex(a.k), 0, a.max_degree))
    sec.cohomology.push_back(record_of<Monomial>(h, show, "H_(" + std::to_string(a.k) + ")"));
  return r;
}

Report cmd_der_homology(const SourceDocument& doc, const Args& a) {
  Report r;
  r.request = base_request("der-homology", a);
  ReportSection& sec = r.section("H(Der)");
  for (const DerHomology& h : der_homology_all(doc.algebra)) {
    CohomologyRecord rec{"H(Der)", h.n, h.cohomology.dimension(), {}};
    for (const Derivation& t : h.representatives) rec.basis.push_back(t.to_string());
    sec.cohomology.push_back(rec);
  }
  return r;
}

Report cmd_cartan_check(const SourceDocument& doc, const Args& a) {
  Report r;
  r.request = base_request("cartan-check", a);
  r.request["trials"] = a.trials;
  r.seed = a.seed;
  SuiteOptions o;
  o.max_degree = a.max_degree;
  o.trials = a.trials;
  o.seed = a.seed;
  o.cyclic_degree = std::min(o.cyclic_degree, a.max_degree);
  const SuiteResult res = run_identity_suite(doc.algebra, o, der_representatives(doc.algebra));
  add_checks(r.section("loop model calculus"), res.loop);
  add_checks(r.section("Hochschild calculus"), res.hochschild);
  add_checks(r.section("comparison maps"), res.comparison);
  add_checks(r.section("cyclic homotopy"), res.cyclic);
  r.section("summary").data["evaluations"] = res.evaluations();
  return r;
}

Report cmd_hochschild(const SourceDocument& doc, const Args& a) {
  Report r;
  r.request = base_request("hochschild", a);
  const HochschildComplex hc(doc.algebra);
  const LoopModel model = LoopModel::build(doc.algebra);
  ReportSection& sec = r.section("HH(A)");
  const auto show = [&](const Combination<ChainWord>& c) {
    Chain ch;
    for (const auto& [w, x] : c) ch.add(w, x);
    return hc.format(ch);
  };
  std::string mismatch;
  for (const auto& h : cohomology_range(hc.complex(), 0, a.max_degree)) {
    sec.cohomology.push_back(record_of<ChainWord>(h, show, "HH"));
    const std::size_t loop_dim = loop_cohomology(model, h.degree).dimension();
    if (loop_dim != h.dimension())
      mismatch += "degree " + std::to_string(h.degree) + ": " + std::to_string(h.dimension()) + " vs " +
                  std::to_string(loop_dim) + "; ";
  }
  sec.checks.push_back({"dim HH^n = dim H^n(L) for n <= " + std::to_string(a.max_degree), mismatch.empty(), mismatch});
  return r;
}

Report cmd_cyclic(const SourceDocument& doc, const Args& a) {
  Report r;
  r.request = base_request("cyclic", a);
  const LoopModel model = LoopModel::build(doc.algebra);
  ReportSection& sec = r.section("H(E)");
  const auto show = [&](const Combination<CyclicKey>& c) { return format_cyclic(model, c); };
  for (const auto& h : cohomology_range(cyclic_complex(model), 0, a.max_degree))
    sec.cohomology.push_back(record_of<CyclicKey>(h, show, "HC"));
  ReportSection& checks = r.section("cyclic identities");
  for (const Derivation& t : der_representatives(doc.algebra))
    add_checks(checks, check_cyclic_cartan(model, t, a.max_degree), "theta = " + t.to_string() + ": ");
  return r;
}

Report cmd_pairing(const SourceDocument& doc, const Args& a) {
  Report r;
  r.request = base_request("pairing", a);
  r.request["k"] = a.k;
  const LoopModel model = LoopModel::build(doc.algebra);
  const FundamentalClass fc = fundamental_class(model);
  ReportSection& sec = r.section("pairing");
  sec.data["formal_dimension"] = fc.dimension;
  sec.data["fundamental_class"] = fc.representative.to_string();
  for (int n = -fc.dimension; n <= a.max_degree; ++n) {
    const PairingMatrix pm = pairing_matrix(model, fc, a.k, n);
    if (pm.rows == 0 && pm.cols == 0) continue;
    const std::string name = "n = " + std::to_string(n) + ": " + std::to_string(pm.rows) + "x" + std::to_string(pm.cols) +
                             " of rank " + std::to_string(pm.rank);
    sec.checks.push_back({name, pm.nondegenerate(), pm.nondegenerate() ? "" : "degenerate pairing"});
  }
  ReportSection& hit = r.section("fundamental class");
  for (const Derivation& t : der_representatives(doc.algebra)) {
    const auto alpha = hit_fundamental_class(model, fc, t);
    hit.checks.push_back({"e_" + t.to_string() + " hits the fundamental class" +
                              (alpha ? " at " + alpha->to_string() : std::string()),
                          alpha.has_value(), alpha ? "" : "no witness in L_(1)"});
  }
  return r;
}

Report cmd_reproduce(const std::string& name, const Args& a) {
  ReproduceOptions o;
  o.max_degree = a.max_degree;
  o.heavy = a.heavy;
  o.suite.trials = a.trials;
  o.suite.seed = a.seed;
  if (name != "all") return reproduce(name, o);
  Report all;
  all.request = {{"command", "reproduce"}, {"fixture", "all"}, {"max_degree", a.max_degree}, {"heavy", a.heavy},
                 {"trials", a.trials}};
  all.seed = a.seed;
  for (const std::string& f : fixture_names()) {
    Report one = reproduce(f, o);
    for (ReportSection& s : one.sections) {
      s.title = f + ": " + s.title;
      all.sections.push_back(std::move(s));
    }
  }
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with Sullivan algebras, loop models and their Cartan calculus"};
  app.require_subcommand(1);
  Args a;
  std::string fixture;

  const std::map<std::string, std::string> help = {
      {"cohomology", "dim H^n of the algebra with bases"},
      {"loop", "cohomology of the free loop model L"},
      {"hodge", "cohomology of the word-length piece L_(k)"},
      {"der-homology", "homology of the derivation complex"},
      {"cartan-check", "randomized verification of the calculus identities"},
      {"hochschild", "Hochschild homology from the normalized chain complex"},
      {"cyclic", "cohomology of L[u] with d + us and the cyclic identities"},
      {"pairing", "evaluation pairing and detection of the fundamental class"},
      {"reproduce", "regression checks for a bundled fixture (or all)"}};
  for (const auto& [name, text] : help) {
    CLI::App* sub = app.add_subcommand(name, text);
    if (name == "reproduce") {
      sub->add_option("fixture", fixture, "fixture name or 'all'")->required();
      sub->add_flag("--heavy", a.heavy, "also run the large elliptic fixture");
    } else {
      sub->add_option("input", a.input, ".cdga file")->required()->check(CLI::ExistingFile);
    }
    sub->add_option("--max-degree", a.max_degree, "degree bound")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", a.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    if (name == "hodge" || name == "pairing") sub->add_option("--k", a.k, "word length")->check(CLI::NonNegativeNumber);
    if (name == "cartan-check" || name == "reproduce") {
      sub->add_option("--trials", a.trials, "randomized trials")->check(CLI::PositiveNumber);
      sub->add_option("--seed", a.seed, "PRNG seed");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  if (command == "reproduce" && sub->count("--max-degree") == 0) a.max_degree = -1;
  const Format format = a.format == "json" ? Format::Json : Format::Table;

  try {
    Report r;
    if (command == "reproduce") {
      r = cmd_reproduce(fixture, a);
    } else {
      const SourceDocument doc = parse_file(a.input);
      if (command == "cohomology") r = cmd_cohomology(doc, a);
      else if (command == "loop") r = cmd_loop(doc, a);
      else if (command == "hodge") r = cmd_hodge(doc, a);
      else if (command == "der-homology") r = cmd_der_homology(doc, a);
      else if (command == "cartan-check") r = cmd_cartan_check(doc, a);
      else if (command == "hochschild") r = cmd_hochschild(doc, a);
      else if (command == "cyclic") r = cmd_cyclic(doc, a);
      else r = cmd_pairing(doc, a);
      r.presentation_hash = presentation_hash(*doc.algebra);
    }
    std::cout << serialize_result(r, format);
    return r.ok() ? 0 : 1;
  } catch (const ParseError& e) {
    std::cerr << a.input << ":" << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
