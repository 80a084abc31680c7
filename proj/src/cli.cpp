#include "braidoka/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "braidoka/braid.hpp"
#include "braidoka/error.hpp"
#include "braidoka/families.hpp"
#include "braidoka/lattice.hpp"
#include "braidoka/oka.hpp"
#include "braidoka/sl2z.hpp"
#include "braidoka/three.hpp"
#include "text_util.hpp"

namespace braidoka::cli {

namespace {

using ojson = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

cplx parse_complex(const std::string& text) {
  const auto s = detail::normalize_minus(text);
  const auto comma = s.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(s), 0.0};
    return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "expected re,im but got '" + text + "'");
  }
}

ojson complex_json(cplx z) { return ojson::array({z.real(), z.imag()}); }

// Infinity has no JSON spelling; it is written as null.
ojson real_or_null(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

// Integers beyond int64 are written as decimal strings.
ojson big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

ojson matrix_json(const SL2Matrix& m) {
  return ojson::array({ojson::array({big_json(m.a()), big_json(m.b())}), ojson::array({big_json(m.c()), big_json(m.d())})});
}

ojson class_json(const ThreeBraidClass& c) {
  ojson j;
  j["kind"] = to_string(c.kind);
  j["central"] = c.central;
  j["reducible_flag"] = c.reducible_flag;
  j["trace"] = big_json(c.trace);
  j["exponent_sum"] = c.exponent_sum;
  if (c.kind == ThreeKind::Periodic) {
    j["base"] = to_string(c.base);
    j["power"] = c.power;
  }
  if (c.kind == ThreeKind::Reducible || c.central) {
    j["k"] = c.k;
    j["ell"] = c.ell;
  }
  j["entropy"] = c.entropy;
  j["module"] = real_or_null(c.module);
  return j;
}

ojson pair_json(const CommutatorPair& p) {
  ojson j;
  j["b1"] = p.b1.str();
  j["b2"] = p.b2.str();
  j["commutator"] = p.commutator.str();
  j["b1_pure"] = p.b1_pure;
  j["b2_pure"] = p.b2_pure;
  j["trace_b2_b1inv"] = p.trace_b2_b1inv;
  j["trace_b2_b1inv2"] = p.trace_b2_b1inv2;
  j["corollary_hypotheses_violated"] = p.corollary_hypotheses_violated;
  return j;
}

ojson linking_json(const LinkingNumbers& L) {
  ojson rows = ojson::array();
  for (int i = 1; i <= L.strands(); ++i) {
    ojson row = ojson::array();
    for (int j = 1; j <= L.strands(); ++j) row.push_back(i == j ? ojson(nullptr) : ojson(L(i, j)));
    rows.push_back(row);
  }
  return rows;
}

ojson eprime_json(const EPrimeElement& e) {
  return ojson{{"label", e.label}, {"word", e.word.str('e')}, {"tag", e.tag}};
}

ojson oka3_json(const Oka3Verdict& v) {
  ojson j;
  if (v.classified) {
    j["verdict"] = "Classified";
    j["type"] = to_string(v.type);
  } else {
    j["verdict"] = "Violation";
    j["witness_index"] = v.witness_index + 1;
    j["witness"] = v.witness.str('e');
    j["witness_image"] = v.witness_image.str();
    j["entropy"] = v.entropy;
  }
  return j;
}

int default_jobs() {
  if (const char* env = std::getenv("BRAID_OKA_JOBS")) {
    try {
      return std::max(1, std::stoi(env));
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct Options {
  std::string out;
  std::uint64_t seed = 1;
  int jobs = 1;

  std::string braid, a, b, family, hom, model, alpha = "1", tau = "0,1", gen_a, gen_b, path_to;
  std::optional<int> n;
  int maxlen = 2, genus = 0, holes = 1, radius = kDefaultRadius, steps = 10;
  std::int64_t samples = 256, index = 0, keep = 1000;
  std::optional<std::int64_t> sample;
  double modulus = 0.0, tol = 1e-12;
  bool garside = false, relaxed = false, list = false, mirrored = false, csv = false, json = false;
};

Status bool_status(bool ok) { return ok ? Status::Ok : Status::Violation; }

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
  Options o;
  o.jobs = default_jobs();

  CLI::App app{"Braid group, 3-braid classification and monodromy tools", "braidoka"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out, "also write the output to this file");
  app.add_option("--seed", o.seed, "seed for randomized scans");
  app.add_option("--jobs", o.jobs, "worker threads (default $BRAID_OKA_JOBS or 1)");

  auto braid_opts = [&](CLI::App* sc) {
    sc->add_option("--braid", o.braid, "braid word, e.g. \"1 -2\"")->required()->allow_extra_args(false);
    sc->add_option("--n", o.n, "strand count (default: inferred)");
  };
  auto* classify = app.add_subcommand("classify", "Nielsen-Thurston type of a 3-braid");
  braid_opts(classify);
  auto* entropy = app.add_subcommand("entropy", "entropy of a 3-braid");
  braid_opts(entropy);
  auto* module = app.add_subcommand("module", "conformal module of a 3-braid");
  braid_opts(module);
  auto* nf = app.add_subcommand("nf", "Garside left normal form");
  braid_opts(nf);
  auto* linking = app.add_subcommand("linking", "linking numbers of a pure braid");
  braid_opts(linking);

  auto* eq = app.add_subcommand("eq", "equality in B_n");
  eq->add_option("--n", o.n, "strand count");
  eq->add_option("--a", o.a)->required();
  eq->add_option("--b", o.b)->required();
  eq->add_flag("--garside", o.garside, "always use normal forms");

  auto* conj = app.add_subcommand("conj", "conjugacy in B3");
  conj->add_option("--a", o.a)->required();
  conj->add_option("--b", o.b)->required();

  auto* scan = app.add_subcommand("scan-commutators", "zero-entropy commutators of zero-entropy 3-braids");
  scan->add_option("--maxlen", o.maxlen)->required();
  scan->add_flag("--relaxed", o.relaxed, "only require the commutator to have zero entropy");
  scan->add_option("--sample", o.sample, "test this many random pairs instead of enumerating");
  scan->add_option("--keep", o.keep, "pairs listed in the output");

  auto* disc = app.add_subcommand("disc-index", "winding index of the discriminant over |z| = 1");
  auto* fam_opt = disc->add_option("--family", o.family, "family JSON file");
  disc->add_option("--model", o.model, "n,k for the family ζ^n - z^k")->excludes(fam_opt);
  disc->add_option("--samples", o.samples);
  disc->add_option("--tol", o.tol, "relative separability tolerance");

  auto* thm1 = app.add_subcommand("thm1", "reducibility verdict from modulus and index");
  thm1->add_option("--n", o.n)->required();
  thm1->add_option("--modulus", o.modulus)->required();
  thm1->add_option("--index", o.index)->required();

  auto* penner = app.add_subcommand("penner", "entropy and module bounds");
  penner->add_option("--genus", o.genus);
  penner->add_option("--holes", o.holes);
  penner->add_option("--n", o.n, "strand count for the braid bounds");

  auto* oka3 = app.add_subcommand("oka3", "E0 test for a homomorphism F2 -> B3");
  oka3->add_option("--hom", o.hom, "homomorphism JSON file")->required();
  oka3->add_flag("--mirrored", o.mirrored, "also run the mirrored E0 set");

  auto* go = app.add_subcommand("go-surface", "classify a homomorphism into F2");
  go->add_option("--hom", o.hom, "homomorphism JSON file")->required();

  auto* eprime = app.add_subcommand("eprime", "test elements for a surface of genus g with m holes");
  eprime->add_option("--genus", o.genus)->required();
  eprime->add_option("--holes", o.holes)->required();
  eprime->add_flag("--list", o.list, "list the elements");

  auto* lat = app.add_subcommand("lattice-branch", "Weierstrass branch locus of a lattice");
  lat->add_option("--alpha", o.alpha, "re,im");
  lat->add_option("--tau", o.tau, "re,im");
  lat->add_option("--a", o.gen_a, "first generator re,im (with --b, instead of --alpha/--tau)");
  lat->add_option("--b", o.gen_b, "second generator re,im");
  lat->add_option("--radius", o.radius);
  lat->add_option("--path-to", o.path_to, "sample τ linearly from --tau to this value");
  lat->add_option("--steps", o.steps);
  lat->add_flag("--json", o.json);
  lat->add_flag("--csv", o.csv);

  CommandResult res;
  ojson& p = res.payload;
  p["schema"] = kSchemaVersion;

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    res.status = Status::Ok;
    res.text = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    res.status = Status::Error;
    p["status"] = "error";
    p["error"] = {{"code", "UsageError"}, {"message", e.what()}};
    res.text = p.dump(2) + "\n\n" + app.help();
    return res;
  }

  auto* sc = app.get_subcommands().front();
  p["command"] = sc->get_name();
  std::string csv;
  try {
    const std::string name = sc->get_name();
    auto braid = [&](const std::string& text) { return BraidWord::parse(text, o.n); };
    auto braid3 = [&](const std::string& text) { return BraidWord::parse(text, o.n.value_or(3)); };

    if (name == "classify") {
      const auto b = braid3(o.braid);
      p["braid"] = o.braid;
      p["theta"] = matrix_json(theta(b));
      p["result"] = class_json(classify3(b));
    } else if (name == "entropy") {
      const auto b = braid3(o.braid);
      p["braid"] = o.braid;
      p["trace"] = big_json(theta(b).trace());
      p["entropy"] = entropy3(b);
    } else if (name == "module") {
      const double m = conformal_module3(braid3(o.braid));
      p["braid"] = o.braid;
      p["module"] = real_or_null(m);
      p["infinite"] = !std::isfinite(m);
    } else if (name == "nf") {
      const auto b = braid(o.braid);
      const auto f = normal_form(b);
      p["strands"] = f.strands();
      p["infimum"] = f.infimum();
      ojson factors = ojson::array();
      for (const auto& s : f.factors()) factors.push_back(s.cycle_string());
      p["factors"] = factors;
      p["word"] = f.to_word().str();
    } else if (name == "linking") {
      const auto L = linking_numbers(braid(o.braid));
      p["matrix"] = linking_json(L);
      if (L.strands() == 3) {
        const auto t = L.tuple3();
        p["tuple"] = {t[0], t[1], t[2]};
      }
    } else if (name == "eq") {
      auto a = braid(o.a), b = braid(o.b);
      const int n = std::max(a.strands(), b.strands());
      a = BraidWord(n, a.letters());
      b = BraidWord(n, b.letters());
      const bool equal = o.garside ? braid_eq_garside(a, b) : braid_eq(a, b);
      p["strands"] = n;
      p["equal"] = equal;
      res.status = bool_status(equal);
    } else if (name == "conj") {
      const bool c = conj3(braid3(o.a), braid3(o.b));
      p["conjugate"] = c;
      res.status = bool_status(c);
    } else if (name == "scan-commutators") {
      ScanOptions so;
      so.maxlen = o.maxlen;
      so.zero_entropy_factors = !o.relaxed;
      so.jobs = o.jobs;
      so.sample = o.sample;
      so.seed = o.seed;
      so.keep = static_cast<std::size_t>(std::max<std::int64_t>(0, o.keep));
      const auto r = zero_entropy_commutator_scan(so);
      p["maxlen"] = r.maxlen;
      p["mode"] = r.zero_entropy_factors ? "strict" : "relaxed";
      if (o.sample) {
        p["sampled_pairs"] = *o.sample;
        p["seed"] = o.seed;
      } else {
        p["words"] = r.words;
        p["elements"] = r.elements;
        p["candidates"] = r.candidates;
      }
      p["pairs_tested"] = r.pairs_tested;
      p["found"] = r.found;
      p["corollary_counterexamples"] = r.corollary_counterexamples;
      ojson pairs = ojson::array();
      for (const auto& pr : r.pairs) pairs.push_back(pair_json(pr));
      p["pairs"] = pairs;
      res.status = bool_status(r.corollary_counterexamples == 0);
    } else if (name == "disc-index") {
      LaurentFamily f;
      if (!o.family.empty()) {
        f = LaurentFamily::from_json(read_file(o.family));
      } else if (!o.model.empty()) {
        const auto c = parse_complex(o.model);
        f = LaurentFamily::model(static_cast<int>(c.real()), static_cast<int>(c.imag()));
      } else {
        throw Error(ErrorCode::UsageError, "disc-index needs --family or --model");
      }
      const auto r = discriminant_index(f, o.samples, o.tol);
      p["degree"] = f.degree;
      p["index"] = r.index;
      p["samples_used"] = r.samples_used;
      p["min_abs_discriminant"] = r.min_abs_discriminant;
    } else if (name == "thm1") {
      const auto v = thm1_verdict(*o.n, o.modulus, o.index);
      p["n"] = *o.n;
      p["modulus"] = o.modulus;
      p["index"] = o.index;
      p["threshold"] = thm1_threshold(*o.n);
      p["verdict"] = to_string(v);
      res.status = bool_status(v == Thm1Verdict::Reducible);
    } else if (name == "penner") {
      if (penner->count("--genus") || penner->count("--holes") || !o.n) {
        p["genus"] = o.genus;
        p["holes"] = o.holes;
        p["penner_bound"] = penner_bound(o.genus, o.holes);
      }
      if (o.n) {
        p["n"] = *o.n;
        p["nbraid_entropy_lower"] = nbraid_entropy_lower(*o.n);
        p["nbraid_module_upper"] = nbraid_module_upper(*o.n);
      }
    } else if (name == "oka3") {
      const auto h = SurfaceHom::from_json(read_file(o.hom));
      const auto v = oka3_decide(h);
      p["result"] = oka3_json(v);
      if (o.mirrored) {
        const auto vm = oka3_decide(h, true);
        p["mirrored_differs"] = !(vm == v);
        p["mirrored_result"] = oka3_json(vm);
      }
      res.status = bool_status(v.classified);
    } else if (name == "go-surface") {
      const auto h = SurfaceHom::from_json(read_file(o.hom));
      const auto v = go_surface_decide(h);
      p["verdict"] = to_string(v.kind);
      switch (v.kind) {
        case GOKind::GOReducible:
          p["trivial_image"] = v.trivial_image;
          if (!v.trivial_image) {
            p["peripheral"] = std::string(to_string(v.peripheral));
            p["root"] = v.root.str();
            p["root_peripheral_power"] = v.root_peripheral_power;
          }
          p["generator_powers"] = v.generator_powers;
          break;
        case GOKind::GOSphereHolomorphic:
        case GOKind::NotGOSphereAntiholomorphic: {
          p["triple"] = v.triple;
          ojson per = ojson::array();
          for (auto q : v.triple_peripherals) per.push_back(std::string(to_string(q)));
          p["peripherals"] = per;
          break;
        }
        case GOKind::NotGO:
          p["reason"] = v.reason;
          if (v.witness) p["witness"] = eprime_json(*v.witness);
          if (v.witness || !v.witness_image.empty()) p["witness_image"] = v.witness_image.str();
          break;
      }
      res.status = bool_status(v.kind == GOKind::GOReducible || v.kind == GOKind::GOSphereHolomorphic);
    } else if (name == "eprime") {
      const SurfaceSignature sig{o.genus, o.holes};
      const auto set = eprime_generate(sig);
      const std::int64_t x = sig.rank();
      p["genus"] = sig.genus;
      p["holes"] = sig.holes;
      p["rank"] = x;
      p["count"] = set.size();
      p["formula_count"] = eprime_count_formula(sig);
      p["bound"] = x * x * x;
      if (o.list) {
        ojson els = ojson::array();
        for (const auto& e : set.elements) els.push_back(eprime_json(e));
        p["elements"] = els;
      }
      res.status = bool_status(static_cast<std::int64_t>(set.size()) <= x * x * x);
    } else if (name == "lattice-branch") {
      LatticeSpec spec;
      if (!o.gen_a.empty() || !o.gen_b.empty()) {
        if (o.gen_a.empty() || o.gen_b.empty()) throw Error(ErrorCode::UsageError, "--a and --b go together");
        spec = normalize_generators(parse_complex(o.gen_a), parse_complex(o.gen_b));
      } else {
        spec = {parse_complex(o.alpha), parse_complex(o.tau)};
        if (spec.tau.imag() < 0) spec.tau = -spec.tau;  // same lattice
      }
      p["alpha"] = complex_json(spec.alpha);
      p["tau"] = complex_json(spec.tau);
      p["radius"] = o.radius;
      if (!o.path_to.empty()) {
        const auto path = branch_locus_path(spec.alpha, spec.tau, parse_complex(o.path_to), o.steps, o.radius);
        ojson rows = ojson::array();
        std::ostringstream c;
        c << std::setprecision(17) << "t,tau_re,tau_im,e1_re,e1_im,e2_re,e2_im,e3_re,e3_im\n";
        for (const auto& s : path) {
          rows.push_back({{"t", s.t}, {"tau", complex_json(s.tau)},
                          {"e", {complex_json(s.locus.e[0]), complex_json(s.locus.e[1]), complex_json(s.locus.e[2])}}});
          c << s.t << ',' << s.tau.real() << ',' << s.tau.imag();
          for (const auto& e : s.locus.e) c << ',' << e.real() << ',' << e.imag();
          c << '\n';
        }
        p["path"] = rows;
        csv = c.str();
      } else {
        const auto bl = branch_locus(spec, o.radius);
        p["e"] = {complex_json(bl.e[0]), complex_json(bl.e[1]), complex_json(bl.e[2])};
        const cplx sum = bl.e[0] + bl.e[1] + bl.e[2];
        p["sum_abs"] = std::abs(sum);
        std::ostringstream c;
        c << std::setprecision(17) << "e1_re,e1_im,e2_re,e2_im,e3_re,e3_im\n";
        for (std::size_t i = 0; i < 3; ++i) c << (i ? "," : "") << bl.e[i].real() << ',' << bl.e[i].imag();
        c << '\n';
        csv = c.str();
      }
      if (!o.csv) csv.clear();
    }
    if (res.status == Status::Ok) p["status"] = "ok";
    else p["status"] = "violation";
  } catch (const Error& e) {
    res.status = Status::Error;
    p["status"] = "error";
    p["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  } catch (const std::exception& e) {
    res.status = Status::Error;
    p["status"] = "error";
    p["error"] = {{"code", "InternalError"}, {"message", e.what()}};
  }

  res.text = (!csv.empty() && res.status != Status::Error) ? csv : p.dump(2) + "\n";
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) {
      res.status = Status::Error;
      p["status"] = "error";
      p["error"] = {{"code", "InvalidArgument"}, {"message", "cannot write " + o.out}};
      res.text = p.dump(2) + "\n";
    } else {
      f << res.text;
    }
  }
  return res;
}

}  // namespace braidoka::cli
