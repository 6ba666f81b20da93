#include "schur/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>

#include "schur/presentation.hpp"
#include "schur/rewrite.hpp"
#include "schur/serialize.hpp"

namespace schur::cli {

namespace {

using io::Json;

struct Options {
  long n = 2, r = -1, s = -1, d = -1, p = 0, m = 1;
  long characteristic = 0;
  std::string set = "lambda";
  std::string label;
  std::string format = "json";
  std::string output;
  std::string word;
  std::string preset;
  long count = 1, len = 4;
  unsigned long seed = 1;
  bool half_subsets = false;
  bool verbose = false;
};

void emit(const std::string& payload, const Options& opt, std::ostream& out) {
  if (!opt.output.empty()) {
    std::ofstream f(opt.output);
    if (!f) throw std::invalid_argument("cannot open output file " + opt.output);
    f << payload;
    return;
  }
  out << payload;
}

weights::RSParams rs_params(const Options& opt) {
  if (opt.r < 0 || opt.s < 0)
    throw std::invalid_argument("this invocation requires --r and --s");
  return weights::RSParams(opt.n, opt.r, opt.s);
}

int cmd_weights(const Options& opt, std::ostream& out) {
  weights::WeightSet ws;
  if (opt.set == "lambda" && opt.d >= 0) {
    ws = weights::enumerate_lambda(opt.n, opt.d);
  } else if (opt.set == "lambda-plus" && opt.d >= 0) {
    ws = weights::enumerate_lambda_plus(opt.n, opt.d);
  } else {
    weights::RSParams prm = rs_params(opt);
    if (opt.set == "lambda")
      ws = weights::enumerate_lambda_rs(prm);
    else if (opt.set == "lambda-plus")
      ws = weights::enumerate_lambda_plus_rs(prm);
    else if (opt.set == "pi-prime" || opt.set == "pi-double-prime") {
      weights::WeightSet dom = weights::enumerate_lambda_plus(prm.n, prm.degree());
      for (const auto& w : dom.members) {
        bool keep = opt.set == "pi-prime" ? weights::pi_prime_membership(w, prm)
                                          : weights::pi_double_prime_membership(w, prm);
        if (keep) ws.members.push_back(w);
      }
    } else if (opt.set == "nu-prime")
      ws = weights::nu_prime_set(prm);
    else
      throw std::invalid_argument("unknown weight set " + opt.set);
  }
  if (opt.format == "table") {
    std::ostringstream os;
    for (const auto& w : ws.members) {
      for (size_t i = 0; i < w.size(); ++i) os << (i ? " " : "") << w[i];
      os << "\n";
    }
    emit(os.str(), opt, out);
  } else {
    emit(io::to_json(ws).dump() + "\n", opt, out);
  }
  return kExitOk;
}

int cmd_dims(const Options& opt, std::ostream& out) {
  Json j;
  if (opt.d >= 0 && opt.r < 0) {
    // polynomial case
    weights::WeightSet lam = weights::enumerate_lambda(opt.n, opt.d);
    weights::WeightSet dom = weights::enumerate_lambda_plus(opt.n, opt.d);
    j["lambda_count"] = lam.size();
    j["weyl_square_sum"] = weights::weyl_square_sum(dom).get_str();
    if (opt.characteristic == 0) {
      tensor::Space sp(opt.n, opt.d, 0, exact::Field::rationals());
      j["closure_dimension"] =
          tensor::algebra_closure_dimension(tensor::char0_generator_matrices(sp));
    } else {
      torus::IdealParams ip;
      ip.n = opt.n;
      ip.d = opt.d;
      ip.p = opt.characteristic;
      ip.m = opt.m;
      torus::IdealDescriptor ideal = torus::build_ideal(torus::IdealKind::charp_d, ip);
      j["quotient_dimension"] = torus::quotient_dimension(ideal);
      tensor::Space sp(opt.n, opt.d, 0, exact::Field::prime(opt.characteristic));
      j["s0_dimension"] = tensor::s0_dimension(sp);
    }
  } else {
    weights::RSParams prm = rs_params(opt);
    weights::WeightSet lam = weights::enumerate_lambda_rs(prm);
    weights::WeightSet dom = weights::enumerate_lambda_plus_rs(prm);
    j["lambda_count"] = lam.size();
    j["weyl_square_sum"] = weights::weyl_square_sum(dom).get_str();
    if (opt.characteristic == 0) {
      tensor::Space sp(opt.n, opt.r, opt.s, exact::Field::rationals());
      j["closure_dimension"] =
          tensor::algebra_closure_dimension(tensor::char0_generator_matrices(sp));
      torus::IdealParams ip;
      ip.n = opt.n;
      ip.r = opt.r;
      ip.s = opt.s;
      j["quotient_dimension"] =
          torus::quotient_dimension(torus::build_ideal(torus::IdealKind::char0_rs, ip));
    } else {
      torus::IdealParams ip;
      ip.n = opt.n;
      ip.r = opt.r;
      ip.s = opt.s;
      ip.p = opt.characteristic;
      ip.m = opt.m;
      j["quotient_dimension"] =
          torus::quotient_dimension(torus::build_ideal(torus::IdealKind::charp_rs, ip));
      tensor::Space sp(opt.n, opt.r, opt.s, exact::Field::prime(opt.characteristic));
      j["s0_dimension"] = tensor::s0_dimension(sp);
    }
  }
  if (opt.format == "table") {
    std::ostringstream os;
    for (auto& [k, v] : j.items())
      os << k << " = " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    emit(os.str(), opt, out);
  } else {
    emit(j.dump(2) + "\n", opt, out);
  }
  return kExitOk;
}

present::Label parse_label(const std::string& name) {
  if (name == "char0-rational" || name == "char0_rational") return present::Label::char0_rational;
  if (name == "charp-schur" || name == "charp_schur") return present::Label::charp_schur;
  if (name == "charp-rational" || name == "charp_rational") return present::Label::charp_rational;
  throw std::invalid_argument("unknown presentation label " + name);
}

present::Params presentation_params(present::Label label, const Options& opt) {
  present::Params prm;
  prm.n = opt.n;
  prm.half_subsets_only = opt.half_subsets;
  switch (label) {
    case present::Label::char0_rational:
      if (opt.r < 0 || opt.s < 0) throw std::invalid_argument("label requires --r and --s");
      prm.r = opt.r;
      prm.s = opt.s;
      break;
    case present::Label::charp_schur:
      if (opt.d < 0 || opt.p == 0) throw std::invalid_argument("label requires --d and --p");
      prm.d = opt.d;
      prm.p = opt.p;
      prm.m = opt.m;
      break;
    case present::Label::charp_rational:
      if (opt.r < 0 || opt.s < 0 || opt.p == 0)
        throw std::invalid_argument("label requires --r, --s and --p");
      prm.r = opt.r;
      prm.s = opt.s;
      prm.p = opt.p;
      prm.m = opt.m;
      break;
  }
  return prm;
}

Json report_json(const present::Presentation& pres, const present::VerificationReport& rep) {
  Json j;
  j["label"] = present::label_name(pres.label);
  Json params;
  params["n"] = pres.params.n;
  if (pres.label == present::Label::charp_schur) params["d"] = pres.params.d;
  if (pres.label != present::Label::charp_schur) {
    params["r"] = pres.params.r;
    params["s"] = pres.params.s;
  }
  if (pres.label != present::Label::char0_rational) {
    params["p"] = pres.params.p;
    params["m"] = pres.params.m;
  }
  j["params"] = params;
  j["checks"] = rep.items.size();
  j["failures"] = rep.failures();
  Json items = Json::array();
  for (const auto& item : rep.items) {
    if (item.pass && item.detail.empty()) continue;  // keep the payload small
    Json it;
    it["section"] = item.section;
    it["name"] = item.name;
    it["pass"] = item.pass;
    if (!item.detail.empty()) it["detail"] = item.detail;
    items.push_back(it);
  }
  j["notable_items"] = items;
  j["overall_pass"] = rep.overall_pass();
  return j;
}

int verify_one(present::Label label, const present::Params& prm, const Options& opt,
               std::ostream& out, std::ostream& err) {
  present::Presentation pres = present::build_presentation(label, prm);
  present::VerificationReport rep = present::verify_presentation(pres);
  if (opt.verbose) err << "# " << present::label_name(label) << ": " << rep.items.size()
                       << " checks, " << rep.elapsed_ms << " ms\n";
  if (opt.format == "table") {
    std::ostringstream os;
    os << present::label_name(label) << " n=" << prm.n;
    if (label == present::Label::charp_schur) os << " d=" << prm.d;
    else os << " r=" << prm.r << " s=" << prm.s;
    if (label != present::Label::char0_rational) os << " p=" << prm.p << " m=" << prm.m;
    os << ": " << rep.items.size() << " checks, " << rep.failures() << " failures -> "
       << (rep.overall_pass() ? "PASS" : "FAIL") << "\n";
    for (const auto& item : rep.items)
      if (!item.pass)
        os << "  FAIL [" << item.section << "] " << item.name
           << (item.detail.empty() ? "" : " (" + item.detail + ")") << "\n";
    emit(os.str(), opt, out);
  } else {
    emit(report_json(pres, rep).dump(2) + "\n", opt, out);
  }
  return rep.overall_pass() ? kExitOk : kExitVerificationFailure;
}

int cmd_verify(const Options& opt, std::ostream& out, std::ostream& err) {
  if (!opt.preset.empty()) {
    if (opt.preset != "desk") throw std::invalid_argument("unknown preset " + opt.preset);
    struct Case {
      present::Label label;
      present::Params prm;
    };
    std::vector<Case> cases;
    auto rs = [](long n, long r, long s, long p, long m) {
      present::Params prm;
      prm.n = n;
      prm.r = r;
      prm.s = s;
      prm.p = p;
      prm.m = m;
      return prm;
    };
    auto poly = [](long n, long d, long p, long m) {
      present::Params prm;
      prm.n = n;
      prm.d = d;
      prm.p = p;
      prm.m = m;
      return prm;
    };
    cases.push_back({present::Label::char0_rational, rs(2, 1, 1, 0, 0)});
    cases.push_back({present::Label::char0_rational, rs(3, 1, 1, 0, 0)});
    cases.push_back({present::Label::charp_schur, poly(2, 2, 2, 2)});
    cases.push_back({present::Label::charp_schur, poly(2, 3, 2, 2)});
    cases.push_back({present::Label::charp_schur, poly(2, 2, 3, 1)});
    cases.push_back({present::Label::charp_schur, poly(3, 2, 2, 2)});
    cases.push_back({present::Label::charp_rational, rs(2, 1, 1, 2, 2)});
    cases.push_back({present::Label::charp_rational, rs(2, 1, 1, 3, 1)});
    cases.push_back({present::Label::charp_rational, rs(3, 1, 1, 2, 2)});
    int worst = kExitOk;
    Options table_opt = opt;
    table_opt.format = "table";
    for (const auto& c : cases) {
      int rc = verify_one(c.label, c.prm, table_opt, out, err);
      worst = std::max(worst, rc);
    }
    return worst;
  }
  if (opt.label.empty()) throw std::invalid_argument("verify requires --label or --preset");
  present::Label label = parse_label(opt.label);
  return verify_one(label, presentation_params(label, opt), opt, out, err);
}

int cmd_present(const Options& opt, std::ostream& out) {
  if (opt.label.empty()) throw std::invalid_argument("present requires --label");
  present::Label label = parse_label(opt.label);
  present::Presentation pres = present::build_presentation(label, presentation_params(label, opt));
  if (opt.format == "text")
    emit(present::export_presentation_text(pres), opt, out);
  else
    emit(present::export_presentation_json(pres), opt, out);
  return kExitOk;
}

// word grammar: letters separated by spaces or '*';
//   x(i,j)^k   divided power of the root eps_i - eps_j
//   h(i)^a     binom(H_i, a)
rewrite::GeneratorWord parse_word(const std::string& text) {
  rewrite::GeneratorWord word;
  std::string token;
  std::vector<std::string> tokens;
  for (char ch : text) {
    if (ch == ' ' || ch == '*') {
      if (!token.empty()) tokens.push_back(token);
      token.clear();
    } else {
      token.push_back(ch);
    }
  }
  if (!token.empty()) tokens.push_back(token);
  for (const std::string& t : tokens) {
    long a = 0, b = 0, e = 1;
    char kind = 0;
    size_t caret = t.find('^');
    std::string head = caret == std::string::npos ? t : t.substr(0, caret);
    if (caret != std::string::npos) e = std::stol(t.substr(caret + 1));
    if (head.size() > 3 && head.front() == 'x') {
      kind = 'x';
      size_t comma = head.find(',');
      if (head[1] != '(' || comma == std::string::npos || head.back() != ')')
        throw std::invalid_argument("cannot parse word letter " + t);
      a = std::stol(head.substr(2, comma - 2));
      b = std::stol(head.substr(comma + 1, head.size() - comma - 2));
    } else if (head.size() > 2 && head.front() == 'h') {
      kind = 'h';
      if (head[1] != '(' || head.back() != ')')
        throw std::invalid_argument("cannot parse word letter " + t);
      a = std::stol(head.substr(2, head.size() - 3));
    } else {
      throw std::invalid_argument("cannot parse word letter " + t);
    }
    if (kind == 'x')
      word.push_back(tensor::GeneratorSymbol::divided(tensor::Root{a - 1, b - 1}, e));
    else
      word.push_back(tensor::GeneratorSymbol::binomial(a - 1, e));
  }
  return word;
}

rewrite::GeneratorWord random_word(std::mt19937_64& rng, const rewrite::Context& ctx, long len) {
  rewrite::GeneratorWord word;
  std::vector<tensor::Root> roots = ctx.positive_roots();
  roots.insert(roots.end(), ctx.negative_roots().begin(), ctx.negative_roots().end());
  for (long t = 0; t < len; ++t) {
    long exp = 1 + static_cast<long>(rng() % static_cast<unsigned long>(ctx.q() - 1));
    if (rng() % 3 == 0)
      word.push_back(
          tensor::GeneratorSymbol::binomial(static_cast<long>(rng() % ctx.n()), exp));
    else
      word.push_back(tensor::GeneratorSymbol::divided(roots[rng() % roots.size()], exp));
  }
  return word;
}

int cmd_rewrite_demo(const Options& opt, std::ostream& out) {
  if (opt.p == 0) throw std::invalid_argument("rewrite-demo requires --p");
  rewrite::Context ctx(opt.n, opt.p, opt.m);
  std::vector<rewrite::GeneratorWord> words;
  if (!opt.word.empty()) {
    words.push_back(parse_word(opt.word));
  } else {
    std::mt19937_64 rng(opt.seed);
    for (long i = 0; i < opt.count; ++i) words.push_back(random_word(rng, ctx, opt.len));
  }
  std::vector<long> degrees;
  for (long dd : {2L, 3L})
    if (dd < ctx.q()) degrees.push_back(dd);
  if (degrees.empty()) degrees.push_back(1);

  Json arr = Json::array();
  bool all_ok = true;
  for (const auto& word : words) {
    rewrite::NormalFormElement nf = rewrite::pbw_rewrite(word, ctx);
    Json entry;
    entry["word"] = io::to_json(word);
    entry["word_text"] = rewrite::word_str(word);
    entry["normal_form"] = io::to_json(nf, ctx);
    entry["normal_form_text"] = rewrite::normal_form_str(nf, ctx);
    Json cert;
    for (long dd : degrees) {
      tensor::Space sp(opt.n, dd, 0, exact::Field::prime(opt.p));
      bool ok = rewrite::certify_rewrite(word, nf, sp, ctx);
      cert["E^" + std::to_string(dd)] = ok;
      all_ok = all_ok && ok;
    }
    entry["certified"] = cert;
    arr.push_back(entry);
  }
  emit(arr.dump(2) + "\n", opt, out);
  return all_ok ? kExitOk : kExitVerificationFailure;
}

int cmd_counterexample(const Options& opt, std::ostream& out) {
  present::CounterexampleReport rep = present::counterexample_report();
  if (opt.format == "table" || opt.format == "text") {
    std::ostringstream os;
    os << "(n,r,s) = (4,1,1), d = 4\n";
    os << "lambda = (2,2,0,0)\n";
    os << "entry-box membership (all entries in [0, r+s]): "
       << (rep.lambda_in_pi_prime ? "true" : "false") << "\n";
    os << "corrected-cut membership: " << (rep.lambda_in_pi_double_prime ? "true" : "false")
       << "\n";
    os << "|R+| = " << rep.above_s_count << ", sum over R+ = " << rep.above_s_sum << " > "
       << rep.cut_bound << " = r + |R+|*s\n";
    os << "mu = lambda - s*(1,1,1,1) = (1,1,-1,-1)\n";
    os << "subset S = {1,2}: mu_S = " << rep.mu_subset_sum << " > r = 1\n";
    os << "mu in Lambda(4,1,1): " << (rep.mu_in_lambda_rs ? "true" : "false") << "\n";
    os << "mu in vanishing locus of the char-0 ideal: "
       << (rep.mu_in_ideal_locus ? "true" : "false") << "\n";
    os << "generator " << rep.generator_text << " at mu: " << rep.generator_value_at_mu << "\n";
    os << "separation holds: " << (rep.separation_holds() ? "true" : "false") << "\n";
    emit(os.str(), opt, out);
  } else {
    Json j;
    j["params"] = Json{{"n", 4}, {"r", 1}, {"s", 1}, {"d", 4}};
    j["lambda"] = rep.lambda;
    j["lambda_in_pi_prime"] = rep.lambda_in_pi_prime;
    j["lambda_in_pi_double_prime"] = rep.lambda_in_pi_double_prime;
    j["above_s_count"] = rep.above_s_count;
    j["above_s_sum"] = rep.above_s_sum;
    j["cut_bound"] = rep.cut_bound;
    j["mu"] = rep.mu;
    j["mu_subset_sum"] = rep.mu_subset_sum;
    j["mu_in_lambda_rs"] = rep.mu_in_lambda_rs;
    j["mu_in_ideal_locus"] = rep.mu_in_ideal_locus;
    j["generator"] = rep.generator_text;
    j["generator_value_at_mu"] = rep.generator_value_at_mu;
    j["separation_holds"] = rep.separation_holds();
    emit(j.dump(2) + "\n", opt, out);
  }
  return rep.separation_holds() ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations with classical and rational Schur algebra presentations"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", opt.n, "rank n of GL(n)");
    sub->add_option("--r", opt.r, "covariant degree r");
    sub->add_option("--s", opt.s, "contravariant degree s");
    sub->add_option("--d", opt.d, "polynomial degree d");
    sub->add_option("--p", opt.p, "prime characteristic p");
    sub->add_option("--m", opt.m, "Frobenius exponent m (q = p^m)");
    sub->add_option("--format", opt.format, "output format: json or table/text");
    sub->add_option("-o,--output", opt.output, "write output to a file");
    sub->add_flag("-v,--verbose", opt.verbose, "diagnostics on stderr");
  };

  CLI::App* w = app.add_subcommand("weights", "enumerate weight sets");
  add_common(w);
  w->add_option("--set", opt.set,
                "lambda | lambda-plus | pi-prime | pi-double-prime | nu-prime");

  CLI::App* dims = app.add_subcommand("dims", "dimension counts and cross-checks");
  add_common(dims);
  dims->add_option("--char", opt.characteristic, "field characteristic (0 or a prime)");

  CLI::App* verify = app.add_subcommand("verify", "run a full verification pipeline");
  add_common(verify);
  verify->add_option("--label", opt.label, "char0-rational | charp-schur | charp-rational");
  verify->add_option("--preset", opt.preset, "named parameter grid (desk)");
  verify->add_flag("--half-subsets", opt.half_subsets,
                   "restrict char-0 subset relations to |S| <= n/2");

  CLI::App* pres = app.add_subcommand("present", "build and export a presentation");
  add_common(pres);
  pres->add_option("--label", opt.label, "char0-rational | charp-schur | charp-rational");
  pres->add_flag("--half-subsets", opt.half_subsets,
                 "restrict char-0 subset relations to |S| <= n/2");

  CLI::App* demo = app.add_subcommand("rewrite-demo", "straighten words and certify");
  add_common(demo);
  demo->add_option("--word", opt.word, "word, e.g. \"x(2,1)^1 x(1,2)^1\" or \"h(1)^2*x(1,2)^1\"");
  demo->add_option("--count", opt.count, "number of random words");
  demo->add_option("--len", opt.len, "random word length");
  demo->add_option("--seed", opt.seed, "random seed");

  CLI::App* cx = app.add_subcommand("counterexample", "the (4,1,1) separation report");
  add_common(cx);

  std::vector<std::string> argv_copy(args);
  std::reverse(argv_copy.begin(), argv_copy.end());
  try {
    app.parse(argv_copy);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help goes to the data stream
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInvalidParameters;
  }

  try {
    if (w->parsed()) return cmd_weights(opt, out);
    if (dims->parsed()) return cmd_dims(opt, out);
    if (verify->parsed()) return cmd_verify(opt, out, err);
    if (pres->parsed()) return cmd_present(opt, out);
    if (demo->parsed()) return cmd_rewrite_demo(opt, out);
    if (cx->parsed()) return cmd_counterexample(opt, out);
    err << "error: no subcommand\n";
    return kExitInvalidParameters;
  } catch (const exact::cap_exceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidParameters;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
}

}  // namespace schur::cli
