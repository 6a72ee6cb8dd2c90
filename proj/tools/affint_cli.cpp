// affint: command-line front end for the integral-form verification library.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "affint/expr.hpp"
#include "affint/suites.hpp"

using namespace affint;
using json = nlohmann::json;

namespace {

const std::map<std::string, SeriesName> kSeries{
    {"hat", SeriesName::HAT}, {"bar", SeriesName::BAR}, {"check", SeriesName::CHECK}, {"tilde", SeriesName::TILDE}};

const std::map<std::string, FormKind> kForms{
    {"sym", FormKind::SYM}, {"mix", FormKind::MIX}, {"check", FormKind::CHECK_FORM}, {"bar", FormKind::BAR_FORM}};

const std::map<std::string, BasisKind> kBases{{"lambda", BasisKind::B_LAMBDA},
                                              {"lambda_prime", BasisKind::B_LAMBDA_PRIME},
                                              {"qpol", BasisKind::B_QPOL},
                                              {"monomial", BasisKind::MONOMIAL},
                                              {"hat_monomial", BasisKind::HAT_MONOMIAL},
                                              {"check_monomial", BasisKind::CHECK_MONOMIAL},
                                              {"bar_monomial", BasisKind::BAR_MONOMIAL}};

// one | one_m(M) | half_one | half_one2 | cpow2 | table(a1,a2,...)
SequenceSpec parse_sequence(std::string s) {
  std::string lower;
  for (char ch : s) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (lower == "one") return SequenceSpec::one();
  if (lower == "half_one") return SequenceSpec::half_one();
  if (lower == "half_one2") return SequenceSpec::half_one2();
  if (lower == "cpow2") return SequenceSpec::cpow2();
  auto args = [&](const std::string& head) -> std::optional<std::string> {
    if (lower.rfind(head + "(", 0) != 0 || lower.back() != ')') return std::nullopt;
    return lower.substr(head.size() + 1, lower.size() - head.size() - 2);
  };
  if (auto a = args("one_m")) return SequenceSpec::one_m(std::stoi(*a));
  if (auto a = args("table")) {
    std::vector<Q> t;
    std::stringstream ss(*a);
    for (std::string item; std::getline(ss, item, ',');) t.push_back(Q(item));
    for (auto& x : t) x.canonicalize();
    return SequenceSpec::from_table(std::move(t));
  }
  throw std::invalid_argument("unknown sequence '" + s + "'");
}

Convention convention(bool alternating) { return alternating ? Convention::Alternating : Convention::Plain; }

json record_json(const CheckRecord& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json j{{"check_id", r.check_id}, {"params", params}, {"verdict", verdict_str(r.verdict, r.witness)}};
  j["witness"] = r.verdict == Verdict::PASS && r.witness.empty() ? json(nullptr) : json(r.witness);
  j["ms"] = static_cast<long>(r.ms + 0.5);
  return j;
}

json report_json(const Report& rep, const RunConfig& c) {
  json checks = json::array();
  for (const auto& r : rep.checks) checks.push_back(record_json(r));
  return json{{"config",
               {{"max_degree", c.max_degree},
                {"uea_truncation", c.uea_truncation},
                {"lie_window", c.lie_window},
                {"suites", resolve_suites(c.suites)}}},
              {"checks", checks},
              {"summary",
               {{"pass", rep.count(Verdict::PASS)},
                {"fail", rep.count(Verdict::FAIL)},
                {"skipped", rep.count(Verdict::SKIPPED)}}}};
}

// Flat key=value lines; '#' starts a comment. suites is a comma-separated list.
void load_config(const std::string& path, RunConfig& c) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config " + path);
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto trim = [](std::string s) {
      auto b = s.find_first_not_of(" \t\r"), e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw std::runtime_error(path + ":" + std::to_string(no) + ": expected key=value");
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key == "max_degree")
      c.max_degree = std::stoi(val);
    else if (key == "uea_truncation")
      c.uea_truncation = std::stoi(val);
    else if (key == "lie_window")
      c.lie_window = std::stoi(val);
    else if (key == "suites") {
      std::stringstream ss(val);
      for (std::string s; std::getline(ss, s, ',');)
        if (!trim(s).empty()) c.suites.push_back(trim(s));
    } else if (key == "output")
      c.output = val;
    else
      throw std::runtime_error(path + ":" + std::to_string(no) + ": unknown key '" + key + "'");
  }
}

const char* kExprHelp =
    "Expression grammar: h(r), hhat(k), hbar(k), hcheck(k), htilde(k), hhatc(k) (c_r = 2^{r-1}),\n"
    "integers, + - * ^ (non-negative integer exponent), / (by a scalar), parentheses.\n"
    "Example: \"hhat(2) - h(1)^2/2\".";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integral forms of affine enveloping algebras: expansions, memberships and verification suites"};
  app.require_subcommand(1);
  app.footer(kExprHelp);

  // expand
  auto* expand = app.add_subcommand("expand", "Print coefficients of a generating series");
  std::string series_name, seq_name, expr;
  int n = 2;
  bool all = false, alt = false;
  auto* opt_series = expand->add_option("--series", series_name, "hat | bar | check | tilde");
  auto* opt_seq = expand->add_option("--seq", seq_name, "one | one_m(M) | half_one | half_one2 | cpow2 | table(a1,...)");
  auto* opt_expr = expand->add_option("--expr", expr, "Expression to normalize");
  opt_series->excludes(opt_seq)->excludes(opt_expr);
  opt_seq->excludes(opt_expr);
  expand->add_option("--n", n, "Index of the coefficient")->check(CLI::NonNegativeNumber);
  expand->add_flag("--all", all, "Print every coefficient up to --n");
  expand->add_flag("--alternating", alt, "Use exp(sum (-1)^{r-1} h_r u^r / r)");

  // member
  auto* member = app.add_subcommand("member", "Membership of a polynomial in an integral form");
  std::string form = "sym", mexpr;
  member->add_option("--form", form, "sym | mix | check | bar")->check(CLI::IsMember({"sym", "mix", "check", "bar"}));
  member->add_option("expression", mexpr, "Polynomial expression")->required();
  member->add_flag("--alternating", alt, "Alternating convention");

  // basis
  auto* basis = app.add_subcommand("basis", "List a basis in one degree");
  std::string bkind = "lambda";
  int bd = 3;
  std::vector<std::string> bkeys;
  for (const auto& [k, v] : kBases) bkeys.push_back(k);
  basis->add_option("--kind", bkind, "Basis kind")->check(CLI::IsMember(bkeys));
  basis->add_option("--d", bd, "Degree")->check(CLI::NonNegativeNumber);
  basis->add_flag("--alternating", alt, "Alternating convention");

  // criterion
  auto* criterion = app.add_subcommand("criterion", "Arithmetic membership criteria for hhat^{a}");
  std::string cseq = "one", item = "all";
  long bound = 10;
  criterion->add_option("--seq", cseq, "Sequence a");
  criterion->add_option("--item", item, "condizione | hat | bar | mix | odd | cross | all")
      ->check(CLI::IsMember({"condizione", "hat", "bar", "mix", "odd", "cross", "all"}));
  criterion->add_option("--bound", bound, "Index bound")->check(CLI::PositiveNumber);

  // lie-check
  auto* lie = app.add_subcommand("lie-check", "Structure checks of the twisted affine algebras");
  std::string algebra = "a22";
  int window = 3;
  lie->add_option("--algebra", algebra, "a22 | a4")->check(CLI::IsMember({"a22", "a4"}));
  lie->add_option("--window", window, "Loop-degree window")->check(CLI::PositiveNumber);

  // uea-verify
  auto* uv = app.add_subcommand("uea-verify", "Check commutation identities in the enveloping algebra");
  std::string id;
  std::string reading = "both";
  int un = -1;
  UeaParams up;
  bool grid = false, list = false;
  uv->add_option("--id", id, "Identity id (see --list)");
  uv->add_flag("--list", list, "List identity ids with their amendments");
  uv->add_flag("--grid", grid, "Run the identity's whole parameter grid");
  uv->add_option("--n", un, "Truncation order (default: the identity's own)");
  uv->add_option("--r", up.r, "r");
  uv->add_option("--s", up.s, "s");
  uv->add_option("--k", up.k, "k");
  uv->add_option("--l", up.l, "l");
  uv->add_option("--sign", up.sign, "sign");
  uv->add_option("--i", up.i, "i");
  uv->add_option("--j", up.j, "j");
  uv->add_option("--reading", reading, "printed | operative | both")
      ->check(CLI::IsMember({"printed", "operative", "both"}));

  // suite
  auto* suite = app.add_subcommand("suite", "Run verification suites and write a JSON report");
  RunConfig cfg;
  std::string config_path;
  std::vector<std::string> names;
  suite->add_option("--config", config_path, "key=value file (max_degree, uea_truncation, lie_window, suites, output)");
  suite->add_option("--names", names, "commutative, bases, criteria, lie22, lie4, uea22, uea4, all")
      ->delimiter(',')
      ->check(CLI::IsMember({"commutative", "bases", "criteria", "lie22", "lie4", "uea22", "uea4", "all"}));
  auto* o_md = suite->add_option("--max-degree", cfg.max_degree, "Degree budget");
  auto* o_ut = suite->add_option("--uea-truncation", cfg.uea_truncation, "Truncation order for UEA identities");
  auto* o_lw = suite->add_option("--lie-window", cfg.lie_window, "Loop window for Lie checks");
  auto* o_out = suite->add_option("--output", cfg.output, "Write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*expand) {
      Convention cv = convention(alt);
      if (!expr.empty()) {
        std::cout << parse_expr(expr, cv).str() << "\n";
        return 0;
      }
      PolySeries s(0);
      std::string label;
      if (!series_name.empty()) {
        auto it = kSeries.find(series_name);
        if (it == kSeries.end()) throw std::invalid_argument("unknown series '" + series_name + "'");
        s = named_series(it->second, n, cv);
        label = series_name;
      } else {
        auto a = parse_sequence(seq_name.empty() ? "one" : seq_name);
        s = expand_hat_series(a, n, cv);
        label = "hat^{" + a.name() + "}";
      }
      for (int k = all ? 0 : n; k <= n; ++k) std::cout << "h" << k << "_" << label << " = " << s[k].str() << "\n";
      return 0;
    }
    if (*member) {
      Poly p = parse_expr(mexpr, convention(alt));
      std::cout << membership(p, kForms.at(form), convention(alt)).str() << "\n";
      return 0;
    }
    if (*basis) {
      BasisKind kind = kBases.at(bkind);
      auto el = enumerate_basis(kind, bd, convention(alt));
      for (const auto& e : el) std::cout << e.label << " = " << e.value.str() << "\n";
      std::cout << "# " << el.size() << " elements, p(" << bd << ") = " << partition_count_pentagonal(bd)
                << ", rank " << rank(coordinate_matrix(kind, bd, convention(alt))) << "\n";
      return 0;
    }
    if (*criterion) {
      auto a = parse_sequence(cseq);
      auto f = ArithmeticFunction::from_spec(a);
      bool ok = true;
      auto show = [&](const std::string& name, bool pass, const std::string& text) {
        std::cout << name << ": " << text << "\n";
        ok = ok && pass;
      };
      bool integer = a.integer_valued_up_to(static_cast<int>(bound));
      auto integral_only = [&](const std::string& name, auto&& fn) {
        if (!integer) {
          std::cout << name << ": SKIPPED(sequence is not integer valued)\n";
          return;
        }
        auto v = fn();
        show(name, v.pass, v.str());
      };
      if (item == "condizione" || item == "all") {
        auto v = check_condizione(f, bound);
        show("condizione", v.pass, v.str());
      }
      if (item == "hat" || item == "all") integral_only("hat", [&] { return check_hat_criterion(f, bound); });
      if (item == "bar" || item == "all") integral_only("bar", [&] { return check_bar_criterion(f, bound); });
      if (item == "mix" || item == "all") integral_only("mix", [&] { return check_mix_criterion(f, bound); });
      if (item == "odd" || item == "all") integral_only("odd", [&] { return check_odd_vanishing(f, bound); });
      if (item == "cross" || item == "all") {
        auto rep = cross_validate(a, static_cast<int>(bound));
        auto d = rep.first_disagreement();
        show("cross", !d, d ? "DISAGREE(" + form_name(d->form) + "/" + d->criterion + " k=" + std::to_string(d->k) + ")"
                            : "AGREE(" + std::to_string(rep.checks.size()) + " comparisons)");
      }
      return ok ? 0 : 1;
    }
    if (*lie) {
      RunConfig c;
      c.lie_window = window;
      c.suites = {algebra == "a22" ? "lie22" : "lie4"};
      auto rep = run_suites(c);
      for (const auto& r : rep.checks)
        std::cout << r.check_id << ": " << verdict_str(r.verdict) << (r.witness.empty() ? "" : " (" + r.witness + ")")
                  << "\n";
      return rep.ok() ? 0 : 1;
    }
    if (*uv) {
      if (list) {
        for (const auto& s : uea_catalog())
          std::cout << s.id << " [n=" << s.default_n << ", grid " << s.grid.size()
                    << "]: " << (s.amendment.empty() ? "holds as printed" : s.amendment) << "\n";
        return 0;
      }
      const auto& spec = uea_identity(id);
      int order = un >= 0 ? un : spec.default_n;
      std::vector<Reading> rds;
      if (reading != "operative") rds.push_back(Reading::PRINTED);
      if (reading != "printed") rds.push_back(Reading::OPERATIVE);
      bool ok = true;
      std::vector<UeaParams> points = grid ? spec.grid : std::vector<UeaParams>{up};
      for (auto rd : rds) {
        long equal = 0;
        std::string first;
        for (const auto& p : points) {
          auto v = verify_uea_identity(id, p, order, rd);
          if (v.equal)
            ++equal;
          else if (first.empty())
            first = spec.params_str(p) + " " + v.witness;
        }
        bool pass = equal == static_cast<long>(points.size());
        std::cout << id << " " << reading_name(rd) << " n=" << order << ": "
                  << (pass ? "EQUAL" : "DIFFER") << " (" << equal << "/" << points.size() << ")"
                  << (first.empty() ? "" : " first mismatch " + first) << "\n";
        if (rd == Reading::OPERATIVE) ok = ok && pass;
      }
      if (!spec.amendment.empty()) std::cout << "amendment: " << spec.amendment << "\n";
      return ok ? 0 : 1;
    }
    if (*suite) {
      RunConfig file;
      if (!config_path.empty()) {
        load_config(config_path, file);
        // Command-line values take precedence over the file.
        if (o_md->count()) file.max_degree = cfg.max_degree;
        if (o_ut->count()) file.uea_truncation = cfg.uea_truncation;
        if (o_lw->count()) file.lie_window = cfg.lie_window;
        if (o_out->count()) file.output = cfg.output;
        cfg = file;
      }
      if (!names.empty()) cfg.suites = names;
      if (cfg.suites.empty()) cfg.suites = {"all"};
      try {
        resolve_suites(cfg.suites);
        cfg.validate();
      } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
      }
      auto rep = run_suites(cfg);
      std::string text = report_json(rep, cfg).dump(2) + "\n";
      if (cfg.output.empty()) {
        std::cout << text;
      } else {
        std::ofstream(cfg.output) << text;
        std::cerr << rep.count(Verdict::PASS) << " PASS, " << rep.count(Verdict::FAIL) << " FAIL, "
                  << rep.count(Verdict::SKIPPED) << " SKIPPED -> " << cfg.output << "\n";
      }
      return rep.ok() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
