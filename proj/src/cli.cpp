#include "mpendo/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "mpendo/endoscopy.hpp"
#include "mpendo/lparams.hpp"
#include "mpendo/opcalc.hpp"
#include "mpendo/ssclasses.hpp"
#include "mpendo/sweeps.hpp"

namespace mpendo {

namespace {

struct Common {
  std::string out_path;
  std::string format = "structured";
  bool serial = false;

  Exec exec() const { return serial ? Exec::Serial : Exec::Parallel; }
};

void add_common(CLI::App* app, Common& c)
{
  app->add_option("--out", c.out_path, "Write reports to this file instead of stdout");
  app->add_option("--format", c.format, "text or structured (one JSON object per line)")
      ->check(CLI::IsMember({"text", "structured"}));
  app->add_flag("--serial", c.serial, "Use the serial reference kernels");
}

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

EndoDatum parse_datum(const std::string& text)
{
  std::istringstream in(text);
  EndoDatum d;
  char comma = 0;
  if (!(in >> d.n_p >> comma >> d.n_pp) || comma != ',' || d.n_p < 0 || d.n_pp < 0 || in.peek() != EOF)
    throw UsageError("--d expects n',n'' such as 1,2; got '" + text + "'");
  return d;
}

LParameter read_lparameter(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_lparameter(buf.str());
  } catch (const std::invalid_argument& ex) {
    throw UsageError(path + ": " + ex.what());
  }
}

Json datum_json(const EndoDatum& d) { return Json::array({d.n_p, d.n_pp}); }

/// Either a report or a plain enumeration item.
struct Line {
  Json json;
  std::string text;
  bool failed = false;
};

Line report_line(const Report& r) { return {r.to_json(), r.to_text(), r.status == Status::Fail}; }

Line item_line(Json j, std::string text) { return {std::move(j), std::move(text), false}; }

std::vector<Line> enumerate_levis(int n)
{
  std::vector<Line> out;
  for (const auto& l : enumerate_levis_sp(n)) {
    Json j = Json::object();
    j["kind"] = "levi";
    j["n"] = n;
    j["levi"] = l.to_string();
    j["gl_parts"] = l.gl_parts();
    j["m"] = l.m();
    j["semisimple_rank"] = semisimple_rank_sp(l);
    out.push_back(item_line(j, l.to_string() + " r=" + std::to_string(semisimple_rank_sp(l))));
  }
  return out;
}

std::vector<Line> enumerate_endoscopic(int n)
{
  std::vector<Line> out;
  for (const auto& d : elliptic_data(n)) {
    const std::string g = "SO(" + std::to_string(2 * d.n_p + 1) + ")xSO(" + std::to_string(2 * d.n_pp + 1) + ")";
    Json j = Json::object();
    j["kind"] = "endoscopic";
    j["n"] = n;
    j["d"] = datum_json(d);
    j["group"] = g;
    out.push_back(item_line(j, d.to_string() + " " + g));
  }
  return out;
}

std::vector<Line> enumerate_split_seqs(int n)
{
  std::vector<Line> out;
  for (const auto& l : enumerate_levis_sp(n))
    for (const auto& d : elliptic_data(n)) {
      Json seqs = Json::array();
      std::string text = l.to_string() + " d=" + d.to_string() + ":";
      for (const auto& s : split_sequences(l, d)) {
        const auto el = endoscopic_levi(l, s, d);
        Json e = Json::object();
        e["s"] = to_string(s);
        e["m_s"] = el.m_s.to_string();
        e["m_s_bang"] = el.m_s_bang.to_string();
        seqs.push_back(e);
        text += " " + to_string(s);
      }
      Json j = Json::object();
      j["kind"] = "split-seqs";
      j["n"] = n;
      j["levi"] = l.to_string();
      j["d"] = datum_json(d);
      j["sequences"] = seqs;
      out.push_back(item_line(j, text));
    }
  return out;
}

std::vector<EndoDatum> data_for(const LParameter& phi, const std::string& d_text)
{
  if (!d_text.empty()) {
    const EndoDatum d = parse_datum(d_text);
    if (d.n() != phi.n)
      throw UsageError("--d " + d_text + " does not have rank n = " + std::to_string(phi.n));
    return {d};
  }
  return elliptic_data(phi.n);
}

std::optional<Line> invalid_parameter_line(const LParameter& phi)
{
  const auto errors = validate_discrete(phi);
  if (errors.empty())
    return std::nullopt;
  Json cx = Json::array();
  for (const auto& e : errors)
    cx.push_back(Json::object({{"kind", e.kind}, {"message", e.message}}));
  Json params = Json::object();
  params["phi"] = phi.to_string();
  return report_line(Report::fail("lparam-validate", params, cx));
}

std::vector<Line> lparam_factor(const LParameter& phi, const std::string& d_text)
{
  if (auto bad = invalid_parameter_line(phi))
    return {*bad};
  std::vector<Line> out;
  for (const auto& d : data_for(phi, d_text))
    for (const auto& f : factorizations(phi, d)) {
      Json j = Json::object();
      j["kind"] = "factorization";
      j["d"] = datum_json(d);
      j["phi_p"] = f.phi_p.to_string();
      j["phi_pp"] = f.phi_pp.to_string();
      out.push_back(item_line(j, d.to_string() + " " + f.phi_p.to_string() + " | " + f.phi_pp.to_string()));
    }
  return out;
}

std::vector<Line> lparam_corollary(const LParameter& phi, const std::string& d_text, const std::string& block_text)
{
  if (auto bad = invalid_parameter_line(phi))
    return {*bad};
  std::optional<std::pair<std::string, int>> wanted;
  if (!block_text.empty()) {
    const auto comma = block_text.rfind(',');
    if (comma == std::string::npos)
      throw UsageError("--block expects <id>,<a>");
    try {
      wanted = std::make_pair(block_text.substr(0, comma), std::stoi(block_text.substr(comma + 1)));
    } catch (const std::exception&) {
      throw UsageError("--block expects <id>,<a>");
    }
    const bool present = std::any_of(phi.blocks.begin(), phi.blocks.end(), [&](const JordanBlock& b) {
      return b.rho.id == wanted->first && b.a == wanted->second;
    });
    if (!present)
      throw UsageError("block (" + block_text + ") is not a Jordan block of the parameter");
  }
  std::vector<Line> out;
  for (const auto& d : data_for(phi, d_text))
    for (const auto& f : factorizations(phi, d))
      for (const auto& b : phi.blocks) {
        if (wanted && (b.rho.id != wanted->first || b.a != wanted->second))
          continue;
        const auto c = corollary_data(f.phi_p, f.phi_pp, b);
        Json j = Json::object();
        j["kind"] = "corollary";
        j["d"] = datum_json(d);
        j["phi_p"] = f.phi_p.to_string();
        j["phi_pp"] = f.phi_pp.to_string();
        j["block"] = b.to_string();
        j["levi_choice"] = Json::array({c.levi_choice.p, c.levi_choice.pp});
        j["m_bang"] = c.m_bang ? Json(c.m_bang->to_string()) : Json(nullptr);
        j["x"] = c.twice_x % 2 == 0 ? std::to_string(c.twice_x / 2) : std::to_string(c.twice_x) + "/2";
        j["alpha"] = c.alpha;
        j["m"] = c.m;
        out.push_back(item_line(j, d.to_string() + " " + b.to_string() + " levi_choice=(" +
                                       std::to_string(c.levi_choice.p) + "," + std::to_string(c.levi_choice.pp) +
                                       ") x=" + j["x"].get<std::string>() + " alpha=" + std::to_string(c.alpha) +
                                       " m=" + std::to_string(c.m) + " M!=" +
                                       (c.m_bang ? c.m_bang->to_string() : std::string("none"))));
      }
  return out;
}

std::vector<Line> normalize_line(const std::string& text)
{
  OpExpr e;
  try {
    e = parse(text);
  } catch (const SyntaxError& ex) {
    throw UsageError(ex.what());
  } catch (const TypeError& ex) {
    throw UsageError(std::string("type error: ") + ex.what());
  }
  Json params = Json::object();
  params["input"] = text;
  try {
    NormalizeStats stats;
    const OpExpr result = normalize(e, &stats);
    Json details = Json::object();
    details["output"] = result.to_string();
    details["terms"] = result.terms().size();
    details["jacquet_rewrites"] = stats.jacquet_rewrites;
    details["absorb_rewrites"] = stats.absorb_rewrites;
    details["twist_cancellations"] = stats.twist_cancellations;
    Line line = report_line(Report::pass("normalize", params, details));
    line.text = result.to_string();
    return {line};
  } catch (const StuckPattern& ex) {
    return {report_line(Report::fail("normalize", params, std::string("stuck pattern: ") + ex.what()))};
  }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Combinatorial checks for D . T = T . D on metaplectic groups", "mpendo"};
  app.require_subcommand(1);

  Common common;
  std::function<std::vector<Line>()> action;

  auto* enumerate = app.add_subcommand("enumerate", "List Levis, endoscopic data or split sequences");
  enumerate->require_subcommand(1);
  int n = 3;
  for (const char* what : {"levis", "endoscopic", "split-seqs"}) {
    auto* sub = enumerate->add_subcommand(what);
    sub->add_option("--n,--nmax", n, "Rank")->check(CLI::Range(0, 20));
    add_common(sub, common);
    const std::string name = what;
    sub->callback([&, name] {
      action = [&, name] {
        if (name == "levis")
          return enumerate_levis(n);
        if (name == "endoscopic")
          return enumerate_endoscopic(n);
        return enumerate_split_seqs(n);
      };
    });
  }

  auto* verify = app.add_subcommand("verify", "Run a verification sweep");
  verify->require_subcommand(1);

  int kmax = 8;
  auto* sign = verify->add_subcommand("sign-lemma");
  sign->add_option("--kmax", kmax)->check(CLI::Range(0, 14));
  add_common(sign, common);

  int nmax_pre = 8;
  auto* pre = verify->add_subcommand("levi-preimages");
  pre->add_option("--n,--nmax", nmax_pre)->check(CLI::Range(0, 12));
  add_common(pre, common);

  FiberSweepOptions fopt;
  auto* fiber = verify->add_subcommand("fiber-bijection");
  fiber->add_option("--n,--nmax", fopt.nmax)->check(CLI::Range(0, 8));
  fiber->add_option("--p", fopt.primes, "Odd prime >= 7 (repeatable)");
  fiber->add_option("--trials", fopt.trials)->check(CLI::Range(1, 1000000));
  fiber->add_option("--seed", fopt.seed);
  add_common(fiber, common);

  int nmax_comm = 6;
  bool ambient = false;
  auto* comm = verify->add_subcommand("commutation");
  comm->add_option("--n,--nmax", nmax_comm)->check(CLI::Range(0, 8));
  comm->add_flag("--ambient", ambient, "Go through every proper standard Levi instead");
  add_common(comm, common);

  LParamSweepOptions lopt;
  auto* lpart = verify->add_subcommand("lparam-partition");
  lpart->add_option("--n,--nmax", lopt.nmax)->check(CLI::Range(1, 10));
  lpart->add_option("--trials", lopt.trials)->check(CLI::Range(1, 10000000));
  lpart->add_option("--seed", lopt.seed);
  add_common(lpart, common);

  auto* lparam = app.add_subcommand("lparam", "Factor a discrete L-parameter read from a file");
  lparam->require_subcommand(1);
  std::string file, d_text, block_text;
  auto* factor = lparam->add_subcommand("factor");
  factor->add_option("--file", file)->required();
  factor->add_option("--d", d_text, "Elliptic datum n',n''; all when omitted");
  add_common(factor, common);
  auto* corollary = lparam->add_subcommand("corollary");
  corollary->add_option("--file", file)->required();
  corollary->add_option("--d", d_text, "Elliptic datum n',n''; all when omitted");
  corollary->add_option("--block", block_text, "Only the block <id>,<a>");
  add_common(corollary, common);

  std::string expr;
  auto* norm = app.add_subcommand("normalize", "Normalize an operator expression");
  norm->add_option("expr", expr)->required();
  add_common(norm, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  std::vector<Line> lines;
  auto add_reports = [&](const std::vector<Report>& reports) {
    for (const auto& r : reports)
      lines.push_back(report_line(r));
  };
  try {
    if (sign->parsed())
      add_reports(sweep_sign_lemma(kmax, common.exec()));
    else if (pre->parsed())
      add_reports(sweep_levi_preimages(nmax_pre, common.exec()));
    else if (fiber->parsed()) {
      for (auto p : fopt.primes)
        (void)PrimeField(p);
      add_reports(sweep_fiber_bijection(fopt, common.exec()));
    } else if (comm->parsed())
      add_reports(ambient ? sweep_commutation_ambient(nmax_comm, common.exec())
                          : sweep_commutation(nmax_comm, common.exec()));
    else if (lpart->parsed())
      add_reports(sweep_lparam_partition(lopt, common.exec()));
    else if (factor->parsed())
      lines = lparam_factor(read_lparameter(file), d_text);
    else if (corollary->parsed())
      lines = lparam_corollary(read_lparameter(file), d_text, block_text);
    else if (norm->parsed())
      lines = normalize_line(expr);
    else if (action)
      lines = action();
  } catch (const UsageError& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& ex) {
    err << "error: " << ex.what() << "\n";
    return 2;
  }

  std::ofstream file_out;
  std::ostream* sink = &out;
  if (!common.out_path.empty()) {
    file_out.open(common.out_path);
    if (!file_out) {
      err << "error: cannot write " << common.out_path << "\n";
      return 2;
    }
    sink = &file_out;
  }
  bool failed = false;
  for (const auto& line : lines) {
    *sink << (common.format == "text" ? line.text : line.json.dump()) << "\n";
    failed = failed || line.failed;
  }
  sink->flush();
  return failed ? 1 : 0;
}

} // namespace mpendo
