// Command-line front end for the psym library.
//
// Exit codes: 0 success / verified, 1 property violated, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "psym/json_io.hpp"
#include "psym/psym.hpp"

namespace {

using psym::AlgebraElem;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kUsage = 2;

struct Common {
  std::uint32_t p = 0;
  bool json = false;
  std::string file;
  CLI::App* cmd = nullptr;
  std::vector<std::string> operands;
};

void add_common(CLI::App* cmd, Common& c, bool p_required) {
  auto* opt = cmd->add_option("--p", c.p, "prime modulus");
  if (p_required) opt->required();
  cmd->add_flag("--json", c.json, "machine-readable output");
  cmd->add_option("--file", c.file, "read operands from this file instead of stdin");
  // operands are taken raw: CLI11 would split bracketed JSON lists
  cmd->allow_extras();
  cmd->footer("Operands follow the options; without them input comes from --file or stdin.");
  c.cmd = cmd;
}

std::string read_input(const Common& c) {
  std::ostringstream buf;
  if (!c.file.empty()) {
    std::ifstream in(c.file);
    if (!in) throw psym::ArgumentError("cannot open " + c.file);
    buf << in.rdbuf();
  } else {
    buf << std::cin.rdbuf();
  }
  return buf.str();
}

// Positional operands, else one operand per non-blank input line.
std::vector<std::string> line_operands(const Common& c) {
  if (!c.operands.empty()) return c.operands;
  std::vector<std::string> out;
  std::istringstream in(read_input(c));
  for (std::string line; std::getline(in, line);)
    if (line.find_first_not_of(" \t\r") != std::string::npos) out.push_back(line);
  return out;
}

// Positional operands, else the whole input as one JSON document.
std::vector<std::string> json_operands(const Common& c) {
  if (!c.operands.empty()) return c.operands;
  return {read_input(c)};
}

std::vector<AlgebraElem> elements(const Common& c, std::size_t min_count) {
  auto texts = line_operands(c);
  if (texts.size() < min_count)
    throw psym::ArgumentError("expected at least " + std::to_string(min_count) + " element(s)");
  std::vector<AlgebraElem> out;
  for (const auto& t : texts) out.push_back(psym::parse_element(t, c.p));
  return out;
}

void check_p(const Common& c, std::uint32_t p) {
  if (c.p != 0 && c.p != p)
    throw psym::ArgumentError("--p " + std::to_string(c.p) + " disagrees with input p = " +
                              std::to_string(p));
}

int print_element(const Common& c, const AlgebraElem& z) {
  if (c.json)
    std::cout << json{{"p", c.p}, {"result", psym::render_element(z)}}.dump() << "\n";
  else
    std::cout << psym::render_element(z) << "\n";
  return kOk;
}

int print_scalar(const Common& c, const char* key, const psym::LaurentPoly& v) {
  if (c.json)
    std::cout << json{{"p", c.p}, {key, v.to_string()}}.dump() << "\n";
  else
    std::cout << v.to_string() << "\n";
  return kOk;
}

int cmd_mul(const Common& c) {
  auto zs = elements(c, 2);
  AlgebraElem acc = zs[0];
  for (std::size_t k = 1; k < zs.size(); ++k) acc = psym::alg_mul(acc, zs[k]);
  return print_element(c, acc);
}

int cmd_pow(const Common& c) {
  auto texts = line_operands(c);
  if (texts.size() != 2) throw psym::ArgumentError("pow takes an element and an exponent");
  const std::string& e = texts[1];
  if (e.empty() || e.size() > 18 || e.find_first_not_of("0123456789") != std::string::npos)
    throw psym::ArgumentError("exponent must be a non-negative integer");
  const std::uint64_t n = std::stoull(e);
  return print_element(c, psym::alg_pow(psym::parse_element(texts[0], c.p), n));
}

int cmd_star(const Common& c, const std::string& list) {
  std::vector<std::uint32_t> d;
  std::istringstream in(list);
  for (std::string item; std::getline(in, item, ',');) {
    if (item.empty() || item.size() > 9 || item.find_first_not_of("0123456789") != std::string::npos)
      throw psym::ArgumentError("--d takes comma-separated non-negative integers");
    d.push_back(static_cast<std::uint32_t>(std::stoul(item)));
  }
  auto zs = elements(c, 1);
  return print_element(c, psym::star(zs, psym::MultiIndex{d}));
}

int cmd_pcentral(const Common& c) {
  auto docs = json_operands(c);
  if (docs.size() != 1) throw psym::ArgumentError("pcentral takes one JSON list");
  auto vs = psym::json::elements_from_json(psym::json::parse(docs[0]), c.p);
  auto verdict = psym::p_central_test(vs);
  if (c.json) {
    std::cout << psym::json::to_json(verdict).dump() << "\n";
  } else if (verdict.is_p_central) {
    std::cout << "p-central\n";
  } else {
    std::string d;
    for (auto v : verdict.witness->index.d) d += (d.empty() ? "" : ",") + std::to_string(v);
    std::cout << "not p-central: d=(" << d << ") trace=" << verdict.witness->trace.to_string()
              << "\n";
  }
  return verdict.is_p_central ? kOk : kViolated;
}

int cmd_value(const Common& c) {
  auto zs = elements(c, 1);
  auto v = psym::value(zs.at(0));
  if (c.json)
    std::cout << psym::json::to_json(v, c.p).dump() << "\n";
  else
    std::cout << psym::to_string(v, c.p) << "\n";
  return kOk;
}

int cmd_leading(const Common& c) {
  auto zs = elements(c, 1);
  auto m = psym::leading_monomial(zs.at(0));
  if (c.json)
    std::cout << psym::json::to_json(m).dump() << "\n";
  else
    std::cout << psym::to_string(m) << "\n";
  return kOk;
}

int cmd_solve(const Common& c) {
  auto docs = json_operands(c);
  if (docs.size() != 1) throw psym::ArgumentError("zerosum solve takes one instance");
  auto inst = psym::json::instance_from_json(psym::json::parse(docs[0]));
  check_p(c, inst.p);
  auto sol = psym::solve(inst);
  if (c.json) {
    std::cout << psym::json::to_json(sol).dump() << "\n";
  } else {
    std::string d;
    for (auto v : sol.d) d += (d.empty() ? "" : ",") + std::to_string(v);
    std::cout << "d=(" << d << ") branch=" << psym::to_string(sol.branch)
              << " weight=" << sol.weight() << "\n";
  }
  return kOk;
}

int cmd_verify(const Common& c) {
  auto docs = json_operands(c);
  json inst_doc, sol_doc;
  if (docs.size() == 1) {
    inst_doc = sol_doc = psym::json::parse(docs[0]);
  } else if (docs.size() == 2) {
    inst_doc = psym::json::parse(docs[0]);
    sol_doc = psym::json::parse(docs[1]);
  } else {
    throw psym::ArgumentError("zerosum verify takes an instance and a solution");
  }
  auto inst = psym::json::instance_from_json(inst_doc);
  check_p(c, inst.p);
  bool ok = psym::verify(inst, psym::json::solution_from_json(sol_doc));
  if (c.json)
    std::cout << json{{"verified", ok}}.dump() << "\n";
  else
    std::cout << (ok ? "verified" : "not verified") << "\n";
  return ok ? kOk : kViolated;
}

int cmd_exhaust(const Common& c, psym::ExhaustOptions opt) {
  if (opt.samples == 0 && c.p > psym::kMaxFullEnumerationPrime) opt.samples = 10000;
  auto report = psym::exhaust(c.p, opt);
  if (c.json) {
    std::cout << psym::json::to_json(report).dump() << "\n";
  } else {
    std::cout << "p=" << report.p << " mode=" << (report.sampled ? "sampled" : "full")
              << " instances=" << report.instances << " failures=" << report.failures
              << " max_weight=" << report.max_weight << " elapsed_ms=" << report.elapsed_ms
              << "\n";
    for (const auto& [name, n] : report.branch_histogram) std::cout << "  " << name << ": " << n << "\n";
  }
  return report.failures == 0 ? kOk : kViolated;
}

int cmd_prop33(const Common& c) {
  auto docs = json_operands(c);
  if (docs.size() != 1) throw psym::ArgumentError("prop33 takes one JSON document");
  auto input = psym::json::prop33_input_from_json(psym::json::parse(docs[0]));
  check_p(c, input.p);
  auto report = psym::prop33_witness(input.p, input.classes);
  if (c.json) {
    std::cout << psym::json::to_json(report).dump() << "\n";
  } else {
    std::string d;
    for (auto v : report.d.d) d += (d.empty() ? "" : ",") + std::to_string(v);
    std::cout << "d=(" << d << ") trace=" << report.trace.to_string() << " n=" << report.n
              << " check=" << (report.check_passed ? "passed" : "FAILED") << "\n";
  }
  return report.check_passed ? kOk : kViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact arithmetic in symbol p-algebras and bounded zero-sum representations"};
  app.require_subcommand(1);

  Common mul, pow, trace, norm, star, pcentral, value, leading, solve, verify, exhaust, prop33;
  std::string star_d;
  psym::ExhaustOptions exhaust_opt;

  add_common(app.add_subcommand("mul", "product of elements, left to right"), mul, true);
  add_common(app.add_subcommand("pow", "element raised to a non-negative power"), pow, true);
  add_common(app.add_subcommand("trace", "reduced trace"), trace, true);
  add_common(app.add_subcommand("norm", "norm of an element of F[x]"), norm, true);
  auto* star_cmd = app.add_subcommand("star", "symmetrized product v1^d1 * ... * vm^dm");
  add_common(star_cmd, star, true);
  star_cmd->add_option("--d", star_d, "exponents, comma separated")->required();
  add_common(app.add_subcommand("pcentral", "trace criterion on a JSON list of elements"), pcentral,
             true);
  add_common(app.add_subcommand("value", "valuation of an element"), value, true);
  add_common(app.add_subcommand("leading", "leading monomial of an element"), leading, true);

  auto* zerosum = app.add_subcommand("zerosum", "bounded representations in (Z/p)^2");
  zerosum->require_subcommand(1);
  add_common(zerosum->add_subcommand("solve", "constructive solution of a JSON instance"), solve,
             false);
  add_common(zerosum->add_subcommand("verify", "check a solution against an instance"), verify,
             false);
  auto* exhaust_cmd = zerosum->add_subcommand("exhaust", "solve and verify every instance for p");
  add_common(exhaust_cmd, exhaust, true);
  exhaust_cmd->add_option("--samples", exhaust_opt.samples, "random instances (0 = enumerate all)");
  exhaust_cmd->add_option("--seed", exhaust_opt.seed, "random seed for sampled mode");
  exhaust_cmd->add_option("--threads", exhaust_opt.threads, "worker threads (0 = all cores)");
  exhaust_cmd->add_flag("--oracle", exhaust_opt.check_oracle, "also cross-check with the oracle");

  add_common(app.add_subcommand("prop33", "nonzero-trace witness for p + 2 value classes"), prop33,
             false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  for (Common* c : {&mul, &pow, &trace, &norm, &star, &pcentral, &value, &leading, &solve, &verify,
                    &exhaust, &prop33})
    c->operands = c->cmd->remaining();

  try {
    auto ran = [](const char* name, CLI::App& parent) { return parent.got_subcommand(name); };
    if (ran("mul", app)) return cmd_mul(mul);
    if (ran("pow", app)) return cmd_pow(pow);
    if (ran("trace", app)) return print_scalar(trace, "trace", psym::trace(elements(trace, 1).at(0)));
    if (ran("norm", app)) return print_scalar(norm, "norm", psym::norm_fx(elements(norm, 1).at(0)));
    if (ran("star", app)) return cmd_star(star, star_d);
    if (ran("pcentral", app)) return cmd_pcentral(pcentral);
    if (ran("value", app)) return cmd_value(value);
    if (ran("leading", app)) return cmd_leading(leading);
    if (ran("prop33", app)) return cmd_prop33(prop33);
    if (ran("zerosum", app)) {
      if (ran("solve", *zerosum)) return cmd_solve(solve);
      if (ran("verify", *zerosum)) return cmd_verify(verify);
      return cmd_exhaust(exhaust, exhaust_opt);
    }
  } catch (const psym::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kViolated;
  } catch (const psym::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
