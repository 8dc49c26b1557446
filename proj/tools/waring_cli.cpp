// Command-line front end. Every command writes one JSON report to stdout
// (or indented text with --pretty). Exit codes: 0 success, 1 usage or input
// error, 2 mathematical failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <set>
#include <sstream>

#include "waring/apolarity.hpp"
#include "waring/boundary.hpp"
#include "waring/grobner.hpp"
#include "waring/io.hpp"
#include "waring/waring.hpp"

using json = nlohmann::ordered_json;
using namespace waring;

namespace {

constexpr int kSchemaVersion = 1;

struct Settings {
  std::uint64_t seed = 0;
  std::uint32_t prime = 1009;
  bool pretty = false;
};

struct Outcome {
  json payload;
  std::string field = "rational";
  std::string digest_input;
};

bool is_usage_kind(ErrorKind k) {
  return k == ErrorKind::Usage || k == ErrorKind::SyntaxError || k == ErrorKind::UnknownVariable || k == ErrorKind::FieldMismatch ||
         k == ErrorKind::ArityMismatch || k == ErrorKind::DualMismatch;
}

/// A path to an existing file is read; anything else is the text itself.
std::string load_text(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

std::vector<std::string> split_names(const std::string& csv) {
  std::vector<std::string> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

/// Variables x1..xN with N the largest index in the text, at least `min_arity`.
std::vector<std::string> infer_names(const std::string& text, int min_arity, const std::string& prefix = "x") {
  int n = min_arity;
  const std::regex re("\\b" + prefix + "([0-9]+)\\b");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), re); it != std::sregex_iterator(); ++it)
    n = std::max(n, std::stoi((*it)[1].str()));
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

MultiPoly<Rational> parse_quaternary(const std::string& text) {
  ParseOptions opt;
  opt.variables = infer_names(text, 4);
  if (opt.variables.size() != 4) fail(ErrorKind::Usage, "expected a form in x1..x4");
  return parse_poly(text, opt);
}

json approx(long double x) { return json{{"value", static_cast<double>(x)}, {"approx", true}}; }

json approx_complex(const Complex& z) {
  return json{{"re", static_cast<double>(z.real())}, {"im", static_cast<double>(z.imag())}, {"approx", true}};
}

json strings(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

template <class Poly>
json poly_list(const std::vector<Poly>& ps, const std::vector<std::string>& names = {}) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.to_string(names));
  return a;
}

json certificate_json(const DecompositionCertificate& c) {
  json summands = json::array();
  for (std::size_t i = 0; i < c.numeric_points.size(); ++i) {
    json s;
    s["real"] = static_cast<bool>(c.real[i]);
    if (c.exact) {
      s["point"] = strings(c.points[i]);
      s["lambda"] = c.lambdas[i].to_string();
    } else {
      json p = json::array();
      for (const auto& z : c.numeric_points[i]) p.push_back(approx_complex(z));
      s["point"] = p;
      s["lambda"] = approx_complex(c.numeric_lambdas[i]);
    }
    summands.push_back(s);
  }
  return json{{"verdict", verdict_name(c.verdict)},
              {"sturm_count", c.sturm_count},
              {"exact", c.exact},
              {"pivot", c.pivot},
              {"eliminant", c.shape.eliminant.to_string("z")},
              {"shape_attempts", c.shape.attempts},
              {"charts", c.charts},
              {"summands", summands},
              {"residual", c.exact ? json(std::to_string(0)) : approx(c.residual)}};
}

DecompositionCertificate certificate_from_json(const json& j) {
  DecompositionCertificate c;
  const json& p = j.contains("payload") ? j.at("payload") : j;
  c.exact = p.at("exact").get<bool>();
  for (const auto& s : p.at("summands")) {
    c.real.push_back(s.at("real").get<bool>());
    if (c.exact) {
      std::vector<Rational> pt;
      for (const auto& x : s.at("point")) pt.push_back(Rational::parse(x.get<std::string>()));
      c.points.push_back(pt);
      c.lambdas.push_back(Rational::parse(s.at("lambda").get<std::string>()));
    } else {
      std::vector<Complex> pt;
      for (const auto& x : s.at("point")) pt.emplace_back(x.at("re").get<double>(), x.at("im").get<double>());
      c.numeric_points.push_back(pt);
      c.numeric_lambdas.emplace_back(s.at("lambda").at("re").get<double>(), s.at("lambda").at("im").get<double>());
    }
  }
  if (c.real.size() != 5) fail(ErrorKind::Usage, "certificate must list five summands");
  return c;
}

template <class Ctx>
json gb_payload(const std::vector<std::string>& lines, const Ctx& ctx, const ParseOptions& opt, const MonomialOrder& ord,
                const std::vector<int>& drop) {
  using F = typename Ctx::value_type;
  std::vector<MultiPoly<F>> gens;
  for (const auto& l : lines) gens.push_back(parse_poly(l, ctx, opt));
  PolyIdeal<F> ideal(ctx, static_cast<int>(opt.variables.size()), gens);
  json out;
  if (!drop.empty()) {
    auto e = eliminate(ideal, drop);
    out["generators"] = poly_list(e.generators(), opt.variables);
    out["order"] = "elimination";
  } else {
    out["basis"] = poly_list(ideal.basis(ord), opt.variables);
    out["order"] = ord.describe();
  }
  return out;
}

void print_pretty(const json& j, int indent, std::ostream& os) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it->is_object() && !(it->contains("approx"))) {
      os << pad << it.key() << ":\n";
      print_pretty(*it, indent + 2, os);
    } else if (it->is_string()) {
      os << pad << it.key() << ": " << it->get<std::string>() << "\n";
    } else {
      os << pad << it.key() << ": " << it->dump() << "\n";
    }
  }
}

int emit(const Settings& s, json report, int code) {
  if (s.pretty)
    print_pretty(report, 0, std::cout);
  else
    std::cout << report.dump() << "\n";
  return code;
}

char hex_digit(unsigned v) { return "0123456789abcdef"[v & 15u]; }

std::string digest_hex(const std::string& s) {
  std::uint64_t h = fnv1a(s);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[static_cast<std::size_t>(i)] = hex_digit(static_cast<unsigned>(h));
  return "fnv1a:" + out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Apolarity, Waring decompositions of quaternary cubics and real-rank boundary tools"};
  app.require_subcommand(1);
  Settings settings;
  app.add_option("--seed", settings.seed, "seed for randomized genericity steps")->envname("WARING_SEED");
  app.add_option("--prime", settings.prime, "prime for finite-field runs")->envname("WARING_PRIME");
  app.add_flag("--pretty", settings.pretty, "indented text instead of JSON");

  std::string command;
  std::function<Outcome()> run;

  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--seed", settings.seed, "seed")->envname("WARING_SEED");
    sub->add_option("--prime", settings.prime, "prime")->envname("WARING_PRIME");
    sub->add_flag("--pretty", settings.pretty, "indented text instead of JSON");
    sub->callback([&, name] { command = name; });
    return sub;
  };

  std::string form, form2, vars, order = "grevlex", field = "rational", drop, lo, hi, cert_file;
  int degree = -1, secant = 0;

  auto* decompose = add("decompose", "unique five-cube decomposition of a general quaternary cubic");
  decompose->add_option("-f,--form", form, "cubic form or file")->required();
  auto* realrank = add("realrank", "real-rank-5 verdict via the Sturm count of the eliminant");
  realrank->add_option("-f,--form", form, "cubic form or file")->required();
  auto* antipolar = add("antipolar", "anti-polar form of an even-degree form");
  antipolar->add_option("-f,--form", form, "form or file")->required();
  antipolar->add_option("--vars", vars, "comma-separated variable names");
  auto* apolar = add("apolar", "degree piece of the apolar ideal");
  apolar->add_option("-f,--form", form, "form or file")->required();
  apolar->add_option("-k,--degree", degree, "degree of the piece")->required();
  apolar->add_option("--vars", vars, "comma-separated variable names");
  auto* sturm = add("sturm", "exact number of real roots of a univariate polynomial");
  sturm->add_option("-p,--poly", form, "polynomial in x, or file")->required();
  sturm->add_option("--lo", lo, "open left endpoint (rational)");
  sturm->add_option("--hi", hi, "closed right endpoint (rational)");
  auto* gb = add("gb", "reduced Groebner basis of an ideal (one generator per line)");
  gb->add_option("-f,--ideal", form, "generators or file")->required();
  gb->add_option("--order", order, "lex or grevlex")->check(CLI::IsMember({"lex", "grevlex"}));
  gb->add_option("--field", field, "rational or gf")->check(CLI::IsMember({"rational", "gf"}));
  gb->add_option("--vars", vars, "comma-separated variable names");
  auto* elim = add("eliminate", "elimination ideal");
  elim->add_option("-f,--ideal", form, "generators or file")->required();
  elim->add_option("--drop", drop, "comma-separated variables to eliminate")->required();
  elim->add_option("--field", field, "rational or gf")->check(CLI::IsMember({"rational", "gf"}));
  elim->add_option("--vars", vars, "comma-separated variable names");
  auto* psi = add("boundary-psi", "degree and irreducibility of the boundary polynomial along a pencil");
  psi->add_option("--f1", form, "first cubic or file")->required();
  psi->add_option("--f2", form2, "second cubic or file")->required();
  auto* join = add("join-corank", "corank of the join parametrization Jacobian");
  join->add_option("--secant", secant, "also report the secant Jacobian rank for this many cubes");
  auto* signature = add("signature", "signature of the middle catalecticant");
  signature->add_option("-f,--form", form, "even-degree form or file")->required();
  signature->add_option("--vars", vars, "comma-separated variable names");
  auto* verify = add("verify-cert", "re-check a decomposition certificate");
  verify->add_option("-f,--form", form, "cubic form or file")->required();
  verify->add_option("--cert", cert_file, "certificate JSON from decompose")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  auto names_for = [&](const std::string& text, const std::string& prefix = "x") {
    return vars.empty() ? infer_names(text, 1, prefix) : split_names(vars);
  };

  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    if (command == "decompose" || command == "realrank") {
      const std::string text = load_text(form);
      const auto f = parse_quaternary(text);
      out.digest_input = f.to_string();
      const auto cert = decompose_cubic(f, settings.seed);
      if (command == "decompose") {
        out.payload = certificate_json(cert);
      } else {
        out.payload = json{{"verdict", verdict_name(cert.verdict)}, {"sturm_count", cert.sturm_count}, {"eliminant", cert.shape.eliminant.to_string("z")}};
      }
    } else if (command == "antipolar") {
      const std::string text = load_text(form);
      ParseOptions opt;
      opt.variables = names_for(text);
      const auto f = parse_poly(text, opt);
      out.digest_input = f.to_string(opt.variables);
      const auto ap = anti_polar(f);
      out.payload = json{{"omega", ap.omega.to_string()}, {"det", ap.det.to_string()}, {"normalization", ap.normalization}, {"degree", ap.omega.degree()}};
    } else if (command == "apolar") {
      const std::string text = load_text(form);
      ParseOptions opt;
      opt.variables = names_for(text);
      const auto f = parse_poly(text, opt);
      out.digest_input = f.to_string(opt.variables) + "|" + std::to_string(degree);
      if (degree < 0) fail(ErrorKind::Usage, "degree must be nonnegative");
      const auto piece = apolar_ideal_piece(f, degree);
      out.payload = json{{"degree", degree}, {"dimension", piece.size()}, {"basis", poly_list(piece)}};
    } else if (command == "sturm") {
      const std::string text = load_text(form);
      const auto g = parse_unipoly(text, RationalField{});
      out.digest_input = g.to_string() + "|" + lo + "|" + hi;
      auto endpoint = [](const std::string& s) -> Endpoint {
        if (s.empty() || s == "inf" || s == "-inf") return std::nullopt;
        return Rational::parse(s);
      };
      out.payload = json{{"polynomial", g.to_string()}, {"lo", lo.empty() ? "-inf" : lo}, {"hi", hi.empty() ? "inf" : hi}, {"count", sturm_count(g, endpoint(lo), endpoint(hi))}};
    } else if (command == "gb" || command == "eliminate") {
      const std::string text = load_text(form);
      const auto lines = split_lines(text);
      if (lines.empty()) fail(ErrorKind::Usage, "no generators given");
      ParseOptions opt;
      opt.variables = names_for(text);
      std::vector<int> drop_idx;
      for (const auto& d : split_names(drop)) {
        auto it = std::find(opt.variables.begin(), opt.variables.end(), d);
        if (it == opt.variables.end()) fail(ErrorKind::UnknownVariable, "cannot eliminate unknown variable '" + d + "'");
        drop_idx.push_back(static_cast<int>(it - opt.variables.begin()));
      }
      const MonomialOrder ord = order == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
      out.digest_input = text + "|" + order + "|" + drop + "|" + field;
      if (field == "gf") {
        out.field = PrimeField(settings.prime).describe();
        out.payload = gb_payload(lines, PrimeField(settings.prime), opt, ord, drop_idx);
      } else {
        out.payload = gb_payload(lines, RationalField{}, opt, ord, drop_idx);
      }
    } else if (command == "boundary-psi") {
      const auto f1 = parse_quaternary(load_text(form)), f2 = parse_quaternary(load_text(form2));
      out.digest_input = f1.to_string() + "|" + f2.to_string();
      out.field = "rational-function(t) over " + PrimeField(settings.prime).describe();
      const auto rep = psi_pipeline({f1, f2, settings.prime, settings.seed});
      json quintics = json::array();
      for (const auto& q : rep.quintics) {
        json coeffs = json::array();
        for (const auto& c : q.coeffs) coeffs.push_back(c.to_string("t"));
        quintics.push_back(json{{"variables", {"x" + std::to_string(q.kept[0] + 1), "x" + std::to_string(q.kept[1] + 1)}},
                                {"coefficients", coeffs},
                                {"coefficient_degrees", q.coeff_degrees},
                                {"discriminant_degree", q.discriminant.degree()}});
      }
      json profile = json::array();
      for (const auto& part : rep.ddf.profile)
        profile.push_back(json{{"degree", part.degree}, {"factors", part.product.degree() / part.degree}});
      out.payload = json{{"prime", rep.prime},
                         {"samples", rep.samples},
                         {"quintics", quintics},
                         {"psi", rep.psi.to_string("t")},
                         {"psi_degree", rep.psi_degree},
                         {"psi_divides_all", rep.psi_divides_all},
                         {"squarefree", rep.squarefree},
                         {"ddf_profile", profile},
                         {"irreducibility", rep.irreducibility},
                         {"non_generic", rep.non_generic}};
    } else if (command == "join-corank") {
      out.digest_input = "join|" + std::to_string(secant);
      const auto r = join_jacobian_corank_detail(settings.seed);
      out.payload = json{{"corank", r.corank}, {"rank", 20 - r.corank}, {"attempts", r.attempts}, {"point", strings(r.point)}};
      if (secant != 0) out.payload["secant_rank"] = json{{"cubes", secant}, {"rank", secant_jacobian_rank(secant, settings.seed)}};
    } else if (command == "signature") {
      const std::string text = load_text(form);
      ParseOptions opt;
      opt.variables = names_for(text);
      const auto f = parse_poly(text, opt);
      out.digest_input = f.to_string(opt.variables);
      const auto s = catalecticant_signature(f);
      out.payload = json{{"n_plus", s.n_plus}, {"n_minus", s.n_minus}, {"n_zero", s.n_zero}, {"size", s.n_plus + s.n_minus + s.n_zero}};
    } else if (command == "verify-cert") {
      const auto f = parse_quaternary(load_text(form));
      std::ifstream in(cert_file);
      if (!in) fail(ErrorKind::Usage, "cannot open certificate " + cert_file);
      json cj;
      try {
        cj = json::parse(in);
      } catch (const json::exception& e) {
        fail(ErrorKind::SyntaxError, std::string("certificate is not JSON: ") + e.what());
      }
      DecompositionCertificate cert;
      try {
        cert = certificate_from_json(cj);
      } catch (const json::exception& e) {
        fail(ErrorKind::Usage, std::string("malformed certificate: ") + e.what());
      }
      out.digest_input = f.to_string() + "|" + cj.dump();
      const long double residual = verify_decomposition(f, cert);
      const bool valid = cert.exact ? residual == 0 : residual <= 1e-8L;
      if (!valid) fail(ErrorKind::Inconsistent, "certificate residual " + detail::format_sci(residual) + " exceeds tolerance");
      out.payload = json{{"valid", true}, {"exact", cert.exact}, {"residual", cert.exact ? json("0") : approx(residual)}};
    }
  } catch (const Error& e) {
    json report{{"schema_version", kSchemaVersion}, {"command", command}, {"error", {{"kind", std::string(kind_name(e.kind()))}, {"message", e.what()}}}};
    return emit(settings, report, is_usage_kind(e.kind()) ? 1 : 2);
  } catch (const std::invalid_argument& e) {
    json report{{"schema_version", kSchemaVersion}, {"command", command}, {"error", {{"kind", "SyntaxError"}, {"message", e.what()}}}};
    return emit(settings, report, 1);
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  json report{{"schema_version", kSchemaVersion}, {"command", command},          {"input_digest", digest_hex(out.digest_input)},
              {"seed", settings.seed},          {"field", out.field},            {"payload", out.payload},
              {"timing_ms", ms}};
  return emit(settings, report, 0);
}
