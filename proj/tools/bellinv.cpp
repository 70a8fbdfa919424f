// bellinv: exact computation and verification of Bell-polynomial tables,
// lambda/f/Mina tables and the nonlinear inverse-pair transforms.
//
// Subcommands: bell, lambda, mina, transform, verify. All arithmetic is
// exact rational; output is canonical JSON (sorted keys, lowest-terms
// rationals, graded-lex term order) or CSV.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bellinv/bellinv.hpp"

namespace {

using namespace bellinv;

struct GlobalOpts {
  int order = 8;
  std::uint64_t seed = 1;
  std::string format = "json";
  std::string out;
};

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw Error("cannot open output file: " + g.out);
  f << text;
  if (text.empty() || text.back() != '\n') f << '\n';
}

void emit_json(const GlobalOpts& g, const Json& j) { emit(g, j.dump(2)); }

Json load_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open file: " + path);
  try {
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

std::vector<Rational> parse_values(const std::string& csv) {
  std::vector<Rational> values;
  std::stringstream ss(csv);
  std::string item;
  size_t pos = 0;
  while (std::getline(ss, item, ',')) {
    ++pos;
    try {
      values.push_back(Rational::from_string(item));
    } catch (const ParseError& e) {
      throw ParseError("--values entry " + std::to_string(pos) + ": " + e.what());
    }
  }
  if (values.empty()) throw ParseError("--values is empty");
  return values;
}

std::string csv_quote(const std::string& s) {
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string report_csv(const VerificationReport& r) {
  std::string out = "id,params,n_range,status,witness,note\n";
  for (const auto& c : r.cases)
    out += csv_quote(c.id) + "," + csv_quote(c.params) + "," + csv_quote(c.n_range) + "," +
           csv_quote(c.status) + "," + csv_quote(c.witness) + "," + csv_quote(c.note) + "\n";
  return out;
}

std::string sequence_csv(const std::vector<Rational>& values) {
  std::string out = "n,value\n";
  for (size_t i = 0; i < values.size(); ++i)
    out += std::to_string(i + 1) + "," + values[i].to_string() + "\n";
  return out;
}

int run_bell(const GlobalOpts& g, unsigned n, int k, const std::string& values_csv) {
  if (n < 1) throw DomainError("bell requires --n >= 1");
  if (k >= 0 && (k < 1 || static_cast<unsigned>(k) > n))
    throw DomainError("bell requires 1 <= k <= n (got k = " + std::to_string(k) + ")");

  if (values_csv.empty()) {
    // symbolic polynomial(s)
    if (k >= 0) {
      const MultiPoly p = bell_partition(n, static_cast<unsigned>(k));
      if (g.format == "csv")
        emit(g, std::to_string(n) + "," + std::to_string(k) + "," + csv_quote(p.to_pretty()) + "\n");
      else
        emit_json(g, to_json(p));
      return 0;
    }
    Json row = Json::array();
    std::string csv = "n,k,polynomial\n";
    for (unsigned kk = 1; kk <= n; ++kk) {
      const MultiPoly p = bell_partition(n, kk);
      row.push_back(to_json(p));
      csv += std::to_string(n) + "," + std::to_string(kk) + "," + csv_quote(p.to_pretty()) + "\n";
    }
    if (g.format == "csv")
      emit(g, csv);
    else
      emit_json(g, row);
    return 0;
  }

  const std::vector<Rational> values = parse_values(values_csv);
  if (k >= 0) {
    const unsigned needed = n - static_cast<unsigned>(k) + 1;
    if (values.size() < needed)
      throw DomainError("B_{" + std::to_string(n) + "," + std::to_string(k) + "} needs " +
                        std::to_string(needed) + " values x1..x" + std::to_string(needed));
    const Rational r = bell_gf<Rational>(n, static_cast<unsigned>(k), values);
    emit(g, g.format == "csv" ? r.to_string() + "\n" : Json(r.to_string()).dump(2));
    return 0;
  }
  if (values.size() < n)
    throw DomainError("a full row needs n = " + std::to_string(n) + " values");
  const auto row = bell_row<Rational>(n, values);
  if (g.format == "csv") {
    emit(g, sequence_csv(row));
  } else {
    Json arr = Json::array();
    for (const auto& r : row) arr.push_back(r.to_string());
    emit_json(g, arr);
  }
  return 0;
}

int run_lambda(const GlobalOpts& g, const std::string& spec_path, const std::string& method,
               const std::string& table) {
  const ProblemSpec spec = spec_from_json(load_json(spec_path));
  if (table == "f") {
    if (g.order < 1) throw DomainError("an f table needs --order >= 1");
    if (method != "rec" && method != "mina")
      throw DomainError("unknown --method \"" + method + "\" for an f table (expected rec|mina)");
    const FTable ft = method == "mina" ? f_via_mina_table(spec, g.order)
                                       : f_recurrence(spec, g.order);
    if (g.format == "csv") {
      std::string csv = "n,f_n\n";
      for (int n = 1; n <= g.order; ++n)
        csv += std::to_string(n) + "," + csv_quote(to_pretty(ft.f(n))) + "\n";
      emit(g, csv);
    } else {
      emit_json(g, to_json(ft));
    }
    return 0;
  }

  LambdaTable lt{spec, {}};
  if (method == "rec") {
    lt = lambda_recurrence(spec, g.order);
  } else if (method == "closed") {
    std::vector<UniPoly> polys;
    for (int n = 0; n <= g.order; ++n)
      polys.push_back(lambda_closed_auto(spec, static_cast<unsigned>(n)));
    lt = LambdaTable{spec, std::move(polys)};
  } else if (method == "instance") {
    Rng rng = Rng(g.seed).fork("lambda-instance");
    std::vector<Rational> y(static_cast<size_t>(std::max(g.order, 0)));
    for (auto& v : y) v = rng.next_rational(6, 4);
    if (!y.empty()) y[0] = rng.next_nonzero_rational(6, 4);
    lt = lambda_from_instance(spec, y, g.order);
  } else {
    throw DomainError("unknown --method \"" + method + "\" (expected rec|closed|instance)");
  }

  if (g.format == "csv") {
    std::string csv = "n,lambda_n\n";
    for (int n = 0; n <= g.order; ++n)
      csv += std::to_string(n) + "," + csv_quote(to_pretty(lt.lambda(n))) + "\n";
    emit(g, csv);
  } else {
    emit_json(g, to_json(lt));
  }
  return 0;
}

int run_mina(const GlobalOpts& g, unsigned n, int k) {
  if (k >= 0 && static_cast<unsigned>(k) >= n)
    throw DomainError("mina requires 0 <= k <= n-1");
  if (k >= 0) {
    const MultiPoly p = mina_via_matrices(n, static_cast<unsigned>(k));
    if (g.format == "csv")
      emit(g, std::to_string(n) + "," + std::to_string(k) + "," + csv_quote(p.to_pretty()) + "\n");
    else
      emit_json(g, to_json(p));
    return 0;
  }
  const auto col = mina_column(n);
  if (g.format == "csv") {
    std::string csv = "n,k,polynomial\n";
    for (unsigned kk = 0; kk < n; ++kk)
      csv += std::to_string(n) + "," + std::to_string(kk) + "," + csv_quote(col[kk].to_pretty()) +
             "\n";
    emit(g, csv);
  } else {
    Json arr = Json::array();
    for (const auto& p : col) arr.push_back(to_json(p));
    emit_json(g, arr);
  }
  return 0;
}

int run_transform(const GlobalOpts& g, const std::string& theorem, const std::string& direction,
                  const std::string& spec_path, const std::string& seq_path,
                  const std::string& a_str, const std::string& b_str, const std::string& p_str,
                  const std::string& q_str, const std::string& r_str, int order) {
  if (direction != "forward" && direction != "backward")
    throw DomainError("--direction must be forward or backward");
  const bool fwd = direction == "forward";

  std::vector<Rational> seq = sequence_from_json(load_json(seq_path));
  if (order > 0) {
    if (static_cast<size_t>(order) > seq.size())
      throw DomainError("sequence has " + std::to_string(seq.size()) +
                        " values, fewer than --order " + std::to_string(order));
    seq.resize(static_cast<size_t>(order));
  }

  auto need = [](const std::string& v, const char* flag) {
    if (v.empty()) throw DomainError(std::string("this theorem requires ") + flag);
    return Rational::from_string(v);
  };

  SequencePrefix result;
  if (theorem == "t13") {
    const Rational a = need(a_str, "--a"), b = need(b_str, "--b");
    result = fwd ? thm13_forward(a, b, seq) : thm13_backward(a, b, seq);
  } else if (theorem == "t14") {
    const Rational a = need(a_str, "--a"), b = need(b_str, "--b");
    result = fwd ? thm14_forward(a, b, seq) : thm14_backward(a, b, seq);
  } else if (theorem == "t15") {
    const Rational p = need(p_str, "--p"), q = need(q_str, "--q"), r = need(r_str, "--r");
    result = fwd ? thm15_forward(p, q, r, seq) : thm15_backward(p, q, r, seq);
  } else if (theorem == "general" || theorem == "t17") {
    if (spec_path.empty()) throw DomainError("this theorem requires --spec FILE");
    const ProblemSpec spec = spec_from_json(load_json(spec_path));
    if (theorem == "general")
      result = fwd ? general_forward(spec, seq) : general_backward(spec, seq);
    else if (fwd)
      result = general_forward(spec, seq);  // the forward direction is shared
    else
      result = thm17_backward(spec, seq);
  } else {
    throw DomainError("unknown --theorem \"" + theorem +
                      "\" (expected t13|t14|t15|general|t17)");
  }

  if (g.format == "csv") {
    emit(g, sequence_csv(result));
  } else {
    Json j = sequence_to_json(result);
    j["theorem"] = theorem;
    j["direction"] = direction;
    emit_json(g, j);
  }
  return 0;
}

int run_verify(const GlobalOpts& g, const std::string& suite) {
  const VerificationReport report = run_suite(suite, g.order, g.seed);
  if (g.format == "csv")
    emit(g, report_csv(report));
  else
    emit_json(g, to_json(report));
  return report.failures() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Bell-polynomial inverse relations: tables, transforms, verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(bellinv::kToolVersion));

  GlobalOpts g;
  app.add_option("--order", g.order, "truncation/verification order")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized verification (env BELLINV_SEED)")
      ->envname("BELLINV_SEED")
      ->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "write output to FILE instead of stdout");

  auto* bell = app.add_subcommand("bell", "ordinary Bell polynomials B_{n,k}");
  bell->fallthrough();
  unsigned bell_n = 0;
  int bell_k = -1;
  std::string bell_values;
  bell->add_option("--n", bell_n, "row index n")->required();
  bell->add_option("--k", bell_k, "part count k (omit for the whole row)");
  bell->add_option("--values", bell_values, "comma-separated rationals x1,x2,...");

  auto* lambda = app.add_subcommand("lambda", "lambda_n(s) / f_n(s) tables (polynomials in u=p*s)");
  lambda->fallthrough();
  std::string lambda_spec, lambda_method = "rec", lambda_table = "lambda";
  lambda->add_option("--spec", lambda_spec, "problem spec JSON file")->required();
  lambda->add_option("--method", lambda_method, "rec|closed|instance (lambda), rec|mina (f)")
      ->capture_default_str();
  lambda->add_option("--table", lambda_table, "lambda|f")
      ->check(CLI::IsMember({"lambda", "f"}))
      ->capture_default_str();

  auto* mina = app.add_subcommand("mina", "Mina polynomials C_{n,k}");
  mina->fallthrough();
  unsigned mina_n = 0;
  int mina_k = -1;
  mina->add_option("--n", mina_n, "index n")->required();
  mina->add_option("--k", mina_k, "column k in 0..n-1 (omit for the whole column)");

  auto* transform = app.add_subcommand("transform", "apply one of the inverse-pair transforms");
  transform->fallthrough();
  std::string t_theorem, t_direction, t_spec, t_seq, t_a, t_b, t_p, t_q, t_r;
  transform->add_option("--theorem", t_theorem, "t13|t14|t15|general|t17")->required();
  transform->add_option("--direction", t_direction, "forward|backward")->required();
  transform->add_option("--spec", t_spec, "problem spec JSON (general/t17)");
  transform->add_option("--seq", t_seq, "sequence JSON file")->required();
  transform->add_option("--a", t_a, "parameter a (t13/t14)");
  transform->add_option("--b", t_b, "parameter b (t13/t14)");
  transform->add_option("--p", t_p, "parameter p (t15)");
  transform->add_option("--q", t_q, "parameter q (t15)");
  transform->add_option("--r", t_r, "parameter r (t15)");

  auto* verify = app.add_subcommand("verify", "run the identity verification suites");
  verify->fallthrough();
  std::string suite = "all";
  verify->add_option("--suite", suite, "bell|lambda|mina|transforms|all")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*bell) return run_bell(g, bell_n, bell_k, bell_values);
    if (*lambda) return run_lambda(g, lambda_spec, lambda_method, lambda_table);
    if (*mina) return run_mina(g, mina_n, mina_k);
    if (*transform) {
      // --order truncates the input sequence only when given explicitly.
      const int seq_order = app.count("--order") > 0 ? g.order : 0;
      return run_transform(g, t_theorem, t_direction, t_spec, t_seq, t_a, t_b, t_p, t_q, t_r,
                           seq_order);
    }
    if (*verify) return run_verify(g, suite);
  } catch (const bellinv::SingularParameter& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const bellinv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
