// Command-line front end: structure checking, model search, theorem
// verification, and truncated deformation analysis with JSON I/O.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "homforge/json_io.hpp"

namespace {

using homforge::io::json;

int resolve_threads() {
  if (const char* env = std::getenv("HOMFORGE_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

json read_input(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw homforge::PreconditionError("cannot open input file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  return json::parse(text);
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

int cmd_check(const std::string& input, bool with_twist) {
  homforge::FiniteHomStructure h =
      homforge::io::structure_from_json(read_input(input));
  json rep;
  auto witness = homforge::hom_assoc_witness(h);
  rep["hom_associative"] = !witness.has_value();
  if (witness)
    rep["hom_violation"] = json::array({(*witness)[0], (*witness)[1], (*witness)[2]});
  rep["alpha"] = homforge::io::to_json(homforge::alpha_properties(h));
  rep["degeneracy"] = homforge::io::to_json(homforge::degeneracy_report(h));
  if (with_twist) {
    auto table = homforge::is_twist(h);
    if (table) {
      json rows = json::array();
      for (int x = 0; x < h.size; ++x) {
        json row = json::array();
        for (int y = 0; y < h.size; ++y)
          row.push_back((*table)[static_cast<size_t>(x) * h.size + y]);
        rows.push_back(std::move(row));
      }
      rep["twist"] = std::move(rows);
    } else {
      rep["twist"] = nullptr;
    }
  }
  emit(rep);
  return witness ? 1 : 0;
}

homforge::search::SearchConstraints build_constraints(int size, const std::string& alpha,
                                                      const std::string& degeneracy,
                                                      const std::string& twist,
                                                      bool canonical) {
  homforge::search::SearchConstraints c;
  c.size = size;
  if (alpha == "any") c.alpha_filter = homforge::search::AlphaFilter::any;
  else if (alpha == "surjective") c.alpha_filter = homforge::search::AlphaFilter::surjective;
  else c.alpha_filter = homforge::search::AlphaFilter::identity;
  if (degeneracy == "any")
    c.degeneracy_filter = homforge::search::DegeneracyFilter::any;
  else if (degeneracy == "strongly_degenerate")
    c.degeneracy_filter = homforge::search::DegeneracyFilter::strongly_degenerate;
  else
    c.degeneracy_filter = homforge::search::DegeneracyFilter::not_strongly_degenerate;
  if (twist == "any") c.twist_filter = homforge::search::TwistFilter::any;
  else if (twist == "twist") c.twist_filter = homforge::search::TwistFilter::twist;
  else c.twist_filter = homforge::search::TwistFilter::non_twist;
  c.canonical_only = canonical;
  return c;
}

int cmd_search(const homforge::search::SearchConstraints& c, bool count_only, bool hunt,
               bool expect) {
  if (hunt) {
    auto found = homforge::search::hunt(c);
    emit(found ? homforge::io::to_json(*found) : json(nullptr));
    return (!found && expect) ? 1 : 0;
  }
  if (count_only) {
    std::int64_t n = homforge::search::count(c, resolve_threads());
    emit(json{{"count", n}, {"constraints", homforge::io::to_json(c)}});
    return 0;
  }
  homforge::search::enumerate(c, [](const homforge::FiniteHomStructure& h) {
    emit(homforge::io::to_json(h));
    return true;
  }, resolve_threads());
  return 0;
}

int cmd_verify(const std::string& prop, int max_size, long long bound) {
  int threads = resolve_threads();
  if (prop == "nat") {
    auto rep = homforge::theorems::check_nat_example(bound);
    emit(homforge::io::to_json(rep));
    return rep.pass ? 0 : 1;
  }
  homforge::theorems::HarnessReport rep;
  if (prop == "1") rep = homforge::theorems::verify_proposition1(max_size, threads);
  else if (prop == "2") rep = homforge::theorems::verify_proposition2(max_size, threads);
  else rep = homforge::theorems::verify_lemma1(max_size, threads);
  emit(homforge::io::to_json(rep));
  return rep.pass ? 0 : 1;
}

int cmd_deform_check(const std::string& input) {
  auto d = homforge::io::deformation_from_json(read_input(input));
  auto defects = homforge::deform::hom_assoc_defect(d);
  bool pass = true;
  json arr = json::array();
  for (const auto& t : defects) {
    if (!t.is_zero()) pass = false;
    arr.push_back(homforge::io::to_json(t));
  }
  emit(json{{"p", d.base.p},
            {"dim", d.base.dim},
            {"order", d.mu_t.order},
            {"defects", std::move(arr)},
            {"pass", pass}});
  return pass ? 0 : 1;
}

int cmd_deform_untwist(const std::string& input) {
  auto d = homforge::io::deformation_from_json(read_input(input));
  auto nu = homforge::deform::untwist_deformation(d);
  bool associative = true;
  for (const auto& t : homforge::deform::assoc_defect(nu))
    if (!t.is_zero()) associative = false;
  json out = homforge::io::star_series_to_json(nu);
  out["associative"] = associative;
  emit(out);
  return associative ? 0 : 1;
}

int cmd_deform_twist(const std::string& input) {
  json j = read_input(input);
  auto star = homforge::io::star_series_from_json(j);
  auto alpha = homforge::io::linear_series_from_json(j);
  auto d = homforge::deform::twist_deformation(alpha, star);
  emit(homforge::io::to_json(d));
  return 0;
}

int cmd_deform_invert(const std::string& input) {
  auto s = homforge::io::linear_series_from_json(read_input(input));
  emit(homforge::io::linear_series_to_json(homforge::deform::invert_series(s)));
  return 0;
}

int cmd_deform_equiv(const std::string& input) {
  json j = read_input(input);
  if (!j.is_object() || !j.contains("first") || !j.contains("second") || !j.contains("phi"))
    throw homforge::PreconditionError("expected fields \"phi\", \"first\", \"second\"");
  auto d = homforge::io::deformation_from_json(j["first"]);
  auto d2 = homforge::io::deformation_from_json(j["second"]);
  auto phi = homforge::io::phi_from_json(j["phi"], d.base.dim, d.base.p);
  bool eq = homforge::deform::equivalence_check(phi, d, d2);
  emit(json{{"equivalent", eq}});
  return eq ? 0 : 1;
}

int cmd_deform_conjugate(const std::string& input) {
  json j = read_input(input);
  int p = j.value("p", 0);
  int dim = j.value("dim", 0);
  if (!homforge::fp::is_prime(p) || dim < 1 || dim > 4)
    throw homforge::PreconditionError("bad p or dim");
  auto phi = homforge::io::mat_from_json(j.at("phi"), dim, p);
  auto mul = homforge::io::tensor_from_json(j.at("mul"), dim, p);
  auto alpha = homforge::io::mat_from_json(j.at("alpha"), dim, p);
  auto mul_prime = homforge::io::tensor_from_json(j.at("mul_prime"), dim, p);
  homforge::deform::LinearHomAlgebra a{p, dim, mul, alpha};
  auto out = homforge::deform::conjugate_twist(phi, a, mul_prime);
  emit(json{{"p", out.p},
            {"dim", out.dim},
            {"mul", homforge::io::to_json(out.mul)},
            {"alpha", homforge::io::to_json(out.alpha_mat)}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite hom-associative structures and truncated formal deformations"};
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "check one structure (JSON)");
  std::string check_input = "-";
  bool check_twist = false;
  check->add_option("input", check_input, "structure JSON file, - for stdin");
  check->add_flag("--twist", check_twist, "also search for an untwisted table");

  auto* search = app.add_subcommand("search", "enumerate structures");
  int size = 1;
  std::string alpha = "any", degeneracy = "any", twist = "any";
  bool canonical = false, count_only = false, hunt = false, expect = false;
  search->add_option("--size", size, "carrier size")->required();
  search->add_option("--alpha", alpha, "alpha filter")
      ->check(CLI::IsMember({"any", "surjective", "identity"}));
  search->add_option("--degeneracy", degeneracy, "degeneracy filter")
      ->check(CLI::IsMember({"any", "strongly_degenerate", "not_strongly_degenerate"}));
  search->add_option("--twist", twist, "twist filter")
      ->check(CLI::IsMember({"any", "twist", "non_twist"}));
  search->add_flag("--canonical", canonical, "one representative per isomorphism class");
  search->add_flag("--count", count_only, "emit a count instead of a stream");
  search->add_flag("--hunt", hunt, "emit only the first match");
  search->add_flag("--expect", expect, "with --hunt: exit 1 when nothing is found");

  auto* verify = app.add_subcommand("verify", "run a theorem sweep");
  std::string prop;
  int max_size = 3;
  long long bound = 1000;
  verify->add_option("--prop", prop, "which theorem")
      ->required()
      ->check(CLI::IsMember({"1", "2", "lemma1", "nat"}));
  verify->add_option("--max-size", max_size, "sweep sizes 1..k");
  verify->add_option("--bound", bound, "triple bound for the nat example");

  auto* deform = app.add_subcommand("deform", "truncated deformation tools");
  deform->require_subcommand(1);
  std::string deform_input = "-";
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", deform_input, "JSON file, - for stdin");
  };
  auto* dcheck = deform->add_subcommand("check", "hom-associativity defects");
  auto* duntwist = deform->add_subcommand("untwist", "divide out the twisting series");
  auto* dtwist = deform->add_subcommand("twist", "twist an associative deformation");
  auto* dinvert = deform->add_subcommand("invert", "invert a linear series");
  auto* dequiv = deform->add_subcommand("equiv", "formal isomorphism check");
  auto* dconj = deform->add_subcommand("conjugate", "transport a twisting map");
  for (CLI::App* sub : {dcheck, duntwist, dtwist, dinvert, dequiv, dconj}) add_input(sub);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return cmd_check(check_input, check_twist);
    if (*search)
      return cmd_search(build_constraints(size, alpha, degeneracy, twist, canonical),
                        count_only, hunt, expect);
    if (*verify) return cmd_verify(prop, max_size, bound);
    if (*deform) {
      if (*dcheck) return cmd_deform_check(deform_input);
      if (*duntwist) return cmd_deform_untwist(deform_input);
      if (*dtwist) return cmd_deform_twist(deform_input);
      if (*dinvert) return cmd_deform_invert(deform_input);
      if (*dequiv) return cmd_deform_equiv(deform_input);
      if (*dconj) return cmd_deform_conjugate(deform_input);
    }
  } catch (const json::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  }
  return 2;
}
