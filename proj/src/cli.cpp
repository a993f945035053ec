#include "chevalley/cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chevalley/autos.hpp"
#include "chevalley/braid.hpp"
#include "chevalley/errors.hpp"
#include "chevalley/json_io.hpp"
#include "chevalley/linalg.hpp"
#include "chevalley/tits.hpp"

namespace chevalley::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TitsSection section_for(int n, const std::string& params) {
  if (params.empty())
    return TitsSection::ones(n);
  std::vector<Rational> a;
  std::stringstream in(params);
  std::string tok;
  while (std::getline(in, tok, ','))
    a.push_back(parse_rational(tok));
  if (a.size() != static_cast<std::size_t>(n))
    throw UsageError("--params needs " + std::to_string(n) + " values, got " + std::to_string(a.size()));
  for (const auto& q : a)
    if (is_zero(q))
      throw UsageError("--params values must be nonzero");
  return TitsSection(n, std::move(a));
}

void check_rank(int n, int max_rank) {
  if (n < 1)
    throw UsageError("--n must be at least 1");
  if (n > max_rank)
    throw UsageError("--n " + std::to_string(n) + " exceeds --max-rank " + std::to_string(max_rank));
}

int cmd_verify(int n, const std::string& level, const std::string& params, const std::string& json_path,
               int max_rank, std::ostream& out, std::ostream& err) {
  check_rank(n, max_rank);
  const auto section = section_for(n, params);

  Report report{n, {}};
  std::optional<Report> group, adjoint;
  if (level == "group" || level == "all")
    group = verify_group_relations(section);
  if (level == "adjoint" || level == "all")
    adjoint = verify_theorem1(n);
  for (const auto* part : {&group, &adjoint})
    if (*part)
      report.relations.insert(report.relations.end(), (*part)->relations.begin(), (*part)->relations.end());

  bool consistent = true;
  if (group && adjoint) {
    const auto mismatches = cross_check_levels(*group, *adjoint);
    for (const auto& m : mismatches)
      err << "group and adjoint verdicts differ for tag " << m.tag << " (" << m.i << ", " << m.j << ")\n";
    consistent = mismatches.empty();
  }

  const auto doc = report_to_json(report).dump(2);
  if (json_path.empty()) {
    out << doc << '\n';
  } else {
    std::ofstream f(json_path);
    if (!f)
      throw UsageError("cannot write " + json_path);
    f << doc << '\n';
  }
  if (!report.all_pass())
    err << "relation failures recorded in the report\n";
  return report.all_pass() && consistent ? kExitPass : kExitRelationFailure;
}

int cmd_eval_word(int n, const std::string& word_text, const std::string& params, std::ostream& out) {
  if (n < 1)
    throw UsageError("--n must be at least 1");
  const auto section = section_for(n, params);
  const auto word = BraidWord::parse(n, word_text);
  const auto value = evaluate_word(section, word);
  const auto decomposition = normalizer_decompose(value);
  const auto projection = natural_projection(word);
  const Json doc = {
      {"n", n},
      {"word", word.to_string()},
      {"matrix", matrix_to_json(value.matrix())},
      {"decomposition", decomposition_to_json(decomposition)},
      {"projection", permutation_to_json(projection)},
      {"pure", is_pure(word)},
      {"diagonal", value.matrix().is_diagonal()},
      {"diagram_commutes", decomposition.sigma == projection},
  };
  out << doc.dump(2) << '\n';
  return decomposition.sigma == projection ? kExitPass : kExitRelationFailure;
}

int cmd_normalizer_check(const std::string& path, std::ostream& out) {
  std::ifstream f(path);
  if (!f)
    throw UsageError("cannot read " + path);
  Json doc;
  try {
    doc = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  const Matrix m = matrix_from_json(doc);
  if (det(m) != 1)
    throw UsageError("matrix determinant is " + to_string(det(m)) + ", expected 1");
  const GroupElement x(m);
  try {
    const auto d = normalizer_decompose(x);
    out << Json{{"in_normalizer", true},
                {"decomposition", decomposition_to_json(d)},
                {"coset_representative", matrix_to_json(coset_representative(d.sigma).matrix())}}
               .dump(2)
        << '\n';
    return kExitPass;
  } catch (const NotInNormalizer& e) {
    out << Json{{"in_normalizer", false}, {"reason", e.what()}}.dump(2) << '\n';
    return kExitRelationFailure;
  }
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of braid-type relations for the standard automorphisms of sl(n+1)"};
  app.require_subcommand(1);

  int n = 0;
  int max_rank = 8;
  std::string level = "all";
  std::string params;
  std::string json_path;
  std::string word;
  std::string matrix_path;

  auto* verify = app.add_subcommand("verify", "Check every relation instance at group and/or adjoint level");
  verify->add_option("--n", n, "Rank n of sl(n+1)")->required();
  verify->add_option("--level", level, "group, adjoint or all")
      ->check(CLI::IsMember({"group", "adjoint", "all"}));
  verify->add_option("--params", params, "Tits section parameters a1,...,an (default all 1)");
  verify->add_option("--json", json_path, "Write the report here instead of stdout");
  verify->add_option("--max-rank", max_rank, "Largest accepted rank");

  auto* eval = app.add_subcommand("eval-word", "Evaluate a braid word in N(T)");
  eval->add_option("--n", n, "Rank n of sl(n+1)")->required();
  eval->add_option("--word", word, "Signed generator indices, e.g. \"1 2 -1\"")->required();
  eval->add_option("--params", params, "Tits section parameters a1,...,an (default all 1)");

  auto* normalizer = app.add_subcommand("normalizer-check", "Decompose a matrix of N(T) or reject it");
  normalizer->add_option("--matrix", matrix_path, "Matrix JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return kExitUsage;
  }

  try {
    if (*verify)
      return cmd_verify(n, level, params, json_path, max_rank, out, err);
    if (*eval)
      return cmd_eval_word(n, word, params, out);
    return cmd_normalizer_check(matrix_path, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "out of range: " << e.what() << '\n';
  } catch (const std::domain_error& e) {
    err << "invalid input: " << e.what() << '\n';
  }
  return kExitUsage;
}

} // namespace chevalley::cli
