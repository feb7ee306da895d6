#include "blfilt/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

namespace blfilt::cli {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path.generic_string());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string tuple_str(const FiniteBLAlgebra& alg, const std::vector<int>& tuple) {
  static const char* const vars[] = {"x", "y", "z"};
  std::string out;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += " ";
    out += std::string(vars[i]) + "=" + alg.element_name(tuple[i]);
  }
  return out;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

struct Report {
  std::ostringstream out;
  template <typename T> void line(const std::string& key, const T& value) {
    out << key << " = " << value << "\n";
  }
  void raw(const std::string& text) { out << text; }
  std::string str() const { return out.str(); }
};

// Emits validity plus, when valid, the derived-law section. Returns validity.
bool emit_validation(Report& rep, const FiniteBLAlgebra& alg) {
  AxiomReport axioms = validate_bl(alg);
  rep.line("bl_valid", bool_str(axioms.valid));
  if (!axioms.valid) {
    for (const AxiomViolation& v : axioms.violations)
      rep.line("violation." + v.axiom, tuple_str(alg, v.witness));
    return false;
  }
  return true;
}

struct VariantSlot {
  VariantKind variant;
  std::size_t index;
};

constexpr std::array<FilterKind, 4> kKinds = {FilterKind::Plain, FilterKind::Implicative,
                                              FilterKind::PositiveImplicative,
                                              FilterKind::Fantastic};
constexpr std::array<VariantKind, 3> kVariants = {VariantKind::Ordinary, VariantKind::EqVq,
                                                  VariantKind::Overline};

int run_validate(const Command& cmd, Report& rep) {
  FiniteBLAlgebra alg = parse_algebra(read_file(cmd.algebra_file));
  rep.line("algebra", alg.name());
  rep.line("elements", alg.size());
  if (!emit_validation(rep, alg)) {
    if (cmd.summary)
      rep.raw("\nAlgebra " + alg.name() + " fails validation; see the violation lines above.\n");
    return kCheckFailed;
  }
  PropertyReport props = check_arithmetic_properties(alg);
  for (const PropertyResult& r : props.results) {
    rep.line("property." + r.property, r.pass ? "pass" : "fail");
    if (!r.pass) rep.line("witness." + r.property, tuple_str(alg, r.witness));
  }
  if (cmd.summary)
    rep.raw("\nAlgebra " + alg.name() + " over " + std::to_string(alg.size()) +
            " elements satisfies the full axiom set" +
            (props.all_pass ? " and all seven derived laws.\n" : ", but a derived law fails.\n"));
  return props.all_pass ? kOk : kCheckFailed;
}

int run_filters(const Command& cmd, Report& rep) {
  FiniteBLAlgebra alg = parse_algebra(read_file(cmd.algebra_file));
  rep.line("algebra", alg.name());
  rep.line("kind", kind_token(cmd.filter_kind));
  if (!emit_validation(rep, alg)) return kCheckFailed;
  std::vector<CrispSubset> filters = enumerate_filters(alg, cmd.filter_kind);
  rep.line("filter_count", filters.size());
  for (std::size_t i = 0; i < filters.size(); ++i)
    rep.line("filter." + std::to_string(i + 1), subset_str(alg, filters[i]));
  if (cmd.summary)
    rep.raw("\nFound " + std::to_string(filters.size()) + " " + kind_token(cmd.filter_kind) +
            " filter(s) of " + alg.name() + ".\n");
  return kOk;
}

int run_classify(const Command& cmd, Report& rep) {
  FiniteBLAlgebra alg = parse_algebra(read_file(cmd.algebra_file));
  FuzzySet f = parse_fuzzy_set(read_file(cmd.fuzzyset_file), alg);
  rep.line("algebra", alg.name());
  rep.line("fuzzyset", f.name());
  if (!emit_validation(rep, alg)) return kCheckFailed;

  TaxonomyRecord rec = classify(f, cmd.thresholds);
  for (std::size_t vi = 0; vi < kVariants.size(); ++vi)
    for (std::size_t ki = 0; ki < kKinds.size(); ++ki)
      rep.line(std::string(variant_token(kVariants[vi])) + "." + kind_token(kKinds[ki]),
               bool_str(rec.verdict[vi][ki]));
  for (std::size_t vi = 0; vi < kVariants.size(); ++vi)
    for (std::size_t ki = 0; ki < kKinds.size(); ++ki)
      if (rec.witness[vi][ki])
        rep.line("witness." + std::string(variant_token(kVariants[vi])) + "." +
                     kind_token(kKinds[ki]),
                 rec.witness[vi][ki]->str(alg));
  for (std::size_t ki = 0; ki < kKinds.size(); ++ki)
    rep.line("profile." + std::string(kind_token(kKinds[ki])), rec.profile[ki].str());
  for (const CustomVerdict& cv : rec.custom) {
    std::string prefix =
        "thresholds." + cv.thresholds.alpha.str() + "." + cv.thresholds.beta.str() + ".";
    for (std::size_t ki = 0; ki < kKinds.size(); ++ki) {
      rep.line(prefix + kind_token(kKinds[ki]), bool_str(cv.verdict[ki]));
      if (cv.witness[ki]) rep.line("witness." + prefix + kind_token(kKinds[ki]),
                                   cv.witness[ki]->str(alg));
    }
  }
  if (cmd.summary) {
    std::string holds;
    for (std::size_t vi = 0; vi < kVariants.size(); ++vi)
      for (std::size_t ki = 0; ki < kKinds.size(); ++ki)
        if (rec.verdict[vi][ki])
          holds += (holds.empty() ? "" : ", ") + std::string(variant_token(kVariants[vi])) + "." +
                   kind_token(kKinds[ki]);
    rep.raw("\n" + f.name() + " over " + alg.name() + ": " +
            (holds.empty() ? "no variant/kind combination holds." : "holds for " + holds + ".") +
            "\n");
  }
  return kOk;
}

int run_profile(const Command& cmd, Report& rep) {
  FiniteBLAlgebra alg = parse_algebra(read_file(cmd.algebra_file));
  FuzzySet f = parse_fuzzy_set(read_file(cmd.fuzzyset_file), alg);
  rep.line("algebra", alg.name());
  rep.line("fuzzyset", f.name());
  rep.line("kind", kind_token(cmd.filter_kind));
  if (!emit_validation(rep, alg)) return kCheckFailed;
  IntervalSet profile = threshold_profile(f, cmd.filter_kind);
  rep.line("profile." + std::string(kind_token(cmd.filter_kind)), profile.str());
  if (cmd.summary)
    rep.raw("\nThe " + std::string(kind_token(cmd.filter_kind)) + " profile of " + f.name() +
            " covers " + std::to_string(profile.parts().size()) + " interval(s).\n");
  return kOk;
}

const std::vector<std::pair<std::string, std::vector<std::string>>>& theorem_token_map() {
  static const std::vector<std::pair<std::string, std::vector<std::string>>> map = {
      {"threshold_level", {"threshold_iff_level"}},
      {"profile", {"threshold_iff_profile"}},
      {"point_overline", {"overline_point_iff_inequalities"}},
      {"point_eqvq", {"eqvq_point_iff_level"}},
      {"grid_reduction", {"point_grid_reduction"}},
      {"decomposition", {"overline_implicative_iff_pi_and_fantastic"}},
      {"crisp",
       {"implicative_subset_positive_implicative", "implicative_subset_fantastic",
        "implicative_equals_intersection"}},
  };
  return map;
}

int run_verify(const Command& cmd, Report& rep) {
  FiniteBLAlgebra alg = parse_algebra(read_file(cmd.algebra_file));
  rep.line("algebra", alg.name());
  rep.line("grid", cmd.grid);
  if (!emit_validation(rep, alg)) return kCheckFailed;

  std::vector<std::string> tokens = cmd.theorems;
  if (tokens.empty())
    for (const auto& [token, ids] : theorem_token_map()) tokens.push_back(token);

  std::vector<std::string> wanted_ids;
  bool need_equiv = false;
  bool need_decomp = false;
  for (const std::string& token : tokens) {
    auto it = std::find_if(theorem_token_map().begin(), theorem_token_map().end(),
                           [&](const auto& p) { return p.first == token; });
    if (it == theorem_token_map().end())
      throw std::invalid_argument("unknown theorem token '" + token + "'");
    for (const std::string& id : it->second) wanted_ids.push_back(id);
    if (token == "decomposition" || token == "crisp")
      need_decomp = true;
    else
      need_equiv = true;
  }

  GridSpec grid{cmd.grid};
  rep.line("fuzzy_sets", grid_size(alg, grid));

  std::vector<EquivalenceEntry> entries;
  if (need_equiv) {
    EquivalenceReport r = verify_equivalences(alg, grid);
    entries.insert(entries.end(), r.entries.begin(), r.entries.end());
  }
  if (need_decomp) {
    EquivalenceReport r = verify_implicative_decomposition(alg, grid);
    entries.insert(entries.end(), r.entries.begin(), r.entries.end());
  }

  bool all_pass = true;
  std::uint64_t selected = 0;
  for (const std::string& id : wanted_ids) {
    auto it = std::find_if(entries.begin(), entries.end(),
                           [&](const EquivalenceEntry& e) { return e.id == id; });
    if (it == entries.end()) continue;
    ++selected;
    rep.line("theorem." + id + ".instances", it->instances);
    rep.line("theorem." + id + ".failures", it->failures);
    rep.line("theorem." + id, it->pass() ? "pass" : "fail");
    for (std::size_t k = 0; k < it->counterexamples.size(); ++k)
      rep.line("counterexample." + id + "." + std::to_string(k + 1), it->counterexamples[k]);
    all_pass = all_pass && it->pass();
  }
  rep.line("all", all_pass ? "pass" : "fail");
  if (cmd.summary)
    rep.raw("\n" + std::to_string(selected) + " suite(s) on grid denominator " +
            std::to_string(cmd.grid) + ": " + (all_pass ? "all pass.\n" : "failures found.\n"));
  return all_pass ? kOk : kCheckFailed;
}

int run_generate(const Command& cmd, Report& rep) {
  std::vector<FiniteBLAlgebra> algebras = generate_bl_algebras(cmd.size);
  rep.line("size", cmd.size);
  rep.line("count", algebras.size());
  for (const FiniteBLAlgebra& alg : algebras) rep.raw("\n" + serialize_algebra(alg));
  if (cmd.summary)
    rep.raw("\n" + std::to_string(algebras.size()) + " algebra(s) on " +
            std::to_string(cmd.size) + " elements up to isomorphism.\n");
  return kOk;
}

int run_audit(const Command& cmd, Report& rep) {
  AuditReport audit = audit_examples(cmd.corpus_dir);
  rep.line("corpus", cmd.corpus_dir.generic_string());
  rep.line("cases", audit.findings.size());
  std::uint64_t total_claims = 0;
  for (const AuditFinding& finding : audit.findings) {
    const std::string prefix = "case." + finding.case_id;
    rep.line(prefix + ".algebra", finding.algebra_name);
    rep.line(prefix + ".fuzzyset", finding.fuzzyset_name);
    rep.line(prefix + ".claims", finding.claims.size());
    for (std::size_t i = 0; i < finding.claims.size(); ++i) {
      const AuditClaim& c = finding.claims[i];
      const std::string cp = prefix + ".claim." + std::to_string(i + 1);
      rep.line(cp, c.text);
      rep.line(cp + ".machine", bool_str(c.machine));
      rep.line(cp + ".oracle", bool_str(c.oracle));
      rep.line(cp + ".oracle_agreement", bool_str(c.tool_oracle_agree));
      rep.line(cp + ".claim_agreement", bool_str(c.claim_agree));
      if (c.witness) rep.line(cp + ".witness", *c.witness);
      ++total_claims;
    }
    rep.line(prefix + ".agreement", bool_str(finding.all_claims_agree));
  }
  rep.line("summary.cases", audit.findings.size());
  rep.line("summary.claims", total_claims);
  rep.line("summary.disagreements", audit.disagreements);
  rep.line("summary.oracle_mismatches", audit.oracle_mismatches);
  for (const std::string& err : audit.file_errors) rep.line("error", err);
  if (cmd.summary)
    rep.raw("\n" + std::to_string(audit.findings.size()) + " case(s) audited: " +
            std::to_string(total_claims - audit.disagreements) + " of " +
            std::to_string(total_claims) + " recorded claims match the tool verdicts; " +
            (audit.oracle_mismatches == 0
                 ? "the oracle agrees with the tool on every claim.\n"
                 : std::to_string(audit.oracle_mismatches) + " oracle mismatch(es).\n"));
  if (!audit.file_errors.empty()) return kUsage;
  if (audit.disagreements > 0 || audit.oracle_mismatches > 0) return kCheckFailed;
  return kOk;
}

} // namespace

const std::vector<std::string>& verify_theorem_tokens() {
  static const std::vector<std::string> tokens = [] {
    std::vector<std::string> out;
    for (const auto& [token, ids] : theorem_token_map()) out.push_back(token);
    return out;
  }();
  return tokens;
}

RunResult run(const Command& cmd) {
  Report rep;
  int status = kOk;
  try {
    switch (cmd.kind) {
      case Command::Kind::Validate: status = run_validate(cmd, rep); break;
      case Command::Kind::Filters: status = run_filters(cmd, rep); break;
      case Command::Kind::Classify: status = run_classify(cmd, rep); break;
      case Command::Kind::Profile: status = run_profile(cmd, rep); break;
      case Command::Kind::Verify: status = run_verify(cmd, rep); break;
      case Command::Kind::Generate: status = run_generate(cmd, rep); break;
      case Command::Kind::Audit: status = run_audit(cmd, rep); break;
    }
  } catch (const ParseError& e) {
    rep.line("error", e.what());
    status = kUsage;
  } catch (const std::invalid_argument& e) {
    rep.line("error", e.what());
    status = kUsage;
  } catch (const std::out_of_range& e) {
    rep.line("error", e.what());
    status = kUsage;
  } catch (const std::logic_error& e) {
    rep.line("error", e.what());
    status = kCheckFailed;
  } catch (const std::exception& e) {
    rep.line("error", e.what());
    status = kUsage;
  }
  return {status, rep.str()};
}

} // namespace blfilt::cli
