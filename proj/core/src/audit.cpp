#include "blfilt/verify.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

namespace blfilt {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path.generic_string());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

struct SidecarClaim {
  std::string text;
  Thresholds thresholds;
  FilterKind kind;
  bool claimed;
};

struct Sidecar {
  std::string case_id;
  std::filesystem::path algebra_file;
  std::filesystem::path fuzzyset_file;
  std::vector<SidecarClaim> claims;
};

Sidecar parse_sidecar(const std::filesystem::path& path) {
  Sidecar sc;
  std::istringstream in(read_file(path));
  std::string raw;
  int line_no = 0;
  bool ended = false;

  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> toks(std::istream_iterator<std::string>(ls),
                                  std::istream_iterator<std::string>{});
    if (toks.empty()) continue;
    if (ended) throw ParseError("unexpected content after 'end'", line_no, 1);

    if (toks[0] == "case" && toks.size() == 2 && sc.case_id.empty()) {
      sc.case_id = toks[1];
    } else if (toks[0] == "algebra" && toks.size() == 2) {
      sc.algebra_file = path.parent_path() / toks[1];
    } else if (toks[0] == "fuzzyset" && toks.size() == 2) {
      sc.fuzzyset_file = path.parent_path() / toks[1];
    } else if (toks[0] == "claim") {
      SidecarClaim claim;
      std::size_t i = 1;
      if (i < toks.size() && toks[i] == "thresholds") {
        if (toks.size() != 6) throw ParseError("expected 'claim thresholds <a> <b> <kind> <bool>'",
                                               line_no, 1);
        try {
          claim.thresholds.alpha = UnitRational::parse(toks[2]);
          claim.thresholds.beta = UnitRational::parse(toks[3]);
        } catch (const std::invalid_argument& e) {
          throw ParseError(e.what(), line_no, 1);
        }
        if (!(claim.thresholds.alpha < claim.thresholds.beta))
          throw ParseError("thresholds require alpha < beta", line_no, 1);
        i = 4;
      } else {
        if (toks.size() != 4) throw ParseError("expected 'claim <variant> <kind> <bool>'",
                                               line_no, 1);
        auto variant = parse_variant_token(toks[1]);
        if (!variant) throw ParseError("unknown variant '" + toks[1] + "'", line_no, 1);
        claim.thresholds = variant_thresholds(*variant);
        i = 2;
      }
      auto kind = parse_kind_token(toks[i]);
      if (!kind) throw ParseError("unknown kind '" + toks[i] + "'", line_no, 1);
      claim.kind = *kind;
      const std::string& verdict = toks[i + 1];
      if (verdict != "true" && verdict != "false")
        throw ParseError("claim verdict must be 'true' or 'false'", line_no, 1);
      claim.claimed = verdict == "true";
      std::string text;
      for (std::size_t k = 1; k < toks.size(); ++k) text += (k > 1 ? " " : "") + toks[k];
      claim.text = text;
      sc.claims.push_back(std::move(claim));
    } else if (toks[0] == "end" && toks.size() == 1) {
      ended = true;
    } else {
      throw ParseError("unrecognized directive '" + toks[0] + "'", line_no, 1);
    }
  }
  if (!ended) throw ParseError("expected 'end'", line_no + 1, 1);
  if (sc.case_id.empty()) throw ParseError("missing 'case' line", 1, 1);
  if (sc.algebra_file.empty()) throw ParseError("missing 'algebra' line", 1, 1);
  if (sc.fuzzyset_file.empty()) throw ParseError("missing 'fuzzyset' line", 1, 1);
  if (sc.claims.empty()) throw ParseError("at least one claim required", 1, 1);
  return sc;
}

} // namespace

AuditReport audit_examples(const std::filesystem::path& dir) {
  AuditReport report;
  if (!std::filesystem::is_directory(dir))
    throw std::runtime_error("not a directory: " + dir.generic_string());

  std::vector<std::filesystem::path> sidecars;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".audit")
      sidecars.push_back(entry.path());
  std::sort(sidecars.begin(), sidecars.end());

  for (const auto& path : sidecars) {
    try {
      Sidecar sc = parse_sidecar(path);
      FiniteBLAlgebra alg = parse_algebra(read_file(sc.algebra_file));
      AxiomReport axioms = validate_bl(alg);
      if (!axioms.valid)
        throw std::runtime_error("algebra '" + alg.name() + "' fails validation (" +
                                 axioms.violations.front().axiom + ")");
      FuzzySet f = parse_fuzzy_set(read_file(sc.fuzzyset_file), alg);

      std::vector<BigRat> membership;
      std::vector<std::vector<int>> odot(alg.size(), std::vector<int>(alg.size()));
      std::vector<std::vector<int>> imp = odot;
      for (int x = 0; x < alg.size(); ++x) {
        membership.push_back(f.at(x).value());
        for (int y = 0; y < alg.size(); ++y) {
          odot[x][y] = alg.odot(x, y);
          imp[x][y] = alg.imp(x, y);
        }
      }

      AuditFinding finding;
      finding.case_id = sc.case_id;
      finding.algebra_name = alg.name();
      finding.fuzzyset_name = f.name();
      finding.all_claims_agree = true;

      for (const SidecarClaim& c : sc.claims) {
        AuditClaim out;
        out.text = c.text;
        out.thresholds = c.thresholds;
        out.kind = c.kind;
        out.claimed = c.claimed;
        std::optional<Witness> w = threshold_violation(f, c.thresholds, c.kind);
        out.machine = !w.has_value();
        if (w) out.witness = w->str(alg);
        out.oracle = oracle_threshold_filter(odot, imp, alg.bottom(), alg.top(), membership,
                                             c.thresholds.alpha.value(), c.thresholds.beta.value(),
                                             c.kind);
        out.tool_oracle_agree = out.machine == out.oracle;
        out.claim_agree = out.machine == out.claimed;
        if (!out.tool_oracle_agree) ++report.oracle_mismatches;
        if (!out.claim_agree) {
          ++report.disagreements;
          finding.all_claims_agree = false;
        }
        finding.claims.push_back(std::move(out));
      }
      report.findings.push_back(std::move(finding));
    } catch (const std::exception& e) {
      report.file_errors.push_back(path.filename().generic_string() + ": " + e.what());
    }
  }

  std::sort(report.findings.begin(), report.findings.end(),
            [](const AuditFinding& a, const AuditFinding& b) { return a.case_id < b.case_id; });
  return report;
}

} // namespace blfilt
