#include "fecheck/run.hpp"

#include <exception>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "fecheck/errors.hpp"
#include "fecheck/genpoly.hpp"
#include "fecheck/multiadd.hpp"
#include "fecheck/parser.hpp"
#include "fecheck/sampling.hpp"
#include "fecheck/scenario_file.hpp"
#include "fecheck/structure.hpp"
#include "fecheck/suite.hpp"

namespace fecheck {

namespace {

using Json = nlohmann::ordered_json;

std::string join(const std::vector<FieldElem>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i == 0 ? "" : ", ") + xs[i].to_string();
  return out;
}

Json witness_json(const std::optional<Witness>& w) {
  Json list = Json::array();
  if (w) list.push_back(Json{{"input", join(w->inputs)}, {"lhs", w->lhs}, {"rhs", w->rhs}});
  return list;
}

Json entry(const std::string& name, const std::string& expected, const std::string& actual,
           const std::optional<Witness>& w, std::uint64_t seed, std::size_t samples) {
  return Json{{"scenario", name}, {"expected", expected}, {"actual", actual},
              {"witnesses", witness_json(w)}, {"seed", seed}, {"samples", samples}};
}

void text_witness(std::ostream& out, const std::optional<Witness>& w) {
  if (!w) return;
  out << "  witness input: " << join(w->inputs) << "\n";
  out << "  lhs: " << w->lhs << "\n";
  out << "  rhs: " << w->rhs << "\n";
}

void text_entry(std::ostream& out, const Json& e, const std::optional<Witness>& w, const std::string& note = {}) {
  const bool matched = e["expected"] == e["actual"];
  out << (matched ? "ok        " : "MISMATCH  ") << e["scenario"].get<std::string>() << "  expected "
      << e["expected"].get<std::string>() << ", got " << e["actual"].get<std::string>() << "\n";
  if (!note.empty() && !matched) out << "  note: " << note << "\n";
  text_witness(out, w);
}

const std::string& require_input(const RunConfig& c) {
  if (!c.input || c.input->empty()) throw std::invalid_argument("this command needs an input argument");
  return *c.input;
}

std::vector<FieldElem> base_samples(const RunConfig& c, std::size_t fixed) {
  auto s = structured_samples();
  s.resize(std::min(fixed, s.size()));
  auto extra = random_samples(c.seed, c.samples);
  s.insert(s.end(), extra.begin(), extra.end());
  return s;
}

int run_verify(const RunConfig& c, std::ostream& out) {
  Scenario s = load_scenario(require_input(c));
  auto extra = random_samples(c.seed, c.samples);
  s.samples.insert(s.samples.end(), extra.begin(), extra.end());
  const Verdict v = verify_identity(s);
  Json e = entry(s.name, to_string(s.expected), to_string(v.outcome), v.witness, c.seed, s.samples.size());
  if (c.report_format == ReportFormat::json) {
    out << e.dump(2) << "\n";
  } else {
    text_entry(out, e, v.witness, v.note);
    out << "checked " << v.checked << " of " << s.samples.size() << " samples (seed " << c.seed << ")\n";
  }
  return v.outcome == s.expected ? exit_ok : exit_mismatch;
}

int run_polarize(const RunConfig& c, std::ostream& out) {
  const std::string& src = require_input(c);
  const UnaryFn f = parse_function(src);
  const auto probes = base_samples(c, 4);
  std::optional<unsigned> n = c.degree;
  if (!n) n = monomial_degree(f, c.max_degree, probes);
  if (!n || *n == 0) {
    const std::string why = n ? "degree 0: nothing to polarize" : "no degree up to the bound";
    if (c.report_format == ReportFormat::json) {
      Json e = entry(src, "consistent", "absent", std::nullopt, c.seed, probes.size());
      e["note"] = why;
      out << e.dump(2) << "\n";
    } else {
      out << src << ": " << why << "\n";
    }
    return exit_mismatch;
  }
  const Polarization pol = polarize(f, *n, probes);
  const std::string actual = pol.report.consistent ? "consistent" : "inconsistent";
  Json values = Json::array();
  std::vector<FieldElem> rotated(probes.begin() + 1, probes.end());
  const auto tuples = sample_tuples(rotated, *n);
  for (std::size_t i = 0; i < tuples.size() && i < 3; ++i) {
    values.push_back(Json{{"args", join(tuples[i])}, {"value", pol.form(tuples[i]).to_string()}});
  }
  Json e = entry(src, "consistent", actual, pol.report.witness, c.seed, probes.size());
  e["degree"] = *n;
  e["base"] = probes.front().to_string();
  e["tuples_checked"] = pol.report.tuples_checked;
  e["values"] = values;
  if (c.report_format == ReportFormat::json) {
    out << e.dump(2) << "\n";
  } else {
    text_entry(out, e, pol.report.witness);
    out << "degree " << *n << ", base point " << probes.front().to_string() << ", " << pol.report.tuples_checked
        << " tuples over " << probes.size() << " base points\n";
    for (const auto& v : values) {
      out << "  form(" << v["args"].get<std::string>() << ") = " << v["value"].get<std::string>() << "\n";
    }
  }
  return pol.report.consistent ? exit_ok : exit_mismatch;
}

int report_number(const RunConfig& c, std::ostream& out, const std::string& name, const std::string& label,
                  const std::optional<long>& value, const std::string& note, std::size_t samples,
                  const std::optional<Witness>& w = std::nullopt) {
  const std::string actual = value ? std::to_string(*value) : "absent";
  if (c.report_format == ReportFormat::json) {
    Json e = entry(name, label, actual, w, c.seed, samples);
    if (!note.empty()) e["note"] = note;
    out << e.dump(2) << "\n";
  } else {
    out << name << ": " << label << " " << actual << "\n";
    if (!note.empty()) out << "  " << note << "\n";
    text_witness(out, w);
  }
  return value ? exit_ok : exit_mismatch;
}

int run_degree(const RunConfig& c, std::ostream& out) {
  const std::string& src = require_input(c);
  const UnaryFn f = parse_function(src);
  const auto samples = base_samples(c, 10);
  const auto d = monomial_degree(f, c.max_degree, samples);
  return report_number(c, out, src, "degree", d ? std::optional<long>(*d) : std::nullopt,
                       d ? "" : "no degree up to " + std::to_string(c.max_degree), samples.size());
}

int run_rank(const RunConfig& c, std::ostream& out) {
  const std::string& src = require_input(c);
  const Expression e = parse_expression(src);
  const auto grid = base_samples(c, 4);
  std::size_t rank = 0;
  if (const auto* v = std::get_if<FieldElem>(&e)) {
    return report_number(c, out, src, "rank", v->as_constant()->get_num().get_si(), "", 0);
  } else if (const auto* m = std::get_if<AdditiveMap>(&e)) {
    rank = kernel_rank(product_kernel(*m), grid, grid);
  } else if (const auto* f = std::get_if<SymForm>(&e)) {
    if (f->arity() != 2) throw std::invalid_argument("rank needs a map or a form of arity 2");
    const SymForm form = *f;
    rank = kernel_rank(
        [form](const FieldElem& x, const FieldElem& y) {
          const FieldElem args[] = {x, y};
          return form(args);
        },
        grid, grid);
  } else {
    throw std::invalid_argument("rank needs a map, a form of arity 2 or a rank(...) expression");
  }
  return report_number(c, out, src, "rank", static_cast<long>(rank),
                       "grid " + std::to_string(grid.size()) + "x" + std::to_string(grid.size()), grid.size());
}

int run_hod(const RunConfig& c, std::ostream& out) {
  const std::string& src = require_input(c);
  const AdditiveMap d = parse_map(src);
  const auto samples = base_samples(c, 4);
  const HodReport r = hod_degree(d, c.max_degree, samples, c.seed);
  std::string note = r.verdict.note;
  if (r.verdict.outcome == Outcome::precondition_failed) note = "precondition: " + note;
  note += "; increments from pool seed " + std::to_string(r.seed) + ": " + join(r.increments);
  return report_number(c, out, src, "order", r.degree ? std::optional<long>(*r.degree) : std::nullopt, note,
                       samples.size());
}

int run_suite(const RunConfig& c, std::ostream& out) {
  const auto results = paper_suite(SuiteOptions{c.seed, c.samples, false});
  const std::size_t bad = mismatches(results);
  const std::size_t sample_count = structured_samples().size() + c.samples;
  if (c.report_format == ReportFormat::json) {
    Json bundle{{"seed", c.seed}, {"samples", sample_count}, {"cases", results.size()}, {"mismatches", bad}};
    Json list = Json::array();
    for (const auto& r : results) {
      list.push_back(entry(r.name, to_string(r.expected), to_string(r.verdict.outcome), r.verdict.witness, c.seed,
                           sample_count));
    }
    bundle["results"] = list;
    out << bundle.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      Json e = entry(r.name, to_string(r.expected), to_string(r.verdict.outcome), std::nullopt, c.seed, sample_count);
      text_entry(out, e, r.matched() ? std::nullopt : r.verdict.witness, r.verdict.note);
    }
    out << results.size() << " cases, " << bad << " mismatches (seed " << c.seed << ", " << sample_count
        << " samples)\n";
  }
  return bad == 0 ? exit_ok : exit_mismatch;
}

}  // namespace

Command parse_command(const std::string& name) {
  if (name == "verify") return Command::verify;
  if (name == "polarize") return Command::polarize;
  if (name == "degree") return Command::degree;
  if (name == "rank") return Command::rank;
  if (name == "hod") return Command::hod;
  if (name == "suite") return Command::suite;
  throw std::invalid_argument("unknown command '" + name + "'");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.samples == 0) throw std::invalid_argument("--samples must be at least 1");
    if (config.max_degree == 0) throw std::invalid_argument("--max-degree must be at least 1");
    switch (config.command) {
      case Command::verify: return run_verify(config, out);
      case Command::polarize: return run_polarize(config, out);
      case Command::degree: return run_degree(config, out);
      case Command::rank: return run_rank(config, out);
      case Command::hod: return run_hod(config, out);
      case Command::suite: return run_suite(config, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_mismatch;
  }
  return exit_usage;
}

}  // namespace fecheck
